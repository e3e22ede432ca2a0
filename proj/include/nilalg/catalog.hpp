#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nilalg/error.hpp"
#include "nilalg/parse.hpp"
#include "nilalg/structconst.hpp"

namespace nilalg {

/// One algebra of the five-dimensional catalog together with the values
/// printed for it in the source tables, kept exactly as printed.
struct CatalogEntry {
    std::string id;
    StructureConstants algebra;
    std::vector<std::size_t> expected_center;  ///< 1-based basis indices
    std::optional<std::size_t> expected_der;
    std::optional<std::size_t> expected_cent;
    std::optional<std::size_t> expected_inn;
    std::vector<std::string> provenance_notes;
};

namespace detail {

struct RawEntry {
    const char* text;
    std::vector<std::size_t> center;
    std::size_t der, cent, inn;
    std::vector<std::string> notes;
};

// Multiplication tables in source order; unlisted products are zero.
inline const std::vector<RawEntry>& raw_catalog() {
    static const std::vector<RawEntry> entries = {
        {R"(dim 5 name "A1"
e1*e1 = e2
e1*e2 = e4
e1*e3 = e4
e2*e1 = e4
e3*e3 = e4
)", {2, 4, 5}, 8, 8, 2, {}},
        {R"(dim 5 name "A2"
e1*e1 = e2
e1*e2 = e4
e1*e3 = e4
e2*e1 = e4
)", {2, 4, 5}, 8, 8, 2, {}},
        {R"(dim 5 name "A3"
e1*e1 = e2
e1*e2 = e3
e1*e3 = e4
e1*e5 = e4
e2*e1 = e3
e2*e2 = e4
e3*e1 = e4
)", {2, 4, 5}, 6, 7, 6, {"printed inner-derivation dimension 6 exceeds 5 - dim Z(A) for every algebra with a nonzero center"}},
        {R"(dim 5 name "A4"
e1*e1 = e2
e1*e2 = e4
e1*e3 = e4
e1*e5 = e4
e2*e1 = e3
e2*e2 = e4
e3*e1 = e4
e5*e5 = e4
)", {2, 4, 5}, 4, 5, 2, {}},
        {R"(dim 5 name "A5"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e3
e2*e1 = e3
e4*e5 = e3
e5*e4 = e3
)", {2, 5}, 8, 5, 2, {}},
        {R"(dim 5 name "A6"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e3
e2*e1 = e3
e5*e5 = e3
)", {2, 3, 5}, 8, 5, 2, {}},
        {R"(dim 5 name "A7"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e3
e2*e1 = e3
e4*e4 = e3
e5*e5 = e3
)", {2, 3, 5}, 6, 5, 2, {}},
        {R"(dim 5 name "A8"
e1*e1 = e2
e1*e2 = e3
e2*e1 = e3
e4*e5 = e3
e5*e4 = -e3
e5*e5 = e3
)", {1, 2, 3}, 6, 5, 2, {}},
        {R"(dim 5 param a name "A9"
e1*e1 = e2
e1*e2 = e3
e2*e1 = e3
e4*e5 = e3
e5*e4 = a e3
)", {1, 2, 3}, 7, 5, 2, {"the product e2*e1 = e3 is printed twice in the source table; stored once"}},
        {R"(dim 5 name "A10"
e1*e1 = e2
e1*e2 = e3
e2*e1 = e3
e4*e1 = e5
)", {2, 3, 5}, 8, 6, 2, {"the product e2*e1 = e3 is printed twice in the source table; stored once"}},
        {R"(dim 5 name "A11"
e1*e1 = e2
e1*e2 = e3
e2*e1 = e3
e4*e1 = e3
e4*e4 = e3
)", {2, 3, 5}, 7, 6, 6, {"printed inner-derivation dimension 6 exceeds 5 - dim Z(A) for every algebra with a nonzero center"}},
        {R"(dim 5 name "A12"
e1*e1 = e2
e1*e2 = e3
e2*e1 = e3
e4*e1 = e5
e4*e2 = e3
e5*e1 = e3
)", {3}, 6, 4, 4, {}},
        {R"(dim 5 name "A13"
e1*e1 = e2
e1*e2 = e3
e2*e1 = e3
e4*e1 = e3 + e5
e4*e4 = e3
e5*e1 = e3
)", {3}, 7, 4, 4, {"e4*e1 is printed twice, once as e5 and once as e3; stored as e4*e1 = e3 + e5, the reading that reproduces the printed inner-derivation matrix for this entry"}},
        {R"(dim 5 name "A14"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e5
e2*e1 = e3
e4*e1 = e3 + e5
)", {3}, 6, 6, 2, {}},
        {R"(dim 5 name "A15"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e5
e2*e1 = e3
e4*e1 = e3 + e5
e4*e4 = e3
)", {2, 3, 5}, 7, 6, 3, {}},
        {R"(dim 5 param a name "A16"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e5
e2*e1 = e3
e4*e1 = a e5
)", {2, 3, 5}, 6, 6, 2, {}},
        {R"(dim 5 param a name "A17"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e5
e2*e1 = e3
e4*e1 = a e5
e4*e4 = e3
)", {2, 3, 5}, 7, 6, 2, {}},
        {R"(dim 5 name "A18"
e1*e1 = e2
e1*e2 = e3
e2*e1 = e3
e4*e1 = e3
e4*e4 = e5
)", {2, 3, 5}, 6, 6, 2, {}},
        {R"(dim 5 name "A19"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e3
e2*e1 = e3
e4*e4 = e5
)", {2, 3, 5}, 6, 6, 2, {}},
        {R"(dim 5 name "A20"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e5
e2*e1 = e3
e4*e4 = e3 + e5
)", {2, 3, 5}, 6, 6, 2, {}},
        {R"(dim 5 name "A21"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e5
e2*e1 = e3
e4*e1 = e2 - e5
e5*e1 = e3
)", {2, 3}, 6, 4, 3, {}},
        {R"(dim 5 name "A22"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e5
e2*e1 = e3
e4*e1 = e2 - e3
e4*e4 = e3
e5*e1 = e3
)", {2, 3}, 4, 6, 3, {}},
        {R"(dim 5 name "A23"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e5
e2*e1 = e3
e4*e1 = e2 + e5
e4*e2 = 2 e3
e4*e4 = 2 e3
e5*e1 = e3
)", {3}, 7, 4, 4, {}},
        {R"(dim 5 name "A24"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e5
e2*e1 = e3
e4*e1 = e2 + e5
e4*e2 = 2 e3
e4*e4 = e3 + 2 e5
e5*e1 = e3
)", {3}, 5, 4, 4, {}},
        {R"(dim 5 name "A25"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e5
e2*e1 = e3
e4*e1 = e3 + e5
e4*e4 = 2 e2
e4*e5 = 2 e3
e5*e4 = e3
)", {2, 3}, 6, 7, 2, {}},
        {R"(dim 5 name "A26"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e5
e2*e1 = e3
e4*e1 = -e5
e4*e4 = 2 e2
e4*e5 = -e3
e5*e4 = e3
)", {2, 3}, 5, 3, 3, {}},
        {R"(dim 5 name "A27"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e5
e2*e1 = e3
e4*e1 = e2
e4*e2 = 2 e3
e4*e4 = e3 + e5
e5*e1 = e3
)", {3}, 6, 4, 4, {}},
        {R"(dim 5 name "A28"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e5
e2*e1 = e3
e4*e1 = e3 + e5
e4*e4 = -e2 + 2 e5
e4*e5 = e3
e5*e4 = -e3
)", {2, 3}, 8, 4, 3, {}},
        {R"(dim 5 name "A29"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e5
e2*e1 = e3
e4*e1 = (1-i) e2 + i e5
e4*e2 = 2 e3
e4*e4 = -i e2 + e3 + (1+i) e5
e4*e5 = e3
e5*e1 = (1-i) e3
e5*e4 = -i e3
)", {3}, 2, 2, 4, {"printed derivation matrix is identical to the one printed for A30, yet the printed dimensions are 2 and 6"}},
        {R"(dim 5 name "A30"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e5
e2*e1 = e3
e4*e1 = (1+i) e2 - i e5
e4*e2 = 2 e3
e4*e4 = i e2 + e3 + (1-i) e5
e4*e5 = e3
e5*e1 = (1+i) e3
e5*e4 = i e3
)", {3}, 6, 2, 4, {"printed derivation matrix is identical to the one printed for A29, yet the printed dimensions are 2 and 6"}},
        {R"(dim 5 param a name "A31"
e1*e1 = e2
e1*e2 = e3
e1*e4 = e5
e2*e1 = e3
e4*e1 = (1-a) e2 + a e5
e4*e2 = (1-a^2) e3
e4*e4 = -a e2 + (1+a) e5
e4*e5 = -a^2 e3
e5*e1 = (1-a) e3
e5*e4 = -a e3
)", {3}, 6, 3, 4, {}},
    };
    return entries;
}

}  // namespace detail

inline std::vector<CatalogEntry> load_catalog() {
    std::vector<CatalogEntry> out;
    for (const auto& raw : detail::raw_catalog()) {
        CatalogEntry e;
        e.algebra = parse_algebra(raw.text);
        e.id = e.algebra.name();
        e.expected_center = raw.center;
        e.expected_der = raw.der;
        e.expected_cent = raw.cent;
        e.expected_inn = raw.inn;
        e.provenance_notes = raw.notes;
        out.push_back(std::move(e));
    }
    return out;
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Loads every `*.alg` file of a directory. Entries are ordered by the number in
/// their id (A2 before A10), then by id. Expected values are taken from the
/// embedded catalog entry with the same id, if there is one.
inline std::vector<CatalogEntry> load_catalog_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw Error("catalog directory not found: " + dir.string());
    const auto embedded = load_catalog();
    std::vector<CatalogEntry> out;
    for (const auto& item : std::filesystem::directory_iterator(dir)) {
        if (!item.is_regular_file() || item.path().extension() != ".alg") continue;
        CatalogEntry e;
        try {
            e.algebra = parse_algebra(read_text_file(item.path()));
        } catch (const ParseError& err) {
            throw ParseError(item.path().filename().string() + ": " + err.message(), err.line(), err.column());
        }
        if (e.algebra.name().empty()) e.algebra.set_name(item.path().stem().string());
        e.id = e.algebra.name();
        auto match = std::find_if(embedded.begin(), embedded.end(), [&](const CatalogEntry& x) { return x.id == e.id; });
        if (match != embedded.end()) {
            e.expected_center = match->expected_center;
            e.expected_der = match->expected_der;
            e.expected_cent = match->expected_cent;
            e.expected_inn = match->expected_inn;
            e.provenance_notes = match->provenance_notes;
        }
        out.push_back(std::move(e));
    }
    auto number = [](const std::string& id) {
        std::size_t p = id.find_first_of("0123456789");
        return p == std::string::npos ? 0UL : std::stoul(id.substr(p, 9));
    };
    std::sort(out.begin(), out.end(), [&](const CatalogEntry& x, const CatalogEntry& y) {
        const auto nx = number(x.id);
        const auto ny = number(y.id);
        return nx != ny ? nx < ny : x.id < y.id;
    });
    return out;
}

/// Writes one `<id>.alg` file per entry, provenance notes as leading comments.
inline void export_catalog(const std::vector<CatalogEntry>& entries, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& e : entries) {
        std::ofstream out(dir / (e.id + ".alg"), std::ios::binary);
        if (!out) throw Error("cannot write " + (dir / (e.id + ".alg")).string());
        out << print_algebra(e.algebra, e.provenance_notes);
    }
}

}  // namespace nilalg

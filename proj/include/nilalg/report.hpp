#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilalg/catalog.hpp"
#include "nilalg/invariants.hpp"
#include "nilalg/parse.hpp"
#include "nilalg/structconst.hpp"

namespace nilalg {

/// Everything computed for one algebra, with comparisons against printed values.
struct EntryReport {
    std::string id;
    std::size_t dim = 0;
    bool parametric = false;

    std::vector<AssociatorViolation> violations;
    std::optional<std::size_t> nilindex;

    MatrixSubspace<Scalar> center;
    std::optional<std::vector<std::size_t>> expected_center;
    std::optional<bool> center_match;

    DerivationResult der;
    CentroidResult cent;
    InnerResult inn;
    std::optional<std::size_t> expected_der, expected_cent, expected_inn;

    ExceptionalLocus locus;  ///< union over center, Der, Cent and Inn

    bool der_basis_verified = false;   ///< Leibniz rule re-checked through multiply
    bool cent_basis_verified = false;  ///< centroid identities re-checked through multiply
    bool inn_in_der = false;
    bool der_lie_closed = false;
    bool cent_closed = false;  ///< contains identity, closed under composition
    bool inn_dim_identity = false;  ///< dim Inn = n - dim Z
    bool chain_holds = false;       ///< dim Inn <= dim Cent <= dim Der

    std::vector<std::string> notes;

    bool associative() const { return violations.empty(); }
    static std::optional<bool> compare(const std::optional<std::size_t>& expected, std::size_t computed) {
        if (!expected) return std::nullopt;
        return *expected == computed;
    }
    std::optional<bool> der_match() const { return compare(expected_der, der.dim); }
    std::optional<bool> cent_match() const { return compare(expected_cent, cent.dim); }
    std::optional<bool> inn_match() const { return compare(expected_inn, inn.dim); }

    /// Mathematically forced properties that fail for this entry.
    std::vector<std::string> hard_failures() const {
        std::vector<std::string> out;
        if (!associative()) out.push_back("not associative");
        if (!nilindex) out.push_back("not nilpotent");
        if (!inn_dim_identity) out.push_back("dim Inn != n - dim Z");
        if (!inn_in_der) out.push_back("Inn not contained in Der");
        if (!der_lie_closed) out.push_back("Der not closed under commutator");
        if (!cent_closed) out.push_back("Cent not closed under composition or missing identity");
        if (!der_basis_verified) out.push_back("Der basis fails the Leibniz re-check");
        if (!cent_basis_verified) out.push_back("Cent basis fails the centroid re-check");
        return out;
    }
};

struct ColumnSummary {
    std::size_t matches = 0;
    std::size_t mismatches = 0;
    std::size_t computed_min = 0;
    std::size_t computed_max = 0;
    std::size_t claimed_min = 0;
    std::size_t claimed_max = 0;
};

struct ComparisonReport {
    std::vector<EntryReport> entries;
    ColumnSummary der, cent, inn;
    std::size_t center_matches = 0;
    std::size_t center_mismatches = 0;
    std::size_t chain_holds = 0;
    std::size_t hard_failure_entries = 0;

    bool hard_invariants_hold() const { return hard_failure_entries == 0; }
};

inline EntryReport analyze(const StructureConstants& a) {
    EntryReport r;
    r.id = a.name();
    r.dim = a.dim();
    r.parametric = a.is_parametric();
    r.violations = check_associative(a);
    r.nilindex = nilindex(a);
    r.center = center(a, &r.locus);
    r.der = derivation_algebra(a);
    r.cent = centroid(a);
    r.inn = inner_derivations(a);
    r.locus.merge(r.der.locus);
    r.locus.merge(r.cent.locus);
    r.locus.merge(r.inn.locus);

    r.der_basis_verified = true;
    for (const auto& d : r.der.space.basis_matrices()) r.der_basis_verified = r.der_basis_verified && is_derivation(a, d);
    r.cent_basis_verified = true;
    for (const auto& c : r.cent.space.basis_matrices())
        r.cent_basis_verified = r.cent_basis_verified && is_centroid_element(a, c);
    r.inn_in_der = std::all_of(r.inn.generators.begin(), r.inn.generators.end(),
                               [&](const Matrix<Scalar>& g) { return membership(r.der.space, g); });
    r.der_lie_closed = lie_closure_check(r.der);
    r.cent_closed = composition_closure_check(r.cent);
    r.inn_dim_identity = r.inn.dim == a.dim() - r.center.dim();
    r.chain_holds = r.inn.dim <= r.cent.dim && r.cent.dim <= r.der.dim;
    return r;
}

inline EntryReport analyze(const CatalogEntry& e) {
    EntryReport r = analyze(e.algebra);
    r.id = e.id;
    if (!e.expected_center.empty()) {
        std::vector<std::size_t> zero_based;
        for (auto k : e.expected_center) zero_based.push_back(k - 1);
        r.expected_center = e.expected_center;
        r.center_match = r.center == coordinate_span(e.algebra.dim(), zero_based);
    }
    r.expected_der = e.expected_der;
    r.expected_cent = e.expected_cent;
    r.expected_inn = e.expected_inn;
    r.notes = e.provenance_notes;
    return r;
}

/// Audits every entry (in parallel) and merges the results in catalog order.
inline ComparisonReport run_full_report(const std::vector<CatalogEntry>& catalog) {
    std::vector<std::future<EntryReport>> jobs;
    jobs.reserve(catalog.size());
    for (const auto& e : catalog) jobs.push_back(std::async(std::launch::async, [&e] { return analyze(e); }));

    ComparisonReport rep;
    for (auto& j : jobs) rep.entries.push_back(j.get());

    auto tally = [&](ColumnSummary& col, auto computed, auto expected, auto match, std::size_t lo, std::size_t hi) {
        col.claimed_min = lo;
        col.claimed_max = hi;
        bool first = true;
        for (const auto& e : rep.entries) {
            const std::size_t d = computed(e);
            col.computed_min = first ? d : std::min(col.computed_min, d);
            col.computed_max = first ? d : std::max(col.computed_max, d);
            first = false;
            if (!expected(e)) continue;
            if (*match(e)) ++col.matches;
            else ++col.mismatches;
        }
    };
    // Ranges claimed for the five-dimensional catalog.
    tally(rep.der, [](const EntryReport& e) { return e.der.dim; }, [](const EntryReport& e) { return e.expected_der; },
          [](const EntryReport& e) { return e.der_match(); }, 2, 9);
    tally(rep.cent, [](const EntryReport& e) { return e.cent.dim; }, [](const EntryReport& e) { return e.expected_cent; },
          [](const EntryReport& e) { return e.cent_match(); }, 2, 8);
    tally(rep.inn, [](const EntryReport& e) { return e.inn.dim; }, [](const EntryReport& e) { return e.expected_inn; },
          [](const EntryReport& e) { return e.inn_match(); }, 2, 4);

    for (const auto& e : rep.entries) {
        if (e.center_match) {
            if (*e.center_match) ++rep.center_matches;
            else ++rep.center_mismatches;
        }
        if (e.chain_holds) ++rep.chain_holds;
        if (!e.hard_failures().empty()) ++rep.hard_failure_entries;
    }
    return rep;
}

inline ComparisonReport run_full_report() { return run_full_report(load_catalog()); }

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

inline std::vector<std::string> basis_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back("e" + std::to_string(k + 1));
    return names;
}

/// Entries of sum_k x_k B_k where x_k is named after the pivot position of B_k
/// (prefix + row + column, 1-based), e.g. d21.
inline std::vector<std::vector<std::string>> generic_element(const MatrixSubspace<Scalar>& s, const std::string& prefix) {
    const std::size_t rows = s.ambient_rows();
    const std::size_t cols = s.ambient_cols();
    std::vector<std::string> names;
    for (auto p : s.echelon_profile()) names.push_back(prefix + std::to_string(p / cols + 1) + std::to_string(p % cols + 1));
    std::vector<std::vector<std::string>> out(rows, std::vector<std::string>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            Vector coeffs;
            for (const auto& b : s.basis()) coeffs.push_back(b[r * cols + c]);
            out[r][c] = format_combination(coeffs, names);
        }
    }
    return out;
}

/// ad_w for w = a1 e1 + ... + an en, entries as linear forms in the a_t.
inline std::vector<std::vector<std::string>> generic_inner(const InnerResult& inn, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t t = 0; t < n; ++t) names.push_back("a" + std::to_string(t + 1));
    std::vector<std::vector<std::string>> out(n, std::vector<std::string>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Vector coeffs;
            for (const auto& g : inn.generators) coeffs.push_back(g(r, c));
            out[r][c] = format_combination(coeffs, names);
        }
    }
    return out;
}

inline std::string inline_matrix(const std::vector<std::vector<std::string>>& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (r) out += "; ";
        for (std::size_t c = 0; c < m[r].size(); ++c) out += (c ? ", " : "") + m[r][c];
    }
    return out + "]";
}

inline std::string span_text(const MatrixSubspace<Scalar>& z) {
    const auto names = basis_names(z.ambient_rows());
    std::string out = "<";
    for (std::size_t k = 0; k < z.dim(); ++k) out += (k ? ", " : "") + format_combination(z.basis()[k], names);
    return out + ">";
}

inline std::string index_span_text(const std::vector<std::size_t>& idx) {
    std::string out = "<";
    for (std::size_t k = 0; k < idx.size(); ++k) out += (k ? ", " : "") + std::string("e") + std::to_string(idx[k]);
    return out + ">";
}

inline nlohmann::json matrix_json(const Matrix<Scalar>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json optional_json(const std::optional<std::size_t>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline nlohmann::json optional_json(const std::optional<bool>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline nlohmann::json locus_json(const ExceptionalLocus& locus) {
    nlohmann::json polys = nlohmann::json::array();
    for (const auto& p : locus.polys()) polys.push_back(p.to_string());
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : locus.solved_roots()) roots.push_back(r.to_string());
    nlohmann::json unsolved = nlohmann::json::array();
    for (const auto& p : locus.unsolved()) unsolved.push_back(p.to_string());
    return {{"polynomials", polys}, {"roots", roots}, {"unsolved", unsolved}};
}

inline std::string locus_text(const ExceptionalLocus& locus) {
    if (locus.empty()) return "none";
    std::string out;
    for (const auto& p : locus.polys()) out += (out.empty() ? "" : ", ") + p.to_string();
    out += "; roots a = ";
    const auto roots = locus.solved_roots();
    std::string r;
    for (const auto& x : roots) r += (r.empty() ? "" : ", ") + x.to_string();
    out += r.empty() ? "(none in Q(i))" : r;
    const auto unsolved = locus.unsolved();
    if (!unsolved.empty()) out += "; unsolved members: " + std::to_string(unsolved.size());
    return out;
}

inline std::string flag(const std::optional<bool>& match) {
    if (!match) return "-";
    return *match ? "match" : "MISMATCH";
}

inline std::string opt_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace detail

inline nlohmann::json entry_json(const EntryReport& e) {
    using nlohmann::json;
    json violations = json::array();
    for (const auto& v : e.violations) violations.push_back({v.i + 1, v.j + 1, v.k + 1});
    json center_basis = json::array();
    for (const auto& b : e.center.basis()) {
        json col = json::array();
        for (const auto& x : b) col.push_back(x.to_string());
        center_basis.push_back(std::move(col));
    }
    auto space_json = [](const MatrixSubspace<Scalar>& s) {
        json basis = json::array();
        for (const auto& m : s.basis_matrices()) basis.push_back(detail::matrix_json(m));
        return basis;
    };
    json generators = json::array();
    for (const auto& g : e.inn.generators) generators.push_back(detail::matrix_json(g));

    json checks = {
        {"associative", e.associative()},
        {"nilpotent", e.nilindex.has_value()},
        {"inn_dim_equals_n_minus_center_dim", e.inn_dim_identity},
        {"inn_in_der", e.inn_in_der},
        {"der_closed_under_commutator", e.der_lie_closed},
        {"cent_contains_identity_and_closed_under_composition", e.cent_closed},
        {"der_basis_verified", e.der_basis_verified},
        {"cent_basis_verified", e.cent_basis_verified},
    };
    json expected_center = e.expected_center ? json(*e.expected_center) : json(nullptr);
    return {
        {"id", e.id},
        {"dim", e.dim},
        {"parametric", e.parametric},
        {"associativity_violations", violations},
        {"nilindex", detail::optional_json(e.nilindex)},
        {"center",
         {{"basis", center_basis},
          {"dim", e.center.dim()},
          {"text", detail::span_text(e.center)},
          {"expected", expected_center},
          {"match", detail::optional_json(e.center_match)}}},
        {"derivations",
         {{"dim", e.der.dim},
          {"expected_dim", detail::optional_json(e.expected_der)},
          {"match", detail::optional_json(e.der_match())},
          {"basis", space_json(e.der.space)},
          {"generic_element", detail::generic_element(e.der.space, "d")}}},
        {"centroid",
         {{"dim", e.cent.dim},
          {"expected_dim", detail::optional_json(e.expected_cent)},
          {"match", detail::optional_json(e.cent_match())},
          {"basis", space_json(e.cent.space)},
          {"generic_element", detail::generic_element(e.cent.space, "c")}}},
        {"inner_derivations",
         {{"dim", e.inn.dim},
          {"expected_dim", detail::optional_json(e.expected_inn)},
          {"match", detail::optional_json(e.inn_match())},
          {"basis", space_json(e.inn.space)},
          {"generators", generators},
          {"generic_element", detail::generic_inner(e.inn, e.dim)},
          {"convention", "ad_w(x) = x*w - w*x; column i holds ad_w(e_i)"}}},
        {"chain_inn_le_cent_le_der", e.chain_holds},
        {"checks", checks},
        {"hard_failures", e.hard_failures()},
        {"exceptional_locus", detail::locus_json(e.locus)},
        {"notes", e.notes},
    };
}

inline nlohmann::json report_json(const ComparisonReport& rep) {
    using nlohmann::json;
    json entries = json::array();
    for (const auto& e : rep.entries) entries.push_back(entry_json(e));
    auto column = [](const ColumnSummary& c) {
        return json{{"matches", c.matches},
                    {"mismatches", c.mismatches},
                    {"computed_range", {c.computed_min, c.computed_max}},
                    {"claimed_range", {c.claimed_min, c.claimed_max}}};
    };
    json summary = {
        {"entries", rep.entries.size()},
        {"derivations", column(rep.der)},
        {"centroid", column(rep.cent)},
        {"inner_derivations", column(rep.inn)},
        {"center", {{"matches", rep.center_matches}, {"mismatches", rep.center_mismatches}}},
        {"expected_dims_compared", rep.der.matches + rep.der.mismatches + rep.cent.matches + rep.cent.mismatches +
                                       rep.inn.matches + rep.inn.mismatches},
        {"chain_holds", rep.chain_holds},
        {"entries_with_hard_failures", rep.hard_failure_entries},
        {"hard_invariants_hold", rep.hard_invariants_hold()},
    };
    return {{"format", "nilalg-report/1"}, {"entries", entries}, {"summary", summary}};
}

inline std::string render_json(const ComparisonReport& rep) { return report_json(rep).dump(2) + "\n"; }

inline std::string render_markdown(const ComparisonReport& rep) {
    std::string md = "# Invariant audit of the five-dimensional catalog\n\n";
    md += "## Summary\n\n";
    auto col_line = [](const char* name, const ColumnSummary& c) {
        return std::string("- ") + name + ": " + std::to_string(c.matches) + " match, " + std::to_string(c.mismatches) +
               " mismatch; computed range " + std::to_string(c.computed_min) + ".." + std::to_string(c.computed_max) +
               ", claimed range " + std::to_string(c.claimed_min) + ".." + std::to_string(c.claimed_max) + "\n";
    };
    md += "- entries: " + std::to_string(rep.entries.size()) + "\n";
    md += "- centers: " + std::to_string(rep.center_matches) + " match, " + std::to_string(rep.center_mismatches) +
          " mismatch\n";
    md += col_line("Der", rep.der);
    md += col_line("Cent", rep.cent);
    md += col_line("Inn", rep.inn);
    md += "- chain dim Inn <= dim Cent <= dim Der holds for " + std::to_string(rep.chain_holds) + " of " +
          std::to_string(rep.entries.size()) + " entries\n";
    md += "- entries failing a hard invariant: " + std::to_string(rep.hard_failure_entries) + "\n";
    md += std::string("- hard invariants: ") + (rep.hard_invariants_hold() ? "all hold" : "VIOLATED") + "\n\n";

    md += "## Axioms and centers\n\n";
    md += "| Algebra | associative | violations | nilindex | center | printed center | flag |\n";
    md += "|---|---|---|---|---|---|---|\n";
    for (const auto& e : rep.entries) {
        md += "| " + e.id + " | " + (e.associative() ? "yes" : "no") + " | " + std::to_string(e.violations.size()) + " | " +
              (e.nilindex ? std::to_string(*e.nilindex) : std::string("not nilpotent")) + " | " +
              detail::span_text(e.center) + " | " +
              (e.expected_center ? detail::index_span_text(*e.expected_center) : std::string("-")) + " | " +
              detail::flag(e.center_match) + " |\n";
    }

    auto section = [&](const char* title, auto element, auto dim, auto expected, auto match) {
        md += std::string("\n## ") + title + "\n\n";
        md += "| Algebra | generic element | dim | printed dim | flag |\n|---|---|---|---|---|\n";
        for (const auto& e : rep.entries) {
            md += "| " + e.id + " | " + detail::inline_matrix(element(e)) + " | " + std::to_string(dim(e)) + " | " +
                  detail::opt_text(expected(e)) + " | " + detail::flag(match(e)) + " |\n";
        }
    };
    section(
        "Derivations", [](const EntryReport& e) { return detail::generic_element(e.der.space, "d"); },
        [](const EntryReport& e) { return e.der.dim; }, [](const EntryReport& e) { return e.expected_der; },
        [](const EntryReport& e) { return e.der_match(); });
    section(
        "Centroids", [](const EntryReport& e) { return detail::generic_element(e.cent.space, "c"); },
        [](const EntryReport& e) { return e.cent.dim; }, [](const EntryReport& e) { return e.expected_cent; },
        [](const EntryReport& e) { return e.cent_match(); });
    section(
        "Inner derivations (ad_w(x) = x*w - w*x, w = a1 e1 + ... + a5 e5)",
        [](const EntryReport& e) { return detail::generic_inner(e.inn, e.dim); },
        [](const EntryReport& e) { return e.inn.dim; }, [](const EntryReport& e) { return e.expected_inn; },
        [](const EntryReport& e) { return e.inn_match(); });

    md += "\n## Dimension ranges\n\n| Invariant | computed min | computed max | claimed min | claimed max |\n";
    md += "|---|---|---|---|---|\n";
    auto range_row = [&](const char* name, const ColumnSummary& c) {
        md += std::string("| ") + name + " | " + std::to_string(c.computed_min) + " | " + std::to_string(c.computed_max) +
              " | " + std::to_string(c.claimed_min) + " | " + std::to_string(c.claimed_max) + " |\n";
    };
    range_row("Der", rep.der);
    range_row("Cent", rep.cent);
    range_row("Inn", rep.inn);

    md += "\n## Chain dim Inn <= dim Cent <= dim Der\n\n| Algebra | Inn | Cent | Der | holds |\n|---|---|---|---|---|\n";
    for (const auto& e : rep.entries) {
        md += "| " + e.id + " | " + std::to_string(e.inn.dim) + " | " + std::to_string(e.cent.dim) + " | " +
              std::to_string(e.der.dim) + " | " + (e.chain_holds ? "yes" : "no") + " |\n";
    }

    md += "\n## Hard invariants\n\n| Algebra | failures |\n|---|---|\n";
    for (const auto& e : rep.entries) {
        const auto f = e.hard_failures();
        std::string text;
        for (const auto& s : f) text += (text.empty() ? "" : "; ") + s;
        md += "| " + e.id + " | " + (text.empty() ? "none" : text) + " |\n";
    }

    md += "\n## Exceptional parameter values\n\n";
    bool any = false;
    for (const auto& e : rep.entries) {
        if (!e.parametric) continue;
        any = true;
        md += "- " + e.id + ": " + detail::locus_text(e.locus) + "\n";
    }
    if (!any) md += "none\n";

    md += "\n## Transcription notes\n\n";
    any = false;
    for (const auto& e : rep.entries) {
        for (const auto& n : e.notes) {
            md += "- " + e.id + ": " + n + "\n";
            any = true;
        }
    }
    if (!any) md += "none\n";
    return md;
}

}  // namespace nilalg

// nilalg: audit finite-dimensional algebras given by structure constants.
//
// Exit codes: 0 success, 1 semantic failure, 2 input or parse failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nilalg/nilalg.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kSemanticFailure = 1;
constexpr int kInputFailure = 2;

std::string algebra_label(const nilalg::StructureConstants& a, const std::string& path) {
    return a.name().empty() ? std::filesystem::path(path).filename().string() : a.name();
}

nilalg::StructureConstants load_algebra(const std::string& path) {
    return nilalg::parse_algebra(nilalg::read_text_file(path));
}

int cmd_check(const std::string& path) {
    nilalg::StructureConstants a;
    try {
        a = load_algebra(path);
    } catch (const nilalg::ParseError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kInputFailure;
    } catch (const nilalg::Error& e) {
        std::cerr << e.what() << "\n";
        return kInputFailure;
    }
    const auto violations = nilalg::check_associative(a);
    const auto names = nilalg::detail::basis_names(a.dim());
    if (!violations.empty()) {
        std::cout << algebra_label(a, path) << ": not associative, " << violations.size() << " violation(s)\n";
        for (const auto& v : violations) {
            std::cout << "  violation at (" << v.i + 1 << "," << v.j + 1 << "," << v.k + 1
                      << "): associator " << nilalg::format_combination(v.associator, names) << "\n";
        }
        return kSemanticFailure;
    }
    const auto nil = nilalg::nilindex(a);
    if (!nil) {
        std::cout << algebra_label(a, path) << ": associative, not nilpotent\n";
        return kSemanticFailure;
    }
    std::cout << algebra_label(a, path) << ": associative, nilindex " << *nil << "\n";
    return kOk;
}

std::string basis_listing(const char* title, const nilalg::MatrixSubspace<nilalg::Scalar>& s) {
    std::string out = std::string("\n### ") + title + " basis\n\n";
    if (s.dim() == 0) return out + "(zero space)\n";
    std::size_t k = 0;
    for (const auto& m : s.basis_matrices()) {
        out += std::to_string(++k) + ". `[";
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r) out += "; ";
            for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + m(r, c).to_string();
        }
        out += "]`\n";
    }
    return out;
}

std::string single_markdown(const nilalg::EntryReport& e, const std::optional<nilalg::GaussianRational>& alpha,
                            const nilalg::EntryReport* generic) {
    using namespace nilalg::detail;
    std::string md = "# " + e.id + "\n\n";
    if (alpha) md += "Specialized at a = " + alpha->to_string() + ".\n\n";
    md += std::string("- associative: ") + (e.associative() ? "yes" : "no (" + std::to_string(e.violations.size()) + " violations)") + "\n";
    md += "- nilindex: " + (e.nilindex ? std::to_string(*e.nilindex) : std::string("not nilpotent")) + "\n";
    md += "- center: " + span_text(e.center) + " (dim " + std::to_string(e.center.dim()) + ")\n";
    md += "- exceptional locus: " + locus_text(generic ? generic->locus : e.locus) + "\n\n";
    md += "| Invariant | generic element | dim |";
    md += generic ? " generic dim |\n|---|---|---|---|\n" : "\n|---|---|---|\n";
    auto row = [&](const char* name, const std::vector<std::vector<std::string>>& el, std::size_t d, std::size_t gd) {
        md += std::string("| ") + name + " | " + inline_matrix(el) + " | " + std::to_string(d) + " |";
        md += generic ? " " + std::to_string(gd) + " |\n" : "\n";
    };
    row("Der", generic_element(e.der.space, "d"), e.der.dim, generic ? generic->der.dim : 0);
    row("Cent", generic_element(e.cent.space, "c"), e.cent.dim, generic ? generic->cent.dim : 0);
    row("Inn", generic_inner(e.inn, e.dim), e.inn.dim, generic ? generic->inn.dim : 0);
    md += basis_listing("Der", e.der.space);
    md += basis_listing("Cent", e.cent.space);
    md += basis_listing("Inn", e.inn.space);
    const auto failures = e.hard_failures();
    md += "\n### Checks\n\n";
    if (failures.empty()) md += "all structural checks hold\n";
    for (const auto& f : failures) md += "- " + f + "\n";
    return md;
}

int cmd_invariants(const std::string& path, const std::optional<std::string>& alpha_text, const std::string& format) {
    nilalg::StructureConstants a;
    try {
        a = load_algebra(path);
    } catch (const nilalg::ParseError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kInputFailure;
    } catch (const nilalg::Error& e) {
        std::cerr << e.what() << "\n";
        return kInputFailure;
    }
    if (a.name().empty()) a.set_name(algebra_label(a, path));

    std::optional<nilalg::GaussianRational> alpha;
    if (alpha_text) {
        if (!a.is_parametric()) {
            std::cerr << "--alpha requires a parametric algebra\n";
            return kInputFailure;
        }
        try {
            alpha = nilalg::parse_constant(*alpha_text);
        } catch (const nilalg::Error& e) {
            std::cerr << "--alpha: " << e.what() << "\n";
            return kInputFailure;
        }
    }

    const nilalg::EntryReport generic = nilalg::analyze(a);
    if (!alpha) {
        if (format == "json") std::cout << nilalg::entry_json(generic).dump(2) << "\n";
        else std::cout << single_markdown(generic, std::nullopt, nullptr);
        return kOk;
    }

    if (generic.locus.contains(*alpha)) {
        std::string members;
        for (const auto& p : generic.locus.polys())
            if (p.eval(*alpha).is_zero()) members += (members.empty() ? "" : ", ") + p.to_string();
        std::cerr << "exceptional parameter value a = " << alpha->to_string() << " (root of " << members
                  << "); generic dimensions may not apply\n";
        return kSemanticFailure;
    }
    nilalg::StructureConstants special;
    try {
        special = a.specialize(*alpha);
    } catch (const nilalg::DomainError& e) {
        std::cerr << e.what() << "\n";
        return kSemanticFailure;
    }
    const nilalg::EntryReport special_report = nilalg::analyze(special);
    if (format == "json") {
        auto doc = nilalg::entry_json(special_report);
        doc["alpha"] = alpha->to_string();
        doc["generic_dims"] = {{"der", generic.der.dim}, {"cent", generic.cent.dim}, {"inn", generic.inn.dim},
                               {"center", generic.center.dim()}};
        doc["exceptional_locus"] = nilalg::detail::locus_json(generic.locus);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << single_markdown(special_report, alpha, &generic);
    }
    return kOk;
}

int cmd_report(const std::string& format, const std::optional<std::string>& out_path) {
    std::vector<nilalg::CatalogEntry> catalog;
    try {
        const char* dir = std::getenv("NILALG_CATALOG_DIR");
        catalog = (dir && *dir) ? nilalg::load_catalog_dir(dir) : nilalg::load_catalog();
    } catch (const nilalg::Error& e) {
        std::cerr << e.what() << "\n";
        return kInputFailure;
    }
    const auto rep = nilalg::run_full_report(catalog);
    const std::string body = format == "json" ? nilalg::render_json(rep) : nilalg::render_markdown(rep);
    if (out_path) {
        std::ofstream out(*out_path, std::ios::binary);
        if (!out || !(out << body)) {
            std::cerr << "cannot write " << *out_path << "\n";
            return kInputFailure;
        }
    } else {
        std::cout << body;
    }
    if (!rep.hard_invariants_hold()) {
        std::cerr << rep.hard_failure_entries << " catalog entr" << (rep.hard_failure_entries == 1 ? "y" : "ies")
                  << " violate hard invariants\n";
        return kSemanticFailure;
    }
    return kOk;
}

int cmd_export(const std::string& dir) {
    try {
        nilalg::export_catalog(nilalg::load_catalog(), dir);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kInputFailure;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of finite-dimensional algebras given by structure constants"};
    app.require_subcommand(1);

    std::string check_path;
    auto* check = app.add_subcommand("check", "Check associativity and nilpotency");
    check->add_option("file", check_path, "Algebra file")->required();

    std::string inv_path;
    std::optional<std::string> alpha;
    std::string inv_format = "markdown";
    auto* inv = app.add_subcommand("invariants", "Center, derivations, centroid and inner derivations");
    inv->add_option("file", inv_path, "Algebra file")->required();
    inv->add_option("--alpha", alpha, "Specialize the parameter a to this value");
    inv->add_option("--format", inv_format, "Output format")->check(CLI::IsMember({"json", "markdown"}));

    std::string rep_format = "markdown";
    std::optional<std::string> rep_out;
    auto* rep = app.add_subcommand("report", "Audit the whole catalog against the printed tables");
    rep->add_option("--format", rep_format, "Output format")->check(CLI::IsMember({"json", "markdown"}));
    rep->add_option("--out", rep_out, "Write the report to this path");

    std::string export_dir;
    auto* exp = app.add_subcommand("export", "Write the embedded catalog as .alg files");
    exp->add_option("dir", export_dir, "Target directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputFailure;
    }

    if (*check) return cmd_check(check_path);
    if (*inv) return cmd_invariants(inv_path, alpha, inv_format);
    if (*rep) return cmd_report(rep_format, rep_out);
    if (*exp) return cmd_export(export_dir);
    return kInputFailure;
}

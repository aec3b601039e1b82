// Structural queries on catalog or user-supplied Lie algebras.

#include "common.hpp"
#include "liecg/fixtures.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace liecg;

int main(int argc, char** argv) {
    CLI::App app{"lie: exact structural queries on finite-dimensional Lie algebras"};
    app.require_subcommand(1);

    std::string algebra, file, out, kind = "derived", sub_labels;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--algebra", algebra, "catalog algebra name");
        cmd->add_option("--file", file, "structure-constant JSON file");
    };

    auto* c_catalog = app.add_subcommand("catalog", "list built-in algebras and fixtures");
    auto* c_validate = app.add_subcommand("validate", "check antisymmetry and Jacobi");
    add_source(c_validate);
    auto* c_export = app.add_subcommand("export", "canonical structure-constant JSON");
    add_source(c_export);
    c_export->add_option("--out", out, "output path (default stdout)");
    auto* c_center = app.add_subcommand("center", "center of the algebra");
    add_source(c_center);
    auto* c_series = app.add_subcommand("series", "derived or lower central series");
    add_source(c_series);
    c_series->add_option("--kind", kind, "derived|lower_central")
        ->check(CLI::IsMember({"derived", "lower_central"}));
    auto* c_nilrad = app.add_subcommand("nilradical", "nilradical of a solvable algebra");
    add_source(c_nilrad);
    auto* c_theta = app.add_subcommand("theta", "half-trace character on a subalgebra");
    add_source(c_theta);
    c_theta->add_option("--sub", sub_labels, "comma-separated basis labels spanning h")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? cli::kOk : cli::kBadInput;
    }

    try {
        if (c_catalog->parsed()) {
            std::cout << "algebras:\n";
            std::cout << "  abelian<n>     abelian algebra of dimension n\n";
            std::cout << "  heisenberg3    [x,y]=z; nilpotent\n";
            std::cout << "  heisenberg5    two symplectic pairs over one center\n";
            std::cout << "  aff1           [a,b]=b; has a faithful simple shift module\n";
            std::cout << "  oscillator     [a,x]=x, [a,y]=-y, [x,y]=z; solvable, not nilpotent\n";
            std::cout << "  sl2            basis e,h,f\n";
            std::cout << "  sl3            Chevalley basis from the defining matrices\n";
            std::cout << "fixtures:\n";
            for (const auto& [name, desc] : fixture_catalog())
                std::cout << "  " << name << "  " << desc << "\n";
            return cli::kOk;
        }
        if (c_validate->parsed()) {
            auto g = cli::resolve_algebra(algebra, file);
            std::cout << "valid: " << g->name << ", dim " << g->dim() << "\n";
            return cli::kOk;
        }
        if (c_export->parsed()) {
            auto g = cli::resolve_algebra(algebra, file);
            cli::emit_report(algebra_to_json(*g), out);
            return cli::kOk;
        }
        if (c_center->parsed()) {
            auto g = cli::resolve_algebra(algebra, file);
            std::cout << subspace_str(*g, center(*g)) << "\n";
            return cli::kOk;
        }
        if (c_series->parsed()) {
            auto g = cli::resolve_algebra(algebra, file);
            auto s = series(*g, kind == "derived" ? SeriesKind::derived
                                                  : SeriesKind::lower_central);
            for (std::size_t i = 0; i < s.size(); ++i)
                std::cout << i << ": " << subspace_str(*g, s[i]) << "\n";
            std::cout << "solvable: " << (is_solvable(*g) ? "yes" : "no")
                      << ", nilpotent: " << (is_nilpotent(*g) ? "yes" : "no") << "\n";
            return cli::kOk;
        }
        if (c_nilrad->parsed()) {
            auto g = cli::resolve_algebra(algebra, file);
            std::cout << subspace_str(*g, nilradical(*g)) << "\n";
            return cli::kOk;
        }
        if (c_theta->parsed()) {
            auto g = cli::resolve_algebra(algebra, file);
            Mat rows;
            std::size_t pos = 0;
            while (pos <= sub_labels.size()) {
                auto comma = sub_labels.find(',', pos);
                std::string lab = sub_labels.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos);
                auto idx = g->label_index(lab);
                if (!idx) throw IoError("unknown basis label '" + lab + "'");
                rows.push_back(unit_vec(g->dim(), *idx));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            Subspace h = span(std::move(rows));
            Functional th = theta(*g, h);
            for (std::size_t a = 0; a < h.dim(); ++a)
                std::cout << "theta(" << subspace_str(*g, Subspace{{h.basis[a]}}) << ") = "
                          << rational_str(th.coords[a]) << "\n";
            return cli::kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kBadInput;
    }
    return cli::kBadInput;
}

// Chain presentations: fixture runners, Smith normal form solving, the
// central-character comparison, and Weyl coinvariants.

#include "common.hpp"
#include "liecg/fixtures.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace liecg;

namespace {

Json fixture_json(const FixtureResult& r) {
    Json j;
    j["fixture"] = r.name;
    j["description"] = r.description;
    j["seed"] = 0;
    j["truncation"] = Json{{"d", r.degree}};
    j["instances_verified"] = r.instances_verified;
    j["certified"] = r.instances_verified;
    j["group"] = r.group.str();
    if (r.can) {
        j["can"] = Json{{"well_defined", r.can->well_defined},
                        {"presented", r.can->presented.str()},
                        {"image_rank", r.can->image_rank},
                        {"isomorphic", r.can->isomorphic}};
    }
    j["presentation"] = presentation_to_json(r.presentation);
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chain: finitely presented chain groups and their invariants"};
    app.require_subcommand(1);

    std::string fixture, file, out, type = "A1";
    bool lattice = false, rational = false;

    auto* c_fixtures = app.add_subcommand("fixtures", "list shipped fixtures");
    auto* c_solve = app.add_subcommand("solve", "abelian invariants of a presentation");
    c_solve->add_option("--fixture", fixture, "fixture name");
    c_solve->add_option("--file", file, "presentation JSON");
    c_solve->add_option("--out", out, "full JSON report path");
    auto* c_can = app.add_subcommand("cancheck", "compare with the central-character image");
    c_can->add_option("--fixture", fixture);
    c_can->add_option("--file", file);
    c_can->add_option("--out", out);
    auto* c_coinv = app.add_subcommand("coinvariants", "Weyl coinvariants of a weight lattice");
    c_coinv->add_option("--type", type, "A1|A2")->check(CLI::IsMember({"A1", "A2"}));
    c_coinv->add_flag("--lattice", lattice, "over the weight lattice (integer SNF)");
    c_coinv->add_flag("--rational", rational, "over the rationals");
    std::string lo = "-2", hi = "3", step = "1";
    auto* c_grid =
        app.add_subcommand("grid", "delta-shift fixture over a custom weight range");
    c_grid->add_option("--type", type, "A1|A2")->check(CLI::IsMember({"A1", "A2"}));
    c_grid->add_option("--min", lo, "range start, rational");
    c_grid->add_option("--max", hi, "range end, rational");
    c_grid->add_option("--step", step, "range step, rational");
    c_grid->add_option("--out", out, "full JSON report path");
    auto* c_export = app.add_subcommand("export", "presentation JSON of a fixture");
    c_export->add_option("--fixture", fixture)->required();
    c_export->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? cli::kOk : cli::kBadInput;
    }

    try {
        if (c_fixtures->parsed()) {
            for (const auto& [name, desc] : fixture_catalog())
                std::cout << name << "  " << desc << "\n";
            return cli::kOk;
        }
        if (c_solve->parsed() || c_can->parsed()) {
            std::optional<FixtureResult> fr;
            ChainPresentation p;
            if (!fixture.empty()) {
                fr = run_fixture(fixture);
                p = fr->presentation;
            } else if (!file.empty()) {
                p = presentation_from_json(read_json_file(file));
            } else {
                throw IoError("one of --fixture or --file is required");
            }
            if (c_solve->parsed()) {
                AbelianGroup gr = fr ? fr->group : abelian_invariants(p);
                std::cout << gr.str() << "\n";
                if (!out.empty() && fr) write_json_file(out, fixture_json(*fr));
                if (fr && !fr->instances_verified) return cli::kCheckFailed;
                return cli::kOk;
            }
            CanReport can = can_check(p);
            std::cout << "well-defined: yes; presented: " << can.presented.str()
                      << "; image rank: " << can.image_rank
                      << "; isomorphic: " << (can.isomorphic ? "yes" : "no") << "\n";
            if (!out.empty()) {
                Json j;
                j["seed"] = 0;
                j["certified"] = true;
                j["can"] = Json{{"well_defined", can.well_defined},
                                {"presented", can.presented.str()},
                                {"image_rank", can.image_rank},
                                {"isomorphic", can.isomorphic}};
                write_json_file(out, j);
            }
            return can.isomorphic ? cli::kOk : cli::kCheckFailed;
        }
        if (c_coinv->parsed()) {
            if (lattice == rational) throw IoError("pass exactly one of --lattice/--rational");
            auto rs = root_system(type);
            std::cout << weyl_coinvariants(rs, lattice).str() << "\n";
            return cli::kOk;
        }
        if (c_grid->parsed()) {
            auto fr = delta_grid_over_range(type, parse_rational(lo), parse_rational(hi),
                                            parse_rational(step));
            std::cout << fr.group.str() << "\n";
            if (!out.empty()) write_json_file(out, fixture_json(fr));
            return fr.instances_verified ? cli::kOk : cli::kCheckFailed;
        }
        if (c_export->parsed()) {
            auto fr = run_fixture(fixture);
            cli::emit_report(fixture_json(fr), out);
            return cli::kOk;
        }
    } catch (const RelationNotRespected& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kBadInput;
    }
    return cli::kBadInput;
}

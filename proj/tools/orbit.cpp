// Orbit-method pipeline: stabilizers, polarizations, Dixmier ideals, and the
// kernel-inclusion checks behind the chain-group relations.

#include "common.hpp"
#include "liecg/orbit.hpp"
#include "liecg/rng.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace liecg;

namespace {

Json report_stub(const std::string& command, const std::string& algebra, int deg, int level,
                 int samples, std::uint64_t seed, bool strict) {
    Json j;
    j["command"] = command;
    j["algebra"] = algebra;
    j["params"] = Json{{"deg", deg}, {"level", level}, {"samples", samples}, {"strict", strict}};
    j["seed"] = seed;
    return j;
}

Json relation_json(const UAlgebra& ua, const RelationReport& r) {
    Json e;
    e["kind"] = r.kind;
    e["instance"] = r.instance;
    e["holds"] = r.holds;
    e["certified"] = r.certified;
    e["truncation"] = Json{{"d", r.degree}, {"L", r.level}};
    if (r.witness) e["witness"] = element_str(ua.algebra(), *r.witness);
    if (r.twist) e["twist"] = functional_str(*r.twist);
    if (!r.note.empty()) e["note"] = r.note;
    return e;
}

std::optional<CatalogInclusion> inclusion_for(const std::string& name) {
    for (auto& inc : catalog_inclusions())
        if (inc.g->name == name && inc.h.dim() < inc.g->dim()) return inc;
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit: polarizations, Dixmier ideals and weak-containment checks"};
    app.require_subcommand(1);

    std::string algebra, file, out, fcsv, kind;
    std::string module_a, module_b;
    int deg = 2, level = -1, samples = 10;
    std::uint64_t seed = 0;
    bool strict = false, reverse_flag = false;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--algebra", algebra, "catalog algebra name");
        cmd->add_option("--file", file, "structure-constant JSON file");
    };

    auto* c_stab = app.add_subcommand("stabilizer", "radical of B_f(x,y) = f([x,y])");
    add_source(c_stab);
    c_stab->add_option("--f", fcsv, "functional, comma-separated rationals")->required();

    auto* c_pol = app.add_subcommand("polarize", "Vergne polarization along an ideal flag");
    add_source(c_pol);
    c_pol->add_option("--f", fcsv)->required();
    c_pol->add_flag("--reverse-flag", reverse_flag, "refine the flag in reverse basis order");

    auto* c_dix = app.add_subcommand("dixmier", "truncated Dixmier ideal I(f)");
    add_source(c_dix);
    c_dix->add_option("--f", fcsv)->required();
    c_dix->add_option("--deg", deg)->check(CLI::PositiveNumber);
    c_dix->add_option("--level", level);
    c_dix->add_flag("--strict", strict, "fail when the certification bound is not met");
    c_dix->add_option("--out", out);

    auto* c_check = app.add_subcommand("check", "relation checks on random functionals");
    c_check->add_option("kind", kind, "tensnil|resnil|shift|indrestw|antipode")
        ->required()
        ->check(CLI::IsMember({"tensnil", "resnil", "shift", "indrestw", "antipode"}));
    add_source(c_check);
    c_check->add_option("--samples", samples);
    c_check->add_option("--deg", deg)->check(CLI::PositiveNumber);
    c_check->add_option("--level", level);
    c_check->add_option("--seed", seed);
    c_check->add_option("--out", out);

    auto* c_kernel = app.add_subcommand("kernel", "truncated kernel of a module file");
    c_kernel->add_option("--module", module_a, "module spec JSON")->required();
    add_source(c_kernel);
    c_kernel->add_option("--deg", deg)->check(CLI::PositiveNumber);
    c_kernel->add_flag("--strict", strict);
    c_kernel->add_option("--out", out);

    auto* c_cont = app.add_subcommand("contains", "weak containment pi <= rho of module files");
    c_cont->add_option("--module", module_a, "pi module spec JSON")->required();
    c_cont->add_option("--module2", module_b, "rho module spec JSON")->required();
    add_source(c_cont);
    c_cont->add_option("--deg", deg)->check(CLI::PositiveNumber);
    c_cont->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? cli::kOk : cli::kBadInput;
    }

    try {
        auto g = cli::resolve_algebra(algebra, file);
        UAlgebra ua(g);

        if (c_stab->parsed()) {
            Functional f = cli::parse_functional_arg(fcsv, g->dim());
            std::cout << subspace_str(*g, stabilizer(*g, f)) << "\n";
            return cli::kOk;
        }
        if (c_pol->parsed()) {
            Functional f = cli::parse_functional_arg(fcsv, g->dim());
            auto pol = vergne_polarization(*g, f, ideal_flag(*g, reverse_flag));
            std::cout << "polarization: " << subspace_str(*g, pol.h) << "\n";
            std::cout << "flag:";
            for (const auto& s : pol.flag) std::cout << " dim" << s.dim();
            std::cout << "\n";
            return cli::kOk;
        }
        if (c_dix->parsed()) {
            Functional f = cli::parse_functional_arg(fcsv, g->dim());
            DixmierIdeal D = dixmier_ideal(ua, f, deg, level);
            if (strict && !D.ideal.certified) throw InsufficientLevel();
            Json rep = report_stub("orbit dixmier", g->name, deg, D.module->max_level(), 1, seed,
                                   strict);
            rep["certified"] = D.ideal.certified;
            rep["polarization_dim"] = D.polarization.h.dim();
            rep["ideal"] = ideal_to_json(ua, D.ideal);
            cli::emit_report(rep, out);
            return cli::kOk;
        }
        if (c_check->parsed()) {
            Rng rng(seed);
            std::vector<RelationReport> reps;
            for (int s = 0; s < samples; ++s) {
                if (kind == "tensnil") {
                    reps.push_back(check_tensnil(ua, rng.functional(g->dim()),
                                                 rng.functional(g->dim()), deg, level));
                } else if (kind == "antipode") {
                    Subspace z = center(*g);
                    Functional f = rng.functional(g->dim());
                    // keep f nonzero on the center line
                    if (z.dim() == 1 && f(z.basis[0]) == 0)
                        add_scaled(f.coords, z.basis[0], rng.nonzero_rational());
                    reps.push_back(check_antipode(ua, f, deg, level));
                } else if (kind == "shift") {
                    Subspace der = bracket_span(*g, full_space(*g), full_space(*g));
                    Functional f = rng.functional(g->dim());
                    Functional lam = rng.functional_killing(der.basis, g->dim());
                    reps.push_back(check_shift(ua, f, lam, deg, level));
                } else {
                    auto inc = inclusion_for(g->name);
                    if (!inc) throw IoError("no catalog subalgebra known for " + g->name);
                    Functional f = rng.functional(g->dim());
                    reps.push_back(kind == "resnil"
                                       ? check_resnil(*g, inc->h, f, deg, level)
                                       : check_indrestw(*g, inc->h, f, deg, level));
                }
            }
            bool all = true, cert = true;
            Json results = Json::array();
            for (const auto& r : reps) {
                all = all && r.holds;
                cert = cert && r.certified;
                results.push_back(relation_json(ua, r));
            }
            Json rep = report_stub("orbit check " + kind, g->name, deg, level, samples, seed,
                                   strict);
            rep["certified"] = cert;
            rep["all_hold"] = all;
            rep["results"] = std::move(results);
            cli::emit_report(rep, out);
            std::cerr << (all ? "all checks hold" : "CHECK FAILED") << " (" << samples
                      << " samples)\n";
            return all ? cli::kOk : cli::kCheckFailed;
        }
        if (c_kernel->parsed()) {
            auto mod = module_from_json(read_json_file(module_a), g);
            TruncatedIdeal k = kernel_truncated(ua, *mod, deg, strict);
            Json rep = report_stub("orbit kernel", g->name, deg, mod->max_level(), 1, seed,
                                   strict);
            rep["certified"] = k.certified;
            rep["kernel"] = ideal_to_json(ua, k);
            cli::emit_report(rep, out);
            return cli::kOk;
        }
        if (c_cont->parsed()) {
            auto pi = module_from_json(read_json_file(module_a), g);
            auto rho = module_from_json(read_json_file(module_b), g);
            auto r = weakly_contains(ua, *pi, *rho, deg, false);
            Json rep = report_stub("orbit contains", g->name, deg, -1, 1, seed, strict);
            rep["certified"] = r.certified;
            rep["holds"] = r.holds;
            if (r.witness_element)
                rep["witness"] = element_str(*g, *r.witness_element);
            cli::emit_report(rep, out);
            return r.holds ? cli::kOk : cli::kCheckFailed;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kBadInput;
    }
    return cli::kBadInput;
}

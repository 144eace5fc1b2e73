#include "thetalab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "thetalab/config.hpp"
#include "thetalab/serialize.hpp"

namespace thetalab::cli {

namespace {

using config::RunConfig;
using groups::GroupSpec;
using serialize::json;

GroupSpec parse_group(const std::string& s) {
    int m, p, n;
    char c1, c2;
    std::istringstream is(s);
    if (!(is >> m >> c1 >> p >> c2 >> n) || c1 != ',' || c2 != ',')
        throw CLI::ValidationError("--group", "expected m,p,n");
    return GroupSpec(m, p, n);
}

json load_json_arg(const std::string& s) {
    // literal JSON, or @file to read from disk
    if (!s.empty() && s[0] == '@') {
        std::ifstream f(s.substr(1));
        if (!f) throw Error("cannot open " + s.substr(1));
        return json::parse(f);
    }
    return json::parse(s);
}

json versioned(json body) {
    json out;
    out["schema_version"] = 1;
    for (auto& [k, v] : body.items()) out[k] = v;
    return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

struct Args {
    RunConfig cfg;
    // group/theta
    int m = 1, p = 1, n = 2;
    std::string group_str;
    std::string point_str, mu_str, theta_n_str, poly_str;
    int point_p = 1;
    double tol = -1.0;
    std::string region = "torus";
    int count = 10;
    // module
    std::string irrep = "triv", irrep2 = "sign";
    double lambda = 2.0;
    int degree = -1;
    int comp_i = 0, comp_j = -1;
    int wdeg = 4;
    bool all_monomials = false;
    // certify
    std::string symbols_path, theta_path, phi_path, psi_path;
    int cutoff = 20;
    int size = 4;
    int repeat = 100;
    int unitary_size = 2;
    // experiment
    int mmax = 100;
    int k = 3;
};

double effective_tol(const Args& a) { return a.tol > 0 ? a.tol : a.cfg.tol_roots; }

// default window per variable count: 12 for n = 2, 9 for n = 3, 7 beyond
int effective_window(const Args& a, int n) {
    if (a.degree >= 0) return a.degree;
    if (n <= 2) return a.cfg.degree_window;
    if (n == 3) return std::min(a.cfg.degree_window, 9);
    return std::min(a.cfg.degree_window, 7);
}

models::SymbolTuple load_symbols(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open symbols file " + path);
    return serialize::symbols_from_json(json::parse(f));
}

int run_group(const std::string& sub, const Args& a, std::ostream& out) {
    GroupSpec spec(a.m, a.p, a.n);
    if (sub == "list") {
        auto elems = groups::generate_group(spec, a.cfg.group_cap);
        json arr = json::array();
        for (const auto& g : elems) arr.push_back(serialize::element_to_json(g));
        emit(out, versioned({{"group", {{"m", spec.m}, {"p", spec.p}, {"n", spec.n}}},
                             {"order", elems.size()},
                             {"elements", arr}}));
        return 0;
    }
    if (sub == "table") {
        auto table = characters::CharacterTable::build(spec);
        emit(out, versioned({{"table", serialize::table_to_json(table)}}));
        return 0;
    }
    if (sub == "reflections") {
        auto refl = groups::reflections(spec);
        json arr = json::array();
        for (const auto& g : refl) arr.push_back(serialize::element_to_json(g));
        emit(out, versioned({{"count", refl.size()}, {"reflections", arr}}));
        return 0;
    }
    throw Error("unknown group subcommand");
}

int run_theta(const std::string& sub, const Args& a, std::ostream& out) {
    GroupSpec spec(a.m, a.p, a.n);
    auto tm = poly::theta_map(spec);
    if (sub == "map") {
        json arr = json::array();
        for (const auto& c : tm.components) arr.push_back(serialize::poly_to_json(c));
        emit(out, versioned({{"components", arr}}));
        return 0;
    }
    if (sub == "eval") {
        auto z = serialize::point_from_json(load_json_arg(a.point_str));
        emit(out, versioned({{"theta", serialize::point_to_json(tm.eval(z))}}));
        return 0;
    }
    if (sub == "jacobian") {
        emit(out, versioned({{"jacobian", serialize::poly_to_json(poly::jacobian(tm))}}));
        return 0;
    }
    if (sub == "express") {
        auto f = serialize::poly_from_json(load_json_arg(a.poly_str));
        auto q = poly::express_in_invariants(f, tm);
        emit(out, versioned({{"invariant", true}, {"expression", serialize::poly_to_json(q)}}));
        return 0;
    }
    throw Error("unknown theta subcommand");
}

int run_domain(const std::string& sub, const Args& a, std::ostream& out) {
    const double tol = effective_tol(a);
    if (sub == "membership") {
        domain::ThetaPoint pt{serialize::point_from_json(load_json_arg(a.point_str)), a.point_p};
        emit(out, versioned(serialize::membership_to_json(domain::membership(pt, tol))));
        return 0;
    }
    if (sub == "boundary") {
        domain::ThetaPoint pt{serialize::point_from_json(load_json_arg(a.point_str)), a.point_p};
        emit(out, versioned(serialize::shilov_to_json(domain::shilov_boundary_test(pt, tol))));
        return 0;
    }
    if (sub == "project") {
        domain::ThetaPoint pt{serialize::point_from_json(load_json_arg(a.point_str)), a.point_p};
        auto proj = domain::pi_projection(pt);
        auto mem = domain::gamma_membership(proj, tol);
        emit(out, versioned({{"projected", serialize::point_to_json(proj)},
                             {"gamma_verdict", domain::to_string(mem.verdict)}}));
        return 0;
    }
    if (sub == "lift") {
        auto mu = serialize::point_from_json(load_json_arg(a.mu_str));
        auto tn = serialize::point_from_json(load_json_arg(a.theta_n_str));
        if (tn.size() != 1) throw Error("lift: --theta-n expects a single complex value");
        auto lifted = domain::boundary_from_lower(mu, tn[0], a.point_p, tol);
        auto check = domain::shilov_boundary_test(lifted, tol);
        emit(out, versioned({{"point", serialize::point_to_json(lifted.coords)},
                             {"p", lifted.p},
                             {"boundary", check.verdict}}));
        return 0;
    }
    if (sub == "sample") {
        GroupSpec spec(a.m, a.p, a.n);
        auto region = a.region == "torus" ? domain::SampleRegion::torus
                                          : domain::SampleRegion::closed_polydisc;
        auto pts = domain::sample_theta_image(spec, region, a.count, a.cfg.seed);
        json arr = json::array();
        for (const auto& pt : pts) arr.push_back(serialize::point_to_json(pt.coords));
        emit(out, versioned({{"region", a.region}, {"p", spec.p}, {"points", arr}}));
        return 0;
    }
    throw Error("unknown domain subcommand");
}

int run_module(const std::string& sub, const Args& a, std::ostream& out) {
    GroupSpec spec = parse_group(a.group_str.empty()
                                     ? (std::to_string(a.m) + "," + std::to_string(a.p) + "," +
                                        std::to_string(a.n))
                                     : a.group_str);
    const int D = effective_window(a, spec.n);
    if (sub == "norms") {
        auto trunc = bergman::ModuleTruncation::build(spec.n, a.lambda, D);
        json arr = json::array();
        for (int i = 0; i < trunc.size(); ++i)
            arr.push_back(json{{"exp", trunc.basis[i]}, {"norm2", trunc.norms2[i]}});
        emit(out, versioned({{"lambda", a.lambda}, {"degree", D}, {"norms", arr}}));
        return 0;
    }
    if (sub == "project") {
        auto table = characters::CharacterTable::build(spec);
        auto trunc = bergman::ModuleTruncation::build(spec.n, a.lambda, D);
        const int idx = table.irrep_index(a.irrep);
        isotypic::IsotypicProjection proj =
            (a.comp_j >= 0) ? isotypic::projection_ij_matrix(table, idx, a.comp_i, a.comp_j, trunc)
                            : isotypic::projection_matrix(table, idx, trunc);
        if (a.cfg.format == "csv") {
            out << serialize::matrix_to_csv(proj.op.mat);
            return 0;
        }
        emit(out, versioned({{"irrep", a.irrep},
                             {"degree", D},
                             {"lambda", a.lambda},
                             {"matrix", serialize::matrix_to_json(proj.op.mat)}}));
        return 0;
    }
    if (sub == "mult") {
        auto trunc = bergman::ModuleTruncation::build(spec.n, a.lambda, D);
        auto f = serialize::poly_from_json(load_json_arg(a.poly_str));
        auto M = isotypic::mult_operator_matrix(f, trunc);
        if (a.cfg.format == "csv") {
            out << serialize::matrix_to_csv(M.mat);
            return 0;
        }
        emit(out, versioned({{"source_degree_cap", M.source_degree_cap},
                             {"target_degree_cap", M.target_degree_cap},
                             {"matrix", serialize::matrix_to_json(M.mat)}}));
        return 0;
    }
    if (sub == "profile") {
        auto table = characters::CharacterTable::build(spec);
        auto theta = poly::theta_map(spec);
        auto trunc = bergman::ModuleTruncation::build(spec.n, a.lambda, D);
        auto exps = a.all_monomials ? isotypic::invariant_monomial_exponents(theta, a.wdeg)
                                    : isotypic::last_invariant_powers(theta, a.wdeg);
        auto prof = isotypic::moment_profile(table, table.irrep_index(a.irrep), a.comp_i, trunc,
                                             theta, exps);
        if (a.cfg.format == "csv") {
            out << "exponent,value\n";
            for (size_t t = 0; t < prof.values.size(); ++t) {
                out << "\"";
                for (size_t u = 0; u < prof.exponents[t].size(); ++u)
                    out << (u ? " " : "") << prof.exponents[t][u];
                out << "\"," << prof.values[t] << "\n";
            }
            return 0;
        }
        json rows = json::array();
        for (size_t t = 0; t < prof.values.size(); ++t)
            rows.push_back(json{{"exp", prof.exponents[t]}, {"value", prof.values[t]}});
        emit(out, versioned({{"minimal_vector", serialize::poly_to_json(prof.minimal_vector)},
                             {"minimal_degree", prof.minimal_degree},
                             {"profile", rows}}));
        return 0;
    }
    if (sub == "divisibility") {
        auto table = characters::CharacterTable::build(spec);
        auto theta = poly::theta_map(spec);
        auto trunc = bergman::ModuleTruncation::build(spec.n, a.lambda, D);
        auto rep = isotypic::sign_isotype_divisibility(table, trunc, theta);
        json quot = json::array();
        for (const auto& q : rep.quotients) quot.push_back(serialize::poly_to_json(q));
        emit(out, versioned({{"divisible", rep.ok},
                             {"max_remainder", rep.max_remainder},
                             {"quotients", quot}}));
        return 0;
    }
    throw Error("unknown module subcommand");
}

int run_certify(const std::string& sub, const Args& a, std::ostream& out) {
    if (sub == "pure-iso") {
        auto S = load_symbols(a.symbols_path);
        auto sym = models::check_symmetry(S, a.cfg.tol_matrix);
        auto comm = models::check_commutation(S, a.cfg.tol_matrix);
        auto T = models::build_toeplitz(S, a.cutoff);
        const double interior = models::toeplitz_interior_relation_residual(T);
        auto fals = models::gamma_contraction_falsifier(S, 64, 16, a.cfg.seed);
        emit(out,
             versioned({{"symmetry", json{{"pass", sym.pass}, {"residual", sym.residual}}},
                        {"commutation", json{{"pass", comm.pass}, {"residual", comm.residual}}},
                        {"interior_relation_residual", interior},
                        {"interior_commutation_residual",
                         models::toeplitz_interior_commutation_residual(T)},
                        {"falsifier",
                         json{{"violation_found", fals.violation_found},
                              {"worst_margin", fals.worst_margin}}},
                        {"verdict", sym.pass && comm.pass && interior <= a.cfg.tol_matrix &&
                                        !fals.violation_found
                                        ? "consistent-pure-isometry"
                                        : "failed"}}));
        return 0;
    }
    if (sub == "unitary") {
        GroupSpec spec = parse_group(a.group_str);
        int passes = 0;
        double worst = 0.0;
        json fails = json::array();
        for (int t = 0; t < a.repeat; ++t) {
            auto fam =
                models::CommutingUnitaryFamily::random(spec.n, a.size, a.cfg.seed + t);
            auto T = models::theta_unitary_from_unitaries(fam, spec);
            auto rep = models::verify_theta_unitary(T, spec, 1e-11, a.cfg.seed ^ t);
            worst = std::max({worst, rep.unitarity_residual, rep.adjoint_relation_residual});
            if (rep.pass)
                ++passes;
            else
                fails.push_back(t);
        }
        emit(out, versioned({{"families", a.repeat},
                             {"passes", passes},
                             {"worst_residual", worst},
                             {"failed_indices", fails},
                             {"verdict", passes == a.repeat ? "pass" : "fail"}}));
        return 0;
    }
    if (sub == "wold") {
        GroupSpec spec = parse_group(a.group_str);
        models::WoldModel model;
        model.pure_part = load_symbols(a.symbols_path);
        model.unitary_part =
            models::CommutingUnitaryFamily::random(spec.n, a.unitary_size, a.cfg.seed);
        auto rep = models::wold_verify(model, spec, a.cutoff);
        emit(out, versioned({{"pass", rep.pass},
                             {"relation_residual", rep.relation_residual},
                             {"declared_unitary_dim", rep.declared_unitary_dim},
                             {"recovered_unitary_dim", rep.recovered_unitary_dim},
                             {"subspace_mismatch", rep.subspace_mismatch},
                             {"pure_block_ok", rep.pure_block_ok}}));
        return 0;
    }
    if (sub == "subspace") {
        models::PolyMatrix Theta;
        {
            std::ifstream f(a.theta_path);
            if (!f) throw Error("cannot open " + a.theta_path);
            for (const auto& c : json::parse(f)) Theta.coeffs.push_back(serialize::matrix_from_json(c));
        }
        auto phi = load_symbols(a.phi_path);
        auto psi = load_symbols(a.psi_path);
        auto rep = models::invariant_subspace_verify(Theta, phi, psi, a.count, a.cfg.seed);
        emit(out, versioned({{"pass", rep.pass},
                             {"inner_residual", rep.inner_residual},
                             {"intertwine_residual", rep.intertwine_residual},
                             {"witness", rep.witness},
                             {"psi_pure_isometry_ok", rep.psi_pure_isometry_ok}}));
        return 0;
    }
    throw Error("unknown certify subcommand");
}

int run_experiment(const std::string& sub, const Args& a, std::ostream& out) {
    if (sub == "inequiv") {
        auto res = experiments::prop_inequiv_check(a.n, a.lambda);
        emit(out, versioned(
                      {{"report", serialize::report_to_json(res.report, a.cfg.timings)},
                       {"witness_found", res.witness_found}}));
        return 0;
    }
    if (sub == "unbdd") {
        auto res = experiments::unbdd_growth(a.lambda, a.mmax);
        if (a.cfg.format == "csv") {
            out << "m,ratio,cross_check\n";
            out.precision(17);
            for (size_t i = 0; i < res.ratios.size(); ++i)
                out << (i + 1) << "," << res.ratios[i] << "," << res.cross_check[i] << "\n";
            return 0;
        }
        emit(out, versioned(
                      {{"report", serialize::report_to_json(res.report, a.cfg.timings)},
                       {"ratios", res.ratios},
                       {"cross_check", res.cross_check},
                       {"monotone_diverging", res.monotone_diverging}}));
        return 0;
    }
    if (sub == "profiles") {
        GroupSpec spec = parse_group(a.group_str);
        auto res = experiments::moment_profile_inequivalence(spec, a.lambda, a.irrep, a.irrep2,
                                                             a.wdeg);
        if (a.cfg.format == "csv") {
            out << "exponent,profile1,profile2\n";
            out.precision(17);
            for (size_t t = 0; t < res.exponents.size(); ++t) {
                out << "\"";
                for (size_t u = 0; u < res.exponents[t].size(); ++u)
                    out << (u ? " " : "") << res.exponents[t][u];
                out << "\"," << res.profile1[t] << "," << res.profile2[t] << "\n";
            }
            return 0;
        }
        json w;
        if (res.witness)
            w = json{{"exp", res.witness->exponent},
                     {"profile1", res.witness->value1},
                     {"profile2", res.witness->value2}};
        emit(out, versioned(
                      {{"report", serialize::report_to_json(res.report, a.cfg.timings)},
                       {"witness_found", res.witness_found},
                       {"witness", w}}));
        return 0;
    }
    if (sub == "dihedral") {
        auto res = experiments::dihedral_family_report(a.k, a.lambda, a.wdeg);
        json pairs = json::array();
        for (const auto& p : res.pairs) {
            json e{{"irrep1", p.irrep1},
                   {"irrep2", p.irrep2},
                   {"verdict", p.witness_found ? "inequivalent-witness"
                                               : "inconclusive-by-this-invariant"}};
            if (p.witness)
                e["witness"] = json{{"exp", p.witness->exponent},
                                    {"profile1", p.witness->value1},
                                    {"profile2", p.witness->value2}};
            pairs.push_back(std::move(e));
        }
        if (a.cfg.format == "csv") {
            out << "irrep1,irrep2,witness_found\n";
            for (const auto& p : res.pairs)
                out << p.irrep1 << "," << p.irrep2 << "," << (p.witness_found ? 1 : 0) << "\n";
            return 0;
        }
        emit(out, versioned(
                      {{"report", serialize::report_to_json(res.report, a.cfg.timings)},
                       {"one_dim_irreps", res.one_dim_irreps},
                       {"pairs", pairs}}));
        return 0;
    }
    throw Error("unknown experiment subcommand");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"theta-lab: reflection groups, quotient domains and Hilbert-module models"};
    app.require_subcommand(1);
    app.fallthrough();

    Args a;
    std::string config_path;
    app.add_option("--config", config_path, "flat key=value config file");
    auto* seed_opt = app.add_option("--seed", a.cfg.seed, "RNG seed");
    auto* format_opt = app.add_option("--format", a.cfg.format, "json|csv");
    auto* timings_flag = app.add_flag("--timings", "include runtimes in reports");

    auto add_group_opts = [&](CLI::App* c) {
        c->add_option("--m", a.m);
        c->add_option("--p", a.p);
        c->add_option("--n", a.n);
    };

    auto* group = app.add_subcommand("group", "group generation and character tables");
    for (const char* name : {"list", "table", "reflections"})
        add_group_opts(group->add_subcommand(name));

    auto* theta = app.add_subcommand("theta", "basic invariant polynomials");
    for (const char* name : {"map", "jacobian"}) add_group_opts(theta->add_subcommand(name));
    {
        auto* c = theta->add_subcommand("eval");
        add_group_opts(c);
        c->add_option("--point", a.point_str)->required();
        auto* e = theta->add_subcommand("express");
        add_group_opts(e);
        e->add_option("--poly", a.poly_str)->required();
    }

    auto* dom = app.add_subcommand("domain", "membership and boundary geometry");
    {
        for (const char* name : {"membership", "boundary", "project"}) {
            auto* c = dom->add_subcommand(name);
            c->add_option("--point", a.point_str)->required();
            c->add_option("--p", a.point_p);
            c->add_option("--tol", a.tol);
        }
        auto* l = dom->add_subcommand("lift");
        l->add_option("--mu", a.mu_str)->required();
        l->add_option("--theta-n", a.theta_n_str)->required();
        l->add_option("--p", a.point_p);
        l->add_option("--tol", a.tol);
        auto* s = dom->add_subcommand("sample");
        add_group_opts(s);
        s->add_option("--region", a.region)->check(CLI::IsMember({"torus", "polydisc"}));
        s->add_option("--count", a.count);
    }

    auto* mod = app.add_subcommand("module", "truncated Hilbert-module models");
    {
        for (const char* name : {"project", "mult", "profile", "divisibility", "norms"}) {
            auto* c = mod->add_subcommand(name);
            c->add_option("--group", a.group_str);
            add_group_opts(c);
            c->add_option("--lambda", a.lambda);
            c->add_option("--degree", a.degree);
            if (std::string(name) == "project") {
                c->add_option("--irrep", a.irrep);
                c->add_option("--i", a.comp_i);
                c->add_option("--j", a.comp_j);
            }
            if (std::string(name) == "mult") c->add_option("--poly", a.poly_str)->required();
            if (std::string(name) == "profile") {
                c->add_option("--irrep", a.irrep);
                c->add_option("--i", a.comp_i);
                c->add_option("--wdeg", a.wdeg);
                c->add_flag("--all-monomials", a.all_monomials);
            }
        }
    }

    auto* cert = app.add_subcommand("certify", "operator-model certification");
    {
        auto* c = cert->add_subcommand("pure-iso");
        c->add_option("--symbols", a.symbols_path)->required();
        c->add_option("--cutoff", a.cutoff);
        auto* u = cert->add_subcommand("unitary");
        u->add_option("--group", a.group_str)->required();
        u->add_option("--size", a.size);
        u->add_option("--count", a.repeat);
        auto* w = cert->add_subcommand("wold");
        w->add_option("--group", a.group_str)->required();
        w->add_option("--symbols", a.symbols_path)->required();
        w->add_option("--cutoff", a.cutoff);
        w->add_option("--unitary-size", a.unitary_size);
        auto* s = cert->add_subcommand("subspace");
        s->add_option("--theta", a.theta_path)->required();
        s->add_option("--phi", a.phi_path)->required();
        s->add_option("--psi", a.psi_path)->required();
        s->add_option("--samples", a.count);
    }

    auto* exp = app.add_subcommand("experiment", "scripted quantitative reproductions");
    {
        auto* i = exp->add_subcommand("inequiv");
        i->add_option("--n", a.n);
        i->add_option("--lambda", a.lambda);
        auto* u = exp->add_subcommand("unbdd");
        u->add_option("--lambda", a.lambda);
        u->add_option("--mmax", a.mmax);
        auto* d = exp->add_subcommand("dihedral");
        d->add_option("--k", a.k);
        d->add_option("--lambda", a.lambda);
        d->add_option("--degree", a.wdeg);
        auto* p = exp->add_subcommand("profiles");
        p->add_option("--group", a.group_str)->required();
        p->add_option("--lambda", a.lambda);
        p->add_option("--irrep1", a.irrep);
        p->add_option("--irrep2", a.irrep2);
        p->add_option("--degree", a.wdeg);
    }

    // global options may appear after the subcommand
    auto enable_fallthrough = [](auto&& self, CLI::App* node) -> void {
        node->fallthrough();
        for (auto* sub : node->get_subcommands({})) self(self, sub);
    };
    enable_fallthrough(enable_fallthrough, &app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << std::flush;
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (!config_path.empty()) {
            RunConfig base = config::load_config(config_path);
            // flags override the config file
            if (seed_opt->count() == 0) a.cfg.seed = base.seed;
            if (format_opt->count() == 0) a.cfg.format = base.format;
            if (timings_flag->count() == 0) a.cfg.timings = base.timings;
            a.cfg.tol_roots = base.tol_roots;
            a.cfg.tol_matrix = base.tol_matrix;
            a.cfg.degree_window = base.degree_window;
            a.cfg.group_cap = base.group_cap;
        }
        if (timings_flag->count() > 0) a.cfg.timings = true;
        a.cfg.validate();

        for (auto* top : {group, theta, dom, mod, cert, exp}) {
            if (!app.got_subcommand(top)) continue;
            auto subs = top->get_subcommands();
            if (subs.empty()) {
                err << "usage error: missing subcommand for " << top->get_name() << "\n";
                return 2;
            }
            const std::string sub = subs.front()->get_name();
            if (top == group) return run_group(sub, a, out);
            if (top == theta) return run_theta(sub, a, out);
            if (top == dom) return run_domain(sub, a, out);
            if (top == mod) return run_module(sub, a, out);
            if (top == cert) return run_certify(sub, a, out);
            if (top == exp) return run_experiment(sub, a, out);
        }
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace thetalab::cli

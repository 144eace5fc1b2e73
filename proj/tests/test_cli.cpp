#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "thetalab/cli.hpp"
#include "thetalab/experiments.hpp"
#include "thetalab/serialize.hpp"

using namespace thetalab;
using serialize::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("membership verdict through the CLI") {
    auto r = run({"domain", "membership", "--point", R"([{"re":2},{"re":1}])", "--p", "1"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["verdict"] == "member-boundary");
    CHECK(j["roots"].size() == 2);

    auto outside = run({"domain", "membership", "--point", "[0.0, 2.0]", "--p", "1"});
    CHECK(json::parse(outside.out)["verdict"] == "outside");
}

TEST_CASE("boundary subverdicts through the CLI") {
    auto r = run({"domain", "boundary", "--point", R"([{"re":2},{"re":1}])", "--p", "1"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["verdict"] == true);
    CHECK(j["subverdicts"]["a"] == true);
    CHECK(j["subverdicts"]["b"] == true);
    CHECK(j["subverdicts"]["c"] == true);
}

TEST_CASE("group list") {
    auto r = run({"group", "list", "--m", "1", "--p", "1", "--n", "2"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["order"] == 2);
    CHECK(j["elements"].size() == 2);
}

TEST_CASE("usage and computation error codes") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"group"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    // over the group cap: a computation error, not a usage error
    CHECK(run({"group", "list", "--m", "3", "--p", "1", "--n", "6"}).code == 3);
    // invalid point JSON
    CHECK(run({"domain", "membership", "--point", "{oops", "--p", "1"}).code == 3);
}

TEST_CASE("byte-identical reports for fixed seed") {
    std::vector<std::string> argv{"certify", "unitary", "--group", "2,2,2",
                                  "--size",  "3",       "--count", "4",
                                  "--seed",  "12345"};
    auto a = run(argv);
    auto b = run(argv);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out)["verdict"] == "pass");

    auto s1 = run({"domain", "sample", "--m", "1", "--p", "1", "--n", "3", "--count", "5",
                   "--seed", "7"});
    auto s2 = run({"domain", "sample", "--m", "1", "--p", "1", "--n", "3", "--count", "5",
                   "--seed", "7"});
    CHECK(s1.out == s2.out);
}

TEST_CASE("CLI output equals the library result (thin wrapper)") {
    auto r = run({"experiment", "inequiv", "--n", "2", "--lambda", "2"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    auto lib = experiments::prop_inequiv_check(2, 2.0);
    CHECK(j["witness_found"] == lib.witness_found);
    CHECK(j["report"]["quantities"][0]["value"].get<double>() == lib.lhs_closed);
    CHECK(j["report"]["quantities"][1]["value"].get<double>() == lib.rhs_closed);
    CHECK(j["report"]["verdict"] == lib.report.verdict);
}

TEST_CASE("experiment subcommands") {
    auto r = run({"experiment", "unbdd", "--lambda", "2", "--mmax", "10"});
    auto j = json::parse(r.out);
    CHECK(j["monotone_diverging"] == true);
    CHECK(j["ratios"].size() == 10);

    auto d = run({"experiment", "dihedral", "--k", "2", "--lambda", "2", "--degree", "4"});
    auto jd = json::parse(d.out);
    CHECK(jd["one_dim_irreps"].size() == 4);
    CHECK(jd["pairs"].size() == 6);

    auto csv = run({"--format", "csv", "experiment", "unbdd", "--lambda", "1", "--mmax", "4"});
    CHECK(csv.out.substr(0, 21) == "m,ratio,cross_check\n1");
}

TEST_CASE("module project matrix output") {
    auto r = run({"module", "project", "--group", "1,1,2", "--irrep", "sign", "--lambda", "2",
                  "--degree", "3"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["matrix"].size() == 10);  // monomials of degree <= 3 in two variables

    auto csv = run({"--format", "csv", "module", "project", "--group", "1,1,2", "--irrep",
                    "sign", "--lambda", "2", "--degree", "3"});
    CHECK(csv.out.substr(0, 14) == "row,col,re,im\n");
}

TEST_CASE("certify pure-iso from a symbols file") {
    models::SymbolTuple S = models::SymbolTuple::zero(2, 2, 2);
    Eigen::MatrixXcd A0(2, 2), A1(2, 2);
    A0 << groups::cplx(0.0), groups::cplx(0.2, -0.1), groups::cplx(0.0), groups::cplx(0.0);
    A1 << groups::cplx(0.1), groups::cplx(0.05, 0.02), groups::cplx(0.05, -0.02),
        groups::cplx(-0.2);
    S.A[0][0] = A0;
    S.A[0][1] = A1;
    S.A[0][2] = A0.adjoint();
    {
        std::ofstream f("symbols_test.json");
        f << serialize::symbols_to_json(S).dump();
    }
    auto r = run({"certify", "pure-iso", "--symbols", "symbols_test.json", "--cutoff", "12"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["symmetry"]["pass"] == true);
    CHECK(j["commutation"]["pass"] == true);
    CHECK(j["verdict"] == "consistent-pure-isometry");

    // symbols JSON round trip
    auto back = serialize::symbols_from_json(serialize::symbols_to_json(S));
    CHECK(back.n == S.n);
    CHECK(back.p == S.p);
    CHECK(back.r == S.r);
    for (int l = 0; l <= 2; ++l) CHECK((back.A[0][l] - S.A[0][l]).norm() == 0.0);
}

TEST_CASE("config file with flag override") {
    {
        std::ofstream f("cfg_test.conf");
        f << "# test config\nseed = 99\nformat = json\ntol_roots = 1e-9\n";
    }
    auto a = run({"--config", "cfg_test.conf", "domain", "sample", "--m", "1", "--p", "1",
                  "--n", "2", "--count", "3"});
    auto b = run({"--seed", "99", "domain", "sample", "--m", "1", "--p", "1", "--n", "2",
                  "--count", "3"});
    CHECK(a.out == b.out);  // config seed == flag seed
    auto c = run({"--config", "cfg_test.conf", "--seed", "100", "domain", "sample", "--m", "1",
                  "--p", "1", "--n", "2", "--count", "3"});
    CHECK(a.out != c.out);  // flag overrides config

    {
        std::ofstream f("cfg_bad.conf");
        f << "unknown_key = 1\n";
    }
    CHECK(run({"--config", "cfg_bad.conf", "group", "list", "--n", "2"}).code == 3);
}

TEST_CASE("domain lift and project") {
    auto l = run({"domain", "lift", "--mu", "[{\"re\":1}]", "--theta-n", "[{\"re\":1}]",
                  "--p", "1"});
    REQUIRE(l.code == 0);
    auto jl = json::parse(l.out);
    CHECK(jl["boundary"] == true);
    CHECK(jl["point"][0]["re"].get<double>() == doctest::Approx(2.0));

    auto p = run({"domain", "project", "--point", R"([{"re":2},{"re":1}])", "--p", "1"});
    auto jp = json::parse(p.out);
    CHECK(jp["projected"][0]["re"].get<double>() == doctest::Approx(1.0));
    CHECK(jp["gamma_verdict"] != "outside");
}

TEST_CASE("group table and reflections dumps") {
    auto t = run({"group", "table", "--m", "3", "--p", "3", "--n", "2"});
    REQUIRE(t.code == 0);
    auto jt = json::parse(t.out);
    CHECK(jt["table"]["entries"].size() == 3 * 3);  // 3 irreps x 3 classes
    CHECK(jt["table"]["entries"][0].contains("irrep"));
    CHECK(jt["table"]["entries"][0].contains("class"));
    CHECK(jt["table"]["entries"][0]["value"].is_array());
    CHECK(jt["table"]["degrees"]["dim2:1"] == 2);

    auto r = run({"group", "reflections", "--m", "2", "--p", "1", "--n", "2"});
    auto jr = json::parse(r.out);
    CHECK(jr["count"] == 4);  // two transposition-like + two diagonal
}

TEST_CASE("module norms, mult, profile, divisibility") {
    auto n = run({"module", "norms", "--n", "2", "--lambda", "2", "--degree", "2"});
    auto jn = json::parse(n.out);
    REQUIRE(jn["norms"].size() == 6);
    CHECK(jn["norms"][4]["norm2"].get<double>() == doctest::Approx(0.25));      // z1 z2
    CHECK(jn["norms"][5]["norm2"].get<double>() == doctest::Approx(1.0 / 3));   // z1^2

    auto m = run({"module", "mult", "--group", "1,1,2", "--lambda", "1", "--degree", "3",
                  "--poly", R"({"vars":2,"terms":[{"exp":[1,0],"re":1}]})"});
    REQUIRE(m.code == 0);
    CHECK(json::parse(m.out)["source_degree_cap"] == 2);

    auto p = run({"module", "profile", "--group", "1,1,2", "--irrep", "sign", "--lambda",
                  "2", "--degree", "8", "--wdeg", "4"});
    auto jp = json::parse(p.out);
    CHECK(jp["minimal_degree"] == 1);
    CHECK(jp["profile"].size() == 3);  // 1, w2, w2^2
    CHECK(jp["profile"][1]["value"].get<double>() ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

    auto d = run({"module", "divisibility", "--group", "1,1,3", "--lambda", "1", "--degree",
                  "6"});
    auto jd = json::parse(d.out);
    CHECK(jd["divisible"] == true);
}

TEST_CASE("certify wold and subspace") {
    // symmetric scalar p=1 symbols for G(1,1,2)
    {
        std::ofstream f("wold_symbols.json");
        models::SymbolTuple S = models::SymbolTuple::zero(2, 1, 1);
        S.A[0][0](0, 0) = groups::cplx(0.3, 0.2);
        S.A[0][1](0, 0) = groups::cplx(0.3, -0.2);
        f << serialize::symbols_to_json(S).dump();
    }
    auto w = run({"certify", "wold", "--group", "1,1,2", "--symbols", "wold_symbols.json",
                  "--cutoff", "9", "--unitary-size", "3"});
    REQUIRE(w.code == 0);
    auto jw = json::parse(w.out);
    CHECK(jw["pass"] == true);
    CHECK(jw["recovered_unitary_dim"] == 3);

    {
        std::ofstream f("sub_theta.json");
        f << R"([[[[0.0,0.0]]],[[[1.0,0.0]]]])";  // Theta(z) = z, scalar
    }
    {
        std::ofstream f("sub_phi.json");
        models::SymbolTuple S = models::SymbolTuple::zero(2, 2, 1);
        S.A[0][0](0, 0) = 0.2;
        S.A[0][1](0, 0) = 0.1;
        S.A[0][2](0, 0) = 0.2;
        f << serialize::symbols_to_json(S).dump();
    }
    auto s = run({"certify", "subspace", "--theta", "sub_theta.json", "--phi", "sub_phi.json",
                  "--psi", "sub_phi.json"});
    REQUIRE(s.code == 0);
    CHECK(json::parse(s.out)["pass"] == true);
}

TEST_CASE("theta subcommands") {
    auto r = run({"theta", "map", "--m", "2", "--p", "1", "--n", "2"});
    auto j = json::parse(r.out);
    REQUIRE(j["components"].size() == 2);
    CHECK(j["components"][1]["terms"][0]["exp"] == json::array({2, 2}));

    auto e = run({"theta", "eval", "--m", "1", "--p", "1", "--n", "2", "--point",
                  "[0.5, 0.5]"});
    auto je = json::parse(e.out);
    CHECK(je["theta"][0]["re"].get<double>() == doctest::Approx(1.0));
    CHECK(je["theta"][1]["re"].get<double>() == doctest::Approx(0.25));

    auto jac = run({"theta", "jacobian", "--m", "3", "--p", "3", "--n", "2"});
    auto jj = json::parse(jac.out);
    CHECK(jj["jacobian"]["terms"].size() == 2);  // 3 z1^3 - 3 z2^3

    // Newton identity through the CLI
    auto ex = run({"theta", "express", "--m", "1", "--p", "1", "--n", "2", "--poly",
                   R"({"vars":2,"terms":[{"exp":[2,0],"re":1},{"exp":[0,2],"re":1}]})"});
    REQUIRE(ex.code == 0);
    auto jx = json::parse(ex.out);
    bool found_sq = false, found_lin = false;
    for (const auto& t : jx["expression"]["terms"]) {
        if (t["exp"] == json::array({2, 0})) found_sq = std::abs(t["re"].get<double>() - 1.0) < 1e-12;
        if (t["exp"] == json::array({0, 1})) found_lin = std::abs(t["re"].get<double>() + 2.0) < 1e-12;
    }
    CHECK(found_sq);
    CHECK(found_lin);
}

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "thetalab/experiments.hpp"
#include "thetalab/isotypic.hpp"
#include "thetalab/models.hpp"

using namespace thetalab;
using characters::CharacterTable;
using groups::cplx;
using groups::GroupSpec;
using poly::MultiPoly;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string summary)
        : number_(number), summary_(std::move(summary)),
          start_(std::chrono::steady_clock::now()) {}

    void record(bool ok, const std::string& detail) {
        if (!ok) {
            ok_ = false;
            if (first_failure_.empty()) first_failure_ = detail;
        }
        ++checks_;
    }

    void finish(double budget_seconds) {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                          start_)
                                .count();
        const bool in_budget = secs < budget_seconds;
        const bool pass = ok_ && in_budget;
        std::printf("%s criterion %d: %s [%d checks, %.2fs/%.0fs]%s%s\n",
                    pass ? "PASS" : "FAIL", number_, summary_.c_str(), checks_, secs,
                    budget_seconds, first_failure_.empty() ? "" : " -- ",
                    first_failure_.c_str());
        if (!in_budget && ok_) std::printf("     (over time budget)\n");
        if (!pass) ++failures;
    }

private:
    int number_;
    std::string summary_;
    std::chrono::steady_clock::time_point start_;
    bool ok_ = true;
    int checks_ = 0;
    std::string first_failure_;
};

void criterion1() {
    Criterion c(1, "reducing-submodule inequivalence numbers (closed form vs Gram)");
    auto r = experiments::prop_inequiv_check(2, 2.0);
    c.record(std::abs(r.lhs_closed - 0.25) < 1e-15, "lhs != 0.25");
    c.record(std::abs(r.rhs_closed - 1.0 / 3) < 1e-15, "rhs != 1/3");
    c.record(std::abs(r.lhs_gram - r.lhs_closed) <= 1e-12 * r.lhs_closed, "lhs gram route");
    c.record(std::abs(r.rhs_gram - r.rhs_closed) <= 1e-12 * r.rhs_closed, "rhs gram route");
    c.record(r.witness_found, "witness not found at lambda=2");
    auto h = experiments::prop_inequiv_check(2, 1.0);
    c.record(std::abs(h.lhs_closed - h.rhs_closed) <= 1e-15, "lambda=1 sides differ");
    c.record(!h.witness_found, "lambda=1 spurious witness");
    c.finish(1.0);
}

void criterion2() {
    Criterion c(2, "division-problem growth ratios (harmonic and m/2 laws)");
    auto b2 = experiments::unbdd_growth(2.0, 100);
    double harmonic = 0.0;
    bool all = true;
    for (int m = 1; m <= 100; ++m) {
        harmonic += 1.0 / m;
        if (std::abs(b2.ratios[m - 1] - harmonic) > 1e-12 * harmonic) all = false;
    }
    c.record(all, "lambda=2 ratio != H_m");
    c.record(std::abs(b2.ratios[99] - 5.1874) < 1e-4, "r(100) not approx 5.1874");
    c.record(b2.monotone_diverging, "lambda=2 not monotone diverging");
    auto b1 = experiments::unbdd_growth(1.0, 100);
    bool exact = true;
    for (int m = 1; m <= 100; ++m)
        if (b1.ratios[m - 1] != m / 2.0) exact = false;
    c.record(exact, "lambda=1 ratio != m/2 exactly");
    c.record(b1.monotone_diverging, "lambda=1 not monotone diverging");
    c.record(!b1.report.notes.empty(), "constant discrepancy not flagged");
    c.finish(1.0);
}

void criterion3() {
    Criterion c(3, "boundary characterization: three sub-verdicts agree on mixed samples");
    const GroupSpec specs[] = {GroupSpec(1, 1, 2), GroupSpec(1, 1, 3), GroupSpec(2, 2, 2),
                               GroupSpec(3, 3, 2)};
    int disagreements = 0;
    std::uint64_t seed = 20260801;
    for (const auto& spec : specs) {
        std::vector<domain::ThetaPoint> pts;
        auto torus = domain::sample_theta_image(spec, domain::SampleRegion::torus, 400, seed);
        auto disc = domain::sample_theta_image(spec, domain::SampleRegion::closed_polydisc,
                                               300, seed + 1);
        auto ext = domain::sample_exterior(spec, 300, seed + 2);
        pts.insert(pts.end(), torus.begin(), torus.end());
        pts.insert(pts.end(), disc.begin(), disc.end());
        pts.insert(pts.end(), ext.begin(), ext.end());
        for (const auto& pt : pts) {
            auto rep = domain::shilov_boundary_test(pt, 1e-9);
            if (!rep.agree) ++disagreements;
        }
        seed += 10;
    }
    c.record(disagreements == 0,
             "sub-verdict disagreements: " + std::to_string(disagreements));
    c.finish(30.0);
}

void criterion4() {
    Criterion c(4, "projection property: members map into the lower symmetrized polydisc");
    int violations = 0;
    std::uint64_t seed = 424242;
    for (int n : {2, 3, 4}) {
        std::vector<GroupSpec> specs{GroupSpec(1, 1, n), GroupSpec(2, 2, n)};
        if (n == 2) specs.push_back(GroupSpec(2, 1, 2));
        const int per_spec = 10000 / static_cast<int>(specs.size());
        for (const auto& spec : specs) {
            auto pts = domain::sample_theta_image(
                spec, domain::SampleRegion::closed_polydisc, per_spec, seed++);
            auto boundary =
                domain::sample_theta_image(spec, domain::SampleRegion::torus, 50, seed++);
            pts.insert(pts.end(), boundary.begin(), boundary.end());
            for (const auto& pt : pts) {
                if (domain::membership(pt, 1e-9).verdict == domain::Membership::outside)
                    continue;
                auto proj = domain::gamma_membership(domain::pi_projection(pt), 1e-9);
                if (proj.verdict == domain::Membership::outside) ++violations;
            }
        }
    }
    c.record(violations == 0, "violations: " + std::to_string(violations));
    c.finish(30.0);
}

void criterion5() {
    Criterion c(5, "quotient-unitary round trip: relations and boundary spectrum");
    const std::pair<int, int> mps[] = {{1, 1}, {2, 1}, {2, 2}, {3, 3}};
    std::uint64_t seed = 555;
    for (int n : {2, 3}) {
        for (auto [m, p] : mps) {
            GroupSpec spec(m, p, n);
            for (int t = 0; t < 100; ++t) {
                auto fam = models::CommutingUnitaryFamily::random(n, 4, seed++);
                auto T = models::theta_unitary_from_unitaries(fam, spec);
                auto rep = models::verify_theta_unitary(T, spec, 1e-11, seed);
                if (!rep.pass) {
                    c.record(false, "family failed for G(" + std::to_string(m) + "," +
                                        std::to_string(p) + "," + std::to_string(n) + ")");
                    continue;
                }
                c.record(rep.unitarity_residual <= 1e-11 &&
                             rep.adjoint_relation_residual <= 1e-11 &&
                             rep.commutation_residual <= 1e-11,
                         "residual over 1e-11");
                c.record(rep.spectrum_on_boundary, "joint eigenvalue off the boundary");
                c.record(rep.gamma_contraction, "projected spectrum outside");
            }
        }
    }
    c.finish(10.0);
}

void criterion6() {
    Criterion c(6, "isotypic decomposition on the degree-12 window");
    for (const GroupSpec& spec : {GroupSpec(1, 1, 2), GroupSpec(1, 1, 3), GroupSpec(2, 2, 2),
                                  GroupSpec(3, 3, 2)}) {
        auto table = CharacterTable::build(spec);
        auto theta = poly::theta_map(spec);
        for (double lambda : {1.0, 2.0}) {
            auto trunc = bergman::ModuleTruncation::build(spec.n, lambda, 12);
            const int dim = trunc.size();
            Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
            std::vector<Eigen::MatrixXcd> isotype;
            int nonzero_blocks = 0;
            for (int r = 0; r < static_cast<int>(table.irreps().size()); ++r) {
                auto P = isotypic::projection_matrix(table, r, trunc);
                c.record((P.op.mat * P.op.mat - P.op.mat).norm() <= 1e-10, "P^2 != P");
                c.record((P.op.mat - P.op.mat.adjoint()).norm() <= 1e-10, "P* != P");
                isotype.push_back(P.op.mat);
                for (int i = 0; i < table.irreps()[r].degree; ++i) {
                    auto Pii = isotypic::projection_ij_matrix(table, r, i, i, trunc);
                    sum += Pii.op.mat;
                    if (Pii.op.mat.norm() > 1e-8) ++nonzero_blocks;
                    c.record((Pii.op.mat * Pii.op.mat - Pii.op.mat).norm() <= 1e-10,
                             "Pii not idempotent");
                }
                for (int k = 0; k < spec.n; ++k) {
                    auto M = isotypic::mult_operator_matrix(theta.components[k], trunc);
                    const int src = static_cast<int>(M.mat.cols());
                    double comm = (M.mat * isotype[r].topLeftCorner(src, src) -
                                   isotype[r] * M.mat)
                                      .norm();
                    c.record(comm <= 1e-10, "module action does not commute with P");
                }
            }
            for (size_t a = 0; a < isotype.size(); ++a)
                for (size_t b = a + 1; b < isotype.size(); ++b)
                    c.record((isotype[a] * isotype[b]).norm() <= 1e-10,
                             "isotypes not orthogonal");
            c.record((sum - Eigen::MatrixXcd::Identity(dim, dim)).norm() <= 1e-10,
                     "sum of diagonal blocks != I");
            int expected = 0;
            for (const auto& lbl : table.irreps()) expected += lbl.degree;
            c.record(nonzero_blocks == expected, "nonzero block count");

            auto div = isotypic::sign_isotype_divisibility(table, trunc, theta, 1e-10);
            c.record(div.ok, "sign isotype not divisible by the Jacobian");
        }
    }
    c.finish(60.0);
}

void criterion7() {
    Criterion c(7, "pure-isometry models: p=2 family, interior relations, Wold splits");
    std::mt19937_64 rng(777);
    std::normal_distribution<double> g(0.0, 0.35);
    for (int t = 0; t < 20; ++t) {
        models::SymbolTuple S = models::SymbolTuple::zero(2, 2, 2);
        Eigen::MatrixXcd A0(2, 2), A1(2, 2);
        A0 << cplx(g(rng), g(rng)), cplx(g(rng), g(rng)), cplx(g(rng), g(rng)),
            cplx(g(rng), g(rng));
        cplx offd(g(rng), g(rng));
        A1 << cplx(g(rng), 0.0), offd, std::conj(offd), cplx(g(rng), 0.0);
        S.A[0][0] = A0;
        S.A[0][1] = A1;
        S.A[0][2] = A0.adjoint();
        c.record(models::check_symmetry(S, 1e-12).pass, "symmetry check failed");
        c.record(models::check_commutation(S, 1e-12).pass, "commutation check failed");
        auto T = models::build_toeplitz(S, 20);
        c.record(models::toeplitz_interior_relation_residual(T) <= 1e-12,
                 "interior relation residual over 1e-12");
    }

    std::uniform_int_distribution<int> usize(1, 4);
    for (int t = 0; t < 50; ++t) {
        const bool dihedral = t % 2 == 0;
        GroupSpec spec = dihedral ? GroupSpec(2, 2, 2) : GroupSpec(1, 1, 2);
        models::WoldModel model;
        model.unitary_part =
            models::CommutingUnitaryFamily::random(2, usize(rng), 9000 + t);
        if (dihedral) {
            model.pure_part = models::SymbolTuple::zero(2, 2, 1);
            cplx a(g(rng) * 0.3, g(rng) * 0.3);
            model.pure_part.A[0][0](0, 0) = a;
            model.pure_part.A[0][1](0, 0) = cplx(g(rng) * 0.3, 0.0);
            model.pure_part.A[0][2](0, 0) = std::conj(a);
        } else {
            model.pure_part = models::SymbolTuple::zero(2, 1, 1);
            cplx a(g(rng) * 0.4, g(rng) * 0.4);
            model.pure_part.A[0][0](0, 0) = a;
            model.pure_part.A[0][1](0, 0) = std::conj(a);
        }
        auto rep = models::wold_verify(model, spec, 10);
        c.record(rep.pass && rep.recovered_unitary_dim == rep.declared_unitary_dim,
                 "wold split not recovered (model " + std::to_string(t) + ")");
    }
    c.finish(30.0);
}

void criterion8() {
    Criterion c(8, "equivalence invariants: trace words and moment profiles");
    std::mt19937_64 rng(888);
    std::normal_distribution<double> g(0.0, 0.5);
    auto random_symbols = [&](int seed_shift) {
        std::mt19937_64 r2(1000 + seed_shift);
        std::normal_distribution<double> h(0.0, 0.5);
        models::SymbolTuple S = models::SymbolTuple::zero(2, 2, 2);
        Eigen::MatrixXcd A0(2, 2), A1(2, 2);
        A0 << cplx(h(r2), h(r2)), cplx(h(r2), h(r2)), cplx(h(r2), h(r2)), cplx(h(r2), h(r2));
        cplx offd(h(r2), h(r2));
        A1 << cplx(h(r2), 0.0), offd, std::conj(offd), cplx(h(r2), 0.0);
        S.A[0][0] = A0;
        S.A[0][1] = A1;
        S.A[0][2] = A0.adjoint();
        return S;
    };
    for (int t = 0; t < 10; ++t) {
        auto S1 = random_symbols(t);
        std::mt19937_64 r3(2000 + t);
        std::normal_distribution<double> h(0.0, 1.0);
        Eigen::MatrixXcd X(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) X(i, j) = cplx(h(r3), h(r3));
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(X);
        Eigen::MatrixXcd U = qr.householderQ() * Eigen::MatrixXcd::Identity(2, 2);
        auto S2 = S1;
        for (auto& per_i : S2.A)
            for (auto& M : per_i) M = U * M * U.adjoint();
        auto res = models::word_trace_equivalence(S1, S2, 6);
        c.record(res.consistent, "conjugated pair distinguished");
    }
    for (int t = 0; t < 10; ++t) {
        auto S1 = random_symbols(50 + t);
        auto S2 = S1;
        if (t % 2 == 0) {
            S2.A[0][1] += Eigen::MatrixXcd::Identity(2, 2) * 0.25;  // trace shifts
        } else {
            S2.A[0][0] = S2.A[0][0].transpose().eval();  // joint structure changes
            S2.A[0][2] = S2.A[0][0].adjoint();
        }
        auto res = models::word_trace_equivalence(S1, S2, 6);
        c.record(!res.consistent, "constructed pair not distinguished");
    }

    for (const GroupSpec& spec : {GroupSpec(1, 1, 2), GroupSpec(1, 1, 3), GroupSpec(2, 2, 2)}) {
        auto res = experiments::moment_profile_inequivalence(spec, 2.0, "triv", "sign", 4);
        c.record(res.witness_found, "no witness at lambda=2");
    }
    auto hardy = experiments::moment_profile_inequivalence(GroupSpec(1, 1, 2), 1.0, "triv",
                                                           "sign", 4);
    c.record(!hardy.witness_found && hardy.inconclusive &&
                 hardy.report.verdict == "inconclusive-by-this-invariant",
             "Hardy-case pair not reported inconclusive");
    c.finish(60.0);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}

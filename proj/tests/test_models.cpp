#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "thetalab/models.hpp"

using namespace thetalab;
using groups::cplx;
using groups::GroupSpec;
using models::CommutingUnitaryFamily;
using models::SymbolTuple;

namespace {

SymbolTuple hermitian_p2_example(cplx a01, double h0, double h1, double scale) {
    // Phi = A0 + A1 z + A0* z^2 with A1 Hermitian (2x2)
    SymbolTuple S = SymbolTuple::zero(2, 2, 2);
    Eigen::MatrixXcd A0(2, 2), A1(2, 2);
    A0 << cplx(0.0), a01, cplx(0.0), cplx(0.0);
    A1 << cplx(h0), cplx(0.3, 0.1), cplx(0.3, -0.1), cplx(h1);
    S.A[0][0] = scale * A0;
    S.A[0][1] = scale * A1;
    S.A[0][2] = scale * A0.adjoint();
    return S;
}

Eigen::MatrixXcd random_unitary(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd X(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) X(i, j) = cplx(g(rng), g(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(X);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(d, d);
}

}  // namespace

TEST_CASE("theta unitaries from scalars") {
    CommutingUnitaryFamily fam;
    fam.diagonals.push_back(Eigen::VectorXcd::Constant(1, cplx(1.0)));
    fam.diagonals.push_back(Eigen::VectorXcd::Constant(1, cplx(0.0, 1.0)));
    auto T = models::theta_unitary_from_unitaries(fam, GroupSpec(1, 1, 2));
    CHECK(std::abs(T[0](0, 0) - cplx(1.0, 1.0)) < 1e-15);
    CHECK(std::abs(T[1](0, 0) - cplx(0.0, 1.0)) < 1e-15);
    // oracle: conj(T2) T1 = 1 - i = conj(T1)
    cplx lhs = std::conj(T[1](0, 0)) * T[0](0, 0);
    CHECK(std::abs(lhs - std::conj(T[0](0, 0))) < 1e-15);
}

TEST_CASE("theta unitaries from the identity family are binomial") {
    for (GroupSpec spec : {GroupSpec(1, 1, 3), GroupSpec(2, 1, 3), GroupSpec(2, 2, 2)}) {
        CommutingUnitaryFamily fam;
        for (int i = 0; i < spec.n; ++i)
            fam.diagonals.push_back(Eigen::VectorXcd::Constant(3, cplx(1.0)));
        auto T = models::theta_unitary_from_unitaries(fam, spec);
        double binom = spec.n;  // C(n,1)
        for (int j = 1; j < spec.n; ++j) {
            CHECK(std::abs(T[j - 1](0, 0) - cplx(binom)) < 1e-13);
            binom *= static_cast<double>(spec.n - j) / (j + 1);
        }
        CHECK(std::abs(T[spec.n - 1](1, 1) - cplx(1.0)) < 1e-15);
    }
}

TEST_CASE("random diagonal families satisfy the adjoint relations") {
    for (GroupSpec spec : {GroupSpec(1, 1, 3), GroupSpec(2, 1, 3), GroupSpec(3, 3, 2),
                           GroupSpec(2, 2, 3)}) {
        for (int trial = 0; trial < 5; ++trial) {
            auto fam = CommutingUnitaryFamily::random(spec.n, 5, 1000 + trial);
            auto T = models::theta_unitary_from_unitaries(fam, spec);
            // oracle: direct matrix arithmetic
            Eigen::MatrixXcd tn_p = Eigen::MatrixXcd::Identity(5, 5);
            for (int k = 0; k < spec.p; ++k) tn_p *= T[spec.n - 1];
            for (int j = 1; j <= spec.n - 1; ++j)
                CHECK((tn_p.adjoint() * T[j - 1] - T[spec.n - j - 1].adjoint()).norm() < 1e-12);
            auto rep = models::verify_theta_unitary(T, spec);
            CHECK(rep.pass);
            CHECK(rep.unitarity_residual < 1e-12);
            CHECK(rep.gamma_contraction);
            CHECK(rep.spectrum_on_boundary);
        }
    }
}

TEST_CASE("verification failures are detected") {
    GroupSpec spec(1, 1, 2);
    auto fam = CommutingUnitaryFamily::random(2, 4, 77);
    auto T = models::theta_unitary_from_unitaries(fam, spec);

    auto scaled = T;
    scaled[1] *= 0.9;
    auto rep1 = models::verify_theta_unitary(scaled, spec);
    CHECK_FALSE(rep1.pass);
    CHECK(rep1.unitarity_residual > 1e-3);

    auto perturbed = T;
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g(0.0, 1e-3);
    Eigen::MatrixXcd noise(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) noise(i, j) = cplx(g(rng), g(rng));
    perturbed[0] += noise;
    auto rep2 = models::verify_theta_unitary(perturbed, spec);
    CHECK_FALSE(rep2.pass);
    // oracle: residual of the adjoint relation computed directly
    double direct =
        (perturbed[1].adjoint() * perturbed[0] - perturbed[0].adjoint()).norm();
    CHECK(rep2.adjoint_relation_residual == doctest::Approx(direct).epsilon(1e-9));
    CHECK(rep2.adjoint_relation_residual > 1e-4);
}

TEST_CASE("symbol symmetry check") {
    auto good = hermitian_p2_example({0.4, -0.2}, 0.5, -0.3, 1.0);
    CHECK(models::check_symmetry(good).pass);
    CHECK(models::check_commutation(good).pass);  // single symbol: identically zero

    auto bad = good;
    bad.A[0][1](0, 1) = cplx(0.3, 0.1);
    bad.A[0][1](1, 0) = cplx(0.3, 0.1);  // not Hermitian
    CHECK_FALSE(models::check_symmetry(bad).pass);

    CHECK(models::check_symmetry(SymbolTuple::zero(3, 2, 2)).pass);
    CHECK(models::check_commutation(SymbolTuple::zero(3, 2, 2)).pass);
}

TEST_CASE("commutation check") {
    // scalar coefficients always commute
    SymbolTuple scal = SymbolTuple::zero(4, 1, 1);
    for (auto& per_i : scal.A)
        for (auto& M : per_i) M(0, 0) = cplx(0.3, -0.8);
    CHECK(models::check_commutation(scal).pass);

    // diagonal coefficients commute
    SymbolTuple diag = SymbolTuple::zero(3, 2, 3);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& per_i : diag.A)
        for (auto& M : per_i)
            for (int t = 0; t < 3; ++t) M(t, t) = cplx(u(rng), u(rng));
    CHECK(models::check_commutation(diag).pass);

    // generic pair fails; oracle: an explicit nonzero commutator
    SymbolTuple generic = SymbolTuple::zero(3, 1, 2);
    generic.A[0][0] << cplx(1.0), cplx(2.0), cplx(0.0), cplx(-1.0);
    generic.A[1][0] << cplx(0.0), cplx(1.0), cplx(1.0), cplx(0.0);
    Eigen::MatrixXcd comm =
        generic.A[0][0] * generic.A[1][0] - generic.A[1][0] * generic.A[0][0];
    CHECK(comm.norm() > 0.5);
    CHECK_FALSE(models::check_commutation(generic).pass);
}

TEST_CASE("gamma contraction falsifier") {
    // Phi(z) = z as a symmetric p = 2 symbol, scalar: no violation
    SymbolTuple S = SymbolTuple::zero(2, 2, 1);
    S.A[0][1](0, 0) = 1.0;
    auto rep = models::gamma_contraction_falsifier(S, 64, 12, 42);
    CHECK_FALSE(rep.violation_found);

    // constant 10 I: certified violation (gamma_1 * 10 = 5 > sup |w| = 1)
    SymbolTuple big = SymbolTuple::zero(2, 2, 2);
    big.A[0][0] = 5.0 * Eigen::MatrixXcd::Identity(2, 2);
    big.A[0][1] = 10.0 * Eigen::MatrixXcd::Identity(2, 2);  // keep symmetric-ish
    big.A[0][2] = 5.0 * Eigen::MatrixXcd::Identity(2, 2);
    auto rep2 = models::gamma_contraction_falsifier(big, 16, 4, 42);
    CHECK(rep2.violation_found);
    CHECK(rep2.worst_margin > 1.0);

    auto rep3 = models::gamma_contraction_falsifier(SymbolTuple::zero(2, 2, 2), 16, 4, 42);
    CHECK_FALSE(rep3.violation_found);
}

TEST_CASE("toeplitz truncations") {
    // Phi = z scalar, p = 1: the block shift itself
    SymbolTuple S = SymbolTuple::zero(2, 1, 1);
    S.A[0][1](0, 0) = 1.0;
    auto T = models::build_toeplitz(S, 8);
    CHECK((T.t_phi[0] - T.t_z).norm() < 1e-15);

    // the p = 2 Hermitian example: interior relations exactly zero
    auto H = hermitian_p2_example({0.7, 0.1}, 0.2, -0.4, 0.5);
    auto TH = models::build_toeplitz(H, 12);
    CHECK(models::toeplitz_interior_relation_residual(TH) < 1e-14);

    // banded structure with bandwidth p
    for (int g = 0; g <= 12; ++g)
        for (int h = 0; h <= 12; ++h) {
            auto blk = TH.t_phi[0].block(2 * g, 2 * h, 2, 2);
            if (g - h < 0 || g - h > 2) CHECK(blk.norm() == 0.0);
        }

    // commuting symbols: zero interior commutators (n = 3, diagonal data)
    SymbolTuple diag = SymbolTuple::zero(3, 1, 2);
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int l = 0; l <= 1; ++l) {
        for (int t = 0; t < 2; ++t) diag.A[0][l](t, t) = cplx(u(rng), u(rng));
    }
    // symmetry partner: A_l^{(2)} = A_{p-l}^{(1)*}
    for (int l = 0; l <= 1; ++l) diag.A[1][l] = diag.A[0][1 - l].adjoint();
    REQUIRE(models::check_symmetry(diag).pass);
    REQUIRE(models::check_commutation(diag).pass);
    auto TD = models::build_toeplitz(diag, 10);
    CHECK(models::toeplitz_interior_commutation_residual(TD) < 1e-14);
    CHECK(models::toeplitz_interior_relation_residual(TD) < 1e-14);

    CHECK_THROWS_AS(models::build_toeplitz(H, 3), PreconditionFailed);
}

TEST_CASE("word traces: unitary conjugation is never distinguished") {
    for (int trial = 0; trial < 10; ++trial) {
        auto S1 = hermitian_p2_example({0.3 + 0.05 * trial, -0.2}, 0.4, -0.1 * trial, 0.8);
        Eigen::MatrixXcd U = random_unitary(2, 500 + trial);
        SymbolTuple S2 = S1;
        for (auto& per_i : S2.A)
            for (auto& M : per_i) M = U * M * U.adjoint();
        auto res = models::word_trace_equivalence(S1, S2, 6);
        CHECK(res.consistent);
        CHECK(res.max_matched_deviation < 1e-10);
    }
}

TEST_CASE("word traces distinguish constructed inequivalent tuples") {
    // scalar 1 vs -1: length-1 word
    SymbolTuple a = SymbolTuple::zero(2, 1, 1), b = a;
    a.A[0][0](0, 0) = 1.0;
    b.A[0][0](0, 0) = -1.0;
    auto res = models::word_trace_equivalence(a, b, 6);
    CHECK_FALSE(res.consistent);
    CHECK(res.distinguishing_word.size() == 1);

    // equal single-letter spectra, different joint structure
    SymbolTuple c = SymbolTuple::zero(2, 1, 2), d = c;
    c.A[0][0] << cplx(1.0), cplx(0.0), cplx(0.0), cplx(-1.0);
    c.A[0][1] << cplx(0.0), cplx(1.0), cplx(1.0), cplx(0.0);
    d.A[0][0] = c.A[0][0];
    d.A[0][1] << cplx(1.0), cplx(0.0), cplx(0.0), cplx(-1.0);
    // oracle: tr(A0 A1) differs (0 vs 2) while single-letter traces agree
    CHECK(std::abs((c.A[0][0] * c.A[0][1]).trace() -
                   (d.A[0][0] * d.A[0][1]).trace()) > 1.0);
    CHECK(std::abs(c.A[0][1].trace() - d.A[0][1].trace()) < 1e-15);
    auto res2 = models::word_trace_equivalence(c, d, 4);
    CHECK_FALSE(res2.consistent);
    CHECK(res2.distinguishing_word.size() <= 2);

    CHECK_THROWS_AS(
        models::word_trace_equivalence(a, SymbolTuple::zero(2, 1, 2), 3), ShapeMismatch);
}

TEST_CASE("wold verification") {
    GroupSpec spec(1, 1, 2);

    // unitary-only model
    models::WoldModel uo;
    uo.has_pure = false;
    uo.unitary_part = CommutingUnitaryFamily::random(2, 3, 21);
    auto rep = models::wold_verify(uo, spec, 8);
    CHECK(rep.pass);
    CHECK(rep.recovered_unitary_dim == 3);
    CHECK(rep.subspace_mismatch < 1e-12);

    // shift-only model: Phi = a + conj(a) z, |a| <= 1/2
    models::WoldModel so;
    so.has_unitary = false;
    so.pure_part = SymbolTuple::zero(2, 1, 1);
    so.pure_part.A[0][0](0, 0) = cplx(0.3, 0.2);
    so.pure_part.A[0][1](0, 0) = cplx(0.3, -0.2);
    auto rep2 = models::wold_verify(so, spec, 9);
    CHECK(rep2.pass);
    CHECK(rep2.recovered_unitary_dim == 0);

    // mixed 2 + scalar shift
    models::WoldModel mixed;
    mixed.unitary_part = CommutingUnitaryFamily::random(2, 2, 22);
    mixed.pure_part = so.pure_part;
    auto rep3 = models::wold_verify(mixed, spec, 9);
    CHECK(rep3.pass);
    CHECK(rep3.declared_unitary_dim == 2);
    CHECK(rep3.recovered_unitary_dim == 2);
    CHECK(rep3.subspace_mismatch < 1e-10);
    CHECK(rep3.pure_block_ok);
}

TEST_CASE("invariant subspace certificates") {
    // valid symbols: commutation is vacuous for n = 2, symmetry by design
    auto phi = hermitian_p2_example({0.2, -0.1}, 0.15, 0.1, 0.4);

    // Theta = I, Psi = Phi
    auto rep = models::invariant_subspace_verify(models::PolyMatrix::identity(2), phi, phi,
                                                 24, 97);
    CHECK(rep.pass);
    CHECK(rep.inner_residual < 1e-13);
    CHECK(rep.intertwine_residual < 1e-13);

    // Theta = z I (scalar inner), scalar Phi
    SymbolTuple ps = SymbolTuple::zero(2, 2, 1);
    ps.A[0][0](0, 0) = cplx(0.2, 0.0);
    ps.A[0][1](0, 0) = cplx(0.3, 0.0);
    ps.A[0][2](0, 0) = cplx(0.2, 0.0);
    models::PolyMatrix zI;
    zI.coeffs = {Eigen::MatrixXcd::Zero(1, 1), Eigen::MatrixXcd::Identity(1, 1)};
    auto rep2 = models::invariant_subspace_verify(zI, ps, ps, 24, 98);
    CHECK(rep2.pass);

    // Theta = diag(z, 1) with a non-diagonal Phi: intertwining fails
    models::PolyMatrix dz;
    Eigen::MatrixXcd C0 = Eigen::MatrixXcd::Zero(2, 2), C1 = Eigen::MatrixXcd::Zero(2, 2);
    C0(1, 1) = 1.0;
    C1(0, 0) = 1.0;
    dz.coeffs = {C0, C1};
    auto rep3 = models::invariant_subspace_verify(dz, phi, phi, 24, 99);
    CHECK_FALSE(rep3.pass);
    CHECK(rep3.intertwine_residual > 1e-3);
    CHECK_FALSE(rep3.witness.empty());
    // oracle: explicit coefficient of the polynomial-matrix difference
    Eigen::MatrixXcd diff1 =
        phi.A[0][0] * C1 + phi.A[0][1] * C0 - (C0 * phi.A[0][1] + C1 * phi.A[0][0]);
    CHECK(diff1.norm() > 1e-3);

    CHECK_THROWS_AS(models::invariant_subspace_verify(models::PolyMatrix::identity(3), phi,
                                                      phi, 4, 1),
                    DimensionMismatch);
}

#include "thetalab/models.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "thetalab/poly.hpp"

namespace thetalab::models {

namespace {

double opnorm(const Eigen::MatrixXcd& M) {
    if (M.size() == 0) return 0.0;
    return M.jacobiSvd().singularValues()(0);
}

cplx pow_int(cplx z, int k) {
    cplx acc = 1.0;
    for (int i = 0; i < k; ++i) acc *= z;
    return acc;
}

}  // namespace

double CommutingUnitaryFamily::unimodularity_residual() const {
    double worst = 0.0;
    for (const auto& d : diagonals)
        for (int i = 0; i < d.size(); ++i) worst = std::max(worst, std::abs(std::abs(d(i)) - 1.0));
    return worst;
}

CommutingUnitaryFamily CommutingUnitaryFamily::random(int n, int r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 2.0 * M_PI);
    CommutingUnitaryFamily fam;
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXcd d(r);
        for (int t = 0; t < r; ++t) d(t) = std::polar(1.0, unif(rng));
        fam.diagonals.push_back(std::move(d));
    }
    return fam;
}

std::vector<Eigen::MatrixXcd> theta_unitary_from_unitaries(const CommutingUnitaryFamily& fam,
                                                           const GroupSpec& spec) {
    const int n = spec.n;
    if (fam.n() != n) throw DimensionMismatch("theta_unitary_from_unitaries: family size != n");
    if (fam.unimodularity_residual() > 1e-12)
        throw PreconditionFailed("theta_unitary_from_unitaries: diagonals not unimodular");
    const int r = fam.size();
    std::vector<Eigen::MatrixXcd> T(n, Eigen::MatrixXcd::Zero(r, r));
    for (int t = 0; t < r; ++t) {
        std::vector<cplx> powers(n);
        cplx prod = 1.0;
        for (int i = 0; i < n; ++i) {
            powers[i] = pow_int(fam.diagonals[i](t), spec.m);
            prod *= fam.diagonals[i](t);
        }
        auto e = poly::elementary_symmetric_all(powers);
        for (int j = 1; j < n; ++j) T[j - 1](t, t) = e[j];
        T[n - 1](t, t) = pow_int(prod, spec.q());
    }
    return T;
}

UnitaryVerification verify_theta_unitary(const std::vector<Eigen::MatrixXcd>& T,
                                         const GroupSpec& spec, double tol, std::uint64_t seed) {
    UnitaryVerification rep;
    const int n = spec.n;
    if (static_cast<int>(T.size()) != n) throw DimensionMismatch("verify_theta_unitary: count");
    const int r = static_cast<int>(T[0].rows());
    for (const auto& M : T)
        if (M.rows() != r || M.cols() != r)
            throw DimensionMismatch("verify_theta_unitary: sizes differ");

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            rep.commutation_residual =
                std::max(rep.commutation_residual, (T[i] * T[j] - T[j] * T[i]).norm());
    for (int i = 0; i < n; ++i)
        rep.normality_residual = std::max(
            rep.normality_residual, (T[i] * T[i].adjoint() - T[i].adjoint() * T[i]).norm());
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(r, r);
    rep.unitarity_residual = std::max((T[n - 1].adjoint() * T[n - 1] - I).norm(),
                                      (T[n - 1] * T[n - 1].adjoint() - I).norm());
    Eigen::MatrixXcd tn_p = I;
    for (int k = 0; k < spec.p; ++k) tn_p = tn_p * T[n - 1];
    for (int j = 1; j <= n - 1; ++j)
        rep.adjoint_relation_residual =
            std::max(rep.adjoint_relation_residual,
                     (tn_p.adjoint() * T[j - 1] - T[n - j - 1].adjoint()).norm());

    if (rep.commutation_residual > std::max(tol, 1e-8) * std::max(1.0, opnorm(T[0]))) {
        rep.failure = "NotCommuting";
        return rep;
    }
    if (rep.normality_residual > std::max(tol, 1e-8) * std::max(1.0, opnorm(T[0]))) {
        rep.failure = "NotNormal";
        return rep;
    }

    // joint diagonalization of the commuting normal family via the Schur
    // form of a random combination
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    double offdiag = 1e300;
    Eigen::MatrixXcd Q;
    for (int attempt = 0; attempt < 8 && offdiag > 1e-10; ++attempt) {
        Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(r, r);
        for (int i = 0; i < n; ++i) R += cplx(unif(rng), unif(rng)) * T[i];
        Eigen::ComplexSchur<Eigen::MatrixXcd> schur(R);
        offdiag = 0.0;
        for (int i = 0; i < n; ++i) {
            Eigen::MatrixXcd D = schur.matrixU().adjoint() * T[i] * schur.matrixU();
            Eigen::MatrixXcd offpart = D;
            offpart.diagonal().setZero();
            offdiag = std::max(offdiag, offpart.norm());
        }
        if (offdiag <= 1e-10) Q = schur.matrixU();
    }
    rep.joint_diagonalization_residual = offdiag;
    if (offdiag > 1e-10) {
        rep.failure = "joint diagonalization failed";
        return rep;
    }

    rep.gamma_contraction = true;
    rep.spectrum_on_boundary = true;
    const double shilov_tol = 1e-9;
    std::vector<Eigen::MatrixXcd> D(n);
    for (int i = 0; i < n; ++i) D[i] = Q.adjoint() * T[i] * Q;
    for (int t = 0; t < r; ++t) {
        std::vector<cplx> ev(n);
        for (int i = 0; i < n; ++i) ev[i] = D[i](t, t);
        rep.joint_eigenvalues.push_back(ev);
        domain::ThetaPoint pt{ev, spec.p};
        auto proj = domain::gamma_membership(domain::pi_projection(pt), shilov_tol);
        if (proj.verdict == domain::Membership::outside) rep.gamma_contraction = false;
        if (!domain::shilov_boundary_test(pt, shilov_tol).verdict)
            rep.spectrum_on_boundary = false;
    }

    const double worst = std::max({rep.unitarity_residual, rep.adjoint_relation_residual,
                                   rep.commutation_residual, rep.normality_residual});
    rep.pass = worst <= tol && rep.gamma_contraction && rep.spectrum_on_boundary;
    if (!rep.pass && rep.failure.empty()) rep.failure = "residuals or spectrum checks failed";
    return rep;
}

Eigen::MatrixXcd SymbolTuple::eval(int i, cplx z) const {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(r, r);
    cplx zp = 1.0;
    for (int l = 0; l <= p; ++l) {
        acc += zp * A[i - 1][l];
        zp *= z;
    }
    return acc;
}

SymbolTuple SymbolTuple::zero(int n, int p, int r) {
    SymbolTuple S;
    S.n = n;
    S.p = p;
    S.r = r;
    S.A.assign(n - 1, std::vector<Eigen::MatrixXcd>(p + 1, Eigen::MatrixXcd::Zero(r, r)));
    return S;
}

CheckResult check_symmetry(const SymbolTuple& S, double tol) {
    CheckResult res;
    for (int i = 1; i <= S.n - 1; ++i)
        for (int l = 0; l <= S.p; ++l)
            res.residual = std::max(
                res.residual, (S.A[i - 1][l].adjoint() - S.A[S.n - i - 1][S.p - l]).norm());
    res.pass = res.residual <= tol;
    return res;
}

CheckResult check_commutation(const SymbolTuple& S, double tol) {
    CheckResult res;
    for (int i = 1; i <= S.n - 1; ++i)
        for (int j = 1; j <= S.n - 1; ++j)
            for (int k = 0; k <= 2 * S.p; ++k) {
                Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(S.r, S.r);
                for (int l = std::max(0, k - S.p); l <= std::min(k, S.p); ++l)
                    acc += S.A[i - 1][l] * S.A[j - 1][k - l] - S.A[j - 1][k - l] * S.A[i - 1][l];
                res.residual = std::max(res.residual, acc.norm());
            }
    res.pass = res.residual <= tol;
    return res;
}

FalsifierReport gamma_contraction_falsifier(const SymbolTuple& S, int torus_samples,
                                            int poly_samples, std::uint64_t seed, int grid_size) {
    const int nv = S.n - 1;  // variables of the test polynomials
    FalsifierReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    // test polynomials: the coordinates plus random sparse ones
    std::vector<poly::MultiPoly> polys;
    for (int i = 0; i < nv; ++i) polys.push_back(poly::MultiPoly::variable(nv, i));
    for (int s = 0; s < poly_samples; ++s) {
        poly::MultiPoly f(nv);
        int terms = 1 + static_cast<int>(unif(rng) * 4);
        for (int t = 0; t < terms; ++t) {
            poly::Monomial e(nv);
            for (int i = 0; i < nv; ++i) e[i] = static_cast<int>(unif(rng) * 3);
            f.add_term(e, std::polar(unif(rng), 2.0 * M_PI * unif(rng)));
        }
        if (!f.is_zero()) polys.push_back(std::move(f));
    }

    // grid estimate of sup over the distinguished boundary of Gamma_{n-1},
    // certified upward by a Lipschitz margin
    const int per_axis = std::max(8, static_cast<int>(std::round(
                                          std::pow(static_cast<double>(grid_size),
                                                   1.0 / std::max(1, nv)))));
    std::vector<double> bounds;
    for (const auto& f : polys) {
        // compose with the symmetrization map to get a torus polynomial
        std::vector<poly::MultiPoly> smap;
        for (int i = 1; i <= nv; ++i) smap.push_back(poly::elementary_symmetric_poly(nv, i));
        poly::MultiPoly g = f.compose(smap);
        double lip = 0.0;
        for (const auto& [e, c] : g.terms()) lip += std::abs(c) * poly::total_degree(e);
        double sup = 0.0;
        std::vector<int> idx(nv, 0);
        while (true) {
            std::vector<cplx> w(nv);
            for (int i = 0; i < nv; ++i) w[i] = std::polar(1.0, 2.0 * M_PI * idx[i] / per_axis);
            sup = std::max(sup, std::abs(g.eval(w)));
            int i = nv - 1;
            while (i >= 0 && idx[i] == per_axis - 1) idx[i--] = 0;
            if (i < 0) break;
            ++idx[i];
        }
        bounds.push_back(sup + lip * M_PI / per_axis);
    }

    for (int s = 0; s < torus_samples; ++s) {
        const cplx z = std::polar(1.0, 2.0 * M_PI * unif(rng));
        std::vector<Eigen::MatrixXcd> scaled;
        for (int i = 1; i <= nv; ++i)
            scaled.push_back((static_cast<double>(S.n - i) / S.n) * S.eval(i, z));
        for (size_t fi = 0; fi < polys.size(); ++fi) {
            Eigen::MatrixXcd val = Eigen::MatrixXcd::Zero(S.r, S.r);
            for (const auto& [e, c] : polys[fi].terms()) {
                Eigen::MatrixXcd term = c * Eigen::MatrixXcd::Identity(S.r, S.r);
                for (int i = 0; i < nv; ++i)
                    for (int k = 0; k < e[i]; ++k) term = term * scaled[i];
                val += term;
            }
            const double margin = opnorm(val) - bounds[fi];
            if (margin > rep.worst_margin) {
                rep.worst_margin = margin;
                rep.witness_z = z;
                std::ostringstream os;
                os << "poly#" << fi;
                rep.witness_poly = os.str();
            }
            if (margin > 0.0) rep.violation_found = true;
        }
    }
    return rep;
}

ToeplitzTruncation build_toeplitz(const SymbolTuple& S, int cutoff) {
    if (cutoff < 2 * S.p) throw PreconditionFailed("build_toeplitz: cutoff < 2p");
    ToeplitzTruncation T;
    T.symbols = S;
    T.cutoff = cutoff;
    const int r = S.r, N = cutoff;
    const int dim = r * (N + 1);
    for (int i = 1; i <= S.n - 1; ++i) {
        Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
        for (int g = 0; g <= N; ++g)
            for (int h = std::max(0, g - S.p); h <= g; ++h)
                M.block(g * r, h * r, r, r) = S.A[i - 1][g - h];
        T.t_phi.push_back(std::move(M));
    }
    T.t_z = Eigen::MatrixXcd::Zero(dim, dim);
    for (int g = 1; g <= N; ++g)
        T.t_z.block(g * r, (g - 1) * r, r, r) = Eigen::MatrixXcd::Identity(r, r);
    return T;
}

namespace {

Eigen::MatrixXcd interior(const Eigen::MatrixXcd& M, int r, int p, int N) {
    const int lo = p * r, count = (N - 2 * p + 1) * r;
    return M.block(lo, lo, count, count);
}

}  // namespace

double toeplitz_interior_relation_residual(const ToeplitzTruncation& T) {
    const auto& S = T.symbols;
    Eigen::MatrixXcd tzp = Eigen::MatrixXcd::Identity(T.block_dim(), T.block_dim());
    for (int k = 0; k < S.p; ++k) tzp = tzp * T.t_z;
    double worst = 0.0;
    for (int i = 1; i <= S.n - 1; ++i) {
        Eigen::MatrixXcd lhs = tzp.adjoint() * T.t_phi[i - 1];
        Eigen::MatrixXcd rhs = T.t_phi[S.n - i - 1].adjoint();
        worst = std::max(worst, interior(lhs - rhs, S.r, S.p, T.cutoff).norm());
    }
    return worst;
}

double toeplitz_interior_commutation_residual(const ToeplitzTruncation& T) {
    const auto& S = T.symbols;
    double worst = 0.0;
    for (size_t i = 0; i < T.t_phi.size(); ++i)
        for (size_t j = i + 1; j < T.t_phi.size(); ++j)
            worst = std::max(worst, interior(T.t_phi[i] * T.t_phi[j] - T.t_phi[j] * T.t_phi[i],
                                             S.r, S.p, T.cutoff)
                                        .norm());
    return worst;
}

namespace {

struct Letter {
    int i, l;
    bool adjoint;
    std::string name() const {
        std::ostringstream os;
        os << "A" << (i + 1) << "_" << l << (adjoint ? "*" : "");
        return os.str();
    }
};

bool is_canonical_rotation(const std::vector<int>& w) {
    const size_t L = w.size();
    for (size_t s = 1; s < L; ++s)
        for (size_t t = 0; t < L; ++t) {
            int a = w[(s + t) % L], b = w[t];
            if (a < b) return false;
            if (a > b) break;
        }
    return true;
}

}  // namespace

WordTraceResult word_trace_equivalence(const SymbolTuple& S1, const SymbolTuple& S2, int max_len,
                                       double tol) {
    if (S1.n != S2.n || S1.p != S2.p || S1.r != S2.r)
        throw ShapeMismatch("word_trace_equivalence: shapes differ");
    std::vector<Letter> letters;
    std::vector<Eigen::MatrixXcd> M1, M2;
    for (int i = 0; i < S1.n - 1; ++i)
        for (int l = 0; l <= S1.p; ++l)
            for (int adj = 0; adj < 2; ++adj) {
                letters.push_back(Letter{i, l, adj == 1});
                M1.push_back(adj ? Eigen::MatrixXcd(S1.A[i][l].adjoint()) : S1.A[i][l]);
                M2.push_back(adj ? Eigen::MatrixXcd(S2.A[i][l].adjoint()) : S2.A[i][l]);
            }
    WordTraceResult res;
    res.consistent = true;
    const int a = static_cast<int>(letters.size());
    if (std::pow(static_cast<double>(a), max_len) > 5e7)
        throw PreconditionFailed("word_trace_equivalence: word budget exceeded");
    std::vector<int> word;
    auto rec = [&](auto&& self, int pos, int len) -> bool {  // true when distinguished
        if (pos == len) {
            if (!is_canonical_rotation(word)) return false;
            Eigen::MatrixXcd P1 = Eigen::MatrixXcd::Identity(S1.r, S1.r);
            Eigen::MatrixXcd P2 = P1;
            for (int x : word) {
                P1 = P1 * M1[x];
                P2 = P2 * M2[x];
            }
            const cplx t1 = P1.trace(), t2 = P2.trace();
            const double dev = std::abs(t1 - t2);
            if (dev > tol * std::max({1.0, std::abs(t1), std::abs(t2)})) {
                for (int x : word) res.distinguishing_word.push_back(letters[x].name());
                res.consistent = false;
                return true;
            }
            res.max_matched_deviation = std::max(res.max_matched_deviation, dev);
            return false;
        }
        for (int x = 0; x < a; ++x) {
            word.push_back(x);
            if (self(self, pos + 1, len)) return true;
            word.pop_back();
        }
        return false;
    };
    // shortest distinguishing word first
    for (int len = 1; len <= max_len; ++len)
        if (rec(rec, 0, len)) break;
    return res;
}

WoldReport wold_verify(const WoldModel& model, const GroupSpec& spec, int cutoff) {
    WoldReport rep;
    const int n = spec.n;
    const int du = model.has_unitary ? model.unitary_part.size() : 0;
    const int r = model.has_pure ? model.pure_part.r : 0;
    const int dp = model.has_pure ? r * (cutoff + 1) : 0;
    const int dim = du + dp;
    if (dim == 0) throw DimensionMismatch("wold_verify: empty model");
    rep.declared_unitary_dim = du;

    std::vector<Eigen::MatrixXcd> T(n, Eigen::MatrixXcd::Zero(dim, dim));
    if (model.has_unitary && du > 0) {
        auto TU = theta_unitary_from_unitaries(model.unitary_part, spec);
        for (int i = 0; i < n; ++i) T[i].topLeftCorner(du, du) = TU[i];
    }
    ToeplitzTruncation TT;
    if (model.has_pure && dp > 0) {
        if (model.pure_part.p != spec.p)
            throw PreconditionFailed("wold_verify: symbol exponent differs from spec");
        TT = build_toeplitz(model.pure_part, cutoff);
        for (int i = 0; i < n - 1; ++i) T[i].bottomRightCorner(dp, dp) = TT.t_phi[i];
        T[n - 1].bottomRightCorner(dp, dp) = TT.t_z;
    }

    // (a) wold relations on the interior window
    const int p = spec.p;
    auto interior_idx = [&](int block_margin) {
        std::vector<int> idx;
        for (int i = 0; i < du; ++i) idx.push_back(i);
        if (dp > 0)
            for (int g = block_margin; g <= cutoff - block_margin; ++g)
                for (int t = 0; t < r; ++t) idx.push_back(du + g * r + t);
        return idx;
    };
    auto restrict_to = [&](const Eigen::MatrixXcd& M, const std::vector<int>& idx) {
        Eigen::MatrixXcd R(idx.size(), idx.size());
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = 0; b < idx.size(); ++b) R(a, b) = M(idx[a], idx[b]);
        return R;
    };
    const auto idx = interior_idx(p);
    Eigen::MatrixXcd tn_p = Eigen::MatrixXcd::Identity(dim, dim);
    for (int k = 0; k < p; ++k) tn_p = tn_p * T[n - 1];
    {
        Eigen::MatrixXcd iso = T[n - 1].adjoint() * T[n - 1];
        iso -= Eigen::MatrixXcd::Identity(dim, dim);
        rep.relation_residual = restrict_to(iso, idx).norm();
        for (int j = 1; j <= n - 1; ++j) {
            Eigen::MatrixXcd d = tn_p.adjoint() * T[j - 1] - T[n - j - 1].adjoint();
            rep.relation_residual = std::max(rep.relation_residual, restrict_to(d, idx).norm());
        }
    }

    // (b) iterated range of T_n stabilizes to the unitary block
    Eigen::MatrixXcd X = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd prev_proj = Eigen::MatrixXcd::Identity(dim, dim);
    int prev_rank = dim;
    for (int k = 1; k <= cutoff + 3; ++k) {
        X = T[n - 1] * X;
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(X);
        qr.setThreshold(1e-10);
        const int rank = static_cast<int>(qr.rank());
        Eigen::MatrixXcd Q =
            qr.householderQ() * Eigen::MatrixXcd::Identity(dim, std::max(rank, 0));
        Eigen::MatrixXcd proj = Q * Q.adjoint();
        if (k > 1 && rank == prev_rank && (proj - prev_proj).norm() <= 1e-10) {
            rep.recovered_unitary_dim = rank;
            prev_proj = proj;
            break;
        }
        prev_rank = rank;
        prev_proj = proj;
    }
    if (rep.recovered_unitary_dim < 0) {
        rep.failure = "iterated range did not stabilize";
        return rep;
    }
    Eigen::MatrixXcd unit_proj = Eigen::MatrixXcd::Zero(dim, dim);
    unit_proj.topLeftCorner(du, du) = Eigen::MatrixXcd::Identity(du, du);
    rep.subspace_mismatch = (prev_proj - unit_proj).norm();

    // (c) pure block consistency
    if (model.has_pure && dp > 0) {
        rep.pure_block_ok = check_symmetry(model.pure_part, 1e-10).pass &&
                            check_commutation(model.pure_part, 1e-10).pass &&
                            toeplitz_interior_relation_residual(TT) <= 1e-10;
    } else {
        rep.pure_block_ok = true;
    }

    rep.pass = rep.relation_residual <= 1e-10 && rep.recovered_unitary_dim == du &&
               rep.subspace_mismatch <= 1e-9 && rep.pure_block_ok;
    if (!rep.pass && rep.failure.empty()) rep.failure = "wold checks failed";
    return rep;
}

Eigen::MatrixXcd PolyMatrix::eval(cplx z) const {
    if (coeffs.empty()) return {};
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(rows(), cols());
    cplx zp = 1.0;
    for (const auto& C : coeffs) {
        acc += zp * C;
        zp *= z;
    }
    return acc;
}

PolyMatrix PolyMatrix::identity(int d) {
    PolyMatrix P;
    P.coeffs.push_back(Eigen::MatrixXcd::Identity(d, d));
    return P;
}

SubspaceReport invariant_subspace_verify(const PolyMatrix& Theta, const SymbolTuple& S_phi,
                                         const SymbolTuple& S_psi, int torus_samples,
                                         std::uint64_t seed, double tol) {
    SubspaceReport rep;
    if (Theta.rows() != S_phi.r || Theta.cols() != S_psi.r)
        throw DimensionMismatch("invariant_subspace_verify: Theta dimensions");
    if (S_phi.n != S_psi.n || S_phi.p != S_psi.p)
        throw ShapeMismatch("invariant_subspace_verify: symbol shapes");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 2.0 * M_PI);
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(Theta.cols(), Theta.cols());
    for (int s = 0; s < torus_samples; ++s) {
        const cplx z = std::polar(1.0, unif(rng));
        Eigen::MatrixXcd Th = Theta.eval(z);
        rep.inner_residual = std::max(rep.inner_residual, (Th.adjoint() * Th - I).norm());
    }

    const int dtheta = static_cast<int>(Theta.coeffs.size()) - 1;
    for (int i = 1; i <= S_phi.n - 1; ++i) {
        for (int k = 0; k <= S_phi.p + dtheta; ++k) {
            Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(Theta.rows(), Theta.cols());
            for (int a = 0; a <= std::min(k, S_phi.p); ++a)
                if (k - a <= dtheta) acc += S_phi.A[i - 1][a] * Theta.coeffs[k - a];
            for (int b = 0; b <= std::min(k, dtheta); ++b)
                if (k - b <= S_psi.p) acc -= Theta.coeffs[b] * S_psi.A[i - 1][k - b];
            const double dev = acc.norm();
            if (dev > rep.intertwine_residual) {
                rep.intertwine_residual = dev;
                if (dev > tol) {
                    std::ostringstream os;
                    os << "Phi_" << i << " Theta - Theta Psi_" << i << " at z^" << k;
                    rep.witness = os.str();
                }
            }
        }
    }

    auto sym = check_symmetry(S_psi, 1e-10);
    auto comm = check_commutation(S_psi, 1e-10);
    auto fals = gamma_contraction_falsifier(S_psi, 32, 8, seed ^ 0x5bd1e995u, 256);
    rep.psi_pure_isometry_ok = sym.pass && comm.pass && !fals.violation_found;

    rep.pass = rep.inner_residual <= tol && rep.intertwine_residual <= tol &&
               rep.psi_pure_isometry_ok;
    return rep;
}

}  // namespace thetalab::models

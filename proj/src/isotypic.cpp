#include "thetalab/isotypic.hpp"

#include <algorithm>
#include <cmath>

namespace thetalab::isotypic {

namespace {

// Accumulate sum over the group of weight(sigma) * f(sigma^{-1} . z) for
// every basis monomial; the action permutes exponents and multiplies by a
// root of unity, and same-degree permuted monomials share their norm, so
// the matrix is identical in the monomial and orthonormalized bases.
template <typename WeightFn>
Eigen::MatrixXcd averaged_action(const CharacterTable& table, const ModuleTruncation& trunc,
                                 WeightFn weight) {
    const auto& spec = table.spec();
    const int dim = trunc.size();
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& sigma : table.elements()) {
        const cplx w = weight(sigma);
        if (w == cplx(0.0)) continue;
        for (int a = 0; a < dim; ++a) {
            const Monomial& e = trunc.basis[a];
            long long phase = 0;
            Monomial b(trunc.n, 0);
            for (int i = 0; i < trunc.n; ++i) {
                phase += static_cast<long long>(sigma.phases[i]) * e[i];
                b[sigma.perm[i]] = e[i];
            }
            P(trunc.index_of(b), a) += w * groups::root_of_unity(spec.m, phase);
        }
    }
    return P;
}

}  // namespace

IsotypicProjection projection_matrix(const CharacterTable& table, int irrep_idx,
                                     const ModuleTruncation& trunc) {
    if (table.spec().n != trunc.n) throw DimensionMismatch("projection_matrix: n mismatch");
    const auto& spec = table.spec();
    const double scale =
        static_cast<double>(table.irreps()[irrep_idx].degree) / static_cast<double>(spec.order());
    Eigen::MatrixXcd P = averaged_action(table, trunc, [&](const groups::GroupElement& sigma) {
        return table.chi(irrep_idx, groups::inverse(sigma, spec.m));
    });
    IsotypicProjection out;
    out.irrep = table.irreps()[irrep_idx];
    out.op = OperatorMatrix{scale * P, trunc.max_degree, trunc.max_degree};
    return out;
}

IsotypicProjection projection_ij_matrix(const CharacterTable& table, int irrep_idx, int i, int j,
                                        const ModuleTruncation& trunc) {
    if (table.spec().n != trunc.n) throw DimensionMismatch("projection_ij_matrix: n mismatch");
    const auto& lbl = table.irreps()[irrep_idx];
    if (i < 0 || j < 0 || i >= lbl.degree || j >= lbl.degree)
        throw UnsupportedIrrep("projection_ij_matrix: entry indices out of range");
    if (!table.has_representation(irrep_idx))
        throw UnsupportedIrrep("projection_ij_matrix: no representation matrices for " +
                               characters::to_string(lbl));
    const auto& spec = table.spec();
    const double scale = static_cast<double>(lbl.degree) / static_cast<double>(spec.order());
    Eigen::MatrixXcd P = averaged_action(table, trunc, [&](const groups::GroupElement& sigma) {
        return table.representation(irrep_idx, groups::inverse(sigma, spec.m))(j, i);
    });
    IsotypicProjection out;
    out.irrep = lbl;
    out.i = i;
    out.j = j;
    out.op = OperatorMatrix{scale * P, trunc.max_degree, trunc.max_degree};
    return out;
}

OperatorMatrix mult_operator_matrix(const MultiPoly& f, const ModuleTruncation& trunc) {
    if (f.num_vars() != trunc.n) throw DimensionMismatch("mult_operator_matrix: arity");
    const int df = std::max(f.degree(), 0);
    if (df > trunc.max_degree) throw DegreeOverflow("mult_operator_matrix: deg f > window");
    const int src_cap = trunc.max_degree - df;
    const int cols = trunc.prefix_size(src_cap);
    OperatorMatrix out;
    out.source_degree_cap = src_cap;
    out.target_degree_cap = trunc.max_degree;
    out.mat = Eigen::MatrixXcd::Zero(trunc.size(), cols);
    for (int a = 0; a < cols; ++a) {
        const Monomial& e = trunc.basis[a];
        for (const auto& [g, c] : f.terms()) {
            Monomial b(trunc.n);
            for (int t = 0; t < trunc.n; ++t) b[t] = e[t] + g[t];
            const int row = trunc.index_of(b);
            out.mat(row, a) += c * std::sqrt(trunc.norms2[row] / trunc.norms2[a]);
        }
    }
    return out;
}

IsotypicBasis isotypic_basis(const IsotypicProjection& proj, const ModuleTruncation& trunc,
                             double tol) {
    IsotypicBasis out;
    const int dim = trunc.size();
    std::vector<Eigen::VectorXcd> cols;
    int start = 0;
    for (int d = 0; d <= trunc.max_degree; ++d) {
        const int stop = trunc.prefix_size(d);
        const int blk = stop - start;
        if (blk <= 0) {
            start = stop;
            continue;
        }
        Eigen::MatrixXcd B = proj.op.mat.block(start, start, blk, blk);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (B + B.adjoint()));
        for (int k = 0; k < blk; ++k) {
            if (es.eigenvalues()(k) < 1.0 - tol) continue;
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
            v.segment(start, blk) = es.eigenvectors().col(k);
            cols.push_back(v);
            out.degrees.push_back(d);
            MultiPoly f(trunc.n);
            for (int t = 0; t < blk; ++t) {
                const cplx coeff =
                    es.eigenvectors()(t, k) / std::sqrt(trunc.norms2[start + t]);
                if (std::abs(coeff) > 1e-13) f.add_term(trunc.basis[start + t], coeff);
            }
            out.vectors.push_back(std::move(f));
        }
        start = stop;
    }
    out.columns = Eigen::MatrixXcd::Zero(dim, static_cast<int>(cols.size()));
    for (int k = 0; k < static_cast<int>(cols.size()); ++k) out.columns.col(k) = cols[k];
    return out;
}

RestrictedTuple restricted_tuple(const CharacterTable& table, int irrep_idx, int i,
                                 const ModuleTruncation& trunc, const ThetaMap& theta) {
    int wmax = 0;
    for (int k = 0; k < theta.spec.n; ++k) wmax = std::max(wmax, theta.component_degree(k));
    if (trunc.max_degree < wmax) throw WindowTooSmall("restricted_tuple: window < deg theta_n");

    IsotypicProjection proj = table.irreps()[irrep_idx].degree == 1
                                  ? projection_matrix(table, irrep_idx, trunc)
                                  : projection_ij_matrix(table, irrep_idx, i, i, trunc);
    RestrictedTuple out;
    out.basis = isotypic_basis(proj, trunc);
    out.source_degree_cap = trunc.max_degree - wmax;
    out.source_rank = 0;
    for (int d : out.basis.degrees)
        if (d <= out.source_degree_cap) ++out.source_rank;

    const auto src = out.basis.columns.leftCols(out.source_rank);
    for (int k = 0; k < theta.spec.n; ++k) {
        OperatorMatrix M = mult_operator_matrix(theta.components[k], trunc);
        // pad the source-window matrix to the full window
        Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(trunc.size(), trunc.size());
        full.leftCols(M.mat.cols()) = M.mat;
        out.ops.push_back(out.basis.columns.adjoint() * full * src);
    }
    return out;
}

std::vector<Monomial> invariant_monomial_exponents(const ThetaMap& theta, int weighted_degree) {
    const int n = theta.spec.n;
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = theta.component_degree(i);
    std::vector<Monomial> out;
    Monomial cur(n, 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k * w[pos] <= rest; ++k) {
            cur[pos] = k;
            self(self, pos + 1, rest - k * w[pos]);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, weighted_degree);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        int wa = 0, wb = 0;
        for (int i = 0; i < n; ++i) {
            wa += a[i] * w[i];
            wb += b[i] * w[i];
        }
        if (wa != wb) return wa < wb;
        return poly::GradedLexLess{}(a, b);
    });
    return out;
}

std::vector<Monomial> last_invariant_powers(const ThetaMap& theta, int weighted_degree) {
    const int n = theta.spec.n;
    const int w = theta.component_degree(n - 1);
    std::vector<Monomial> out;
    for (int k = 0; k * w <= weighted_degree; ++k) {
        Monomial e(n, 0);
        e[n - 1] = k;
        out.push_back(e);
    }
    return out;
}

MomentProfile moment_profile(const CharacterTable& table, int irrep_idx, int i,
                             const ModuleTruncation& trunc, const ThetaMap& theta,
                             const std::vector<Monomial>& exponents) {
    IsotypicProjection proj = table.irreps()[irrep_idx].degree == 1
                                  ? projection_matrix(table, irrep_idx, trunc)
                                  : projection_ij_matrix(table, irrep_idx, i, i, trunc);
    IsotypicBasis basis = isotypic_basis(proj, trunc);
    if (basis.vectors.empty())
        throw WindowTooSmall("moment_profile: isotype empty on this window");
    const int dmin = basis.degrees.front();
    int count = 0;
    for (int d : basis.degrees)
        if (d == dmin) ++count;
    if (count != 1)
        throw NonUniqueMinimalVector("moment_profile: minimal isotype degree has dimension " +
                                     std::to_string(count));
    MomentProfile out;
    out.minimal_vector = basis.vectors.front();
    out.minimal_degree = dmin;
    out.exponents = exponents;
    const double vnorm2 = bergman::poly_norm2(out.minimal_vector, trunc.lambda);
    for (const auto& e : exponents) {
        MultiPoly q = MultiPoly::constant(trunc.n, 1.0);
        for (int t = 0; t < theta.spec.n; ++t)
            for (int k = 0; k < e[t]; ++k) q = q * theta.components[t];
        const double num2 = bergman::poly_norm2(q * out.minimal_vector, trunc.lambda);
        out.values.push_back(std::sqrt(num2 / vnorm2));
    }
    return out;
}

int sign_irrep_index(const CharacterTable& table) { return table.irrep_index("sign"); }
int trivial_irrep_index(const CharacterTable& table) { return table.irrep_index("triv"); }

DivisibilityReport sign_isotype_divisibility(const CharacterTable& table,
                                             const ModuleTruncation& trunc,
                                             const ThetaMap& theta, double tol) {
    DivisibilityReport rep;
    MultiPoly jac = poly::jacobian(theta);
    IsotypicProjection proj = projection_matrix(table, sign_irrep_index(table), trunc);
    IsotypicBasis basis = isotypic_basis(proj, trunc);
    rep.ok = true;
    for (const auto& v : basis.vectors) {
        auto [q, r] = poly::divide(v, jac, 1e-13);
        const double rem = r.max_abs_coeff() / std::max(1.0, v.max_abs_coeff());
        rep.max_remainder = std::max(rep.max_remainder, rem);
        if (rem > tol) rep.ok = false;
        rep.witnesses.push_back(v);
        rep.quotients.push_back(q.cleaned(1e-12));
    }
    return rep;
}

}  // namespace thetalab::isotypic

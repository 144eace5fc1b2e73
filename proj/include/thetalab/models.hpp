#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thetalab/domain.hpp"
#include "thetalab/groups.hpp"

namespace thetalab::models {

using groups::cplx;
using groups::GroupSpec;

// n commuting diagonal unitaries of common size r, stored by diagonal.
struct CommutingUnitaryFamily {
    std::vector<Eigen::VectorXcd> diagonals;

    int n() const { return static_cast<int>(diagonals.size()); }
    int size() const { return diagonals.empty() ? 0 : static_cast<int>(diagonals[0].size()); }
    double unimodularity_residual() const;

    static CommutingUnitaryFamily random(int n, int r, std::uint64_t seed);
};

// T_j = s_j(U_1^m,...,U_n^m) for j < n, T_n = (prod U_i)^q.
std::vector<Eigen::MatrixXcd> theta_unitary_from_unitaries(const CommutingUnitaryFamily& fam,
                                                           const GroupSpec& spec);

struct UnitaryVerification {
    bool pass = false;
    double commutation_residual = 0.0;
    double normality_residual = 0.0;
    double unitarity_residual = 0.0;       // T_n
    double adjoint_relation_residual = 0.0;  // (T_n^p)* T_j = T_{n-j}*
    double joint_diagonalization_residual = 0.0;
    bool gamma_contraction = false;          // joint spectrum route
    bool spectrum_on_boundary = false;       // shilov test per joint eigenvalue
    std::vector<std::vector<cplx>> joint_eigenvalues;
    std::string failure;
};

UnitaryVerification verify_theta_unitary(const std::vector<Eigen::MatrixXcd>& T,
                                         const GroupSpec& spec, double tol = 1e-11,
                                         std::uint64_t seed = 1729);

// Coefficients A_l^{(i)} of the symbols Phi_i(z) = sum_l A_l^{(i)} z^l,
// i = 1..n-1, l = 0..p, on a coefficient space of dimension r.
struct SymbolTuple {
    int n = 2;
    int p = 1;
    int r = 1;
    std::vector<std::vector<Eigen::MatrixXcd>> A;  // [i-1][l]

    Eigen::MatrixXcd eval(int i, cplx z) const;  // Phi_i(z), i is 1-based

    static SymbolTuple zero(int n, int p, int r);
};

struct CheckResult {
    bool pass = false;
    double residual = 0.0;
};

// A_l^{(i)*} == A_{p-l}^{(n-i)}
CheckResult check_symmetry(const SymbolTuple& S, double tol = 1e-12);
// sum_l [A_l^{(i)}, A_{k-l}^{(j)}] == 0 for k = 0..2p
CheckResult check_commutation(const SymbolTuple& S, double tol = 1e-12);

// Sampling falsifier for the Gamma_{n-1}-contraction condition of the
// symbols.  "no violation" is evidence only; a reported violation is
// certified (the boundary sup is bounded above by grid sup plus a
// Lipschitz term).
struct FalsifierReport {
    bool violation_found = false;
    double worst_margin = 0.0;  // max over samples of ||f(gamma Phi(z))|| - bound
    cplx witness_z = 0.0;
    std::string witness_poly;
};

FalsifierReport gamma_contraction_falsifier(const SymbolTuple& S, int torus_samples,
                                            int poly_samples, std::uint64_t seed,
                                            int grid_size = 512);

// Finite section of the Toeplitz model on H^2(E): block matrices of size
// r(N+1), T_z the block shift, T_{Phi_i} block-banded with bandwidth p.
struct ToeplitzTruncation {
    SymbolTuple symbols;
    int cutoff = 0;  // N
    std::vector<Eigen::MatrixXcd> t_phi;
    Eigen::MatrixXcd t_z;

    int block_dim() const { return symbols.r * (cutoff + 1); }
};

ToeplitzTruncation build_toeplitz(const SymbolTuple& S, int cutoff);

// residual of (T_z^p)* T_{Phi_i} = T_{Phi_{n-i}}^* on rows/cols p..N-p
double toeplitz_interior_relation_residual(const ToeplitzTruncation& T);
// residual of pairwise commutation on the interior window
double toeplitz_interior_commutation_residual(const ToeplitzTruncation& T);

struct WordTraceResult {
    bool consistent = false;
    std::vector<std::string> distinguishing_word;
    double max_matched_deviation = 0.0;
};

// Compares traces of words of length <= max_len in the letters
// {A_l^{(i)}, A_l^{(i)*}}.  Equal traces are necessary for joint unitary
// equivalence; a differing word certifies inequivalence.
WordTraceResult word_trace_equivalence(const SymbolTuple& S1, const SymbolTuple& S2, int max_len,
                                       double tol = 1e-9);

// unitary summand (diagonal data) + pure summand (Toeplitz data)
struct WoldModel {
    CommutingUnitaryFamily unitary_part;  // may be empty
    SymbolTuple pure_part;                // r = 0 for no pure summand
    bool has_pure = true;
    bool has_unitary = true;
};

struct WoldReport {
    bool pass = false;
    double relation_residual = 0.0;
    int declared_unitary_dim = 0;
    int recovered_unitary_dim = -1;
    double subspace_mismatch = 1.0;
    bool pure_block_ok = false;
    std::string failure;
};

WoldReport wold_verify(const WoldModel& model, const GroupSpec& spec, int cutoff);

// Z-polynomial matrix, coefficient list (constant term first).
struct PolyMatrix {
    std::vector<Eigen::MatrixXcd> coeffs;

    int rows() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs[0].rows()); }
    int cols() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs[0].cols()); }
    Eigen::MatrixXcd eval(cplx z) const;
    static PolyMatrix identity(int d);
};

struct SubspaceReport {
    bool pass = false;
    double inner_residual = 0.0;         // Theta(z)* Theta(z) - I on samples
    double intertwine_residual = 0.0;    // Phi_i Theta - Theta Psi_i, coefficientwise
    std::string witness;                 // first failing coefficient if any
    bool psi_pure_isometry_ok = false;
};

// Verifies a Beurling-Lax-Halmos style certificate: Theta inner on
// sampled T, Phi_i Theta = Theta Psi_i as polynomial identities, and the
// Psi data consistent with a pure isometry model.
SubspaceReport invariant_subspace_verify(const PolyMatrix& Theta, const SymbolTuple& S_phi,
                                         const SymbolTuple& S_psi, int torus_samples,
                                         std::uint64_t seed, double tol = 1e-10);

}  // namespace thetalab::models

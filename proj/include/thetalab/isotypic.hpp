#pragma once

#include <Eigen/Dense>
#include <vector>

#include "thetalab/bergman.hpp"
#include "thetalab/characters.hpp"
#include "thetalab/poly.hpp"

namespace thetalab::isotypic {

using bergman::ModuleTruncation;
using characters::CharacterTable;
using characters::IrrepLabel;
using groups::cplx;
using poly::Monomial;
using poly::MultiPoly;
using poly::ThetaMap;

// Dense matrix in the orthonormalized monomial basis between two degree
// windows of a truncation.
struct OperatorMatrix {
    Eigen::MatrixXcd mat;
    int source_degree_cap = 0;
    int target_degree_cap = 0;
};

struct IsotypicProjection {
    IrrepLabel irrep;
    int i = 0, j = 0;  // matrix-entry indices, 0-based; i == j for diagonal blocks
    OperatorMatrix op;  // square on the full window
};

// P_rho: character-averaged projection onto the rho-isotypic component.
IsotypicProjection projection_matrix(const CharacterTable& table, int irrep_idx,
                                     const ModuleTruncation& trunc);

// P_rho^{ij}: needs explicit unitary representation matrices.
IsotypicProjection projection_ij_matrix(const CharacterTable& table, int irrep_idx, int i, int j,
                                        const ModuleTruncation& trunc);

// Multiplication by f from {deg <= D - deg f} into {deg <= D}, exact.
OperatorMatrix mult_operator_matrix(const MultiPoly& f, const ModuleTruncation& trunc);

// Orthonormal basis of the range of a diagonal isotypic projection,
// assembled degree by degree; vectors are homogeneous polynomials.
struct IsotypicBasis {
    std::vector<MultiPoly> vectors;
    std::vector<int> degrees;
    Eigen::MatrixXcd columns;  // window-size x rank, orthonormal
};

IsotypicBasis isotypic_basis(const IsotypicProjection& proj, const ModuleTruncation& trunc,
                             double tol = 1e-8);

// Compressions P M_{theta_k} P restricted to the isotypic basis; exact on
// {deg <= D - max_k deg theta_k}.
struct RestrictedTuple {
    IsotypicBasis basis;
    int source_degree_cap = 0;
    int source_rank = 0;                 // basis vectors within the source window
    std::vector<Eigen::MatrixXcd> ops;   // full-rank rows, source-rank cols
};

RestrictedTuple restricted_tuple(const CharacterTable& table, int irrep_idx, int i,
                                 const ModuleTruncation& trunc, const ThetaMap& theta);

// ||q(theta) v|| / ||v|| over the given invariant-monomial exponents,
// v the (unique) minimal-degree vector of the isotype.
struct MomentProfile {
    MultiPoly minimal_vector;
    int minimal_degree = 0;
    std::vector<Monomial> exponents;
    std::vector<double> values;
};

MomentProfile moment_profile(const CharacterTable& table, int irrep_idx, int i,
                             const ModuleTruncation& trunc, const ThetaMap& theta,
                             const std::vector<Monomial>& exponents);

// all exponents e with sum e_i deg(theta_i) <= weighted_degree, graded order
std::vector<Monomial> invariant_monomial_exponents(const ThetaMap& theta, int weighted_degree);
// powers of the last basic invariant only (the comparison pivot)
std::vector<Monomial> last_invariant_powers(const ThetaMap& theta, int weighted_degree);

// Every vector of the sign isotype on the window is divisible by the
// Jacobian of theta; returns the quotients.
struct DivisibilityReport {
    bool ok = false;
    double max_remainder = 0.0;
    std::vector<MultiPoly> witnesses;   // sign-isotype basis vectors
    std::vector<MultiPoly> quotients;
};

DivisibilityReport sign_isotype_divisibility(const CharacterTable& table,
                                             const ModuleTruncation& trunc,
                                             const ThetaMap& theta, double tol = 1e-9);

int sign_irrep_index(const CharacterTable& table);
int trivial_irrep_index(const CharacterTable& table);

}  // namespace thetalab::isotypic

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetalab/isotypic.hpp"

namespace thetalab::experiments {

using characters::CharacterTable;
using groups::cplx;
using groups::GroupSpec;
using poly::Monomial;
using poly::MultiPoly;

// One computed quantity with its provenance (the operation that produced
// it), so reports stay traceable.
struct Quantity {
    std::string name;
    double value = 0.0;
    std::string provenance;
};

struct ExperimentReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<Quantity> quantities;
    std::string verdict;
    std::vector<std::string> notes;
    double runtime_ms = 0.0;
};

// 1/lambda^n vs n!/(lambda)_n, closed forms and the full Gram route.
struct InequivResult {
    ExperimentReport report;
    double lhs_closed = 0.0, rhs_closed = 0.0;
    double lhs_gram = 0.0, rhs_gram = 0.0;
    bool witness_found = false;
};
InequivResult prop_inequiv_check(int n, double lambda);

// r(m) = ||sum_k z1^{m-k} z2^{k-1}||^2 / ||z1^m - z2^m||^2
struct UnbddResult {
    ExperimentReport report;
    std::vector<double> ratios;              // r(1)..r(m_max)
    std::vector<double> cross_check;         // harmonic numbers (lambda=2) or m/2
    bool monotone_diverging = false;
};
UnbddResult unbdd_growth(double lambda, int m_max);

struct ProfileWitness {
    Monomial exponent;
    double value1 = 0.0, value2 = 0.0;
};

// Sound one-sided witness search: differing moment profiles certify
// unitary inequivalence; equality over the window is inconclusive.
struct ProfileInequivResult {
    ExperimentReport report;
    bool witness_found = false;
    bool inconclusive = false;
    std::optional<ProfileWitness> witness;
    std::vector<double> profile1, profile2;
    std::vector<Monomial> exponents;
};
ProfileInequivResult moment_profile_inequivalence(const GroupSpec& spec, double lambda,
                                                  const std::string& irrep1,
                                                  const std::string& irrep2, int weighted_degree,
                                                  int window_margin = 0);

// sum over the group of |f(sigma . z)|^2 at each sample point
std::vector<double> symmetrized_modulus_profile(const MultiPoly& f, const GroupSpec& spec,
                                                const std::vector<std::vector<cplx>>& samples);

struct DihedralPairResult {
    std::string irrep1, irrep2;
    bool witness_found = false;
    bool inconclusive = false;
    std::optional<ProfileWitness> witness;
};

struct DihedralFamilyResult {
    ExperimentReport report;
    std::vector<std::string> one_dim_irreps;
    std::vector<DihedralPairResult> pairs;
};
DihedralFamilyResult dihedral_family_report(int k, double lambda, int weighted_degree);

}  // namespace thetalab::experiments

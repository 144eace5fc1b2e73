#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "thetalab/groups.hpp"

namespace thetalab::characters {

using groups::cplx;
using groups::GroupElement;
using groups::GroupSpec;

// Label of an irreducible representation.  Symmetric groups use the
// partition; dihedral G(k,k,2) uses named labels "triv", "sign", "rho1",
// "rho2" and "dim2:j" for the two-dimensional ones.
struct IrrepLabel {
    std::string name;
    std::vector<int> partition;  // nonempty for S_n labels
    int degree = 1;

    bool operator==(const IrrepLabel&) const = default;
};

std::string to_string(const IrrepLabel& label);

struct ConjClass {
    GroupElement representative;
    int size = 0;
    std::vector<int> member_indices;  // into the element list
};

// Character table of a supported family: G(1,1,n) with n <= 6 via the
// Murnaghan-Nakayama rule, or dihedral G(k,k,2) with k <= 12 via closed
// forms.  Conjugacy classes come from brute-force conjugation orbits.
class CharacterTable {
public:
    static CharacterTable build(const GroupSpec& spec);

    const GroupSpec& spec() const { return spec_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<IrrepLabel>& irreps() const { return irreps_; }
    const std::vector<ConjClass>& classes() const { return classes_; }

    cplx value(int irrep_idx, int class_idx) const { return values_[irrep_idx][class_idx]; }
    int class_of(const GroupElement& g) const;
    cplx chi(int irrep_idx, const GroupElement& g) const;
    int irrep_index(const std::string& name) const;

    // max deviation from |G| delta_{rr'} in the row inner products
    double orthogonality_residual() const;

    // Unitary representation matrices: any 1-dim irrep, the dihedral
    // 2-dim irreps, and S_n irreps via the Young orthogonal form (n <= 4).
    bool has_representation(int irrep_idx) const;
    Eigen::MatrixXcd representation(int irrep_idx, const GroupElement& g) const;

private:
    GroupSpec spec_;
    std::vector<GroupElement> elements_;
    std::vector<IrrepLabel> irreps_;
    std::vector<ConjClass> classes_;
    std::vector<std::vector<cplx>> values_;  // [irrep][class]
    std::map<GroupElement, int> class_index_;
};

// All partitions of n, in a fixed deterministic order (descending lex).
std::vector<std::vector<int>> partitions_of(int n);

// Murnaghan-Nakayama: character of S_n indexed by partition `lambda`
// evaluated on the class of cycle type `rho`.  Exact integer.
long long mn_character(const std::vector<int>& lambda, const std::vector<int>& rho);

// Cycle type of a permutation, parts descending.
std::vector<int> cycle_type(const std::vector<int>& perm);

// Young orthogonal form for S_n: real orthogonal matrix of the
// permutation in the irrep `lambda` (consistent with groups::compose).
Eigen::MatrixXd young_orthogonal(const std::vector<int>& lambda,
                                 const std::vector<int>& perm);

int standard_tableau_count(const std::vector<int>& lambda);

}  // namespace thetalab::characters

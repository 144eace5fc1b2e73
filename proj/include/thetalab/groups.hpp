#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "thetalab/errors.hpp"

namespace thetalab::groups {

using cplx = std::complex<double>;

// e^{2 pi i t / m}.  Quarter turns are returned exactly so that the
// frequently used m in {1,2,4} stay integer-valued in double arithmetic.
cplx root_of_unity(int m, long long t);

// Parameters (m, p, n) of the imprimitive reflection group G(m, p, n):
// n x n monomial matrices whose nonzero entries are m-th roots of unity
// with product an (m/p)-th root of unity.
struct GroupSpec {
    int m = 1;
    int p = 1;
    int n = 1;

    GroupSpec() = default;
    GroupSpec(int m_, int p_, int n_);

    int q() const { return m / p; }
    // m^n n!/p
    std::uint64_t order() const;

    bool operator==(const GroupSpec&) const = default;
};

// A monomial matrix: row i carries its unique nonzero entry
// xi_m^{phases[i]} in column perm[i].  Applied to a vector,
// (M z)_i = xi^{phases[i]} z_{perm[i]}.
struct GroupElement {
    std::vector<int> perm;    // 0-based permutation of {0..n-1}
    std::vector<int> phases;  // exponents mod m

    int n() const { return static_cast<int>(perm.size()); }
    bool operator==(const GroupElement&) const = default;
    bool operator<(const GroupElement& o) const;
};

GroupElement identity(int n);
// Matrix product M(a) M(b), phases handled in integer exponents mod m.
GroupElement compose(const GroupElement& a, const GroupElement& b, int m);
GroupElement inverse(const GroupElement& a, int m);

// Transposition-like reflection sigma_{ij|k}: swaps coordinates i and j
// with phases xi^k, xi^{-k}.  0-based i < j.
GroupElement reflection_transposition(int n, int m, int i, int j, int k);
// Diagonal reflection sigma_{i|k}: xi^k at coordinate i.
GroupElement reflection_diagonal(int n, int m, int i, int k);

Eigen::MatrixXcd matrix_of(const GroupElement& g, int m);

// sum of phases == 0 (mod p), i.e. the entry product is an (m/p)-th root
// of unity
bool satisfies_phase_constraint(const GroupElement& g, const GroupSpec& spec);

// All elements of G(m,p,n), enumerated once each in a fixed deterministic
// order.  Throws CapExceeded when the order exceeds `cap`.
std::vector<GroupElement> generate_group(const GroupSpec& spec,
                                         std::uint64_t cap = 20736);

// A standard generating set: adjacent transpositions, sigma_{12|1} when
// m > 1, and the diagonal sigma_{1|p} when p < m.  (n = 1: just the
// diagonal generator.)
std::vector<GroupElement> generators(const GroupSpec& spec);

// Every complex reflection in G(m,p,n).
std::vector<GroupElement> reflections(const GroupSpec& spec);

// The dot action sigma . z = sigma^{-1} z.
std::vector<cplx> act_on_point(const GroupElement& g, int m,
                               const std::vector<cplx>& z);

// rank(I - M) == 1, decided exactly from the cycle/phase structure.
bool is_reflection(const GroupElement& g, int m);

// det(M)^{-1}, a root of unity.
cplx sign_character(const GroupElement& g, int m);

// Smallest k >= 1 with g^k = id.
int element_order(const GroupElement& g, int m);

// Brute-force conjugacy classes; each class lists indices into `elements`,
// first index is the representative (minimal element of the class).
std::vector<std::vector<int>> conjugacy_classes(
    const std::vector<GroupElement>& elements, int m);

}  // namespace thetalab::groups

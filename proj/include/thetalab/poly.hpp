#pragma once

#include <complex>
#include <map>
#include <vector>

#include "thetalab/groups.hpp"

namespace thetalab::poly {

using groups::cplx;
using groups::GroupElement;
using groups::GroupSpec;

using Monomial = std::vector<int>;  // exponent vector

// graded lexicographic order, the one global monomial order
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

int total_degree(const Monomial& a);

// Sparse multivariate polynomial over C.  Zero coefficients are never
// stored; terms are kept in graded-lex order.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, cplx, GradedLexLess>;

    explicit MultiPoly(int num_vars = 0) : num_vars_(num_vars) {}
    static MultiPoly constant(int num_vars, cplx c);
    static MultiPoly variable(int num_vars, int i, int power = 1);
    static MultiPoly monomial(Monomial exp, cplx c);

    int num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    cplx coeff(const Monomial& e) const;
    double max_abs_coeff() const;

    void add_term(const Monomial& e, cplx c, double drop_tol = 0.0);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(cplx s) const;
    MultiPoly operator-() const;

    MultiPoly derivative(int var) const;
    cplx eval(const std::vector<cplx>& z) const;
    // substitute z_i -> args[i]
    MultiPoly compose(const std::vector<MultiPoly>& args) const;
    // split into homogeneous components, keyed by total degree
    std::map<int, MultiPoly> homogeneous_parts() const;
    // drop terms with |coeff| <= tol * max |coeff|
    MultiPoly cleaned(double tol) const;

    bool approx_equal(const MultiPoly& o, double tol) const;

private:
    int num_vars_;
    TermMap terms_;
};

// Univariate polynomial c0 + c1 z + ... + cd z^d with nonzero leading
// coefficient unless identically zero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<cplx> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    cplx eval(cplx z) const;
    UniPoly derivative() const;
    // z^d conj(f(1/conj(z))): coefficients reversed and conjugated
    UniPoly reversed_conjugate() const;
    // f(s z)
    UniPoly scaled_argument(double s) const;

private:
    std::vector<cplx> coeffs_;
};

// elementary symmetric polynomial s_i evaluated at given values; s_0 = 1
cplx elementary_symmetric(int i, const std::vector<cplx>& values);
// all of s_0..s_n at once
std::vector<cplx> elementary_symmetric_all(const std::vector<cplx>& values);
MultiPoly elementary_symmetric_poly(int num_vars, int i);

// The basic polynomial map of G(m,p,n):
// theta_i = s_i(z_1^m,...,z_n^m) for i < n, theta_n = (z_1...z_n)^q.
struct ThetaMap {
    GroupSpec spec;
    std::vector<MultiPoly> components;

    const MultiPoly& component(int i) const { return components.at(i); }
    int component_degree(int i) const { return components.at(i).degree(); }
    std::vector<cplx> eval(const std::vector<cplx>& z) const;
};

ThetaMap theta_map(const GroupSpec& spec);

// (g . f)(z) = f(sigma^{-1} . z): monomials map to scalar multiples of
// monomials.
MultiPoly act_on_polynomial(const GroupElement& g, int m, const MultiPoly& f);

// determinant of the matrix (d theta_i / d z_j), rows by component
MultiPoly jacobian(const ThetaMap& tm);

// checks invariance under the standard generators
bool invariant_check(const MultiPoly& f, const GroupSpec& spec, double tol = 1e-12);

// Given invariant f, the unique q (in n fresh variables) with
// q o theta = f; verified by expansion before returning.
MultiPoly express_in_invariants(const MultiPoly& f, const ThetaMap& tm, double tol = 1e-12);

// f = quot * g + rem with no term of rem divisible by the leading
// monomial of g
struct DivisionResult {
    MultiPoly quotient;
    MultiPoly remainder;
};
DivisionResult divide(const MultiPoly& f, const MultiPoly& g, double drop_tol = 0.0);

}  // namespace thetalab::poly

#pragma once

#include <map>
#include <vector>

#include "thetalab/poly.hpp"

namespace thetalab::bergman {

using groups::cplx;
using poly::GradedLexLess;
using poly::Monomial;
using poly::MultiPoly;

// rising factorial (lambda)_k, running product
double pochhammer(double lambda, int k);

// ||z^alpha||^2 = prod_i alpha_i! / (lambda)_{alpha_i}
double monomial_norm2(const Monomial& alpha, double lambda);

// ||f||^2 in the lambda-weighted space, from the closed monomial norms
double poly_norm2(const MultiPoly& f, double lambda);

// K_lambda(z, w) = prod_i (1 - z_i conj(w_i))^{-lambda}
cplx kernel_eval(const std::vector<cplx>& z, const std::vector<cplx>& w, double lambda);

// Truncated model of the lambda-weighted Bergman (lambda > 1) or Hardy
// (lambda = 1) space: all monomials of total degree <= D in graded-lex
// order with their squared norms.
struct ModuleTruncation {
    int n = 0;
    double lambda = 1.0;
    int max_degree = 0;
    std::vector<Monomial> basis;
    std::vector<double> norms2;
    std::map<Monomial, int, GradedLexLess> index;

    static ModuleTruncation build(int n, double lambda, int max_degree);

    int size() const { return static_cast<int>(basis.size()); }
    // number of basis vectors of total degree <= cap (a prefix)
    int prefix_size(int degree_cap) const;
    int index_of(const Monomial& m) const;
};

}  // namespace thetalab::bergman

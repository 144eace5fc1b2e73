#pragma once

#include <optional>
#include <vector>

#include "thetalab/poly.hpp"

namespace thetalab::disk {

using groups::cplx;
using poly::UniPoly;

enum class DiskClass { inside, boundary, outside };

const char* to_string(DiskClass c);

struct RootLocation {
    cplx value;
    double modulus;
    DiskClass cls;
};

// Three-way verdict on the zero locations of a polynomial relative to
// the unit circle, boundary band [1-tol, 1+tol].  The primary verdict
// comes from the Schur-Cohn reduction; roots and the cross-check verdict
// come from companion-matrix eigenvalues.
struct DiskVerdict {
    DiskClass verdict;            // Schur-Cohn route
    DiskClass companion_verdict;  // eigenvalue route
    std::vector<RootLocation> roots;
    double max_modulus = 0.0;
    double tol = 0.0;
};

// Are all zeros strictly inside |z| < radius?  Division-free Schur-Cohn
// reduction in exact rational arithmetic, so the answer is exact for the
// represented coefficients.
bool schur_cohn_all_inside(const UniPoly& f, double radius);

// Eigenvalues of the companion matrix.
std::vector<cplx> companion_roots(const UniPoly& f);

DiskVerdict roots_in_closed_disk(const UniPoly& f, double tol);

// z^d conj(f(1/conj(z))) == omega f(z) for a unimodular omega
struct SelfInversive {
    bool is_self_inversive = false;
    cplx omega = 0.0;
    double residual = 0.0;
};
SelfInversive is_self_inversive(const UniPoly& f, double tol);

}  // namespace thetalab::disk

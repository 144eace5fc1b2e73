#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "thetalab/disk.hpp"
#include "thetalab/poly.hpp"

namespace thetalab::domain {

using disk::DiskClass;
using disk::DiskVerdict;
using groups::cplx;
using groups::GroupSpec;
using poly::UniPoly;

// A candidate point (theta_1,...,theta_n) together with the exponent p
// entering theta_n^p in the associated polynomial.
struct ThetaPoint {
    std::vector<cplx> coords;
    int p = 1;

    int n() const { return static_cast<int>(coords.size()); }
};

// sum_{i=0}^{n-1} (-1)^i theta_i z^{n-i} + (-1)^n theta_n^p, theta_0 = 1
UniPoly associated_poly(const ThetaPoint& pt);

enum class Membership { member_interior, member_boundary, outside };
const char* to_string(Membership m);

struct MembershipReport {
    Membership verdict;
    DiskVerdict disk;
};

MembershipReport membership(const ThetaPoint& pt, double tol = 1e-9);

// Shilov boundary test with three independent sub-verdicts:
//  a) membership and |theta_n| = 1
//  b) |theta_n| = 1, theta_n^p conj(theta_j) = theta_{n-j}, scaled point
//     in Gamma_{n-1}
//  c) all roots of the associated polynomial unimodular
struct ShilovReport {
    bool verdict;
    bool sub_a, sub_b, sub_c;
    bool agree;
    DiskVerdict disk;
};

ShilovReport shilov_boundary_test(const ThetaPoint& pt, double tol = 1e-9);

// (gamma_1 theta_1, ..., gamma_{n-1} theta_{n-1}), gamma_i = (n-i)/n
std::vector<cplx> pi_projection(const ThetaPoint& pt);

// Gamma_k membership: Theta_k membership for G(1,1,k), exponent 1.
MembershipReport gamma_membership(const std::vector<cplx>& point, double tol = 1e-9);

// Boundary-lifting recursion: theta_j = mu_j + conj(mu_{n-j}) theta_n^p.
// `mu` is a distinguished-boundary point of Gamma_{n-1} (exponent 1).
ThetaPoint boundary_from_lower(const std::vector<cplx>& mu, cplx theta_n, int p,
                               double tol = 1e-9);

enum class SampleRegion { closed_polydisc, torus };

// Deterministic sample of theta-images; `region` selects z from the
// closed polydisc or the torus.
std::vector<ThetaPoint> sample_theta_image(const GroupSpec& spec, SampleRegion region,
                                           int count, std::uint64_t seed);

// Certified exterior points: boundary images with theta_n scaled by 1+eps.
std::vector<ThetaPoint> sample_exterior(const GroupSpec& spec, int count, std::uint64_t seed,
                                        double eps_min = 1e-3, double eps_max = 1e-1);

// underlying polydisc/torus point sampler (deterministic in the seed)
std::vector<std::vector<cplx>> sample_polydisc_points(int n, SampleRegion region, int count,
                                                      std::uint64_t seed);

}  // namespace thetalab::domain

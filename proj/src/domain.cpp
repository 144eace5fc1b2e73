#include "thetalab/domain.hpp"

#include <cmath>
#include <random>

namespace thetalab::domain {

namespace {

cplx pow_int(cplx z, int k) {
    cplx acc = 1.0;
    for (int i = 0; i < k; ++i) acc *= z;
    return acc;
}

}  // namespace

UniPoly associated_poly(const ThetaPoint& pt) {
    const int n = pt.n();
    if (n < 1) throw DegenerateInput("associated_poly: empty point");
    std::vector<cplx> c(n + 1, 0.0);
    c[n] = 1.0;  // theta_0 = 1
    for (int i = 1; i < n; ++i) c[n - i] = ((i % 2) ? -1.0 : 1.0) * pt.coords[i - 1];
    c[0] = ((n % 2) ? -1.0 : 1.0) * pow_int(pt.coords[n - 1], pt.p);
    return UniPoly(std::move(c));
}

const char* to_string(Membership m) {
    switch (m) {
        case Membership::member_interior: return "member-interior";
        case Membership::member_boundary: return "member-boundary";
        case Membership::outside: return "outside";
    }
    return "?";
}

MembershipReport membership(const ThetaPoint& pt, double tol) {
    MembershipReport r{Membership::outside, disk::roots_in_closed_disk(associated_poly(pt), tol)};
    switch (r.disk.verdict) {
        case DiskClass::inside: r.verdict = Membership::member_interior; break;
        case DiskClass::boundary: r.verdict = Membership::member_boundary; break;
        case DiskClass::outside: r.verdict = Membership::outside; break;
    }
    return r;
}

std::vector<cplx> pi_projection(const ThetaPoint& pt) {
    const int n = pt.n();
    if (n < 2) return {};
    std::vector<cplx> out(n - 1);
    for (int i = 1; i <= n - 1; ++i)
        out[i - 1] = (static_cast<double>(n - i) / n) * pt.coords[i - 1];
    return out;
}

MembershipReport gamma_membership(const std::vector<cplx>& point, double tol) {
    if (point.empty()) {
        // Gamma_0 is a single point; vacuously a member
        MembershipReport r;
        r.verdict = Membership::member_boundary;
        r.disk.verdict = DiskClass::boundary;
        r.disk.companion_verdict = DiskClass::boundary;
        r.disk.tol = tol;
        return r;
    }
    return membership(ThetaPoint{point, 1}, tol);
}

ShilovReport shilov_boundary_test(const ThetaPoint& pt, double tol) {
    const int n = pt.n();
    ShilovReport rep{};
    const cplx theta_n = pt.coords[n - 1];
    const bool unimodular_last = std::abs(std::abs(theta_n) - 1.0) <= tol;

    // (a) membership and |theta_n| = 1
    MembershipReport mem = membership(pt, tol);
    rep.disk = mem.disk;
    rep.sub_a = (mem.verdict != Membership::outside) && unimodular_last;

    // (b) |theta_n| = 1, the adjoint relations, and the scaled point
    //     in Gamma_{n-1}
    bool relations = true;
    const cplx tn_p = pow_int(theta_n, pt.p);
    for (int j = 1; j <= n - 1; ++j) {
        cplx lhs = tn_p * std::conj(pt.coords[j - 1]);
        cplx rhs = (n - j == n) ? cplx(1.0) : pt.coords[n - j - 1];
        if (std::abs(lhs - rhs) > tol * std::max(1.0, std::abs(rhs))) relations = false;
    }
    bool projected_ok = gamma_membership(pi_projection(pt), tol).verdict != Membership::outside;
    rep.sub_b = unimodular_last && relations && projected_ok;

    // (c) every root of the associated polynomial unimodular
    bool all_unimodular = true;
    for (const auto& r : mem.disk.roots)
        if (std::abs(r.modulus - 1.0) > tol) all_unimodular = false;
    rep.sub_c = all_unimodular;

    rep.agree = (rep.sub_a == rep.sub_b) && (rep.sub_b == rep.sub_c);
    rep.verdict = rep.sub_a && rep.sub_b && rep.sub_c;
    return rep;
}

ThetaPoint boundary_from_lower(const std::vector<cplx>& mu, cplx theta_n, int p, double tol) {
    const int n = static_cast<int>(mu.size()) + 1;
    if (mu.empty()) throw PreconditionFailed("boundary_from_lower: empty mu");
    if (std::abs(std::abs(theta_n) - 1.0) > tol)
        throw PreconditionFailed("boundary_from_lower: |theta_n| != 1");
    if (!shilov_boundary_test(ThetaPoint{mu, 1}, tol).verdict)
        throw PreconditionFailed("boundary_from_lower: mu not on the lower boundary");
    ThetaPoint out;
    out.p = p;
    out.coords.resize(n);
    const cplx tn_p = pow_int(theta_n, p);
    for (int j = 1; j <= n - 1; ++j)
        out.coords[j - 1] = mu[j - 1] + std::conj(mu[n - j - 1]) * tn_p;
    out.coords[n - 1] = theta_n;
    return out;
}

std::vector<std::vector<cplx>> sample_polydisc_points(int n, SampleRegion region, int count,
                                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<std::vector<cplx>> out;
    out.reserve(count);
    for (int c = 0; c < count; ++c) {
        std::vector<cplx> z(n);
        for (int i = 0; i < n; ++i) {
            double ang = 2.0 * M_PI * unif(rng);
            double rad = (region == SampleRegion::torus) ? 1.0 : std::sqrt(unif(rng));
            z[i] = std::polar(rad, ang);
        }
        out.push_back(std::move(z));
    }
    return out;
}

std::vector<ThetaPoint> sample_theta_image(const GroupSpec& spec, SampleRegion region, int count,
                                           std::uint64_t seed) {
    const int n = spec.n, m = spec.m, q = spec.q();
    std::vector<ThetaPoint> out;
    out.reserve(count);
    for (const auto& z : sample_polydisc_points(n, region, count, seed)) {
        std::vector<cplx> powers(n);
        for (int i = 0; i < n; ++i) powers[i] = pow_int(z[i], m);
        auto e = poly::elementary_symmetric_all(powers);
        ThetaPoint pt;
        pt.p = spec.p;
        pt.coords.assign(e.begin() + 1, e.end());
        cplx prod = 1.0;
        for (int i = 0; i < n; ++i) prod *= z[i];
        pt.coords[n - 1] = pow_int(prod, q);
        out.push_back(std::move(pt));
    }
    return out;
}

std::vector<ThetaPoint> sample_exterior(const GroupSpec& spec, int count, std::uint64_t seed,
                                        double eps_min, double eps_max) {
    auto pts = sample_theta_image(spec, SampleRegion::torus, count, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> unif(eps_min, eps_max);
    for (auto& pt : pts) pt.coords[pt.n() - 1] *= (1.0 + unif(rng));
    return pts;
}

}  // namespace thetalab::domain

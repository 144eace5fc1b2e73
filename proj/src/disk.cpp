#include "thetalab/disk.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <gmpxx.h>

namespace thetalab::disk {

const char* to_string(DiskClass c) {
    switch (c) {
        case DiskClass::inside: return "inside";
        case DiskClass::boundary: return "boundary";
        case DiskClass::outside: return "outside";
    }
    return "?";
}

namespace {

// complex rational, exact
struct QC {
    mpq_class re, im;

    QC() : re(0), im(0) {}
    QC(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    explicit QC(cplx z) : re(z.real()), im(z.imag()) {}

    QC conj() const { return QC(re, -im); }
    mpq_class norm2() const { return re * re + im * im; }
    QC operator*(const QC& o) const {
        return QC(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    QC operator-(const QC& o) const { return QC(re - o.re, im - o.im); }
};

}  // namespace

bool schur_cohn_all_inside(const UniPoly& f, double radius) {
    if (f.is_zero()) throw DegenerateInput("schur_cohn: zero polynomial");
    // exact coefficients of f(radius z); doubles are dyadic rationals
    const mpq_class R(radius);
    std::vector<QC> c;
    mpq_class pw(1);
    for (const cplx& x : f.coeffs()) {
        c.emplace_back(mpq_class(x.real()) * pw, mpq_class(x.imag()) * pw);
        pw *= R;
    }
    while (c.size() > 1) {
        const size_t d = c.size() - 1;
        if (c[0].norm2() >= c[d].norm2()) return false;  // zero on or outside
        // division-free step-down: conj(c_d) P - c_0 P*, then drop z^0
        // (which vanishes identically); roots agree with (P - kP*)/z
        std::vector<QC> next(d);
        const QC lead_conj = c[d].conj();
        for (size_t j = 1; j <= d; ++j) next[j - 1] = lead_conj * c[j] - c[0] * c[d - j].conj();
        c = std::move(next);
    }
    return true;
}

std::vector<cplx> companion_roots(const UniPoly& f) {
    if (f.is_zero()) throw DegenerateInput("companion_roots: zero polynomial");
    const int d = f.degree();
    if (d == 0) return {};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
    const cplx lead = f.coeffs()[d];
    for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) C(i, d - 1) = -f.coeffs()[i] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + d);
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

DiskVerdict roots_in_closed_disk(const UniPoly& f, double tol) {
    if (f.is_zero()) throw DegenerateInput("roots_in_closed_disk: zero polynomial");
    DiskVerdict v;
    v.tol = tol;
    if (schur_cohn_all_inside(f, 1.0 - tol))
        v.verdict = DiskClass::inside;
    else if (!schur_cohn_all_inside(f, 1.0 + tol))
        v.verdict = DiskClass::outside;
    else
        v.verdict = DiskClass::boundary;

    for (cplx r : companion_roots(f)) {
        RootLocation loc;
        loc.value = r;
        loc.modulus = std::abs(r);
        if (loc.modulus < 1.0 - tol)
            loc.cls = DiskClass::inside;
        else if (loc.modulus <= 1.0 + tol)
            loc.cls = DiskClass::boundary;
        else
            loc.cls = DiskClass::outside;
        v.max_modulus = std::max(v.max_modulus, loc.modulus);
        v.roots.push_back(loc);
    }
    if (v.max_modulus > 1.0 + tol)
        v.companion_verdict = DiskClass::outside;
    else if (v.max_modulus >= 1.0 - tol)
        v.companion_verdict = DiskClass::boundary;
    else
        v.companion_verdict = DiskClass::inside;
    return v;
}

SelfInversive is_self_inversive(const UniPoly& f, double tol) {
    SelfInversive out;
    if (f.is_zero()) throw DegenerateInput("is_self_inversive: zero polynomial");
    const auto& c = f.coeffs();
    const int d = f.degree();
    // omega from the largest coefficient pair
    int best = 0;
    for (int j = 0; j <= d; ++j)
        if (std::abs(c[j]) > std::abs(c[best])) best = j;
    cplx omega = std::conj(c[d - best]) / c[best];
    double scale = std::abs(c[best]);
    double resid = std::abs(std::abs(omega) - 1.0);
    for (int j = 0; j <= d; ++j)
        resid = std::max(resid, std::abs(std::conj(c[d - j]) - omega * c[j]) / scale);
    out.omega = omega;
    out.residual = resid;
    out.is_self_inversive = resid <= tol;
    return out;
}

}  // namespace thetalab::disk

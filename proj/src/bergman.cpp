#include "thetalab/bergman.hpp"

#include <cmath>

namespace thetalab::bergman {

double pochhammer(double lambda, int k) {
    if (k < 0) throw Error("pochhammer: negative index");
    double acc = 1.0;
    for (int j = 0; j < k; ++j) acc *= (lambda + j);
    return acc;
}

double monomial_norm2(const Monomial& alpha, double lambda) {
    if (lambda < 1.0) throw Error("monomial_norm2: lambda >= 1 required");
    double acc = 1.0;
    for (int a : alpha)
        for (int j = 1; j <= a; ++j) acc *= static_cast<double>(j) / (lambda + (j - 1));
    return acc;
}

double poly_norm2(const MultiPoly& f, double lambda) {
    double acc = 0.0;
    for (const auto& [e, c] : f.terms()) acc += std::norm(c) * monomial_norm2(e, lambda);
    return acc;
}

cplx kernel_eval(const std::vector<cplx>& z, const std::vector<cplx>& w, double lambda) {
    if (z.size() != w.size()) throw DimensionMismatch("kernel_eval: dim mismatch");
    cplx acc = 1.0;
    for (size_t i = 0; i < z.size(); ++i) {
        if (std::abs(z[i]) >= 1.0 || std::abs(w[i]) >= 1.0)
            throw Error("kernel_eval: points must lie in the open polydisc");
        acc *= std::pow(cplx(1.0) - z[i] * std::conj(w[i]), -lambda);
    }
    return acc;
}

ModuleTruncation ModuleTruncation::build(int n, double lambda, int max_degree) {
    if (lambda < 1.0) throw Error("ModuleTruncation: lambda >= 1 required");
    ModuleTruncation t;
    t.n = n;
    t.lambda = lambda;
    t.max_degree = max_degree;
    // graded-lex enumeration of all monomials of degree <= D
    for (int d = 0; d <= max_degree; ++d) {
        Monomial e(n, 0);
        auto rec = [&](auto&& self, int pos, int rest) -> void {
            if (pos == n - 1) {
                e[pos] = rest;
                t.basis.push_back(e);
                return;
            }
            for (int k = 0; k <= rest; ++k) {
                e[pos] = k;
                self(self, pos + 1, rest - k);
            }
            e[pos] = 0;
        };
        if (n == 0) break;
        rec(rec, 0, d);
    }
    std::sort(t.basis.begin(), t.basis.end(), GradedLexLess{});
    for (int i = 0; i < static_cast<int>(t.basis.size()); ++i) {
        t.norms2.push_back(monomial_norm2(t.basis[i], lambda));
        t.index.emplace(t.basis[i], i);
    }
    return t;
}

int ModuleTruncation::prefix_size(int degree_cap) const {
    int count = 0;
    for (const auto& e : basis) {
        if (poly::total_degree(e) > degree_cap) break;
        ++count;
    }
    return count;
}

int ModuleTruncation::index_of(const Monomial& m) const {
    auto it = index.find(m);
    if (it == index.end()) throw DegreeOverflow("monomial outside the truncation window");
    return it->second;
}

}  // namespace thetalab::bergman

#include "thetalab/groups.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace thetalab::groups {

cplx root_of_unity(int m, long long t) {
    long long r = ((t % m) + m) % m;
    if (r == 0) return {1.0, 0.0};
    if (4 * r == 2LL * m) return {-1.0, 0.0};
    if (4 * r == 1LL * m) return {0.0, 1.0};
    if (4 * r == 3LL * m) return {0.0, -1.0};
    double ang = 2.0 * M_PI * static_cast<double>(r) / static_cast<double>(m);
    return {std::cos(ang), std::sin(ang)};
}

GroupSpec::GroupSpec(int m_, int p_, int n_) : m(m_), p(p_), n(n_) {
    if (m < 1 || p < 1 || n < 1) throw Error("GroupSpec: m, p, n must be positive");
    if (m % p != 0) throw Error("GroupSpec: p must divide m");
}

std::uint64_t GroupSpec::order() const {
    std::uint64_t o = 1;
    for (int i = 0; i < n; ++i) o *= static_cast<std::uint64_t>(m);
    for (int i = 2; i <= n; ++i) o *= static_cast<std::uint64_t>(i);
    return o / static_cast<std::uint64_t>(p);
}

bool GroupElement::operator<(const GroupElement& o) const {
    if (perm != o.perm) return perm < o.perm;
    return phases < o.phases;
}

GroupElement identity(int n) {
    GroupElement g;
    g.perm.resize(n);
    std::iota(g.perm.begin(), g.perm.end(), 0);
    g.phases.assign(n, 0);
    return g;
}

GroupElement compose(const GroupElement& a, const GroupElement& b, int m) {
    const int n = a.n();
    if (b.n() != n) throw ArityMismatch("compose: mismatched sizes");
    GroupElement c;
    c.perm.resize(n);
    c.phases.resize(n);
    for (int i = 0; i < n; ++i) {
        c.perm[i] = b.perm[a.perm[i]];
        c.phases[i] = ((a.phases[i] + b.phases[a.perm[i]]) % m + m) % m;
    }
    return c;
}

GroupElement inverse(const GroupElement& a, int m) {
    const int n = a.n();
    GroupElement c;
    c.perm.resize(n);
    c.phases.resize(n);
    for (int i = 0; i < n; ++i) {
        c.perm[a.perm[i]] = i;
        c.phases[a.perm[i]] = ((-a.phases[i]) % m + m) % m;
    }
    return c;
}

GroupElement reflection_transposition(int n, int m, int i, int j, int k) {
    GroupElement g = identity(n);
    g.perm[i] = j;
    g.perm[j] = i;
    g.phases[i] = ((k % m) + m) % m;
    g.phases[j] = ((-k % m) + m) % m;
    return g;
}

GroupElement reflection_diagonal(int n, int m, int i, int k) {
    GroupElement g = identity(n);
    g.phases[i] = ((k % m) + m) % m;
    return g;
}

Eigen::MatrixXcd matrix_of(const GroupElement& g, int m) {
    const int n = g.n();
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) M(i, g.perm[i]) = root_of_unity(m, g.phases[i]);
    return M;
}

bool satisfies_phase_constraint(const GroupElement& g, const GroupSpec& spec) {
    long long s = 0;
    for (int a : g.phases) s += a;
    return s % spec.p == 0;
}

std::vector<GroupElement> generate_group(const GroupSpec& spec, std::uint64_t cap) {
    if (spec.order() > cap)
        throw CapExceeded("generate_group: |G| = " + std::to_string(spec.order()) +
                          " exceeds cap " + std::to_string(cap));
    const int n = spec.n;
    const int m = spec.m;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<GroupElement> out;
    out.reserve(spec.order());
    do {
        std::vector<int> phases(n, 0);
        while (true) {
            long long s = 0;
            for (int a : phases) s += a;
            if (s % spec.p == 0) out.push_back(GroupElement{perm, phases});
            int i = n - 1;
            while (i >= 0 && phases[i] == m - 1) phases[i--] = 0;
            if (i < 0) break;
            ++phases[i];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<GroupElement> generators(const GroupSpec& spec) {
    std::vector<GroupElement> gens;
    const int n = spec.n, m = spec.m, p = spec.p;
    for (int i = 0; i + 1 < n; ++i)
        gens.push_back(reflection_transposition(n, m, i, i + 1, 0));
    if (m > 1 && n > 1) gens.push_back(reflection_transposition(n, m, 0, 1, 1));
    if (p < m) gens.push_back(reflection_diagonal(n, m, 0, p));
    if (gens.empty()) gens.push_back(identity(n));
    return gens;
}

std::vector<GroupElement> reflections(const GroupSpec& spec) {
    std::vector<GroupElement> out;
    const int n = spec.n, m = spec.m, p = spec.p;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < m; ++k)
                out.push_back(reflection_transposition(n, m, i, j, k));
    if (p < m) {
        for (int i = 0; i < n; ++i)
            for (int k = p; k < m; k += p) out.push_back(reflection_diagonal(n, m, i, k));
    }
    return out;
}

std::vector<cplx> act_on_point(const GroupElement& g, int m, const std::vector<cplx>& z) {
    if (static_cast<int>(z.size()) != g.n()) throw ArityMismatch("act_on_point: dim mismatch");
    GroupElement inv = inverse(g, m);
    std::vector<cplx> w(z.size());
    for (int i = 0; i < inv.n(); ++i)
        w[i] = root_of_unity(m, inv.phases[i]) * z[inv.perm[i]];
    return w;
}

bool is_reflection(const GroupElement& g, int m) {
    // fixed space of a monomial matrix: one dimension per permutation cycle
    // whose phase product is trivial; rank(I - M) = n - #trivial cycles.
    const int n = g.n();
    std::vector<bool> seen(n, false);
    int trivial_cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int j = i;
        long long phase_sum = 0;
        do {
            seen[j] = true;
            phase_sum += g.phases[j];
            j = g.perm[j];
        } while (j != i);
        if (phase_sum % m == 0) ++trivial_cycles;
    }
    return n - trivial_cycles == 1;
}

cplx sign_character(const GroupElement& g, int m) {
    // det M = sgn(perm) xi^{sum phases}; sign = det^{-1}
    const int n = g.n();
    std::vector<bool> seen(n, false);
    int transpositions = 0;
    long long phase_sum = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        do {
            seen[j] = true;
            phase_sum += g.phases[j];
            j = g.perm[j];
            ++len;
        } while (j != i);
        transpositions += len - 1;
    }
    cplx det = root_of_unity(m, phase_sum);
    if (transpositions % 2 != 0) det = -det;
    return 1.0 / det;
}

int element_order(const GroupElement& g, int m) {
    GroupElement e = identity(g.n());
    GroupElement x = g;
    int k = 1;
    while (!(x == e)) {
        x = compose(x, g, m);
        ++k;
        if (k > 1000000) throw Error("element_order: runaway");
    }
    return k;
}

std::vector<std::vector<int>> conjugacy_classes(const std::vector<GroupElement>& elements,
                                                int m) {
    std::map<GroupElement, int> index;
    for (int i = 0; i < static_cast<int>(elements.size()); ++i) index[elements[i]] = i;
    std::vector<bool> assigned(elements.size(), false);
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
        if (assigned[i]) continue;
        std::set<int> orbit;
        for (const auto& h : elements) {
            GroupElement c = compose(compose(h, elements[i], m), inverse(h, m), m);
            auto it = index.find(c);
            if (it == index.end()) throw Error("conjugacy_classes: set not closed");
            orbit.insert(it->second);
        }
        std::vector<int> cls(orbit.begin(), orbit.end());
        for (int j : cls) assigned[j] = true;
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace thetalab::groups

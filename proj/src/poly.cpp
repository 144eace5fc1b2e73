#include "thetalab/poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace thetalab::poly {

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int total_degree(const Monomial& a) { return std::accumulate(a.begin(), a.end(), 0); }

MultiPoly MultiPoly::constant(int num_vars, cplx c) {
    MultiPoly f(num_vars);
    f.add_term(Monomial(num_vars, 0), c);
    return f;
}

MultiPoly MultiPoly::variable(int num_vars, int i, int power) {
    MultiPoly f(num_vars);
    Monomial e(num_vars, 0);
    e.at(i) = power;
    f.add_term(e, 1.0);
    return f;
}

MultiPoly MultiPoly::monomial(Monomial exp, cplx c) {
    MultiPoly f(static_cast<int>(exp.size()));
    f.add_term(exp, c);
    return f;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

cplx MultiPoly::coeff(const Monomial& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? cplx(0.0) : it->second;
}

double MultiPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

void MultiPoly::add_term(const Monomial& e, cplx c, double drop_tol) {
    if (static_cast<int>(e.size()) != num_vars_) throw ArityMismatch("add_term: arity");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (std::abs(c) > drop_tol) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (std::abs(it->second) <= drop_tol || it->second == cplx(0.0)) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (num_vars_ != o.num_vars_) throw ArityMismatch("poly multiply: arity");
    MultiPoly r(num_vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Monomial e(num_vars_);
            for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(cplx s) const {
    MultiPoly r(num_vars_);
    if (s == cplx(0.0)) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
}

MultiPoly MultiPoly::operator-() const { return *this * cplx(-1.0); }

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(num_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Monomial d = e;
        --d[var];
        r.add_term(d, c * static_cast<double>(e[var]));
    }
    return r;
}

cplx MultiPoly::eval(const std::vector<cplx>& z) const {
    if (static_cast<int>(z.size()) != num_vars_) throw ArityMismatch("eval: arity");
    cplx acc = 0.0;
    for (const auto& [e, c] : terms_) {
        cplx t = c;
        for (int i = 0; i < num_vars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= z[i];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& args) const {
    if (static_cast<int>(args.size()) != num_vars_) throw ArityMismatch("compose: arity");
    const int out_vars = args.empty() ? 0 : args.front().num_vars();
    MultiPoly acc(out_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(out_vars, c);
        for (int i = 0; i < num_vars_; ++i)
            for (int k = 0; k < e[i]; ++k) t = t * args[i];
        acc = acc + t;
    }
    return acc;
}

std::map<int, MultiPoly> MultiPoly::homogeneous_parts() const {
    std::map<int, MultiPoly> parts;
    for (const auto& [e, c] : terms_) {
        int d = total_degree(e);
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, MultiPoly(num_vars_)).first;
        it->second.add_term(e, c);
    }
    return parts;
}

MultiPoly MultiPoly::cleaned(double tol) const {
    MultiPoly r(num_vars_);
    double cut = tol * max_abs_coeff();
    for (const auto& [e, c] : terms_)
        if (std::abs(c) > cut) r.add_term(e, c);
    return r;
}

bool MultiPoly::approx_equal(const MultiPoly& o, double tol) const {
    MultiPoly d = *this - o;
    double scale = std::max(1.0, std::max(max_abs_coeff(), o.max_abs_coeff()));
    return d.max_abs_coeff() <= tol * scale;
}

UniPoly::UniPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == cplx(0.0)) coeffs_.pop_back();
}

cplx UniPoly::eval(cplx z) const {
    cplx acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly{};
    std::vector<cplx> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::reversed_conjugate() const {
    std::vector<cplx> r(coeffs_.rbegin(), coeffs_.rend());
    for (auto& c : r) c = std::conj(c);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled_argument(double s) const {
    std::vector<cplx> r = coeffs_;
    double pw = 1.0;
    for (auto& c : r) {
        c *= pw;
        pw *= s;
    }
    return UniPoly(std::move(r));
}

cplx elementary_symmetric(int i, const std::vector<cplx>& values) {
    const int n = static_cast<int>(values.size());
    if (i < 0 || i > n) throw Error("elementary_symmetric: index out of range");
    return elementary_symmetric_all(values)[i];
}

std::vector<cplx> elementary_symmetric_all(const std::vector<cplx>& values) {
    std::vector<cplx> e(values.size() + 1, 0.0);
    e[0] = 1.0;
    for (size_t k = 0; k < values.size(); ++k)
        for (size_t i = std::min(k + 1, values.size()); i >= 1; --i)
            e[i] += values[k] * e[i - 1];
    return e;
}

MultiPoly elementary_symmetric_poly(int num_vars, int i) {
    if (i < 0 || i > num_vars) throw Error("elementary_symmetric_poly: index out of range");
    MultiPoly f(num_vars);
    std::vector<int> pick(i, 0);
    // iterate over all increasing index tuples
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == i) {
            Monomial e(num_vars, 0);
            for (int t = 0; t < i; ++t) e[pick[t]] = 1;
            f.add_term(e, 1.0);
            return;
        }
        for (int j = start; j < num_vars; ++j) {
            pick[pos] = j;
            self(self, pos + 1, j + 1);
        }
    };
    rec(rec, 0, 0);
    return f;
}

std::vector<cplx> ThetaMap::eval(const std::vector<cplx>& z) const {
    std::vector<cplx> out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(c.eval(z));
    return out;
}

ThetaMap theta_map(const GroupSpec& spec) {
    if (spec.n < 2) throw UnsupportedFamily("theta_map: defined for n >= 2");
    const int n = spec.n, m = spec.m, q = spec.q();
    ThetaMap tm;
    tm.spec = spec;
    std::vector<MultiPoly> powers;
    for (int i = 0; i < n; ++i) powers.push_back(MultiPoly::variable(n, i, m));
    for (int i = 1; i < n; ++i)
        tm.components.push_back(elementary_symmetric_poly(n, i).compose(powers));
    Monomial prod(n, q);
    tm.components.push_back(MultiPoly::monomial(prod, 1.0));
    return tm;
}

MultiPoly act_on_polynomial(const GroupElement& g, int m, const MultiPoly& f) {
    if (g.n() != f.num_vars()) throw ArityMismatch("act_on_polynomial: arity");
    MultiPoly r(f.num_vars());
    for (const auto& [e, c] : f.terms()) {
        long long phase = 0;
        Monomial b(f.num_vars(), 0);
        for (int i = 0; i < f.num_vars(); ++i) {
            phase += static_cast<long long>(g.phases[i]) * e[i];
            b[g.perm[i]] = e[i];
        }
        r.add_term(b, c * groups::root_of_unity(m, phase));
    }
    return r;
}

namespace {

// Laplace expansion along the first remaining row, memoized on column sets.
MultiPoly det_rec(const std::vector<std::vector<MultiPoly>>& mat, unsigned cols, int row,
                  std::map<unsigned, MultiPoly>& memo, int num_vars) {
    if (cols == 0) return MultiPoly::constant(num_vars, 1.0);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    MultiPoly acc(num_vars);
    int sign = 1;
    for (int j = 0, n = static_cast<int>(mat.size()); j < n; ++j) {
        if (!(cols & (1u << j))) continue;
        MultiPoly sub = det_rec(mat, cols & ~(1u << j), row + 1, memo, num_vars);
        MultiPoly term = mat[row][j] * sub;
        acc = (sign > 0) ? acc + term : acc - term;
        sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
}

}  // namespace

MultiPoly jacobian(const ThetaMap& tm) {
    const int n = tm.spec.n;
    std::vector<std::vector<MultiPoly>> mat(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mat[i].push_back(tm.components[i].derivative(j));
    std::map<unsigned, MultiPoly> memo;
    return det_rec(mat, (1u << n) - 1, 0, memo, n);
}

bool invariant_check(const MultiPoly& f, const GroupSpec& spec, double tol) {
    if (f.num_vars() != spec.n) throw ArityMismatch("invariant_check: arity");
    for (const auto& g : groups::generators(spec))
        if (!act_on_polynomial(g, spec.m, f).approx_equal(f, tol)) return false;
    return true;
}

MultiPoly express_in_invariants(const MultiPoly& f, const ThetaMap& tm, double tol) {
    const int n = tm.spec.n;
    if (f.degree() > 64) throw DegreeOverflow("express_in_invariants: degree cap 64");
    if (!invariant_check(f, tm.spec, 1e-10)) throw NotInvariant("express_in_invariants");
    MultiPoly result(n);
    std::vector<int> wts(n);
    for (int i = 0; i < n; ++i) wts[i] = tm.component_degree(i);

    for (const auto& [deg, part] : f.homogeneous_parts()) {
        // candidate exponents with matching weighted degree
        std::vector<Monomial> cands;
        Monomial cur(n, 0);
        auto rec = [&](auto&& self, int pos, int rest) -> void {
            if (pos == n) {
                if (rest == 0) cands.push_back(cur);
                return;
            }
            for (int k = 0; k * wts[pos] <= rest; ++k) {
                cur[pos] = k;
                self(self, pos + 1, rest - k * wts[pos]);
            }
            cur[pos] = 0;
        };
        rec(rec, 0, deg);
        if (cands.empty()) throw NoSolution("express_in_invariants: no candidate monomials");

        // expand each theta-power product
        std::vector<MultiPoly> expanded;
        std::map<Monomial, int, GradedLexLess> row_of;
        for (const auto& e : cands) {
            MultiPoly prod = MultiPoly::constant(n, 1.0);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < e[i]; ++k) prod = prod * tm.components[i];
            for (const auto& [mono, c] : prod.terms())
                if (!row_of.count(mono)) row_of.emplace(mono, static_cast<int>(row_of.size()));
            expanded.push_back(std::move(prod));
        }
        for (const auto& [mono, c] : part.terms())
            if (!row_of.count(mono)) row_of.emplace(mono, static_cast<int>(row_of.size()));

        Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(row_of.size(), cands.size());
        Eigen::VectorXcd b = Eigen::VectorXcd::Zero(row_of.size());
        for (size_t j = 0; j < expanded.size(); ++j)
            for (const auto& [mono, c] : expanded[j].terms()) A(row_of.at(mono), j) = c;
        for (const auto& [mono, c] : part.terms()) b(row_of.at(mono)) = c;

        Eigen::VectorXcd x = A.colPivHouseholderQr().solve(b);

        MultiPoly q_part(n);
        double xmax = x.cwiseAbs().maxCoeff();
        for (size_t j = 0; j < cands.size(); ++j)
            if (std::abs(x(j)) > tol * std::max(1.0, xmax)) q_part.add_term(cands[j], x(j));

        // verify by expansion
        MultiPoly recon = q_part.compose(tm.components);
        if (!recon.approx_equal(part, 1e-9))
            throw NoSolution("express_in_invariants: residual after solve");
        result = result + q_part;
    }
    return result;
}

DivisionResult divide(const MultiPoly& f, const MultiPoly& g, double drop_tol) {
    if (g.is_zero()) throw DegenerateInput("divide: zero divisor");
    const int n = f.num_vars();
    auto lead = *g.terms().rbegin();  // graded-lex leading term
    MultiPoly rem(n), quot(n), work = f;
    double cut = drop_tol * std::max(1.0, f.max_abs_coeff());
    while (!work.is_zero()) {
        auto [e, c] = *work.terms().rbegin();
        if (std::abs(c) <= cut) {
            MultiPoly w2(n);
            for (const auto& [ee, cc] : work.terms())
                if (std::abs(cc) > cut && ee != e) w2.add_term(ee, cc);
            work = std::move(w2);
            continue;
        }
        bool divisible = true;
        Monomial ratio(n);
        for (int i = 0; i < n; ++i) {
            ratio[i] = e[i] - lead.first[i];
            if (ratio[i] < 0) divisible = false;
        }
        if (divisible) {
            cplx factor = c / lead.second;
            quot.add_term(ratio, factor);
            work = work - (g * MultiPoly::monomial(ratio, factor));
            // force the leading monomial out: c - (c/L)*L can leave an ulp
            work.add_term(e, -work.coeff(e));
        } else {
            rem.add_term(e, c);
            MultiPoly w2(n);
            for (const auto& [ee, cc] : work.terms())
                if (ee != e) w2.add_term(ee, cc);
            work = std::move(w2);
        }
    }
    return {quot, rem};
}

}  // namespace thetalab::poly

#include "thetalab/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace thetalab::characters {

std::string to_string(const IrrepLabel& label) {
    if (label.partition.empty()) return label.name;
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < label.partition.size(); ++i) {
        if (i) os << ",";
        os << label.partition[i];
    }
    os << "]";
    return os.str();
}

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    std::vector<int> type;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        do {
            seen[j] = true;
            j = perm[j];
            ++len;
        } while (j != i);
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

namespace {

std::vector<int> beta_set(const std::vector<int>& lambda) {
    const int l = static_cast<int>(lambda.size());
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = lambda[i] + (l - 1 - i);
    std::sort(beta.begin(), beta.end());
    return beta;
}

long long mn_rec(std::vector<int> beta, const std::vector<int>& rho, size_t idx) {
    if (idx == rho.size()) return 1;
    const int r = rho[idx];
    long long total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int crossed = 0;
        for (int c : beta)
            if (target < c && c < beta[i]) ++crossed;
        std::vector<int> next = beta;
        next[i] = target;
        std::sort(next.begin(), next.end());
        long long sub = mn_rec(std::move(next), rho, idx + 1);
        total += (crossed % 2 == 0) ? sub : -sub;
    }
    return total;
}

}  // namespace

long long mn_character(const std::vector<int>& lambda, const std::vector<int>& rho) {
    std::vector<int> r = rho;
    std::sort(r.rbegin(), r.rend());
    return mn_rec(beta_set(lambda), r, 0);
}

namespace {

using Tableau = std::vector<std::vector<int>>;

void enumerate_syt(const std::vector<int>& lambda, std::vector<Tableau>& out) {
    const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    Tableau t(lambda.size());
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.push_back(t);
            return;
        }
        for (size_t r = 0; r < lambda.size(); ++r) {
            int len = static_cast<int>(t[r].size());
            if (len >= lambda[r]) continue;
            if (r > 0 && len >= static_cast<int>(t[r - 1].size())) continue;
            t[r].push_back(v);
            self(self, v + 1);
            t[r].pop_back();
        }
    };
    rec(rec, 1);
}

// content (col - row) of value v in a standard tableau
int content_of(const Tableau& t, int v) {
    for (size_t r = 0; r < t.size(); ++r)
        for (size_t c = 0; c < t[r].size(); ++c)
            if (t[r][c] == v) return static_cast<int>(c) - static_cast<int>(r);
    throw Error("content_of: value not in tableau");
}

Tableau swap_values(const Tableau& t, int a, int b) {
    Tableau s = t;
    for (auto& row : s)
        for (auto& x : row) {
            if (x == a)
                x = b;
            else if (x == b)
                x = a;
        }
    return s;
}

bool is_standard(const Tableau& t) {
    for (size_t r = 0; r < t.size(); ++r)
        for (size_t c = 0; c < t[r].size(); ++c) {
            if (c + 1 < t[r].size() && t[r][c] > t[r][c + 1]) return false;
            if (r + 1 < t.size() && c < t[r + 1].size() && t[r][c] > t[r + 1][c]) return false;
        }
    return true;
}

// Young orthogonal matrix of the adjacent transposition (k, k+1), 1-based.
Eigen::MatrixXd yor_adjacent(const std::vector<Tableau>& syt, int k) {
    const int d = static_cast<int>(syt.size());
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(d, d);
    std::map<Tableau, int> index;
    for (int i = 0; i < d; ++i) index[syt[i]] = i;
    for (int i = 0; i < d; ++i) {
        int ax = content_of(syt[i], k + 1) - content_of(syt[i], k);
        R(i, i) = 1.0 / ax;
        Tableau swapped = swap_values(syt[i], k, k + 1);
        if (is_standard(swapped)) {
            int j = index.at(swapped);
            R(j, i) = std::sqrt(1.0 - 1.0 / (static_cast<double>(ax) * ax));
        }
    }
    return R;
}

}  // namespace

int standard_tableau_count(const std::vector<int>& lambda) {
    std::vector<Tableau> syt;
    enumerate_syt(lambda, syt);
    return static_cast<int>(syt.size());
}

Eigen::MatrixXd young_orthogonal(const std::vector<int>& lambda, const std::vector<int>& perm) {
    std::vector<Tableau> syt;
    enumerate_syt(lambda, syt);
    const int d = static_cast<int>(syt.size());
    Eigen::MatrixXd R = Eigen::MatrixXd::Identity(d, d);
    // factor perm into adjacent transpositions consistent with compose():
    // repeatedly clear a descent, so perm = s_{b1} s_{b2} ... s_{bk}.
    std::vector<int> w = perm;
    const int n = static_cast<int>(w.size());
    while (true) {
        int i = -1;
        for (int j = 0; j + 1 < n; ++j)
            if (w[j] > w[j + 1]) {
                i = j;
                break;
            }
        if (i < 0) break;
        std::swap(w[i], w[i + 1]);
        R *= yor_adjacent(syt, i + 1);
    }
    return R;
}

namespace {

bool is_symmetric_family(const GroupSpec& s) { return s.m == 1 && s.p == 1; }
bool is_dihedral_family(const GroupSpec& s) { return s.n == 2 && s.m == s.p && s.m >= 2; }

// rotation exponent a for diagonal elements of G(k,k,2) (phases (a, -a)),
// reflection exponent a for the swap elements
struct DihedralForm {
    bool reflection;
    int a;
};

DihedralForm dihedral_form(const GroupElement& g) {
    return DihedralForm{g.perm[0] == 1, g.phases[0]};
}

cplx dihedral_char(const std::string& name, int j, int k, const GroupElement& g) {
    auto [refl, a] = dihedral_form(g);
    if (name == "triv") return 1.0;
    if (name == "sign") return refl ? -1.0 : 1.0;
    if (name == "rho1") return (a % 2 == 0) ? 1.0 : -1.0;
    if (name == "rho2") {
        int e = a + (refl ? 1 : 0);
        return (e % 2 == 0) ? 1.0 : -1.0;
    }
    // two-dimensional: trace of diag/anti-diag monomial matrix
    if (refl) return 0.0;
    return groups::root_of_unity(k, static_cast<long long>(j) * a) +
           groups::root_of_unity(k, -static_cast<long long>(j) * a);
}

}  // namespace

CharacterTable CharacterTable::build(const GroupSpec& spec) {
    if (!is_symmetric_family(spec) && !is_dihedral_family(spec))
        throw UnsupportedFamily("character_table: only G(1,1,n), n <= 6, and G(k,k,2), k <= 12");
    if (is_symmetric_family(spec) && spec.n > 6)
        throw UnsupportedFamily("character_table: G(1,1,n) supported for n <= 6");
    if (is_dihedral_family(spec) && spec.m > 12)
        throw UnsupportedFamily("character_table: G(k,k,2) supported for k <= 12");

    CharacterTable t;
    t.spec_ = spec;
    t.elements_ = groups::generate_group(spec);
    auto cls = groups::conjugacy_classes(t.elements_, spec.m);
    for (auto& c : cls) {
        ConjClass cc;
        cc.representative = t.elements_[c.front()];
        cc.size = static_cast<int>(c.size());
        cc.member_indices = c;
        t.classes_.push_back(std::move(cc));
    }
    for (int ci = 0; ci < static_cast<int>(t.classes_.size()); ++ci)
        for (int e : t.classes_[ci].member_indices) t.class_index_[t.elements_[e]] = ci;

    if (is_symmetric_family(spec)) {
        for (const auto& part : partitions_of(spec.n)) {
            IrrepLabel lbl;
            lbl.partition = part;
            lbl.name = to_string(lbl);
            lbl.degree = standard_tableau_count(part);
            t.irreps_.push_back(lbl);
        }
        for (const auto& lbl : t.irreps_) {
            std::vector<cplx> row;
            for (const auto& c : t.classes_)
                row.push_back(static_cast<double>(
                    mn_character(lbl.partition, cycle_type(c.representative.perm))));
            t.values_.push_back(std::move(row));
        }
    } else {
        const int k = spec.m;
        std::vector<std::pair<std::string, int>> labels = {{"triv", 0}, {"sign", 0}};
        if (k % 2 == 0) {
            labels.push_back({"rho1", 0});
            labels.push_back({"rho2", 0});
        }
        const int two_dim = (k % 2 == 0) ? k / 2 - 1 : (k - 1) / 2;
        for (int j = 1; j <= two_dim; ++j) labels.push_back({"dim2:" + std::to_string(j), j});
        for (const auto& [name, j] : labels) {
            IrrepLabel lbl;
            lbl.name = name;
            lbl.degree = (j > 0) ? 2 : 1;
            t.irreps_.push_back(lbl);
            std::vector<cplx> row;
            for (const auto& c : t.classes_)
                row.push_back(dihedral_char(name, j, k, c.representative));
            t.values_.push_back(std::move(row));
        }
    }
    return t;
}

int CharacterTable::class_of(const GroupElement& g) const {
    auto it = class_index_.find(g);
    if (it == class_index_.end()) throw Error("class_of: element not in group");
    return it->second;
}

cplx CharacterTable::chi(int irrep_idx, const GroupElement& g) const {
    return values_[irrep_idx][class_of(g)];
}

int CharacterTable::irrep_index(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(irreps_.size()); ++i)
        if (irreps_[i].name == name || to_string(irreps_[i]) == name) return i;
    if (is_symmetric_family(spec_)) {
        std::vector<int> want;
        if (name == "triv")
            want = {spec_.n};
        else if (name == "sign")
            want.assign(spec_.n, 1);
        else if (name == "std" && spec_.n >= 2)
            want = {spec_.n - 1, 1};
        for (int i = 0; i < static_cast<int>(irreps_.size()); ++i)
            if (irreps_[i].partition == want) return i;
    }
    throw UnsupportedIrrep("unknown irrep label: " + name);
}

double CharacterTable::orthogonality_residual() const {
    const double order = static_cast<double>(spec_.order());
    double worst = 0.0;
    for (size_t r = 0; r < irreps_.size(); ++r)
        for (size_t s = 0; s < irreps_.size(); ++s) {
            cplx acc = 0.0;
            for (size_t c = 0; c < classes_.size(); ++c)
                acc += static_cast<double>(classes_[c].size) * values_[r][c] *
                       std::conj(values_[s][c]);
            cplx expect = (r == s) ? cplx(order, 0.0) : cplx(0.0, 0.0);
            worst = std::max(worst, std::abs(acc - expect));
        }
    return worst;
}

bool CharacterTable::has_representation(int irrep_idx) const {
    const auto& lbl = irreps_[irrep_idx];
    if (lbl.degree == 1) return true;
    if (is_dihedral_family(spec_)) return true;
    if (is_symmetric_family(spec_)) return spec_.n <= 4;
    return false;
}

Eigen::MatrixXcd CharacterTable::representation(int irrep_idx, const GroupElement& g) const {
    const auto& lbl = irreps_[irrep_idx];
    if (lbl.degree == 1) {
        Eigen::MatrixXcd r(1, 1);
        r(0, 0) = chi(irrep_idx, g);
        return r;
    }
    if (is_dihedral_family(spec_)) {
        int j = std::stoi(lbl.name.substr(5));
        GroupElement scaled = g;
        for (auto& a : scaled.phases) a = ((a * j) % spec_.m + spec_.m) % spec_.m;
        return groups::matrix_of(scaled, spec_.m);
    }
    if (!has_representation(irrep_idx))
        throw UnsupportedIrrep("representation matrices need Young orthogonal form (n <= 4)");
    return young_orthogonal(lbl.partition, g.perm).cast<cplx>();
}

}  // namespace thetalab::characters

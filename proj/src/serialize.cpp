#include "thetalab/serialize.hpp"

#include <sstream>

namespace thetalab::serialize {

json complex_to_json(groups::cplx z) { return json::array({z.real(), z.imag()}); }

json element_to_json(const groups::GroupElement& g) {
    return json{{"perm", g.perm}, {"phases", g.phases}};
}

groups::GroupElement element_from_json(const json& j) {
    groups::GroupElement g;
    g.perm = j.at("perm").get<std::vector<int>>();
    g.phases = j.at("phases").get<std::vector<int>>();
    return g;
}

json table_to_json(const characters::CharacterTable& t) {
    json entries = json::array();
    for (size_t r = 0; r < t.irreps().size(); ++r)
        for (size_t c = 0; c < t.classes().size(); ++c) {
            json e;
            e["irrep"] = characters::to_string(t.irreps()[r]);
            e["class"] = element_to_json(t.classes()[c].representative);
            e["value"] = complex_to_json(t.value(static_cast<int>(r), static_cast<int>(c)));
            entries.push_back(std::move(e));
        }
    json out;
    out["group"] = {{"m", t.spec().m}, {"p", t.spec().p}, {"n", t.spec().n}};
    json degrees = json::object();
    for (const auto& lbl : t.irreps()) degrees[characters::to_string(lbl)] = lbl.degree;
    out["degrees"] = degrees;
    json sizes = json::array();
    for (const auto& c : t.classes()) sizes.push_back(c.size);
    out["class_sizes"] = sizes;
    out["entries"] = entries;
    return out;
}

json poly_to_json(const poly::MultiPoly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back(json{{"exp", e}, {"re", c.real()}, {"im", c.imag()}});
    return json{{"vars", f.num_vars()}, {"terms", terms}};
}

poly::MultiPoly poly_from_json(const json& j) {
    poly::MultiPoly f(j.at("vars").get<int>());
    for (const auto& t : j.at("terms")) {
        auto e = t.at("exp").get<std::vector<int>>();
        double re = t.value("re", 0.0), im = t.value("im", 0.0);
        f.add_term(e, {re, im});
    }
    return f;
}

json point_to_json(const std::vector<groups::cplx>& z) {
    json out = json::array();
    for (auto c : z) out.push_back(json{{"re", c.real()}, {"im", c.imag()}});
    return out;
}

std::vector<groups::cplx> point_from_json(const json& j) {
    std::vector<groups::cplx> out;
    for (const auto& e : j) {
        if (e.is_number()) {
            out.emplace_back(e.get<double>(), 0.0);
        } else {
            out.emplace_back(e.value("re", 0.0), e.value("im", 0.0));
        }
    }
    return out;
}

json disk_verdict_to_json(const disk::DiskVerdict& v) {
    json roots = json::array();
    for (const auto& r : v.roots)
        roots.push_back(json{{"re", r.value.real()},
                             {"im", r.value.imag()},
                             {"modulus", r.modulus},
                             {"class", disk::to_string(r.cls)}});
    return json{{"verdict", disk::to_string(v.verdict)},
                {"companion_verdict", disk::to_string(v.companion_verdict)},
                {"roots", roots},
                {"max_modulus", v.max_modulus},
                {"tol", v.tol}};
}

json membership_to_json(const domain::MembershipReport& r) {
    json out;
    out["verdict"] = domain::to_string(r.verdict);
    json roots = json::array();
    for (const auto& root : r.disk.roots)
        roots.push_back(
            json{{"re", root.value.real()}, {"im", root.value.imag()}, {"modulus", root.modulus}});
    out["roots"] = roots;
    out["max_modulus"] = r.disk.max_modulus;
    out["tol"] = r.disk.tol;
    return out;
}

json shilov_to_json(const domain::ShilovReport& r) {
    json out;
    out["verdict"] = r.verdict;
    json roots = json::array();
    for (const auto& root : r.disk.roots)
        roots.push_back(
            json{{"re", root.value.real()}, {"im", root.value.imag()}, {"modulus", root.modulus}});
    out["roots"] = roots;
    out["subverdicts"] = json{{"a", r.sub_a}, {"b", r.sub_b}, {"c", r.sub_c}};
    out["agree"] = r.agree;
    return out;
}

json matrix_to_json(const Eigen::MatrixXcd& M) {
    json rows = json::array();
    for (int i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < M.cols(); ++j)
            row.push_back(json::array({M(i, j).real(), M(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
    const int rows = static_cast<int>(j.size());
    const int cols = rows ? static_cast<int>(j[0].size()) : 0;
    Eigen::MatrixXcd M(rows, cols);
    for (int a = 0; a < rows; ++a)
        for (int b = 0; b < cols; ++b)
            M(a, b) = groups::cplx(j[a][b][0].get<double>(), j[a][b][1].get<double>());
    return M;
}

std::string matrix_to_csv(const Eigen::MatrixXcd& M) {
    std::ostringstream os;
    os << "row,col,re,im\n";
    os.precision(17);
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
            os << i << "," << j << "," << M(i, j).real() << "," << M(i, j).imag() << "\n";
    return os.str();
}

json symbols_to_json(const models::SymbolTuple& S) {
    json blocks = json::array();
    for (const auto& per_i : S.A) {
        json per_l = json::array();
        for (const auto& M : per_i) per_l.push_back(matrix_to_json(M));
        blocks.push_back(std::move(per_l));
    }
    return json{{"p", S.p}, {"n", S.n}, {"r", S.r}, {"A", blocks}};
}

models::SymbolTuple symbols_from_json(const json& j) {
    models::SymbolTuple S;
    S.p = j.at("p").get<int>();
    S.n = j.at("n").get<int>();
    S.r = j.at("r").get<int>();
    for (const auto& per_i : j.at("A")) {
        std::vector<Eigen::MatrixXcd> mats;
        for (const auto& m : per_i) mats.push_back(matrix_from_json(m));
        S.A.push_back(std::move(mats));
    }
    if (static_cast<int>(S.A.size()) != S.n - 1)
        throw ShapeMismatch("symbols_from_json: expected n-1 symbol coefficient lists");
    for (const auto& per_i : S.A) {
        if (static_cast<int>(per_i.size()) != S.p + 1)
            throw ShapeMismatch("symbols_from_json: expected p+1 coefficients");
        for (const auto& M : per_i)
            if (M.rows() != S.r || M.cols() != S.r)
                throw ShapeMismatch("symbols_from_json: matrix size != r");
    }
    return S;
}

json report_to_json(const experiments::ExperimentReport& r, bool with_timings) {
    json out;
    out["schema_version"] = 1;
    out["id"] = r.id;
    json inputs = json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    out["inputs"] = inputs;
    json quantities = json::array();
    for (const auto& q : r.quantities)
        quantities.push_back(json{{"name", q.name}, {"value", q.value}, {"from", q.provenance}});
    out["quantities"] = quantities;
    out["verdict"] = r.verdict;
    if (!r.notes.empty()) out["notes"] = r.notes;
    if (with_timings) out["runtime_ms"] = r.runtime_ms;
    return out;
}

}  // namespace thetalab::serialize

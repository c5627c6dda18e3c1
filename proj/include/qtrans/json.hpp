#ifndef QTRANS_JSON_HPP
#define QTRANS_JSON_HPP

// JSON documents for the library results. Needs nlohmann/json on the include
// path. Rationals are always strings "a/b"; polynomials are expression
// strings in the listed variables.

#include <string>
#include <vector>

#include <json.hpp>

#include "classify.hpp"

namespace qtrans::json {

using Json = nlohmann::ordered_json;

inline Json rational(const Rat& r) { return to_fraction_string(r); }

inline Json vector(const RatVector& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rational(x));
    return out;
}

inline Json vectors(const std::vector<RatVector>& vs)
{
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(vector(v));
    return out;
}

inline Json matrix(const RatMatrix& m)
{
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

inline Json names(const VarNames& vars)
{
    Json out = Json::array();
    for (const auto& v : vars) out.push_back(v);
    return out;
}

inline Json map(const PolyMap& m, const VarNames& vars)
{
    Json out = Json::array();
    for (const auto& c : m) out.push_back(print(c, vars));
    return out;
}

inline Json map(const PolyMap& m) { return map(m, indexed_names(m.arity())); }

inline Json report(const QtReport& r)
{
    Json out;
    out["quasi_translation"] = r.passed();
    out["inverse"] = r.cond_inverse;
    out["deformation"] = r.cond_deform;
    out["jh_times_h"] = r.cond_jhh;
    out["conditions_agree"] = r.conditions_agree();
    out["nilpotency_index"] = r.nilpotency_index ? Json(*r.nilpotency_index) : Json(nullptr);
    out["series_identity"] = r.series_identity;
    return out;
}

inline Json relation(const Relation& rel)
{
    const int n = rel.target.arity();
    const VarNames y = indexed_names(rel.r.arity(), "y");
    Json out;
    out["variables"] = names(y);
    out["relation"] = print(rel.r, y);
    out["degree"] = rel.degree;
    out["minimal"] = rel.minimal;
    out["target_variables"] = names(indexed_names(n));
    out["target"] = map(rel.target);
    return out;
}

inline Json search(const RelationSearch& s)
{
    Json out;
    out["status"] = std::string(to_string(s.status));
    out["degree_cap"] = s.degree_cap;
    out["relation"] = s.relation ? relation(*s.relation) : Json(nullptr);
    return out;
}

inline Json certificate(const HesseCertificate& c)
{
    Json out;
    out["c"] = vector(c.c);
    out["c0"] = rational(c.c0);
    return out;
}

inline Json span(const SpanReport& s)
{
    Json out;
    out["dim"] = s.dim;
    out["basis"] = vectors(s.basis);
    out["annihilators"] = vectors(s.annihilators);
    return out;
}

inline Json relation_map(const RelationMap& m)
{
    Json out;
    out["map"] = map(m.h);
    out["row_dependence"] = m.row_dependence;
    out["column_dependence"] = m.column_dependence;
    out["report"] = m.report ? report(*m.report) : Json(nullptr);
    return out;
}

inline Json classification(const Classification& c)
{
    const VarNames x = indexed_names(c.normal_form.arity());
    const auto& d = c.decomposition;
    Json out;
    out["kind"] = c.kind == FormKind::translation ? "translation" : "two-tail";
    out["T"] = matrix(c.t);
    out["s"] = c.s;
    out["normal_form"] = map(c.normal_form, x);
    out["g"] = print(d.g, x);
    out["a"] = print(d.a, x);
    out["b"] = print(d.b, x);
    Json parts = Json::array();
    for (const auto& [k, p] : d.parts) parts.push_back({{"k", k}, {"c", print(p, x)}});
    out["parts"] = std::move(parts);
    if (c.rank_one)
        out["rank_one"] = {{"g", print(c.rank_one->g, x)}, {"c", vector(c.rank_one->c)}};
    else
        out["rank_one"] = nullptr;
    return out;
}

} // namespace qtrans::json

#endif

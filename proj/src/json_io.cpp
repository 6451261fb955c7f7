#include "k4census/json_io.hpp"

#include <sstream>

#include "k4census/errors.hpp"

namespace k4c::io {

using nlohmann::json;

json rational(const mpq_class& v) { return {{"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}}; }

mpq_class parse_rational(const json& j) {
    mpq_class v(mpz_class(j.at("num").get<std::string>()), mpz_class(j.at("den").get<std::string>()));
    v.canonicalize();
    return v;
}

json to_json(const CensusRecord& r) {
    return {
        {"n", std::to_string(r.n)},   {"m", std::to_string(r.m)},   {"t3", to_string(r.t3)},
        {"t3p", to_string(r.t3p)},    {"t3pp", to_string(r.t3pp)},  {"i3", to_string(r.i3)},
        {"t4", to_string(r.t4)},      {"t4p", to_string(r.t4p)},
    };
}

json to_json(const VertexTriangleProfile& p) {
    json arr = json::array();
    for (Count t : p.t) arr.push_back(to_string(t));
    return arr;
}

json to_json(const IdentityCertificate& c) {
    json j = {
        {"identity", identity_name(c.identity)},
        {"lhs", rational(c.lhs)},
        {"rhs", rational(c.rhs)},
        {"slack", rational(c.slack)},
        {"kind", relation_name(c.kind)},
        {"holds", c.holds},
        {"hypothesis_required", hypothesis_name(c.hypothesis_required)},
        {"hypothesis_satisfied", c.hypothesis_satisfied},
    };
    if (c.intermediate) {
        const auto& i = *c.intermediate;
        j["intermediate"] = {
            {"label", i.label},
            {"lhs", rational(i.lhs)},
            {"rhs", rational(i.rhs)},
            {"kind", relation_name(i.kind)},
            {"holds", i.holds},
        };
    }
    return j;
}

json to_json(const SearchResult& r) {
    return {
        {"n", std::to_string(r.n)},
        {"f_value", to_string(r.f_value)},
        {"exhaustive", r.exhaustive},
        {"witnesses", r.witnesses},
        {"graphs_examined", to_string(r.graphs_examined)},
        {"elapsed_ms", std::to_string(r.elapsed_ms)},
    };
}

json to_json(const BoundReport& r) {
    const auto& mz = r.minimizer;
    json j = {
        {"n", std::to_string(r.n)},
        {"upper_poly", rational(r.upper_poly)},
        {"construction_value", to_string(r.construction_value)},
        {"lower_cubic_min_m", rational(mz.argmin)},
        {"lower_cubic_min_value", rational(mz.value)},
        {"lower_cubic_three_term_min", rational(mz.three_term_value)},
        {"lower_cubic_local_max_m", rational(mz.local_max)},
        {"implied_t4_bound", rational(mz.implied_t4_bound)},
        {"best_integer_m", std::to_string(mz.best_integer_m)},
        {"dropped_terms", "O(n^3) remainder of the exact degree inequality is not included"},
    };
    if (r.per_graph) {
        const auto& g = *r.per_graph;
        j["per_graph"] = {
            {"m", std::to_string(g.m)},
            {"regularity_deviation", rational(g.regularity_deviation)},
            {"lower_cubic_at_m", rational(g.lower_cubic_at_m)},
            {"t4", to_string(g.t4)},
        };
    }
    return j;
}

json to_json(const BlowupOptimum& o) {
    json parts = json::array();
    for (auto p : o.spec.parts) parts.push_back(std::to_string(p));
    return {{"n", std::to_string(o.spec.order())}, {"parts", parts}, {"t4", to_string(o.t4)}};
}

json construction_json(const BlowupSpec& spec) {
    json parts = json::array();
    for (auto p : spec.parts) parts.push_back(std::to_string(p));
    return {{"parts", parts}, {"n", std::to_string(spec.order())}, {"t4_closed_form", to_string(blowup_t4_closed_form(spec))}};
}

namespace {

std::string rational_cell(const mpq_class& v) { return v.get_str(); }

}  // namespace

std::string ratio_csv(const std::vector<RatioRow>& rows) {
    std::ostringstream out;
    out << "p,n,t4,ratio\n";
    for (const auto& r : rows) out << r.p << ',' << r.n << ',' << to_string(r.t4) << ',' << rational_cell(r.ratio) << '\n';
    return out.str();
}

std::string bound_csv(const std::vector<BoundReport>& reports) {
    std::ostringstream out;
    out << "n,upper_poly,construction_value,lower_cubic_min_m,lower_cubic_min_value,implied_t4_bound\n";
    for (const auto& r : reports)
        out << r.n << ',' << rational_cell(r.upper_poly) << ',' << to_string(r.construction_value) << ','
            << rational_cell(r.minimizer.argmin) << ',' << rational_cell(r.minimizer.value) << ','
            << rational_cell(r.minimizer.implied_t4_bound) << '\n';
    return out.str();
}

}  // namespace k4c::io

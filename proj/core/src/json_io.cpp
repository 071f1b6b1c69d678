#include "vogel/json_io.hpp"

#include "vogel/errors.hpp"

namespace vogel {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + "/" + key, "missing field");
    return *it;
}

const Json& array_field(const Json& j, const char* key, const std::string& where) {
    const Json& a = field(j, key, where);
    if (!a.is_array()) throw ParseError(where + "/" + key, "expected an array");
    return a;
}

int int_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_number_integer()) throw ParseError(where + "/" + key, "expected an integer");
    return v.get<int>();
}

Basis basis_from_json(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where, "expected \"primed\" or \"unprimed\"");
    const auto s = j.get<std::string>();
    if (s == "primed") return Basis::Primed;
    if (s == "unprimed") return Basis::Unprimed;
    throw ParseError(where, "unknown basis '" + s + "'");
}

Triple triple_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) throw ParseError(where, "expected three coefficients");
    Triple t;
    for (std::size_t i = 0; i < 3; ++i) t[i] = rational_from_json(j[i], where + "/" + std::to_string(i));
    return t;
}

Json triple_to_json(const Triple& t) {
    Json a = Json::array();
    for (const auto& q : t) a.push_back(rational_to_json(q));
    return a;
}

std::vector<int> int_list(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) throw ParseError(where + "/" + std::to_string(i), "expected an integer");
        out.push_back(j[i].get<int>());
    }
    return out;
}

Json perm_json(const Perm& p) {
    Json a = Json::array();
    for (int v : p) a.push_back(v + 1);
    return a;
}

Json rationals(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(rational_to_json(q));
    return a;
}

}  // namespace

Json rational_to_json(const Rational& q) {
    const auto pr = to_pair(q);
    return Json::array({pr[0], pr[1]});
}

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where, e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw ParseError(where, "expected a [\"num\", \"den\"] pair of strings");
    try {
        return from_pair(j[0].get<std::string>(), j[1].get<std::string>());
    } catch (const Error& e) {
        throw ParseError(where, e.what());
    }
}

Json point_to_json(const ProjPoint& p) {
    return {{"coeffs", triple_to_json(p.coords())}, {"basis", std::string(to_string(p.basis()))}};
}

ProjPoint point_from_json(const Json& j, const std::string& where) {
    const Triple t = triple_from_json(field(j, "coeffs", where), where + "/coeffs");
    const Basis b = basis_from_json(field(j, "basis", where), where + "/basis");
    try {
        return ProjPoint(t, b);
    } catch (const DegenerateInput& e) {
        throw ParseError(where, e.what());
    }
}

Json form_to_json(const LinearForm& f) {
    return {{"coeffs", triple_to_json(f.coeffs())}, {"basis", std::string(to_string(f.basis()))}};
}

LinearForm form_from_json(const Json& j, const std::string& where) {
    const Triple t = triple_from_json(field(j, "coeffs", where), where + "/coeffs");
    const Basis b = basis_from_json(field(j, "basis", where), where + "/basis");
    try {
        return LinearForm(t, b);
    } catch (const DegenerateInput& e) {
        throw ParseError(where, e.what());
    }
}

Json formula_to_json(const FactorProduct& f) {
    Json num = Json::array(), den = Json::array();
    for (const auto& l : f.num()) num.push_back(form_to_json(l));
    for (const auto& l : f.den()) den.push_back(form_to_json(l));
    return {{"quantum", f.quantum()},
            {"sign", f.sign()},
            {"scalar", rational_to_json(f.scalar())},
            {"basis", std::string(to_string(f.basis()))},
            {"num", num},
            {"den", den}};
}

FactorProduct formula_from_json(const Json& j, const std::string& where) {
    const Json& q = field(j, "quantum", where);
    if (!q.is_boolean()) throw ParseError(where + "/quantum", "expected a boolean");
    const int sign = int_field(j, "sign", where);
    const Rational scalar = j.contains("scalar") ? rational_from_json(j["scalar"], where + "/scalar") : Rational(1);
    const Basis basis = basis_from_json(field(j, "basis", where), where + "/basis");
    std::vector<LinearForm> num, den;
    const Json& jn = array_field(j, "num", where);
    const Json& jd = array_field(j, "den", where);
    for (std::size_t i = 0; i < jn.size(); ++i) num.push_back(form_from_json(jn[i], where + "/num/" + std::to_string(i)));
    for (std::size_t i = 0; i < jd.size(); ++i) den.push_back(form_from_json(jd[i], where + "/den/" + std::to_string(i)));
    try {
        return FactorProduct(std::move(num), std::move(den), q.get<bool>(), basis, sign, scalar);
    } catch (const Error& e) {
        throw ParseError(where.empty() ? "/" : where, e.what());
    }
}

Json table_to_json(const ConfigurationTable& t) {
    return {{"p", t.p}, {"l", t.l}, {"gamma", t.gamma}, {"pi", t.pi}, {"columns", t.columns}};
}

ConfigurationTable table_from_json(const Json& j, const std::string& where) {
    ConfigurationTable t;
    t.p = int_field(j, "p", where);
    t.l = int_field(j, "l", where);
    t.gamma = int_field(j, "gamma", where);
    t.pi = int_field(j, "pi", where);
    const Json& cols = array_field(j, "columns", where);
    for (std::size_t i = 0; i < cols.size(); ++i)
        t.columns.push_back(int_list(cols[i], where + "/columns/" + std::to_string(i)));
    return t;
}

Json coloring_to_json(const Coloring& c) {
    return {{"black", c.black}, {"red", c.red}, {"green", c.green}};
}

Coloring coloring_from_json(const Json& j, const std::string& where) {
    return Coloring{int_list(field(j, "black", where), where + "/black"),
                    int_list(field(j, "red", where), where + "/red"),
                    int_list(field(j, "green", where), where + "/green")};
}

Json perms_to_json(const PermTriple& p) {
    Json j{{"s", perm_json(p.s)}, {"p", perm_json(p.p)}};
    j["cycles"] = {{"s", cycle_notation(p.s)}, {"p", cycle_notation(p.p)}};
    if (!p.v.empty()) {
        j["v"] = perm_json(p.v);
        j["cycles"]["v"] = cycle_notation(p.v);
    }
    return j;
}

Json report_to_json(const IdentityReport& r) {
    Json j{{"verdict", std::string(to_string(r.verdict))}};
    j["line"] = r.line ? form_to_json(*r.line) : Json(nullptr);
    if (r.verdict == Verdict::IdenticallyOne || r.verdict == Verdict::IdenticallyConstant)
        j["constant"] = rational_to_json(r.constant);
    if (r.witness) {
        Json w{{"point", point_to_json(r.witness->point)}, {"value", rational_to_json(r.witness->value)}};
        if (r.witness->x) w["x"] = *r.witness->x;
        if (r.witness->quantum_value) w["quantum_value"] = *r.witness->quantum_value;
        j["witness"] = w;
    }
    Json m = Json::array();
    for (const auto& fm : r.matching)
        m.push_back({{"num", fm.num}, {"den", fm.den}, {"factor", rational_to_json(fm.factor)}});
    j["matching"] = m;
    if (r.verdict == Verdict::VanishingFactor) {
        j["vanishing_num"] = r.vanishing_num;
        j["vanishing_den"] = r.vanishing_den;
    }
    return j;
}

Json eval_to_json(const EvalResult& r) {
    Json j{{"kind", std::string(to_string(r.kind))}};
    if (r.finite()) j["value"] = rational_to_json(r.value);
    j["vanishing_num"] = r.vanishing_num;
    j["vanishing_den"] = r.vanishing_den;
    return j;
}

Json family_to_json(const SolutionFamily& f) {
    const auto& sys = f.system;
    Json mult{{"c", rationals(sys.mult().c)}, {"k", rationals(sys.mult().kmul)}};
    if (!sys.mult().r.empty()) mult["r"] = rationals(sys.mult().r);
    Json unknowns = Json::object();
    for (std::size_t u = 0; u < f.expr.size(); ++u) {
        Json terms = Json::object();
        for (std::size_t p = 0; p < f.params.size(); ++p)
            if (f.expr[u][p] != 0) terms[f.params[p]] = rational_to_json(f.expr[u][p]);
        unknowns[ConstraintSystem::unknown_name(sys.k(), u)] = terms;
    }
    return {{"k", sys.k()},
            {"lines", std::string(to_string(sys.lines()))},
            {"perms", perms_to_json(sys.perms())},
            {"multipliers", mult},
            {"params", f.params},
            {"unknowns", unknowns},
            {"quantum", f.quantum},
            {"trivial", f.trivial}};
}

Json enumeration_to_json(const EnumerationResult& r) {
    Json fams = Json::array();
    for (const auto& f : r.families) {
        Json j = family_to_json(f.family);
        j["case"] = f.case_index;
        Json reps = Json::array();
        for (const auto& rep : f.line_reports) reps.push_back(report_to_json(rep));
        j["line_reports"] = reps;
        fams.push_back(std::move(j));
    }
    return {{"perm_tuples", r.perm_tuples}, {"cases", r.cases},     {"total_cases", r.total_cases},
            {"pruned", r.pruned},           {"partial", r.partial}, {"families", fams}};
}

Json sketch_to_json(const IncidenceSketch& s) {
    Json lines = Json::array();
    for (const auto& l : s.lines)
        lines.push_back({{"label", l.label}, {"color", std::string(to_string(l.color))}, {"form", form_to_json(l.form)}});
    Json points = Json::array();
    for (const auto& p : s.points)
        points.push_back({{"point", point_to_json(p.point)},
                          {"lines", {s.lines[p.black].label, s.lines[p.red].label, s.lines[p.green].label}}});
    return {{"lines", lines}, {"points", points}, {"table", table_to_json(s.table)},
            {"coloring", coloring_to_json(s.coloring)}};
}

Json search144_to_json(const Search144Report& r) {
    Json lines = Json::array();
    for (const auto& l : r.best_lines) lines.push_back(form_to_json(l));
    return {{"budget", r.budget},
            {"nodes", r.nodes},
            {"best_depth", r.best_depth},
            {"per_depth_candidates", r.per_depth_candidates},
            {"best_triple_points", r.best_triple_points},
            {"open_points_at_best", r.open_points_at_best},
            {"complete", r.complete},
            {"black_lines_verified", r.black_lines_verified},
            {"best_lines", lines}};
}

Json parse_json(const std::string& text, const std::string& where) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(where.empty() ? "/" : where, std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace vogel

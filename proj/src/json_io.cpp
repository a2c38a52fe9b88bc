#include "bimahonian/json_io.hpp"

namespace bimahonian {

namespace {

Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw InvalidArgument("malformed rational '" + s + "'");
    r.canonicalize();
    return r;
}

Json stats_json(const std::vector<int>& des, int maj, int fmaj) {
    return Json{{"des", des}, {"maj", maj}, {"fmaj", fmaj}};
}

}  // namespace

Json cyclo_to_json(const CycloNum& x) {
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
    return Json{{"m", x.conductor()}, {"coeffs", coeffs}};
}

CycloNum cyclo_from_json(const Json& j) {
    try {
        const int m = j.at("m").get<int>();
        if (m < 1) throw InvalidArgument("CycloNum JSON: m must be positive");
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
        if (static_cast<int>(coeffs.size()) != euler_phi(m)) {
            throw InvalidArgument("CycloNum JSON: expected " + std::to_string(euler_phi(m)) + " coefficients");
        }
        return CycloNum(m, std::move(coeffs));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("CycloNum JSON: ") + e.what());
    }
}

Json poly_to_json(const BiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json coeff = c.is_rational() ? Json(c.rational_value().get_str()) : cyclo_to_json(c);
        terms.push_back(Json::array({e.first, e.second, coeff}));
    }
    return Json{{"vars", {"t", "q"}}, {"terms", terms}};
}

BiPoly poly_from_json(const Json& j) {
    try {
        if (j.at("vars") != Json::array({"t", "q"})) throw InvalidArgument("polynomial JSON: vars must be [\"t\",\"q\"]");
        BiPoly p;
        for (const auto& term : j.at("terms")) {
            const int i = term.at(0).get<int>();
            const int k = term.at(1).get<int>();
            if (i < 0 || k < 0) throw InvalidArgument("polynomial JSON: negative exponent");
            const Json& c = term.at(2);
            p.add_term(i, k, c.is_string() ? CycloNum(parse_rational(c.get<std::string>())) : cyclo_from_json(c));
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("polynomial JSON: ") + e.what());
    }
}

Json shape_to_json(const MultiPartition& shape) { return Json(shape.display_order()); }

MultiPartition shape_from_json(const Json& j) {
    try {
        return MultiPartition::from_display_order(j.get<std::vector<Partition>>());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("shape JSON: ") + e.what());
    }
}

Json tableau_to_json(const SkewTableau& t) {
    const auto& comps = t.components();
    return Json(std::vector<SkewTableau::Rows>(comps.rbegin(), comps.rend()));
}

Json certificate_to_json(const RegularCertificate& cert) {
    Json witness = Json::array();
    for (const auto& x : cert.witness) witness.push_back(cyclo_to_json(x));
    return Json{{"element", format_window(cert.c)},
                {"order", cert.order},
                {"eigenvalue", cyclo_to_json(cert.eigenvalue)},
                {"witness", witness}};
}

Json bicsp_report_to_json(const BiCSPReport& rep) {
    Json evals = Json::array();
    for (const auto& row : rep.evaluations) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(cyclo_to_json(v));
        evals.push_back(r);
    }
    Json orbits = Json::array();
    for (const auto& o : rep.orbits) {
        Json gens = Json::array();
        for (const auto& [i, j] : o.stabilizer_gens) gens.push_back(Json::array({i, j}));
        orbits.push_back(Json{{"size", o.size}, {"stabilizer_gens", gens}});
    }
    return Json{{"k", rep.k},
                {"l", rep.l},
                {"evaluations", evals},
                {"fixed_points", rep.fixed_points},
                {"a", rep.a},
                {"orbit_counts", rep.orbit_counts},
                {"pass_i", rep.pass_i},
                {"pass_ii", rep.pass_ii},
                {"passed", rep.passed()},
                {"orbits", orbits}};
}

Json class_function_to_json(const ClassFunction& f) {
    Json values = Json::array();
    for (const auto& [mu, v] : f.values) values.push_back(Json{{"class", mu}, {"value", cyclo_to_json(v)}});
    return Json{{"n", f.n}, {"values", values}};
}

Json rsk_to_json(const WreathElem& w) {
    const auto [p, q] = colored_rsk(w);
    const WordStatistics ws = word_statistics(w);
    const TableauStatistics ps = tableau_statistics(p);
    const TableauStatistics qs = tableau_statistics(q);
    return Json{{"d", w.d()},
                {"w", format_window(w)},
                {"shape", shape_to_json(p.shape())},
                {"P", tableau_to_json(p)},
                {"Q", tableau_to_json(q)},
                {"stats",
                 {{"w", stats_json(ws.des_set, ws.maj, ws.fmaj)},
                  {"P", stats_json(ps.des_set, ps.maj, ps.fmaj)},
                  {"Q", stats_json(qs.des_set, qs.maj, qs.fmaj)}}}};
}

}  // namespace bimahonian

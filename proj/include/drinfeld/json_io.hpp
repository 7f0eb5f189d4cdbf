#pragma once

#include <json.hpp>

#include "drinfeld/hecke.hpp"
#include "drinfeld/klmult.hpp"
#include "drinfeld/schur.hpp"
#include "drinfeld/yangian.hpp"

namespace drinfeld {

using nlohmann::json;

// Rationals render as numbers when integral and small, "p/q" strings
// otherwise; both forms parse back.
inline json to_json(const Rational& r) {
    if (r.is_integer()) {
        auto v = r.as_int();
        if (v && *v <= (1LL << 53) && *v >= -(1LL << 53)) return json(*v);
    }
    return json(r.str());
}

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    require(j.is_string(), "ParseError", "rational must be a number or 'p/q' string");
    return Rational::parse(j.get<std::string>());
}

inline json to_json(const UniPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

inline UniPoly unipoly_from_json(const json& j) {
    RatVec cs;
    for (const auto& c : j) cs.push_back(rational_from_json(c));
    return UniPoly(std::move(cs));
}

inline json to_json(const RatFun& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline json to_json(const Partition& p) {
    json arr = json::array();
    for (long x : p.parts()) arr.push_back(x);
    return arr;
}

inline json to_json(const Weight& w) {
    json arr = json::array();
    for (const auto& e : w.entries()) arr.push_back(to_json(e));
    return arr;
}

inline Weight weight_from_json(const json& j) {
    RatVec es;
    for (const auto& e : j) es.push_back(rational_from_json(e));
    return Weight(std::move(es));
}

inline json to_json(const Permutation& w) {
    json arr = json::array();
    for (int x : w.one_line()) arr.push_back(x);
    return arr;
}

inline json to_json(const Mat& m) {
    json trip = json::array();
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) trip.push_back(json::array({i, j, to_json(m(i, j))}));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"triplets", trip}};
}

inline Mat mat_from_json(const json& j) {
    Mat m(j.at("rows").get<size_t>(), j.at("cols").get<size_t>());
    for (const auto& t : j.at("triplets"))
        m(t.at(0).get<size_t>(), t.at(1).get<size_t>()) = rational_from_json(t.at(2));
    return m;
}

inline json to_json(const GlnCharacter& ch) {
    json arr = json::array();
    for (const auto& [lam, m] : ch.schur_mult)
        arr.push_back(json{{"partition", to_json(lam)}, {"multiplicity", m}});
    return json{{"n", ch.n}, {"schur", arr}};
}

// Drinfeld polynomials: integer roots with multiplicities, plus the raw
// ascending coefficients as the general form.
inline json to_json(const DrinfeldPolys& q) {
    json arr = json::array();
    for (const auto& p : q.Q) {
        json entry{{"coeffs", to_json(p)}};
        UniPoly cof;
        auto roots = p.integer_roots(&cof);
        if (cof.degree() == 0) {
            json rs = json::array();
            for (const auto& [root, mult] : roots) rs.push_back(json::array({root, mult}));
            entry["roots"] = rs;
        }
        arr.push_back(entry);
    }
    return json{{"Q", arr}};
}

inline json to_json(const HeckeModule& m) {
    json s = json::array(), eps = json::array();
    for (const auto& g : m.w_action.gens) s.push_back(to_json(g));
    for (const auto& g : m.eps_action) eps.push_back(to_json(g));
    json out{{"type", "hecke_module"}, {"ell", m.ell}, {"dim", m.dim}, {"s", s}, {"eps", eps}};
    if (m.distinguished) {
        json d = json::array();
        for (const auto& v : *m.distinguished) d.push_back(to_json(v));
        out["distinguished"] = d;
    }
    if (m.std_params) {
        out["lambda"] = to_json(m.std_params->first);
        out["mu"] = to_json(m.std_params->second);
    }
    if (m.interval) {
        out["interval"] = json::array({to_json(m.interval->first), to_json(m.interval->second)});
    }
    return out;
}

inline HeckeModule hecke_from_json(const json& j) {
    require(j.value("type", "") == std::string("hecke_module"), "ParseError",
            "not a hecke_module dump");
    HeckeModule m;
    m.ell = j.at("ell").get<long>();
    m.dim = j.at("dim").get<size_t>();
    m.w_action.ell = m.ell;
    m.w_action.dim = m.dim;
    for (const auto& g : j.at("s")) m.w_action.gens.push_back(mat_from_json(g));
    for (const auto& g : j.at("eps")) m.eps_action.push_back(mat_from_json(g));
    if (j.contains("distinguished")) {
        Vec d;
        for (const auto& v : j.at("distinguished")) d.push_back(rational_from_json(v));
        m.distinguished = std::move(d);
    }
    if (j.contains("lambda")) {
        m.std_params = std::make_pair(weight_from_json(j.at("lambda")),
                                      weight_from_json(j.at("mu")));
    }
    return m;
}

inline json to_json(const YangianModule& y) {
    json cert = json::array();
    for (const auto& c : y.cert) cert.push_back(to_json(c));
    json gens = json::array();
    for (int a = 1; a <= y.n; ++a)
        for (int b = 1; b <= y.n; ++b)
            for (long d = 0; d <= y.D; ++d)
                gens.push_back(json{{"a", a}, {"b", b}, {"d", d}, {"matrix", to_json(y.t(a, b, d))}});
    return json{{"type", "yangian_module"}, {"n", y.n},         {"dim", y.dim},
                {"degree_bound", y.D},      {"certificate", cert}, {"generators", gens}};
}

inline YangianModule yangian_from_json(const json& j) {
    require(j.value("type", "") == std::string("yangian_module"), "ParseError",
            "not a yangian_module dump");
    YangianModule y;
    y.n = j.at("n").get<int>();
    y.dim = j.at("dim").get<size_t>();
    y.D = j.at("degree_bound").get<long>();
    for (const auto& c : j.at("certificate")) y.cert.push_back(rational_from_json(c));
    y.T.assign(static_cast<size_t>(y.n) * static_cast<size_t>(y.n) *
                   static_cast<size_t>(y.D + 1),
               Mat(y.dim, y.dim));
    for (const auto& g : j.at("generators")) {
        int a = g.at("a").get<int>(), b = g.at("b").get<int>();
        long d = g.at("d").get<long>();
        y.T[y.tindex(a, b, d)] = mat_from_json(g.at("matrix"));
    }
    validate_certificate(y);
    return y;
}

inline json to_json(const MultiplicityReport& rep) {
    json cosets = json::array();
    for (size_t i = 0; i < rep.cosets.size(); ++i) {
        cosets.push_back(json{{"w_min", to_json(rep.cosets[i].w_min)},
                              {"w_LR", to_json(rep.cosets[i].w_LR)},
                              {"w_L", to_json(rep.cosets[i].w_L)},
                              {"w_R", to_json(rep.cosets[i].w_R)},
                              {"size", rep.cosets[i].coset_elements.size()},
                              {"parameter", to_json(rep.parameters[i])},
                              {"drinfeld", to_json(rep.polys[i])}});
    }
    return json{{"type", "multiplicity_report"},
                {"lambda", to_json(rep.lambda)},
                {"mu", to_json(rep.mu)},
                {"n", rep.n},
                {"ell", rep.ell},
                {"cosets", cosets},
                {"multiplicities", rep.matrix},
                {"inverse", rep.inverse}};
}

} // namespace drinfeld

#pragma once

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

#include "gen.hpp"
#include "numcheck.hpp"
#include "pairs.hpp"

namespace hermrank::io {

using nlohmann::json;

// ---- writers -------------------------------------------------------------

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const GaussianRational& g) {
    return json{{"re", g.re.str()}, {"im", g.im.str()}};
}

inline json to_json(const Signature& s) { return json{{"r", s.r}, {"s", s.s}, {"t", s.t}}; }

inline json to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back(json{{"exponents", m.exponents()}, {"coeff", to_json(c)}});
    }
    return terms;
}

inline json to_json(const BiForm& b) {
    json terms = json::array();
    for (const auto& [k, c] : b.terms()) {
        terms.push_back(json{{"alpha", k.first.exponents()},
                             {"beta", k.second.exponents()},
                             {"coeff", to_json(c)}});
    }
    return terms;
}

inline json to_json(const GQMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json tuple_to_json(const std::vector<MultiPoly>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(to_json(p));
    return a;
}

inline json to_json(const PolyMapPair& pair) {
    return json{{"source", to_json(pair.source)},
                {"target", to_json(pair.target)},
                {"phi", tuple_to_json(pair.phi)},
                {"psi", tuple_to_json(pair.psi)}};
}

inline json to_json(const Decomposition& d) {
    return json{{"B", to_json(d.b)},           {"C", to_json(d.c)},
                {"h1", to_json(d.h1)},         {"h2", to_json(d.h2)},
                {"Phi", tuple_to_json(d.phi_extra)}, {"Psi", tuple_to_json(d.psi_extra)},
                {"lambda", d.lambda.str()}};
}

inline json to_json(const MapDecomposition& d) {
    return json{{"W", to_json(d.w)},
                {"h", to_json(d.h)},
                {"Phi", tuple_to_json(d.phi_extra)},
                {"lambda", d.lambda.str()}};
}

inline json to_json(const SampleReport& r) {
    return json{{"trials", r.trials},
                {"failures", r.failures},
                {"max_residual", r.max_residual},
                {"tol", r.tol},
                {"seed", r.seed}};
}

inline json to_json(const RestrictionReport& r) {
    json trials = json::array();
    for (PairKind k : r.trials) trials.push_back(to_string(k));
    return json{{"direct", to_string(r.direct)},
                {"trials", std::move(trials)},
                {"counts",
                 json{{"null", r.null_count},
                      {"quasi_standard", r.qs_count},
                      {"other", r.other_count}}},
                {"seed", r.seed}};
}

/// Standalone biform file: the variable count plus the exact term list.
inline json biform_file(const BiForm& b) {
    return json{{"nvars", b.nvars()}, {"terms", to_json(b)}};
}

/// Standalone polynomial tuple file.
inline json tuple_file(std::size_t nvars, const std::vector<MultiPoly>& ps) {
    return json{{"nvars", nvars}, {"polys", tuple_to_json(ps)}};
}

// ---- readers -------------------------------------------------------------

namespace detail {
inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error(std::string("missing field '") + key + "'");
    return j.at(key);
}
inline int int_field(const json& j, const char* key) {
    const json& f = field(j, key);
    if (!f.is_number_integer()) throw parse_error(std::string("field '") + key + "' must be an integer");
    return f.get<int>();
}
}  // namespace detail

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw parse_error("rational must be a \"p/q\" string");
    return Rational::from_string(j.get<std::string>());
}

inline GaussianRational gq_from_json(const json& j) {
    if (j.is_string() || j.is_number_integer()) return {rational_from_json(j)};
    return {rational_from_json(detail::field(j, "re")), rational_from_json(detail::field(j, "im"))};
}

inline Signature signature_from_json(const json& j) {
    return Signature(detail::int_field(j, "r"), detail::int_field(j, "s"),
                     detail::int_field(j, "t"));
}

inline Monomial exponents_from_json(const json& j, std::size_t nvars) {
    if (!j.is_array()) throw parse_error("exponent vector must be an array");
    std::vector<unsigned> e;
    e.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long>() < 0)
            throw parse_error("exponents must be nonnegative integers");
        e.push_back(x.get<unsigned>());
    }
    if (e.size() != nvars) throw parse_error("exponent vector has the wrong length");
    return Monomial(std::move(e));
}

inline MultiPoly poly_from_json(const json& j, std::size_t nvars) {
    if (!j.is_array()) throw parse_error("polynomial must be an array of terms");
    MultiPoly p(nvars);
    for (const auto& t : j) {
        p.add_term(exponents_from_json(detail::field(t, "exponents"), nvars),
                   gq_from_json(detail::field(t, "coeff")));
    }
    return p;
}

inline BiForm biform_from_json(const json& j, std::size_t nvars) {
    if (!j.is_array()) throw parse_error("biform must be an array of terms");
    BiForm b(nvars);
    for (const auto& t : j) {
        b.add_term(exponents_from_json(detail::field(t, "alpha"), nvars),
                   exponents_from_json(detail::field(t, "beta"), nvars),
                   gq_from_json(detail::field(t, "coeff")));
    }
    return b;
}

inline GQMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw parse_error("matrix must be a nonempty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array()) throw parse_error("matrix rows must be arrays");
    const std::size_t cols = j[0].size();
    GQMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw parse_error("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = gq_from_json(j[i][c]);
    }
    return m;
}

inline std::vector<MultiPoly> tuple_from_json(const json& j, std::size_t nvars) {
    if (!j.is_array()) throw parse_error("polynomial tuple must be an array");
    std::vector<MultiPoly> out;
    out.reserve(j.size());
    for (const auto& p : j) out.push_back(poly_from_json(p, nvars));
    return out;
}

inline PolyMapPair pair_from_json(const json& j) {
    PolyMapPair pair;
    pair.source = signature_from_json(detail::field(j, "source"));
    pair.target = signature_from_json(detail::field(j, "target"));
    pair.phi = tuple_from_json(detail::field(j, "phi"), pair.source.n());
    pair.psi = tuple_from_json(detail::field(j, "psi"), pair.source.n());
    pair.validate();
    return pair;
}

inline Decomposition decomposition_from_json(const json& j, std::size_t nvars) {
    Decomposition d;
    d.b = matrix_from_json(detail::field(j, "B"));
    d.c = matrix_from_json(detail::field(j, "C"));
    d.h1 = poly_from_json(detail::field(j, "h1"), nvars);
    d.h2 = poly_from_json(detail::field(j, "h2"), nvars);
    d.phi_extra = tuple_from_json(detail::field(j, "Phi"), nvars);
    d.psi_extra = tuple_from_json(detail::field(j, "Psi"), nvars);
    d.lambda = rational_from_json(detail::field(j, "lambda"));
    return d;
}

// ---- files ---------------------------------------------------------------

inline json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

inline void save_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

}  // namespace hermrank::io

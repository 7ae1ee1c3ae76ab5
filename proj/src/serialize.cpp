#include "koorn/serialize.hpp"

namespace koorn {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw DomainError("expected a rational encoded as a string");
    return Rational::parse(j.get<std::string>());
}

json to_json(const DominantWeight& w) { return json(w.parts()); }

DominantWeight weight_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("expected a weight encoded as an integer array");
    std::vector<int> parts;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw DomainError("weight entries must be integers");
        parts.push_back(e.get<int>());
    }
    return DominantWeight(std::move(parts));
}

json to_json(const ParamSet& p) {
    return json{{"q", p.q.str()}, {"t", p.t.str()}, {"a", p.a.str()},
                {"b", p.b.str()}, {"c", p.c.str()}, {"d", p.d.str()}};
}

ParamSet params_from_json(const json& j) {
    if (!j.is_object()) throw DomainError("expected a parameter object");
    auto field = [&](const char* name) {
        if (!j.contains(name))
            throw DomainError(std::string("parameter object missing field \"") + name + "\"");
        return rational_from_json(j.at(name));
    };
    return ParamSet(field("q"), field("t"), field("a"), field("b"), field("c"), field("d"));
}

json to_json(const KoornwinderPoly& P) {
    json coeffs = json::array();
    for (const auto& [mu, c] : P.coeffs.coeffs())
        coeffs.push_back(json{{"mu", to_json(mu)}, {"c", c.str()}});
    return json{{"lambda", to_json(P.lam)}, {"params", to_json(P.params)}, {"coeffs", coeffs}};
}

KoornwinderPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lambda") || !j.contains("params") || !j.contains("coeffs"))
        throw DomainError("polynomial object needs lambda, params and coeffs fields");
    DominantWeight lam = weight_from_json(j.at("lambda"));
    ParamSet params = params_from_json(j.at("params"));
    SymmetricPoly coeffs(lam.length());
    if (!j.at("coeffs").is_array()) throw DomainError("coeffs must be an array");
    for (const auto& entry : j.at("coeffs")) {
        if (!entry.is_object() || !entry.contains("mu") || !entry.contains("c"))
            throw DomainError("coefficient entries need mu and c fields");
        coeffs.add_term(weight_from_json(entry.at("mu")), rational_from_json(entry.at("c")));
    }
    return KoornwinderPoly{std::move(lam), std::move(params), std::move(coeffs)};
}

json to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw DomainError("expected a non-empty array of matrix rows");
    const int rows = static_cast<int>(j.size());
    if (!j.at(0).is_array() || j.at(0).empty())
        throw DomainError("matrix rows must be non-empty arrays");
    const int cols = static_cast<int>(j.at(0).size());
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw DomainError("matrix rows must all have the same length");
        for (int k = 0; k < cols; ++k) m.at(i, k) = rational_from_json(row.at(k));
    }
    return m;
}

}  // namespace koorn

#pragma once

// JSON readers and writers for varieties, graded algebras and results.

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "steencalc/chow_ring.hpp"
#include "steencalc/errors.hpp"
#include "steencalc/expression.hpp"
#include "steencalc/graded_algebra.hpp"
#include "steencalc/steenrod.hpp"

namespace steencalc {

using json = nlohmann::json;

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

namespace detail {

template <class T>
T json_get(const json& j, const char* key, const std::string& what) {
    if (!j.is_object() || !j.contains(key)) throw InputError(what + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw InputError(what + ": field '" + key + "' has the wrong type");
    }
}

/// Re-throw expression errors with the field they came from.
template <class F>
auto with_context(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

}  // namespace detail

/// {"h": 1, "h^2": 1}: nonzero coefficients keyed by monomial.
inline json class_to_json(const CycleClass& c) {
    json out = json::object();
    for (const auto& [e, coef] : c.terms()) out[c.ring().monomial_string(e)] = coef;
    return out;
}

inline CycleClass class_from_json(const json& j, const RingSpec& ring) {
    if (!j.is_object()) throw InputError("a class must be a JSON object of monomial: coefficient");
    CycleClass c = CycleClass::zero(ring);
    for (const auto& [mono, coef] : j.items()) {
        if (!coef.is_number_integer()) throw InputError("coefficient of '" + mono + "' must be an integer");
        c += coef.get<std::int64_t>() * parse_class(mono, ring);
    }
    return c;
}

/// {"prime", "dimension", "generators": [{"name", "codim", "nilpotency"}],
///  "relations": [{"lhs", "rhs"}], "tangent_chern", "steenrod_seeds" | "divisor": true}
inline VarietySpec variety_from_json(const json& j) {
    const std::string what = "variety";
    const auto pval = detail::json_get<std::int64_t>(j, "prime", what);
    if (pval < 2) throw InputError("variety: prime must be at least 2");
    PrimeModulus p = [&] {
        try {
            return PrimeModulus(static_cast<std::uint64_t>(pval));
        } catch (const DomainError& e) {
            throw InputError(std::string("variety: ") + e.what());
        }
    }();
    const int dim = detail::json_get<int>(j, "dimension", what);
    std::vector<Generator> gens;
    std::vector<std::string> names;
    const json gj = detail::json_get<json>(j, "generators", what);
    if (!gj.is_array()) throw InputError("variety: 'generators' must be an array");
    for (const auto& g : gj) {
        Generator gen{detail::json_get<std::string>(g, "name", "generator"), detail::json_get<int>(g, "codim", "generator"),
                      detail::json_get<int>(g, "nilpotency", "generator")};
        names.push_back(gen.name);
        gens.push_back(std::move(gen));
    }
    std::vector<RewriteRule> rules;
    if (j.contains("relations")) {
        for (const auto& r : j.at("relations")) {
            const auto lhs_text = detail::json_get<std::string>(r, "lhs", "relation");
            const auto rhs_text = detail::json_get<std::string>(r, "rhs", "relation");
            const auto lhs = detail::with_context("relation lhs '" + lhs_text + "'",
                                                  [&] { return evaluate_raw(*parse_expression(lhs_text), names, p); });
            if (lhs.size() != 1 || lhs.begin()->second != 1)
                throw InputError("relation lhs '" + lhs_text + "' must be a single monic monomial");
            const auto rhs = detail::with_context("relation rhs '" + rhs_text + "'",
                                                  [&] { return evaluate_raw(*parse_expression(rhs_text), names, p); });
            RewriteRule rule{lhs.begin()->first, {}};
            for (const auto& [m, c] : rhs) rule.rhs.emplace_back(m, static_cast<std::int64_t>(c));
            rules.push_back(std::move(rule));
        }
    }
    const std::string name = j.value("name", std::string{});
    try {
        const RingSpec ring(p, dim, gens, rules, name);
        const auto tangent_text = detail::json_get<std::string>(j, "tangent_chern", what);
        const CycleClass tangent = detail::with_context("tangent_chern", [&] { return parse_class(tangent_text, ring); });
        if (j.contains("steenrod_seeds")) {
            std::map<std::string, CycleClass> seeds;
            for (const auto& [g, text] : j.at("steenrod_seeds").items()) {
                if (!text.is_string()) throw InputError("seed for '" + g + "' must be an expression string");
                seeds.emplace(g, detail::with_context("seed for '" + g + "'",
                                                      [&] { return parse_class(text.get<std::string>(), ring); }));
            }
            return VarietySpec(ring, tangent, seeds, name);
        }
        if (!j.value("divisor", false))
            throw InputError("variety: give 'steenrod_seeds' or assert Wu seeds with \"divisor\": true");
        return VarietySpec::with_wu_seeds(ring, tangent, name);
    } catch (const ValidationError& e) {
        throw InputError(std::string("variety: ") + e.what());
    } catch (const DomainError& e) {
        throw InputError(std::string("variety: ") + e.what());
    }
}

/// {"p", "q", "components": {"0": [...], ...}, "products": [[x, y, combo]], "unit"}
inline GradedAlgebra algebra_from_json(const json& j) {
    const std::string what = "algebra";
    const auto pv = detail::json_get<std::int64_t>(j, "p", what);
    const auto qv = detail::json_get<std::int64_t>(j, "q", what);
    if (pv < 2 || qv < 2) throw InputError("algebra: p and q must be at least 2");
    try {
        const PrimeModulus p(static_cast<std::uint64_t>(pv));
        const FqField f = FqField::of_order(static_cast<std::uint64_t>(qv));
        std::vector<std::string> names;
        std::vector<int> comps;
        const json cj = detail::json_get<json>(j, "components", what);
        if (!cj.is_object()) throw InputError("algebra: 'components' must be an object");
        for (const auto& [key, list] : cj.items()) {
            int c = 0;
            try {
                std::size_t used = 0;
                c = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw InputError("algebra: component key '" + key + "' is not an integer");
            }
            if (c < 0 || c >= pv) throw InputError("algebra: component " + key + " outside 0.." + std::to_string(pv - 1));
            for (const auto& n : list) {
                names.push_back(n.get<std::string>());
                comps.push_back(c);
            }
        }
        const std::size_t n = names.size();
        auto index = [&](const std::string& s) {
            for (std::size_t i = 0; i < n; ++i)
                if (names[i] == s) return i;
            throw InputError("algebra: unknown basis element '" + s + "' in products");
        };
        std::map<std::pair<std::size_t, std::size_t>, FqVector> table;
        if (j.contains("products")) {
            for (const auto& entry : j.at("products")) {
                if (!entry.is_array() || entry.size() != 3) throw InputError("algebra: product entries are [x, y, value]");
                const auto x = index(entry[0].get<std::string>()), y = index(entry[1].get<std::string>());
                const auto text = entry[2].get<std::string>();
                FqVector v = detail::with_context("product " + names[x] + "*" + names[y],
                                                  [&] { return parse_linear_combination(text, f, names); });
                for (const auto& key : {std::pair{x, y}, std::pair{y, x}}) {
                    auto it = table.find(key);
                    if (it != table.end() && !(it->second == v))
                        throw InputError("algebra: conflicting products for " + names[x] + "*" + names[y]);
                    table[key] = v;
                }
            }
        }
        const auto unit_text = detail::json_get<std::string>(j, "unit", what);
        const FqVector unit = detail::with_context("unit", [&] { return parse_linear_combination(unit_text, f, names); });
        // products that are not listed are zero, except those with a basis unit
        std::optional<std::size_t> unit_index;
        for (std::size_t u = 0; u < n; ++u) {
            FqVector e = detail::zero_vector(f, n);
            e[u] = f.one();
            if (unit == e) unit_index = u;
        }
        auto product = [&](std::size_t a, std::size_t b) {
            auto it = table.find({a, b});
            if (it != table.end()) return it->second;
            FqVector v = detail::zero_vector(f, n);
            if (unit_index == a) v[b] = f.one();
            else if (unit_index == b) v[a] = f.one();
            return v;
        };
        return GradedAlgebra(p, f, names, comps, product, unit);
    } catch (const ValidationError& e) {
        throw InputError(std::string("algebra: ") + e.what());
    } catch (const DomainError& e) {
        throw InputError(std::string("algebra: ") + e.what());
    } catch (const json::exception& e) {
        throw InputError(std::string("algebra: ") + e.what());
    }
}

inline json algebra_to_json(const GradedAlgebra& a) {
    json comps = json::object();
    for (int c = 0; c < static_cast<int>(a.p().value()); ++c) {
        json list = json::array();
        for (auto i : a.component_basis(c)) list.push_back(a.names()[i]);
        comps[std::to_string(c)] = list;
    }
    json products = json::array();
    for (std::size_t i = 0; i < a.dimension(); ++i)
        for (std::size_t k = i; k < a.dimension(); ++k) {
            const auto& v = a.product(i, k);
            if (!detail::is_zero_vector(v)) products.push_back({a.names()[i], a.names()[k], a.vector_to_string(v)});
        }
    return {{"p", a.p().value()}, {"q", a.field().order()}, {"components", comps}, {"products", products},
            {"unit", a.vector_to_string(a.unit())}};
}

inline json torsor_report_to_json(const TorsorReport& r) {
    json j = {{"1", r.condition1}, {"2", r.condition2}, {"3", r.condition3},
              {"4", r.condition4}, {"5", r.condition5}, {"6", r.condition6}};
    if (r.condition7) j["7"] = *r.condition7;
    return {{"conditions", j}, {"torsor", r.all_true()}, {"mixed", r.mixed()}};
}

}  // namespace steencalc

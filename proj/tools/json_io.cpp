#include "json_io.hpp"

#include <charconv>
#include <stdexcept>

namespace mixsym::io {

namespace {

unsigned long parse_unsigned(const std::string& text, const char* what) {
    unsigned long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument(std::string("polynomial json: bad ") + what + " '" + text + "'");
    }
    return value;
}

}  // namespace

Json polynomial_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json mono = Json::object();
        const auto& e = t.mono.exponents();
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] != 0) mono[std::to_string(k + 1)] = std::to_string(e[k]);
        }
        terms.push_back(Json{{"coeff", to_fraction_string(t.coeff)}, {"mono", std::move(mono)}});
    }
    return Json{{"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
        throw std::invalid_argument("polynomial json: expected an object with a 'terms' array");
    }
    std::vector<Term> terms;
    for (const auto& entry : doc["terms"]) {
        if (!entry.is_object() || !entry.contains("coeff") || !entry["coeff"].is_string() ||
            !entry.contains("mono") || !entry["mono"].is_object()) {
            throw std::invalid_argument("polynomial json: each term needs a string 'coeff' and an object 'mono'");
        }
        std::vector<std::pair<int, std::uint32_t>> pairs;
        for (const auto& [var, exp] : entry["mono"].items()) {
            if (!exp.is_string()) throw std::invalid_argument("polynomial json: exponents must be strings");
            const auto index = parse_unsigned(var, "variable index");
            const auto power = parse_unsigned(exp.get<std::string>(), "exponent");
            if (index == 0 || power == 0) throw std::invalid_argument("polynomial json: zero index or exponent");
            pairs.emplace_back(static_cast<int>(index), static_cast<std::uint32_t>(power));
        }
        terms.push_back({Monomial::from_pairs(pairs), parse_rational(entry["coeff"].get<std::string>())});
    }
    return Polynomial::from_terms(std::move(terms));
}

Json parts_to_json(const std::vector<int>& parts) {
    Json out = Json::array();
    for (int p : parts) out.push_back(p);
    return out;
}

Json term_to_json(const ExpansionTerm& term) {
    return Json{{"mu", parts_to_json(term.mu.parts())},
                {"sign", term.sign},
                {"q_index", parts_to_json(term.q_index.parts())},
                {"s_index", parts_to_json(term.s_index.parts())},
                {"value", polynomial_to_json(term.value)}};
}

Json report_to_json(const VerificationReport& report) {
    const auto [rows, cols] = rhs_rectangle(report.expansion_case, report.m, report.n);
    Json terms = Json::array();
    for (const auto& t : report.terms) terms.push_back(term_to_json(t));
    return Json{{"case", std::string(to_string(report.expansion_case))},
                {"m", report.m},
                {"n", report.n},
                {"core_index", report.core_index},
                {"rectangle", Json{{"rows", rows}, {"cols", cols}}},
                {"equal", report.equal},
                {"terms", std::move(terms)},
                {"lhs", polynomial_to_json(report.lhs)},
                {"rhs", polynomial_to_json(report.rhs)},
                {"difference", polynomial_to_json(report.difference)}};
}

Json fock_to_json(const FockVector& v) {
    Json states = Json::array();
    for (const auto& [lambda, coeff] : v.entries()) {
        states.push_back(Json{{"state", parts_to_json(lambda.parts())},
                              {"rational", to_fraction_string(coeff.rational_part())},
                              {"sqrt2", to_fraction_string(coeff.sqrt2_part())}});
    }
    return Json{{"states", std::move(states)}};
}

}  // namespace mixsym::io

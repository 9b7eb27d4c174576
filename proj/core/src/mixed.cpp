#include "mixsym/mixed.hpp"

#include <stdexcept>

#include "mixsym/barquot.hpp"
#include "mixsym/schur.hpp"

namespace mixsym {

namespace {

void require_non_negative(int m, int n) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("m and n must be non-negative, got m=" + std::to_string(m) +
                                    " n=" + std::to_string(n));
    }
}

}  // namespace

std::string_view to_string(ExpansionCase c) { return c == ExpansionCase::one ? "one" : "zero"; }

std::optional<ExpansionCase> parse_case(std::string_view text) {
    if (text == "one") return ExpansionCase::one;
    if (text == "zero") return ExpansionCase::zero;
    return std::nullopt;
}

int core_index(ExpansionCase c, int m) { return c == ExpansionCase::one ? m : -m; }

Color node_color(ExpansionCase c) { return c == ExpansionCase::one ? Color::one : Color::zero; }

ExpansionSum lhs(ExpansionCase c, int m, int n) {
    require_non_negative(m, n);
    const int core = core_index(c, m);
    ExpansionSum out;
    for (auto& mu : add_set(bar_core(core), node_color(c), n)) {
        QuotientTriple quot = quotient(mu);
        ExpansionTerm term;
        term.sign = delta_sign(mu, core);
        term.value = schur_q(quot.q0) * shift2(schur_s(quot.q1));
        if (term.sign < 0) term.value = -term.value;
        term.mu = std::move(mu);
        term.q_index = std::move(quot.q0);
        term.s_index = std::move(quot.q1);
        out.sum += term.value;
        out.terms.push_back(std::move(term));
    }
    return out;
}

std::pair<int, int> rhs_rectangle(ExpansionCase c, int m, int n) {
    require_non_negative(m, n);
    if (c == ExpansionCase::one) return {2 * m - n, n};
    return {n, 2 * m + 1 - n};
}

Polynomial rhs(ExpansionCase c, int m, int n) {
    const auto [rows, cols] = rhs_rectangle(c, m, n);
    return rect_schur(rows, cols);
}

VerificationReport verify(ExpansionCase c, int m, int n) {
    VerificationReport report;
    report.expansion_case = c;
    report.core_index = core_index(c, m);
    report.m = m;
    report.n = n;
    ExpansionSum left = lhs(c, m, n);
    report.lhs = std::move(left.sum);
    report.terms = std::move(left.terms);
    report.rhs = rhs(c, m, n);
    report.difference = report.lhs - report.rhs;
    report.equal = report.difference.is_zero();
    return report;
}

}  // namespace mixsym

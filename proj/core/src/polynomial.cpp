#include "mixsym/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace mixsym {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(int index, std::uint32_t exponent) {
    if (index < 1) throw std::invalid_argument("variable index must be >= 1, got " + std::to_string(index));
    Monomial m;
    if (exponent == 0) return m;
    m.exps_.assign(static_cast<std::size_t>(index), 0);
    m.exps_.back() = exponent;
    return m;
}

Monomial Monomial::from_pairs(const std::vector<std::pair<int, std::uint32_t>>& pairs) {
    Monomial m;
    for (const auto& [index, exponent] : pairs) m = m * variable(index, exponent);
    return m;
}

std::uint32_t Monomial::exponent(int index) const {
    if (index < 1 || static_cast<std::size_t>(index) > exps_.size()) return 0;
    return exps_[static_cast<std::size_t>(index) - 1];
}

long Monomial::weighted_degree() const {
    long d = 0;
    for (std::size_t k = 0; k < exps_.size(); ++k) d += static_cast<long>(k + 1) * exps_[k];
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    const auto& longer = exps_.size() >= other.exps_.size() ? exps_ : other.exps_;
    const auto& shorter = exps_.size() >= other.exps_.size() ? other.exps_ : exps_;
    out.exps_ = longer;
    for (std::size_t k = 0; k < shorter.size(); ++k) out.exps_[k] += shorter[k];
    return out;
}

Monomial Monomial::doubled_indices() const {
    Monomial out;
    if (exps_.empty()) return out;
    out.exps_.assign(2 * exps_.size(), 0);
    for (std::size_t k = 0; k < exps_.size(); ++k) out.exps_[2 * k + 1] = exps_[k];
    out.trim();
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.weighted_degree() <=> b.weighted_degree(); c != 0) return c;
    const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint32_t x = k < a.exps_.size() ? a.exps_[k] : 0;
        const std::uint32_t y = k < b.exps_.size() ? b.exps_[k] : 0;
        if (x != y) return y <=> x;
    }
    return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : exps_) {
        h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

void Monomial::trim() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

// -------------------------------------------------------------- Polynomial

namespace {

bool term_less(const Term& a, const Term& b) { return a.mono < b.mono; }

}  // namespace

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) terms_.push_back({Monomial(), constant});
}

Polynomial Polynomial::variable(int index) { return monomial(Monomial::variable(index), Rational(1)); }

Polynomial Polynomial::monomial(const Monomial& mono, const Rational& coeff) {
    Polynomial p;
    if (coeff != 0) p.terms_.push_back({mono, coeff});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_less);
    Polynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

Rational Polynomial::coefficient(const Monomial& mono) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{mono, Rational(0)}, term_less);
    if (it != terms_.end() && it->mono == mono) return it->coeff;
    return Rational(0);
}

bool Polynomial::is_homogeneous(long degree) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [degree](const Term& t) { return t.mono.weighted_degree() == degree; });
}

int Polynomial::max_variable() const {
    std::size_t top = 0;
    for (const auto& t : terms_) top = std::max(top, t.mono.exponents().size());
    return static_cast<int>(top);
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->mono < a->mono) {
            merged.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (c != 0) merged.push_back({std::move(a->mono), std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.coeff *= scalar;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    if (a.size() == 1 && a.terms_[0].mono.is_unit()) return b * a.terms_[0].coeff;
    if (b.size() == 1 && b.terms_[0].mono.is_unit()) return a * b.terms_[0].coeff;

    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    Rational prod;
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            mpq_mul(prod.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
            auto [it, inserted] = acc.try_emplace(x.mono * y.mono, prod);
            if (!inserted) it->second += prod;
        }
    }
    Polynomial out;
    out.terms_.reserve(acc.size());
    for (auto& [mono, coeff] : acc) {
        if (coeff != 0) out.terms_.push_back({mono, std::move(coeff)});
    }
    std::sort(out.terms_.begin(), out.terms_.end(), term_less);
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coeff < 0;
        const Rational magnitude = negative ? Rational(-t.coeff) : t.coeff;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string mono;
        const auto& e = t.mono.exponents();
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(k + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty()) {
            out += to_short_string(magnitude);
        } else if (magnitude == 1) {
            out += mono;
        } else {
            out += to_short_string(magnitude) + "*" + mono;
        }
    }
    return out;
}

// --------------------------------------------------------------- functions

Polynomial shift2(const Polynomial& p) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) terms.push_back({t.mono.doubled_indices(), t.coeff});
    // t_j -> t_{2j} is injective on monomials but not order preserving in general.
    return Polynomial::from_terms(std::move(terms));
}

Rational eval(const Polynomial& p, const std::map<int, Rational>& assignment) {
    Rational total(0);
    Rational power;
    for (const auto& t : p.terms()) {
        Rational value = t.coeff;
        const auto& e = t.mono.exponents();
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            const int index = static_cast<int>(k + 1);
            auto it = assignment.find(index);
            if (it == assignment.end()) {
                throw std::invalid_argument("no value assigned to t" + std::to_string(index));
            }
            mpz_pow_ui(mpq_numref(power.get_mpq_t()), mpq_numref(it->second.get_mpq_t()), e[k]);
            mpz_pow_ui(mpq_denref(power.get_mpq_t()), mpq_denref(it->second.get_mpq_t()), e[k]);
            value *= power;
        }
        total += value;
    }
    return total;
}

namespace {

void require_square(const PolyMatrix& m, const char* what) {
    for (const auto& row : m) {
        if (row.size() != m.size()) {
            throw std::invalid_argument(std::string(what) + ": matrix is not square");
        }
    }
}

constexpr std::size_t kMaxMatrixSize = 24;

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
    require_square(m, "determinant");
    const std::size_t n = m.size();
    if (n == 0) return Polynomial(1);
    if (n > kMaxMatrixSize) throw std::invalid_argument("determinant: matrix too large");

    // minors[mask] = det of the first popcount(mask) rows restricted to the
    // columns in mask; expand along the last of those rows.
    std::vector<Polynomial> minors(std::size_t{1} << n);
    minors[0] = Polynomial(1);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
        Polynomial acc;
        int above = 0;  // columns of mask greater than the current one
        for (int col = static_cast<int>(n) - 1; col >= 0; --col) {
            const std::uint32_t bit = 1u << col;
            if (!(mask & bit)) continue;
            const Polynomial& entry = m[row][static_cast<std::size_t>(col)];
            const Polynomial& minor = minors[mask ^ bit];
            if (!entry.is_zero() && !minor.is_zero()) {
                if (above % 2 == 0) {
                    acc += entry * minor;
                } else {
                    acc -= entry * minor;
                }
            }
            ++above;
        }
        minors[mask] = std::move(acc);
    }
    return minors.back();
}

namespace {

Polynomial pfaffian_rec(const PolyMatrix& m, std::uint32_t mask,
                        std::unordered_map<std::uint32_t, Polynomial>& memo) {
    if (mask == 0) return Polynomial(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;

    const int first = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(1u << first);
    Polynomial acc;
    int position = 1;  // position of j among the remaining indices, first = 0
    for (std::uint32_t scan = rest; scan; scan &= scan - 1, ++position) {
        const int j = std::countr_zero(scan);
        const Polynomial& entry = m[static_cast<std::size_t>(first)][static_cast<std::size_t>(j)];
        if (entry.is_zero()) continue;
        Polynomial sub = pfaffian_rec(m, rest & ~(1u << j), memo);
        if (sub.is_zero()) continue;
        if (position % 2 == 1) {
            acc += entry * sub;
        } else {
            acc -= entry * sub;
        }
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace

Polynomial pfaffian(const PolyMatrix& m) {
    require_square(m, "pfaffian");
    const std::size_t n = m.size();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian: matrix has odd size");
    if (n > kMaxMatrixSize) throw std::invalid_argument("pfaffian: matrix too large");
    for (std::size_t i = 0; i < n; ++i) {
        if (!m[i][i].is_zero()) throw std::invalid_argument("pfaffian: nonzero diagonal entry");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m[i][j] != -m[j][i]) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
        }
    }
    std::unordered_map<std::uint32_t, Polynomial> memo;
    return pfaffian_rec(m, n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1), memo);
}

}  // namespace mixsym

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mixsym/rational.hpp"

namespace mixsym {

/// Monomial in t_1, t_2, ...; exponent of t_j is stored at index j-1, with
/// trailing zeros trimmed so that equal monomials compare equal.
class Monomial {
public:
    Monomial() = default;
    /// Throws std::invalid_argument for a variable index < 1.
    static Monomial variable(int index, std::uint32_t exponent = 1);
    /// From (variable index, exponent) pairs; repeated indices accumulate.
    static Monomial from_pairs(const std::vector<std::pair<int, std::uint32_t>>& pairs);

    std::uint32_t exponent(int index) const;
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    bool is_unit() const { return exps_.empty(); }
    /// Sum of index * exponent (t_j has weight j).
    long weighted_degree() const;

    Monomial operator*(const Monomial& other) const;
    /// t_j -> t_{2j}.
    Monomial doubled_indices() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Canonical order: weighted degree, then exponent vector compared from
    /// t_1 upwards, larger exponents first.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

    std::size_t hash() const;

private:
    void trim();
    std::vector<std::uint32_t> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// in canonical monomial order with no zero coefficients, so equality is
/// structural.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

    static Polynomial variable(int index);
    static Polynomial monomial(const Monomial& mono, const Rational& coeff);
    /// Sums duplicate monomials and drops zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& mono) const;

    /// True when every term has the given weighted degree (vacuous for 0).
    bool is_homogeneous(long degree) const;
    /// Largest variable index that occurs, 0 for constants.
    int max_variable() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Pretty form, e.g. "1/6*t1^3 - 2*t3"; the zero polynomial prints "0".
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// Replaces every variable t_j by t_{2j}.
Polynomial shift2(const Polynomial& p);

/// Exact value under the assignment (variable index -> value). Throws
/// std::invalid_argument if a variable of `p` is unassigned.
Rational eval(const Polynomial& p, const std::map<int, Rational>& assignment);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Exact determinant by expansion over column subsets. The 0x0 determinant is
/// 1. Throws std::invalid_argument for non-square input.
Polynomial determinant(const PolyMatrix& m);

/// Pfaffian by first-row expansion,
///   Pf(M) = sum_{j>1} (-1)^j M_{1j} Pf(M without rows/cols 1, j),
/// so Pf([[0,a],[-a,0]]) = a. Throws std::invalid_argument for odd size or a
/// matrix that is not skew-symmetric with zero diagonal.
Polynomial pfaffian(const PolyMatrix& m);

}  // namespace mixsym

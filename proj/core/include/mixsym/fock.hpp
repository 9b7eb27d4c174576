#pragma once

#include <map>
#include <string>

#include "mixsym/partition.hpp"
#include "mixsym/rational.hpp"

namespace mixsym {

/// a + b*sqrt(2) with exact rational a, b.
class Sqrt2Scalar {
public:
    Sqrt2Scalar() = default;
    Sqrt2Scalar(Rational a, Rational b = Rational(0)) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT

    /// sqrt(2)^k for any integer k.
    static Sqrt2Scalar sqrt2_pow(int k);

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    Sqrt2Scalar& operator+=(const Sqrt2Scalar& o);
    Sqrt2Scalar& operator-=(const Sqrt2Scalar& o);
    Sqrt2Scalar& operator*=(const Sqrt2Scalar& o);
    friend Sqrt2Scalar operator+(Sqrt2Scalar x, const Sqrt2Scalar& y) { return x += y; }
    friend Sqrt2Scalar operator-(Sqrt2Scalar x, const Sqrt2Scalar& y) { return x -= y; }
    friend Sqrt2Scalar operator*(Sqrt2Scalar x, const Sqrt2Scalar& y) { return x *= y; }
    friend bool operator==(const Sqrt2Scalar&, const Sqrt2Scalar&) = default;

    /// If the value is c * sqrt(2)^k with rational c > 0 and k in {0, 1},
    /// i.e. exactly one component is non-zero and it is positive.
    bool is_positive_sqrt2_monomial() const;

    /// "1/2", "3*sqrt2", "1 + 1/2*sqrt2", ...
    std::string to_string() const;

private:
    Rational a_;
    Rational b_;
};

/// Finite combination of basis states |lambda>, lambda strict; no zero
/// coefficients are stored.
class FockVector {
public:
    FockVector() = default;
    static FockVector basis(const StrictPartition& lambda, const Sqrt2Scalar& coeff = Sqrt2Scalar(Rational(1)));

    const std::map<StrictPartition, Sqrt2Scalar>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    Sqrt2Scalar coefficient(const StrictPartition& lambda) const;

    void add(const StrictPartition& lambda, const Sqrt2Scalar& coeff);
    FockVector& operator+=(const FockVector& other);
    FockVector& operator*=(const Sqrt2Scalar& scalar);
    friend FockVector operator+(FockVector x, const FockVector& y) { return x += y; }
    friend FockVector operator*(FockVector x, const Sqrt2Scalar& s) { return x *= s; }
    friend bool operator==(const FockVector&, const FockVector&) = default;

    /// One "coeff |parts>" line per state, in increasing partition order.
    std::string to_string() const;

private:
    std::map<StrictPartition, Sqrt2Scalar> entries_;
};

/// Combinatorial action of f^inf_i on a basis state:
///   i > 0: replace the part i by i+1 when i is a part and i+1 is not;
///   i = 0: add a part 1 (unless 1 is already a part) with coefficient 1/2
///          for odd length and 1 for even length.
/// Throws std::invalid_argument for i < 0.
FockVector f_inf(int i, const StrictPartition& lambda);

/// Chevalley generator f_0 = sqrt2 * sum_j (f^inf_{4j} + f^inf_{4j+3}) or
/// f_1 = sqrt2 * sum_j (f^inf_{4j+1} + f^inf_{4j+2}), extended linearly.
FockVector f_chev(Color i, const FockVector& v);

/// a(lambda): number of even parts after padding lambda to even length with
/// a 0.
int even_part_count_padded(const StrictPartition& lambda);

struct LemmaCoComparison {
    FockVector action;    // f_i^ell / ell! |c_core>
    FockVector expected;  // sqrt2^{-eps} * sum over I_i^ell(c_core) of sqrt2^{a(lambda)} |lambda>
    bool equal = false;
};

/// Throws std::invalid_argument for i = 1 with core < 0, i = 0 with core > 0,
/// or ell < 0.
LemmaCoComparison lemma_co_compare(Color i, int core_index, int ell);
bool lemma_co_check(Color i, int core_index, int ell);

}  // namespace mixsym

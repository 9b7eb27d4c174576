#include "mixsym/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace mixsym {

// ------------------------------------------------------------ Sqrt2Scalar

Sqrt2Scalar Sqrt2Scalar::sqrt2_pow(int k) {
    // sqrt2^k = 2^{k div 2} * sqrt2^{k mod 2} with floor division
    const int half = k >= 0 ? k / 2 : -((-k + 1) / 2);
    const int odd = k - 2 * half;
    Rational scale(1);
    if (half >= 0) {
        mpz_mul_2exp(mpq_numref(scale.get_mpq_t()), mpq_numref(scale.get_mpq_t()), static_cast<unsigned>(half));
    } else {
        mpz_mul_2exp(mpq_denref(scale.get_mpq_t()), mpq_denref(scale.get_mpq_t()), static_cast<unsigned>(-half));
    }
    return odd == 0 ? Sqrt2Scalar(scale) : Sqrt2Scalar(Rational(0), scale);
}

Sqrt2Scalar& Sqrt2Scalar::operator+=(const Sqrt2Scalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Sqrt2Scalar& Sqrt2Scalar::operator-=(const Sqrt2Scalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

Sqrt2Scalar& Sqrt2Scalar::operator*=(const Sqrt2Scalar& o) {
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

bool Sqrt2Scalar::is_positive_sqrt2_monomial() const {
    return (a_ > 0 && b_ == 0) || (a_ == 0 && b_ > 0);
}

std::string Sqrt2Scalar::to_string() const {
    if (b_ == 0) return to_short_string(a_);
    std::string root = b_ == 1 ? "sqrt2" : b_ == -1 ? "-sqrt2" : to_short_string(b_) + "*sqrt2";
    if (a_ == 0) return root;
    if (b_ < 0) {
        const Rational mag = -b_;
        return to_short_string(a_) + " - " + (mag == 1 ? std::string("sqrt2") : to_short_string(mag) + "*sqrt2");
    }
    return to_short_string(a_) + " + " + root;
}

// ------------------------------------------------------------- FockVector

FockVector FockVector::basis(const StrictPartition& lambda, const Sqrt2Scalar& coeff) {
    FockVector v;
    v.add(lambda, coeff);
    return v;
}

Sqrt2Scalar FockVector::coefficient(const StrictPartition& lambda) const {
    auto it = entries_.find(lambda);
    return it == entries_.end() ? Sqrt2Scalar() : it->second;
}

void FockVector::add(const StrictPartition& lambda, const Sqrt2Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& other) {
    for (const auto& [lambda, coeff] : other.entries_) add(lambda, coeff);
    return *this;
}

FockVector& FockVector::operator*=(const Sqrt2Scalar& scalar) {
    if (scalar.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [lambda, coeff] : entries_) coeff *= scalar;
    return *this;
}

std::string FockVector::to_string() const {
    if (entries_.empty()) return "0\n";
    std::string out;
    for (const auto& [lambda, coeff] : entries_) {
        out += coeff.to_string() + " |" + lambda.to_string() + ">\n";
    }
    return out;
}

// ---------------------------------------------------------------- actions

FockVector f_inf(int i, const StrictPartition& lambda) {
    if (i < 0) throw std::invalid_argument("f_inf index must be non-negative, got " + std::to_string(i));
    if (i == 0) {
        if (lambda.contains_part(1)) return {};
        std::vector<int> parts = lambda.parts();
        parts.push_back(1);
        const Rational coeff = lambda.length() % 2 == 1 ? Rational(1, 2) : Rational(1);
        return FockVector::basis(StrictPartition(std::move(parts)), Sqrt2Scalar(coeff));
    }
    if (!lambda.contains_part(i) || lambda.contains_part(i + 1)) return {};
    std::vector<int> parts = lambda.parts();
    *std::find(parts.begin(), parts.end(), i) = i + 1;
    return FockVector::basis(StrictPartition(std::move(parts)));
}

FockVector f_chev(Color i, const FockVector& v) {
    // f^inf_k kills |lambda> unless k = 0 or k is a part, so only those k
    // contribute. Residues: f_0 uses k = 0,3 (mod 4), f_1 uses k = 1,2.
    const auto selected = [i](int k) {
        const int r = k % 4;
        return i == Color::zero ? (r == 0 || r == 3) : (r == 1 || r == 2);
    };
    FockVector out;
    for (const auto& [lambda, coeff] : v.entries()) {
        if (i == Color::zero) out += f_inf(0, lambda) * coeff;
        for (int k : lambda.parts()) {
            if (selected(k)) out += f_inf(k, lambda) * coeff;
        }
    }
    return out * Sqrt2Scalar(Rational(0), Rational(1));
}

int even_part_count_padded(const StrictPartition& lambda) {
    const int evens = static_cast<int>(std::count_if(lambda.parts().begin(), lambda.parts().end(),
                                                     [](int p) { return p % 2 == 0; }));
    return evens + (lambda.length() % 2 == 1 ? 1 : 0);
}

LemmaCoComparison lemma_co_compare(Color i, int core_index, int ell) {
    if (ell < 0) throw std::invalid_argument("ell must be non-negative");
    if (i == Color::one && core_index < 0) throw std::invalid_argument("f_1 acts on c_m with m >= 0");
    if (i == Color::zero && core_index > 0) throw std::invalid_argument("f_0 acts on c_m with m <= 0");

    const StrictPartition core = bar_core(core_index);
    LemmaCoComparison out;
    out.action = FockVector::basis(core);
    for (int step = 0; step < ell; ++step) out.action = f_chev(i, out.action);
    out.action *= Sqrt2Scalar(Rational(Integer(1), factorial(static_cast<unsigned>(ell))));

    const int eps = core_index % 2 != 0 ? 1 : 0;
    for (const auto& lambda : add_set(core, i, ell)) {
        out.expected.add(lambda, Sqrt2Scalar::sqrt2_pow(even_part_count_padded(lambda) - eps));
    }
    out.equal = out.action == out.expected;
    return out;
}

bool lemma_co_check(Color i, int core_index, int ell) { return lemma_co_compare(i, core_index, ell).equal; }

}  // namespace mixsym

#include "mixsym/schur.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace mixsym {

namespace {

// Memo for the sequences defined by n*a_n = sum_{k in steps, k<=n} k t_k a_{n-k}.
class SeriesCache {
public:
    explicit SeriesCache(bool odd_only) : odd_only_(odd_only) { values_.emplace_back(1); }

    Polynomial get(int n) {
        if (n < 0) return Polynomial();
        std::lock_guard lock(mutex_);
        while (static_cast<int>(values_.size()) <= n) {
            const int next = static_cast<int>(values_.size());
            Polynomial acc;
            for (int k = 1; k <= next; ++k) {
                if (odd_only_ && k % 2 == 0) continue;
                acc += Polynomial::variable(k) * values_[static_cast<std::size_t>(next - k)] * Rational(k);
            }
            acc *= Rational(1, next);
            values_.push_back(std::move(acc));
        }
        return values_[static_cast<std::size_t>(n)];
    }

private:
    bool odd_only_;
    std::mutex mutex_;
    std::deque<Polynomial> values_;
};

SeriesCache& h_cache() {
    static SeriesCache cache(false);
    return cache;
}

SeriesCache& q_cache() {
    static SeriesCache cache(true);
    return cache;
}

}  // namespace

Polynomial complete_h(int n) { return h_cache().get(n); }

Polynomial q_fun(int n) { return q_cache().get(n); }

Polynomial schur_s(const Partition& lambda) {
    const std::size_t len = lambda.length();
    PolyMatrix m(len, std::vector<Polynomial>(len));
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = 0; j < len; ++j) {
            m[i][j] = complete_h(lambda.at(i) + static_cast<int>(j) - static_cast<int>(i));
        }
    }
    return determinant(m);
}

Polynomial q_pair(int m, int n) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("q_pair indices must be non-negative, got (" + std::to_string(m) + "," +
                                    std::to_string(n) + ")");
    }
    if (m == n) return Polynomial();
    if (m < n) return -q_pair(n, m);
    Polynomial acc = q_fun(m) * q_fun(n);
    for (int i = 1; i <= n; ++i) {
        Polynomial term = q_fun(m + i) * q_fun(n - i) * Rational(2);
        if (i % 2 == 1) {
            acc -= term;
        } else {
            acc += term;
        }
    }
    return acc;
}

Polynomial schur_q(const StrictPartition& lambda) {
    std::vector<int> parts = lambda.parts();
    if (parts.size() % 2 == 1) parts.push_back(0);
    const std::size_t len = parts.size();
    PolyMatrix m(len, std::vector<Polynomial>(len));
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 1; j < len; ++j) {
            m[i][j] = q_pair(parts[i], parts[j]);
            m[j][i] = -m[i][j];
        }
    }
    return pfaffian(m);
}

Polynomial rect_schur(int rows, int cols) {
    if (rows < 0 || cols < 0) return Polynomial();
    if (rows == 0 || cols == 0) return Polynomial(1);
    return schur_s(Partition(std::vector<int>(static_cast<std::size_t>(rows), cols)));
}

}  // namespace mixsym

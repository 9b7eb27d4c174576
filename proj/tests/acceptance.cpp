// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact; the runtime limits are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "mixsym/barquot.hpp"
#include "mixsym/fock.hpp"
#include "mixsym/mixed.hpp"
#include "mixsym/schur.hpp"
#include "oracles.hpp"

using namespace mixsym;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0) {
        outcome.require(seconds < limit_seconds,
                        "runtime " + std::to_string(seconds) + " s exceeds " + std::to_string(limit_seconds) + " s");
    }
    if (!outcome.ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.3f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", id, name.c_str(), seconds,
                outcome.ok ? "" : " -- ", outcome.detail.c_str());
    std::fflush(stdout);
}

struct Signed {
    int sign;
    std::vector<int> q;
    std::vector<int> s;
    auto operator<=>(const Signed&) const = default;
};

std::vector<Signed> term_signature(const std::vector<ExpansionTerm>& terms) {
    std::vector<Signed> out;
    for (const auto& t : terms) out.push_back({t.sign, t.q_index.parts(), t.s_index.parts()});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Signed> sorted(std::vector<Signed> v) {
    std::sort(v.begin(), v.end());
    return v;
}

int run_cli(const std::vector<std::string>& args, std::string& out) {
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    out = o.str();
    return code;
}

std::vector<std::vector<int>> parts_of(const std::vector<StrictPartition>& set) {
    std::vector<std::vector<int>> out;
    for (const auto& p : set) out.push_back(p.parts());
    return out;
}

}  // namespace

int main() {
    // 1. Worked examples of the mixed expansion, through the CLI and library.
    criterion(1, "worked examples: verify + expand term lists (exact, < 1 s each)", 0, [](Outcome& o) {
        struct Example {
            ExpansionCase c;
            int m, n;
            std::vector<std::string> args;
            std::vector<Signed> terms;
        };
        const std::vector<Example> examples{
            {ExpansionCase::one, 3, 2, {"verify", "--case", "one", "--m", "3", "--n", "2"},
             sorted({{+1, {}, {1, 1, 1, 1}},
                     {+1, {}, {2, 1, 1}},
                     {+1, {}, {2, 2}},
                     {+1, {5, 3}, {}},
                     {-1, {5, 1}, {1}},
                     {+1, {3, 1}, {2}}})},
            {ExpansionCase::zero, 2, 2, {"verify", "--case", "zero", "--m", "2", "--n", "2"},
             sorted({{-1, {}, {3}}, {-1, {}, {2, 1}}, {+1, {2}, {1, 1}}, {+1, {4}, {1}}, {+1, {4, 2}, {}}})},
        };
        for (const auto& ex : examples) {
            const auto start = Clock::now();
            std::string out;
            const int code = run_cli(ex.args, out);
            o.require(code == 0, "verify exit code " + std::to_string(code));
            o.require(out.find("equal: true") != std::string::npos, "verify did not report equal: true");

            auto expand_args = ex.args;
            expand_args[0] = "expand";
            o.require(run_cli(expand_args, out) == 0, "expand failed");
            const auto sum = lhs(ex.c, ex.m, ex.n);
            o.require(term_signature(sum.terms) == ex.terms, "term list differs from the worked example");
            o.require(verify(ex.c, ex.m, ex.n).equal, "library verify not equal");
            const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
            o.require(seconds < 1.0, "example took " + std::to_string(seconds) + " s");
        }
    });

    // 2. Full sweep including the out-of-window n.
    criterion(2, "theorem sweep: both cases, 0<=m<=5, 0<=n<=2m+3 (exact, < 60 s)", 60.0, [](Outcome& o) {
        int checked = 0;
        for (ExpansionCase c : {ExpansionCase::one, ExpansionCase::zero}) {
            for (int m = 0; m <= 5; ++m) {
                for (int n = 0; n <= 2 * m + 3; ++n) {
                    const auto report = verify(c, m, n);
                    ++checked;
                    o.require(report.equal, std::string(to_string(c)) + " m=" + std::to_string(m) +
                                                " n=" + std::to_string(n) + " fails");
                    const int window = c == ExpansionCase::one ? 2 * m : 2 * m + 1;
                    if (n > window) {
                        o.require(report.terms.empty() && report.lhs.is_zero() && report.rhs.is_zero(),
                                  "out-of-window case is not 0 = 0");
                    }
                }
            }
        }
        o.require(checked == 108, "expected 108 identities, checked " + std::to_string(checked));
    });

    // 3. The three I-sets over c_-2.
    criterion(3, "I-set reproduction: I_0^l(c_-2), l = 1,2,3", 0, [](Outcome& o) {
        using Sets = std::set<std::vector<int>>;
        const std::vector<Sets> expected{
            {{8, 3}, {7, 4}, {7, 3, 1}},
            {{9, 3}, {8, 4}, {8, 3, 1}, {7, 4, 1}, {7, 5}},
            {{9, 4}, {8, 5}, {9, 3, 1}, {8, 4, 1}, {7, 5, 1}},
        };
        for (int ell = 1; ell <= 3; ++ell) {
            const auto got = parts_of(add_set(bar_core(-2), Color::zero, ell));
            o.require(got.size() == expected[ell - 1].size() && Sets(got.begin(), got.end()) == expected[ell - 1],
                      "I_0^" + std::to_string(ell) + "(c_-2) differs");
        }
    });

    // 4. Quotient and sign fixtures.
    criterion(4, "quotient and sign fixtures", 0, [](Outcome& o) {
        const auto q = quotient(StrictPartition({11, 9, 6, 2, 1}));
        o.require(q.charge == 1, "charge != 1");
        o.require(q.q0 == StrictPartition({3, 1}), "q0 != (3,1)");
        o.require(q.q1 == Partition({2, 1, 1, 1}), "q1 != (2,1,1,1)");
        o.require(delta_sign(StrictPartition({11, 5, 2}), 3) == -1, "delta((11,5,2), 3) != -1");
        o.require(delta_sign(StrictPartition({15, 13, 8, 5}), -4) == -1, "delta((15,13,8,5), -4) != -1");
    });

    // 5. Bijection round trips.
    criterion(5, "bijection round trip: 1000 partitions + 1000 triples (exact, < 5 s)", 5.0, [](Outcome& o) {
        std::mt19937 rng(424242);
        for (int k = 0; k < 1000; ++k) {
            const auto lambda = oracle::random_strict(rng, 60);
            o.require(lambda.weight() <= 60, "generator produced |lambda| > 60");
            o.require(inverse_quotient(quotient(lambda)) == lambda, "round trip fails on " + lambda.to_string());
        }
        std::uniform_int_distribution<int> charge(-5, 5);
        for (int k = 0; k < 1000; ++k) {
            const QuotientTriple t{charge(rng), oracle::random_strict(rng, 20), oracle::random_partition(rng, 20)};
            o.require(quotient(inverse_quotient(t)) == t, "reverse round trip fails for charge " +
                                                              std::to_string(t.charge) + " q0=" + t.q0.to_string() +
                                                              " q1=" + t.q1.to_string());
        }
    });

    // 6. S-functions against the tableau oracle at t_j = p_j(x)/j.
    criterion(6, "Schur oracle: |lambda| <= 6, 20 random points in 4 variables (exact, < 30 s)", 30.0,
              [](Outcome& o) {
                  std::mt19937 rng(606);
                  int shapes = 0;
                  for (int w = 0; w <= 6; ++w) {
                      for (const auto& shape : oracle::partitions_of(w, w)) {
                          ++shapes;
                          const Polynomial s = schur_s(Partition(shape));
                          for (int point = 0; point < 20; ++point) {
                              std::vector<Rational> x;
                              for (int k = 0; k < 4; ++k) x.push_back(oracle::random_rational(rng));
                              const auto lhs_value = eval(s, oracle::power_sum_assignment(x, std::max(w, 1)));
                              o.require(lhs_value == oracle::schur_by_tableaux(shape, x),
                                        "mismatch for shape " + Partition(shape).to_string());
                          }
                      }
                  }
                  o.require(shapes == 30, "expected 30 shapes");
              });

    // 7. Pf^2 = det.
    criterion(7, "Pfaffian property: Pf(M)^2 = det(M), 50 matrices each of size 2, 4, 6", 0, [](Outcome& o) {
        std::mt19937 rng(77);
        for (std::size_t size : {2u, 4u, 6u}) {
            for (int k = 0; k < 50; ++k) {
                const auto m = oracle::random_skew(rng, size);
                const auto pf = pfaffian(m);
                o.require(pf * pf == determinant(m), "fails at size " + std::to_string(size));
            }
        }
    });

    // 8. f_i^l / l! |c> against the I-set expansion, with support equality.
    criterion(8, "divided-power action and I-set support equality, |core| <= 3 (exact, < 30 s)", 30.0, [](Outcome& o) {
        int checked = 0;
        for (int core = -3; core <= 3; ++core) {
            for (Color c : {Color::zero, Color::one}) {
                if ((c == Color::one && core < 0) || (c == Color::zero && core > 0)) continue;
                const int window = c == Color::one ? 2 * core : -2 * core + 1;
                for (int ell = 0; ell <= window; ++ell) {
                    ++checked;
                    const auto cmp = lemma_co_compare(c, core, ell);
                    const std::string where = "core=" + std::to_string(core) + " ell=" + std::to_string(ell) +
                                              " color=" + std::to_string(static_cast<int>(c));
                    o.require(cmp.equal, "coefficients differ at " + where);
                    const auto iset = add_set(bar_core(core), c, ell);
                    std::vector<StrictPartition> support;
                    for (const auto& [lambda, coeff] : cmp.action.entries()) support.push_back(lambda);
                    std::sort(support.begin(), support.end(), std::greater<>());
                    o.require(support == iset, "support differs from I-set at " + where);
                }
            }
        }
        o.require(checked > 0, "nothing checked");
    });

    // 9. Emptiness bounds.
    criterion(9, "emptiness bounds for 1 <= m <= 5", 0, [](Outcome& o) {
        for (int m = 1; m <= 5; ++m) {
            o.require(add_set(bar_core(m), Color::one, 2 * m + 1).empty(),
                      "I_1^{2m+1}(c_m) non-empty, m=" + std::to_string(m));
            o.require(add_set(bar_core(-m), Color::zero, 2 * m + 2).empty(),
                      "I_0^{2m+2}(c_-m) non-empty, m=" + std::to_string(m));
        }
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}

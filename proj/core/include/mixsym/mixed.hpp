#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixsym/partition.hpp"
#include "mixsym/polynomial.hpp"

namespace mixsym {

/// Which of the two mixed expansion identities:
///   one:  sum over I_1^n(c_m)  equals S over the (2m-n) x n rectangle,
///   zero: sum over I_0^n(c_-m) equals S over the n x (2m+1-n) rectangle.
enum class ExpansionCase { one, zero };

std::string_view to_string(ExpansionCase c);
/// "one" / "zero"; std::nullopt otherwise.
std::optional<ExpansionCase> parse_case(std::string_view text);

/// Signed core index of the case: m for case one, -m for case zero.
int core_index(ExpansionCase c, int m);
Color node_color(ExpansionCase c);

struct ExpansionTerm {
    StrictPartition mu;
    int sign = 1;
    StrictPartition q_index;
    Partition s_index;
    /// sign * Q_{q_index}(t) * S_{s_index}(t^{(2)})
    Polynomial value;
};

struct ExpansionSum {
    Polynomial sum;
    std::vector<ExpansionTerm> terms;
};

/// Terms and sum of the left-hand side, terms in decreasing lexicographic
/// order of mu. Throws std::invalid_argument for negative m or n.
ExpansionSum lhs(ExpansionCase c, int m, int n);

/// Rectangular S-function on the right-hand side.
Polynomial rhs(ExpansionCase c, int m, int n);

/// Row and column counts of the right-hand rectangle (may be <= 0).
std::pair<int, int> rhs_rectangle(ExpansionCase c, int m, int n);

struct VerificationReport {
    ExpansionCase expansion_case = ExpansionCase::one;
    int core_index = 0;
    int m = 0;
    int n = 0;
    Polynomial lhs;
    Polynomial rhs;
    Polynomial difference;  // lhs - rhs
    bool equal = false;
    std::vector<ExpansionTerm> terms;
};

VerificationReport verify(ExpansionCase c, int m, int n);

}  // namespace mixsym

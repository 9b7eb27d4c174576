#pragma once

#include "mixsym/partition.hpp"
#include "mixsym/polynomial.hpp"

namespace mixsym {

/// Coefficient of z^n in exp(sum_k t_k z^k). Zero for n < 0.
Polynomial complete_h(int n);

/// Coefficient of z^n in exp(sum_{k odd} t_k z^k). Zero for n < 0.
Polynomial q_fun(int n);

/// Jacobi-Trudi determinant det(h_{lambda_i + j - i}).
Polynomial schur_s(const Partition& lambda);

/// Two-row Q-function Q_{m,n}; antisymmetric, so Q_{m,m} = 0.
/// Throws std::invalid_argument for negative indices.
Polynomial q_pair(int m, int n);

/// Pfaffian of (Q_{lambda_i, lambda_j}); odd-length shapes get one 0 part.
Polynomial schur_q(const StrictPartition& lambda);

/// S over the diagram with `rows` rows of length `cols`. 1 when either side
/// is 0 and both are >= 0; 0 when either side is negative.
Polynomial rect_schur(int rows, int cols);

}  // namespace mixsym

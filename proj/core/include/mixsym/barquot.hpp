#pragma once

#include <string>
#include <vector>

#include "mixsym/partition.hpp"

namespace mixsym {

/// Strictly decreasing integer sequence i_1 > i_2 > ... with i_k = m - k for
/// all k past the stored prefix. The prefix is the shortest one with that
/// property.
struct MayaDiagram {
    std::vector<int> prefix;
    int charge = 0;

    /// Entry i_k for k >= 1.
    int entry(std::size_t k) const;

    friend bool operator==(const MayaDiagram&, const MayaDiagram&) = default;
};

/// Charge plus the two quotient components (even parts halved; odd parts
/// through the Maya diagram).
struct QuotientTriple {
    int charge = 0;
    StrictPartition q0;
    Partition q1;

    friend bool operator==(const QuotientTriple&, const QuotientTriple&) = default;
};

/// Bead positions on the three runners, each sorted ascending.
/// left: positions = 0,2 (mod 4), central: = 1 (mod 4), right: = 3 (mod 4).
struct BarAbacus {
    std::vector<int> left;
    std::vector<int> central;
    std::vector<int> right;

    friend bool operator==(const BarAbacus&, const BarAbacus&) = default;
};

MayaDiagram maya_diagram(const StrictPartition& lambda);
/// Builds the Maya diagram whose entries are i_k = pi_k + charge - k.
MayaDiagram maya_from_partition(int charge, const Partition& pi);
/// pi_k = i_k + k - charge, trailing zeros dropped.
Partition maya_to_partition(const MayaDiagram& maya);

QuotientTriple quotient(const StrictPartition& lambda);
StrictPartition inverse_quotient(int charge, const StrictPartition& q0, const Partition& q1);
inline StrictPartition inverse_quotient(const QuotientTriple& t) { return inverse_quotient(t.charge, t.q0, t.q1); }

/// Abacus of lambda viewed as an element of some I-set over c_{core_index}.
/// A bead sits on 0 exactly when core_index < 0 and lambda has -core_index
/// parts.
BarAbacus abacus(const StrictPartition& lambda, int core_index);

/// Number of (central bead, left bead) pairs with the central bead strictly
/// higher.
int abacus_pair_count(const BarAbacus& ab);

/// (-1)^{abacus_pair_count}.
int delta_sign(const StrictPartition& lambda, int core_index);

/// Three-column text rendering: rows "4k 4k+1 4k+3" then "4k+2", beads in
/// brackets. `min_rows` pads the picture so several abaci line up.
std::string render_abacus(const BarAbacus& ab, int min_rows = 0);

}  // namespace mixsym

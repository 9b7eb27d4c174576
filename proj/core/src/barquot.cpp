#include "mixsym/barquot.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace mixsym {

namespace {

void trim_to_minimal_prefix(MayaDiagram& maya) {
    auto& p = maya.prefix;
    while (!p.empty() && p.back() == maya.charge - static_cast<int>(p.size())) p.pop_back();
}

}  // namespace

int MayaDiagram::entry(std::size_t k) const {
    if (k >= 1 && k <= prefix.size()) return prefix[k - 1];
    return charge - static_cast<int>(k);
}

MayaDiagram maya_diagram(const StrictPartition& lambda) {
    std::vector<int> nonneg;         // iota(4k+1) = k
    std::set<int> removed;           // iota*(4k+3) = -k-1
    for (int part : lambda.parts()) {
        if (part % 4 == 1) nonneg.push_back((part - 1) / 4);
        if (part % 4 == 3) removed.insert(-(part - 3) / 4 - 1);
    }
    // parts are decreasing, so nonneg already is
    MayaDiagram maya;
    maya.charge = static_cast<int>(nonneg.size()) - static_cast<int>(removed.size());
    maya.prefix = std::move(nonneg);
    const int depth = removed.empty() ? 0 : -*removed.begin();
    for (int j = -1; j >= -depth; --j) {
        if (!removed.contains(j)) maya.prefix.push_back(j);
    }
    trim_to_minimal_prefix(maya);
    return maya;
}

MayaDiagram maya_from_partition(int charge, const Partition& pi) {
    MayaDiagram maya;
    maya.charge = charge;
    for (std::size_t k = 1; k <= pi.length(); ++k) {
        maya.prefix.push_back(pi.at(k - 1) + charge - static_cast<int>(k));
    }
    trim_to_minimal_prefix(maya);
    return maya;
}

Partition maya_to_partition(const MayaDiagram& maya) {
    std::vector<int> parts;
    for (std::size_t k = 1; k <= maya.prefix.size(); ++k) {
        parts.push_back(maya.prefix[k - 1] + static_cast<int>(k) - maya.charge);
    }
    return Partition(std::move(parts));
}

QuotientTriple quotient(const StrictPartition& lambda) {
    std::vector<int> halves;
    for (int part : lambda.parts()) {
        if (part % 2 == 0) halves.push_back(part / 2);
    }
    const MayaDiagram maya = maya_diagram(lambda);
    return QuotientTriple{maya.charge, StrictPartition(std::move(halves)), maya_to_partition(maya)};
}

StrictPartition inverse_quotient(int charge, const StrictPartition& q0, const Partition& q1) {
    const MayaDiagram maya = maya_from_partition(charge, q1);
    std::vector<int> parts;
    for (int s : q0.parts()) parts.push_back(2 * s);

    const int len = static_cast<int>(maya.prefix.size());
    for (int k = 1; maya.entry(k) >= 0; ++k) parts.push_back(4 * maya.entry(k) + 1);
    // Every j <= charge - len - 1 lies in the tail, so only [charge - len, -1]
    // can be missing from the diagram.
    for (int j = -1; j >= charge - len; --j) {
        if (std::find(maya.prefix.begin(), maya.prefix.end(), j) == maya.prefix.end()) {
            parts.push_back(-4 * j - 1);
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return StrictPartition(std::move(parts));
}

BarAbacus abacus(const StrictPartition& lambda, int core_index) {
    BarAbacus ab;
    if (core_index < 0 && static_cast<int>(lambda.length()) == -core_index) ab.left.push_back(0);
    for (auto it = lambda.parts().rbegin(); it != lambda.parts().rend(); ++it) {
        switch (*it % 4) {
            case 1: ab.central.push_back(*it); break;
            case 3: ab.right.push_back(*it); break;
            default: ab.left.push_back(*it); break;
        }
    }
    return ab;
}

int abacus_pair_count(const BarAbacus& ab) {
    int count = 0;
    for (int c : ab.central) {
        count += static_cast<int>(std::lower_bound(ab.left.begin(), ab.left.end(), c) - ab.left.begin());
    }
    return count;
}

int delta_sign(const StrictPartition& lambda, int core_index) {
    return abacus_pair_count(abacus(lambda, core_index)) % 2 == 0 ? 1 : -1;
}

std::string render_abacus(const BarAbacus& ab, int min_rows) {
    int top = 0;
    for (const auto* runner : {&ab.left, &ab.central, &ab.right}) {
        if (!runner->empty()) top = std::max(top, runner->back());
    }
    const int blocks = std::max(top / 4 + 1, (min_rows + 1) / 2);

    const auto has = [](const std::vector<int>& runner, int pos) {
        return std::binary_search(runner.begin(), runner.end(), pos);
    };
    const auto cell = [&](const std::vector<int>& runner, int pos) {
        std::string s = has(runner, pos) ? "[" + std::to_string(pos) + "]" : " " + std::to_string(pos) + " ";
        s.insert(0, 6 - std::min<std::size_t>(6, s.size()), ' ');
        return s;
    };

    std::ostringstream out;
    for (int k = 0; k < blocks; ++k) {
        out << cell(ab.left, 4 * k) << cell(ab.central, 4 * k + 1) << cell(ab.right, 4 * k + 3) << '\n';
        out << cell(ab.left, 4 * k + 2) << '\n';
    }
    return out.str();
}

}  // namespace mixsym

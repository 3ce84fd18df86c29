#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "genus/families.hpp"
#include "genus/seqcore.hpp"

namespace genus {

// The five named cubic ladder/cross graph families:
//   L  - closed-end ladders        CL - circular ladders
//   ML - Moebius ladders           RL - Ringel ladders
//   R  - crosses
enum class GraphFamilyTag { L, CL, ML, RL, R };

std::string tag_name(GraphFamilyTag tag);

struct NamedFamily {
    GraphFamilyTag tag;
    int n;
};

// Exact genus distribution of the named family, reduced to ladder-surface
// rows: L_n is family 6; CL_n is family 11 shifted down one genus; ML_n is
// CL_n with two genus-0 embeddings traded for genus-1 ones; RL_n is family
// 7 at n+1; R_n is 2*family5(n) + 2*shift(family2(n)).
// Totals: 4^n for L/CL/ML, 4^(n+1) for RL/R.
GenusDistribution genus_poly(NamedFamily fam);
GenusDistribution genus_poly(const FamilyTable& table, NamedFamily fam);

// Polynomial product (convolution); offsets add.
GenusDistribution poly_product(const GenusDistribution& a, const GenusDistribution& b);

// Eleven per-boundary-type partial polynomials of a root graph, consumed
// by compose_ladder. Absent entries are the zero polynomial.
struct PartialPolySet {
    std::array<std::optional<GenusDistribution>, 11> parts;

    const std::optional<GenusDistribution>& part(int j) const {
        return parts[static_cast<std::size_t>(j - 1)];
    }
    void set_part(int j, GenusDistribution d) {
        parts[static_cast<std::size_t>(j - 1)] = std::move(d);
    }
    bool any() const {
        for (const auto& p : parts)
            if (p) return true;
        return false;
    }
};

// sum_j part_j * family_j(n): the genus polynomial of the ladder (or cross)
// obtained by appending n rungs to the root graph the partials describe.
GenusDistribution compose_ladder(const PartialPolySet& partials, int n);
GenusDistribution compose_ladder(const FamilyTable& table, const PartialPolySet& partials,
                                 int n);

// One term of the coupled exploratory recurrences, with empirical flags.
struct P52Entry {
    int n;
    GenusDistribution dist;
    bool unimodal;
    bool log_concave;
};

struct P52Report {
    std::vector<P52Entry> first;   // n = 0, 1, ..., max_n
    std::vector<P52Entry> second;  // n = 1, ..., max_n
};

// The coupled pair of sequences
//   a_i(n) = 2 a_i(n-1) + 8 a_{i-1}(n-1) + 48 a_{i-1}(n-2) + 12 b_{i-1}(n-1)
//   b_i(n) = 8 b_{i-1}(n-1) + 32 a_{i-1}(n-2)
// from bases a(0) = (1)@0, a(1) = (2,14)@0, b(1) = (4)@1, evaluated
// exactly. Unimodality/log-concavity are reported per n as findings; the
// question of their status in general is open.
P52Report p52_sequences(int max_n);

}  // namespace genus

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "genus/bigint.hpp"
#include "genus/errors.hpp"

namespace genus {

// A trimmed finite sequence of nonnegative big integers together with the
// genus index of its first entry. Entry k counts embeddings (or surfaces)
// of genus offset()+k, so the same object doubles as the genus polynomial
// sum_i count(i) x^i. Reads outside the stored range are 0.
class GenusDistribution {
public:
    // Trims leading/trailing zeros and validates. Throws Error on an empty,
    // all-zero or negative input.
    GenusDistribution(int offset, std::vector<BigInt> counts);

    int offset() const { return offset_; }
    int max_genus() const { return offset_ + static_cast<int>(counts_.size()) - 1; }
    int size() const { return static_cast<int>(counts_.size()); }

    const std::vector<BigInt>& counts() const { return counts_; }

    // Count at absolute genus i; 0 outside [offset, max_genus].
    const BigInt& at_genus(int i) const;

    BigInt total() const;

    bool operator==(const GenusDistribution& o) const = default;

    // "(a, b, c)@offset" - used in diagnostics and test failure output.
    std::string str() const;

private:
    int offset_;
    std::vector<BigInt> counts_;
};

inline std::ostream& operator<<(std::ostream& os, const GenusDistribution& d) {
    return os << d.str();
}

// Scale every count by a positive integer factor.
GenusDistribution scale(const GenusDistribution& d, const BigInt& factor);

// The contiguous argmax interval [l, m] of a sequence, in absolute genus
// indices. l == m is a single peak.
struct ModeInterval {
    int l = 0;
    int m = 0;
    int span() const { return m - l; }
    bool operator==(const ModeInterval&) const = default;
};

struct ModeSearch {
    ModeInterval modes;       // leftmost maximal run when not contiguous
    bool argmax_contiguous;   // false means the input is not unimodal
};

// True iff the entries weakly increase to a contiguous maximal run and
// weakly decrease after it. Equivalently: no strict rise after a strict
// fall anywhere in the sequence.
bool is_unimodal(const GenusDistribution& seq);

// True iff count[k]^2 >= count[k-1]*count[k+1] for every interior k.
// For sequences without internal zeros this implies unimodality.
bool is_log_concave(const GenusDistribution& seq);

// Argmax interval of seq. When the argmax set is not contiguous the
// leftmost maximal run is returned with argmax_contiguous == false;
// callers that require unimodality must test the flag (or is_unimodal).
ModeSearch mode_interval(const GenusDistribution& seq);

// One summand of a weighted shifted combination: weight * seq shifted
// right by `shift`. The weight is an exact positive rational so that
// relations like "a quarter of the next row" stay representable.
struct ShiftedTerm {
    Rational weight;
    int shift = 0;
    GenusDistribution seq;
};

// z_i = sum_j weight_j * seq_j[i - shift_j], defined on the union of the
// shifted supports (out-of-range reads are 0). Every resulting entry must
// reduce to an integer; throws NonIntegerResult otherwise, EmptyTermList
// for no terms, Error for a nonpositive weight or negative shift.
// Unimodality of the terms is NOT required here.
GenusDistribution combine(const std::vector<ShiftedTerm>& terms);

// [L, M] with L = min_j (l_j + shift_j), M = max_j (m_j + shift_j) over the
// terms' mode intervals [l_j, m_j]. Throws NonUnimodalTerm if any term's
// sequence is not unimodal.
ModeInterval criterion_window(const std::vector<ShiftedTerm>& terms);

// Result of the window-reduction unimodality test for a combination of
// unimodal terms. The combination is weakly increasing left of the window
// and weakly decreasing right of it, so restricting the direct unimodality
// scan to [window.l, window.m] decides unimodality of the whole sequence.
struct WindowVerdict {
    bool unimodal;            // decided on the window restriction only
    ModeInterval window;
    int window_span;          // window.m - window.l
    bool corollary_fires;     // window_span <= 3 (reported, never decides)
    bool full_check_agrees;   // window verdict == direct full-sequence scan
    GenusDistribution combined;
};

// Combines the terms and decides unimodality by the window reduction.
// full_check_agrees is computed from the independent full scan and must
// always be true; it is recorded rather than assumed.
WindowVerdict window_unimodality_check(const std::vector<ShiftedTerm>& terms);

}  // namespace genus

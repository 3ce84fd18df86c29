#pragma once

#include <string>
#include <vector>

#include "genus/seqcore.hpp"

namespace genus {

// One of the eleven ladder-surface families, indexed 1..11.
struct FamilyId {
    int j;
    explicit FamilyId(int j_) : j(j_) {
        if (j < 1 || j > 11) throw OutOfRange("FamilyId: j must be in 1..11");
    }
    bool operator==(const FamilyId&) const = default;
};

// Closed-form genus distributions. Each evaluates an exact rational
// expression per genus and reduces it to an integer; a NonIntegerEntry
// signals a transcription bug and must never fire.
//
// Family 1:  entry i = 2^(n+i) * (2n-3i)/(n-i) * C(n-i, i),          0 <= i <= n/2
// Family 6:  entry i = 2^(n+i-1) * (2n-3i+2)/(n-i+1) * C(n+1-i, i),  0 <= i <= (n+1)/2
// Families 3, 5, 9 are piecewise; 5 and 9 carry small-n base tables.
GenusDistribution closed_form_s1(int n);
GenusDistribution closed_form_s3(int n);
GenusDistribution closed_form_s5(int n);
GenusDistribution closed_form_s6(int n);
GenusDistribution closed_form_s9(int n);

// Distributions of all eleven families for 0 <= n <= max_n, built bottom-up:
// row n = 0 is the constant distribution {g_0 = 1} for every family;
// families 1 and 6 come from their closed forms, everything else from the
// joint first-order recurrences and the fixed inter-family relations.
// Immutable after construction.
class FamilyTable {
public:
    explicit FamilyTable(int max_n);

    int max_n() const { return max_n_; }
    const GenusDistribution& row(FamilyId j, int n) const;

private:
    int max_n_;
    // rows_[j-1][n]
    std::vector<std::vector<GenusDistribution>> rows_;
};

FamilyTable build_table(int max_n);

enum class Method { closed, recurrence, auto_check };

// Distribution of family j at n.
//   closed      - closed form only (families 1, 3, 5, 6, 9; n >= 1)
//   recurrence  - the table row
//   auto_check  - recurrence row, cross-checked against the closed form
//                 when one exists (CrossCheckMismatch if they differ)
GenusDistribution family_distribution(FamilyId j, int n, Method method = Method::auto_check);
GenusDistribution family_distribution(const FamilyTable& table, FamilyId j, int n,
                                      Method method = Method::auto_check);

// True when a closed form exists for family j.
bool has_closed_form(FamilyId j);

// Outcome of one inter-family identity checked at one n. Informational
// rows record evaluations outside the identity's asserted range; their
// pass flag is reported but carries no claim.
struct IdentityCheck {
    std::string identity;
    int n;
    bool pass;
    bool informational;
    std::string detail;  // nonempty on failure: the two mismatching rows
};

// Entrywise verification of the fixed relations between family rows:
//   j4(n)  = 4 * shift(j1(n-1))          n >= 1
//   j2(n)  = 4 * j7(n-1)                 n >= 1
//   j8(n)  = 4 * shift(j7(n-1))          n >= 1
//   j7(n):   2 at i=0, 4*j3(n-1)[i-1] - 2 at i=1, 4*j3(n-1)[i-1] above
//   j10(n):  1 at i=0, j3(n)[i-1] - 1 at i=1, j3(n)[i-1] above
//   j6(n)  = j1(n+1) / 4                 asserted n >= 2, n = 1 informational
//   j11(n):  2 at i=1, j5(n)[i-1] - 2 at i=2, j5(n)[i-1] above; n >= 3
// Requires max_n >= 2. Failures are data, not exceptions.
std::vector<IdentityCheck> relation_report(int max_n);

}  // namespace genus

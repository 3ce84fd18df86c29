#pragma once

#include <string>
#include <vector>

#include "genus/families.hpp"
#include "genus/graphfam.hpp"

namespace genus {

// Mode interval predicted by a piecewise formula. Outside the range where
// a formula is stated, peak formulas fall back to the computed argmax and
// set formula_defined = false rather than extrapolate.
struct PeakFormula {
    ModeInterval modes;
    bool formula_defined;
};

// Piecewise mode formula for family j at length n (single peak except the
// known two-mode case of family 4 at n = 3). All bracket expressions are
// floors. Throws OutOfRange for n < 1.
PeakFormula peak_formula(FamilyId j, int n);

// Mode formula for the named ladder/cross families. Minimum n: 2 for
// L/CL/ML, 1 for RL/R; OutOfRange below that.
PeakFormula graph_peak_formula(GraphFamilyTag fam, int n);

// Formula prediction vs argmax of the computed distribution at one n.
struct PeakVerification {
    std::string subject;  // "s1".."s11", "L", "CL", "ML", "RL", "R"
    int n;
    bool formula_defined;
    ModeInterval formula_modes;  // = empirical_modes when formula absent
    ModeInterval empirical_modes;
    bool agree;
    bool unimodal;
    bool log_concave;
};

// Sweeps n over [n_lo, n_hi], computing each distribution, its argmax and
// flags, and comparing against the formula. Disagreements are data.
std::vector<PeakVerification> verify_peaks(FamilyId j, int n_lo, int n_hi);
std::vector<PeakVerification> verify_peaks(GraphFamilyTag fam, int n_lo, int n_hi);

// Exact strict comparison of a predicted peak entry against both
// neighbors: count(peak) > count(peak-1) and count(peak) > count(peak+1)
// (out-of-support neighbors read 0).
struct StrictPeakCheck {
    int n;
    int peak_genus;
    bool holds;
};

// The strict neighbor inequalities backing the large-n peak positions:
//   family 3 at genus (n+2)/3          for n >= 8
//   family 5 at genus (n+1)/3 + 1      for 6 <= n <= 16
//   family 5 at genus (n+2)/3 + 1      for n >= 17
//   family 9 at genus n/3 + 2          for n >= 10
// Sweeps each range clipped to [n_lo, n_hi].
std::vector<StrictPeakCheck> strict_peak_inequalities(FamilyId j, int n_lo, int n_hi);

}  // namespace genus

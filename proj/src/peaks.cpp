#include "genus/peaks.hpp"

#include <algorithm>
#include <optional>

namespace genus {

namespace {

// Piecewise single-peak formulas; nullopt where no formula is stated.
// Integer division on nonnegative arguments is the floor bracket.
std::optional<ModeInterval> family_formula(int j, int n) {
    auto peak = [](int g) { return ModeInterval{g, g}; };
    switch (j) {
        case 1:
            if (n == 2) return std::nullopt;
            return peak((n + 1) / 3);
        case 2:
            if (n < 3) return std::nullopt;
            if (n <= 8) return peak((n - 1) / 2);
            if (n == 9) return peak(3);
            return peak(n / 3 + 1);
        case 3:
            if (n <= 6) return peak((n - 1) / 2);
            if (n == 7) return peak(2);
            return peak((n + 2) / 3);
        case 4:
            if (n == 3) return ModeInterval{1, 2};
            return peak(n / 3 + 1);
        case 5:
            if (n < 2) return std::nullopt;
            if (n <= 5) return peak(n / 2);
            if (n <= 16) return peak((n + 1) / 3 + 1);
            return peak((n + 2) / 3 + 1);
        case 6:
            if (n < 2) return std::nullopt;
            return peak((n + 2) / 3);
        case 7:
            if (n < 2) return std::nullopt;
            if (n <= 7) return peak(n / 2);
            if (n == 8) return peak(3);
            return peak((n + 1) / 3 + 1);
        case 8:
            if (n < 3) return std::nullopt;
            if (n <= 8) return peak((n + 1) / 2);
            if (n == 9) return peak(4);
            return peak(n / 3 + 2);
        case 9:
            if (n < 2) return std::nullopt;
            if (n <= 8) return peak((n + 1) / 2);
            if (n == 9) return peak(4);
            return peak(n / 3 + 2);
        case 10:
            if (n <= 6) return peak((n + 1) / 2);
            if (n == 7) return peak(3);
            return peak((n + 2) / 3 + 1);
        case 11:
            if (n < 2) return std::nullopt;
            if (n <= 5) return peak(n / 2 + 1);
            if (n <= 16) return peak((n + 1) / 3 + 2);
            return peak((n + 2) / 3 + 2);
    }
    return std::nullopt;
}

ModeInterval graph_formula(GraphFamilyTag fam, int n) {
    auto peak = [](int g) { return ModeInterval{g, g}; };
    switch (fam) {
        case GraphFamilyTag::L:
            return peak((n + 2) / 3);
        case GraphFamilyTag::CL:
        case GraphFamilyTag::ML:
            if (n <= 5) return peak(n / 2);
            if (n <= 16) return peak((n + 1) / 3 + 1);
            return peak((n + 2) / 3 + 1);
        case GraphFamilyTag::RL:
            if (n <= 6) return peak((n + 1) / 2);
            if (n == 7) return peak(3);
            // Forced by the reduction to family 7 at n+1, whose large-n
            // peak sits at (n+2)/3 + 1.
            return peak((n + 2) / 3 + 1);
        case GraphFamilyTag::R:
            if (n <= 6) return peak((n + 1) / 2);
            if (n == 7) return peak(3);
            return peak((n + 2) / 3 + 1);
    }
    throw Error("graph_formula: unknown tag");
}

int graph_min_n(GraphFamilyTag fam) {
    switch (fam) {
        case GraphFamilyTag::L:
        case GraphFamilyTag::CL:
        case GraphFamilyTag::ML:
            return 2;
        case GraphFamilyTag::RL:
        case GraphFamilyTag::R:
            return 1;
    }
    return 1;
}

}  // namespace

PeakFormula peak_formula(FamilyId j, int n) {
    if (n < 1) throw OutOfRange("peak_formula: n >= 1 required");
    if (auto f = family_formula(j.j, n)) return {*f, true};
    GenusDistribution d = family_distribution(j, n, Method::recurrence);
    return {mode_interval(d).modes, false};
}

PeakFormula graph_peak_formula(GraphFamilyTag fam, int n) {
    if (n < graph_min_n(fam)) {
        throw OutOfRange("graph_peak_formula: " + tag_name(fam) + " requires n >= " +
                         std::to_string(graph_min_n(fam)));
    }
    return {graph_formula(fam, n), true};
}

namespace {

PeakVerification verify_one(const std::string& subject, int n, const GenusDistribution& d,
                            const std::optional<ModeInterval>& formula) {
    ModeSearch ms = mode_interval(d);
    PeakVerification v;
    v.subject = subject;
    v.n = n;
    v.formula_defined = formula.has_value();
    v.empirical_modes = ms.modes;
    v.formula_modes = formula.value_or(ms.modes);
    v.agree = (v.formula_modes == v.empirical_modes);
    v.unimodal = ms.argmax_contiguous && is_unimodal(d);
    v.log_concave = is_log_concave(d);
    return v;
}

}  // namespace

std::vector<PeakVerification> verify_peaks(FamilyId j, int n_lo, int n_hi) {
    n_lo = std::max(n_lo, 1);
    if (n_hi < n_lo) return {};
    FamilyTable table(n_hi);
    std::vector<PeakVerification> out;
    out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (int n = n_lo; n <= n_hi; ++n) {
        out.push_back(verify_one("s" + std::to_string(j.j), n, table.row(j, n),
                                 family_formula(j.j, n)));
    }
    return out;
}

std::vector<PeakVerification> verify_peaks(GraphFamilyTag fam, int n_lo, int n_hi) {
    n_lo = std::max(n_lo, graph_min_n(fam));
    if (n_hi < n_lo) return {};
    FamilyTable table(n_hi + 1);  // RL reads one row ahead
    std::vector<PeakVerification> out;
    out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (int n = n_lo; n <= n_hi; ++n) {
        out.push_back(verify_one(tag_name(fam), n, genus_poly(table, {fam, n}),
                                 graph_formula(fam, n)));
    }
    return out;
}

std::vector<StrictPeakCheck> strict_peak_inequalities(FamilyId j, int n_lo, int n_hi) {
    struct Range {
        int lo, hi;  // hi < 0 means unbounded
        int add_num, add_const;
    };
    // Peak position (n + add_num)/3 + add_const over each asserted range.
    std::vector<Range> ranges;
    switch (j.j) {
        case 3: ranges = {{8, -1, 2, 0}}; break;
        case 5: ranges = {{6, 16, 1, 1}, {17, -1, 2, 1}}; break;
        case 9: ranges = {{10, -1, 0, 2}}; break;
        default:
            throw OutOfRange("strict_peak_inequalities: only families 3, 5 and 9 have "
                             "asserted neighbor inequalities");
    }
    FamilyTable table(n_hi);
    std::vector<StrictPeakCheck> out;
    for (const Range& r : ranges) {
        int lo = std::max(r.lo, n_lo);
        int hi = (r.hi < 0) ? n_hi : std::min(r.hi, n_hi);
        for (int n = lo; n <= hi; ++n) {
            const GenusDistribution& d = table.row(j, n);
            int peak = (n + r.add_num) / 3 + r.add_const;
            bool holds = d.at_genus(peak) > d.at_genus(peak - 1) &&
                         d.at_genus(peak) > d.at_genus(peak + 1);
            out.push_back({n, peak, holds});
        }
    }
    return out;
}

}  // namespace genus

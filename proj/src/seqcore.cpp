#include "genus/seqcore.hpp"

#include <algorithm>
#include <sstream>

namespace genus {

GenusDistribution::GenusDistribution(int offset, std::vector<BigInt> counts)
    : offset_(offset), counts_(std::move(counts)) {
    if (counts_.empty()) throw Error("GenusDistribution: empty count vector");
    for (const BigInt& c : counts_) {
        if (c < 0) throw Error("GenusDistribution: negative count");
    }
    std::size_t lead = 0;
    while (lead < counts_.size() && counts_[lead] == 0) ++lead;
    if (lead == counts_.size()) throw Error("GenusDistribution: all counts zero");
    std::size_t tail = counts_.size();
    while (tail > lead && counts_[tail - 1] == 0) --tail;
    if (lead > 0 || tail < counts_.size()) {
        counts_ = std::vector<BigInt>(counts_.begin() + lead, counts_.begin() + tail);
        offset_ += static_cast<int>(lead);
    }
    if (offset_ < 0) throw Error("GenusDistribution: negative genus offset");
}

const BigInt& GenusDistribution::at_genus(int i) const {
    static const BigInt zero = 0;
    if (i < offset_ || i > max_genus()) return zero;
    return counts_[static_cast<std::size_t>(i - offset_)];
}

BigInt GenusDistribution::total() const {
    BigInt t = 0;
    for (const BigInt& c : counts_) t += c;
    return t;
}

std::string GenusDistribution::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < counts_.size(); ++k) {
        if (k) os << ",";
        os << counts_[k];
    }
    os << ")@" << offset_;
    return os.str();
}

GenusDistribution scale(const GenusDistribution& d, const BigInt& factor) {
    if (factor <= 0) throw Error("scale: factor must be positive");
    std::vector<BigInt> c = d.counts();
    for (BigInt& x : c) x *= factor;
    return GenusDistribution(d.offset(), std::move(c));
}

bool is_unimodal(const GenusDistribution& seq) {
    const auto& c = seq.counts();
    bool fell = false;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        if (c[k] > c[k + 1]) {
            fell = true;
        } else if (c[k] < c[k + 1] && fell) {
            return false;  // strict rise after a strict fall: interior valley
        }
    }
    return true;
}

bool is_log_concave(const GenusDistribution& seq) {
    const auto& c = seq.counts();
    for (std::size_t k = 1; k + 1 < c.size(); ++k) {
        if (c[k] * c[k] < c[k - 1] * c[k + 1]) return false;
    }
    return true;
}

ModeSearch mode_interval(const GenusDistribution& seq) {
    const auto& c = seq.counts();
    const BigInt* best = &c[0];
    for (const BigInt& x : c) {
        if (x > *best) best = &x;
    }
    // Leftmost maximal run, then scan for any later occurrence of the max.
    std::size_t l = 0;
    while (c[l] != *best) ++l;
    std::size_t m = l;
    while (m + 1 < c.size() && c[m + 1] == *best) ++m;
    bool contiguous = true;
    for (std::size_t k = m + 1; k < c.size(); ++k) {
        if (c[k] == *best) {
            contiguous = false;
            break;
        }
    }
    ModeSearch r;
    r.modes = ModeInterval{seq.offset() + static_cast<int>(l),
                           seq.offset() + static_cast<int>(m)};
    r.argmax_contiguous = contiguous;
    return r;
}

namespace {

void validate_terms(const std::vector<ShiftedTerm>& terms) {
    if (terms.empty()) throw EmptyTermList();
    for (const ShiftedTerm& t : terms) {
        if (t.weight <= 0) throw Error("combine: weight must be positive");
        if (t.shift < 0) throw Error("combine: shift must be nonnegative");
    }
}

}  // namespace

GenusDistribution combine(const std::vector<ShiftedTerm>& terms) {
    validate_terms(terms);
    int lo = terms[0].seq.offset() + terms[0].shift;
    int hi = terms[0].seq.max_genus() + terms[0].shift;
    for (const ShiftedTerm& t : terms) {
        lo = std::min(lo, t.seq.offset() + t.shift);
        hi = std::max(hi, t.seq.max_genus() + t.shift);
    }
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
    for (int i = lo; i <= hi; ++i) {
        Rational acc = 0;
        for (const ShiftedTerm& t : terms) {
            const BigInt& x = t.seq.at_genus(i - t.shift);
            if (x != 0) acc += t.weight * Rational(x);
        }
        if (!is_integer(acc)) {
            throw NonIntegerResult("combine: entry at genus " + std::to_string(i) +
                                   " is not an integer");
        }
        out[static_cast<std::size_t>(i - lo)] = numerator(acc);
    }
    return GenusDistribution(lo, std::move(out));
}

ModeInterval criterion_window(const std::vector<ShiftedTerm>& terms) {
    validate_terms(terms);
    bool first = true;
    ModeInterval w;
    for (const ShiftedTerm& t : terms) {
        // A contiguous argmax is not enough: (2,1,2,3) has one yet dips.
        if (!is_unimodal(t.seq)) {
            throw NonUnimodalTerm("criterion_window: term " + t.seq.str() +
                                  " is not unimodal");
        }
        ModeSearch ms = mode_interval(t.seq);
        int l = ms.modes.l + t.shift;
        int m = ms.modes.m + t.shift;
        if (first) {
            w = ModeInterval{l, m};
            first = false;
        } else {
            w.l = std::min(w.l, l);
            w.m = std::max(w.m, m);
        }
    }
    return w;
}

WindowVerdict window_unimodality_check(const std::vector<ShiftedTerm>& terms) {
    ModeInterval window = criterion_window(terms);
    GenusDistribution z = combine(terms);

    // The window always lies inside the support of z.
    std::vector<BigInt> piece(z.counts().begin() + (window.l - z.offset()),
                              z.counts().begin() + (window.m - z.offset()) + 1);
    bool window_unimodal = is_unimodal(GenusDistribution(window.l, std::move(piece)));

    WindowVerdict v{window_unimodal,
                    window,
                    window.span(),
                    window.span() <= 3,
                    window_unimodal == is_unimodal(z),
                    std::move(z)};
    return v;
}

}  // namespace genus

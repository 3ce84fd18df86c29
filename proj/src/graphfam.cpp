#include "genus/graphfam.hpp"

#include <algorithm>

namespace genus {

std::string tag_name(GraphFamilyTag tag) {
    switch (tag) {
        case GraphFamilyTag::L: return "L";
        case GraphFamilyTag::CL: return "CL";
        case GraphFamilyTag::ML: return "ML";
        case GraphFamilyTag::RL: return "RL";
        case GraphFamilyTag::R: return "R";
    }
    return "?";
}

GenusDistribution genus_poly(const FamilyTable& table, NamedFamily fam) {
    if (fam.n < 1) throw OutOfRange("genus_poly: n >= 1 required");
    const int n = fam.n;
    switch (fam.tag) {
        case GraphFamilyTag::L:
            return table.row(FamilyId(6), n);
        case GraphFamilyTag::CL: {
            // Family 11 lives at genus >= 1; the circular ladder sits one
            // genus lower.
            const GenusDistribution& f11 = table.row(FamilyId(11), n);
            if (f11.offset() < 1) throw Error("genus_poly: family 11 row reaches genus 0");
            return GenusDistribution(f11.offset() - 1, f11.counts());
        }
        case GraphFamilyTag::ML: {
            GenusDistribution cl = genus_poly(table, {GraphFamilyTag::CL, n});
            // Trade two genus-0 embeddings for two of genus 1.
            if (cl.at_genus(0) < 2) {
                throw InvalidAdjustment("genus_poly: circular ladder at n=" + std::to_string(n) +
                                        " has fewer than two genus-0 embeddings");
            }
            const int top = std::max(cl.max_genus(), 1);
            std::vector<BigInt> c(static_cast<std::size_t>(top + 1));
            for (int i = 0; i <= cl.max_genus(); ++i)
                c[static_cast<std::size_t>(i)] = cl.at_genus(i);
            c[0] -= 2;
            c[1] += 2;
            return GenusDistribution(0, std::move(c));
        }
        case GraphFamilyTag::RL:
            return table.row(FamilyId(7), n + 1);
        case GraphFamilyTag::R:
            return combine({{2, 0, table.row(FamilyId(5), n)},
                            {2, 1, table.row(FamilyId(2), n)}});
    }
    throw Error("genus_poly: unknown family tag");
}

GenusDistribution genus_poly(NamedFamily fam) {
    FamilyTable table(std::max(fam.n, 0) + 1);  // RL reads row n + 1
    return genus_poly(table, fam);
}

GenusDistribution poly_product(const GenusDistribution& a, const GenusDistribution& b) {
    std::vector<BigInt> out(static_cast<std::size_t>(a.size() + b.size() - 1));
    for (int i = 0; i < a.size(); ++i) {
        for (int k = 0; k < b.size(); ++k) {
            out[static_cast<std::size_t>(i + k)] +=
                a.counts()[static_cast<std::size_t>(i)] * b.counts()[static_cast<std::size_t>(k)];
        }
    }
    return GenusDistribution(a.offset() + b.offset(), std::move(out));
}

GenusDistribution compose_ladder(const FamilyTable& table, const PartialPolySet& partials,
                                 int n) {
    if (n < 1) throw OutOfRange("compose_ladder: n >= 1 required");
    if (!partials.any()) throw Error("compose_ladder: all partial polynomials are zero");
    std::vector<ShiftedTerm> terms;
    for (int j = 1; j <= 11; ++j) {
        if (!partials.part(j)) continue;
        terms.push_back({1, 0, poly_product(*partials.part(j), table.row(FamilyId(j), n))});
    }
    return combine(terms);
}

GenusDistribution compose_ladder(const PartialPolySet& partials, int n) {
    FamilyTable table(std::max(n, 1));
    return compose_ladder(table, partials, n);
}

P52Report p52_sequences(int max_n) {
    if (max_n < 1) throw OutOfRange("p52_sequences: max_n >= 1 required");
    std::vector<GenusDistribution> a;
    std::vector<GenusDistribution> b;  // b[k] holds the second sequence at n = k + 1
    a.reserve(static_cast<std::size_t>(max_n) + 1);  // steps below keep references into a
    b.reserve(static_cast<std::size_t>(max_n));
    a.push_back(GenusDistribution(0, {BigInt(1)}));
    if (max_n >= 1) {
        a.push_back(GenusDistribution(0, {2, 14}));
        b.push_back(GenusDistribution(1, {4}));
    }
    for (int n = 2; n <= max_n; ++n) {
        const GenusDistribution& a1 = a[static_cast<std::size_t>(n - 1)];
        const GenusDistribution& a2 = a[static_cast<std::size_t>(n - 2)];
        const GenusDistribution& b1 = b[static_cast<std::size_t>(n - 2)];
        a.push_back(combine({{2, 0, a1}, {8, 1, a1}, {48, 1, a2}, {12, 1, b1}}));
        b.push_back(combine({{8, 1, b1}, {32, 1, a2}}));
    }
    P52Report report;
    for (int n = 0; n <= max_n; ++n) {
        const GenusDistribution& d = a[static_cast<std::size_t>(n)];
        report.first.push_back({n, d, is_unimodal(d), is_log_concave(d)});
    }
    for (int n = 1; n <= max_n; ++n) {
        const GenusDistribution& d = b[static_cast<std::size_t>(n - 1)];
        report.second.push_back({n, d, is_unimodal(d), is_log_concave(d)});
    }
    return report;
}

}  // namespace genus

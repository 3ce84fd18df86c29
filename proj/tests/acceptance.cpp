// Acceptance suite: one line per criterion, [PASS]/[FAIL], with timing.
// Exit code is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "genus/embed_oracle.hpp"
#include "genus/families.hpp"
#include "genus/graphfam.hpp"
#include "genus/peaks.hpp"
#include "testutil.hpp"

using namespace genus;

namespace {

GenusDistribution gd(int offset, std::vector<BigInt> counts) {
    return GenusDistribution(offset, std::move(counts));
}

struct Sub {
    std::string name;
    bool pass;
    std::string note;
};

class Criterion {
public:
    Criterion(std::string name, double budget_seconds,
              std::function<bool(std::vector<Sub>&)> body)
        : name_(std::move(name)), budget_(budget_seconds), body_(std::move(body)) {}

    bool run(int index) const {
        std::vector<Sub> subs;
        bool ok = false;
        std::string error;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = body_(subs);
        } catch (const std::exception& e) {
            error = e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > budget_) {
            ok = false;
            subs.push_back({"runtime budget " + std::to_string(budget_) + "s", false,
                            "took " + std::to_string(elapsed) + "s"});
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << std::setfill('0') << std::setw(2) << index
                  << " " << name_ << " (" << std::fixed << std::setprecision(3) << elapsed
                  << "s)\n";
        if (!error.empty()) std::cout << "       exception: " << error << "\n";
        for (const Sub& s : subs) {
            std::cout << "       " << (s.pass ? "[pass] " : "[fail] ") << s.name;
            if (!s.note.empty()) std::cout << " - " << s.note;
            std::cout << "\n";
        }
        return ok;
    }

private:
    std::string name_;
    double budget_;
    std::function<bool(std::vector<Sub>&)> body_;
};

bool expect(std::vector<Sub>& subs, const std::string& name, bool cond,
            const std::string& note = "") {
    subs.push_back({name, cond, cond ? "" : note});
    return cond;
}

// ---- criterion bodies -------------------------------------------------

bool regression_values(std::vector<Sub>& subs) {
    bool ok = true;
    GenusDistribution s3_9 = closed_form_s3(9);
    ok &= expect(subs, "family3 n=9 entries", s3_9.at_genus(2) == 56432 &&
                                                  s3_9.at_genus(3) == 126080 &&
                                                  s3_9.at_genus(4) == 69632,
                 s3_9.str());
    ok &= expect(subs, "family5 bases",
                 closed_form_s5(1) == gd(0, {2, 2}) && closed_form_s5(2) == gd(0, {2, 14}),
                 closed_form_s5(1).str() + " " + closed_form_s5(2).str());
    ok &= expect(subs, "family9 bases",
                 closed_form_s9(1) == gd(0, {1, 3}) && closed_form_s9(2) == gd(1, {10, 6}) &&
                     closed_form_s9(3) == gd(1, {10, 54}),
                 closed_form_s9(1).str());
    return ok;
}

bool closed_equals_recurrence(std::vector<Sub>& subs) {
    FamilyTable table(30);
    for (int n = 1; n <= 30; ++n) {
        for (int j : {1, 3, 5, 6, 9}) {
            GenusDistribution closed = family_distribution(table, FamilyId(j), n, Method::closed);
            if (!(closed == table.row(FamilyId(j), n))) {
                return expect(subs, "family " + std::to_string(j) + " n=" + std::to_string(n),
                              false, closed.str() + " vs " + table.row(FamilyId(j), n).str());
            }
        }
    }
    return expect(subs, "all closed forms equal recurrence rows, n <= 30", true);
}

bool identity_suite(std::vector<Sub>& subs) {
    bool ok = true;
    int checked = 0;
    for (const IdentityCheck& c : relation_report(30)) {
        if (c.informational) continue;
        ++checked;
        if (!c.pass) {
            ok = expect(subs, c.identity + " n=" + std::to_string(c.n), false, c.detail) && ok;
        }
    }
    expect(subs, std::to_string(checked) + " asserted identity instances", ok);
    return ok;
}

bool totals(std::vector<Sub>& subs) {
    FamilyTable table(30);
    for (int n = 1; n <= 30; ++n) {
        const BigInt expected = pow_int(4, n);
        for (int j = 1; j <= 11; ++j) {
            if (table.row(FamilyId(j), n).total() != expected) {
                return expect(subs, "family " + std::to_string(j) + " n=" + std::to_string(n),
                              false, "total != 4^n");
            }
        }
    }
    return expect(subs, "all 11 families sum to 4^n, n <= 30", true);
}

bool unimodality_sweeps(std::vector<Sub>& subs) {
    bool ok = true;
    FamilyTable table(60);
    for (int j = 1; j <= 11; ++j) {
        bool unimodal_all = true;
        bool lc_all = true;
        for (int n = 1; n <= 60; ++n) {
            const GenusDistribution& d = table.row(FamilyId(j), n);
            unimodal_all = unimodal_all && is_unimodal(d);
            lc_all = lc_all && is_log_concave(d);
        }
        ok &= expect(subs, "family " + std::to_string(j) + " unimodal 1..60", unimodal_all);
        if (j == 1 || j == 4 || j == 6) {
            ok &= expect(subs, "family " + std::to_string(j) + " log-concave 1..60", lc_all);
        } else {
            subs.push_back({"family " + std::to_string(j) + " log-concave 1..60 [finding]",
                            true, lc_all ? "holds empirically" : "fails somewhere in 1..60"});
        }
    }
    return ok;
}

bool peak_formulas(std::vector<Sub>& subs) {
    bool ok = true;
    for (int j = 1; j <= 11; ++j) {
        int disagreements = 0;
        for (const PeakVerification& v : verify_peaks(FamilyId(j), 1, 60)) {
            if (v.formula_defined && !v.agree) ++disagreements;
        }
        ok &= expect(subs, "family " + std::to_string(j) + " formula vs argmax",
                     disagreements == 0, std::to_string(disagreements) + " disagreements");
    }
    for (GraphFamilyTag tag : {GraphFamilyTag::L, GraphFamilyTag::CL, GraphFamilyTag::ML,
                               GraphFamilyTag::RL, GraphFamilyTag::R}) {
        int disagreements = 0;
        for (const PeakVerification& v : verify_peaks(tag, 1, 60)) {
            if (!v.agree) ++disagreements;
        }
        ok &= expect(subs, tag_name(tag) + " formula vs argmax", disagreements == 0,
                     std::to_string(disagreements) + " disagreements");
    }
    for (int j : {3, 5, 9}) {
        bool holds = true;
        for (const StrictPeakCheck& c : strict_peak_inequalities(FamilyId(j), 1, 60)) {
            holds = holds && c.holds;
        }
        ok &= expect(subs, "family " + std::to_string(j) + " strict neighbor inequalities",
                     holds);
    }
    return ok;
}

bool oracle_equivalence(std::vector<Sub>& subs) {
    bool ok = true;
    FamilyTable table(6);
    auto check_census = [&](GraphFamilyTag tag, int n,
                            const GenusDistribution* expected = nullptr) {
        GenusDistribution census = enumerate_distribution(build_named_graph(tag, n));
        GenusDistribution formula = genus_poly(table, {tag, n});
        bool match = (census == formula) && (!expected || census == *expected);
        ok &= expect(subs, tag_name(tag) + "_" + std::to_string(n), match,
                     census.str() + " vs formula " + formula.str());
    };
    const GenusDistribution l1 = gd(0, {2, 2});
    const GenusDistribution l2 = gd(0, {4, 12});
    const GenusDistribution l3 = gd(0, {8, 40, 16});
    const GenusDistribution cl3 = gd(0, {2, 38, 24});
    const GenusDistribution ml3 = gd(1, {40, 24});
    const GenusDistribution rl1 = gd(0, {2, 14});
    check_census(GraphFamilyTag::L, 1, &l1);
    check_census(GraphFamilyTag::L, 2, &l2);
    check_census(GraphFamilyTag::L, 3, &l3);
    check_census(GraphFamilyTag::L, 4);
    check_census(GraphFamilyTag::L, 5);
    check_census(GraphFamilyTag::CL, 3, &cl3);
    check_census(GraphFamilyTag::CL, 4);
    check_census(GraphFamilyTag::CL, 5);
    check_census(GraphFamilyTag::ML, 3, &ml3);
    check_census(GraphFamilyTag::ML, 4);
    check_census(GraphFamilyTag::ML, 5);
    check_census(GraphFamilyTag::RL, 1, &rl1);
    check_census(GraphFamilyTag::RL, 2);
    check_census(GraphFamilyTag::RL, 3);
    return ok;
}

bool combination_properties(std::vector<Sub>& subs) {
    std::mt19937_64 rng(20240915);
    int flank_violations = 0;
    int window_mismatches = 0;
    int shortcut_violations = 0;
    std::string first_shortcut_violation;
    const int instances = 10000;

    for (int trial = 0; trial < instances; ++trial) {
        std::vector<ShiftedTerm> terms = testutil::random_terms(rng);
        WindowVerdict v = window_unimodality_check(terms);
        const GenusDistribution& z = v.combined;

        for (int i = z.offset(); i + 1 <= v.window.l; ++i) {
            if (z.at_genus(i) > z.at_genus(i + 1)) ++flank_violations;
        }
        for (int i = v.window.m; i + 1 <= z.max_genus(); ++i) {
            if (z.at_genus(i) < z.at_genus(i + 1)) ++flank_violations;
        }

        if (v.unimodal != is_unimodal(z)) ++window_mismatches;

        // Literal shortcut predicate: shifted supports pairwise overlap and
        // the criterion window spans at most 3.
        bool supports_overlap = true;
        for (std::size_t a = 0; a < terms.size() && supports_overlap; ++a) {
            int alo = terms[a].seq.offset() + terms[a].shift;
            int ahi = terms[a].seq.max_genus() + terms[a].shift;
            for (std::size_t b = a + 1; b < terms.size(); ++b) {
                int blo = terms[b].seq.offset() + terms[b].shift;
                int bhi = terms[b].seq.max_genus() + terms[b].shift;
                if (alo > bhi || blo > ahi) {
                    supports_overlap = false;
                    break;
                }
            }
        }
        if (supports_overlap && v.window_span <= 3 && !v.unimodal) {
            ++shortcut_violations;
            if (first_shortcut_violation.empty()) {
                std::ostringstream os;
                os << "terms:";
                for (const ShiftedTerm& t : terms) {
                    os << " " << t.weight << "*shift" << t.shift << t.seq.str();
                }
                os << " combine=" << z.str() << " span=" << v.window_span;
                first_shortcut_violation = os.str();
            }
        }
    }

    bool ok = true;
    ok &= expect(subs, "monotone flanks on 10000 instances", flank_violations == 0,
                 std::to_string(flank_violations) + " violations");
    ok &= expect(subs, "window verdict equals full scan", window_mismatches == 0,
                 std::to_string(window_mismatches) + " mismatches");
    ok &= expect(subs, "support overlap + span<=3 implies unimodal", shortcut_violations == 0,
                 std::to_string(shortcut_violations) + " counterexamples; first: " +
                     first_shortcut_violation);

    GenusDistribution example = combine(
        {{1, 1, gd(0, {1, 3, 3, 2})}, {2, 0, gd(1, {1, 2, 3, 3})}});
    ok &= expect(subs, "worked two-term combination", example == gd(1, {3, 7, 9, 8}),
                 example.str());

    // Reported alongside the failure above: on the family recurrences
    // themselves the shortcut is never contradicted, and random instances
    // whose shifted mode intervals share a common point are always
    // unimodal (each term peaks there). Neither replaces the literal
    // criterion; they delimit where the shortcut is safe.
    {
        FamilyTable table(60);
        bool contradicted = false;
        auto prev = [&](int j, int n) { return table.row(FamilyId(j), n - 1); };
        for (int n = 1; n <= 60 && !contradicted; ++n) {
            std::vector<std::vector<ShiftedTerm>> steps{
                {{1, 0, prev(3, n)}, {1, 0, prev(6, n)}, {2, 0, prev(7, n)}},
                {{2, 1, prev(3, n)}, {2, 0, prev(10, n)}},
                {{1, 1, prev(6, n)}, {2, 1, prev(7, n)}, {1, 0, prev(10, n)}},
                {{2, 1, prev(3, n)}, {2, 0, prev(9, n)}},
                {{1, 1, prev(5, n)}, {2, 1, prev(7, n)}, {1, 0, prev(11, n)}},
                {{2, 1, prev(9, n)}, {2, 1, prev(10, n)}}};
            for (const auto& terms : steps) {
                WindowVerdict v = window_unimodality_check(terms);
                if (v.corollary_fires && !v.unimodal) contradicted = true;
            }
        }
        subs.push_back({"shortcut never contradicted on the family recurrences (finding)",
                        true, contradicted ? "CONTRADICTED" : "holds for every step, n <= 60"});
        if (contradicted) ok = false;
    }
    return ok;
}

bool product_closure(std::vector<Sub>& subs) {
    std::mt19937_64 rng(424242);
    int lc_failures = 0;
    int unimodal_failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        GenusDistribution a = testutil::random_log_concave(rng);
        GenusDistribution b = testutil::random_log_concave(rng);
        if (!is_log_concave(poly_product(a, b))) ++lc_failures;

        GenusDistribution u = testutil::random_unimodal(rng, 8);
        if (!is_unimodal(poly_product(a, u))) ++unimodal_failures;
    }
    bool ok = true;
    ok &= expect(subs, "log-concave x log-concave stays log-concave (1000 pairs)",
                 lc_failures == 0, std::to_string(lc_failures) + " failures");
    ok &= expect(subs, "log-concave x unimodal stays unimodal (1000 pairs)",
                 unimodal_failures == 0, std::to_string(unimodal_failures) + " failures");
    return ok;
}

bool coupled_recurrences(std::vector<Sub>& subs) {
    P52Report rep = p52_sequences(40);
    bool ok = true;
    ok &= expect(subs, "bases reproduced",
                 rep.first[1].dist == gd(0, {2, 14}) && rep.second[0].dist == gd(1, {4}));
    ok &= expect(subs, "computed to n=40",
                 rep.first.size() == 41 && rep.second.size() == 40);
    int unimodal_a = 0, lc_a = 0, unimodal_b = 0, lc_b = 0;
    for (const P52Entry& e : rep.first) {
        unimodal_a += e.unimodal;
        lc_a += e.log_concave;
    }
    for (const P52Entry& e : rep.second) {
        unimodal_b += e.unimodal;
        lc_b += e.log_concave;
    }
    subs.push_back({"findings", true,
                    "first: " + std::to_string(unimodal_a) + "/41 unimodal, " +
                        std::to_string(lc_a) + "/41 log-concave; second: " +
                        std::to_string(unimodal_b) + "/40 unimodal, " + std::to_string(lc_b) +
                        "/40 log-concave (reported, not asserted)"});
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;
    criteria.emplace_back("closed-form regression values", 1.0, regression_values);
    criteria.emplace_back("closed form equals recurrence (families 1,3,5,6,9; n<=30)", 5.0,
                          closed_equals_recurrence);
    criteria.emplace_back("inter-family identity suite (n<=30)", 5.0, identity_suite);
    criteria.emplace_back("row totals are 4^n (all families; n<=30)", 5.0, totals);
    criteria.emplace_back("unimodality and log-concavity sweeps (n<=60)", 30.0,
                          unimodality_sweeps);
    criteria.emplace_back("peak formulas and strict neighbor inequalities (n<=60)", 30.0,
                          peak_formulas);
    criteria.emplace_back("exhaustive enumeration equals formula pipeline", 10.0,
                          oracle_equivalence);
    criteria.emplace_back("combination property suite (10000 random instances)", 10.0,
                          combination_properties);
    criteria.emplace_back("product closure properties (1000 random pairs)", 5.0,
                          product_closure);
    criteria.emplace_back("coupled recurrence sequences to n=40", 5.0, coupled_recurrences);

    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        if (!criteria[k].run(static_cast<int>(k) + 1)) ++failures;
    }
    if (failures == 0) {
        std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
    } else {
        std::cout << "acceptance: " << failures << " of " << criteria.size()
                  << " criteria failed\n";
    }
    return failures;
}

#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sstream>

#include "genus/families.hpp"
#include "genus/record.hpp"

using namespace genus;

TEST_CASE("records carry lossless decimal counts") {
    // Family 1 at n = 40 has entries far beyond 64 bits.
    GenusDistribution big = closed_form_s1(40);
    OutputRecord rec = make_record("s1", 40, "closed", big);
    REQUIRE(rec.counts.size() == static_cast<std::size_t>(big.size()));
    BigInt largest = 0;
    for (int k = 0; k < big.size(); ++k) {
        CHECK(BigInt(rec.counts[static_cast<std::size_t>(k)]) ==
              big.counts()[static_cast<std::size_t>(k)]);
        largest = std::max(largest, big.counts()[static_cast<std::size_t>(k)]);
    }
    CHECK(largest > pow2(64));  // past any fixed-width integer
}

TEST_CASE("json output round-trips byte-identically") {
    OutputRecord rec = make_record("s3", 9, "auto", closed_form_s3(9));
    rec.checks.push_back("closed=recurrence");
    std::string first = to_json(rec);
    auto parsed = nlohmann::ordered_json::parse(first);
    std::string second = parsed.dump(2) + "\n";
    CHECK(first == second);

    CHECK(parsed["subject"] == "s3");
    CHECK(parsed["n"] == 9);
    CHECK(parsed["min_genus"] == 0);
    CHECK(parsed["counts"][4] == "69632");
    CHECK(parsed["modes"][0] == 3);
    CHECK(parsed["modes"][1] == 3);
    CHECK(parsed["unimodal"] == true);
}

TEST_CASE("csv output") {
    std::ostringstream os;
    write_csv(os, make_record("s3", 9, "auto", closed_form_s3(9)), true);
    std::string text = os.str();
    CHECK(text.find("# s3 n=9 method=auto\n") != std::string::npos);
    CHECK(text.find("genus,count\n") != std::string::npos);
    CHECK(text.find("4,69632\n") != std::string::npos);
}

TEST_CASE("partials parsing") {
    std::istringstream good("# root graph partials\n"
                            "part 6 / 0 / 1\n"
                            "part 1 / 1 / 2 0 7\n");
    PartialPolySet set = parse_partials(good);
    REQUIRE(set.part(6).has_value());
    CHECK(*set.part(6) == GenusDistribution(0, {1}));
    REQUIRE(set.part(1).has_value());
    CHECK(*set.part(1) == GenusDistribution(1, {2, 0, 7}));
    CHECK_FALSE(set.part(2).has_value());

    std::istringstream dup("part 3 / 0 / 1\npart 3 / 1 / 4\n");
    CHECK_THROWS_AS(parse_partials(dup), ParseError);

    std::istringstream neg("part 2 / 0 / 1 -4\n");
    CHECK_THROWS_AS(parse_partials(neg), ParseError);

    std::istringstream junk("portion 2 / 0 / 1\n");
    CHECK_THROWS_AS(parse_partials(junk), ParseError);

    std::istringstream all_zero("part 2 / 0 / 0 0\n");
    CHECK_THROWS_AS(parse_partials(all_zero), ParseError);
}

TEST_CASE("edge list parsing") {
    std::istringstream good("0 1\n0 1\n0 1\n");
    Multigraph d = parse_edge_list(good);
    CHECK(d.vertex_count() == 2);
    CHECK(d.edge_count() == 3);

    std::istringstream bad("0 1\n1\n");
    CHECK_THROWS_AS(parse_edge_list(bad), ParseError);

    std::istringstream negative("0 -1\n");
    CHECK_THROWS_AS(parse_edge_list(negative), ParseError);
}

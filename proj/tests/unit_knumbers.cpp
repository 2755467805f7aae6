#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "jacobstree/knumbers.hpp"
#include "json.hpp"

using namespace jacobstree;

namespace {

std::vector<u64> row_values(u64 theta, Sign sign, unsigned count) {
    SequenceRow row = k_sequence(theta, sign, count);
    std::vector<u64> out;
    for (const KValue& kv : row.entries) out.push_back(kv.as_u64());
    return out;
}

std::vector<std::size_t> bracket_positions(u64 theta, Sign sign, unsigned count) {
    SequenceRow row = k_sequence(theta, sign, count);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < row.entries.size(); ++j)
        if (row.bracketed(j)) out.push_back(j);
    return out;
}

} // namespace

TEST_CASE("decompose splits off the largest power of two") {
    CHECK(decompose(12) == OddCore{3, 2});
    CHECK(decompose(1) == OddCore{1, 0});
    CHECK(decompose(96) == OddCore{3, 5});
    CHECK(decompose(7) == OddCore{7, 0});
    CHECK(decompose(1ull << 40) == OddCore{1, 40});
    CHECK(OddCore{3, 5}.value() == 96);
    CHECK_THROWS_AS(decompose(0), std::invalid_argument);
}

TEST_CASE("classify_theta sorts odd numbers by residue mod 6") {
    CHECK(classify_theta(1) == ThetaClass{ThetaKind::t1, 0});
    CHECK(classify_theta(7) == ThetaClass{ThetaKind::t1, 1});
    CHECK(classify_theta(3) == ThetaClass{ThetaKind::t3, 0});
    CHECK(classify_theta(9) == ThetaClass{ThetaKind::t3, 1});
    CHECK(classify_theta(5) == ThetaClass{ThetaKind::t5, 0});
    CHECK(classify_theta(11) == ThetaClass{ThetaKind::t5, 1});
    CHECK(classify_theta(37) == ThetaClass{ThetaKind::t1, 6});
    CHECK_THROWS_AS(classify_theta(4), std::invalid_argument);
    CHECK(std::string(to_string(ThetaKind::t1)) == "T1");
    CHECK(std::string(to_string(ThetaKind::t5)) == "T5");
}

TEST_CASE("k_number defining values and fractional rows") {
    CHECK(k_number(3, 0, Sign::minus) == KValue{2, 3});
    CHECK(k_number(3, 0, Sign::plus) == KValue{4, 3});
    CHECK(k_number(3, 1, Sign::plus) == KValue{5, 3});
    CHECK(k_number(1, 0, Sign::minus) == KValue{0, 1});
    CHECK(k_number(1, 1, Sign::minus) == KValue{1, 1});
    CHECK(k_number(1, 9, Sign::minus) == KValue{171, 1});
    CHECK(k_number(5, 0, Sign::plus) == KValue{2, 1});
    CHECK(k_number(3, 0, Sign::minus).str() == "2/3");
    CHECK(k_number(3, 0, Sign::plus).str() == "4/3");
    CHECK(k_number(1, 9, Sign::minus).str() == "171");
    CHECK_FALSE(k_number(3, 0, Sign::minus).integral());
    CHECK(k_number(1, 3, Sign::minus).multiple_of_three()); // 3
    CHECK_FALSE(k_number(1, 4, Sign::minus).multiple_of_three()); // 5
    CHECK_THROWS_AS(k_number(3, 0, Sign::minus).as_u64(), std::domain_error);
    CHECK_THROWS_AS(k_number(2, 0, Sign::minus), std::invalid_argument);
}

TEST_CASE("integrality depends only on theta mod 3 and holds for every exponent") {
    for (u64 theta = 1; theta <= 41; theta += 2) {
        for (unsigned n = 0; n <= 24; ++n) {
            bool minus_integral = k_number(theta, n, Sign::minus).integral();
            bool plus_integral = k_number(theta, n, Sign::plus).integral();
            switch (theta % 3) {
            case 0:
                CHECK_FALSE(minus_integral);
                CHECK_FALSE(plus_integral);
                break;
            case 1:
                CHECK(minus_integral);
                CHECK_FALSE(plus_integral);
                break;
            case 2:
                CHECK_FALSE(minus_integral);
                CHECK(plus_integral);
                break;
            }
        }
    }
}

TEST_CASE("minus-sign rows for theta 1..37 in the 1 mod 6 class") {
    const std::vector<u64> expected[7] = {
        {0, 1, 1, 3, 5, 11, 21, 43, 85, 171},
        {2, 5, 9, 19, 37, 75, 149, 299, 597, 1195},
        {4, 9, 17, 35, 69, 139, 277, 555, 1109, 2219},
        // the step-one recurrence pins entry 8 here: 811 + 2*405 = 1621
        {6, 13, 25, 51, 101, 203, 405, 811, 1621, 3243},
        {8, 17, 33, 67, 133, 267, 533, 1067, 2133, 4267},
        {10, 21, 41, 83, 165, 331, 661, 1323, 2645, 5291},
        {12, 25, 49, 99, 197, 395, 789, 1579, 3157, 6315},
    };
    const std::vector<std::size_t> brackets[7] = {
        {0, 3, 6, 9}, {2, 5, 8}, {1, 4, 7}, {0, 3, 6, 9},
        {2, 5, 8}, {1, 4, 7}, {0, 3, 6, 9},
    };
    for (unsigned i = 0; i < 7; ++i) {
        u64 theta = 1 + 6 * i;
        CAPTURE(theta);
        CHECK(row_values(theta, Sign::minus, 10) == expected[i]);
        CHECK(bracket_positions(theta, Sign::minus, 10) == brackets[i]);
    }
}

TEST_CASE("plus-sign rows for theta 5..41 in the 5 mod 6 class") {
    const std::vector<u64> expected[7] = {
        {2, 3, 7, 13, 27, 53, 107, 213, 427, 853},
        {4, 7, 15, 29, 59, 117, 235, 469, 939, 1877},
        {6, 11, 23, 45, 91, 181, 363, 725, 1451, 2901},
        {8, 15, 31, 61, 123, 245, 491, 981, 1963, 3925},
        {10, 19, 39, 77, 155, 309, 619, 1237, 2475, 4949},
        {12, 23, 47, 93, 187, 373, 747, 1493, 2987, 5973},
        {14, 27, 55, 109, 219, 437, 875, 1749, 3499, 6997},
    };
    const std::vector<std::size_t> brackets[7] = {
        {1, 4, 7}, {2, 5, 8}, {0, 3, 6, 9}, {1, 4, 7},
        {2, 5, 8}, {0, 3, 6, 9}, {1, 4, 7},
    };
    for (unsigned i = 0; i < 7; ++i) {
        u64 theta = 5 + 6 * i;
        CAPTURE(theta);
        CHECK(row_values(theta, Sign::plus, 10) == expected[i]);
        CHECK(bracket_positions(theta, Sign::plus, 10) == brackets[i]);
    }
}

TEST_CASE("every integral row brackets exactly every third entry") {
    for (u64 theta = 1; theta <= 97; theta += 2) {
        if (theta % 3 == 0) continue;
        Sign sign = (theta % 3 == 1) ? Sign::minus : Sign::plus;
        auto positions = bracket_positions(theta, sign, 30);
        CAPTURE(theta);
        REQUIRE(positions.size() == 10);
        CHECK(positions.front() <= 2);
        for (std::size_t i = 1; i < positions.size(); ++i)
            CHECK(positions[i] - positions[i - 1] == 3);
    }
}

TEST_CASE("rows satisfy the step-one and step-two recurrences") {
    for (u64 theta : {1ull, 3ull, 5ull, 7ull, 9ull, 11ull, 25ull, 41ull}) {
        for (Sign sign : {Sign::minus, Sign::plus}) {
            SequenceRow row = k_sequence(theta, sign, 14);
            CAPTURE(theta);
            // the whole row shares one denominator, so the recurrences act on
            // numerators directly
            for (const KValue& kv : row.entries) CHECK(kv.den == row.entries[0].den);
            for (std::size_t n = 0; n + 2 < row.entries.size(); ++n) {
                CHECK(row.entries[n + 2].num ==
                      row.entries[n + 1].num + 2 * row.entries[n].num);
            }
            // K(n+2) = 4K(n) + s*(-1)^n with s = +1 for the minus sign, -1 for plus
            for (std::size_t n = 0; n + 2 < row.entries.size(); ++n) {
                i128 shift = i128(row.entries[0].den); // scaled by the denominator
                i128 sgn = (n % 2 == 0) ? 1 : -1;
                if (sign == Sign::plus) sgn = -sgn;
                CHECK(i128(row.entries[n + 2].num) ==
                      4 * i128(row.entries[n].num) + sgn * shift);
            }
        }
    }
}

TEST_CASE("seed_pair yields K0 = (theta -/+ 1)/3 and K1 = theta - K0") {
    auto [k0, k1] = seed_pair(1, Sign::minus);
    CHECK(k0 == KValue{0, 1});
    CHECK(k1 == KValue{1, 1});
    auto [k0b, k1b] = seed_pair(7, Sign::minus);
    CHECK(k0b == KValue{2, 1});
    CHECK(k1b == KValue{5, 1});
    auto [k0c, k1c] = seed_pair(5, Sign::plus);
    CHECK(k0c == KValue{2, 1});
    CHECK(k1c == KValue{3, 1});
    auto [k0d, k1d] = seed_pair(49, Sign::minus);
    CHECK(k0d == KValue{16, 1});
    CHECK(k1d == KValue{33, 1});
    CHECK_THROWS_AS(seed_pair(7, Sign::plus), std::domain_error);
    CHECK_THROWS_AS(seed_pair(5, Sign::minus), std::domain_error);
    CHECK_THROWS_AS(seed_pair(3, Sign::minus), std::domain_error);
    CHECK_THROWS_AS(seed_pair(9, Sign::plus), std::domain_error);

    // seeds are the first two row entries wherever they exist
    for (u64 theta = 1; theta <= 49; theta += 2) {
        if (theta % 3 == 0) continue;
        Sign sign = (theta % 3 == 1) ? Sign::minus : Sign::plus;
        auto [s0, s1] = seed_pair(theta, sign);
        SequenceRow row = k_sequence(theta, sign, 2);
        CHECK(s0 == row.entries[0]);
        CHECK(s1 == row.entries[1]);
    }
}

TEST_CASE("lj_j_seeds derives the four companion seeds") {
    LJSeeds s = lj_j_seeds(1);
    CHECK(s == LJSeeds{2, 0, 1, 3});
    CHECK(lj_j_seeds(7) == LJSeeds{8, 6, 13, 15});
    for (u64 theta = 1; theta <= 99; theta += 2) {
        LJSeeds t = lj_j_seeds(theta);
        CHECK(t.lj0 == theta + 1);
        CHECK(t.lj1 == theta - 1);
        CHECK(t.j0 == 2 * theta - 1);
        CHECK(t.j1 == 2 * theta + 1);
    }
}

TEST_CASE("node_value is the tree-side companion of k_number") {
    CHECK(node_value(1, 0, BranchRule::minus_one) == 0);
    CHECK(node_value(1, 2, BranchRule::minus_one) == 1);
    CHECK(node_value(5, 3, BranchRule::minus_one) == 13);
    CHECK(node_value(1, 1, BranchRule::minus_one) == std::nullopt);
    CHECK(node_value(1, 1, BranchRule::plus_one) == 1);
    CHECK(node_value(1, 3, BranchRule::plus_one) == 3);
    CHECK(node_value(5, 0, BranchRule::plus_one) == 2);
    for (unsigned n = 0; n <= 20; ++n) {
        CHECK(node_value(9, n, BranchRule::minus_one) == std::nullopt);
        CHECK(node_value(9, n, BranchRule::plus_one) == std::nullopt);
    }
    // integrality alternates with the exponent parity on non-multiples of 3
    for (u64 theta : {1ull, 5ull, 7ull, 11ull}) {
        for (unsigned n = 0; n + 1 <= 20; ++n) {
            bool now = node_value(theta, n, BranchRule::minus_one).has_value();
            bool next = node_value(theta, n + 1, BranchRule::minus_one).has_value();
            CHECK(now != next);
            CHECK(node_value(theta, n, BranchRule::plus_one).has_value() != now);
        }
    }
    CHECK_THROWS_AS(node_value(2, 0, BranchRule::minus_one), std::invalid_argument);
}

TEST_CASE("g_sequences interleave 2^n + 1 and 2^n - 1") {
    GRows g = g_sequences(8);
    CHECK(g.row_a == std::vector<u64>{2, 1, 5, 7, 17, 31, 65, 127});
    CHECK(g.row_b == std::vector<u64>{0, 3, 3, 9, 15, 33, 63, 129});
    GRows big = g_sequences(40);
    for (std::size_t n = 0; n + 2 < big.row_a.size(); ++n) {
        CHECK(big.row_a[n + 2] == big.row_a[n + 1] + 2 * big.row_a[n]);
        CHECK(big.row_b[n + 2] == big.row_b[n + 1] + 2 * big.row_b[n]);
    }
    for (std::size_t n = 0; n < big.row_a.size(); ++n) {
        u64 p = u64(1) << n;
        if (n % 2 == 0) {
            CHECK(big.row_a[n] == p + 1);
            CHECK(big.row_b[n] == p - 1);
        } else {
            CHECK(big.row_a[n] == p - 1);
            CHECK(big.row_b[n] == p + 1);
        }
    }
    CHECK_THROWS_AS(g_sequences(0), std::invalid_argument);
}

TEST_CASE("sequence row serialization") {
    SequenceRow row = k_sequence(1, Sign::minus, 10);
    CHECK(sequence_row_text(row) == "[0] 1 1 [3] 5 11 [21] 43 85 [171]");

    std::string csv = sequence_row_csv(row);
    CHECK(csv.substr(0, csv.find('\n')) == "theta,sign,n,value,is_multiple_of_3");
    CHECK(csv.find("1,minus,0,0,true") != std::string::npos);
    CHECK(csv.find("1,minus,4,5,false") != std::string::npos);
    CHECK(csv.find("1,minus,9,171,true") != std::string::npos);

    auto parsed = nlohmann::json::parse(sequence_row_json(row));
    CHECK(parsed.at("theta") == 1);
    CHECK(parsed.at("sign") == "minus");
    REQUIRE(parsed.at("entries").size() == 10);
    CHECK(parsed.at("entries")[3].at("value") == "3");
    CHECK(parsed.at("entries")[3].at("is_multiple_of_3") == true);

    SequenceRow frac = k_sequence(3, Sign::minus, 4);
    CHECK(sequence_row_text(frac) == "2/3 7/3 11/3 25/3");
    auto fp = nlohmann::json::parse(sequence_row_json(frac));
    CHECK(fp.at("entries")[0].at("value") == "2/3");

    CHECK_THROWS_AS(k_sequence(1, Sign::minus, 1), std::invalid_argument);
}

TEST_CASE("large rows stay exact beyond 64 bits") {
    KValue big = k_number(97, 80, Sign::minus);
    CHECK(big.integral());
    CHECK_THROWS_AS(big.as_u64(), jacobstree::overflow_error);
    // (97 * 2^80 - 1) / 3, checked against the recurrence from 64-bit territory
    KValue a = k_number(97, 78, Sign::minus);
    KValue b = k_number(97, 79, Sign::minus);
    CHECK(big.num == b.num + 2 * a.num);
    CHECK_THROWS_AS(k_number(97, 126, Sign::minus), jacobstree::overflow_error);
}

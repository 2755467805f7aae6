#pragma once

// Parameterized Jacobsthal numbers K(theta, n) = (theta*2^n -/+ (-1)^n) / 3,
// their seeds and recurrences, and the node predicate that drives the tree.
//
// Every odd theta falls in exactly one residue class mod 6 (1, 3 or 5); the
// class decides for which sign and exponent parity K is an integer. theta
// divisible by 3 never yields integers — those rows are exact third-fractions.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacobstree/arith.hpp"

namespace jacobstree {

// Sign of the (-1)^n term in the numerator: minus -> theta*2^n - (-1)^n.
enum class Sign { minus, plus };

enum class ThetaKind { t1, t3, t5 }; // theta mod 6 == 1, 3, 5

struct ThetaClass {
    ThetaKind kind;
    u64 i; // theta = 1|3|5 + 6*i
    bool operator==(const ThetaClass&) const = default;
};

// q = theta * 2^n with theta odd; the factorization is unique.
struct OddCore {
    u64 theta;
    unsigned n;
    u64 value() const; // theta << n, checked
    bool operator==(const OddCore&) const = default;
};

// Exact rational with denominator 1 or 3, always reduced and non-negative.
struct KValue {
    u128 num = 0;
    unsigned den = 1;
    bool integral() const { return den == 1; }
    bool multiple_of_three() const { return den == 1 && num % 3 == 0; }
    u64 as_u64() const; // requires integral(), fits in 64 bits
    std::string str() const; // "85" or "4/3"
    bool operator==(const KValue&) const = default;
};

struct SequenceRow {
    u64 theta;
    Sign sign;
    std::vector<KValue> entries; // entries[j] = k_number(theta, j, sign)
    bool bracketed(std::size_t j) const { return entries.at(j).multiple_of_three(); }
};

OddCore decompose(u64 q);             // q >= 1
ThetaClass classify_theta(u64 theta); // theta odd

KValue k_number(u64 theta, unsigned n, Sign sign);

// K0 = (theta -/+ 1)/3 per sign, K1 = theta - K0; defined only where K0 is
// an integer (sign minus needs theta = 1 mod 3, plus needs theta = 2 mod 3).
std::pair<KValue, KValue> seed_pair(u64 theta, Sign sign);

struct LJSeeds {
    u64 lj0, lj1, j0, j1; // theta+1, theta-1, 2*theta-1, 2*theta+1
    bool operator==(const LJSeeds&) const = default;
};
LJSeeds lj_j_seeds(u64 theta);

SequenceRow k_sequence(u64 theta, Sign sign, unsigned count); // count >= 2

// Tree-node side of the same arithmetic: (theta*2^n - 1)/3 or
// (theta*2^n + 1)/3, present only when integral.
enum class BranchRule { minus_one, plus_one };
std::optional<u64> node_value(u64 theta, unsigned n, BranchRule rule);

// The pair of 2^n +/- 1 interleavings: row_a starts 2,1,5,7,17,31 (plus at
// even n), row_b is the complementary choice starting 0,3,3,9,15,33.
struct GRows {
    std::vector<u64> row_a, row_b;
};
GRows g_sequences(unsigned count); // count >= 1

// Serialization used by the CLI.
std::string sequence_row_text(const SequenceRow& row); // brackets on multiples of 3
std::string sequence_row_csv(const SequenceRow& row);  // theta,sign,n,value,is_multiple_of_3
std::string sequence_row_json(const SequenceRow& row);

const char* to_string(Sign s);
const char* to_string(ThetaKind k);

} // namespace jacobstree

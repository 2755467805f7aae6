#pragma once

// Closed-form solver for N-track cycles of the 3q+-1 maps. Unrolling the
// reverse map q -> (q*2^a -/+ 1)/3 over N odd-to-odd tracks with halving
// exponents a_1..a_N gives
//
//   q * (2^A - 3^N) = +-sigma,   sigma = sum_{j=0}^{N-1} 3^(N-1-j) * 2^(A_j)
//
// with prefix sums A_j = a_1+...+a_j (A_0 = 0, A = A_N); the plus map takes
// +sigma, the minus map -sigma. Integral positive odd q are cycle members,
// verified here by direct simulation.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jacobstree/arith.hpp"
#include "jacobstree/collatz.hpp"

namespace jacobstree {

struct TrackSpec {
    Variant variant;
    std::vector<unsigned> exponents; // all >= 1
    bool operator==(const TrackSpec&) const = default;
};

struct CycleSolution {
    TrackSpec spec;
    i128 q_num = 0;  // exact reduced value of q, sign included
    u128 q_den = 1;
    bool integral = false; // q is a positive odd integer
    bool verified = false; // simulation returned to q with these exponents
    char sign = '+';       // sign of q
    std::string q_str() const;
    u64 q_u64() const; // requires integral
};

CycleSolution multi_track_q(const TrackSpec& spec);
CycleSolution two_track_q(unsigned k, unsigned m, Variant v);

struct EnumerationReport {
    Variant variant;
    unsigned max_tracks = 0;
    unsigned max_total_exponent = 0;
    std::vector<CycleSolution> solutions;  // one per cycle, by smallest member
    std::vector<u64> representatives;      // smallest odd member per cycle
    u64 tuples_examined = 0;
    u64 skipped_overflow = 0;
};

// Evaluates every exponent tuple with N <= max_tracks and total exponent
// <= max_total_exponent, in lexicographic (N, tuple) order; keeps integral
// positive odd q verified by simulation; rotations of one cycle collapse to
// the solution found first.
EnumerationReport enumerate_integer_cycles(Variant v, unsigned max_tracks,
                                           unsigned max_total_exponent);

struct IdentityReport {
    bool product_form = false;        // 5*7 == 2*17 + 1
    std::vector<unsigned> unique_k;   // k <= 64 with (2^k+1)(2^(k+1)-1) == 2(2^(k+2)+1)+1
    bool fermat_5 = false;            // 5 == 2^(2^1) + 1
    bool fermat_17 = false;           // 17 == 2^(2^2) + 1
    bool mersenne_7 = false;          // 7 == 2^3 - 1
    bool difference_form = false;     // 7*5 - 2*17 == 1
    bool all_pass() const;
};
IdentityReport identity_checks();

std::string enumeration_json(const EnumerationReport& report);
std::string enumeration_text(const EnumerationReport& report);
std::string identity_text(const IdentityReport& report);

} // namespace jacobstree

#pragma once

// Trajectory engine for the 3q+1 and 3q-1 maps: full step sequences,
// odd-compressed tracks, the odd-seed table, and terminal-cycle detection.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jacobstree/arith.hpp"

namespace jacobstree {

// Which map drives the dynamics: plus -> 3q+1 on odd q, minus -> 3q-1.
enum class Variant { plus, minus };

// Terminal cycles. The plus map has one known cycle (through 1); the minus
// map has three, named by their smallest odd members 1, 5 (paired with 7),
// and 17. Anything else is reported as other with its smallest odd member.
enum class CycleLabel { c1, c5_7, c17, other };

struct CycleId {
    CycleLabel label = CycleLabel::other;
    u64 other_min = 0; // smallest odd member when label == other
    std::string str() const;
    bool operator==(const CycleId&) const = default;
};

// Members of the named cycles (full cycles, evens included).
const std::vector<u64>& cycle_members(Variant v, CycleLabel label);
// Odd members of every known terminal cycle for the variant.
const std::set<u64>& odd_stop_members(Variant v);
// Label for an odd value that lies on a known terminal cycle, if any.
std::optional<CycleId> stop_label(Variant v, u64 q_odd);

struct Trajectory {
    Variant variant;
    u64 start = 0;
    std::vector<u64> steps; // starts with `start`
    u64 terminal = 0;       // last value reached
    bool truncated = false; // stopped by max_steps
    bool overflowed = false;
    // Number of map applications (one less than the number of recorded values).
    std::size_t step_count() const { return steps.empty() ? 0 : steps.size() - 1; }
};

u64 step(u64 q, Variant v); // one application: odd -> 3q±1, even -> q/2

// Runs from q (>= 1) for at least one step, stopping at the first value
// that is an odd member of a known terminal cycle, or at max_steps.
Trajectory trajectory(u64 q, Variant v, std::size_t max_steps = 10000);

// One odd-to-odd hop: t = 3q±1, then strip all factors of two.
struct OddTrack {
    u64 q_odd; // the next odd value
    unsigned k; // number of halvings stripped
    bool operator==(const OddTrack&) const = default;
};
OddTrack odd_next(u64 q_odd, Variant v);

// Odd-compressed run from q_odd. Appends the stop value when reached;
// a revisit of an already-seen value ends the run without appending.
std::vector<u64> odd_trajectory(u64 q_odd, Variant v,
                                const std::set<u64>& stop_set,
                                std::size_t max_tracks = 10000);

struct OddTableRow {
    u64 seed;              // odd multiple of three
    std::vector<u64> tail; // odd values after the seed, deduplicated globally
};

// Rows for the odd multiples of three up to `limit`, in ascending order.
// A value already seen in an earlier row (or earlier in the same row) ends
// the row; the row's final value is the first repeated or stop value.
std::vector<OddTableRow> odd_table(u64 limit, Variant v);

u64 quad_reduce(u64 q_odd); // (q-1)/4 when q = 1 mod 4, else (q+1)/4

// Halving exponents along the odd-compressed orbit of q: the i-th entry is
// the number of factors of two stripped by hop i. For a cycle member the
// exponents wrap around the cycle.
std::vector<unsigned> track_exponents(u64 q, Variant v, unsigned n_tracks);

// Brent cycle detection on the full map, for values outside known cycles.
CycleId detect_cycle(u64 q, Variant v);

std::string trajectory_text(const Trajectory& t);
std::string trajectory_csv(const Trajectory& t);  // index,value
std::string trajectory_json(const Trajectory& t);

const char* to_string(Variant v);

} // namespace jacobstree

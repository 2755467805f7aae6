#pragma once

// Range classification by terminal cycle: which cycle each q falls into,
// how many steps it takes, cycle frequencies over [lo, hi], and the
// first-members table per cycle class.

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "jacobstree/arith.hpp"
#include "jacobstree/collatz.hpp"

namespace jacobstree {

struct Classification {
    CycleId cycle;
    u64 steps = 0;        // exact steps to the first odd cycle member
    bool truncated = false; // exact steps exceed the cap (steps then unreliable)
};

// Follows the orbit of q to the first odd member of a terminal cycle,
// counting exact steps; `truncated` reflects steps > step_cap. Orbits still
// unresolved after max(step_cap, 1e6) steps fall back to cycle detection,
// which labels them without a step count.
Classification classify(u64 q, Variant v, u64 step_cap = 10000);

struct CensusReport {
    Variant variant = Variant::minus;
    u64 lo = 1, hi = 1;
    u64 step_cap = 10000;
    unsigned partitions = 1;
    std::map<std::string, u64> counts; // keyed by CycleId::str()
    u64 truncated_count = 0;
    u64 max_steps = 0; // among non-truncated orbits
    std::map<std::string, std::vector<u64>> samples; // first members per cycle
    u64 elapsed_ms = 0;
    u64 range_size() const { return hi - lo + 1; }
    double frequency(const std::string& label) const;
};

// Classifies every q in [lo, hi] using `partitions` parallel workers over
// contiguous chunks; counts are independent of the partitioning. Per-q
// overflow counts as truncated and never aborts the sweep.
CensusReport sweep(u64 lo, u64 hi, Variant v, unsigned partitions = 1,
                   u64 step_cap = 10000);

// First per_column members of each cycle class in ascending order. The
// minus table conventionally starts at q = 3, the plus table at q = 1.
std::map<std::string, std::vector<u64>> membership_table(u64 hi, Variant v,
                                                         std::size_t per_column);

// One "q,cycle_label,steps" row per q in [lo, hi], ascending.
void dump_csv(std::ostream& os, u64 lo, u64 hi, Variant v, u64 step_cap = 10000);

std::string census_json(const CensusReport& report);
// Text output excludes elapsed time so identical runs print identically.
std::string census_text(const CensusReport& report);
std::string membership_text(const std::map<std::string, std::vector<u64>>& table);

} // namespace jacobstree

#include "jacobstree/collatz.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace jacobstree {

namespace {

const std::vector<u64> kC1Minus{1, 2};
const std::vector<u64> kC5Minus{5, 14, 7, 20, 10};
const std::vector<u64> kC17Minus{17, 50, 25, 74, 37, 110, 55, 164, 82,
                                 41, 122, 61, 182, 91, 272, 136, 68, 34};
const std::vector<u64> kC1Plus{1, 4, 2};

const std::set<u64> kOddStopsMinus{1, 5, 7, 17, 25, 37, 41, 55, 61, 91};
const std::set<u64> kOddStopsPlus{1};

void require_odd(u64 q, const char* who) {
    if (q == 0 || q % 2 == 0) {
        std::ostringstream os;
        os << who << ": " << q << " is not an odd positive integer";
        throw std::invalid_argument(os.str());
    }
}

} // namespace

std::string CycleId::str() const {
    switch (label) {
    case CycleLabel::c1: return "C1";
    case CycleLabel::c5_7: return "C5_7";
    case CycleLabel::c17: return "C17";
    default: break;
    }
    return "other(" + std::to_string(other_min) + ")";
}

const std::vector<u64>& cycle_members(Variant v, CycleLabel label) {
    if (v == Variant::plus) {
        if (label == CycleLabel::c1)
            return kC1Plus;
    } else {
        switch (label) {
        case CycleLabel::c1: return kC1Minus;
        case CycleLabel::c5_7: return kC5Minus;
        case CycleLabel::c17: return kC17Minus;
        default: break;
        }
    }
    throw std::invalid_argument("cycle_members: no such cycle for this variant");
}

const std::set<u64>& odd_stop_members(Variant v) {
    return v == Variant::plus ? kOddStopsPlus : kOddStopsMinus;
}

std::optional<CycleId> stop_label(Variant v, u64 q_odd) {
    if (v == Variant::plus) {
        if (q_odd == 1)
            return CycleId{CycleLabel::c1, 0};
        return std::nullopt;
    }
    if (q_odd == 1)
        return CycleId{CycleLabel::c1, 0};
    if (q_odd == 5 || q_odd == 7)
        return CycleId{CycleLabel::c5_7, 0};
    if (kOddStopsMinus.count(q_odd))
        return CycleId{CycleLabel::c17, 0};
    return std::nullopt;
}

u64 step(u64 q, Variant v) {
    if (q == 0)
        throw std::invalid_argument("step: q must be positive");
    if (q % 2 == 0)
        return q / 2;
    if (q > (std::numeric_limits<u64>::max() - 1) / 3)
        throw overflow_error("step: 3q exceeds 64 bits");
    return v == Variant::plus ? 3 * q + 1 : 3 * q - 1;
}

Trajectory trajectory(u64 q, Variant v, std::size_t max_steps) {
    if (q == 0)
        throw std::invalid_argument("trajectory: start must be positive");
    const std::set<u64>& stops = odd_stop_members(v);
    Trajectory t;
    t.variant = v;
    t.start = q;
    t.steps.push_back(q);
    u64 cur = q;
    for (std::size_t i = 0; i < max_steps; ++i) {
        try {
            cur = step(cur, v);
        } catch (const overflow_error&) {
            t.overflowed = true;
            t.terminal = t.steps.back();
            return t;
        }
        t.steps.push_back(cur);
        if (cur % 2 == 1 && stops.count(cur)) {
            t.terminal = cur;
            return t;
        }
    }
    t.truncated = true;
    t.terminal = t.steps.back();
    return t;
}

OddTrack odd_next(u64 q_odd, Variant v) {
    require_odd(q_odd, "odd_next");
    u128 t = u128{3} * q_odd;
    if (v == Variant::plus)
        ++t;
    else
        --t;
    unsigned k = 0;
    while (t % 2 == 0) {
        t >>= 1;
        ++k;
    }
    return OddTrack{require_u64(t, "odd track"), k};
}

std::vector<u64> odd_trajectory(u64 q_odd, Variant v,
                                const std::set<u64>& stop_set,
                                std::size_t max_tracks) {
    require_odd(q_odd, "odd_trajectory");
    std::vector<u64> out{q_odd};
    std::unordered_set<u64> seen{q_odd};
    u64 cur = q_odd;
    for (std::size_t i = 0; i < max_tracks; ++i) {
        cur = odd_next(cur, v).q_odd;
        if (cur == 1 || stop_set.count(cur)) {
            out.push_back(cur);
            return out;
        }
        if (seen.count(cur))
            return out;
        out.push_back(cur);
        seen.insert(cur);
    }
    return out;
}

std::vector<OddTableRow> odd_table(u64 limit, Variant v) {
    std::vector<OddTableRow> rows;
    std::unordered_set<u64> seen;
    constexpr std::size_t kRowGuard = 10'000'000;
    for (u64 seed = 3; seed <= limit; seed += 6) {
        OddTableRow row{seed, {}};
        std::unordered_set<u64> local{seed};
        u64 cur = seed;
        for (std::size_t hops = 0;; ++hops) {
            if (hops >= kRowGuard)
                throw overflow_error("odd_table: row did not close");
            cur = odd_next(cur, v).q_odd;
            if (local.count(cur))
                break;
            row.tail.push_back(cur);
            if (cur == 1 || seen.count(cur))
                break;
            local.insert(cur);
        }
        seen.insert(seed);
        seen.insert(row.tail.begin(), row.tail.end());
        rows.push_back(std::move(row));
    }
    return rows;
}

u64 quad_reduce(u64 q_odd) {
    require_odd(q_odd, "quad_reduce");
    return q_odd % 4 == 1 ? (q_odd - 1) / 4 : (q_odd + 1) / 4;
}

std::vector<unsigned> track_exponents(u64 q, Variant v, unsigned n_tracks) {
    require_odd(q, "track_exponents");
    std::vector<unsigned> out;
    out.reserve(n_tracks);
    u64 cur = q;
    for (unsigned i = 0; i < n_tracks; ++i) {
        OddTrack t = odd_next(cur, v);
        out.push_back(t.k);
        cur = t.q_odd;
    }
    return out;
}

CycleId detect_cycle(u64 q, Variant v) {
    if (q == 0)
        throw std::invalid_argument("detect_cycle: q must be positive");
    // Brent: find cycle length lam, then a value on the cycle.
    u64 tortoise = q;
    u64 hare = step(q, v);
    u64 power = 1, lam = 1;
    while (tortoise != hare) {
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = step(hare, v);
        ++lam;
    }
    // hare (== tortoise) lies on the cycle; walk it once.
    u64 min_odd = 0;
    u64 cur = hare;
    for (u64 i = 0; i < lam; ++i) {
        if (cur % 2 == 1 && (min_odd == 0 || cur < min_odd))
            min_odd = cur;
        cur = step(cur, v);
    }
    if (min_odd != 0) {
        if (auto known = stop_label(v, min_odd))
            return *known;
    }
    return CycleId{CycleLabel::other, min_odd};
}

std::string trajectory_text(const Trajectory& t) {
    std::string out;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(t.steps[i]);
    }
    return out;
}

std::string trajectory_csv(const Trajectory& t) {
    std::string out = "index,value\n";
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += std::to_string(t.steps[i]);
        out += '\n';
    }
    return out;
}

std::string trajectory_json(const Trajectory& t) {
    nlohmann::json doc{
        {"variant", to_string(t.variant)},
        {"start", t.start},
        {"steps", t.steps},
        {"terminal", t.terminal},
        {"truncated", t.truncated},
        {"overflowed", t.overflowed},
    };
    return doc.dump(2) + "\n";
}

const char* to_string(Variant v) {
    return v == Variant::plus ? "plus" : "minus";
}

} // namespace jacobstree

#include "jacobstree/census.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace jacobstree {

namespace {

constexpr std::size_t kSampleMax = 10;
constexpr u64 kHardFloor = 1000000;

int encode(CycleLabel label) {
    switch (label) {
    case CycleLabel::c1: return 0;
    case CycleLabel::c5_7: return 1;
    case CycleLabel::c17: return 2;
    default: return -1;
    }
}

CycleLabel decode(int code) {
    switch (code) {
    case 0: return CycleLabel::c1;
    case 1: return CycleLabel::c5_7;
    default: return CycleLabel::c17;
    }
}

// Memoizes exact (label, steps-to-cycle) for values under the cache limit.
// Truncation depends only on the exact step count, so cache hits cannot
// change any classification.
class MemoClassifier {
public:
    MemoClassifier(Variant v, u64 step_cap, unsigned cache_bits)
        : v_(v), cap_(step_cap), hard_(std::max(step_cap, kHardFloor)),
          limit_(u64{1} << cache_bits), cache_(limit_) {}

    Classification classify(u64 q) {
        u64 cur = q;
        u64 total = 0;
        path_.clear();
        int label = -1;
        u64 rem = 0;
        for (;;) {
            if (cur % 2 == 1) {
                if (auto known = stop_label(v_, cur)) {
                    label = encode(known->label);
                    break;
                }
            }
            if (cur < limit_) {
                const Entry& e = cache_[cur];
                if (e.state) {
                    label = e.label;
                    rem = e.steps;
                    break;
                }
            }
            if (total >= hard_)
                break;
            if (cur < limit_)
                path_.emplace_back(cur, total);
            cur = step(cur, v_);
            ++total;
        }
        if (label < 0) {
            // Not resolved within the hard guard; find the eventual cycle
            // directly. The step count is unknown, only the label is.
            CycleId id = detect_cycle(cur, v_);
            return Classification{id, hard_, true};
        }
        u64 exact = total + rem;
        for (auto [value, offset] : path_)
            if (exact - offset <= 0xFFFFFFFFull)
                cache_[value] = Entry{static_cast<std::uint32_t>(exact - offset),
                                      static_cast<std::uint8_t>(label), 1};
        return Classification{CycleId{decode(label), 0}, exact, exact > cap_};
    }

private:
    struct Entry {
        std::uint32_t steps = 0;
        std::uint8_t label = 0;
        std::uint8_t state = 0;
    };
    Variant v_;
    u64 cap_;
    u64 hard_;
    u64 limit_;
    std::vector<Entry> cache_;
    std::vector<std::pair<u64, u64>> path_;
};

std::string format_frequency(double f) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", f);
    return buf;
}

} // namespace

Classification classify(u64 q, Variant v, u64 step_cap) {
    if (q == 0)
        throw std::invalid_argument("classify: q must be positive");
    MemoClassifier mc(v, step_cap, 16);
    return mc.classify(q);
}

double CensusReport::frequency(const std::string& label) const {
    auto it = counts.find(label);
    if (it == counts.end())
        return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(range_size());
}

CensusReport sweep(u64 lo, u64 hi, Variant v, unsigned partitions, u64 step_cap) {
    if (lo < 1 || lo > hi)
        throw std::invalid_argument("sweep: need 1 <= lo <= hi");
    if (partitions < 1 || partitions > 256)
        throw std::invalid_argument("sweep: partitions must be in [1, 256]");

    auto t0 = std::chrono::steady_clock::now();
    CensusReport report;
    report.variant = v;
    report.lo = lo;
    report.hi = hi;
    report.step_cap = step_cap;
    report.partitions = partitions;

    const unsigned cache_bits = partitions > 8 ? 16 : 20;
    u64 n = hi - lo + 1;
    unsigned workers = partitions;
    if (n < workers)
        workers = static_cast<unsigned>(n);
    u64 chunk = (n + workers - 1) / workers;

    struct Local {
        std::map<std::string, u64> counts;
        u64 truncated = 0;
        u64 max_steps = 0;
        std::map<std::string, std::vector<u64>> samples;
    };
    std::vector<Local> locals(workers);

    auto run = [&](unsigned i) {
        u64 a = lo + i * chunk;
        u64 b = std::min(hi, a + chunk - 1);
        Local& local = locals[i];
        MemoClassifier mc(v, step_cap, cache_bits);
        for (u64 q = a; q <= b; ++q) {
            Classification c;
            try {
                c = mc.classify(q);
            } catch (const overflow_error&) {
                ++local.truncated;
                continue;
            }
            if (c.truncated) {
                ++local.truncated;
                continue;
            }
            std::string key = c.cycle.str();
            ++local.counts[key];
            local.max_steps = std::max(local.max_steps, c.steps);
            auto& sample = local.samples[key];
            if (sample.size() < kSampleMax)
                sample.push_back(q);
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned i = 0; i < workers; ++i)
            threads.emplace_back(run, i);
        for (auto& t : threads)
            t.join();
    }

    for (const Local& local : locals) {
        for (auto& [key, count] : local.counts)
            report.counts[key] += count;
        report.truncated_count += local.truncated;
        report.max_steps = std::max(report.max_steps, local.max_steps);
        for (auto& [key, sample] : local.samples) {
            auto& merged = report.samples[key];
            for (u64 q : sample) {
                if (merged.size() >= kSampleMax)
                    break;
                merged.push_back(q);
            }
        }
    }
    report.elapsed_ms = static_cast<u64>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0)
            .count());
    return report;
}

std::map<std::string, std::vector<u64>> membership_table(u64 hi, Variant v,
                                                         std::size_t per_column) {
    std::map<std::string, std::vector<u64>> table;
    std::vector<std::string> expected;
    if (v == Variant::plus) {
        expected = {"C1"};
    } else {
        expected = {"C1", "C5_7", "C17"};
    }
    for (const std::string& key : expected)
        table[key];

    MemoClassifier mc(v, 10000, 20);
    u64 start = v == Variant::plus ? 1 : 3;
    for (u64 q = start; q <= hi; ++q) {
        Classification c = mc.classify(q);
        if (c.truncated)
            continue;
        auto it = table.find(c.cycle.str());
        if (it == table.end())
            it = table.emplace(c.cycle.str(), std::vector<u64>{}).first;
        if (it->second.size() < per_column)
            it->second.push_back(q);
        bool done = true;
        for (const std::string& key : expected)
            if (table[key].size() < per_column)
                done = false;
        if (done)
            break;
    }
    return table;
}

void dump_csv(std::ostream& os, u64 lo, u64 hi, Variant v, u64 step_cap) {
    if (lo < 1 || lo > hi)
        throw std::invalid_argument("dump_csv: need 1 <= lo <= hi");
    os << "q,cycle_label,steps\n";
    MemoClassifier mc(v, step_cap, 20);
    for (u64 q = lo; q <= hi; ++q) {
        bool truncated = false;
        Classification c;
        try {
            c = mc.classify(q);
        } catch (const overflow_error&) {
            truncated = true;
        }
        if (truncated || c.truncated)
            os << q << ",truncated,\n";
        else
            os << q << ',' << c.cycle.str() << ',' << c.steps << '\n';
    }
}

std::string census_json(const CensusReport& report) {
    nlohmann::json freqs = nlohmann::json::object();
    for (auto& [key, count] : report.counts) {
        double f = report.frequency(key);
        freqs[key] = std::round(f * 10000.0) / 10000.0;
    }
    nlohmann::json samples = nlohmann::json::object();
    for (auto& [key, sample] : report.samples)
        samples[key] = sample;
    nlohmann::json doc{
        {"variant", to_string(report.variant)},
        {"lo", report.lo},
        {"hi", report.hi},
        {"step_cap", report.step_cap},
        {"partitions", report.partitions},
        {"counts", report.counts},
        {"frequencies", std::move(freqs)},
        {"truncated", report.truncated_count},
        {"max_steps", report.max_steps},
        {"samples", std::move(samples)},
        {"elapsed_ms", report.elapsed_ms},
    };
    return doc.dump(2) + "\n";
}

std::string census_text(const CensusReport& report) {
    std::ostringstream os;
    os << "census " << to_string(report.variant) << " [" << report.lo << ", "
       << report.hi << "] step_cap=" << report.step_cap
       << " partitions=" << report.partitions << "\n";
    for (auto& [key, count] : report.counts)
        os << key << " " << count << " " << format_frequency(report.frequency(key))
           << "\n";
    os << "truncated " << report.truncated_count << "\n";
    os << "max_steps " << report.max_steps << "\n";
    return os.str();
}

std::string membership_text(const std::map<std::string, std::vector<u64>>& table) {
    std::ostringstream os;
    for (auto& [key, column] : table) {
        os << key << ":";
        for (u64 q : column)
            os << ' ' << q;
        os << '\n';
    }
    return os.str();
}

} // namespace jacobstree

#include "jacobstree/cycles.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace jacobstree {

namespace {

// sigma and |D| stay inside 128 bits for these bounds (sigma < N * 3^N and
// N*3^77 < 2^128; |D| <= 3^77 < 2^127).
constexpr unsigned kMaxTracks = 77;
constexpr unsigned kMaxTotalExponent = 120;

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 pow3(unsigned n) {
    static const auto table = [] {
        std::array<u128, kMaxTracks + 1> t{};
        t[0] = 1;
        for (std::size_t i = 1; i < t.size(); ++i)
            t[i] = t[i - 1] * 3;
        return t;
    }();
    return table[n];
}

void validate_spec(const TrackSpec& spec) {
    if (spec.exponents.empty())
        throw std::invalid_argument("track spec needs at least one exponent");
    if (spec.exponents.size() > kMaxTracks)
        throw overflow_error("track spec exceeds supported track count");
    u64 total = 0;
    for (unsigned a : spec.exponents) {
        if (a < 1)
            throw std::invalid_argument("track exponents must be >= 1");
        total += a;
    }
    if (total > kMaxTotalExponent)
        throw overflow_error("track spec exceeds supported exponent total");
}

struct RawSolution {
    u128 sigma = 0;
    i128 denom = 0; // 2^A - 3^N
};

RawSolution evaluate(const std::vector<unsigned>& exps) {
    unsigned n = static_cast<unsigned>(exps.size());
    u128 sigma = 0;
    unsigned prefix = 0;
    for (unsigned j = 0; j < n; ++j) {
        sigma += pow3(n - 1 - j) * (u128{1} << prefix);
        prefix += exps[j];
    }
    i128 denom = static_cast<i128>(u128{1} << prefix) -
                 static_cast<i128>(pow3(n));
    return RawSolution{sigma, denom};
}

bool simulate_cycle(u64 q, Variant v, const std::vector<unsigned>& exps,
                    u64& min_member) {
    u64 cur = q;
    min_member = q;
    for (unsigned a : exps) {
        OddTrack t = odd_next(cur, v);
        if (t.k != a)
            return false;
        cur = t.q_odd;
        min_member = std::min(min_member, cur);
    }
    return cur == q;
}

} // namespace

std::string CycleSolution::q_str() const {
    std::string s = to_string(q_num);
    if (q_den != 1)
        s += "/" + to_string(q_den);
    return s;
}

u64 CycleSolution::q_u64() const {
    if (!integral)
        throw std::domain_error("cycle solution " + q_str() + " is not integral");
    return require_u64(static_cast<u128>(q_num), "cycle q");
}

CycleSolution multi_track_q(const TrackSpec& spec) {
    validate_spec(spec);
    RawSolution raw = evaluate(spec.exponents);
    CycleSolution sol;
    sol.spec = spec;
    if (raw.denom == 0)
        throw std::domain_error("multi_track_q: zero denominator");

    i128 num = spec.variant == Variant::plus ? static_cast<i128>(raw.sigma)
                                             : -static_cast<i128>(raw.sigma);
    i128 den = raw.denom;
    if (den < 0) { // normalize denominator positive
        den = -den;
        num = -num;
    }
    u128 g = gcd_u128(num < 0 ? static_cast<u128>(-num) : static_cast<u128>(num),
                      static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    sol.q_num = num;
    sol.q_den = static_cast<u128>(den);
    sol.sign = num < 0 ? '-' : '+';
    sol.integral = num > 0 && den == 1 && num % 2 == 1;
    if (sol.integral && static_cast<u128>(num) <= std::numeric_limits<u64>::max()) {
        u64 q = static_cast<u64>(static_cast<u128>(num));
        u64 min_member = 0;
        try {
            sol.verified = simulate_cycle(q, spec.variant, spec.exponents, min_member);
        } catch (const overflow_error&) {
            sol.verified = false;
        }
    }
    return sol;
}

CycleSolution two_track_q(unsigned k, unsigned m, Variant v) {
    if (k < 1 || m < 1)
        throw std::invalid_argument("two_track_q: exponents must be >= 1");
    return multi_track_q(TrackSpec{v, {m, k}});
}

EnumerationReport enumerate_integer_cycles(Variant v, unsigned max_tracks,
                                           unsigned max_total_exponent) {
    if (max_tracks < 1 || max_total_exponent < 1)
        throw std::invalid_argument("enumeration bounds must be >= 1");
    if (max_tracks > kMaxTracks || max_total_exponent > kMaxTotalExponent)
        throw overflow_error("enumeration bounds exceed supported capacity");

    EnumerationReport report;
    report.variant = v;
    report.max_tracks = max_tracks;
    report.max_total_exponent = max_total_exponent;

    std::map<u64, CycleSolution> by_member;
    std::vector<unsigned> exps;

    for (unsigned n = 1; n <= max_tracks; ++n) {
        u128 p3n = pow3(n);
        // DFS over tuples of length n with every a_j >= 1 and total <= bound,
        // in lexicographic order; sigma/prefix accumulate along the path.
        auto rec = [&](auto&& self, unsigned j, unsigned prefix, u128 sigma) -> void {
            u128 term = pow3(n - 1 - j) * (u128{1} << prefix);
            u128 sigma2 = sigma + term;
            unsigned remaining = n - 1 - j; // tracks after this one
            unsigned budget = max_total_exponent - prefix - remaining;
            for (unsigned a = 1; a <= budget; ++a) {
                unsigned prefix2 = prefix + a;
                if (j + 1 == n) {
                    ++report.tuples_examined;
                    i128 denom = static_cast<i128>(u128{1} << prefix2) -
                                 static_cast<i128>(p3n);
                    if (denom == 0)
                        continue;
                    if ((denom > 0) != (v == Variant::plus))
                        continue; // q would be negative for this variant
                    u128 mag = denom > 0 ? static_cast<u128>(denom)
                                         : static_cast<u128>(-denom);
                    if (sigma2 % mag != 0)
                        continue;
                    u128 qv = sigma2 / mag;
                    if (qv % 2 != 1)
                        continue;
                    exps.push_back(a);
                    if (qv > std::numeric_limits<u64>::max()) {
                        ++report.skipped_overflow;
                    } else {
                        u64 q = static_cast<u64>(qv);
                        u64 min_member = 0;
                        bool ok = false;
                        try {
                            ok = simulate_cycle(q, v, exps, min_member);
                        } catch (const overflow_error&) {
                            ++report.skipped_overflow;
                        }
                        if (ok && !by_member.count(min_member)) {
                            CycleSolution sol;
                            sol.spec = TrackSpec{v, exps};
                            sol.q_num = static_cast<i128>(qv);
                            sol.q_den = 1;
                            sol.integral = true;
                            sol.verified = true;
                            sol.sign = '+';
                            by_member.emplace(min_member, std::move(sol));
                        }
                    }
                    exps.pop_back();
                } else {
                    exps.push_back(a);
                    self(self, j + 1, prefix2, sigma2);
                    exps.pop_back();
                }
            }
        };
        if (max_total_exponent >= n)
            rec(rec, 0, 0, 0);
    }

    for (auto& [member, sol] : by_member) {
        report.representatives.push_back(member);
        report.solutions.push_back(sol);
    }
    return report;
}

IdentityReport identity_checks() {
    IdentityReport r;
    r.product_form = 5 * 7 == 2 * 17 + 1;
    for (unsigned k = 0; k <= 64; ++k) {
        u128 lhs_a = (u128{1} << k) + 1;
        u128 lhs_b = (u128{1} << (k + 1)) - 1;
        if (lhs_a > ~u128{0} / lhs_b)
            continue; // product exceeds 128 bits, far above the right side
        u128 lhs = lhs_a * lhs_b;
        u128 rhs = 2 * ((u128{1} << (k + 2)) + 1) + 1;
        if (lhs == rhs)
            r.unique_k.push_back(k);
    }
    r.fermat_5 = 5 == (1u << (1u << 1)) + 1;
    r.fermat_17 = 17 == (1u << (1u << 2)) + 1;
    r.mersenne_7 = 7 == (1u << 3) - 1;
    r.difference_form = 7 * 5 - 2 * 17 == 1;
    return r;
}

bool IdentityReport::all_pass() const {
    return product_form && unique_k == std::vector<unsigned>{2} && fermat_5 &&
           fermat_17 && mersenne_7 && difference_form;
}

std::string enumeration_json(const EnumerationReport& report) {
    nlohmann::json sols = nlohmann::json::array();
    for (const CycleSolution& s : report.solutions)
        sols.push_back({
            {"exponents", s.spec.exponents},
            {"q", s.q_u64()},
            {"sign", std::string(1, s.sign)},
            {"verified", s.verified},
        });
    nlohmann::json doc{
        {"variant", to_string(report.variant)},
        {"bounds",
         {{"max_tracks", report.max_tracks},
          {"max_total_exponent", report.max_total_exponent}}},
        {"solutions", std::move(sols)},
        {"representatives", report.representatives},
        {"tuples_examined", report.tuples_examined},
        {"skipped_overflow_count", report.skipped_overflow},
    };
    return doc.dump(2) + "\n";
}

std::string enumeration_text(const EnumerationReport& report) {
    std::ostringstream os;
    os << "variant " << to_string(report.variant) << ", tracks <= "
       << report.max_tracks << ", total exponent <= "
       << report.max_total_exponent << "\n";
    for (const CycleSolution& s : report.solutions) {
        os << "q = " << s.q_str() << "  exponents (";
        for (std::size_t i = 0; i < s.spec.exponents.size(); ++i)
            os << (i ? "," : "") << s.spec.exponents[i];
        os << ")  " << (s.verified ? "verified" : "unverified") << "\n";
    }
    os << report.solutions.size() << " cycle(s); "
       << report.tuples_examined << " tuples examined; "
       << report.skipped_overflow << " skipped on overflow\n";
    return os.str();
}

std::string identity_text(const IdentityReport& r) {
    std::ostringstream os;
    auto line = [&](bool ok, const std::string& what) {
        os << (ok ? "pass" : "FAIL") << "  " << what << "\n";
    };
    line(r.product_form, "5*7 = 2*17 + 1 (35 = 35)");
    std::ostringstream ks;
    for (std::size_t i = 0; i < r.unique_k.size(); ++i)
        ks << (i ? "," : "") << r.unique_k[i];
    line(r.unique_k == std::vector<unsigned>{2},
         "(2^k+1)(2^(k+1)-1) = 2(2^(k+2)+1)+1 only at k=2 for k<=64 (found k=" +
             ks.str() + ")");
    line(r.fermat_5 && r.fermat_17, "5 = 2^(2^1)+1 and 17 = 2^(2^2)+1 (Fermat)");
    line(r.mersenne_7, "7 = 2^3 - 1 (Mersenne)");
    line(r.difference_form, "7*5 - 2*17 = 1 (35 - 34 = 1)");
    return os.str();
}

} // namespace jacobstree

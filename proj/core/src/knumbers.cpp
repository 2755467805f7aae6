#include "jacobstree/knumbers.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace jacobstree {

u64 OddCore::value() const {
    return require_u64(shl_checked(u128{theta}, n), "odd-core value");
}

u64 KValue::as_u64() const {
    if (den != 1)
        throw std::domain_error("k-value " + str() + " is not an integer");
    return require_u64(num, "k-value");
}

std::string KValue::str() const {
    std::string s = to_string(num);
    if (den == 3)
        s += "/3";
    return s;
}

OddCore decompose(u64 q) {
    if (q == 0)
        throw std::invalid_argument("decompose: q must be positive");
    unsigned n = static_cast<unsigned>(std::countr_zero(q));
    return OddCore{q >> n, n};
}

ThetaClass classify_theta(u64 theta) {
    if (theta % 2 == 0)
        throw std::invalid_argument("classify_theta: theta must be odd");
    ThetaKind kind;
    switch (theta % 6) {
    case 1: kind = ThetaKind::t1; break;
    case 3: kind = ThetaKind::t3; break;
    default: kind = ThetaKind::t5; break;
    }
    return ThetaClass{kind, theta / 6};
}

KValue k_number(u64 theta, unsigned n, Sign sign) {
    if (theta == 0 || theta % 2 == 0)
        throw std::invalid_argument("k_number: theta must be odd and positive");
    u128 p = shl_checked(u128{theta}, n);
    bool even_n = (n % 2 == 0);
    // minus: theta*2^n - (-1)^n;  plus: theta*2^n + (-1)^n
    bool subtract = (sign == Sign::minus) ? even_n : !even_n;
    u128 raw;
    if (subtract) {
        raw = p - 1; // p >= 1 always
    } else {
        if (p == ~u128{0})
            throw overflow_error("k_number numerator overflow");
        raw = p + 1;
    }
    if (raw % 3 == 0)
        return KValue{raw / 3, 1};
    return KValue{raw, 3};
}

std::pair<KValue, KValue> seed_pair(u64 theta, Sign sign) {
    if (theta == 0 || theta % 2 == 0)
        throw std::invalid_argument("seed_pair: theta must be odd and positive");
    u64 adjusted = (sign == Sign::minus) ? theta - 1 : theta + 1;
    if (adjusted % 3 != 0) {
        std::ostringstream os;
        os << "seed_pair: no integer seed for theta=" << theta
           << " sign=" << to_string(sign);
        throw std::domain_error(os.str());
    }
    u64 k0 = adjusted / 3;
    u64 k1 = theta - k0;
    return {KValue{k0, 1}, KValue{k1, 1}};
}

LJSeeds lj_j_seeds(u64 theta) {
    if (theta == 0 || theta % 2 == 0)
        throw std::invalid_argument("lj_j_seeds: theta must be odd and positive");
    u128 t = theta;
    return LJSeeds{
        require_u64(t + 1, "lj seed"),
        theta - 1,
        require_u64(2 * t - 1, "j seed"),
        require_u64(2 * t + 1, "j seed"),
    };
}

SequenceRow k_sequence(u64 theta, Sign sign, unsigned count) {
    if (count < 2)
        throw std::invalid_argument("k_sequence: count must be at least 2");
    SequenceRow row{theta, sign, {}};
    row.entries.reserve(count);
    for (unsigned n = 0; n < count; ++n)
        row.entries.push_back(k_number(theta, n, sign));
    return row;
}

std::optional<u64> node_value(u64 theta, unsigned n, BranchRule rule) {
    if (theta == 0 || theta % 2 == 0)
        throw std::invalid_argument("node_value: theta must be odd and positive");
    u128 p = shl_checked(u128{theta}, n);
    u128 raw = (rule == BranchRule::minus_one) ? p - 1 : p + 1;
    if (raw % 3 != 0)
        return std::nullopt;
    return require_u64(raw / 3, "node value");
}

GRows g_sequences(unsigned count) {
    if (count < 1)
        throw std::invalid_argument("g_sequences: count must be at least 1");
    GRows rows;
    rows.row_a.reserve(count);
    rows.row_b.reserve(count);
    for (unsigned n = 0; n < count; ++n) {
        u128 p = shl_checked(u128{1}, n);
        u128 hi = p + 1, lo = p - 1;
        bool even_n = (n % 2 == 0);
        rows.row_a.push_back(require_u64(even_n ? hi : lo, "g sequence"));
        rows.row_b.push_back(require_u64(even_n ? lo : hi, "g sequence"));
    }
    return rows;
}

std::string sequence_row_text(const SequenceRow& row) {
    std::string out;
    for (std::size_t j = 0; j < row.entries.size(); ++j) {
        if (j)
            out += ' ';
        if (row.bracketed(j))
            out += '[' + row.entries[j].str() + ']';
        else
            out += row.entries[j].str();
    }
    return out;
}

std::string sequence_row_csv(const SequenceRow& row) {
    std::string out = "theta,sign,n,value,is_multiple_of_3\n";
    for (std::size_t j = 0; j < row.entries.size(); ++j) {
        out += std::to_string(row.theta);
        out += ',';
        out += to_string(row.sign);
        out += ',';
        out += std::to_string(j);
        out += ',';
        out += row.entries[j].str();
        out += ',';
        out += row.bracketed(j) ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string sequence_row_json(const SequenceRow& row) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t j = 0; j < row.entries.size(); ++j) {
        const KValue& v = row.entries[j];
        entries.push_back({
            {"n", j},
            {"value", v.str()},
            {"integral", v.integral()},
            {"is_multiple_of_3", v.multiple_of_three()},
        });
    }
    nlohmann::json doc{
        {"theta", row.theta},
        {"sign", to_string(row.sign)},
        {"entries", std::move(entries)},
    };
    return doc.dump(2) + "\n";
}

const char* to_string(Sign s) {
    return s == Sign::minus ? "minus" : "plus";
}

const char* to_string(ThetaKind k) {
    switch (k) {
    case ThetaKind::t1: return "T1";
    case ThetaKind::t3: return "T3";
    default: return "T5";
    }
}

} // namespace jacobstree

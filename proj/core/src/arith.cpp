#include "jacobstree/arith.hpp"

#include <algorithm>
#include <limits>

namespace jacobstree {

u128 pow2_128(unsigned n) {
    if (n >= 128)
        throw overflow_error("2^" + std::to_string(n) + " exceeds 128-bit range");
    return u128(1) << n;
}

u64 require_u64(u128 v, const char* what) {
    if (v > std::numeric_limits<u64>::max())
        throw overflow_error(std::string(what) + " does not fit in 64 bits: " + to_string(v));
    return static_cast<u64>(v);
}

static void append_decimal(std::string& out, u128 v) {
    char buf[40];
    int i = 0;
    do {
        buf[i++] = char('0' + int(v % 10));
        v /= 10;
    } while (v != 0);
    while (i > 0)
        out.push_back(buf[--i]);
}

std::string to_string(u128 v) {
    std::string out;
    append_decimal(out, v);
    return out;
}

std::string to_string(i128 v) {
    std::string out;
    if (v < 0) {
        out.push_back('-');
        append_decimal(out, u128(-(v + 1)) + 1);
    } else {
        append_decimal(out, u128(v));
    }
    return out;
}

u128 shl_checked(u128 a, unsigned n) {
    if (a == 0 || n == 0)
        return a;
    if (n >= 128 || (a >> (128 - n)) != 0)
        throw overflow_error("shift overflows 128-bit range");
    return a << n;
}

} // namespace jacobstree

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jacobstree {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Thrown when a value leaves the representable range. Arithmetic here never
// wraps silently.
struct overflow_error : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// 2^n as u128. n must be < 128.
u128 pow2_128(unsigned n);

// Checked narrowing; `what` names the offending quantity in the message.
u64 require_u64(u128 v, const char* what);

std::string to_string(u128 v);
std::string to_string(i128 v);

// a * 2^n with an overflow check against u128.
u128 shl_checked(u128 a, unsigned n);

} // namespace jacobstree

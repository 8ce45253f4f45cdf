#pragma once

#include <cstdint>
#include <vector>

namespace isodual {

bool is_prime(std::int64_t m);

// p^e for the unique prime p when m = p^e, e >= 1; nullopt-style: returns
// false when m is not a prime power.
bool prime_power_split(std::int64_t m, std::int64_t& p, std::int64_t& e);

// Distinct prime factors, ascending.
std::vector<std::int64_t> distinct_prime_factors(std::int64_t m);

// b^e, throwing Errc::size_bound when the result would exceed bound.
std::int64_t ipow_checked(std::int64_t b, std::int64_t e, std::int64_t bound);

// b^e mod m, m >= 1, e >= 0.
std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m);

// Least positive representative of s^-1 mod n; Errc::not_unit when
// gcd(s, n) != 1.
std::int64_t inv_mod(std::int64_t s, std::int64_t n);

// Representative of x in [0, n).
std::int64_t mod_norm(std::int64_t x, std::int64_t n);

} // namespace isodual

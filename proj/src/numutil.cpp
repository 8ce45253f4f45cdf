#include "isodual/numutil.hpp"

#include <numeric>

#include "isodual/error.hpp"

namespace isodual {

bool is_prime(std::int64_t m) {
    if (m < 2) return false;
    for (std::int64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

bool prime_power_split(std::int64_t m, std::int64_t& p, std::int64_t& e) {
    if (m < 2) return false;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            e = 0;
            while (m % d == 0) { m /= d; ++e; }
            return m == 1;
        }
    }
    p = m;
    e = 1;
    return true;
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t m) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

std::int64_t ipow_checked(std::int64_t b, std::int64_t e, std::int64_t bound) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        if (b != 0 && r > bound / b)
            throw Error(Errc::size_bound, "power exceeds bound");
        r *= b;
    }
    if (r > bound) throw Error(Errc::size_bound, "power exceeds bound");
    return r;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
    b = mod_norm(b, m);
    std::int64_t r = mod_norm(1, m);
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

std::int64_t inv_mod(std::int64_t s, std::int64_t n) {
    s = mod_norm(s, n);
    // Extended Euclid on (s, n).
    std::int64_t a = s, b = n, x0 = 1, x1 = 0;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t tmp = a - q * b; a = b; b = tmp;
        tmp = x0 - q * x1; x0 = x1; x1 = tmp;
    }
    if (a != 1)
        throw Error(Errc::not_unit, "element is not a unit mod n");
    std::int64_t r = mod_norm(x0, n);
    return r == 0 ? n : r; // least positive; n == 1 gives 1
}

std::int64_t mod_norm(std::int64_t x, std::int64_t n) {
    std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

} // namespace isodual

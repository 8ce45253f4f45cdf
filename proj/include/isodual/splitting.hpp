#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isodual/zn.hpp"

namespace isodual {

// Verdict of the existence criterion 0 < nu2(n) < 2 nu2(q - 1), with the
// witness parameters when it holds.
struct ExistsResult {
    bool exists = false;
    std::int64_t v = 0;      // nu2(n)
    std::int64_t w = 0;      // nu2(q - 1)
    std::int64_t n_odd = 0;  // n / 2^v
    std::int64_t u = -1;     // smallest admissible u (when exists)
    std::int64_t t = -1;     // 2^u * n_odd (when exists)
    std::string reason;
};

// Existence of Type-I duadic splittings of Z_n (equivalently, of
// iso-self-dual cyclic codes of length n over GF(q)). q must be a prime
// power coprime to n; NotPrimePower / NotCoprime otherwise.
ExistsResult exists_splitting(std::int64_t q, std::int64_t n);

// Smallest admissible u with max{0, nu2(n) - nu2(q-1)} <= u <
// min{nu2(n), nu2(q-1)}; NoSplitting when the interval is empty.
std::int64_t choose_u(std::int64_t q, std::int64_t n);

// Whether Type-I splittings of Z_n given by rho exist, by the valuation
// criterion reduced to the 2-part: with v = nu2(n) and t2 = t mod 2^v,
// splittings exist iff v > 0, t2 != 0, and q^j = s (mod 2^(nu2(t2)+1)) for
// every j >= 0 (tested over one full period of q). Cross-checkable against
// the orbit-parity criterion (all rho-orbits on Z_n/mu_q of even length).
bool splitting_given_by(std::int64_t q, std::int64_t n, const QPerm& rho);

// A Type-I splitting Z_n = P | rho(P) with mu_q-invariant P.
struct Splitting {
    std::int64_t q = 0;
    std::int64_t n = 0;
    QPerm rho;
    std::vector<std::int64_t> P;                 // sorted
    std::vector<std::vector<int>> orbit_choices; // selected coset ids per orbit
};

// Canonical splitting for rho = tau_t, t = 2^u n' with the smallest
// admissible u: every rho-orbit on the cosets has even length; the cosets
// at even offsets from each orbit's canonical start go into P.
// NoSplitting when none exists.
Splitting build_splitting(std::int64_t q, std::int64_t n);
Splitting build_splitting(std::int64_t q, std::int64_t n, const QPerm& rho);

// All splittings given by rho, in binary-counter order over the per-orbit
// alternating choices (orbit 0 least significant; choice 0 = even offsets).
// Empty when none exist; at most cap results.
std::vector<Splitting> enumerate_splittings(std::int64_t q, std::int64_t n, const QPerm& rho,
                                            std::int64_t cap = std::int64_t{1} << 16);

} // namespace isodual

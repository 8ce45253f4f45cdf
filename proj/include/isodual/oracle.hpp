#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isodual/codes.hpp"

namespace isodual {

struct OracleReport {
    std::string claim;
    std::int64_t instances_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// One JSON object per report: {"claim": ..., "instances_checked": ...,
// "failures": [...]}.
std::string report_json_line(const OracleReport& r);

// Recomputes the dual by row-reducing the generator matrix of C and
// extracting a null-space basis, then compares row spaces with the
// generator matrix of the claimed dual C_{-complement(P)}. Shares no logic
// with the set-negation route.
OracleReport oracle_dual_basis(const CyclicCode& C);

// Exhaustive search over all mu_q-invariant P (subsets of the coset list)
// and all valid (s, t) for a partition Z_n = P | rho_{s,t}(P). TooLarge
// when the coset count makes 2^m infeasible.
struct SplittingSearch {
    bool found = false;
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::vector<std::int64_t> P;
    std::int64_t pairs_checked = 0;
    std::int64_t subsets_checked = 0;
};
SplittingSearch oracle_splitting_search(std::int64_t q, std::int64_t n);

// Enumerates C and its Euclidean dual; the two weight distributions must
// be identical.
OracleReport oracle_weight_equality(const CyclicCode& C, std::int64_t bound = kEnumBound);

// The orbit-parity criterion (every rho-orbit on Z_n/mu_q has even length)
// must agree with the valuation criterion of splitting_given_by.
OracleReport oracle_orbit_parity(std::int64_t q, std::int64_t n, const QPerm& rho);

} // namespace isodual

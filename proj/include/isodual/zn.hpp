#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "isodual/error.hpp"

namespace isodual {

// nu2(0) compares greater than every finite valuation.
constexpr std::int64_t kNu2Infinity = std::numeric_limits<std::int64_t>::max();

// 2-adic valuation of m; kNu2Infinity for m = 0, and nu2(-m) = nu2(m).
std::int64_t nu2(std::int64_t m);

// The q-permutation rho_{s,t} : i |-> s(i + t) mod n on Z_n, with s a unit
// and t a q-translation (qt = t mod n). s and t are stored in [0, n).
struct QPerm {
    std::int64_t q = 0;
    std::int64_t n = 0;
    std::int64_t s = 1;
    std::int64_t t = 0;
};

// Validates and normalizes; NotUnit / NotQTranslation / NotCoprime.
QPerm qperm_make(std::int64_t q, std::int64_t n, std::int64_t s, std::int64_t t);

std::int64_t qperm_apply(const QPerm& rho, std::int64_t i);

// outer after inner: rho_{s',t'} o rho_{s,t} = rho_{s's, t + s^-1 t'}.
QPerm qperm_compose(const QPerm& outer, const QPerm& inner);

// rho_{s,t}^-1 = rho_{s^-1, -st}.
QPerm qperm_inverse(const QPerm& rho);

// q-cyclotomic cosets of Z_n: orbits of i |-> qi mod n. Each coset is sorted
// ascending; cosets are ordered by minimum element. index maps a residue to
// its coset id.
struct CosetPartition {
    std::int64_t q = 0;
    std::int64_t n = 0;
    std::vector<std::vector<std::int64_t>> cosets;
    std::vector<int> index;
};

CosetPartition cyclotomic_cosets(std::int64_t q, std::int64_t n);

// Orbits of the action of rho on the cosets. Each orbit lists coset ids in
// application order starting from the coset with the smallest minimum
// element not yet visited; orbits are ordered by that representative.
std::vector<std::vector<int>> coset_orbits(const QPerm& rho, const CosetPartition& cp);

// Image coset id of coset `id` under rho (rho commutes with mu_q, so the
// image of a coset is a coset).
int coset_image(const QPerm& rho, int id, const CosetPartition& cp);

// Whether rho fixes the coset Q setwise. Computed directly (image-set
// comparison) and through the fixed-coset criterion
//   exists k in Q, j in [0, |Q|) with (q^j - s) k = s t (mod n);
// the two routes are asserted to agree. Q must be a coset of cp.
bool coset_fixed_by(const QPerm& rho, const std::vector<std::int64_t>& Q,
                    const CosetPartition& cp);

// The two routes individually, exposed for cross-checks.
bool coset_fixed_direct(const QPerm& rho, int id, const CosetPartition& cp);
bool coset_fixed_criterion(const QPerm& rho, const std::vector<std::int64_t>& Q);

// Units of Z_n, ascending.
std::vector<std::int64_t> units_mod(std::int64_t n);

// All t in [0, n) with qt = t (mod n), ascending.
std::vector<std::int64_t> q_translations(std::int64_t q, std::int64_t n);

} // namespace isodual

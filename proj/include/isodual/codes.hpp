#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isodual/gf.hpp"
#include "isodual/polyring.hpp"
#include "isodual/splitting.hpp"

namespace isodual {

// Default cap on exhaustive codeword enumeration (q^dimension).
constexpr std::int64_t kEnumBound = std::int64_t{1} << 26;
// Enumerations larger than this report progress when asked to.
constexpr std::int64_t kProgressThreshold = std::int64_t{1} << 20;

// Semisimple cyclic code C_P over GF(q) of length n with check polynomial
// f_P and generator polynomial f_{complement(P)}; dim C_P = |P|.
struct CyclicCode {
    std::int64_t q = 0;
    std::int64_t n = 0;
    std::vector<std::int64_t> P; // sorted residues
    std::int64_t dimension = 0;
    Polynomial check_poly;
    Polynomial gen_poly;
    RootOfUnity theta;
};

// Builds C_P from a mu_q-invariant support P (set of residues mod n);
// NotInvariant otherwise. Verifies f_P * f_{complement(P)} = X^n - 1.
CyclicCode code_from_support(const RootOfUnity& theta, const std::vector<std::int64_t>& P);

// Euclidean dual: C_P^perp = C_{-complement(P)}.
CyclicCode dual_code(const CyclicCode& C);

// phi_{s,t}(C_P) = C_{rho_{s,t}(P)}.
CyclicCode isometry_image(const CyclicCode& C, std::int64_t s, std::int64_t t);

// Word-level isometry phi_{s,t}: coordinate i contributes theta^{-t i} w_i
// at position s^-1 i mod n. Weight-preserving; maps C_P onto C_{rho_{s,t}(P)}.
std::vector<FieldElement> isometry_apply_word(const std::vector<FieldElement>& w,
                                              std::int64_t s, std::int64_t t,
                                              const RootOfUnity& theta);

// Witness (s, t) with rho_{s,t}(P) = complement(P); then phi_{-s,t} maps
// C_P onto its Euclidean dual, whose check polynomial is dual_check_poly.
struct IsoSelfDualCertificate {
    std::int64_t s = 0;
    std::int64_t t = 0;
    Polynomial dual_check_poly; // f_{-complement(P)}
};

// Searches q-translations t ascending, then units s ascending, for
// rho_{s,t}(P) = complement(P). DimensionMismatch unless dim C = n/2.
std::optional<IsoSelfDualCertificate> certify_iso_self_dual(const CyclicCode& C);

// Systematic-free encoding: message(X) * gen_poly(X) mod X^n - 1.
// LengthMismatch unless |message| = dim C.
std::vector<FieldElement> encode(const CyclicCode& C, const std::vector<FieldElement>& message);

// Membership: gen_poly divides the word polynomial.
bool is_codeword(const CyclicCode& C, const std::vector<FieldElement>& w);

// Exact weight distribution (A_0..A_n) by exhaustive enumeration of all
// q^dim codewords; TooLarge beyond bound. Results are independent of the
// worker count: per-worker histograms of disjoint message classes are
// summed. workers = 0 picks the hardware concurrency.
std::vector<std::uint64_t> weight_distribution(const CyclicCode& C,
                                               std::int64_t bound = kEnumBound,
                                               int workers = 0,
                                               bool progress = false);

// Least positive weight; std::domain_error on the zero code.
std::int64_t min_distance(const CyclicCode& C, std::int64_t bound = kEnumBound,
                          int workers = 0, bool progress = false);

struct MdsCode {
    CyclicCode code;
    IsoSelfDualCertificate cert;
    std::int64_t ell = 0; // (n - 2) / 4
};

// Iso-self-dual MDS construction for q = 1 (mod 4): n = q + 1,
// P = {-(n-2)/4, ..., (n-2)/4}, parameters [q+1, (q+1)/2, (q+3)/2].
// BadResidue unless q = 1 (mod 4); NotPrimePower for bad q.
MdsCode mds_construct(std::int64_t q, const std::vector<PinCondition>& pins = {});

// GRS evaluation word (theta^(ell i) a(theta^-i))_{i=0..n-1} over GF(q^2)
// for deg a < n/2 (DegreeTooHigh otherwise).
std::vector<FieldElement> grs_codeword(const Polynomial& a, const RootOfUnity& theta,
                                       std::int64_t ell);

} // namespace isodual

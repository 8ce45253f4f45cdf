#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "isodual/error.hpp"

namespace isodual {

class FieldElement;

// Default upper bound on field sizes p^k accepted by field_build and
// root_of_unity. Keeps table construction and order factoring trivial.
constexpr std::int64_t kFieldSizeBound = std::int64_t{1} << 20;

struct FieldData {
    std::int64_t p = 0;     // prime characteristic
    std::int64_t k = 0;     // extension degree over GF(p)
    std::int64_t order = 0; // p^k
    // Monic irreducible modulus over GF(p), ascending coefficients, length
    // k+1. Empty for k == 1.
    std::vector<std::int64_t> modulus;
    // Coefficient vector of the canonical multiplicative generator, length k.
    std::vector<std::int64_t> generator;
    // Distinct prime factors of p^k - 1.
    std::vector<std::int64_t> order_factors;
};

// Immutable handle to a finite field GF(p^k) in polynomial-basis
// representation over GF(p). Copies share the underlying data.
class Field {
  public:
    Field() = default;

    std::int64_t p() const { return d_->p; }
    std::int64_t k() const { return d_->k; }
    std::int64_t order() const { return d_->order; }
    const std::vector<std::int64_t>& modulus() const { return d_->modulus; }
    const std::vector<std::int64_t>& order_factors() const { return d_->order_factors; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator() const;

    // Element from an ascending coefficient vector; entries are reduced mod p
    // and the vector is padded or truncated (high zeros only) to length k.
    FieldElement from_coeffs(std::vector<std::int64_t> coeffs) const;
    // Element from its index in [0, p^k): little-endian base-p digits.
    FieldElement from_index(std::int64_t index) const;
    // Image of the integer c under the canonical map Z -> GF(p) -> GF(p^k).
    FieldElement from_int(std::int64_t c) const;

    bool valid() const { return d_ != nullptr; }
    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

  private:
    explicit Field(std::shared_ptr<const FieldData> d) : d_(std::move(d)) {}
    std::shared_ptr<const FieldData> d_;

    friend Field field_build(std::int64_t, std::int64_t, std::int64_t);
    friend class FieldElement;
};

// Element of a Field; coefficient vector of length k with entries in [0, p).
class FieldElement {
  public:
    FieldElement() = default;

    const Field& field() const { return field_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    std::int64_t index() const; // little-endian base-p packing
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement inverse() const; // DivisionByZero on zero
    FieldElement pow(std::int64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    bool operator==(const FieldElement& other) const;
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

  private:
    FieldElement(Field f, std::vector<std::int64_t> c)
        : field_(std::move(f)), c_(std::move(c)) {}

    Field field_;
    std::vector<std::int64_t> c_;

    friend class Field;
};

// Builds GF(p^k) with the canonical modulus (lexicographically smallest monic
// irreducible of degree k over GF(p), coefficients compared low-degree-first)
// and the canonical generator (smallest lexicographic coefficient vector with
// full multiplicative order p^k - 1).
Field field_build(std::int64_t p, std::int64_t k,
                  std::int64_t size_bound = kFieldSizeBound);

// Least d >= 1 with q^d = 1 (mod n); requires gcd(q, n) = 1. n = 1 gives 1.
std::int64_t multiplicative_order(std::int64_t q, std::int64_t n);

// Subfield membership test x^q = x for x in an extension of GF(q).
bool in_base_field(const FieldElement& x, std::int64_t q);

// Constraint "theta^exponent = value" with value an integer mapped into the
// prime field.
struct PinCondition {
    std::int64_t exponent = 0;
    std::int64_t value = 0;
};

// Parses "theta^E=C" (C may be negative). Throws Errc::parse_error.
PinCondition parse_pin(const std::string& expr);
std::string format_pin(const PinCondition& pin);

// A primitive n-th root of unity theta in GF(q^d), d = multiplicative order
// of q mod n, together with the subfield tower GF(q) c= GF(q^d).
class RootOfUnity {
  public:
    const Field& base() const { return base_; }
    const Field& ext() const { return ext_; }
    std::int64_t n() const { return n_; }
    std::int64_t d() const { return d_; }
    const FieldElement& theta() const { return powers_[1 % n_]; }

    // theta^e with e taken mod n.
    const FieldElement& theta_pow(std::int64_t e) const;

    // Canonical embedding GF(q) -> GF(q^d).
    FieldElement embed(const FieldElement& x) const;
    // Partial inverse of embed; CoefficientNotInBaseField when x is outside
    // the image of GF(q).
    FieldElement project(const FieldElement& x) const;

  private:
    Field base_;
    Field ext_;
    std::int64_t n_ = 0;
    std::int64_t d_ = 0;
    std::vector<FieldElement> powers_; // theta^0 .. theta^(n-1)
    // Images of r^i (i < k) in ext as GF(p)-coefficient columns, where r is
    // the chosen root of the base modulus. Empty when base == ext.
    std::vector<std::vector<std::int64_t>> embed_cols_;

    friend RootOfUnity root_of_unity(const Field&, std::int64_t,
                                     const std::vector<PinCondition>&,
                                     std::int64_t);
};

// Canonical primitive n-th root: g^((q^d - 1)/n) for the canonical generator
// g of GF(q^d). With pins, the first theta_0^j (j in [1, n), gcd(j, n) = 1,
// ascending) satisfying every pin is chosen; PinUnsatisfiable otherwise.
RootOfUnity root_of_unity(const Field& base, std::int64_t n,
                          const std::vector<PinCondition>& pins = {},
                          std::int64_t size_bound = kFieldSizeBound);

} // namespace isodual

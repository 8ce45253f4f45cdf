#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "isodual/gf.hpp"

namespace isodual {

// Dense polynomial over a Field: ascending coefficients, no trailing zeros.
// The zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(Field f) : field_(std::move(f)) {}
    Polynomial(Field f, std::vector<FieldElement> coeffs);

    // Coefficients from integers: residues for prime fields (negatives
    // allowed), images under Z -> GF(p) in general.
    static Polynomial from_ints(const Field& f, const std::vector<std::int64_t>& ints);
    // Coefficients from element indices in [0, p^k).
    static Polynomial from_indices(const Field& f, const std::vector<std::int64_t>& indices);
    static Polynomial x_pow_minus_one(const Field& f, std::int64_t n);

    const Field& field() const { return field_; }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    FieldElement coeff(std::int64_t i) const; // zero beyond the degree
    const std::vector<FieldElement>& coeffs() const { return c_; }
    FieldElement leading() const; // DivisionByZero on zero polynomial

    FieldElement eval(const FieldElement& x) const;
    std::vector<std::int64_t> to_indices() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const FieldElement& c) const;
    Polynomial operator-() const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

  private:
    void normalize();

    Field field_;
    std::vector<FieldElement> c_;
};

// Quotient and remainder; DivisionByZero when b = 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

Polynomial monic(const Polynomial& a);

// f_Q(X) = prod_{i in Q} (X - theta^i), expanded in GF(q^d) and projected
// to GF(q); CoefficientNotInBaseField when Q is not mu_q-invariant.
Polynomial coset_polynomial(const std::vector<std::int64_t>& Q, const RootOfUnity& theta);

// f_P for a mu_q-invariant P (union of cyclotomic cosets); NotInvariant
// otherwise. P is a set of residues mod n.
Polynomial defining_polynomial(const std::vector<std::int64_t>& P, const RootOfUnity& theta);

// The isometry substitution a(X) |-> a(theta^-t X^(s^-1)) mod X^n - 1, with
// s^-1 the least positive representative. Input is reduced mod X^n - 1
// first. NotUnit / NotQTranslation on bad (s, t).
Polynomial isometry_substitute(const Polynomial& a, std::int64_t s, std::int64_t t,
                               const RootOfUnity& theta);

// f_{rho_{s,t}(P)} = monic gcd(a(theta^-t X^(s^-1)), X^n - 1) for a = f_P.
Polynomial image_defining_polynomial(const Polynomial& fP, std::int64_t s, std::int64_t t,
                                     const RootOfUnity& theta);

// (-1)^(deg a) a(-X); requires a monic (NotMonic).
Polynomial alternating(const Polynomial& a);

// a_0^-1 X^(deg a) a(1/X); requires a monic (NotMonic) with nonzero
// constant term (ZeroConstantTerm).
Polynomial monic_reciprocal(const Polynomial& a);

// Textual format: comma-separated ascending coefficients ("2,0,2,0,1").
// Prime fields read and write residues; extension fields element indices.
Polynomial parse_poly(const std::string& text, const Field& f);
std::string format_poly(const Polynomial& a);

// Display form with balanced digits {-(q-1)/2, ..., (q-1)/2} for odd prime
// fields ("X^4 - 2X^2 + 2"); extension-field coefficients print as indices.
std::string pretty_poly(const Polynomial& a);

// Lagrange interpolation: the unique polynomial of degree < |xs| through
// (xs[i], ys[i]); xs must be distinct (Mismatch).
Polynomial interpolate(const std::vector<FieldElement>& xs,
                       const std::vector<FieldElement>& ys);

} // namespace isodual

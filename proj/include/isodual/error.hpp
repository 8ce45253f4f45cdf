#pragma once

#include <stdexcept>
#include <string>

namespace isodual {

// Failure conditions carried by Error. Domain violations (bad arguments,
// unsatisfiable requests) are distinguished from math-negative results,
// which are reported through return values, not exceptions.
enum class Errc {
    non_prime_characteristic,
    not_prime_power,
    size_bound,
    not_coprime,
    pin_unsatisfiable,
    field_mismatch,
    division_by_zero,
    coefficient_not_in_base_field,
    not_invariant,
    invalid_permutation,
    not_monic,
    zero_constant_term,
    not_unit,
    not_q_translation,
    mismatch,
    no_splitting,
    dimension_mismatch,
    length_mismatch,
    too_large,
    bad_residue,
    degree_too_high,
    parse_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

} // namespace isodual

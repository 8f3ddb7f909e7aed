#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fano3 {

/// Coefficient domain for exact polynomial arithmetic: the rationals or a
/// prime field F_p. No floating point anywhere.
struct CoefficientField {
  enum class Kind { rational, prime_field };

  Kind kind = Kind::rational;
  long characteristic = 0;  // 0 for the rationals, p for F_p

  static CoefficientField rationals() { return {Kind::rational, 0}; }
  static CoefficientField prime(long p);

  bool operator==(const CoefficientField&) const = default;

  bool is_prime_field() const { return kind == Kind::prime_field; }

  /// Canonical representative: identity over Q, value mod p in [0,p) over F_p.
  mpq_class reduce(const mpq_class& c) const;

  mpq_class invert(const mpq_class& c) const;

  std::string to_string() const;
};

bool is_prime(long n);

}  // namespace fano3

#include "fano3/field.hpp"

namespace fano3 {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoefficientField CoefficientField::prime(long p) {
  if (!is_prime(p))
    throw std::invalid_argument("characteristic must be prime, got " +
                                std::to_string(p));
  return {Kind::prime_field, p};
}

mpq_class CoefficientField::reduce(const mpq_class& c) const {
  if (kind == Kind::rational) return c;
  mpq_class v = c;
  v.canonicalize();
  mpz_class num = v.get_num();
  mpz_class den = v.get_den();
  mpz_class p(characteristic);
  if (den != 1) {
    // a/b mod p = a * b^{-1} mod p
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::domain_error("denominator not invertible mod p");
    num *= dinv;
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  return mpq_class(r);
}

mpq_class CoefficientField::invert(const mpq_class& c) const {
  if (c == 0) throw std::domain_error("division by zero coefficient");
  if (kind == Kind::rational) return mpq_class(1) / c;
  mpq_class v = reduce(c);
  mpz_class p(characteristic), inv;
  mpz_class num = v.get_num();
  if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("element not invertible mod p");
  return mpq_class(inv);
}

std::string CoefficientField::to_string() const {
  return kind == Kind::rational ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
}

}  // namespace fano3

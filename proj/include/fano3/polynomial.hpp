#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fano3/field.hpp"
#include "fano3/grading.hpp"

namespace fano3 {

/// Sparse exact multivariate polynomial: a finite map from exponent vectors
/// to nonzero coefficients. The term map is ordered (lex on exponents), which
/// fixes a canonical form for equality and hashing. Immutable in spirit: all
/// operations return fresh values.
class Polynomial {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, mpq_class>;

  Polynomial() = default;
  Polynomial(Grading grading, CoefficientField field);

  static Polynomial zero(const Grading& g, const CoefficientField& k);
  static Polynomial constant(const Grading& g, const CoefficientField& k,
                             const mpq_class& c);
  static Polynomial variable(const Grading& g, const CoefficientField& k,
                             const std::string& name, int power = 1);
  static Polynomial monomial(const Grading& g, const CoefficientField& k,
                             const Exponents& exps, const mpq_class& c);

  const Grading& grading() const { return grading_; }
  const CoefficientField& field() const { return field_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  mpq_class coefficient(const Exponents& exps) const;

  void add_term(const Exponents& exps, const mpq_class& c);

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const mpq_class& c) const;
  Polynomial pow(long e) const;

  /// True iff o == c * this for some nonzero scalar c.
  bool equals_up_to_scalar(const Polynomial& o) const;

  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;

  Grading grading_;
  CoefficientField field_ = CoefficientField::rationals();
  TermMap terms_;
};

/// rows x cols matrix of polynomials over one grading/field.
struct PolynomialMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Polynomial> entries;  // row-major

  PolynomialMatrix(int r, int c, std::vector<Polynomial> e);
  const Polynomial& at(int r, int c) const { return entries[r * cols + c]; }
};

enum class RingOp { add, sub, mul, pow };

Polynomial ring_ops(const Polynomial& f, const Polynomial& g, RingOp op,
                    long pow_exponent = 0);

/// Common multidegree of all terms; throws on zero or inhomogeneous input.
Multidegree multidegree_of(const Polynomial& f);

/// Exact determinant by cofactor expansion.
Polynomial determinant(const PolynomialMatrix& m);

/// Sylvester resultant with respect to `var`; the result is free of `var`.
Polynomial resultant_univariate(const Polynomial& f, const Polynomial& g,
                                const std::string& var);

/// Discriminant b^2 - a*c of the binary quadratic form a x0^2 + 2b x0x1 + c x1^2.
Polynomial discriminant_binary_quadratic(const Polynomial& a,
                                         const Polynomial& b,
                                         const Polynomial& c);

/// Quotient f/g when g divides f exactly; throws otherwise.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

Polynomial partial_derivative(const Polynomial& f, const std::string& var);

/// All exponent vectors of the given multidegree. Throws if some variable has
/// an all-zero weight vector (the basis would be infinite).
std::vector<Polynomial::Exponents> monomial_basis(const Grading& g,
                                                  const Multidegree& d);

/// Dense form of multidegree d with nonzero coefficients drawn from a
/// deterministic stream; identical inputs give the identical polynomial.
Polynomial random_form(const Grading& g, const Multidegree& d,
                       const CoefficientField& k, std::uint64_t seed);

}  // namespace fano3

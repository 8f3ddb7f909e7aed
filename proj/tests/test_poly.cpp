#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano3/polynomial.hpp"

using namespace fano3;

namespace {
const Grading g3 = Grading::standard({"x", "y", "z"});
const CoefficientField QQ = CoefficientField::rationals();
const CoefficientField F7 = CoefficientField::prime(7);

Polynomial var(const std::string& n, const CoefficientField& k = QQ) {
  return Polynomial::variable(g3, k, n);
}
}  // namespace

TEST_CASE("constants and variables") {
  Polynomial z = Polynomial::zero(g3, QQ);
  CHECK(z.is_zero());
  Polynomial c = Polynomial::constant(g3, QQ, mpq_class(3, 2));
  CHECK(c.term_count() == 1);
  CHECK(c.coefficient({0, 0, 0}) == mpq_class(3, 2));
  Polynomial x2 = Polynomial::variable(g3, QQ, "x", 2);
  CHECK(x2.coefficient({2, 0, 0}) == 1);
  CHECK_THROWS(Polynomial::variable(g3, QQ, "w"));
}

TEST_CASE("add_term merges and drops zeros") {
  Polynomial f(g3, QQ);
  f.add_term({1, 0, 0}, mpq_class(2, 3));
  f.add_term({1, 0, 0}, mpq_class(-2, 3));
  CHECK(f.is_zero());
  f.add_term({0, 1, 0}, 0);
  CHECK(f.is_zero());
}

TEST_CASE("prime-field coefficients stay canonical") {
  Polynomial f(g3, F7);
  f.add_term({1, 0, 0}, 10);  // 10 mod 7 = 3
  CHECK(f.coefficient({1, 0, 0}) == 3);
  f.add_term({0, 0, 1}, mpq_class(1, 2));  // 1/2 = 4 mod 7
  CHECK(f.coefficient({0, 0, 1}) == 4);
  f.add_term({2, 0, 0}, 7);
  CHECK(f.coefficient({2, 0, 0}) == 0);
}

TEST_CASE("ring axioms on random forms") {
  for (const auto& k : {QQ, F7}) {
    for (std::uint64_t s = 1; s <= 4; ++s) {
      Polynomial f = random_form(g3, {2}, k, s);
      Polynomial g = random_form(g3, {3}, k, s + 100);
      Polynomial h = random_form(g3, {1}, k, s + 200);
      CHECK(f + g == g + f);
      CHECK(f * g == g * f);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h * h) == f * g + f * (h * h));
      CHECK(f - f == Polynomial::zero(g3, k));
      CHECK(f.pow(3) == f * f * f);
      CHECK(ring_ops(f, g, RingOp::mul) == f * g);
      CHECK(ring_ops(f, f, RingOp::pow, 2) == f * f);
    }
  }
}

TEST_CASE("equals_up_to_scalar") {
  Polynomial f = random_form(g3, {2}, QQ, 9);
  CHECK(f.equals_up_to_scalar(f * mpq_class(-7, 3)));
  CHECK_FALSE(f.equals_up_to_scalar(f + var("x") * var("x")));
  CHECK_FALSE(f.equals_up_to_scalar(Polynomial::zero(g3, QQ)));
}

TEST_CASE("multidegree_of") {
  Polynomial f = var("x") * var("y") + var("z") * var("z");
  CHECK(multidegree_of(f) == Multidegree{2});
  CHECK_THROWS(multidegree_of(Polynomial::zero(g3, QQ)));
  CHECK_THROWS(multidegree_of(var("x") + var("x") * var("y")));

  Grading gp = Grading::product({{"s", "t"}, {"u", "v"}});
  Polynomial bi = Polynomial::variable(gp, QQ, "s") *
                  Polynomial::variable(gp, QQ, "u") *
                  Polynomial::variable(gp, QQ, "v");
  CHECK(multidegree_of(bi) == Multidegree{1, 2});
}

TEST_CASE("determinant is alternating and multilinear") {
  Polynomial a = random_form(g3, {1}, QQ, 1), b = random_form(g3, {1}, QQ, 2);
  Polynomial c = random_form(g3, {1}, QQ, 3), d = random_form(g3, {1}, QQ, 4);
  Polynomial det = determinant(PolynomialMatrix(2, 2, {a, b, c, d}));
  CHECK(det == a * d - b * c);
  // row swap flips sign
  CHECK(determinant(PolynomialMatrix(2, 2, {c, d, a, b})) == -det);
  // repeated row vanishes
  CHECK(determinant(PolynomialMatrix(2, 2, {a, b, a, b})).is_zero());
  // 3x3 against the explicit expansion
  Polynomial e = random_form(g3, {1}, QQ, 5), f = random_form(g3, {1}, QQ, 6);
  Polynomial x = random_form(g3, {1}, QQ, 7), y = random_form(g3, {1}, QQ, 8);
  Polynomial z = random_form(g3, {1}, QQ, 9);
  Polynomial det3 =
      determinant(PolynomialMatrix(3, 3, {a, b, c, d, e, f, x, y, z}));
  CHECK(det3 == a * (e * z - f * y) - b * (d * z - f * x) +
                    c * (d * y - e * x));
}

TEST_CASE("resultant detects common roots") {
  // f = (x - y)(x - 2z), g = (x - y)(x + z): common factor => resultant 0
  Polynomial x = var("x"), y = var("y"), z = var("z");
  Polynomial f = (x - y) * (x - z * mpq_class(2));
  Polynomial g = (x - y) * (x + z);
  CHECK(resultant_univariate(f, g, "x").is_zero());
  // coprime pair: Res_x(x - y, x - 2z) = y - 2z up to sign
  Polynomial r = resultant_univariate(x - y, x - z * mpq_class(2), "x");
  CHECK(r.equals_up_to_scalar(y - z * mpq_class(2)));
  CHECK_THROWS(resultant_univariate(y, g, "x"));  // f has degree 0 in x
}

TEST_CASE("binary quadratic discriminant") {
  Polynomial a = random_form(g3, {2}, QQ, 11);
  Polynomial b = random_form(g3, {2}, QQ, 12);
  Polynomial c = random_form(g3, {2}, QQ, 13);
  CHECK(discriminant_binary_quadratic(a, b, c) == b * b - a * c);
}

TEST_CASE("exact division") {
  Polynomial f = random_form(g3, {3}, QQ, 21);
  Polynomial g = random_form(g3, {2}, QQ, 22);
  CHECK(exact_divide(f * g, g) == f);
  CHECK(exact_divide(f * g, f) == g);
  CHECK_THROWS_AS(exact_divide(f * g + var("x").pow(5), g), std::domain_error);
  CHECK_THROWS(exact_divide(f, Polynomial::zero(g3, QQ)));
  // also over a prime field
  Polynomial fp = random_form(g3, {2}, F7, 31);
  Polynomial gp = random_form(g3, {1}, F7, 32);
  CHECK(exact_divide(fp * gp, gp) == fp);
}

TEST_CASE("partial derivative and the Euler relation") {
  Polynomial f = random_form(g3, {4}, QQ, 41);
  Polynomial euler = Polynomial::zero(g3, QQ);
  for (const auto& v : g3.variables)
    euler = euler + var(v) * partial_derivative(f, v);
  CHECK(euler == f * mpq_class(4));
  CHECK(partial_derivative(Polynomial::constant(g3, QQ, 5), "x").is_zero());
}

TEST_CASE("monomial_basis counts") {
  CHECK(monomial_basis(g3, {2}).size() == 6);   // C(4,2)
  CHECK(monomial_basis(g3, {4}).size() == 15);  // C(6,2)
  Grading gp = Grading::product({{"s", "t"}, {"x", "y", "z"}});
  CHECK(monomial_basis(gp, {2, 4}).size() == 45);  // 3 * 15
  CHECK(monomial_basis(g3, {0}).size() == 1);
  // zero-weight variable would make the basis infinite
  Grading bad({"x", "y"}, 1, {{1}, {0}});
  CHECK_THROWS(monomial_basis(bad, {2}));
}

TEST_CASE("random_form is deterministic and dense") {
  Polynomial a = random_form(g3, {3}, F7, 99);
  CHECK(a == random_form(g3, {3}, F7, 99));
  CHECK(a != random_form(g3, {3}, F7, 98));
  CHECK(a.term_count() == monomial_basis(g3, {3}).size());
  CHECK(multidegree_of(a) == Multidegree{3});
}

TEST_CASE("mixed grading/field operations are rejected") {
  Grading other = Grading::standard({"x", "y"});
  Polynomial f = var("x");
  Polynomial h = Polynomial::variable(other, QQ, "x");
  CHECK_THROWS(f + h);
  CHECK_THROWS(f * Polynomial::variable(g3, F7, "x"));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano3/birat.hpp"

using namespace fano3;

namespace {
const CoefficientField QQ = CoefficientField::rationals();
}

TEST_CASE("ambient and map validation") {
  AmbientSpec p3 = AmbientSpec::make({{"x0", "x1", "x2", "x3"}});
  CHECK(p3.dims == std::vector<int>{3});
  AmbientSpec prod = AmbientSpec::make({{"s", "t"}, {"x", "y", "z"}});
  CHECK(prod.dims == std::vector<int>{1, 2});
  CHECK(prod.grading.axes == 2);

  AmbientSpec p1 = AmbientSpec::make({{"u", "v"}});
  auto x = [&](const std::string& n) {
    return Polynomial::variable(p3.grading, QQ, n);
  };
  // wrong tuple size for the P^1 target
  CHECK_THROWS(RationalMapSpec(p3, p1, {{x("x0")}}));
  // mixed degrees in one tuple
  CHECK_THROWS(RationalMapSpec(p3, p1, {{x("x0"), x("x1") * x("x2")}}));
  // all-zero tuple
  CHECK_THROWS(RationalMapSpec(
      p3, p1,
      {{Polynomial::zero(p3.grading, QQ), Polynomial::zero(p3.grading, QQ)}}));
  RationalMapSpec ok(p3, p1, {{x("x0"), x("x1")}});
  CHECK(ok.induced_degree({3}) == Multidegree{3});
}

TEST_CASE("pullback is a ring map") {
  RationalMapSpec m = maps::two_point_projection();
  auto f = random_form(m.target.grading, {1, 1}, QQ, 3);
  auto g = random_form(m.target.grading, {1, 0}, QQ, 4);
  CHECK(pullback(m, f * g) == pullback(m, f) * pullback(m, g));
  CHECK(pullback(m, f + f) == pullback(m, f) * mpq_class(2));
  CHECK(m.induced_degree({1, 1}) == Multidegree{2});
  CHECK(m.induced_degree({2, 2}) == Multidegree{4});
}

TEST_CASE("rational rank") {
  CHECK(rational_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(rational_rank({{1, 0}, {0, 1}, {1, 1}}) == 2);
  CHECK(rational_rank({{0, 0, 0}}) == 0);
  CHECK(rational_rank({{mpq_class(1, 2), 1}, {1, 3}}) == 2);
}

TEST_CASE("pullback kernels of the catalog maps") {
  // the (1,1) kernel of the two-point projection is spanned by the flag form
  CHECK(pullback_kernel_dim(maps::two_point_projection(), {1, 1}) == 1);
  CHECK(pullback_kernel_dim(maps::two_point_projection(), {1, 0}) == 0);
  CHECK(pullback_kernel_dim(maps::id_cross_cremona(), {2, 2, 2}) == 0);
  CHECK(pullback_kernel_dim(maps::trilinear(), {1, 1, 1}) == 0);
}

TEST_CASE("linear condition sets") {
  AmbientSpec p3 = AmbientSpec::make({{"x0", "x1", "x2", "x3"}});
  LinearConditionSet two(p3, {4});
  two.add_node({1, 0, 0, 0});
  two.add_node({0, 1, 0, 0});
  CHECK(two.condition_rows().size() == 8);
  CHECK(constrained_form_space_dim(two) == 27);

  LinearConditionSet three(p3, {4});
  three.add_node({1, 0, 0, 0});
  three.add_node({0, 1, 0, 0});
  three.add_node({0, 0, 1, 0});
  CHECK(constrained_form_space_dim(three) == 23);

  // samples satisfy every condition
  Polynomial q = sample_constrained_form(three, 11);
  CHECK_FALSE(q.is_zero());
  for (const auto& n : {std::vector<mpq_class>{1, 0, 0, 0},
                        std::vector<mpq_class>{0, 1, 0, 0},
                        std::vector<mpq_class>{0, 0, 1, 0}}) {
    for (const auto& v : p3.grading.variables) {
      Polynomial d = partial_derivative(q, v);
      mpq_class val = 0;
      for (const auto& [e, c] : d.terms()) {
        mpq_class term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
          for (int rep = 0; rep < e[i]; ++rep) term *= n[i];
        val += term;
      }
      CHECK(val == 0);
    }
  }

  // over-constrained: a linear form with a node is identically zero
  LinearConditionSet overcon(p3, {1});
  overcon.add_node({1, 1, 1, 1});
  CHECK(constrained_form_space_dim(overcon) == 0);
  CHECK_THROWS(sample_constrained_form(overcon, 1));
}

TEST_CASE("vanishing along coordinate loci") {
  AmbientSpec amb = AmbientSpec::make({{"s", "t"}, {"x", "y", "z"}});
  LinearConditionSet cond(amb, {2, 4});
  using Opt = std::optional<mpq_class>;
  cond.add_vanishing({"x", "y", "z"},
                     {Opt{}, Opt{}, Opt{1}, Opt{0}, Opt{0}});
  cond.add_vanishing({"x", "y", "z"},
                     {Opt{}, Opt{}, Opt{0}, Opt{1}, Opt{0}});
  CHECK(constrained_form_space_dim(cond) == 27);
}

TEST_CASE("model transfer: nodal quartics move, smooth quartics do not") {
  RationalMapSpec proj = maps::two_point_projection();
  AmbientSpec p3 = proj.source;
  LinearConditionSet two(p3, {4});
  two.add_node({1, 0, 0, 0});
  two.add_node({0, 1, 0, 0});
  for (std::uint64_t s = 0; s < 3; ++s) {
    Polynomial nodal = sample_constrained_form(two, 50 + s);
    CHECK(model_transfer_solvable(proj, {2, 2}, nodal, std::nullopt));
    Polynomial smooth = random_form(p3.grading, {4}, QQ, 70 + s);
    CHECK_FALSE(model_transfer_solvable(proj, {2, 2}, smooth, std::nullopt));
  }
  // degree bookkeeping must match: a (1,1) target cannot carry a quartic
  CHECK_THROWS(model_transfer_solvable(proj, {1, 1},
                                       random_form(p3.grading, {4}, QQ, 1),
                                       std::nullopt));
}

TEST_CASE("trilinear transfer needs the cofactor") {
  RationalMapSpec tri = maps::trilinear();
  LinearConditionSet three(tri.source, {4});
  three.add_node({1, 0, 0, 0});
  three.add_node({0, 1, 0, 0});
  three.add_node({0, 0, 1, 0});
  Polynomial nodal = sample_constrained_form(three, 91);
  CHECK(model_transfer_solvable(tri, {2, 2, 2}, nodal, Multidegree{2}));
  Polynomial smooth = random_form(tri.source.grading, {4}, QQ, 92);
  CHECK_FALSE(model_transfer_solvable(tri, {2, 2, 2}, smooth, Multidegree{2}));
}

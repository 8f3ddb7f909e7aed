#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fano3/polynomial.hpp"

namespace fano3 {

/// Finitely presented graded ring modeling a Chow ring. Every relation has
/// rewriting shape: its canonical leading monomial rewrites to lower-order
/// terms (h^2 -> 0, xi^5 -> 4 xi^4 h, ...), so reduction terminates and gives
/// a unique normal form.
class RingPresentation {
 public:
  RingPresentation(std::string name, std::vector<std::string> generators,
                   std::vector<Polynomial> relations, int dimension,
                   Polynomial::Exponents point_class,
                   Polynomial canonical_class);

  const std::string& name() const { return name_; }
  const Grading& grading() const { return grading_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  int dimension() const { return dimension_; }
  const Polynomial::Exponents& point_class() const { return point_class_; }
  const Polynomial& canonical_class() const { return canonical_class_; }

  Polynomial normal_form(const Polynomial& f) const;

  Polynomial poly(const std::string& expr_var, int power = 1) const;
  Polynomial zero() const;
  Polynomial constant(long c) const;

  bool operator==(const RingPresentation& o) const;

 private:
  std::string name_;
  Grading grading_;
  std::vector<Polynomial> relations_;
  // lead exponent -> replacement tail (lead minus relation, sign-adjusted)
  std::vector<std::pair<Polynomial::Exponents, Polynomial>> rewrites_;
  int dimension_ = 0;
  Polynomial::Exponents point_class_;
  Polynomial canonical_class_;
};

/// A ring element kept in normal form with respect to its presentation.
class ChowClass {
 public:
  ChowClass(const RingPresentation& pres, const Polynomial& value);

  const RingPresentation& presentation() const { return *pres_; }
  const Polynomial& value() const { return value_; }

  ChowClass operator+(const ChowClass& o) const;
  ChowClass operator-(const ChowClass& o) const;
  ChowClass operator*(const ChowClass& o) const;
  ChowClass operator*(long c) const;
  bool operator==(const ChowClass& o) const;

 private:
  const RingPresentation* pres_;
  Polynomial value_;
};

/// Coefficient of the point class after full reduction; the class must be
/// homogeneous of top codimension.
long degree(const RingPresentation& pres, const ChowClass& c);

/// degree(a * b) for curve classes on a surface presentation.
long intersection_number(const RingPresentation& surface, const ChowClass& a,
                         const ChowClass& b);

/// Arithmetic genus 1 + (d^2 + d.K)/2 of a curve class on a surface.
long adjunction_genus(const RingPresentation& surface, const ChowClass& d);

nlohmann::json presentation_to_json(const RingPresentation& p);
RingPresentation presentation_from_json(const nlohmann::json& j);

/// The fixed catalog of ambient presentations.
namespace presentations {
RingPresentation hirzebruch_f1();       // F_1: xi^2 = -xi f, f^2 = 0
RingPresentation quadric_surface();     // F_0 = P^1 x P^1
RingPresentation projective_plane();    // P^2
RingPresentation height22_bundle();     // P(V^*) over P^1: xi^5 = 4 xi^4 h
RingPresentation blown_up_veronese();   // P(O + O(-2)) over P^2
}  // namespace presentations

}  // namespace fano3

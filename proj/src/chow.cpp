#include "fano3/chow.hpp"

#include <nlohmann/json.hpp>

namespace fano3 {

RingPresentation::RingPresentation(std::string name,
                                   std::vector<std::string> generators,
                                   std::vector<Polynomial> relations,
                                   int dimension,
                                   Polynomial::Exponents point_class,
                                   Polynomial canonical_class)
    : name_(std::move(name)),
      grading_(Grading::standard(std::move(generators))),
      relations_(std::move(relations)),
      dimension_(dimension),
      point_class_(std::move(point_class)),
      canonical_class_(std::move(canonical_class)) {
  if (point_class_.size() != grading_.num_variables())
    throw std::invalid_argument("point class length mismatch");
  for (const auto& rel : relations_) {
    if (rel.is_zero()) throw std::invalid_argument("zero relation");
    if (rel.grading() != grading_)
      throw std::invalid_argument("relation grading mismatch");
    // Leading term in the canonical order rewrites to minus the tail.
    const auto& lead = *rel.terms().rbegin();
    Polynomial tail = Polynomial::monomial(grading_, rel.field(), lead.first,
                                           lead.second) -
                      rel;
    mpq_class inv = rel.field().invert(lead.second);
    rewrites_.emplace_back(lead.first, tail * inv);
  }
}

namespace {

bool divides(const Polynomial::Exponents& head, const Polynomial::Exponents& e) {
  for (std::size_t i = 0; i < head.size(); ++i)
    if (e[i] < head[i]) return false;
  return true;
}

}  // namespace

Polynomial RingPresentation::normal_form(const Polynomial& f) const {
  Polynomial cur = f;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [e, c] : cur.terms()) {
      for (const auto& [head, repl] : rewrites_) {
        if (!divides(head, e)) continue;
        Polynomial::Exponents quot(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) quot[i] = e[i] - head[i];
        Polynomial t = Polynomial::monomial(grading_, cur.field(), quot, c);
        cur = cur - Polynomial::monomial(grading_, cur.field(), e, c) + t * repl;
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return cur;
}

Polynomial RingPresentation::poly(const std::string& var, int power) const {
  return Polynomial::variable(grading_, CoefficientField::rationals(), var,
                              power);
}

Polynomial RingPresentation::zero() const {
  return Polynomial::zero(grading_, CoefficientField::rationals());
}

Polynomial RingPresentation::constant(long c) const {
  return Polynomial::constant(grading_, CoefficientField::rationals(), c);
}

bool RingPresentation::operator==(const RingPresentation& o) const {
  return name_ == o.name_ && grading_ == o.grading_ &&
         relations_ == o.relations_ && dimension_ == o.dimension_ &&
         point_class_ == o.point_class_ &&
         canonical_class_ == o.canonical_class_;
}

ChowClass::ChowClass(const RingPresentation& pres, const Polynomial& value)
    : pres_(&pres), value_(pres.normal_form(value)) {}

ChowClass ChowClass::operator+(const ChowClass& o) const {
  return ChowClass(*pres_, value_ + o.value_);
}

ChowClass ChowClass::operator-(const ChowClass& o) const {
  return ChowClass(*pres_, value_ - o.value_);
}

ChowClass ChowClass::operator*(const ChowClass& o) const {
  return ChowClass(*pres_, value_ * o.value_);
}

ChowClass ChowClass::operator*(long c) const {
  return ChowClass(*pres_, value_ * mpq_class(c));
}

bool ChowClass::operator==(const ChowClass& o) const {
  return pres_ == o.pres_ && value_ == o.value_;
}

long degree(const RingPresentation& pres, const ChowClass& c) {
  const Polynomial& nf = c.value();
  if (nf.is_zero()) return 0;
  Multidegree d = multidegree_of(nf);  // throws if inhomogeneous
  if (d[0] != pres.dimension())
    throw std::domain_error("class is not of top codimension");
  long coeff = 0;
  bool seen = false;
  for (const auto& [e, cc] : nf.terms()) {
    if (e != pres.point_class())
      throw std::domain_error(
          "class does not reduce to a multiple of the point class");
    if (cc.get_den() != 1)
      throw std::domain_error("non-integer point-class multiple");
    coeff = static_cast<long>(cc.get_num().get_si());
    seen = true;
  }
  return seen ? coeff : 0;
}

long intersection_number(const RingPresentation& surface, const ChowClass& a,
                         const ChowClass& b) {
  if (surface.dimension() != 2)
    throw std::domain_error("intersection numbers need a surface presentation");
  return degree(surface, a * b);
}

long adjunction_genus(const RingPresentation& surface, const ChowClass& d) {
  if (surface.dimension() != 2)
    throw std::domain_error("adjunction genus needs a surface presentation");
  ChowClass k(surface, surface.canonical_class());
  long self = intersection_number(surface, d, d);
  long dk = intersection_number(surface, d, k);
  long twice = self + dk;
  if (twice % 2 != 0)
    throw std::domain_error("d.(d+K) is odd; genus is not an integer");
  return 1 + twice / 2;
}

namespace {

nlohmann::json poly_to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"exponents", e}, {"coefficient", c.get_str()}});
  return terms;
}

Polynomial poly_from_json(const Grading& g, const nlohmann::json& j) {
  Polynomial p(g, CoefficientField::rationals());
  for (const auto& t : j)
    p.add_term(t.at("exponents").get<std::vector<int>>(),
               mpq_class(t.at("coefficient").get<std::string>()));
  return p;
}

}  // namespace

nlohmann::json presentation_to_json(const RingPresentation& p) {
  nlohmann::json j;
  j["name"] = p.name();
  j["generators"] = p.grading().variables;
  j["dimension"] = p.dimension();
  j["point_class"] = p.point_class();
  j["canonical_class"] = poly_to_json(p.canonical_class());
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : p.relations()) rels.push_back(poly_to_json(r));
  j["relations"] = rels;
  return j;
}

RingPresentation presentation_from_json(const nlohmann::json& j) {
  auto gens = j.at("generators").get<std::vector<std::string>>();
  Grading g = Grading::standard(gens);
  std::vector<Polynomial> rels;
  for (const auto& r : j.at("relations")) rels.push_back(poly_from_json(g, r));
  return RingPresentation(j.at("name").get<std::string>(), gens, rels,
                          j.at("dimension").get<int>(),
                          j.at("point_class").get<std::vector<int>>(),
                          poly_from_json(g, j.at("canonical_class")));
}

namespace presentations {

namespace {
Polynomial lin(const Grading& g, std::vector<std::pair<long, std::string>> c) {
  Polynomial p(g, CoefficientField::rationals());
  for (auto& [a, v] : c)
    p = p + Polynomial::variable(g, CoefficientField::rationals(), v) *
                mpq_class(a);
  return p;
}
}  // namespace

RingPresentation hirzebruch_f1() {
  Grading g = Grading::standard({"xi", "f"});
  auto Q = CoefficientField::rationals();
  auto xi = Polynomial::variable(g, Q, "xi");
  auto f = Polynomial::variable(g, Q, "f");
  // xi^2 = -xi f (xi is the (-1)-curve), f^2 = 0, point = xi f
  return RingPresentation("F1", {"xi", "f"}, {xi * xi + xi * f, f * f}, 2,
                          {1, 1}, lin(g, {{-2, "xi"}, {-3, "f"}}));
}

RingPresentation quadric_surface() {
  Grading g = Grading::standard({"a", "b"});
  auto Q = CoefficientField::rationals();
  auto a = Polynomial::variable(g, Q, "a");
  auto b = Polynomial::variable(g, Q, "b");
  return RingPresentation("F0", {"a", "b"}, {a * a, b * b}, 2, {1, 1},
                          lin(g, {{-2, "a"}, {-2, "b"}}));
}

RingPresentation projective_plane() {
  Grading g = Grading::standard({"H"});
  auto Q = CoefficientField::rationals();
  auto H = Polynomial::variable(g, Q, "H");
  return RingPresentation("P2", {"H"}, {H * H * H}, 2, {2},
                          lin(g, {{-3, "H"}}));
}

RingPresentation height22_bundle() {
  Grading g = Grading::standard({"xi", "h"});
  auto Q = CoefficientField::rationals();
  auto xi = Polynomial::variable(g, Q, "xi");
  auto h = Polynomial::variable(g, Q, "h");
  // Z[xi,h]/(h^2, xi^5 - 4 xi^4 h), point class xi^4 h.
  return RingPresentation("P(V*)/P1", {"xi", "h"},
                          {h * h, xi.pow(5) - xi.pow(4) * h * mpq_class(4)}, 5,
                          {4, 1}, lin(g, {{-5, "xi"}, {2, "h"}}));
}

RingPresentation blown_up_veronese() {
  Grading g = Grading::standard({"xi", "h"});
  auto Q = CoefficientField::rationals();
  auto xi = Polynomial::variable(g, Q, "xi");
  auto h = Polynomial::variable(g, Q, "h");
  // P(O + O(-2)) over P^2: xi^2 = 2 xi h, h^3 = 0, point class xi h^2.
  return RingPresentation("P(O+O(-2))/P2", {"xi", "h"},
                          {xi * xi - xi * h * mpq_class(2), h * h * h}, 3,
                          {1, 2}, lin(g, {{-2, "xi"}, {-1, "h"}}));
}

}  // namespace presentations

}  // namespace fano3

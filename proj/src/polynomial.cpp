#include "fano3/polynomial.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace fano3 {

Polynomial::Polynomial(Grading grading, CoefficientField field)
    : grading_(std::move(grading)), field_(field) {}

Polynomial Polynomial::zero(const Grading& g, const CoefficientField& k) {
  return Polynomial(g, k);
}

Polynomial Polynomial::constant(const Grading& g, const CoefficientField& k,
                                const mpq_class& c) {
  Polynomial f(g, k);
  f.add_term(Exponents(g.num_variables(), 0), c);
  return f;
}

Polynomial Polynomial::variable(const Grading& g, const CoefficientField& k,
                                const std::string& name, int power) {
  const int i = g.index_of(name);
  if (i < 0) throw std::invalid_argument("unknown variable " + name);
  Polynomial f(g, k);
  Exponents e(g.num_variables(), 0);
  e[i] = power;
  f.add_term(e, 1);
  return f;
}

Polynomial Polynomial::monomial(const Grading& g, const CoefficientField& k,
                                const Exponents& exps, const mpq_class& c) {
  Polynomial f(g, k);
  f.add_term(exps, c);
  return f;
}

mpq_class Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void Polynomial::add_term(const Exponents& exps, const mpq_class& c) {
  if (exps.size() != grading_.num_variables())
    throw std::invalid_argument("exponent vector length mismatch");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("negative exponent");
  mpq_class v = field_.reduce(c);
  if (v == 0) return;
  auto [it, inserted] = terms_.emplace(exps, v);
  if (!inserted) {
    it->second = field_.reduce(it->second + v);
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::operator==(const Polynomial& o) const {
  return grading_ == o.grading_ && field_ == o.field_ && terms_ == o.terms_;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (grading_ != o.grading_) throw std::invalid_argument("grading mismatch");
  if (field_ != o.field_) throw std::invalid_argument("field mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(grading_, field_);
  for (const auto& [e, c] : terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(grading_, field_);
  const std::size_t n = grading_.num_variables();
  Exponents sum(n);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < n; ++i) sum[i] = ea[i] + eb[i];
      r.add_term(sum, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const mpq_class& c) const {
  Polynomial r(grading_, field_);
  for (const auto& [e, cc] : terms_) r.add_term(e, cc * c);
  return r;
}

Polynomial Polynomial::pow(long e) const {
  if (e < 0) throw std::invalid_argument("pow with negative exponent");
  Polynomial r = constant(grading_, field_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

bool Polynomial::equals_up_to_scalar(const Polynomial& o) const {
  if (grading_ != o.grading_ || field_ != o.field_) return false;
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (terms_.size() != o.terms_.size()) return false;
  // Ratio of the canonical leading coefficients must match every term.
  const auto& lead = *terms_.rbegin();
  auto it = o.terms_.find(lead.first);
  if (it == o.terms_.end()) return false;
  mpq_class scale = field_.reduce(it->second * field_.invert(lead.second));
  for (const auto& [e, c] : terms_) {
    auto jt = o.terms_.find(e);
    if (jt == o.terms_.end()) return false;
    if (field_.reduce(c * scale) != jt->second) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Print descending in the canonical order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const mpq_class& c = it->second;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    mpq_class a = abs(c);
    bool has_vars = false;
    for (int e : it->first)
      if (e > 0) has_vars = true;
    if (a != 1 || !has_vars) out << a.get_str();
    bool star = (a != 1);
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      if (star) out << "*";
      out << grading_.variables[i];
      if (it->first[i] > 1) out << "^" << it->first[i];
      star = true;
    }
  }
  return out.str();
}

PolynomialMatrix::PolynomialMatrix(int r, int c, std::vector<Polynomial> e)
    : rows(r), cols(c), entries(std::move(e)) {
  if (r <= 0 || c <= 0) throw std::invalid_argument("matrix dims must be positive");
  if (entries.size() != static_cast<std::size_t>(r) * c)
    throw std::invalid_argument("rows*cols entries required");
  for (const auto& p : entries)
    if (p.grading() != entries.front().grading() ||
        p.field() != entries.front().field())
      throw std::invalid_argument("matrix entries must share grading and field");
}

Polynomial ring_ops(const Polynomial& f, const Polynomial& g, RingOp op,
                    long pow_exponent) {
  switch (op) {
    case RingOp::add: return f + g;
    case RingOp::sub: return f - g;
    case RingOp::mul: return f * g;
    case RingOp::pow: return f.pow(pow_exponent);
  }
  throw std::invalid_argument("unknown ring op");
}

Multidegree multidegree_of(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("multidegree of zero polynomial");
  Multidegree d;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Multidegree t = f.grading().degree_of_exponents(e);
    if (first) {
      d = t;
      first = false;
    } else if (t != d) {
      throw std::domain_error("polynomial is not homogeneous for its grading");
    }
  }
  return d;
}

namespace {

Polynomial det_rec(const PolynomialMatrix& m, std::vector<int> rows,
                   std::vector<int> cols) {
  const auto& g = m.entries.front().grading();
  const auto& k = m.entries.front().field();
  if (rows.size() == 1) return m.at(rows[0], cols[0]);
  Polynomial acc = Polynomial::zero(g, k);
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Polynomial& pivot = m.at(rows[0], cols[j]);
    if (pivot.is_zero()) continue;
    std::vector<int> sub_cols;
    for (std::size_t l = 0; l < cols.size(); ++l)
      if (l != j) sub_cols.push_back(cols[l]);
    Polynomial minor = det_rec(m, sub_rows, sub_cols);
    Polynomial term = pivot * minor;
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

Polynomial determinant(const PolynomialMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  std::vector<int> idx(m.rows);
  for (int i = 0; i < m.rows; ++i) idx[i] = i;
  return det_rec(m, idx, idx);
}

namespace {

// f as a polynomial in `var` with Polynomial coefficients.
std::vector<Polynomial> coefficients_in(const Polynomial& f, int vi) {
  int deg = 0;
  for (const auto& [e, c] : f.terms()) deg = std::max(deg, e[vi]);
  std::vector<Polynomial> coeffs(
      deg + 1, Polynomial::zero(f.grading(), f.field()));
  for (const auto& [e, c] : f.terms()) {
    Polynomial::Exponents rest = e;
    const int d = rest[vi];
    rest[vi] = 0;
    coeffs[d].add_term(rest, c);
  }
  return coeffs;
}

}  // namespace

Polynomial resultant_univariate(const Polynomial& f, const Polynomial& g,
                                const std::string& var) {
  if (f.grading() != g.grading() || f.field() != g.field())
    throw std::invalid_argument("grading/field mismatch");
  const int vi = f.grading().index_of(var);
  if (vi < 0) throw std::invalid_argument("unknown variable " + var);
  auto fc = coefficients_in(f, vi);
  auto gc = coefficients_in(g, vi);
  const int m = static_cast<int>(fc.size()) - 1;
  const int n = static_cast<int>(gc.size()) - 1;
  if (m < 1 || n < 1)
    throw std::domain_error("resultant requires positive degree in " + var);
  const int size = m + n;
  std::vector<Polynomial> entries(
      static_cast<std::size_t>(size) * size,
      Polynomial::zero(f.grading(), f.field()));
  // n shifted rows of f's coefficients, then m rows of g's.
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) entries[r * size + r + j] = fc[m - j];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) entries[(n + r) * size + r + j] = gc[n - j];
  return determinant(PolynomialMatrix(size, size, std::move(entries)));
}

Polynomial discriminant_binary_quadratic(const Polynomial& a,
                                         const Polynomial& b,
                                         const Polynomial& c) {
  return b * b - a * c;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (f.grading() != g.grading() || f.field() != g.field())
    throw std::invalid_argument("grading/field mismatch");
  const auto& field = f.field();
  const std::size_t n = f.grading().num_variables();
  Polynomial q(f.grading(), field);
  Polynomial r = f;
  const auto& glead = *g.terms().rbegin();  // leading term in the canonical order
  mpq_class ginv = field.invert(glead.second);
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().rbegin();
    Polynomial::Exponents quot(n);
    for (std::size_t i = 0; i < n; ++i) {
      quot[i] = rlead.first[i] - glead.first[i];
      if (quot[i] < 0)
        throw std::domain_error("polynomial does not divide exactly");
    }
    mpq_class coeff = field.reduce(rlead.second * ginv);
    Polynomial t = Polynomial::monomial(f.grading(), field, quot, coeff);
    q = q + t;
    r = r - t * g;
  }
  return q;
}

Polynomial partial_derivative(const Polynomial& f, const std::string& var) {
  const int vi = f.grading().index_of(var);
  if (vi < 0) throw std::invalid_argument("unknown variable " + var);
  Polynomial r(f.grading(), f.field());
  for (const auto& [e, c] : f.terms()) {
    if (e[vi] == 0) continue;
    Polynomial::Exponents d = e;
    d[vi] -= 1;
    r.add_term(d, c * e[vi]);
  }
  return r;
}

namespace {

void enumerate_basis(const Grading& g, Multidegree rem, std::size_t var,
                     Polynomial::Exponents& current,
                     std::vector<Polynomial::Exponents>& out) {
  if (var == g.num_variables()) {
    for (long x : rem)
      if (x != 0) return;
    out.push_back(current);
    return;
  }
  const Multidegree& w = g.weights[var];
  long bound = -1;  // -1 = unbounded
  for (int a = 0; a < g.axes; ++a) {
    if (w[a] > 0) {
      long b = rem[a] / w[a];
      bound = bound < 0 ? b : std::min(bound, b);
    }
  }
  if (bound < 0)
    throw std::domain_error("variable " + g.variables[var] +
                            " has zero weight; monomial basis is infinite");
  for (long e = 0; e <= bound; ++e) {
    current[var] = static_cast<int>(e);
    Multidegree next = rem;
    for (int a = 0; a < g.axes; ++a) next[a] -= e * w[a];
    enumerate_basis(g, next, var + 1, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Polynomial::Exponents> monomial_basis(const Grading& g,
                                                  const Multidegree& d) {
  if (static_cast<int>(d.size()) != g.axes)
    throw std::invalid_argument("multidegree length must equal axes");
  for (long x : d)
    if (x < 0) throw std::invalid_argument("negative multidegree");
  std::vector<Polynomial::Exponents> out;
  Polynomial::Exponents cur(g.num_variables(), 0);
  enumerate_basis(g, d, 0, cur, out);
  return out;
}

Polynomial random_form(const Grading& g, const Multidegree& d,
                       const CoefficientField& k, std::uint64_t seed) {
  auto basis = monomial_basis(g, d);
  if (basis.empty()) throw std::domain_error("empty monomial basis");
  std::mt19937_64 rng(seed);
  Polynomial f(g, k);
  for (const auto& e : basis) {
    mpq_class c;
    if (k.is_prime_field()) {
      c = mpq_class(static_cast<long>(1 + rng() % (k.characteristic - 1)));
    } else {
      long v = static_cast<long>(1 + rng() % 9);
      if (rng() % 2) v = -v;
      c = mpq_class(v);
    }
    f.add_term(e, c);
  }
  return f;
}

}  // namespace fano3

#include "fano3/birat.hpp"

#include <algorithm>
#include <random>

#include <nlohmann/json.hpp>

namespace fano3 {

AmbientSpec AmbientSpec::make(
    const std::vector<std::vector<std::string>>& blocks) {
  AmbientSpec s;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty factor block");
    s.dims.push_back(static_cast<int>(b.size()) - 1);
  }
  s.grading = Grading::product(blocks);
  return s;
}

RationalMapSpec::RationalMapSpec(AmbientSpec src, AmbientSpec tgt,
                                 std::vector<std::vector<Polynomial>> comps)
    : source(std::move(src)), target(std::move(tgt)),
      components(std::move(comps)) {
  if (components.size() != static_cast<std::size_t>(target.factors()))
    throw std::invalid_argument("one component tuple per target factor");
  for (int f = 0; f < target.factors(); ++f) {
    const auto& tuple = components[f];
    if (static_cast<int>(tuple.size()) != target.dims[f] + 1)
      throw std::invalid_argument("component tuple size mismatch");
    std::optional<Multidegree> common;
    bool any_nonzero = false;
    for (const auto& p : tuple) {
      if (p.grading() != source.grading)
        throw std::invalid_argument("component form not over the source");
      if (p.is_zero()) continue;
      any_nonzero = true;
      Multidegree d = multidegree_of(p);
      if (common && *common != d)
        throw std::invalid_argument("component forms of unequal multidegree");
      common = d;
    }
    if (!any_nonzero)
      throw std::invalid_argument("all component forms are zero");
  }
}

namespace {

Multidegree component_degree(const RationalMapSpec& m, int factor) {
  for (const auto& p : m.components[factor])
    if (!p.is_zero()) return multidegree_of(p);
  throw std::logic_error("unreachable: zero component tuple");
}

}  // namespace

Multidegree RationalMapSpec::induced_degree(const Multidegree& d) const {
  if (static_cast<int>(d.size()) != target.factors())
    throw std::invalid_argument("multidegree length mismatch");
  Multidegree out(source.grading.axes, 0);
  for (int f = 0; f < target.factors(); ++f) {
    Multidegree cd = component_degree(*this, f);
    for (int a = 0; a < source.grading.axes; ++a) out[a] += d[f] * cd[a];
  }
  return out;
}

Polynomial pullback(const RationalMapSpec& map, const Polynomial& f) {
  if (f.grading() != map.target.grading)
    throw std::invalid_argument("form is not over the target ambient");
  if (!f.is_zero()) multidegree_of(f);  // homogeneity check
  const auto& field = f.field();
  Polynomial out(map.source.grading, field);
  // flat list of component forms aligned with target variables
  std::vector<const Polynomial*> comp;
  for (const auto& tuple : map.components)
    for (const auto& p : tuple) comp.push_back(&p);
  for (const auto& [e, c] : f.terms()) {
    Polynomial term = Polynomial::constant(map.source.grading, field, c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) term = term * comp[v]->pow(e[v]);
    out = out + term;
  }
  return out;
}

long rational_rank(std::vector<std::vector<mpq_class>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  long rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
    std::size_t piv = row;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[row], rows[piv]);
    mpq_class inv = mpq_class(1) / rows[row][col];
    for (std::size_t c = col; c < cols; ++c) rows[row][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == row || rows[r][col] == 0) continue;
      mpq_class f = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

// columns = pullbacks of the target monomial basis, rows = source monomials
struct PullbackMatrix {
  std::vector<Polynomial::Exponents> target_basis;
  std::vector<Polynomial::Exponents> source_basis;
  std::vector<std::vector<mpq_class>> rows;  // |source_basis| x |target_basis|
};

PullbackMatrix pullback_matrix(const RationalMapSpec& map,
                               const Multidegree& d) {
  PullbackMatrix pm;
  pm.target_basis = monomial_basis(map.target.grading, d);
  if (pm.target_basis.empty()) throw std::domain_error("empty monomial basis");
  pm.source_basis =
      monomial_basis(map.source.grading, map.induced_degree(d));
  std::map<Polynomial::Exponents, std::size_t> index;
  for (std::size_t i = 0; i < pm.source_basis.size(); ++i)
    index[pm.source_basis[i]] = i;
  pm.rows.assign(pm.source_basis.size(),
                 std::vector<mpq_class>(pm.target_basis.size(), 0));
  auto Q = CoefficientField::rationals();
  for (std::size_t j = 0; j < pm.target_basis.size(); ++j) {
    Polynomial mono =
        Polynomial::monomial(map.target.grading, Q, pm.target_basis[j], 1);
    Polynomial pb = pullback(map, mono);
    for (const auto& [e, c] : pb.terms()) pm.rows[index.at(e)][j] = c;
  }
  return pm;
}

}  // namespace

long pullback_kernel_dim(const RationalMapSpec& map, const Multidegree& d) {
  PullbackMatrix pm = pullback_matrix(map, d);
  return static_cast<long>(pm.target_basis.size()) - rational_rank(pm.rows);
}

bool model_transfer_solvable(
    const RationalMapSpec& map, const Multidegree& target_degree,
    const Polynomial& q,
    const std::optional<Multidegree>& cofactor_degree) {
  if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
  if (q.grading() != map.source.grading)
    throw std::invalid_argument("q is not over the source ambient");
  Multidegree induced = map.induced_degree(target_degree);
  Multidegree dq = multidegree_of(q);
  Multidegree expect = dq;
  std::vector<Polynomial::Exponents> cof_basis;
  if (cofactor_degree) {
    for (std::size_t a = 0; a < expect.size(); ++a)
      expect[a] += (*cofactor_degree)[a];
    cof_basis = monomial_basis(map.source.grading, *cofactor_degree);
  }
  if (expect != induced)
    throw std::invalid_argument(
        "degree incompatibility: pullback degree != deg(q) + deg(cofactor)");

  PullbackMatrix pm = pullback_matrix(map, target_degree);
  std::map<Polynomial::Exponents, std::size_t> index;
  for (std::size_t i = 0; i < pm.source_basis.size(); ++i)
    index[pm.source_basis[i]] = i;

  if (!cofactor_degree) {
    auto augmented = pm.rows;
    for (auto& r : augmented) r.push_back(0);
    for (const auto& [e, c] : q.terms()) augmented[index.at(e)].back() = c;
    return rational_rank(augmented) == rational_rank(pm.rows);
  }

  // joint kernel of [P | -q*K]: a kernel vector with nonzero K-part gives
  // pullback(F) = q*K with K != 0, and then F != 0 since q != 0
  auto augmented = pm.rows;
  for (auto& r : augmented)
    r.insert(r.end(), cof_basis.size(), mpq_class(0));
  const std::size_t base = pm.target_basis.size();
  for (std::size_t k = 0; k < cof_basis.size(); ++k) {
    Polynomial prod =
        q * Polynomial::monomial(map.source.grading, q.field(), cof_basis[k], 1);
    for (const auto& [e, c] : prod.terms())
      augmented[index.at(e)][base + k] = -c;
  }
  long joint_rank = rational_rank(augmented);
  long p_rank = rational_rank(pm.rows);
  return joint_rank < p_rank + static_cast<long>(cof_basis.size());
}

LinearConditionSet::LinearConditionSet(AmbientSpec ambient, Multidegree degree)
    : ambient_(std::move(ambient)), degree_(std::move(degree)) {
  if (static_cast<int>(degree_.size()) != ambient_.grading.axes)
    throw std::invalid_argument("multidegree length mismatch");
  for (long d : degree_)
    if (d < 0) throw std::invalid_argument("negative multidegree");
}

void LinearConditionSet::add_node(const std::vector<mpq_class>& point) {
  if (point.size() != ambient_.grading.num_variables())
    throw std::invalid_argument("point needs one coordinate per variable");
  std::vector<std::optional<mpq_class>> assignment;
  for (const auto& c : point) assignment.emplace_back(c);
  conditions_.push_back({ambient_.grading.variables, assignment});
}

void LinearConditionSet::add_vanishing(
    const std::vector<std::string>& vars,
    const std::vector<std::optional<mpq_class>>& assignment) {
  if (assignment.size() != ambient_.grading.num_variables())
    throw std::invalid_argument("assignment needs one slot per variable");
  for (const auto& v : vars)
    if (ambient_.grading.index_of(v) < 0)
      throw std::invalid_argument("unknown variable " + v);
  conditions_.push_back({vars, assignment});
}

std::vector<std::vector<mpq_class>> LinearConditionSet::condition_rows() const {
  auto basis = monomial_basis(ambient_.grading, degree_);
  if (basis.empty()) throw std::domain_error("empty monomial basis");
  const auto& g = ambient_.grading;
  auto Q = CoefficientField::rationals();
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& cond : conditions_) {
    // free variables keep their symbols; each free monomial gives one row
    for (const auto& var : cond.vars) {
      // row family: coefficient of every free monomial in
      // d(basis_j)/d(var) |_{assignment}
      std::map<Polynomial::Exponents, std::size_t> free_rows;
      std::vector<std::vector<mpq_class>> local;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        Polynomial mono = Polynomial::monomial(g, Q, basis[j], 1);
        Polynomial der = partial_derivative(mono, var);
        // substitute the assigned variables
        for (const auto& [e, c] : der.terms()) {
          mpq_class value = c;
          Polynomial::Exponents free_expo(e.size(), 0);
          bool zero = false;
          for (std::size_t v = 0; v < e.size(); ++v) {
            if (!cond.assignment[v]) {
              free_expo[v] = e[v];
              continue;
            }
            if (e[v] == 0) continue;
            if (*cond.assignment[v] == 0) {
              zero = true;
              break;
            }
            mpq_class pw = 1;
            for (int t = 0; t < e[v]; ++t) pw *= *cond.assignment[v];
            value *= pw;
          }
          if (zero || value == 0) continue;
          auto [it, ins] = free_rows.emplace(free_expo, local.size());
          if (ins) local.emplace_back(basis.size(), mpq_class(0));
          local[it->second][j] += value;
        }
      }
      for (auto& r : local) rows.push_back(std::move(r));
    }
  }
  return rows;
}

long constrained_form_space_dim(const LinearConditionSet& cond) {
  auto basis = monomial_basis(cond.ambient().grading, cond.degree());
  auto rows = cond.condition_rows();
  return static_cast<long>(basis.size()) - rational_rank(rows);
}

namespace {

/// Basis of the nullspace of the row system, over the monomial basis.
std::vector<std::vector<mpq_class>> nullspace(
    std::vector<std::vector<mpq_class>> rows, std::size_t cols) {
  // reduced row echelon form
  std::vector<long> pivot_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
    std::size_t piv = row;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[row], rows[piv]);
    mpq_class inv = mpq_class(1) / rows[row][col];
    for (std::size_t c = 0; c < cols; ++c) rows[row][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == row || rows[r][col] == 0) continue;
      mpq_class f = rows[r][col];
      for (std::size_t c = 0; c < cols; ++c) rows[r][c] -= f * rows[row][c];
    }
    pivot_of_row.push_back(static_cast<long>(col));
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (long c : pivot_of_row) is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> out;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<mpq_class> v(cols, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivot_of_row.size(); ++r)
      v[pivot_of_row[r]] = -rows[r][free_col];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Polynomial sample_constrained_form(const LinearConditionSet& cond,
                                   std::uint64_t seed) {
  auto basis = monomial_basis(cond.ambient().grading, cond.degree());
  auto null = nullspace(cond.condition_rows(), basis.size());
  if (null.empty())
    throw std::domain_error("constraint space contains only the zero form");
  std::mt19937_64 rng(seed);
  std::vector<mpq_class> coeffs(basis.size(), 0);
  for (const auto& v : null) {
    long a = static_cast<long>(1 + rng() % 9);
    if (rng() % 2) a = -a;
    for (std::size_t c = 0; c < coeffs.size(); ++c) coeffs[c] += v[c] * a;
  }
  Polynomial f(cond.ambient().grading, CoefficientField::rationals());
  for (std::size_t c = 0; c < coeffs.size(); ++c)
    if (coeffs[c] != 0) f.add_term(basis[c], coeffs[c]);
  if (f.is_zero())
    throw std::domain_error("sampled form degenerated to zero");
  return f;
}

nlohmann::json map_spec_to_json(const RationalMapSpec& m) {
  nlohmann::json j;
  j["source_dims"] = m.source.dims;
  j["target_dims"] = m.target.dims;
  j["source_variables"] = m.source.grading.variables;
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& tuple : m.components) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& p : tuple) t.push_back(p.to_string());
    comps.push_back(t);
  }
  j["components"] = comps;
  return j;
}

namespace maps {

namespace {
Polynomial var(const AmbientSpec& a, const std::string& v) {
  return Polynomial::variable(a.grading, CoefficientField::rationals(), v);
}
}  // namespace

RationalMapSpec two_point_projection() {
  AmbientSpec src = AmbientSpec::make({{"x0", "x1", "x2", "x3"}});
  AmbientSpec tgt =
      AmbientSpec::make({{"u1", "u2", "u3"}, {"v1", "v2", "v3"}});
  return RationalMapSpec(
      src, tgt,
      {{var(src, "x1"), var(src, "x2"), var(src, "x3")},
       {var(src, "x0"), var(src, "x2"), var(src, "x3")}});
}

RationalMapSpec trilinear() {
  AmbientSpec src = AmbientSpec::make({{"x0", "x1", "x2", "x3"}});
  AmbientSpec tgt =
      AmbientSpec::make({{"u0", "u1"}, {"v0", "v1"}, {"w0", "w1"}});
  return RationalMapSpec(src, tgt,
                         {{var(src, "x2"), var(src, "x3")},
                          {var(src, "x1"), var(src, "x3")},
                          {var(src, "x0"), var(src, "x3")}});
}

RationalMapSpec id_cross_cremona() {
  AmbientSpec src = AmbientSpec::make({{"s", "t"}, {"x", "y", "z"}});
  AmbientSpec tgt =
      AmbientSpec::make({{"u0", "u1"}, {"v0", "v1"}, {"w0", "w1"}});
  return RationalMapSpec(src, tgt,
                         {{var(src, "s"), var(src, "t")},
                          {var(src, "x"), var(src, "z")},
                          {var(src, "y"), var(src, "z")}});
}

}  // namespace maps

}  // namespace fano3

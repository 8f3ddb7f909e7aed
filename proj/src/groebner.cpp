#include "fano3/groebner.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

namespace fano3 {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 step over seed xor salt
  std::uint64_t z = (seed ^ (salt * 0x9E3779B97F4A7C15ULL)) + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

constexpr int kMaxVars = 8;

struct Mono {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  bool operator==(const Mono&) const = default;
};

// +1 if a > b in the order, -1 if a < b, 0 if equal.
int mono_cmp(const Mono& a, const Mono& b, MonomialOrder::Kind kind, int n) {
  if (kind == MonomialOrder::Kind::degrevlex) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (int i = n - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
  for (int i = 0; i < n; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  return 0;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned s = a.e[i] + b.e[i];
    if (s > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
    r.e[i] = static_cast<std::uint16_t>(s);
  }
  r.deg = a.deg + b.deg;
  return r;
}

Mono mono_div(const Mono& a, const Mono& b) {  // assumes b | a
  Mono r;
  for (int i = 0; i < kMaxVars; ++i)
    r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  r.deg = a.deg - b.deg;
  return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r;
  r.deg = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

bool mono_coprime(const Mono& a, const Mono& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

struct Ctx {
  long p = 0;
  int nvars = 0;
  MonomialOrder::Kind kind = MonomialOrder::Kind::degrevlex;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= static_cast<std::uint64_t>(p) ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return (a * b) % static_cast<std::uint64_t>(p);
  }
  std::uint64_t inv(std::uint64_t a) const {
    // extended Euclid
    long t = 0, nt = 1, r = p, nr = static_cast<long>(a);
    while (nr != 0) {
      long q = r / nr;
      std::swap(t -= q * nt, nt);
      std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::domain_error("non-invertible element mod p");
    return static_cast<std::uint64_t>(t < 0 ? t + p : t);
  }
  bool greater(const Mono& a, const Mono& b) const {
    return mono_cmp(a, b, kind, nvars) > 0;
  }
};

using Term = std::pair<Mono, std::uint64_t>;
// terms sorted descending in the order; coefficients nonzero
using GfPoly = std::vector<Term>;

struct MonoGreater {
  const Ctx* ctx;
  bool operator()(const Mono& a, const Mono& b) const {
    return ctx->greater(a, b);
  }
};

using WorkMap = std::map<Mono, std::uint64_t, MonoGreater>;

GfPoly from_work(WorkMap& w) {
  GfPoly r;
  r.reserve(w.size());
  for (auto& [m, c] : w)
    if (c != 0) r.emplace_back(m, c);
  return r;
}

void make_monic(const Ctx& ctx, GfPoly& f) {
  if (f.empty()) return;
  std::uint64_t s = ctx.inv(f.front().second);
  if (s == 1) return;
  for (auto& t : f) t.second = ctx.mul(t.second, s);
}

// Full normal form of f against basis.
GfPoly reduce_full(const Ctx& ctx, const GfPoly& f,
                   const std::vector<GfPoly>& basis) {
  WorkMap work{MonoGreater{&ctx}};
  for (const auto& [m, c] : f) work[m] = c;
  GfPoly out;
  while (!work.empty()) {
    auto it = work.begin();
    Mono m = it->first;
    std::uint64_t c = it->second;
    work.erase(it);
    if (c == 0) continue;
    const GfPoly* red = nullptr;
    for (const auto& g : basis) {
      if (!g.empty() && mono_divides(g.front().first, m)) {
        red = &g;
        break;
      }
    }
    if (red == nullptr) {
      out.emplace_back(m, c);
      continue;
    }
    const Mono quot = mono_div(m, red->front().first);
    const std::uint64_t factor = ctx.mul(c, ctx.inv(red->front().second));
    for (std::size_t i = 1; i < red->size(); ++i) {
      Mono key = mono_mul(quot, (*red)[i].first);
      std::uint64_t delta = ctx.mul(factor, (*red)[i].second);
      auto [jt, inserted] = work.emplace(key, ctx.sub(0, delta));
      if (!inserted) {
        jt->second = ctx.sub(jt->second, delta);
        if (jt->second == 0) work.erase(jt);
      }
    }
  }
  return out;
}

GfPoly s_polynomial(const Ctx& ctx, const GfPoly& f, const GfPoly& g) {
  const Mono lcm = mono_lcm(f.front().first, g.front().first);
  const Mono uf = mono_div(lcm, f.front().first);
  const Mono ug = mono_div(lcm, g.front().first);
  const std::uint64_t cf = ctx.inv(f.front().second);
  const std::uint64_t cg = ctx.inv(g.front().second);
  WorkMap work{MonoGreater{&ctx}};
  for (const auto& [m, c] : f) {
    Mono key = mono_mul(uf, m);
    std::uint64_t v = ctx.mul(c, cf);
    auto [it, ins] = work.emplace(key, v);
    if (!ins) {
      it->second = ctx.add(it->second, v);
      if (it->second == 0) work.erase(it);
    }
  }
  for (const auto& [m, c] : g) {
    Mono key = mono_mul(ug, m);
    std::uint64_t v = ctx.mul(c, cg);
    auto [it, ins] = work.emplace(key, ctx.sub(0, v));
    if (!ins) {
      it->second = ctx.sub(it->second, v);
      if (it->second == 0) work.erase(it);
    }
  }
  return from_work(work);
}

GfPoly to_internal(const Ctx& ctx, const Polynomial& f,
                   const std::vector<int>& var_map) {
  WorkMap work{MonoGreater{&ctx}};
  for (const auto& [e, c] : f.terms()) {
    Mono m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      m.e[var_map[i]] = static_cast<std::uint16_t>(e[i]);
      m.deg += e[i];
    }
    mpq_class v = f.field().reduce(c);
    work[m] = v.get_num().get_ui();
  }
  return from_work(work);
}

Polynomial to_polynomial(const Ctx& ctx, const GfPoly& f, const Grading& g,
                         const CoefficientField& k,
                         const std::vector<int>& inv_var_map) {
  Polynomial out(g, k);
  for (const auto& [m, c] : f) {
    Polynomial::Exponents e(g.num_variables(), 0);
    for (std::size_t i = 0; i < g.num_variables(); ++i)
      e[i] = m.e[inv_var_map[i]];
    out.add_term(e, mpq_class(static_cast<long>(c)));
  }
  return out;
}

struct Setup {
  Ctx ctx;
  std::vector<int> var_map;      // polynomial var index -> order position
  std::vector<int> inv_var_map;  // same here (an involution-free rename)
  Grading grading;
  CoefficientField field;
};

Setup make_setup(const std::vector<Polynomial>& gens,
                 const MonomialOrder& order) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  const Polynomial& first = gens.front();
  if (!first.field().is_prime_field())
    throw std::domain_error(
        "Groebner engine supports prime fields only (characteristic 0 input)");
  for (const auto& g : gens)
    if (g.grading() != first.grading() || g.field() != first.field())
      throw std::invalid_argument("generators must share grading and field");
  const auto& vars = first.grading().variables;
  if (vars.size() > kMaxVars)
    throw std::invalid_argument("too many variables for the Groebner engine");
  if (order.variables.size() != vars.size())
    throw std::invalid_argument("order variable list mismatch");
  Setup s;
  s.ctx.p = first.field().characteristic;
  s.ctx.nvars = static_cast<int>(vars.size());
  s.ctx.kind = order.kind;
  s.grading = first.grading();
  s.field = first.field();
  s.var_map.resize(vars.size());
  s.inv_var_map.resize(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    int pos = -1;
    for (std::size_t j = 0; j < order.variables.size(); ++j)
      if (order.variables[j] == vars[i]) pos = static_cast<int>(j);
    if (pos < 0)
      throw std::invalid_argument("variable " + vars[i] + " missing from order");
    s.var_map[i] = pos;
    s.inv_var_map[i] = pos;
  }
  return s;
}

std::vector<GfPoly> buchberger_internal(const Ctx& ctx,
                                        std::vector<GfPoly> basis) {
  basis.erase(std::remove_if(basis.begin(), basis.end(),
                             [](const GfPoly& f) { return f.empty(); }),
              basis.end());
  for (auto& f : basis) make_monic(ctx, f);

  struct Pair {
    int i, j;
    Mono lcm;
  };
  std::vector<Pair> pending;
  std::set<std::pair<int, int>> handled;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i)
      pending.push_back({i, j, mono_lcm(basis[i].front().first,
                                        basis[j].front().first)});
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

  while (!pending.empty()) {
    // normal selection: smallest lcm in the order, ties by indices
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      int c = mono_cmp(pending[k].lcm, pending[best].lcm, ctx.kind, ctx.nvars);
      if (c < 0 || (c == 0 && std::make_pair(pending[k].i, pending[k].j) <
                                  std::make_pair(pending[best].i,
                                                 pending[best].j)))
        best = k;
    }
    Pair pr = pending[best];
    pending.erase(pending.begin() + best);
    handled.insert({pr.i, pr.j});

    const Mono& li = basis[pr.i].front().first;
    const Mono& lj = basis[pr.j].front().first;
    if (mono_coprime(li, lj)) continue;  // Buchberger's first criterion
    // chain criterion: some k with lm_k | lcm and both pairs already handled
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!mono_divides(basis[k].front().first, pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (handled.count({key1.first, key1.second}) &&
          handled.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    GfPoly s = s_polynomial(ctx, basis[pr.i], basis[pr.j]);
    GfPoly r = reduce_full(ctx, s, basis);
    if (r.empty()) continue;
    make_monic(ctx, r);
    basis.push_back(std::move(r));
    push_pairs(static_cast<int>(basis.size()) - 1);
  }

  // interreduce to the reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      GfPoly self = std::move(basis[i]);
      basis[i].clear();
      std::vector<GfPoly> others;
      for (const auto& g : basis)
        if (!g.empty()) others.push_back(g);
      GfPoly r = reduce_full(ctx, self, others);
      if (r != self) changed = true;
      if (!r.empty()) make_monic(ctx, r);
      basis[i] = std::move(r);
    }
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const GfPoly& f) { return f.empty(); }),
                basis.end());
  }
  std::sort(basis.begin(), basis.end(), [&](const GfPoly& a, const GfPoly& b) {
    return ctx.greater(a.front().first, b.front().first);
  });
  return basis;
}

long staircase_count(const Ctx& ctx, const std::vector<GfPoly>& basis) {
  std::vector<Mono> lms;
  for (const auto& g : basis) lms.push_back(g.front().first);
  for (const auto& m : lms)
    if (m.deg == 0) return 0;  // unit ideal
  const int n = ctx.nvars;
  std::vector<long> box(n, -1);
  for (const auto& m : lms) {
    int only = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (m.e[i] == 0) continue;
      if (only >= 0) {
        pure = false;
        break;
      }
      only = i;
    }
    if (pure && only >= 0)
      box[only] = box[only] < 0 ? m.e[only]
                                : std::min<long>(box[only], m.e[only]);
  }
  for (int i = 0; i < n; ++i)
    if (box[i] < 0)
      throw std::domain_error(
          "ideal is not zero-dimensional (infinite staircase)");
  std::vector<long> e(n, 0);
  long count = 0;
  while (true) {
    Mono m;
    for (int i = 0; i < n; ++i) {
      m.e[i] = static_cast<std::uint16_t>(e[i]);
      m.deg += e[i];
    }
    bool standard = true;
    for (const auto& lm : lms)
      if (mono_divides(lm, m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    int k = n - 1;
    while (k >= 0 && e[k] == box[k] - 1) e[k--] = 0;
    if (k < 0) break;
    ++e[k];
  }
  return count;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const MonomialOrder& order) {
  Setup s = make_setup(gens, order);
  std::vector<GfPoly> internal;
  for (const auto& g : gens) internal.push_back(to_internal(s.ctx, g, s.var_map));
  auto out = buchberger_internal(s.ctx, std::move(internal));
  GroebnerBasis gb{order, s.field, s.grading, {}};
  for (const auto& f : out)
    gb.basis.push_back(to_polynomial(s.ctx, f, s.grading, s.field,
                                     s.inv_var_map));
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.grading() != gb.grading || f.field() != gb.field)
    throw std::invalid_argument("grading/field mismatch with basis");
  std::vector<Polynomial> all = gb.basis;
  all.push_back(f);
  Setup s = make_setup(all, gb.order);
  std::vector<GfPoly> basis;
  for (const auto& g : gb.basis) basis.push_back(to_internal(s.ctx, g, s.var_map));
  GfPoly r = reduce_full(s.ctx, to_internal(s.ctx, f, s.var_map), basis);
  return to_polynomial(s.ctx, r, s.grading, s.field, s.inv_var_map);
}

long quotient_dimension(const GroebnerBasis& gb) {
  if (gb.basis.empty())
    throw std::domain_error("ideal is not zero-dimensional (zero ideal)");
  Setup s = make_setup(gb.basis, gb.order);
  std::vector<GfPoly> basis;
  for (const auto& g : gb.basis) basis.push_back(to_internal(s.ctx, g, s.var_map));
  return staircase_count(s.ctx, basis);
}

namespace {

// g(A x) for an n x n matrix over F_p, computed via powers of the row forms.
GfPoly substitute_linear(const Ctx& ctx, const GfPoly& g,
                         const std::vector<std::vector<std::uint64_t>>& a) {
  const int n = ctx.nvars;
  std::vector<GfPoly> lin(n);
  for (int i = 0; i < n; ++i) {
    WorkMap w{MonoGreater{&ctx}};
    for (int j = 0; j < n; ++j) {
      if (a[i][j] == 0) continue;
      Mono m;
      m.e[j] = 1;
      m.deg = 1;
      w[m] = a[i][j];
    }
    lin[i] = from_work(w);
  }
  auto mul = [&](const GfPoly& x, const GfPoly& y) {
    WorkMap w{MonoGreater{&ctx}};
    for (const auto& [mx, cx] : x)
      for (const auto& [my, cy] : y) {
        Mono key = mono_mul(mx, my);
        std::uint64_t v = ctx.mul(cx, cy);
        auto [it, ins] = w.emplace(key, v);
        if (!ins) {
          it->second = ctx.add(it->second, v);
          if (it->second == 0) w.erase(it);
        }
      }
    return from_work(w);
  };
  // cached powers of each row form
  std::vector<std::vector<GfPoly>> powers(n);
  auto power = [&](int i, int e) -> const GfPoly& {
    auto& cache = powers[i];
    if (cache.empty()) {
      Mono one;
      cache.push_back(GfPoly{{one, 1}});
      cache.push_back(lin[i]);
    }
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(mul(cache.back(), lin[i]));
    return cache[e];
  };
  WorkMap acc{MonoGreater{&ctx}};
  for (const auto& [m, c] : g) {
    Mono one;
    GfPoly prod{{one, c}};
    for (int i = 0; i < n; ++i)
      if (m.e[i] > 0) prod = mul(prod, power(i, m.e[i]));
    for (const auto& [mm, cc] : prod) {
      auto [it, ins] = acc.emplace(mm, cc);
      if (!ins) {
        it->second = ctx.add(it->second, cc);
        if (it->second == 0) acc.erase(it);
      }
    }
  }
  return from_work(acc);
}

bool invertible_mod_p(std::vector<std::vector<std::uint64_t>> m, long p) {
  const int n = static_cast<int>(m.size());
  Ctx ctx;
  ctx.p = p;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    std::swap(m[col], m[piv]);
    std::uint64_t inv = ctx.inv(m[col][col]);
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      std::uint64_t f = ctx.mul(m[r][col], inv);
      for (int c = col; c < n; ++c)
        m[r][c] = ctx.sub(m[r][c], ctx.mul(f, m[col][c]));
    }
  }
  return true;
}

}  // namespace

ProjectiveDegreeReport projective_degree_report(
    const std::vector<Polynomial>& gens, std::uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  const Grading& g = gens.front().grading();
  for (const auto& f : gens) {
    Multidegree d = multidegree_of(f);  // throws on inhomogeneous input
    (void)d;
  }
  const int n = static_cast<int>(g.num_variables());
  if (n < 2) throw std::invalid_argument("need at least two variables");
  const long p = gens.front().field().characteristic;
  MonomialOrder full_order = MonomialOrder::degrevlex(g.variables);
  Setup s = make_setup(gens, full_order);

  std::vector<GfPoly> internal;
  for (const auto& f : gens) internal.push_back(to_internal(s.ctx, f, s.var_map));

  ProjectiveDegreeReport report;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(mix_seed(seed, 0xC0FFEE + t));
    std::vector<std::vector<std::uint64_t>> a(
        n, std::vector<std::uint64_t>(n, 0));
    do {
      for (auto& row : a)
        for (auto& x : row) x = rng() % p;
    } while (!invertible_mod_p(a, p));

    // substitute, then dehomogenize by the last variable
    Ctx affine_ctx = s.ctx;
    affine_ctx.nvars = n - 1;
    std::vector<GfPoly> affine;
    for (const auto& f : internal) {
      GfPoly sub = substitute_linear(s.ctx, f, a);
      WorkMap w{MonoGreater{&affine_ctx}};
      for (const auto& [m, c] : sub) {
        Mono mm = m;
        mm.deg -= mm.e[n - 1];
        mm.e[n - 1] = 0;
        auto [it, ins] = w.emplace(mm, c);
        if (!ins) {
          it->second = affine_ctx.add(it->second, c);
          if (it->second == 0) w.erase(it);
        }
      }
      affine.push_back(from_work(w));
    }
    try {
      auto gb = buchberger_internal(affine_ctx, std::move(affine));
      if (gb.empty()) throw std::domain_error("zero ideal");
      report.trial_values.push_back(staircase_count(affine_ctx, gb));
    } catch (const std::domain_error&) {
      report.trial_values.push_back(-1);
    }
  }

  std::map<long, int> counts;
  for (long v : report.trial_values)
    if (v >= 0) ++counts[v];
  int best = 0;
  for (const auto& [v, c] : counts)
    if (c > best) {
      best = c;
      report.modal = v;
    }
  report.stable = !counts.empty() && counts.size() == 1 &&
                  best == trials;  // every trial succeeded and agreed
  return report;
}

long projective_degree(const std::vector<Polynomial>& gens, std::uint64_t seed,
                       int trials) {
  auto report = projective_degree_report(gens, seed, trials);
  if (report.modal < 0)
    throw std::domain_error("zero-dimensionality failed in every trial");
  return report.modal;
}

}  // namespace fano3

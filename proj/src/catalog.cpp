#include "fano3/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "fano3/birat.hpp"
#include "fano3/chow.hpp"
#include "fano3/groebner.hpp"
#include "fano3/lattice.hpp"

namespace fano3 {

bool ledger_holds(const LedgerEntry& e) {
  long sum = 0;
  for (const auto& t : e.terms) sum += t.value;
  return sum == e.total;
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped: return "skipped";
    case ClaimStatus::unstable: return "unstable";
  }
  return "?";
}

std::string to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::symbolic: return "symbolic";
    case ClaimKind::chow: return "chow";
    case ClaimKind::lattice: return "lattice";
    case ClaimKind::zerodim: return "zerodim";
    case ClaimKind::birat: return "birat";
    case ClaimKind::arithmetic: return "arithmetic";
  }
  return "?";
}

long linear_system_dim(const std::vector<int>& dims, const Multidegree& d) {
  if (dims.size() != d.size())
    throw std::invalid_argument("one degree per factor required");
  long total = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 0 || d[i] < 0)
      throw std::invalid_argument("negative entries");
    // C(n+d, n)
    long c = 1;
    for (long k = 1; k <= dims[i]; ++k)
      c = c * (d[i] + k) / k;
    total *= c;
  }
  return total - 1;
}

namespace {

using presentations::blown_up_veronese;
using presentations::height22_bundle;
using presentations::hirzebruch_f1;
using presentations::projective_plane;
using presentations::quadric_surface;

ClaimOutcome pass_with(const std::string& computed) {
  return {ClaimStatus::pass, computed};
}
ClaimOutcome fail_with(const std::string& computed) {
  return {ClaimStatus::fail, computed};
}
ClaimOutcome check(bool ok, const std::string& computed) {
  return {ok ? ClaimStatus::pass : ClaimStatus::fail, computed};
}

ChowClass lin_class(const RingPresentation& p,
                    std::vector<std::pair<long, std::string>> coeffs) {
  Polynomial v = p.zero();
  for (auto& [c, name] : coeffs) v = v + p.poly(name) * mpq_class(c);
  return ChowClass(p, v);
}

std::string join(const std::vector<long>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

// ---- generic symbolic forms -------------------------------------------------

struct SymbolicRing {
  Grading grading;
  CoefficientField field = CoefficientField::rationals();
  std::vector<std::string> point_vars;  // the geometric variables
};

// Geometric variables plus named blocks of coefficient symbols.
SymbolicRing symbolic_ring(const std::vector<std::string>& point_vars,
                           const std::vector<std::pair<std::string, int>>&
                               symbol_blocks) {
  std::vector<std::string> vars = point_vars;
  for (const auto& [prefix, count] : symbol_blocks)
    for (int i = 0; i < count; ++i) vars.push_back(prefix + std::to_string(i));
  return SymbolicRing{Grading::standard(vars), CoefficientField::rationals(),
                      point_vars};
}

// Generic form of given degree in the point variables, with coefficients the
// symbols prefix0, prefix1, ...
Polynomial generic_form(const SymbolicRing& ring, const std::string& prefix,
                        int degree) {
  Grading point_grading = Grading::standard(ring.point_vars);
  auto basis = monomial_basis(point_grading, {degree});
  Polynomial f(ring.grading, ring.field);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Polynomial::Exponents e(ring.grading.num_variables(), 0);
    for (std::size_t i = 0; i < ring.point_vars.size(); ++i)
      e[ring.grading.index_of(ring.point_vars[i])] = basis[k][i];
    e[ring.grading.index_of(prefix + std::to_string(k))] = 1;
    f.add_term(e, 1);
  }
  return f;
}

// ---- zerodim claim helper ---------------------------------------------------

using GenBuilder = std::function<std::vector<Polynomial>(
    const CoefficientField&, std::uint64_t)>;

ClaimOutcome projective_count_claim(const RunConfig& config, long expected,
                                    std::uint64_t salt,
                                    const GenBuilder& build) {
  std::vector<long> modal_values;
  std::ostringstream detail;
  for (long p : {config.prime, config.second_prime}) {
    CoefficientField k = CoefficientField::prime(p);
    std::uint64_t s = mix_seed(config.seed, salt ^ static_cast<std::uint64_t>(p));
    auto gens = build(k, s);
    auto report = projective_degree_report(gens, s, config.trials);
    detail << "p=" << p << ":[" << join(report.trial_values) << "] ";
    if (!report.stable) return {ClaimStatus::unstable, detail.str()};
    modal_values.push_back(report.modal);
  }
  if (modal_values[0] != modal_values[1])
    return {ClaimStatus::unstable, detail.str()};
  return check(modal_values[0] == expected,
               std::to_string(modal_values[0]) + " (" + detail.str() + ")");
}

// The symmetric matrix of the sextic branch surface: L^2 on the diagonal
// corner, quadrics elsewhere.
struct BranchMatrixForms {
  Polynomial L, Q0, Q1, Qp00, Qp01, Qp11;
  Grading grading;
  CoefficientField field;
};

BranchMatrixForms random_branch_forms(const CoefficientField& k,
                                      std::uint64_t seed) {
  Grading g = Grading::standard({"y0", "y1", "y2", "y3"});
  BranchMatrixForms f{
      random_form(g, {1}, k, mix_seed(seed, 1)),
      random_form(g, {2}, k, mix_seed(seed, 2)),
      random_form(g, {2}, k, mix_seed(seed, 3)),
      random_form(g, {2}, k, mix_seed(seed, 4)),
      random_form(g, {2}, k, mix_seed(seed, 5)),
      random_form(g, {2}, k, mix_seed(seed, 6)),
      g,
      k};
  return f;
}

PolynomialMatrix branch_matrix(const BranchMatrixForms& f) {
  Polynomial l2 = f.L * f.L;
  return PolynomialMatrix(3, 3,
                          {l2, f.Q0, f.Q1, f.Q0, f.Qp00, f.Qp01, f.Q1, f.Qp01,
                           f.Qp11});
}

std::vector<Polynomial> two_by_two_minors(const PolynomialMatrix& m) {
  std::vector<Polynomial> out;
  for (int r0 = 0; r0 < m.rows; ++r0)
    for (int r1 = r0 + 1; r1 < m.rows; ++r1)
      for (int c0 = 0; c0 < m.cols; ++c0)
        for (int c1 = c0 + 1; c1 < m.cols; ++c1)
          out.push_back(m.at(r0, c0) * m.at(r1, c1) -
                        m.at(r0, c1) * m.at(r1, c0));
  return out;
}

// ---- birational transfer helpers -------------------------------------------

LinearConditionSet nodal_quartic_conditions(int nodes) {
  AmbientSpec p3 = AmbientSpec::make({{"x0", "x1", "x2", "x3"}});
  LinearConditionSet cond(p3, {4});
  for (int n = 0; n < nodes; ++n) {
    std::vector<mpq_class> pt(4, 0);
    pt[n] = 1;
    cond.add_node(pt);
  }
  return cond;
}

// (2,4) forms on P^1 x P^2 singular along P^1 x {[1:0:0]} and P^1 x {[0:1:0]}
LinearConditionSet two_line_conditions() {
  AmbientSpec amb = AmbientSpec::make({{"s", "t"}, {"x", "y", "z"}});
  LinearConditionSet cond(amb, {2, 4});
  using Opt = std::optional<mpq_class>;
  std::vector<Opt> at_p = {Opt{}, Opt{}, Opt{1}, Opt{0}, Opt{0}};
  std::vector<Opt> at_q = {Opt{}, Opt{}, Opt{0}, Opt{1}, Opt{0}};
  cond.add_vanishing({"x", "y", "z"}, at_p);
  cond.add_vanishing({"x", "y", "z"}, at_q);
  return cond;
}

}  // namespace

ClaimResult prym_ledger(const FanoCase& c, const RunConfig& config) {
  ClaimResult r;
  r.claim_id = "prym:" + c.description;
  r.seed = config.seed;
  r.prime = config.prime;
  if (!c.discriminant_model) {
    r.status = ClaimStatus::fail;
    r.computed = "case has no discriminant model";
    return r;
  }
  RingPresentation surface =
      c.discriminant_model->surface == "P2"
          ? presentations::projective_plane()
          : presentations::quadric_surface();
  Polynomial v = surface.zero();
  for (std::size_t i = 0; i < c.discriminant_model->curve.size(); ++i)
    v = v + surface.poly(surface.grading().variables[i]) *
                mpq_class(c.discriminant_model->curve[i]);
  long genus = adjunction_genus(surface, ChowClass(surface, v));
  r.expected = std::to_string(c.h12);
  r.computed = std::to_string(genus - 1);
  r.status = genus - 1 == c.h12 ? ClaimStatus::pass : ClaimStatus::fail;
  return r;
}

const ClaimRegistry& ClaimRegistry::instance() {
  static ClaimRegistry registry;
  return registry;
}

const Claim* ClaimRegistry::find(const std::string& id) const {
  for (const auto& c : claims_)
    if (c.id == id) return &c;
  return nullptr;
}

ClaimResult ClaimRegistry::run_claim(const std::string& id,
                                     const RunConfig& config) const {
  const Claim* c = find(id);
  if (c == nullptr) throw std::invalid_argument("unknown claim id: " + id);
  ClaimResult r;
  r.claim_id = c->id;
  r.description = c->description;
  r.paper_ref = c->paper_ref;
  r.expected = c->expected;
  r.seed = config.seed;
  r.prime = config.prime;
  const auto start = std::chrono::steady_clock::now();
  try {
    ClaimOutcome out = c->run(config);
    r.status = out.status;
    r.computed = out.computed;
  } catch (const std::exception& e) {
    r.status = ClaimStatus::fail;
    r.computed = std::string("error: ") + e.what();
  }
  r.elapsed_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return r;
}

std::vector<ClaimResult> ClaimRegistry::run_all(const RunConfig& config) const {
  std::vector<ClaimResult> out;
  for (const auto& c : claims_) {
    if (c.cost == ClaimCost::slow && !config.include_slow) {
      ClaimResult r;
      r.claim_id = c.id;
      r.description = c.description;
      r.paper_ref = c.paper_ref;
      r.expected = c.expected;
      r.status = ClaimStatus::skipped;
      r.computed = "slow claim; rerun with --include-slow";
      r.seed = config.seed;
      r.prime = config.prime;
      out.push_back(std::move(r));
      continue;
    }
    out.push_back(run_claim(c.id, config));
  }
  return out;
}

ClaimRegistry::ClaimRegistry() {
  auto add = [&](std::string id, std::string description, std::string ref,
                 ClaimKind kind, std::string expected,
                 std::function<ClaimOutcome(const RunConfig&)> run,
                 ClaimCost cost = ClaimCost::fast) {
    claims_.push_back({std::move(id), std::move(description), std::move(ref),
                       kind, std::move(expected), cost, std::move(run)});
  };

  // ---- del Pezzo fibration spectral curves (sec. 4) ----

  add("dp.genus.f1",
      "genus of the discriminant 5xi+(n+3)f on F_1 equals 4n-2 for n=3..6",
      "sec. 4: [D]=5xi+(n+3)f, genus h(X)-4 with h=4n+2", ClaimKind::chow,
      "g=10,14,18,22", [](const RunConfig&) {
        RingPresentation f1 = hirzebruch_f1();
        std::vector<long> got;
        for (long n = 3; n <= 6; ++n) {
          ChowClass d = lin_class(f1, {{5, "xi"}, {n + 3, "f"}});
          long g = adjunction_genus(f1, d);
          if (g != 4 * n - 2) return fail_with("n=" + std::to_string(n) +
                                               ": g=" + std::to_string(g));
          got.push_back(g);
        }
        return pass_with("g=" + join(got));
      });

  add("dp.genus.f0",
      "genus of the discriminant (n,5) on F_0 equals 4n-4 for n=4..7",
      "sec. 4: D has bidegree (n,5), also of genus h(X)-4", ClaimKind::chow,
      "g=12,16,20,24", [](const RunConfig&) {
        RingPresentation f0 = quadric_surface();
        std::vector<long> got;
        for (long n = 4; n <= 7; ++n) {
          ChowClass d = lin_class(f0, {{n, "a"}, {5, "b"}});
          long g = adjunction_genus(f0, d);
          if (g != 4 * n - 4) return fail_with("n=" + std::to_string(n) +
                                               ": g=" + std::to_string(g));
          got.push_back(g);
        }
        return pass_with("g=" + join(got));
      });

  add("dp.split.f1",
      "reducible member on F_1: D1=2xi+3f of genus 1, D2=3xi+nf of genus "
      "2n-5, classes summing to D, nodal-genus consistency",
      "sec. 4: D_1 in |2xi+3f| ... D_2 in |3xi+nf|, genus 2n-5", ClaimKind::chow,
      "split consistent for n=3..6", [](const RunConfig&) {
        RingPresentation f1 = hirzebruch_f1();
        for (long n = 3; n <= 6; ++n) {
          ChowClass d = lin_class(f1, {{5, "xi"}, {n + 3, "f"}});
          ChowClass d1 = lin_class(f1, {{2, "xi"}, {3, "f"}});
          ChowClass d2 = lin_class(f1, {{3, "xi"}, {n, "f"}});
          if (!(d1 + d2 == d)) return fail_with("class sum fails");
          long g1 = adjunction_genus(f1, d1);
          long g2 = adjunction_genus(f1, d2);
          long cross = intersection_number(f1, d1, d2);
          long g = adjunction_genus(f1, d);
          if (g1 != 1 || g2 != 2 * n - 5 || g != g1 + g2 + cross - 1)
            return fail_with("n=" + std::to_string(n) + ": g1=" +
                             std::to_string(g1) + " g2=" + std::to_string(g2));
        }
        return pass_with("split consistent for n=3..6");
      });

  add("dp.split.f0",
      "reducible member on F_0: D1=(2,2) elliptic, D2=(n-2,3) of genus 2n-6, "
      "classes summing to D, nodal-genus consistency",
      "sec. 4: D_1 of bidegree (2,2) ... D_2 of bidegree (n-2,3), genus 2n-6",
      ClaimKind::chow, "split consistent for n=4..7", [](const RunConfig&) {
        RingPresentation f0 = quadric_surface();
        for (long n = 4; n <= 7; ++n) {
          ChowClass d = lin_class(f0, {{n, "a"}, {5, "b"}});
          ChowClass d1 = lin_class(f0, {{2, "a"}, {2, "b"}});
          ChowClass d2 = lin_class(f0, {{n - 2, "a"}, {3, "b"}});
          if (!(d1 + d2 == d)) return fail_with("class sum fails");
          long g1 = adjunction_genus(f0, d1);
          long g2 = adjunction_genus(f0, d2);
          long cross = intersection_number(f0, d1, d2);
          long g = adjunction_genus(f0, d);
          if (g1 != 1 || g2 != 2 * n - 6 || g != g1 + g2 + cross - 1)
            return fail_with("n=" + std::to_string(n) + " inconsistent");
        }
        return pass_with("split consistent for n=4..7");
      });

  // ---- height 22 (sec. 5) ----

  add("h22.xi5", "top relation of the P(V^*) presentation: deg(xi^5)=4",
      "sec. 5: xi^5 = 4 xi^4 h", ClaimKind::chow, "4", [](const RunConfig&) {
        RingPresentation p = height22_bundle();
        long point = degree(p, ChowClass(p, p.poly("xi", 4) * p.poly("h")));
        long v = degree(p, ChowClass(p, p.poly("xi", 5)));
        return check(v == 4 && point == 1, std::to_string(v));
      });

  add("h22.degphi", "projection from the section is a double cover",
      "sec. 5: deg(phi)=(xi-h)^3(2xi)(2xi-h)=2", ClaimKind::chow, "2",
      [](const RunConfig&) {
        RingPresentation p = height22_bundle();
        Polynomial xi = p.poly("xi"), h = p.poly("h");
        Polynomial c = (xi - h).pow(3) * (xi * mpq_class(2)) *
                       (xi * mpq_class(2) - h);
        long v = degree(p, ChowClass(p, c));
        return check(v == 2, std::to_string(v));
      });

  add("h22.ram",
      "ramification class R = K_X - phi^* K_{P^3} = 3(xi-h); branch surface "
      "has degree six",
      "sec. 5: R = -xi+h+4(xi-h) = 3(xi-h)", ClaimKind::chow,
      "R=3xi-3h, deg(B)=6", [](const RunConfig&) {
        RingPresentation p = height22_bundle();
        Polynomial xi = p.poly("xi"), h = p.poly("h");
        // K_X by adjunction from the ambient presentation
        Polynomial kx = p.normal_form(p.canonical_class() +
                                      (xi * mpq_class(2) - h) +
                                      xi * mpq_class(2));
        if (kx != p.normal_form(-xi + h)) return fail_with("K_X != -xi+h");
        Polynomial r = p.normal_form(kx + (xi - h) * mpq_class(4));
        if (r != p.normal_form((xi - h) * mpq_class(3)))
          return fail_with("R != 3(xi-h)");
        Polynomial push = r * (xi - h).pow(2) * (xi * mpq_class(2)) *
                          (xi * mpq_class(2) - h);
        long b = degree(p, ChowClass(p, push));
        return check(b == 6, "R=3xi-3h, deg(B)=" + std::to_string(b));
      });

  add("h22.detM",
      "the eliminated binary discriminant, divided by -L^2, equals det(M) "
      "with fully generic symbolic coefficients",
      "sec. 5: After dividing out by -L^2 we obtain det(M)",
      ClaimKind::symbolic, "det(M) (up to nonzero scalar)",
      [](const RunConfig&) {
        SymbolicRing ring = symbolic_ring(
            {"y0", "y1", "y2", "y3"},
            {{"l", 4}, {"a", 10}, {"b", 10}, {"c", 10}, {"d", 10}, {"e", 10}});
        Polynomial L = generic_form(ring, "l", 1);
        Polynomial Q0 = generic_form(ring, "a", 2);
        Polynomial Q1 = generic_form(ring, "b", 2);
        Polynomial Qp00 = generic_form(ring, "c", 2);
        Polynomial Qp01 = generic_form(ring, "d", 2);
        Polynomial Qp11 = generic_form(ring, "e", 2);
        Polynomial l2 = L * L;
        Polynomial a = Qp00 * l2 - Q0 * Q0;
        Polynomial b = Qp01 * l2 - Q0 * Q1;
        Polynomial c = Qp11 * l2 - Q1 * Q1;
        Polynomial disc = discriminant_binary_quadratic(a, b, c);
        Polynomial quotient = exact_divide(disc, -l2);
        Polynomial det = determinant(PolynomialMatrix(
            3, 3, {l2, Q0, Q1, Q0, Qp00, Qp01, Q1, Qp01, Qp11}));
        return check(quotient.equals_up_to_scalar(det),
                     "disc/(-L^2) has " + std::to_string(quotient.term_count()) +
                         " terms; matches det(M)");
      });

  add("h22.minors32",
      "degree of the 2x2-minors locus of the symmetric branch matrix",
      "sec. 5: there are 32 such singularities", ClaimKind::zerodim, "32",
      [](const RunConfig& config) {
        return projective_count_claim(
            config, 32, 0x32, [](const CoefficientField& k, std::uint64_t s) {
              return two_by_two_minors(branch_matrix(random_branch_forms(k, s)));
            });
      });

  add("h22.lqq4", "degree of the locus L = Q_0 = Q_1 = 0 in P^3",
      "sec. 5: there are four such singularities", ClaimKind::zerodim, "4",
      [](const RunConfig& config) {
        return projective_count_claim(
            config, 4, 0x04, [](const CoefficientField& k, std::uint64_t s) {
              BranchMatrixForms f = random_branch_forms(k, s);
              return std::vector<Polynomial>{f.L, f.Q0, f.Q1};
            });
      });

  add("h22.ledger",
      "sextic double solid Hodge ledger: 52 = n - r + 1 + h^1(Omega^2), "
      "n = 32 + 4, h^1(Omega^2_X) = 22 - 5",
      "sec. 5: 52 = n - r + 1 + h^1(Omega^2); Thus we expect n=36",
      ClaimKind::arithmetic, "52=36-2+1+17; 36=32+4; 17=22-5",
      [](const RunConfig&) {
        LedgerEntry fifty_two{"52 = n - r + 1 + h12",
                              {{"n (nodes)", 36},
                               {"-r (class group rank)", -2},
                               {"+1", 1},
                               {"h1(Omega^2) of the resolution", 17}},
                              52};
        LedgerEntry thirty_six{"n = minors + extra",
                               {{"rank-1 locus points", 32},
                                {"L=Q0=Q1=0 points", 4}},
                               36};
        LedgerEntry seventeen{"h1(Omega^2_X) = 22 - 5",
                              {{"22", 22}, {"-5", -5}},
                              17};
        bool ok = ledger_holds(fifty_two) && ledger_holds(thirty_six) &&
                  ledger_holds(seventeen);
        return check(ok, ok ? "all three identities hold" : "ledger broken");
      });

  add("h22.jac36",
      "degree of the Jacobian ideal of the sextic det(M): all 36 nodes",
      "sec. 5: Thus we expect n=36", ClaimKind::zerodim, "36",
      [](const RunConfig& config) {
        return projective_count_claim(
            config, 36, 0x36, [](const CoefficientField& k, std::uint64_t s) {
              Polynomial det = determinant(branch_matrix(random_branch_forms(k, s)));
              std::vector<Polynomial> gens;
              for (const auto& v : det.grading().variables)
                gens.push_back(partial_derivative(det, v));
              return gens;
            });
      },
      ClaimCost::slow);

  // ---- d(V)=6 and d(V)=8 (sec. 6) ----

  add("d6.elim",
      "eliminating the fiber coordinate from the (1,1) and (1,2) forms gives "
      "the 2x2 determinant, with generic symbolic coefficients",
      "sec. 6: L_1 Q_0 - L_0 Q_1 = det(...) = 0", ClaimKind::symbolic,
      "resultant = det up to nonzero scalar", [](const RunConfig&) {
        SymbolicRing ring = symbolic_ring(
            {"x0", "x1", "x2", "x3", "x4", "x5"},
            {{"a", 6}, {"b", 6}, {"p", 21}, {"q", 21}});
        Polynomial L0 = generic_form(ring, "a", 1);
        Polynomial L1 = generic_form(ring, "b", 1);
        Polynomial Q0 = generic_form(ring, "p", 2);
        Polynomial Q1 = generic_form(ring, "q", 2);
        // add the fiber coordinate s to the ring
        SymbolicRing with_s = symbolic_ring(
            {"x0", "x1", "x2", "x3", "x4", "x5"},
            {{"a", 6}, {"b", 6}, {"p", 21}, {"q", 21}, {"s", 1}});
        auto lift = [&](const Polynomial& f) {
          Polynomial out(with_s.grading, with_s.field);
          for (const auto& [e, c] : f.terms()) {
            Polynomial::Exponents ee = e;
            ee.push_back(0);
            out.add_term(ee, c);
          }
          return out;
        };
        Polynomial s = Polynomial::variable(with_s.grading, with_s.field, "s0");
        Polynomial res = resultant_univariate(s * lift(L0) + lift(L1),
                                              s * lift(Q0) + lift(Q1), "s0");
        Polynomial det = lift(determinant(
            PolynomialMatrix(2, 2, {L0, L1, Q0, Q1})));
        return check(res.equals_up_to_scalar(det),
                     "Res_s = L0*Q1 - L1*Q0 up to sign");
      });

  add("d6.nodes8",
      "degree of the node locus of the quadric-cubic complete intersection",
      "sec. 6: eight nodes at the intersection C cap {Q=0}", ClaimKind::zerodim,
      "8", [](const RunConfig& config) {
        return projective_count_claim(
            config, 8, 0x08, [](const CoefficientField& k, std::uint64_t s) {
              Grading g = Grading::standard({"x0", "x1", "x2", "x3", "x4", "x5"});
              return std::vector<Polynomial>{
                  random_form(g, {1}, k, mix_seed(s, 1)),
                  random_form(g, {1}, k, mix_seed(s, 2)),
                  random_form(g, {2}, k, mix_seed(s, 3)),
                  random_form(g, {2}, k, mix_seed(s, 4)),
                  random_form(g, {2}, k, mix_seed(s, 5))};
            });
      });

  add("d8.elim",
      "eliminating the fiber coordinate from the two (1,1) forms gives the "
      "quadric determinant, with generic symbolic coefficients",
      "sec. 6: L_1 M_0 - L_0 M_1 = det(...) = 0", ClaimKind::symbolic,
      "resultant = det up to nonzero scalar", [](const RunConfig&) {
        SymbolicRing ring = symbolic_ring(
            {"x0", "x1", "x2", "x3", "x4", "x5", "x6"},
            {{"a", 7}, {"b", 7}, {"c", 7}, {"d", 7}, {"s", 1}});
        Polynomial L0 = generic_form(ring, "a", 1);
        Polynomial L1 = generic_form(ring, "b", 1);
        Polynomial M0 = generic_form(ring, "c", 1);
        Polynomial M1 = generic_form(ring, "d", 1);
        Polynomial s = Polynomial::variable(ring.grading, ring.field, "s0");
        Polynomial res = resultant_univariate(s * L0 + L1, s * M0 + M1, "s0");
        Polynomial det = determinant(PolynomialMatrix(2, 2, {L0, L1, M0, M1}));
        return check(res.equals_up_to_scalar(det),
                     "Res_s = L0*M1 - L1*M0 up to sign");
      });

  add("d8.nodes4",
      "degree of the singular locus of the net of quadrics model in P^6",
      "sec. 6: P cap {Q_0=Q_1=0} = {p_1,...,p_4}", ClaimKind::zerodim, "4",
      [](const RunConfig& config) {
        return projective_count_claim(
            config, 4, 0x84, [](const CoefficientField& k, std::uint64_t s) {
              Grading g = Grading::standard(
                  {"x0", "x1", "x2", "x3", "x4", "x5", "x6"});
              return std::vector<Polynomial>{
                  random_form(g, {1}, k, mix_seed(s, 1)),
                  random_form(g, {1}, k, mix_seed(s, 2)),
                  random_form(g, {1}, k, mix_seed(s, 3)),
                  random_form(g, {1}, k, mix_seed(s, 4)),
                  random_form(g, {2}, k, mix_seed(s, 5)),
                  random_form(g, {2}, k, mix_seed(s, 6))};
            });
      });

  add("d8.septic",
      "plane septic discriminant: genus 15, matching h^{1,2}=14 via the Prym "
      "dimension",
      "sec. 6: discriminant D in P^2 of degree seven", ClaimKind::chow,
      "g=15, g-1=14", [](const RunConfig&) {
        RingPresentation p2 = projective_plane();
        long g = adjunction_genus(p2, lin_class(p2, {{7, "H"}}));
        return check(g == 15 && g - 1 == 14, "g=" + std::to_string(g));
      });

  // ---- double cover of the Veronese cone (sec. 7.1) ----

  add("v1.pres",
      "self-consistency of the P(O+O(-2))/P^2 presentation: deg(E^3)=4, "
      "xi restricts trivially to E, deg(point)=1",
      "sec. 7.1: [E] = xi - 2h", ClaimKind::chow, "E^3=4, xi.E=0",
      [](const RunConfig&) {
        RingPresentation p = blown_up_veronese();
        Polynomial e = p.poly("xi") - p.poly("h") * mpq_class(2);
        long e3 = degree(p, ChowClass(p, e.pow(3)));
        bool xie = p.normal_form(p.poly("xi") * e).is_zero();
        long pt = degree(p, ChowClass(p, p.poly("xi") * p.poly("h", 2)));
        return check(e3 == 4 && xie && pt == 1,
                     "E^3=" + std::to_string(e3) +
                         (xie ? ", xi.E=0" : ", xi.E!=0"));
      });

  add("v1.adj", "adjunction on the proper transform: K + [B~] = h",
      "sec. 7.1: K_{B~} = h|_{B~}", ClaimKind::chow, "K+[B~]=h",
      [](const RunConfig&) {
        RingPresentation p = blown_up_veronese();
        Polynomial bt = p.poly("xi") * mpq_class(2) + p.poly("h") * mpq_class(2);
        Polynomial lhs = p.normal_form(p.canonical_class() + bt);
        bool ok = lhs == p.normal_form(p.poly("h"));
        return check(ok, ok ? "K+[B~]=h" : lhs.to_string());
      });

  add("v1.conic", "the branch transform meets the exceptional plane in a conic",
      "sec. 7.1: B~ meets E in a plane conic C", ClaimKind::chow, "2",
      [](const RunConfig&) {
        RingPresentation p = blown_up_veronese();
        Polynomial e = p.poly("xi") - p.poly("h") * mpq_class(2);
        Polynomial bt = p.poly("xi") * mpq_class(2) + p.poly("h") * mpq_class(2);
        long v = degree(p, ChowClass(p, e * bt * p.poly("h")));
        return check(v == 2, std::to_string(v));
      });

  add("v1.genus21", "the plane octic discriminant has genus 21",
      "sec. 7.1: The curve D has genus 21", ClaimKind::chow, "21",
      [](const RunConfig&) {
        RingPresentation p2 = projective_plane();
        long g = adjunction_genus(p2, lin_class(p2, {{8, "H"}}));
        return check(g == 21, std::to_string(g));
      });

  add("v1.params",
      "parameter count for octics eight-tangent to the conic: 44 - 8 - 3 = 33",
      "sec. 7.1: D depends on 44-8-3=33 parameters", ClaimKind::arithmetic,
      "33", [](const RunConfig&) {
        long sys = linear_system_dim({2}, {8});
        LedgerEntry e{"44-8-3=33",
                      {{"octic linear system", sys},
                       {"tangency conditions", -8},
                       {"unlabeled in paper", -3}},
                      33};
        return check(sys == 44 && ledger_holds(e),
                     std::to_string(sys) + "-8-3=" + std::to_string(sys - 11));
      });

  add("v1.prym",
      "Prym dimension bookkeeping: h^1(Omega^2) of the resolution is "
      "genus(D)-1 = 20, and the two-torsion class eta has degree zero",
      "sec. 7.1: The curve D has genus 21 so h^1(Omega^2) = 20",
      ClaimKind::arithmetic, "20; deg(eta)=0", [](const RunConfig&) {
        RingPresentation p2 = projective_plane();
        long g = adjunction_genus(p2, lin_class(p2, {{8, "H"}}));
        // eta = O_D(1) tensor I_Z: degree deg(D.H) - #Z with D cap C = 2Z
        long dc = intersection_number(p2, lin_class(p2, {{8, "H"}}),
                                      lin_class(p2, {{2, "H"}}));
        long z = dc / 2;
        long deg_o1 = intersection_number(p2, lin_class(p2, {{8, "H"}}),
                                          lin_class(p2, {{1, "H"}}));
        long eta = deg_o1 - z;
        return check(g - 1 == 20 && eta == 0,
                     std::to_string(g - 1) + "; deg(eta)=" + std::to_string(eta));
      });

  // ---- quartic double solids (sec. 7.2) ----

  add("qds.genus10", "the plane sextic discriminant has genus 10",
      "sec. 7.2: branched along a sextic plane curve D", ClaimKind::chow, "10",
      [](const RunConfig&) {
        RingPresentation p2 = projective_plane();
        long g = adjunction_genus(p2, lin_class(p2, {{6, "H"}}));
        return check(g == 10, std::to_string(g));
      });

  add("qds.eta",
      "six-tangent conic bookkeeping: eta = O_D(1)(-Z) has degree zero and "
      "the nodal Hodge number is genus-1 = 9",
      "sec. 7.2: D cap C = 2Z, Z = z_1+...+z_6", ClaimKind::arithmetic,
      "deg(eta)=0; 9", [](const RunConfig&) {
        RingPresentation p2 = projective_plane();
        ChowClass d = lin_class(p2, {{6, "H"}});
        long dc = intersection_number(p2, d, lin_class(p2, {{2, "H"}}));
        long eta = intersection_number(p2, d, lin_class(p2, {{1, "H"}})) - dc / 2;
        long g = adjunction_genus(p2, d);
        return check(eta == 0 && g - 1 == 9,
                     "deg(eta)=" + std::to_string(eta) + "; " +
                         std::to_string(g - 1));
      });

  // ---- double covers of P^1 x P^2 (sec. 8.1) ----

  add("p12.params",
      "parameter count for (2,4) double covers of P^1 x P^2: "
      "3x15 - (1+3+8) = 33",
      "sec. 8.1: 3x15-(1+3+8)=33", ClaimKind::arithmetic, "33",
      [](const RunConfig&) {
        long sections = linear_system_dim({1, 2}, {2, 4}) + 1;
        LedgerEntry e{"3x15-(1+3+8)=33",
                      {{"sections of (2,4)", sections},
                       {"scaling", -1},
                       {"automorphisms of P^1", -3},
                       {"automorphisms of P^2", -8}},
                      33};
        return check(sections == 45 && ledger_holds(e),
                     std::to_string(sections) + "-(1+3+8)=" +
                         std::to_string(sections - 12));
      });

  add("p12.cremona",
      "(2,4) divisors singular along the two lines correspond exactly to "
      "(2,2,2) divisors: 27-dimensional space, injective pullback, image "
      "inside the constrained space",
      "sec. 8.1: B_0 is mapped to a (2,2,2) divisor in the image",
      ClaimKind::birat, "dim=27, kernel=0, image contained",
      [](const RunConfig&) {
        RationalMapSpec map = maps::id_cross_cremona();
        LinearConditionSet cond = two_line_conditions();
        long dim = constrained_form_space_dim(cond);
        long ker = pullback_kernel_dim(map, {2, 2, 2});
        // every pullback of a (2,2,2) monomial satisfies the conditions
        auto rows = cond.condition_rows();
        auto src_basis = monomial_basis(map.source.grading, {2, 4});
        std::map<Polynomial::Exponents, std::size_t> idx;
        for (std::size_t i = 0; i < src_basis.size(); ++i) idx[src_basis[i]] = i;
        bool contained = true;
        for (const auto& mono : monomial_basis(map.target.grading, {2, 2, 2})) {
          Polynomial pb = pullback(
              map, Polynomial::monomial(map.target.grading,
                                        CoefficientField::rationals(), mono, 1));
          std::vector<mpq_class> vec(src_basis.size(), 0);
          for (const auto& [e, c] : pb.terms()) vec[idx.at(e)] = c;
          for (const auto& row : rows) {
            mpq_class dot = 0;
            for (std::size_t i = 0; i < vec.size(); ++i) dot += row[i] * vec[i];
            if (dot != 0) contained = false;
          }
        }
        return check(dim == 27 && ker == 0 && contained,
                     "dim=" + std::to_string(dim) +
                         ", kernel=" + std::to_string(ker) +
                         (contained ? ", image contained" : ", image escapes"));
      });

  // ---- (2,2) divisors in P^2 x P^2 (sec. 8.2) ----

  add("p22.params",
      "(2,2) divisors in P^2 x P^2 depend on 19 parameters "
      "(implementer-supplied reading 36-1-16)",
      "sec. 8.2: depending on 19 parameters", ClaimKind::arithmetic, "19",
      [](const RunConfig&) {
        long sections = linear_system_dim({2, 2}, {2, 2}) + 1;
        LedgerEntry e{"36-1-16=19 [implementer-supplied reading]",
                      {{"sections of (2,2)", sections},
                       {"scaling", -1},
                       {"automorphisms of P^2 x P^2 (no swap)", -16}},
                      19};
        return check(sections == 36 && ledger_holds(e),
                     std::to_string(sections) + "-1-16=" +
                         std::to_string(sections - 17));
      });

  add("p22.f12params",
      "double covers of the flag variety depend on 18 parameters "
      "(implementer-supplied reading 36-9-1-8)",
      "sec. 8.2: This depends on 18 parameters", ClaimKind::arithmetic, "18",
      [](const RunConfig&) {
        long sections = linear_system_dim({2, 2}, {2, 2}) + 1;
        long flag_forms = linear_system_dim({2, 2}, {1, 1}) + 1;
        LedgerEntry e{"36-9-1-8=18 [implementer-supplied reading]",
                      {{"sections of (2,2)", sections},
                       {"multiples of the flag equation", -flag_forms},
                       {"scaling", -1},
                       {"automorphisms of F(1,2)", -8}},
                      18};
        return check(sections == 36 && flag_forms == 9 && ledger_holds(e),
                     std::to_string(sections) + "-" + std::to_string(flag_forms) +
                         "-1-8=18");
      });

  add("p22.lattice",
      "the K3 lattice Phi embeds into the 2-node quartic lattice via "
      "f_1 = h - R_1, f_2 = h - R_2; bounded search rediscovers it",
      "sec. 8.2: f_1 = h - R_1, f_2 = h - R_2", ClaimKind::lattice,
      "embedding verified and found", [](const RunConfig&) {
        LatticeMap m = lattices::phi_embedding();
        if (!verify_embedding(m)) return fail_with("pairing not preserved");
        auto found = search_embeddings(lattices::phi(),
                                       lattices::two_node_quartic(), 1);
        bool contains = std::find(found.begin(), found.end(), m) != found.end();
        return check(contains, "verified; search found " +
                                   std::to_string(found.size()) + " embeddings");
      });

  add("p22.proj",
      "projection from two nodes: the (1,1) pullback kernel is the flag "
      "equation; every sampled 2-nodal quartic transfers to a (2,2) form; "
      "smooth quartics do not",
      "sec. 8.2: complete intersection of hypersurfaces of degrees (1,1) and "
      "(2,2)",
      ClaimKind::birat, "kernel=1; 5/5 transfer; 0/5 controls",
      [](const RunConfig& config) {
        RationalMapSpec map = maps::two_point_projection();
        long ker = pullback_kernel_dim(map, {1, 1});
        if (ker != 1) return fail_with("kernel=" + std::to_string(ker));
        LinearConditionSet cond = nodal_quartic_conditions(2);
        int transferred = 0, controls_failed = 0;
        for (int t = 0; t < 5; ++t) {
          Polynomial q = sample_constrained_form(cond, mix_seed(config.seed, t));
          if (model_transfer_solvable(map, {2, 2}, q, std::nullopt))
            ++transferred;
          Polynomial smooth =
              random_form(map.source.grading, {4}, CoefficientField::rationals(),
                          mix_seed(config.seed, 100 + t));
          if (!model_transfer_solvable(map, {2, 2}, smooth, std::nullopt))
            ++controls_failed;
        }
        return check(transferred == 5 && controls_failed == 5,
                     "kernel=1; " + std::to_string(transferred) +
                         "/5 transfer; " + std::to_string(5 - controls_failed) +
                         "/5 controls");
      });

  add("p22.sextic",
      "sextic discriminant of either projection: genus 10, nodal Hodge "
      "number 9",
      "sec. 8.2: a conic bundle over P^2 with sextic discriminant",
      ClaimKind::chow, "g=10, g-1=9", [](const RunConfig&) {
        RingPresentation p2 = projective_plane();
        long g = adjunction_genus(p2, lin_class(p2, {{6, "H"}}));
        return check(g == 10 && g - 1 == 9, "g=" + std::to_string(g));
      });

  // ---- (2,2,2) double covers (sec. 8.4) ----

  add("v222.params",
      "(2,2,2) double covers of (P^1)^3 depend on 27 - 1 - 9 = 17 parameters",
      "sec. 8.4: These depend on 27-1-9=17 parameters", ClaimKind::arithmetic,
      "17", [](const RunConfig&) {
        long sections = linear_system_dim({1, 1, 1}, {2, 2, 2}) + 1;
        LedgerEntry e{"27-1-9=17",
                      {{"sections of (2,2,2)", sections},
                       {"scaling", -1},
                       {"automorphisms of (P^1)^3 (no swap)", -9}},
                      17};
        return check(sections == 27 && ledger_holds(e),
                     std::to_string(sections) + "-1-9=" +
                         std::to_string(sections - 10));
      });

  add("v222.lattice",
      "the lattice Pi embeds into the 3-node quartic lattice via "
      "E_i = h - R_j - R_k; R_0 = h - R_1 - R_2 - R_3 is a (-2)-class and "
      "E_i = R_0 + R_i",
      "sec. 8.4: E_1 = h - R_2 - R_3, E_2 = h - R_1 - R_3, E_3 = h - R_1 - R_2",
      ClaimKind::lattice, "embedding verified and found; R0^2=-2",
      [](const RunConfig&) {
        LatticeMap m = lattices::pi_embedding();
        if (!verify_embedding(m)) return fail_with("pairing not preserved");
        auto found = search_embeddings(lattices::pi(),
                                       lattices::three_node_quartic(), 1);
        bool contains = std::find(found.begin(), found.end(), m) != found.end();
        IntegerLattice nodal = lattices::three_node_quartic();
        std::vector<long> r0 = {1, -1, -1, -1};
        long r0sq = gram_product(nodal, r0, r0);
        bool ids = class_identity(nodal, {1, 0, -1, -1},
                                  {1 + 0, -1 + 1, -1, -1}) &&
                   class_identity(nodal, {1, -1, 0, -1}, {1, -1, -1 + 1, -1}) &&
                   class_identity(nodal, {1, -1, -1, 0}, {1, -1, -1, -1 + 1});
        return check(contains && r0sq == -2 && ids,
                     "search found " + std::to_string(found.size()) +
                         "; R0^2=" + std::to_string(r0sq));
      });

  add("v222.disc44",
      "the determinant of the symmetric 2x2 matrix of (2,2) forms has "
      "bidegree (4,4)",
      "sec. 8.4: discriminant D of bidegree (4,4)", ClaimKind::symbolic,
      "(4,4)", [](const RunConfig& config) {
        Grading g = Grading::product({{"a0", "a1"}, {"b0", "b1"}});
        auto Q = CoefficientField::rationals();
        Polynomial m11 = random_form(g, {2, 2}, Q, mix_seed(config.seed, 11));
        Polynomial m12 = random_form(g, {2, 2}, Q, mix_seed(config.seed, 12));
        Polynomial m22 = random_form(g, {2, 2}, Q, mix_seed(config.seed, 22));
        Polynomial det =
            determinant(PolynomialMatrix(2, 2, {m11, m12, m12, m22}));
        Multidegree d = multidegree_of(det);
        return check(d == Multidegree{4, 4}, to_string(d));
      });

  add("v222.eta",
      "the two-torsion class: (E_1 + E_2 - E_3) . 4(E_1 + E_2) = 0 in Pi",
      "sec. 8.4: D == 4(E_1 + E_2); E_1 + E_2 - E_3 restricts to a "
      "two-torsion divisor eta",
      ClaimKind::lattice, "0", [](const RunConfig&) {
        long v = gram_product(lattices::pi(), {1, 1, -1}, {4, 4, 0});
        return check(v == 0, std::to_string(v));
      });

  add("v222.trilinear",
      "3-nodal quartics transfer to (2,2,2) forms through the trilinear map "
      "with a quadric cofactor; smooth quartics do not",
      "sec. 8.4: This maps B_0 birationally onto a (2,2,2) nodal K3 surface",
      ClaimKind::birat, "5/5 transfer; 0/5 controls",
      [](const RunConfig& config) {
        RationalMapSpec map = maps::trilinear();
        LinearConditionSet cond = nodal_quartic_conditions(3);
        Multidegree quadric{2};
        int transferred = 0, controls_failed = 0;
        for (int t = 0; t < 5; ++t) {
          Polynomial q = sample_constrained_form(cond, mix_seed(config.seed, 200 + t));
          if (model_transfer_solvable(map, {2, 2, 2}, q, quadric))
            ++transferred;
          Polynomial smooth =
              random_form(map.source.grading, {4}, CoefficientField::rationals(),
                          mix_seed(config.seed, 300 + t));
          if (!model_transfer_solvable(map, {2, 2, 2}, smooth, quadric))
            ++controls_failed;
        }
        return check(transferred == 5 && controls_failed == 5,
                     std::to_string(transferred) + "/5 transfer; " +
                         std::to_string(5 - controls_failed) + "/5 controls");
      });

  // ---- the case tables (sec. 2) ----

  add("cases.table",
      "invariant table consistency and the Prym dimension ledger for every "
      "conic-bundle case with a discriminant model",
      "sec. 2: invariants (r, -K^3, h^{1,2})", ClaimKind::arithmetic,
      "all cases consistent", [this](const RunConfig& config) {
        int with_model = 0;
        for (const auto& c : cases_) {
          if (c.degree <= 0 || c.h12 < 0)
            return fail_with("bad invariants for " + c.description);
          if (!c.discriminant_model) continue;
          ++with_model;
          ClaimResult r = prym_ledger(c, config);
          if (r.status != ClaimStatus::pass)
            return fail_with(c.description + ": genus-1=" + r.computed +
                             " != " + r.expected);
        }
        return pass_with(std::to_string(cases_.size()) + " cases, " +
                         std::to_string(with_model) + " Prym ledgers hold");
      });

  std::sort(claims_.begin(), claims_.end(),
            [](const Claim& a, const Claim& b) { return a.id < b.id; });

  // ---- invariant tables of sec. 2 ----
  auto model_p2 = [](long d) {
    return FanoCase::DiscriminantModel{"P2", {d}};
  };
  cases_ = {
      {1, 1, 2, 52, "double cover of P^3 ramified in a sextic surface", {}},
      {1, 1, 4, 30, "quartic threefold in P^4", {}},
      {1, 1, 6, 20, "intersection of a quadric and a cubic in P^5", {}},
      {1, 1, 8, 14, "intersection of three quadrics in P^6", model_p2(7)},
      {1, 1, 10, 10, "codim-2 linear section of Gr(2,5) cut by a quadric", {}},
      {1, 1, 14, 5, "codim-5 linear section of Gr(2,5)", {}},
      {1, 2, 8, 21, "V_1: double cover of the Veronese cone", {}},
      {1, 2, 16, 10, "V_2: double cover of P^3 branched in a quartic", {}},
      {1, 2, 24, 5, "V_3: cubic threefold in P^4", {}},
      {2, 1, 6, 20, "double cover of P^1 x P^2 branched in a (2,4) divisor",
       model_p2(8)},
      {2, 1, 12, 9, "divisor of bidegree (2,2) in P^2 x P^2", model_p2(6)},
      {2, 1, 14, 9, "double cover of Bl_p(P^3) with anticanonical branch",
       model_p2(6)},
      {3, 1, 12, 8, "double cover of (P^1)^3 branched in a (2,2,2) divisor",
       FanoCase::DiscriminantModel{"F0", {4, 4}}},
  };
}

}  // namespace fano3

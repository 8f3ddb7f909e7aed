// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fano3/birat.hpp"
#include "fano3/catalog.hpp"
#include "fano3/chow.hpp"
#include "fano3/groebner.hpp"
#include "fano3/lattice.hpp"

using namespace fano3;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL")
            << " - " << detail << "\n";
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ChowClass cls(const RingPresentation& p,
              std::vector<std::pair<long, std::string>> coeffs) {
  Polynomial v = p.zero();
  for (auto& [c, n] : coeffs) v = v + p.poly(n) * mpq_class(c);
  return ChowClass(p, v);
}

long leading_value(const std::string& computed) {
  try {
    return std::stol(computed);
  } catch (const std::exception&) {
    return -1;
  }
}

// degrevlex-leading exponent of a polynomial, for the S-polynomial check
Polynomial::Exponents leading_exponents(const Polynomial& f) {
  auto less = [](const Polynomial::Exponents& a,
                 const Polynomial::Exponents& b) {
    long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  };
  Polynomial::Exponents best;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (first || less(best, e)) best = e;
    first = false;
  }
  return best;
}

bool s_polynomials_reduce(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
      const Polynomial &f = gb.basis[i], &g = gb.basis[j];
      auto lf = leading_exponents(f), lg = leading_exponents(g);
      Polynomial::Exponents mf(lf.size()), mg(lf.size());
      for (std::size_t k = 0; k < lf.size(); ++k) {
        int lcm = std::max(lf[k], lg[k]);
        mf[k] = lcm - lf[k];
        mg[k] = lcm - lg[k];
      }
      mpq_class cf = gb.field.invert(f.coefficient(lf));
      mpq_class cg = gb.field.invert(g.coefficient(lg));
      Polynomial s =
          Polynomial::monomial(f.grading(), gb.field, mf, cf) * f -
          Polynomial::monomial(f.grading(), gb.field, mg, cg) * g;
      if (!normal_form(s, gb).is_zero()) return false;
    }
  }
  return true;
}

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& binary, const std::string& args,
               const std::string& out_path) {
  std::string cmd = binary + " " + args + " > " + out_path + " 2>/dev/null";
  int ret = std::system(cmd.c_str());
  CliRun r;
  r.exit_code = (ret >= 0 && WIFEXITED(ret)) ? WEXITSTATUS(ret) : -1;
  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const auto& reg = ClaimRegistry::instance();
  RunConfig config;

  // 1. exact Chow degrees on the P^1-bundle
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    try {
      RingPresentation p = presentations::height22_bundle();
      Polynomial xi = p.poly("xi"), h = p.poly("h");
      ok = degree(p, ChowClass(p, xi.pow(5))) == 4;
      ok = ok && degree(p, ChowClass(p, (xi - h).pow(3) * (xi * mpq_class(2)) *
                                            (xi * mpq_class(2) - h))) == 2;
      Polynomial kx = p.normal_form(p.canonical_class() +
                                    (xi * mpq_class(2) - h) + xi * mpq_class(2));
      Polynomial r = p.normal_form(kx + (xi - h) * mpq_class(4));
      ok = ok && r == p.normal_form((xi - h) * mpq_class(3));
      ok = ok && degree(p, ChowClass(p, r * (xi - h).pow(2) *
                                            (xi * mpq_class(2)) *
                                            (xi * mpq_class(2) - h))) == 6;
      detail = "xi^5=4, deg(phi)=2, R=3(xi-h), branch degree 6";
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double s = seconds_since(t0);
    report(1, ok && s < 1.0, detail + " [" + std::to_string(s) + "s]");
  }

  // 2. symbolic determinantal identity
  {
    auto t0 = Clock::now();
    ClaimResult r = reg.run_claim("h22.detM", config);
    double s = seconds_since(t0);
    report(2, r.status == ClaimStatus::pass && s < 30.0,
           r.computed + " [" + std::to_string(s) + "s]");
  }

  // 3. node counts over F_p (modal across trials and both primes)
  long minors_count = -1, lqq_count = -1;
  {
    auto t0 = Clock::now();
    ClaimResult r = reg.run_claim("h22.minors32", config);
    double s = seconds_since(t0);
    minors_count = leading_value(r.computed);
    bool ok = r.status == ClaimStatus::pass && s < 120.0;

    auto t1 = Clock::now();
    ClaimResult r4 = reg.run_claim("h22.lqq4", config);
    ClaimResult r8 = reg.run_claim("d6.nodes8", config);
    ClaimResult rn4 = reg.run_claim("d8.nodes4", config);
    double s1 = seconds_since(t1);
    lqq_count = leading_value(r4.computed);
    ok = ok && r4.status == ClaimStatus::pass &&
         r8.status == ClaimStatus::pass && rn4.status == ClaimStatus::pass &&
         s1 < 20.0;
    report(3, ok,
           "minors=" + std::to_string(minors_count) + " lqq=" +
               std::to_string(lqq_count) + " d6=" +
               std::to_string(leading_value(r8.computed)) + " d8=" +
               std::to_string(leading_value(rn4.computed)) + " [" +
               std::to_string(s + s1) + "s]");
  }

  // 4. ledgers built from the counts just computed
  {
    auto t0 = Clock::now();
    LedgerEntry n{"n = minors + extra",
                  {{"minors", minors_count}, {"lqq", lqq_count}},
                  36};
    LedgerEntry hodge{"52 = n - r + 1 + h12",
                      {{"n", minors_count + lqq_count},
                       {"-r", -2},
                       {"+1", 1},
                       {"h12", 17}},
                      52};
    bool ok = ledger_holds(n) && ledger_holds(hodge);
    double s = seconds_since(t0);
    report(4, ok && s < 1.0,
           "36=" + std::to_string(minors_count) + "+" +
               std::to_string(lqq_count) + "; 52=36-2+1+17");
  }

  // 5. genus suite
  {
    auto t0 = Clock::now();
    bool ok = true;
    RingPresentation f1 = presentations::hirzebruch_f1();
    RingPresentation f0 = presentations::quadric_surface();
    RingPresentation p2 = presentations::projective_plane();
    for (long n = 3; n <= 6; ++n) {
      ChowClass d = cls(f1, {{5, "xi"}, {n + 3, "f"}});
      ChowClass d1 = cls(f1, {{2, "xi"}, {3, "f"}});
      ChowClass d2 = cls(f1, {{3, "xi"}, {n, "f"}});
      ok = ok && adjunction_genus(f1, d) == 4 * n - 2;
      ok = ok && adjunction_genus(f1, d1) == 1;
      ok = ok && adjunction_genus(f1, d2) == 2 * n - 5;
      ok = ok && adjunction_genus(f1, d) ==
                     adjunction_genus(f1, d1) + adjunction_genus(f1, d2) +
                         intersection_number(f1, d1, d2) - 1;
    }
    for (long n = 4; n <= 7; ++n) {
      ChowClass d = cls(f0, {{n, "a"}, {5, "b"}});
      ChowClass d1 = cls(f0, {{2, "a"}, {2, "b"}});
      ChowClass d2 = cls(f0, {{n - 2, "a"}, {3, "b"}});
      ok = ok && adjunction_genus(f0, d) == 4 * n - 4;
      ok = ok && adjunction_genus(f0, d1) == 1;
      ok = ok && adjunction_genus(f0, d2) == 2 * n - 6;
      ok = ok && adjunction_genus(f0, d) ==
                     adjunction_genus(f0, d1) + adjunction_genus(f0, d2) +
                         intersection_number(f0, d1, d2) - 1;
    }
    ok = ok && adjunction_genus(p2, cls(p2, {{8, "H"}})) == 21;
    ok = ok && adjunction_genus(p2, cls(p2, {{6, "H"}})) == 10;
    ok = ok && adjunction_genus(p2, cls(p2, {{7, "H"}})) == 15;
    ok = ok && adjunction_genus(f0, cls(f0, {{4, "a"}, {4, "b"}})) == 9;
    double s = seconds_since(t0);
    report(5, ok && s < 1.0, "del Pezzo and plane/quadric genera");
  }

  // 6. Prym dimension ledger over the case table
  {
    std::vector<std::pair<long, long>> seen;  // (curve marker, h12)
    bool ok = true;
    int models = 0;
    for (const auto& c : reg.cases()) {
      if (!c.discriminant_model) continue;
      ++models;
      ok = ok && prym_ledger(c, config).status == ClaimStatus::pass;
    }
    ok = ok && models == 5;
    report(6, ok, std::to_string(models) + " discriminant models, genus-1 = "
                                           "h^{1,2} for each");
  }

  // 7. lattice suite
  {
    auto t0 = Clock::now();
    bool ok = verify_embedding(lattices::phi_embedding()) &&
              verify_embedding(lattices::pi_embedding());
    auto phi_found =
        search_embeddings(lattices::phi(), lattices::two_node_quartic(), 1);
    auto pi_found =
        search_embeddings(lattices::pi(), lattices::three_node_quartic(), 1);
    auto contains = [](const auto& v, const LatticeMap& m) {
      for (const auto& x : v)
        if (x == m) return true;
      return false;
    };
    ok = ok && contains(phi_found, lattices::phi_embedding());
    ok = ok && contains(pi_found, lattices::pi_embedding());
    IntegerLattice nodal = lattices::three_node_quartic();
    ok = ok && gram_product(nodal, {1, -1, -1, -1}, {1, -1, -1, -1}) == -2;
    ok = ok && class_identity(nodal, {1, 0, -1, -1}, {1, 0, -1, -1}) &&
         class_identity(nodal, {1, -1, 0, -1}, {1, -1, 0, -1});
    ok = ok && gram_product(lattices::pi(), {1, 1, -1}, {4, 4, 0}) == 0;
    double s = seconds_since(t0);
    report(7, ok && s < 5.0,
           "embeddings verified and rediscovered; R0^2=-2; eta.D=0 [" +
               std::to_string(s) + "s]");
  }

  // 8. birational transfers
  {
    auto t0 = Clock::now();
    ClaimResult proj = reg.run_claim("p22.proj", config);
    ClaimResult tri = reg.run_claim("v222.trilinear", config);
    ClaimResult crem = reg.run_claim("p12.cremona", config);
    double s = seconds_since(t0);
    bool ok = proj.status == ClaimStatus::pass &&
              tri.status == ClaimStatus::pass &&
              crem.status == ClaimStatus::pass && s < 60.0;
    report(8, ok,
           proj.computed + "; " + tri.computed + "; " + crem.computed + " [" +
               std::to_string(s) + "s]");
  }

  // 9. parameter-count identities
  {
    bool ok = true;
    for (const char* id : {"v1.params", "p12.params", "p22.params",
                           "p22.f12params", "v222.params"})
      ok = ok && reg.run_claim(id, config).status == ClaimStatus::pass;
    report(9, ok, "33, 33, 19, 18, 17");
  }

  // 10. engine oracles: Bezout products and the S-polynomial property
  {
    Grading p3 = Grading::standard({"x0", "x1", "x2", "x3"});
    auto k = CoefficientField::prime(config.prime);
    auto family = [&](std::vector<long> degs, std::uint64_t seed) {
      std::vector<Polynomial> out;
      for (std::size_t i = 0; i < degs.size(); ++i)
        out.push_back(random_form(p3, {degs[i]}, k, mix_seed(seed, i)));
      return out;
    };
    bool ok = projective_degree(family({2, 2, 2}, 1), 1, 3) == 8 &&
              projective_degree(family({1, 2, 2}, 2), 2, 3) == 4 &&
              projective_degree(family({1, 1, 4}, 3), 3, 3) == 4;
    for (std::uint64_t seed = 1; seed <= 3 && ok; ++seed) {
      auto gb = buchberger(family({2, 2, 2}, seed),
                           MonomialOrder::degrevlex(p3.variables));
      ok = ok && s_polynomials_reduce(gb);
    }
    report(10, ok, "Bezout 8/4/4; all S-polynomials reduce to zero");
  }

  // 11. CLI end-to-end
  {
    bool ok = true;
    std::string detail;
    if (argc < 2) {
      ok = false;
      detail = "cli binary path not supplied";
    } else {
      std::string cli = argv[1];
      std::string args = "verify --format json --omit-timings --seed 0";
      CliRun a = run_cli(cli, args, "/tmp/fano3_accept_a.json");
      CliRun b = run_cli(cli, args, "/tmp/fano3_accept_b.json");
      ok = a.exit_code == 0 && b.exit_code == 0 && a.output == b.output &&
           !a.output.empty();
      detail = "exit=" + std::to_string(a.exit_code) +
               (a.output == b.output ? ", byte-identical" : ", outputs differ");
      try {
        auto j = nlohmann::json::parse(a.output);
        const std::set<std::string> keys = {
            "claim_id", "description", "paper_ref", "status", "expected",
            "computed", "elapsed_ms", "seed",      "prime"};
        std::size_t passed = 0;
        for (const auto& item : j) {
          std::set<std::string> got;
          for (auto it = item.begin(); it != item.end(); ++it)
            got.insert(it.key());
          if (got != keys) ok = false;
          std::string status = item["status"].get<std::string>();
          if (status == "pass") ++passed;
          else if (status != "skipped") ok = false;
        }
        detail += ", " + std::to_string(passed) + "/" +
                  std::to_string(j.size()) + " pass (rest skipped slow)";
      } catch (const std::exception& e) {
        ok = false;
        detail += std::string(", json parse failed: ") + e.what();
      }
    }
    report(11, ok, detail);
  }

  std::cout << (failures == 0 ? "ACCEPTANCE: PASS"
                              : "ACCEPTANCE: FAIL (" +
                                    std::to_string(failures) + " criteria)")
            << "\n";
  return failures == 0 ? 0 : 1;
}

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fano3/polynomial.hpp"

namespace fano3 {

struct RunConfig {
  long prime = 32003;
  long second_prime = 31991;
  std::uint64_t seed = 0;
  int trials = 3;
  bool include_slow = false;
};

/// One row of the invariant tables: (picard rank, index, -K^3, h^{1,2}),
/// optionally with the discriminant curve of an associated conic bundle.
struct FanoCase {
  int picard_rank = 1;
  int index = 1;
  long degree = 0;  // -K^3
  long h12 = 0;
  std::string description;

  struct DiscriminantModel {
    std::string surface;       // catalog presentation name
    std::vector<long> curve;   // coefficients on the surface generators
  };
  std::optional<DiscriminantModel> discriminant_model;
};

/// Labeled-term arithmetic identity: sum of terms must equal the total.
struct LedgerTerm {
  std::string label;
  long value = 0;
};
struct LedgerEntry {
  std::string name;
  std::vector<LedgerTerm> terms;
  long total = 0;
};
bool ledger_holds(const LedgerEntry& e);

enum class ClaimKind { symbolic, chow, lattice, zerodim, birat, arithmetic };
enum class ClaimCost { fast, slow };
enum class ClaimStatus { pass, fail, skipped, unstable };

std::string to_string(ClaimStatus s);
std::string to_string(ClaimKind k);

struct ClaimOutcome {
  ClaimStatus status = ClaimStatus::fail;
  std::string computed;
};

/// Registry entry binding a citation to an executable check.
struct Claim {
  std::string id;
  std::string description;
  std::string paper_ref;  // citation with verbatim quote
  ClaimKind kind = ClaimKind::arithmetic;
  std::string expected;
  ClaimCost cost = ClaimCost::fast;
  std::function<ClaimOutcome(const RunConfig&)> run;
};

struct ClaimResult {
  std::string claim_id;
  std::string description;
  std::string paper_ref;
  ClaimStatus status = ClaimStatus::fail;
  std::string expected;
  std::string computed;
  long elapsed_ms = 0;
  std::uint64_t seed = 0;
  long prime = 0;
};

/// Projective dimension of the linear system of multidegree d forms on a
/// product of projective spaces: prod C(n_i + d_i, n_i) - 1.
long linear_system_dim(const std::vector<int>& dims, const Multidegree& d);

class ClaimRegistry {
 public:
  static const ClaimRegistry& instance();

  const std::vector<Claim>& claims() const { return claims_; }
  const std::vector<FanoCase>& cases() const { return cases_; }
  const Claim* find(const std::string& id) const;

  /// Executes one claim; unknown ids throw. Failures inside the check become
  /// status fail with a diagnostic in `computed`.
  ClaimResult run_claim(const std::string& id, const RunConfig& config) const;

  /// Runs every registered claim (slow ones only when opted in), in id order.
  std::vector<ClaimResult> run_all(const RunConfig& config) const;

 private:
  ClaimRegistry();
  std::vector<Claim> claims_;
  std::vector<FanoCase> cases_;
};

/// genus(discriminant curve) - 1 == h^{1,2}, for cases carrying a model.
ClaimResult prym_ledger(const FanoCase& c, const RunConfig& config);

}  // namespace fano3

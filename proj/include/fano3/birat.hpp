#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fano3/polynomial.hpp"

namespace fano3 {

/// Product of projective spaces with one variable block per factor.
struct AmbientSpec {
  std::vector<int> dims;  // projective dimension of each factor
  Grading grading;        // product grading over the factor blocks

  static AmbientSpec make(const std::vector<std::vector<std::string>>& blocks);
  int factors() const { return static_cast<int>(dims.size()); }
  bool operator==(const AmbientSpec&) const = default;
};

/// Rational map between products of projective spaces, given by coordinate
/// forms: for each target factor, dims+1 source forms of one common
/// multidegree, not all zero.
struct RationalMapSpec {
  AmbientSpec source;
  AmbientSpec target;
  std::vector<std::vector<Polynomial>> components;

  RationalMapSpec(AmbientSpec source, AmbientSpec target,
                  std::vector<std::vector<Polynomial>> components);

  /// Source multidegree of the pullback of a target form of multidegree d.
  Multidegree induced_degree(const Multidegree& d) const;
};

/// Substitution of the component forms into a homogeneous target form.
Polynomial pullback(const RationalMapSpec& map, const Polynomial& f);

/// Dimension of the space of target forms of multidegree d with zero pullback.
long pullback_kernel_dim(const RationalMapSpec& map, const Multidegree& d);

/// True iff nonzero target form F and nonzero cofactor K exist with
/// pullback(F) = q * K (K = 1 when cofactor_degree is empty). Exact linear
/// algebra over the rationals.
bool model_transfer_solvable(const RationalMapSpec& map,
                             const Multidegree& target_degree,
                             const Polynomial& q,
                             const std::optional<Multidegree>& cofactor_degree);

/// Linear conditions on the coefficients of an unknown form of fixed
/// multidegree. Each condition asks the listed partial derivatives to vanish
/// identically after substituting the assigned variables (all variables
/// assigned = a point-multiplicity-2 condition; some left free = vanishing
/// along a coordinate subvariety).
class LinearConditionSet {
 public:
  LinearConditionSet(AmbientSpec ambient, Multidegree degree);

  const AmbientSpec& ambient() const { return ambient_; }
  const Multidegree& degree() const { return degree_; }

  /// Multiplicity >= 2 at the point (one coordinate per variable).
  void add_node(const std::vector<mpq_class>& point);

  /// d(form)/dv = 0 for each v in `vars`, identically in the unassigned
  /// variables, after substituting `assignment` (nullopt = leave symbolic).
  void add_vanishing(const std::vector<std::string>& vars,
                     const std::vector<std::optional<mpq_class>>& assignment);

  /// Rows of the condition matrix over the monomial basis of the degree.
  std::vector<std::vector<mpq_class>> condition_rows() const;

 private:
  struct Condition {
    std::vector<std::string> vars;
    std::vector<std::optional<mpq_class>> assignment;
  };
  AmbientSpec ambient_;
  Multidegree degree_;
  std::vector<Condition> conditions_;
};

/// Dimension of the solution space of the conditions.
long constrained_form_space_dim(const LinearConditionSet& cond);

/// Deterministic sample from the solution space; throws when only the zero
/// form satisfies the conditions.
Polynomial sample_constrained_form(const LinearConditionSet& cond,
                                   std::uint64_t seed);

/// Rank of a rational matrix (rows of equal length), by exact elimination.
long rational_rank(std::vector<std::vector<mpq_class>> rows);

nlohmann::json map_spec_to_json(const RationalMapSpec& m);

/// The fixed maps of the birational-transfer claims.
namespace maps {
/// P^3 --> P^2 x P^2, projection from the two nodes e0, e1.
RationalMapSpec two_point_projection();
/// P^3 --> P^1 x P^1 x P^1, pencils of planes through pairs of the nodes
/// e0, e1, e2.
RationalMapSpec trilinear();
/// P^1 x P^2 --> P^1 x P^1 x P^1, identity times the blowup of [1:0:0] and
/// [0:1:0] followed by the blowdown of the joining line.
RationalMapSpec id_cross_cremona();
}  // namespace maps

}  // namespace fano3

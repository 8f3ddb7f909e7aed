#pragma once

#include <string>
#include <vector>

namespace fano3 {

/// Per-axis non-negative degrees, length = Grading::axes.
using Multidegree = std::vector<long>;

/// Variable list with a weight vector per variable. One axis gives the
/// ordinary grading; several axes carry bidegree/multidegree bookkeeping
/// (e.g. bidegree (2,4) forms on P^1 x P^2).
struct Grading {
  std::vector<std::string> variables;
  int axes = 1;
  std::vector<Multidegree> weights;  // one weight vector per variable

  Grading() = default;
  Grading(std::vector<std::string> vars, int naxes,
          std::vector<Multidegree> wts);

  /// Standard grading: every variable has weight 1 on a single axis.
  static Grading standard(std::vector<std::string> vars);

  /// Product-of-projective-spaces grading: block i of variables weighs 1 on
  /// axis i only.
  static Grading product(const std::vector<std::vector<std::string>>& blocks);

  bool operator==(const Grading&) const = default;

  std::size_t num_variables() const { return variables.size(); }
  int index_of(const std::string& name) const;  // -1 if absent

  Multidegree degree_of_exponents(const std::vector<int>& exps) const;
};

std::string to_string(const Multidegree& d);

}  // namespace fano3

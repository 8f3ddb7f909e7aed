#include "fano3/grading.hpp"

#include <stdexcept>

namespace fano3 {

Grading::Grading(std::vector<std::string> vars, int naxes,
                 std::vector<Multidegree> wts)
    : variables(std::move(vars)), axes(naxes), weights(std::move(wts)) {
  if (axes < 1) throw std::invalid_argument("grading needs at least one axis");
  if (weights.size() != variables.size())
    throw std::invalid_argument("one weight vector per variable required");
  for (const auto& w : weights) {
    if (static_cast<int>(w.size()) != axes)
      throw std::invalid_argument("weight vector length must equal axes");
    for (long x : w)
      if (x < 0) throw std::invalid_argument("weights must be non-negative");
  }
}

Grading Grading::standard(std::vector<std::string> vars) {
  std::vector<Multidegree> wts(vars.size(), Multidegree{1});
  return Grading(std::move(vars), 1, std::move(wts));
}

Grading Grading::product(const std::vector<std::vector<std::string>>& blocks) {
  std::vector<std::string> vars;
  std::vector<Multidegree> wts;
  const int axes = static_cast<int>(blocks.size());
  for (int b = 0; b < axes; ++b) {
    for (const auto& v : blocks[b]) {
      vars.push_back(v);
      Multidegree w(axes, 0);
      w[b] = 1;
      wts.push_back(w);
    }
  }
  return Grading(std::move(vars), axes, std::move(wts));
}

int Grading::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return static_cast<int>(i);
  return -1;
}

Multidegree Grading::degree_of_exponents(const std::vector<int>& exps) const {
  Multidegree d(axes, 0);
  for (std::size_t i = 0; i < exps.size(); ++i)
    for (int a = 0; a < axes; ++a) d[a] += exps[i] * weights[i][a];
  return d;
}

std::string to_string(const Multidegree& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

}  // namespace fano3

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fano3/polynomial.hpp"

namespace fano3 {

/// Total order on monomials compatible with multiplication.
struct MonomialOrder {
  enum class Kind { degrevlex, lex };
  Kind kind = Kind::degrevlex;
  std::vector<std::string> variables;  // most significant first

  static MonomialOrder degrevlex(std::vector<std::string> vars) {
    return {Kind::degrevlex, std::move(vars)};
  }
  static MonomialOrder lex(std::vector<std::string> vars) {
    return {Kind::lex, std::move(vars)};
  }
};

/// Reduced Groebner basis over a prime field.
struct GroebnerBasis {
  MonomialOrder order;
  CoefficientField field;
  Grading grading;
  std::vector<Polynomial> basis;
};

/// Buchberger's algorithm with the coprime-leading-term and chain criteria;
/// output is the reduced basis, deterministic for given inputs.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const MonomialOrder& order);

/// Full multivariate division remainder; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Number of standard monomials of a zero-dimensional ideal (= affine scheme
/// degree, with multiplicity). Throws when the staircase is infinite.
long quotient_dimension(const GroebnerBasis& gb);

struct ProjectiveDegreeReport {
  long modal = -1;                 // modal value across successful trials
  bool stable = false;             // all successful trials agree
  std::vector<long> trial_values;  // -1 marks a failed (non-zero-dim) trial
};

/// Degree of the projective zero locus of homogeneous generators: per trial,
/// apply a seeded random invertible linear change of coordinates,
/// dehomogenize by the last variable, and count the quotient dimension.
ProjectiveDegreeReport projective_degree_report(
    const std::vector<Polynomial>& gens, std::uint64_t seed, int trials);

/// Modal value of the report; throws if every trial failed.
long projective_degree(const std::vector<Polynomial>& gens, std::uint64_t seed,
                       int trials);

/// Deterministic stream mixer for deriving per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace fano3

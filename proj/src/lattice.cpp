#include "fano3/lattice.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fano3 {

IntegerLattice::IntegerLattice(std::string n, std::vector<std::string> b,
                               std::vector<std::vector<long>> g)
    : name(std::move(n)), basis(std::move(b)), gram(std::move(g)) {
  const std::size_t r = basis.size();
  if (r == 0) throw std::invalid_argument("rank must be positive");
  if (gram.size() != r) throw std::invalid_argument("gram size != rank");
  for (std::size_t i = 0; i < r; ++i) {
    if (gram[i].size() != r) throw std::invalid_argument("gram not square");
    for (std::size_t j = 0; j < r; ++j)
      if (gram[i][j] != gram[j][i])
        throw std::invalid_argument("gram matrix must be symmetric");
  }
}

LatticeMap::LatticeMap(IntegerLattice s, IntegerLattice t,
                       std::vector<std::vector<long>> m)
    : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {
  if (matrix.size() != static_cast<std::size_t>(target.rank()))
    throw std::invalid_argument("matrix must have target.rank rows");
  for (const auto& row : matrix)
    if (row.size() != static_cast<std::size_t>(source.rank()))
      throw std::invalid_argument("matrix must have source.rank columns");
}

long gram_product(const IntegerLattice& l, const std::vector<long>& v,
                  const std::vector<long>& w) {
  const int r = l.rank();
  if (static_cast<int>(v.size()) != r || static_cast<int>(w.size()) != r)
    throw std::invalid_argument("vector length must equal rank");
  long acc = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) acc += v[i] * l.gram[i][j] * w[j];
  return acc;
}

bool verify_embedding(const LatticeMap& m) {
  const int s = m.source.rank();
  const int t = m.target.rank();
  // columns of the matrix, as target-coordinate vectors
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) {
      long acc = 0;
      for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
          acc += m.matrix[i][a] * m.target.gram[i][j] * m.matrix[j][b];
      if (acc != m.source.gram[a][b]) return false;
    }
  }
  return true;
}

std::vector<LatticeMap> search_embeddings(const IntegerLattice& src,
                                          const IntegerLattice& tgt,
                                          long bound, long long ceiling) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  if (src.rank() > tgt.rank())
    throw std::invalid_argument("source rank exceeds target rank");
  const int cells = src.rank() * tgt.rank();
  const long width = 2 * bound + 1;
  long double space = std::pow(static_cast<long double>(width), cells);
  if (space > static_cast<long double>(ceiling))
    throw std::domain_error("embedding search space exceeds ceiling");

  std::vector<LatticeMap> found;
  std::vector<long> cell(cells, -bound);
  // odometer over entries, row-major: lexicographic output order
  while (true) {
    std::vector<std::vector<long>> mat(tgt.rank(),
                                       std::vector<long>(src.rank()));
    for (int i = 0; i < tgt.rank(); ++i)
      for (int j = 0; j < src.rank(); ++j) mat[i][j] = cell[i * src.rank() + j];
    LatticeMap m(src, tgt, std::move(mat));
    if (verify_embedding(m)) found.push_back(std::move(m));
    int k = cells - 1;
    while (k >= 0 && cell[k] == bound) cell[k--] = -bound;
    if (k < 0) break;
    ++cell[k];
  }
  return found;
}

bool class_identity(const IntegerLattice& l, const std::vector<long>& lhs,
                    const std::vector<long>& rhs) {
  if (lhs.size() != static_cast<std::size_t>(l.rank()) ||
      rhs.size() != static_cast<std::size_t>(l.rank()))
    throw std::invalid_argument("vector length must equal rank");
  return lhs == rhs;
}

nlohmann::json lattice_to_json(const IntegerLattice& l) {
  return {{"name", l.name}, {"basis", l.basis}, {"gram", l.gram}};
}

IntegerLattice lattice_from_json(const nlohmann::json& j) {
  return IntegerLattice(j.at("name").get<std::string>(),
                        j.at("basis").get<std::vector<std::string>>(),
                        j.at("gram").get<std::vector<std::vector<long>>>());
}

nlohmann::json lattice_map_to_json(const LatticeMap& m) {
  return {{"source", lattice_to_json(m.source)},
          {"target", lattice_to_json(m.target)},
          {"matrix", m.matrix}};
}

LatticeMap lattice_map_from_json(const nlohmann::json& j) {
  return LatticeMap(lattice_from_json(j.at("source")),
                    lattice_from_json(j.at("target")),
                    j.at("matrix").get<std::vector<std::vector<long>>>());
}

namespace lattices {

IntegerLattice phi() {
  return IntegerLattice("Phi", {"f1", "f2"}, {{2, 4}, {4, 2}});
}

IntegerLattice pi() {
  return IntegerLattice("Pi", {"E1", "E2", "E3"},
                        {{0, 2, 2}, {2, 0, 2}, {2, 2, 0}});
}

IntegerLattice two_node_quartic() {
  return IntegerLattice("2-node quartic", {"h", "R1", "R2"},
                        {{4, 0, 0}, {0, -2, 0}, {0, 0, -2}});
}

IntegerLattice three_node_quartic() {
  return IntegerLattice("3-node quartic", {"h", "R1", "R2", "R3"},
                        {{4, 0, 0, 0}, {0, -2, 0, 0}, {0, 0, -2, 0},
                         {0, 0, 0, -2}});
}

LatticeMap phi_embedding() {
  // f1 = h - R1, f2 = h - R2
  return LatticeMap(phi(), two_node_quartic(), {{1, 1}, {-1, 0}, {0, -1}});
}

LatticeMap pi_embedding() {
  // E1 = h - R2 - R3, E2 = h - R1 - R3, E3 = h - R1 - R2
  return LatticeMap(pi(), three_node_quartic(),
                    {{1, 1, 1}, {0, -1, -1}, {-1, 0, -1}, {-1, -1, 0}});
}

}  // namespace lattices

}  // namespace fano3

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace fano3 {

/// Integer lattice given by a symmetric Gram matrix with labeled basis.
struct IntegerLattice {
  std::string name;
  std::vector<std::string> basis;          // labels, size = rank
  std::vector<std::vector<long>> gram;     // rank x rank, symmetric

  IntegerLattice(std::string name, std::vector<std::string> basis,
                 std::vector<std::vector<long>> gram);

  int rank() const { return static_cast<int>(basis.size()); }
  bool operator==(const IntegerLattice&) const = default;
};

/// Integer linear map between lattices; columns are images of source basis
/// vectors in target coordinates.
struct LatticeMap {
  IntegerLattice source;
  IntegerLattice target;
  std::vector<std::vector<long>> matrix;  // target.rank rows x source.rank cols

  LatticeMap(IntegerLattice source, IntegerLattice target,
             std::vector<std::vector<long>> matrix);

  bool operator==(const LatticeMap&) const = default;
};

/// v^T . gram . w
long gram_product(const IntegerLattice& l, const std::vector<long>& v,
                  const std::vector<long>& w);

/// True iff the map preserves the pairing: M^T G_target M == G_source.
bool verify_embedding(const LatticeMap& m);

/// All integer matrices with entries in [-bound, bound] passing
/// verify_embedding, in lexicographic order of their entry list. Throws when
/// the candidate count exceeds `ceiling`.
std::vector<LatticeMap> search_embeddings(const IntegerLattice& src,
                                          const IntegerLattice& tgt,
                                          long bound,
                                          long long ceiling = 100000000LL);

/// Componentwise equality of two coordinate vectors.
bool class_identity(const IntegerLattice& l, const std::vector<long>& lhs,
                    const std::vector<long>& rhs);

nlohmann::json lattice_to_json(const IntegerLattice& l);
IntegerLattice lattice_from_json(const nlohmann::json& j);
nlohmann::json lattice_map_to_json(const LatticeMap& m);
LatticeMap lattice_map_from_json(const nlohmann::json& j);

/// The fixed lattice catalog of the K3 arguments.
namespace lattices {
IntegerLattice phi();                 // [[2,4],[4,2]] in basis f1,f2
IntegerLattice pi();                  // diag 0, off-diagonal 2 in basis E1,E2,E3
IntegerLattice two_node_quartic();    // <4,-2,-2> in basis h,R1,R2
IntegerLattice three_node_quartic();  // <4,-2,-2,-2> in basis h,R1,R2,R3
LatticeMap phi_embedding();           // f1 = h-R1, f2 = h-R2
LatticeMap pi_embedding();            // E_i = h - R_j - R_k
}  // namespace lattices

}  // namespace fano3

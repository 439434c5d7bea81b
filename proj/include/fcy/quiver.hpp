#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fcy/matrix.hpp"

namespace fcy {

// Finite connected quiver.  Vertices are 0-based; arrows are ordered
// (source, target) pairs and parallel arrows are allowed.
class Quiver {
 public:
  Quiver(int vertex_count, std::vector<std::pair<int, int>> arrows);

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  bool acyclic() const { return acyclic_; }

  bool operator==(const Quiver& o) const {
    return vertex_count_ == o.vertex_count_ && arrows_ == o.arrows_;
  }

  nlohmann::json to_json() const;
  static Quiver from_json(const nlohmann::json& j);

  // n vertices {x=0, y=1} with n parallel arrows x -> y
  static Quiver kronecker(int n);
  // linear A_n orientation 0 -> 1 -> ... -> n-1
  static Quiver linear(int n);
  // cyclic orientation 0 -> 1 -> ... -> r-1 -> 0
  static Quiver cycle(int r);

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> arrows_;
  bool acyclic_;
};

// chi(d, e) = sum_v d_v e_v - sum_{a: i->j} d_i e_j.  For an acyclic quiver
// and modules M, N this is dim Hom(M,N) - dim Ext^1(M,N); the same formula
// stays valid for cyclic quivers (relation-free path algebras).
Int euler_form(const Quiver& q, const IVec& d, const IVec& e);

// Matrix of the Euler form: chi(d, e) = d^T E e.
IMat euler_matrix(const Quiver& q);

// Column w is the class of the indecomposable projective P_w, i.e. entry
// (v, w) counts paths w -> v.  Rejects cyclic quivers.
IMat cartan_matrix(const Quiver& q);

// Coxeter matrix Phi = -C^T C^{-1}, pinned by Phi [P_v] = -[I_v].
// Requires c invertible over the integers.
IMat coxeter_matrix(const IMat& c);

// Class of the injective I_v, read off the Cartan matrix (row v).
IVec injective_class(const IMat& cartan, int v);
IVec projective_class(const IMat& cartan, int v);

// Smallest k in [1, max_k] with m^k = 1, or nullopt.
std::optional<int> matrix_order(const IMat& m, int max_k);

nlohmann::json matrix_to_json(const IMat& m);
IMat matrix_from_json(const nlohmann::json& j);

}  // namespace fcy

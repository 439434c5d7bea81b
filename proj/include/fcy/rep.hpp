#pragma once

#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fcy/quiver.hpp"

namespace fcy {

// Quiver representation over exact rationals.  maps[a] is the
// dims[target] x dims[source] matrix of arrow a, acting on column vectors.
class Rep {
 public:
  Rep(Quiver quiver, std::vector<int> dims, std::vector<QMat> maps);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<QMat>& maps() const { return maps_; }
  const QMat& map(size_t a) const { return maps_[a]; }

  IVec dim_vector() const;
  int total_dim() const;

  // True when the endomorphism summing all arrow maps is nilpotent; for a
  // cyclic quiver this certifies membership in nilp.
  bool is_nilpotent() const;

  nlohmann::json to_json() const;
  static Rep from_json(const nlohmann::json& j);

 private:
  Quiver quiver_;
  std::vector<int> dims_;
  std::vector<QMat> maps_;
};

Rep zero_rep(const Quiver& q);
Rep simple_rep(const Quiver& q, int v);
// acyclic only: basis indexed by paths starting at v
Rep projective_rep(const Quiver& q, int v);
Rep direct_sum(const Rep& a, const Rep& b);

// A morphism of representations: one matrix per vertex.
using RepHom = std::vector<QMat>;

bool is_intertwiner(const Rep& m, const Rep& n, const RepHom& f);

// Basis of Hom(M, N), cut out by N_a f_s(a) = f_t(a) M_a over all arrows.
struct HomSpace {
  std::vector<RepHom> basis;
  size_t dimension() const { return basis.size(); }
};

HomSpace hom_space(const Rep& m, const Rep& n);

// dim Ext^1(M, N) = dim Hom(M, N) - chi(dim M, dim N); the projective
// resolution behind this holds for any relation-free quiver, cyclic ones
// included.
size_t ext1_dim(const Rep& m, const Rep& n);

// Vertexwise kernel and cokernel of f : M -> N with the induced arrow
// maps.  f must be an intertwiner.
std::pair<Rep, Rep> ker_coker(const RepHom& f, const Rep& m, const Rep& n);

// The Kronecker menagerie: modules over the 2-Kronecker quiver
// x = 0, y = 1 with two arrows x -> y.
namespace kronecker {

Quiver quiver();

Rep p_x();  // dims (1,2)
Rep p_y();  // dims (0,1)
Rep i_x();  // dims (1,0)
Rep i_y();  // dims (2,1)

// regular module of dimension (1,1) with arrow maps (lam), (mu)
Rep regular(const Rat& lam, const Rat& mu);

Rep preprojective(int n);  // dims (n, n+1)
Rep preinjective(int n);   // dims (n+1, n)

// the morphism P_y -> P_x with phi_y = (lam, mu)^T
RepHom hom_py_px(const Rat& lam, const Rat& mu);

}  // namespace kronecker

}  // namespace fcy

#pragma once

#include <string>
#include <vector>

#include "fcy/rep.hpp"
#include "fcy/wpl.hpp"

namespace fcy {

// K-theory shadow of a generalized 1-spherical object: classes e_1..e_r
// with a permutation sigma.  Construction enforces
//   chi(e_i, e_j) = delta_ij - delta_{sigma(i), j}
// together with the Serre compatibility E^T e_i = -E e_{sigma(i)}
// (equivalently chi(e_i, x) = -chi(x, e_{sigma(i)}) for all x), which is
// the K-shadow of sigma being induced by the Auslander-Reiten translate.
// The Gram condition alone does not make the lattice twists mutually
// inverse.
class SphericalData {
 public:
  SphericalData(IMat euler, std::vector<IVec> classes, std::vector<int> sigma);

  const IMat& euler() const { return euler_; }
  const std::vector<IVec>& classes() const { return classes_; }
  const std::vector<int>& sigma() const { return sigma_; }
  size_t r() const { return classes_.size(); }

  Int chi(const IVec& x, const IVec& y) const;

 private:
  IMat euler_;
  std::vector<IVec> classes_;
  std::vector<int> sigma_;
};

// t_E(x) = x - sum_i chi(e_i, x) e_i
IVec twist_class(const SphericalData& e, const IVec& x);
// t*_E(x) = x - sum_i chi(x, e_i) e_i
IVec dual_twist_class(const SphericalData& e, const IVec& x);

// Explicit twists on representations under the clean vanishing
// preconditions; both halves of the cone are honest representations.
struct TwistResult {
  Rep h0;        // cokernel part, degree 0
  Rep h_shifted; // kernel part, degree -1 (twist) or cokernel, degree 1 (dual)
};

// requires Ext^1(E_i, X) = 0 for all i; returns (coker ev, ker ev) where
// ev : (+) Hom(E_i, X) (x) E_i -> X
TwistResult twist_explicit(const std::vector<Rep>& e, const Rep& x);

// requires Ext^1(X, E_i) = 0 for all i; returns (ker coev, coker coev)
// where coev : X -> (+) Hom(X, E_i)* (x) E_i
TwistResult dual_twist_explicit(const std::vector<Rep>& e, const Rep& x);

// The L-sequence of twisted exceptional classes: [L_i] = [L] + i [E] with
// [E] the full Coxeter orbit of [S].
class LSequenceConfig {
 public:
  LSequenceConfig(IMat euler, IVec l_class, IVec s_class, int tube_rank);

  const IMat& euler() const { return euler_; }
  const IVec& l_class() const { return l_; }
  const IVec& s_class() const { return s_; }
  const IVec& e_class() const { return e_; }
  int tube_rank() const { return s_rank_; }

 private:
  IMat euler_;
  IVec l_, s_, e_;
  int s_rank_;
};

struct LSequence {
  std::vector<IVec> classes;          // L_{i_min} .. L_{i_max}
  std::vector<std::vector<Int>> chi;  // chi[a][b] = chi(L_{i_min+a}, L_{i_min+b})
  int i_min, i_max;
};

// post: chi(L_i, L_j) = 1 + (j - i) for the whole table
LSequence l_sequence(const LSequenceConfig& cfg, int i_min, int i_max);

// Spherical data generators used by the verification suites.

// the r simples of a rank-r tube inside K_0(nilp cyclic): Z^r with the
// cyclic Euler form, sigma the r-cycle
SphericalData cyclic_simples(int r);

// relabel classes by a permutation; sigma conjugates accordingly
SphericalData relabel(const SphericalData& e, const std::vector<int>& perm);

// Coxeter orbit of a class inside a tubular lattice, validated; throws if
// the orbit does not satisfy the spherical conditions
SphericalData orbit_spherical(const TubularLattice& lat, const IVec& seed);

// all arm-simple orbits plus one fixed r = 1 class
std::vector<SphericalData> spherical_candidates(const TubularLattice& lat);

}  // namespace fcy

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcy/matrix.hpp"

namespace fcy {

// Weight type of a weighted projective line / canonical algebra: weights
// p_1..p_t (each >= 2) and parameters lambda_3..lambda_t, pairwise
// distinct and nonzero.  The lambdas are validated but never enter the
// numerics: path-space dimensions are the same for every admissible
// choice.
struct WeightType {
  std::vector<int> weights;
  std::vector<Rat> lambdas;

  explicit WeightType(std::vector<int> weights_);
  WeightType(std::vector<int> weights_, std::vector<Rat> lambdas_);

  int t() const { return static_cast<int>(weights.size()); }
  int lattice_rank() const;  // n = 2 + sum (p_i - 1)
  int lcm_weights() const;

  std::string to_string() const;
};

// chi_H = 2 - sum (1 - 1/p_i)
Rat euler_characteristic(const WeightType& w);

// Canonical algebra quiver layout: vertex 0 is the source, arm i occupies
// p_i - 1 consecutive vertices, the sink is last.
int canonical_source();
int canonical_sink(const WeightType& w);
int canonical_arm_vertex(const WeightType& w, int arm, int pos);  // pos in [1, p_arm - 1]

// Cartan matrix of the canonical algebra: column w is [P_w].  The
// relations leave exactly two independent source-to-sink paths.
IMat canonical_cartan(const WeightType& w);

// K_0 of a tubular weighted projective line with its Euler data and the
// rank/degree normalization.
class TubularLattice {
 public:
  explicit TubularLattice(const WeightType& w);

  const WeightType& weight_type() const { return wt_; }
  int n() const { return n_; }
  int p() const { return p_; }

  const IMat& cartan() const { return cartan_; }
  const IMat& euler() const { return euler_; }
  const IMat& coxeter() const { return coxeter_; }
  const QMat& average_form() const { return avg_; }
  const IMat& radical_basis() const { return radical_; }

  Int chi(const IVec& x, const IVec& y) const;
  Rat chibar(const IVec& x, const IVec& y) const;
  IVec phi(const IVec& x) const;
  IVec phi_inv(const IVec& x) const;

  IVec projective(int v) const { return cartan_.column(v); }

  Int rank_of(const IVec& x) const;
  Rat degree_of(const IVec& x) const;

  bool in_radical(const IVec& x) const;

 private:
  WeightType wt_;
  int n_, p_;
  IMat cartan_, euler_, coxeter_, coxeter_inv_, radical_;
  QMat avg_;
  IVec rank_vec_;   // integer row functional
  QVec deg_vec_;    // rational row functional
};

TubularLattice tubular_lattice(const WeightType& w);

std::pair<Int, Rat> rank_degree(const TubularLattice& lat, const IVec& x);

struct SlopeValue {
  bool infinite;
  Rat value;  // meaningful when !infinite

  bool operator==(const SlopeValue& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
  bool operator<(const SlopeValue& o) const {
    if (infinite) return false;
    if (o.infinite) return true;
    return value < o.value;
  }
  std::string to_string() const { return infinite ? "inf" : fcy::to_string(value); }
};

// deg/rk, infinity when rk = 0; classes with (rk, deg) = (0, 0) have no
// slope and are rejected.
SlopeValue slope(const TubularLattice& lat, const IVec& x);

// chibar(x, y); positive whenever both ranks are positive and
// slope(x) < slope(y).
Rat hom_direction_check(const TubularLattice& lat, const IVec& x, const IVec& y);

}  // namespace fcy

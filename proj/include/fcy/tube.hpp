#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fcy/rep.hpp"

namespace fcy {

// Indecomposable nilpotent representation of the cyclic quiver with
// `rank` vertices (arrows v -> v+1 mod rank), parameterized by the vertex
// of its simple socle and its length.
struct TubeObject {
  int rank;
  int socle;
  int length;

  TubeObject(int rank_, int socle_, int length_);

  bool operator==(const TubeObject& o) const {
    return rank == o.rank && socle == o.socle && length == o.length;
  }

  nlohmann::json to_json() const;
  static TubeObject from_json(const nlohmann::json& j);
};

// Auslander-Reiten translate: shifts the socle by +1 mod rank and keeps
// the length.  The sign of the shift is pinned by the Serre duality test
// dim Ext^1(Y, tau X) = dim Hom(X, Y).
TubeObject tau(const TubeObject& x);
TubeObject tau_inv(const TubeObject& x);
TubeObject tau_pow(const TubeObject& x, int k);

// Closed form for dim Hom(X, Y): the number of lengths t for which the
// length-t top quotient of X coincides with the length-t submodule of Y,
// a single congruence mod rank.
int hom_dim(const TubeObject& x, const TubeObject& y);

// dim Ext^1(X, Y) via Serre duality inside the tube.
int ext1_dim_tube(const TubeObject& x, const TubeObject& y);

// Explicit matrix model: basis x_0..x_{l-1} with x_m at vertex
// (socle - m) mod rank and each arrow sending x_m to x_{m-1}.
Rep to_rep(const TubeObject& x);

struct LengthHoms {
  int k;  // in [0, rank)
  int d;  // dim Hom(tau^k A, B), maximal over k
};

// Realizes the bound dim Hom(tau^k A, B) >= min(l_A, l_B) / rank.
LengthHoms length_gives_homs(const TubeObject& a, const TubeObject& b);

struct SphericalCheck {
  bool ok = false;
  std::vector<int> sigma;  // only meaningful when ok
};

// Checks Hom(E_i, E_j) = delta_ij, Ext^1(E_i, E_j) a permutation matrix,
// and that the permutation is induced by tau.
SphericalCheck is_generalized_1_spherical(const std::vector<TubeObject>& e);

// Smallest n with tau^n = id on every object of length <= max_length,
// reported as the unreduced Calabi-Yau pair (n, n).
std::pair<int, int> tube_cy_pair(int rank, int max_length);

}  // namespace fcy

#pragma once

#include <string>

#include "fcy/wpl.hpp"

namespace fcy {

// Slope cut theta for a split torsion theory: a rational number, infinity,
// or an irrational value held as a rational bracket (lo, hi) guaranteed
// (per query) to contain no attained slope.  The boundary policy is an
// opaque token; it only matters for rational or infinite theta.
struct SlopeCut {
  enum class Kind { Rational, Infinity, IrrationalBracket };

  Kind kind;
  Rat theta;              // Rational
  Rat lo, hi;             // IrrationalBracket
  std::string boundary_policy;

  static SlopeCut rational(const Rat& q, std::string policy = "unresolved");
  static SlopeCut infinity(std::string policy = "unresolved");
  static SlopeCut irrational(const Rat& lo, const Rat& hi);

  std::string to_string() const;
};

enum class SlopeClass { Torsion, Free, Boundary };

std::string to_string(SlopeClass c);

// slope > theta -> Torsion, slope < theta -> Free, slope = theta ->
// Boundary.  A slope inside an irrational bracket is an error demanding a
// tighter bracket.
SlopeClass classify(const SlopeCut& cut, const TubularLattice& lat, const IVec& x);

struct SplitSignReport {
  SlopeValue mu_t, mu_f;
  Rat chibar_ft;     // chibar(f, t)
  bool mu_ordered;   // mu_f < mu_t, must hold for a Torsion/Free pair
  bool sign_checked; // the chibar(f,t) > 0 claim applies
  bool sign_ok;      // and holds
};

// Directional consistency of Hom(T, F) = 0 at lattice level: for a pair
// classified (Torsion, Free) with nonnegative ranks, morphisms flow upward
// in slope, so chibar(f, t) > 0 whenever the ranks make the claim
// meaningful (both positive, or the rank-0 side has positive degree).
SplitSignReport split_sign_check(const SlopeCut& cut, const TubularLattice& lat,
                                 const IVec& t, const IVec& f);

}  // namespace fcy

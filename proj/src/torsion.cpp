#include "fcy/torsion.hpp"

namespace fcy {

SlopeCut SlopeCut::rational(const Rat& q, std::string policy) {
  return {Kind::Rational, q, 0, 0, std::move(policy)};
}

SlopeCut SlopeCut::infinity(std::string policy) {
  return {Kind::Infinity, 0, 0, 0, std::move(policy)};
}

SlopeCut SlopeCut::irrational(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("irrational cut: empty bracket");
  return {Kind::IrrationalBracket, 0, lo, hi, ""};
}

std::string SlopeCut::to_string() const {
  switch (kind) {
    case Kind::Rational:
      return fcy::to_string(theta);
    case Kind::Infinity:
      return "inf";
    default:
      return "(" + fcy::to_string(lo) + "," + fcy::to_string(hi) + ")";
  }
}

std::string to_string(SlopeClass c) {
  switch (c) {
    case SlopeClass::Torsion:
      return "T";
    case SlopeClass::Free:
      return "F";
    default:
      return "Boundary";
  }
}

SlopeClass classify(const SlopeCut& cut, const TubularLattice& lat, const IVec& x) {
  SlopeValue mu = slope(lat, x);  // throws on the (0, 0) class
  switch (cut.kind) {
    case SlopeCut::Kind::Rational:
      if (mu.infinite || mu.value > cut.theta) return SlopeClass::Torsion;
      if (mu.value < cut.theta) return SlopeClass::Free;
      return SlopeClass::Boundary;
    case SlopeCut::Kind::Infinity:
      return mu.infinite ? SlopeClass::Boundary : SlopeClass::Free;
    default:
      if (mu.infinite || mu.value >= cut.hi) return SlopeClass::Torsion;
      if (mu.value <= cut.lo) return SlopeClass::Free;
      throw std::invalid_argument("slope " + mu.to_string() +
                                  " falls inside the irrational bracket; tighten the bracket");
  }
}

SplitSignReport split_sign_check(const SlopeCut& cut, const TubularLattice& lat,
                                 const IVec& t, const IVec& f) {
  if (classify(cut, lat, t) != SlopeClass::Torsion)
    throw std::invalid_argument("split_sign_check: first class is not Torsion for this cut");
  if (classify(cut, lat, f) != SlopeClass::Free)
    throw std::invalid_argument("split_sign_check: second class is not Free for this cut");
  Int rk_t = lat.rank_of(t), rk_f = lat.rank_of(f);
  if (rk_t < 0 || rk_f < 0)
    throw std::invalid_argument("split_sign_check: classes must have nonnegative rank");
  if (rk_t == 0 && rk_f == 0)
    throw std::invalid_argument("split_sign_check: at most one class may have rank 0");

  SplitSignReport rep;
  rep.mu_t = slope(lat, t);
  rep.mu_f = slope(lat, f);
  rep.mu_ordered = rep.mu_f < rep.mu_t;
  rep.chibar_ft = lat.chibar(f, t);
  bool rank0_side_positive =
      (rk_t > 0 || lat.degree_of(t) > 0) && (rk_f > 0 || lat.degree_of(f) > 0);
  rep.sign_checked = rep.mu_ordered && rank0_side_positive;
  rep.sign_ok = !rep.sign_checked || rep.chibar_ft > 0;
  return rep;
}

}  // namespace fcy

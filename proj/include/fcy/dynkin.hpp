#pragma once

#include <string>
#include <vector>

#include "fcy/quiver.hpp"

namespace fcy {

// Dynkin quiver: an orientation of one of the diagrams A_n (n>=1),
// D_n (n>=4), E_6, E_7, E_8.  The constructor verifies that the underlying
// graph really is the stated diagram.
class DynkinQuiver {
 public:
  DynkinQuiver(char family, int n, std::vector<std::pair<int, int>> arrows);

  // default orientation (arms oriented away from the chain start)
  static DynkinQuiver standard(char family, int n);
  // parses "A3", "D4", "E6", ...
  static DynkinQuiver standard(const std::string& name);

  char family() const { return family_; }
  int n() const { return n_; }
  std::string name() const { return std::string(1, family_) + std::to_string(n_); }
  const Quiver& quiver() const { return quiver_; }

 private:
  char family_;
  int n_;
  Quiver quiver_;
};

// All positive roots: d >= 0, d != 0 with chi(d, d) = 1, enumerated over
// coordinates <= 6 (enough for the highest root of E_8).
std::vector<IVec> positive_roots(const DynkinQuiver& q);

// Indecomposable of the bounded derived category: positive root + shift.
struct DerivedObject {
  IVec root;
  long shift;

  bool operator==(const DerivedObject& o) const {
    return root == o.root && shift == o.shift;
  }
};

DerivedObject shift_by(const DerivedObject& x, long k);

// tau on the derived category: apply the Coxeter matrix to the root; a
// negative image means the object crosses into the previous shift
// (tau P_v = I_v [-1] on projectives).
DerivedObject tau_derived(const DerivedObject& x, const DynkinQuiver& q);
DerivedObject tau_derived_inv(const DerivedObject& x, const DynkinQuiver& q);

// Serre functor S = tau [1].
DerivedObject serre(const DerivedObject& x, const DynkinQuiver& q);

struct CyPair {
  long n;
  long m;
};

// The Calabi-Yau pair (h, h-2) of the derived category: n is the minimal
// exponent with trivial Coxeter action on the lattice (= the Coxeter
// number h), and S^n = [m] is verified object by object over all positive
// roots.  On objects alone S^{h/2} can already be a pure shift (D_4);
// the reported pair is the lattice-periodic one.
CyPair cy_dimension(const DynkinQuiver& q, int bound);

}  // namespace fcy

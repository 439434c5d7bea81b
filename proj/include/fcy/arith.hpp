#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace fcy {

// All lattice and matrix arithmetic is exact: arbitrary-precision integers
// for K-theory classes, rationals for representation matrices and the
// average Euler form.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline std::string to_string(const Int& v) { return v.str(); }

// Canonical "p/q" form; integers print without the denominator.
inline std::string to_string(const Rat& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);

inline IVec operator+(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IVec operator-(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IVec operator*(const Int& c, const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero(const IVec& a) {
  for (const auto& v : a)
    if (v != 0) return false;
  return true;
}

// Deterministic seeded generator (splitmix64).  Used by every randomized
// check so that reports are reproducible bit-for-bit from the seed.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi], inclusive
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  IVec int_vector(size_t n, long lo, long hi) {
    IVec v(n);
    for (size_t i = 0; i < n; ++i) v[i] = uniform(lo, hi);
    return v;
  }
};

}  // namespace fcy

#include <doctest.h>

#include "fcy/torsion.hpp"

using namespace fcy;

namespace {

// deterministic classes with defined slope
std::vector<IVec> sample_classes(const TubularLattice& lat, Rng& rng, int want) {
  std::vector<IVec> out;
  while (static_cast<int>(out.size()) < want) {
    IVec x = rng.int_vector(lat.n(), -3, 3);
    if (lat.rank_of(x) == 0 && lat.degree_of(x) == 0) continue;
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

TEST_SUITE("torsion") {

TEST_CASE("classification against each cut kind") {
  TubularLattice lat = tubular_lattice(WeightType({2, 2, 2, 2}));
  IVec p0 = lat.projective(0);  // positive rank, some finite slope
  SlopeValue mu = slope(lat, p0);
  REQUIRE_FALSE(mu.infinite);

  // theta = infinity: finite slope -> Free, rank 0 -> Boundary
  SlopeCut inf = SlopeCut::infinity();
  CHECK(classify(inf, lat, p0) == SlopeClass::Free);
  // find a rank-0 class with nonzero degree
  IVec z;
  for (int v = 1; v < lat.n(); ++v) {
    IVec cand = lat.projective(0) - lat.projective(v);
    if (lat.rank_of(cand) == 0 && lat.degree_of(cand) != 0) {
      z = cand;
      break;
    }
  }
  REQUIRE(!z.empty());
  CHECK(classify(inf, lat, z) == SlopeClass::Boundary);

  // theta rational at the slope -> Boundary; above/below
  SlopeCut at = SlopeCut::rational(mu.value);
  CHECK(classify(at, lat, p0) == SlopeClass::Boundary);
  CHECK(classify(SlopeCut::rational(mu.value - 1), lat, p0) == SlopeClass::Torsion);
  CHECK(classify(SlopeCut::rational(mu.value + 1), lat, p0) == SlopeClass::Free);
  // infinite slope beats any rational theta
  CHECK(classify(SlopeCut::rational(0), lat, z) == SlopeClass::Torsion);
}

TEST_CASE("irrational brackets never report boundary") {
  TubularLattice lat = tubular_lattice(WeightType({3, 3, 3}));
  SlopeCut cut = SlopeCut::irrational(Rat(1, 2), Rat(2, 3));
  IVec p0 = lat.projective(0);
  SlopeValue mu = slope(lat, p0);
  if (!mu.infinite && mu.value <= Rat(1, 2)) CHECK(classify(cut, lat, p0) == SlopeClass::Free);

  Rng rng(3);
  for (const IVec& x : sample_classes(lat, rng, 100)) {
    SlopeValue s = slope(lat, x);
    if (!s.infinite && s.value > Rat(1, 2) && s.value < Rat(2, 3)) {
      CHECK_THROWS(classify(cut, lat, x));
    } else {
      CHECK(classify(cut, lat, x) != SlopeClass::Boundary);
    }
  }
  CHECK_THROWS(SlopeCut::irrational(Rat(2, 3), Rat(1, 2)));
}

TEST_CASE("classification is monotone in theta") {
  TubularLattice lat = tubular_lattice(WeightType({2, 4, 4}));
  std::vector<SlopeCut> cuts = {SlopeCut::rational(-1), SlopeCut::rational(0),
                                SlopeCut::rational(Rat(1, 2)), SlopeCut::infinity()};
  auto rank_of_class = [](SlopeClass c) {
    return c == SlopeClass::Torsion ? 2 : (c == SlopeClass::Boundary ? 1 : 0);
  };
  Rng rng(9);
  for (const IVec& x : sample_classes(lat, rng, 120)) {
    int prev = 3;
    for (const auto& cut : cuts) {
      int cur = rank_of_class(classify(cut, lat, x));
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("split sign check on the canonical example") {
  // t of slope infinity (rk 0, deg > 0), f of finite slope (the projective)
  TubularLattice lat = tubular_lattice(WeightType({2, 2, 2, 2}));
  IVec z;
  for (int v = 1; v < lat.n(); ++v) {
    IVec cand = lat.projective(0) - lat.projective(v);
    if (lat.rank_of(cand) == 0 && lat.degree_of(cand) > 0) {
      z = cand;
      break;
    }
    IVec neg = lat.projective(v) - lat.projective(0);
    if (lat.rank_of(neg) == 0 && lat.degree_of(neg) > 0) {
      z = neg;
      break;
    }
  }
  REQUIRE(!z.empty());
  IVec f = lat.projective(0);
  SlopeCut cut = SlopeCut::rational(slope(lat, f).value + 1);
  REQUIRE(classify(cut, lat, z) == SlopeClass::Torsion);
  REQUIRE(classify(cut, lat, f) == SlopeClass::Free);
  SplitSignReport rep = split_sign_check(cut, lat, z, f);
  CHECK(rep.mu_ordered);
  CHECK(rep.sign_checked);
  CHECK(rep.sign_ok);
  CHECK(rep.chibar_ft == Rat(lat.rank_of(f)) * lat.degree_of(z));
  CHECK(rep.chibar_ft > 0);
}

TEST_CASE("split sign check rejects misclassified inputs") {
  TubularLattice lat = tubular_lattice(WeightType({2, 2, 2, 2}));
  IVec f = lat.projective(0);
  SlopeCut cut = SlopeCut::rational(slope(lat, f).value + 1);
  // both Free
  CHECK_THROWS(split_sign_check(cut, lat, f, f));
}

TEST_CASE("grid of cuts with sampled torsion/free pairs") {
  for (const auto& ws : {std::vector<int>{2, 3, 6}, std::vector<int>{3, 3, 3}}) {
    TubularLattice lat = tubular_lattice(WeightType(ws));
    std::vector<SlopeCut> cuts = {SlopeCut::rational(-1), SlopeCut::rational(0),
                                  SlopeCut::rational(Rat(1, 2)),
                                  SlopeCut::irrational(Rat(1, 3), Rat(1, 2))};
    Rng rng(23);
    // pool: random positive-rank classes (any slope) plus rank-0 classes
    // of positive degree (slope infinity)
    std::vector<IVec> pool;
    while (pool.size() < 80) {
      IVec x = rng.int_vector(lat.n(), -2, 2);
      if (lat.rank_of(x) > 0) pool.push_back(std::move(x));
    }
    for (int v = 1; v < lat.n(); ++v) {
      IVec z = lat.projective(0) - lat.projective(v);
      if (lat.rank_of(z) == 0 && lat.degree_of(z) > 0) pool.push_back(std::move(z));
    }
    int checked = 0;
    for (const auto& cut : cuts)
      for (size_t a = 0; a < pool.size(); ++a)
        for (size_t b = 0; b < pool.size() && checked < 200; ++b) {
          SlopeClass ca = classify(cut, lat, pool[a]);
          SlopeClass cb = classify(cut, lat, pool[b]);
          if (ca != SlopeClass::Torsion || cb != SlopeClass::Free) continue;
          SplitSignReport rep = split_sign_check(cut, lat, pool[a], pool[b]);
          CHECK(rep.mu_ordered);
          CHECK(rep.sign_ok);
          ++checked;
        }
    CHECK(checked >= 200);
  }
}

}  // TEST_SUITE

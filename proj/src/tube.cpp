#include "fcy/tube.hpp"

#include <nlohmann/json.hpp>

namespace fcy {

namespace {
int mod(int a, int r) {
  int m = a % r;
  return m < 0 ? m + r : m;
}
}  // namespace

TubeObject::TubeObject(int rank_, int socle_, int length_)
    : rank(rank_), socle(socle_), length(length_) {
  if (rank < 1) throw std::invalid_argument("tube object: rank >= 1 required");
  if (socle < 0 || socle >= rank) throw std::invalid_argument("tube object: socle out of range");
  if (length < 1) throw std::invalid_argument("tube object: length >= 1 required");
}

nlohmann::json TubeObject::to_json() const {
  return nlohmann::json{{"rank", rank}, {"socle", socle}, {"length", length}};
}

TubeObject TubeObject::from_json(const nlohmann::json& j) {
  return TubeObject(j.at("rank").get<int>(), j.at("socle").get<int>(),
                    j.at("length").get<int>());
}

TubeObject tau(const TubeObject& x) {
  return TubeObject(x.rank, mod(x.socle + 1, x.rank), x.length);
}

TubeObject tau_inv(const TubeObject& x) {
  return TubeObject(x.rank, mod(x.socle - 1, x.rank), x.length);
}

TubeObject tau_pow(const TubeObject& x, int k) {
  return TubeObject(x.rank, mod(x.socle + k, x.rank), x.length);
}

int hom_dim(const TubeObject& x, const TubeObject& y) {
  if (x.rank != y.rank) throw std::invalid_argument("hom_dim: tube rank mismatch");
  // The length-t top quotient of x has socle (x.socle - x.length + t);
  // the length-t submodule of y has socle y.socle.
  int count = 0;
  for (int t = 1; t <= std::min(x.length, y.length); ++t)
    if (mod(x.socle - x.length + t, x.rank) == y.socle) ++count;
  return count;
}

int ext1_dim_tube(const TubeObject& x, const TubeObject& y) {
  // Ext^1(X, Y) = Hom(tau^{-1} Y, X)^* by Serre duality S = tau[1]
  return hom_dim(tau_inv(y), x);
}

Rep to_rep(const TubeObject& x) {
  Quiver q = Quiver::cycle(x.rank);
  std::vector<int> dims(x.rank, 0);
  std::vector<int> vert(x.length), slot(x.length);
  for (int m = 0; m < x.length; ++m) {
    vert[m] = mod(x.socle - m, x.rank);
    slot[m] = dims[vert[m]]++;
  }
  std::vector<QMat> maps;
  for (auto [s, t] : q.arrows()) maps.emplace_back(dims[t], dims[s]);
  // arrow at vert[m] carries x_m to x_{m-1}; the socle x_0 dies
  for (int m = 1; m < x.length; ++m) {
    size_t a = static_cast<size_t>(vert[m]);  // arrow vert[m] -> vert[m]+1 = vert[m-1]
    maps[a](slot[m - 1], slot[m]) = 1;
  }
  return Rep(std::move(q), std::move(dims), std::move(maps));
}

LengthHoms length_gives_homs(const TubeObject& a, const TubeObject& b) {
  if (a.rank != b.rank) throw std::invalid_argument("length_gives_homs: tube rank mismatch");
  LengthHoms best{0, hom_dim(a, b)};
  for (int k = 1; k < a.rank; ++k) {
    int d = hom_dim(tau_pow(a, k), b);
    if (d > best.d) best = {k, d};
  }
  return best;
}

SphericalCheck is_generalized_1_spherical(const std::vector<TubeObject>& e) {
  SphericalCheck res;
  if (e.empty()) return res;
  size_t r = e.size();
  for (size_t i = 1; i < r; ++i)
    if (e[i].rank != e[0].rank) return res;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      if (hom_dim(e[i], e[j]) != (i == j ? 1 : 0)) return res;
  std::vector<int> sigma(r, -1);
  std::vector<char> hit(r, 0);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) {
      int x = ext1_dim_tube(e[i], e[j]);
      if (x == 1 && sigma[i] == -1)
        sigma[i] = static_cast<int>(j);
      else if (x != 0)
        return res;
    }
    if (sigma[i] == -1 || hit[sigma[i]]) return res;
    hit[sigma[i]] = 1;
  }
  // sigma must be induced by tau
  for (size_t i = 0; i < r; ++i)
    if (!(tau(e[i]) == e[sigma[i]])) return res;
  res.ok = true;
  res.sigma = std::move(sigma);
  return res;
}

std::pair<int, int> tube_cy_pair(int rank, int max_length) {
  if (rank < 1 || max_length < 1) throw std::invalid_argument("tube_cy_pair: bad arguments");
  for (int n = 1; n <= rank; ++n) {
    bool all_fixed = true;
    for (int a = 0; a < rank && all_fixed; ++a)
      for (int l = 1; l <= max_length && all_fixed; ++l) {
        TubeObject x(rank, a, l);
        if (!(tau_pow(x, n) == x)) all_fixed = false;
      }
    if (all_fixed) return {n, n};  // S^n = tau^n [n] = [n]
  }
  throw std::logic_error("tube_cy_pair: tau^rank should fix all objects");
}

}  // namespace fcy

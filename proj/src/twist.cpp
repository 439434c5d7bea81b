#include "fcy/twist.hpp"

#include <algorithm>

namespace fcy {

namespace {

Int form(const IMat& e, const IVec& x, const IVec& y) {
  IVec ey = e.apply(y);
  Int s = 0;
  for (size_t k = 0; k < x.size(); ++k) s += x[k] * ey[k];
  return s;
}

}  // namespace

SphericalData::SphericalData(IMat euler, std::vector<IVec> classes, std::vector<int> sigma)
    : euler_(std::move(euler)), classes_(std::move(classes)), sigma_(std::move(sigma)) {
  if (euler_.rows() != euler_.cols()) throw std::invalid_argument("spherical data: non-square form");
  size_t r = classes_.size();
  if (r == 0) throw std::invalid_argument("spherical data: no classes");
  if (sigma_.size() != r) throw std::invalid_argument("spherical data: sigma size mismatch");
  std::vector<char> hit(r, 0);
  for (int s : sigma_) {
    if (s < 0 || static_cast<size_t>(s) >= r || hit[s])
      throw std::invalid_argument("spherical data: sigma is not a permutation");
    hit[s] = 1;
  }
  for (const auto& c : classes_)
    if (c.size() != euler_.rows())
      throw std::invalid_argument("spherical data: class length mismatch");
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      Int expect = (i == j ? 1 : 0) - (static_cast<size_t>(sigma_[i]) == j ? 1 : 0);
      if (form(euler_, classes_[i], classes_[j]) != expect)
        throw std::invalid_argument("spherical data: Gram condition chi(e_i,e_j) = d_ij - d_{s(i),j} violated");
    }
  // Serre compatibility: E^T e_i = -E e_{sigma(i)}
  IMat et = euler_.transpose();
  for (size_t i = 0; i < r; ++i) {
    IVec lhs = et.apply(classes_[i]);
    IVec rhs = euler_.apply(classes_[sigma_[i]]);
    for (size_t k = 0; k < lhs.size(); ++k)
      if (lhs[k] != -rhs[k])
        throw std::invalid_argument(
            "spherical data: sigma is not induced by the AR translate (Serre compatibility fails)");
  }
}

Int SphericalData::chi(const IVec& x, const IVec& y) const { return form(euler_, x, y); }

IVec twist_class(const SphericalData& e, const IVec& x) {
  IVec r = x;
  for (const auto& c : e.classes()) {
    Int coef = e.chi(c, x);
    if (coef != 0) r = r - coef * c;
  }
  return r;
}

IVec dual_twist_class(const SphericalData& e, const IVec& x) {
  IVec r = x;
  for (const auto& c : e.classes()) {
    Int coef = e.chi(x, c);
    if (coef != 0) r = r - coef * c;
  }
  return r;
}

TwistResult twist_explicit(const std::vector<Rep>& e, const Rep& x) {
  if (e.empty()) throw std::invalid_argument("twist_explicit: empty spherical family");
  for (const auto& ei : e)
    if (ext1_dim(ei, x) != 0)
      throw std::invalid_argument(
          "nonvanishing Ext(E,X): cone not homology-split-determined");

  // assemble ev : (+)_i E_i^{h_i} -> X from Hom bases
  Rep src = zero_rep(x.quiver());
  std::vector<RepHom> columns;
  for (const auto& ei : e) {
    HomSpace hs = hom_space(ei, x);
    for (const auto& f : hs.basis) {
      src = direct_sum(src, ei);
      columns.push_back(f);
    }
  }
  size_t nv = static_cast<size_t>(x.quiver().vertex_count());
  RepHom ev(nv);
  for (size_t v = 0; v < nv; ++v) {
    ev[v] = QMat(x.dims()[v], src.dims()[v]);
    // one column block per Hom basis element; f[v] : E_v -> X_v
    size_t off = 0;
    for (const auto& f : columns) {
      for (size_t i = 0; i < f[v].rows(); ++i)
        for (size_t j = 0; j < f[v].cols(); ++j) ev[v](i, off + j) = f[v](i, j);
      off += f[v].cols();
    }
  }
  auto [ker, coker] = ker_coker(ev, src, x);
  return {std::move(coker), std::move(ker)};
}

TwistResult dual_twist_explicit(const std::vector<Rep>& e, const Rep& x) {
  if (e.empty()) throw std::invalid_argument("dual_twist_explicit: empty spherical family");
  for (const auto& ei : e)
    if (ext1_dim(x, ei) != 0)
      throw std::invalid_argument(
          "nonvanishing Ext(X,E): cone not homology-split-determined");

  Rep dst = zero_rep(x.quiver());
  std::vector<RepHom> rows;
  for (const auto& ei : e) {
    HomSpace hs = hom_space(x, ei);
    for (const auto& f : hs.basis) {
      dst = direct_sum(dst, ei);
      rows.push_back(f);
    }
  }
  size_t nv = static_cast<size_t>(x.quiver().vertex_count());
  RepHom coev(nv);
  for (size_t v = 0; v < nv; ++v) {
    coev[v] = QMat(dst.dims()[v], x.dims()[v]);
    size_t off = 0;
    for (const auto& f : rows) {
      for (size_t i = 0; i < f[v].rows(); ++i)
        for (size_t j = 0; j < f[v].cols(); ++j) coev[v](off + i, j) = f[v](i, j);
      off += f[v].rows();
    }
  }
  auto [ker, coker] = ker_coker(coev, x, dst);
  return {std::move(ker), std::move(coker)};
}

LSequenceConfig::LSequenceConfig(IMat euler, IVec l_class, IVec s_class, int tube_rank)
    : euler_(std::move(euler)), l_(std::move(l_class)), s_(std::move(s_class)), s_rank_(tube_rank) {
  if (s_rank_ < 1) throw std::invalid_argument("l-sequence: tube rank >= 1 required");
  auto einv = inverse(to_rational(euler_));
  if (!einv) throw std::invalid_argument("l-sequence: Euler form must be invertible");
  auto phi_q = -(*einv * to_rational(euler_.transpose()));
  auto phi = to_integer(phi_q);
  if (!phi) throw std::invalid_argument("l-sequence: Coxeter transformation not integral");

  // [E] = full Coxeter orbit of [S]; the orbit must close after exactly
  // tube_rank steps
  e_ = IVec(l_.size(), 0);
  IVec cur = s_;
  for (int j = 0; j < s_rank_; ++j) {
    e_ = e_ + cur;
    cur = phi->apply(cur);
  }
  if (cur != s_)
    throw std::invalid_argument("l-sequence: Coxeter orbit of [S] does not close after rank steps");
  if (s_rank_ > 1) {
    cur = s_;
    for (int j = 1; j < s_rank_; ++j) {
      cur = phi->apply(cur);
      if (cur == s_) throw std::invalid_argument("l-sequence: orbit of [S] closes early");
    }
  }

  auto chk = [&](const IVec& x, const IVec& y, long expect, const char* what) {
    if (form(euler_, x, y) != expect)
      throw std::invalid_argument(std::string("l-sequence: constraint ") + what + " violated");
  };
  chk(l_, l_, 1, "chi(L,L) = 1");
  chk(l_, e_, 1, "chi(L,E) = 1");
  chk(e_, l_, -1, "chi(E,L) = -1");
  chk(e_, e_, 0, "chi(E,E) = 0");
}

LSequence l_sequence(const LSequenceConfig& cfg, int i_min, int i_max) {
  if (i_min > i_max) throw std::invalid_argument("l_sequence: empty index range");
  LSequence seq;
  seq.i_min = i_min;
  seq.i_max = i_max;
  for (int i = i_min; i <= i_max; ++i) seq.classes.push_back(cfg.l_class() + Int(i) * cfg.e_class());
  size_t m = seq.classes.size();
  seq.chi.assign(m, std::vector<Int>(m));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      seq.chi[a][b] = form(cfg.euler(), seq.classes[a], seq.classes[b]);
      Int expect = 1 + (Int(i_min) + Int(b)) - (Int(i_min) + Int(a));
      if (seq.chi[a][b] != expect)
        throw std::logic_error("l_sequence: chi table deviates from 1 + (j - i)");
    }
  return seq;
}

SphericalData cyclic_simples(int r) {
  if (r < 1) throw std::invalid_argument("cyclic_simples: r >= 1 required");
  IMat e = IMat::identity(r);
  for (int v = 0; v < r; ++v) e(v, (v + 1) % r) -= 1;
  std::vector<IVec> classes;
  std::vector<int> sigma;
  for (int v = 0; v < r; ++v) {
    IVec c(r, 0);
    c[v] = 1;
    classes.push_back(std::move(c));
    sigma.push_back((v + 1) % r);
  }
  return SphericalData(std::move(e), std::move(classes), std::move(sigma));
}

SphericalData relabel(const SphericalData& e, const std::vector<int>& perm) {
  size_t r = e.r();
  if (perm.size() != r) throw std::invalid_argument("relabel: permutation size mismatch");
  // new_i = old_{perm[i]};  sigma' = perm^{-1} o sigma o perm
  std::vector<int> inv(r);
  for (size_t i = 0; i < r; ++i) inv[perm[i]] = static_cast<int>(i);
  std::vector<IVec> classes(r);
  std::vector<int> sigma(r);
  for (size_t i = 0; i < r; ++i) {
    classes[i] = e.classes()[perm[i]];
    sigma[i] = inv[e.sigma()[perm[i]]];
  }
  return SphericalData(e.euler(), std::move(classes), std::move(sigma));
}

SphericalData orbit_spherical(const TubularLattice& lat, const IVec& seed) {
  std::vector<IVec> classes{seed};
  IVec cur = lat.phi(seed);
  while (!(cur == seed)) {
    if (static_cast<int>(classes.size()) > lat.p())
      throw std::invalid_argument("orbit_spherical: orbit does not close within the period");
    classes.push_back(cur);
    cur = lat.phi(cur);
  }
  size_t r = classes.size();
  std::vector<int> sigma(r);
  for (size_t i = 0; i < r; ++i) sigma[i] = static_cast<int>((i + 1) % r);
  return SphericalData(lat.euler(), std::move(classes), std::move(sigma));
}

std::vector<SphericalData> spherical_candidates(const TubularLattice& lat) {
  std::vector<SphericalData> out;
  const WeightType& w = lat.weight_type();
  for (int arm = 0; arm < w.t(); ++arm) {
    IVec seed(lat.n(), 0);
    seed[canonical_arm_vertex(w, arm, 1)] = 1;
    out.push_back(orbit_spherical(lat, seed));
  }
  // an r = 1 class: sum a full Coxeter orbit of a simple, which is
  // Phi-fixed with chi = 0 by antisymmetry of the average form
  IVec seed(lat.n(), 0);
  seed[canonical_arm_vertex(w, 0, 1)] = 1;
  IVec fixed(lat.n(), 0);
  IVec cur = seed;
  for (int j = 0; j < lat.p(); ++j) {
    fixed = fixed + cur;
    cur = lat.phi(cur);
  }
  out.push_back(SphericalData(lat.euler(), {fixed}, {0}));
  return out;
}

}  // namespace fcy

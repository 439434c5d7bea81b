#include "fcy/wpl.hpp"

#include <numeric>

#include "fcy/quiver.hpp"

namespace fcy {

WeightType::WeightType(std::vector<int> weights_) : weights(std::move(weights_)) {
  if (weights.size() < 2) throw std::invalid_argument("weight type: t >= 2 required");
  for (int p : weights)
    if (p < 2) throw std::invalid_argument("weight type: weights must be >= 2");
  for (int i = 3; i <= t(); ++i) lambdas.emplace_back(i - 2);
}

WeightType::WeightType(std::vector<int> weights_, std::vector<Rat> lambdas_)
    : weights(std::move(weights_)), lambdas(std::move(lambdas_)) {
  if (weights.size() < 2) throw std::invalid_argument("weight type: t >= 2 required");
  for (int p : weights)
    if (p < 2) throw std::invalid_argument("weight type: weights must be >= 2");
  if (lambdas.size() + 2 != weights.size())
    throw std::invalid_argument("weight type: need t - 2 lambdas");
  for (size_t i = 0; i < lambdas.size(); ++i) {
    if (lambdas[i] == 0) throw std::invalid_argument("weight type: lambda = 0 degenerates a relation");
    for (size_t j = i + 1; j < lambdas.size(); ++j)
      if (lambdas[i] == lambdas[j])
        throw std::invalid_argument("weight type: lambdas must be pairwise distinct");
  }
}

int WeightType::lattice_rank() const {
  int n = 2;
  for (int p : weights) n += p - 1;
  return n;
}

int WeightType::lcm_weights() const {
  int l = 1;
  for (int p : weights) l = std::lcm(l, p);
  return l;
}

std::string WeightType::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < weights.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(weights[i]);
  }
  return s + ")";
}

Rat euler_characteristic(const WeightType& w) {
  Rat chi = 2;
  for (int p : w.weights) chi -= Rat(p - 1, p);
  return chi;
}

int canonical_source() { return 0; }

int canonical_sink(const WeightType& w) { return w.lattice_rank() - 1; }

int canonical_arm_vertex(const WeightType& w, int arm, int pos) {
  if (arm < 0 || arm >= w.t()) throw std::invalid_argument("arm index out of range");
  if (pos < 1 || pos > w.weights[arm] - 1) throw std::invalid_argument("arm position out of range");
  int v = 1;
  for (int i = 0; i < arm; ++i) v += w.weights[i] - 1;
  return v + pos - 1;
}

IMat canonical_cartan(const WeightType& w) {
  int n = w.lattice_rank();
  int src = canonical_source(), snk = canonical_sink(w);
  IMat c(n, n);
  for (int v = 0; v < n; ++v) c(v, v) = 1;
  for (int v = 1; v < n - 1; ++v) c(v, src) = 1;  // source to each arm vertex
  c(snk, src) = 2;  // the relations leave {f_1^{p_1}, f_2^{p_2}} independent
  for (int arm = 0; arm < w.t(); ++arm)
    for (int pos = 1; pos <= w.weights[arm] - 1; ++pos) {
      int from = canonical_arm_vertex(w, arm, pos);
      for (int pos2 = pos + 1; pos2 <= w.weights[arm] - 1; ++pos2)
        c(canonical_arm_vertex(w, arm, pos2), from) = 1;
      c(snk, from) = 1;
    }
  return c;
}

TubularLattice::TubularLattice(const WeightType& w) : wt_(w) {
  if (euler_characteristic(w) != 0)
    throw std::invalid_argument("tubular lattice requires Euler characteristic 0, got " +
                                to_string(euler_characteristic(w)) + " for " + w.to_string());
  n_ = w.lattice_rank();
  p_ = w.lcm_weights();
  cartan_ = canonical_cartan(w);

  auto cinv = to_integer(*inverse(to_rational(cartan_)));
  if (!cinv) throw std::logic_error("canonical Cartan matrix must be unimodular");
  euler_ = cinv->transpose();
  coxeter_ = -(cartan_.transpose() * *cinv);
  auto phinv = to_integer(*inverse(to_rational(coxeter_)));
  if (!phinv) throw std::logic_error("Coxeter matrix must be invertible over Z");
  coxeter_inv_ = *phinv;

  // avg = (1/p) sum_j (Phi^T)^j E,  so that chibar(x,y) = x^T avg y
  IMat acc(n_, n_);
  IMat phi_t_pow = IMat::identity(n_);
  for (int j = 0; j < p_; ++j) {
    acc = acc + phi_t_pow * euler_;
    phi_t_pow = phi_t_pow * coxeter_.transpose();
  }
  avg_ = QMat(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) avg_(i, j) = Rat(acc(i, j), Int(p_));

  radical_ = integer_kernel(acc);

  // rank/degree normalization.  p * chibar is an antisymmetric integer
  // matrix of rank 2, hence N = (a b^T - b a^T) / N(i0,j0) for any two
  // columns a, b with N(i0,j0) != 0.  Then every functional vanishing on
  // the radical is a combination of a.x and b.x.
  const IMat& nmat = acc;
  int i0 = -1, j0 = -1;
  for (int i = 0; i < n_ && i0 < 0; ++i)
    for (int j = 0; j < n_; ++j)
      if (nmat(i, j) != 0) {
        i0 = i;
        j0 = j;
        break;
      }
  if (i0 < 0) throw std::logic_error("average form is identically zero");
  IVec a = nmat.column(i0), b = nmat.column(j0);
  Int pivot = nmat(i0, j0);

  // The rank functional is the unique (up to scale) combination of a, b
  // that takes the same value on every projective class; orient it
  // positive.
  auto dot = [&](const IVec& u, const IVec& v) {
    Int s = 0;
    for (size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
    return s;
  };
  QMat sys(n_ - 1, 2);
  IVec p0 = projective(0);
  for (int v = 1; v < n_; ++v) {
    IVec diff = projective(v) - p0;
    sys(v - 1, 0) = Rat(dot(a, diff));
    sys(v - 1, 1) = Rat(dot(b, diff));
  }
  QMat null = nullspace(sys);
  if (null.cols() != 1)
    throw std::logic_error("rank functional is not unique; unexpected lattice degeneracy");
  Rat alpha = null(0, 0), beta = null(1, 0);

  // clear denominators and divide by content
  Int da = denominator(alpha), db = denominator(beta);
  Int scale = da / gcd(da, db) * db;
  Int ia = numerator(alpha) * (scale / da), ib = numerator(beta) * (scale / db);
  IVec rk(n_);
  Int content = 0;
  for (int k = 0; k < n_; ++k) {
    rk[k] = ia * a[k] + ib * b[k];
    content = gcd(content, rk[k]);
  }
  if (content == 0) throw std::logic_error("rank functional vanished");
  for (auto& c : rk) c /= content;
  Int on_proj = dot(rk, p0);
  if (on_proj == 0) throw std::logic_error("rank functional vanishes on projectives");
  if (on_proj < 0)
    for (auto& c : rk) c = -c;
  rank_vec_ = rk;

  // deg completes rk to a pair with rk /\ deg = chibar.  Writing
  // rk = rho_a a + rho_b b, any (gamma, delta) with
  // rho_a delta - rho_b gamma = 1 / (p * pivot) works.
  Rat sgn = on_proj < 0 ? Rat(-1) : Rat(1);
  Rat rho_a = sgn * alpha * Rat(scale, content);
  Rat rho_b = sgn * beta * Rat(scale, content);
  Rat target = Rat(1) / (Rat(p_) * Rat(pivot));
  Rat gamma = 0, delta = 0;
  if (rho_a != 0)
    delta = target / rho_a;
  else
    gamma = -target / rho_b;
  deg_vec_.assign(n_, Rat(0));
  for (int k = 0; k < n_; ++k) deg_vec_[k] = gamma * Rat(a[k]) + delta * Rat(b[k]);

  // the defining identity, exact on all basis pairs
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Rat lhs = avg_(i, j);
      Rat rhs = Rat(rank_vec_[i]) * deg_vec_[j] - deg_vec_[i] * Rat(rank_vec_[j]);
      if (lhs != rhs) throw std::logic_error("rank/degree normalization failed");
    }
}

Int TubularLattice::chi(const IVec& x, const IVec& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    throw std::invalid_argument("chi: vector length mismatch");
  IVec ey = euler_.apply(y);
  Int s = 0;
  for (int k = 0; k < n_; ++k) s += x[k] * ey[k];
  return s;
}

Rat TubularLattice::chibar(const IVec& x, const IVec& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    throw std::invalid_argument("chibar: vector length mismatch");
  Rat s = 0;
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) s += Rat(x[i]) * avg_(i, j) * Rat(y[j]);
  }
  return s;
}

IVec TubularLattice::phi(const IVec& x) const { return coxeter_.apply(x); }
IVec TubularLattice::phi_inv(const IVec& x) const { return coxeter_inv_.apply(x); }

Int TubularLattice::rank_of(const IVec& x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("rank_of: vector length mismatch");
  Int s = 0;
  for (int k = 0; k < n_; ++k) s += rank_vec_[k] * x[k];
  return s;
}

Rat TubularLattice::degree_of(const IVec& x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("degree_of: vector length mismatch");
  Rat s = 0;
  for (int k = 0; k < n_; ++k) s += deg_vec_[k] * Rat(x[k]);
  return s;
}

bool TubularLattice::in_radical(const IVec& x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("in_radical: vector length mismatch");
  // x^T avg must vanish
  for (int j = 0; j < n_; ++j) {
    Rat s = 0;
    for (int i = 0; i < n_; ++i)
      if (x[i] != 0) s += Rat(x[i]) * avg_(i, j);
    if (s != 0) return false;
  }
  return true;
}

TubularLattice tubular_lattice(const WeightType& w) { return TubularLattice(w); }

std::pair<Int, Rat> rank_degree(const TubularLattice& lat, const IVec& x) {
  return {lat.rank_of(x), lat.degree_of(x)};
}

SlopeValue slope(const TubularLattice& lat, const IVec& x) {
  Int rk = lat.rank_of(x);
  Rat dg = lat.degree_of(x);
  if (rk == 0 && dg == 0)
    throw std::invalid_argument("slope undefined: class has (rk, deg) = (0, 0)");
  if (rk == 0) return {true, Rat(0)};
  return {false, dg / Rat(rk)};
}

Rat hom_direction_check(const TubularLattice& lat, const IVec& x, const IVec& y) {
  return lat.chibar(x, y);
}

}  // namespace fcy

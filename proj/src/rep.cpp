#include "fcy/rep.hpp"

#include <numeric>

#include <nlohmann/json.hpp>

namespace fcy {

Rep::Rep(Quiver quiver, std::vector<int> dims, std::vector<QMat> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.size() != static_cast<size_t>(quiver_.vertex_count()))
    throw std::invalid_argument("rep: dims length mismatch");
  for (int d : dims_)
    if (d < 0) throw std::invalid_argument("rep: negative dimension");
  if (maps_.size() != quiver_.arrows().size())
    throw std::invalid_argument("rep: one matrix per arrow required");
  for (size_t a = 0; a < maps_.size(); ++a) {
    auto [s, t] = quiver_.arrows()[a];
    if (maps_[a].rows() != static_cast<size_t>(dims_[t]) ||
        maps_[a].cols() != static_cast<size_t>(dims_[s]))
      throw std::invalid_argument("rep: arrow matrix shape mismatch");
  }
}

IVec Rep::dim_vector() const {
  IVec d(dims_.size());
  for (size_t v = 0; v < dims_.size(); ++v) d[v] = dims_[v];
  return d;
}

int Rep::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

bool Rep::is_nilpotent() const {
  int total = total_dim();
  if (total == 0) return true;
  std::vector<int> offset(dims_.size() + 1, 0);
  for (size_t v = 0; v < dims_.size(); ++v) offset[v + 1] = offset[v] + dims_[v];
  QMat big(total, total);
  for (size_t a = 0; a < maps_.size(); ++a) {
    auto [s, t] = quiver_.arrows()[a];
    for (size_t i = 0; i < maps_[a].rows(); ++i)
      for (size_t j = 0; j < maps_[a].cols(); ++j)
        big(offset[t] + i, offset[s] + j) += maps_[a](i, j);
  }
  return mat_pow(big, static_cast<unsigned long>(total)).is_zero();
}

nlohmann::json Rep::to_json() const {
  nlohmann::json j;
  j["quiver"] = quiver_.to_json();
  j["dims"] = dims_;
  auto maps = nlohmann::json::array();
  for (const auto& m : maps_) {
    auto entries = nlohmann::json::array();
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t k = 0; k < m.cols(); ++k) entries.push_back(to_string(m(i, k)));
    maps.push_back(std::move(entries));
  }
  j["maps"] = std::move(maps);
  return j;
}

Rep Rep::from_json(const nlohmann::json& j) {
  Quiver q = Quiver::from_json(j.at("quiver"));
  std::vector<int> dims = j.at("dims").get<std::vector<int>>();
  std::vector<QMat> maps;
  const auto& jmaps = j.at("maps");
  for (size_t a = 0; a < jmaps.size(); ++a) {
    auto [s, t] = q.arrows()[a];
    QMat m(dims[t], dims[s]);
    const auto& entries = jmaps[a];
    if (entries.size() != m.rows() * m.cols())
      throw std::invalid_argument("rep json: matrix entry count mismatch");
    size_t idx = 0;
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t k = 0; k < m.cols(); ++k) m(i, k) = parse_rat(entries[idx++].get<std::string>());
    maps.push_back(std::move(m));
  }
  return Rep(std::move(q), std::move(dims), std::move(maps));
}

Rep zero_rep(const Quiver& q) {
  std::vector<int> dims(q.vertex_count(), 0);
  std::vector<QMat> maps;
  for (size_t a = 0; a < q.arrows().size(); ++a) maps.emplace_back(0, 0);
  return Rep(q, std::move(dims), std::move(maps));
}

Rep simple_rep(const Quiver& q, int v) {
  std::vector<int> dims(q.vertex_count(), 0);
  dims[v] = 1;
  std::vector<QMat> maps;
  for (auto [s, t] : q.arrows()) maps.emplace_back(dims[t], dims[s]);
  return Rep(q, std::move(dims), std::move(maps));
}

Rep projective_rep(const Quiver& q, int v) {
  if (!q.acyclic()) throw std::invalid_argument("projective_rep: acyclic quiver required");
  // Enumerate all paths starting at v; a path is stored as its endpoint
  // plus its predecessor index, so appending an arrow is O(1).
  struct Path {
    int endpoint;
    int pred;    // index of the path it extends, -1 for the trivial path
    size_t via;  // arrow appended
  };
  std::vector<Path> paths{{v, -1, 0}};
  std::vector<size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<size_t> next;
    for (size_t p : frontier)
      for (size_t a = 0; a < q.arrows().size(); ++a)
        if (q.arrows()[a].first == paths[p].endpoint) {
          paths.push_back({q.arrows()[a].second, static_cast<int>(p), a});
          next.push_back(paths.size() - 1);
        }
    frontier = std::move(next);
  }

  std::vector<int> dims(q.vertex_count(), 0);
  std::vector<int> slot(paths.size());
  for (size_t p = 0; p < paths.size(); ++p) slot[p] = dims[paths[p].endpoint]++;

  std::vector<QMat> maps;
  for (size_t a = 0; a < q.arrows().size(); ++a) {
    auto [s, t] = q.arrows()[a];
    maps.emplace_back(dims[t], dims[s]);
  }
  // arrow a sends the basis path p (ending at s(a)) to the extended path
  for (size_t p = 0; p < paths.size(); ++p) {
    if (paths[p].pred < 0) continue;
    size_t a = paths[p].via;
    maps[a](slot[p], slot[paths[p].pred]) = 1;
  }
  return Rep(q, std::move(dims), std::move(maps));
}

Rep direct_sum(const Rep& a, const Rep& b) {
  if (!(a.quiver() == b.quiver())) throw std::invalid_argument("direct_sum: quiver mismatch");
  std::vector<int> dims(a.dims().size());
  for (size_t v = 0; v < dims.size(); ++v) dims[v] = a.dims()[v] + b.dims()[v];
  std::vector<QMat> maps;
  for (size_t k = 0; k < a.maps().size(); ++k) {
    auto [s, t] = a.quiver().arrows()[k];
    QMat m(dims[t], dims[s]);
    const QMat& ma = a.map(k);
    const QMat& mb = b.map(k);
    for (size_t i = 0; i < ma.rows(); ++i)
      for (size_t j = 0; j < ma.cols(); ++j) m(i, j) = ma(i, j);
    for (size_t i = 0; i < mb.rows(); ++i)
      for (size_t j = 0; j < mb.cols(); ++j) m(ma.rows() + i, ma.cols() + j) = mb(i, j);
    maps.push_back(std::move(m));
  }
  return Rep(a.quiver(), std::move(dims), std::move(maps));
}

bool is_intertwiner(const Rep& m, const Rep& n, const RepHom& f) {
  if (!(m.quiver() == n.quiver()) || f.size() != m.dims().size()) return false;
  for (size_t v = 0; v < f.size(); ++v)
    if (f[v].rows() != static_cast<size_t>(n.dims()[v]) ||
        f[v].cols() != static_cast<size_t>(m.dims()[v]))
      return false;
  for (size_t a = 0; a < m.maps().size(); ++a) {
    auto [s, t] = m.quiver().arrows()[a];
    if (!(n.map(a) * f[s] - f[t] * m.map(a)).is_zero()) return false;
  }
  return true;
}

HomSpace hom_space(const Rep& m, const Rep& n) {
  if (!(m.quiver() == n.quiver())) throw std::invalid_argument("hom_space: quiver mismatch");
  const Quiver& q = m.quiver();
  size_t nv = static_cast<size_t>(q.vertex_count());

  // unknowns: entries of f_v (n.dims[v] x m.dims[v]), row-major, by vertex
  std::vector<size_t> offset(nv + 1, 0);
  for (size_t v = 0; v < nv; ++v)
    offset[v + 1] = offset[v] + static_cast<size_t>(n.dims()[v]) * m.dims()[v];
  size_t unknowns = offset[nv];

  size_t eqns = 0;
  for (auto [s, t] : q.arrows()) eqns += static_cast<size_t>(n.dims()[t]) * m.dims()[s];

  QMat sys(eqns, unknowns);
  size_t row = 0;
  for (size_t a = 0; a < q.arrows().size(); ++a) {
    auto [s, t] = q.arrows()[a];
    const QMat& ma = m.map(a);
    const QMat& na = n.map(a);
    // equation (r, c): sum_k na(r,k) f_s(k,c) - sum_l f_t(r,l) ma(l,c) = 0
    for (int r = 0; r < n.dims()[t]; ++r)
      for (int c = 0; c < m.dims()[s]; ++c) {
        for (int k = 0; k < n.dims()[s]; ++k)
          if (na(r, k) != 0)
            sys(row, offset[s] + static_cast<size_t>(k) * m.dims()[s] + c) += na(r, k);
        for (int l = 0; l < m.dims()[t]; ++l)
          if (ma(l, c) != 0)
            sys(row, offset[t] + static_cast<size_t>(r) * m.dims()[t] + l) -= ma(l, c);
        ++row;
      }
  }

  QMat basis = nullspace(sys);
  HomSpace hs;
  for (size_t k = 0; k < basis.cols(); ++k) {
    RepHom f;
    for (size_t v = 0; v < nv; ++v) {
      QMat fv(n.dims()[v], m.dims()[v]);
      for (int i = 0; i < n.dims()[v]; ++i)
        for (int j = 0; j < m.dims()[v]; ++j)
          fv(i, j) = basis(offset[v] + static_cast<size_t>(i) * m.dims()[v] + j, k);
      f.push_back(std::move(fv));
    }
    hs.basis.push_back(std::move(f));
  }
  return hs;
}

size_t ext1_dim(const Rep& m, const Rep& n) {
  if (!(m.quiver() == n.quiver())) throw std::invalid_argument("ext1_dim: quiver mismatch");
  Int chi = euler_form(m.quiver(), m.dim_vector(), n.dim_vector());
  Int ext = Int(hom_space(m, n).dimension()) - chi;
  if (ext < 0) throw std::logic_error("ext1_dim: negative value, broken invariant");
  return static_cast<size_t>(ext.convert_to<long>());
}

std::pair<Rep, Rep> ker_coker(const RepHom& f, const Rep& m, const Rep& n) {
  if (!is_intertwiner(m, n, f))
    throw std::invalid_argument("ker_coker: f is not an intertwiner M -> N");
  const Quiver& q = m.quiver();
  size_t nv = static_cast<size_t>(q.vertex_count());

  // kernel: columns of kb[v] span ker f_v
  std::vector<QMat> kb(nv);
  std::vector<int> kdims(nv);
  for (size_t v = 0; v < nv; ++v) {
    kb[v] = nullspace(f[v]);
    kdims[v] = static_cast<int>(kb[v].cols());
  }
  std::vector<QMat> kmaps;
  for (size_t a = 0; a < q.arrows().size(); ++a) {
    auto [s, t] = q.arrows()[a];
    QMat rhs = m.map(a) * kb[s];
    if (kdims[t] == 0) {
      if (!rhs.is_zero()) throw std::logic_error("ker_coker: kernel not preserved");
      kmaps.emplace_back(0, kdims[s]);
    } else {
      auto x = solve(kb[t], rhs);
      if (!x) throw std::logic_error("ker_coker: kernel not preserved");
      kmaps.push_back(std::move(*x));
    }
  }
  Rep ker(q, kdims, std::move(kmaps));

  // cokernel: complete a basis of im f_v by standard vectors; the quotient
  // map q_v is the complementary block of the inverse basis matrix.
  std::vector<QMat> proj(nv);   // q_v : N_v -> C_v
  std::vector<QMat> sect(nv);   // s_v : C_v -> N_v, with q_v s_v = id
  std::vector<int> cdims(nv);
  for (size_t v = 0; v < nv; ++v) {
    QMat im = column_space_basis(f[v]);
    size_t r = im.cols(), dim = static_cast<size_t>(n.dims()[v]);
    cdims[v] = static_cast<int>(dim - r);
    // greedily extend im by standard basis vectors
    QMat full(dim, dim);
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < r; ++j) full(i, j) = im(i, j);
    size_t have = r;
    std::vector<size_t> chosen;
    for (size_t e = 0; e < dim && have < dim; ++e) {
      full(e, have) = 1;
      QMat test(dim, have + 1);
      for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j <= have; ++j) test(i, j) = full(i, j);
      if (rank(test) == have + 1) {
        chosen.push_back(e);
        ++have;
      } else {
        full(e, have) = 0;
      }
    }
    auto finv = inverse(full);
    if (!finv) throw std::logic_error("ker_coker: basis completion failed");
    proj[v] = QMat(cdims[v], dim);
    for (int i = 0; i < cdims[v]; ++i)
      for (size_t j = 0; j < dim; ++j) proj[v](i, j) = (*finv)(r + i, j);
    sect[v] = QMat(dim, cdims[v]);
    for (int j = 0; j < cdims[v]; ++j) sect[v](chosen[j], j) = 1;
  }
  std::vector<QMat> cmaps;
  for (size_t a = 0; a < q.arrows().size(); ++a) {
    auto [s, t] = q.arrows()[a];
    cmaps.push_back(proj[t] * n.map(a) * sect[s]);
  }
  Rep coker(q, cdims, std::move(cmaps));

  return {std::move(ker), std::move(coker)};
}

namespace kronecker {

Quiver quiver() { return Quiver::kronecker(2); }

Rep p_x() {
  QMat a0(2, 1), a1(2, 1);
  a0(0, 0) = 1;
  a1(1, 0) = 1;
  return Rep(quiver(), {1, 2}, {a0, a1});
}

Rep p_y() { return Rep(quiver(), {0, 1}, {QMat(1, 0), QMat(1, 0)}); }

Rep i_x() { return Rep(quiver(), {1, 0}, {QMat(0, 1), QMat(0, 1)}); }

Rep i_y() {
  QMat a0(1, 2), a1(1, 2);
  a0(0, 0) = 1;
  a1(0, 1) = 1;
  return Rep(quiver(), {2, 1}, {a0, a1});
}

Rep regular(const Rat& lam, const Rat& mu) {
  if (lam == 0 && mu == 0) throw std::invalid_argument("kronecker regular: zero parameter");
  QMat a0(1, 1), a1(1, 1);
  a0(0, 0) = lam;
  a1(0, 0) = mu;
  return Rep(quiver(), {1, 1}, {a0, a1});
}

Rep preprojective(int n) {
  if (n < 0) throw std::invalid_argument("preprojective: n >= 0 required");
  QMat a0(n + 1, n), a1(n + 1, n);
  for (int i = 0; i < n; ++i) {
    a0(i, i) = 1;
    a1(i + 1, i) = 1;
  }
  return Rep(quiver(), {n, n + 1}, {a0, a1});
}

Rep preinjective(int n) {
  if (n < 0) throw std::invalid_argument("preinjective: n >= 0 required");
  QMat a0(n, n + 1), a1(n, n + 1);
  for (int i = 0; i < n; ++i) {
    a0(i, i) = 1;
    a1(i, i + 1) = 1;
  }
  return Rep(quiver(), {n + 1, n}, {a0, a1});
}

RepHom hom_py_px(const Rat& lam, const Rat& mu) {
  QMat fx(1, 0);
  QMat fy(2, 1);
  fy(0, 0) = lam;
  fy(1, 0) = mu;
  return {fx, fy};
}

}  // namespace kronecker

}  // namespace fcy

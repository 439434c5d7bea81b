#include "fcy/quiver.hpp"

#include <nlohmann/json.hpp>

namespace fcy {

namespace {

bool underlying_connected(int n, const std::vector<std::pair<int, int>>& arrows) {
  if (n <= 0) return false;
  std::vector<std::vector<int>> adj(n);
  for (auto [s, t] : arrows) {
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

bool compute_acyclic(int n, const std::vector<std::pair<int, int>>& arrows) {
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (auto [s, t] : arrows) {
    out[s].push_back(t);
    ++indeg[t];
  }
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int removed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++removed;
    for (int w : out[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return removed == n;
}

}  // namespace

Quiver::Quiver(int vertex_count, std::vector<std::pair<int, int>> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  if (vertex_count_ <= 0) throw std::invalid_argument("quiver needs at least one vertex");
  for (auto [s, t] : arrows_)
    if (s < 0 || s >= vertex_count_ || t < 0 || t >= vertex_count_)
      throw std::invalid_argument("arrow endpoint out of range");
  if (!underlying_connected(vertex_count_, arrows_))
    throw std::invalid_argument("quiver must be connected");
  acyclic_ = compute_acyclic(vertex_count_, arrows_);
}

nlohmann::json Quiver::to_json() const {
  nlohmann::json j;
  j["vertices"] = vertex_count_;
  auto arr = nlohmann::json::array();
  for (auto [s, t] : arrows_) arr.push_back(nlohmann::json::array({s, t}));
  j["arrows"] = std::move(arr);
  return j;
}

Quiver Quiver::from_json(const nlohmann::json& j) {
  int n = j.at("vertices").get<int>();
  std::vector<std::pair<int, int>> arrows;
  for (const auto& a : j.at("arrows"))
    arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
  return Quiver(n, std::move(arrows));
}

Quiver Quiver::kronecker(int n) {
  std::vector<std::pair<int, int>> arrows(n, {0, 1});
  return Quiver(2, std::move(arrows));
}

Quiver Quiver::linear(int n) {
  std::vector<std::pair<int, int>> arrows;
  for (int v = 0; v + 1 < n; ++v) arrows.emplace_back(v, v + 1);
  return Quiver(n, std::move(arrows));
}

Quiver Quiver::cycle(int r) {
  std::vector<std::pair<int, int>> arrows;
  for (int v = 0; v < r; ++v) arrows.emplace_back(v, (v + 1) % r);
  return Quiver(r, std::move(arrows));
}

Int euler_form(const Quiver& q, const IVec& d, const IVec& e) {
  size_t n = static_cast<size_t>(q.vertex_count());
  if (d.size() != n || e.size() != n)
    throw std::invalid_argument("euler_form: vector length must match vertex count");
  Int s = 0;
  for (size_t v = 0; v < n; ++v) s += d[v] * e[v];
  for (auto [i, j] : q.arrows()) s -= d[i] * e[j];
  return s;
}

IMat euler_matrix(const Quiver& q) {
  size_t n = static_cast<size_t>(q.vertex_count());
  IMat e = IMat::identity(n);
  for (auto [i, j] : q.arrows()) e(i, j) -= 1;
  return e;
}

IMat cartan_matrix(const Quiver& q) {
  if (!q.acyclic())
    throw std::invalid_argument("cartan_matrix: cyclic quiver has infinite path counts");
  size_t n = static_cast<size_t>(q.vertex_count());
  // adj(t, s) counts arrows s -> t; path counts are sum_k adj^k, finite by
  // nilpotency of adj.
  IMat adj(n, n);
  for (auto [s, t] : q.arrows()) adj(t, s) += 1;
  IMat c = IMat::identity(n);
  IMat power = adj;
  for (size_t k = 1; k < n; ++k) {
    c = c + power;
    power = power * adj;
  }
  return c;
}

IMat coxeter_matrix(const IMat& c) {
  if (c.rows() != c.cols()) throw std::invalid_argument("coxeter_matrix: non-square input");
  auto cinv_q = inverse(to_rational(c));
  if (!cinv_q) throw std::invalid_argument("coxeter_matrix: singular Cartan matrix");
  auto cinv = to_integer(*cinv_q);
  if (!cinv)
    throw std::invalid_argument("coxeter_matrix: Cartan matrix not invertible over Z");
  return -(c.transpose() * *cinv);
}

IVec injective_class(const IMat& cartan, int v) {
  IVec r(cartan.cols());
  for (size_t w = 0; w < cartan.cols(); ++w) r[w] = cartan(v, w);
  return r;
}

IVec projective_class(const IMat& cartan, int v) { return cartan.column(v); }

std::optional<int> matrix_order(const IMat& m, int max_k) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_order: non-square matrix");
  IMat power = m;
  for (int k = 1; k <= max_k; ++k) {
    if (power.is_identity()) return k;
    power = power * m;
  }
  return std::nullopt;
}

nlohmann::json matrix_to_json(const IMat& m) {
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto entries = nlohmann::json::array();
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t k = 0; k < m.cols(); ++k) entries.push_back(to_string(m(i, k)));
  j["entries"] = std::move(entries);
  return j;
}

IMat matrix_from_json(const nlohmann::json& j) {
  size_t rows = j.at("rows").get<size_t>();
  size_t cols = j.at("cols").get<size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != rows * cols)
    throw std::invalid_argument("matrix json: entry count mismatch");
  IMat m(rows, cols);
  size_t idx = 0;
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < cols; ++k) m(i, k) = parse_int(entries[idx++].get<std::string>());
  return m;
}

}  // namespace fcy

#include "fcy/dynkin.hpp"

#include <algorithm>

namespace fcy {

namespace {

// Classifies a connected tree by the arm lengths at its branch vertex.
// Returns "", or "A<n>", "D<n>", "E<n>".
std::string classify_diagram(int n, const std::vector<std::pair<int, int>>& arrows) {
  if (static_cast<int>(arrows.size()) != n - 1) return "";
  std::vector<std::vector<int>> adj(n);
  for (auto [s, t] : arrows) {
    if (s == t) return "";
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  int branch = -1;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() > 3) return "";
    if (adj[v].size() == 3) {
      if (branch >= 0) return "";
      branch = v;
    }
  }
  if (branch < 0) return "A" + std::to_string(n);
  // arm lengths from the branch vertex; each walk must be a simple path
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    if (adj[cur].size() != 1) return "";  // hits the branch again or another branch
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return "E" + std::to_string(n);
  return "";
}

}  // namespace

DynkinQuiver::DynkinQuiver(char family, int n, std::vector<std::pair<int, int>> arrows)
    : family_(family), n_(n), quiver_(n, std::move(arrows)) {
  if (family == 'A' && n < 1) throw std::invalid_argument("A_n requires n >= 1");
  if (family == 'D' && n < 4) throw std::invalid_argument("D_n requires n >= 4");
  if (family == 'E' && (n < 6 || n > 8)) throw std::invalid_argument("E_n requires n in {6,7,8}");
  if (family != 'A' && family != 'D' && family != 'E')
    throw std::invalid_argument("unknown Dynkin family");
  std::string got = classify_diagram(n, quiver_.arrows());
  if (got != name())
    throw std::invalid_argument("arrows do not form the diagram " + name());
}

DynkinQuiver DynkinQuiver::standard(char family, int n) {
  std::vector<std::pair<int, int>> arrows;
  if (family == 'A') {
    for (int v = 0; v + 1 < n; ++v) arrows.emplace_back(v, v + 1);
  } else if (family == 'D') {
    for (int v = 0; v + 1 < n - 2; ++v) arrows.emplace_back(v, v + 1);
    arrows.emplace_back(n - 3, n - 2);
    arrows.emplace_back(n - 3, n - 1);
  } else if (family == 'E') {
    for (int v = 0; v + 1 < n - 1; ++v) arrows.emplace_back(v, v + 1);
    arrows.emplace_back(2, n - 1);
  }
  return DynkinQuiver(family, n, std::move(arrows));
}

DynkinQuiver DynkinQuiver::standard(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad Dynkin name: " + name);
  return standard(name[0], std::stoi(name.substr(1)));
}

std::vector<IVec> positive_roots(const DynkinQuiver& q) {
  int n = q.quiver().vertex_count();
  // chi(d, d) with machine integers; coordinates stay <= 6
  std::vector<std::pair<int, int>> arrows = q.quiver().arrows();
  std::vector<long> d(n, 0);
  std::vector<IVec> roots;
  while (true) {
    long form = 0;
    for (int v = 0; v < n; ++v) form += d[v] * d[v];
    for (auto [s, t] : arrows) form -= d[s] * d[t];
    if (form == 1) {
      IVec r(n);
      for (int v = 0; v < n; ++v) r[v] = d[v];
      roots.push_back(std::move(r));
    }
    int pos = 0;
    while (pos < n && d[pos] == 6) d[pos++] = 0;
    if (pos == n) break;
    ++d[pos];
  }
  return roots;
}

DerivedObject shift_by(const DerivedObject& x, long k) { return {x.root, x.shift + k}; }

namespace {

DerivedObject apply_coxeter(const DerivedObject& x, const IMat& phi, bool inverse_dir) {
  IVec v = phi.apply(x.root);
  bool pos = true, neg = true;
  for (const auto& c : v) {
    if (c > 0) neg = false;
    if (c < 0) pos = false;
  }
  if (pos == neg) throw std::logic_error("coxeter image of a root is not a signed root");
  if (pos) return {v, x.shift};
  for (auto& c : v) c = -c;
  return {v, x.shift + (inverse_dir ? 1 : -1)};
}

}  // namespace

DerivedObject tau_derived(const DerivedObject& x, const DynkinQuiver& q) {
  IMat phi = coxeter_matrix(cartan_matrix(q.quiver()));
  return apply_coxeter(x, phi, false);
}

DerivedObject tau_derived_inv(const DerivedObject& x, const DynkinQuiver& q) {
  IMat phi = coxeter_matrix(cartan_matrix(q.quiver()));
  auto phi_inv = to_integer(*inverse(to_rational(phi)));
  if (!phi_inv) throw std::logic_error("coxeter matrix not invertible over Z");
  return apply_coxeter(x, *phi_inv, true);
}

DerivedObject serre(const DerivedObject& x, const DynkinQuiver& q) {
  DerivedObject t = tau_derived(x, q);
  t.shift += 1;
  return t;
}

CyPair cy_dimension(const DynkinQuiver& q, int bound) {
  IMat phi = coxeter_matrix(cartan_matrix(q.quiver()));
  auto order = matrix_order(phi, bound);
  if (!order) throw std::runtime_error("cy_dimension: bound exceeded");
  int n = *order;

  // S^n must be a uniform shift on every object; walk the whole orbit.
  // Note that on objects alone a smaller power of S can already act as a
  // pure shift (Phi^{n/2} = -1 happens, D_4 for instance); the reported
  // pair is the one with trivial lattice action.
  std::vector<IVec> roots = positive_roots(q);
  long m = 0;
  for (size_t i = 0; i < roots.size(); ++i) {
    DerivedObject x{roots[i], 0};
    for (int k = 0; k < n; ++k) {
      x = apply_coxeter(x, phi, false);
      x.shift += 1;  // S = tau [1]
    }
    if (x.root != roots[i])
      throw std::logic_error("cy_dimension: Phi^n = 1 but an object moved");
    if (i == 0)
      m = x.shift;
    else if (x.shift != m)
      throw std::logic_error("cy_dimension: shift is not uniform across objects");
  }
  return {n, m};
}

}  // namespace fcy

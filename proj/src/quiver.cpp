#include "repvar/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace repvar {

DimVector DimVector::unit(int n, int vertex) {
  DimVector d = zeros(n);
  d.v[vertex - 1] = 1;
  return d;
}

int DimVector::total() const {
  return std::accumulate(v.begin(), v.end(), 0);
}

bool DimVector::is_zero() const {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

bool DimVector::nonnegative() const {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

bool DimVector::leq(const DimVector& o) const {
  if (v.size() != o.v.size())
    throw std::invalid_argument("DimVector::leq: size mismatch");
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] > o.v[i]) return false;
  return true;
}

DimVector DimVector::plus(const DimVector& o) const {
  if (v.size() != o.v.size())
    throw std::invalid_argument("DimVector::plus: size mismatch");
  DimVector r(*this);
  for (size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
  return r;
}

DimVector DimVector::minus(const DimVector& o) const {
  if (v.size() != o.v.size())
    throw std::invalid_argument("DimVector::minus: size mismatch");
  DimVector r(*this);
  for (size_t i = 0; i < v.size(); ++i) r.v[i] -= o.v[i];
  return r;
}

DimVector DimVector::sup(const DimVector& a, const DimVector& b) {
  if (a.v.size() != b.v.size())
    throw std::invalid_argument("DimVector::sup: size mismatch");
  DimVector r(a);
  for (size_t i = 0; i < r.v.size(); ++i) r.v[i] = std::max(r.v[i], b.v[i]);
  return r;
}

DimVector DimVector::inf(const DimVector& a, const DimVector& b) {
  if (a.v.size() != b.v.size())
    throw std::invalid_argument("DimVector::inf: size mismatch");
  DimVector r(a);
  for (size_t i = 0; i < r.v.size(); ++i) r.v[i] = std::min(r.v[i], b.v[i]);
  return r;
}

DimVector DimVector::clamp0() const {
  DimVector r(*this);
  for (int& x : r.v) x = std::max(x, 0);
  return r;
}

std::string DimVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows_)
    : n(vertex_count), arrows(std::move(arrows_)) {
  if (n < 0) throw std::invalid_argument("Quiver: negative vertex count");
  std::set<std::string> names;
  for (const Arrow& a : arrows) {
    if (a.source < 1 || a.source > n || a.target < 1 || a.target > n)
      throw std::invalid_argument("Quiver: arrow '" + a.name +
                                  "' references a missing vertex");
    if (!names.insert(a.name).second)
      throw std::invalid_argument("Quiver: duplicate arrow name '" + a.name +
                                  "'");
  }
}

std::vector<std::vector<int>> Quiver::adjacency_matrix() const {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const Arrow& ar : arrows) ++a[ar.source - 1][ar.target - 1];
  return a;
}

std::vector<int> Quiver::arrows_from(int vertex) const {
  std::vector<int> r;
  for (int i = 0; i < static_cast<int>(arrows.size()); ++i)
    if (arrows[i].source == vertex) r.push_back(i);
  return r;
}

std::vector<int> Quiver::arrows_into(int vertex) const {
  std::vector<int> r;
  for (int i = 0; i < static_cast<int>(arrows.size()); ++i)
    if (arrows[i].target == vertex) r.push_back(i);
  return r;
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm.
  std::vector<int> indeg(n + 1, 0);
  for (const Arrow& a : arrows) ++indeg[a.target];
  std::vector<int> stack;
  for (int v = 1; v <= n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const Arrow& a : arrows)
      if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
  }
  return seen == n;
}

int Quiver::longest_path_length() const {
  if (!is_acyclic())
    throw std::invalid_argument("longest_path_length: quiver has a cycle");
  // Longest path ending at each vertex, in a topological sweep.
  std::vector<int> best(n + 1, 0);
  bool changed = true;
  int rounds = 0;
  while (changed) {
    changed = false;
    if (++rounds > n + 1) break;  // unreachable for acyclic input
    for (const Arrow& a : arrows) {
      if (best[a.source] + 1 > best[a.target]) {
        best[a.target] = best[a.source] + 1;
        changed = true;
      }
    }
  }
  if (n == 0) return 0;
  return *std::max_element(best.begin() + 1, best.end());
}

Quiver Quiver::separated() const {
  std::vector<Arrow> sep;
  sep.reserve(arrows.size());
  for (const Arrow& a : arrows)
    sep.push_back(Arrow{a.name, a.source, n + a.target});
  return Quiver(2 * n, std::move(sep));
}

DimVector times_adjacency(const DimVector& d,
                          const std::vector<std::vector<int>>& a) {
  int n = d.size();
  if (static_cast<int>(a.size()) != n)
    throw std::invalid_argument("times_adjacency: size mismatch");
  DimVector r = DimVector::zeros(n);
  for (int i = 0; i < n; ++i) {
    if (d[i] == 0) continue;
    for (int j = 0; j < n; ++j) r[j] += d[i] * a[i][j];
  }
  return r;
}

long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (d.size() != q.n || e.size() != q.n)
    throw std::invalid_argument("euler_form: dimension vector size mismatch");
  long long s = 0;
  for (int i = 0; i < q.n; ++i) s += static_cast<long long>(d[i]) * e[i];
  for (const Arrow& a : q.arrows)
    s -= static_cast<long long>(d[a.source - 1]) * e[a.target - 1];
  return s;
}

DimVector hat_dim(const DimVector& t, const DimVector& d) {
  if (t.size() != d.size())
    throw std::invalid_argument("hat_dim: size mismatch");
  if (!t.leq(d))
    throw std::invalid_argument("hat_dim: top exceeds dimension vector");
  DimVector r = DimVector::zeros(2 * d.size());
  for (int i = 0; i < t.size(); ++i) {
    r[i] = t[i];
    r[t.size() + i] = d[i] - t[i];
  }
  return r;
}

DimVector unhat_dim(const DimVector& dhat) {
  if (dhat.size() % 2 != 0)
    throw std::invalid_argument("unhat_dim: odd length");
  int n = dhat.size() / 2;
  DimVector r = DimVector::zeros(n);
  for (int i = 0; i < n; ++i) r[i] = dhat[i] + dhat[n + i];
  return r;
}

Path Path::compose(const Path& p, const Path& q) {
  if (p.end != q.start)
    throw std::invalid_argument("Path::compose: endpoints do not match");
  Path r;
  r.start = p.start;
  r.end = q.end;
  r.arrow_ids = p.arrow_ids;
  r.arrow_ids.insert(r.arrow_ids.end(), q.arrow_ids.begin(),
                     q.arrow_ids.end());
  return r;
}

std::string Path::to_string(const Quiver& q) const {
  if (arrow_ids.empty()) return "e" + std::to_string(start);
  std::ostringstream os;
  for (size_t i = arrow_ids.size(); i-- > 0;) {
    os << q.arrows[arrow_ids[i]].name;
    if (i > 0) os << "*";
  }
  return os.str();
}

bool path_less(const Quiver& q, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (int i = 0; i < a.length(); ++i) {
    const std::string& na = q.arrows[a.arrow_ids[i]].name;
    const std::string& nb = q.arrows[b.arrow_ids[i]].name;
    if (na != nb) return na < nb;
  }
  return a.start < b.start;
}

TruncatedAlgebra::TruncatedAlgebra(Quiver q, int l)
    : quiver(std::move(q)), loewy_bound(l) {
  if (l < 0)
    throw std::invalid_argument("TruncatedAlgebra: negative Loewy bound");
}

std::vector<Path> enumerate_paths(const TruncatedAlgebra& a, int from,
                                  int max_len) {
  if (max_len > a.loewy_bound)
    throw std::invalid_argument("enumerate_paths: max_len exceeds Loewy bound");
  if (from < 1 || from > a.quiver.n)
    throw std::invalid_argument("enumerate_paths: missing vertex");
  std::vector<Path> out;
  std::vector<Path> frontier{Path::trivial(from)};
  out.push_back(frontier[0]);
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      for (int ai : a.quiver.arrows_from(p.end)) {
        Path q = p;
        q.arrow_ids.push_back(ai);
        q.end = a.quiver.arrows[ai].target;
        next.push_back(std::move(q));
      }
    }
    std::sort(next.begin(), next.end(), [&](const Path& x, const Path& y) {
      return path_less(a.quiver, x, y);
    });
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace repvar

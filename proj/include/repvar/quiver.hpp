#pragma once

// Quivers, dimension vectors, paths, and truncated path algebra descriptors.
//
// Vertices are the integers 1..n. Arrows compose like functions: in a path,
// arrows are stored in order of application, so {a, b} is the path "b after
// a" with source(b) = target(a). Dimension-vector times adjacency products
// follow the row-vector convention d . A.

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace repvar {

// Per-vertex integer vector. Entries of a genuine dimension vector are
// non-negative; intermediate arithmetic (before clamping sups) may dip
// below zero, hence int entries.
struct DimVector {
  std::vector<int> v;

  DimVector() = default;
  explicit DimVector(std::vector<int> entries) : v(std::move(entries)) {}
  static DimVector zeros(int n) { return DimVector(std::vector<int>(n, 0)); }
  static DimVector unit(int n, int vertex);  // vertex is 1-based

  int size() const { return static_cast<int>(v.size()); }
  int& operator[](int i) { return v[i]; }
  int operator[](int i) const { return v[i]; }

  int total() const;
  bool is_zero() const;
  bool nonnegative() const;

  bool leq(const DimVector& o) const;  // componentwise
  DimVector plus(const DimVector& o) const;
  DimVector minus(const DimVector& o) const;
  static DimVector sup(const DimVector& a, const DimVector& b);
  static DimVector inf(const DimVector& a, const DimVector& b);
  DimVector clamp0() const;  // sup with the zero vector

  bool operator==(const DimVector& o) const = default;
  auto operator<=>(const DimVector& o) const = default;  // lex, for ordering

  std::string to_string() const;  // "(d1,...,dn)"
};

struct Arrow {
  std::string name;
  int source = 0;  // 1-based vertex ids
  int target = 0;

  bool operator==(const Arrow& o) const = default;
};

struct Quiver {
  int n = 0;  // vertices 1..n
  std::vector<Arrow> arrows;

  Quiver() = default;
  Quiver(int vertex_count, std::vector<Arrow> arrows_);

  // A[i][j] = number of arrows i+1 -> j+1 (0-based matrix of 1-based ids).
  std::vector<std::vector<int>> adjacency_matrix() const;

  std::vector<int> arrows_from(int vertex) const;  // arrow indices, in order
  std::vector<int> arrows_into(int vertex) const;

  bool is_acyclic() const;
  // Length of the longest path; quiver must be acyclic.
  int longest_path_length() const;

  // Doubled quiver: vertices {e_1..e_n, ê_1..ê_n} = {1..2n}; every arrow
  // i -> j becomes i -> n + j; the hatted vertices are sinks.
  Quiver separated() const;

  bool operator==(const Quiver& o) const = default;
};

// d . A as a row vector: result_j = sum_i d_i A[i][j].
DimVector times_adjacency(const DimVector& d,
                          const std::vector<std::vector<int>>& a);

// <d, e> = sum_i d_i e_i - sum_{arrows i->j} d_i e_j.
long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

// Dimension vectors across the separated-quiver correspondence: a module
// with top t and dimension d corresponds to the separated dimension vector
// (t, d - t); collapsing adds the two halves back together.
DimVector hat_dim(const DimVector& t, const DimVector& d);
DimVector unhat_dim(const DimVector& dhat);

// Path in a quiver: arrow indices in application order (first applied
// first). A length-0 path is a vertex.
struct Path {
  int start = 0;
  int end = 0;
  std::vector<int> arrow_ids;

  static Path trivial(int vertex) { return Path{vertex, vertex, {}}; }
  int length() const { return static_cast<int>(arrow_ids.size()); }
  bool operator==(const Path& o) const = default;

  // "q after p": valid when p.end == q.start.
  static Path compose(const Path& p, const Path& q);

  // Function-order rendering, e.g. "a1*b1" for b1 followed by a1.
  std::string to_string(const Quiver& q) const;
};

// Order paths by (length, arrow-name sequence in application order).
bool path_less(const Quiver& q, const Path& a, const Path& b);

// Truncated path algebra KQ / <all paths of length L+1>. loewy_bound is L,
// so L = 0 is the semisimple algebra.
struct TruncatedAlgebra {
  Quiver quiver;
  int loewy_bound = 0;

  TruncatedAlgebra() = default;
  TruncatedAlgebra(Quiver q, int l);

  int layer_count() const { return loewy_bound + 1; }
  bool operator==(const TruncatedAlgebra& o) const = default;
};

// All paths of length 0..max_len starting at `from`, sorted by
// (length, arrow-name sequence). max_len must be <= loewy_bound.
std::vector<Path> enumerate_paths(const TruncatedAlgebra& a, int from,
                                  int max_len);

}  // namespace repvar

#include "repvar/fp.hpp"

#include <algorithm>
#include <sstream>

namespace repvar {

uint64_t Rng::below(uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  // Rejection sampling keeps the distribution exactly uniform.
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t v;
  do {
    v = gen_();
  } while (v >= limit);
  return v % n;
}

Rng Rng::fork(uint64_t salt) {
  uint64_t s = next() ^ (salt * 0x9e3779b97f4a7c15ULL + 0xd1b54a32d192ed03ULL);
  return Rng(s);
}

uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) {
  uint32_t s = a + b;
  return s >= p ? s - p : s;
}

uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

uint32_t fp_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

uint32_t fp_inv(uint32_t a, uint32_t p) {
  if (a == 0) throw std::domain_error("fp_inv: zero is not invertible");
  // Extended Euclid on (a, p).
  int64_t t = 0, newt = 1;
  int64_t r = p, newr = a;
  while (newr != 0) {
    int64_t q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

uint32_t fp_pow(uint32_t a, uint64_t e, uint32_t p) {
  uint64_t base = a % p, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

FpMat FpMat::identity(uint32_t p, int n) {
  FpMat m(p, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool FpMat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](uint32_t x) { return x == 0; });
}

FpMat FpMat::transpose() const {
  FpMat t(p, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

FpMat FpMat::mul(const FpMat& o) const {
  if (cols != o.rows || p != o.p)
    throw std::invalid_argument("FpMat::mul: shape or modulus mismatch");
  FpMat r(p, rows, o.cols);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      uint64_t aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols; ++j) {
        r.at(i, j) = static_cast<uint32_t>(
            (r.at(i, j) + aik * o.at(k, j)) % p);
      }
    }
  }
  return r;
}

FpMat FpMat::add(const FpMat& o) const {
  if (rows != o.rows || cols != o.cols || p != o.p)
    throw std::invalid_argument("FpMat::add: shape or modulus mismatch");
  FpMat r(p, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = fp_add(a[i], o.a[i], p);
  return r;
}

FpMat FpMat::sub(const FpMat& o) const {
  if (rows != o.rows || cols != o.cols || p != o.p)
    throw std::invalid_argument("FpMat::sub: shape or modulus mismatch");
  FpMat r(p, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = fp_sub(a[i], o.a[i], p);
  return r;
}

FpMat FpMat::scale(uint32_t c) const {
  FpMat r(p, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = fp_mul(a[i], c, p);
  return r;
}

FpMat FpMat::vstack(const FpMat& o) const {
  if (cols != o.cols || p != o.p)
    throw std::invalid_argument("FpMat::vstack: shape or modulus mismatch");
  FpMat r(p, rows + o.rows, cols);
  std::copy(a.begin(), a.end(), r.a.begin());
  std::copy(o.a.begin(), o.a.end(), r.a.begin() + a.size());
  return r;
}

std::vector<uint32_t> FpMat::row(int i) const {
  return std::vector<uint32_t>(a.begin() + static_cast<size_t>(i) * cols,
                               a.begin() + static_cast<size_t>(i + 1) * cols);
}

void FpMat::set_row(int i, const std::vector<uint32_t>& v) {
  std::copy(v.begin(), v.end(), a.begin() + static_cast<size_t>(i) * cols);
}

std::string FpMat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols; ++j) os << (j ? "," : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

std::vector<int> rref(FpMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    uint32_t inv = fp_inv(m.at(r, c), m.p);
    for (int j = c; j < m.cols; ++j) m.at(r, j) = fp_mul(m.at(r, j), inv, m.p);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      uint32_t f = m.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = fp_sub(m.at(i, j), fp_mul(f, m.at(r, j), m.p), m.p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(FpMat m) { return static_cast<int>(rref(m).size()); }

FpMat nullspace(const FpMat& m) {
  FpMat e = m;
  std::vector<int> pivots = rref(e);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  FpMat basis(m.p, static_cast<int>(free_cols.size()), m.cols);
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    int fc = free_cols[k];
    basis.at(k, fc) = 1;
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
      basis.at(k, pivots[r]) = fp_neg(e.at(r, fc), m.p);
  }
  return basis;
}

uint32_t det(FpMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: square only");
  uint32_t p = m.p, d = 1;
  for (int c = 0; c < m.cols; ++c) {
    int piv = -1;
    for (int i = c; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(c, j));
      d = fp_neg(d, p);
    }
    d = fp_mul(d, m.at(c, c), p);
    uint32_t inv = fp_inv(m.at(c, c), p);
    for (int i = c + 1; i < m.rows; ++i) {
      uint32_t f = fp_mul(m.at(i, c), inv, p);
      if (f == 0) continue;
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = fp_sub(m.at(i, j), fp_mul(f, m.at(c, j), p), p);
    }
  }
  return d;
}

FpPoly::FpPoly(uint32_t p_, std::vector<uint32_t> coeffs)
    : p(p_), c(std::move(coeffs)) {
  for (auto& x : c) x %= p;
  normalize();
}

void FpPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

FpPoly FpPoly::add(const FpPoly& o) const {
  std::vector<uint32_t> r(std::max(c.size(), o.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) r[i] = c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r[i] = fp_add(r[i], o.c[i], p);
  return FpPoly(p, std::move(r));
}

FpPoly FpPoly::sub(const FpPoly& o) const {
  std::vector<uint32_t> r(std::max(c.size(), o.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) r[i] = c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r[i] = fp_sub(r[i], o.c[i], p);
  return FpPoly(p, std::move(r));
}

FpPoly FpPoly::mul(const FpPoly& o) const {
  if (is_zero() || o.is_zero()) return zero(p);
  std::vector<uint32_t> r(c.size() + o.c.size() - 1, 0);
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (size_t j = 0; j < o.c.size(); ++j)
      r[i + j] = static_cast<uint32_t>(
          (r[i + j] + static_cast<uint64_t>(c[i]) * o.c[j]) % p);
  }
  return FpPoly(p, std::move(r));
}

FpPoly FpPoly::scale(uint32_t s) const {
  std::vector<uint32_t> r(c);
  for (auto& x : r) x = fp_mul(x, s, p);
  return FpPoly(p, std::move(r));
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scale(fp_inv(lead(), p));
}

uint32_t FpPoly::eval(uint32_t x) const {
  uint64_t acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = (acc * x + c[i]) % p;
  return static_cast<uint32_t>(acc);
}

FpPoly FpPoly::derivative() const {
  if (c.size() <= 1) return zero(p);
  std::vector<uint32_t> r(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i)
    r[i - 1] = fp_mul(c[i], static_cast<uint32_t>(i % p), p);
  return FpPoly(p, std::move(r));
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i > 0) {
      if (c[i] != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

void fp_poly_divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
  if (b.is_zero()) throw std::domain_error("fp_poly_divmod: division by zero");
  uint32_t p = a.p;
  r = a;
  q = FpPoly::zero(p);
  if (a.deg() < b.deg()) return;
  std::vector<uint32_t> qc(a.deg() - b.deg() + 1, 0);
  uint32_t lead_inv = fp_inv(b.lead(), p);
  std::vector<uint32_t> rc = r.c;
  for (int k = a.deg() - b.deg(); k >= 0; --k) {
    uint32_t coef = fp_mul(rc[k + b.deg()], lead_inv, p);
    qc[k] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= b.deg(); ++j)
      rc[k + j] = fp_sub(rc[k + j], fp_mul(coef, b.c[j], p), p);
  }
  q = FpPoly(p, std::move(qc));
  r = FpPoly(p, std::move(rc));
}

FpPoly fp_poly_mod(const FpPoly& a, const FpPoly& b) {
  FpPoly q, r;
  fp_poly_divmod(a, b, q, r);
  return r;
}

FpPoly fp_poly_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = fp_poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly fp_poly_powmod(const FpPoly& base, uint64_t e, const FpPoly& mod) {
  FpPoly acc = FpPoly::one(base.p);
  FpPoly b = fp_poly_mod(base, mod);
  while (e) {
    if (e & 1) acc = fp_poly_mod(acc.mul(b), mod);
    b = fp_poly_mod(b.mul(b), mod);
    e >>= 1;
  }
  return acc;
}

namespace {

// Squarefree part decomposition: returns pairs (g, m) with f = prod g^m,
// g squarefree, pairwise coprime. Handles the char-p x^p pattern.
std::vector<std::pair<FpPoly, int>> squarefree_decompose(FpPoly f) {
  std::vector<std::pair<FpPoly, int>> out;
  uint32_t p = f.p;
  f = f.monic();
  int outer = 1;  // multiplicity scale from p-th power unwrapping
  while (f.deg() > 0) {
    FpPoly d = f.derivative();
    if (d.is_zero()) {
      // f is a polynomial in x^p; take p-th root (coefficients are in F_p,
      // where a^p = a).
      std::vector<uint32_t> rc(f.deg() / p + 1);
      for (size_t i = 0; i < rc.size(); ++i) rc[i] = f.c[i * p];
      f = FpPoly(p, std::move(rc));
      outer *= static_cast<int>(p);
      continue;
    }
    FpPoly g = fp_poly_gcd(f, d);
    FpPoly w, rem;
    fp_poly_divmod(f, g, w, rem);  // w = squarefree part chain start
    int m = 1;
    while (w.deg() > 0) {
      FpPoly y = fp_poly_gcd(w, g);
      FpPoly fac, r2;
      fp_poly_divmod(w, y, fac, r2);
      if (fac.deg() > 0) out.emplace_back(fac.monic(), m * outer);
      FpPoly q2, r3;
      fp_poly_divmod(g, y, q2, r3);
      g = q2;
      w = y;
      ++m;
    }
    if (g.deg() == 0) break;
    f = g;
    // remaining g has derivative zero; loop unwraps it
  }
  return out;
}

// Distinct-degree factorization of a monic squarefree f:
// returns (product of irreducibles of degree d, d).
std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f) {
  std::vector<std::pair<FpPoly, int>> out;
  uint32_t p = f.p;
  FpPoly h = FpPoly::x(p);
  int d = 0;
  while (f.deg() >= 2 * (d + 1)) {
    ++d;
    h = fp_poly_powmod(h, p, f);
    FpPoly g = fp_poly_gcd(f, h.sub(FpPoly::x(p)));
    if (g.deg() > 0) {
      out.emplace_back(g, d);
      FpPoly q, r;
      fp_poly_divmod(f, g, q, r);
      f = q;
      h = fp_poly_mod(h, f);
    }
  }
  if (f.deg() > 0) out.emplace_back(f, f.deg());
  return out;
}

// Cantor-Zassenhaus equal-degree splitting (p odd).
void equal_degree(const FpPoly& f, int d, Rng& rng,
                  std::vector<FpPoly>& out) {
  if (f.deg() == d) {
    out.push_back(f.monic());
    return;
  }
  uint32_t p = f.p;
  if (p == 2) throw std::domain_error("equal_degree requires odd p");
  // (p^d - 1) / 2
  uint64_t e = 1;
  for (int i = 0; i < d; ++i) e *= p;
  e = (e - 1) / 2;
  while (true) {
    std::vector<uint32_t> rc(f.deg());
    for (auto& x : rc) x = rng.mod_p(p);
    FpPoly a(p, std::move(rc));
    if (a.deg() < 1) continue;
    FpPoly g = fp_poly_gcd(f, a);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree(g, d, rng, out);
      FpPoly q, r;
      fp_poly_divmod(f, g, q, r);
      equal_degree(q, d, rng, out);
      return;
    }
    FpPoly b = fp_poly_powmod(a, e, f).sub(FpPoly::one(p));
    g = fp_poly_gcd(f, b);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree(g, d, rng, out);
      FpPoly q, r;
      fp_poly_divmod(f, g, q, r);
      equal_degree(q, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FpPoly, int>> fp_poly_factor(const FpPoly& f, Rng& rng) {
  if (f.is_zero()) throw std::domain_error("fp_poly_factor: zero polynomial");
  std::vector<std::pair<FpPoly, int>> out;
  for (auto& [sq, mult] : squarefree_decompose(f)) {
    for (auto& [prod, d] : distinct_degree(sq)) {
      std::vector<FpPoly> irred;
      equal_degree(prod, d, rng, irred);
      for (auto& g : irred) out.emplace_back(g, mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    return a.first.c < b.first.c;
  });
  return out;
}

FpPoly charpoly(const FpMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("charpoly: square only");
  int n = m.rows;
  uint32_t p = m.p;
  if (n == 0) return FpPoly::one(p);
  FpMat h = m;
  // Similarity reduction to upper Hessenberg form.
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (h.at(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int k = 0; k < n; ++k) std::swap(h.at(piv, k), h.at(j + 1, k));
      for (int k = 0; k < n; ++k) std::swap(h.at(k, piv), h.at(k, j + 1));
    }
    uint32_t inv = fp_inv(h.at(j + 1, j), p);
    for (int i = j + 2; i < n; ++i) {
      uint32_t f = fp_mul(h.at(i, j), inv, p);
      if (f == 0) continue;
      for (int k = 0; k < n; ++k)
        h.at(i, k) = fp_sub(h.at(i, k), fp_mul(f, h.at(j + 1, k), p), p);
      for (int k = 0; k < n; ++k)
        h.at(k, j + 1) = fp_add(h.at(k, j + 1), fp_mul(f, h.at(k, i), p), p);
    }
  }
  // Recurrence for det(xI - H) of a Hessenberg matrix.
  std::vector<FpPoly> pm(n + 1, FpPoly::one(p));
  for (int i = 1; i <= n; ++i) {
    FpPoly t(p, {fp_neg(h.at(i - 1, i - 1), p), 1});
    pm[i] = t.mul(pm[i - 1]);
    uint32_t prod = 1;
    for (int k = 1; k < i; ++k) {
      prod = fp_mul(prod, h.at(i - k, i - k - 1), p);
      uint32_t coef = fp_mul(h.at(i - k - 1, i - 1), prod, p);
      if (coef == 0) continue;
      pm[i] = pm[i].sub(pm[i - k - 1].scale(coef));
    }
  }
  return pm[n];
}

FpMat poly_at_matrix(const FpPoly& f, const FpMat& m) {
  if (m.rows != m.cols)
    throw std::invalid_argument("poly_at_matrix: square only");
  FpMat acc(m.p, m.rows, m.cols);
  for (size_t i = f.c.size(); i-- > 0;) {
    acc = acc.mul(m);
    for (int d = 0; d < m.rows; ++d)
      acc.at(d, d) = fp_add(acc.at(d, d), f.c[i], m.p);
  }
  return acc;
}

Subspace Subspace::zero(uint32_t p, int ambient) {
  Subspace s;
  s.p = p;
  s.ambient = ambient;
  s.basis = FpMat(p, 0, ambient);
  return s;
}

Subspace Subspace::full(uint32_t p, int ambient) {
  Subspace s;
  s.p = p;
  s.ambient = ambient;
  s.basis = FpMat::identity(p, ambient);
  s.pivots.resize(ambient);
  for (int i = 0; i < ambient; ++i) s.pivots[i] = i;
  return s;
}

Subspace Subspace::span_of(FpMat rows) {
  Subspace s;
  s.p = rows.p;
  s.ambient = rows.cols;
  std::vector<int> piv = rref(rows);
  FpMat b(rows.p, static_cast<int>(piv.size()), rows.cols);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < rows.cols; ++j) b.at(i, j) = rows.at(i, j);
  s.basis = std::move(b);
  s.pivots = std::move(piv);
  return s;
}

bool Subspace::reduce(std::vector<uint32_t>& v) const {
  for (int r = 0; r < basis.rows; ++r) {
    uint32_t f = v[pivots[r]];
    if (f == 0) continue;
    for (int j = 0; j < ambient; ++j)
      v[j] = fp_sub(v[j], fp_mul(f, basis.at(r, j), p), p);
  }
  return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
}

bool Subspace::contains_vec(std::vector<uint32_t> v) const {
  return reduce(v);
}

bool Subspace::contains(const Subspace& other) const {
  for (int r = 0; r < other.basis.rows; ++r)
    if (!contains_vec(other.basis.row(r))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient != other.ambient || p != other.p)
    throw std::invalid_argument("Subspace::sum: mismatch");
  return span_of(basis.vstack(other.basis));
}

Subspace apply_to_subspace(const FpMat& m, const Subspace& s) {
  if (m.cols != s.ambient || m.p != s.p)
    throw std::invalid_argument("apply_to_subspace: mismatch");
  // rows of s.basis are vectors; images are m * v, i.e. rows of basis * m^T
  return Subspace::span_of(s.basis.mul(m.transpose()));
}

uint64_t count_subspaces(int n, int k, uint32_t p, uint64_t cap) {
  if (k < 0 || k > n) return 0;
  if (k == 0 || k == n) return std::min<uint64_t>(1, cap);
  // Recurrence [n k] = [n-1 k-1] + p^k [n-1 k], saturating at cap.
  // Saturation is safe: the recurrence is monotone in its operands.
  auto sat_mul = [&](uint64_t a, uint64_t b) -> uint64_t {
    if (a != 0 && b > cap / a) return cap;
    return std::min(a * b, cap);
  };
  auto sat_add = [&](uint64_t a, uint64_t b) -> uint64_t {
    return (a > cap - b) ? cap : a + b;
  };
  std::vector<uint64_t> cur(static_cast<size_t>(k) + 1, 0);
  cur[0] = 1;
  for (int nn = 1; nn <= n; ++nn) {
    std::vector<uint64_t> nxt(static_cast<size_t>(k) + 1, 0);
    nxt[0] = 1;
    uint64_t pk = 1;
    for (int kk = 1; kk <= std::min(nn, k); ++kk) {
      pk = sat_mul(pk, p);
      nxt[kk] = sat_add(cur[kk - 1], sat_mul(pk, cur[kk]));
    }
    cur = std::move(nxt);
  }
  return cur[k];
}

bool for_each_subspace(uint32_t p, int n, int k,
                       const std::function<bool(const FpMat&)>& fn) {
  if (k < 0 || k > n) return true;
  if (k == 0) return fn(FpMat(p, 0, n));

  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;

  auto next_pivots = [&]() -> bool {
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) return false;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    return true;
  };

  do {
    // Free positions: (row r, col c) with c > piv[r], c not a pivot.
    std::vector<std::pair<int, int>> free_pos;
    {
      std::vector<bool> is_piv(n, false);
      for (int c : piv) is_piv[c] = true;
      for (int r = 0; r < k; ++r)
        for (int c = piv[r] + 1; c < n; ++c)
          if (!is_piv[c]) free_pos.emplace_back(r, c);
    }
    FpMat m(p, k, n);
    for (int r = 0; r < k; ++r) m.at(r, piv[r]) = 1;
    std::vector<uint32_t> digits(free_pos.size(), 0);
    while (true) {
      if (!fn(m)) return false;
      // odometer over free entries
      size_t i = 0;
      for (; i < digits.size(); ++i) {
        if (digits[i] + 1 < p) {
          ++digits[i];
          m.at(free_pos[i].first, free_pos[i].second) = digits[i];
          break;
        }
        digits[i] = 0;
        m.at(free_pos[i].first, free_pos[i].second) = 0;
      }
      if (i == digits.size()) break;
    }
  } while (next_pivots());
  return true;
}

}  // namespace repvar

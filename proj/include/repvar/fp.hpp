#pragma once

// Exact linear algebra over prime fields F_p.
//
// Everything in the library that touches a module over F_p goes through this
// header: dense matrices with row-reduction, nullspaces, characteristic
// polynomials, univariate polynomial factorization (squarefree / distinct
// degree / Cantor-Zassenhaus), subspaces kept in reduced row echelon form,
// and a deterministic enumeration of the F_p-points of Grassmannians.
//
// Primes stay below 2^20 in practice (5 .. 32003), so scalars are uint32_t
// and products are taken in uint64_t.

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace repvar {

// Deterministic seeded randomness. All randomized routines take an explicit
// Rng (or a seed from which one is built); mt19937_64 has a standardized
// output sequence, and sampling uses rejection, so runs are reproducible
// bit-for-bit across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  // Uniform in [0, n), n >= 1.
  uint64_t below(uint64_t n);

  uint32_t mod_p(uint32_t p) { return static_cast<uint32_t>(below(p)); }
  uint32_t nonzero_mod_p(uint32_t p) {
    return 1u + static_cast<uint32_t>(below(p - 1));
  }

  // Independent stream derived from this one and a salt.
  Rng fork(uint64_t salt);

 private:
  std::mt19937_64 gen_;
};

uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p);
uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p);
uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p);
uint32_t fp_neg(uint32_t a, uint32_t p);
uint32_t fp_inv(uint32_t a, uint32_t p);
uint32_t fp_pow(uint32_t a, uint64_t e, uint32_t p);

// Dense matrix over F_p, row-major. Zero-row and zero-column shapes are
// legal and show up constantly (empty vertex spaces).
struct FpMat {
  uint32_t p = 2;
  int rows = 0;
  int cols = 0;
  std::vector<uint32_t> a;

  FpMat() = default;
  FpMat(uint32_t p_, int r, int c)
      : p(p_), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  static FpMat identity(uint32_t p, int n);

  uint32_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  uint32_t at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  bool is_zero() const;
  bool operator==(const FpMat& o) const = default;

  FpMat transpose() const;
  FpMat mul(const FpMat& o) const;
  FpMat add(const FpMat& o) const;
  FpMat sub(const FpMat& o) const;
  FpMat scale(uint32_t c) const;

  // Rows of `o` appended below.
  FpMat vstack(const FpMat& o) const;

  std::vector<uint32_t> row(int i) const;
  void set_row(int i, const std::vector<uint32_t>& v);

  std::string to_string() const;
};

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(FpMat& m);

int rank(FpMat m);

// Basis of { v : m * v = 0 }, returned as rows (in rref, one per kernel
// dimension). A 0-column matrix has kernel basis of shape 0 x 0.
FpMat nullspace(const FpMat& m);

uint32_t det(FpMat m);

// Polynomial over F_p, coefficients ascending, no trailing zeros.
struct FpPoly {
  uint32_t p = 2;
  std::vector<uint32_t> c;

  FpPoly() = default;
  FpPoly(uint32_t p_, std::vector<uint32_t> coeffs);

  static FpPoly zero(uint32_t p) { return FpPoly(p, {}); }
  static FpPoly one(uint32_t p) { return FpPoly(p, {1}); }
  static FpPoly x(uint32_t p) { return FpPoly(p, {0, 1}); }

  int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  uint32_t lead() const { return c.back(); }
  void normalize();

  bool operator==(const FpPoly& o) const = default;

  FpPoly add(const FpPoly& o) const;
  FpPoly sub(const FpPoly& o) const;
  FpPoly mul(const FpPoly& o) const;
  FpPoly scale(uint32_t s) const;
  FpPoly monic() const;
  uint32_t eval(uint32_t x) const;
  FpPoly derivative() const;

  std::string to_string() const;
};

// Quotient and remainder; divisor must be nonzero.
void fp_poly_divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly fp_poly_mod(const FpPoly& a, const FpPoly& b);
FpPoly fp_poly_gcd(FpPoly a, FpPoly b);  // monic gcd
FpPoly fp_poly_powmod(const FpPoly& base, uint64_t e, const FpPoly& mod);

// Full factorization into monic irreducibles with multiplicities,
// deterministic given the rng state (Cantor-Zassenhaus needs randomness;
// p must be odd). Factors are sorted by (degree, coefficient sequence).
std::vector<std::pair<FpPoly, int>> fp_poly_factor(const FpPoly& f, Rng& rng);

// Characteristic polynomial det(xI - m) via Hessenberg reduction.
FpPoly charpoly(const FpMat& m);

// Apply a polynomial to a square matrix.
FpMat poly_at_matrix(const FpPoly& f, const FpMat& m);

// Subspace of F_p^n held as an rref row basis.
struct Subspace {
  uint32_t p = 2;
  int ambient = 0;
  FpMat basis;              // dim x ambient, rref
  std::vector<int> pivots;  // pivot columns, one per row

  static Subspace zero(uint32_t p, int ambient);
  static Subspace full(uint32_t p, int ambient);
  // Row-reduces arbitrary spanning rows.
  static Subspace span_of(FpMat rows);

  int dim() const { return basis.rows; }

  // Reduce v against the basis in place; v becomes the canonical
  // representative of v + (this). Returns true if the result is zero,
  // i.e. the original vector lay in the subspace.
  bool reduce(std::vector<uint32_t>& v) const;

  bool contains_vec(std::vector<uint32_t> v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& o) const = default;
};

// Image of a subspace under a matrix acting on column vectors:
// span { m * b^T : b row of s }.
Subspace apply_to_subspace(const FpMat& m, const Subspace& s);

// Number of k-dimensional subspaces of F_p^n (Gaussian binomial),
// saturating at `cap`.
uint64_t count_subspaces(int n, int k, uint32_t p, uint64_t cap);

// Enumerate all k-dimensional subspaces of F_p^n as rref bases, in a fixed
// deterministic order: pivot-column sets lexicographically (so the first
// candidate is the coordinate subspace span{e_1..e_k}), free entries in
// odometer order. The callback returns false to stop; the function returns
// false iff the callback stopped it.
bool for_each_subspace(uint32_t p, int n, int k,
                       const std::function<bool(const FpMat&)>& fn);

}  // namespace repvar

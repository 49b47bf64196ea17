#pragma once
// Ready-made finite algebras: group algebras over explicit Cayley tables,
// truncated polynomial (chain) rings, full and upper-triangular matrix
// algebras, direct sums, and two skew-polynomial quotient rings that are
// built by delegating to the rewriting engine.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <ringlab/algebra.hpp>
#include <ringlab/rewrite.hpp>

namespace ringlab {

// ---------------------------------------------------------------------------
// Group tables
// ---------------------------------------------------------------------------

// A finite group given by its full Cayley table.  `table[i*n + j]` is the
// index of the product g_i * g_j.  Instances are only produced by
// make_group_table(), which verifies all group axioms.
struct GroupTable {
  std::vector<std::string> labels;
  std::vector<int> table;
  int identity = -1;

  int order() const { return int(labels.size()); }
  int mul(int i, int j) const { return table[size_t(i) * order() + j]; }
};

inline GroupTable make_group_table(std::vector<std::string> labels,
                                   std::vector<int> table) {
  const int n = int(labels.size());
  if (n <= 0) fail(Errc::InvalidGroup, "group must have at least one element");
  if (int(table.size()) != n * n)
    fail(Errc::InvalidGroup, "Cayley table has " +
                                 std::to_string(table.size()) +
                                 " entries, expected " + std::to_string(n * n));
  for (int v : table)
    if (v < 0 || v >= n)
      fail(Errc::InvalidGroup, "Cayley table entry out of range");

  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = table[size_t(e) * n + j] == j && table[size_t(j) * n + e] == j;
    if (ok) id = e;
  }
  if (id < 0) fail(Errc::InvalidGroup, "Cayley table has no identity element");

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const int ij_k = table[size_t(table[size_t(i) * n + j]) * n + k];
        const int i_jk = table[size_t(i) * n + table[size_t(j) * n + k]];
        if (ij_k != i_jk)
          fail(Errc::InvalidGroup,
               "Cayley table is not associative at (" + labels[i] + ", " +
                   labels[j] + ", " + labels[k] + ")");
      }

  for (int i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (int j = 0; j < n && !has_inverse; ++j)
      has_inverse =
          table[size_t(i) * n + j] == id && table[size_t(j) * n + i] == id;
    if (!has_inverse)
      fail(Errc::InvalidGroup, "element " + labels[i] + " has no inverse");
  }

  GroupTable g;
  g.labels = std::move(labels);
  g.table = std::move(table);
  g.identity = id;
  return g;
}

// Cyclic group of order n with elements 1, g, g^2, ...
inline GroupTable cyclic_table(int n) {
  if (n <= 0) fail(Errc::InvalidGroup, "cyclic group order must be positive");
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i)
    labels[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
  std::vector<int> table(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[size_t(i) * n + j] = (i + j) % n;
  return make_group_table(std::move(labels), std::move(table));
}

// Dihedral group of order 8: elements r^i s^j with r^4 = s^2 = 1 and
// s r = r^-1 s.  Index layout: i + 4j.
inline GroupTable d8_table() {
  std::vector<std::string> labels = {"1",  "r",  "r2",  "r3",
                                     "s",  "rs", "r2s", "r3s"};
  std::vector<int> table(64);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l) {
          // (r^i s^j)(r^k s^l) = r^(i + (-1)^j k) s^(j + l)
          const int rot = ((i + (j ? 4 - k : k)) % 4);
          const int flip = (j + l) % 2;
          table[size_t(i + 4 * j) * 8 + (k + 4 * l)] = rot + 4 * flip;
        }
  return make_group_table(std::move(labels), std::move(table));
}

// Quaternion group of order 8: {1, i, j, k, -1, -i, -j, -k} with
// i^2 = j^2 = k^2 = ijk = -1.  Index layout: base (1,i,j,k) plus 4 for sign.
inline GroupTable q8_table() {
  std::vector<std::string> labels = {"1",  "i",  "j",  "k",
                                     "-1", "-i", "-j", "-k"};
  // Signed products of the bases 1,i,j,k: entry is an index 0..7.
  const int base[4][4] = {{0, 1, 2, 3},
                          {1, 4, 3, 6},   // i*1=i, i*i=-1, i*j=k, i*k=-j
                          {2, 7, 4, 1},   // j*i=-k, j*j=-1, j*k=i
                          {3, 2, 5, 4}};  // k*i=j, k*j=-i, k*k=-1
  std::vector<int> table(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int r = base[a % 4][b % 4];
      const int sign = (a / 4 + b / 4 + r / 4) % 2;
      table[size_t(a) * 8 + b] = (r % 4) + 4 * sign;
    }
  return make_group_table(std::move(labels), std::move(table));
}

// Plain-text Cayley table: first line the order n, then n lines of n
// whitespace-separated 0-based indices.  Labels default to g0..g{n-1} with
// the identity relabeled "1".
inline GroupTable parse_group_table(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n <= 0)
    fail(Errc::InvalidGroup, "Cayley table text must start with the order");
  if (n > 4096) fail(Errc::InvalidGroup, "Cayley table order too large");
  std::vector<int> table(size_t(n) * n);
  for (int& v : table)
    if (!(in >> v))
      fail(Errc::InvalidGroup,
           "Cayley table text ended before n^2 entries were read");
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
  GroupTable g = make_group_table(std::move(labels), std::move(table));
  g.labels[g.identity] = "1";
  return g;
}

inline GroupTable parse_group_table(const std::string& text) {
  std::istringstream in(text);
  return parse_group_table(in);
}

inline GroupTable load_group_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::InvalidGroup, "cannot open Cayley table file: " + path);
  return parse_group_table(in);
}

// ---------------------------------------------------------------------------
// Algebra constructors
// ---------------------------------------------------------------------------

// Group algebra F[G]: one basis vector per group element, products read
// straight off the Cayley table.
inline FiniteAlgebra group_algebra(const Field& field, const GroupTable& g) {
  const int n = g.order();
  std::vector<Vec> bp(size_t(n) * n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bp[size_t(i) * n + j][g.mul(i, j)] = 1;
  Vec one(n, 0);
  one[g.identity] = 1;
  FiniteAlgebra a(field, g.labels, std::move(bp), std::move(one));
  a.validate();
  return a;
}

// Truncated polynomial ring F[u]/(u^k), the standard finite chain ring with
// residue field F.  k = 1 gives the field itself.
inline FiniteAlgebra chain_ring(const Field& field, int k) {
  if (k <= 0)
    fail(Errc::DimensionMismatch, "chain ring length must be positive");
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i)
    names[i] = i == 0 ? "1" : (i == 1 ? "u" : "u^" + std::to_string(i));
  std::vector<Vec> bp(size_t(k) * k, Vec(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i + j < k) bp[size_t(i) * k + j][i + j] = 1;
  Vec one(k, 0);
  one[0] = 1;
  FiniteAlgebra a(field, std::move(names), std::move(bp), std::move(one));
  a.validate();
  return a;
}

// Full matrix algebra M_n(F) on the matrix-unit basis E_{ij} (row-major).
inline FiniteAlgebra matrix_algebra(const Field& field, int n) {
  if (n <= 0) fail(Errc::DimensionMismatch, "matrix size must be positive");
  const int d = n * n;
  std::vector<std::string> names(d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      names[size_t(i) * n + j] =
          "E" + std::to_string(i + 1) + std::to_string(j + 1);
  // E_{ij} E_{kl} = [j == k] E_{il}
  std::vector<Vec> bp(size_t(d) * d, Vec(d, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (j == k)
            bp[size_t(i * n + j) * d + (k * n + l)][i * n + l] = 1;
  Vec one(d, 0);
  for (int i = 0; i < n; ++i) one[size_t(i) * n + i] = 1;
  FiniteAlgebra a(field, std::move(names), std::move(bp), std::move(one));
  a.validate();
  return a;
}

// Upper triangular matrices U_n(F) on the basis E_{ij}, i <= j.
inline FiniteAlgebra upper_triangular(const Field& field, int n) {
  if (n <= 0) fail(Errc::DimensionMismatch, "matrix size must be positive");
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) cells.emplace_back(i, j);
  const int d = int(cells.size());
  std::vector<std::string> names(d);
  for (int c = 0; c < d; ++c)
    names[c] = "E" + std::to_string(cells[c].first + 1) +
               std::to_string(cells[c].second + 1);
  auto cell_index = [&](int i, int j) {
    for (int c = 0; c < d; ++c)
      if (cells[c] == std::make_pair(i, j)) return c;
    return -1;
  };
  std::vector<Vec> bp(size_t(d) * d, Vec(d, 0));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (cells[a].second == cells[b].first)
        bp[size_t(a) * d + b][cell_index(cells[a].first, cells[b].second)] = 1;
  Vec one(d, 0);
  for (int i = 0; i < n; ++i) one[cell_index(i, i)] = 1;
  FiniteAlgebra alg(field, std::move(names), std::move(bp), std::move(one));
  alg.validate();
  return alg;
}

// Direct sum A (+) B with componentwise operations; both summands must live
// over the same coefficient field.
inline FiniteAlgebra direct_sum(const FiniteAlgebra& a,
                                const FiniteAlgebra& b) {
  if (!(a.F() == b.F()))
    fail(Errc::FieldMismatch,
         "direct sum requires both summands over the same field");
  const int da = a.dim(), db = b.dim(), d = da + db;
  std::vector<std::string> names(d);
  for (int i = 0; i < da; ++i) names[i] = "(" + a.basis_name(i) + ",0)";
  for (int j = 0; j < db; ++j) names[da + j] = "(0," + b.basis_name(j) + ")";
  auto embed_a = [&](const Vec& v) {
    Vec r(d, 0);
    std::copy(v.begin(), v.end(), r.begin());
    return r;
  };
  auto embed_b = [&](const Vec& v) {
    Vec r(d, 0);
    std::copy(v.begin(), v.end(), r.begin() + da);
    return r;
  };
  std::vector<Vec> bp(size_t(d) * d, Vec(d, 0));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      bp[size_t(i) * d + j] = embed_a(a.basis_product(i, j));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      bp[size_t(da + i) * d + (da + j)] = embed_b(b.basis_product(i, j));
  Vec one = embed_a(a.one());
  {
    const Vec ob = embed_b(b.one());
    for (int i = 0; i < d; ++i) one[i] = a.F().add(one[i], ob[i]);
  }
  FiniteAlgebra s(a.field(), std::move(names), std::move(bp), std::move(one));
  s.validate();
  return s;
}

// ---------------------------------------------------------------------------
// Skew-polynomial quotient rings over F4
// ---------------------------------------------------------------------------

// F4[v; frob][u] / (u^2 + v^2, uv): u is central, v twists coefficients by
// the Frobenius (c -> c^2), and the quotient identifies v^2 with u^2 while
// killing uv (hence vu, since u is central).  Dimension 4 over F4.
inline Presentation skew_square_presentation() {
  Presentation p;
  p.field = GF4();
  p.name = "skew-square";
  p.add_gen("u", 0);
  p.add_gen("v", 1);
  p.relations.push_back(nc_mono({0, 1}));  // uv
  p.relations.push_back(nc_mono({1, 0}));  // vu
  NCPoly r = nc_mono({1, 1});              // v^2 - u^2
  nc_add_term(r, {0, 0}, p.field->neg(1), *p.field);
  p.relations.push_back(std::move(r));
  return p;
}

// F4[u][v; psi] / (u^2, v^2) where psi fixes u up to the F4 generator:
// v u = a (u v) and v c = c^2 v for scalars c.  Dimension 4 over F4.
inline Presentation skew_anticomm_presentation() {
  Presentation p;
  p.field = GF4();
  p.name = "skew-anticomm";
  p.add_gen("u", 0);
  p.add_gen("v", 1);
  p.relations.push_back(nc_mono({0, 0}));  // u^2
  p.relations.push_back(nc_mono({1, 1}));  // v^2
  NCPoly r = nc_mono({1, 0});              // vu - a*uv
  nc_add_term(r, {0, 1}, p.field->neg(p.field->gen()), *p.field);
  p.relations.push_back(std::move(r));
  return p;
}

inline BuiltRing skew_square_ring() {
  return build_algebra(skew_square_presentation());
}

inline BuiltRing skew_anticomm_ring() {
  return build_algebra(skew_anticomm_presentation());
}

}  // namespace ringlab

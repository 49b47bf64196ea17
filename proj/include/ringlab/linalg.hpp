#pragma once

#include <algorithm>
#include <vector>

#include "ringlab/errors.hpp"
#include "ringlab/gf.hpp"

// Dense linear algebra over an arbitrary FieldSpec.  Vectors are coefficient
// vectors (Vec = std::vector<Coef>), matrices are lists of rows of equal
// length.  Used wherever the field is not F_2; also the reference
// implementation the word-packed F_2 code is tested against.
namespace ringlab::linalg {

// In-place reduced row echelon form; canonical (pivots increase, pivot
// entries are 1, pivot columns cleared elsewhere, zero rows dropped).
// Returns the rank.
inline int rref(const FieldSpec& F, std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  const int ncols = int(rows[0].size());
  int r = 0;
  for (int c = 0; c < ncols && r < int(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < int(rows.size()); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    const Coef s = F.inv(rows[r][c]);
    for (int j = 0; j < ncols; ++j) rows[r][j] = F.mul(rows[r][j], s);
    for (int i = 0; i < int(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Coef t = rows[i][c];
      for (int j = 0; j < ncols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(t, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return r;
}

inline int rank(const FieldSpec& F, std::vector<Vec> rows) {
  return rref(F, rows);
}

inline int pivot_of(const Vec& row) {
  for (int j = 0; j < int(row.size()); ++j)
    if (row[j] != 0) return j;
  return -1;
}

// Reduce v by a canonical echelon basis; returns the residue.
inline Vec reduce(const FieldSpec& F, const std::vector<Vec>& echelon, Vec v) {
  for (const Vec& row : echelon) {
    const int p = pivot_of(row);
    if (p < 0 || v[p] == 0) continue;
    const Coef t = v[p];  // row[p] == 1 in canonical form
    for (int j = 0; j < int(v.size()); ++j)
      v[j] = F.sub(v[j], F.mul(t, row[j]));
  }
  return v;
}

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Coef c) { return c == 0; });
}

inline bool contains(const FieldSpec& F, const std::vector<Vec>& echelon,
                     const Vec& v) {
  return is_zero(reduce(F, echelon, v));
}

// All x in F^n with sum_j x_j * cols[j] = 0, where each column has `height`
// entries.  Canonical echelon basis of the solution space.
inline std::vector<Vec> kernel_of_columns(const FieldSpec& F,
                                          const std::vector<Vec>& cols,
                                          int height) {
  const int n = int(cols.size());
  std::vector<Vec> work(n, Vec(height + n, 0));
  for (int j = 0; j < n; ++j) {
    if (int(cols[j].size()) != height)
      fail(Errc::DimensionMismatch, "column height mismatch in kernel");
    for (int i = 0; i < height; ++i) work[j][i] = cols[j][i];
    work[j][height + j] = 1;
  }
  int r = 0;
  for (int c = 0; c < height && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (work[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(work[r], work[piv]);
    const Coef s = F.inv(work[r][c]);
    for (int j = 0; j < height + n; ++j) work[r][j] = F.mul(work[r][j], s);
    for (int i = 0; i < n; ++i) {
      if (i == r || work[i][c] == 0) continue;
      const Coef t = work[i][c];
      for (int j = 0; j < height + n; ++j)
        work[i][j] = F.sub(work[i][j], F.mul(t, work[r][j]));
    }
    ++r;
  }
  std::vector<Vec> ker;
  for (int i = r; i < n; ++i) {
    bool low_zero = true;
    for (int c = 0; c < height; ++c)
      if (work[i][c] != 0) {
        low_zero = false;
        break;
      }
    if (!low_zero) continue;
    ker.emplace_back(work[i].begin() + height, work[i].end());
  }
  rref(F, ker);
  return ker;
}

// Intersection of two row spaces inside F^d (Zassenhaus).
inline std::vector<Vec> intersect(const FieldSpec& F, const std::vector<Vec>& u,
                                  const std::vector<Vec>& v, int d) {
  std::vector<Vec> work;
  work.reserve(u.size() + v.size());
  for (const Vec& x : u) {
    Vec row(2 * d, 0);
    for (int j = 0; j < d; ++j) row[j] = row[d + j] = x[j];
    work.push_back(std::move(row));
  }
  for (const Vec& x : v) {
    Vec row(2 * d, 0);
    for (int j = 0; j < d; ++j) row[j] = x[j];
    work.push_back(std::move(row));
  }
  int r = 0;
  for (int c = 0; c < d && r < int(work.size()); ++c) {
    int piv = -1;
    for (int i = r; i < int(work.size()); ++i)
      if (work[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(work[r], work[piv]);
    const Coef s = F.inv(work[r][c]);
    for (int j = 0; j < 2 * d; ++j) work[r][j] = F.mul(work[r][j], s);
    for (int i = 0; i < int(work.size()); ++i) {
      if (i == r || work[i][c] == 0) continue;
      const Coef t = work[i][c];
      for (int j = 0; j < 2 * d; ++j)
        work[i][j] = F.sub(work[i][j], F.mul(t, work[r][j]));
    }
    ++r;
  }
  std::vector<Vec> out;
  for (int i = r; i < int(work.size()); ++i) {
    bool low_zero = true;
    for (int c = 0; c < d; ++c)
      if (work[i][c] != 0) {
        low_zero = false;
        break;
      }
    if (!low_zero) continue;
    out.emplace_back(work[i].begin() + d, work[i].end());
  }
  rref(F, out);
  return out;
}

}  // namespace ringlab::linalg

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ringlab/errors.hpp"

// Word-parallel linear algebra over F_2.  A vector is a bitmask (coordinate i
// at bit i), a matrix is a list of row masks.  Ambient dimensions stay small
// (<= 32), so a single 64-bit word also fits the augmented tricks below.
namespace ringlab::gf2x {

using Word = std::uint64_t;

// In-place reduced row echelon form over the low `ncols` bits.  Canonical:
// pivots strictly increase, every pivot column is cleared elsewhere, zero rows
// are dropped.  Returns the rank.
inline int rref(std::vector<Word>& rows, int ncols) {
  int r = 0;
  for (int bit = 0; bit < ncols && r < int(rows.size()); ++bit) {
    int piv = -1;
    for (int i = r; i < int(rows.size()); ++i)
      if ((rows[i] >> bit) & 1) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (int i = 0; i < int(rows.size()); ++i)
      if (i != r && ((rows[i] >> bit) & 1)) rows[i] ^= rows[r];
    ++r;
  }
  rows.resize(r);
  return r;
}

inline int rank(std::vector<Word> rows, int ncols) { return rref(rows, ncols); }

// Reduce v by a canonical echelon basis; returns the residue (zero iff v lies
// in the row space).
inline Word reduce(const std::vector<Word>& echelon, Word v) {
  for (Word row : echelon) {
    Word pivot = row & ~(row - 1);  // lowest set bit
    if (v & pivot) v ^= row;
  }
  return v;
}

inline bool contains(const std::vector<Word>& echelon, Word v) {
  return reduce(echelon, v) == 0;
}

// All x (mask over n = cols.size() positions) with sum_j x_j * cols[j] = 0.
// Requires height + n <= 64.  Result is in canonical echelon form.
inline std::vector<Word> kernel_of_columns(const std::vector<Word>& cols,
                                           int height) {
  const int n = int(cols.size());
  if (height + n > 64)
    fail(Errc::DimensionMismatch, "gf2x kernel exceeds word width");
  std::vector<Word> work(n);
  for (int j = 0; j < n; ++j) work[j] = cols[j] | (Word(1) << (height + j));
  int r = 0;
  for (int bit = 0; bit < height && r < n; ++bit) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if ((work[i] >> bit) & 1) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(work[r], work[piv]);
    for (int i = 0; i < n; ++i)
      if (i != r && ((work[i] >> bit) & 1)) work[i] ^= work[r];
    ++r;
  }
  std::vector<Word> ker;
  const Word low_mask = height == 64 ? ~Word(0) : (Word(1) << height) - 1;
  for (int i = r; i < n; ++i)
    if ((work[i] & low_mask) == 0) ker.push_back(work[i] >> height);
  rref(ker, n);
  return ker;
}

// Intersection of two row spaces inside F_2^d (Zassenhaus); needs 2d <= 64.
inline std::vector<Word> intersect(const std::vector<Word>& u,
                                   const std::vector<Word>& v, int d) {
  if (2 * d > 64) fail(Errc::DimensionMismatch, "gf2x intersect exceeds word width");
  std::vector<Word> work;
  work.reserve(u.size() + v.size());
  for (Word x : u) work.push_back(x | (x << d));
  for (Word x : v) work.push_back(x);
  int r = 0;
  for (int bit = 0; bit < d && r < int(work.size()); ++bit) {
    int piv = -1;
    for (int i = r; i < int(work.size()); ++i)
      if ((work[i] >> bit) & 1) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(work[r], work[piv]);
    for (int i = 0; i < int(work.size()); ++i)
      if (i != r && ((work[i] >> bit) & 1)) work[i] ^= work[r];
    ++r;
  }
  const Word low_mask = (Word(1) << d) - 1;
  std::vector<Word> out;
  for (int i = r; i < int(work.size()); ++i)
    if ((work[i] & low_mask) == 0) out.push_back(work[i] >> d);
  rref(out, d);
  return out;
}

}  // namespace ringlab::gf2x

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/errors.hpp"
#include "ringlab/gf.hpp"
#include "ringlab/linalg.hpp"

namespace ringlab {

// A finite-dimensional associative unital algebra over a finite field, given
// by structure constants on a fixed basis: e_i * e_j = sum_k table[i][j][k] e_k.
// Elements are coordinate vectors (Vec) on that basis.  The total ring has
// q^dim elements; elements are enumerable by index with coordinate 0 most
// significant, so index order equals lexicographic order on coordinates.
class FiniteAlgebra {
 public:
  FiniteAlgebra(Field field, std::vector<std::string> basis_names,
                std::vector<Vec> basis_products, Vec one)
      : field_(std::move(field)),
        dim_(int(basis_names.size())),
        names_(std::move(basis_names)),
        bp_(std::move(basis_products)),
        one_(std::move(one)) {
    if (int(bp_.size()) != dim_ * dim_ || int(one_.size()) != dim_)
      fail(Errc::DimensionMismatch, "structure constant table has wrong shape");
    for (const Vec& v : bp_)
      if (int(v.size()) != dim_)
        fail(Errc::DimensionMismatch, "structure constant row has wrong length");
  }

  const Field& field() const { return field_; }
  const FieldSpec& F() const { return *field_; }
  int dim() const { return dim_; }
  const std::string& basis_name(int i) const { return names_[i]; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Vec& one() const { return one_; }
  const Vec& basis_product(int i, int j) const { return bp_[i * dim_ + j]; }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (int i = 0; i < dim_; ++i) {
      if (n > (std::uint64_t(1) << 62) / F().q())
        fail(Errc::DegreeOverflow, "ring order exceeds 2^62");
      n *= F().q();
    }
    return n;
  }

  Vec zero() const { return Vec(dim_, 0); }
  Vec e(int i) const {
    Vec v(dim_, 0);
    v[i] = 1;
    return v;
  }
  bool is_zero(const Vec& v) const { return linalg::is_zero(v); }

  Vec add(const Vec& x, const Vec& y) const {
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = F().add(x[i], y[i]);
    return r;
  }
  Vec sub(const Vec& x, const Vec& y) const {
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = F().sub(x[i], y[i]);
    return r;
  }
  Vec neg(const Vec& x) const {
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = F().neg(x[i]);
    return r;
  }
  Vec scale(Coef c, const Vec& x) const {
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = F().mul(c, x[i]);
    return r;
  }
  Vec mul(const Vec& x, const Vec& y) const {
    Vec r(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        if (y[j] == 0) continue;
        const Coef c = F().mul(x[i], y[j]);
        const Vec& b = bp_[i * dim_ + j];
        for (int k = 0; k < dim_; ++k)
          if (b[k] != 0) r[k] = F().add(r[k], F().mul(c, b[k]));
      }
    }
    return r;
  }
  Vec pow(Vec x, std::uint64_t n) const {
    Vec r = one_;
    while (n) {
      if (n & 1) r = mul(r, x);
      x = mul(x, x);
      n >>= 1;
    }
    return r;
  }

  // Enumeration: index digits base q with coordinate 0 most significant.
  std::uint64_t index_of(const Vec& v) const {
    std::uint64_t idx = 0;
    for (int i = 0; i < dim_; ++i) idx = idx * F().q() + v[i];
    return idx;
  }
  Vec element_at(std::uint64_t idx) const {
    Vec v(dim_);
    for (int i = dim_ - 1; i >= 0; --i) {
      v[i] = Coef(idx % F().q());
      idx /= F().q();
    }
    if (idx != 0) fail(Errc::DimensionMismatch, "element index out of range");
    return v;
  }

  // Identity + full associativity on basis triples.  Constructors call this
  // before handing an algebra out, so downstream code may assume both.
  void validate() const {
    for (int i = 0; i < dim_; ++i) {
      if (mul(one_, e(i)) != e(i) || mul(e(i), one_) != e(i))
        fail(Errc::Internal, "designated identity is not an identity");
    }
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        const Vec ij = basis_product(i, j);
        for (int k = 0; k < dim_; ++k) {
          // (e_i e_j) e_k vs e_i (e_j e_k), expanded through the table.
          if (mul(ij, e(k)) != mul(e(i), basis_product(j, k)))
            fail(Errc::Internal, "structure constants are not associative at (" +
                                     names_[i] + "," + names_[j] + "," +
                                     names_[k] + ")");
        }
      }
  }

  std::string show(const Vec& v) const {
    std::string out;
    for (int i = 0; i < dim_; ++i) {
      if (v[i] == 0) continue;
      if (!out.empty()) out += " + ";
      const std::string c = F().elem_name(v[i]);
      if (names_[i] == "1") {
        out += c;
      } else if (v[i] == 1) {
        out += names_[i];
      } else if (c.find('+') != std::string::npos) {
        out += "(" + c + ")*" + names_[i];
      } else {
        out += c + "*" + names_[i];
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  Field field_;
  int dim_;
  std::vector<std::string> names_;
  std::vector<Vec> bp_;  // bp_[i*dim+j] = coordinates of e_i * e_j
  Vec one_;
};

// Quotient of an algebra by a two-sided ideal, given as a canonical echelon
// basis of coordinate rows.  Throws if the span is not actually an ideal.
struct QuotientAlgebra {
  FiniteAlgebra algebra;
  std::vector<int> coset_coords;  // ambient coordinate positions kept
  std::vector<Vec> ideal;         // echelon basis used
  // Project an ambient element to quotient coordinates.
  Vec project(const FiniteAlgebra& ambient, const Vec& x) const {
    Vec r = linalg::reduce(ambient.F(), ideal, x);
    Vec out(coset_coords.size());
    for (size_t s = 0; s < coset_coords.size(); ++s)
      out[s] = r[coset_coords[s]];
    return out;
  }
};

inline QuotientAlgebra quotient_by_ideal(const FiniteAlgebra& A,
                                         std::vector<Vec> ideal_rows) {
  linalg::rref(A.F(), ideal_rows);
  // Closure check: the span must absorb multiplication by every basis vector.
  for (const Vec& u : ideal_rows)
    for (int i = 0; i < A.dim(); ++i) {
      if (!linalg::contains(A.F(), ideal_rows, A.mul(A.e(i), u)) ||
          !linalg::contains(A.F(), ideal_rows, A.mul(u, A.e(i))))
        fail(Errc::Internal, "quotient requested by a non-ideal subspace");
    }
  std::vector<bool> is_pivot(A.dim(), false);
  for (const Vec& row : ideal_rows) is_pivot[linalg::pivot_of(row)] = true;
  std::vector<int> kept;
  for (int i = 0; i < A.dim(); ++i)
    if (!is_pivot[i]) kept.push_back(i);
  const int qd = int(kept.size());

  auto proj = [&](const Vec& x) {
    Vec r = linalg::reduce(A.F(), ideal_rows, x);
    Vec out(qd);
    for (int s = 0; s < qd; ++s) out[s] = r[kept[s]];
    return out;
  };

  std::vector<std::string> names(qd);
  std::vector<Vec> bp(qd * qd);
  for (int s = 0; s < qd; ++s) names[s] = A.basis_name(kept[s]);
  for (int s = 0; s < qd; ++s)
    for (int t = 0; t < qd; ++t)
      bp[s * qd + t] = proj(A.basis_product(kept[s], kept[t]));
  FiniteAlgebra Q(A.field(), std::move(names), std::move(bp), proj(A.one()));
  Q.validate();
  return QuotientAlgebra{std::move(Q), std::move(kept), std::move(ideal_rows)};
}

// Exhaustive check that a (small) algebra is a field: commutative with every
// nonzero element invertible.  Intended for residue rings, order <= 2^16.
inline bool is_field_algebra(const FiniteAlgebra& A) {
  const std::uint64_t n = A.order();
  for (std::uint64_t i = 0; i < n; ++i) {
    const Vec x = A.element_at(i);
    for (std::uint64_t j = i + 1; j < n; ++j) {
      const Vec y = A.element_at(j);
      if (A.mul(x, y) != A.mul(y, x)) return false;
    }
  }
  for (std::uint64_t i = 1; i < n; ++i) {
    const Vec x = A.element_at(i);
    bool unit = false;
    for (std::uint64_t j = 1; j < n && !unit; ++j) {
      const Vec y = A.element_at(j);
      unit = A.mul(x, y) == A.one() && A.mul(y, x) == A.one();
    }
    if (!unit) return false;
  }
  return true;
}

}  // namespace ringlab

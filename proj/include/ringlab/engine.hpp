#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "ringlab/algebra.hpp"
#include "ringlab/gf2x.hpp"
#include "ringlab/linalg.hpp"

// Two interchangeable computation engines over a FiniteAlgebra.  BitEngine
// packs F_2 coordinate vectors into single words (coordinate i at bit i) and
// does word-parallel elimination; DenseEngine works over any base field.
// Property and radical code is templated over the engine, so every algorithm
// exists once and runs on both representations.
namespace ringlab {

class DenseEngine {
 public:
  using E = Vec;
  using Sub = std::vector<Vec>;  // canonical echelon basis rows

  explicit DenseEngine(const FiniteAlgebra& A) : A_(&A) {}

  const FiniteAlgebra& algebra() const { return *A_; }
  int dim() const { return A_->dim(); }
  std::uint64_t order() const { return A_->order(); }

  E zero() const { return A_->zero(); }
  E one() const { return A_->one(); }
  E unit(int i) const { return A_->e(i); }
  E from_vec(const Vec& v) const { return v; }
  Vec to_vec(const E& x) const { return x; }
  bool is_zero(const E& x) const { return linalg::is_zero(x); }
  bool eq(const E& x, const E& y) const { return x == y; }
  E add(const E& x, const E& y) const { return A_->add(x, y); }
  E sub(const E& x, const E& y) const { return A_->sub(x, y); }
  E mul(const E& x, const E& y) const { return A_->mul(x, y); }
  std::uint64_t index_of(const E& x) const { return A_->index_of(x); }
  E at(std::uint64_t idx) const { return A_->element_at(idx); }

  Sub span(std::vector<E> vecs) const {
    linalg::rref(A_->F(), vecs);
    return vecs;
  }
  Sub full() const {
    std::vector<E> rows;
    for (int i = 0; i < dim(); ++i) rows.push_back(unit(i));
    return rows;
  }
  int sub_dim(const Sub& s) const { return int(s.size()); }
  bool contains(const Sub& s, const E& x) const {
    return linalg::contains(A_->F(), s, x);
  }
  bool sub_equal(const Sub& a, const Sub& b) const { return a == b; }
  Sub intersect(const Sub& a, const Sub& b) const {
    return linalg::intersect(A_->F(), a, b, dim());
  }
  E sub_basis(const Sub& s, int i) const { return s[i]; }
  std::uint64_t sub_order(const Sub& s) const {
    std::uint64_t n = 1;
    for (size_t i = 0; i < s.size(); ++i) n *= A_->F().q();
    return n;
  }
  // Enumerate span elements; row 0's digit is most significant.
  E sub_element_at(const Sub& s, std::uint64_t idx) const {
    E out = zero();
    for (int i = int(s.size()) - 1; i >= 0; --i) {
      const Coef c = Coef(idx % A_->F().q());
      idx /= A_->F().q();
      if (c != 0) out = add(out, A_->scale(c, s[i]));
    }
    return out;
  }

  Sub rann(const E& a) const {  // {x : a x = 0}
    std::vector<Vec> cols(dim());
    for (int j = 0; j < dim(); ++j) cols[j] = A_->mul(a, unit(j));
    return linalg::kernel_of_columns(A_->F(), cols, dim());
  }
  Sub lann(const E& a) const {  // {x : x a = 0}
    std::vector<Vec> cols(dim());
    for (int j = 0; j < dim(); ++j) cols[j] = A_->mul(unit(j), a);
    return linalg::kernel_of_columns(A_->F(), cols, dim());
  }
  Sub right_image(const E& a) const {  // a R
    std::vector<E> rows;
    for (int i = 0; i < dim(); ++i) rows.push_back(A_->mul(a, unit(i)));
    return span(std::move(rows));
  }
  Sub left_image(const E& a) const {  // R a
    std::vector<E> rows;
    for (int i = 0; i < dim(); ++i) rows.push_back(A_->mul(unit(i), a));
    return span(std::move(rows));
  }
  Sub product_span(const Sub& u, const Sub& v) const {
    std::vector<E> rows;
    for (const E& x : u)
      for (const E& y : v) rows.push_back(A_->mul(x, y));
    return span(std::move(rows));
  }
  // {b : a r b = 0 for all r}; restricting r to basis vectors suffices.
  Sub joint_right_null(const E& a) const {
    Sub K = full();
    for (int i = 0; i < dim() && !K.empty(); ++i)
      K = restrict_kernel(K, A_->mul(a, unit(i)), /*left=*/true);
    return K;
  }
  // {b : b r a = 0 for all r}
  Sub joint_left_null(const E& a) const {
    Sub K = full();
    for (int i = 0; i < dim() && !K.empty(); ++i)
      K = restrict_kernel(K, A_->mul(unit(i), a), /*left=*/false);
    return K;
  }

 private:
  // Kernel of x -> m*x (left) or x -> x*m (right) restricted to span K.
  Sub restrict_kernel(const Sub& K, const E& m, bool left) const {
    std::vector<Vec> cols(K.size());
    for (size_t t = 0; t < K.size(); ++t)
      cols[t] = left ? A_->mul(m, K[t]) : A_->mul(K[t], m);
    auto combos = linalg::kernel_of_columns(A_->F(), cols, dim());
    std::vector<E> rows;
    for (const Vec& c : combos) {
      E v = zero();
      for (size_t t = 0; t < K.size(); ++t)
        if (c[t] != 0) v = add(v, A_->scale(c[t], K[t]));
      rows.push_back(std::move(v));
    }
    return span(std::move(rows));
  }

  const FiniteAlgebra* A_;
};

class BitEngine {
 public:
  using E = std::uint64_t;            // coordinate i at bit i
  using Sub = std::vector<gf2x::Word>;  // canonical echelon row masks

  explicit BitEngine(const FiniteAlgebra& A) : A_(&A), d_(A.dim()) {
    if (A.F().q() != 2) fail(Errc::FieldMismatch, "BitEngine requires F2");
    if (d_ > 32) fail(Errc::DimensionMismatch, "BitEngine requires dim <= 32");
    bpm_.resize(size_t(d_) * d_);
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j)
        bpm_[size_t(i) * d_ + j] = pack(A.basis_product(i, j));
    one_ = pack(A.one());
  }

  const FiniteAlgebra& algebra() const { return *A_; }
  int dim() const { return d_; }
  std::uint64_t order() const { return std::uint64_t(1) << d_; }

  E zero() const { return 0; }
  E one() const { return one_; }
  E unit(int i) const { return E(1) << i; }
  E from_vec(const Vec& v) const { return pack(v); }
  Vec to_vec(E x) const {
    Vec v(d_);
    for (int i = 0; i < d_; ++i) v[i] = Coef((x >> i) & 1);
    return v;
  }
  bool is_zero(E x) const { return x == 0; }
  bool eq(E x, E y) const { return x == y; }
  E add(E x, E y) const { return x ^ y; }
  E sub(E x, E y) const { return x ^ y; }
  E mul(E x, E y) const {
    E acc = 0;
    for (E xi = x; xi; xi &= xi - 1) {
      const int i = std::countr_zero(xi);
      const gf2x::Word* row = &bpm_[size_t(i) * d_];
      for (E yj = y; yj; yj &= yj - 1) acc ^= row[std::countr_zero(yj)];
    }
    return acc;
  }
  // Index order must match FiniteAlgebra::index_of (coordinate 0 most
  // significant), so indices are bit-reversed masks.
  std::uint64_t index_of(E x) const {
    std::uint64_t idx = 0;
    for (int i = 0; i < d_; ++i)
      if ((x >> i) & 1) idx |= std::uint64_t(1) << (d_ - 1 - i);
    return idx;
  }
  E at(std::uint64_t idx) const {
    E x = 0;
    for (int i = 0; i < d_; ++i)
      if ((idx >> (d_ - 1 - i)) & 1) x |= E(1) << i;
    return x;
  }

  Sub span(std::vector<E> rows) const {
    gf2x::rref(rows, d_);
    return rows;
  }
  Sub full() const {
    Sub rows;
    for (int i = 0; i < d_; ++i) rows.push_back(unit(i));
    return rows;
  }
  int sub_dim(const Sub& s) const { return int(s.size()); }
  bool contains(const Sub& s, E x) const { return gf2x::contains(s, x); }
  bool sub_equal(const Sub& a, const Sub& b) const { return a == b; }
  Sub intersect(const Sub& a, const Sub& b) const {
    return gf2x::intersect(a, b, d_);
  }
  E sub_basis(const Sub& s, int i) const { return s[i]; }
  std::uint64_t sub_order(const Sub& s) const {
    return std::uint64_t(1) << s.size();
  }
  E sub_element_at(const Sub& s, std::uint64_t idx) const {
    E out = 0;
    const int k = int(s.size());
    for (int i = 0; i < k; ++i)
      if ((idx >> (k - 1 - i)) & 1) out ^= s[i];
    return out;
  }

  Sub rann(E a) const {
    std::vector<gf2x::Word> cols(d_);
    for (int j = 0; j < d_; ++j) cols[j] = mul(a, unit(j));
    return gf2x::kernel_of_columns(cols, d_);
  }
  Sub lann(E a) const {
    std::vector<gf2x::Word> cols(d_);
    for (int j = 0; j < d_; ++j) cols[j] = mul(unit(j), a);
    return gf2x::kernel_of_columns(cols, d_);
  }
  Sub right_image(E a) const {
    std::vector<E> rows;
    for (int i = 0; i < d_; ++i) rows.push_back(mul(a, unit(i)));
    return span(std::move(rows));
  }
  Sub left_image(E a) const {
    std::vector<E> rows;
    for (int i = 0; i < d_; ++i) rows.push_back(mul(unit(i), a));
    return span(std::move(rows));
  }
  Sub product_span(const Sub& u, const Sub& v) const {
    std::vector<E> rows;
    for (E x : u)
      for (E y : v) rows.push_back(mul(x, y));
    return span(std::move(rows));
  }
  Sub joint_right_null(E a) const {
    Sub K = full();
    for (int i = 0; i < d_ && !K.empty(); ++i)
      K = restrict_kernel(K, mul(a, unit(i)), true);
    return K;
  }
  Sub joint_left_null(E a) const {
    Sub K = full();
    for (int i = 0; i < d_ && !K.empty(); ++i)
      K = restrict_kernel(K, mul(unit(i), a), false);
    return K;
  }

 private:
  static E pack(const Vec& v) {
    E x = 0;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i]) x |= E(1) << i;
    return x;
  }

  Sub restrict_kernel(const Sub& K, E m, bool left) const {
    std::vector<gf2x::Word> cols(K.size());
    for (size_t t = 0; t < K.size(); ++t)
      cols[t] = left ? mul(m, K[t]) : mul(K[t], m);
    auto combos = gf2x::kernel_of_columns(cols, d_);
    std::vector<E> rows;
    for (gf2x::Word c : combos) {
      E v = 0;
      for (size_t t = 0; t < K.size(); ++t)
        if ((c >> t) & 1) v ^= K[t];
      rows.push_back(v);
    }
    return span(std::move(rows));
  }

  const FiniteAlgebra* A_;
  int d_;
  std::vector<gf2x::Word> bpm_;
  E one_;
};

// Scan [0, total) with `pred` across worker threads; returns the smallest
// index where pred is true, if any.  pred must be safe to call concurrently
// and independent of call order.  Chunks past an already-found hit are
// skipped, so the result is the true minimum.
template <typename Pred>
std::optional<std::uint64_t> parallel_find_min(std::uint64_t total, int threads,
                                               Pred&& pred) {
  constexpr std::uint64_t kChunk = 1024;
  if (threads < 1) threads = 1;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{~std::uint64_t(0)};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t start = next.fetch_add(kChunk);
      if (start >= total || start >= best.load()) return;
      const std::uint64_t stop = std::min(total, start + kChunk);
      for (std::uint64_t i = start; i < stop; ++i) {
        if (i >= best.load()) break;
        if (pred(i)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  };
  if (threads == 1 || total <= kChunk) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  const std::uint64_t found = best.load();
  if (found == ~std::uint64_t(0)) return std::nullopt;
  return found;
}

}  // namespace ringlab

#pragma once
// Brute-force reference implementations of the ring-property predicates.
//
// Each function is a direct transcription of the property's definition as
// nested loops over ring ELEMENTS -- no annihilator linear algebra, no
// restriction to the radical -- so the production checkers can be validated
// against an independent oracle on rings of small order.

#include <cstdint>
#include <unordered_set>
#include <vector>

#include <ringlab/engine.hpp>

namespace ringlab::brute {

// x is nilpotent iff x^(dim+1) = 0.
template <typename Engine>
bool nilpotent(const Engine& eng, const typename Engine::E& x) {
  auto y = x;
  for (int i = 0; i < eng.dim(); ++i) y = eng.mul(y, x);
  return eng.is_zero(y);
}

// ab = 0 implies ba = 0.
template <typename Engine>
bool reversible(const Engine& eng) {
  for (std::uint64_t i = 0; i < eng.order(); ++i) {
    const auto x = eng.at(i);
    for (std::uint64_t j = 0; j < eng.order(); ++j) {
      const auto y = eng.at(j);
      if (eng.is_zero(eng.mul(x, y)) && !eng.is_zero(eng.mul(y, x)))
        return false;
    }
  }
  return true;
}

// abc = 0 implies bac = 0.
template <typename Engine>
bool symmetric(const Engine& eng) {
  for (std::uint64_t i = 0; i < eng.order(); ++i) {
    const auto x = eng.at(i);
    for (std::uint64_t j = 0; j < eng.order(); ++j) {
      const auto y = eng.at(j);
      const auto xy = eng.mul(x, y);
      const auto yx = eng.mul(y, x);
      if (eng.eq(xy, yx)) continue;
      for (std::uint64_t k = 0; k < eng.order(); ++k) {
        const auto z = eng.at(k);
        if (eng.is_zero(eng.mul(xy, z)) && !eng.is_zero(eng.mul(yx, z)))
          return false;
      }
    }
  }
  return true;
}

// ab = 0 implies arb = 0 for every r.
template <typename Engine>
bool semicommutative(const Engine& eng) {
  for (std::uint64_t i = 0; i < eng.order(); ++i) {
    const auto x = eng.at(i);
    for (std::uint64_t j = 0; j < eng.order(); ++j) {
      const auto y = eng.at(j);
      if (!eng.is_zero(eng.mul(x, y))) continue;
      for (std::uint64_t k = 0; k < eng.order(); ++k)
        if (!eng.is_zero(eng.mul(eng.mul(x, eng.at(k)), y))) return false;
    }
  }
  return true;
}

// aRb = 0 implies bRa = 0.
template <typename Engine>
bool reflexive(const Engine& eng) {
  auto product_zero = [&](const typename Engine::E& x,
                          const typename Engine::E& y) {
    for (std::uint64_t k = 0; k < eng.order(); ++k)
      if (!eng.is_zero(eng.mul(eng.mul(x, eng.at(k)), y))) return false;
    return true;
  };
  for (std::uint64_t i = 0; i < eng.order(); ++i) {
    const auto x = eng.at(i);
    for (std::uint64_t j = 0; j < eng.order(); ++j) {
      const auto y = eng.at(j);
      if (product_zero(x, y) && !product_zero(y, x)) return false;
    }
  }
  return true;
}

// every idempotent commutes with every element.
template <typename Engine>
bool abelian(const Engine& eng) {
  for (std::uint64_t i = 0; i < eng.order(); ++i) {
    const auto x = eng.at(i);
    if (!eng.eq(eng.mul(x, x), x)) continue;
    for (std::uint64_t j = 0; j < eng.order(); ++j) {
      const auto y = eng.at(j);
      if (!eng.eq(eng.mul(x, y), eng.mul(y, x))) return false;
    }
  }
  return true;
}

// right duo: Ra is contained in aR for every a (as element sets).
template <typename Engine>
bool duo_right(const Engine& eng) {
  for (std::uint64_t i = 0; i < eng.order(); ++i) {
    const auto x = eng.at(i);
    std::unordered_set<std::uint64_t> xr;
    for (std::uint64_t j = 0; j < eng.order(); ++j)
      xr.insert(eng.index_of(eng.mul(x, eng.at(j))));
    for (std::uint64_t j = 0; j < eng.order(); ++j)
      if (!xr.count(eng.index_of(eng.mul(eng.at(j), x)))) return false;
  }
  return true;
}

// left duo: aR is contained in Ra for every a.
template <typename Engine>
bool duo_left(const Engine& eng) {
  for (std::uint64_t i = 0; i < eng.order(); ++i) {
    const auto x = eng.at(i);
    std::unordered_set<std::uint64_t> rx;
    for (std::uint64_t j = 0; j < eng.order(); ++j)
      rx.insert(eng.index_of(eng.mul(eng.at(j), x)));
    for (std::uint64_t j = 0; j < eng.order(); ++j)
      if (!rx.count(eng.index_of(eng.mul(x, eng.at(j))))) return false;
  }
  return true;
}

// The set of nilpotent elements forms a two-sided ideal.
template <typename Engine>
bool NI(const Engine& eng) {
  std::vector<typename Engine::E> nil;
  std::unordered_set<std::uint64_t> nil_ix;
  for (std::uint64_t i = 0; i < eng.order(); ++i) {
    const auto x = eng.at(i);
    if (nilpotent(eng, x)) {
      nil.push_back(x);
      nil_ix.insert(i);
    }
  }
  for (const auto& x : nil)
    for (const auto& y : nil)
      if (!nil_ix.count(eng.index_of(eng.add(x, y)))) return false;
  for (const auto& x : nil)
    for (std::uint64_t j = 0; j < eng.order(); ++j) {
      const auto y = eng.at(j);
      if (!nil_ix.count(eng.index_of(eng.mul(x, y)))) return false;
      if (!nil_ix.count(eng.index_of(eng.mul(y, x)))) return false;
    }
  return true;
}

}  // namespace ringlab::brute

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ringlab/errors.hpp"

namespace ringlab {

using Coef = std::uint8_t;
using Vec = std::vector<Coef>;

// Arithmetic in a small finite field F_{p^k}, fully table-driven.
//
// Elements are encoded as integers in [0, p^k): the base-p digits of the
// encoding are the coefficients of the residue polynomial in the extension
// generator (digit 0 = constant term).  For k = 1 the encoding is the value
// mod p.  Caps: p prime <= 13 and p^k <= 256, so one byte per element and the
// multiplication table stays under 64 KiB.
class FieldSpec {
 public:
  static std::shared_ptr<const FieldSpec> make(int p, int k, Vec modulus = {});

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  const Vec& modulus() const { return modulus_; }

  Coef add(Coef a, Coef b) const { return add_t_[a * q_ + b]; }
  Coef sub(Coef a, Coef b) const { return add_t_[a * q_ + neg_t_[b]]; }
  Coef mul(Coef a, Coef b) const { return mul_t_[a * q_ + b]; }
  Coef neg(Coef a) const { return neg_t_[a]; }

  Coef inv(Coef a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero in " + name());
    return inv_t_[a];
  }

  Coef pow(Coef a, std::uint64_t n) const {
    Coef r = 1;
    while (n) {
      if (n & 1) r = mul(r, a);
      a = mul(a, a);
      n >>= 1;
    }
    return r;
  }

  // x -> x^p, a generator of Gal(F_{p^k} / F_p).
  Coef frobenius(Coef a) const { return frob_t_[a]; }

  Coef frobenius_pow(Coef a, int e) const {
    e %= k_;
    if (e < 0) e += k_;
    for (int i = 0; i < e; ++i) a = frob_t_[a];
    return a;
  }

  // Embed an integer into the prime subfield.
  Coef from_int(long long v) const {
    long long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Coef>(r);
  }

  // The extension generator (the residue of the modulus variable); k >= 2.
  Coef gen() const {
    if (k_ < 2) fail(Errc::Unsupported, "no extension generator in " + name());
    return static_cast<Coef>(p_);
  }

  std::string name() const {
    return "F" + std::to_string(k_ == 1 ? p_ : q_);
  }

  // "0", "1", "2", ... for prime fields; "a+1", "2a", ... for extensions.
  std::string elem_name(Coef x) const {
    if (k_ == 1) return std::to_string(int(x));
    if (x == 0) return "0";
    std::string s;
    for (int d = k_ - 1; d >= 0; --d) {
      int c = digit(x, d);
      if (c == 0) continue;
      if (!s.empty()) s += "+";
      if (d == 0) {
        s += std::to_string(c);
      } else {
        if (c != 1) s += std::to_string(c);
        s += "a";
        if (d > 1) s += "^" + std::to_string(d);
      }
    }
    return s;
  }

  int digit(Coef x, int i) const {
    int v = x;
    for (int t = 0; t < i; ++t) v /= p_;
    return v % p_;
  }

  bool operator==(const FieldSpec& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

 private:
  FieldSpec() = default;

  int p_ = 0, k_ = 0, q_ = 0;
  Vec modulus_;  // monic, degree k, coefficient i of x^i; empty when k == 1
  std::vector<Coef> add_t_, mul_t_, neg_t_, inv_t_, frob_t_;

  friend struct FieldBuilder;
};

using Field = std::shared_ptr<const FieldSpec>;

namespace detail {

// Dense polynomial helpers over F_p, coefficient i of x^i, used only while
// building field tables (no normalization invariants; trailing zeros allowed).
inline int poly_deg(const std::vector<int>& f) {
  for (int i = int(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

inline std::vector<int> poly_mul(const std::vector<int>& f,
                                 const std::vector<int>& g, int p) {
  std::vector<int> r(f.size() + g.size(), 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      r[i + j] = (r[i + j] + f[i] * g[j]) % p;
  return r;
}

// f mod g, g monic of positive degree.
inline std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& g,
                                 int p) {
  int dg = poly_deg(g);
  for (int i = poly_deg(f); i >= dg; --i) {
    int c = f[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      int t = (f[i - dg + j] - c * g[j]) % p;
      f[i - dg + j] = t < 0 ? t + p : t;
    }
  }
  f.resize(dg);
  return f;
}

}  // namespace detail

struct FieldBuilder {
  static Field build(int p, int k, Vec modulus) {
    if (p < 2) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (p > 13) fail(Errc::FieldTooLarge, "characteristic cap is 13");
    if (k < 1) fail(Errc::DegreeMismatch, "extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
      q *= p;
      if (q > 256) fail(Errc::FieldTooLarge, "field size cap is 256");
    }

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->k_ = k;
    spec->q_ = int(q);

    std::vector<int> mod;  // int coefficients of the (monic) modulus
    if (k == 1) {
      if (!modulus.empty())
        fail(Errc::DegreeMismatch, "prime field takes no modulus");
    } else {
      if (modulus.size() != size_t(k) + 1)
        fail(Errc::DegreeMismatch, "modulus must list k+1 coefficients");
      mod.assign(modulus.begin(), modulus.end());
      for (int& c : mod) c %= p;
      if (mod[k] == 0)
        fail(Errc::DegreeMismatch, "modulus must have degree exactly k");
      if (mod[k] != 1) {  // normalize to monic
        int inv = 1;
        while ((inv * mod[k]) % p != 1) ++inv;
        for (int& c : mod) c = (c * inv) % p;
      }
      check_irreducible(mod, p, k);
      spec->modulus_.assign(mod.begin(), mod.end());
    }

    const int Q = spec->q_;
    spec->add_t_.resize(Q * Q);
    spec->mul_t_.resize(Q * Q);
    spec->neg_t_.resize(Q);
    spec->inv_t_.assign(Q, 0);
    spec->frob_t_.resize(Q);

    auto decode = [&](int x) {
      std::vector<int> d(k);
      for (int i = 0; i < k; ++i) {
        d[i] = x % p;
        x /= p;
      }
      return d;
    };
    auto encode = [&](const std::vector<int>& d) {
      int x = 0;
      for (int i = k - 1; i >= 0; --i) x = x * p + (i < int(d.size()) ? d[i] : 0);
      return Coef(x);
    };

    for (int a = 0; a < Q; ++a) {
      auto da = decode(a);
      std::vector<int> na(k);
      for (int i = 0; i < k; ++i) na[i] = (p - da[i]) % p;
      spec->neg_t_[a] = encode(na);
      for (int b = 0; b < Q; ++b) {
        auto db = decode(b);
        std::vector<int> s(k);
        for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
        spec->add_t_[a * Q + b] = encode(s);
        auto prod = detail::poly_mul(da, db, p);
        if (k > 1) prod = detail::poly_mod(prod, mod, p);
        prod.resize(k);
        spec->mul_t_[a * Q + b] = encode(prod);
      }
    }
    for (int a = 1; a < Q; ++a) {
      for (int b = 1; b < Q; ++b)
        if (spec->mul_t_[a * Q + b] == 1) {
          spec->inv_t_[a] = Coef(b);
          break;
        }
      if (spec->inv_t_[a] == 0)
        fail(Errc::Internal, "field table has a non-invertible element");
    }
    for (int a = 0; a < Q; ++a) spec->frob_t_[a] = spec->pow(Coef(a), p);
    return spec;
  }

  // Trial division by every monic polynomial of degree 1..k/2.
  static void check_irreducible(const std::vector<int>& mod, int p, int k) {
    for (int d = 1; 2 * d <= k; ++d) {
      long long count = 1;
      for (int i = 0; i < d; ++i) count *= p;
      for (long long t = 0; t < count; ++t) {
        std::vector<int> f(d + 1, 0);
        long long v = t;
        for (int i = 0; i < d; ++i) {
          f[i] = int(v % p);
          v /= p;
        }
        f[d] = 1;
        if (detail::poly_deg(detail::poly_mod(std::vector<int>(mod.begin(), mod.end()), f, p)) < 0)
          fail(Errc::ReducibleModulus, "modulus has a monic factor of degree " +
                                           std::to_string(d));
      }
    }
  }
};

inline Field FieldSpec::make(int p, int k, Vec modulus) {
  return FieldBuilder::build(p, k, std::move(modulus));
}

inline Field field_make(int p, int k = 1, Vec modulus = {}) {
  return FieldSpec::make(p, k, std::move(modulus));
}

// F_2.
inline const Field& GF2() {
  static Field f = field_make(2);
  return f;
}

// F_4 = F_2[x] / (x^2 + x + 1); the generator prints as "a".
inline const Field& GF4() {
  static Field f = field_make(2, 2, Vec{1, 1, 1});
  return f;
}

}  // namespace ringlab

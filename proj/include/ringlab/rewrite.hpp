#pragma once

#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/algebra.hpp"
#include "ringlab/engine.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/gf.hpp"

// Finitely presented algebras by noncommutative rewriting.
//
// Elements of the free algebra are sums of (coefficient, word) terms with the
// coefficient written on the LEFT of the word.  Generators may twist the
// coefficient field: a generator g with twist e satisfies g*c = frob^e(c)*g
// for scalars c, so moving a coefficient left past a word w applies the
// Frobenius power sum of w's letters.
//
// `complete` runs a bounded Knuth–Bendix style completion; `build_algebra`
// turns the resulting normal forms into an explicit FiniteAlgebra and then
// PROVES the construction exact with a certificate (identity + associativity,
// reconstruction of every basis word, vanishing of the input relations,
// square-zero ideal check, twist compatibility).  The certificate does not
// assume the rewriting system is confluent: if completion silently failed,
// one of the checks fails and a NotConfluent error is raised instead of a
// wrong ring being returned.
namespace ringlab {

using Monomial = std::vector<int>;  // word of generator indices; empty = 1

struct DeglexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
  }
};

// Polynomial in the (twisted) free algebra: monomial -> coefficient, kept in
// descending degree-lexicographic order so begin() is the leading term.
using NCPoly = std::map<Monomial, Coef, DeglexGreater>;

struct Presentation {
  Field field;
  std::vector<std::string> gens;
  std::vector<int> twist;     // frobenius power per generator
  std::vector<char> sqzero;   // flag: every word containing g twice is zero
  std::vector<NCPoly> relations;  // each understood as "= 0"
  int degree_bound = 8;       // irreducible words must stay shorter than this
  std::string name;

  int ngens() const { return int(gens.size()); }
  void add_gen(const std::string& n, int tw = 0, bool sq = false) {
    gens.push_back(n);
    twist.push_back(tw);
    sqzero.push_back(sq ? 1 : 0);
  }
  // Frobenius power picked up by a coefficient moving left past w.
  int twist_of(const Monomial& w) const {
    const int k = field->k();
    int t = 0;
    for (int g : w) t = (t + twist[g]) % k;
    return t;
  }
};

inline Monomial cat(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline void nc_add_term(NCPoly& p, const Monomial& m, Coef c,
                        const FieldSpec& F) {
  if (c == 0) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, c);
    return;
  }
  it->second = F.add(it->second, c);
  if (it->second == 0) p.erase(it);
}

inline NCPoly nc_sub(NCPoly a, const NCPoly& b, const FieldSpec& F) {
  for (const auto& [m, c] : b) nc_add_term(a, m, F.neg(c), F);
  return a;
}

inline NCPoly nc_scale(Coef s, const NCPoly& p, const FieldSpec& F) {
  NCPoly r;
  for (const auto& [m, c] : p) nc_add_term(r, m, F.mul(s, c), F);
  return r;
}

// Product in the twisted free algebra.
inline NCPoly nc_mul(const NCPoly& a, const NCPoly& b,
                     const Presentation& pres) {
  const FieldSpec& F = *pres.field;
  NCPoly r;
  for (const auto& [u, c] : a) {
    const int t = pres.twist_of(u);
    for (const auto& [v, d] : b)
      nc_add_term(r, cat(u, v), F.mul(c, F.frobenius_pow(d, t)), F);
  }
  return r;
}

inline NCPoly nc_mono(const Monomial& m, Coef c = 1) {
  NCPoly p;
  if (c != 0) p.emplace(m, c);
  return p;
}

struct Rule {
  Monomial lhs;  // monic leading word
  NCPoly rhs;    // strictly smaller terms; lhs rewrites to rhs
};

namespace detail {
inline bool contains_factor(const Monomial& w, const Monomial& f) {
  if (f.empty() || f.size() > w.size()) return false;
  for (size_t p = 0; p + f.size() <= w.size(); ++p)
    if (std::equal(f.begin(), f.end(), w.begin() + p)) return true;
  return false;
}
}  // namespace detail

class RewriteSystem {
 public:
  explicit RewriteSystem(Presentation pres) : pres_(std::move(pres)) {}

  const Presentation& presentation() const { return pres_; }
  const std::vector<Rule>& rules() const { return rules_; }

  // A word containing any square-zero generator twice is zero by fiat.
  bool sqzero_dead(const Monomial& w) const {
    for (size_t i = 0; i < w.size(); ++i) {
      if (!pres_.sqzero[w[i]]) continue;
      for (size_t j = i + 1; j < w.size(); ++j)
        if (w[j] == w[i]) return true;
    }
    return false;
  }

  bool reducible(const Monomial& w) const {
    if (sqzero_dead(w)) return true;
    for (const Rule& r : rules_)
      if (detail::contains_factor(w, r.lhs)) return true;
    return false;
  }

  // Normal form: repeatedly rewrite the currently largest monomial.  Each
  // step replaces a monomial by strictly smaller ones, so this terminates.
  NCPoly normal_form(NCPoly p) const {
    const FieldSpec& F = *pres_.field;
    NCPoly out;
    while (!p.empty()) {
      auto [w, c] = *p.begin();
      p.erase(p.begin());
      if (sqzero_dead(w)) continue;
      size_t pos = 0;
      const Rule* hit = nullptr;
      for (size_t at = 0; at < w.size() + 1 && !hit; ++at)
        for (const Rule& r : rules_) {
          if (at + r.lhs.size() > w.size()) continue;
          if (std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + at)) {
            hit = &r;
            pos = at;
            break;
          }
        }
      if (!hit) {
        nc_add_term(out, w, c, F);
        continue;
      }
      const Monomial prefix(w.begin(), w.begin() + pos);
      const Monomial suffix(w.begin() + pos + hit->lhs.size(), w.end());
      const int t = pres_.twist_of(prefix);
      for (const auto& [m, d] : hit->rhs)
        nc_add_term(p, cat(cat(prefix, m), suffix),
                    F.mul(c, F.frobenius_pow(d, t)), F);
    }
    return out;
  }

  // All irreducible words in degree-then-lex order, starting with 1.  Throws
  // BasisNotFinite if any irreducible word reaches the degree bound.
  std::vector<Monomial> irreducible_words() const {
    std::vector<Monomial> words{Monomial{}};
    std::vector<Monomial> blocked;  // irreducible words at the degree bound
    for (size_t head = 0; head < words.size(); ++head) {
      const Monomial w = words[head];
      for (int g = 0; g < pres_.ngens(); ++g) {
        Monomial x = w;
        x.push_back(g);
        // w is irreducible, so only suffix matches and square-zero kills
        // involving the new letter need checking.
        bool dead = false;
        if (pres_.sqzero[g])
          for (int h : w)
            if (h == g) {
              dead = true;
              break;
            }
        for (const Rule& r : rules_) {
          if (dead) break;
          if (r.lhs.size() > x.size()) continue;
          if (std::equal(r.lhs.begin(), r.lhs.end(),
                         x.end() - r.lhs.size(), x.end()))
            dead = true;
        }
        if (dead) continue;
        if (int(x.size()) >= pres_.degree_bound) {
          if (blocked.size() < 8) blocked.push_back(std::move(x));
          continue;  // not extended, so the scan stays finite
        }
        words.push_back(std::move(x));
      }
    }
    if (!blocked.empty()) {
      std::string names;
      for (size_t i = 0; i < blocked.size() && i < 4; ++i) {
        if (i) names += ", ";
        for (size_t j = 0; j < blocked[i].size(); ++j) {
          if (j) names += "*";
          names += pres_.gens[blocked[i][j]];
        }
      }
      if (blocked.size() > 4) names += ", ...";
      fail(Errc::BasisNotFinite,
           "irreducible words reach the degree bound " +
               std::to_string(pres_.degree_bound) + " (" + names +
               "); the presented ring may be infinite");
    }
    return words;
  }

 private:
  friend RewriteSystem complete(const Presentation&);

  // Orient p (already in normal form) into a rule and install it, demoting
  // any existing rule whose left side becomes reducible.
  void install(const NCPoly& p, std::deque<NCPoly>& pending) {
    const FieldSpec& F = *pres_.field;
    const auto& [lead, c] = *p.begin();
    if (lead.empty())
      fail(Errc::InconsistentPresentation,
           "relations force 1 = 0; the presented ring collapses");
    const Coef ci = F.inv(c);
    Rule r;
    r.lhs = lead;
    for (auto it = std::next(p.begin()); it != p.end(); ++it)
      r.rhs.emplace(it->first, F.neg(F.mul(ci, it->second)));
    rules_.push_back(std::move(r));
    if (rules_.size() > kMaxRules)
      fail(Errc::NotConfluent, "completion produced more than " +
                                   std::to_string(kMaxRules) + " rules");
    const Monomial& nl = rules_.back().lhs;
    for (size_t i = 0; i + 1 < rules_.size();) {
      if (detail::contains_factor(rules_[i].lhs, nl)) {
        NCPoly back = nc_mono(rules_[i].lhs);
        back = nc_sub(back, rules_[i].rhs, F);
        pending.push_back(std::move(back));
        rules_.erase(rules_.begin() + long(i));
      } else {
        ++i;
      }
    }
  }

  // Reduce every pending relation to normal form and install the nonzero
  // ones; returns whether the rule set changed.
  bool settle(std::deque<NCPoly>& pending) {
    bool changed = false;
    while (!pending.empty()) {
      NCPoly p = normal_form(pending.front());
      pending.pop_front();
      if (p.empty()) continue;
      install(p, pending);
      changed = true;
    }
    return changed;
  }

  static constexpr size_t kMaxRules = 512;
  Presentation pres_;
  std::vector<Rule> rules_;
};

// Bounded completion: resolve overlap ambiguities between rules (and between
// rules and square-zero patterns) until stable.
inline RewriteSystem complete(const Presentation& pres) {
  if (int(pres.twist.size()) != pres.ngens() ||
      int(pres.sqzero.size()) != pres.ngens())
    fail(Errc::DimensionMismatch, "presentation arrays disagree on rank");
  for (const NCPoly& rel : pres.relations)
    for (const auto& [m, c] : rel)
      for (int g : m)
        if (g < 0 || g >= pres.ngens())
          fail(Errc::UnknownGenerator, "relation uses generator index " +
                                           std::to_string(g));
  RewriteSystem sys(pres);
  const FieldSpec& F = *pres.field;
  std::deque<NCPoly> pending(pres.relations.begin(), pres.relations.end());
  sys.settle(pending);

  constexpr int kMaxPasses = 64;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    const std::vector<Rule> snapshot = sys.rules_;
    // Proper overlaps and inclusions between rule left sides.
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = 0; j < snapshot.size(); ++j) {
        const Monomial& Li = snapshot[i].lhs;
        const Monomial& Lj = snapshot[j].lhs;
        const size_t maxo = std::min(Li.size(), Lj.size());
        for (size_t o = 1; o < maxo; ++o) {
          // suffix of Li of length o == prefix of Lj of length o
          if (!std::equal(Li.end() - long(o), Li.end(), Lj.begin(),
                          Lj.begin() + long(o)))
            continue;
          const Monomial A(Li.begin(), Li.end() - long(o));
          const Monomial C(Lj.begin() + long(o), Lj.end());
          // W = A (overlap) C reduced two ways.
          NCPoly red1;  // via rule i at position 0, then append C
          for (const auto& [m, d] : snapshot[i].rhs)
            nc_add_term(red1, cat(m, C), d, F);
          NCPoly red2;  // via rule j after prefix A
          const int t = pres.twist_of(A);
          for (const auto& [m, d] : snapshot[j].rhs)
            nc_add_term(red2, cat(A, m), F.frobenius_pow(d, t), F);
          NCPoly diff = sys.normal_form(nc_sub(red1, red2, F));
          if (!diff.empty()) pending.push_back(std::move(diff));
        }
        if (i != j && Lj.size() < Li.size()) {
          // Lj occurs strictly inside Li.
          for (size_t p = 0; p + Lj.size() <= Li.size(); ++p) {
            if (!std::equal(Lj.begin(), Lj.end(), Li.begin() + long(p)))
              continue;
            const Monomial P(Li.begin(), Li.begin() + long(p));
            const Monomial S(Li.begin() + long(p + Lj.size()), Li.end());
            NCPoly red2;
            const int t = pres.twist_of(P);
            for (const auto& [m, d] : snapshot[j].rhs)
              nc_add_term(red2, cat(cat(P, m), S), F.frobenius_pow(d, t), F);
            NCPoly diff =
                sys.normal_form(nc_sub(snapshot[i].rhs, red2, F));
            if (!diff.empty()) pending.push_back(std::move(diff));
          }
        }
      }
    // Square-zero pattern against rules: g*L and L*g die whenever g occurs
    // in L, so the corresponding reductions must die too.
    for (int g = 0; g < pres.ngens(); ++g) {
      if (!pres.sqzero[g]) continue;
      const Monomial G{g};
      for (const Rule& r : snapshot) {
        bool has_g = false;
        for (int h : r.lhs)
          if (h == g) has_g = true;
        if (!has_g) continue;
        NCPoly left;  // g * rhs
        const int t = pres.twist_of(G);
        for (const auto& [m, d] : r.rhs)
          nc_add_term(left, cat(G, m), F.frobenius_pow(d, t), F);
        NCPoly diff = sys.normal_form(left);
        if (!diff.empty()) pending.push_back(std::move(diff));
        NCPoly right;  // rhs * g
        for (const auto& [m, d] : r.rhs) nc_add_term(right, cat(m, G), d, F);
        diff = sys.normal_form(right);
        if (!diff.empty()) pending.push_back(std::move(diff));
      }
    }
    const bool changed = sys.settle(pending);
    // Keep right sides fully reduced (sound: rewriting only uses relations
    // already in the ideal).
    for (Rule& r : sys.rules_) r.rhs = sys.normal_form(r.rhs);
    if (!changed) return sys;
  }
  fail(Errc::NotConfluent, "completion did not stabilize");
}

// A finitely presented ring realized as an explicit algebra.  When the
// presentation twists the coefficients, the scalars of the output algebra are
// the twist-fixed subfield (coefficients in the original field become basis
// directions), so `expansion` basis vectors correspond to each word.
struct BuiltRing {
  FiniteAlgebra algebra;
  Field coeff_field;             // field of the presentation
  int expansion = 1;             // basis vectors per irreducible word
  std::vector<Monomial> words;   // irreducible words, degree-then-lex
  std::vector<Rule> rules;       // completed rewriting system
  std::string name;
};

namespace detail {

inline std::string word_name(const Presentation& pres, const Monomial& w) {
  if (w.empty()) return "1";
  bool short_names = true;
  for (const std::string& n : pres.gens) short_names &= n.size() == 1;
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    std::string tok = pres.gens[w[i]];
    if (j - i > 1) tok += "^" + std::to_string(j - i);
    if (!out.empty() && (!short_names || j - i > 1)) out += "*";
    out += tok;
    i = j;
  }
  return out;
}

}  // namespace detail

inline BuiltRing build_algebra(const Presentation& pres) {
  RewriteSystem sys = complete(pres);
  const std::vector<Monomial> words = sys.irreducible_words();
  std::map<Monomial, int, DeglexGreater> index;
  for (int i = 0; i < int(words.size()); ++i) index.emplace(words[i], i);

  const FieldSpec& Fq = *pres.field;
  const int k = Fq.k();
  int m = k;
  for (int g = 0; g < pres.ngens(); ++g) {
    const int t = pres.twist[g] % k;
    if (t != 0) m = std::gcd(m, t);
  }
  const int exp = k / m;
  Field base;
  if (m == k)
    base = pres.field;
  else if (m == 1)
    base = field_make(Fq.p());
  else
    fail(Errc::Unsupported,
         "twists fixing a proper intermediate subfield are not supported");

  std::vector<Coef> beta(exp);  // power basis of Fq over the base field
  for (int s = 0; s < exp; ++s) beta[s] = s == 0 ? Coef(1) : Fq.pow(Fq.gen(), s);
  const int nw = int(words.size());
  const int dim = nw * exp;

  // Coordinates of a free-algebra normal form inside the output basis.
  auto embed = [&](const NCPoly& p) {
    Vec v(dim, 0);
    for (const auto& [mono, c] : p) {
      auto it = index.find(mono);
      if (it == index.end())
        fail(Errc::NotConfluent,
             "normal form contains a word outside the computed basis");
      if (exp == 1)
        v[it->second] = c;
      else
        for (int r = 0; r < exp; ++r)
          v[it->second * exp + r] = Fq.digit(c, r);
    }
    return v;
  };

  std::vector<std::string> names(dim);
  for (int i = 0; i < nw; ++i) {
    const std::string wn = detail::word_name(pres, words[i]);
    for (int s = 0; s < exp; ++s) {
      if (s == 0) {
        names[i * exp] = wn;
      } else {
        std::string cn = Fq.elem_name(beta[s]);
        if (cn.find('+') != std::string::npos) cn = "(" + cn + ")";
        names[i * exp + s] = wn == "1" ? cn : cn + "*" + wn;
      }
    }
  }

  std::vector<Vec> bp(size_t(dim) * dim);
  for (int i = 0; i < nw; ++i) {
    const int ti = pres.twist_of(words[i]);
    for (int j = 0; j < nw; ++j) {
      const NCPoly prod = sys.normal_form(nc_mono(cat(words[i], words[j])));
      for (int s = 0; s < exp; ++s)
        for (int t = 0; t < exp; ++t) {
          const Coef scal = Fq.mul(beta[s], Fq.frobenius_pow(beta[t], ti));
          NCPoly scaled = nc_scale(scal, prod, Fq);
          bp[size_t(i * exp + s) * dim + (j * exp + t)] = embed(scaled);
        }
    }
  }
  FiniteAlgebra A(base, std::move(names), std::move(bp),
                  embed(nc_mono(Monomial{})));

  // ---- exactness certificate -------------------------------------------
  auto certify = [&](bool ok, const std::string& what) {
    if (!ok)
      fail(Errc::NotConfluent,
           "rewriting certificate failed: " + what +
               " (the completed system does not define this quotient)");
  };
  try {
    A.validate();
  } catch (const Error& e) {
    fail(Errc::NotConfluent,
         std::string("rewriting certificate failed: ") + e.what());
  }

  // Images of the scalars and of each generator.
  std::vector<Vec> phi_beta(exp);
  for (int s = 0; s < exp; ++s)
    phi_beta[s] = embed(sys.normal_form(nc_mono(Monomial{}, beta[s])));
  std::vector<Vec> phi_gen(pres.ngens());
  for (int g = 0; g < pres.ngens(); ++g)
    phi_gen[g] = embed(sys.normal_form(nc_mono(Monomial{g})));
  auto phi_scalar = [&](Coef c) {
    return embed(sys.normal_form(nc_mono(Monomial{}, c)));
  };
  auto phi_word = [&](const Monomial& w) {
    Vec acc = A.one();
    for (int g : w) acc = A.mul(acc, phi_gen[g]);
    return acc;
  };

  certify(phi_scalar(1) == A.one(), "image of 1 is not the identity");
  for (int s = 0; s < exp; ++s)
    for (int t = 0; t < exp; ++t)
      certify(A.mul(phi_beta[s], phi_beta[t]) ==
                  phi_scalar(Fq.mul(beta[s], beta[t])),
              "scalar embedding is not multiplicative");
  for (int g = 0; g < pres.ngens(); ++g)
    for (int s = 0; s < exp; ++s)
      certify(A.mul(phi_gen[g], phi_beta[s]) ==
                  A.mul(phi_scalar(Fq.frobenius_pow(beta[s], pres.twist[g])),
                        phi_gen[g]),
              "generator/scalar twist does not hold");
  for (int i = 0; i < nw; ++i)
    certify(phi_word(words[i]) == A.e(i * exp),
            "basis word '" + detail::word_name(pres, words[i]) +
                "' does not reconstruct");
  for (const NCPoly& rel : pres.relations) {
    Vec acc = A.zero();
    for (const auto& [mono, c] : rel)
      acc = A.add(acc, A.mul(phi_scalar(c), phi_word(mono)));
    certify(linalg::is_zero(acc), "a defining relation does not vanish");
  }
  {
    DenseEngine eng(A);
    for (int g = 0; g < pres.ngens(); ++g) {
      if (!pres.sqzero[g]) continue;
      std::vector<Vec> rows;
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          rows.push_back(A.mul(A.mul(A.e(i), phi_gen[g]), A.e(j)));
      auto ideal = eng.span(std::move(rows));
      certify(eng.sub_dim(eng.product_span(ideal, ideal)) == 0,
              "square-zero ideal for generator '" + pres.gens[g] +
                  "' has nonzero square");
    }
  }

  return BuiltRing{std::move(A), pres.field, exp, words,
                   sys.rules(), pres.name};
}

}  // namespace ringlab

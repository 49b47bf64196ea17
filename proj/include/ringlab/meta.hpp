#pragma once
// Cross-checks between the computed ring data and the general theory of
// finite rings.  Each check takes a collection of rings with their property
// reports, decides on which rings its hypotheses hold, and verifies the
// predicted conclusion there.  A failure in any check means either a bug in
// the checkers or a genuinely false theorem, so the test suite treats every
// failure as fatal.
//
// Encoded facts:
//   - reversible  <=>  reflexive and semicommutative
//   - symmetric => reversible => semicommutative => abelian => NI (finite),
//     one-sided duo => semicommutative, right duo <=> left duo (finite)
//   - finite chain rings are duo and symmetric
//   - five local semicommutativity criteria (prime residue field):
//       (1) J^3 = 0
//       (2) d1 <= 3 and d2 = 1
//       (3) reflexive, d1 = 2 and J^4 = 0
//       (4) reflexive, d2 <= 2 and J^4 = 0
//       (5) reflexive, (d1,d2,d3) = (2,2,1), J^4 != 0 and J^5 = 0
//     where d_i = dim J^i/J^(i+1) over the residue field
//   - an abelian reflexive ring of order p^k, k < 8, is reversible
//   - chain rings: products of radical elements land in the radical layer
//     given by the sum of the factors' layers, independent of the order of
//     the factors
//   - local rings: if J^n is principal and J^(n+1) != 0 then some
//     u in J \ J^2 generates every J^l, l >= n, via u^l
//   - local rings with prime residue field: semicommutative iff every
//     zero product ab = 0 with a, b in J satisfies aJb = 0
//   - local reflexive rings with prime residue field and J^4 = 0: for
//     a, b, c in J, abc = 0 iff bca = 0 iff cab = 0

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <ringlab/props.hpp>

namespace ringlab::meta {

struct Subject {
  std::string name;
  FiniteAlgebra algebra;
  PropertyReport report;
};

struct CheckResult {
  std::string name;
  int applicable = 0;  // (ring, instance) pairs where the hypotheses held
  std::vector<std::string> failures;
  std::vector<std::string> notes;  // skipped rings, capped scans, ...
  bool ok() const { return failures.empty(); }
};

template <typename NamedRings>
std::vector<Subject> make_subjects(const NamedRings& rings,
                                   const CheckOptions& opts = {}) {
  std::vector<Subject> out;
  for (const auto& nr : rings)
    out.push_back(
        {nr.name, nr.algebra, property_report(nr.algebra, opts, nr.name)});
  return out;
}

namespace meta_detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// d_i = dim J^i/J^(i+1) (1-indexed), zero beyond the last nonzero layer.
inline int layer_dim(const PropertyReport& rep, int i) {
  const auto& d = rep.filt.dims;
  return (i >= 1 && i <= (int)d.size()) ? d[i - 1] : 0;
}

inline bool verdict_true(const PropertyReport& rep, const char* key) {
  return rep.properties.at(key).is_true();
}
inline bool verdict_false(const PropertyReport& rep, const char* key) {
  return rep.properties.at(key).is_false();
}
inline bool verdict_known(const PropertyReport& rep, const char* key) {
  return rep.properties.at(key).verdict != Verdict::Skipped;
}

// |J| = q^dim, saturating at 2^62 to stay overflow-safe.
inline std::uint64_t radical_size(const PropertyReport& rep) {
  std::uint64_t n = 1;
  for (size_t i = 0; i < rep.filt.radical.size(); ++i) {
    if (n > (std::uint64_t(1) << 62) / rep.field_q)
      return std::uint64_t(1) << 62;
    n *= rep.field_q;
  }
  return n;
}

// order = p^k for prime p; returns k (every finite algebra over a finite
// field has prime-power order).
inline int prime_power_exponent(std::uint64_t order) {
  for (std::uint64_t p = 2; p * p <= order || p <= order; ++p) {
    if (order % p) continue;
    int k = 0;
    std::uint64_t m = order;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    return m == 1 ? k : -1;
  }
  return -1;
}

// Engine-side helpers -------------------------------------------------------

// Echelon spans of J^1..J^K on the given engine.
template <typename Engine>
std::vector<typename Engine::Sub> power_spans(const Engine& eng,
                                              const Filtration& filt) {
  std::vector<typename Engine::Sub> out;
  for (const auto& rows : filt.powers) {
    std::vector<typename Engine::E> basis;
    for (const Vec& v : rows) basis.push_back(eng.from_vec(v));
    out.push_back(eng.span(std::move(basis)));
  }
  return out;
}

// Deepest i >= 1 with x in J^i; 0 when x is outside J, K+2 for x = 0.
template <typename Engine>
int layer_of(const Engine& eng,
             const std::vector<typename Engine::Sub>& powers,
             const typename Engine::E& x) {
  if (eng.is_zero(x)) return (int)powers.size() + 2;
  int best = 0;
  for (size_t i = 0; i < powers.size(); ++i)
    if (eng.contains(powers[i], x)) best = (int)i + 1;
  return best;
}

// Two-sided ideal generated by x: closure of span{x} under basis products.
template <typename Engine>
typename Engine::Sub ideal_of(const Engine& eng, const typename Engine::E& x) {
  auto s = eng.span(std::vector<typename Engine::E>{x});
  for (;;) {
    std::vector<typename Engine::E> next;
    for (int t = 0; t < eng.sub_dim(s); ++t) next.push_back(eng.sub_basis(s, t));
    const int before = eng.sub_dim(s);
    std::vector<typename Engine::E> gen = next;
    for (const auto& b : next)
      for (int j = 0; j < eng.dim(); ++j) {
        gen.push_back(eng.mul(eng.unit(j), b));
        gen.push_back(eng.mul(b, eng.unit(j)));
      }
    s = eng.span(std::move(gen));
    if (eng.sub_dim(s) == before) return s;
  }
}

}  // namespace meta_detail

// ---------------------------------------------------------------------------
// (a) reversible <=> reflexive and semicommutative
// ---------------------------------------------------------------------------
inline CheckResult check_reversible_equivalence(
    const std::vector<Subject>& subjects) {
  CheckResult res;
  res.name = "reversible equals reflexive plus semicommutative";
  for (const auto& s : subjects) {
    const auto& rep = s.report;
    if (!meta_detail::verdict_known(rep, "reversible") ||
        !meta_detail::verdict_known(rep, "reflexive") ||
        !meta_detail::verdict_known(rep, "semicommutative")) {
      res.notes.push_back(s.name + ": skipped verdicts");
      continue;
    }
    ++res.applicable;
    const bool lhs = meta_detail::verdict_true(rep, "reversible");
    const bool rhs = meta_detail::verdict_true(rep, "reflexive") &&
                     meta_detail::verdict_true(rep, "semicommutative");
    if (lhs != rhs)
      res.failures.push_back(s.name + ": reversible=" +
                             to_string(rep.properties.at("reversible").verdict) +
                             " but reflexive&semicommutative=" +
                             (rhs ? "true" : "false"));
  }
  return res;
}

// ---------------------------------------------------------------------------
// (b) the implication lattice
// ---------------------------------------------------------------------------
inline CheckResult check_implication_lattice(
    const std::vector<Subject>& subjects) {
  CheckResult res;
  res.name = "property implication lattice";
  const std::pair<const char*, const char*> arrows[] = {
      {"symmetric", "reversible"},      {"reversible", "semicommutative"},
      {"semicommutative", "abelian"},   {"abelian", "NI"},
      {"duo_right", "semicommutative"}, {"duo_left", "semicommutative"},
  };
  for (const auto& s : subjects) {
    const auto& rep = s.report;
    for (const auto& [from, to] : arrows) {
      if (!meta_detail::verdict_known(rep, from) ||
          !meta_detail::verdict_known(rep, to))
        continue;
      ++res.applicable;
      if (meta_detail::verdict_true(rep, from) &&
          !meta_detail::verdict_true(rep, to))
        res.failures.push_back(s.name + ": " + from + " holds but " + to +
                               " fails");
    }
    // For finite rings the one-sided duo conditions coincide.
    if (meta_detail::verdict_known(rep, "duo_right") &&
        meta_detail::verdict_known(rep, "duo_left")) {
      ++res.applicable;
      if (meta_detail::verdict_true(rep, "duo_right") !=
          meta_detail::verdict_true(rep, "duo_left"))
        res.failures.push_back(s.name +
                               ": right duo and left duo verdicts differ");
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// (c) finite chain rings are duo and symmetric
// ---------------------------------------------------------------------------
inline CheckResult check_chain_duo_symmetric(
    const std::vector<Subject>& subjects) {
  CheckResult res;
  res.name = "chain rings are duo and symmetric";
  for (const auto& s : subjects) {
    if (!s.report.chain) continue;
    ++res.applicable;
    if (!meta_detail::verdict_true(s.report, "duo"))
      res.failures.push_back(s.name + ": chain ring is not duo");
    if (!meta_detail::verdict_known(s.report, "symmetric"))
      res.notes.push_back(s.name + ": symmetric verdict skipped");
    else if (!meta_detail::verdict_true(s.report, "symmetric"))
      res.failures.push_back(s.name + ": chain ring is not symmetric");
  }
  return res;
}

// ---------------------------------------------------------------------------
// (d) the five local semicommutativity criteria (prime residue field)
// ---------------------------------------------------------------------------
inline CheckResult check_local_sc_criteria(
    const std::vector<Subject>& subjects) {
  CheckResult res;
  res.name = "local semicommutativity criteria";
  for (const auto& s : subjects) {
    const auto& rep = s.report;
    if (!rep.filt.local || !meta_detail::is_prime(rep.filt.residue_field_size))
      continue;
    const int nilp = rep.filt.nilpotency_index;
    const int d1 = meta_detail::layer_dim(rep, 1);
    const int d2 = meta_detail::layer_dim(rep, 2);
    const int d3 = meta_detail::layer_dim(rep, 3);
    const bool refl = meta_detail::verdict_true(rep, "reflexive");
    std::vector<std::string> hit;
    if (nilp <= 3) hit.push_back("J^3 = 0");
    if (d1 <= 3 && d2 == 1) hit.push_back("d1 <= 3, d2 = 1");
    if (refl && d1 == 2 && nilp <= 4) hit.push_back("reflexive, d1 = 2, J^4 = 0");
    if (refl && d2 <= 2 && nilp <= 4)
      hit.push_back("reflexive, d2 <= 2, J^4 = 0");
    if (refl && d1 == 2 && d2 == 2 && d3 == 1 && nilp == 5)
      hit.push_back("reflexive, (2,2,1,...), J^4 != 0, J^5 = 0");
    for (const auto& h : hit) {
      ++res.applicable;
      if (!meta_detail::verdict_true(rep, "semicommutative"))
        res.failures.push_back(s.name + ": criterion [" + h +
                               "] holds but the ring is not semicommutative");
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// (e) abelian reflexive rings of order p^k, k < 8, are reversible
// ---------------------------------------------------------------------------
inline CheckResult check_small_order_reversibility(
    const std::vector<Subject>& subjects) {
  CheckResult res;
  res.name = "small abelian reflexive rings are reversible";
  for (const auto& s : subjects) {
    const auto& rep = s.report;
    const int k = meta_detail::prime_power_exponent(rep.order);
    if (k < 0 || k >= 8) continue;
    if (!meta_detail::verdict_true(rep, "abelian") ||
        !meta_detail::verdict_true(rep, "reflexive"))
      continue;
    ++res.applicable;
    if (!meta_detail::verdict_true(rep, "reversible"))
      res.failures.push_back(s.name + ": abelian reflexive of order p^" +
                             std::to_string(k) + " but not reversible");
  }
  return res;
}

// ---------------------------------------------------------------------------
// (f1) chain rings: radical-layer arithmetic of products is permutation
// invariant, and products of layers a, b land in layer a + b.
// ---------------------------------------------------------------------------
inline CheckResult check_chain_layer_permutation(
    const std::vector<Subject>& subjects) {
  CheckResult res;
  res.name = "chain-ring product layers are permutation invariant";
  for (const auto& s : subjects) {
    if (!s.report.chain || s.report.filt.radical.empty()) continue;
    props_detail::with_engine(s.algebra, [&](const auto& eng) {
      const auto powers = meta_detail::power_spans(eng, s.report.filt);
      if (eng.sub_order(powers[0]) > 64) {
        res.notes.push_back(s.name + ": radical too large, capped");
        return 0;
      }
      ++res.applicable;
      std::vector<typename std::decay_t<decltype(eng)>::E> jelts;
      for (std::uint64_t i = 0; i < eng.sub_order(powers[0]); ++i) {
        auto x = eng.sub_element_at(powers[0], i);
        if (!eng.is_zero(x)) jelts.push_back(x);
      }
      auto layer = [&](const auto& x) {
        return meta_detail::layer_of(eng, powers, x);
      };
      const int zero_layer = (int)powers.size() + 2;
      for (const auto& x : jelts)
        for (const auto& y : jelts) {
          const int l = std::min(layer(x) + layer(y), zero_layer);
          const auto xy = eng.mul(x, y), yx = eng.mul(y, x);
          if (std::min(layer(xy), zero_layer) < l ||
              layer(xy) != layer(yx)) {
            res.failures.push_back(s.name + ": pair layer arithmetic broken");
            return 0;
          }
          for (const auto& z : jelts) {
            const int l3 = std::min(l + layer(z), zero_layer);
            const auto p = eng.mul(xy, z);
            const int lp = layer(p);
            if (std::min(lp, zero_layer) < l3 ||
                lp != layer(eng.mul(eng.mul(x, z), y)) ||
                lp != layer(eng.mul(yx, z)) ||
                lp != layer(eng.mul(eng.mul(y, z), x)) ||
                lp != layer(eng.mul(eng.mul(z, x), y)) ||
                lp != layer(eng.mul(eng.mul(z, y), x))) {
              res.failures.push_back(s.name +
                                     ": triple layer arithmetic broken");
              return 0;
            }
          }
        }
      return 0;
    });
  }
  return res;
}

// ---------------------------------------------------------------------------
// (f2) local rings: a principal power J^n with J^(n+1) != 0 forces a single
// u in J \ J^2 with J^l = <u^l> for every l >= n.
// ---------------------------------------------------------------------------
inline CheckResult check_principal_power_tail(
    const std::vector<Subject>& subjects) {
  CheckResult res;
  res.name = "principal radical powers extend to a tail generator";
  for (const auto& s : subjects) {
    const auto& rep = s.report;
    if (!rep.filt.local || rep.filt.radical.empty()) continue;
    const int K = (int)rep.filt.powers.size();  // J^K != 0, J^(K+1) = 0
    int n = 0;
    for (int i = 1; i < K; ++i)  // need J^(n+1) != 0, i.e. n < K
      if (meta_detail::layer_dim(rep, i) == 1) {
        n = i;
        break;
      }
    if (n == 0) continue;
    if (rep.order > 4096) {
      res.notes.push_back(s.name + ": too large, capped");
      continue;
    }
    ++res.applicable;
    const bool found = props_detail::with_engine(s.algebra, [&](const auto& eng) {
      const auto powers = meta_detail::power_spans(eng, rep.filt);
      for (std::uint64_t i = 0; i < eng.sub_order(powers[0]); ++i) {
        const auto u = eng.sub_element_at(powers[0], i);
        if (eng.is_zero(u)) continue;
        if (powers.size() >= 2 && eng.contains(powers[1], u)) continue;
        bool all = true;
        auto ul = u;
        for (int l = 2; l <= n; ++l) ul = eng.mul(ul, u);  // ul = u^n
        for (int l = n; l <= K && all; ++l) {
          all = eng.sub_equal(meta_detail::ideal_of(eng, ul), powers[l - 1]);
          ul = eng.mul(ul, u);
        }
        if (all) return true;
      }
      return false;
    });
    if (!found)
      res.failures.push_back(s.name + ": no tail generator found from J^" +
                             std::to_string(n));
  }
  return res;
}

// ---------------------------------------------------------------------------
// (f3) local + prime residue: semicommutative iff zero products from the
// radical satisfy aJb = 0.
// ---------------------------------------------------------------------------
inline CheckResult check_sc_radical_pair_criterion(
    const std::vector<Subject>& subjects) {
  CheckResult res;
  res.name = "semicommutativity via radical pair products";
  for (const auto& s : subjects) {
    const auto& rep = s.report;
    if (!rep.filt.local || !meta_detail::is_prime(rep.filt.residue_field_size))
      continue;
    if (!meta_detail::verdict_known(rep, "semicommutative")) continue;
    if (meta_detail::radical_size(rep) > 4096) {
      res.notes.push_back(s.name + ": radical too large, capped");
      continue;
    }
    ++res.applicable;
    const bool criterion = props_detail::with_engine(s.algebra, [&](const auto& eng) {
      std::vector<typename std::decay_t<decltype(eng)>::E> jbasis;
      for (const Vec& v : rep.filt.radical) jbasis.push_back(eng.from_vec(v));
      const auto jspan = eng.span(jbasis);
      std::vector<typename std::decay_t<decltype(eng)>::E> jel;
      for (std::uint64_t i = 0; i < eng.sub_order(jspan); ++i)
        jel.push_back(eng.sub_element_at(jspan, i));
      for (const auto& x : jel)
        for (const auto& y : jel) {
          if (!eng.is_zero(eng.mul(x, y))) continue;
          for (const auto& r : jbasis)
            if (!eng.is_zero(eng.mul(eng.mul(x, r), y))) return false;
        }
      return true;
    });
    if (criterion != meta_detail::verdict_true(rep, "semicommutative"))
      res.failures.push_back(
          s.name + ": radical pair criterion says " +
          (criterion ? "semicommutative" : "not semicommutative") +
          " but the checker disagrees");
  }
  return res;
}

// ---------------------------------------------------------------------------
// (f4) local reflexive + prime residue + J^4 = 0: zero triple products from
// the radical are invariant under cyclic rotation.
// ---------------------------------------------------------------------------
inline CheckResult check_cyclic_triple_products(
    const std::vector<Subject>& subjects) {
  CheckResult res;
  res.name = "cyclic invariance of zero triples";
  for (const auto& s : subjects) {
    const auto& rep = s.report;
    if (!rep.filt.local || !meta_detail::is_prime(rep.filt.residue_field_size))
      continue;
    if (rep.filt.nilpotency_index > 4) continue;
    if (!meta_detail::verdict_true(rep, "reflexive")) continue;
    if (meta_detail::radical_size(rep) > 512) {
      res.notes.push_back(s.name + ": radical too large, capped");
      continue;
    }
    ++res.applicable;
    const bool ok = props_detail::with_engine(s.algebra, [&](const auto& eng) {
      std::vector<typename std::decay_t<decltype(eng)>::E> jbasis;
      for (const Vec& v : rep.filt.radical) jbasis.push_back(eng.from_vec(v));
      const auto jspan = eng.span(jbasis);
      std::vector<typename std::decay_t<decltype(eng)>::E> jel;
      for (std::uint64_t i = 0; i < eng.sub_order(jspan); ++i)
        jel.push_back(eng.sub_element_at(jspan, i));
      for (const auto& x : jel)
        for (const auto& y : jel) {
          const auto xy = eng.mul(x, y);
          for (const auto& z : jel) {
            const bool abc = eng.is_zero(eng.mul(xy, z));
            const bool bca = eng.is_zero(eng.mul(eng.mul(y, z), x));
            if (abc != bca) return false;
            const bool cab = eng.is_zero(eng.mul(eng.mul(z, x), y));
            if (abc != cab) return false;
          }
        }
      return true;
    });
    if (!ok)
      res.failures.push_back(s.name +
                             ": zero triple not cyclically invariant");
  }
  return res;
}

// ---------------------------------------------------------------------------
// (g) hypothesis-necessity exhibits: specific rings that satisfy all but one
// hypothesis of a criterion and violate its conclusion.
// ---------------------------------------------------------------------------
inline CheckResult check_hypothesis_necessity(
    const std::vector<Subject>& subjects) {
  CheckResult res;
  res.name = "criterion hypotheses are not redundant";
  auto find = [&](const std::string& n) -> const Subject* {
    for (const auto& s : subjects)
      if (s.name == n) return &s;
    return nullptr;
  };
  auto expect = [&](const char* ring, bool cond, const char* what) {
    ++res.applicable;
    if (!cond)
      res.failures.push_back(std::string(ring) + ": expected " + what);
  };
  if (const Subject* s = find("twogen16")) {
    // sc conclusion of the J^3 = 0 criterion cannot be upgraded to reflexive
    expect("twogen16",
           s->report.filt.local && s->report.filt.nilpotency_index <= 3 &&
               meta_detail::verdict_true(s->report, "semicommutative") &&
               meta_detail::verdict_false(s->report, "reflexive"),
           "local, J^3 = 0, semicommutative yet nonreflexive");
  }
  if (const Subject* s = find("twogen32")) {
    // the d1 <= 3, d2 = 1 criterion cannot conclude reversible
    expect("twogen32",
           s->report.filt.local && meta_detail::layer_dim(s->report, 1) <= 3 &&
               meta_detail::layer_dim(s->report, 2) == 1 &&
               meta_detail::verdict_true(s->report, "semicommutative") &&
               meta_detail::verdict_false(s->report, "reversible"),
           "local, d1 <= 3, d2 = 1, semicommutative yet nonreversible");
  }
  if (const Subject* s = find("twogen64")) {
    // reflexivity is necessary in the J^4 = 0 criteria
    expect("twogen64",
           s->report.filt.local && s->report.filt.nilpotency_index <= 4 &&
               meta_detail::layer_dim(s->report, 1) == 2 &&
               meta_detail::layer_dim(s->report, 2) <= 2 &&
               meta_detail::verdict_false(s->report, "reflexive") &&
               meta_detail::verdict_false(s->report, "semicommutative"),
           "all J^4 = 0 criterion hypotheses except reflexivity, yet "
           "nonsemicommutative");
  }
  for (const char* n : {"skew-square", "skew-anticomm"}) {
    if (const Subject* s = find(n)) {
      // primality of the residue field is necessary in the J^3 = 0 criterion
      expect(n,
             s->report.filt.local && s->report.filt.nilpotency_index <= 3 &&
                 !meta_detail::is_prime(s->report.filt.residue_field_size) &&
                 meta_detail::verdict_false(s->report, "semicommutative"),
             "local, J^3 = 0, nonprime residue field, nonsemicommutative");
    }
  }
  if (const Subject* s = find("f2d8")) {
    // the order bound p^8 in the reversibility theorem is attained
    expect("f2d8",
           s->report.order == 256 &&
               meta_detail::verdict_true(s->report, "abelian") &&
               meta_detail::verdict_true(s->report, "reflexive") &&
               meta_detail::verdict_false(s->report, "semicommutative"),
           "abelian reflexive nonsemicommutative of order 2^8");
  }
  return res;
}

// ---------------------------------------------------------------------------
inline std::vector<CheckResult> run_all(const std::vector<Subject>& subjects) {
  if (subjects.empty()) fail(Errc::Internal, "meta suite needs rings");
  std::vector<CheckResult> out;
  out.push_back(check_reversible_equivalence(subjects));
  out.push_back(check_implication_lattice(subjects));
  out.push_back(check_chain_duo_symmetric(subjects));
  out.push_back(check_local_sc_criteria(subjects));
  out.push_back(check_small_order_reversibility(subjects));
  out.push_back(check_chain_layer_permutation(subjects));
  out.push_back(check_principal_power_tail(subjects));
  out.push_back(check_sc_radical_pair_criterion(subjects));
  out.push_back(check_cyclic_triple_products(subjects));
  out.push_back(check_hypothesis_necessity(subjects));
  return out;
}

}  // namespace ringlab::meta

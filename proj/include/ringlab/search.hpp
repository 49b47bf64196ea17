#pragma once
// Bounded exhaustive search over presented F2-algebras.  A SearchConfig
// declares a *family*: optional seed rings from the bundled corpus followed
// by every subset of a relation-atom pool (monomial words of degree 1..3 and
// two-term degree-3 sums) over 1..3 generators.  The stream enumerates the
// family in a fixed order, skipping presentations whose rewriting system is
// not finite and rings above the order cap; find_minimal() scans the stream
// for the smallest ring order satisfying a property predicate.
//
// Claims produced here are always relative to the declared family: the
// enumeration covers the family exhaustively, nothing else.  Hits are
// deduplicated only at the end, by a cheap invariant fingerprint (order,
// radical layer dimensions, property vector, unit-order spectrum); the
// fingerprint groups rings, it does not prove isomorphism.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <ringlab/corpus.hpp>
#include <ringlab/props.hpp>

namespace ringlab::search {

// One conjunct of the predicate: the named property must have this verdict.
struct PropertyWant {
  std::string property;
  bool value = true;
  bool operator==(const PropertyWant&) const = default;
};

struct SearchConfig {
  std::string family = "family";

  // Grammar: generators named u, v, w over F2.
  int generators = 3;        // 1..3
  bool sqzero_all = true;    // every word repeating a generator is zero
  bool deg1_monomials = false;
  bool deg2_monomials = false;
  bool deg3_monomials = false;
  int max_binomials = 0;     // subset size cap for degree-3 two-term atoms
  int maxdeg = 8;            // completion degree bound

  // When nonempty, replaces the grammar-derived monomial/binomial pool.
  std::vector<NCPoly> atom_pool;
  // Enumerate only the full atom set instead of all subsets.
  bool all_atoms = false;

  // Bundled corpus rings prepended to the stream (by name).
  std::vector<std::string> seeds;

  std::uint64_t max_order = 256;  // rings above this are skipped (counted)

  std::vector<PropertyWant> predicate;  // conjunction; empty accepts all
  std::size_t result_cap = 64;
  double time_budget_secs = 1500.0;
};

namespace search_detail {

inline const std::vector<std::string>& known_properties() {
  static const std::vector<std::string> names = {
      "reversible", "symmetric", "semicommutative", "reflexive", "abelian",
      "duo",        "duo_right", "duo_left",        "NI",        "local",
      "chain"};
  return names;
}

inline bool property_known(const std::string& n) {
  for (const auto& k : known_properties())
    if (k == n) return true;
  return false;
}

// Evaluate one predicate conjunct.  Skipped verdicts satisfy nothing.
inline bool property_is(const FiniteAlgebra& a, const Filtration& f,
                        const std::string& name, bool want,
                        const CheckOptions& opts) {
  if (name == "local") return f.local == want;
  if (name == "chain") return is_chain(a, f) == want;
  PropertyResult r;
  if (name == "reversible") {
    r = is_reversible(a, opts, &f);
  } else if (name == "symmetric") {
    r = is_symmetric(a, opts, &f);
  } else if (name == "semicommutative") {
    r = is_semicommutative(a, opts, &f);
  } else if (name == "reflexive") {
    r = is_reflexive(a, opts, &f);
  } else if (name == "abelian") {
    r = is_abelian(a, opts);
  } else if (name == "duo" || name == "duo_right") {
    r = is_duo(a, true, opts, &f);
    if (name == "duo" && r.is_true()) r = is_duo(a, false, opts, &f);
  } else if (name == "duo_left") {
    r = is_duo(a, false, opts, &f);
  } else if (name == "NI") {
    r = is_NI(a, opts);
  } else {
    fail(Errc::Unsupported, "no property checker named '" + name + "'");
  }
  return r.verdict == (want ? Verdict::True : Verdict::False);
}

}  // namespace search_detail

// ---------------------------------------------------------------------------
// Invariant fingerprint
// ---------------------------------------------------------------------------

struct Fingerprint {
  std::uint64_t order = 0;
  std::vector<int> dims;  // radical layer dimensions over the base field
  std::string property_vector;
  std::vector<std::uint64_t> unit_orders;  // distinct, ascending

  bool operator==(const Fingerprint&) const = default;

  std::string text() const {
    std::string s = "order=" + std::to_string(order) + ";dims=";
    for (size_t i = 0; i < dims.size(); ++i)
      s += (i ? "," : "") + std::to_string(dims[i]);
    s += ";props=" + property_vector + ";units=";
    for (size_t i = 0; i < unit_orders.size(); ++i)
      s += (i ? "," : "") + std::to_string(unit_orders[i]);
    return s;
  }
};

// Distinct multiplicative orders among the units.
inline std::vector<std::uint64_t> unit_order_spectrum(const FiniteAlgebra& a) {
  return props_detail::with_engine(a, [&](const auto& eng) {
    std::set<std::uint64_t> orders;
    for (std::uint64_t i = 0; i < eng.order(); ++i) {
      const auto x = eng.at(i);
      if (!radical_detail::is_unit(eng, x)) continue;
      auto y = x;
      std::uint64_t k = 1;
      while (!eng.eq(y, eng.one())) {
        y = eng.mul(y, x);
        if (++k > eng.order())
          fail(Errc::Internal, "unit order exceeded the ring order");
      }
      orders.insert(k);
    }
    return std::vector<std::uint64_t>(orders.begin(), orders.end());
  });
}

inline Fingerprint fingerprint(const PropertyReport& rep,
                               std::vector<std::uint64_t> unit_orders) {
  Fingerprint fp;
  fp.order = rep.order;
  fp.dims = rep.filt.dims_base;
  for (const auto& [name, res] : rep.properties) {
    if (!fp.property_vector.empty()) fp.property_vector += ",";
    fp.property_vector += name;
    fp.property_vector += res.verdict == Verdict::True    ? "=T"
                          : res.verdict == Verdict::False ? "=F"
                                                          : "=S";
  }
  fp.unit_orders = std::move(unit_orders);
  return fp;
}

// ---------------------------------------------------------------------------
// Family enumeration
// ---------------------------------------------------------------------------

struct EnumStats {
  std::uint64_t enumerated = 0;        // stream positions consumed
  std::uint64_t built = 0;             // rings delivered
  std::uint64_t skipped_infinite = 0;  // completion found no finite basis
  std::uint64_t skipped_large = 0;     // order above the cap
  std::map<int, std::uint64_t> dim_census;  // dimension -> delivered count
};

class FamilyStream {
 public:
  struct Item {
    std::uint64_t index = 0;
    std::string label;
    FiniteAlgebra algebra;
    std::optional<Presentation> pres;  // absent for seed rings
  };

  explicit FamilyStream(SearchConfig cfg, std::uint64_t start = 0)
      : cfg_(std::move(cfg)) {
    validate();
    build_pool();
    resolve_seeds();
    pos_ = start;
  }

  const SearchConfig& config() const { return cfg_; }
  const EnumStats& stats() const { return stats_; }

  std::uint64_t total() const { return seeds_.size() + subsets_; }

  // The i-th presentation of the grammar part (i in [0, subsets())).
  std::uint64_t subsets() const { return subsets_; }
  Presentation presentation_at(std::uint64_t i) const {
    Presentation p;
    p.field = GF2();
    static const char* names[] = {"u", "v", "w"};
    for (int g = 0; g < cfg_.generators; ++g)
      p.add_gen(names[g], 0, cfg_.sqzero_all);
    p.degree_bound = cfg_.maxdeg;
    if (cfg_.all_atoms) {
      for (const NCPoly& r : mono_pool_) p.relations.push_back(r);
      for (const NCPoly& r : binom_pool_) p.relations.push_back(r);
      return p;
    }
    const std::uint64_t mask = i / binom_subsets_;
    std::uint64_t b = i % binom_subsets_;
    for (size_t m = 0; m < mono_pool_.size(); ++m)
      if (mask >> m & 1) p.relations.push_back(mono_pool_[m]);
    if (b > 0) {
      const std::uint64_t nb = binom_pool_.size();
      if (b <= nb) {
        p.relations.push_back(binom_pool_[b - 1]);
      } else {
        std::uint64_t t = b - 1 - nb;  // lexicographic pair (x, y), x < y
        std::uint64_t x = 0;
        while (t >= nb - 1 - x) {
          t -= nb - 1 - x;
          ++x;
        }
        p.relations.push_back(binom_pool_[x]);
        p.relations.push_back(binom_pool_[x + 1 + t]);
      }
    }
    return p;
  }

  // Next ring in the family; skips unfinishable and oversized entries.
  std::optional<Item> next() {
    while (pos_ < total()) {
      const std::uint64_t i = pos_++;
      ++stats_.enumerated;
      if (i < seeds_.size()) {
        const corpus::NamedRing& s = seeds_[i];
        if (s.algebra.order() > cfg_.max_order) {
          ++stats_.skipped_large;
          continue;
        }
        ++stats_.built;
        ++stats_.dim_census[s.algebra.dim()];
        return Item{i, "seed:" + s.name, s.algebra, std::nullopt};
      }
      Presentation p = presentation_at(i - seeds_.size());
      p.name = cfg_.family + "#" + std::to_string(i);
      try {
        BuiltRing r = build_algebra(p);
        if (r.algebra.order() > cfg_.max_order) {
          ++stats_.skipped_large;
          continue;
        }
        ++stats_.built;
        ++stats_.dim_census[r.algebra.dim()];
        return Item{i, p.name, std::move(r.algebra), std::move(p)};
      } catch (const Error& e) {
        if (e.code() == Errc::BasisNotFinite) {
          ++stats_.skipped_infinite;
          continue;
        }
        throw;
      }
    }
    return std::nullopt;
  }

 private:
  void validate() const {
    if (cfg_.generators < 1 || cfg_.generators > 3)
      fail(Errc::Unsupported, "searches support 1..3 generators");
    if (cfg_.max_binomials < 0 || cfg_.max_binomials > 2)
      fail(Errc::Unsupported, "at most 2 binomial relations are supported");
    if (cfg_.max_binomials > 0 && !cfg_.sqzero_all && cfg_.atom_pool.empty())
      fail(Errc::Unsupported,
           "binomial atoms require the square-zero markers");
    for (const auto& w : cfg_.predicate)
      if (!search_detail::property_known(w.property))
        fail(Errc::Unsupported,
             "no property checker named '" + w.property + "'");
  }

  // Words of the given length with no repeated letter (strong square-zero
  // kills anything else), in lexicographic order.
  void squarefree_words(int len, std::vector<Monomial>& out) const {
    Monomial w;
    squarefree_rec(len, w, out);
  }
  void squarefree_rec(int len, Monomial& w, std::vector<Monomial>& out) const {
    if (int(w.size()) == len) {
      out.push_back(w);
      return;
    }
    for (int g = 0; g < cfg_.generators; ++g) {
      bool used = false;
      if (cfg_.sqzero_all)
        for (int h : w) used |= (h == g);
      if (used) continue;
      w.push_back(g);
      squarefree_rec(len, w, out);
      w.pop_back();
    }
  }

  void build_pool() {
    const FieldSpec& F = *GF2();
    if (!cfg_.atom_pool.empty()) {
      mono_pool_ = cfg_.atom_pool;
    } else {
      std::vector<Monomial> words;
      if (cfg_.deg1_monomials) squarefree_words(1, words);
      if (cfg_.deg2_monomials) squarefree_words(2, words);
      if (cfg_.deg3_monomials) squarefree_words(3, words);
      for (const Monomial& w : words) {
        NCPoly p;
        nc_add_term(p, w, 1, F);
        mono_pool_.push_back(std::move(p));
      }
      if (cfg_.max_binomials > 0) {
        std::vector<Monomial> cubes;
        squarefree_words(3, cubes);
        for (size_t x = 0; x < cubes.size(); ++x)
          for (size_t y = x + 1; y < cubes.size(); ++y) {
            NCPoly p;
            nc_add_term(p, cubes[x], 1, F);
            nc_add_term(p, cubes[y], 1, F);
            binom_pool_.push_back(std::move(p));
          }
      }
    }
    if (mono_pool_.size() > 24)
      fail(Errc::Unsupported, "atom pool too large to enumerate");

    binom_subsets_ = 1;
    const std::uint64_t nb = binom_pool_.size();
    if (cfg_.max_binomials >= 1) binom_subsets_ += nb;
    if (cfg_.max_binomials >= 2 && nb >= 2)
      binom_subsets_ += nb * (nb - 1) / 2;

    subsets_ = cfg_.all_atoms
                   ? 1
                   : (std::uint64_t(1) << mono_pool_.size()) * binom_subsets_;
    if (subsets_ > 1 && cfg_.max_order > 1024)
      fail(Errc::Unsupported,
           "exhaustive grammars are limited to order <= 1024");
  }

  void resolve_seeds() {
    if (cfg_.seeds.empty()) return;
    auto rings = corpus::corpus(true);
    for (const std::string& name : cfg_.seeds) {
      const corpus::NamedRing* found = nullptr;
      for (const auto& r : rings)
        if (r.name == name) found = &r;
      if (!found)
        fail(Errc::UnknownName, "no bundled ring named '" + name + "'");
      seeds_.push_back(*found);
    }
  }

  SearchConfig cfg_;
  std::vector<NCPoly> mono_pool_;
  std::vector<NCPoly> binom_pool_;
  std::vector<corpus::NamedRing> seeds_;
  std::uint64_t binom_subsets_ = 1;
  std::uint64_t subsets_ = 0;
  std::uint64_t pos_ = 0;
  EnumStats stats_;
};

// ---------------------------------------------------------------------------
// Minimal-order predicate search
// ---------------------------------------------------------------------------

struct Hit {
  std::uint64_t index = 0;
  std::string label;
  std::optional<Presentation> pres;  // grammar hits carry their presentation
  std::string seed;                  // corpus name for seed hits
  PropertyReport report;
  Fingerprint fp;
};

struct SearchOutcome {
  SearchConfig config;  // the family, logged verbatim
  std::optional<std::uint64_t> min_order;
  std::vector<Hit> hits;  // at min_order, fingerprint-deduplicated, capped
  std::uint64_t raw_hits = 0;   // predicate satisfactions seen while scanning
  std::uint64_t evaluated = 0;  // rings run through the predicate
  EnumStats stats;
  bool complete = true;  // false when the time budget cut the scan short
  std::string note;
  double seconds = 0;
};

inline SearchOutcome find_minimal(const SearchConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  };
  FamilyStream stream(cfg);
  CheckOptions opts;
  SearchOutcome out;
  out.config = cfg;

  std::vector<FamilyStream::Item> raw;
  std::optional<std::uint64_t> best;
  while (auto item = stream.next()) {
    if (elapsed() > cfg.time_budget_secs) {
      out.complete = false;
      out.note = "time budget exhausted at enumeration index " +
                 std::to_string(item->index);
      break;
    }
    const std::uint64_t order = item->algebra.order();
    if (best && order > *best) continue;  // cannot improve the minimum
    ++out.evaluated;
    const Filtration f = filtration(item->algebra);
    bool ok = true;
    for (const PropertyWant& w : cfg.predicate) {
      if (!search_detail::property_is(item->algebra, f, w.property, w.value,
                                      opts)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    ++out.raw_hits;
    if (!best || order < *best) {
      best = order;
      raw.clear();
    }
    raw.push_back(std::move(*item));
  }

  out.min_order = best;
  std::set<std::string> seen;
  for (const auto& item : raw) {
    if (out.hits.size() >= cfg.result_cap) {
      out.note = "hit list truncated to the result cap";
      break;
    }
    Hit h;
    h.index = item.index;
    h.label = item.label;
    h.pres = item.pres;
    if (!item.pres && item.label.rfind("seed:", 0) == 0)
      h.seed = item.label.substr(5);
    h.report = property_report(item.algebra, opts, item.label);
    h.fp = fingerprint(h.report, unit_order_spectrum(item.algebra));
    if (!seen.insert(h.fp.text()).second) continue;  // fingerprint duplicate
    out.hits.push_back(std::move(h));
  }
  out.stats = stream.stats();
  out.seconds = elapsed();
  return out;
}

}  // namespace ringlab::search

#pragma once
// The canned verification suite: eleven fixed checks that pin the bundled
// corpus to its published/expected behavior end to end — group algebras,
// skew rings, the presented counterexamples, the meta-theorem cross-checks,
// the brute-force oracle comparison, and the minimality searches.  Each
// check returns pass/fail (or partial, when the long symmetric run was not
// requested) plus a human-readable evidence string.

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include <ringlab/brute.hpp>
#include <ringlab/corpus.hpp>
#include <ringlab/meta.hpp>
#include <ringlab/props.hpp>
#include <ringlab/search.hpp>

namespace ringlab::suite {

enum class Status { Pass, Fail, Partial };

inline const char* status_text(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Partial: return "partial";
  }
  return "?";
}

struct CriterionResult {
  int id = 0;
  std::string title;
  Status status = Status::Pass;
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  bool long_run = false;  // enables the order-8192 symmetric scan in check 7
  int threads = 1;
};

namespace suite_detail {

struct Ctx {
  std::vector<corpus::NamedRing> rings = corpus::corpus(true);
  CheckOptions copts;
  std::map<std::string, PropertyReport> cache;

  const FiniteAlgebra& ring(const std::string& n) {
    for (const auto& e : rings)
      if (e.name == n) return e.algebra;
    fail(Errc::UnknownName, "no bundled ring named '" + n + "'");
  }
  const PropertyReport& report(const std::string& n) {
    auto it = cache.find(n);
    if (it == cache.end())
      it = cache.emplace(n, property_report(ring(n), copts, n)).first;
    return it->second;
  }
};

inline void expect(CriterionResult& r, bool cond, const std::string& what) {
  if (cond) return;
  r.status = Status::Fail;
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += "FAILED: " + what;
}

inline void note(CriterionResult& r, const std::string& what) {
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += what;
}

template <typename Fn>
void run_one(std::vector<CriterionResult>& out, int id,
             const std::string& title, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  r.id = id;
  r.title = title;
  try {
    fn(r);
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    note(r, std::string("exception: ") + e.what());
  }
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  out.push_back(std::move(r));
}

}  // namespace suite_detail

inline std::vector<CriterionResult> run(const SuiteOptions& opts = {}) {
  using suite_detail::expect;
  using suite_detail::note;
  suite_detail::Ctx ctx;
  ctx.copts.threads = opts.threads;
  ctx.copts.long_run = opts.long_run;
  std::vector<CriterionResult> out;

  suite_detail::run_one(out, 1, "dihedral group algebra f2d8", [&](auto& r) {
    const PropertyReport& rep = ctx.report("f2d8");
    expect(r, rep.order == 256, "order 256");
    expect(r, rep.filt.local, "local");
    expect(r, rep.properties.at("reflexive").is_true(), "reflexive");
    expect(r, rep.properties.at("semicommutative").is_false(),
           "not semicommutative");
    // Fixed witness triple, re-evaluated from scratch.
    // Basis order: 1, r, r2, r3, s, rs, r2s, r3s.
    const FiniteAlgebra& a = ctx.ring("f2d8");
    const Vec one_rs = a.add(a.one(), a.e(5));
    const Vec r_s = a.add(a.e(1), a.e(4));
    const Vec s = a.e(4);
    expect(r, a.is_zero(a.mul(one_rs, r_s)), "(1+rs)(r+s) = 0");
    expect(r, !a.is_zero(a.mul(a.mul(one_rs, s), r_s)),
           "(1+rs)s(r+s) != 0");
    Witness w{"semicommutative", {one_rs, s, r_s}, ""};
    expect(r, check_witness(a, w), "witness re-evaluation");
    if (r.status == Status::Pass)
      note(r, "(1+rs)(r+s) = 0 but (1+rs)s(r+s) != 0");
  });

  suite_detail::run_one(out, 2, "quaternion group algebra f2q8",
                        [&](auto& r) {
    const PropertyReport& rep = ctx.report("f2q8");
    expect(r, rep.properties.at("reversible").is_true(), "reversible");
    expect(r, rep.properties.at("symmetric").is_false(), "not symmetric");
    expect(r, rep.properties.at("duo").is_true(), "duo");
    if (r.status == Status::Pass) note(r, "reversible duo, not symmetric");
  });

  suite_detail::run_one(out, 3, "skew-square ring", [&](auto& r) {
    const PropertyReport& rep = ctx.report("skew-square");
    expect(r, rep.order == 256, "order 256");
    expect(r, rep.filt.local && rep.filt.residue_field_size == 4,
           "local with residue field F4");
    expect(r, rep.properties.at("reflexive").is_true(), "reflexive");
    expect(r, rep.properties.at("semicommutative").is_false(),
           "not semicommutative");
    expect(r, rep.unit_order_max == 12, "a unit of order 12");
    if (r.status == Status::Pass)
      note(r, "local, residue F4, max unit order 12");
  });

  suite_detail::run_one(out, 4, "skew-anticomm ring", [&](auto& r) {
    const PropertyReport& rep = ctx.report("skew-anticomm");
    expect(r, rep.order == 256, "order 256");
    expect(r, rep.properties.at("reflexive").is_true(), "reflexive");
    expect(r, rep.properties.at("semicommutative").is_false(),
           "not semicommutative");
    expect(r, rep.unit_order_max == 6, "max unit order 6");
    const auto spectrum =
        search::unit_order_spectrum(ctx.ring("skew-anticomm"));
    bool has12 = false;
    for (auto v : spectrum) has12 |= (v == 12);
    expect(r, !has12, "12 absent from the unit-order spectrum");
    if (r.status == Status::Pass) {
      std::string s = "unit orders {";
      for (size_t i = 0; i < spectrum.size(); ++i)
        s += (i ? "," : "") + std::to_string(spectrum[i]);
      note(r, s + "}; 12 absent, so not isomorphic to skew-square");
    }
  });

  suite_detail::run_one(out, 5, "threegen8 ring with filtration note",
                        [&](auto& r) {
    const PropertyReport& rep = ctx.report("threegen8");
    expect(r, rep.dim == 8, "dimension 8");
    expect(r, rep.order == 256, "order 256");
    expect(r, rep.properties.at("reflexive").is_true(), "reflexive");
    expect(r, rep.properties.at("semicommutative").is_false(),
           "not semicommutative");
    const std::vector<int> dims = rep.filt.dims;
    expect(r, dims == std::vector<int>{3, 3, 1},
           "computed radical layer dims (3,3,1)");
    note(r,
         "computed layer dims (3,3,1); an external description lists "
         "(3,2,1), which is inconsistent with dim J = 7 and is flagged "
         "here, not asserted");
  });

  suite_detail::run_one(out, 6, "threegen12 ring", [&](auto& r) {
    const PropertyReport& rep = ctx.report("threegen12");
    expect(r, rep.dim == 12, "dimension 12");
    expect(r, rep.order == 4096, "order 4096");
    expect(r, rep.properties.at("reflexive").is_true(), "reflexive");
    expect(r, rep.properties.at("semicommutative").is_false(),
           "not semicommutative");
    if (r.status == Status::Pass)
      note(r, "order 4096 decided by the annihilator checkers");
  });

  suite_detail::run_one(out, 7, "threegen13 ring (long symmetric scan)",
                        [&](auto& r) {
    const PropertyReport& rep = ctx.report("threegen13");
    expect(r, rep.order == 8192, "order 8192");
    expect(r, rep.properties.at("reversible").is_true(), "reversible");
    const PropertyResult& sym = rep.properties.at("symmetric");
    if (!opts.long_run) {
      expect(r, sym.verdict == Verdict::Skipped,
             "symmetric deferred without the long flag");
      if (r.status == Status::Pass) {
        r.status = Status::Partial;
        note(r, "reversible confirmed; symmetric deferred (needs --long)");
      }
    } else {
      expect(r, sym.is_false(), "not symmetric under the long scan");
      expect(r, sym.witness.has_value(), "symmetric witness produced");
      if (r.status == Status::Pass)
        note(r, "reversible and, under the long scan, not symmetric");
    }
  });

  suite_detail::run_one(out, 8, "two-generator counterexample rings",
                        [&](auto& r) {
    const PropertyReport& a = ctx.report("twogen16");
    expect(r, a.properties.at("semicommutative").is_true(),
           "twogen16 semicommutative");
    expect(r, a.properties.at("reflexive").is_false(),
           "twogen16 not reflexive");
    expect(r, a.properties.at("duo").is_false(), "twogen16 not duo");
    const PropertyReport& b = ctx.report("twogen32");
    expect(r, b.properties.at("semicommutative").is_true(),
           "twogen32 semicommutative");
    expect(r, b.properties.at("reversible").is_false(),
           "twogen32 not reversible");
    const PropertyReport& c = ctx.report("twogen64");
    expect(r, c.properties.at("semicommutative").is_false(),
           "twogen64 not semicommutative");
    expect(r, c.properties.at("reflexive").is_false(),
           "twogen64 not reflexive");
    if (r.status == Status::Pass)
      note(r, "each ring separates exactly the intended properties");
  });

  suite_detail::run_one(out, 9, "meta-theorem cross-checks over the corpus",
                        [&](auto& r) {
    const auto subjects = meta::make_subjects(ctx.rings, ctx.copts);
    const auto results = meta::run_all(subjects);
    std::uint64_t applicable = 0;
    for (const auto& res : results) {
      applicable += res.applicable;
      expect(r, res.ok(), res.name + " has no failures");
    }
    if (r.status == Status::Pass)
      note(r, std::to_string(results.size()) + " cross-checks, " +
                  std::to_string(applicable) + " applicable instances");
  });

  suite_detail::run_one(out, 10, "brute-force oracle equivalence",
                        [&](auto& r) {
    int rings_checked = 0, comparisons = 0;
    for (const auto& e : ctx.rings) {
      if (e.algebra.order() > 256) continue;
      ++rings_checked;
      const FiniteAlgebra& a = e.algebra;
      const Filtration f = filtration(a);
      const auto agree = [&](const std::string& prop, PropertyResult fast,
                             PropertyResult plain, bool oracle) {
        ++comparisons;
        expect(r, fast.verdict == plain.verdict,
               e.name + " " + prop + ": restricted vs unrestricted");
        expect(r, fast.is_true() == oracle,
               e.name + " " + prop + ": checker vs brute force");
      };
      const auto brute_of = [&](auto&& fn) {
        return props_detail::with_engine(a, fn);
      };
      agree("reversible", is_reversible(a, ctx.copts, &f),
            is_reversible(a, ctx.copts, nullptr),
            brute_of([](const auto& g) { return brute::reversible(g); }));
      agree("symmetric", is_symmetric(a, ctx.copts, &f),
            is_symmetric(a, ctx.copts, nullptr),
            brute_of([](const auto& g) { return brute::symmetric(g); }));
      agree("semicommutative", is_semicommutative(a, ctx.copts, &f),
            is_semicommutative(a, ctx.copts, nullptr),
            brute_of([](const auto& g) { return brute::semicommutative(g); }));
      agree("reflexive", is_reflexive(a, ctx.copts, &f),
            is_reflexive(a, ctx.copts, nullptr),
            brute_of([](const auto& g) { return brute::reflexive(g); }));
      agree("abelian", is_abelian(a, ctx.copts), is_abelian(a, ctx.copts),
            brute_of([](const auto& g) { return brute::abelian(g); }));
      agree("duo_right", is_duo(a, true, ctx.copts, &f),
            is_duo(a, true, ctx.copts, nullptr),
            brute_of([](const auto& g) { return brute::duo_right(g); }));
      agree("duo_left", is_duo(a, false, ctx.copts, &f),
            is_duo(a, false, ctx.copts, nullptr),
            brute_of([](const auto& g) { return brute::duo_left(g); }));
      agree("NI", is_NI(a, ctx.copts), is_NI(a, ctx.copts),
            brute_of([](const auto& g) { return brute::NI(g); }));
    }
    if (r.status == Status::Pass)
      note(r, std::to_string(rings_checked) + " rings, " +
                  std::to_string(comparisons) +
                  " property comparisons, all in agreement");
  });

  suite_detail::run_one(out, 11, "search minimality corroboration",
                        [&](auto& r) {
    search::SearchConfig cfg;
    cfg.family = "minimality";
    cfg.generators = 3;
    cfg.sqzero_all = true;
    cfg.deg2_monomials = true;
    cfg.max_binomials = 2;
    cfg.max_order = 256;
    cfg.predicate = {{"abelian", true},
                     {"reflexive", true},
                     {"semicommutative", false}};
    const auto mins = search::find_minimal(cfg);
    expect(r, mins.complete, "family scan completed");
    expect(r, mins.min_order.has_value(), "a hit exists in the family");
    if (mins.min_order) {
      // Anything below 2^8 contradicts a proven bound: loud failure.
      expect(r, *mins.min_order >= 256,
             "ALARM: hit below order 256 at order " +
                 std::to_string(*mins.min_order));
      expect(r, *mins.min_order == 256, "minimum order 256");
    }
    search::SearchConfig nn;
    nn.family = "nonni";
    nn.generators = 2;
    nn.sqzero_all = true;
    nn.deg2_monomials = true;
    nn.seeds = {"m2-f2", "m2-f3", "u2-f2", "u3-f2", "m2+f2"};
    nn.max_order = 1024;
    nn.predicate = {{"NI", false}};
    const auto nonni = search::find_minimal(nn);
    expect(r, nonni.min_order && *nonni.min_order == 16,
           "non-NI minimum order 16");
    if (r.status == Status::Pass)
      note(r, "minimum 256 within the declared family (" +
                  std::to_string(mins.stats.enumerated) +
                  " presentations); non-NI minimum 16");
  });

  return out;
}

}  // namespace ringlab::suite

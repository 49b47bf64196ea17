// Theory cross-checks on the whole corpus: implication lattice, chain-ring
// facts, the local semicommutativity criteria, the small-order
// reversibility theorem and the supporting radical-layer lemmas.
#include <catch2/catch_amalgamated.hpp>

#include <ringlab/corpus.hpp>
#include <ringlab/meta.hpp>

using namespace ringlab;

namespace {

const std::vector<meta::Subject>& subjects() {
  static std::vector<meta::Subject> s = [] {
    CheckOptions opts;
    opts.threads = 1;
    return meta::make_subjects(corpus::corpus(true), opts);
  }();
  return s;
}

const meta::CheckResult& result_named(const std::vector<meta::CheckResult>& rs,
                                      const std::string& needle) {
  for (const auto& r : rs)
    if (r.name.find(needle) != std::string::npos) return r;
  FAIL("no meta check named like " << needle);
  std::abort();
}

}  // namespace

TEST_CASE("meta suite passes on the whole corpus") {
  const auto results = meta::run_all(subjects());
  REQUIRE(results.size() == 10);
  for (const auto& r : results) {
    INFO("check: " << r.name);
    for (const auto& f : r.failures) INFO("failure: " << f);
    CHECK(r.ok());
    CHECK(r.applicable > 0);
  }
}

TEST_CASE("meta checks cover the expected instances") {
  const auto results = meta::run_all(subjects());
  // Every corpus ring has decidable reversible/reflexive/semicommutative.
  CHECK(result_named(results, "reversible equals").applicable ==
        (int)subjects().size());
  CHECK(result_named(results, "implication lattice").applicable >= 200);
  // Eleven chain rings in the corpus.
  CHECK(result_named(results, "chain rings are duo").applicable == 11);
  CHECK(result_named(results, "semicommutativity criteria").applicable >= 15);
  // All commutative small rings plus the chains qualify for the small-order
  // reversibility theorem.
  CHECK(result_named(results, "small abelian reflexive").applicable >= 12);
  CHECK(result_named(results, "permutation invariant").applicable >= 9);
  CHECK(result_named(results, "tail generator").applicable >= 8);
  CHECK(result_named(results, "radical pair").applicable >= 15);
  CHECK(result_named(results, "cyclic invariance").applicable >= 7);
  CHECK(result_named(results, "not redundant").applicable == 6);
}

TEST_CASE("meta checks detect corrupted verdicts") {
  // Take a small slice of the corpus and flip one verdict: the equivalence
  // and lattice checks must notice.
  std::vector<meta::Subject> slice;
  for (const auto& s : subjects())
    if (s.name == "f2q8" || s.name == "chain-f2-3") slice.push_back(s);
  REQUIRE(slice.size() == 2);
  slice[0].report.properties.at("semicommutative").verdict = Verdict::False;
  CHECK_FALSE(meta::check_reversible_equivalence(slice).ok());
  CHECK_FALSE(meta::check_implication_lattice(slice).ok());

  // Flipping a chain ring's duo verdict breaks the chain check.
  slice[1].report.properties.at("duo").verdict = Verdict::False;
  CHECK_FALSE(meta::check_chain_duo_symmetric(slice).ok());
}

TEST_CASE("criteria instances resolve as expected") {
  const auto results = meta::run_all(subjects());
  // No check reports failures, and notes only mention the known capped scans
  // or gated verdicts.
  for (const auto& r : results)
    for (const auto& n : r.notes) {
      INFO("note: " << n);
      CHECK((n.find("capped") != std::string::npos ||
             n.find("skipped") != std::string::npos));
    }
}

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "ringlab/algebra.hpp"
#include "ringlab/engine.hpp"

using namespace ringlab;

namespace {

// F[x]/(x^k): basis 1, x, ..., x^{k-1}.
FiniteAlgebra truncated_poly(const Field& F, int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i)
    names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  std::vector<Vec> bp(size_t(k) * k, Vec(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i + j < k) bp[size_t(i) * k + j][i + j] = 1;
  Vec one(k, 0);
  one[0] = 1;
  return FiniteAlgebra(F, std::move(names), std::move(bp), std::move(one));
}

// 2x2 matrices over F, basis E11, E12, E21, E22 (row-major).
FiniteAlgebra mat2(const Field& F) {
  auto idx = [](int r, int c) { return r * 2 + c; };
  std::vector<std::string> names = {"E11", "E12", "E21", "E22"};
  std::vector<Vec> bp(16, Vec(4, 0));
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
          if (c == s) bp[size_t(idx(r, c)) * 4 + idx(s, t)][idx(r, t)] = 1;
  Vec one(4, 0);
  one[idx(0, 0)] = one[idx(1, 1)] = 1;
  return FiniteAlgebra(F, std::move(names), std::move(bp), std::move(one));
}

}  // namespace

TEST_CASE("truncated polynomial algebra behaves as expected") {
  const Field F3 = field_make(3);
  const auto A = truncated_poly(F3, 4);
  REQUIRE_NOTHROW(A.validate());
  REQUIRE(A.dim() == 4);
  REQUIRE(A.order() == 81);
  const Vec x = A.e(1);
  REQUIRE(A.mul(x, A.mul(x, x)) == A.e(3));
  REQUIRE(A.is_zero(A.pow(x, 4)));
  REQUIRE(A.show(A.add(A.one(), A.scale(2, x))) == "1 + 2*x");
  REQUIRE(A.show(A.zero()) == "0");

  // index_of / element_at round-trip, coordinate 0 most significant.
  for (std::uint64_t i = 0; i < A.order(); ++i)
    REQUIRE(A.index_of(A.element_at(i)) == i);
  REQUIRE(A.element_at(1) == A.e(3));
  REQUIRE(A.element_at(27) == A.e(0));
}

TEST_CASE("validate rejects broken tables") {
  const Field F2 = GF2();
  // Non-associative: e1*e1 = e1 with e1 also "absorbing" the identity wrongly.
  std::vector<Vec> bp(4, Vec(2, 0));
  bp[0] = {1, 0};  // 1*1 = 1
  bp[1] = {0, 1};  // 1*x = x
  bp[2] = {0, 1};  // x*1 = x
  bp[3] = {1, 0};  // x*x = 1  (fine: this is F2[x]/(x^2+1), associative)
  REQUIRE_NOTHROW(
      FiniteAlgebra(F2, {"1", "x"}, bp, Vec{1, 0}).validate());
  bp[3] = {1, 1};  // x*x = 1 + x  => (xx)x = x + x^2 = 1, x(xx) = x + x^2: ok
  REQUIRE_NOTHROW(
      FiniteAlgebra(F2, {"1", "x"}, bp, Vec{1, 0}).validate());
  // Break the identity instead.
  bp[1] = {1, 0};
  REQUIRE_THROWS_AS(
      FiniteAlgebra(F2, {"1", "x"}, bp, Vec{1, 0}).validate(), Error);
}

TEST_CASE("quotients by ideals") {
  const Field F2 = GF2();
  const auto A = truncated_poly(F2, 3);  // F2[x]/(x^3)
  // Ideal (x) = span{x, x^2}: quotient is the field F2.
  auto q1 = quotient_by_ideal(A, {A.e(1), A.e(2)});
  REQUIRE(q1.algebra.dim() == 1);
  REQUIRE(is_field_algebra(q1.algebra));
  REQUIRE(q1.project(A, A.add(A.one(), A.e(1))) == Vec{1});
  // Ideal (x^2): quotient is F2[x]/(x^2), not a field.
  auto q2 = quotient_by_ideal(A, {A.e(2)});
  REQUIRE(q2.algebra.dim() == 2);
  REQUIRE_NOTHROW(q2.algebra.validate());
  REQUIRE(!is_field_algebra(q2.algebra));
  // span{x} alone is not an ideal (x*x = x^2 escapes).
  REQUIRE_THROWS_AS(quotient_by_ideal(A, {A.e(1)}), Error);

  // M2(F2) modulo nothing; and its center is not an ideal.
  const auto M = mat2(F2);
  REQUIRE_NOTHROW(M.validate());
  REQUIRE_THROWS_AS(quotient_by_ideal(M, {M.one()}), Error);
}

TEST_CASE("field algebra recognizer") {
  REQUIRE(is_field_algebra(truncated_poly(GF2(), 1)));
  REQUIRE(!is_field_algebra(truncated_poly(GF2(), 2)));
  // F4 as an algebra over F2: basis {1, a} with a^2 = a + 1.
  std::vector<Vec> bp = {{1, 0}, {0, 1}, {0, 1}, {1, 1}};
  FiniteAlgebra f4(GF2(), {"1", "a"}, bp, Vec{1, 0});
  REQUIRE_NOTHROW(f4.validate());
  REQUIRE(is_field_algebra(f4));
  REQUIRE(!is_field_algebra(mat2(GF2())));
}

TEMPLATE_TEST_CASE("engines match the plain algebra operations", "",
                   BitEngine, DenseEngine) {
  const Field F2 = GF2();
  const auto M = mat2(F2);
  TestType eng(M);
  REQUIRE(eng.order() == 16);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t i = rng() % 16, j = rng() % 16;
    const Vec x = M.element_at(i), y = M.element_at(j);
    const auto ex = eng.at(i), ey = eng.at(j);
    REQUIRE(eng.to_vec(ex) == x);
    REQUIRE(eng.index_of(ex) == i);
    REQUIRE(eng.to_vec(eng.mul(ex, ey)) == M.mul(x, y));
    REQUIRE(eng.to_vec(eng.add(ex, ey)) == M.add(x, y));
  }
}

TEST_CASE("bit and dense engines agree on subspace computations") {
  const Field F2 = GF2();
  const auto M = mat2(F2);
  BitEngine be(M);
  DenseEngine de(M);
  auto same = [&](const BitEngine::Sub& bs, const DenseEngine::Sub& ds) {
    if (bs.size() != ds.size()) return false;
    for (size_t i = 0; i < bs.size(); ++i)
      if (be.to_vec(bs[i]) != ds[i]) return false;
    return true;
  };
  for (std::uint64_t i = 0; i < 16; ++i) {
    const auto eb = be.at(i);
    const auto ed = de.at(i);
    REQUIRE(same(be.rann(eb), de.rann(ed)));
    REQUIRE(same(be.lann(eb), de.lann(ed)));
    REQUIRE(same(be.right_image(eb), de.right_image(ed)));
    REQUIRE(same(be.left_image(eb), de.left_image(ed)));
    REQUIRE(same(be.joint_right_null(eb), de.joint_right_null(ed)));
    REQUIRE(same(be.joint_left_null(eb), de.joint_left_null(ed)));
  }
  // Spot-check annihilators against brute force.
  for (std::uint64_t i = 0; i < 16; ++i) {
    const auto a = be.at(i);
    const auto r = be.rann(a);
    std::uint64_t count = 0;
    for (std::uint64_t j = 0; j < 16; ++j)
      if (be.is_zero(be.mul(a, be.at(j)))) {
        ++count;
        REQUIRE(be.contains(r, be.at(j)));
      }
    REQUIRE(be.sub_order(r) == count);
  }
  // product_span(J, J) for the strictly-upper ideal of the triangular case:
  // use span{E12} inside M2; E12*E12 = 0.
  auto u = be.span({be.unit(1)});
  REQUIRE(be.sub_dim(be.product_span(u, u)) == 0);
  // Intersection: rann(E11) n lann(E11).
  auto both = be.intersect(be.rann(be.unit(0)), be.lann(be.unit(0)));
  for (std::uint64_t j = 0; j < 16; ++j) {
    const auto x = be.at(j);
    const bool in = be.is_zero(be.mul(be.unit(0), x)) &&
                    be.is_zero(be.mul(x, be.unit(0)));
    REQUIRE(be.contains(both, x) == in);
  }
}

TEST_CASE("subspace enumeration covers the span exactly once") {
  const auto M = mat2(GF2());
  BitEngine be(M);
  auto s = be.span({be.unit(0), be.unit(3)});
  REQUIRE(be.sub_order(s) == 4);
  std::vector<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 4; ++i)
    seen.push_back(be.sub_element_at(s, i));
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  REQUIRE(seen.size() == 4);

  const auto A = truncated_poly(field_make(3), 2);
  DenseEngine de(A);
  auto t = de.span({de.unit(1)});
  std::vector<Vec> elems;
  for (std::uint64_t i = 0; i < de.sub_order(t); ++i)
    elems.push_back(de.sub_element_at(t, i));
  REQUIRE(elems.size() == 3);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  REQUIRE(elems.size() == 3);
}

TEST_CASE("parallel_find_min returns the smallest hit") {
  auto hit = [](std::uint64_t i) { return i >= 37 && i % 5 == 2; };
  for (int threads : {1, 4}) {
    auto r = parallel_find_min(100000, threads, hit);
    REQUIRE(r.has_value());
    REQUIRE(*r == 37);
  }
  REQUIRE(!parallel_find_min(1000, 4, [](std::uint64_t) { return false; })
               .has_value());
  auto zero = parallel_find_min(10, 2, [](std::uint64_t i) { return i == 0; });
  REQUIRE(zero.has_value());
  REQUIRE(*zero == 0);
}

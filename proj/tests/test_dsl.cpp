// Tests for the ring-description language: lexing/parsing, field forms,
// relation and commutation syntax, table constructions, the canonical
// renderer (parse-of-render identity), and error positions.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "ringlab/dsl.hpp"
#include "ringlab/radical.hpp"

using namespace ringlab;
using Catch::Matchers::ContainsSubstring;

namespace {

Error parse_error(const std::string& text) {
  try {
    dsl::parse(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return Error(Errc::Internal, "unreachable");
}

}  // namespace

TEST_CASE("presentation text matches the programmatic construction") {
  const std::string text = R"(ring "threegen8" {
  field F2
  gens u v w
  sqzero u v w
  rel u*v, v*w, w*u
  rel u*w*v + v*u*w, u*w*v + w*v*u
})";
  const dsl::RingSpecFile s = dsl::parse(text);
  CHECK(s.name == "threegen8");
  CHECK(s.kind == dsl::SpecKind::presentation);
  CHECK(s.gens == std::vector<std::string>{"u", "v", "w"});
  CHECK(s.maxdeg == 8);

  const Presentation got = dsl::to_presentation(s);
  const Presentation want = corpus::threegen8_presentation();
  CHECK(got.gens == want.gens);
  CHECK(got.twist == want.twist);
  CHECK(got.sqzero == want.sqzero);
  CHECK(got.relations == want.relations);

  const dsl::Built b = dsl::build(s);
  CHECK(b.algebra.dim() == 8);
  CHECK(b.algebra.order() == 256);
  REQUIRE(b.rewrite.has_value());
  CHECK(b.rewrite->words.size() == 8);
}

TEST_CASE("render emits a canonical form that parses back identically") {
  const std::vector<std::string> sources = {
      R"(ring "threegen8" { field F2 gens u v w sqzero u v w
         rel u*v, v*w, w*u rel u*w*v + v*u*w, u*w*v + w*v*u })",
      R"(ring "f2d8" { field F2 group D8 })",
      R"(ring "m2-f3" { field GF(3) matrix 2 })",
      R"(ring "chain" { field GF(3) chain 3 })",
      R"(ring "both" { field F2 sum "chain2+chain2" "m2+f2" })",
      R"(ring "skew" { field F4 gens u v skew v frob comm v u a
         rel u*u, v*v maxdeg 6 })",
      R"(ring "f8-line" { field GF(2,3,x^3+x+1) chain 1 })",
  };
  for (const auto& src : sources) {
    CAPTURE(src);
    const dsl::RingSpecFile s = dsl::parse(src);
    const std::string canon = dsl::render(s);
    const dsl::RingSpecFile s2 = dsl::parse(canon);
    CHECK(s2 == s);
    // Rendering is idempotent: the canonical form renders to itself.
    CHECK(dsl::render(s2) == canon);
  }

  // One pinned canonical form, so formatting changes are deliberate.
  const dsl::RingSpecFile g = dsl::parse(R"(ring "f2d8" {field F2 group D8})");
  CHECK(dsl::render(g) == "ring \"f2d8\" {\n  field F2\n  group D8\n}\n");
}

TEST_CASE("skew and comm statements reproduce the twisted constructions") {
  const dsl::RingSpecFile sq = dsl::parse(R"(ring "skew-square" {
  field F4
  gens u v
  skew v frob
  rel u*v, v*u, v*v + u*u
})");
  const Presentation sqp = dsl::to_presentation(sq);
  const Presentation sqw = skew_square_presentation();
  CHECK(sqp.twist == sqw.twist);
  CHECK(sqp.relations == sqw.relations);
  CHECK(dsl::build(sq).algebra.order() == 256);

  const dsl::RingSpecFile ac = dsl::parse(R"(ring "skew-anticomm" {
  field F4
  gens u v
  skew v frob
  comm v u a
  rel u*u, v*v
})");
  REQUIRE(ac.comms.size() == 1);
  CHECK(ac.comms[0].left == 1);   // v
  CHECK(ac.comms[0].right == 0);  // u
  CHECK(ac.comms[0].coef == ac.field->gen());
  const Presentation acp = dsl::to_presentation(ac);
  const Presentation acw = skew_anticomm_presentation();
  CHECK(acp.twist == acw.twist);
  CHECK(acp.relations == acw.relations);
  CHECK(dsl::build(ac).algebra.order() == 256);
}

TEST_CASE("relation coefficients: integers, field generator, parentheses") {
  SECTION("integer coefficients over GF(3)") {
    const dsl::RingSpecFile s = dsl::parse(
        R"(ring "t" { field GF(3) gens u v rel u*v + 2*v*u, 2*u^2 })");
    const FieldSpec& F = *s.field;
    REQUIRE(s.relations.size() == 2);
    NCPoly r0;
    nc_add_term(r0, {0, 1}, 1, F);
    nc_add_term(r0, {1, 0}, 2, F);
    CHECK(s.relations[0] == r0);
    NCPoly r1;
    nc_add_term(r1, {0, 0}, 2, F);
    CHECK(s.relations[1] == r1);
  }

  SECTION("field-generator coefficients over F4") {
    const dsl::RingSpecFile s = dsl::parse(
        R"(ring "t" { field F4 gens u v rel a*u*v, a^2*u, (1 + a)*v })");
    const FieldSpec& F = *s.field;
    const Coef a = F.gen();
    REQUIRE(s.relations.size() == 3);
    CHECK(s.relations[0] == nc_mono({0, 1}, a));
    CHECK(s.relations[1] == nc_mono({0}, F.mul(a, a)));
    CHECK(s.relations[2] == nc_mono({1}, F.add(1, a)));
    // a^2 = a + 1 in F4, so relations 1 and 2 carry the same coefficient.
    CHECK(F.mul(a, a) == F.add(1, a));
  }

  SECTION("coefficients written right of a twisted letter pick up frobenius") {
    const dsl::RingSpecFile s = dsl::parse(
        R"(ring "t" { field F4 gens u v skew v frob rel v*a, u*a })");
    const FieldSpec& F = *s.field;
    const Coef a = F.gen();
    REQUIRE(s.relations.size() == 2);
    CHECK(s.relations[0] == nc_mono({1}, F.frobenius(a)));  // v a = a^2 v
    CHECK(s.relations[1] == nc_mono({0}, a));               // u is untwisted
  }
}

TEST_CASE("table constructions build the expected rings") {
  CHECK(dsl::build(R"(ring "g" { field F2 group D8 })").algebra.order() == 256);
  CHECK(dsl::build(R"(ring "g" { field F2 group Q8 })").algebra.order() == 256);
  CHECK(dsl::build(R"(ring "g" { field GF(3) group C6 })").algebra.order() ==
        729);

  const dsl::Built m = dsl::build(R"(ring "m" { field F2 matrix 2 })");
  CHECK(m.algebra.dim() == 4);
  CHECK(m.algebra.order() == 16);
  CHECK_FALSE(m.rewrite.has_value());

  CHECK(dsl::build(R"(ring "c" { field GF(3) chain 3 })").algebra.order() ==
        27);
  CHECK(dsl::build(R"(ring "c" { field F4 chain 2 })").algebra.order() == 16);

  const dsl::Built s =
      dsl::build(R"(ring "s" { field F2 sum "chain2+chain2" "m2+f2" })");
  CHECK(s.algebra.order() == 512);

  // Cayley table from a file: order, then n^2 entries (here C2).
  const std::string path = "dsl_test_c2.cayley";
  {
    std::ofstream out(path);
    out << "2\n0 1\n1 0\n";
  }
  const dsl::Built f = dsl::build("ring \"file\" { field F2 group file \"" +
                                  path + "\" }");
  CHECK(f.algebra.dim() == 2);
  CHECK(f.algebra.order() == 4);
  std::remove(path.c_str());
}

TEST_CASE("maxdeg bounds the rewriting degree") {
  // Strong square-zero on every generator kills all words with a repeated
  // letter, so this ring is finite: basis 1, u, v, uv, vu.
  const dsl::RingSpecFile fin =
      dsl::parse(R"(ring "t" { field F2 gens u v sqzero u v maxdeg 4 })");
  CHECK(fin.maxdeg == 4);
  CHECK_THAT(dsl::render(fin), ContainsSubstring("maxdeg 4"));
  CHECK(dsl::build(fin).algebra.dim() == 5);

  // A free generator with no relations is infinite; the failure must name
  // the degree bound and a blocked word.
  try {
    dsl::build(R"(ring "t" { field F2 gens u v maxdeg 4 })");
    FAIL("expected BasisNotFinite");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BasisNotFinite);
    CHECK_THAT(e.what(), ContainsSubstring("degree bound 4"));
    CHECK_THAT(e.what(), ContainsSubstring("u*u*u*u"));
  }
}

TEST_CASE("field forms and field errors") {
  CHECK(dsl::parse(R"(ring "t" { field F2 chain 1 })").field->q() == 2);
  CHECK(dsl::parse(R"(ring "t" { field F4 chain 1 })").field->q() == 4);
  CHECK(dsl::parse(R"(ring "t" { field GF(2) chain 1 })").field->q() == 2);
  CHECK(dsl::parse(R"(ring "t" { field GF(5) chain 1 })").field->q() == 5);
  CHECK(dsl::parse(R"(ring "t" { field GF(2,2) chain 1 })").field->q() == 4);

  const dsl::RingSpecFile f8 =
      dsl::parse(R"(ring "t" { field GF(2,3,x^3+x+1) chain 1 })");
  CHECK(f8.field->q() == 8);
  CHECK(f8.modulus == Vec{1, 1, 0, 1});
  CHECK(dsl::build(f8).algebra.order() == 8);

  CHECK(parse_error(R"(ring "t" { field F9 chain 1 })").code() ==
        Errc::UnknownField);
  CHECK(parse_error(R"(ring "t" { field GF(3,2) chain 1 })").code() ==
        Errc::UnknownField);
  CHECK(parse_error(R"(ring "t" { field GF(4) chain 1 })").code() ==
        Errc::NotPrime);
  CHECK(parse_error(R"(ring "t" { chain 1 })").code() == Errc::SyntaxError);
  CHECK(parse_error(R"(ring "t" { field F2 field F2 chain 1 })").code() ==
        Errc::SyntaxError);
}

TEST_CASE("parse errors carry the code and the source position") {
  const Error a = parse_error(R"(ring "bad" { field F2 gens u rel u*q })");
  CHECK(a.code() == Errc::UnknownGenerator);
  CHECK(a.line() == 1);
  CHECK(a.col() == 36);

  const Error twoline = parse_error("ring \"bad\" {\n  field F2\n  gens u\n"
                                    "  rel u*q\n}\n");
  CHECK(twoline.code() == Errc::UnknownGenerator);
  CHECK(twoline.line() == 4);
  CHECK(twoline.col() == 9);

  // 'a' is the field generator only over an extension field.
  CHECK(parse_error(R"(ring "t" { field F2 gens u rel a*u })").code() ==
        Errc::UnknownGenerator);

  CHECK(parse_error(R"(ring "t" { field F2 gens u u })").code() ==
        Errc::SyntaxError);                                     // duplicate gen
  CHECK(parse_error(R"(ring "t" { field F2 chain 1 )").code() ==
        Errc::SyntaxError);                                     // unterminated
  CHECK(parse_error(R"(ring "t" { field F2 chain 1 } extra)").code() ==
        Errc::SyntaxError);                                     // trailing text
  CHECK(parse_error(R"(ring "t" { field F2 })").code() == Errc::SyntaxError);
  CHECK(parse_error(R"(ring "t" { field F2 gens u group D8 })").code() ==
        Errc::SyntaxError);  // mixing presentation parts with a table
  CHECK(parse_error(R"(ring "t" { field F2 group D8 chain 2 })").code() ==
        Errc::SyntaxError);  // two table constructions
  CHECK(parse_error(R"(ring "t" { field F2 group D7 })").code() ==
        Errc::InvalidGroup);
  CHECK(parse_error(R"(ring "t" { field F2 sum m2-f2 "f2+f2" })").code() ==
        Errc::SyntaxError);  // sum operands must be quoted strings
  CHECK(parse_error(R"(ring "t" { field F2 gens u skew q frob })").code() ==
        Errc::UnknownGenerator);
  CHECK(parse_error(R"(ring "t" { field F2 gens u sqzero q })").code() ==
        Errc::UnknownGenerator);
}

TEST_CASE("build errors surface for unresolvable specs") {
  try {
    dsl::build(R"(ring "s" { field F2 sum "no-such-ring" "f2+f2" })");
    FAIL("expected UnknownName");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownName);
    CHECK_THAT(e.what(), ContainsSubstring("no-such-ring"));
  }

  // to_presentation refuses table constructions.
  const dsl::RingSpecFile g = dsl::parse(R"(ring "g" { field F2 group D8 })");
  try {
    dsl::to_presentation(g);
    FAIL("expected Unsupported");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Unsupported);
  }
}

TEST_CASE("specs survive the presentation round-trip") {
  // Programmatic presentation -> spec -> text -> spec -> presentation.
  for (const Presentation& p : {corpus::threegen8_presentation(),
                                skew_square_presentation(),
                                skew_anticomm_presentation()}) {
    CAPTURE(p.name);
    const dsl::RingSpecFile s = dsl::spec_from_presentation(p);
    const dsl::RingSpecFile s2 = dsl::parse(dsl::render(s));
    CHECK(s2 == s);
    const Presentation q = dsl::to_presentation(s2);
    CHECK(q.gens == p.gens);
    CHECK(q.twist == p.twist);
    CHECK(q.sqzero == p.sqzero);
    CHECK(q.relations == p.relations);
    CHECK(q.degree_bound == p.degree_bound);
  }
}

TEST_CASE("comments and flexible whitespace are accepted") {
  const dsl::RingSpecFile s = dsl::parse(
      "# leading comment\n"
      "ring \"t\" { # trailing comment\n"
      "  field F2   # the base field\n"
      "  gens u v\n"
      "  sqzero u v\n"
      "  rel u*v # kill one product\n"
      "}\n"
      "# closing comment\n");
  CHECK(s.gens.size() == 2);
  CHECK(s.relations.size() == 1);
  const dsl::Built b = dsl::build(s);
  CHECK(b.algebra.dim() == 4);  // basis 1, u, v, vu
  CHECK(b.algebra.order() == 16);
}

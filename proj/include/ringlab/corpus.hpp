#pragma once
// The bundled example rings.  Each presented ring gets a named builder; the
// corpus() function returns the standard list used by the regression suite,
// the property oracle, and the meta-theorem checks.
//
// Naming: <gens>gen<order> for F2 presentations by generator count and ring
// order; table constructions are named after their construction.

#include <ringlab/constructors.hpp>

namespace ringlab::corpus {

namespace detail {
// Sum of distinct words with coefficient 1 (fields of characteristic 2 only
// need 0/1 coefficients here).
inline NCPoly words(std::initializer_list<Monomial> ws, const FieldSpec& f) {
  NCPoly p;
  for (const Monomial& w : ws) nc_add_term(p, w, 1, f);
  return p;
}
}  // namespace detail

// --------------------------------------------------------------------------
// Three-generator F2 presentations with all squares killed (every word that
// repeats a generator is zero).  Letters: u = 0, v = 1, w = 2.
// --------------------------------------------------------------------------

// Order 256, dim 8, basis {1,u,v,w,uw,vu,wv,uwv}: uv = vw = wu = 0 and the
// three degree-3 survivors are identified (uwv = vuw = wvu).
inline Presentation threegen8_presentation() {
  Presentation p;
  p.field = GF2();
  p.name = "threegen8";
  p.add_gen("u", 0, true);
  p.add_gen("v", 0, true);
  p.add_gen("w", 0, true);
  const FieldSpec& f = *p.field;
  p.relations.push_back(detail::words({{0, 1}}, f));                  // uv
  p.relations.push_back(detail::words({{1, 2}}, f));                  // vw
  p.relations.push_back(detail::words({{2, 0}}, f));                  // wu
  p.relations.push_back(detail::words({{0, 2, 1}, {1, 0, 2}}, f));    // uwv+vuw
  p.relations.push_back(detail::words({{0, 2, 1}, {2, 1, 0}}, f));    // uwv+wvu
  return p;
}

// Order 4096, dim 12: only uv and vwu are killed on top of the squares.
inline Presentation threegen12_presentation() {
  Presentation p;
  p.field = GF2();
  p.name = "threegen12";
  p.add_gen("u", 0, true);
  p.add_gen("v", 0, true);
  p.add_gen("w", 0, true);
  const FieldSpec& f = *p.field;
  p.relations.push_back(detail::words({{0, 1}}, f));     // uv
  p.relations.push_back(detail::words({{1, 2, 0}}, f));  // vwu
  return p;
}

// Order 8192, dim 13: the three cyclic rotations of uvw are killed, leaving
// all six degree-2 words and the other three degree-3 words alive.
inline Presentation threegen13_presentation() {
  Presentation p;
  p.field = GF2();
  p.name = "threegen13";
  p.add_gen("u", 0, true);
  p.add_gen("v", 0, true);
  p.add_gen("w", 0, true);
  const FieldSpec& f = *p.field;
  p.relations.push_back(detail::words({{0, 1, 2}}, f));  // uvw
  p.relations.push_back(detail::words({{1, 2, 0}}, f));  // vwu
  p.relations.push_back(detail::words({{2, 0, 1}}, f));  // wuv
  return p;
}

// --------------------------------------------------------------------------
// Two-generator F2 presentations.  Letters: u = 0, v = 1.
// --------------------------------------------------------------------------

// Order 16, dim 4, basis {1,u,v,u^2}: u^3 = v^2 = vu = 0 and u^2 = uv.
inline Presentation twogen16_presentation() {
  Presentation p;
  p.field = GF2();
  p.name = "twogen16";
  p.add_gen("u");
  p.add_gen("v");
  const FieldSpec& f = *p.field;
  p.relations.push_back(detail::words({{0, 0, 0}}, f));     // u^3
  p.relations.push_back(detail::words({{1, 1}}, f));        // v^2
  p.relations.push_back(detail::words({{1, 0}}, f));        // vu
  p.relations.push_back(detail::words({{0, 0}, {0, 1}}, f));  // u^2 + uv
  return p;
}

// Order 32, dim 5, basis {1,u,v,u^2,uv}: u^4 = v^2 = vu = 0 and u^3 = uv.
inline Presentation twogen32_presentation() {
  Presentation p;
  p.field = GF2();
  p.name = "twogen32";
  p.add_gen("u");
  p.add_gen("v");
  const FieldSpec& f = *p.field;
  p.relations.push_back(detail::words({{0, 0, 0, 0}}, f));        // u^4
  p.relations.push_back(detail::words({{1, 1}}, f));              // v^2
  p.relations.push_back(detail::words({{1, 0}}, f));              // vu
  p.relations.push_back(detail::words({{0, 0, 0}, {0, 1}}, f));   // u^3 + uv
  return p;
}

// Order 64, dim 6, basis {1,u,v,uv,vu,uvu}: u^2 = v^2 = 0 and uvu = vuv.
inline Presentation twogen64_presentation() {
  Presentation p;
  p.field = GF2();
  p.name = "twogen64";
  p.add_gen("u");
  p.add_gen("v");
  const FieldSpec& f = *p.field;
  p.relations.push_back(detail::words({{0, 0}}, f));               // u^2
  p.relations.push_back(detail::words({{1, 1}}, f));               // v^2
  p.relations.push_back(detail::words({{0, 1, 0}, {1, 0, 1}}, f));  // uvu+vuv
  return p;
}

// Order 256, dim 8: u^3 = v^3 = 0, u^2 + v^2 + vu = 0,
// vu^2 + uvu + vuv = 0, u^2vu = 0.
inline Presentation twogen256_presentation() {
  Presentation p;
  p.field = GF2();
  p.name = "twogen256";
  p.add_gen("u");
  p.add_gen("v");
  const FieldSpec& f = *p.field;
  p.relations.push_back(detail::words({{0, 0, 0}}, f));  // u^3
  p.relations.push_back(detail::words({{1, 1, 1}}, f));  // v^3
  p.relations.push_back(detail::words({{0, 0}, {1, 1}, {1, 0}}, f));
  p.relations.push_back(detail::words({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}, f));
  p.relations.push_back(detail::words({{0, 0, 1, 0}}, f));  // u^2vu
  return p;
}

inline BuiltRing threegen8_ring() {
  return build_algebra(threegen8_presentation());
}
inline BuiltRing threegen12_ring() {
  return build_algebra(threegen12_presentation());
}
inline BuiltRing threegen13_ring() {
  return build_algebra(threegen13_presentation());
}
inline BuiltRing twogen16_ring() { return build_algebra(twogen16_presentation()); }
inline BuiltRing twogen32_ring() { return build_algebra(twogen32_presentation()); }
inline BuiltRing twogen64_ring() { return build_algebra(twogen64_presentation()); }
inline BuiltRing twogen256_ring() {
  return build_algebra(twogen256_presentation());
}

// --------------------------------------------------------------------------
// The standard corpus
// --------------------------------------------------------------------------

struct NamedRing {
  std::string name;
  FiniteAlgebra algebra;
};

// Every bundled ring.  `include_large` adds the order-4096 and order-8192
// rings (slower property checks); without it everything stays at order <= 512.
inline std::vector<NamedRing> corpus(bool include_large = true) {
  std::vector<NamedRing> out;
  const FiniteAlgebra f2 = chain_ring(GF2(), 1);
  out.push_back({"f2d8", group_algebra(GF2(), d8_table())});
  out.push_back({"f2q8", group_algebra(GF2(), q8_table())});
  out.push_back({"skew-square", skew_square_ring().algebra});
  out.push_back({"skew-anticomm", skew_anticomm_ring().algebra});
  out.push_back({"threegen8", threegen8_ring().algebra});
  out.push_back({"twogen16", twogen16_ring().algebra});
  out.push_back({"twogen32", twogen32_ring().algebra});
  out.push_back({"twogen64", twogen64_ring().algebra});
  out.push_back({"twogen256", twogen256_ring().algebra});
  for (int k = 1; k <= 7; ++k)
    out.push_back({"chain-f2-" + std::to_string(k), chain_ring(GF2(), k)});
  for (int k = 1; k <= 3; ++k)
    out.push_back({"chain-f4-" + std::to_string(k), chain_ring(GF4(), k)});
  out.push_back({"chain-f3-3", chain_ring(field_make(3), 3)});
  out.push_back({"m2-f2", matrix_algebra(GF2(), 2)});
  out.push_back({"m2-f3", matrix_algebra(field_make(3), 2)});
  out.push_back({"u2-f2", upper_triangular(GF2(), 2)});
  out.push_back({"u3-f2", upper_triangular(GF2(), 3)});
  out.push_back({"f2+f2", direct_sum(f2, f2)});
  out.push_back(
      {"chain2+chain2", direct_sum(chain_ring(GF2(), 2), chain_ring(GF2(), 2))});
  out.push_back({"m2+f2", direct_sum(matrix_algebra(GF2(), 2), f2)});
  out.push_back({"threegen8+f2", direct_sum(threegen8_ring().algebra, f2)});
  if (include_large) {
    out.push_back({"threegen12", threegen12_ring().algebra});
    out.push_back({"threegen13", threegen13_ring().algebra});
  }
  return out;
}

}  // namespace ringlab::corpus

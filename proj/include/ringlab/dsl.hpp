#pragma once
// Text format for ring descriptions.  A file holds one block,
//
//   ring "name" {
//     field F2                       # or F4, GF(p), GF(p,k,x^k+...)
//     gens u v w                     # free generators (presentations only)
//     sqzero u v w                   # every word repeating these is zero
//     skew v frob                    # coefficients twist past v: v*c = c^p*v
//     comm v u a                     # v*u = a*(u*v)
//     rel u*v, v*w, w*u              # noncommutative polynomials set to zero
//     rel u*w*v + v*u*w
//     maxdeg 8                       # completion degree bound (default 8)
//   }
//
// or, instead of gens/rel, exactly one table construction:
//
//     group D8        group Q8        group C8        group file "path"
//     matrix 2        chain 3         sum "f2d8" "f2q8"   # direct sum
//
// parse() turns text into a RingSpecFile; render() writes the canonical text
// back (parse(render(s)) == s); build() produces the algebra.  `#` starts a
// comment that runs to the end of the line.

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <ringlab/corpus.hpp>

namespace ringlab::dsl {

// ---------------------------------------------------------------------------
// Spec structure
// ---------------------------------------------------------------------------

enum class SpecKind { presentation, group, matrix, chain, sum };

inline const char* spec_kind_name(SpecKind k) {
  switch (k) {
    case SpecKind::presentation: return "presentation";
    case SpecKind::group: return "group";
    case SpecKind::matrix: return "matrix";
    case SpecKind::chain: return "chain";
    case SpecKind::sum: return "sum";
  }
  return "?";
}

struct RingSpecFile {
  std::string name;

  // Field declaration (p == 0 means the field line is missing).
  int p = 0, k = 1;
  Vec modulus;  // explicit GF(p,k,modulus) coefficients; empty otherwise
  Field field;  // built during parse

  SpecKind kind = SpecKind::presentation;

  // Presentation parts.
  std::vector<std::string> gens;
  std::vector<int> twist;
  std::vector<char> sqzero;
  std::vector<NCPoly> relations;
  struct Comm {
    int left = 0, right = 0;  // generator indices: left*right = coef*(right*left)
    Coef coef = 1;
    bool operator==(const Comm&) const = default;
  };
  std::vector<Comm> comms;
  int maxdeg = 8;

  // Table constructions.
  std::string group_name;  // "D8", "Q8", "C<n>"
  std::string group_file;  // path when `group file "..."`
  int matrix_n = 0;
  int chain_k = 0;
  std::string sum_left, sum_right;

  bool operator==(const RingSpecFile& o) const {
    return name == o.name && p == o.p && k == o.k && modulus == o.modulus &&
           kind == o.kind && gens == o.gens && twist == o.twist &&
           sqzero == o.sqzero && relations == o.relations && comms == o.comms &&
           maxdeg == o.maxdeg && group_name == o.group_name &&
           group_file == o.group_file && matrix_n == o.matrix_n &&
           chain_k == o.chain_k && sum_left == o.sum_left &&
           sum_right == o.sum_right;
  }
};

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace dsl_detail {

struct Token {
  enum Kind { Ident, Int, Str, Punct, End } kind = End;
  std::string text;
  long long value = 0;
  int line = 1, col = 1;
};

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') advance(text[i++]);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      ++i;
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Ident;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_')) {
        t.text += text[i];
        advance(text[i++]);
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Int;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        t.text += text[i];
        advance(text[i++]);
      }
      t.value = std::stoll(t.text);
    } else if (c == '"') {
      t.kind = Token::Str;
      advance(text[i++]);
      while (i < text.size() && text[i] != '"' && text[i] != '\n') {
        t.text += text[i];
        advance(text[i++]);
      }
      if (i >= text.size() || text[i] != '"')
        fail(Errc::SyntaxError, "unterminated string", t.line, t.col);
      advance(text[i++]);
    } else if (std::string("{}(),*+^").find(c) != std::string::npos) {
      t.kind = Token::Punct;
      t.text = c;
      advance(text[i++]);
    } else {
      fail(Errc::SyntaxError, std::string("unexpected character '") + c + "'",
           line, col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

inline bool is_keyword(const std::string& s) {
  static const char* kw[] = {"field", "gens",  "sqzero", "skew",
                             "comm",  "rel",   "group",  "matrix",
                             "chain", "sum",   "maxdeg"};
  for (const char* w : kw)
    if (s == w) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  RingSpecFile run() {
    expect_ident("ring");
    spec_.name = expect(Token::Str, "ring name in quotes").text;
    expect_punct("{");
    std::vector<std::pair<size_t, size_t>> rel_ranges;  // [begin, end) tokens
    std::vector<std::pair<size_t, size_t>> comm_ranges;
    while (!at_punct("}")) {
      const Token& t = peek();
      if (t.kind != Token::Ident || !is_keyword(t.text))
        fail(Errc::SyntaxError,
             "expected a statement keyword, got '" + describe(t) + "'", t.line,
             t.col);
      const std::string kw = next().text;
      if (kw == "field") {
        parse_field();
      } else if (kw == "gens") {
        want_presentation(t);
        if (peek().kind != Token::Ident || is_keyword(peek().text))
          fail(Errc::SyntaxError, "gens needs at least one name", peek().line,
               peek().col);
        while (peek().kind == Token::Ident && !is_keyword(peek().text)) {
          const Token& g = next();
          if (gen_index(g.text) >= 0)
            fail(Errc::SyntaxError, "duplicate generator '" + g.text + "'",
                 g.line, g.col);
          spec_.gens.push_back(g.text);
          spec_.twist.push_back(0);
          spec_.sqzero.push_back(0);
        }
      } else if (kw == "sqzero") {
        want_presentation(t);
        if (peek().kind != Token::Ident || is_keyword(peek().text))
          fail(Errc::SyntaxError, "sqzero needs at least one generator",
               peek().line, peek().col);
        while (peek().kind == Token::Ident && !is_keyword(peek().text)) {
          const Token& g = next();
          spec_.sqzero[require_gen(g)] = 1;
        }
      } else if (kw == "skew") {
        want_presentation(t);
        int g = require_gen(expect(Token::Ident, "generator name"));
        const Token& f = expect(Token::Ident, "'frob'");
        if (f.text != "frob")
          fail(Errc::SyntaxError, "only the 'frob' twist is supported", f.line,
               f.col);
        spec_.twist[g] = 1;
      } else if (kw == "comm") {
        want_presentation(t);
        size_t b = pos_;
        require_gen(expect(Token::Ident, "generator name"));
        require_gen(expect(Token::Ident, "generator name"));
        skip_coef();
        comm_ranges.emplace_back(b, pos_);
      } else if (kw == "rel") {
        want_presentation(t);
        size_t b = pos_;
        if (at_punct("}") || (peek().kind == Token::Ident &&
                              is_keyword(peek().text)))
          fail(Errc::SyntaxError, "rel needs at least one polynomial",
               peek().line, peek().col);
        while (!at_punct("}") && peek().kind != Token::End &&
               !(peek().kind == Token::Ident && is_keyword(peek().text)))
          ++pos_;
        rel_ranges.emplace_back(b, pos_);
      } else if (kw == "group") {
        set_kind(SpecKind::group, t);
        const Token& g = peek();
        if (g.kind == Token::Ident && g.text == "file") {
          next();
          spec_.group_file = expect(Token::Str, "group table path").text;
          spec_.group_name = "file";
        } else if (g.kind == Token::Ident) {
          next();
          if (g.text != "D8" && g.text != "Q8" &&
              !(g.text.size() > 1 && g.text[0] == 'C' &&
                std::all_of(g.text.begin() + 1, g.text.end(), [](char ch) {
                  return std::isdigit(static_cast<unsigned char>(ch));
                })))
            fail(Errc::InvalidGroup, "unknown group '" + g.text + "'", g.line,
                 g.col);
          spec_.group_name = g.text;
        } else {
          fail(Errc::SyntaxError, "expected a group name", g.line, g.col);
        }
      } else if (kw == "matrix") {
        set_kind(SpecKind::matrix, t);
        spec_.matrix_n = int(expect(Token::Int, "matrix size").value);
      } else if (kw == "chain") {
        set_kind(SpecKind::chain, t);
        spec_.chain_k = int(expect(Token::Int, "chain length").value);
      } else if (kw == "sum") {
        set_kind(SpecKind::sum, t);
        spec_.sum_left = expect(Token::Str, "ring name in quotes").text;
        spec_.sum_right = expect(Token::Str, "ring name in quotes").text;
      } else if (kw == "maxdeg") {
        spec_.maxdeg = int(expect(Token::Int, "degree bound").value);
      }
    }
    expect_punct("}");
    if (peek().kind != Token::End)
      fail(Errc::SyntaxError, "trailing text after the ring block",
           peek().line, peek().col);

    if (spec_.p == 0)
      fail(Errc::SyntaxError, "missing field declaration", 1, 1);
    if (!spec_.modulus.empty())
      spec_.field = field_make(spec_.p, spec_.k, spec_.modulus);
    else if (spec_.k == 1)
      spec_.field = field_make(spec_.p);
    else if (spec_.p == 2 && spec_.k == 2)
      spec_.field = GF4();
    else
      fail(Errc::UnknownField,
           "GF(p,k) needs an explicit modulus when k >= 2", 1, 1);
    if (spec_.kind == SpecKind::presentation && spec_.gens.empty())
      fail(Errc::SyntaxError, "no generators and no table construction", 1, 1);

    for (auto [b, e] : comm_ranges) {
      pos_ = b;
      RingSpecFile::Comm c;
      c.left = gen_index(next().text);
      c.right = gen_index(next().text);
      c.coef = parse_coef();
      if (pos_ != e)
        fail(Errc::SyntaxError, "malformed commutation coefficient",
             peek().line, peek().col);
      spec_.comms.push_back(c);
    }
    for (auto [b, e] : rel_ranges) {
      pos_ = b;
      spec_.relations.push_back(parse_poly());
      while (at_punct(",")) {
        next();
        spec_.relations.push_back(parse_poly());
      }
      if (pos_ != e)
        fail(Errc::SyntaxError, "expected ',' between relations", peek().line,
             peek().col);
    }
    return spec_;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at_punct(const char* p) const {
    return peek().kind == Token::Punct && peek().text == p;
  }
  static std::string describe(const Token& t) {
    return t.kind == Token::End ? "end of file" : t.text;
  }
  const Token& expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k)
      fail(Errc::SyntaxError, "expected " + what + ", got '" +
                                  describe(peek()) + "'",
           peek().line, peek().col);
    return next();
  }
  void expect_ident(const std::string& word) {
    const Token& t = expect(Token::Ident, "'" + word + "'");
    if (t.text != word)
      fail(Errc::SyntaxError, "expected '" + word + "', got '" + t.text + "'",
           t.line, t.col);
  }
  void expect_punct(const std::string& p) {
    if (!(peek().kind == Token::Punct && peek().text == p))
      fail(Errc::SyntaxError, "expected '" + p + "', got '" +
                                  describe(peek()) + "'",
           peek().line, peek().col);
    ++pos_;
  }

  int gen_index(const std::string& n) const {
    for (int i = 0; i < int(spec_.gens.size()); ++i)
      if (spec_.gens[i] == n) return i;
    return -1;
  }
  int require_gen(const Token& t) {
    int g = gen_index(t.text);
    if (g < 0)
      fail(Errc::UnknownGenerator, "'" + t.text + "' is not a generator",
           t.line, t.col);
    return g;
  }
  void want_presentation(const Token& at) {
    if (spec_.kind != SpecKind::presentation)
      fail(Errc::SyntaxError,
           std::string("cannot mix generators with a ") +
               spec_kind_name(spec_.kind) + " construction",
           at.line, at.col);
    saw_presentation_ = true;
  }
  void set_kind(SpecKind k, const Token& at) {
    if (saw_presentation_)
      fail(Errc::SyntaxError,
           std::string("cannot mix a ") + spec_kind_name(k) +
               " construction with generators",
           at.line, at.col);
    if (spec_.kind != SpecKind::presentation)
      fail(Errc::SyntaxError,
           std::string("conflicting constructions: ") +
               spec_kind_name(spec_.kind) + " and " + spec_kind_name(k),
           at.line, at.col);
    spec_.kind = k;
  }

  void parse_field() {
    const Token& t = peek();
    if (t.kind != Token::Ident)
      fail(Errc::SyntaxError, "expected a field name", t.line, t.col);
    if (spec_.p != 0)
      fail(Errc::SyntaxError, "duplicate field declaration", t.line, t.col);
    if (t.text == "F2") {
      next();
      spec_.p = 2;
      spec_.k = 1;
      return;
    }
    if (t.text == "F4") {
      next();
      spec_.p = 2;
      spec_.k = 2;
      return;
    }
    if (t.text == "GF") {
      next();
      expect_punct("(");
      spec_.p = int(expect(Token::Int, "characteristic").value);
      spec_.k = 1;
      if (at_punct(",")) {
        next();
        spec_.k = int(expect(Token::Int, "extension degree").value);
        if (at_punct(",")) {
          next();
          spec_.modulus = parse_modpoly();
        }
      }
      expect_punct(")");
      return;
    }
    fail(Errc::UnknownField, "unknown field '" + t.text + "'", t.line, t.col);
  }

  // modulus polynomial in x: terms `c`, `x^d`, `c*x^d` joined by '+'
  Vec parse_modpoly() {
    std::vector<int> coeff(size_t(spec_.k) + 1, 0);
    while (true) {
      int c = 1, d = 0;
      bool saw_c = false;
      if (peek().kind == Token::Int) {
        c = int(next().value);
        saw_c = true;
        if (at_punct("*")) next();
      }
      if (peek().kind == Token::Ident && peek().text == "x") {
        next();
        d = 1;
        if (at_punct("^")) {
          next();
          d = int(expect(Token::Int, "exponent").value);
        }
      } else if (!saw_c) {
        fail(Errc::SyntaxError, "expected a modulus term", peek().line,
             peek().col);
      }
      if (d >= int(coeff.size()))
        fail(Errc::SyntaxError, "modulus degree exceeds the extension degree",
             peek().line, peek().col);
      coeff[d] = (coeff[d] + c) % spec_.p;
      if (!at_punct("+")) break;
      next();
    }
    Vec out(coeff.size());
    for (size_t i = 0; i < coeff.size(); ++i) out[i] = Coef(coeff[i]);
    return out;
  }

  // Skip one coefficient without interpreting it (first pass; the field may
  // not be declared yet).  A coefficient never runs into the next statement
  // because statement keywords are reserved.
  void skip_coef() {
    if (at_punct("(")) {
      next();
      while (!at_punct(")") && peek().kind != Token::End) ++pos_;
      expect_punct(")");
      return;
    }
    if (peek().kind != Token::Int &&
        !(peek().kind == Token::Ident && !is_keyword(peek().text)))
      fail(Errc::SyntaxError, "expected a coefficient", peek().line,
           peek().col);
    while (peek().kind == Token::Int ||
           (peek().kind == Token::Ident && !is_keyword(peek().text)) ||
           at_punct("^") || at_punct("*"))
      next();
  }

  // A single field element: INT, `a`, `a^d`, or a parenthesized sum of those.
  Coef parse_coef() {
    const FieldSpec& F = *spec_.field;
    if (at_punct("(")) {
      next();
      Coef s = parse_coef_term();
      while (at_punct("+")) {
        next();
        s = F.add(s, parse_coef_term());
      }
      expect_punct(")");
      return s;
    }
    return parse_coef_term();
  }

  Coef parse_coef_term() {
    const FieldSpec& F = *spec_.field;
    Coef c = 1;
    bool saw = false;
    if (peek().kind == Token::Int) {
      c = F.from_int(next().value);
      saw = true;
      if (at_punct("*")) next();
    }
    if (peek().kind == Token::Ident && peek().text == "a" &&
        gen_index("a") < 0) {
      const Token& t = next();
      if (F.k() < 2)
        fail(Errc::UnknownGenerator, "'a' is not a generator", t.line, t.col);
      int d = 1;
      if (at_punct("^")) {
        next();
        d = int(expect(Token::Int, "exponent").value);
      }
      c = F.mul(c, F.pow(F.gen(), d));
      saw = true;
    }
    if (!saw)
      fail(Errc::SyntaxError, "expected a coefficient", peek().line,
           peek().col);
    return c;
  }

  NCPoly parse_poly() {
    NCPoly poly;
    parse_term(poly);
    while (at_punct("+")) {
      next();
      parse_term(poly);
    }
    return poly;
  }

  // Frobenius power a coefficient picks up moving left past `w`.
  int twist_of(const Monomial& w) const {
    int t = 0;
    for (int g : w) t = (t + spec_.twist[g]) % spec_.k;
    return t;
  }

  void parse_term(NCPoly& poly) {
    const FieldSpec& F = *spec_.field;
    Coef c = 1;
    Monomial word;
    while (true) {
      const Token& f = peek();
      if (f.kind == Token::Int) {
        // bare integer coefficient; commuting it front picks up the twist
        next();
        c = F.mul(c, F.frobenius_pow(F.from_int(f.value), twist_of(word)));
      } else if (f.kind == Token::Punct && f.text == "(") {
        Coef x = parse_coef();
        c = F.mul(c, F.frobenius_pow(x, twist_of(word)));
      } else if (f.kind == Token::Ident && f.text == "a" &&
                 gen_index("a") < 0) {
        next();
        if (F.k() < 2)
          fail(Errc::UnknownGenerator, "'a' is not a generator", f.line,
               f.col);
        int d = 1;
        if (at_punct("^")) {
          next();
          d = int(expect(Token::Int, "exponent").value);
        }
        c = F.mul(c, F.frobenius_pow(F.pow(F.gen(), d), twist_of(word)));
      } else if (f.kind == Token::Ident && !is_keyword(f.text)) {
        next();
        int g = gen_index(f.text);
        if (g < 0)
          fail(Errc::UnknownGenerator, "'" + f.text + "' is not a generator",
               f.line, f.col);
        int d = 1;
        if (at_punct("^")) {
          next();
          d = int(expect(Token::Int, "exponent").value);
        }
        for (int i = 0; i < d; ++i) word.push_back(g);
      } else {
        fail(Errc::SyntaxError, "expected a term", f.line, f.col);
      }
      if (at_punct("*"))
        next();
      else
        break;
    }
    nc_add_term(poly, word, c, F);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  RingSpecFile spec_;
  bool saw_presentation_ = false;
};

}  // namespace dsl_detail

inline RingSpecFile parse(const std::string& text) {
  return dsl_detail::Parser(text).run();
}

// ---------------------------------------------------------------------------
// Renderer (canonical form; parse(render(s)) == s)
// ---------------------------------------------------------------------------

namespace dsl_detail {

inline std::string coef_text(const FieldSpec& F, Coef c) {
  if (F.k() == 1) return std::to_string(int(c));
  // digits of c in base p give the coefficients of powers of `a`
  std::vector<std::string> terms;
  for (int d = F.k() - 1; d >= 0; --d) {
    int v = F.digit(c, d);
    if (v == 0) continue;
    std::string t;
    if (d == 0) {
      t = std::to_string(v);
    } else {
      if (v != 1) t = std::to_string(v) + "*";
      t += "a";
      if (d > 1) t += "^" + std::to_string(d);
    }
    terms.push_back(t);
  }
  if (terms.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i) s += "+";
    s += terms[i];
  }
  bool atomic = terms.size() == 1 && s.find('*') == std::string::npos;
  return atomic ? s : "(" + s + ")";
}

inline std::string word_text(const RingSpecFile& s, const Monomial& w) {
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += s.gens[w[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

inline std::string poly_text(const RingSpecFile& s, const NCPoly& p) {
  const FieldSpec& F = *s.field;
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : p) {
    if (!out.empty()) out += " + ";
    if (w.empty()) {
      out += coef_text(F, c);
    } else if (c == 1) {
      out += word_text(s, w);
    } else {
      out += coef_text(F, c) + "*" + word_text(s, w);
    }
  }
  return out;
}

inline std::string field_text(const RingSpecFile& s) {
  if (s.p == 2 && s.k == 1) return "F2";
  if (s.p == 2 && s.k == 2 && s.modulus.empty()) return "F4";
  std::string out = "GF(" + std::to_string(s.p);
  if (s.k != 1 || !s.modulus.empty()) out += "," + std::to_string(s.k);
  if (!s.modulus.empty()) {
    out += ",";
    bool any = false;
    for (int d = int(s.modulus.size()) - 1; d >= 0; --d) {
      int v = s.modulus[d];
      if (v == 0) continue;
      if (any) out += "+";
      any = true;
      if (d == 0) {
        out += std::to_string(v);
      } else {
        if (v != 1) out += std::to_string(v) + "*";
        out += "x";
        if (d > 1) out += "^" + std::to_string(d);
      }
    }
    if (!any) out += "0";
  }
  out += ")";
  return out;
}

}  // namespace dsl_detail

inline std::string render(const RingSpecFile& s) {
  using namespace dsl_detail;
  std::string out = "ring \"" + s.name + "\" {\n";
  out += "  field " + field_text(s) + "\n";
  switch (s.kind) {
    case SpecKind::presentation: {
      out += "  gens";
      for (const std::string& g : s.gens) out += " " + g;
      out += "\n";
      bool any_sq = false;
      for (char f : s.sqzero) any_sq |= (f != 0);
      if (any_sq) {
        out += "  sqzero";
        for (size_t i = 0; i < s.gens.size(); ++i)
          if (s.sqzero[i]) out += " " + s.gens[i];
        out += "\n";
      }
      for (size_t i = 0; i < s.gens.size(); ++i)
        if (s.twist[i]) out += "  skew " + s.gens[i] + " frob\n";
      for (const auto& c : s.comms)
        out += "  comm " + s.gens[c.left] + " " + s.gens[c.right] + " " +
               coef_text(*s.field, c.coef) + "\n";
      if (!s.relations.empty()) {
        out += "  rel ";
        for (size_t i = 0; i < s.relations.size(); ++i) {
          if (i) out += ", ";
          out += poly_text(s, s.relations[i]);
        }
        out += "\n";
      }
      break;
    }
    case SpecKind::group:
      out += "  group " + (s.group_name == "file"
                               ? "file \"" + s.group_file + "\""
                               : s.group_name) +
             "\n";
      break;
    case SpecKind::matrix:
      out += "  matrix " + std::to_string(s.matrix_n) + "\n";
      break;
    case SpecKind::chain:
      out += "  chain " + std::to_string(s.chain_k) + "\n";
      break;
    case SpecKind::sum:
      out += "  sum \"" + s.sum_left + "\" \"" + s.sum_right + "\"\n";
      break;
  }
  if (s.maxdeg != 8) out += "  maxdeg " + std::to_string(s.maxdeg) + "\n";
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------
// Building
// ---------------------------------------------------------------------------

inline Presentation to_presentation(const RingSpecFile& s) {
  if (s.kind != SpecKind::presentation)
    fail(Errc::Unsupported, "spec '" + s.name + "' is not a presentation");
  Presentation p;
  p.field = s.field;
  p.name = s.name;
  p.gens = s.gens;
  p.twist = s.twist;
  p.sqzero = s.sqzero;
  p.relations = s.relations;
  p.degree_bound = s.maxdeg;
  const FieldSpec& F = *s.field;
  for (const auto& c : s.comms) {
    // left*right = coef*(right*left)
    NCPoly r;
    nc_add_term(r, {c.left, c.right}, 1, F);
    nc_add_term(r, {c.right, c.left}, F.neg(c.coef), F);
    p.relations.push_back(std::move(r));
  }
  return p;
}

// The inverse mapping used when a programmatic Presentation (e.g. a search
// hit) needs a textual form.  Works for prime fields and F4.
inline RingSpecFile spec_from_presentation(const Presentation& p) {
  RingSpecFile s;
  const FieldSpec& F = *p.field;
  if (F.k() == 1) {
    s.p = F.p();
    s.k = 1;
  } else if (F.p() == 2 && F.k() == 2) {
    s.p = 2;
    s.k = 2;
  } else {
    fail(Errc::Unsupported,
         "no textual field form for " + F.name() + " presentations");
  }
  s.field = F.k() == 2 ? GF4() : field_make(F.p());
  s.name = p.name;
  s.kind = SpecKind::presentation;
  s.gens = p.gens;
  s.twist = p.twist;
  s.sqzero = p.sqzero;
  s.relations = p.relations;
  s.maxdeg = p.degree_bound;
  return s;
}

struct Built {
  std::string name;
  FiniteAlgebra algebra;
  std::optional<BuiltRing> rewrite;  // present for presentations
};

inline Built build(const RingSpecFile& s) {
  switch (s.kind) {
    case SpecKind::presentation: {
      BuiltRing r = build_algebra(to_presentation(s));
      FiniteAlgebra a = r.algebra;
      return Built{s.name, std::move(a), std::move(r)};
    }
    case SpecKind::group: {
      GroupTable t = s.group_name == "D8"   ? d8_table()
                     : s.group_name == "Q8" ? q8_table()
                     : s.group_name == "file"
                         ? load_group_table(s.group_file)
                         : cyclic_table(std::stoi(s.group_name.substr(1)));
      return Built{s.name, group_algebra(s.field, t), std::nullopt};
    }
    case SpecKind::matrix:
      return Built{s.name, matrix_algebra(s.field, s.matrix_n), std::nullopt};
    case SpecKind::chain:
      return Built{s.name, chain_ring(s.field, s.chain_k), std::nullopt};
    case SpecKind::sum: {
      auto rings = corpus::corpus(true);
      const FiniteAlgebra* lhs = nullptr;
      const FiniteAlgebra* rhs = nullptr;
      for (const auto& r : rings) {
        if (r.name == s.sum_left) lhs = &r.algebra;
        if (r.name == s.sum_right) rhs = &r.algebra;
      }
      if (!lhs)
        fail(Errc::UnknownName, "no bundled ring named '" + s.sum_left + "'");
      if (!rhs)
        fail(Errc::UnknownName, "no bundled ring named '" + s.sum_right + "'");
      return Built{s.name, direct_sum(*lhs, *rhs), std::nullopt};
    }
  }
  fail(Errc::Internal, "unhandled spec kind");
}

inline Built build(const std::string& text) { return build(parse(text)); }

}  // namespace ringlab::dsl

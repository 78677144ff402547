#pragma once

// Problem files: a small declarative language naming an algebra, the manifold
// dimension, functions, operators, a structure and the checks to run.
//
//   # comment
//   algebra = truncated{ generators = [eps], relations = [eps^3] }
//   n = 2
//   poly f = x1^2 - 3/2*x2
//   apoly F = eps*x1 + (1 + eps)*x2
//   diffop X = diffop{ Z = [x2, -x1], mu = eps }
//   structure = lcs{ alpha = form1{ (1): 1 }, omega = form2{ (1,2): 1 } }
//   checks = [prop1, lie-rinehart, jacobi-axioms, prolongation]
//   seed = 42
//   samples = 100
//
// Other algebra forms: `truncated{ generators = [x, y], relations = [], degree_cap = 2 }`,
// `jet{ order = 2 }` for R[eps]/(eps^3), and `table{ dim = 2, labels = [1, e],
// constants = [ (0,0,0): 1, (0,1,1): 1, (1,0,1): 1 ] }` listing every nonzero
// structure constant a_i a_j = sum_k c_ijk a_k with 0-based indices.
// The other structure form is `jacobi{ Lambda = [[0, -1], [1, 0]], E = [0, 0] }`.
// Coordinates are x1..xn; identifier basis labels of the algebra may appear in
// apoly and diffop expressions.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "nearpoint/diff_op.hpp"
#include "nearpoint/errors.hpp"
#include "nearpoint/forms.hpp"
#include "nearpoint/jacobi.hpp"
#include "nearpoint/smooth_fn.hpp"
#include "nearpoint/weil_algebra.hpp"

namespace nearpoint {

namespace syntax {

struct Token {
  enum Kind { identifier, number, symbol, end } kind = end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t s = 0; s < k; ++s, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::identifier, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::number, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view("=[](){},:+-*/^").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::symbol, std::string(1, static_cast<char>(c)), line, col});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
    }
  }
  out.push_back({Token::end, "", line, col});
  return out;
}

/// Arithmetic expression tree.
struct Expr {
  enum Kind { literal, name, add, sub, mul, neg, power } kind = literal;
  Rational value;
  std::string text;
  unsigned exponent = 0;
  std::vector<Expr> args;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct FormEntry {
  std::vector<std::size_t> indices;
  Expr coefficient;
};

struct FormLiteral {
  std::size_t degree = 0;
  std::vector<FormEntry> entries;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : t_(std::move(tokens)) {}

  const Token& peek(std::size_t k = 0) const { return t_[std::min(pos_ + k, t_.size() - 1)]; }
  bool at_end() const { return peek().kind == Token::end; }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, at.line, at.column);
  }
  [[noreturn]] void fail(const std::string& message) const { fail(message, peek()); }

  const Token& take() { return t_[pos_ < t_.size() - 1 ? pos_++ : pos_]; }

  bool accept(std::string_view symbol) {
    if (peek().kind == Token::symbol && peek().text == symbol) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(std::string_view symbol) {
    if (!accept(symbol)) fail("expected '" + std::string(symbol) + "', found " + describe(peek()));
  }

  std::string identifier() {
    if (peek().kind != Token::identifier) fail("expected a name, found " + describe(peek()));
    return take().text;
  }

  /// Hyphenated names such as `lie-rinehart`.
  std::string dashed_identifier() {
    std::string out = identifier();
    while (peek().kind == Token::symbol && peek().text == "-" && peek(1).kind == Token::identifier) {
      take();
      out += "-" + take().text;
    }
    return out;
  }

  std::uint64_t unsigned_integer() {
    if (peek().kind != Token::number) fail("expected a non-negative integer, found " + describe(peek()));
    const Token& tok = take();
    if (tok.text.size() > 19) fail("integer out of range", tok);
    return std::stoull(tok.text);
  }

  /// Signed rational literal "p", "-p", "p/q"; q = 0 is rejected.
  Rational rational() {
    const Token start = peek();
    std::string text;
    if (accept("-")) text = "-";
    if (peek().kind != Token::number) fail("expected a rational number, found " + describe(peek()));
    text += take().text;
    if (accept("/")) {
      if (peek().kind != Token::number) fail("expected a denominator, found " + describe(peek()));
      text += "/" + take().text;
    }
    auto r = parse_rational(text);
    if (!r) fail("malformed rational '" + text + "'", start);
    return *r;
  }

  Expr expression() {
    Expr lhs = term();
    for (;;) {
      const Token& tok = peek();
      if (accept("+")) {
        lhs = binary(Expr::add, std::move(lhs), term(), tok);
      } else if (accept("-")) {
        lhs = binary(Expr::sub, std::move(lhs), term(), tok);
      } else {
        return lhs;
      }
    }
  }

  FormLiteral form() {
    const Token start = peek();
    const std::string kind = identifier();
    FormLiteral out;
    out.line = start.line;
    out.column = start.column;
    if (kind == "form1") {
      out.degree = 1;
    } else if (kind == "form2") {
      out.degree = 2;
    } else {
      fail("expected form1{...} or form2{...}, found '" + kind + "'", start);
    }
    expect("{");
    if (!accept("}")) {
      do {
        FormEntry e;
        const Token at = peek();
        expect("(");
        do {
          const std::uint64_t k = unsigned_integer();
          if (k == 0) fail("form indices are 1-based", at);
          e.indices.push_back(static_cast<std::size_t>(k - 1));
        } while (accept(","));
        expect(")");
        if (e.indices.size() != out.degree) fail("form entry has the wrong number of indices", at);
        for (std::size_t p = 1; p < e.indices.size(); ++p) {
          if (e.indices[p - 1] >= e.indices[p]) fail("form indices must be strictly increasing", at);
        }
        expect(":");
        e.coefficient = expression();
        out.entries.push_back(std::move(e));
      } while (accept(","));
      expect("}");
    }
    return out;
  }

  std::vector<Expr> expression_list() {
    std::vector<Expr> out;
    expect("[");
    if (accept("]")) return out;
    do {
      out.push_back(expression());
    } while (accept(","));
    expect("]");
    return out;
  }

  static std::string describe(const Token& t) {
    return t.kind == Token::end ? std::string("end of file") : "'" + t.text + "'";
  }

 private:
  static Expr binary(Expr::Kind kind, Expr a, Expr b, const Token& at) {
    Expr e;
    e.kind = kind;
    e.line = at.line;
    e.column = at.column;
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      const Token& tok = peek();
      if (accept("*")) {
        lhs = binary(Expr::mul, std::move(lhs), unary(), tok);
      } else if (tok.kind == Token::symbol && tok.text == "/") {
        fail("division is only allowed inside rational literals such as 3/2");
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    const Token tok = peek();
    if (accept("-")) {
      Expr e;
      e.kind = Expr::neg;
      e.line = tok.line;
      e.column = tok.column;
      e.args.push_back(unary());
      return e;
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    const Token tok = peek();
    if (accept("^")) {
      Expr e;
      e.kind = Expr::power;
      e.line = tok.line;
      e.column = tok.column;
      const std::uint64_t k = unsigned_integer();
      if (k > 64) fail("exponent too large", tok);
      e.exponent = static_cast<unsigned>(k);
      e.args.push_back(std::move(base));
      return e;
    }
    return base;
  }

  Expr primary() {
    const Token tok = peek();
    Expr e;
    e.line = tok.line;
    e.column = tok.column;
    if (tok.kind == Token::number) {
      e.kind = Expr::literal;
      e.value = rational();
      return e;
    }
    if (tok.kind == Token::identifier) {
      e.kind = Expr::name;
      e.text = take().text;
      return e;
    }
    if (accept("(")) {
      Expr inner = expression();
      expect(")");
      return inner;
    }
    fail("expected an expression, found " + describe(tok));
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

}  // namespace syntax

/// A parsed and evaluated problem file.
struct Problem {
  std::string name;
  AlgebraPtr algebra;
  std::string algebra_source;
  std::size_t n = 0;
  std::map<std::string, Poly> polys;
  std::map<std::string, APoly> apolys;
  std::vector<std::pair<std::string, DiffOp>> diffops;
  std::map<std::string, AElement> algebra_names;
  std::optional<LcsData> lcs;
  std::optional<JacobiData> jacobi;
  std::vector<std::string> checks;
  std::uint64_t seed = 0;
  std::uint64_t samples = 100;
};

namespace detail {

inline std::string where(const syntax::Expr& e) { return std::to_string(e.line) + ":" + std::to_string(e.column) + ": "; }

inline std::optional<std::size_t> coordinate_index(const std::string& name, std::size_t n) {
  if (name.size() < 2 || name[0] != 'x') return std::nullopt;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  }
  if (name[1] == '0') return std::nullopt;
  const std::size_t k = std::stoul(name.substr(1));
  if (k == 0 || k > n) return std::nullopt;
  return k - 1;
}

template <class T>
T power_of(const T& base, unsigned e, T one) {
  T out = std::move(one);
  for (unsigned k = 0; k < e; ++k) out = out * base;
  return out;
}

/// Evaluates an expression as an A-polynomial; `entity` names the definition in errors.
inline APoly eval_apoly(const Problem& p, const syntax::Expr& e, const std::string& entity) {
  using syntax::Expr;
  switch (e.kind) {
    case Expr::literal:
      return constant_apoly(p.n, AElement::scalar(p.algebra, e.value));
    case Expr::name: {
      if (auto j = coordinate_index(e.text, p.n)) return coordinate_A(p.algebra, p.n, *j);
      if (auto it = p.algebra_names.find(e.text); it != p.algebra_names.end()) return constant_apoly(p.n, it->second);
      if (auto it = p.polys.find(e.text); it != p.polys.end()) return prolong(it->second, p.algebra);
      if (auto it = p.apolys.find(e.text); it != p.apolys.end()) return it->second;
      throw SemanticError(where(e) + entity + ": unknown name '" + e.text + "'");
    }
    case Expr::add:
      return eval_apoly(p, e.args[0], entity) + eval_apoly(p, e.args[1], entity);
    case Expr::sub:
      return eval_apoly(p, e.args[0], entity) - eval_apoly(p, e.args[1], entity);
    case Expr::mul:
      return eval_apoly(p, e.args[0], entity) * eval_apoly(p, e.args[1], entity);
    case Expr::neg:
      return -eval_apoly(p, e.args[0], entity);
    case Expr::power:
      return power_of(eval_apoly(p, e.args[0], entity), e.exponent,
                      constant_apoly(p.n, AElement::one(p.algebra)));
  }
  throw SemanticError(where(e) + entity + ": bad expression");
}

/// Evaluates an expression as a real polynomial on M.
inline Poly eval_poly(const Problem& p, const syntax::Expr& e, const std::string& entity) {
  using syntax::Expr;
  switch (e.kind) {
    case Expr::literal:
      return constant_poly(p.n, e.value);
    case Expr::name: {
      if (auto j = coordinate_index(e.text, p.n)) return coordinate(p.n, *j);
      if (auto it = p.polys.find(e.text); it != p.polys.end()) return it->second;
      if (p.algebra_names.count(e.text) || p.apolys.count(e.text)) {
        throw SemanticError(where(e) + entity + ": '" + e.text + "' is A-valued where a real polynomial is expected");
      }
      throw SemanticError(where(e) + entity + ": unknown name '" + e.text + "'");
    }
    case Expr::add:
      return eval_poly(p, e.args[0], entity) + eval_poly(p, e.args[1], entity);
    case Expr::sub:
      return eval_poly(p, e.args[0], entity) - eval_poly(p, e.args[1], entity);
    case Expr::mul:
      return eval_poly(p, e.args[0], entity) * eval_poly(p, e.args[1], entity);
    case Expr::neg:
      return -eval_poly(p, e.args[0], entity);
    case Expr::power:
      return power_of(eval_poly(p, e.args[0], entity), e.exponent, constant_poly(p.n, Rational(1)));
  }
  throw SemanticError(where(e) + entity + ": bad expression");
}

/// A relation must be a product of generator powers.
inline void relation_monomial(const syntax::Expr& e, const std::vector<std::string>& generators,
                              std::vector<unsigned>& exps) {
  using syntax::Expr;
  if (e.kind == Expr::name) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (generators[g] == e.text) {
        ++exps[g];
        return;
      }
    }
    throw SemanticError(where(e) + "algebra: relation uses unknown generator '" + e.text + "'");
  }
  if (e.kind == Expr::mul) {
    relation_monomial(e.args[0], generators, exps);
    relation_monomial(e.args[1], generators, exps);
    return;
  }
  if (e.kind == Expr::power) {
    std::vector<unsigned> inner(generators.size(), 0);
    relation_monomial(e.args[0], generators, inner);
    for (std::size_t g = 0; g < exps.size(); ++g) exps[g] += inner[g] * e.exponent;
    return;
  }
  if (e.kind == Expr::literal && e.value == 1) return;
  throw SemanticError(where(e) + "algebra: relations must be monomials in the generators");
}

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

struct ProblemReader {
  syntax::Parser& ps;
  Problem& p;
  bool have_algebra = false;
  bool have_n = false;

  void require_context(const syntax::Token& at) {
    if (!have_algebra || !have_n) ps.fail("'algebra' and 'n' must be declared before this statement", at);
  }

  void define_name(const std::string& name, const syntax::Token& at) {
    if (coordinate_index(name, p.n) || p.algebra_names.count(name) || p.polys.count(name) || p.apolys.count(name)) {
      ps.fail("name '" + name + "' is already in use", at);
    }
    for (const auto& d : p.diffops) {
      if (d.first == name) ps.fail("name '" + name + "' is already in use", at);
    }
  }

  void read_algebra() {
    const syntax::Token start = ps.peek();
    const std::string kind = ps.identifier();
    ps.expect("{");
    std::vector<std::string> generators;
    std::vector<syntax::Expr> relations;
    std::optional<unsigned> cap;
    std::optional<std::uint64_t> order, dim;
    std::string jet_name = "eps";
    std::vector<std::string> labels;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational, syntax::Token>> constants;
    if (!ps.accept("}")) {
      do {
        const syntax::Token key_tok = ps.peek();
        const std::string key = ps.identifier();
        ps.expect("=");
        if (kind == "truncated" && key == "generators") {
          ps.expect("[");
          if (!ps.accept("]")) {
            do {
              generators.push_back(ps.identifier());
            } while (ps.accept(","));
            ps.expect("]");
          }
        } else if (kind == "truncated" && key == "relations") {
          relations = ps.expression_list();
        } else if (kind == "truncated" && key == "degree_cap") {
          cap = static_cast<unsigned>(ps.unsigned_integer());
        } else if (kind == "jet" && key == "order") {
          order = ps.unsigned_integer();
        } else if (kind == "jet" && key == "name") {
          jet_name = ps.identifier();
        } else if (kind == "table" && key == "dim") {
          dim = ps.unsigned_integer();
        } else if (kind == "table" && key == "labels") {
          ps.expect("[");
          do {
            const syntax::Token& t = ps.take();
            if (t.kind != syntax::Token::identifier && t.kind != syntax::Token::number) {
              ps.fail("expected a basis label", t);
            }
            labels.push_back(t.text);
          } while (ps.accept(","));
          ps.expect("]");
        } else if (kind == "table" && key == "constants") {
          ps.expect("[");
          if (!ps.accept("]")) {
            do {
              const syntax::Token at = ps.peek();
              ps.expect("(");
              const auto i = ps.unsigned_integer();
              ps.expect(",");
              const auto j = ps.unsigned_integer();
              ps.expect(",");
              const auto k = ps.unsigned_integer();
              ps.expect(")");
              ps.expect(":");
              constants.emplace_back(i, j, k, ps.rational(), at);
            } while (ps.accept(","));
            ps.expect("]");
          }
        } else {
          ps.fail("unknown key '" + key + "' in " + kind + "{...}", key_tok);
        }
      } while (ps.accept(","));
      ps.expect("}");
    }
    if (kind == "truncated") {
      if (generators.empty()) ps.fail("truncated algebra needs at least one generator", start);
      std::vector<Monomial> rels;
      for (const auto& r : relations) {
        std::vector<unsigned> exps(generators.size(), 0);
        relation_monomial(r, generators, exps);
        rels.emplace_back(std::move(exps));
      }
      p.algebra = make_truncated_polynomial_algebra(generators, rels, cap);
    } else if (kind == "jet") {
      if (!order || *order == 0) ps.fail("jet algebra needs order >= 1", start);
      p.algebra = make_jet_algebra_1d(static_cast<unsigned>(*order), jet_name);
    } else if (kind == "table") {
      if (!dim || *dim == 0) ps.fail("table algebra needs dim >= 1", start);
      if (labels.size() != *dim) ps.fail("table algebra: labels must list exactly dim entries", start);
      StructureTable table(labels);
      for (const auto& [i, j, k, c, at] : constants) {
        if (i >= *dim || j >= *dim || k >= *dim) ps.fail("structure constant index out of range", at);
        table.at(i, j, k) = c;
      }
      try {
        p.algebra = WeilAlgebra::make(std::move(table));
      } catch (const AlgebraError& e) {
        throw AlgebraError("algebra: " + std::string(e.what()));
      }
    } else {
      ps.fail("unknown algebra kind '" + kind + "' (expected truncated, jet or table)", start);
    }
    for (std::size_t i = 1; i < p.algebra->dim(); ++i) {
      const std::string& label = p.algebra->label(i);
      if (is_identifier(label)) p.algebra_names.emplace(label, AElement::basis(p.algebra, i));
    }
    have_algebra = true;
  }

  RForm read_real_form(const std::string& entity) {
    const syntax::FormLiteral lit = ps.form();
    RForm out(p.n, lit.degree, Rational(0));
    for (const auto& e : lit.entries) {
      for (std::size_t k : e.indices) {
        if (k >= p.n) {
          throw SemanticError(std::to_string(lit.line) + ":" + std::to_string(lit.column) + ": " + entity +
                              ": form index " + std::to_string(k + 1) + " exceeds n = " + std::to_string(p.n));
        }
      }
      out.add(e.indices, eval_poly(p, e.coefficient, entity));
    }
    return out;
  }

  void read_structure(const syntax::Token& at) {
    if (p.lcs || p.jacobi) ps.fail("structure is declared twice", at);
    const syntax::Token start = ps.peek();
    const std::string kind = ps.identifier();
    ps.expect("{");
    if (kind == "lcs") {
      std::optional<RForm> alpha, omega;
      if (!ps.accept("}")) {
        do {
          const syntax::Token key_tok = ps.peek();
          const std::string key = ps.identifier();
          ps.expect("=");
          if (key == "alpha") {
            alpha = read_real_form("structure alpha");
            if (alpha->degree() != 1) ps.fail("alpha must be a 1-form", key_tok);
          } else if (key == "omega") {
            omega = read_real_form("structure omega");
            if (omega->degree() != 2) ps.fail("omega must be a 2-form", key_tok);
          } else {
            ps.fail("unknown key '" + key + "' in lcs{...}", key_tok);
          }
        } while (ps.accept(","));
        ps.expect("}");
      }
      if (!omega) ps.fail("lcs structure needs omega", start);
      if (!alpha) alpha = RForm(p.n, 1, Rational(0));
      p.lcs = make_lcs(p.algebra, std::move(*alpha), std::move(*omega));
    } else if (kind == "jacobi") {
      std::optional<PolyMatrix> lambda;
      std::optional<std::vector<Poly>> e;
      if (!ps.accept("}")) {
        do {
          const syntax::Token key_tok = ps.peek();
          const std::string key = ps.identifier();
          ps.expect("=");
          if (key == "Lambda") {
            PolyMatrix m;
            ps.expect("[");
            do {
              std::vector<Poly> row;
              for (const auto& x : ps.expression_list()) row.push_back(eval_poly(p, x, "structure Lambda"));
              m.push_back(std::move(row));
            } while (ps.accept(","));
            ps.expect("]");
            lambda = std::move(m);
          } else if (key == "E") {
            std::vector<Poly> v;
            for (const auto& x : ps.expression_list()) v.push_back(eval_poly(p, x, "structure E"));
            e = std::move(v);
          } else {
            ps.fail("unknown key '" + key + "' in jacobi{...}", key_tok);
          }
        } while (ps.accept(","));
        ps.expect("}");
      }
      if (!lambda) ps.fail("jacobi structure needs Lambda", start);
      if (!e) e = std::vector<Poly>(p.n, zero_poly(p.n));
      if (lambda->size() != p.n || e->size() != p.n) {
        throw SemanticError(std::to_string(start.line) + ":" + std::to_string(start.column) +
                            ": structure: Lambda and E must have n = " + std::to_string(p.n) + " rows");
      }
      p.jacobi = make_jacobi(std::move(*lambda), std::move(*e));
    } else {
      ps.fail("unknown structure kind '" + kind + "' (expected lcs or jacobi)", start);
    }
  }

  DiffOp read_diffop(const std::string& entity, const syntax::Token& at) {
    const syntax::Token start = ps.peek();
    if (ps.identifier() != "diffop") ps.fail("expected diffop{...}", start);
    ps.expect("{");
    std::optional<std::vector<APoly>> z;
    APoly mu = zero_apoly(p.algebra, p.n);
    if (!ps.accept("}")) {
      do {
        const syntax::Token key_tok = ps.peek();
        const std::string key = ps.identifier();
        ps.expect("=");
        if (key == "Z") {
          std::vector<APoly> comps;
          for (const auto& x : ps.expression_list()) comps.push_back(eval_apoly(p, x, entity));
          z = std::move(comps);
        } else if (key == "mu") {
          mu = eval_apoly(p, ps.expression(), entity);
        } else {
          ps.fail("unknown key '" + key + "' in diffop{...}", key_tok);
        }
      } while (ps.accept(","));
      ps.expect("}");
    }
    if (!z) z = std::vector<APoly>(p.n, zero_apoly(p.algebra, p.n));
    if (z->size() != p.n) {
      throw SemanticError(std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + entity +
                          ": Z must have n = " + std::to_string(p.n) + " components");
    }
    return DiffOp{std::move(*z), std::move(mu)};
  }

  void statement() {
    const syntax::Token at = ps.peek();
    const std::string keyword = ps.identifier();
    if (keyword == "algebra") {
      if (have_algebra) ps.fail("algebra is declared twice", at);
      ps.expect("=");
      read_algebra();
    } else if (keyword == "n") {
      if (have_n) ps.fail("n is declared twice", at);
      ps.expect("=");
      const auto n = ps.unsigned_integer();
      if (n == 0 || n > 8) ps.fail("n must be between 1 and 8", at);
      p.n = static_cast<std::size_t>(n);
      have_n = true;
    } else if (keyword == "poly" || keyword == "apoly" || keyword == "diffop") {
      require_context(at);
      const syntax::Token name_tok = ps.peek();
      const std::string name = ps.identifier();
      define_name(name, name_tok);
      ps.expect("=");
      const std::string entity = keyword + " " + name;
      if (keyword == "poly") {
        p.polys.emplace(name, eval_poly(p, ps.expression(), entity));
      } else if (keyword == "apoly") {
        p.apolys.emplace(name, eval_apoly(p, ps.expression(), entity));
      } else {
        p.diffops.emplace_back(name, read_diffop(entity, name_tok));
      }
    } else if (keyword == "structure") {
      require_context(at);
      ps.expect("=");
      read_structure(at);
    } else if (keyword == "checks") {
      ps.expect("=");
      ps.expect("[");
      p.checks.clear();
      if (!ps.accept("]")) {
        do {
          p.checks.push_back(ps.dashed_identifier());
        } while (ps.accept(","));
        ps.expect("]");
      }
    } else if (keyword == "seed") {
      ps.expect("=");
      p.seed = ps.unsigned_integer();
    } else if (keyword == "samples") {
      ps.expect("=");
      p.samples = ps.unsigned_integer();
    } else {
      ps.fail("unknown statement '" + keyword + "'", at);
    }
  }
};

}  // namespace detail

/// Parses and evaluates problem text. Syntax errors raise ParseError; invalid
/// algebras raise AlgebraError; unresolved or ill-typed names raise SemanticError.
inline Problem parse_problem(std::string_view text, std::string name = "problem") {
  syntax::Parser ps(syntax::tokenize(text));
  Problem p;
  p.name = std::move(name);
  detail::ProblemReader reader{ps, p};
  while (!ps.at_end()) reader.statement();
  if (!reader.have_algebra) throw ParseError("missing 'algebra' statement", ps.peek().line, ps.peek().column);
  if (!reader.have_n) throw ParseError("missing 'n' statement", ps.peek().line, ps.peek().column);
  return p;
}

inline Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open problem file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str(), path.filename().string());
}

/// An A-polynomial given by name or as an expression over the problem's names.
inline APoly parse_apoly(const Problem& p, std::string_view text) {
  syntax::Parser ps(syntax::tokenize(text));
  const syntax::Expr e = ps.expression();
  if (!ps.at_end()) ps.fail("unexpected " + syntax::Parser::describe(ps.peek()) + " after expression");
  return detail::eval_apoly(p, e, "argument '" + std::string(text) + "'");
}

}  // namespace nearpoint

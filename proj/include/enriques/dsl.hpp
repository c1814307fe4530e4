#ifndef ENRIQUES_DSL_HPP
#define ENRIQUES_DSL_HPP

// A small query language over Chow rings and line-bundle cohomology.
//
//   space P(1)*P(2)*P(2);
//   bundle E = O(1,2,0) + O(1,0,2);
//   integrate (c1(E)^2 - c2(E)) * h * a^2;
//   bundle A = O(0,2,0) + O(0,0,2);
//   space P(A);
//   euler h + xi, h + xi, h + xi;
//   cohom O(0,-4,0) on P(1)*P(2)*P(2);
//
// Statements end with ';' (optional after the last one).  '#' starts a
// comment.  Juxtaposition multiplies: 2a, h a^2, (h+2a)^3 b^2.

#include "enriques/charclass.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <variant>

namespace enriques::dsl {

using chow::chow_class;

// Positions never take part in tree equality.
struct source_pos {
  int line = 1, column = 1;
  friend bool operator==(const source_pos&, const source_pos&) { return true; }
};

struct parse_error {
  source_pos pos;
  std::set<std::string> expected;
  std::string message;

  std::string str() const
  {
    std::ostringstream os;
    os << "parse error at " << pos.line << ":" << pos.column << ": " << message;
    if (!expected.empty()) {
      os << " (expected ";
      bool first = true;
      for (const auto& e : expected) {
        os << (first ? "" : ", ") << e;
        first = false;
      }
      os << ")";
    }
    return os.str();
  }
};

struct eval_error : std::runtime_error {
  eval_error(source_pos p, const std::string& what)
      : std::runtime_error("error at " + std::to_string(p.line) + ":" + std::to_string(p.column) + ": " + what),
        pos(p)
  {
  }
  source_pos pos;
};

// ---------------------------------------------------------------------
// Syntax tree.

struct bundle_term {
  integer multiplicity = 1;
  bool is_line = true;
  std::vector<integer> degrees; // O(d1,...,dk)
  std::string name;             // a declared bundle
  source_pos pos;
  bool operator==(const bundle_term&) const = default;
};

struct bundle_ast {
  std::vector<bundle_term> terms;
  bool operator==(const bundle_ast&) const = default;
};

struct expr {
  enum kind_t { number, name, add, sub, mul, neg, pow, chern_k, chern_total } kind = number;
  integer value;  // number literal, exponent, or k of c_k
  std::string id; // name
  std::vector<expr> args;
  bundle_ast bundle; // argument of c_k / c
  source_pos pos;
  bool operator==(const expr&) const = default;
};

struct space_factor {
  bool projectivize = false; // P(E) over the current space
  integer dim;
  std::string bundle;
  bool operator==(const space_factor&) const = default;
};

struct space_ast {
  std::vector<space_factor> factors;
  source_pos pos;
  bool operator==(const space_ast&) const = default;
};

struct twist_ast {
  bool is_line = true;
  std::vector<integer> degrees;
  std::vector<expr> cls; // 0 or 1 element
  source_pos pos;
  bool operator==(const twist_ast&) const = default;
};

struct statement {
  enum kind_t { space, bundle_def, let, integrate, chern, euler, chi, cohom, degeneracy } kind = integrate;
  std::string name;
  space_ast where;     // space, or the optional 'on' clause
  bool has_on = false;
  bundle_ast bundle;   // bundle_def, chern, degeneracy
  std::vector<expr> exprs; // let/integrate: one; euler/chi cut list
  twist_ast twist;     // chi, cohom
  integer source_rank, corank; // degeneracy
  source_pos pos;
  bool operator==(const statement&) const = default;
};

struct query {
  std::vector<statement> statements;
  bool operator==(const query&) const = default;
};

// ---------------------------------------------------------------------
// Lexer.

struct token {
  enum kind_t { end, integer_lit, ident, punct, bad } kind = end;
  std::string text;
  source_pos pos;
};

inline std::vector<token> lex(const std::string& src)
{
  std::vector<token> out;
  source_pos p;
  std::size_t i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
    ++i;
  };
  while (true) {
    while (i < src.size() && (std::isspace(static_cast<unsigned char>(src[i])) || src[i] == '#')) {
      if (src[i] == '#')
        while (i < src.size() && src[i] != '\n')
          advance();
      else
        advance();
    }
    if (i >= src.size()) {
      out.push_back({token::end, "", p});
      return out;
    }
    token t;
    t.pos = p;
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isdigit(c)) {
      t.kind = token::integer_lit;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        t.text += src[i];
        advance();
      }
    } else if (std::isalpha(c) || c == '_') {
      t.kind = token::ident;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        t.text += src[i];
        advance();
      }
    } else if (std::string("();,+-*^=").find(static_cast<char>(c)) != std::string::npos) {
      t.kind = token::punct;
      t.text = std::string(1, static_cast<char>(c));
      advance();
    } else {
      t.kind = token::bad;
      t.text = std::string(1, static_cast<char>(c));
      out.push_back(t);
      out.push_back({token::end, "", p});
      return out;
    }
    out.push_back(std::move(t));
  }
}

// ---------------------------------------------------------------------
// Parser.

inline const std::set<std::string>& keywords()
{
  static const std::set<std::string> k{"space", "bundle", "let", "integrate", "chern", "euler", "chi",
                                       "cohom", "degeneracy", "on", "cut", "O", "P", "c"};
  return k;
}

inline bool is_chern_name(const std::string& s)
{
  if (s.size() < 2 || s[0] != 'c')
    return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return s.size() <= 4;
}

class parser {
public:
  explicit parser(const std::string& src) : toks_(lex(src)) {}

  std::variant<query, parse_error> run()
  {
    try {
      query q;
      while (!at_end()) {
        q.statements.push_back(parse_statement());
        if (at_end())
          break;
        expect_punct(";");
        while (is_punct(";"))
          next();
      }
      return q;
    } catch (const parse_error& e) {
      return e;
    }
  }

private:
  static constexpr int max_depth = 200;

  const token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == token::end; }
  bool is_punct(const char* p, std::size_t k = 0) const
  {
    return peek(k).kind == token::punct && peek(k).text == p;
  }
  bool is_word(const char* w, std::size_t k = 0) const { return peek(k).kind == token::ident && peek(k).text == w; }

  [[noreturn]] void fail(std::set<std::string> expected, const std::string& msg = {}) const
  {
    const auto& t = peek();
    std::string m = msg;
    if (m.empty()) {
      if (t.kind == token::end)
        m = "unexpected end of input";
      else if (t.kind == token::bad)
        m = "unexpected character '" + t.text + "'";
      else
        m = "unexpected '" + t.text + "'";
    }
    throw parse_error{t.pos, std::move(expected), m};
  }

  void expect_punct(const char* p)
  {
    if (!is_punct(p))
      fail({std::string("'") + p + "'"});
    next();
  }

  void expect_word(const char* w)
  {
    if (!is_word(w))
      fail({std::string("'") + w + "'"});
    next();
  }

  integer parse_uint()
  {
    if (peek().kind != token::integer_lit)
      fail({"integer"});
    if (peek().text.size() > 60)
      fail({"integer"}, "integer literal too long");
    return integer(next().text);
  }

  integer parse_int()
  {
    if (is_punct("-")) {
      next();
      if (peek().kind != token::integer_lit)
        fail({"integer"});
      return -parse_uint();
    }
    if (peek().kind != token::integer_lit)
      fail({"integer", "'-'"});
    return parse_uint();
  }

  std::string parse_name()
  {
    if (peek().kind != token::ident || keywords().count(peek().text) || is_chern_name(peek().text))
      fail({"identifier"});
    return next().text;
  }

  statement parse_statement()
  {
    statement s;
    s.pos = peek().pos;
    if (peek().kind != token::ident)
      fail({"'space'", "'bundle'", "'let'", "'integrate'", "'chern'", "'euler'", "'chi'", "'cohom'",
            "'degeneracy'"});
    const std::string w = peek().text;
    if (w == "space") {
      next();
      s.kind = statement::space;
      s.where = parse_space();
    } else if (w == "bundle") {
      next();
      s.kind = statement::bundle_def;
      s.name = parse_name();
      expect_punct("=");
      s.bundle = parse_bundle();
    } else if (w == "let") {
      next();
      s.kind = statement::let;
      s.name = parse_name();
      expect_punct("=");
      s.exprs.push_back(parse_expr(0));
    } else if (w == "integrate") {
      next();
      s.kind = statement::integrate;
      s.exprs.push_back(parse_expr(0));
    } else if (w == "chern") {
      next();
      s.kind = statement::chern;
      s.bundle = parse_bundle();
    } else if (w == "euler") {
      next();
      s.kind = statement::euler;
      if (!at_end() && !is_punct(";"))
        s.exprs = parse_expr_list();
    } else if (w == "chi" || w == "cohom") {
      next();
      s.kind = w == "chi" ? statement::chi : statement::cohom;
      s.twist = parse_twist(s.kind == statement::cohom);
      if (is_word("on")) {
        next();
        s.has_on = true;
        s.where = parse_space();
      }
      if (s.kind == statement::chi && is_word("cut")) {
        next();
        s.exprs = parse_expr_list();
      }
    } else if (w == "degeneracy") {
      next();
      s.kind = statement::degeneracy;
      expect_punct("(");
      s.source_rank = parse_uint();
      expect_punct(",");
      s.bundle = parse_bundle();
      expect_punct(",");
      s.corank = parse_uint();
      expect_punct(")");
    } else {
      fail({"'space'", "'bundle'", "'let'", "'integrate'", "'chern'", "'euler'", "'chi'", "'cohom'",
            "'degeneracy'"});
    }
    return s;
  }

  std::vector<expr> parse_expr_list()
  {
    std::vector<expr> out{parse_expr(0)};
    while (is_punct(",")) {
      next();
      out.push_back(parse_expr(0));
    }
    return out;
  }

  space_ast parse_space()
  {
    space_ast sp;
    sp.pos = peek().pos;
    while (true) {
      expect_word("P");
      expect_punct("(");
      space_factor f;
      if (peek().kind == token::integer_lit) {
        f.dim = parse_uint();
      } else if (peek().kind == token::ident) {
        f.projectivize = true;
        f.bundle = parse_name();
      } else {
        fail({"integer", "identifier"});
      }
      expect_punct(")");
      sp.factors.push_back(std::move(f));
      if (!is_punct("*"))
        break;
      next();
    }
    return sp;
  }

  std::vector<integer> parse_degrees()
  {
    expect_word("O");
    expect_punct("(");
    std::vector<integer> d{parse_int()};
    while (is_punct(",")) {
      next();
      d.push_back(parse_int());
    }
    expect_punct(")");
    return d;
  }

  bundle_ast parse_bundle()
  {
    bundle_ast b;
    while (true) {
      bundle_term t;
      t.pos = peek().pos;
      if (peek().kind == token::integer_lit) {
        t.multiplicity = parse_uint();
        expect_punct("*");
      }
      if (is_word("O")) {
        t.degrees = parse_degrees();
      } else if (peek().kind == token::ident && !keywords().count(peek().text) && !is_chern_name(peek().text)) {
        t.is_line = false;
        t.name = next().text;
      } else {
        fail({"'O'", "identifier", "integer"});
      }
      b.terms.push_back(std::move(t));
      if (!is_punct("+"))
        break;
      next();
    }
    return b;
  }

  twist_ast parse_twist(bool line_only)
  {
    twist_ast t;
    t.pos = peek().pos;
    if (is_word("O")) {
      t.degrees = parse_degrees();
    } else if (line_only) {
      fail({"'O'"});
    } else {
      t.is_line = false;
      t.cls.push_back(parse_expr(0));
    }
    return t;
  }

  // precedence: 1 '+' '-', 2 '*' and juxtaposition, 3 unary '-', 4 '^'
  expr parse_expr(int depth)
  {
    if (depth > max_depth)
      fail({}, "expression nested too deeply");
    expr lhs = parse_product(depth + 1);
    while (is_punct("+") || is_punct("-")) {
      expr e;
      e.pos = peek().pos;
      e.kind = next().text == "+" ? expr::add : expr::sub;
      e.args.push_back(std::move(lhs));
      e.args.push_back(parse_product(depth + 1));
      lhs = std::move(e);
    }
    return lhs;
  }

  bool starts_atom() const
  {
    const auto& t = peek();
    if (t.kind == token::integer_lit)
      return true;
    if (t.kind == token::punct)
      return t.text == "(";
    if (t.kind == token::ident)
      return !keywords().count(t.text) || t.text == "c";
    return false;
  }

  expr parse_product(int depth)
  {
    expr lhs = parse_unary(depth + 1);
    while (true) {
      source_pos p = peek().pos;
      if (is_punct("*")) {
        next();
      } else if (!starts_atom()) {
        break;
      }
      expr e;
      e.pos = p;
      e.kind = expr::mul;
      e.args.push_back(std::move(lhs));
      e.args.push_back(parse_unary(depth + 1));
      lhs = std::move(e);
    }
    return lhs;
  }

  expr parse_unary(int depth)
  {
    if (depth > max_depth)
      fail({}, "expression nested too deeply");
    if (is_punct("-")) {
      expr e;
      e.pos = next().pos;
      e.kind = expr::neg;
      e.args.push_back(parse_unary(depth + 1));
      return e;
    }
    return parse_power(depth + 1);
  }

  expr parse_power(int depth)
  {
    expr base = parse_atom(depth + 1);
    if (is_punct("^")) {
      expr e;
      e.pos = next().pos;
      e.kind = expr::pow;
      e.value = parse_uint();
      e.args.push_back(std::move(base));
      return e;
    }
    return base;
  }

  expr parse_atom(int depth)
  {
    expr e;
    e.pos = peek().pos;
    const auto& t = peek();
    if (t.kind == token::integer_lit) {
      e.kind = expr::number;
      e.value = parse_uint();
      return e;
    }
    if (is_punct("(")) {
      next();
      e = parse_expr(depth + 1);
      expect_punct(")");
      return e;
    }
    if (t.kind == token::ident && (is_chern_name(t.text) || t.text == "c") && is_punct("(", 1)) {
      std::string n = next().text;
      next();
      if (n == "c") {
        e.kind = expr::chern_total;
      } else {
        e.kind = expr::chern_k;
        e.value = integer(n.substr(1));
      }
      e.bundle = parse_bundle();
      expect_punct(")");
      return e;
    }
    if (t.kind == token::ident && !keywords().count(t.text)) {
      e.kind = expr::name;
      e.id = next().text;
      return e;
    }
    fail({"integer", "identifier", "'('", "'-'"});
  }

  std::vector<token> toks_;
  std::size_t pos_ = 0;
};

inline std::variant<query, parse_error> parse(const std::string& text) { return parser(text).run(); }

// ---------------------------------------------------------------------
// Pretty printer; its output parses back to an equal tree.

inline std::string print(const bundle_ast& b)
{
  std::string s;
  for (std::size_t i = 0; i < b.terms.size(); ++i) {
    const auto& t = b.terms[i];
    if (i)
      s += " + ";
    if (t.multiplicity != 1)
      s += to_string(t.multiplicity) + "*";
    if (t.is_line) {
      s += "O(";
      for (std::size_t k = 0; k < t.degrees.size(); ++k)
        s += (k ? "," : "") + to_string(t.degrees[k]);
      s += ")";
    } else {
      s += t.name;
    }
  }
  return s;
}

inline int precedence(const expr& e)
{
  switch (e.kind) {
  case expr::add:
  case expr::sub:
    return 1;
  case expr::mul:
    return 2;
  case expr::neg:
    return 3;
  case expr::pow:
    return 4;
  default:
    return 5;
  }
}

inline std::string print(const expr& e)
{
  auto wrap = [](const expr& x, bool paren) { return paren ? "(" + print(x) + ")" : print(x); };
  switch (e.kind) {
  case expr::number:
    return to_string(e.value);
  case expr::name:
    return e.id;
  case expr::add:
  case expr::sub:
    return wrap(e.args[0], precedence(e.args[0]) < 1) + (e.kind == expr::add ? " + " : " - ") +
           wrap(e.args[1], precedence(e.args[1]) <= 1);
  case expr::mul:
    return wrap(e.args[0], precedence(e.args[0]) < 2) + " * " + wrap(e.args[1], precedence(e.args[1]) <= 2);
  case expr::neg:
    return "-" + wrap(e.args[0], precedence(e.args[0]) < 3);
  case expr::pow:
    return wrap(e.args[0], precedence(e.args[0]) < 5) + "^" + to_string(e.value);
  case expr::chern_k:
    return "c" + to_string(e.value) + "(" + print(e.bundle) + ")";
  case expr::chern_total:
    return "c(" + print(e.bundle) + ")";
  }
  return {};
}

inline std::string print(const space_ast& s)
{
  std::string out;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    if (i)
      out += "*";
    const auto& f = s.factors[i];
    out += "P(" + (f.projectivize ? f.bundle : to_string(f.dim)) + ")";
  }
  return out;
}

inline std::string print_list(const std::vector<expr>& es)
{
  std::string s;
  for (std::size_t i = 0; i < es.size(); ++i)
    s += (i ? ", " : "") + print(es[i]);
  return s;
}

inline std::string print(const twist_ast& t)
{
  if (!t.is_line)
    return print(t.cls.front());
  std::string s = "O(";
  for (std::size_t k = 0; k < t.degrees.size(); ++k)
    s += (k ? "," : "") + to_string(t.degrees[k]);
  return s + ")";
}

inline std::string print(const statement& s)
{
  switch (s.kind) {
  case statement::space:
    return "space " + print(s.where) + ";";
  case statement::bundle_def:
    return "bundle " + s.name + " = " + print(s.bundle) + ";";
  case statement::let:
    return "let " + s.name + " = " + print(s.exprs.front()) + ";";
  case statement::integrate:
    return "integrate " + print(s.exprs.front()) + ";";
  case statement::chern:
    return "chern " + print(s.bundle) + ";";
  case statement::euler:
    return s.exprs.empty() ? "euler;" : "euler " + print_list(s.exprs) + ";";
  case statement::chi:
  case statement::cohom: {
    std::string out = (s.kind == statement::chi ? "chi " : "cohom ") + print(s.twist);
    if (s.has_on)
      out += " on " + print(s.where);
    if (!s.exprs.empty())
      out += " cut " + print_list(s.exprs);
    return out + ";";
  }
  case statement::degeneracy:
    return "degeneracy(" + to_string(s.source_rank) + ", " + print(s.bundle) + ", " + to_string(s.corank) + ");";
  }
  return {};
}

inline std::string print(const query& q)
{
  std::string out;
  for (const auto& s : q.statements)
    out += print(s) + "\n";
  return out;
}

// ---------------------------------------------------------------------
// Evaluation.

class evaluator {
public:
  // Each statement that produces a value appends one line.
  std::vector<std::string> run(const query& q)
  {
    std::vector<std::string> out;
    for (const auto& s : q.statements) {
      auto r = exec(s);
      if (r)
        out.push_back(*r);
    }
    return out;
  }

  std::optional<std::string> exec(const statement& s)
  {
    switch (s.kind) {
    case statement::space:
      ring_ = make_space(s.where);
      return std::nullopt;
    case statement::bundle_def:
      bundles_[s.name] = eval_bundle(s.bundle, require_ring(s.pos));
      return std::nullopt;
    case statement::let:
      lets_[s.name] = eval(s.exprs.front());
      return std::nullopt;
    case statement::integrate:
      return to_string(chow::integrate(eval(s.exprs.front())));
    case statement::chern:
      return charclass::chern_total(eval_bundle(s.bundle, require_ring(s.pos))).str();
    case statement::euler:
      return to_string(charclass::euler_characteristic_top(intersection(s.exprs, require_ring(s.pos))));
    case statement::chi:
      return exec_chi(s);
    case statement::cohom:
      return exec_cohom(s);
    case statement::degeneracy: {
      auto ring = require_ring(s.pos);
      auto e = small(s.source_rank, s.pos, 16);
      auto r = small(s.corank, s.pos, 16);
      try {
        auto target = eval_bundle(s.bundle, ring);
        if (target.rank() > 16)
          throw eval_error(s.pos, "bundle rank too large");
        return charclass::degeneracy_class(e, target, r).str();
      } catch (const std::invalid_argument& ex) {
        throw eval_error(s.pos, ex.what());
      }
    }
    }
    return std::nullopt;
  }

  const chow::ring_ptr& ring() const { return ring_; }

private:
  static constexpr int max_dim = 24;
  static constexpr long long max_basis = 4096;

  static int small(const integer& v, source_pos p, int bound)
  {
    if (v > bound || v < -bound)
      throw eval_error(p, "value " + to_string(v) + " out of range");
    return static_cast<int>(v);
  }

  const chow::ring_ptr& require_ring(source_pos p) const
  {
    if (!ring_)
      throw eval_error(p, "no space declared");
    return ring_;
  }

  chow::ring_ptr make_space(const space_ast& sp)
  {
    bool proj = false;
    for (const auto& f : sp.factors)
      proj = proj || f.projectivize;
    if (proj) {
      if (sp.factors.size() != 1)
        throw eval_error(sp.pos, "P(bundle) cannot be combined with other factors");
      auto base = require_ring(sp.pos);
      auto b = find_bundle(sp.factors[0].bundle, base, sp.pos);
      int r = b.rank();
      if (r < 1 || r > 16)
        throw eval_error(sp.pos, "bundle rank out of range");
      long long basis = r;
      for (int d : base->factor_dims())
        basis *= d + 1;
      for (auto p = base; p->kind() == chow::ring_kind::bundle; p = p->base())
        basis *= p->bundle_rank();
      if (base->dimension() + r - 1 > max_dim || basis > max_basis)
        throw eval_error(sp.pos, "space too large");
      auto parts = charclass::chern_parts(charclass::chern_total(b), r);
      std::vector<chow_class> cs(parts.begin() + 1, parts.end());
      std::string name = "xi";
      for (int k = 2; base->index_of(name); ++k)
        name = "xi" + std::to_string(k);
      return chow::make_bundle_ring(base, cs, name);
    }
    std::vector<int> dims;
    int total = 0;
    long long basis = 1;
    for (const auto& f : sp.factors) {
      int d = small(f.dim, sp.pos, max_dim);
      dims.push_back(d);
      total += d;
      basis *= d + 1;
      if (basis > max_basis)
        break;
    }
    if (total > max_dim || basis > max_basis)
      throw eval_error(sp.pos, "space too large");
    return chow::make_multiproj(dims);
  }

  charclass::bundle_expr find_bundle(const std::string& name, const chow::ring_ptr& ring, source_pos p) const
  {
    auto it = bundles_.find(name);
    if (it == bundles_.end())
      throw eval_error(p, "unknown bundle " + name);
    const auto& b = it->second;
    if (b.ring->same_as(*ring))
      return b;
    if (!ring->extends(*b.ring))
      throw eval_error(p, "bundle " + name + " is not defined over the current space");
    charclass::bundle_expr out{ring, {}, {}};
    for (const auto& [l, m] : b.lines)
      out.lines.emplace_back(chow::lift(l, ring), m);
    for (const auto& f : b.formals)
      out.formals.push_back({chow::lift(f.total, ring), f.rank});
    return out;
  }

  charclass::bundle_expr eval_bundle(const bundle_ast& b, const chow::ring_ptr& ring) const
  {
    charclass::bundle_expr out{ring, {}, {}};
    for (const auto& t : b.terms) {
      int m = small(t.multiplicity, t.pos, 64);
      if (m < 1)
        throw eval_error(t.pos, "multiplicity must be positive");
      if (t.is_line) {
        std::vector<int> d;
        for (const auto& x : t.degrees)
          d.push_back(small(x, t.pos, 1000000));
        try {
          out.add_line(charclass::bundle_expr::line_class(ring, d), m);
        } catch (const std::invalid_argument& e) {
          throw eval_error(t.pos, e.what());
        }
      } else {
        auto sub = find_bundle(t.name, ring, t.pos);
        for (int k = 0; k < m; ++k)
          out = out + sub;
      }
    }
    if (out.rank() > 64)
      throw eval_error(b.terms.front().pos, "bundle rank too large");
    return out;
  }

  chow_class eval(const expr& e) const
  {
    const auto& ring = require_ring(e.pos);
    switch (e.kind) {
    case expr::number:
      return chow_class::constant(ring, e.value);
    case expr::name: {
      if (auto i = ring->index_of(e.id))
        return chow_class::gen(ring, *i);
      auto it = lets_.find(e.id);
      if (it == lets_.end())
        throw eval_error(e.pos, "unknown name " + e.id);
      if (it->second.ring()->same_as(*ring))
        return it->second;
      if (ring->extends(*it->second.ring()))
        return chow::lift(it->second, ring);
      throw eval_error(e.pos, e.id + " is not defined over the current space");
    }
    case expr::add:
      return eval(e.args[0]) + eval(e.args[1]);
    case expr::sub:
      return eval(e.args[0]) - eval(e.args[1]);
    case expr::mul:
      return eval(e.args[0]) * eval(e.args[1]);
    case expr::neg:
      return -eval(e.args[0]);
    case expr::pow: {
      if (e.value > 1000000)
        throw eval_error(e.pos, "exponent too large");
      return eval(e.args[0]).pow(static_cast<unsigned>(e.value));
    }
    case expr::chern_k: {
      if (e.value > 1000)
        return chow_class(ring);
      return charclass::chern_total(eval_bundle(e.bundle, ring)).part(static_cast<int>(e.value));
    }
    case expr::chern_total:
      return charclass::chern_total(eval_bundle(e.bundle, ring));
    }
    return chow_class(ring);
  }

  charclass::complete_intersection intersection(const std::vector<expr>& es, const chow::ring_ptr& ring) const
  {
    charclass::complete_intersection ci{ring, {}};
    for (const auto& x : es) {
      auto c = eval(x);
      auto k = c.homogeneous_codim();
      if (!c.is_zero() && (!k || *k != 1))
        throw eval_error(x.pos, "expected a divisor class");
      ci.divisors.push_back(c);
    }
    if (ci.dimension() < 0)
      throw eval_error(es.front().pos, "more divisors than the dimension");
    return ci;
  }

  std::optional<std::string> exec_chi(const statement& s)
  {
    auto saved = ring_;
    if (s.has_on)
      ring_ = make_space(s.where);
    struct restore {
      chow::ring_ptr& r;
      chow::ring_ptr old;
      ~restore() { r = old; }
    } guard{ring_, saved};
    const auto& ring = require_ring(s.pos);
    auto ci = intersection(s.exprs, ring);
    chow_class twist(ring);
    if (s.twist.is_line) {
      std::vector<int> d;
      for (const auto& x : s.twist.degrees)
        d.push_back(small(x, s.twist.pos, 1000000));
      try {
        twist = charclass::bundle_expr::line_class(ring, d);
      } catch (const std::invalid_argument& e) {
        throw eval_error(s.twist.pos, e.what());
      }
    } else {
      twist = eval(s.twist.cls.front());
    }
    std::string out;
    try {
      out = to_string(charclass::hrr_chi(ci, twist));
    } catch (const std::exception& e) {
      throw eval_error(s.pos, e.what());
    }
    if (s.twist.is_line && s.exprs.empty() && ring->kind() == chow::ring_kind::multiprojective) {
      std::vector<int> d;
      for (const auto& x : s.twist.degrees)
        d.push_back(static_cast<int>(x));
      out += " " + charclass::bott_kunneth_table(ring->factor_dims(), d).str();
    }
    return out;
  }

  std::optional<std::string> exec_cohom(const statement& s)
  {
    chow::ring_ptr ring = s.has_on ? make_space(s.where) : require_ring(s.pos);
    if (ring->kind() != chow::ring_kind::multiprojective)
      throw eval_error(s.pos, "cohom needs a product of projective spaces");
    std::vector<int> d;
    for (const auto& x : s.twist.degrees)
      d.push_back(small(x, s.twist.pos, 1000000));
    if (d.size() != ring->factor_dims().size())
      throw eval_error(s.twist.pos, "multidegree has " + std::to_string(d.size()) + " entries, space has " +
                                        std::to_string(ring->factor_dims().size()) + " factors");
    return charclass::bott_kunneth_table(ring->factor_dims(), d).str();
  }

  chow::ring_ptr ring_;
  std::map<std::string, charclass::bundle_expr> bundles_;
  std::map<std::string, chow_class> lets_;
};

// Parses and evaluates; parse errors come back as the error text.
struct run_result {
  bool ok = true;
  std::vector<std::string> lines;
  std::string error;
};

inline run_result run(const std::string& text)
{
  run_result r;
  auto parsed = parse(text);
  if (auto* e = std::get_if<parse_error>(&parsed)) {
    r.ok = false;
    r.error = e->str();
    return r;
  }
  evaluator ev;
  try {
    for (const auto& s : std::get<query>(parsed).statements)
      if (auto line = ev.exec(s))
        r.lines.push_back(*line);
  } catch (const eval_error& e) {
    r.ok = false;
    r.error = e.what();
  } catch (const std::exception& e) {
    r.ok = false;
    r.error = std::string("error: ") + e.what();
  }
  return r;
}

} // namespace enriques::dsl

#endif

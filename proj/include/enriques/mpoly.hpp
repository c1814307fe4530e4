#ifndef ENRIQUES_MPOLY_HPP
#define ENRIQUES_MPOLY_HPP

// Sparse multigraded polynomials over QQ or GF(p).  Terms are kept sorted
// by grevlex with the ring's variable order, without zero coefficients.

#include "enriques/field.hpp"
#include "enriques/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace enriques::mpoly {

struct var_block {
  std::string name;
  std::vector<std::size_t> vars;
};

template <class Field>
class poly_ring {
public:
  poly_ring(Field field, std::vector<std::string> vars, std::vector<var_block> blocks)
      : field_(std::move(field)), vars_(std::move(vars)), blocks_(std::move(blocks))
  {
    if (vars_.size() > max_vars)
      throw std::invalid_argument("poly_ring: at most " + std::to_string(max_vars) + " variables");
    for (const auto& b : blocks_)
      for (auto v : b.vars)
        if (v >= vars_.size())
          throw std::invalid_argument("poly_ring: block variable out of range");
  }

  const Field& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<var_block>& blocks() const { return blocks_; }

  std::optional<std::size_t> var_index(const std::string& name) const
  {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name)
        return i;
    return std::nullopt;
  }

  std::size_t require_var(const std::string& name) const
  {
    auto i = var_index(name);
    if (!i)
      throw std::invalid_argument("unknown variable " + name);
    return *i;
  }

  bool compatible(const poly_ring& o) const { return this == &o || (field_ == o.field_ && vars_ == o.vars_); }

private:
  Field field_;
  std::vector<std::string> vars_;
  std::vector<var_block> blocks_;
};

template <class Field>
using ring_ptr = std::shared_ptr<const poly_ring<Field>>;

// Ring with one block per (name, variables) entry, variables in block order.
template <class Field>
ring_ptr<Field> make_ring(Field field, const std::vector<std::pair<std::string, std::vector<std::string>>>& blocks)
{
  std::vector<std::string> vars;
  std::vector<var_block> bs;
  for (const auto& [name, vs] : blocks) {
    var_block b{name, {}};
    for (const auto& v : vs) {
      b.vars.push_back(vars.size());
      vars.push_back(v);
    }
    bs.push_back(std::move(b));
  }
  return std::make_shared<const poly_ring<Field>>(std::move(field), std::move(vars), std::move(bs));
}

// Same variables and blocks over another field.
template <class To, class From>
ring_ptr<To> change_field(const ring_ptr<From>& r, To field)
{
  return std::make_shared<const poly_ring<To>>(std::move(field), r->vars(), r->blocks());
}

template <class Field>
class polynomial {
public:
  using value_type = typename Field::value_type;
  struct term {
    monomial m;
    value_type c;
  };

  polynomial() = default;
  explicit polynomial(ring_ptr<Field> ring) : ring_(std::move(ring)) {}

  // Takes terms in any order, combines duplicates and drops zeros.
  polynomial(ring_ptr<Field> ring, std::vector<term> terms) : ring_(std::move(ring)), terms_(std::move(terms))
  {
    canonicalize();
  }

  static polynomial from_sorted(ring_ptr<Field> ring, std::vector<term> terms)
  {
    polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  static polynomial constant(const ring_ptr<Field>& ring, value_type v)
  {
    polynomial p(ring);
    if (!ring->field().is_zero(v))
      p.terms_.push_back({monomial{}, std::move(v)});
    return p;
  }

  static polynomial variable(const ring_ptr<Field>& ring, std::size_t i)
  {
    monomial m;
    m.set(i, 1);
    polynomial p(ring);
    p.terms_.push_back({m, ring->field().one()});
    return p;
  }

  static polynomial variable(const ring_ptr<Field>& ring, const std::string& name)
  {
    return variable(ring, ring->require_var(name));
  }

  const ring_ptr<Field>& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<term>& terms() const { return terms_; }
  std::vector<term>& raw_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const monomial& lead_monomial() const { return terms_.front().m; }
  const value_type& lead_coefficient() const { return terms_.front().c; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.deg == 0); }

  bool affine() const { return affine_; }
  void set_affine(bool a) { affine_ = a; }

  int total_degree() const
  {
    int d = -1;
    for (const auto& t : terms_)
      d = std::max<int>(d, t.m.deg);
    return d;
  }

  // Per-block degree when every term has the same one.
  std::optional<std::vector<int>> multidegree() const
  {
    const auto& blocks = ring_->blocks();
    std::optional<std::vector<int>> md;
    for (const auto& t : terms_) {
      std::vector<int> d(blocks.size(), 0);
      for (std::size_t b = 0; b < blocks.size(); ++b)
        for (auto v : blocks[b].vars)
          d[b] += t.m[v];
      if (md && *md != d)
        return std::nullopt;
      md = std::move(d);
    }
    if (!md)
      md = std::vector<int>(blocks.size(), 0);
    return md;
  }

  bool is_multihomogeneous() const { return multidegree().has_value(); }

  polynomial operator-() const
  {
    polynomial r(*this);
    for (auto& t : r.terms_)
      t.c = field().neg(t.c);
    return r;
  }

  friend polynomial operator+(const polynomial& a, const polynomial& b) { return a.combine(b, false); }
  friend polynomial operator-(const polynomial& a, const polynomial& b) { return a.combine(b, true); }
  polynomial& operator+=(const polynomial& b) { return *this = combine(b, false); }
  polynomial& operator-=(const polynomial& b) { return *this = combine(b, true); }

  friend polynomial operator*(const polynomial& a, const polynomial& b)
  {
    a.check(b);
    std::vector<term> ts;
    ts.reserve(a.size() * b.size());
    const auto& f = a.field();
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_)
        ts.push_back({x.m * y.m, f.mul(x.c, y.c)});
    polynomial r(a.ring_, std::move(ts));
    r.affine_ = a.affine_ || b.affine_;
    return r;
  }

  polynomial scale(const value_type& s) const
  {
    polynomial r(ring_);
    r.affine_ = affine_;
    if (field().is_zero(s))
      return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.push_back({t.m, field().mul(t.c, s)});
    return r;
  }

  polynomial mul_term(const monomial& m, const value_type& s) const
  {
    polynomial r(ring_);
    if (field().is_zero(s))
      return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.push_back({t.m * m, field().mul(t.c, s)});
    return r;
  }

  polynomial pow(unsigned n) const
  {
    polynomial r = constant(ring_, field().one());
    polynomial b = *this;
    while (n) {
      if (n & 1u)
        r = r * b;
      n >>= 1u;
      if (n)
        b = b * b;
    }
    return r;
  }

  polynomial monic() const
  {
    if (is_zero())
      return *this;
    return scale(field().inv(lead_coefficient()));
  }

  polynomial derivative(std::size_t var) const
  {
    std::vector<term> ts;
    const auto& f = field();
    for (const auto& t : terms_) {
      unsigned e = t.m[var];
      if (e == 0)
        continue;
      monomial m = t.m;
      m.set(var, e - 1);
      auto c = f.mul(t.c, f.from_int(e));
      if (!f.is_zero(c))
        ts.push_back({m, c});
    }
    polynomial r(ring_, std::move(ts));
    r.affine_ = affine_;
    return r;
  }

  value_type evaluate(const std::vector<value_type>& point) const
  {
    const auto& f = field();
    value_type acc = f.zero();
    for (const auto& t : terms_) {
      value_type v = t.c;
      for (std::size_t i = 0; i < ring_->nvars(); ++i)
        for (unsigned k = 0; k < t.m[i]; ++k)
          v = f.mul(v, point.at(i));
      acc = f.add(acc, v);
    }
    return acc;
  }

  friend bool operator==(const polynomial& a, const polynomial& b)
  {
    if (a.terms_.size() != b.terms_.size())
      return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].m != b.terms_[i].m || !(a.terms_[i].c == b.terms_[i].c))
        return false;
    return true;
  }
  friend bool operator!=(const polynomial& a, const polynomial& b) { return !(a == b); }

  // Canonical text: grevlex-descending terms, "c*x^e*y", coefficient 1 omitted.
  std::string str() const
  {
    if (terms_.empty())
      return "0";
    std::ostringstream os;
    const auto& f = field();
    bool first = true;
    for (const auto& t : terms_) {
      bool neg = f.is_negative(t.c);
      value_type mag = neg ? f.neg(t.c) : t.c;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        if (t.m[i] == 0)
          continue;
        if (!mono.empty())
          mono += "*";
        mono += ring_->vars()[i];
        if (t.m[i] > 1)
          mono += "^" + std::to_string(t.m[i]);
      }
      if (mono.empty())
        os << f.str(mag);
      else if (f.is_one(mag))
        os << mono;
      else
        os << f.str(mag) << "*" << mono;
    }
    return os.str();
  }

private:
  void check(const polynomial& o) const
  {
    if (!ring_ || !o.ring_ || !ring_->compatible(*o.ring_))
      throw std::invalid_argument("polynomials from different rings");
  }

  polynomial combine(const polynomial& b, bool subtract) const
  {
    check(b);
    const auto& f = field();
    polynomial r(ring_);
    r.affine_ = affine_ || b.affine_;
    r.terms_.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
      int cmp;
      if (i == terms_.size())
        cmp = -1;
      else if (j == b.terms_.size())
        cmp = 1;
      else
        cmp = grevlex_cmp(terms_[i].m, b.terms_[j].m);
      if (cmp > 0)
        r.terms_.push_back(terms_[i++]);
      else if (cmp < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.m, subtract ? f.neg(t.c) : t.c});
      } else {
        auto c = subtract ? f.sub(terms_[i].c, b.terms_[j].c) : f.add(terms_[i].c, b.terms_[j].c);
        if (!f.is_zero(c))
          r.terms_.push_back({terms_[i].m, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void canonicalize()
  {
    const auto& f = field();
    std::sort(terms_.begin(), terms_.end(),
              [](const term& x, const term& y) { return grevlex_cmp(x.m, y.m) > 0; });
    std::vector<term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().m == t.m)
        out.back().c = f.add(out.back().c, t.c);
      else
        out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [&](const term& t) { return f.is_zero(t.c); }),
              out.end());
    terms_ = std::move(out);
  }

  ring_ptr<Field> ring_;
  std::vector<term> terms_;
  bool affine_ = false;
};

// ---------------------------------------------------------------------
// Text parsing: sums of terms "c*x^e*y", c an integer or fraction.

template <class Field>
polynomial<Field> parse_polynomial(const ring_ptr<Field>& ring, const std::string& text)
{
  using poly = polynomial<Field>;
  const auto& f = ring->field();
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(i) + ": " + what);
  };
  auto read_int = [&]() {
    std::size_t s = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (s == i)
      fail("expected integer");
    return integer(text.substr(s, i - s));
  };
  std::vector<typename poly::term> terms;
  skip();
  if (text.substr(i) == "0")
    return poly(ring);
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size())
      break;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
      neg = text[i] == '-';
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    rational coef = 1;
    bool have_coef = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      integer num = read_int();
      integer den = 1;
      if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int();
      }
      coef = rational(num, den);
      have_coef = true;
    }
    monomial m;
    bool need_factor = !have_coef;
    while (true) {
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
        need_factor = true;
      }
      if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        std::size_t s = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
          ++i;
        auto v = ring->var_index(text.substr(s, i - s));
        if (!v)
          fail("unknown variable '" + text.substr(s, i - s) + "'");
        unsigned e = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip();
          e = static_cast<unsigned>(read_int());
        }
        m.set(*v, m[*v] + e);
        need_factor = false;
        continue;
      }
      if (need_factor)
        fail("expected variable");
      break;
    }
    if (neg)
      coef = -coef;
    terms.push_back({m, f.from_rational(coef)});
  }
  if (first)
    fail("empty polynomial");
  return poly(ring, std::move(terms));
}

// Reduction of a p-integral rational polynomial modulo p.
inline polynomial<prime_field> reduce_mod(const polynomial<rational_field>& f,
                                          const ring_ptr<prime_field>& target)
{
  std::vector<polynomial<prime_field>::term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms())
    ts.push_back({t.m, target->field().from_rational(t.c)});
  return polynomial<prime_field>(target, std::move(ts));
}

// Image of a variable under a substitution: 0, 1, or a target variable.
struct var_image {
  enum kind_t { zero, one, var } kind = var;
  std::size_t index = 0;
};

template <class Field>
polynomial<Field> substitute(const polynomial<Field>& f, const ring_ptr<Field>& target,
                             const std::vector<var_image>& image)
{
  using poly = polynomial<Field>;
  std::vector<typename poly::term> ts;
  for (const auto& t : f.terms()) {
    monomial m;
    bool dead = false;
    for (std::size_t i = 0; i < f.ring()->nvars() && !dead; ++i) {
      unsigned e = t.m[i];
      if (e == 0)
        continue;
      const auto& im = image.at(i);
      if (im.kind == var_image::zero)
        dead = true;
      else if (im.kind == var_image::var)
        m.set(im.index, m[im.index] + e);
    }
    if (!dead)
      ts.push_back({m, t.c});
  }
  poly r(target, std::move(ts));
  r.set_affine(true);
  return r;
}

// Sets the chart variables (one per block) to 1; other variables are kept.
template <class Field>
polynomial<Field> dehomogenize(const polynomial<Field>& f, const std::vector<std::string>& chart)
{
  const auto& ring = f.ring();
  std::vector<var_image> image(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    image[i] = {var_image::var, i};
  std::vector<bool> block_hit(ring->blocks().size(), false);
  for (const auto& name : chart) {
    std::size_t v = ring->require_var(name);
    for (std::size_t b = 0; b < ring->blocks().size(); ++b)
      for (auto x : ring->blocks()[b].vars)
        if (x == v) {
          if (block_hit[b])
            throw std::invalid_argument("dehomogenize: two chart variables in block " + ring->blocks()[b].name);
          block_hit[b] = true;
        }
    image[v] = {var_image::one, 0};
  }
  for (std::size_t b = 0; b < block_hit.size(); ++b)
    if (!block_hit[b])
      throw std::invalid_argument("dehomogenize: no chart variable for block " + ring->blocks()[b].name);
  return substitute(f, ring, image);
}

// All monomials of the given per-block degree, blocks in ring order and
// each block enumerated lexicographically (highest power of the first
// variable first).
template <class Field>
std::vector<monomial> monomials_of_multidegree(const ring_ptr<Field>& ring, const std::vector<int>& md)
{
  const auto& blocks = ring->blocks();
  if (md.size() != blocks.size())
    throw std::invalid_argument("multidegree length does not match block count");
  std::vector<monomial> acc{monomial{}};
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (md[b] < 0)
      throw std::invalid_argument("negative multidegree");
    std::vector<monomial> block_monos;
    const auto& vs = blocks[b].vars;
    monomial cur;
    auto rec = [&](auto&& self, std::size_t k, int left) -> void {
      if (k + 1 == vs.size()) {
        cur.set(vs[k], left);
        block_monos.push_back(cur);
        cur.set(vs[k], 0);
        return;
      }
      for (int x = left; x >= 0; --x) {
        cur.set(vs[k], x);
        self(self, k + 1, left - x);
      }
      cur.set(vs[k], 0);
    };
    if (vs.empty()) {
      if (md[b] != 0)
        throw std::invalid_argument("positive degree on an empty block");
      block_monos.push_back(monomial{});
    } else {
      rec(rec, 0, md[b]);
    }
    std::vector<monomial> next;
    for (const auto& a : acc)
      for (const auto& m : block_monos)
        next.push_back(a * m);
    acc = std::move(next);
  }
  return acc;
}

// Dense form of the given multidegree with seeded nonzero coefficients.
template <class Field>
polynomial<Field> random_form(const ring_ptr<Field>& ring, const std::vector<int>& md, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::vector<typename polynomial<Field>::term> ts;
  for (const auto& m : monomials_of_multidegree(ring, md))
    ts.push_back({m, ring->field().random_nonzero(rng)});
  return polynomial<Field>(ring, std::move(ts));
}

// ---------------------------------------------------------------------
// Matrices

template <class Field>
struct poly_matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<polynomial<Field>> entries; // row-major

  poly_matrix() = default;
  poly_matrix(std::size_t r, std::size_t c, std::vector<polynomial<Field>> e)
      : rows(r), cols(c), entries(std::move(e))
  {
    if (entries.size() != r * c)
      throw std::invalid_argument("poly_matrix: entry count is not rows*cols");
  }

  static poly_matrix from_rows(const std::vector<std::vector<polynomial<Field>>>& rs)
  {
    poly_matrix m;
    m.rows = rs.size();
    m.cols = rs.empty() ? 0 : rs[0].size();
    for (const auto& r : rs) {
      if (r.size() != m.cols)
        throw std::invalid_argument("poly_matrix: ragged rows");
      m.entries.insert(m.entries.end(), r.begin(), r.end());
    }
    return m;
  }

  const polynomial<Field>& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  polynomial<Field>& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
};

// Determinant of the submatrix on the given rows and columns, by cofactor
// expansion along the first row.
template <class Field>
polynomial<Field> sub_determinant(const poly_matrix<Field>& m, const std::vector<std::size_t>& rows,
                                  const std::vector<std::size_t>& cols)
{
  if (rows.size() != cols.size() || rows.empty())
    throw std::invalid_argument("sub_determinant: need a nonempty square selection");
  if (rows.size() == 1)
    return m(rows[0], cols[0]);
  if (rows.size() == 2)
    return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
  const auto& ring = m.entries.front().ring();
  polynomial<Field> acc(ring);
  std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto& a = m(rows[0], cols[k]);
    if (a.is_zero())
      continue;
    std::vector<std::size_t> sub = cols;
    sub.erase(sub.begin() + static_cast<long>(k));
    auto t = a * sub_determinant(m, rest, sub);
    acc = (k % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

template <class Field>
polynomial<Field> determinant(const poly_matrix<Field>& m)
{
  if (m.rows != m.cols)
    throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<std::size_t> idx(m.rows);
  for (std::size_t i = 0; i < idx.size(); ++i)
    idx[i] = i;
  return sub_determinant(m, idx, idx);
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// All k x k minors, row subsets outer and column subsets inner, both in
// lexicographic order.
template <class Field>
std::vector<polynomial<Field>> minors(const poly_matrix<Field>& m, std::size_t k)
{
  if (k == 0 || k > std::min(m.rows, m.cols))
    throw std::invalid_argument("minors: k out of range");
  std::vector<polynomial<Field>> out;
  for (const auto& rs : subsets(m.rows, k))
    for (const auto& cs : subsets(m.cols, k))
      out.push_back(sub_determinant(m, rs, cs));
  return out;
}

template <class Field>
struct laplace_expansion {
  polynomial<Field> det;
  // det = sum cofactor_j * minor_j, minor_j the 2x2 minors of the first two
  // rows on column pairs (0,1), (0,2), (1,2) and cofactor_j = +-(third-row entry)
  std::vector<std::pair<polynomial<Field>, polynomial<Field>>> combination;
};

template <class Field>
laplace_expansion<Field> laplace_certificate(const poly_matrix<Field>& m3)
{
  if (m3.rows != 3 || m3.cols != 3)
    throw std::invalid_argument("laplace_certificate needs a 3x3 matrix");
  laplace_expansion<Field> out;
  out.det = determinant(m3);
  auto top = minors(poly_matrix<Field>::from_rows({{m3(0, 0), m3(0, 1), m3(0, 2)}, {m3(1, 0), m3(1, 1), m3(1, 2)}}), 2);
  // third-row expansion: det = m20*M(1,2) - m21*M(0,2) + m22*M(0,1)
  out.combination.push_back({m3(2, 2), top[0]});
  out.combination.push_back({-m3(2, 1), top[1]});
  out.combination.push_back({m3(2, 0), top[2]});
  polynomial<Field> check(out.det.ring());
  for (const auto& [c, mi] : out.combination)
    check += c * mi;
  if (check != out.det)
    throw std::logic_error("laplace_certificate: cofactor identity failed");
  return out;
}

template <class Field>
poly_matrix<Field> jacobian(const std::vector<polynomial<Field>>& polys, const std::vector<std::string>& vars)
{
  if (polys.empty())
    return {};
  const auto& ring = polys.front().ring();
  std::vector<std::size_t> idx;
  for (const auto& v : vars)
    idx.push_back(ring->require_var(v));
  std::vector<polynomial<Field>> e;
  for (const auto& f : polys)
    for (auto i : idx)
      e.push_back(f.derivative(i));
  return poly_matrix<Field>(polys.size(), idx.size(), std::move(e));
}

template <class Field>
poly_matrix<Field> jacobian(const std::vector<polynomial<Field>>& polys)
{
  if (polys.empty())
    return {};
  return jacobian(polys, polys.front().ring()->vars());
}

} // namespace enriques::mpoly

#endif

#ifndef ENRIQUES_CHOW_HPP
#define ENRIQUES_CHOW_HPP

// Chow rings of products of projective spaces and of projective bundles
// over them.  A ring is a truncated polynomial ring over the integers:
// multiprojective generators H_i satisfy H_i^{n_i+1} = 0, and a bundle
// generator xi of a rank r bundle E satisfies
//
//   xi^r - c1(E) xi^{r-1} + ... + (-1)^r cr(E) = 0,
//
// the relation for the bundle of rank one quotients of E with xi = c1(O(1)).
// Classes are kept in normal form at all times, so equality is equality of
// term maps.

#include "enriques/numeric.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace enriques::chow {

using exponents = std::vector<int>;

template <class T>
using term_map = std::map<exponents, T>;

struct generator {
  std::string name;
  // exponents in normal form are < bound
  int bound;
};

enum class ring_kind { multiprojective, bundle };

class chow_ring;
using ring_ptr = std::shared_ptr<const chow_ring>;

class chow_ring {
public:
  // xi_index^rank = sum_k (-1)^{k+1} c_k xi^{rank-k}, c_k given in this
  // ring's exponent layout (they never involve xi itself).
  struct rewrite {
    std::size_t index;
    int rank;
    std::vector<term_map<integer>> chern;
  };

  ring_kind kind() const { return kind_; }
  const std::vector<generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  // multiprojective factor dimensions of the underlying product
  const std::vector<int>& factor_dims() const { return dims_; }

  // only meaningful for bundle rings
  const ring_ptr& base() const { return base_; }
  int bundle_rank() const { return rank_; }
  // chern classes c_1..c_r of the projectivized bundle, in the base layout
  const std::vector<term_map<integer>>& bundle_chern() const { return chern_; }

  int dimension() const
  {
    int d = 0;
    for (const auto& g : gens_)
      d += g.bound - 1;
    return d;
  }

  std::optional<std::size_t> index_of(const std::string& name) const
  {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i].name == name)
        return i;
    return std::nullopt;
  }

  // The exponent vector of the fundamental point class.
  exponents top_exponents() const
  {
    exponents e(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i)
      e[i] = gens_[i].bound - 1;
    return e;
  }

  bool same_as(const chow_ring& o) const
  {
    if (this == &o)
      return true;
    if (gens_.size() != o.gens_.size() || rewrites_.size() != o.rewrites_.size())
      return false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i].name != o.gens_[i].name || gens_[i].bound != o.gens_[i].bound)
        return false;
    for (std::size_t i = 0; i < rewrites_.size(); ++i)
      if (rewrites_[i].index != o.rewrites_[i].index || rewrites_[i].chern != o.rewrites_[i].chern)
        return false;
    return true;
  }

  // True when `o` is this ring or one of the bases it was built from.
  bool extends(const chow_ring& o) const
  {
    if (same_as(o))
      return true;
    return base_ && base_->extends(o);
  }

  template <class T>
  term_map<T> normalize(term_map<T> in) const
  {
    term_map<T> out;
    std::vector<std::pair<exponents, T>> work(in.begin(), in.end());
    while (!work.empty()) {
      auto [e, c] = std::move(work.back());
      work.pop_back();
      if (c == 0)
        continue;
      // highest generator first: bundle generators sit after their base
      std::optional<std::size_t> over;
      for (std::size_t j = e.size(); j-- > 0;)
        if (e[j] >= gens_[j].bound) {
          over = j;
          break;
        }
      if (!over) {
        auto it = out.find(e);
        if (it == out.end())
          out.emplace(std::move(e), std::move(c));
        else {
          it->second += c;
          if (it->second == 0)
            out.erase(it);
        }
        continue;
      }
      const std::size_t j = *over;
      const rewrite* rw = find_rewrite(j);
      if (!rw)
        continue; // nilpotent generator
      exponents rest = e;
      rest[j] -= rw->rank;
      for (int k = 1; k <= rw->rank; ++k) {
        const T sign = (k % 2 == 1) ? T(1) : T(-1);
        for (const auto& [m, ck] : rw->chern[k - 1]) {
          exponents ne = rest;
          for (std::size_t i = 0; i < ne.size(); ++i)
            ne[i] += m[i];
          ne[j] += rw->rank - k;
          work.emplace_back(std::move(ne), sign * c * T(ck));
        }
      }
    }
    return out;
  }

private:
  friend ring_ptr make_multiproj(const std::vector<int>&, std::vector<std::string>);
  friend ring_ptr make_bundle_ring_terms(const ring_ptr&, const std::vector<term_map<integer>>&,
                                         std::string);

  const rewrite* find_rewrite(std::size_t j) const
  {
    for (const auto& r : rewrites_)
      if (r.index == j)
        return &r;
    return nullptr;
  }

  ring_kind kind_ = ring_kind::multiprojective;
  std::vector<generator> gens_;
  std::vector<int> dims_;
  std::vector<rewrite> rewrites_;
  ring_ptr base_;
  int rank_ = 0;
  std::vector<term_map<integer>> chern_;
};

// Default generator names: a lone P^1 factor is `h` (several are h1, h2, ...);
// other factors take a, b, d, e, ... skipping letters used by the query
// language (c, h, x, O, P).
inline std::vector<std::string> default_names(const std::vector<int>& dims)
{
  std::vector<std::string> names(dims.size());
  std::size_t lines = std::count(dims.begin(), dims.end(), 1);
  std::size_t line_no = 0;
  const std::string letters = "abdefgjklmnpqrstuvwyz";
  std::size_t letter = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] == 1) {
      ++line_no;
      names[i] = lines == 1 ? "h" : "h" + std::to_string(line_no);
    } else if (letter < letters.size()) {
      names[i] = std::string(1, letters[letter++]);
    } else {
      names[i] = "g" + std::to_string(i + 1);
    }
  }
  return names;
}

inline ring_ptr make_multiproj(const std::vector<int>& dims, std::vector<std::string> names = {})
{
  if (dims.empty())
    throw std::invalid_argument("make_multiproj: empty dimension list");
  for (int d : dims)
    if (d < 0)
      throw std::invalid_argument("make_multiproj: negative dimension");
  if (names.empty())
    names = default_names(dims);
  if (names.size() != dims.size())
    throw std::invalid_argument("make_multiproj: name count mismatch");
  auto r = std::make_shared<chow_ring>();
  r->kind_ = ring_kind::multiprojective;
  r->dims_ = dims;
  for (std::size_t i = 0; i < dims.size(); ++i)
    r->gens_.push_back({names[i], dims[i] + 1});
  return r;
}

inline ring_ptr make_bundle_ring_terms(const ring_ptr& base, const std::vector<term_map<integer>>& chern,
                                       std::string name)
{
  if (!base)
    throw std::invalid_argument("make_bundle_ring: null base");
  if (chern.empty())
    throw std::invalid_argument("make_bundle_ring: rank must be >= 1");
  for (std::size_t k = 0; k < chern.size(); ++k)
    for (const auto& [e, c] : chern[k]) {
      int deg = 0;
      for (int x : e)
        deg += x;
      if (deg != static_cast<int>(k + 1) || e.size() != base->size())
        throw std::invalid_argument("make_bundle_ring: c" + std::to_string(k + 1) +
                                    " is not of codimension " + std::to_string(k + 1));
    }
  if (name.empty()) {
    name = "xi";
    for (int n = 2; base->index_of(name); ++n)
      name = "xi" + std::to_string(n);
  }
  if (base->index_of(name))
    throw std::invalid_argument("make_bundle_ring: duplicate generator name " + name);

  auto r = std::make_shared<chow_ring>();
  r->kind_ = ring_kind::bundle;
  r->dims_ = base->dims_;
  r->gens_ = base->gens_;
  const int rank = static_cast<int>(chern.size());
  r->gens_.push_back({name, rank});
  r->base_ = base;
  r->rank_ = rank;
  r->chern_ = chern;
  auto pad = [](const term_map<integer>& t) {
    term_map<integer> out;
    for (const auto& [e, c] : t) {
      exponents ne = e;
      ne.push_back(0);
      out.emplace(std::move(ne), c);
    }
    return out;
  };
  for (const auto& rw : base->rewrites_) {
    chow_ring::rewrite nr{rw.index, rw.rank, {}};
    for (const auto& c : rw.chern)
      nr.chern.push_back(pad(c));
    r->rewrites_.push_back(std::move(nr));
  }
  chow_ring::rewrite top{base->size(), rank, {}};
  for (const auto& c : chern)
    top.chern.push_back(pad(c));
  r->rewrites_.push_back(std::move(top));
  return r;
}

// An element of a Chow ring, with coefficients in T (integers, or
// rationals for Todd and Chern-character computations).
template <class T>
class basic_class {
public:
  basic_class() = default;
  explicit basic_class(ring_ptr ring) : ring_(std::move(ring)) {}
  basic_class(ring_ptr ring, term_map<T> terms) : ring_(std::move(ring))
  {
    terms_ = ring_->normalize(std::move(terms));
  }

  static basic_class constant(const ring_ptr& ring, T value)
  {
    term_map<T> t;
    if (value != 0)
      t.emplace(exponents(ring->size(), 0), std::move(value));
    return basic_class(ring, std::move(t));
  }

  static basic_class gen(const ring_ptr& ring, std::size_t index)
  {
    if (index >= ring->size())
      throw std::out_of_range("chow generator index");
    exponents e(ring->size(), 0);
    e[index] = 1;
    return basic_class(ring, term_map<T>{{e, T(1)}});
  }

  static basic_class gen(const ring_ptr& ring, const std::string& name)
  {
    auto i = ring->index_of(name);
    if (!i)
      throw std::invalid_argument("unknown generator " + name);
    return gen(ring, *i);
  }

  const ring_ptr& ring() const { return ring_; }
  const term_map<T>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  T coefficient(const exponents& e) const
  {
    auto it = terms_.find(e);
    return it == terms_.end() ? T(0) : it->second;
  }

  // homogeneous component of codimension k
  basic_class part(int k) const
  {
    basic_class r(ring_);
    for (const auto& [e, c] : terms_)
      if (codim_of(e) == k)
        r.terms_.emplace(e, c);
    return r;
  }

  // -1 for the zero class when the class is not homogeneous
  std::optional<int> homogeneous_codim() const
  {
    std::optional<int> k;
    for (const auto& [e, c] : terms_) {
      int d = codim_of(e);
      if (k && *k != d)
        return std::nullopt;
      k = d;
    }
    return k;
  }

  // all terms of codimension <= k
  basic_class truncate(int k) const
  {
    basic_class r(ring_);
    for (const auto& [e, c] : terms_)
      if (codim_of(e) <= k)
        r.terms_.emplace(e, c);
    return r;
  }

  basic_class& operator+=(const basic_class& o)
  {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end())
        terms_.emplace(e, c);
      else {
        it->second += c;
        if (it->second == 0)
          terms_.erase(it);
      }
    }
    return *this;
  }

  basic_class& operator-=(const basic_class& o) { return *this += -o; }

  basic_class operator-() const
  {
    basic_class r(*this);
    for (auto& [e, c] : r.terms_)
      c = -c;
    return r;
  }

  friend basic_class operator+(basic_class a, const basic_class& b) { return a += b; }
  friend basic_class operator-(basic_class a, const basic_class& b) { return a -= b; }

  friend basic_class operator*(const basic_class& a, const basic_class& b)
  {
    a.check_ring(b);
    term_map<T> prod;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i)
          e[i] = ea[i] + eb[i];
        prod[e] += ca * cb;
      }
    return basic_class(a.ring_, std::move(prod));
  }

  friend basic_class operator*(const T& s, const basic_class& a)
  {
    basic_class r(a.ring_);
    if (s == 0)
      return r;
    for (const auto& [e, c] : a.terms_)
      r.terms_.emplace(e, s * c);
    return r;
  }

  basic_class pow(unsigned n) const
  {
    basic_class r = constant(ring_, T(1));
    basic_class b = *this;
    while (n) {
      if (n & 1u)
        r = r * b;
      n >>= 1u;
      if (n)
        b = b * b;
    }
    return r;
  }

  friend bool operator==(const basic_class& a, const basic_class& b)
  {
    if (a.ring_ && b.ring_ && !a.ring_->same_as(*b.ring_))
      return false;
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const basic_class& a, const basic_class& b) { return !(a == b); }

  // Canonical text: terms by codimension, then exponent tuple descending,
  // each written "coef * g1^i g2^j" (exponent 1 omitted).
  std::string str() const
  {
    if (terms_.empty())
      return "0";
    std::vector<std::pair<exponents, T>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
      int dx = codim_of(x.first), dy = codim_of(y.first);
      if (dx != dy)
        return dx < dy;
      return x.first > y.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
      T mag = c < 0 ? T(-c) : c;
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      os << enriques::to_string(mag);
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
          continue;
        if (!mono.empty())
          mono += ' ';
        mono += ring_->generators()[i].name;
        if (e[i] > 1)
          mono += "^" + std::to_string(e[i]);
      }
      if (!mono.empty())
        os << " * " << mono;
    }
    return os.str();
  }

  static int codim_of(const exponents& e)
  {
    int d = 0;
    for (int x : e)
      d += x;
    return d;
  }

private:
  void check_ring(const basic_class& o) const
  {
    if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_))
      throw std::invalid_argument("chow classes live in different rings");
  }

  ring_ptr ring_;
  term_map<T> terms_;
};

using chow_class = basic_class<integer>;
using rational_class = basic_class<rational>;

inline rational_class to_rational(const chow_class& c)
{
  term_map<rational> t;
  for (const auto& [e, v] : c.terms())
    t.emplace(e, rational(v));
  return rational_class(c.ring(), std::move(t));
}

inline chow_class to_integral(const rational_class& c)
{
  term_map<integer> t;
  for (const auto& [e, v] : c.terms())
    t.emplace(e, to_integer(v));
  return chow_class(c.ring(), std::move(t));
}

// Pulls a class back along the tower of bundle projections into `target`.
template <class T>
basic_class<T> lift(const basic_class<T>& c, const ring_ptr& target)
{
  if (!target->extends(*c.ring()))
    throw std::invalid_argument("lift: target ring does not extend the class ring");
  const std::size_t n = target->size();
  term_map<T> t;
  for (const auto& [e, v] : c.terms()) {
    exponents ne = e;
    ne.resize(n, 0);
    t.emplace(std::move(ne), v);
  }
  return basic_class<T>(target, std::move(t));
}

inline ring_ptr make_bundle_ring(const ring_ptr& base, const std::vector<chow_class>& chern,
                                 std::string name = {})
{
  std::vector<term_map<integer>> terms;
  for (std::size_t k = 0; k < chern.size(); ++k) {
    if (!chern[k].ring() || !chern[k].ring()->same_as(*base))
      throw std::invalid_argument("make_bundle_ring: chern class not over base");
    auto d = chern[k].homogeneous_codim();
    if (d && *d != static_cast<int>(k + 1))
      throw std::invalid_argument("make_bundle_ring: c" + std::to_string(k + 1) +
                                  " has codimension " + std::to_string(*d));
    if (!d && !chern[k].is_zero())
      throw std::invalid_argument("make_bundle_ring: inhomogeneous chern class");
    terms.push_back(chern[k].terms());
  }
  return make_bundle_ring_terms(base, terms, std::move(name));
}

// Degree of the zero-cycle part: coefficient of the point class.
template <class T>
T integrate(const basic_class<T>& c)
{
  return c.coefficient(c.ring()->top_exponents());
}

// Monomial basis of the codimension-k group, in normal-form exponents.
inline std::vector<exponents> monomial_basis(const ring_ptr& ring, int k)
{
  std::vector<exponents> out;
  exponents e(ring->size(), 0);
  const auto& g = ring->generators();
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == e.size()) {
      if (left == 0)
        out.push_back(e);
      return;
    }
    for (int x = std::min(left, g[i].bound - 1); x >= 0; --x) {
      e[i] = x;
      self(self, i + 1, left - x);
    }
    e[i] = 0;
  };
  rec(rec, 0, k);
  return out;
}

} // namespace enriques::chow

#endif

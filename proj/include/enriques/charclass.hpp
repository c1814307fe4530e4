#ifndef ENRIQUES_CHARCLASS_HPP
#define ENRIQUES_CHARCLASS_HPP

// Characteristic classes on the rings of chow.hpp: Whitney sums, tangent
// bundles via Euler sequences, Thom-Porteous degeneracy classes, Euler
// numbers and canonical classes of complete intersections, Riemann-Roch,
// and line-bundle cohomology on products of projective spaces.

#include "enriques/chow.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace enriques::charclass {

using chow::chow_class;
using chow::rational_class;
using chow::ring_ptr;

// A split bundle (sum of line bundles with multiplicities) plus optional
// formal summands that are only known through their total Chern class.
struct bundle_expr {
  struct formal {
    chow_class total;
    int rank;
  };

  ring_ptr ring;
  std::vector<std::pair<chow_class, int>> lines;
  std::vector<formal> formals;

  int rank() const
  {
    int r = 0;
    for (const auto& l : lines)
      r += l.second;
    for (const auto& f : formals)
      r += f.rank;
    return r;
  }

  static bundle_expr trivial(const ring_ptr& ring, int rank)
  {
    return {ring, {{chow_class(ring), rank}}, {}};
  }

  // O(d_1, ..., d_k) on a multiprojective ring, or its pullback to a bundle
  // ring over one.
  static chow_class line_class(const ring_ptr& ring, const std::vector<int>& multidegree)
  {
    const auto& dims = ring->factor_dims();
    if (multidegree.size() != dims.size())
      throw std::invalid_argument("line bundle multidegree has " + std::to_string(multidegree.size()) +
                                  " entries, space has " + std::to_string(dims.size()) + " factors");
    chow_class c(ring);
    for (std::size_t i = 0; i < dims.size(); ++i)
      c += integer(multidegree[i]) * chow_class::gen(ring, i);
    return c;
  }

  bundle_expr& add_line(const chow_class& l, int multiplicity = 1)
  {
    auto d = l.homogeneous_codim();
    if (d && *d != 1)
      throw std::invalid_argument("line summand must be a divisor class");
    lines.emplace_back(l, multiplicity);
    return *this;
  }

  friend bundle_expr operator+(bundle_expr a, const bundle_expr& b)
  {
    a.lines.insert(a.lines.end(), b.lines.begin(), b.lines.end());
    a.formals.insert(a.formals.end(), b.formals.begin(), b.formals.end());
    return a;
  }
};

inline chow_class one(const ring_ptr& r) { return chow_class::constant(r, 1); }

inline chow_class chern_total(const bundle_expr& e)
{
  chow_class c = one(e.ring);
  for (const auto& [l, m] : e.lines)
    c = c * (one(e.ring) + l).pow(static_cast<unsigned>(m));
  for (const auto& f : e.formals)
    c = c * f.total;
  return c;
}

// c_1 .. c_n of a total Chern class, as a vector indexed from 0 (= c_0).
inline std::vector<chow_class> chern_parts(const chow_class& total, int n)
{
  std::vector<chow_class> out;
  for (int k = 0; k <= n; ++k)
    out.push_back(total.part(k));
  return out;
}

// c(F (x) L) for F of rank r with total Chern class c(F): sum c_i(F)(1+l)^{r-i}
inline chow_class twist_total(const chow_class& total, int rank, const chow_class& l)
{
  const auto& ring = total.ring();
  chow_class out(ring);
  for (int i = 0; i <= rank; ++i)
    out += total.part(i) * (one(ring) + l).pow(static_cast<unsigned>(rank - i));
  return out;
}

inline chow_class dual_total(const chow_class& total)
{
  chow_class out(total.ring());
  int top = total.ring()->dimension();
  for (int i = 0; i <= top; ++i)
    out += (i % 2 == 0 ? integer(1) : integer(-1)) * total.part(i);
  return out;
}

inline chow_class tangent_class(const ring_ptr& ring)
{
  if (ring->kind() == chow::ring_kind::multiprojective) {
    chow_class c = one(ring);
    const auto& dims = ring->factor_dims();
    for (std::size_t i = 0; i < dims.size(); ++i)
      c = c * (one(ring) + chow_class::gen(ring, i)).pow(static_cast<unsigned>(dims[i] + 1));
    return c;
  }
  // relative Euler sequence for quotients: 0 -> O -> pi^*E^v (1) -> T_rel -> 0
  const ring_ptr& base = ring->base();
  chow_class base_tangent = chow::lift(tangent_class(base), ring);
  chow_class e_total = one(ring);
  for (const auto& ck : ring->bundle_chern())
    e_total += chow::lift(chow_class(base, ck), ring);
  chow_class xi = chow_class::gen(ring, ring->size() - 1);
  return base_tangent * twist_total(dual_total(e_total), ring->bundle_rank(), xi);
}

// Class of the locus where a map O^{source_rank} -> target has rank <= r:
// det[c_{f-r+j-i}(target)] of size (e-r), codimension (e-r)(f-r).
inline chow_class degeneracy_class(int source_rank, const bundle_expr& target, int corank_bound)
{
  const int e = source_rank, f = target.rank(), r = corank_bound;
  if (r < 0 || r >= e || r >= f)
    return one(target.ring); // the condition is vacuous
  const int size = e - r, codim = (e - r) * (f - r);
  if (codim > target.ring->dimension())
    throw std::invalid_argument("degeneracy_class: expected codimension " + std::to_string(codim) +
                                " exceeds ambient dimension " +
                                std::to_string(target.ring->dimension()));
  auto c = chern_parts(chern_total(target), codim + size);
  auto entry = [&](int i, int j) {
    int k = f - r + j - i;
    if (k < 0 || k >= static_cast<int>(c.size()))
      return chow_class(target.ring);
    return c[k];
  };
  std::vector<std::vector<chow_class>> m(size, std::vector<chow_class>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      m[i][j] = entry(i, j);
  auto det = [&](auto&& self, std::vector<int> rows, std::vector<int> cols) -> chow_class {
    if (rows.size() == 1)
      return m[rows[0]][cols[0]];
    chow_class acc(target.ring);
    std::vector<int> rest(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::vector<int> sub = cols;
      sub.erase(sub.begin() + static_cast<long>(k));
      chow_class term = m[rows[0]][cols[k]] * self(self, rest, sub);
      acc += (k % 2 == 0 ? integer(1) : integer(-1)) * term;
    }
    return acc;
  };
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  return det(det, idx, idx);
}

// Complete intersection of divisors in an ambient Chow ring.
struct complete_intersection {
  ring_ptr ambient;
  std::vector<chow_class> divisors;

  int dimension() const { return ambient->dimension() - static_cast<int>(divisors.size()); }

  // pushforward of the fundamental class
  chow_class fundamental() const
  {
    chow_class c = one(ambient);
    for (const auto& d : divisors)
      c = c * d;
    return c;
  }
};

inline void check_divisors(const complete_intersection& ci)
{
  for (const auto& d : ci.divisors) {
    if (!d.ring()->same_as(*ci.ambient))
      throw std::invalid_argument("divisor not in the ambient ring");
    auto k = d.homogeneous_codim();
    if (k && *k != 1)
      throw std::invalid_argument("complete intersection needs codimension-1 classes");
  }
}

// 1 / (1 + d) in the nilpotent ring
inline chow_class inverse_one_plus(const chow_class& d)
{
  const auto& ring = d.ring();
  chow_class out = one(ring), p = one(ring);
  for (int k = 1; k <= ring->dimension(); ++k) {
    p = p * (-d);
    out += p;
  }
  return out;
}

inline integer euler_characteristic_top(const complete_intersection& ci)
{
  check_divisors(ci);
  chow_class c = tangent_class(ci.ambient);
  for (const auto& d : ci.divisors)
    c = c * inverse_one_plus(d);
  return chow::integrate(c.part(ci.dimension()) * ci.fundamental());
}

// Ambient class restricting to K of the complete intersection (adjunction).
inline chow_class canonical_class(const complete_intersection& ci)
{
  check_divisors(ci);
  chow_class k = -tangent_class(ci.ambient).part(1);
  for (const auto& d : ci.divisors)
    k += d;
  return k;
}

// ---------------------------------------------------------------------
// Riemann-Roch.  Power sums of Chern roots come from Newton's identities,
// which makes Todd and Chern character available for non-split bundles.

namespace detail {

// series coefficients b_k with log(x / (1 - e^{-x})) = sum_{k>=1} b_k x^k
inline std::vector<rational> log_todd_series(int n)
{
  // g(x) = (1 - e^{-x}) / x = sum (-1)^k x^k / (k+1)!
  std::vector<rational> g(n + 1);
  for (int k = 0; k <= n; ++k)
    g[k] = rational((k % 2 == 0) ? 1 : -1) / rational(factorial(k + 1));
  // log(x/(1-e^{-x})) = -log g; with g = 1 + u, log(1+u) = sum (-1)^{m+1} u^m / m
  std::vector<rational> u = g;
  u[0] = 0;
  std::vector<rational> out(n + 1), power(n + 1);
  power[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::vector<rational> next(n + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j)
        next[i + j] += power[i] * u[j];
    power = std::move(next);
    rational s = rational((m % 2 == 1) ? 1 : -1) / rational(m);
    for (int i = 0; i <= n; ++i)
      out[i] -= s * power[i];
  }
  return out;
}

inline rational_class exp_nilpotent(const rational_class& x)
{
  const auto& ring = x.ring();
  rational_class out = rational_class::constant(ring, 1), p = out;
  for (int k = 1; k <= ring->dimension(); ++k) {
    p = p * x;
    out += rational(1, 1) / rational(factorial(k)) * p;
  }
  return out;
}

// p_1 .. p_n from e_k = c_k of a total Chern class
inline std::vector<rational_class> power_sums(const chow_class& total, int n)
{
  const auto& ring = total.ring();
  std::vector<rational_class> e(n + 1), p(n + 1, rational_class(ring));
  for (int k = 0; k <= n; ++k)
    e[k] = chow::to_rational(total.part(k));
  for (int k = 1; k <= n; ++k) {
    rational_class acc = (k % 2 == 1 ? rational(k) : rational(-k)) * e[k];
    for (int i = 1; i < k; ++i)
      acc += ((i % 2 == 1) ? rational(1) : rational(-1)) * (e[i] * p[k - i]);
    p[k] = acc;
  }
  return p;
}

} // namespace detail

inline rational_class todd_class(const chow_class& total)
{
  const int n = total.ring()->dimension();
  auto p = detail::power_sums(total, n);
  auto b = detail::log_todd_series(n);
  rational_class x(total.ring());
  for (int k = 1; k <= n; ++k)
    x += b[k] * p[k];
  return detail::exp_nilpotent(x);
}

inline rational_class chern_character(const chow_class& total, int rank)
{
  const int n = total.ring()->dimension();
  auto p = detail::power_sums(total, n);
  rational_class out = rational_class::constant(total.ring(), rational(rank));
  for (int k = 1; k <= n; ++k)
    out += rational(1) / rational(factorial(k)) * p[k];
  return out;
}

inline rational_class chern_character_line(const chow_class& l)
{
  return detail::exp_nilpotent(chow::to_rational(l));
}

// chi(Z, L|_Z) = int_A ch(L) td(T_A) prod (1 - e^{-D_i}) via the Koszul complex.
inline integer hrr_chi(const complete_intersection& ci, const chow_class& twist)
{
  check_divisors(ci);
  auto k = twist.homogeneous_codim();
  if (k && *k != 1)
    throw std::invalid_argument("hrr_chi: twist must be a divisor class");
  rational_class integrand = chern_character_line(twist) * todd_class(tangent_class(ci.ambient));
  for (const auto& d : ci.divisors)
    integrand = integrand *
                (rational_class::constant(ci.ambient, 1) - chern_character_line(-d));
  rational chi = chow::integrate(integrand);
  if (!is_integral(chi))
    throw std::logic_error("hrr_chi: non-integral Euler characteristic " + to_string(chi));
  return to_integer(chi);
}

// ---------------------------------------------------------------------
// Cohomology tables.

struct cohom_table {
  std::map<int, integer> dims; // exact dims, or upper bounds when !exact
  bool exact = true;
  integer euler = 0;

  integer at(int degree) const
  {
    auto it = dims.find(degree);
    return it == dims.end() ? integer(0) : it->second;
  }

  bool is_zero() const
  {
    for (const auto& [d, v] : dims)
      if (v != 0)
        return false;
    return true;
  }

  integer alternating_sum() const
  {
    integer s = 0;
    for (const auto& [d, v] : dims)
      s += (d % 2 == 0) ? v : integer(-v);
    return s;
  }

  std::string str() const
  {
    std::ostringstream os;
    os << (exact ? "exact" : "euler-only") << " {";
    bool first = true;
    for (const auto& [d, v] : dims) {
      if (!first)
        os << ", ";
      first = false;
      os << "h^" << d << (exact ? "=" : "<=") << v;
    }
    os << "} chi=" << euler;
    return os.str();
  }
};

// h^i of O(d) on P^n
inline std::map<int, integer> bott_projective(int n, int d)
{
  std::map<int, integer> t;
  if (d >= 0)
    t[0] = binomial(integer(d + n), n);
  else if (d <= -n - 1)
    t[n] = binomial(integer(-d - 1), n);
  return t;
}

inline cohom_table bott_kunneth_table(const std::vector<int>& dims, const std::vector<int>& multidegree)
{
  if (dims.size() != multidegree.size())
    throw std::invalid_argument("bott_kunneth_table: length mismatch");
  std::map<int, integer> acc{{0, 1}};
  for (std::size_t i = 0; i < dims.size(); ++i) {
    auto f = bott_projective(dims[i], multidegree[i]);
    std::map<int, integer> next;
    for (const auto& [p, a] : acc)
      for (const auto& [q, b] : f)
        next[p + q] += a * b;
    acc = std::move(next);
  }
  cohom_table t;
  int total = std::accumulate(dims.begin(), dims.end(), 0);
  for (int i = 0; i <= total; ++i)
    t.dims[i] = acc.count(i) ? acc[i] : integer(0);
  t.exact = true;
  t.euler = t.alternating_sum();
  return t;
}

using multidegree = std::vector<int>;

// Cohomology of G resolved by 0 -> F_k -> ... -> F_1 -> F_0 -> G -> 0, each
// F_q a sum of line bundles on the product with factor dimensions `dims`,
// all twisted by `twist`.  The hypercohomology spectral sequence
// E_1^{-q,p} = H^p(F_q) => H^{p-q}(G) is used only when no differential
// can connect two nonzero entries; otherwise the result is euler-only with
// h^n(G) <= sum_{p-q=n} h^p(F_q).
inline cohom_table resolution_sheaf_cohomology(const std::vector<int>& dims,
                                               const std::vector<std::vector<multidegree>>& terms,
                                               const multidegree& twist)
{
  const int top = std::accumulate(dims.begin(), dims.end(), 0);
  std::vector<cohom_table> tables;
  for (const auto& term : terms) {
    cohom_table sum;
    for (int i = 0; i <= top; ++i)
      sum.dims[i] = 0;
    for (const auto& d : term) {
      if (d.size() != twist.size())
        throw std::invalid_argument("resolution term multidegree length mismatch");
      multidegree t(d.size());
      for (std::size_t i = 0; i < d.size(); ++i)
        t[i] = d[i] + twist[i];
      auto b = bott_kunneth_table(dims, t);
      for (const auto& [k, v] : b.dims)
        sum.dims[k] += v;
    }
    sum.euler = sum.alternating_sum();
    tables.push_back(std::move(sum));
  }

  bool degenerate = true;
  const int len = static_cast<int>(tables.size());
  for (int q = 0; q < len && degenerate; ++q)
    for (int p = 0; p <= top && degenerate; ++p) {
      if (tables[q].at(p) == 0)
        continue;
      // d_r : H^p(F_q) -> H^{p-r+1}(F_{q-r})
      for (int r = 1; q - r >= 0; ++r) {
        int tp = p - r + 1;
        if (tp >= 0 && tp <= top && tables[q - r].at(tp) != 0) {
          degenerate = false;
          break;
        }
      }
    }

  cohom_table out;
  out.exact = degenerate;
  for (int n = 0; n <= top; ++n)
    out.dims[n] = 0;
  integer chi = 0;
  for (int q = 0; q < len; ++q)
    for (const auto& [p, v] : tables[q].dims) {
      int n = p - q;
      if (v != 0 && n >= 0 && n <= top)
        out.dims[n] += v;
      chi += ((p + q) % 2 == 0) ? v : integer(-v);
    }
  out.euler = chi;
  return out;
}

} // namespace enriques::charclass

#endif

#ifndef ENRIQUES_CELLS_HPP
#define ENRIQUES_CELLS_HPP

// Affine cell decomposition of multiprojective space and the Groebner
// certificates built on it: exact point counts, reducedness of
// zero-dimensional schemes, and Jacobian-criterion smoothness.
//
// For a block of homogeneous coordinates z_0..z_n the cells are
// {z_0 = .. = z_{k-1} = 0, z_k = 1}, k = 0..n; the cells of a product are
// products of block cells.  They are disjoint and cover the space.

#include "enriques/groebner.hpp"
#include "enriques/parallel.hpp"
#include "enriques/upoly.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace enriques::cells {

using groebner::basis;
using mpoly::polynomial;
using mpoly::ring_ptr;
using mpoly::var_image;

struct budget_exceeded_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct positive_dimensional_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct cell {
  std::size_t index = 0;
  // position of the chart variable inside each selected block
  std::vector<std::size_t> chart;
  std::string id;
};

struct cell_decomposition {
  std::vector<std::size_t> blocks;
  std::vector<cell> cells;
};

template <class Field>
cell_decomposition decompose(const ring_ptr<Field>& ring, std::vector<std::size_t> blocks = {})
{
  if (blocks.empty())
    for (std::size_t b = 0; b < ring->blocks().size(); ++b)
      blocks.push_back(b);
  cell_decomposition dec;
  dec.blocks = blocks;
  std::vector<std::size_t> cur(blocks.size(), 0);
  while (true) {
    cell c;
    c.index = dec.cells.size();
    c.chart = cur;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const auto& vs = ring->blocks()[blocks[k]].vars;
      if (!c.id.empty())
        c.id += ",";
      c.id += ring->vars()[vs[cur[k]]];
    }
    dec.cells.push_back(std::move(c));
    std::size_t k = blocks.size();
    while (k-- > 0) {
      if (++cur[k] < ring->blocks()[blocks[k]].vars.size())
        break;
      cur[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1))
      break;
  }
  return dec;
}

// Coordinates of the open chart containing a cell, and of the cell itself.
template <class Field>
struct cell_view {
  ring_ptr<Field> chart_ring;
  std::vector<var_image> ambient_to_chart;
  ring_ptr<Field> cell_ring;
  std::vector<var_image> chart_to_cell;
};

template <class Field>
cell_view<Field> make_view(const ring_ptr<Field>& ring, const cell_decomposition& dec, const cell& c)
{
  cell_view<Field> v;
  const std::size_t n = ring->nvars();
  v.ambient_to_chart.assign(n, {var_image::zero, 0});
  std::vector<std::string> chart_vars, cell_vars;
  std::vector<var_image> chart_to_cell;
  for (std::size_t k = 0; k < dec.blocks.size(); ++k) {
    const auto& vs = ring->blocks()[dec.blocks[k]].vars;
    for (std::size_t pos = 0; pos < vs.size(); ++pos) {
      if (pos == c.chart[k]) {
        v.ambient_to_chart[vs[pos]] = {var_image::one, 0};
        continue;
      }
      v.ambient_to_chart[vs[pos]] = {var_image::var, chart_vars.size()};
      chart_vars.push_back(ring->vars()[vs[pos]]);
      if (pos < c.chart[k]) {
        chart_to_cell.push_back({var_image::zero, 0});
      } else {
        chart_to_cell.push_back({var_image::var, cell_vars.size()});
        cell_vars.push_back(ring->vars()[vs[pos]]);
      }
    }
  }
  v.chart_ring = mpoly::make_ring(ring->field(), {{"chart", chart_vars}});
  v.cell_ring = mpoly::make_ring(ring->field(), {{"cell", cell_vars}});
  v.chart_to_cell = std::move(chart_to_cell);
  return v;
}

template <class Field>
void check_support(const std::vector<polynomial<Field>>& gens, const cell_decomposition& dec)
{
  if (gens.empty())
    return;
  const auto& ring = gens.front().ring();
  std::vector<bool> inside(ring->nvars(), false);
  for (auto b : dec.blocks)
    for (auto x : ring->blocks()[b].vars)
      inside[x] = true;
  for (const auto& g : gens)
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < ring->nvars(); ++i)
        if (t.m[i] && !inside[i])
          throw std::invalid_argument("generator involves variable " + ring->vars()[i] +
                                      " outside the decomposed blocks");
}

template <class Field>
std::vector<polynomial<Field>> to_chart(const std::vector<polynomial<Field>>& gens, const cell_view<Field>& v)
{
  std::vector<polynomial<Field>> out;
  for (const auto& g : gens)
    out.push_back(mpoly::substitute(g, v.chart_ring, v.ambient_to_chart));
  return out;
}

template <class Field>
std::vector<polynomial<Field>> chart_to_cell(const std::vector<polynomial<Field>>& gens, const cell_view<Field>& v)
{
  std::vector<polynomial<Field>> out;
  for (const auto& g : gens) {
    auto r = mpoly::substitute(g, v.cell_ring, v.chart_to_cell);
    if (!r.is_zero())
      out.push_back(std::move(r));
  }
  return out;
}

template <class Field>
std::vector<polynomial<Field>> restrict_to_cell(const std::vector<polynomial<Field>>& gens,
                                                const cell_view<Field>& v)
{
  return chart_to_cell(to_chart(gens, v), v);
}

// GB of an ideal in the cell ring; an empty list is the zero ideal.
template <class Field>
groebner::gb_result<Field> cell_basis(const std::vector<polynomial<Field>>& gens, const ring_ptr<Field>& cell_ring,
                                      const groebner::options& opt)
{
  if (gens.empty()) {
    groebner::gb_result<Field> r;
    r.gb.ring = cell_ring;
    return r;
  }
  return groebner::buchberger(gens, opt);
}

template <class Field>
std::optional<std::size_t> cell_quotient_dimension(const groebner::gb_result<Field>& r)
{
  if (r.gb.gens.empty())
    return r.gb.ring->nvars() == 0 ? std::optional<std::size_t>(1) : std::nullopt;
  return groebner::quotient_dimension(r.gb);
}

struct point_count {
  std::size_t total = 0;
  std::vector<std::size_t> per_cell;
  std::uint64_t steps = 0;
};

// Number of points over the algebraic closure, with multiplicity.
template <class Field>
point_count cell_point_count(const std::vector<polynomial<Field>>& gens, const cell_decomposition& dec,
                             const groebner::options& opt = {})
{
  if (gens.empty())
    throw std::invalid_argument("cell_point_count: no generators");
  check_support(gens, dec);
  const auto& ring = gens.front().ring();
  point_count out;
  for (const auto& c : dec.cells) {
    auto v = make_view(ring, dec, c);
    auto r = cell_basis(restrict_to_cell(gens, v), v.cell_ring, opt);
    out.steps += r.steps;
    if (!r.complete())
      throw budget_exceeded_error("cell_point_count: step budget exhausted on cell " + c.id);
    auto d = cell_quotient_dimension(r);
    if (!d)
      throw positive_dimensional_error("cell_point_count: positive-dimensional locus on cell " + c.id);
    out.per_cell.push_back(*d);
    out.total += *d;
  }
  return out;
}

// ---------------------------------------------------------------------
// Finite-dimensional quotient algebras over GF(p).

class zero_dim_algebra {
public:
  using poly = polynomial<prime_field>;

  explicit zero_dim_algebra(basis<prime_field> gb) : gb_(std::move(gb)), field_(gb_.ring->field())
  {
    if (!groebner::quotient_dimension(gb_))
      throw positive_dimensional_error("zero_dim_algebra: ideal is not zero-dimensional");
    standard_ = groebner::standard_monomials(gb_);
    for (std::size_t i = 0; i < standard_.size(); ++i)
      index_.emplace(standard_[i], i);
  }

  std::size_t dim() const { return standard_.size(); }
  const basis<prime_field>& gb() const { return gb_; }

  std::vector<std::uint32_t> coords(const poly& f) const
  {
    auto r = groebner::normal_form(f, gb_);
    std::vector<std::uint32_t> v(dim(), 0);
    for (const auto& t : r.terms()) {
      v[index_.at(t.m)] = t.c;
    }
    return v;
  }

  // Minimal polynomial of multiplication by `elem`, and the coordinates of
  // every variable as a polynomial in `elem` when its powers span.
  struct primitive {
    upoly::coeffs min_poly;
    std::vector<upoly::coeffs> var_images; // empty unless deg min_poly == dim
  };

  primitive analyze(const poly& elem) const
  {
    echelon ech(field_, dim());
    primitive out;
    poly power = poly::constant(gb_.ring, field_.one());
    for (std::size_t k = 0; k <= dim(); ++k) {
      auto dep = ech.insert(coords(power));
      if (dep) {
        // power^k = sum dep_j power^j  =>  t^k - sum dep_j t^j
        upoly::coeffs m(k + 1, 0);
        for (std::size_t j = 0; j < k; ++j)
          m[j] = field_.neg((*dep)[j]);
        m[k] = 1;
        out.min_poly = m;
        break;
      }
      power = groebner::normal_form(power * elem, gb_);
    }
    if (upoly::degree(out.min_poly) == static_cast<int>(dim())) {
      for (std::size_t i = 0; i < gb_.ring->nvars(); ++i) {
        auto combo = ech.express(coords(poly::variable(gb_.ring, i)));
        upoly::coeffs q(combo.begin(), combo.end());
        upoly::trim(q);
        out.var_images.push_back(std::move(q));
      }
    }
    return out;
  }

private:
  // Row echelon form of vectors v_0, v_1, ... remembering each reduced row
  // as a combination of the inserted vectors.
  struct echelon {
    echelon(const prime_field& f, std::size_t n) : f(f), n(n) {}

    struct row {
      std::vector<std::uint32_t> vec, combo;
      std::size_t pivot;
    };

    void reduce(std::vector<std::uint32_t>& v, std::vector<std::uint32_t>& combo) const
    {
      for (const auto& r : rows) {
        auto c = v[r.pivot];
        if (!c)
          continue;
        for (std::size_t i = 0; i < n; ++i)
          v[i] = f.sub(v[i], f.mul(c, r.vec[i]));
        for (std::size_t i = 0; i < combo.size(); ++i)
          combo[i] = f.sub(combo[i], f.mul(c, r.combo[i]));
      }
    }

    // std::nullopt when independent (then stored); otherwise the
    // coefficients expressing v in the earlier inserted vectors.
    std::optional<std::vector<std::uint32_t>> insert(std::vector<std::uint32_t> v)
    {
      const std::size_t k = count;
      std::vector<std::uint32_t> combo(n + 1, 0);
      combo[k] = 1;
      reduce(v, combo);
      std::size_t piv = n;
      for (std::size_t i = 0; i < n; ++i)
        if (v[i]) {
          piv = i;
          break;
        }
      if (piv == n) {
        // 0 = v_k + sum_{j<k} combo_j v_j
        std::vector<std::uint32_t> dep(k);
        for (std::size_t j = 0; j < k; ++j)
          dep[j] = f.neg(combo[j]);
        return dep;
      }
      auto inv = f.inv(v[piv]);
      for (auto& x : v)
        x = f.mul(x, inv);
      for (auto& x : combo)
        x = f.mul(x, inv);
      // keep rows fully reduced so reduce() works in one pass
      for (auto& r : rows) {
        auto c = r.vec[piv];
        if (!c)
          continue;
        for (std::size_t i = 0; i < n; ++i)
          r.vec[i] = f.sub(r.vec[i], f.mul(c, v[i]));
        for (std::size_t i = 0; i < r.combo.size(); ++i)
          r.combo[i] = f.sub(r.combo[i], f.mul(c, combo[i]));
      }
      rows.push_back({std::move(v), std::move(combo), piv});
      ++count;
      return std::nullopt;
    }

    // coefficients of w in the inserted vectors (w must lie in their span)
    std::vector<std::uint32_t> express(std::vector<std::uint32_t> w) const
    {
      std::vector<std::uint32_t> combo(n + 1, 0);
      std::vector<std::uint32_t> acc(n + 1, 0);
      for (const auto& r : rows) {
        auto c = w[r.pivot];
        if (!c)
          continue;
        for (std::size_t i = 0; i < n; ++i)
          w[i] = f.sub(w[i], f.mul(c, r.vec[i]));
        for (std::size_t i = 0; i < acc.size(); ++i)
          acc[i] = f.add(acc[i], f.mul(c, r.combo[i]));
      }
      for (auto x : w)
        if (x)
          throw std::logic_error("express: vector outside the span");
      acc.resize(count);
      return acc;
    }

    const prime_field& f;
    std::size_t n;
    std::size_t count = 0;
    std::vector<row> rows;
  };

  basis<prime_field> gb_;
  prime_field field_;
  std::vector<monomial> standard_;
  std::map<monomial, std::size_t, grevlex_greater> index_;
};

inline polynomial<prime_field> random_linear_form(const ring_ptr<prime_field>& ring, std::mt19937_64& rng,
                                                  bool affine_constant)
{
  const auto& f = ring->field();
  using poly = polynomial<prime_field>;
  std::vector<poly::term> ts;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    monomial m;
    m.set(i, 1);
    ts.push_back({m, f.random_nonzero(rng)});
  }
  if (affine_constant)
    ts.push_back({monomial{}, f.random(rng)});
  return poly(ring, std::move(ts));
}

enum class point_check { reduced, nonreduced, inconclusive };

inline const char* to_string(point_check c)
{
  switch (c) {
  case point_check::reduced:
    return "reduced";
  case point_check::nonreduced:
    return "nonreduced";
  default:
    return "inconclusive";
  }
}

// A zero-dimensional algebra of dimension d is reduced iff some element has
// a squarefree minimal polynomial of degree d; a non-squarefree minimal
// polynomial of any element proves it is not.
inline point_check zero_dim_reduced(const zero_dim_algebra& alg, std::mt19937_64& rng, int tries = 3)
{
  if (alg.dim() == 0)
    return point_check::reduced;
  const auto& f = alg.gb().ring->field();
  for (int t = 0; t < tries; ++t) {
    auto ell = random_linear_form(alg.gb().ring, rng, false);
    auto mp = alg.analyze(ell).min_poly;
    if (!upoly::is_squarefree(f, mp))
      return point_check::nonreduced;
    if (upoly::degree(mp) == static_cast<int>(alg.dim()))
      return point_check::reduced;
  }
  return point_check::inconclusive;
}

inline point_check radical_point_check(const std::vector<polynomial<prime_field>>& gens, const cell_decomposition& dec,
                                       std::uint64_t seed = 1, const groebner::options& opt = {})
{
  check_support(gens, dec);
  const auto& ring = gens.front().ring();
  std::mt19937_64 rng(seed);
  point_check overall = point_check::reduced;
  for (const auto& c : dec.cells) {
    auto v = make_view(ring, dec, c);
    auto r = cell_basis(restrict_to_cell(gens, v), v.cell_ring, opt);
    if (!r.complete())
      throw budget_exceeded_error("radical_point_check: step budget exhausted on cell " + c.id);
    if (r.gb.gens.empty()) {
      if (v.cell_ring->nvars() != 0)
        throw positive_dimensional_error("radical_point_check: positive-dimensional cell " + c.id);
      continue; // a single reduced point
    }
    if (groebner::contains_one(r.gb))
      continue;
    zero_dim_algebra alg(r.gb);
    auto res = zero_dim_reduced(alg, rng);
    if (res == point_check::nonreduced)
      return res;
    if (res == point_check::inconclusive)
      overall = res;
  }
  return overall;
}

// ---------------------------------------------------------------------
// Smoothness.

enum class cell_status { smooth_certified, singular, inconclusive };

inline const char* to_string(cell_status s)
{
  switch (s) {
  case cell_status::smooth_certified:
    return "smooth-certified";
  case cell_status::singular:
    return "singular";
  default:
    return "inconclusive";
  }
}

struct cell_record {
  std::string id;
  cell_status status = cell_status::inconclusive;
  std::uint64_t steps = 0;
  double millis = 0;
};

struct smoothness_report {
  std::vector<cell_record> cells;

  std::size_t count(cell_status s) const
  {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [&](const cell_record& c) { return c.status == s; }));
  }
  bool smooth() const { return !cells.empty() && count(cell_status::smooth_certified) == cells.size(); }
  bool any_singular() const { return count(cell_status::singular) > 0; }
};

// Ideal of the Jacobian-criterion singular locus on one cell: the cell
// restriction of I + (c x c minors of the chart Jacobian of the generators).
template <class Field>
std::vector<polynomial<Field>> singular_locus_gens(const std::vector<polynomial<Field>>& gens, int codim,
                                                   const cell_view<Field>& v)
{
  auto chart = to_chart(gens, v);
  std::vector<polynomial<Field>> ideal = chart;
  const auto& coords = v.chart_ring->vars();
  if (!coords.empty() && codim > 0) {
    auto jac = mpoly::jacobian(chart, coords);
    if (static_cast<std::size_t>(codim) <= std::min(jac.rows, jac.cols))
      for (auto& m : mpoly::minors(jac, static_cast<std::size_t>(codim)))
        if (!m.is_zero())
          ideal.push_back(std::move(m));
  }
  return chart_to_cell(ideal, v);
}

template <class Field>
smoothness_report smoothness_certificate(const std::vector<polynomial<Field>>& gens, int expected_codim,
                                         const cell_decomposition& dec, const groebner::options& opt = {},
                                         unsigned jobs = 1)
{
  check_support(gens, dec);
  const auto& ring = gens.front().ring();
  smoothness_report rep;
  rep.cells.resize(dec.cells.size());
  parallel_for(dec.cells.size(), jobs, [&](std::size_t i) {
    const auto& c = dec.cells[i];
    auto start = std::chrono::steady_clock::now();
    auto v = make_view(ring, dec, c);
    auto ideal = singular_locus_gens(gens, expected_codim, v);
    cell_record rec;
    rec.id = c.id;
    if (ideal.empty()) {
      rec.status = cell_status::singular; // the whole cell lies in the singular locus
    } else {
      auto r = groebner::buchberger(ideal, opt);
      rec.steps = r.steps;
      if (!r.complete())
        rec.status = cell_status::inconclusive;
      else
        rec.status = groebner::contains_one(r.gb) ? cell_status::smooth_certified : cell_status::singular;
    }
    rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rep.cells[i] = rec;
  });
  return rep;
}

// ---------------------------------------------------------------------
// Probabilistic smoothness probe.  Points are located by slicing with
// random affine hyperplanes; the Jacobian rank is evaluated at every point
// of a slice at once in GF(p)[t]/(f) where f is the squarefree minimal
// polynomial of a separating linear form.

enum class probe_status { no_singularity_found, singular_found, point_location_failed };

inline const char* to_string(probe_status s)
{
  switch (s) {
  case probe_status::no_singularity_found:
    return "no-singularity-found";
  case probe_status::singular_found:
    return "singular-found";
  default:
    return "point-location-failed";
  }
}

struct probe_options {
  std::size_t samples = 100;
  int max_extension_degree = 64;
  std::uint64_t seed = 1;
  std::uint64_t step_budget = 5'000'000;
  std::size_t max_slices = 0; // 0: 4 per cell + 20
  // also sample the Jacobian-degeneracy locus when the generic sample is clean
  bool targeted = true;
};

struct probe_report {
  probe_status status = probe_status::point_location_failed;
  std::size_t points_tested = 0;
  std::size_t full_rank = 0;
  std::size_t singular_points = 0;
  std::size_t slices = 0;
};

namespace detail {

using upoly::coeffs;

inline coeffs eval_mod(const polynomial<prime_field>& f, const std::vector<coeffs>& images, const coeffs& modulus)
{
  const auto& fld = f.field();
  const std::size_t n = f.ring()->nvars();
  std::vector<std::vector<coeffs>> powers(n, std::vector<coeffs>{upoly::mod(fld, {1}, modulus)});
  coeffs acc;
  for (const auto& t : f.terms()) {
    coeffs term = upoly::mod(fld, {t.c}, modulus);
    for (std::size_t i = 0; i < n; ++i) {
      unsigned e = t.m[i];
      while (powers[i].size() <= e)
        powers[i].push_back(upoly::mulmod(fld, powers[i].back(), images[i], modulus));
      if (e)
        term = upoly::mulmod(fld, term, powers[i][e], modulus);
    }
    acc = upoly::add(fld, acc, term);
  }
  return acc;
}

inline coeffs det_mod(const prime_field& fld, const std::vector<std::vector<coeffs>>& m, const coeffs& modulus)
{
  const std::size_t n = m.size();
  if (n == 1)
    return m[0][0];
  coeffs acc;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<coeffs>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<coeffs> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k)
          row.push_back(m[i][j]);
      sub.push_back(std::move(row));
    }
    auto t = upoly::mulmod(fld, m[0][k], det_mod(fld, sub, modulus), modulus);
    acc = (k % 2 == 0) ? upoly::add(fld, acc, t) : upoly::sub(fld, acc, t);
  }
  return acc;
}

enum class slice_kind { empty, finite, positive, budget };

struct slice_result {
  slice_kind kind = slice_kind::empty;
  std::optional<basis<prime_field>> gb;
};

inline slice_result slice(const std::vector<polynomial<prime_field>>& ideal, const ring_ptr<prime_field>& ring, int hyperplanes,
                          std::mt19937_64& rng, std::uint64_t budget)
{
  auto gens = ideal;
  for (int k = 0; k < hyperplanes; ++k)
    gens.push_back(random_linear_form(ring, rng, true));
  slice_result out;
  if (gens.empty()) {
    out.kind = ring->nvars() == 0 ? slice_kind::finite : slice_kind::positive;
    if (ring->nvars() == 0) {
      basis<prime_field> b;
      b.ring = ring;
      out.gb = b;
    }
    return out;
  }
  auto r = groebner::buchberger(gens, groebner::options{budget});
  if (!r.complete()) {
    out.kind = slice_kind::budget;
    return out;
  }
  if (groebner::contains_one(r.gb))
    return out;
  if (!groebner::quotient_dimension(r.gb)) {
    out.kind = slice_kind::positive;
    return out;
  }
  out.kind = slice_kind::finite;
  out.gb = r.gb;
  return out;
}

// Searches for a hyperplane count leaving finitely many points, starting
// from `start`.
inline slice_result find_points(const std::vector<polynomial<prime_field>>& ideal, const ring_ptr<prime_field>& ring, int start,
                                std::mt19937_64& rng, std::uint64_t budget)
{
  const int n = static_cast<int>(ring->nvars());
  int j = std::clamp(start, 0, n);
  auto r = slice(ideal, ring, j, rng, budget);
  while (r.kind == slice_kind::positive && j < n)
    r = slice(ideal, ring, ++j, rng, budget);
  if (r.kind == slice_kind::empty)
    while (r.kind == slice_kind::empty && j > 0)
      r = slice(ideal, ring, --j, rng, budget);
  return r;
}

struct sampled_points {
  coeffs modulus; // squarefree, roots = the points of bounded degree
  std::vector<coeffs> images;
};

inline std::optional<sampled_points> separate(const basis<prime_field>& gb, std::mt19937_64& rng, int max_ext)
{
  zero_dim_algebra alg(gb);
  const auto& fld = gb.ring->field();
  if (alg.dim() == 0)
    return std::nullopt;
  if (gb.ring->nvars() == 0) {
    return sampled_points{{0, 1}, {}};
  }
  for (int t = 0; t < 3; ++t) {
    auto ell = random_linear_form(gb.ring, rng, false);
    auto pr = alg.analyze(ell);
    if (pr.var_images.empty() || !upoly::is_squarefree(fld, pr.min_poly))
      continue;
    coeffs small{1};
    auto parts = upoly::distinct_degree_parts(fld, pr.min_poly, max_ext);
    for (const auto& p : parts)
      small = upoly::mul(fld, small, p);
    if (upoly::degree(small) < 1)
      return std::nullopt;
    std::vector<coeffs> images;
    for (const auto& q : pr.var_images)
      images.push_back(upoly::mod(fld, q, small));
    return sampled_points{small, images};
  }
  return std::nullopt;
}

} // namespace detail

inline probe_report smoothness_probe(const std::vector<polynomial<prime_field>>& gens, int expected_codim,
                                     const cell_decomposition& dec, const probe_options& opt = {})
{
  using detail::coeffs;
  check_support(gens, dec);
  const auto& ring = gens.front().ring();
  const auto& fld = ring->field();
  std::mt19937_64 rng(opt.seed);
  probe_report rep;

  struct cell_data {
    cell_view<prime_field> view;
    std::vector<polynomial<prime_field>> ideal;
    std::vector<polynomial<prime_field>> jac; // chart Jacobian restricted to the cell, row-major
    std::size_t rows = 0, cols = 0;
    bool exhausted = false;
  };
  std::vector<cell_data> data;
  for (const auto& c : dec.cells) {
    cell_data d{make_view(ring, dec, c), {}, {}, 0, 0, false};
    auto chart = to_chart(gens, d.view);
    d.ideal = chart_to_cell(chart, d.view);
    if (!d.view.chart_ring->vars().empty()) {
      auto jac = mpoly::jacobian(chart, d.view.chart_ring->vars());
      d.rows = jac.rows;
      d.cols = jac.cols;
      for (const auto& e : jac.entries)
        d.jac.push_back(mpoly::substitute(e, d.view.cell_ring, d.view.chart_to_cell));
    }
    data.push_back(std::move(d));
  }

  auto singular_count = [&](const cell_data& d, const detail::sampled_points& pts) -> std::size_t {
    const std::size_t c = static_cast<std::size_t>(expected_codim);
    if (c == 0)
      return 0;
    if (c > std::min(d.rows, d.cols))
      return static_cast<std::size_t>(upoly::degree(pts.modulus));
    std::vector<std::vector<coeffs>> vals(d.rows, std::vector<coeffs>(d.cols));
    for (std::size_t i = 0; i < d.rows; ++i)
      for (std::size_t j = 0; j < d.cols; ++j)
        vals[i][j] = detail::eval_mod(d.jac[i * d.cols + j], pts.images, pts.modulus);
    coeffs g = pts.modulus;
    for (const auto& rs : mpoly::subsets(d.rows, c))
      for (const auto& cs : mpoly::subsets(d.cols, c)) {
        std::vector<std::vector<coeffs>> sub;
        for (auto i : rs) {
          std::vector<coeffs> row;
          for (auto j : cs)
            row.push_back(vals[i][j]);
          sub.push_back(std::move(row));
        }
        g = upoly::gcd(fld, g, detail::det_mod(fld, sub, pts.modulus));
        if (upoly::degree(g) == 0)
          return 0;
      }
    return static_cast<std::size_t>(upoly::degree(g));
  };

  // generic points
  const std::size_t max_slices = opt.max_slices ? opt.max_slices : 4 * data.size() + 20;
  std::size_t live = data.size();
  for (std::size_t attempt = 0; attempt < max_slices && rep.points_tested < opt.samples && live > 0; ++attempt) {
    auto& d = data[attempt % data.size()];
    if (d.exhausted)
      continue;
    const int n = static_cast<int>(d.view.cell_ring->nvars());
    auto r = detail::find_points(d.ideal, d.view.cell_ring, n - expected_codim, rng, opt.step_budget);
    ++rep.slices;
    if (r.kind == detail::slice_kind::empty) {
      d.exhausted = true;
      --live;
      continue;
    }
    if (r.kind != detail::slice_kind::finite)
      continue;
    auto pts = detail::separate(*r.gb, rng, opt.max_extension_degree);
    if (!pts)
      continue;
    auto total = static_cast<std::size_t>(upoly::degree(pts->modulus));
    auto bad = singular_count(d, *pts);
    rep.points_tested += total;
    rep.full_rank += total - bad;
    rep.singular_points += bad;
  }

  // targeted points on V(I + minors)
  if (opt.targeted && rep.singular_points == 0 && expected_codim > 0) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      auto& d = data[i];
      auto ideal = singular_locus_gens(gens, expected_codim, d.view);
      if (ideal.empty())
        continue;
      const int n = static_cast<int>(d.view.cell_ring->nvars());
      auto r = detail::find_points(ideal, d.view.cell_ring, n - expected_codim - 1, rng, opt.step_budget);
      ++rep.slices;
      if (r.kind != detail::slice_kind::finite)
        continue;
      auto pts = detail::separate(*r.gb, rng, opt.max_extension_degree);
      if (!pts)
        continue;
      // certify: generators vanish and the rank drops
      coeffs g = pts->modulus;
      for (const auto& f : d.ideal)
        g = upoly::gcd(fld, g, detail::eval_mod(f, pts->images, pts->modulus));
      detail::sampled_points on_variety{g, {}};
      for (const auto& q : pts->images)
        on_variety.images.push_back(upoly::mod(fld, q, g));
      std::size_t bad = upoly::degree(g) > 0 ? singular_count(d, on_variety) : 0;
      rep.points_tested += bad;
      rep.singular_points += bad;
      if (bad)
        break;
    }
  }

  if (rep.singular_points > 0)
    rep.status = probe_status::singular_found;
  else if (rep.points_tested == 0)
    rep.status = probe_status::point_location_failed;
  else
    rep.status = probe_status::no_singularity_found;
  return rep;
}

} // namespace enriques::cells

#endif

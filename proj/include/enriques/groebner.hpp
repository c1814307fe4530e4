#ifndef ENRIQUES_GROEBNER_HPP
#define ENRIQUES_GROEBNER_HPP

// Buchberger's algorithm under grevlex with the Gebauer-Moeller pair
// criteria and the normal selection strategy (smallest lcm degree first,
// ties broken by pair creation order).  A step is one elementary reduction
// x^a * g subtracted from the polynomial being reduced; the step budget
// bounds the total number of steps of one run.

#include "enriques/mpoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace enriques::groebner {

using mpoly::polynomial;
using mpoly::ring_ptr;

struct options {
  std::uint64_t step_budget = 5'000'000;
};

enum class gb_status { complete, budget_exceeded };

template <class Field>
struct basis {
  ring_ptr<Field> ring;
  // reduced and monic, sorted by leading monomial ascending
  std::vector<polynomial<Field>> gens;

  std::vector<monomial> staircase() const
  {
    std::vector<monomial> leads;
    for (const auto& g : gens)
      leads.push_back(g.lead_monomial());
    return leads;
  }
};

template <class Field>
struct gb_result {
  gb_status status = gb_status::complete;
  basis<Field> gb;
  std::uint64_t steps = 0;

  bool complete() const { return status == gb_status::complete; }
};

namespace detail {

template <class Field>
using term_vec = std::vector<typename polynomial<Field>::term>;

// f <- f - c * m * g, merging sorted term lists (f's lead cancels).
template <class Field>
void sub_mul(const Field& fld, term_vec<Field>& f, std::size_t start, const term_vec<Field>& g,
             const monomial& m, typename Field::value_type c, term_vec<Field>& scratch)
{
  scratch.clear();
  scratch.reserve(f.size() - start + g.size());
  std::size_t i = start, j = 0;
  const std::size_t nf = f.size(), ng = g.size();
  while (i < nf && j < ng) {
    monomial gm = g[j].m * m;
    int cmp = grevlex_cmp(f[i].m, gm);
    if (cmp > 0) {
      scratch.push_back(std::move(f[i++]));
    } else if (cmp < 0) {
      scratch.push_back({gm, fld.neg(fld.mul(c, g[j].c))});
      ++j;
    } else {
      auto v = fld.sub(f[i].c, fld.mul(c, g[j].c));
      if (!fld.is_zero(v))
        scratch.push_back({gm, v});
      ++i;
      ++j;
    }
  }
  for (; i < nf; ++i)
    scratch.push_back(std::move(f[i]));
  for (; j < ng; ++j)
    scratch.push_back({g[j].m * m, fld.neg(fld.mul(c, g[j].c))});
  f.swap(scratch);
}

} // namespace detail

// Full reduction of f by a set of monic reducers.  Returns std::nullopt when
// the step budget runs out; `steps` accumulates across calls.
template <class Field>
std::optional<polynomial<Field>> reduce(const polynomial<Field>& f, const std::vector<const polynomial<Field>*>& reducers,
                                        std::uint64_t& steps, std::uint64_t budget)
{
  const Field& fld = f.field();
  detail::term_vec<Field> cur = f.terms(), scratch, out;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const auto& lt = cur[pos];
    const polynomial<Field>* hit = nullptr;
    for (const auto* g : reducers)
      if (divides(g->lead_monomial(), lt.m)) {
        hit = g;
        break;
      }
    if (!hit) {
      out.push_back(std::move(cur[pos]));
      ++pos;
      continue;
    }
    if (++steps > budget)
      return std::nullopt;
    auto c = fld.mul(lt.c, fld.inv(hit->lead_coefficient()));
    monomial q = quotient(lt.m, hit->lead_monomial());
    detail::sub_mul(fld, cur, pos, hit->terms(), q, c, scratch);
    pos = 0;
  }
  auto r = polynomial<Field>::from_sorted(f.ring(), std::move(out));
  r.set_affine(f.affine());
  return r;
}

template <class Field>
polynomial<Field> normal_form(const polynomial<Field>& f, const basis<Field>& gb)
{
  std::vector<const polynomial<Field>*> rs;
  for (const auto& g : gb.gens)
    rs.push_back(&g);
  std::uint64_t steps = 0;
  return *reduce(f, rs, steps, UINT64_MAX);
}

template <class Field>
polynomial<Field> s_polynomial(const polynomial<Field>& f, const polynomial<Field>& g)
{
  const Field& fld = f.field();
  monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  auto a = f.mul_term(quotient(l, f.lead_monomial()), fld.inv(f.lead_coefficient()));
  auto b = g.mul_term(quotient(l, g.lead_monomial()), fld.inv(g.lead_coefficient()));
  return a - b;
}

template <class Field>
gb_result<Field> buchberger(const std::vector<polynomial<Field>>& input, const options& opt = {})
{
  gb_result<Field> res;
  if (input.empty())
    throw std::invalid_argument("buchberger: empty generator list");
  const auto ring = input.front().ring();
  res.gb.ring = ring;
  const Field& fld = ring->field();

  struct pair_t {
    std::size_t i, j;
    monomial lcm;
    std::uint64_t seq;
  };
  std::vector<polynomial<Field>> polys;
  std::vector<bool> active;
  std::vector<pair_t> pairs;
  std::uint64_t seq = 0;
  bool unit = false;

  auto reducers = [&]() {
    std::vector<const polynomial<Field>*> rs;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k])
        rs.push_back(&polys[k]);
    return rs;
  };

  // Gebauer-Moeller update with the new element h = polys.back()
  auto update = [&]() {
    const std::size_t hn = polys.size() - 1;
    const monomial& lh = polys[hn].lead_monomial();
    std::vector<pair_t> cand;
    for (std::size_t k = 0; k < hn; ++k)
      if (active[k])
        cand.push_back({k, hn, lcm(polys[k].lead_monomial(), lh), 0});
    // keep (k,h) unless another candidate's lcm properly divides its lcm;
    // coprime pairs stay in play for the chain check, then drop out
    std::vector<pair_t> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool coprime_pair = coprime(polys[cand[a].i].lead_monomial(), lh);
      bool drop = false;
      if (!coprime_pair) {
        for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
          if (a == b)
            continue;
          if (divides(cand[b].lcm, cand[a].lcm)) {
            // equal lcms: keep only the first, preferring a coprime one
            if (cand[b].lcm != cand[a].lcm)
              drop = true;
            else if (coprime(polys[cand[b].i].lead_monomial(), lh) || b < a)
              drop = true;
          }
        }
      }
      if (!drop)
        kept.push_back(cand[a]);
    }
    std::vector<pair_t> fresh;
    for (auto& p : kept)
      if (!coprime(polys[p.i].lead_monomial(), lh))
        fresh.push_back(p);
    // old pairs whose lcm is strictly divisible by lead(h) in the chain sense
    std::vector<pair_t> survivors;
    for (auto& p : pairs) {
      bool drop = divides(lh, p.lcm) && lcm(polys[p.i].lead_monomial(), lh) != p.lcm &&
                  lcm(polys[p.j].lead_monomial(), lh) != p.lcm;
      if (!drop)
        survivors.push_back(p);
    }
    pairs = std::move(survivors);
    for (auto& p : fresh) {
      p.seq = seq++;
      pairs.push_back(p);
    }
    for (std::size_t k = 0; k < hn; ++k)
      if (active[k] && divides(lh, polys[k].lead_monomial()))
        active[k] = false;
  };

  auto add = [&](polynomial<Field> h) {
    h = h.monic();
    if (h.is_constant())
      unit = true;
    polys.push_back(std::move(h));
    active.push_back(true);
    update();
  };

  std::vector<polynomial<Field>> sorted = input;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.is_zero() || b.is_zero())
      return !a.is_zero() && b.is_zero();
    return grevlex_cmp(a.lead_monomial(), b.lead_monomial()) < 0;
  });
  for (const auto& g : sorted) {
    if (g.is_zero())
      continue;
    auto r = reduce(g, reducers(), res.steps, opt.step_budget);
    if (!r) {
      res.status = gb_status::budget_exceeded;
      return res;
    }
    if (!r->is_zero())
      add(std::move(*r));
    if (unit)
      break;
  }

  while (!unit && !pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const pair_t& a, const pair_t& b) {
      if (a.lcm.deg != b.lcm.deg)
        return a.lcm.deg < b.lcm.deg;
      return a.seq < b.seq;
    });
    pair_t p = *best;
    *best = pairs.back();
    pairs.pop_back();
    auto s = s_polynomial(polys[p.i], polys[p.j]);
    auto r = reduce(s, reducers(), res.steps, opt.step_budget);
    if (!r) {
      res.status = gb_status::budget_exceeded;
      return res;
    }
    if (!r->is_zero())
      add(std::move(*r));
  }

  if (unit) {
    res.gb.gens = {polynomial<Field>::constant(ring, fld.one())};
    return res;
  }

  // interreduce the minimal basis
  std::vector<polynomial<Field>> minimal;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k])
      minimal.push_back(polys[k]);
  std::vector<polynomial<Field>> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const polynomial<Field>*> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k)
        others.push_back(&minimal[l]);
    // lead term is irreducible by the others, so only the tail changes
    auto lead = polynomial<Field>::from_sorted(ring, {minimal[k].terms().front()});
    auto tail = minimal[k] - lead;
    std::uint64_t steps = 0;
    auto t = reduce(tail, others, steps, UINT64_MAX);
    res.steps += steps;
    reduced.push_back((lead + *t).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const auto& a, const auto& b) { return grevlex_cmp(a.lead_monomial(), b.lead_monomial()) < 0; });
  res.gb.gens = std::move(reduced);
  return res;
}

template <class Field>
bool contains_one(const basis<Field>& gb)
{
  for (const auto& g : gb.gens)
    if (!g.is_zero() && g.lead_monomial().deg == 0)
      return true;
  return false;
}

template <class Field>
bool is_member(const polynomial<Field>& f, const basis<Field>& gb)
{
  return normal_form(f, gb).is_zero();
}

// Monomials outside the leading-term ideal of a zero-dimensional ideal,
// in grevlex ascending order.
template <class Field>
std::vector<monomial> standard_monomials(const basis<Field>& gb)
{
  const std::size_t n = gb.ring->nvars();
  auto leads = gb.staircase();
  auto standard = [&](const monomial& m) {
    for (const auto& l : leads)
      if (divides(l, m))
        return false;
    return true;
  };
  std::set<monomial, grevlex_greater> seen;
  std::vector<monomial> frontier;
  if (standard(monomial{})) {
    seen.insert(monomial{});
    frontier.push_back(monomial{});
  }
  while (!frontier.empty()) {
    std::vector<monomial> next;
    for (const auto& m : frontier)
      for (std::size_t v = 0; v < n; ++v) {
        monomial x = m;
        x.set(v, m[v] + 1u);
        if (standard(x) && seen.insert(x).second)
          next.push_back(x);
      }
    frontier = std::move(next);
    if (seen.size() > 1'000'000)
      throw std::runtime_error("standard_monomials: quotient is not zero-dimensional");
  }
  std::vector<monomial> out(seen.rbegin(), seen.rend());
  return out;
}

// Dimension of k[x]/I as a vector space; std::nullopt when infinite.
template <class Field>
std::optional<std::size_t> quotient_dimension(const basis<Field>& gb)
{
  const std::size_t n = gb.ring->nvars();
  if (contains_one(gb))
    return 0;
  auto leads = gb.staircase();
  for (std::size_t v = 0; v < n; ++v) {
    bool pure = false;
    for (const auto& m : leads)
      if (m[v] > 0 && m[v] == m.deg)
        pure = true;
    if (!pure)
      return std::nullopt;
  }
  return standard_monomials(gb).size();
}

} // namespace enriques::groebner

#endif

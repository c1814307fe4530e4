#ifndef ENRIQUES_TEST_ORACLES_HPP
#define ENRIQUES_TEST_ORACLES_HPP

// Reference implementations used only by the tests.  They share no code
// with the library beyond the integer type.

#include "enriques/numeric.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <vector>

namespace oracle {

using enriques::integer;
using enriques::rational;

// Dense truncated polynomial ring Z[H_1..H_k]/(H_i^{n_i+1}).
struct dense {
  std::vector<int> dims;
  std::map<std::vector<int>, integer> c;

  static dense zero(const std::vector<int>& dims) { return {dims, {}}; }
  static dense constant(const std::vector<int>& dims, integer v)
  {
    dense d{dims, {}};
    if (v != 0)
      d.c[std::vector<int>(dims.size(), 0)] = v;
    return d;
  }
  static dense hyperplane(const std::vector<int>& dims, std::size_t i)
  {
    dense d{dims, {}};
    std::vector<int> e(dims.size(), 0);
    if (dims[i] >= 1) {
      e[i] = 1;
      d.c[e] = 1;
    }
    return d;
  }
  // sum d_i H_i
  static dense line(const std::vector<int>& dims, const std::vector<int>& md)
  {
    dense d{dims, {}};
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (md[i] != 0 && dims[i] >= 1) {
        std::vector<int> e(dims.size(), 0);
        e[i] = 1;
        d.c[e] = md[i];
      }
    return d;
  }

  dense operator+(const dense& o) const
  {
    dense r = *this;
    for (const auto& [e, v] : o.c)
      r.c[e] += v;
    r.prune();
    return r;
  }
  dense operator-(const dense& o) const { return *this + o.scaled(-1); }
  dense scaled(const integer& s) const
  {
    dense r{dims, {}};
    for (const auto& [e, v] : c)
      r.c[e] = v * s;
    r.prune();
    return r;
  }
  dense operator*(const dense& o) const
  {
    dense r{dims, {}};
    for (const auto& [e1, v1] : c)
      for (const auto& [e2, v2] : o.c) {
        std::vector<int> e(dims.size());
        bool ok = true;
        for (std::size_t i = 0; i < dims.size(); ++i) {
          e[i] = e1[i] + e2[i];
          ok = ok && e[i] <= dims[i];
        }
        if (ok)
          r.c[e] += v1 * v2;
      }
    r.prune();
    return r;
  }
  integer top() const
  {
    auto it = c.find(dims);
    return it == c.end() ? integer(0) : it->second;
  }
  dense part(int k) const
  {
    dense r{dims, {}};
    for (const auto& [e, v] : c) {
      int s = 0;
      for (int x : e)
        s += x;
      if (s == k)
        r.c[e] = v;
    }
    return r;
  }
  int total_dim() const
  {
    int s = 0;
    for (int d : dims)
      s += d;
    return s;
  }
  // (1 + x)^{-1} for x without constant term
  static dense inverse_one_plus(const dense& x)
  {
    dense r = constant(x.dims, 1), p = constant(x.dims, 1);
    for (int k = 1; k <= x.total_dim(); ++k) {
      p = p * x.scaled(-1);
      r = r + p;
    }
    return r;
  }
  void prune()
  {
    for (auto it = c.begin(); it != c.end();)
      it = it->second == 0 ? c.erase(it) : std::next(it);
  }
};

// prod (1 + l_i)
inline dense chern_of_lines(const std::vector<int>& dims, const std::vector<std::vector<int>>& lines)
{
  dense r = dense::constant(dims, 1);
  for (const auto& l : lines)
    r = r * (dense::constant(dims, 1) + dense::line(dims, l));
  return r;
}

inline integer binom(long long n, long long k)
{
  if (k < 0 || n < k || n < 0)
    return 0;
  integer r = 1;
  for (long long i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

// Hilbert polynomial of P^n at d: (d+1)(d+2)...(d+n)/n!, valid for all d.
inline integer hilbert_projective(int n, long long d)
{
  integer num = 1, den = 1;
  for (int j = 1; j <= n; ++j) {
    num *= integer(d + j);
    den *= j;
  }
  return num / den;
}

// h^i(P^n, O(d)) straight from the definition of the cohomology ring of P^n.
inline std::map<int, integer> projective_cohomology(int n, long long d)
{
  std::map<int, integer> h;
  if (d >= 0)
    h[0] = binom(n + d, n);
  if (d <= -n - 1)
    h[n] = binom(-d - 1, n);
  return h;
}

template <class T>
T leibniz_det(const std::vector<std::vector<T>>& m, const T& zero)
{
  std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i)
    perm[i] = i;
  T acc = zero;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j])
          ++inversions;
    T prod = m[0][perm[0]];
    for (std::size_t i = 1; i < n; ++i)
      prod = prod * m[i][perm[i]];
    acc = inversions % 2 ? acc - prod : acc + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

} // namespace oracle

#endif

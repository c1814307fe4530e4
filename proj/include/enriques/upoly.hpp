#ifndef ENRIQUES_UPOLY_HPP
#define ENRIQUES_UPOLY_HPP

// Dense univariate polynomials over GF(p), coefficients low degree first.

#include "enriques/field.hpp"

#include <utility>
#include <vector>

namespace enriques::upoly {

using coeffs = std::vector<std::uint32_t>;

inline void trim(coeffs& a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

inline int degree(const coeffs& a) { return static_cast<int>(a.size()) - 1; }

inline coeffs add(const prime_field& f, const coeffs& a, const coeffs& b)
{
  coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

inline coeffs sub(const prime_field& f, const coeffs& a, const coeffs& b)
{
  coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

inline coeffs mul(const prime_field& f, const coeffs& a, const coeffs& b)
{
  if (a.empty() || b.empty())
    return {};
  coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  trim(r);
  return r;
}

// (quotient, remainder)
inline std::pair<coeffs, coeffs> divmod(const prime_field& f, coeffs a, const coeffs& b)
{
  if (b.empty())
    throw std::domain_error("upoly division by zero");
  trim(a);
  if (a.size() < b.size())
    return {{}, a};
  coeffs q(a.size() - b.size() + 1, 0);
  auto lead_inv = f.inv(b.back());
  for (std::size_t k = a.size(); k-- >= b.size();) {
    auto c = f.mul(a[k], lead_inv);
    std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    if (c)
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
    if (k == 0)
      break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline coeffs mod(const prime_field& f, const coeffs& a, const coeffs& b) { return divmod(f, a, b).second; }

inline coeffs monic(const prime_field& f, coeffs a)
{
  trim(a);
  if (a.empty())
    return a;
  auto inv = f.inv(a.back());
  for (auto& c : a)
    c = f.mul(c, inv);
  return a;
}

inline coeffs gcd(const prime_field& f, coeffs a, coeffs b)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

inline coeffs derivative(const prime_field& f, const coeffs& a)
{
  coeffs r;
  for (std::size_t i = 1; i < a.size(); ++i)
    r.push_back(f.mul(a[i], f.from_int(static_cast<long long>(i))));
  trim(r);
  return r;
}

inline bool is_squarefree(const prime_field& f, const coeffs& a)
{
  auto d = derivative(f, a);
  if (d.empty())
    return degree(a) <= 0;
  return degree(gcd(f, a, d)) == 0;
}

inline coeffs mulmod(const prime_field& f, const coeffs& a, const coeffs& b, const coeffs& m)
{
  return mod(f, mul(f, a, b), m);
}

inline coeffs powmod(const prime_field& f, coeffs base, std::uint64_t e, const coeffs& m)
{
  coeffs r{1};
  r = mod(f, r, m);
  base = mod(f, base, m);
  while (e) {
    if (e & 1u)
      r = mulmod(f, r, base, m);
    base = mulmod(f, base, base, m);
    e >>= 1u;
  }
  return r;
}

// Distinct-degree factorization of a squarefree monic polynomial: entry d-1
// is the product of all irreducible factors of degree d, for d <= max_degree.
inline std::vector<coeffs> distinct_degree_parts(const prime_field& f, coeffs a, int max_degree)
{
  a = monic(f, a);
  std::vector<coeffs> parts;
  coeffs x{0, 1};
  coeffs xq = mod(f, x, a.size() > 1 ? a : coeffs{1});
  for (int d = 1; d <= max_degree; ++d) {
    if (degree(a) < 1) {
      parts.push_back({1});
      continue;
    }
    xq = powmod(f, xq, f.prime(), a);
    auto g = gcd(f, a, sub(f, xq, mod(f, x, a)));
    parts.push_back(g);
    if (degree(g) > 0) {
      a = divmod(f, a, g).first;
      if (degree(a) > 0)
        xq = mod(f, xq, a);
    }
  }
  return parts;
}

inline std::uint32_t evaluate(const prime_field& f, const coeffs& a, std::uint32_t x)
{
  std::uint32_t acc = 0;
  for (std::size_t i = a.size(); i-- > 0;)
    acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

} // namespace enriques::upoly

#endif

#ifndef ENRIQUES_NUMERIC_HPP
#define ENRIQUES_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace enriques {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// Binomial coefficient extended polynomially in the top argument:
// C(n, k) = n (n-1) ... (n-k+1) / k!  for k >= 0, and 0 for k < 0.
inline integer binomial(integer n, long k)
{
  if (k < 0)
    return 0;
  integer num = 1;
  integer den = 1;
  for (long i = 0; i < k; ++i) {
    num *= (n - i);
    den *= (i + 1);
  }
  return num / den;
}

inline integer factorial(long n)
{
  integer r = 1;
  for (long i = 2; i <= n; ++i)
    r *= i;
  return r;
}

inline std::string to_string(const integer& v) { return v.str(); }

inline std::string to_string(const rational& v)
{
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1)
    return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline bool is_integral(const rational& v)
{
  return boost::multiprecision::denominator(v) == 1;
}

inline integer to_integer(const rational& v)
{
  if (!is_integral(v))
    throw std::domain_error("non-integral rational " + to_string(v));
  return boost::multiprecision::numerator(v);
}

// splitmix64 step; used to derive independent sub-seeds from one user seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

} // namespace enriques

#endif

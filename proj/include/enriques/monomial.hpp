#ifndef ENRIQUES_MONOMIAL_HPP
#define ENRIQUES_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace enriques {

inline constexpr std::size_t max_vars = 16;

// Exponent vector with a cached total degree.  Unused trailing variables
// stay zero, so comparisons never need the variable count.
struct monomial {
  std::array<std::uint8_t, max_vars> e{};
  std::uint16_t deg = 0;

  std::uint8_t operator[](std::size_t i) const { return e[i]; }

  void set(std::size_t i, unsigned v)
  {
    if (v > 255)
      throw std::overflow_error("monomial exponent exceeds 255");
    deg = static_cast<std::uint16_t>(deg - e[i] + v);
    e[i] = static_cast<std::uint8_t>(v);
  }

  friend bool operator==(const monomial& a, const monomial& b) { return a.e == b.e; }
  friend bool operator!=(const monomial& a, const monomial& b) { return a.e != b.e; }

  friend monomial operator*(const monomial& a, const monomial& b)
  {
    monomial r;
    unsigned over = 0;
    for (std::size_t i = 0; i < max_vars; ++i) {
      unsigned s = unsigned(a.e[i]) + b.e[i];
      over |= s;
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    if (over > 255)
      throw std::overflow_error("monomial exponent exceeds 255");
    r.deg = static_cast<std::uint16_t>(a.deg + b.deg);
    return r;
  }

  // a | b
  friend bool divides(const monomial& a, const monomial& b)
  {
    if (a.deg > b.deg)
      return false;
    for (std::size_t i = 0; i < max_vars; ++i)
      if (a.e[i] > b.e[i])
        return false;
    return true;
  }

  // b / a, assuming a | b
  friend monomial quotient(const monomial& b, const monomial& a)
  {
    monomial r;
    for (std::size_t i = 0; i < max_vars; ++i)
      r.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
    r.deg = static_cast<std::uint16_t>(b.deg - a.deg);
    return r;
  }

  friend monomial lcm(const monomial& a, const monomial& b)
  {
    monomial r;
    unsigned d = 0;
    for (std::size_t i = 0; i < max_vars; ++i) {
      r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
      d += r.e[i];
    }
    r.deg = static_cast<std::uint16_t>(d);
    return r;
  }

  friend bool coprime(const monomial& a, const monomial& b)
  {
    for (std::size_t i = 0; i < max_vars; ++i)
      if (a.e[i] && b.e[i])
        return false;
    return true;
  }
};

// Graded reverse lexicographic comparison: >0 when a > b.
inline int grevlex_cmp(const monomial& a, const monomial& b)
{
  if (a.deg != b.deg)
    return a.deg > b.deg ? 1 : -1;
  for (std::size_t i = max_vars; i-- > 0;)
    if (a.e[i] != b.e[i])
      return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

struct grevlex_greater {
  bool operator()(const monomial& a, const monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

} // namespace enriques

#endif

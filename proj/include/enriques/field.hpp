#ifndef ENRIQUES_FIELD_HPP
#define ENRIQUES_FIELD_HPP

#include "enriques/numeric.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace enriques {

struct rational_field {
  using value_type = rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return v; }
  value_type from_rational(const rational& v) const { return v; }
  bool is_zero(const value_type& v) const { return v == 0; }
  bool is_one(const value_type& v) const { return v == 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const
  {
    if (a == 0)
      throw std::domain_error("division by zero");
    return 1 / a;
  }
  bool is_negative(const value_type& a) const { return a < 0; }
  std::string str(const value_type& a) const { return to_string(a); }
  std::string name() const { return "QQ"; }
  std::uint64_t characteristic() const { return 0; }

  // nonzero integer in [-9, 9]
  value_type random_nonzero(std::mt19937_64& rng) const
  {
    long long v = static_cast<long long>(rng() % 18);
    return v < 9 ? v - 9 : v - 8;
  }

  friend bool operator==(const rational_field&, const rational_field&) { return true; }
};

class prime_field {
public:
  using value_type = std::uint32_t;

  explicit prime_field(std::uint32_t p = 101) : p_(p)
  {
    if (!is_prime(p) || p >= (1u << 31))
      throw std::invalid_argument("prime_field: " + std::to_string(p) + " is not a supported prime");
  }

  std::uint32_t prime() const { return p_; }
  std::uint64_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const
  {
    long long r = v % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type from_integer(const integer& v) const
  {
    integer r = v % p_;
    if (r < 0)
      r += p_;
    return static_cast<value_type>(r);
  }
  value_type from_rational(const rational& v) const
  {
    value_type d = from_integer(boost::multiprecision::denominator(v));
    if (d == 0)
      throw std::domain_error("rational not p-integral");
    return mul(from_integer(boost::multiprecision::numerator(v)), inv(d));
  }
  bool is_zero(value_type v) const { return v == 0; }
  bool is_one(value_type v) const { return v == 1; }
  value_type add(value_type a, value_type b) const
  {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const
  {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type pow(value_type a, std::uint64_t e) const
  {
    std::uint64_t r = 1, b = a;
    while (e) {
      if (e & 1u)
        r = r * b % p_;
      b = b * b % p_;
      e >>= 1u;
    }
    return static_cast<value_type>(r);
  }
  value_type inv(value_type a) const
  {
    if (a == 0)
      throw std::domain_error("division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
  }
  bool is_negative(value_type) const { return false; }
  std::string str(value_type a) const { return std::to_string(a); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  value_type random_nonzero(std::mt19937_64& rng) const
  {
    return static_cast<value_type>(1 + rng() % (p_ - 1));
  }
  value_type random(std::mt19937_64& rng) const { return static_cast<value_type>(rng() % p_); }

  friend bool operator==(const prime_field& a, const prime_field& b) { return a.p_ == b.p_; }

private:
  std::uint32_t p_;
};

} // namespace enriques

#endif

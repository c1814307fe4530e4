#include "enriques/groebner.hpp"
#include "properties.hpp"

#include <gtest/gtest.h>

using namespace enriques;
using namespace enriques::mpoly;
using fp = polynomial<prime_field>;
using qq = polynomial<rational_field>;

TEST(Groebner, SPolynomialCorrectness)
{
  auto res = props::spoly(60, 31);
  EXPECT_TRUE(res.ok) << res.detail;
}

TEST(Groebner, TextbookExample)
{
  auto R = make_ring(rational_field{}, {{"x", {"x", "y"}}});
  std::vector<qq> in{parse_polynomial(R, "x^3 - 2*x*y"), parse_polynomial(R, "x^2*y - 2*y^2 + x")};
  auto res = groebner::buchberger(in);
  ASSERT_TRUE(res.complete());
  // reduced grevlex basis {x^2, x*y, y^2 - 1/2*x}
  std::vector<qq> expect{parse_polynomial(R, "x^2"), parse_polynomial(R, "x*y"),
                         parse_polynomial(R, "y^2 - 1/2*x")};
  ASSERT_EQ(res.gb.gens.size(), 3u);
  for (const auto& e : expect)
    EXPECT_NE(std::find(res.gb.gens.begin(), res.gb.gens.end(), e), res.gb.gens.end()) << e.str();
  EXPECT_EQ(*groebner::quotient_dimension(res.gb), 3u);
}

TEST(Groebner, LinearSystemsMatchElimination)
{
  std::mt19937_64 rng(3);
  prime_field F(101);
  auto R = make_ring(F, {{"x", {"a", "b", "c", "d"}}});
  for (int t = 0; t < 20; ++t) {
    std::vector<fp> in;
    std::uniform_int_distribution<int> k(1, 5);
    int n = k(rng);
    for (int i = 0; i < n; ++i) {
      fp f = fp::constant(R, F.random(rng));
      for (std::size_t v = 0; v < 4; ++v)
        f += fp::constant(R, F.random(rng)) * fp::variable(R, v);
      in.push_back(f);
    }
    auto res = groebner::buchberger(in);
    ASSERT_TRUE(res.complete());
    // rank via Gaussian elimination on the augmented matrix
    std::vector<std::vector<std::uint32_t>> m;
    for (const auto& f : in) {
      std::vector<std::uint32_t> row(5, 0);
      for (const auto& term : f.terms()) {
        std::size_t col = 4;
        for (std::size_t v = 0; v < 4; ++v)
          if (term.m[v])
            col = v;
        row[col] = term.c;
      }
      m.push_back(row);
    }
    std::size_t rank = 0;
    bool inconsistent = false;
    for (std::size_t col = 0; col < 5 && rank < m.size(); ++col) {
      std::size_t piv = rank;
      while (piv < m.size() && m[piv][col] == 0)
        ++piv;
      if (piv == m.size())
        continue;
      std::swap(m[piv], m[rank]);
      auto inv = F.inv(m[rank][col]);
      for (auto& x : m[rank])
        x = F.mul(x, inv);
      for (std::size_t r = 0; r < m.size(); ++r)
        if (r != rank && m[r][col]) {
          auto s = m[r][col];
          for (std::size_t c = 0; c < 5; ++c)
            m[r][c] = F.sub(m[r][c], F.mul(s, m[rank][c]));
        }
      if (col == 4)
        inconsistent = true;
      ++rank;
    }
    if (inconsistent) {
      EXPECT_TRUE(groebner::contains_one(res.gb));
    } else {
      EXPECT_EQ(res.gb.gens.size(), rank);
      EXPECT_FALSE(groebner::contains_one(res.gb));
    }
  }
}

TEST(Groebner, MembershipAndUnitIdeal)
{
  auto R = make_ring(prime_field(32003), {{"x", {"x", "y", "z"}}});
  auto x = fp::variable(R, "x"), y = fp::variable(R, "y"), z = fp::variable(R, "z");
  auto res = groebner::buchberger(std::vector<fp>{x * y - z, y * z - x, x * z - y});
  ASSERT_TRUE(res.complete());
  EXPECT_TRUE(groebner::is_member(x * x * y - x * z, res.gb));
  EXPECT_FALSE(groebner::is_member(x + fp::constant(R, 1), res.gb));
  auto unit = groebner::buchberger(std::vector<fp>{x, x - fp::constant(R, 1)});
  EXPECT_TRUE(groebner::contains_one(unit.gb));
}

TEST(Groebner, QuotientDimensionCountsPointsWithMultiplicity)
{
  auto R = make_ring(prime_field(101), {{"x", {"x", "y"}}});
  // four rational points
  auto res = groebner::buchberger(std::vector<fp>{parse_polynomial(R, "x^2 - 1"), parse_polynomial(R, "y^2 - 4")});
  EXPECT_EQ(*groebner::quotient_dimension(res.gb), 4u);
  EXPECT_EQ(groebner::standard_monomials(res.gb).size(), 4u);
  auto line = groebner::buchberger(std::vector<fp>{parse_polynomial(R, "x - y")});
  EXPECT_FALSE(groebner::quotient_dimension(line.gb).has_value());
  auto fat = groebner::buchberger(std::vector<fp>{parse_polynomial(R, "x^3"), parse_polynomial(R, "y")});
  EXPECT_EQ(*groebner::quotient_dimension(fat.gb), 3u);
}

TEST(Groebner, StepBudget)
{
  auto R = make_ring(prime_field(32003), {{"x", {"x", "y", "z", "w"}}});
  std::mt19937_64 rng(1);
  std::vector<fp> in;
  for (int k = 0; k < 4; ++k)
    in.push_back(props::random_poly(R, rng, 8, 6));
  auto res = groebner::buchberger(in, groebner::options{10});
  EXPECT_FALSE(res.complete());
  EXPECT_EQ(res.status, groebner::gb_status::budget_exceeded);
}

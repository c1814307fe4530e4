#include "enriques/charclass.hpp"
#include "enriques/paperlab.hpp"
#include "oracles.hpp"
#include "properties.hpp"

#include <gtest/gtest.h>

using namespace enriques;
using namespace enriques::charclass;
using chow::chow_class;

namespace {

chow_class g(const chow::ring_ptr& r, const char* n) { return chow_class::gen(r, n); }

complete_intersection hypersurface(int n, int d)
{
  auto r = chow::make_multiproj({n});
  return {r, {integer(d) * g(r, "a")}};
}

} // namespace

TEST(CharClass, WhitneyRandomBundles)
{
  auto res = props::whitney(50, 2024);
  EXPECT_EQ(res.cases, 50);
  EXPECT_TRUE(res.ok) << res.detail;
}

TEST(CharClass, BottHrrRandomTwists)
{
  auto res = props::bott_hrr(100, 99);
  EXPECT_EQ(res.cases, 100);
  EXPECT_TRUE(res.ok) << res.detail;
}

TEST(CharClass, TangentOfProjectiveSpace)
{
  for (int n = 1; n <= 6; ++n) {
    auto r = chow::make_multiproj({n});
    auto expect = (chow_class::constant(r, 1) + chow_class::gen(r, 0)).pow(static_cast<unsigned>(n + 1));
    EXPECT_EQ(tangent_class(r), expect);
    EXPECT_EQ(euler_characteristic_top({r, {}}), n + 1);
  }
}

TEST(CharClass, HirzebruchSurfaceEuler)
{
  for (int e = 0; e <= 4; ++e) {
    auto base = chow::make_multiproj({1});
    auto R = chow::make_bundle_ring(base, {integer(e) * g(base, "h"), chow_class(base)});
    EXPECT_EQ(euler_characteristic_top({R, {}}), 4) << "F_" << e;
    EXPECT_EQ(hrr_chi({R, {}}, chow_class(R)), 1);
  }
}

TEST(CharClass, SurfacesInP3)
{
  for (int d = 1; d <= 7; ++d)
    EXPECT_EQ(euler_characteristic_top(hypersurface(3, d)), d * d * d - 4 * d * d + 6 * d) << d;
  auto k3 = hypersurface(3, 4);
  EXPECT_EQ(euler_characteristic_top(k3), 24);
  EXPECT_EQ(hrr_chi(k3, chow_class(k3.ambient)), 2);
  EXPECT_TRUE(canonical_class(k3).is_zero());
}

TEST(CharClass, CurvesAndThreefolds)
{
  for (int d = 1; d <= 8; ++d)
    EXPECT_EQ(euler_characteristic_top(hypersurface(2, d)), 3 * d - d * d) << d;
  auto quintic = hypersurface(4, 5);
  EXPECT_EQ(euler_characteristic_top(quintic), -200);
  EXPECT_EQ(hrr_chi(quintic, chow_class(quintic.ambient)), 0);
}

TEST(CharClass, ThreefoldInvariants)
{
  auto m = paperlab::threefold_spec();
  EXPECT_EQ(euler_characteristic_top(m.ci), -36);
  EXPECT_EQ(hrr_chi(m.ci, chow_class(m.ambient)), 1);
  const auto& R = m.ambient;
  auto two = integer(2);
  auto K = canonical_class(m.ci);
  EXPECT_EQ(two * K, two * g(R, "h") + (g(R, "xi") - two * g(R, "a")) + (g(R, "xi") - two * g(R, "b")));
}

TEST(CharClass, PorteousDeterminantalDegrees)
{
  // 2x3 matrices of linear forms drop rank on a codimension-2 locus of degree 3
  auto r = chow::make_multiproj({4});
  bundle_expr F{r, {}, {}};
  F.add_line(g(r, "a"), 2);
  EXPECT_EQ(degeneracy_class(3, F, 1), integer(3) * g(r, "a").pow(2));
  // maximal minors of a 3x4 matrix of linear forms: codim 2, degree 6
  auto r6 = chow::make_multiproj({6});
  bundle_expr F3{r6, {}, {}};
  F3.add_line(g(r6, "a"), 3);
  EXPECT_EQ(degeneracy_class(4, F3, 2), integer(6) * g(r6, "a").pow(2));
  // a single row vanishes: c_top
  bundle_expr L{r6, {}, {}};
  L.add_line(integer(2) * g(r6, "a"));
  EXPECT_EQ(degeneracy_class(3, L, 0), integer(8) * g(r6, "a").pow(3));
}

TEST(CharClass, SpecialFiberClassFromOracle)
{
  auto r = paperlab::ambient_chow();
  const std::vector<int> dims{1, 2, 2};
  auto c = oracle::chern_of_lines(dims, {{1, 2, 0}, {0, 0, 2}});
  auto expect = c.part(1) * c.part(1) - c.part(2);
  EXPECT_EQ(props::to_dense(paperlab::special_fiber_class(r), dims).c, expect.c);
  auto h = g(r, "h"), a = g(r, "a"), b = g(r, "b");
  auto x0 = paperlab::special_fiber_class(r);
  auto lhs = ((h + integer(2) * a) - integer(2) * b) * x0;
  EXPECT_EQ(lhs, (h + integer(2) * a).pow(3));
  EXPECT_EQ(lhs, integer(12) * h * a * a);
}

TEST(CharClass, BottKunnethExamples)
{
  auto t = bott_kunneth_table({1, 2, 2}, {0, -4, 0});
  EXPECT_EQ(t.at(2), 3);
  EXPECT_EQ(t.alternating_sum(), 3);
  EXPECT_TRUE(bott_kunneth_table({1, 2, 2}, {-2, -2, -2}).is_zero());
  EXPECT_EQ(bott_kunneth_table({2}, {-3}).at(2), 1);
  EXPECT_EQ(bott_kunneth_table({1, 1}, {-2, 3}).at(1), 4);
}

TEST(CharClass, ResolutionCohomology)
{
  // plane cubic: 0 -> O(-3) -> O -> O_C -> 0
  auto cubic = resolution_sheaf_cohomology({2}, {{{0}}, {{-3}}}, {0});
  EXPECT_TRUE(cubic.exact);
  EXPECT_EQ(cubic.at(0), 1);
  EXPECT_EQ(cubic.at(1), 1);
  // a conic twisted by 2 has a possible differential; only chi is certain
  auto conic = resolution_sheaf_cohomology({2}, {{{0}}, {{-2}}}, {2});
  EXPECT_FALSE(conic.exact);
  EXPECT_EQ(conic.euler, 5);
  // the threefold
  const auto& terms = paperlab::ideal_resolution();
  auto o = resolution_sheaf_cohomology({1, 2, 2}, terms, {0, 0, 0});
  EXPECT_TRUE(o.exact);
  EXPECT_EQ(o.at(0), 1);
  for (int i = 1; i <= 5; ++i)
    EXPECT_EQ(o.at(i), 0) << i;
}

TEST(CharClass, ChernCharacterOfLine)
{
  auto r = chow::make_multiproj({3});
  auto a = g(r, "a");
  bundle_expr E{r, {}, {}};
  E.add_line(integer(2) * a);
  auto ch = chern_character(chern_total(E), 1);
  EXPECT_EQ(ch.coefficient({3}), rational(8, 6));
  EXPECT_EQ(ch.coefficient({1}), rational(2));
}

TEST(CharClass, Errors)
{
  auto r = chow::make_multiproj({2});
  EXPECT_THROW(bundle_expr::line_class(r, {1, 2}), std::invalid_argument);
  bundle_expr E{r, {}, {}};
  EXPECT_THROW(E.add_line(g(r, "a").pow(2)), std::invalid_argument);
  EXPECT_THROW(euler_characteristic_top({r, {g(r, "a").pow(2)}}), std::invalid_argument);
  EXPECT_THROW(bott_kunneth_table({1, 2}, {0}), std::invalid_argument);
}

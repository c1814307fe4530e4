#include "enriques/cells.hpp"
#include "enriques/paperlab.hpp"
#include "properties.hpp"

#include <gtest/gtest.h>

using namespace enriques;
using fp = mpoly::polynomial<prime_field>;

TEST(Cells, DecompositionSizes)
{
  auto R = paperlab::pencil_ring(prime_field(101));
  auto all = cells::decompose(R);
  EXPECT_EQ(all.cells.size(), 18u);
  EXPECT_EQ(all.cells.front().id, "S,X0,Y0");
  EXPECT_EQ(cells::decompose(R, {0, 1}).cells.size(), 6u);
  EXPECT_EQ(cells::decompose(R, {2}).cells.size(), 3u);
}

TEST(Cells, PointsOfPlaneConfigurations)
{
  auto R = mpoly::make_ring(prime_field(101), {{"X", {"X0", "X1", "X2"}}});
  auto dec = cells::decompose(R);
  // two conics meet in 4 points
  std::mt19937_64 rng(1);
  auto c1 = mpoly::random_form(R, {2}, 5), c2 = mpoly::random_form(R, {2}, 6);
  auto pc = cells::cell_point_count(std::vector<fp>{c1, c2}, dec);
  EXPECT_EQ(pc.total, 4u);
  EXPECT_EQ(cells::radical_point_check(std::vector<fp>{c1, c2}, dec, 9), cells::point_check::reduced);
  // a tangency point counts twice and is not reduced
  auto tang = std::vector<fp>{mpoly::parse_polynomial(R, "X1^2"), mpoly::parse_polynomial(R, "X2")};
  EXPECT_EQ(cells::cell_point_count(tang, dec).total, 2u);
  EXPECT_EQ(cells::radical_point_check(tang, dec, 9), cells::point_check::nonreduced);
  // a curve is positive dimensional
  EXPECT_THROW(cells::cell_point_count(std::vector<fp>{c1}, dec), cells::positive_dimensional_error);
}

TEST(Cells, CountAgreementAcrossSeedsAndPrimes)
{
  auto res = props::count_agreement({101, 211}, 5);
  EXPECT_EQ(res.cases, 10);
  EXPECT_TRUE(res.ok) << res.detail;
}

TEST(Cells, MinimalPolynomialSeparatesPoints)
{
  auto R = mpoly::make_ring(prime_field(101), {{"x", {"x", "y"}}});
  auto res = groebner::buchberger(std::vector<fp>{mpoly::parse_polynomial(R, "x^2 - 1"),
                                                  mpoly::parse_polynomial(R, "y^2 - 4")});
  cells::zero_dim_algebra alg(res.gb);
  EXPECT_EQ(alg.dim(), 4u);
  auto pr = alg.analyze(mpoly::parse_polynomial(R, "x + 3*y"));
  EXPECT_EQ(upoly::degree(pr.min_poly), 4);
  EXPECT_TRUE(upoly::is_squarefree(R->field(), pr.min_poly));
  EXPECT_EQ(pr.var_images.size(), 2u);
}

TEST(Cells, SpecialFiberSmoothAndControlSingular)
{
  for (std::uint32_t p : {101u, 211u}) {
    auto inst = paperlab::build_instance(p, 1);
    auto dec = cells::decompose(inst.ring_p);
    auto rep = cells::smoothness_certificate(inst.minors_N_p(), 2, dec);
    EXPECT_EQ(rep.cells.size(), 18u);
    EXPECT_EQ(rep.count(cells::cell_status::smooth_certified), 18u) << p;
    EXPECT_TRUE(rep.smooth());
  }
  paperlab::variant v;
  v.p1_equals_q1 = true;
  auto bad = paperlab::build_instance(101, 1, v);
  auto rep = cells::smoothness_certificate(bad.minors_N_p(), 2, cells::decompose(bad.ring_p));
  EXPECT_TRUE(rep.any_singular());
  EXPECT_FALSE(rep.smooth());
}

TEST(Cells, EnriquesSurfaceNineCells)
{
  auto s = paperlab::build_surface(101, 1);
  auto rep = cells::smoothness_certificate(s.minors(), 2, cells::decompose(s.ring));
  EXPECT_EQ(rep.cells.size(), 9u);
  EXPECT_EQ(rep.count(cells::cell_status::smooth_certified), 9u);
}

TEST(Cells, ProbeFindsControlSingularities)
{
  auto inst = paperlab::build_instance(101, 1);
  auto dec = cells::decompose(inst.ring_p);
  cells::probe_options po;
  po.samples = 40;
  auto ok = cells::smoothness_probe(inst.minors_N_p(), 2, dec, po);
  EXPECT_NE(ok.status, cells::probe_status::singular_found);
  EXPECT_GT(ok.points_tested, 0u);
  paperlab::variant v;
  v.p1_equals_q1 = true;
  auto bad = paperlab::build_instance(101, 1, v);
  auto pr = cells::smoothness_probe(bad.minors_N_p(), 2, dec, po);
  EXPECT_EQ(pr.status, cells::probe_status::singular_found);
}

TEST(Cells, BudgetIsReported)
{
  auto inst = paperlab::build_instance(101, 1);
  auto rep = cells::smoothness_certificate(inst.minors_N_p(), 2, cells::decompose(inst.ring_p), groebner::options{50});
  EXPECT_GT(rep.count(cells::cell_status::inconclusive), 0u);
  EXPECT_FALSE(rep.smooth());
  EXPECT_FALSE(rep.any_singular());
}

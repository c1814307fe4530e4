#include "enriques/paperlab.hpp"

#include <gtest/gtest.h>

using namespace enriques;
using namespace enriques::paperlab;

namespace {

bool sub_check(const check_record& r, const std::string& key)
{
  return r.values.contains("sub_checks") && r.values["sub_checks"].contains(key) &&
         r.values["sub_checks"][key].get<bool>();
}

instance control(void (*set)(variant&))
{
  variant v;
  set(v);
  return build_instance(101, 1, v);
}

} // namespace

TEST(Pencil, PrimePreconditions)
{
  EXPECT_THROW(check_prime(2), std::invalid_argument);
  EXPECT_THROW(check_prime(3), std::invalid_argument);
  EXPECT_THROW(check_prime(100), std::invalid_argument);
  EXPECT_NO_THROW(check_prime(101));
  EXPECT_EQ(companion_prime(101), 103u);
  EXPECT_EQ(companion_prime(211), 223u);
}

TEST(Pencil, InstancesAreDeterministic)
{
  auto a = build_instance(101, 7), b = build_instance(101, 7), c = build_instance(101, 8);
  EXPECT_EQ(dump_instance(a), dump_instance(b));
  EXPECT_NE(dump_instance(a), dump_instance(c));
  EXPECT_EQ(*a.forms[0].multidegree(), (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(*a.forms[4].multidegree(), (std::vector<int>{0, 0, 2}));
  EXPECT_EQ(*a.forms[8].multidegree(), (std::vector<int>{1, 0, 2}));
  EXPECT_EQ(*a.F.multidegree(), (std::vector<int>{2, 2, 4}));
}

TEST(Pencil, DumpLoadRoundTrip)
{
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    variant v;
    v.omit_p_terms = seed == 3;
    auto inst = build_instance(211, seed, v);
    auto text = dump_instance(inst);
    auto back = load_instance(text);
    EXPECT_EQ(dump_instance(back), text);
    EXPECT_EQ(back.F, inst.F);
    EXPECT_EQ(back.M.entries, inst.M.entries);
  }
}

TEST(Pencil, LoadErrorsCarryLineNumbers)
{
  EXPECT_THROW(load_instance("bogus\n"), std::invalid_argument);
  auto text = dump_instance(build_instance(101, 1));
  auto bad = text + "Z9 1\n";
  try {
    load_instance(bad);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("line 15"), std::string::npos) << e.what();
  }
  auto pos = text.find("prime 101");
  auto wrong_prime = text;
  wrong_prime.replace(pos, 9, "prime 2");
  EXPECT_THROW(load_instance(wrong_prime), std::invalid_argument);
  auto missing = text.substr(0, text.find("R3"));
  EXPECT_THROW(load_instance(missing), std::invalid_argument);
}

TEST(Pencil, TwelvePlanes)
{
  for (std::uint64_t seed = 1; seed <= 2; ++seed) {
    auto rec = verify_twelve_planes(build_instance(101, seed));
    EXPECT_EQ(rec.state, status::verified) << rec.values.dump();
    EXPECT_EQ(rec.values["point_count"].get<std::size_t>(), 12u);
    EXPECT_EQ(rec.values["points_over_S0"].get<std::size_t>(), 0u);
    EXPECT_EQ(rec.values["radical"], "reduced");
  }
}

TEST(Pencil, TwelvePlanesControls)
{
  auto flat = verify_twelve_planes(control([](variant& v) { v.flat_first_row = true; }));
  EXPECT_EQ(flat.state, status::failed);
  EXPECT_FALSE(sub_check(flat, "point_count_is_12"));
  auto equal = verify_twelve_planes(control([](variant& v) { v.p1_equals_q1 = true; }));
  EXPECT_EQ(equal.state, status::failed);
}

TEST(Pencil, Specialization)
{
  for (std::uint32_t p : {101u, 211u}) {
    auto rec = verify_specialization_decomposition(build_instance(p, 1));
    EXPECT_EQ(rec.state, status::verified) << rec.values.dump();
    EXPECT_TRUE(rec.values.contains("inference"));
  }
  auto omit = verify_specialization_decomposition(control([](variant& v) { v.omit_p_terms = true; }));
  EXPECT_EQ(omit.state, status::failed);
  EXPECT_TRUE(sub_check(omit, "minors_M_mod_p_equal_S_times_minors_N"));
  EXPECT_FALSE(sub_check(omit, "M_differs_from_special_fiber_by_p_multiples"));
  auto zero = verify_specialization_decomposition(control([](variant& v) { v.zero_third_row = true; }));
  EXPECT_EQ(zero.state, status::failed);
  EXPECT_FALSE(sub_check(zero, "F_nonzero"));
}

TEST(Pencil, DivisorIdentityAndCongruence)
{
  auto rec = verify_divisor_identity(nullptr);
  EXPECT_EQ(rec.state, status::verified);
  EXPECT_EQ(rec.values["lhs"], "12 * h a^2");
  divisor_types wrong;
  wrong.d2 = {0, 0, 1};
  EXPECT_EQ(verify_divisor_identity(nullptr, {}, wrong).state, status::failed);

  auto cong = verify_congruence(1);
  EXPECT_EQ(cong.state, status::verified);
  EXPECT_EQ(cong.values["count"].get<std::size_t>(), 5u + 20u);
  auto bad = verify_congruence(1, wrong);
  EXPECT_EQ(bad.state, status::failed);
}

TEST(Pencil, StretchIdealDivisorCheck)
{
  auto inst = build_instance(101, 1);
  check_options opt;
  opt.stretch_ideal_divisor_check = true;
  auto rec = verify_divisor_identity(&inst, opt);
  EXPECT_EQ(rec.state, status::verified) << rec.values.dump();
  EXPECT_EQ(rec.values["stretch"]["open_cover_points"].get<std::size_t>(), 0u);
}

TEST(Pencil, CohomologyAndInvariants)
{
  auto coh = verify_cohomology();
  EXPECT_EQ(coh.state, status::verified);
  EXPECT_EQ(coh.values["hrr_chi"], "1");
  auto inv = compute_invariants();
  EXPECT_EQ(inv.state, status::verified);
  EXPECT_EQ(inv.values["chi_top"], "-36");
}

TEST(Pencil, HodgeDiamond)
{
  auto d = hodge_diamond(-36, 12);
  EXPECT_EQ(d.b2, 26);
  EXPECT_EQ(d.b3, 90);
  EXPECT_EQ(d.h12, 45);
  EXPECT_EQ(hodge_record(-36, 12).provenance, "cited-axiom");
  EXPECT_EQ(hodge_record(-36, 11).state, status::failed);
}

TEST(Pencil, NonAlgebraicityGating)
{
  std::vector<check_record> deps;
  for (const auto& n : check_names()) {
    check_record r;
    r.name = n;
    deps.push_back(r);
  }
  check_record h;
  h.name = "hodge-diamond";
  deps.push_back(h);
  EXPECT_EQ(nonalgebraicity_record(deps).state, status::verified);
  deps[4] = skipped("congruence");
  EXPECT_EQ(nonalgebraicity_record(deps).state, status::inconclusive);
  deps[1].state = status::failed;
  EXPECT_EQ(nonalgebraicity_record(deps).state, status::failed);
  deps.pop_back();
  deps[1].state = status::verified;
  deps[4].state = status::verified;
  EXPECT_EQ(nonalgebraicity_record(deps).state, status::inconclusive);
}

TEST(Pencil, VerifyAllWithoutSmoothness)
{
  run_config cfg;
  cfg.primes = {101};
  cfg.jobs = 1;
  cfg.skip = {"smooth-models"};
  auto rep = verify_all(cfg);
  EXPECT_EQ(rep.exit_code, 2);
  EXPECT_EQ(rep.verdict, "not established");
  auto j = rep.to_json();
  EXPECT_EQ(j["format"], "enriques-report");
  EXPECT_FALSE(j["checks"][0].contains("ms"));
  EXPECT_EQ(rep.to_json().dump(), verify_all(cfg).to_json().dump());
  EXPECT_NE(rep.human().find("chi_top = -36"), std::string::npos);
}

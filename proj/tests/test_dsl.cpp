#include "enriques/dsl.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace enriques;
namespace dsl = enriques::dsl;

namespace {

std::vector<std::string> corpus()
{
  std::ifstream in(std::string(ENRIQUES_TEST_DATA) + "/dsl_corpus.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str(), sep = "\n----\n";
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto next = text.find(sep, pos);
    out.push_back(text.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos)
      break;
    pos = next + sep.size();
  }
  return out;
}

std::vector<std::string> lines(const std::string& script)
{
  auto r = dsl::run(script);
  EXPECT_TRUE(r.ok) << script << "\n" << r.error;
  return r.lines;
}

std::string single(const std::string& script)
{
  auto l = lines(script);
  return l.size() == 1 ? l.front() : "<" + std::to_string(l.size()) + " results>";
}

dsl::parse_error parse_failure(const std::string& script)
{
  auto r = dsl::parse(script);
  EXPECT_TRUE(std::holds_alternative<dsl::parse_error>(r)) << script;
  return std::holds_alternative<dsl::parse_error>(r) ? std::get<dsl::parse_error>(r) : dsl::parse_error{};
}

} // namespace

TEST(Dsl, Examples)
{
  EXPECT_EQ(single("space P(2); integrate a^2;"), "1");
  EXPECT_EQ(single("space P(1)*P(2); integrate (h+2a)^3;"), "12");
  EXPECT_EQ(single("space P(1)*P(2)*P(2); bundle E = O(1,2,0)+O(1,0,2); "
                   "integrate (c1(E)^2 - c2(E)) * h * a^2;"),
            "4");
  EXPECT_EQ(single("space P(1)*P(2)*P(2); bundle A = O(0,2,0)+O(0,0,2); space P(A); euler h+xi, h+xi, h+xi;"),
            "-36");
}

TEST(Dsl, CohomologyQueries)
{
  EXPECT_EQ(single("chi O(-2,-2,-2) on P(1)*P(2)*P(2)"),
            "0 exact {h^0=0, h^1=0, h^2=0, h^3=0, h^4=0, h^5=0} chi=0");
  EXPECT_EQ(single("cohom O(0,-4,0) on P(1)*P(2)*P(2)"),
            "exact {h^0=0, h^1=0, h^2=3, h^3=0, h^4=0, h^5=0} chi=3");
  EXPECT_EQ(single("space P(3); chi O(0) cut 4a"), "2");
  // the on-clause does not change the current space
  EXPECT_EQ(lines("space P(2); chi O(1) on P(4); integrate a^2"), (std::vector<std::string>{"5 exact {h^0=5, h^1=0, h^2=0, h^3=0, h^4=0} chi=5", "1"}));
}

TEST(Dsl, ChernAndDegeneracy)
{
  EXPECT_EQ(single("space P(2)*P(2); chern O(1,0) + O(0,1);"), "1 + 1 * a + 1 * b + 1 * a b");
  EXPECT_EQ(single("space P(4); degeneracy(3, 2*O(1), 1);"), "3 * a^2");
  EXPECT_EQ(single("space P(1); bundle E = O(0) + O(1); space P(E); euler;"), "4");
  EXPECT_EQ(single("space P(3); euler 4a;"), "24");
}

TEST(Dsl, LetsLiftAlongBundleTowers)
{
  EXPECT_EQ(single("space P(2); let p = a^2; bundle T = 2*O(1); space P(T); integrate p * xi;"), "1");
  EXPECT_EQ(single("space P(2); bundle T = 3*O(1); space P(T); space P(T); integrate xi^2 xi2^2 a^2"), "1");
}

TEST(Dsl, ParseErrorPositions)
{
  auto e = parse_failure("integrate a^;");
  EXPECT_EQ(e.pos.line, 1);
  EXPECT_EQ(e.pos.column, 13);
  EXPECT_TRUE(e.expected.count("integer"));
  auto e2 = parse_failure("space P(2);\n  integrate (a + ;");
  EXPECT_EQ(e2.pos.line, 2);
  EXPECT_EQ(e2.pos.column, 18);
  auto e3 = parse_failure("space P(2) $");
  EXPECT_EQ(e3.pos.column, 12);
  auto e4 = parse_failure("frobnicate a;");
  EXPECT_TRUE(e4.expected.count("'integrate'"));
  EXPECT_NE(e4.str().find("1:1"), std::string::npos);
}

TEST(Dsl, EvaluationErrors)
{
  auto r = dsl::run("space P(2); integrate q;");
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.error.find("1:23"), std::string::npos) << r.error;
  EXPECT_NE(r.error.find("unknown name q"), std::string::npos);
  EXPECT_FALSE(dsl::run("integrate 1;").ok);
  EXPECT_FALSE(dsl::run("space P(2); chern O(1,1);").ok);
  EXPECT_FALSE(dsl::run("space P(2); space P(F);").ok);
  EXPECT_FALSE(dsl::run("space P(2); euler a^2;").ok);
  EXPECT_FALSE(dsl::run("space P(99);").ok);
  EXPECT_FALSE(dsl::run("space P(1); bundle E = 2*O(1); space P(E); cohom O(0);").ok);
  EXPECT_FALSE(dsl::run("space P(2); integrate a^99999999999;").ok);
}

TEST(Dsl, CorpusRoundTrip)
{
  auto scripts = corpus();
  ASSERT_EQ(scripts.size(), 50u);
  for (const auto& s : scripts) {
    auto q = dsl::parse(s);
    ASSERT_TRUE(std::holds_alternative<dsl::query>(q)) << s << "\n" << std::get<dsl::parse_error>(q).str();
    auto printed = dsl::print(std::get<dsl::query>(q));
    auto again = dsl::parse(printed);
    ASSERT_TRUE(std::holds_alternative<dsl::query>(again)) << printed;
    EXPECT_EQ(std::get<dsl::query>(again), std::get<dsl::query>(q)) << s << "\n=> " << printed;
    EXPECT_EQ(dsl::print(std::get<dsl::query>(again)), printed);
    // printing never changes what a script computes
    auto r1 = dsl::run(s), r2 = dsl::run(printed);
    EXPECT_EQ(r1.ok, r2.ok);
    EXPECT_EQ(r1.lines, r2.lines) << s;
  }
}

TEST(Dsl, FuzzedInputsNeverCrash)
{
  std::mt19937_64 rng(12345);
  auto scripts = corpus();
  const std::string alphabet = "spaceP()*O,+-^;=#\n 0123456789abhxiluntgrc";
  std::size_t parsed = 0, errors = 0;
  for (int t = 0; t < 10000; ++t) {
    std::string s;
    if (t % 2 == 0) {
      std::size_t len = rng() % 64;
      for (std::size_t i = 0; i < len; ++i)
        s += static_cast<char>(rng() % 256);
    } else if (t % 4 == 1) {
      std::size_t len = rng() % 80;
      for (std::size_t i = 0; i < len; ++i)
        s += alphabet[rng() % alphabet.size()];
    } else {
      s = scripts[rng() % scripts.size()];
      for (int k = 0; k < 3 && !s.empty(); ++k) {
        auto pos = rng() % s.size();
        switch (rng() % 3) {
        case 0:
          s.erase(pos, 1);
          break;
        case 1:
          s.insert(pos, 1, alphabet[rng() % alphabet.size()]);
          break;
        default:
          s[pos] = static_cast<char>(rng() % 256);
        }
      }
    }
    auto r = dsl::parse(s);
    if (std::holds_alternative<dsl::query>(r)) {
      ++parsed;
      auto out = dsl::run(s);
      (void)out;
    } else {
      ++errors;
    }
  }
  EXPECT_EQ(parsed + errors, 10000u);
  EXPECT_GT(parsed, 0u);
  EXPECT_GT(errors, 0u);
}

TEST(Dsl, DeepNestingIsRejectedNotFatal)
{
  std::string deep(5000, '(');
  auto r = dsl::parse("space P(2); integrate " + deep + "a");
  EXPECT_TRUE(std::holds_alternative<dsl::parse_error>(r));
  std::string minus(5000, '-');
  EXPECT_TRUE(std::holds_alternative<dsl::parse_error>(dsl::parse("integrate " + minus + "a")));
}

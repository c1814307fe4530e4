#ifndef ENRIQUES_PAPERLAB_HPP
#define ENRIQUES_PAPERLAB_HPP

// The pencil of Enriques surfaces on P1 x P2 x P2: seeded instances of the
// matrices M, N and the determinant F, and the checks run on them.

#include "enriques/cells.hpp"
#include "enriques/charclass.hpp"

#include <json.hpp>

#include <array>
#include <chrono>
#include <set>
#include <sstream>

namespace enriques::paperlab {

using qq_poly = mpoly::polynomial<rational_field>;
using fp_poly = mpoly::polynomial<prime_field>;
using json = nlohmann::json;
using chow::chow_class;
using enriques::to_string;

template <class Field>
mpoly::ring_ptr<Field> pencil_ring(Field f)
{
  return mpoly::make_ring(std::move(f), {{"P1", {"S", "T"}}, {"X", {"X0", "X1", "X2"}}, {"Y", {"Y0", "Y1", "Y2"}}});
}

inline const std::array<std::string, 9> form_names{"P1", "Q1", "R1", "P2", "Q2", "R2", "P3", "Q3", "R3"};

// Deliberately broken constructions used as negative controls.
struct variant {
  bool p1_equals_q1 = false;
  bool zero_third_row = false;
  bool omit_p_terms = false;
  bool flat_first_row = false; // first row of degree (0,2,0)

  bool any() const { return p1_equals_q1 || zero_third_row || omit_p_terms || flat_first_row; }
  std::string str() const
  {
    std::string s;
    auto add = [&](bool on, const char* n) {
      if (on)
        s += (s.empty() ? "" : ",") + std::string(n);
    };
    add(p1_equals_q1, "p1-equals-q1");
    add(zero_third_row, "zero-third-row");
    add(omit_p_terms, "omit-p-terms");
    add(flat_first_row, "flat-first-row");
    return s.empty() ? "none" : s;
  }
};

struct instance {
  std::uint32_t prime = 101;
  std::uint64_t seed = 1;
  int retries = 0;
  variant var;

  mpoly::ring_ptr<rational_field> ring_q;
  mpoly::ring_ptr<prime_field> ring_p;
  std::array<qq_poly, 9> forms; // P1 Q1 R1 P2 Q2 R2 P3 Q3 R3
  mpoly::poly_matrix<rational_field> M, N, G; // G: the 3x3 matrix with det F
  qq_poly F;

  std::array<fp_poly, 9> forms_p;
  mpoly::poly_matrix<prime_field> M_p, N_p, G_p;
  fp_poly F_p;

  std::vector<fp_poly> first_row_p() const { return {forms_p[0], forms_p[1], forms_p[2]}; }
  std::vector<fp_poly> second_row_p() const { return {forms_p[3], forms_p[4], forms_p[5]}; }
  std::vector<fp_poly> minors_N_p() const { return mpoly::minors(N_p, 2); }
};

inline void check_prime(std::uint64_t p)
{
  if (!is_prime(p) || p == 2 || p == 3 || p > 0xffffffffULL)
    throw std::invalid_argument("prime must be a prime other than 2 and 3, got " + std::to_string(p));
}

// Rebuilds matrices and reductions from the nine forms.
inline void assemble(instance& inst)
{
  const auto& R = inst.ring_q;
  auto S = qq_poly::variable(R, "S");
  const auto& f = inst.forms;
  auto second = [&](int k) {
    auto e = S * f[3 + k];
    if (!inst.var.omit_p_terms)
      e += f[6 + k].scale(rational(inst.prime));
    return e;
  };
  using mq = mpoly::poly_matrix<rational_field>;
  inst.M = mq::from_rows({{f[0], f[1], f[2]}, {second(0), second(1), second(2)}});
  inst.N = mq::from_rows({{f[0], f[1], f[2]}, {f[3], f[4], f[5]}});
  inst.G = mq::from_rows({{f[0], f[1], f[2]}, {f[3], f[4], f[5]}, {f[6], f[7], f[8]}});
  inst.F = mpoly::determinant(inst.G);

  inst.ring_p = pencil_ring(prime_field(inst.prime));
  for (std::size_t k = 0; k < 9; ++k)
    inst.forms_p[k] = mpoly::reduce_mod(f[k], inst.ring_p);
  using mp = mpoly::poly_matrix<prime_field>;
  auto red = [&](const mq& m) {
    std::vector<fp_poly> e;
    for (const auto& x : m.entries)
      e.push_back(mpoly::reduce_mod(x, inst.ring_p));
    return mp(m.rows, m.cols, std::move(e));
  };
  inst.M_p = red(inst.M);
  inst.N_p = red(inst.N);
  inst.G_p = red(inst.G);
  inst.F_p = mpoly::reduce_mod(inst.F, inst.ring_p);
}

inline const std::array<std::vector<int>, 3> row_degrees{std::vector<int>{1, 2, 0}, {0, 0, 2}, {1, 0, 2}};

inline instance build_instance(std::uint32_t p, std::uint64_t seed, variant var = {})
{
  check_prime(p);
  instance inst;
  inst.prime = p;
  inst.seed = seed;
  inst.var = var;
  inst.ring_q = pencil_ring(rational_field{});
  for (std::size_t k = 0; k < 9; ++k) {
    auto md = row_degrees[k / 3];
    if (k < 3 && var.flat_first_row)
      md = {0, 2, 0};
    inst.forms[k] = mpoly::random_form(inst.ring_q, md, mix_seed(seed, k));
  }
  if (var.p1_equals_q1)
    inst.forms[1] = inst.forms[0];
  if (var.zero_third_row)
    for (std::size_t k = 6; k < 9; ++k)
      inst.forms[k] = qq_poly(inst.ring_q);
  assemble(inst);
  return inst;
}

// ---------------------------------------------------------------------
// Instance files: a header line, key/value lines, one line per form.

inline std::string dump_instance(const instance& inst)
{
  std::ostringstream os;
  os << "enriques-instance 1\n";
  os << "prime " << inst.prime << "\n";
  os << "seed " << inst.seed << "\n";
  os << "retries " << inst.retries << "\n";
  os << "variant " << inst.var.str() << "\n";
  for (std::size_t k = 0; k < 9; ++k)
    os << form_names[k] << " " << (inst.forms[k].is_zero() ? "0" : inst.forms[k].str()) << "\n";
  return os.str();
}

inline instance load_instance(const std::string& text)
{
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("instance line " + std::to_string(lineno) + ": " + what);
  };
  if (!std::getline(is, line) || (++lineno, line != "enriques-instance 1"))
    fail("expected header 'enriques-instance 1'");
  instance inst;
  inst.ring_q = pencil_ring(rational_field{});
  std::array<bool, 9> seen{};
  bool have_prime = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#')
      continue;
    auto sp = line.find(' ');
    if (sp == std::string::npos)
      fail("expected 'key value'");
    auto key = line.substr(0, sp), value = line.substr(sp + 1);
    try {
      if (key == "prime") {
        auto p = std::stoull(value);
        check_prime(p);
        inst.prime = static_cast<std::uint32_t>(p);
        have_prime = true;
      } else if (key == "seed") {
        inst.seed = std::stoull(value);
      } else if (key == "retries") {
        inst.retries = std::stoi(value);
      } else if (key == "variant") {
        if (value.find("omit-p-terms") != std::string::npos)
          inst.var.omit_p_terms = true;
        inst.var.p1_equals_q1 = value.find("p1-equals-q1") != std::string::npos;
        inst.var.zero_third_row = value.find("zero-third-row") != std::string::npos;
        inst.var.flat_first_row = value.find("flat-first-row") != std::string::npos;
      } else {
        auto it = std::find(form_names.begin(), form_names.end(), key);
        if (it == form_names.end())
          fail("unknown key " + key);
        auto k = static_cast<std::size_t>(it - form_names.begin());
        inst.forms[k] = mpoly::parse_polynomial(inst.ring_q, value);
        auto md = inst.forms[k].multidegree();
        if (!inst.forms[k].is_zero() && !md)
          fail(key + " is not multihomogeneous");
        seen[k] = true;
      }
    } catch (const std::invalid_argument& e) {
      if (std::string(e.what()).rfind("instance line", 0) == 0)
        throw;
      fail(e.what());
    } catch (const std::out_of_range&) {
      fail("number out of range");
    }
  }
  if (!have_prime)
    fail("missing prime");
  for (std::size_t k = 0; k < 9; ++k)
    if (!seen[k])
      fail("missing form " + form_names[k]);
  assemble(inst);
  return inst;
}

// ---------------------------------------------------------------------
// Check records.

enum class status { verified, failed, inconclusive, skipped };

inline const char* to_string(status s)
{
  switch (s) {
  case status::verified:
    return "verified";
  case status::failed:
    return "failed";
  case status::inconclusive:
    return "inconclusive";
  default:
    return "skipped";
  }
}

struct check_record {
  std::string name;
  status state = status::verified;
  std::string provenance = "computed"; // or "cited-axiom"
  std::vector<std::string> citations;
  json values = json::object();
  double millis = 0;
  // a failure that indicates an unlucky (non-general) sample
  bool resample = false;

  void require(bool ok, const std::string& what)
  {
    values["sub_checks"][what] = ok;
    if (!ok && state == status::verified)
      state = status::failed;
  }
};

class stopwatch {
public:
  double millis() const
  {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Chow ring of P1 x P2 x P2 with generators h, a, b.
inline chow::ring_ptr ambient_chow() { return chow::make_multiproj({1, 2, 2}); }

inline chow_class line(const chow::ring_ptr& r, const std::vector<int>& md)
{
  return charclass::bundle_expr::line_class(r, md);
}

// [X~0] for the matrix N, rows of degree d1 and d2.
inline chow_class special_fiber_class(const chow::ring_ptr& r)
{
  charclass::bundle_expr e{r, {}, {}};
  e.add_line(line(r, {1, 2, 0})).add_line(line(r, {0, 0, 2}));
  return charclass::degeneracy_class(3, e, 1);
}

inline chow_class threefold_class(const chow::ring_ptr& r)
{
  charclass::bundle_expr e{r, {}, {}};
  e.add_line(line(r, {1, 2, 0})).add_line(line(r, {1, 0, 2}));
  return charclass::degeneracy_class(3, e, 1);
}

// X' in P1 x P_A, P_A the projectivization of O(2,0)+O(0,2) on P2 x P2.
struct threefold_model {
  chow::ring_ptr ambient;
  charclass::complete_intersection ci;
};

inline threefold_model threefold_spec()
{
  auto base = chow::make_multiproj({1, 2, 2});
  auto a = chow_class::gen(base, "a"), b = chow_class::gen(base, "b");
  auto ring = chow::make_bundle_ring(base, {integer(2) * a + integer(2) * b, integer(4) * a * b});
  auto d = chow_class::gen(ring, "h") + chow_class::gen(ring, "xi");
  return {ring, {ring, {d, d, d}}};
}

// ---------------------------------------------------------------------
// Checks.

struct check_options {
  std::uint64_t step_budget = 5'000'000;
  unsigned jobs = 1;
  std::size_t probe_samples = 200;
  bool stretch_ideal_divisor_check = false;
};

inline json cell_records(const cells::smoothness_report& rep, bool timings)
{
  json arr = json::array();
  for (const auto& c : rep.cells) {
    json j{{"cell", c.id}, {"status", cells::to_string(c.status)}, {"steps", c.steps}};
    if (timings)
      j["ms"] = c.millis;
    arr.push_back(j);
  }
  return arr;
}

inline check_record verify_twelve_planes(const instance& inst, const check_options& opt = {})
{
  stopwatch sw;
  check_record rec;
  rec.name = "twelve-planes";
  rec.citations = {"V(P1,Q1,R1) is a disjoint union of twelve planes", "disjoint from the fiber over S=0"};
  rec.values["prime"] = inst.prime;

  auto r = ambient_chow();
  auto h = chow_class::gen(r, "h"), a = chow_class::gen(r, "a"), b = chow_class::gen(r, "b");
  auto class_count = chow::integrate((h + integer(2) * a).pow(3) * b * b);
  rec.values["class_count"] = to_string(class_count);
  rec.require(class_count == 12, "class_count_is_12");

  groebner::options gopt{opt.step_budget};
  auto dec = cells::decompose(inst.ring_p, {0, 1});
  auto row = inst.first_row_p();
  try {
    auto pc = cells::cell_point_count(row, dec, gopt);
    rec.values["point_count"] = pc.total;
    rec.values["point_count_steps"] = pc.steps;
    rec.require(pc.total == 12, "point_count_is_12");
    auto radical = cells::radical_point_check(row, dec, mix_seed(inst.seed, 1000), gopt);
    rec.values["radical"] = cells::to_string(radical);
    if (radical == cells::point_check::inconclusive && rec.state == status::verified)
      rec.state = status::inconclusive;
    else
      rec.require(radical == cells::point_check::reduced, "points_reduced");
  } catch (const cells::positive_dimensional_error& e) {
    rec.values["point_count"] = "positive-dimensional";
    rec.require(false, "point_count_is_12");
  } catch (const cells::budget_exceeded_error&) {
    rec.values["point_count"] = "budget-exceeded";
    rec.state = status::inconclusive;
  }

  auto with_s = row;
  with_s.push_back(fp_poly::variable(inst.ring_p, "S"));
  try {
    auto pc = cells::cell_point_count(with_s, dec, gopt);
    rec.values["points_over_S0"] = pc.total;
    rec.require(pc.total == 0, "disjoint_from_S0");
  } catch (const cells::positive_dimensional_error&) {
    rec.values["points_over_S0"] = "positive-dimensional";
    rec.require(false, "disjoint_from_S0");
  } catch (const cells::budget_exceeded_error&) {
    rec.values["points_over_S0"] = "budget-exceeded";
    if (rec.state == status::verified)
      rec.state = status::inconclusive;
  }
  rec.resample = rec.state == status::failed && class_count == 12;
  rec.millis = sw.millis();
  return rec;
}

// Smallest prime above p; the reduction of the threefold itself is checked
// there, since modulo p it degenerates to the special fiber.
inline std::uint32_t companion_prime(std::uint32_t p)
{
  std::uint32_t q = p + 1;
  while (!is_prime(q))
    ++q;
  return q;
}

struct smooth_case {
  std::string name;
  std::vector<fp_poly> gens;
  cells::cell_decomposition dec;
};

inline json run_smooth_case(const smooth_case& sc, const check_options& opt, bool timings, status& state,
                            bool& singular)
{
  auto rep = cells::smoothness_certificate(sc.gens, 2, sc.dec, groebner::options{opt.step_budget}, opt.jobs);
  json j;
  j["prime"] = sc.gens.front().field().prime();
  j["cells"] = rep.cells.size();
  j["certified"] = rep.count(cells::cell_status::smooth_certified);
  j["singular"] = rep.count(cells::cell_status::singular);
  j["inconclusive"] = rep.count(cells::cell_status::inconclusive);
  j["records"] = cell_records(rep, timings);
  if (rep.any_singular()) {
    j["result"] = "singular";
    singular = true;
    state = status::failed;
  } else if (rep.smooth()) {
    j["result"] = "smooth-certified";
  } else {
    cells::probe_options po;
    po.samples = opt.probe_samples;
    po.step_budget = opt.step_budget;
    auto pr = cells::smoothness_probe(sc.gens, 2, sc.dec, po);
    j["result"] = "probed";
    j["probe"] = {{"status", cells::to_string(pr.status)},
                  {"points_tested", pr.points_tested},
                  {"singular_points", pr.singular_points}};
    if (pr.status == cells::probe_status::singular_found) {
      singular = true;
      state = status::failed;
    } else if (state == status::verified) {
      state = status::inconclusive;
    }
  }
  return j;
}

inline std::vector<fp_poly> threefold_gens_mod(const instance& inst, std::uint32_t q)
{
  auto ring = pencil_ring(prime_field(q));
  std::vector<fp_poly> e;
  for (const auto& x : inst.M.entries)
    e.push_back(mpoly::reduce_mod(x, ring));
  return mpoly::minors(mpoly::poly_matrix<prime_field>(2, 3, std::move(e)), 2);
}

// Rank-one degeneracy locus of a general map O^3 -> O(2,0)+O(0,2) on P2 x P2.
struct surface_instance {
  mpoly::ring_ptr<prime_field> ring;
  std::array<fp_poly, 6> forms;
  std::vector<fp_poly> minors() const
  {
    return mpoly::minors(mpoly::poly_matrix<prime_field>::from_rows(
                             {{forms[0], forms[1], forms[2]}, {forms[3], forms[4], forms[5]}}),
                         2);
  }
};

inline surface_instance build_surface(std::uint32_t p, std::uint64_t seed)
{
  surface_instance s;
  s.ring = mpoly::make_ring(prime_field(p), {{"X", {"X0", "X1", "X2"}}, {"Y", {"Y0", "Y1", "Y2"}}});
  for (std::size_t k = 0; k < 6; ++k)
    s.forms[k] = mpoly::random_form(s.ring, k < 3 ? std::vector<int>{2, 0} : std::vector<int>{0, 2}, mix_seed(seed, 200 + k));
  return s;
}

inline check_record verify_smooth_models(const instance& inst, const check_options& opt = {}, bool timings = false)
{
  stopwatch sw;
  check_record rec;
  rec.name = "smooth-models";
  rec.citations = {"the special fiber defined by the minors of N is smooth",
                   "smooth of dimension three by the Bertini theorem for degeneracy loci",
                   "if u is general, X is an Enriques surface"};
  bool singular = false;

  const auto q = companion_prime(inst.prime);
  std::vector<smooth_case> cases;
  cases.push_back({"special-fiber", inst.minors_N_p(), cells::decompose(inst.ring_p)});
  auto tf = threefold_gens_mod(inst, q);
  cases.push_back({"threefold", tf, cells::decompose(tf.front().ring())});
  auto surf = build_surface(inst.prime, inst.seed);
  cases.push_back({"enriques-surface", surf.minors(), cells::decompose(surf.ring)});
  for (const auto& sc : cases)
    rec.values[sc.name] = run_smooth_case(sc, opt, timings, rec.state, singular);

  // X meets neither section divisor: each row of u alone has no zeros
  groebner::options gopt{opt.step_budget};
  for (int row = 0; row < 2; ++row) {
    std::vector<fp_poly> g(surf.forms.begin() + 3 * row, surf.forms.begin() + 3 * row + 3);
    auto key = "surface_row" + std::to_string(row + 1) + "_base_locus_empty";
    try {
      auto pc = cells::cell_point_count(g, cells::decompose(surf.ring, {static_cast<std::size_t>(row)}), gopt);
      rec.require(pc.total == 0, key);
      if (pc.total != 0)
        singular = true;
    } catch (const cells::positive_dimensional_error&) {
      rec.require(false, key);
      singular = true;
    } catch (const cells::budget_exceeded_error&) {
      if (rec.state == status::verified)
        rec.state = status::inconclusive;
    }
  }
  rec.resample = singular;
  rec.millis = sw.millis();
  return rec;
}

inline check_record verify_specialization_decomposition(const instance& inst)
{
  stopwatch sw;
  check_record rec;
  rec.name = "specialization";
  rec.citations = {"the specialization consists of two components"};
  rec.values["prime"] = inst.prime;

  auto S = qq_poly::variable(inst.ring_q, "S");
  auto mM = mpoly::minors(inst.M, 2);
  auto mN = mpoly::minors(inst.N, 2);
  auto Sp = fp_poly::variable(inst.ring_p, "S");
  bool reduces = true, p_terms = true;
  for (std::size_t k = 0; k < mM.size(); ++k) {
    if (mpoly::reduce_mod(mM[k], inst.ring_p) != Sp * mpoly::reduce_mod(mN[k], inst.ring_p))
      reduces = false;
    // over QQ the difference must be a nonzero multiple of p
    auto diff = mM[k] - S * mN[k];
    if (diff.is_zero() || !mpoly::reduce_mod(diff, inst.ring_p).is_zero())
      p_terms = false;
  }
  rec.require(reduces, "minors_M_mod_p_equal_S_times_minors_N");
  rec.require(p_terms, "M_differs_from_special_fiber_by_p_multiples");

  auto cert = mpoly::laplace_certificate(inst.G);
  bool uses_N = true;
  for (std::size_t k = 0; k < 3; ++k)
    if (cert.combination[k].second != mN[k])
      uses_N = false;
  rec.require(uses_N, "laplace_combination_uses_minors_of_N");
  rec.require(!cert.det.is_zero(), "F_nonzero");
  rec.values["F_terms"] = cert.det.size();
  rec.values["F_multidegree"] = cert.det.is_zero() ? json(nullptr) : json(*cert.det.multidegree());
  if (rec.state == status::verified)
    rec.values["inference"] = "V(minors(M mod p), F) = V(minors N) u V(S, F)";
  rec.millis = sw.millis();
  return rec;
}

inline bool ideal_contains(const groebner::basis<prime_field>& gb, const fp_poly& f)
{
  return groebner::contains_one(gb) || groebner::is_member(f, gb);
}

struct divisor_types {
  std::vector<int> d1{1, 2, 0};
  std::vector<int> d2{0, 0, 2};
};

inline check_record verify_divisor_identity(const instance* inst, const check_options& opt = {},
                                            const divisor_types& types = {})
{
  stopwatch sw;
  check_record rec;
  rec.name = "divisor-identity";
  rec.citations = {"D1 = D2 + sum E_{1,j}", "expanding the 2x2-minors of N"};
  auto r = ambient_chow();
  auto x0 = special_fiber_class(r);
  auto lhs = (line(r, types.d1) - line(r, types.d2)) * x0;
  auto rhs = line(r, {1, 2, 0}).pow(3);
  auto twelve = integer(12) * chow_class::gen(r, "h") * chow_class::gen(r, "a").pow(2);
  rec.values["special_fiber_class"] = x0.str();
  rec.values["lhs"] = lhs.str();
  rec.values["rhs"] = rhs.str();
  rec.require(lhs == rhs, "class_identity");
  rec.require(rhs == twelve, "equals_12_h_a2");

  if (opt.stretch_ideal_divisor_check && inst) {
    // On P2 != 0: I + (P1) contains Q1 and R1 (similarly for Q2, R2), and
    // P2, Q2, R2 have no common zero.
    json local = json::array();
    auto gens = inst->minors_N_p();
    const auto& row1 = inst->forms_p;
    auto dec = cells::decompose(inst->ring_p);
    groebner::options gopt{opt.step_budget};
    std::size_t verified = 0, total = 0, inconclusive = 0;
    for (const auto& c : dec.cells) {
      auto v = cells::make_view(inst->ring_p, dec, c);
      auto vars = v.cell_ring->vars();
      vars.push_back("z");
      auto zring = mpoly::make_ring(inst->ring_p->field(), {{"cell", vars}});
      std::vector<mpoly::var_image> embed;
      for (std::size_t i = 0; i < v.cell_ring->nvars(); ++i)
        embed.push_back({mpoly::var_image::var, i});
      auto lift = [&](const fp_poly& f) {
        auto g = cells::restrict_to_cell(std::vector<fp_poly>{f}, v);
        return g.empty() ? fp_poly(zring) : mpoly::substitute(g.front(), zring, embed);
      };
      auto z = fp_poly::variable(zring, "z");
      for (int k = 0; k < 3; ++k) {
        ++total;
        std::vector<fp_poly> ideal;
        for (const auto& g : gens)
          ideal.push_back(lift(g));
        ideal.push_back(lift(row1[k]));
        ideal.push_back(z * lift(row1[3 + k]) - fp_poly::constant(zring, 1));
        auto res = groebner::buchberger(ideal, gopt);
        if (!res.complete()) {
          ++inconclusive;
          continue;
        }
        bool ok = true;
        for (int j = 0; j < 3; ++j)
          if (j != k && !ideal_contains(res.gb, lift(row1[j])))
            ok = false;
        if (ok)
          ++verified;
        else
          local.push_back(c.id + ":" + form_names[3 + k]);
      }
    }
    auto cover = cells::cell_point_count(inst->second_row_p(), cells::decompose(inst->ring_p, {2}), gopt);
    rec.values["stretch"] = {{"charts", total}, {"verified", verified}, {"inconclusive", inconclusive},
                             {"failures", local}, {"open_cover_points", cover.total}};
    rec.require(local.empty(), "local_ideal_identity");
    rec.require(cover.total == 0, "open_cover");
    if (inconclusive && rec.state == status::verified)
      rec.state = status::inconclusive;
  }
  rec.millis = sw.millis();
  return rec;
}

// deg(alpha/P1) = alpha . h;  alpha . sum E computed from the class of the
// twelve planes, independently of the divisor identity.
inline check_record verify_congruence(std::uint64_t seed = 1, const divisor_types& types = {})
{
  stopwatch sw;
  check_record rec;
  rec.name = "congruence";
  rec.citations = {"deg(alpha0/P1) = alpha0 . (sum E_{1,j}) mod 2 for curve classes on the special fiber"};
  auto r = ambient_chow();
  auto x0 = special_fiber_class(r);
  auto h = chow_class::gen(r, "h");
  auto d1 = line(r, types.d1), d2 = line(r, types.d2);
  auto planes = line(r, {1, 2, 0}).pow(3);

  std::vector<chow_class> curves_cut;
  for (const auto& e : chow::monomial_basis(r, 2))
    curves_cut.emplace_back(r, chow::term_map<integer>{{e, integer(1)}});
  std::mt19937_64 rng(mix_seed(seed, 3000));
  std::uniform_int_distribution<int> coef(-5, 5);
  auto basis = curves_cut;
  for (int k = 0; k < 20; ++k) {
    chow_class d(r);
    for (const auto& m : basis)
      d += integer(coef(rng)) * m;
    curves_cut.push_back(d);
  }

  json rows = json::array();
  bool parity = true, d2_even = true, split = true, exact = true;
  for (const auto& d : curves_cut) {
    auto alpha = x0 * d;
    integer deg = chow::integrate(alpha * h);
    integer a_d1 = chow::integrate(alpha * d1);
    integer a_d2 = chow::integrate(alpha * d2);
    integer a_e = chow::integrate(d * planes);
    auto odd = [](const integer& v) { return (v % 2) != 0; };
    parity = parity && odd(deg) == odd(a_e);
    d2_even = d2_even && !odd(a_d2);
    split = split && odd(deg) == odd(a_d1);
    exact = exact && a_d1 == a_d2 + a_e;
    rows.push_back({{"cut", d.str()}, {"deg_over_P1", to_string(deg)}, {"alpha_D1", to_string(a_d1)},
                    {"alpha_D2", to_string(a_d2)}, {"alpha_E", to_string(a_e)}});
  }
  rec.values["curves"] = rows;
  rec.values["count"] = curves_cut.size();
  rec.require(split, "deg_congruent_alpha_D1");
  rec.require(d2_even, "alpha_D2_even");
  rec.require(exact, "alpha_D1_equals_alpha_D2_plus_alpha_E");
  rec.require(parity, "deg_congruent_alpha_E");
  rec.millis = sw.millis();
  return rec;
}

inline const std::vector<std::vector<charclass::multidegree>>& ideal_resolution()
{
  static const std::vector<std::vector<charclass::multidegree>> terms{
      {{0, 0, 0}}, {{-2, -2, -2}, {-2, -2, -2}, {-2, -2, -2}}, {{-3, -4, -2}, {-3, -2, -4}}};
  return terms;
}

inline json table_json(const charclass::cohom_table& t)
{
  json d = json::object();
  for (const auto& [k, v] : t.dims)
    d["h" + std::to_string(k)] = to_string(v);
  return {{"exact", t.exact}, {"euler", to_string(t.euler)}, {"dims", d}};
}

inline check_record verify_cohomology()
{
  stopwatch sw;
  check_record rec;
  rec.name = "cohomology";
  rec.citations = {"H^i(X, O_X) = 0 for all i > 0", "computed from the Koszul-type resolution of the ideal sheaf"};
  const std::vector<int> dims{1, 2, 2};
  const auto& terms = ideal_resolution();
  auto t = charclass::resolution_sheaf_cohomology(dims, terms, {0, 0, 0});
  auto ideal = charclass::resolution_sheaf_cohomology(dims, {terms[1], terms[2]}, {0, 0, 0});
  auto f1 = charclass::bott_kunneth_table(dims, {-2, -2, -2});
  auto f2a = charclass::bott_kunneth_table(dims, {-3, -4, -2});
  auto f2b = charclass::bott_kunneth_table(dims, {-3, -2, -4});
  auto model = threefold_spec();
  auto chi = charclass::hrr_chi(model.ci, chow_class(model.ambient));
  rec.values["structure_sheaf"] = table_json(t);
  rec.values["ideal_sheaf"] = table_json(ideal);
  rec.values["O(-2,-2,-2)"] = table_json(f1);
  rec.values["O(-3,-4,-2)"] = table_json(f2a);
  rec.values["O(-3,-2,-4)"] = table_json(f2b);
  rec.values["hrr_chi"] = to_string(chi);
  rec.require(t.exact, "exact");
  rec.require(t.at(0) == 1 && t.at(1) == 0 && t.at(2) == 0 && t.at(3) == 0, "h_i_O_is_1_0_0_0");
  rec.require(f1.is_zero() && f2a.is_zero() && f2b.is_zero(), "term_tables_vanish");
  rec.require(ideal.exact && ideal.is_zero(), "ideal_sheaf_acyclic");
  rec.require(chi == 1, "hrr_chi_is_1");
  rec.millis = sw.millis();
  return rec;
}

struct invariants {
  integer chi_top;
  chow_class canonical;
  bool canonical_identity = false;
  chow_class threefold;
};

inline invariants compute_invariant_values()
{
  invariants out;
  auto model = threefold_spec();
  out.chi_top = charclass::euler_characteristic_top(model.ci);
  out.canonical = charclass::canonical_class(model.ci);
  const auto& R = model.ambient;
  auto h = chow_class::gen(R, "h"), a = chow_class::gen(R, "a"), b = chow_class::gen(R, "b"),
       xi = chow_class::gen(R, "xi");
  auto two = integer(2);
  out.canonical_identity = two * out.canonical == two * h + (xi - two * a) + (xi - two * b);
  out.threefold = threefold_class(ambient_chow());
  return out;
}

inline check_record compute_invariants()
{
  stopwatch sw;
  check_record rec;
  rec.name = "invariants";
  rec.citations = {"c3(T_X) = -36", "2K = 2X + sum E_{i,j}"};
  auto inv = compute_invariant_values();
  rec.values["chi_top"] = to_string(inv.chi_top);
  rec.values["canonical_class"] = inv.canonical.str();
  rec.values["threefold_class"] = inv.threefold.str();
  rec.require(inv.chi_top == -36, "chi_top_is_minus_36");
  rec.require(inv.canonical_identity, "two_K_identity");
  rec.millis = sw.millis();
  return rec;
}

struct hodge_numbers {
  integer b0 = 1, b1, b2, b3, h11, h12, h03;
};

// b2 = rho(Y_min) + 2 * (number of base points), using the cited inputs.
inline hodge_numbers hodge_diamond(const integer& chi_top, const integer& points, const integer& h01 = 0,
                                   const integer& h02 = 0, const integer& h03 = 0)
{
  hodge_numbers d;
  const integer rho = 2;
  d.b1 = 2 * h01;
  d.b2 = rho + 2 * points;
  d.b3 = 2 * d.b0 + 2 * d.b2 - chi_top - 2 * d.b1;
  d.h03 = h03;
  d.h11 = d.b2 - 2 * h02;
  d.h12 = (d.b3 - 2 * h03) / 2;
  return d;
}

inline check_record hodge_record(const integer& chi_top, const integer& points)
{
  check_record rec;
  rec.name = "hodge-diamond";
  rec.provenance = "cited-axiom";
  rec.citations = {"b2/rho inputs: rho(Y_min) = 2 and trivial action of the involution on Pic(Y)"};
  auto d = hodge_diamond(chi_top, points);
  rec.values = {{"b0", to_string(d.b0)}, {"b1", to_string(d.b1)},   {"b2", to_string(d.b2)},
                {"b3", to_string(d.b3)}, {"h11", to_string(d.h11)}, {"h12", to_string(d.h12)},
                {"h03", to_string(d.h03)}, {"chi_top", to_string(chi_top)}, {"points", to_string(points)}};
  rec.require(d.b2 == 26 && d.b3 == 90 && d.h12 == 45 && d.h11 == 26, "diamond");
  return rec;
}

// ---------------------------------------------------------------------
// The full run.

inline const std::vector<std::string>& check_names()
{
  static const std::vector<std::string> n{"twelve-planes", "smooth-models", "specialization", "divisor-identity",
                                          "congruence",    "cohomology",    "invariants"};
  return n;
}

inline const std::vector<std::string>& cited_axioms()
{
  static const std::vector<std::string> a{
      "specialization homomorphism: the degree/intersection congruence on the special fiber implies it on the general threefold",
      "Lefschetz surjectivity: H_2(Y_min, Z) -> H_2(P1, Z) is surjective",
      "b2/rho inputs: rho(Y_min) = 2 and trivial action of the involution on Pic(Y)"};
  return a;
}

struct run_config {
  std::vector<std::uint32_t> primes{101, 211};
  std::uint64_t seed = 1;
  std::uint64_t step_budget = 5'000'000;
  unsigned jobs = default_jobs();
  bool stretch_ideal_divisor_check = false;
  bool timings = false;
  int max_retries = 5;
  std::set<std::string> skip;
};

struct instance_summary {
  std::uint32_t prime;
  std::uint64_t seed_used;
  int retries;
};

inline const char* verdict_certified =
    "strict inclusion H^4_alg(X,Z) < Hdg^4(X,Z) certified modulo 3 cited topological axioms";

struct verification_report {
  run_config config;
  std::vector<instance_summary> instances;
  std::vector<check_record> checks;
  std::string verdict;
  int exit_code = 2;

  json to_json() const
  {
    json j;
    j["format"] = "enriques-report";
    j["version"] = 1;
    j["config"] = {{"primes", config.primes},
                   {"seed", config.seed},
                   {"step_budget", config.step_budget},
                   {"stretch_ideal_divisor_check", config.stretch_ideal_divisor_check},
                   {"skip", std::vector<std::string>(config.skip.begin(), config.skip.end())}};
    json inst = json::array();
    for (const auto& i : instances)
      inst.push_back({{"prime", i.prime}, {"seed", i.seed_used}, {"retries", i.retries}});
    j["instances"] = inst;
    json cs = json::array();
    for (const auto& c : checks) {
      json r{{"name", c.name},
             {"status", to_string(c.state)},
             {"provenance", c.provenance},
             {"citations", c.citations},
             {"values", c.values}};
      if (config.timings)
        r["ms"] = c.millis;
      cs.push_back(r);
    }
    j["checks"] = cs;
    j["axioms"] = cited_axioms();
    j["verdict"] = verdict;
    j["exit_code"] = exit_code;
    return j;
  }

  std::string human() const
  {
    std::ostringstream os;
    os << "primes:";
    for (auto p : config.primes)
      os << " " << p;
    os << "  seed: " << config.seed << "\n";
    for (const auto& i : instances)
      os << "instance p=" << i.prime << " seed=" << i.seed_used << " retries=" << i.retries << "\n";
    for (const auto& c : checks) {
      os << "[" << to_string(c.state) << "] " << c.name;
      if (c.values.contains("prime"))
        os << " (p=" << c.values["prime"].get<std::uint32_t>() << ")";
      os << "\n";
      if (c.name == "twelve-planes" && c.values.contains("point_count"))
        os << "  points: " << c.values["point_count"].dump() << ", class count " << c.values["class_count"].get<std::string>()
           << "\n";
      if (c.name == "smooth-models")
        for (const char* k : {"special-fiber", "threefold", "enriques-surface"})
          if (c.values.contains(k))
            os << "  " << k << ": " << c.values[k]["certified"].dump() << "/" << c.values[k]["cells"].dump()
               << " cells certified over GF(" << c.values[k]["prime"].dump() << ")\n";
      if (c.name == "cohomology" && c.state == status::verified)
        os << "  h^i(O)=0 for i>0, h^0(O)=1, chi(O)=" << c.values["hrr_chi"].get<std::string>() << "\n";
      if (c.name == "invariants")
        os << "  chi_top = " << c.values["chi_top"].get<std::string>() << "\n";
      if (c.name == "hodge-diamond")
        os << "  b2 = " << c.values["b2"].get<std::string>() << ", b3 = " << c.values["b3"].get<std::string>()
           << ", h12 = " << c.values["h12"].get<std::string>() << "\n";
    }
    os << "axioms:\n";
    for (const auto& a : cited_axioms())
      os << "  - " << a << "\n";
    os << "verdict: " << verdict << "\n";
    return os.str();
  }
};

inline check_record skipped(const std::string& name)
{
  check_record r;
  r.name = name;
  r.state = status::skipped;
  return r;
}

inline check_record nonalgebraicity_record(const std::vector<check_record>& deps)
{
  check_record rec;
  rec.name = "non-algebraicity";
  rec.citations = {"a class beta with deg(beta/P1) odd and beta . sum E even is not algebraic"};
  rec.citations.insert(rec.citations.end(), cited_axioms().begin(), cited_axioms().end());
  // beta: deg(beta/P1) = 1 and beta . sum E = 0
  const int deg = 1, dot = 0;
  bool violates = (deg % 2) != (dot % 2);
  rec.values["beta"] = {{"deg_over_P1", deg}, {"dot_sum_E", dot}, {"violates_congruence", violates}};
  std::set<std::string> names(check_names().begin(), check_names().end());
  names.insert("hodge-diamond");
  std::set<std::string> seen;
  for (const auto& d : deps) {
    seen.insert(d.name);
    if (d.state == status::failed)
      rec.state = status::failed;
    else if (d.state != status::verified && rec.state != status::failed)
      rec.state = status::inconclusive;
  }
  if (seen != names && rec.state == status::verified)
    rec.state = status::inconclusive;
  if (!violates)
    rec.state = status::failed;
  return rec;
}

inline verification_report verify_all(const run_config& cfg)
{
  verification_report rep;
  rep.config = cfg;
  for (auto p : cfg.primes)
    check_prime(p);
  check_options opt;
  opt.step_budget = cfg.step_budget;
  opt.jobs = cfg.jobs;
  opt.stretch_ideal_divisor_check = cfg.stretch_ideal_divisor_check;
  auto skip = [&](const std::string& n) { return cfg.skip.count(n) > 0; };

  std::optional<instance> first;
  integer points = 12;
  bool points_known = false;
  for (auto p : cfg.primes) {
    instance inst;
    std::vector<check_record> recs;
    int retries = 0;
    for (;; ++retries) {
      inst = build_instance(p, cfg.seed + static_cast<std::uint64_t>(retries));
      inst.retries = retries;
      recs.clear();
      recs.push_back(skip("twelve-planes") ? skipped("twelve-planes") : verify_twelve_planes(inst, opt));
      recs.push_back(skip("smooth-models") ? skipped("smooth-models") : verify_smooth_models(inst, opt, cfg.timings));
      bool resample = false;
      for (const auto& r : recs)
        resample = resample || r.resample;
      if (!resample || retries >= cfg.max_retries)
        break;
    }
    for (auto& r : recs)
      r.values["prime"] = p;
    if (!skip("twelve-planes") && recs[0].values.contains("point_count") &&
        recs[0].values["point_count"].is_number() && !points_known) {
      points = recs[0].values["point_count"].get<std::size_t>();
      points_known = true;
    }
    recs.push_back(skip("specialization") ? skipped("specialization") : verify_specialization_decomposition(inst));
    recs.back().values["prime"] = p;
    rep.instances.push_back({p, inst.seed, retries});
    rep.checks.insert(rep.checks.end(), recs.begin(), recs.end());
    if (!first)
      first = inst;
  }

  rep.checks.push_back(skip("divisor-identity") ? skipped("divisor-identity")
                                                : verify_divisor_identity(first ? &*first : nullptr, opt));
  rep.checks.push_back(skip("congruence") ? skipped("congruence") : verify_congruence(cfg.seed));
  rep.checks.push_back(skip("cohomology") ? skipped("cohomology") : verify_cohomology());
  auto inv = skip("invariants") ? skipped("invariants") : compute_invariants();
  rep.checks.push_back(inv);
  if (!skip("invariants") && points_known)
    rep.checks.push_back(hodge_record(integer(inv.values["chi_top"].get<std::string>()), points));
  else
    rep.checks.push_back(skipped("hodge-diamond"));

  auto na = nonalgebraicity_record(rep.checks);
  rep.checks.push_back(na);
  if (na.state == status::verified) {
    rep.verdict = verdict_certified;
    rep.exit_code = 0;
  } else if (na.state == status::failed) {
    rep.verdict = "failed";
    rep.exit_code = 1;
  } else {
    rep.verdict = "not established";
    rep.exit_code = 2;
  }
  return rep;
}

} // namespace enriques::paperlab

#endif

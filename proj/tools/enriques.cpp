#include "enriques/dsl.hpp"
#include "enriques/paperlab.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>

namespace {

using namespace enriques;
using json = nlohmann::json;

constexpr int exit_usage = 3;

std::string read_file(const std::string& path)
{
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::invalid_argument("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out << text;
}

// ENRIQUES_BUDGET replaces the default budget; an explicit --budget wins.
std::uint64_t resolve_budget(std::uint64_t flag_value, bool flag_given)
{
  if (flag_given)
    return flag_value;
  if (const char* env = std::getenv("ENRIQUES_BUDGET"); env && *env) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0)
      throw std::invalid_argument("ENRIQUES_BUDGET must be a positive integer");
    return v;
  }
  return flag_value;
}

struct common_flags {
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = 1;
  std::uint64_t budget = 5'000'000;
  unsigned jobs = default_jobs();
  std::string format = "human";
  bool stretch = false;
};

int run_query(const std::string& input, bool is_file, const std::string& format)
{
  std::string text = is_file ? read_file(input) : input;
  auto r = dsl::run(text);
  if (format == "json") {
    json j{{"ok", r.ok}, {"results", r.lines}};
    if (!r.ok)
      j["error"] = r.error;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& l : r.lines)
      std::cout << l << "\n";
    if (!r.ok)
      std::cerr << r.error << "\n";
  }
  return r.ok ? 0 : 1;
}

int run_verify(const common_flags& f, bool budget_given, const std::vector<std::string>& skip, bool timings,
               const std::string& output_dir)
{
  paperlab::run_config cfg;
  if (!f.primes.empty()) {
    cfg.primes.clear();
    for (auto p : f.primes) {
      paperlab::check_prime(p);
      cfg.primes.push_back(static_cast<std::uint32_t>(p));
    }
  }
  cfg.seed = f.seed;
  cfg.step_budget = resolve_budget(f.budget, budget_given);
  cfg.jobs = std::max(1u, f.jobs);
  cfg.stretch_ideal_divisor_check = f.stretch;
  cfg.timings = timings;
  const auto& names = paperlab::check_names();
  for (const auto& s : skip) {
    if (std::find(names.begin(), names.end(), s) == names.end())
      throw std::invalid_argument("unknown check '" + s + "'");
    cfg.skip.insert(s);
  }

  auto rep = paperlab::verify_all(cfg);
  std::string structured = rep.to_json().dump(2) + "\n";
  std::string human = rep.human();
  if (!output_dir.empty()) {
    std::filesystem::create_directories(output_dir);
    write_file(std::filesystem::path(output_dir) / "report.json", structured);
    write_file(std::filesystem::path(output_dir) / "report.txt", human);
  }
  std::cout << (f.format == "json" ? structured : human);
  return rep.exit_code;
}

int run_instance_load(const std::string& path, const common_flags& f, bool budget_given)
{
  auto inst = paperlab::load_instance(read_file(path));
  paperlab::check_options opt;
  opt.step_budget = resolve_budget(f.budget, budget_given);
  opt.jobs = std::max(1u, f.jobs);
  std::vector<paperlab::check_record> recs{paperlab::verify_twelve_planes(inst, opt),
                                           paperlab::verify_specialization_decomposition(inst)};
  int code = 0;
  for (const auto& r : recs)
    if (r.state == paperlab::status::failed)
      code = 1;
    else if (r.state != paperlab::status::verified && code == 0)
      code = 2;
  if (f.format == "json") {
    json j{{"prime", inst.prime}, {"seed", inst.seed}, {"variant", inst.var.str()}};
    json cs = json::array();
    for (const auto& r : recs)
      cs.push_back({{"name", r.name}, {"status", to_string(r.state)}, {"values", r.values}});
    j["checks"] = cs;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "instance p=" << inst.prime << " seed=" << inst.seed << " variant=" << inst.var.str() << "\n";
    for (const auto& r : recs)
      std::cout << "[" << to_string(r.state) << "] " << r.name << "\n";
  }
  return code;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Chow ring calculator and verifier for a pencil of Enriques surfaces"};
  app.require_subcommand(1);
  common_flags f;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--prime", f.primes, "prime characteristic (repeatable)");
    sub->add_option("--seed", f.seed, "instance seed");
    sub->add_option("--budget", f.budget, "Groebner step budget per computation")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", f.jobs, "worker threads");
    sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"human", "json"}));
    sub->add_flag("--stretch-ideal-divisor-check", f.stretch, "also check the divisor identity ideal-theoretically");
  };

  auto* query = app.add_subcommand("query", "evaluate a script of Chow ring queries");
  std::string query_input;
  bool query_is_file = false;
  query->add_option("script", query_input, "inline script, or a path with --file ('-' for stdin)")->required();
  query->add_flag("-f,--file", query_is_file, "treat the argument as a file path");
  add_common(query);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::vector<std::string> skip;
  bool timings = false;
  std::string output_dir;
  verify->add_option("--skip", skip, "skip a check by name (repeatable)");
  verify->add_flag("--timings", timings, "include wall-clock timings in the report");
  verify->add_option("--output", output_dir, "directory for report.json and report.txt");
  add_common(verify);

  auto* inst = app.add_subcommand("instance", "write or read instance files");
  inst->require_subcommand(1);
  auto* dump = inst->add_subcommand("dump", "print the instance for --prime and --seed");
  std::string dump_out;
  dump->add_option("-o,--output", dump_out, "write to a file instead of stdout");
  add_common(dump);
  auto* load = inst->add_subcommand("load", "read an instance file and run its point checks");
  std::string load_path;
  load->add_option("file", load_path, "instance file ('-' for stdin)")->required();
  add_common(load);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  auto budget_given = [](CLI::App* sub) { return sub->count("--budget") > 0; };
  try {
    if (*query)
      return run_query(query_input, query_is_file, f.format);
    if (*verify)
      return run_verify(f, budget_given(verify), skip, timings, output_dir);
    if (*dump) {
      if (f.primes.size() > 1)
        throw std::invalid_argument("instance dump takes a single --prime");
      std::uint64_t p = f.primes.empty() ? 101 : f.primes.front();
      paperlab::check_prime(p);
      auto text = paperlab::dump_instance(paperlab::build_instance(static_cast<std::uint32_t>(p), f.seed));
      if (dump_out.empty())
        std::cout << text;
      else
        write_file(dump_out, text);
      return 0;
    }
    if (*load)
      return run_instance_load(load_path, f, budget_given(load));
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_usage;
}

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tetracenters/instance_io.hpp"
#include "tetracenters/theorems.hpp"

namespace {

using namespace tc;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

Catalog load_catalog(const std::vector<std::string>& files) {
  Catalog cat = builtin_catalog();
  for (const auto& f : files) cat.merge(load_catalog_file(f));
  return cat;
}

std::vector<PropertyId> parse_properties(const std::string& s) {
  if (s == "all") return all_properties();
  std::vector<PropertyId> out;
  for (const auto& p : split_list(s)) out.push_back(parse_property(p));
  return out;
}

std::vector<std::string> parse_centers(const std::string& s, const Catalog& cat) {
  if (s != "all") return split_list(s);
  std::vector<std::string> out;
  for (const auto& e : cat.entries()) out.push_back(e.id);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Screen and verify properties of triangle centers placed on the faces of a tetrahedron"};
  app.require_subcommand(1);

  std::vector<std::string> catalog_files;
  std::string format, output;
  std::uint64_t seed = 1;
  int n = 0, jobs = 1, precision = kDefaultPrecisionCap;
  bool timing = false;
  app.add_option("--catalog", catalog_files, "Extra catalog file(s) merged over the built-in one");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed")->capture_default_str();
    sub->add_option("--format", format, "json | csv | md (default json for screen, md otherwise)");
    sub->add_option("-o,--output", output, "Output file (default stdout)");
    sub->add_flag("--timing", timing, "Include timings (breaks byte-identical output)");
  };

  // gen
  std::string family = "general";
  CLI::App* gen = app.add_subcommand("gen", "Generate random instances of a tetrahedron family as JSON");
  gen->add_option("--family", family, "general | isosceles | circumscriptible | isodynamic | orthocentric | harmonic | productsum");
  gen->add_option("-n,--n", n, "Number of instances (default 10)");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  // screen
  std::string centers = "X2", properties = "all", instances_file;
  CLI::App* screen = app.add_subcommand("screen", "Run a family x centers x properties screen");
  screen->add_option("--family", family, "Tetrahedron family");
  screen->add_option("--centers", centers, "Comma-separated center ids (POW@2, bare POW = default r values) or 'all'");
  screen->add_option("--properties", properties, "Comma-separated property numbers or names, or 'all'");
  screen->add_option("-n,--n", n, "Instances per cell (default 20)");
  screen->add_option("--precision-bits", precision, "Interval precision cap");
  screen->add_option("--instances", instances_file, "Screen the instances in this JSON file instead of generating");
  screen->add_option("--jobs", jobs, "Worker threads");
  common(screen);

  // verify
  std::vector<std::string> case_ids;
  CLI::App* verify = app.add_subcommand("verify", "Check registered theorem cases ('all' for every case)");
  verify->add_option("cases", case_ids, "Case ids or 'all'")->required();
  verify->add_option("-n,--n", n, "Instances per case (default: per case)");
  verify->add_option("--jobs", jobs, "Worker threads");
  common(verify);

  // hunt
  std::string claim;
  int budget = 1000;
  CLI::App* hunt = app.add_subcommand("hunt", "Search for counterexamples to a uniqueness claim or conjecture");
  std::string claim_help = "One of:";
  for (const auto& c : hunt_claims()) claim_help += " " + c.name;
  hunt->add_option("claim", claim, claim_help)->required();
  hunt->add_option("--budget", budget, "Instances per center (uniqueness) or in total (conjectures)");
  common(hunt);

  CLI11_PARSE(app, argc, argv);

  try {
    Catalog cat = load_catalog(catalog_files);
    if (gen->parsed()) {
      auto instances = generate(parse_family(family), seed, n > 0 ? n : 10);
      nlohmann::json j = nlohmann::json::array();
      for (const auto& e : instances) j.push_back(to_json(e));
      emit(j.dump(2) + "\n", output);
      return 0;
    }
    ReportFormat fmt = parse_format(!format.empty() ? format : screen->parsed() ? "json" : "md");
    if (screen->parsed()) {
      ScreenPlan plan;
      plan.family = parse_family(family);
      plan.centers = parse_centers(centers, cat);
      plan.properties = parse_properties(properties);
      plan.count = n > 0 ? n : 20;
      plan.seed = seed;
      plan.precision_cap = precision;
      plan.jobs = jobs;
      if (!instances_file.empty()) plan.instances = load_instances(instances_file);
      emit(render(run_screen(plan, cat), fmt, timing), output);
      return 0;  // property failures are data
    }
    if (verify->parsed()) {
      std::vector<const TheoremCase*> cases;
      for (const auto& id : case_ids) {
        if (id == "all")
          for (const auto& c : theorem_registry()) cases.push_back(&c);
        else
          cases.push_back(&find_case(id));
      }
      std::vector<TheoremResult> results(cases.size());
      std::atomic<std::size_t> next{0};
      std::vector<std::string> errors(cases.size());
      auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
          try {
            results[i] = verify_theorem(*cases[i], n, seed, cat);
          } catch (const Error& e) {
            errors[i] = e.what();
          }
        }
      };
      std::vector<std::thread> pool;
      for (int j = 1; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();
      for (std::size_t i = 0; i < cases.size(); ++i)
        if (!errors[i].empty()) throw Error(ErrorCode::InvalidArgument, cases[i]->id + ": " + errors[i]);
      emit(render_verification(results, fmt, timing), output);
      for (const auto& r : results)
        if (r.status == CaseStatus::Fail) return 1;
      return 0;
    }
    if (hunt->parsed()) {
      emit(render_hunt(hunt_counterexample(claim, budget, seed, cat), fmt, timing), output);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

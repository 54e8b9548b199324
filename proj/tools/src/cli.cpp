#include "monocone_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "monocone/catalog.hpp"
#include "monocone/cdd_io.hpp"
#include "monocone/cone.hpp"
#include "monocone/entropy.hpp"
#include "monocone/error.hpp"
#include "monocone/json_io.hpp"
#include "monocone/monotonicity.hpp"
#include "monocone/orbits.hpp"
#include "monocone/symmetric.hpp"
#include "monocone/witness.hpp"

namespace monocone::cli {

namespace {

constexpr int kMaxRaySystems = 5;
constexpr int kMaxSymmetricSystems = 64;
constexpr int kMaxEmbedSystems = 12;

struct Config {
  int n = 0;
  std::vector<int> system;
  std::vector<int> systems;
  bool all = false;
  std::string formula_path;
  std::string catalog_name;
  std::string dist_path;
  std::string format;
  std::string out_path;
  bool orbits = false;
  bool embed = false;
  bool facets = false;
  bool generators = false;
  unsigned jobs = 1;
  std::size_t max_rays = DDOptions{}.max_rays;
  std::string order = "lexmax";
  std::string adjacency = "combinatorial";
  std::string h_path;
  std::string v_path;
  std::string name;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

// Writes to --out when given, otherwise to the data stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot open '" + path + "' for writing");
    stream_ = file_.get();
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Functional load_formula(const Config& c) {
  if (!c.formula_path.empty() && !c.catalog_name.empty()) throw UsageError("give either --formula or --catalog");
  Functional f;
  if (!c.formula_path.empty()) {
    f = functional_from_json(read_json_file(c.formula_path));
  } else if (!c.catalog_name.empty()) {
    f = catalog_functional(c.catalog_name);
  } else {
    throw UsageError("a formula is required (--formula PATH or --catalog NAME)");
  }
  if (c.n != 0) {
    if (c.n < f.n()) {
      throw UsageError("--n " + std::to_string(c.n) + " is below the formula's " + std::to_string(f.n()) + " systems");
    }
    if (c.n > kMaxLowerSetSystems) throw UsageError("--n must be at most " + std::to_string(kMaxLowerSetSystems));
    f = f.extended(c.n);
  }
  return f;
}

std::vector<int> select_systems(const Config& c, int n) {
  std::set<int> chosen(c.system.begin(), c.system.end());
  chosen.insert(c.systems.begin(), c.systems.end());
  if (c.all || chosen.empty()) {
    for (int i = 1; i <= n; ++i) chosen.insert(i);
  }
  for (int i : chosen) {
    if (i < 1 || i > n) throw UsageError("system " + std::to_string(i) + " is outside 1.." + std::to_string(n));
  }
  return {chosen.begin(), chosen.end()};
}

std::string resolve_format(const std::string& format, const char* fallback) {
  std::string f = format.empty() ? fallback : format;
  if (f != "json" && f != "cdd") throw UsageError("--format must be json or cdd");
  return f;
}

DDOptions dd_options(const Config& c, std::ostream& err) {
  DDOptions o;
  o.jobs = c.jobs;
  o.max_rays = c.max_rays;
  if (c.order == "lexmax") {
    o.rule = InsertionRule::LexMax;
  } else if (c.order == "sparsity") {
    o.rule = InsertionRule::Sparsity;
  } else {
    throw UsageError("--order must be lexmax or sparsity");
  }
  if (c.adjacency == "combinatorial") {
    o.adjacency = AdjacencyTest::Combinatorial;
  } else if (c.adjacency == "algebraic") {
    o.adjacency = AdjacencyTest::Algebraic;
  } else {
    throw UsageError("--adjacency must be combinatorial or algebraic");
  }
  auto last = std::make_shared<std::chrono::steady_clock::time_point>(std::chrono::steady_clock::now());
  o.progress = [last, &err](const DDProgress& p) {
    auto now = std::chrono::steady_clock::now();
    if (now - *last < std::chrono::seconds(1)) return;
    *last = now;
    err << "inserted " << p.inserted << '/' << p.total << ", rays " << p.rays << '\n';
  };
  return o;
}

// canonical form of each catalog entry at n systems -> name
std::map<RationalVector, std::string> catalog_labels(int n) {
  std::map<RationalVector, std::string> labels;
  for (const auto& entry : catalog_entries()) {
    if (entry.min_n > n) continue;
    labels.emplace(canonical_representative(entry.functional.extended(n)).coeffs(), entry.name);
  }
  return labels;
}

int cmd_facets(Config c, std::ostream& out) {
  c.format = resolve_format(c.format, "cdd");
  if (c.n < 1 || c.n > kMaxLowerSetSystems) {
    throw UsageError("--n must be in 1.." + std::to_string(kMaxLowerSetSystems));
  }
  auto systems = select_systems(c, c.n);
  HRep h = systems.size() == 1 ? single_system_facets(systems.front(), c.n) : monotonicity_cone(systems, c.n);
  Sink sink(c.out_path, out);
  if (c.format == "cdd") {
    write_cdd(*sink, h);
  } else {
    *sink << to_json(h).dump(2) << '\n';
  }
  return kOk;
}

int cmd_rays(Config c, std::ostream& out, std::ostream& err) {
  c.format = resolve_format(c.format, "cdd");
  if (c.n < 1 || c.n > kMaxRaySystems) throw UsageError("--n must be in 1.." + std::to_string(kMaxRaySystems));
  auto rays = enumerate_monotone_rays(c.n, dd_options(c, err));
  err << "rays: " << rays.functionals.size() << " extremal rays for n=" << c.n << '\n';

  auto orbits = group_orbits(rays.functionals);
  auto labels = catalog_labels(c.n);
  auto label_of = [&](const Functional& representative) -> std::optional<std::string> {
    auto it = labels.find(representative.coeffs());
    if (it == labels.end()) return std::nullopt;
    return it->second;
  };

  Sink sink(c.out_path, out);
  if (!c.orbits) {
    std::vector<std::optional<std::string>> ray_labels(rays.functionals.size());
    for (const auto& orbit : orbits) {
      auto label = label_of(orbit.representative);
      for (auto k : orbit.members) ray_labels[k] = label;
    }
    if (c.format == "cdd") {
      write_cdd(*sink, rays.rays);
      return kOk;
    }
    Json list = Json::array();
    for (std::size_t k = 0; k < rays.functionals.size(); ++k) {
      Json entry = to_json(rays.functionals[k]);
      entry["formula"] = rays.functionals[k].to_string();
      if (ray_labels[k]) entry["label"] = *ray_labels[k];
      list.push_back(std::move(entry));
    }
    *sink << Json{{"n", c.n}, {"count", rays.functionals.size()}, {"rays", list}}.dump(2) << '\n';
    return kOk;
  }

  if (c.format == "cdd") {
    VRep reps;
    reps.dim = rays.rays.dim;
    reps.n = c.n;
    reps.name = "M_N n=" + std::to_string(c.n) + " orbit representatives";
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      auto label = label_of(orbits[k].representative);
      *sink << "* orbit " << k + 1 << " size " << orbits[k].size();
      if (label) *sink << ' ' << *label;
      *sink << '\n';
      reps.rays.push_back(orbits[k].representative.coeffs());
    }
    write_cdd(*sink, reps);
    return kOk;
  }
  Json list = Json::array();
  for (const auto& orbit : orbits) {
    Json entry{{"size", orbit.size()},
               {"representative", to_json(orbit.representative)},
               {"formula", orbit.representative.to_string()}};
    if (auto label = label_of(orbit.representative)) entry["label"] = *label;
    list.push_back(std::move(entry));
  }
  *sink << Json{{"n", c.n}, {"rays", rays.functionals.size()}, {"orbits", list}}.dump(2) << '\n';
  return kOk;
}

std::string describe(const SystemVerdict& v) {
  std::ostringstream s;
  s << "system " << v.system << ": ";
  switch (v.violation) {
    case Violation::None:
      s << "monotone";
      break;
    case Violation::LowerSet:
      s << "VIOLATED lower set " << v.lower_set->to_string() << " sum " << to_string(v.value);
      break;
    case Violation::Balance:
      s << "VIOLATED balance defect " << to_string(v.value);
      break;
  }
  return s.str();
}

int cmd_check(const Config& c, std::ostream& out) {
  if (!c.format.empty() && resolve_format(c.format, "json") == "cdd") throw UsageError("check supports --format json only");
  Functional f = load_formula(c);
  auto verdicts = check_monotone(f, select_systems(c, f.n()));
  bool monotone = true;
  for (const auto& v : verdicts) monotone = monotone && v.satisfied();
  Sink sink(c.out_path, out);
  if (c.format == "json") {
    Json list = Json::array();
    for (const auto& v : verdicts) {
      Json entry{{"system", v.system}, {"satisfied", v.satisfied()}};
      if (v.violation == Violation::LowerSet) {
        entry["lower_set"] = to_json(*v.lower_set);
        entry["value"] = to_string(v.value);
      } else if (v.violation == Violation::Balance) {
        entry["balance_defect"] = to_string(v.value);
      }
      list.push_back(std::move(entry));
    }
    *sink << Json{{"formula", f.to_string()}, {"monotone", monotone}, {"systems", list}}.dump(2) << '\n';
  } else {
    for (const auto& v : verdicts) *sink << describe(v) << '\n';
    *sink << (monotone ? "MONOTONE" : "NOT MONOTONE") << '\n';
  }
  return monotone ? kOk : kFailed;
}

int cmd_certify(const Config& c, std::ostream& out) {
  Functional f = load_formula(c);
  auto systems = select_systems(c, f.n());
  Json doc{{"formula", to_json(f)}};
  int code = kOk;
  if (is_monotone(f, systems)) {
    Json list = Json::array();
    for (int i : systems) {
      auto cert = decompose_monotone(f, i);
      if (!verify_decomposition(cert, f)) {
        throw InvariantBreach("decomposition for system " + std::to_string(i) + " failed verification");
      }
      list.push_back(to_json(cert));
    }
    doc["monotone"] = true;
    doc["decompositions"] = list;
  } else {
    Json list = Json::array();
    for (const auto& cert : violation_certificates(f, systems)) {
      if (!verify_certificate(cert)) {
        throw InvariantBreach("violation certificate for system " + std::to_string(cert.system) +
                              " failed verification");
      }
      list.push_back(to_json(cert));
    }
    doc["monotone"] = false;
    doc["violations"] = list;
    code = kFailed;
  }
  Sink sink(c.out_path, out);
  *sink << doc.dump(2) << '\n';
  return code;
}

int cmd_symmetric(Config c, std::ostream& out) {
  c.format = resolve_format(c.format, "json");
  if (c.n < 2 || c.n > kMaxSymmetricSystems) {
    throw UsageError("--n must be in 2.." + std::to_string(kMaxSymmetricSystems));
  }
  if (c.facets && c.generators) throw UsageError("give only one of --facets and --generators");
  if (c.facets && c.embed) throw UsageError("--embed applies to --generators");
  if (c.embed && c.n > kMaxEmbedSystems) throw UsageError("--embed needs n <= " + std::to_string(kMaxEmbedSystems));
  Sink sink(c.out_path, out);
  if (c.facets) {
    HRep h = symmetric_facets(c.n);
    if (c.format == "cdd") {
      write_cdd(*sink, h);
    } else {
      *sink << to_json(h).dump(2) << '\n';
    }
    return kOk;
  }

  auto values = symmetric_generator_values(c.n);
  VRep v;
  v.name = "symmetric generators n=" + std::to_string(c.n);
  if (c.embed) {
    v.n = c.n;
    v.dim = coordinate_count(c.n);
    for (const auto& s : values) v.rays.push_back(embed_symmetric(s).coeffs());
  } else {
    v.dim = static_cast<std::size_t>(c.n);
    for (const auto& s : values) v.rays.push_back(s.a);
  }
  if (c.format == "cdd") {
    write_cdd(*sink, v);
    return kOk;
  }
  Json list = Json::array();
  if (c.embed) {
    for (const auto& s : values) list.push_back(to_json(embed_symmetric(s)));
  } else {
    for (const auto& s : values) {
      Json row = Json::array();
      for (const auto& x : s.a) row.push_back(to_string(x));
      list.push_back(std::move(row));
    }
  }
  *sink << Json{{"n", c.n}, {"generators", list}}.dump(2) << '\n';
  return kOk;
}

int cmd_verify_pair(const Config& c, std::ostream& out, std::ostream& err) {
  HRep h = read_cdd_hrep_file(c.h_path);
  VRep v = read_cdd_vrep_file(c.v_path);
  if (h.dim != v.dim) {
    throw DimensionMismatch("H-representation has dimension " + std::to_string(h.dim) +
                            ", V-representation has " + std::to_string(v.dim));
  }
  auto report = verify_dd_pair(h, v, dd_options(c, err));
  Sink sink(c.out_path, out);
  for (const auto& problem : report.problems) *sink << "problem: " << problem << '\n';
  *sink << (report.passed ? "PASS" : "FAIL") << '\n';
  return report.passed ? kOk : kFailed;
}

int cmd_eval(const Config& c, std::ostream& out) {
  if (c.dist_path.empty()) throw UsageError("--dist PATH is required");
  Functional f = load_formula(c);
  JointDistribution d = distribution_from_json(read_json_file(c.dist_path));
  if (static_cast<int>(d.variable_count()) != f.n()) {
    throw DimensionMismatch("formula has " + std::to_string(f.n()) + " systems, distribution has " +
                            std::to_string(d.variable_count()) + " variables");
  }
  auto result = evaluate(f, shannon_entropy_vector(d));
  Sink sink(c.out_path, out);
  *sink << to_string(result.value);
  if (!result.exact) {
    *sink << " approximate ~" << result.value.get_d();
  }
  *sink << '\n';
  return kOk;
}

int cmd_catalog(const Config& c, std::ostream& out) {
  std::string name = !c.name.empty() ? c.name : c.catalog_name;
  Sink sink(c.out_path, out);
  if (name.empty()) {
    for (const auto& entry : catalog_entries()) {
      *sink << entry.name << " (n>=" << entry.min_n << "): " << entry.description << '\n';
    }
    return kOk;
  }
  Config with_name = c;
  with_name.catalog_name = name;
  with_name.formula_path.clear();
  *sink << to_json(load_formula(with_name)).dump(2) << '\n';
  return kOk;
}

void add_formula_options(CLI::App* sub, Config& c) {
  sub->add_option("--formula", c.formula_path, "Functional JSON file");
  sub->add_option("--catalog", c.catalog_name, "Named formula from the catalog");
}

void add_system_options(CLI::App* sub, Config& c) {
  sub->add_option("--system", c.system, "System index (repeatable)");
  sub->add_option("--systems", c.systems, "Comma-separated system indices")->delimiter(',');
  sub->add_flag("--all", c.all, "All systems (default when none is selected)");
}

void add_dd_options(CLI::App* sub, Config& c) {
  sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  sub->add_option("--max-rays", c.max_rays, "Cap on intermediate rays")->check(CLI::PositiveNumber);
  sub->add_option("--order", c.order, "Row insertion order: lexmax or sparsity");
  sub->add_option("--adjacency", c.adjacency, "Adjacency test: combinatorial or algebraic");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact monotonicity cones of linear entropic formulas", "monocone"};
  app.require_subcommand(1, 1);

  auto* facets = app.add_subcommand("facets", "Facets of the monotonicity cone");
  facets->add_option("--n", c.n, "Number of systems")->required();
  add_system_options(facets, c);
  facets->add_option("--format", c.format, "json or cdd (default cdd)");
  facets->add_option("--out", c.out_path, "Output file");

  auto* rays = app.add_subcommand("rays", "Extremal rays of the monotonicity cone");
  rays->add_option("--n", c.n, "Number of systems")->required();
  rays->add_flag("--orbits", c.orbits, "One representative per permutation orbit");
  rays->add_option("--format", c.format, "json or cdd (default cdd)");
  rays->add_option("--out", c.out_path, "Output file");
  add_dd_options(rays, c);

  auto* check = app.add_subcommand("check", "Monotonicity verdict per system");
  add_formula_options(check, c);
  add_system_options(check, c);
  check->add_option("--n", c.n, "Extend the formula to n systems");
  check->add_option("--format", c.format, "json (default: text)");
  check->add_option("--out", c.out_path, "Output file");

  auto* certify = app.add_subcommand("certify", "Decomposition or violation certificates");
  add_formula_options(certify, c);
  add_system_options(certify, c);
  certify->add_option("--n", c.n, "Extend the formula to n systems");
  certify->add_option("--out", c.out_path, "Output file");

  auto* symmetric = app.add_subcommand("symmetric", "Symmetric monotonicity cone");
  symmetric->add_option("--n", c.n, "Number of systems")->required();
  symmetric->add_flag("--facets", c.facets, "Emit the facets");
  symmetric->add_flag("--generators", c.generators, "Emit the generators (default)");
  symmetric->add_flag("--embed", c.embed, "Generators as full functionals");
  symmetric->add_option("--format", c.format, "json or cdd (default json)");
  symmetric->add_option("--out", c.out_path, "Output file");

  auto* verify = app.add_subcommand("verify-pair", "Check that two cdd files form a DD pair");
  verify->add_option("hrep", c.h_path, "H-representation (cdd)")->required()->check(CLI::ExistingFile);
  verify->add_option("vrep", c.v_path, "V-representation (cdd)")->required()->check(CLI::ExistingFile);
  verify->add_option("--out", c.out_path, "Output file");
  add_dd_options(verify, c);

  auto* eval = app.add_subcommand("eval", "Evaluate a formula on a distribution");
  add_formula_options(eval, c);
  eval->add_option("--dist", c.dist_path, "Joint distribution JSON file");
  eval->add_option("--n", c.n, "Extend the formula to n systems");
  eval->add_option("--out", c.out_path, "Output file");

  auto* catalog = app.add_subcommand("catalog", "List or print named formulas");
  catalog->add_option("name", c.name, "Formula name");
  catalog->add_option("--catalog", c.catalog_name, "Formula name");
  catalog->add_option("--n", c.n, "Extend the formula to n systems");
  catalog->add_option("--out", c.out_path, "Output file");

  std::vector<std::string> argv_storage{"monocone"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*facets) return cmd_facets(c, out);
    if (*rays) return cmd_rays(c, out, err);
    if (*check) return cmd_check(c, out);
    if (*certify) return cmd_certify(c, out);
    if (*symmetric) return cmd_symmetric(c, out);
    if (*verify) return cmd_verify_pair(c, out, err);
    if (*eval) return cmd_eval(c, out);
    if (*catalog) return cmd_catalog(c, out);
  } catch (const ResourceLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const InvariantBreach& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariantBreach;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace monocone::cli

// ringlab — construct small finite rings, decide their element-level
// properties with witnesses, and search bounded presentation families.
//
// Commands:
//   ringlab check <file.ring> [--expect k=v,...] [--json] [--threads n]
//                 [--long] [--timings]
//   ringlab paper-suite [--long] [--json] [--threads n] [--timings]
//   ringlab search <config.json> [--out hits.jsonl] [--json]
//   ringlab info <file.ring> [--json]
//
// Exit codes: 0 ok, 1 build/parse error, 2 expectation mismatch,
//             3 time budget exhausted.
// The environment variable RINGLAB_TIME_BUDGET_SECS overrides time budgets.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ringlab/report.hpp>

using namespace ringlab;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::UnknownName, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<double> env_time_budget() {
  const char* v = std::getenv("RINGLAB_TIME_BUDGET_SECS");
  if (!v || !*v) return std::nullopt;
  try {
    return std::stod(v);
  } catch (...) {
    fail(Errc::SyntaxError,
         "RINGLAB_TIME_BUDGET_SECS is not a number: " + std::string(v));
  }
}

// --------------------------------------------------------------------------
// Expectations: `k=v` pairs from the --expect flag and from `# expect:`
// comment lines inside the ring file.
// --------------------------------------------------------------------------

struct Expectation {
  std::string key;
  std::string value;
};

void parse_expect_list(const std::string& text,
                       std::vector<Expectation>& out) {
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, ',')) {
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    cur = trim(cur);
    if (cur.empty()) continue;
    const auto eq = cur.find('=');
    if (eq == std::string::npos)
      fail(Errc::SyntaxError, "expectation '" + cur + "' is not key=value");
    out.push_back({trim(cur.substr(0, eq)), trim(cur.substr(eq + 1))});
  }
}

std::vector<Expectation> file_expectations(const std::string& text) {
  std::vector<Expectation> out;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    const auto pos = line.find("# expect:");
    if (pos == std::string::npos) continue;
    parse_expect_list(line.substr(pos + 9), out);
  }
  return out;
}

// The observable named by an expectation key, as a string.
std::string observed(const FiniteAlgebra& a, const PropertyReport& rep,
                     const std::string& key) {
  if (key == "order") return std::to_string(rep.order);
  if (key == "dim") return std::to_string(rep.dim);
  if (key == "field") return a.F().name();
  if (key == "local") return rep.filt.local ? "true" : "false";
  if (key == "chain") return rep.chain ? "true" : "false";
  if (key == "nilpotency_index")
    return std::to_string(rep.filt.nilpotency_index);
  if (key == "unit_order_max") return std::to_string(rep.unit_order_max);
  auto it = rep.properties.find(key);
  if (it == rep.properties.end())
    fail(Errc::UnknownName, "no expectation key named '" + key + "'");
  return report::verdict_text(it->second.verdict);
}

int check_expectations(const FiniteAlgebra& a, const PropertyReport& rep,
                       const std::vector<Expectation>& expects) {
  int mismatches = 0;
  for (const auto& e : expects) {
    const std::string got = observed(a, rep, e.key);
    if (got != e.value) {
      ++mismatches;
      std::cerr << "expectation mismatch: " << e.key << " = " << got
                << ", expected " << e.value << "\n";
    }
  }
  return mismatches;
}

// --------------------------------------------------------------------------
// Commands
// --------------------------------------------------------------------------

struct CommonFlags {
  bool json = false;
  bool timings = false;
  bool long_run = false;
  int threads = 1;
};

CheckOptions make_opts(const CommonFlags& f) {
  CheckOptions opts;
  opts.threads = f.threads;
  opts.long_run = f.long_run;
  if (auto b = env_time_budget()) opts.time_budget_secs = *b;
  return opts;
}

int cmd_check(const std::string& path, const std::string& expect_flag,
              const CommonFlags& flags) {
  const std::string text = read_file(path);
  std::vector<Expectation> expects = file_expectations(text);
  parse_expect_list(expect_flag, expects);

  const dsl::RingSpecFile spec = dsl::parse(text);
  const dsl::Built built = dsl::build(spec);
  const PropertyReport rep =
      property_report(built.algebra, make_opts(flags), spec.name);

  if (flags.json)
    std::cout << report::report_json(built.algebra, rep, flags.timings).dump(2)
              << "\n";
  else
    std::cout << report::text_report(built.algebra, rep, flags.timings);

  return check_expectations(built.algebra, rep, expects) == 0 ? 0 : 2;
}

int cmd_info(const std::string& path, const CommonFlags& flags) {
  const dsl::RingSpecFile spec = dsl::parse(read_file(path));
  const dsl::Built built = dsl::build(spec);
  const FiniteAlgebra& a = built.algebra;
  const Filtration f = filtration(a);
  if (flags.json) {
    report::ordered_json j;
    j["name"] = spec.name;
    j["order"] = a.order();
    j["dim"] = a.dim();
    j["field"] = a.F().name();
    j["local"] = f.local;
    j["chain"] = is_chain(a, f);
    j["filtration_dims"] = f.dims;
    j["nilpotency_index"] = f.nilpotency_index;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << spec.name << ": order " << a.order() << ", dim " << a.dim()
              << " over " << a.F().name() << "\n"
              << "  local: " << (f.local ? "yes" : "no")
              << "   chain: " << (is_chain(a, f) ? "yes" : "no") << "\n";
    std::cout << "  radical layer dims: ";
    if (f.dims.empty()) {
      std::cout << "(radical is zero)";
    } else {
      for (size_t i = 0; i < f.dims.size(); ++i)
        std::cout << (i ? "," : "") << f.dims[i];
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_paper_suite(const CommonFlags& flags) {
  suite::SuiteOptions sopts;
  sopts.long_run = flags.long_run;
  sopts.threads = flags.threads;
  const auto results = suite::run(sopts);
  bool any_fail = false;
  for (const auto& r : results) any_fail |= r.status == suite::Status::Fail;
  if (flags.json) {
    std::cout << report::suite_json(results, flags.timings).dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << "[" << suite::status_text(r.status) << "] " << r.id << ". "
                << r.title;
      if (!r.detail.empty()) std::cout << " — " << r.detail;
      if (flags.timings) std::cout << " (" << r.seconds << "s)";
      std::cout << "\n";
    }
    std::cout << (any_fail ? "FAIL" : "OK") << "\n";
  }
  return any_fail ? 2 : 0;
}

int cmd_search(const std::string& config_path, const std::string& out_path,
               const CommonFlags& flags) {
  search::SearchConfig cfg =
      report::search_config_from_json(read_file(config_path));
  if (auto b = env_time_budget()) cfg.time_budget_secs = *b;

  const search::SearchOutcome out = search::find_minimal(cfg);

  if (!out_path.empty()) {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) fail(Errc::UnknownName, "cannot write '" + out_path + "'");
    for (const auto& h : out.hits)
      os << report::hit_json_line(cfg.family, h) << "\n";
  }

  if (flags.json) {
    report::ordered_json j = report::outcome_json(out);
    report::ordered_json hits = report::ordered_json::array();
    for (const auto& h : out.hits)
      hits.push_back(
          report::ordered_json::parse(report::hit_json_line(cfg.family, h)));
    j["hit_list"] = std::move(hits);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "family " << cfg.family << ": ";
    if (out.min_order)
      std::cout << "minimum order " << *out.min_order << " with "
                << out.hits.size() << " hit(s) after deduplication\n";
    else
      std::cout << "no ring in the family satisfies the predicate\n";
    std::cout << "  enumerated " << out.stats.enumerated << ", built "
              << out.stats.built << ", evaluated " << out.evaluated
              << ", skipped " << out.stats.skipped_infinite
              << " infinite and " << out.stats.skipped_large
              << " above the order cap\n";
    for (const auto& h : out.hits)
      std::cout << "  hit " << h.label << "  " << h.fp.text() << "\n";
    if (!out.note.empty()) std::cout << "  note: " << out.note << "\n";
  }
  if (!out.complete) {
    std::cerr << "time budget exhausted; results are partial\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "finite-ring laboratory: build small rings, decide their properties "
      "with witnesses, run the bundled verification suite, and search "
      "presentation families"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string path, expect_flag, out_path;

  auto add_common = [&](CLI::App* cmd, bool with_long = true) {
    cmd->add_flag("--json", flags.json, "emit JSON instead of text");
    cmd->add_flag("--timings", flags.timings,
                  "include (non-reproducible) timing data");
    cmd->add_option("--threads", flags.threads, "worker threads")
        ->check(CLI::PositiveNumber);
    if (with_long)
      cmd->add_flag("--long", flags.long_run,
                    "enable scans gated behind the long-run flag");
  };

  CLI::App* check = app.add_subcommand("check", "build a ring file and report its properties");
  check->add_option("file", path, "ring description file")->required();
  check->add_option("--expect", expect_flag,
                    "comma-separated key=value assertions");
  add_common(check);

  CLI::App* info = app.add_subcommand("info", "order and filtration only");
  info->add_option("file", path, "ring description file")->required();
  add_common(info, false);

  CLI::App* suite_cmd = app.add_subcommand(
      "paper-suite", "run the canned verification suite over the corpus");
  add_common(suite_cmd);

  CLI::App* search_cmd =
      app.add_subcommand("search", "minimal-order search over a family");
  search_cmd->add_option("config", path, "search configuration (JSON)")
      ->required();
  search_cmd->add_option("--out", out_path, "write hits as JSONL");
  add_common(search_cmd, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(path, expect_flag, flags);
    if (info->parsed()) return cmd_info(path, flags);
    if (suite_cmd->parsed()) return cmd_paper_suite(flags);
    if (search_cmd->parsed()) return cmd_search(path, out_path, flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (e.line() > 0) std::cerr << " (line " << e.line() << ", col " << e.col() << ")";
    std::cerr << "\n";
    return e.code() == Errc::TimeBudgetExceeded ? 3 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

#include "charclass/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "charclass/classes.hpp"
#include "charclass/problem.hpp"

namespace charclass {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 1;
// Below this the random scalars hit degenerate choices often enough that
// verification alone is not a reliable guard.
constexpr std::uint32_t kSmallPrime = 1000;

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Json list_to_json(const std::vector<BigInt>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(big_to_json(v));
  return arr;
}

std::string join(const std::vector<BigInt>& values, const std::string& sep) {
  std::ostringstream out;
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? sep : "") << values[k];
  return out.str();
}

std::uint64_t default_seed() {
  const char* env = std::getenv("CHARCLASS_SEED");
  if (!env || !*env) return kDefaultSeed;
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(env, &used, 10);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw UnsupportedError(std::string("CHARCLASS_SEED is not an unsigned integer: ") + env);
}

struct CommandOptions {
  std::string file;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int verify = -1;  // -1: command default
  bool json = false;
  std::uint32_t characteristic = 0;
};

int run_command(const std::string& command, const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = opt.seed_given ? opt.seed : default_seed();
  std::optional<std::uint32_t> char_override;
  if (opt.characteristic) char_override = opt.characteristic;
  const IdealSpec I = load_ideal(opt.file, char_override);
  const RandomScalarSource src(seed, 0);

  ClassOptions copts;
  copts.warn = [&err](const std::string& w) { err << "warning: " << w << '\n'; };
  const unsigned default_verify = command == "projdeg" ? 0 : 1;
  copts.degrees.verify = opt.verify >= 0 ? static_cast<unsigned>(opt.verify) : default_verify;

  const std::uint32_t p = I.ring()->field().characteristic();
  if (p < kSmallPrime)
    err << "warning: characteristic " << p << " is small; random choices may be degenerate and results wrong\n";

  Json record;
  record["n"] = I.n;
  record["p"] = I.ring()->field().characteristic();
  record["seed"] = seed;

  if (command == "projdeg") {
    const ProjectiveDegrees g = projective_degrees(I, src, copts.degrees);
    record["g"] = list_to_json(g.g);
    if (!opt.json) out << "g = (" << join(g.g, ", ") << ")\n";
  } else if (command == "segre") {
    const ChowClass s = segre_class(I, src, copts);
    record["segre"] = list_to_json(s.coeffs());
    if (!opt.json) out << "s(V) = " << s.to_string() << '\n';
  } else {
    const ChowClass c = csm_class(I, src, copts);
    const BigInt chi = integral(c);
    if (command == "csm") {
      record["csm"] = list_to_json(c.coeffs());
      record["chi"] = big_to_json(chi);
      if (!opt.json) out << "c_SM(V) = " << c.to_string() << "\nchi(V) = " << chi << '\n';
    } else if (command == "euler") {
      record["chi"] = big_to_json(chi);
      if (!opt.json) out << "chi(V) = " << chi << '\n';
    } else {
      const std::vector<BigInt> sections = aluffi_involution(c);
      record["sections"] = list_to_json(sections);
      if (!opt.json) out << join(sections, ", ") << '\n';
    }
  }
  if (opt.json) out << record.dump() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchRow {
  std::string fixture;
  std::string n;
  std::string gens;
  std::string seconds;
  std::string result;
  std::string check;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string fixed(double v) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(2) << v;
  return o.str();
}

BenchRow bench_fixture(const fs::path& path, double timeout, std::uint64_t seed) {
  BenchRow row;
  row.fixture = path.filename().string();
  row.n = row.gens = row.seconds = row.result = "-";
  const auto start = std::chrono::steady_clock::now();
  try {
    const ProblemFile problem = read_problem(path);
    row.fixture = problem.name;
    const IdealSpec I = build_ideal(problem);
    row.n = std::to_string(I.n);
    row.gens = std::to_string(I.generators.size());

    Deadline deadline;
    if (timeout > 0) deadline = Deadline::after(std::chrono::duration<double>(timeout));
    ClassOptions copts;
    copts.degrees.deadline = &deadline;
    const RandomScalarSource src(seed, 0);

    const auto& want = problem.expectations;
    bool mismatch = false;
    std::vector<std::string> parts;
    auto compare = [&](const std::string& key, const std::vector<BigInt>& got) {
      auto it = want.find(key);
      if (it == want.end()) return;
      std::vector<BigInt> expected = it->second;
      std::vector<BigInt> actual = got;
      if (key == "segre" || key == "csm") {
        expected.resize(I.n + 1);
        actual.resize(I.n + 1);
      }
      if (expected != actual) mismatch = true;
    };

    if (want.count("g")) {
      const ProjectiveDegrees g = projective_degrees(I, src, copts.degrees);
      parts.push_back("g=(" + join(g.g, ",") + ")");
      compare("g", g.g);
    }
    if (want.count("segre")) {
      const ChowClass s = segre_class(I, src, copts);
      parts.push_back("s=" + s.to_string());
      compare("segre", s.coeffs());
    }
    if (want.count("csm") || want.count("chi") || want.count("sections") || want.empty()) {
      const ChowClass c = csm_class(I, src, copts);
      const std::vector<BigInt> sections = aluffi_involution(c);
      parts.push_back("csm=" + c.to_string());
      parts.push_back("chi=" + integral(c).str());
      compare("csm", c.coeffs());
      compare("chi", {integral(c)});
      compare("sections", sections);
    }
    std::ostringstream result;
    for (std::size_t k = 0; k < parts.size(); ++k) result << (k ? "; " : "") << parts[k];
    row.result = result.str();
    row.check = want.empty() ? "unchecked" : (mismatch ? "MISMATCH" : "ok");
    row.seconds = fixed(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  } catch (const TimeoutError&) {
    row.seconds = "-";
    row.result = "-";
    row.check = "timeout";
  } catch (const std::exception& e) {
    row.result = e.what();
    row.check = "error";
    row.seconds = fixed(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return row;
}

int run_bench(const std::string& dir, double timeout, const std::string& csv_path, std::uint64_t seed,
              std::ostream& out) {
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".ideal") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<BenchRow> rows;
  out << "| fixture | n | gens | time (s) | result | check |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& f : files) {
    rows.push_back(bench_fixture(f, timeout, seed));
    const BenchRow& r = rows.back();
    out << "| " << r.fixture << " | " << r.n << " | " << r.gens << " | " << r.seconds << " | " << r.result << " | "
        << r.check << " |\n"
        << std::flush;
  }
  int ok = 0, unchecked = 0, timeouts = 0, failed = 0;
  for (const auto& r : rows) {
    if (r.check == "ok") ++ok;
    else if (r.check == "unchecked") ++unchecked;
    else if (r.check == "timeout") ++timeouts;
    else ++failed;
  }
  out << '\n'
      << rows.size() << (rows.size() == 1 ? " fixture: " : " fixtures: ") << ok << " ok, " << unchecked << " unchecked, " << timeouts << " timed out, "
      << failed << " failed\n";

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw IoError("cannot write " + csv_path);
    csv << "fixture,n,generators,seconds,result,check\n";
    for (const auto& r : rows)
      csv << csv_field(r.fixture) << ',' << r.n << ',' << r.gens << ',' << r.seconds << ',' << csv_field(r.result)
          << ',' << r.check << '\n';
    if (!csv) throw IoError("error while writing " + csv_path);
  }
  return failed ? kExitBenchFailure : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Segre and Chern-Schwartz-MacPherson classes of projective schemes"};
  app.name("charclass");
  app.require_subcommand(1);

  CommandOptions opt;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"projdeg", "projective degrees (g_0, ..., g_n) of the map given by the generators"},
      {"segre", "Segre class s(V, P^n)"},
      {"csm", "Chern-Schwartz-MacPherson class c_SM(V) and chi(V)"},
      {"euler", "Euler characteristic chi(V)"},
      {"sections", "Euler characteristics of V and of its general linear sections"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.file, "problem file")->required();
    sub->add_option("--seed", opt.seed, "random seed (default: $CHARCLASS_SEED or 1)")
        ->each([&](const std::string&) { opt.seed_given = true; });
    sub->add_option("--verify", opt.verify, "independent recomputations of each g_i")->check(CLI::Range(0, 16));
    sub->add_flag("--json", opt.json, "print a JSON record");
    sub->add_option("--char", opt.characteristic, "override the characteristic of the problem file");
    subs.push_back(sub);
  }

  std::string bench_dir, csv_path;
  double timeout = 600;
  std::uint64_t bench_seed = 0;
  bool bench_seed_given = false;
  CLI::App* bench = app.add_subcommand("bench", "time every *.ideal fixture in a directory");
  bench->add_option("dir", bench_dir, "fixture directory")->required();
  bench->add_option("--timeout", timeout, "per-fixture budget in seconds (0: none)")->check(CLI::NonNegativeNumber);
  bench->add_option("--csv", csv_path, "also write the table as CSV");
  bench->add_option("--seed", bench_seed, "random seed")->each([&](const std::string&) { bench_seed_given = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bench->parsed())
      return run_bench(bench_dir, timeout, csv_path, bench_seed_given ? bench_seed : default_seed(), out);
    for (std::size_t k = 0; k < subs.size(); ++k)
      if (subs[k]->parsed()) return run_command(commands[k].first, opt, out, err);
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace charclass

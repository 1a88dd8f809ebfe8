#include "sigmagb/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "sigmagb/homogenization.hpp"

#ifndef SIGMAGB_DATA_DIR
#define SIGMAGB_DATA_DIR "data"
#endif

namespace sigmagb {

namespace {

using Json = nlohmann::ordered_json;

std::string default_data_dir() {
  if (const char* env = std::getenv("SIGMAGB_DATA")) return env;
  return SIGMAGB_DATA_DIR;
}

Json report_to_json(const RunReport& r) {
  Json j;
  if (!r.name.empty()) j["name"] = r.name;
  j["strategy"] = r.strategy;
  j["bound"] = r.bound;
  j["in"] = r.in;
  j["out"] = r.out;
  j["minout"] = r.minout;
  j["pairs"] = r.pairs;
  j["time_ms"] = std::round(r.time_ms * 1000.0) / 1000.0;
  if (r.certified) {
    j["certified"] = *r.certified;
  } else {
    j["certified"] = nullptr;
  }
  if (r.aborted) j["aborted"] = true;
  if (r.reopened) j["reopened"] = r.reopened;
  return j;
}

std::string fmt_time(double ms) {
  std::ostringstream s;
  if (ms < 1000) {
    s << std::fixed << std::setprecision(0) << ms << "ms";
  } else if (ms < 60000) {
    s << std::fixed << std::setprecision(2) << ms / 1000 << "s";
  } else {
    const long secs = static_cast<long>(ms / 1000);
    s << secs / 60 << "m" << secs % 60 << "s";
  }
  return s.str();
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

ShiftExponent parse_weight_bound(const std::string& s, int rank) {
  std::vector<int> c;
  for (const auto& part : split_commas(s)) {
    std::size_t used = 0;
    const int v = std::stoi(part, &used);
    if (used != part.size() || v < 0) throw std::invalid_argument("bad weight bound '" + s + "'");
    c.push_back(v);
  }
  if (static_cast<int>(c.size()) != rank) {
    throw std::invalid_argument("weight bound needs " + std::to_string(rank) + " coordinates");
  }
  return ShiftExponent(std::span<const int>(c));
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FileParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ProblemFile load_or_throw(const std::string& path) {
  try {
    return load_problem(path);
  } catch (const ParseError& e) {
    throw FileParseError(path + ":" + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

void write_basis_text(std::ostream& out, const ProblemFile& p, const std::vector<DiffPolynomial>& basis) {
  ProblemFile q = p;
  q.generators = basis;
  out << serialize_problem(q);
}

int cmd_gb(const ProblemFile& input, const std::string& strategy_name, const std::string& ranking,
           std::optional<int> bound_ord, const std::string& bound_weight, bool minimal, bool tail, bool certify,
           const std::string& format, bool stats, std::size_t max_pairs, bool strict_reopen, std::ostream& out,
           std::ostream& err) {
  ProblemFile p = input;
  if (!ranking.empty()) {
    SigmaOrdering o = p.ordering;
    o.ranking = parse_ranking(ranking);
    p = p.with_ordering(o);
  }
  GBRun run;
  run.strategy = parse_strategy(strategy_name);
  if (run.strategy == Strategy::sigma2 && p.ordering.ranking != Ranking::weight) {
    throw UsageError("sigma2 is only compatible with the weight ranking");
  }
  if (bound_ord && !bound_weight.empty()) throw UsageError("--bound-ord and --bound-weight are exclusive");
  if (bound_ord) {
    run.truncation = Truncation::by_order(*bound_ord);
  } else if (!bound_weight.empty()) {
    run.truncation = Truncation::by_weight(parse_weight_bound(bound_weight, p.rank));
  } else if (p.bound) {
    run.truncation = *p.bound;
  }
  run.minimalize = minimal;
  run.tail_reduce = tail;
  run.max_pairs = max_pairs;
  run.abort_on_reopen = strict_reopen;
  const Ring ring = p.ring();
  if (certify && (p.ordering.ranking != Ranking::weight || p.ordering.sigma.kind != SigmaOrderKind::degrevlex)) {
    throw UsageError("--certify needs the weight ranking over degrevlex");
  }
  std::vector<DiffPolynomial> basis = sigma_gbasis(ring, p.generators, run);
  if (certify && !run.stats.aborted) {
    const auto c = certify_finite(ring, basis, run.truncation.kind == Truncation::Kind::weight ? CertifyMode::weight
                                                                                             : CertifyMode::order);
    run.stats.certified = c.certified;
  }
  RunReport r = make_report(run);
  if (format == "json") {
    Json j = report_to_json(r);
    j["unit"] = run.stats.unit_ideal;
    Json arr = Json::array();
    for (const auto& g : basis) arr.push_back(to_string(ring, g));
    j["basis"] = arr;
    out << j.dump(2) << "\n";
  } else {
    ProblemFile q = p;
    q.bound = run.truncation.is_bounded() ? std::optional<Truncation>(run.truncation) : std::nullopt;
    write_basis_text(out, q, basis);
    if (stats) {
      out << "# strategy=" << r.strategy << " bound=" << r.bound << " in=" << r.in << " out=" << r.out
          << " minout=" << r.minout << " pairs=" << r.pairs << " time=" << fmt_time(r.time_ms);
      if (r.certified) out << " certified=" << (*r.certified ? "yes" : "no");
      if (r.reopened) out << " reopened=" << r.reopened;
      out << "\n";
    }
  }
  if (run.stats.reopened && !run.stats.aborted) {
    err << "warning: saturation lowered the order of " << run.stats.reopened << " element(s) below the pair order\n";
  }
  if (run.stats.aborted) {
    err << "aborted: " << run.stats.abort_reason << "\n";
    return kExitAborted;
  }
  return kExitOk;
}

int cmd_certify(const ProblemFile& p, const std::string& mode, const std::string& format, std::ostream& out) {
  const Ring ring = p.ring();
  if (p.ordering.ranking != Ranking::weight || p.ordering.sigma.kind != SigmaOrderKind::degrevlex) {
    throw UsageError("certification needs the weight ranking over degrevlex");
  }
  const auto cm = mode == "weight" ? CertifyMode::weight : CertifyMode::order;
  const auto start = std::chrono::steady_clock::now();
  const Certificate c = certify_finite(ring, p.generators, cm);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (format == "json") {
    Json j;
    j["certified"] = c.certified;
    j["window"] = c.window.to_string();
    j["pairs_checked"] = c.pairs_checked;
    j["time_ms"] = std::round(ms * 1000.0) / 1000.0;
    if (c.witness) {
      j["witness"] = {c.witness->first, c.witness->second};
      j["witness_shifts"] = {c.witness_shifts->first.to_string(), c.witness_shifts->second.to_string()};
      j["remainder"] = to_string(ring, c.witness_remainder);
    }
    out << j.dump(2) << "\n";
  } else {
    out << (c.certified ? "certified" : "not certified") << " window " << c.window.to_string() << " pairs "
        << c.pairs_checked << " time " << fmt_time(ms) << "\n";
    if (c.witness) {
      out << "witness generators " << c.witness->first << "," << c.witness->second << " shifts "
          << c.witness_shifts->first.to_string() << "," << c.witness_shifts->second.to_string() << "\n";
      out << "remainder " << to_string(ring, c.witness_remainder) << "\n";
    }
  }
  return kExitOk;
}

int cmd_bench(const std::string& data_dir, const std::string& only, bool include_long, std::size_t max_pairs,
              const std::string& format, std::ostream& out) {
  const auto wanted = split_commas(only);
  Json rows = Json::array();
  bool any_aborted = false;
  if (format != "json") {
    out << std::left << std::setw(20) << "Example" << std::right << std::setw(6) << "in" << std::setw(6) << "out"
        << std::setw(8) << "minout" << std::setw(8) << "pairs" << std::setw(12) << "time" << "\n";
  }
  for (const auto& e : default_suite()) {
    if (!wanted.empty()) {
      bool hit = false;
      for (const auto& w : wanted) hit = hit || e.name == w || e.name.rfind(w + "-", 0) == 0;
      if (!hit) continue;
    } else if (e.long_running && !include_long) {
      continue;
    }
    const RunReport r = run_entry(e, data_dir, nullptr, max_pairs);
    any_aborted = any_aborted || r.aborted;
    if (format == "json") {
      rows.push_back(report_to_json(r));
    } else {
      out << std::left << std::setw(20) << r.name << std::right << std::setw(6) << r.in << std::setw(6) << r.out
          << std::setw(8) << r.minout << std::setw(8) << r.pairs << std::setw(12) << fmt_time(r.time_ms)
          << (r.aborted ? "  aborted" : "") << "\n";
      out.flush();
    }
  }
  if (format == "json") out << rows.dump(2) << "\n";
  return any_aborted ? kExitAborted : kExitOk;
}

}  // namespace

RunReport make_report(const GBRun& run) {
  RunReport r;
  r.strategy = to_string(run.strategy);
  r.bound = run.truncation.to_string();
  r.in = run.stats.in;
  r.out = run.stats.out;
  r.minout = run.stats.minout;
  r.pairs = run.stats.pairs;
  r.time_ms = run.stats.time_ms;
  r.certified = run.stats.certified;
  r.aborted = run.stats.aborted;
  r.reopened = run.stats.reopened;
  return r;
}

std::string report_json(const RunReport& r) { return report_to_json(r).dump(); }

std::vector<BenchEntry> default_suite() {
  using S = Strategy;
  using R = Ranking;
  return {
      {"falkow-6w-sigma", "falkow", R::weight, S::sigma, 6},
      {"falkow-6w-nocrit", "falkow", R::weight, S::nocrit, 6},
      {"falkow-6w-sigma2", "falkow", R::weight, S::sigma2, 6},
      {"falkow-6w-basic", "falkow", R::weight, S::basic, 6},
      {"falkow-6i-sigma", "falkow", R::index, S::sigma, 6},
      {"falkow-6i-nocrit", "falkow", R::index, S::nocrit, 6},
      {"falkow-6i-basic", "falkow", R::index, S::basic, 6},
      {"navier-8w-sigma", "navier", R::weight, S::sigma, 8},
      {"navier-8w-nocrit", "navier", R::weight, S::nocrit, 8},
      {"navier-8w-sigma2", "navier", R::weight, S::sigma2, 8},
      {"navier-8w-basic", "navier", R::weight, S::basic, 8},
      {"navier-8i-sigma", "navier", R::index, S::sigma, 8},
      {"navier-8i-nocrit", "navier", R::index, S::nocrit, 8},
      {"navier-8i-basic", "navier", R::index, S::basic, 8},
      {"heat-12w-sigma", "heat", R::weight, S::sigma, 12},
      {"heat-12w-nocrit", "heat", R::weight, S::nocrit, 12},
      {"heat-12w-sigma2", "heat", R::weight, S::sigma2, 12},
      {"heat-12w-basic", "heat", R::weight, S::basic, 12},
      {"eq26-12w-sigma", "eq26", R::weight, S::sigma, 12},
      {"eq26-12w-nocrit", "eq26", R::weight, S::nocrit, 12},
      {"eq26-12w-sigma2", "eq26", R::weight, S::sigma2, 12},
      {"eq26-12w-basic", "eq26", R::weight, S::basic, 12, true},
      {"eq27-12w-sigma", "eq27", R::weight, S::sigma, 12},
      {"eq27-12w-nocrit", "eq27", R::weight, S::nocrit, 12},
      {"eq27-12w-sigma2", "eq27", R::weight, S::sigma2, 12},
      {"eq27-12w-basic", "eq27", R::weight, S::basic, 12},
  };
}

RunReport run_entry(const BenchEntry& e, const std::string& data_dir, std::vector<DiffPolynomial>* basis,
                    std::size_t max_pairs) {
  const ProblemFile p = load_or_throw(data_dir + "/" + e.system + ".prob");
  SigmaOrdering o = p.ordering;
  o.ranking = e.ranking;
  const ProblemFile q = p.with_ordering(o);
  GBRun run;
  run.strategy = e.strategy;
  run.truncation = Truncation::by_order(e.bound);
  run.max_pairs = max_pairs;
  auto G = sigma_gbasis(q.ring(), q.generators, run);
  if (basis) *basis = std::move(G);
  RunReport r = make_report(run);
  r.name = e.name;
  return r;
}

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases of difference ideals"};
  app.require_subcommand(1);

  std::string file, strategy = "sigma", ranking, bound_weight, format = "text", mode = "order";
  std::optional<int> bound_ord;
  bool minimal = false, tail = false, certify = false, stats = false, strict_reopen = false, include_long = false;
  std::size_t max_pairs = 0;
  std::string data_dir = default_data_dir(), only;

  auto* gb = app.add_subcommand("gb", "compute a (truncated) Groebner Sigma-basis");
  gb->add_option("file", file, "problem file")->required();
  gb->add_option("--strategy", strategy, "basic, nocrit, sigma or sigma2")
      ->check(CLI::IsMember({"basic", "nocrit", "sigma", "sigma2"}));
  gb->add_option("--ranking", ranking, "override the file ranking")->check(CLI::IsMember({"weight", "index"}));
  auto* ob = gb->add_option("--bound-ord", bound_ord, "order bound d");
  auto* ow = gb->add_option("--bound-weight", bound_weight, "weight bound as a,b,...");
  ob->excludes(ow);
  gb->add_flag("--minimal", minimal, "print only a minimal basis");
  gb->add_flag("--tail-reduce", tail, "fully reduce every polynomial");
  gb->add_flag("--certify", certify, "run the finite completeness check on the result");
  gb->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  gb->add_flag("--stats", stats, "append run statistics");
  gb->add_option("--max-pairs", max_pairs, "abort after this many reductions");
  gb->add_flag("--strict-reopen", strict_reopen, "abort when saturation lowers the order being processed");

  auto* cert = app.add_subcommand("certify", "check that the generators of a file form a Groebner Sigma-basis");
  cert->add_option("file", file, "problem file holding the basis")->required();
  cert->add_option("--mode", mode, "order or weight")->check(CLI::IsMember({"order", "weight"}));
  cert->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* bench = app.add_subcommand("bench", "run the bundled benchmark table");
  bench->add_option("--data", data_dir, "directory with the bundled systems");
  bench->add_option("--only", only, "comma-separated entry names or prefixes");
  bench->add_flag("--include-long", include_long, "also run the very long entries");
  bench->add_option("--max-pairs", max_pairs, "abort each entry after this many reductions");
  bench->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (gb->parsed()) {
      return cmd_gb(load_or_throw(file), strategy, ranking, bound_ord, bound_weight, minimal, tail, certify, format,
                    stats, max_pairs, strict_reopen, out, err);
    }
    if (cert->parsed()) return cmd_certify(load_or_throw(file), mode, format, out);
    if (bench->parsed()) return cmd_bench(data_dir, only, include_long, max_pairs, format, out);
  } catch (const FileParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sigmagb

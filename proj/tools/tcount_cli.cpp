// Copyright 2026 The tcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: heuristic and provable T-count, fixture generation
// and the benchmark suites.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <sstream>

#include "tcount/circuit.hpp"
#include "tcount/errors.hpp"
#include "tcount/heuristic.hpp"
#include "tcount/io.hpp"
#include "tcount/provable.hpp"

namespace {

using namespace tcount;

enum Exit { kOk = 0, kInvalid = 1, kInconclusive = 2, kResourceCap = 3, kInternal = 4 };

std::string join_paulis(const std::vector<PauliIndex>& ps) {
  std::string s;
  for (const PauliIndex& p : ps) s += (s.empty() ? "" : " ") + p.str();
  return s;
}

void row(const std::string& key, const std::string& value) {
  std::printf("%-14s %s\n", key.c_str(), value.c_str());
}

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", ms);
  return buf;
}

// ---------------------------------------------------------------- tcount

struct TcountArgs {
  std::string input;
  std::string method = "C";
  std::string scope = "parent";
  std::size_t frontier_cap = 4096;
  int m_cap = 0;
  bool no_join2 = false;
  bool json = false;
  int threads = 1;
};

int run_tcount(const TcountArgs& a) {
  const ChannelMatrix u = load_channel(a.input);
  HeuristicConfig cfg;
  cfg.method = parse_method(a.method);
  cfg.scope = parse_scope(a.scope);
  cfg.frontier_cap = a.frontier_cap;
  cfg.m_cap = a.m_cap;
  cfg.join2 = !a.no_join2;
  cfg.threads = a.threads;
  if (cfg.frontier_cap < 1) throw InvalidInput("--frontier-cap must be positive");
  const HeuristicResult r = min_t_synth(u, cfg);
  if (a.json) {
    Json j = to_json(r.decomposition);
    j["input"] = a.input;
    j["algorithm"] = "heuristic";
    j["parameters"] = {{"method", method_name(cfg.method)},
                       {"scope", a.scope},
                       {"frontier_cap", cfg.frontier_cap},
                       {"m_cap", cfg.m_cap},
                       {"join2", cfg.join2},
                       {"threads", cfg.threads}};
    j["qubits"] = u.num_qubits();
    j["sde"] = u.sde();
    j["telemetry"] = to_json(r.telemetry);
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  row("input", a.input);
  row("qubits", std::to_string(u.num_qubits()));
  row("algorithm", "heuristic, method " + method_name(cfg.method) + ", " + a.scope + " scope" +
                       (cfg.join2 ? ", join2" : ""));
  row("sde", std::to_string(u.sde()));
  row("tcount", std::to_string(r.tcount()));
  row("paulis", join_paulis(r.decomposition.paulis));
  row("max frontier", std::to_string(r.telemetry.max_frontier));
  row("levels", std::to_string(r.telemetry.levels));
  row("wall", fmt_ms(r.telemetry.wall_ms));
  return kOk;
}

// ------------------------------------------------------- tcount-provable

struct ProvableArgs {
  std::string input;
  int m = 1;
  int c = 2;
  std::string db_dir;
  std::size_t mem_cap = std::size_t{2} << 30;
  int threads = 1;
  bool json = false;
  bool no_decompose = false;
};

int run_provable(const ProvableArgs& a) {
  const ChannelMatrix u = load_channel(a.input);
  ProvableConfig cfg;
  cfg.m = a.m;
  cfg.c = a.c;
  cfg.memory_cap_bytes = a.mem_cap;
  cfg.threads = a.threads;
  if (!a.db_dir.empty()) {
    cfg.db_dir = a.db_dir;
  } else if (const char* env = std::getenv("TCDB_DIR")) {
    cfg.db_dir = env;
  }
  const auto start = std::chrono::steady_clock::now();
  const ProvableSearcher searcher(u.num_qubits(), cfg);
  const std::optional<int> t = searcher.decide(u);
  std::optional<Decomposition> d;
  if (t && !a.no_decompose) d = searcher.decompose(u, *t);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::vector<std::size_t> sizes;
  for (const CosetDatabase& db : searcher.databases()) sizes.push_back(db.size());
  if (a.json) {
    Json j = d ? to_json(*d) : Json{{"tcount", t ? Json(*t) : Json(nullptr)}};
    j["input"] = a.input;
    j["algorithm"] = "provable";
    j["parameters"] = {{"m", cfg.m}, {"c", cfg.c}, {"depth", searcher.depth()}};
    j["decided"] = t.has_value();
    j["telemetry"] = {{"database_sizes", sizes},
                      {"database_bytes", searcher.database_bytes()},
                      {"wall_ms", ms}};
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  row("input", a.input);
  row("qubits", std::to_string(u.num_qubits()));
  row("algorithm", "provable, m " + std::to_string(cfg.m) + ", c " + std::to_string(cfg.c) +
                       ", depth " + std::to_string(searcher.depth()));
  row("tcount", t ? std::to_string(*t) : "NO (> " + std::to_string(cfg.m) + ")");
  if (d) row("paulis", join_paulis(d->paulis));
  std::string sz;
  for (std::size_t s : sizes) sz += (sz.empty() ? "" : " ") + std::to_string(s);
  row("databases", sz + " (" + std::to_string(searcher.database_bytes()) + " bytes)");
  row("wall", fmt_ms(ms));
  return kOk;
}

// ------------------------------------------------------------------- gen

struct GenArgs {
  std::string name;
  int n = 2;
  int tgates = 10;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "qc";
};

int run_gen(const GenArgs& a) {
  const Circuit c = a.name == "random" ? fixtures::random_circuit(a.n, a.tgates, a.seed)
                                       : fixtures::by_name(a.name);
  std::string text;
  if (a.format == "qc") {
    text = format_circuit(c);
  } else if (a.format == "json") {
    text = to_json(unitary_of_circuit(c)).dump() + "\n";
  } else {
    throw InvalidInput("--format must be qc or json");
  }
  if (a.out.empty()) {
    std::cout << text;
  } else {
    write_text(a.out, text);
  }
  return kOk;
}

// ----------------------------------------------------------------- bench

struct BenchArgs {
  std::string suite = "table1";
  int repeat = 1;
  int samples = 10;
  std::uint64_t seed = 1;
  std::string scope = "parent";
  bool extended = false;
  bool json = false;
  int threads = 1;
};

struct Moments {
  double mean = 0, std = 0;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  if (xs.empty()) return m;
  m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  double ss = 0;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  m.std = xs.size() > 1 ? std::sqrt(ss / static_cast<double>(xs.size() - 1)) : 0.0;
  return m;
}

int run_bench(const BenchArgs& a) {
  if (a.repeat < 1) throw InvalidInput("--repeat must be positive");
  HeuristicConfig cfg;
  cfg.threads = a.threads;
  cfg.scope = parse_scope(a.scope);
  Json rows = Json::array();
  bool all_ok = true;

  if (a.suite == "table1") {
    std::vector<std::pair<std::string, int>> cases = {
        {"toffoli", 7}, {"fredkin", 7}, {"peres", 7},  {"quantum_or", 7},
        {"negated_toffoli", 7}, {"adder4", 7}, {"u2", 7}};
    if (a.extended) cases.push_back({"u1", 11});
    if (!a.json)
      std::printf("%-16s %6s %7s %9s %12s %12s %13s\n", "unitary", "qubits", "tcount", "expected",
                  "time mean", "time std", "max frontier");
    for (const auto& [name, expected] : cases) {
      const ChannelMatrix u = channel_of_unitary(unitary_of_circuit(fixtures::by_name(name)));
      std::vector<double> times;
      int t = -1;
      std::size_t frontier = 0;
      for (int r = 0; r < a.repeat; ++r) {
        const HeuristicResult res = min_t_synth(u, cfg);
        t = res.tcount();
        frontier = res.telemetry.max_frontier;
        times.push_back(res.telemetry.wall_ms / 1000.0);
      }
      const Moments tm = moments(times);
      all_ok = all_ok && t == expected;
      rows.push_back({{"unitary", name}, {"qubits", u.num_qubits()}, {"tcount", t},
                      {"expected", expected}, {"time_mean_s", tm.mean}, {"time_std_s", tm.std},
                      {"max_frontier", frontier}});
      if (!a.json)
        std::printf("%-16s %6d %7d %9d %11.3fs %11.3fs %13zu\n", name.c_str(), u.num_qubits(), t,
                    expected, tm.mean, tm.std, frontier);
    }
  } else if (a.suite == "table2") {
    std::vector<std::pair<int, int>> cases = {{2, 10}, {2, 20}, {3, 10}};
    if (a.extended) {
      for (auto c : {std::pair{2, 30}, {2, 40}, {3, 20}, {3, 30}, {4, 10}}) cases.push_back(c);
    }
    if (!a.json)
      std::printf("%6s %8s %8s %14s %14s %12s %12s %10s\n", "qubits", "T gates", "solved",
                  "frontier mean", "frontier std", "time mean", "time std", "t <= g");
    for (const auto& [n, g] : cases) {
      std::vector<double> frontiers, times;
      int solved = 0, bounded = 0;
      for (int s = 0; s < a.samples; ++s) {
        const Circuit c = fixtures::random_circuit(n, g, a.seed + static_cast<std::uint64_t>(s));
        const ChannelMatrix u = channel_of_unitary(unitary_of_circuit(c));
        for (int r = 0; r < a.repeat; ++r) {
          try {
            const HeuristicResult res = min_t_synth(u, cfg);
            if (r == 0) {
              ++solved;
              bounded += res.tcount() <= g;
            }
            frontiers.push_back(static_cast<double>(res.telemetry.max_frontier));
            times.push_back(res.telemetry.wall_ms / 1000.0);
          } catch (const HeuristicInconclusive&) {
            break;
          }
        }
      }
      const Moments fm = moments(frontiers), tm = moments(times);
      all_ok = all_ok && solved == a.samples && bounded == a.samples;
      rows.push_back({{"qubits", n}, {"t_gates", g}, {"samples", a.samples}, {"solved", solved},
                      {"bounded", bounded}, {"frontier_mean", fm.mean}, {"frontier_std", fm.std},
                      {"time_mean_s", tm.mean}, {"time_std_s", tm.std}});
      if (!a.json)
        std::printf("%6d %8d %5d/%-2d %14.2f %14.2f %11.3fs %11.3fs %7d/%-2d\n", n, g, solved,
                    a.samples, fm.mean, fm.std, tm.mean, tm.std, bounded, a.samples);
    }
  } else {
    throw InvalidInput("--suite must be table1 or table2");
  }
  if (a.json) std::cout << Json{{"suite", a.suite}, {"repeat", a.repeat}, {"rows", rows}}.dump(2) << "\n";
  return all_ok ? kOk : kInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact T-count and T-count-optimal decompositions of Clifford+T unitaries"};
  app.require_subcommand(1);

  TcountArgs ta;
  auto* tc = app.add_subcommand("tcount", "heuristic T-count with a decomposition");
  tc->add_option("input", ta.input, "circuit (.qc) or unitary/channel (.json)")->required();
  tc->add_option("--method", ta.method, "divide-and-select method A, B or C")->capture_default_str();
  tc->add_option("--scope", ta.scope, "selection scope: parent or level")->capture_default_str();
  tc->add_option("--frontier-cap", ta.frontier_cap, "largest frontier before a depth is abandoned")
      ->capture_default_str();
  tc->add_option("--m-cap", ta.m_cap, "largest depth tried (0: sde + 2n + 8)")->capture_default_str();
  tc->add_flag("--no-join2", ta.no_join2, "select at level one instead of level two");
  tc->add_flag("--json", ta.json, "JSON report");
  tc->add_option("--threads", ta.threads, "worker threads")->capture_default_str();

  ProvableArgs pa;
  auto* tp = app.add_subcommand("tcount-provable", "exact T-count decision up to m");
  tp->add_option("input", pa.input, "circuit (.qc) or unitary/channel (.json)")->required();
  tp->add_option("--m", pa.m, "decide T-count up to m")->capture_default_str();
  tp->add_option("--c", pa.c, "space/time trade-off, databases reach ceil(m/c)")->capture_default_str();
  tp->add_option("--db-dir", pa.db_dir, "database cache directory (default $TCDB_DIR)");
  tp->add_option("--mem-cap", pa.mem_cap, "database memory cap in bytes")->capture_default_str();
  tp->add_option("--threads", pa.threads, "worker threads")->capture_default_str();
  tp->add_flag("--no-decompose", pa.no_decompose, "decide only");
  tp->add_flag("--json", pa.json, "JSON report");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "write a fixture or a random circuit");
  gen->add_option("name", ga.name, "fixture name or 'random'")->required();
  gen->add_option("--n", ga.n, "qubits (random)")->capture_default_str();
  gen->add_option("--tgates", ga.tgates, "T gates (random)")->capture_default_str();
  gen->add_option("--seed", ga.seed, "seed (random)")->capture_default_str();
  gen->add_option("--format", ga.format, "qc or json")->capture_default_str();
  gen->add_option("--out", ga.out, "output file (default stdout)");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "run a benchmark suite");
  bench->add_option("--suite", ba.suite, "table1 or table2")->capture_default_str();
  bench->add_option("--repeat", ba.repeat, "runs per unitary")->capture_default_str();
  bench->add_option("--samples", ba.samples, "random circuits per row (table2)")->capture_default_str();
  bench->add_option("--seed", ba.seed, "first seed (table2)")->capture_default_str();
  bench->add_option("--scope", ba.scope, "selection scope: parent or level")->capture_default_str();
  bench->add_flag("--extended", ba.extended, "include the long-running rows");
  bench->add_flag("--json", ba.json, "JSON report");
  bench->add_option("--threads", ba.threads, "worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*tc) return run_tcount(ta);
    if (*tp) return run_provable(pa);
    if (*gen) return run_gen(ga);
    if (*bench) return run_bench(ba);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const HeuristicInconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << " (reached " << e.reached() << ")\n";
    return kResourceCap;
  } catch (const ArithmeticOverflow& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInvalid;
}

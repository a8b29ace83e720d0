// trace-turan: batch front end for the trace_turan library.
//
// Exit codes: 0 success, 1 detection timed out, 2 usage error or refused
// size, 3 unreadable or malformed input, 4 lemma violation on a trace-free
// input (an internal contract failure).

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "trace_turan/bounds.hpp"
#include "trace_turan/cnf.hpp"
#include "trace_turan/constructions.hpp"
#include "trace_turan/csv.hpp"
#include "trace_turan/io.hpp"
#include "trace_turan/lemma_checks.hpp"
#include "trace_turan/search.hpp"
#include "trace_turan/trace.hpp"

namespace tt = trace_turan;

namespace {

constexpr int kExitTimeout = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitContract = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exit status set by a subcommand that finished without throwing.
int g_status = 0;

/// "a:b" or a single value.
std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const double v = std::stod(text);
      return {v, v};
    }
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "', expected a:b");
  }
}

/// Writes `text` to `path`, or to stdout when `path` is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << text;
}

tt::Hypergraph3 load(const std::string& path) {
  try {
    return tt::read_hypergraph_file(path);
  } catch (const tt::ParseError& e) {
    throw InputError("parse error in " + path + " at " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

// --- search ---------------------------------------------------------------

struct SearchArgs {
  int n = 0;
  int t = 2;
  bool oracle = false;
  int threads = 1;
  int max_n = 12;
  std::uint64_t seed = 0x5eed;
  std::string witness_out;
  std::string out;
  bool header = false;
};

std::filesystem::path cache_file(const SearchArgs& a) {
  const char* dir = std::getenv("TRACE_TURAN_CACHE");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir) /
         ((a.oracle ? "oracle_n" : "search_n") + std::to_string(a.n) + "_t" + std::to_string(a.t) + ".csv");
}

void run_search(const SearchArgs& a) {
  const auto cached = a.witness_out.empty() ? cache_file(a) : std::filesystem::path{};
  std::string row;
  if (!cached.empty() && std::filesystem::exists(cached)) {
    std::ifstream in(cached);
    std::getline(in, row);
  }
  if (row.empty()) {
    tt::SearchResult r;
    try {
      if (a.oracle) {
        r = tt::turan_oracle(a.n, a.t);
      } else {
        tt::SearchConfig config;
        config.max_n = a.max_n;
        config.threads = a.threads;
        config.seed = a.seed;
        r = tt::turan_search(a.n, a.t, config);
      }
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    row = tt::result_csv_row(r);
    if (!cached.empty()) {
      std::filesystem::create_directories(cached.parent_path());
      std::ofstream(cached) << row << '\n';
    }
    if (!a.witness_out.empty()) {
      std::string text;
      for (const auto& w : r.witnesses) text += tt::format_hypergraph(w) + "\n";
      emit(a.witness_out, text);
    }
  }
  emit(a.out, (a.header ? tt::result_csv_header() + "\n" : std::string()) + row + "\n");
}

// --- check ----------------------------------------------------------------

void run_check(const std::string& file, int t, int budget_ms, int threads, bool berge) {
  const tt::Hypergraph3 h = load(file);
  if (t < 2) throw UsageError("--t must be >= 2");
  const tt::TracePattern pattern(t);
  if (berge) {
    const auto cert = tt::find_berge(h, pattern);
    std::cout << (cert ? "berge\n" + tt::format_certificate(*cert) : std::string("berge-free\n"));
    return;
  }
  tt::DetectOptions options;
  options.time_budget = std::chrono::milliseconds(budget_ms);
  options.threads = threads;
  const tt::TraceDetection d = tt::detect_trace(h, pattern, options);
  switch (d.status) {
    case tt::DetectStatus::kFound:
      std::cout << tt::format_certificate(*d.certificate);
      break;
    case tt::DetectStatus::kAbsent:
      std::cout << "trace-free\n";
      break;
    case tt::DetectStatus::kTimeout:
      std::cout << "unknown: time budget exhausted\n";
      g_status = kExitTimeout;
      break;
  }
}

// --- verify ---------------------------------------------------------------

void run_verify(const std::string& file, int t, int delta, const std::string& format, std::uint64_t seed) {
  const tt::Hypergraph3 h = load(file);
  tt::LemmaReport report;
  try {
    report = tt::run_lemma_checks(h, t, delta, seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const auto& c : report.checks) {
    if (format == "json-lines") {
      std::cout << tt::to_json_line(c) << '\n';
      continue;
    }
    std::cout << c.lemma << ' ' << tt::to_string(c.status) << " (" << c.instances << " instances)\n";
    for (const auto& v : c.violations) {
      std::cout << "  witness";
      for (tt::Vertex x : v.witness) std::cout << ' ' << x;
      std::cout << ": observed " << v.observed << ", bound " << v.bound << '\n';
      if (v.certificate) {
        std::istringstream lines(tt::format_certificate(*v.certificate));
        for (std::string line; std::getline(lines, line);) std::cout << "    " << line << '\n';
      } else {
        std::cout << "    certificate search exhausted\n";
      }
    }
  }
  if (!report.violations().empty() && !tt::contains_trace(h, tt::TracePattern(t))) {
    std::cerr << "contract violation: lemma check failed on a trace-free hypergraph\n";
    g_status = kExitContract;
  }
}

// --- bounds ---------------------------------------------------------------

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

void run_bounds(const std::string& range, int points, bool default_g, const std::string& out) {
  auto [lo, hi] = parse_range(range);
  if (lo < 14.0 || hi < lo) throw UsageError("--t range must satisfy 14 <= a <= b");
  if (points < 1) throw UsageError("--points must be positive");
  std::vector<double> ts;
  if (lo == hi || points == 1) {
    ts.push_back(lo);
  } else {
    for (const auto& p : tt::derivation_check(lo, hi, points)) ts.push_back(p.t);
  }
  std::string text;
  if (default_g) {
    text = "t,g,g_in_domain,term_a,term_b,term_c,three_term,main,three_term_hi,main_lo,derivation_holds\n";
    for (double t : ts) {
      const auto r = tt::bound_k2t_terms(1.0, t, tt::default_g, "sqrt(t ln t)/7");
      const auto m = tt::bound_main(1.0, t);
      const auto p = tt::derivation_at(t);
      text += tt::csv_row({fmt(t), fmt(r.g), tt::g_in_domain(t, tt::default_g) ? "true" : "false", fmt(r.terms[0].value), fmt(r.terms[1].value),
                           fmt(r.terms[2].value), fmt(r.total), fmt(m.total), fmt(p.three_term.hi()),
                           fmt(p.main.lo()), p.holds ? "true" : "false"}) +
              "\n";
    }
  } else {
    text = "t,main,ratio_leading,epsilon_t\n";
    for (double t : ts) {
      const auto m = tt::bound_main(1.0, t);
      text += tt::csv_row({fmt(t), fmt(m.total), fmt(m.ratio_leading),
                           fmt((1.0 + std::log(t + 1.0)) / (t + 1.0))}) +
              "\n";
    }
  }
  emit(out, text);
}

// --- table ----------------------------------------------------------------

void run_table(const std::string& n_range, const std::vector<int>& ts, const std::vector<int>& qs,
               int threads, const std::string& out) {
  auto [lo, hi] = parse_range(n_range);
  std::vector<tt::RatioInput> rows;
  for (int t : ts) {
    for (int n = static_cast<int>(lo); n <= static_cast<int>(hi); ++n) {
      tt::SearchConfig config;
      config.threads = threads;
      try {
        rows.push_back({"search", n, t, tt::turan_search(n, t, config).value});
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  }
  for (int q : qs) {
    if (!tt::is_prime(q)) throw UsageError("--polarity: q = " + std::to_string(q) + " is not prime");
    const auto h = tt::lift_to_trace_free(tt::polarity_graph(q));
    rows.push_back({"polarity-lift q=" + std::to_string(q), h.order(), 2, static_cast<long long>(h.size())});
  }
  emit(out, tt::ratio_table(rows));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turan numbers of K_{2,t} traces in 3-uniform hypergraphs"};
  app.require_subcommand(1);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "exact ex(n, Tr_3(K_{2,t})) as a CSV row");
  search->add_option("--n", sa.n, "vertices")->required();
  search->add_option("--t", sa.t, "pattern K_{2,t}, t >= 2");
  search->add_flag("--oracle", sa.oracle, "brute-force enumeration (n <= 6)");
  search->add_option("--threads", sa.threads, "0 = all cores");
  search->add_option("--max-n", sa.max_n, "refuse larger n");
  search->add_option("--seed", sa.seed, "seed for the greedy lower bound");
  search->add_option("--witness-out", sa.witness_out, "write extremal witnesses here");
  search->add_option("--out", sa.out, "CSV destination (default stdout)");
  search->add_flag("--header", sa.header, "print the CSV header first");
  search->callback([&] { run_search(sa); });

  std::string check_file;
  int check_t = 2;
  int check_budget = 0;
  int check_threads = 1;
  bool check_berge = false;
  auto* check = app.add_subcommand("check", "print a trace certificate or \"trace-free\"");
  check->add_option("--file", check_file)->required();
  check->add_option("--t", check_t);
  check->add_option("--time-budget-ms", check_budget, "0 = unlimited");
  check->add_option("--threads", check_threads, "0 = all cores");
  check->add_flag("--berge", check_berge, "look for a Berge copy instead");
  check->callback([&] { run_check(check_file, check_t, check_budget, check_threads, check_berge); });

  auto* construct = app.add_subcommand("construct", "lower-bound constructions");
  construct->require_subcommand(1);
  int q = 2;
  bool lift = false;
  std::string construct_out;
  auto* polarity = construct->add_subcommand("polarity", "polarity graph of PG(2,q), q prime");
  polarity->add_option("--q", q)->required();
  polarity->add_flag("--lift", lift, "add one vertex to get a trace-free 3-graph");
  polarity->add_option("--out", construct_out);
  polarity->callback([&] {
    if (!tt::is_prime(q)) throw UsageError("--q " + std::to_string(q) + " is not prime");
    const tt::Graph g = tt::polarity_graph(q);
    std::ostringstream os;
    if (lift) {
      tt::write_hypergraph(os, tt::lift_to_trace_free(g));
    } else {
      tt::write_graph(os, g);
    }
    emit(construct_out, os.str());
  });
  int greedy_n = 0;
  int greedy_t = 2;
  std::uint64_t greedy_seed = 0x5eed;
  int restarts = 32;
  auto* greedy = construct->add_subcommand("greedy", "best of random-order greedy packings");
  greedy->add_option("--n", greedy_n)->required();
  greedy->add_option("--t", greedy_t);
  greedy->add_option("--seed", greedy_seed);
  greedy->add_option("--restarts", restarts);
  greedy->add_option("--out", construct_out);
  greedy->callback([&] {
    if (greedy_n < 0 || greedy_t < 2) throw UsageError("need n >= 0 and t >= 2");
    emit(construct_out, tt::format_hypergraph(tt::greedy_lower_bound(greedy_n, greedy_t, greedy_seed,
                                                                     tt::GreedyConfig{restarts})));
  });

  std::string verify_file;
  int verify_t = 2;
  int verify_delta = 14;
  std::string verify_format = "text";
  std::uint64_t verify_seed = 0x5eed;
  auto* verify = app.add_subcommand("verify", "run the lemma invariant checks");
  verify->add_option("--file", verify_file)->required();
  verify->add_option("--t", verify_t);
  verify->add_option("--delta", verify_delta);
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json-lines"}));
  verify->add_option("--seed", verify_seed);
  verify->callback([&] { run_verify(verify_file, verify_t, verify_delta, verify_format, verify_seed); });

  std::string bounds_t = "14:1000000";
  int bounds_points = 1000;
  bool bounds_default_g = false;
  std::string bounds_out;
  auto* bounds = app.add_subcommand("bounds", "leading-term bounds over a log grid of t");
  bounds->add_option("--t", bounds_t, "a:b");
  bounds->add_option("--points", bounds_points);
  bounds->add_flag("--paper-g", bounds_default_g, "three-term bound with g(t) = sqrt(t ln t)/7");
  bounds->add_option("--out", bounds_out);
  bounds->callback([&] { run_bounds(bounds_t, bounds_points, bounds_default_g, bounds_out); });

  std::string table_n = "3:6";
  std::vector<int> table_t{2};
  std::vector<int> table_q;
  int table_threads = 1;
  std::string table_out;
  auto* table = app.add_subcommand("table", "ratio table of exact values and constructions");
  table->add_option("--n", table_n, "a:b");
  table->add_option("--t", table_t)->delimiter(',');
  table->add_option("--polarity", table_q, "prime q values to lift")->delimiter(',');
  table->add_option("--threads", table_threads);
  table->add_option("--out", table_out);
  table->callback([&] { run_table(table_n, table_t, table_q, table_threads, table_out); });

  int cnf_n = 0;
  int cnf_m = 0;
  int cnf_t = 2;
  std::string cnf_out;
  auto* cnf = app.add_subcommand("cnf", "DIMACS CNF: trace-free with >= m edges exists");
  cnf->add_option("--n", cnf_n)->required();
  cnf->add_option("--m", cnf_m)->required();
  cnf->add_option("--t", cnf_t);
  cnf->add_option("--out", cnf_out)->required();
  cnf->callback([&] {
    try {
      tt::export_cnf(cnf_n, cnf_m, cnf_t, cnf_out);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return g_status;
}

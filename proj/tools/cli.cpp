#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "flagcx/canon.hpp"
#include "flagcx/checks.hpp"
#include "flagcx/colored.hpp"
#include "flagcx/complex.hpp"
#include "flagcx/corpus.hpp"
#include "flagcx/error.hpp"
#include "flagcx/graph.hpp"
#include "flagcx/homology.hpp"
#include "flagcx/json_io.hpp"
#include "flagcx/suite.hpp"
#include "flagcx/turan.hpp"

namespace flagcx::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { table, json, csv };

struct Output {
  Format format = Format::table;
  std::ostream* out = nullptr;

  void emit(const json& j, const std::string& table) const {
    switch (format) {
      case Format::json:
        *out << j.dump() << '\n';
        break;
      case Format::table:
        *out << table;
        if (!table.empty() && table.back() != '\n') *out << '\n';
        break;
      case Format::csv: {
        std::string header;
        std::string row;
        for (const auto& [key, value] : j.items()) {
          if (!header.empty()) {
            header += ',';
            row += ',';
          }
          header += key;
          row += csv_cell(value);
        }
        *out << header << '\n' << row << '\n';
        break;
      }
    }
  }

  static std::string csv_cell(const json& v) {
    if (v.is_string()) return quote(v.get<std::string>());
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
      std::string s;
      for (const auto& x : v) {
        if (!s.empty()) s += ';';
        s += x.is_string() ? x.get<std::string>() : x.dump();
      }
      return quote(s);
    }
    if (v.is_primitive()) return v.dump();
    return quote(v.dump());
  }

  static std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
};

std::string join(const std::vector<BigInt>& xs, const char* sep = " ") {
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += sep;
    s += to_string(x);
  }
  return s;
}

json numbers(const std::vector<BigInt>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(json_number(x));
  return a;
}

// Accepts complex files and the outputs of `clique` and `sigma`.
Complex read_complex(const std::string& path) {
  auto j = read_json_file(path);
  if (j.is_object() && j.contains("complex")) j = json(j["complex"]);
  else if (j.is_object() && j.contains("sigma")) j = json(j["sigma"]);
  return is_colored_json(j) ? colored_from_json(j).complex() : complex_from_json(j);
}

BigInt parse_count(const std::string& text) {
  const auto n = parse_bigint(text);
  if (n < 0) throw Error(Errc::domain, "expected a nonnegative integer, got " + text);
  return n;
}

std::string complex_table(const Complex& c) {
  std::ostringstream s;
  s << "f " << to_string(f_vector(c)) << '\n';
  for (const auto& facet : c.facets()) s << to_string(facet) << '\n';
  return s.str();
}

std::string summary_table(const SuiteSummary& s, const std::string& corpus) {
  std::ostringstream o;
  o << "corpus     " << corpus << '\n';
  o << "instances  " << s.instances_done << "/" << s.instances_total;
  if (s.resumed_from > 0) o << " (resumed after " << s.resumed_from << ")";
  if (s.aborted) o << " (stopped early)";
  o << '\n';
  const Verdict order[] = {Verdict::pass, Verdict::equality, Verdict::fail, Verdict::skipped, Verdict::violation};
  o << std::left;
  o.width(24);
  o << "check";
  for (auto v : order) {
    o.width(11);
    o << to_string(v);
  }
  o << '\n';
  for (const auto& [check, by_verdict] : s.counts) {
    o.width(24);
    o << check;
    for (auto v : order) {
      o.width(11);
      o << (by_verdict.contains(v) ? by_verdict.at(v) : 0);
    }
    o << '\n';
  }
  o << "failures   " << s.failures.size() << '\n';
  for (const auto& r : s.failures) o << "  " << to_json(r).dump() << '\n';
  o << "certificates " << s.certificates.size() << '\n';
  for (const auto& r : s.certificates) o << "  " << to_json(r).dump() << '\n';
  return o.str();
}

std::optional<std::string> default_ledger(const std::string& name) {
  if (const char* dir = std::getenv("FLAGCX_LEDGER_DIR"); dir && *dir) {
    return (std::filesystem::path(dir) / name).string();
  }
  return std::nullopt;
}

struct SuiteOptions {
  int n = 6;
  std::string graph6;
  std::size_t balanced = 0;
  std::vector<unsigned> primes{2};
  std::string ledger;
  bool resume = false;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  std::size_t max_instances = 0;
  bool timestamps = false;
  bool keep_going = false;
  bool progress = false;
};

void add_suite_options(CLI::App* cmd, SuiteOptions& o) {
  cmd->add_option("--n", o.n, "Use every graph on 1..n vertices (n <= 8)")->check(CLI::Range(0, 8));
  cmd->add_option("--graph6", o.graph6, "Read graphs from a graph6 file instead");
  cmd->add_option("--balanced", o.balanced, "Append this many random color-shifted balanced complexes");
  cmd->add_option("--p", o.primes, "Comma-separated primes")->delimiter(',');
  cmd->add_option("--ledger", o.ledger, "JSONL ledger path");
  cmd->add_flag("--resume", o.resume, "Continue an interrupted ledger");
  cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1U, 1024U));
  cmd->add_option("--max-instances", o.max_instances, "Stop after this many instances");
  cmd->add_flag("--timestamps", o.timestamps, "Record a UTC timestamp per report");
  cmd->add_flag("--keep-going", o.keep_going, "Do not stop at the first failure");
  cmd->add_flag("--progress", o.progress, "Report progress on stderr");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of flag, balanced and color-shifted simplicial complexes", "flagcx"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string format_name = "table";
  bool as_json = false;
  unsigned prime = 2;
  std::uint64_t seed = 1;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_flag("--json", as_json, "Shorthand for --format json");
  app.add_option("-p,--prime", prime, "Coefficient field F_p")->capture_default_str();
  app.add_option("--seed", seed, "Seed for random balanced complexes")->capture_default_str();
  // Allow the global options after the subcommand as well.
  app.fallthrough();

  Output output;
  output.out = &out;
  std::function<int()> action;

  // turan n k d
  std::int64_t tn = 0, tk = 0, td = 0;
  auto* turan = app.add_subcommand("turan", "binom(n, k)_d, the number of k-cliques of T_d(n)");
  turan->add_option("n", tn)->required();
  turan->add_option("k", tk)->required();
  turan->add_option("d", td)->required();
  turan->callback([&] {
    action = [&] {
      const auto v = turan_coeff(tn, tk, td);
      output.emit(json{{"n", tn}, {"k", tk}, {"d", td}, {"value", json_number(v)}}, to_string(v));
      return 0;
    };
  });

  // turan-row n d
  bool pascal = false;
  auto* row = app.add_subcommand("turan-row", "binom(n, 0)_d .. binom(n, d)_d");
  row->add_option("n", tn)->required();
  row->add_option("d", td)->required();
  row->add_flag("--pascal", pascal, "Use the Pascal-triangle recurrence");
  row->callback([&] {
    action = [&] {
      const auto r = pascal ? turan_row_pascal(tn, td) : turan_row(tn, td);
      output.emit(json{{"n", tn}, {"d", td}, {"row", numbers(r.values)}}, join(r.values));
      return 0;
    };
  });

  // canon N k r
  std::string cn;
  int ck = 0, cr = 0;
  auto* canon = app.add_subcommand("canon", "(k, r)-canonical representation of N");
  canon->add_option("N", cn)->required();
  canon->add_option("k", ck)->required();
  canon->add_option("r", cr)->required();
  canon->callback([&] {
    action = [&] {
      const auto rep = canonical_rep(parse_count(cn), ck, cr);
      json terms = json::array();
      std::string text;
      for (const auto& t : rep.terms()) {
        terms.push_back(json::array({t.index, t.k, t.r}));
        if (!text.empty()) text += " + ";
        text += "binom(" + std::to_string(t.index) + "," + std::to_string(t.k) + ")_" + std::to_string(t.r);
      }
      const auto up = shift_up(rep);
      const auto down = shift_down(rep);
      output.emit(json{{"n", cn}, {"k", ck}, {"r", cr}, {"terms", terms}, {"shift_up", json_number(up)},
                       {"shift_down", json_number(down)}},
                  text + "\nN+ " + to_string(up) + "\nN- " + to_string(down) + "\n");
      return 0;
    };
  });

  // shadow up|down N k r
  std::string direction;
  int iterate = 0;
  auto* shadow = app.add_subcommand("shadow", "Lower or upper shadow of N");
  shadow->add_option("direction", direction)->required()->check(CLI::IsMember({"up", "down"}));
  shadow->add_option("N", cn)->required();
  shadow->add_option("k", ck)->required();
  shadow->add_option("r", cr)->required();
  shadow->add_option("--iterate", iterate, "Apply j + 1 consecutive shadows")->check(CLI::NonNegativeNumber);
  shadow->callback([&] {
    action = [&] {
      const auto n = parse_count(cn);
      BigInt v;
      if (direction == "down") {
        v = iterate == 0 ? shadow_down(n, ck, cr) : iterate_shadow_down(n, ck, cr, iterate);
      } else {
        v = iterate == 0 ? shadow_up(n, ck, cr) : iterate_shadow_up(n, ck, cr, iterate);
      }
      output.emit(json{{"direction", direction}, {"n", cn}, {"k", ck}, {"r", cr}, {"iterate", iterate},
                       {"value", json_number(v)}},
                  to_string(v));
      return 0;
    };
  });

  // Complex-file commands.
  std::string path;
  auto* betti_cmd = app.add_subcommand("betti", "Reduced Betti numbers b_0 .. b_dim over F_p");
  betti_cmd->add_option("file", path, "Complex as JSON")->required();
  betti_cmd->callback([&] {
    action = [&] {
      const auto b = betti_vector(read_complex(path), PrimeField(prime));
      // b_{-1} is nonzero only for {∅}; it is left out of the output.
      std::vector<std::int64_t> shown(b.entries().begin() + 1, b.entries().end());
      std::string text;
      for (auto x : shown) text += (text.empty() ? "" : " ") + std::to_string(x);
      output.emit(json{{"betti", shown}}, text);
      return 0;
    };
  });

  auto* fvec = app.add_subcommand("fvec", "f-vector (f_{-1}, f_0, ..)");
  fvec->add_option("file", path)->required();
  fvec->callback([&] {
    action = [&] {
      const auto f = f_vector(read_complex(path));
      output.emit(json{{"f", numbers(f.entries())}}, join(f.entries()));
      return 0;
    };
  });

  auto* hvec = app.add_subcommand("hvec", "h-vector (h_0, .., h_d)");
  hvec->add_option("file", path)->required();
  hvec->callback([&] {
    action = [&] {
      const auto h = h_vector(f_vector(read_complex(path)));
      output.emit(json{{"h", numbers(h.entries())}}, join(h.entries()));
      return 0;
    };
  });

  std::string g6;
  auto* clique = app.add_subcommand("clique", "Clique complex of a graph6 graph");
  clique->add_option("graph6", g6)->required();
  clique->callback([&] {
    action = [&] {
      const auto g = from_graph6(g6);
      const auto c = clique_complex(g);
      output.emit(json{{"graph6", g6}, {"n", g.n()}, {"f", numbers(f_vector(c).entries())}, {"complex", to_json(c)}},
                  complex_table(c));
      return 0;
    };
  });

  int rd = 0;
  std::string top;
  std::vector<std::string> fparts;
  auto* revlex = app.add_subcommand("revlex", "Revlex balanced complex from a top count or an f-vector");
  revlex->add_option("--d", rd, "Number of colors")->required()->check(CLI::PositiveNumber);
  auto* top_opt = revlex->add_option("--top", top, "Number of top faces");
  auto* f_opt = revlex->add_option("--fvec", fparts, "f-vector f_{-1},f_0,..")->delimiter(',');
  top_opt->excludes(f_opt);
  revlex->callback([&] {
    action = [&] {
      std::optional<ColoredComplex> cc;
      if (!top.empty()) {
        const auto n = to_int64(parse_count(top));
        if (!n) throw Error(Errc::unsupported, "top count too large");
        cc = revlex_complex_top(*n, rd);
      } else if (!fparts.empty()) {
        std::vector<BigInt> entries;
        for (const auto& s : fparts) entries.push_back(parse_count(s));
        cc = revlex_complex_fvec(FVector(std::move(entries)), rd);
      } else {
        throw Error(Errc::domain, "revlex needs --top or --fvec");
      }
      output.emit(to_json(*cc), complex_table(cc->complex()));
      return 0;
    };
  });

  auto* sigma = app.add_subcommand("sigma", "The colored complex Σ built from a flag complex");
  sigma->add_option("file", path)->required();
  sigma->callback([&] {
    action = [&] {
      const auto s = build_sigma(read_complex(path));
      json peeled = json::array();
      for (const auto& v : s.peeled) peeled.push_back(to_string(v));
      std::ostringstream text;
      text << "v0 " << to_string(s.v0) << "\na";
      for (auto x : s.a) text << ' ' << x;
      text << '\n' << complex_table(s.sigma.complex());
      output.emit(json{{"v0", to_string(s.v0)}, {"peeled", peeled}, {"a", s.a}, {"sigma", to_json(s.sigma)}},
                  text.str());
      return 0;
    };
  });

  SuiteOptions verify_opts;
  std::string checks = "all";
  auto* verify = app.add_subcommand("verify", "Run the checks over a corpus and write a JSONL ledger");
  add_suite_options(verify, verify_opts);
  verify->add_option("--checks", checks, "all | theorems | conjectures | comma-separated names")
      ->capture_default_str();

  SuiteOptions scan_opts;
  scan_opts.n = 7;
  int scan_k = 0;
  auto* scan = app.add_subcommand("scan-conjecture", "Search the corpus for counterexamples to the conjectured bounds");
  add_suite_options(scan, scan_opts);
  scan->add_option("--k", scan_k, "Only test b_{k-1} for this k")->check(CLI::PositiveNumber);

  auto run = [&](const SuiteOptions& o, std::vector<CheckId> ids, std::optional<int> k, const char* ledger_name) {
    Corpus corpus = o.graph6.empty() ? Corpus::internal(o.n) : Corpus::from_graph6(o.graph6);
    if (o.balanced > 0) corpus = corpus.append_balanced(seed, o.balanced);
    SuiteConfig config;
    config.checks = std::move(ids);
    config.primes = o.primes;
    config.options.conjecture_k = k;
    config.ledger_path = o.ledger.empty() ? default_ledger(ledger_name) : std::optional<std::string>(o.ledger);
    config.resume = o.resume;
    config.timestamps = o.timestamps;
    config.stop_on_failure = !o.keep_going;
    config.workers = o.workers;
    if (o.max_instances > 0) config.max_instances = o.max_instances;
    if (o.progress) config.progress = &err;
    const auto summary = run_suite(corpus, config);
    json j{{"corpus", corpus.description()}};
    if (config.ledger_path) j["ledger"] = *config.ledger_path;
    const auto details = to_json(summary);
    for (const auto& [key, value] : details.items()) j[key] = value;
    output.emit(j, summary_table(summary, corpus.description()));
    return summary.failures.empty() ? 0 : 1;
  };
  verify->callback([&] {
    action = [&] { return run(verify_opts, parse_check_list(checks), std::nullopt, "verify.jsonl"); };
  });
  scan->callback([&] {
    action = [&] {
      return run(scan_opts, conjecture_checks(), scan_k > 0 ? std::optional<int>(scan_k) : std::nullopt,
                 "scan-conjecture.jsonl");
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  output.format = as_json ? Format::json : format_name == "csv" ? Format::csv : format_name == "json" ? Format::json : Format::table;
  try {
    if (!is_prime(prime)) throw Error(Errc::domain, "p = " + std::to_string(prime) + " is not a supported prime");
    return action ? action() : 2;
  } catch (const Error& e) {
    if (output.format == Format::json) {
      err << json{{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}}.dump() << '\n';
    } else {
      err << "error: " << e.what() << '\n';
    }
    return 1;
  }
}

}  // namespace flagcx::cli

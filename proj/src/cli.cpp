#include "wlplab/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "wlplab/catalog.hpp"
#include "wlplab/indpoly.hpp"
#include "wlplab/rank_kernels.hpp"
#include "wlplab/spec_parser.hpp"

namespace wlplab::cli {

namespace {

using Clock = std::chrono::steady_clock;

int resolve_workers(int requested, std::size_t count) {
  int w = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (w < 1) w = 1;
  if (static_cast<std::size_t>(w) > count) w = static_cast<int>(std::max<std::size_t>(count, 1));
  return w;
}

std::string describe(const WlpVerdict& v) {
  if (!v.complete) return "incomplete (basis budget exceeded)";
  if (v.has_wlp) return "wlp";
  std::string s = "no wlp; deficient {";
  bool first = true;
  for (const auto& r : v.records) {
    if (r.max_rank()) continue;
    s += first ? "" : ",";
    first = false;
    s += std::to_string(r.k) + ":";
    if (r.injective_fail) s += "i";
    if (r.surjective_fail) s += "s";
  }
  return s + "}";
}

std::string describe(const catalog::ClassificationEntry& e) {
  if (e.expected_wlp) return "wlp";
  std::string s = "no wlp; fails {";
  for (std::size_t i = 0; i < e.expected_failures.size(); ++i) {
    const auto& f = e.expected_failures[i];
    s += (i ? "," : "") + std::to_string(f.degree) + ":" + (f.sense == FailureSense::Surjective ? "s" : "i");
  }
  return s + "}";
}

template <class F>
CaseOutcome timed(std::string name, F&& body) {
  CaseOutcome c;
  c.name = std::move(name);
  const auto t0 = Clock::now();
  body(c);
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return c;
}

// Runs the builders on the pool and collects the outcomes in input order.
ReproductionReport collect(std::string target, std::vector<std::function<CaseOutcome()>> builders, int workers) {
  ReproductionReport rep;
  rep.target = std::move(target);
  rep.cases.resize(builders.size());
  for_each_index(builders.size(), workers, [&](std::size_t i) { rep.cases[i] = builders[i](); });
  return rep;
}

// ---- targets ----------------------------------------------------------------

ReproductionReport table1() {
  ReproductionReport rep;
  rep.target = "table1";
  const ClosedFormKind kinds[] = {ClosedFormKind::Path, ClosedFormKind::Cycle, ClosedFormKind::Ce,
                                  ClosedFormKind::Pan};
  const auto& rows = catalog::mode_table();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t col = 0; col < rows[r].modes.size(); ++col) {
      const long n = static_cast<long>(col) + 1;
      const auto cell = rows[r].modes[col];
      rep.cases.push_back(timed(rows[r].symbol + "_" + std::to_string(n), [&](CaseOutcome& c) {
        c.expected = cell ? std::to_string(*cell) : "-";
        std::optional<std::size_t> mode;
        try {
          mode = unimodality_report(closed_form(kinds[r], n)).mode;
        } catch (const ConstraintError&) {
          // outside the family's domain: the table shows a dash
        }
        c.computed = mode ? std::to_string(*mode) : "-";
        c.pass = mode == cell;
        if (mode && (kinds[r] == ClosedFormKind::Path || kinds[r] == ClosedFormKind::Cycle)) {
          const auto f = mode_formula(kinds[r] == ClosedFormKind::Path ? ModeKind::Path : ModeKind::Cycle, n);
          if (f != *mode) {
            c.pass = false;
            c.computed += " (formula " + std::to_string(f) + ")";
          }
        }
      }));
    }
  }
  return rep;
}

CaseOutcome family_case(catalog::Kind kind, long n, const WlpOptions& wlp) {
  const std::string spec = to_string(catalog::family_spec(kind, n));
  return timed(spec, [&](CaseOutcome& c) {
    const auto v = wlp_check(catalog::family_graph(kind, n), wlp, spec);
    c.computed = describe(v);
    if (n <= catalog::max_tabulated_n(kind)) {
      const auto e = catalog::entry(kind, n);
      c.expected = describe(e);
      c.pass = catalog::compare(e, v).ok();
      return;
    }
    const auto claim = catalog::asymptotic_surjectivity_claim(kind, n);
    c.expected = "no wlp; fails " + std::to_string(claim.degree) + ":" +
                 (claim.sense == FailureSense::Surjective ? "s" : "i");
    const auto& r = v.records.at(claim.degree);
    c.pass = v.complete && !v.has_wlp &&
             (claim.sense == FailureSense::Surjective ? r.surjective_fail : r.injective_fail);
  });
}

ReproductionReport family_target(const std::string& target, catalog::Kind kind, long default_max,
                                 const ReproduceOptions& o) {
  long hi = o.max_n > 0 ? o.max_n : default_max;
  std::vector<std::function<CaseOutcome()>> builders;
  for (long n = catalog::min_n(kind); n <= hi; ++n) {
    // beyond the listings only the asymptotic claims make a prediction
    if (n > catalog::max_tabulated_n(kind)) {
      try {
        catalog::asymptotic_surjectivity_claim(kind, n);
      } catch (const catalog::NotTabulated&) {
        continue;
      }
    }
    builders.push_back([kind, n, &o] { return family_case(kind, n, o.wlp); });
  }
  return collect(target, std::move(builders), o.workers);
}

ReproductionReport prop_path_inj(const ReproduceOptions& o) {
  const long hi = o.max_n > 0 ? o.max_n : 16;
  std::vector<std::function<CaseOutcome()>> builders;
  for (long n = 12; n <= hi; ++n) {
    const auto claim = catalog::path_injectivity_claim(n);
    if (!claim) continue;
    builders.push_back([n, claim, &o] {
      return timed("path:" + std::to_string(n), [&](CaseOutcome& c) {
        c.expected = "injective fails at " + std::to_string(claim->degree);
        const auto r = degree_rank(path_graph(n), claim->degree, o.wlp);
        c.computed = "rank " + std::to_string(r.rank) + " of " + std::to_string(r.h_k) + " -> " +
                     std::to_string(r.h_k1) + (r.certified ? "" : " (uncertified)");
        c.pass = r.injective_fail && (r.certified || o.wlp.certify == CertifyMode::Fast);
      });
    });
  }
  return collect("prop-path-inj", std::move(builders), o.workers);
}

ReproductionReport lemma_modes(const ReproduceOptions& o) {
  const long hi = o.max_n > 0 ? o.max_n : 500;
  // cache every mode needed, up to n + 11
  std::vector<long> lam(hi + 12), rho(hi + 1), chi(hi + 2), zeta(hi + 1);
  for (long n = 1; n <= hi + 11; ++n) lam[n] = static_cast<long>(catalog::lambda(n));
  for (long n = 3; n <= hi; ++n) rho[n] = static_cast<long>(catalog::rho(n));
  for (long n = 4; n <= hi + 1; ++n) chi[n] = static_cast<long>(catalog::chi(n));
  for (long n = 3; n <= hi; ++n) zeta[n] = static_cast<long>(catalog::zeta(n));

  ReproductionReport rep;
  rep.target = "lemma-modes";
  auto sweep = [&](std::string name, long lo, const std::function<bool(long)>& holds) {
    rep.cases.push_back(timed(std::move(name), [&](CaseOutcome& c) {
      c.expected = "holds for n=" + std::to_string(lo) + ".." + std::to_string(hi);
      long bad = 0;
      for (long n = lo; n <= hi && !bad; ++n)
        if (!holds(n)) bad = n;
      c.pass = bad == 0;
      c.computed = c.pass ? c.expected : "violated at n=" + std::to_string(bad);
    }));
  };
  sweep("lambda closed form = formula", 1, [&](long n) {
    return unimodality_report(closed_form(ClosedFormKind::Path, n)).mode == static_cast<std::size_t>(lam[n]);
  });
  sweep("rho closed form = formula", 3, [&](long n) {
    return unimodality_report(closed_form(ClosedFormKind::Cycle, n)).mode == static_cast<std::size_t>(rho[n]);
  });
  sweep("lambda_{n+1} >= lambda_n", 1, [&](long n) { return lam[n + 1] >= lam[n]; });
  sweep("lambda_{n+3}-1 <= lambda_n <= lambda_{n+4}-1", 1,
        [&](long n) { return lam[n + 3] - 1 <= lam[n] && lam[n] <= lam[n + 4] - 1; });
  sweep("lambda_{n+11} >= lambda_n+3", 1, [&](long n) { return lam[n + 11] >= lam[n] + 3; });
  sweep("lambda_{n-1} <= rho_n <= lambda_{n-4}+1 <= lambda_n", 5, [&](long n) {
    return lam[n - 1] <= rho[n] && rho[n] <= lam[n - 4] + 1 && lam[n - 4] + 1 <= lam[n];
  });
  sweep("lambda_{n-1} <= chi_n <= lambda_{n-4}+1", 5,
        [&](long n) { return lam[n - 1] <= chi[n] && chi[n] <= lam[n - 4] + 1; });
  sweep("chi_{n+1} <= zeta_n <= rho_n+1 <= lambda_n+1 <= chi_{n+1}+1", 5, [&](long n) {
    return chi[n + 1] <= zeta[n] && zeta[n] <= rho[n] + 1 && rho[n] <= lam[n] && lam[n] <= chi[n + 1];
  });
  return rep;
}

ReproductionReport ex_en_charp(const ReproduceOptions& o) {
  std::vector<std::function<CaseOutcome()>> builders;
  auto add = [&](long n, std::uint64_t p, bool expected) {
    builders.push_back([n, p, expected, &o] {
      return timed("empty:" + std::to_string(n) + " char " + std::to_string(p), [&](CaseOutcome& c) {
        WlpOptions w = o.wlp;
        w.characteristic = p;
        const auto v = wlp_check(empty_graph(n), w);
        c.expected = expected ? "wlp" : "no wlp";
        c.computed = v.has_wlp ? "wlp" : "no wlp";
        c.pass = v.has_wlp == expected;
      });
    });
  };
  for (long n = 5; n <= 10; ++n)
    for (std::uint64_t p : {3, 5, 7, 11, 13}) add(n, p, static_cast<long>(p) >= (n + 3) / 2);
  for (long n = 2; n <= 8; ++n) add(n, 2, n == 3);
  return collect("ex-en-charp", std::move(builders), o.workers);
}

ReproductionReport ex_bk_nonunimodal() {
  ReproductionReport rep;
  rep.target = "ex-bk-nonunimodal";
  rep.cases.push_back(timed("bk:95,150", [](CaseOutcome& c) {
    const auto rep95 = unimodality_report(closed_form_bk(95, 150));
    c.expected = "not unimodal";
    c.computed = rep95.is_unimodal ? "unimodal, mode " + std::to_string(*rep95.mode) : "not unimodal";
    c.pass = !rep95.is_unimodal;
  }));
  for (long n = 2; n <= 7; ++n) {
    for (long m = 1; m < n; ++m) {
      rep.cases.push_back(timed("bk:" + std::to_string(m) + "," + std::to_string(n), [&](CaseOutcome& c) {
        const auto formula = closed_form_bk(m, n);
        const auto oracle = indpoly_enum(bk_graph(m, n));
        c.expected = oracle.to_string();
        c.computed = formula.to_string();
        c.pass = formula == oracle;
      }));
    }
  }
  return rep;
}

// Every nonincreasing size sequence with parts in 1..4 and 1..4 parts.
void partitions(std::vector<long>& cur, long max_part, std::vector<std::vector<long>>& out) {
  if (!cur.empty()) out.push_back(cur);
  if (cur.size() == 4) return;
  for (long s = max_part; s >= 1; --s) {
    cur.push_back(s);
    partitions(cur, s, out);
    cur.pop_back();
  }
}

ReproductionReport prop_complete_unions(const ReproduceOptions& o) {
  std::vector<std::vector<long>> parts;
  std::vector<long> cur;
  partitions(cur, 4, parts);
  std::vector<std::function<CaseOutcome()>> builders;
  for (const auto& sizes : parts) {
    builders.push_back([sizes, &o] {
      FamilySpec spec = family(FamilyKind::Complete, {sizes[0]});
      for (std::size_t i = 1; i < sizes.size(); ++i) spec = union_of(spec, family(FamilyKind::Complete, {sizes[i]}));
      const auto text = to_string(spec);
      return timed(text, [&](CaseOutcome& c) {
        const std::size_t r = sizes.size();
        const bool rest_singletons = std::all_of(sizes.begin() + 1, sizes.end(), [](long s) { return s == 1; });
        const bool tail_singletons =
            r < 3 || std::all_of(sizes.begin() + 2, sizes.end(), [](long s) { return s == 1; });
        const bool expected = rest_singletons || (tail_singletons && r % 2 == 1);
        WlpOptions w = o.wlp;
        if (w.characteristic == 2) w.characteristic = 0;
        const auto v = wlp_check(make_family(spec), w, text);
        c.expected = expected ? "wlp" : "no wlp";
        c.computed = v.has_wlp ? "wlp" : "no wlp";
        c.pass = v.complete && v.has_wlp == expected;
      });
    });
  }
  return collect("prop-complete-unions", std::move(builders), o.workers);
}

// ---- output -----------------------------------------------------------------

enum class Format { Table, Json, Csv };

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

void print_verdict(const WlpVerdict& v, Format f, std::ostream& out, bool header) {
  if (f == Format::Json) {
    out << v.to_json().dump() << "\n";
    return;
  }
  if (f == Format::Csv) {
    if (header) out << "spec,characteristic,k,h_k,h_k1,rank,injective_fail,surjective_fail,method,certified\n";
    for (const auto& r : v.records)
      out << csv_field(v.spec) << "," << v.characteristic << "," << r.k << "," << r.h_k << "," << r.h_k1 << ","
          << r.rank << "," << r.injective_fail << "," << r.surjective_fail << "," << to_string(r.method) << ","
          << r.certified << "\n";
    return;
  }
  out << v.spec << "  char " << v.characteristic << "  socle degree " << v.socle_degree << "  has_wlp "
      << (v.has_wlp ? "true" : "false") << (v.complete ? "" : " (incomplete)") << "\n";
  out << "     k      h_k     h_k1     rank  inj  surj  method\n";
  for (const auto& r : v.records) {
    out << std::setw(6) << r.k << std::setw(9) << r.h_k << std::setw(9) << r.h_k1 << std::setw(9) << r.rank
        << std::setw(5) << (r.injective_fail ? "x" : ".") << std::setw(6) << (r.surjective_fail ? "x" : ".") << "  "
        << to_string(r.method) << (r.certified ? "" : " (uncertified)")
        << (r.budget_exceeded ? " (budget)" : "") << "\n";
  }
}

void print_report(const ReproductionReport& rep, Format f, std::ostream& out) {
  if (f == Format::Json) {
    out << rep.to_json().dump() << "\n";
    return;
  }
  if (f == Format::Csv) {
    out << "target,case,expected,computed,pass,seconds\n";
    for (const auto& c : rep.cases)
      out << rep.target << "," << csv_field(c.name) << "," << csv_field(c.expected) << "," << csv_field(c.computed)
          << "," << c.pass << "," << c.seconds << "\n";
    return;
  }
  out << "reproduce " << rep.target << ": " << rep.passed() << "/" << rep.cases.size() << " cases pass\n";
  for (const auto& c : rep.cases) {
    out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(34) << c.name << std::right
        << " expected " << c.expected << "; computed " << c.computed << "  [" << std::fixed << std::setprecision(3)
        << c.seconds << "s]\n";
    out.unsetf(std::ios::floatfield);
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::size_t ReproductionReport::passed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.pass; }));
}

nlohmann::json ReproductionReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : cases)
    cs.push_back({{"case", c.name},
                  {"expected", c.expected},
                  {"computed", c.computed},
                  {"pass", c.pass},
                  {"seconds", c.seconds}});
  return {{"target", target}, {"passed", passed()}, {"failed", failed()}, {"pass", pass()}, {"cases", cs}};
}

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> names{"table1",      "thm-paths",   "thm-cycles",        "thm-ce",
                                              "thm-pan",     "cor-tadpole", "prop-path-inj",     "lemma-modes",
                                              "ex-en-charp", "ex-bk-nonunimodal", "prop-complete-unions"};
  return names;
}

ReproductionReport reproduce(const std::string& target, const ReproduceOptions& o) {
  using catalog::Kind;
  if (target == "table1") return table1();
  if (target == "thm-paths") return family_target(target, Kind::Path, 17, o);
  if (target == "thm-cycles") return family_target(target, Kind::Cycle, 17, o);
  if (target == "thm-ce") return family_target(target, Kind::Ce, 16, o);
  if (target == "thm-pan") return family_target(target, Kind::Pan, 16, o);
  if (target == "cor-tadpole") return family_target(target, Kind::Tadpole3, 14, o);
  if (target == "prop-path-inj") return prop_path_inj(o);
  if (target == "lemma-modes") return lemma_modes(o);
  if (target == "ex-en-charp") return ex_en_charp(o);
  if (target == "ex-bk-nonunimodal") return ex_bk_nonunimodal();
  if (target == "prop-complete-unions") return prop_complete_unions(o);
  throw UnknownTarget("unknown reproduce target '" + target + "'");
}

void for_each_index(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  const int w = resolve_workers(workers, count);
  if (w == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < w; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::string VerdictCache::key(const std::string& spec, std::uint64_t characteristic, CertifyMode certify) {
  return spec + "|char=" + std::to_string(characteristic) + "|certify=" + to_string(certify);
}

std::optional<WlpVerdict> VerdictCache::lookup(const std::string& key) const {
  std::ifstream in(path_);
  std::optional<WlpVerdict> found;
  std::string line;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || j.value("key", "") != key) continue;
    try {
      found = WlpVerdict::from_json(j.at("verdict"));
    } catch (const std::exception&) {
      // stale or hand-edited line
    }
  }
  return found;
}

void VerdictCache::store(const std::string& key, const WlpVerdict& verdict) const {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to cache file " + path_);
  nlohmann::json line{{"key", key}, {"verdict", verdict.to_json()}, {"timestamp", utc_timestamp()},
                      {"version", kVersion}};
  out << line.dump() << "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak Lefschetz property of the algebras A(G) attached to graphs"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string format = "table";
  std::uint64_t characteristic = 0;
  std::string certify = "auto";
  std::uint64_t seed = 0x5eed;
  std::size_t max_basis = 10000;
  int threads = 0;
  std::string cache_path;
  bool override_budget = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->envname("WLPLAB_FORMAT");
  app.add_option("--char", characteristic, "Characteristic: 0 or a prime")->envname("WLPLAB_CHAR");
  app.add_option("--certify", certify, "Certification of characteristic-0 ranks")
      ->check(CLI::IsMember({"auto", "exact", "fast"}))
      ->envname("WLPLAB_CERTIFY");
  app.add_option("--seed", seed, "Seed for the random primes")->envname("WLPLAB_SEED");
  app.add_option("--max-basis", max_basis, "Largest basis whose rank deficiency is certified")
      ->envname("WLPLAB_MAX_BASIS");
  app.add_option("--threads", threads, "Worker threads (0 = all cores)")->envname("WLPLAB_THREADS");
  app.add_option("--cache", cache_path, "JSON-lines verdict cache")->envname("WLPLAB_CACHE");
  app.add_flag("--override-budget", override_budget, "Certify regardless of --max-basis")
      ->envname("WLPLAB_OVERRIDE_BUDGET");

  auto* indpoly_cmd = app.add_subcommand("indpoly", "Independence polynomial of a graph");
  std::string spec_text;
  std::string method = "rec";
  indpoly_cmd->add_option("spec", spec_text, "Graph spec")->required();
  indpoly_cmd->add_option("--method", method, "rec or enum")->check(CLI::IsMember({"rec", "enum"}));
  indpoly_cmd->fallthrough();

  auto* mode_cmd = app.add_subcommand("mode", "Mode of the independence polynomial");
  mode_cmd->add_option("spec", spec_text, "Graph spec")->required();
  mode_cmd->fallthrough();

  auto* wlp_cmd = app.add_subcommand("wlp", "Decide the WLP of A(G)");
  std::vector<std::string> specs;
  wlp_cmd->add_option("spec", specs, "Graph specs")->required();
  wlp_cmd->fallthrough();

  auto* hq_cmd = app.add_subcommand("hilbert-quotient", "Hilbert series of A(G)/(l)");
  hq_cmd->add_option("spec", spec_text, "Graph spec")->required();
  hq_cmd->fallthrough();

  auto* graph_cmd = app.add_subcommand("graph", "Print the edge list of a graph spec");
  graph_cmd->add_option("spec", spec_text, "Graph spec")->required();
  graph_cmd->fallthrough();

  auto* repro_cmd = app.add_subcommand("reproduce", "Compare the engine against the catalogued results");
  std::string target;
  long max_n = 0;
  repro_cmd->add_option("target", target, "Target name")->required()->check(CLI::IsMember(reproduce_targets()));
  repro_cmd->add_option("--max-n", max_n, "Upper end of the swept range");
  repro_cmd->fallthrough();

  auto* catalog_cmd = app.add_subcommand("catalog", "Classification catalog");
  auto* export_cmd = catalog_cmd->add_subcommand("export", "Write the catalog as JSON");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->fallthrough();
  export_cmd->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const Format fmt = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;
  WlpOptions wo;
  wo.characteristic = characteristic;
  wo.certify = parse_certify_mode(certify);
  wo.seed = seed;
  wo.max_basis = max_basis;
  wo.override_budget = override_budget;
  wo.threads = threads;

  try {
    if (characteristic != 0 && !kernels::is_prime(characteristic)) {
      err << "error: --char must be 0 or a prime\n";
      return 2;
    }

    if (*indpoly_cmd) {
      const auto spec = parse_family_spec(spec_text);
      const auto g = make_family(spec);
      const auto p = method == "enum" ? indpoly_enum(g) : indpoly_rec(g);
      if (fmt == Format::Json) {
        out << nlohmann::json{{"spec", to_string(spec)}, {"coefficients", p.to_json()}}.dump() << "\n";
      } else if (fmt == Format::Csv) {
        out << "k,coefficient\n";
        for (std::size_t k = 0; k < p.size(); ++k) out << k << "," << p[k].get_str() << "\n";
      } else {
        out << p.to_string() << "\n";
      }
      return 0;
    }

    if (*mode_cmd) {
      const auto spec = parse_family_spec(spec_text);
      const auto r = unimodality_report(indpoly_rec(make_family(spec)));
      if (fmt == Format::Json) {
        nlohmann::json j{{"spec", to_string(spec)}, {"unimodal", r.is_unimodal}};
        j["mode"] = r.mode ? nlohmann::json(*r.mode) : nlohmann::json(nullptr);
        out << j.dump() << "\n";
      } else if (fmt == Format::Csv) {
        out << "spec,unimodal,mode\n"
            << csv_field(to_string(spec)) << "," << r.is_unimodal << "," << (r.mode ? std::to_string(*r.mode) : "")
            << "\n";
      } else {
        out << (r.mode ? std::to_string(*r.mode) : "not unimodal") << "\n";
      }
      return r.is_unimodal ? 0 : 1;
    }

    if (*wlp_cmd) {
      std::vector<FamilySpec> parsed;
      for (const auto& s : specs) parsed.push_back(parse_family_spec(s));
      std::optional<VerdictCache> cache;
      if (!cache_path.empty()) cache.emplace(cache_path);
      std::vector<WlpVerdict> verdicts(parsed.size());
      const int workers = resolve_workers(threads, parsed.size());
      WlpOptions inner = wo;
      // nested parallelism only when a single spec is being decided
      if (workers > 1) inner.threads = 1;
      std::mutex cache_mutex;
      for_each_index(parsed.size(), workers, [&](std::size_t i) {
        const auto text = to_string(parsed[i]);
        const auto key = VerdictCache::key(text, wo.characteristic, wo.certify);
        if (cache) {
          std::lock_guard lock(cache_mutex);
          if (auto hit = cache->lookup(key)) {
            verdicts[i] = *hit;
            return;
          }
        }
        verdicts[i] = wlp_check(make_family(parsed[i]), inner, text);
        if (cache && verdicts[i].complete) {
          std::lock_guard lock(cache_mutex);
          cache->store(key, verdicts[i]);
        }
      });
      bool all = true;
      for (std::size_t i = 0; i < verdicts.size(); ++i) {
        print_verdict(verdicts[i], fmt, out, i == 0);
        all = all && verdicts[i].has_wlp;
      }
      return all ? 0 : 1;
    }

    if (*hq_cmd) {
      const auto spec = parse_family_spec(spec_text);
      const auto q = hilbert_quotient(make_family(spec), wo);
      if (fmt == Format::Json) {
        out << nlohmann::json{{"spec", to_string(spec)}, {"coefficients", q.to_json()}}.dump() << "\n";
      } else if (fmt == Format::Csv) {
        out << "k,coefficient\n";
        for (std::size_t k = 0; k < q.size(); ++k) out << k << "," << q[k].get_str() << "\n";
      } else {
        out << q.to_string() << "\n";
      }
      return 0;
    }

    if (*graph_cmd) {
      out << write_edge_list(parse_spec(spec_text));
      return 0;
    }

    if (*repro_cmd) {
      ReproduceOptions ro;
      ro.wlp = wo;
      ro.max_n = max_n;
      ro.workers = threads;
      if (resolve_workers(threads, 2) > 1) ro.wlp.threads = 1;
      const auto rep = reproduce(target, ro);
      print_report(rep, fmt, out);
      return rep.pass() ? 0 : 1;
    }

    if (*export_cmd) {
      out << catalog::export_json().dump(2) << "\n";
      return 0;
    }
  } catch (const SpecSyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConstraintError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownTarget& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace wlplab::cli

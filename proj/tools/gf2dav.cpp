// gf2dav: Davenport constants of the multiplicative semigroup of GF(2)[x]/(f).
//
// Exit codes: 0 success, 1 falsified invariant, 2 usage/parse error,
// 3 search budget exhausted, 4 input certified irreducible.

#include <atomic>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "gf2dav/poly.hpp"
#include "gf2dav/reduce.hpp"
#include "gf2dav/report.hpp"
#include "gf2dav/ring.hpp"
#include "gf2dav/suites.hpp"
#include "gf2dav/zerosum.hpp"

namespace {

using namespace gf2dav;

constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIrreducible = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Poly parse_modulus(const std::string& text) {
  Poly f = parse(text);
  if (f.degree() < 1) throw UsageError("modulus must be nonconstant: " + text);
  if (f.degree() > RingCtx::kMaxDegree)
    throw UsageError("modulus degree exceeds " + std::to_string(RingCtx::kMaxDegree));
  return f;
}

int cmd_factor(const std::string& ftext) {
  std::cout << factor_report(parse_modulus(ftext)) << '\n';
  return 0;
}

int cmd_info(const std::string& ftext) {
  const RingCtx ctx(parse_modulus(ftext));
  const auto delta = delta_f(ctx.modulus());
  Json j;
  j["f"] = format(ctx.modulus());
  j["hex"] = format_hex(ctx.modulus());
  j["degree"] = ctx.degree();
  j["size"] = ctx.size();
  j["factorization"] = format_factorization(ctx.factorization());
  Json pp = Json::array();
  for (const auto& p : ctx.prime_powers()) pp.push_back(format(p));
  j["prime_powers"] = pp;
  j["n_x"] = ctx.n_x();
  j["n_x_plus_1"] = ctx.n_x_plus_1();
  j["delta"] = delta.value;
  j["gcd_x_x1"] = format(delta.gcd_with_x_x1);
  j["unit_count"] = ctx.unit_count();
  j["notation"] = "multiplicative; the semigroup identity is the residue 1";
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_davenport(const std::string& ftext, const std::string& target, std::uint64_t budget, bool fast_path) {
  const RingCtx ctx(parse_modulus(ftext));
  Json j;
  j["f"] = format(ctx.modulus());
  const int delta = delta_f(ctx.modulus()).value;
  std::optional<int> ds, du;
  try {
    if (target == "semigroup" || target == "both") {
      const auto r = davenport_semigroup(ctx, budget);
      ds = r.value;
      j["D_S"] = r.value;
      j["d_S"] = r.value - 1;
      j["extremal_S"] = to_json(r.extremal);
      j["nodes_S"] = r.nodes;
    }
    if (target == "units" || target == "both") {
      const auto r = davenport_group(unit_group_table(ctx), {budget, fast_path});
      du = r.value;
      j["D_U"] = r.value;
      j["provenance_U"] = to_string(r.provenance);
      j["extremal_U"] = to_json(r.extremal);
      j["nodes_U"] = r.nodes;
    }
  } catch (const BudgetExceeded& e) {
    Json err;
    err["f"] = format(ctx.modulus());
    err["error"] = "budget_exceeded";
    err["lower_bound"] = e.lower_bound();
    err["nodes"] = e.nodes();
    std::cout << err.dump() << '\n';
    return kExitBudget;
  }
  j["delta"] = delta;
  if (ds && du) {
    j["gap"] = *ds - *du;
    j["bound_ok"] = *du <= *ds && *ds <= *du + delta;
  }
  std::cout << j.dump() << '\n';
  if (ds && du && !(*du <= *ds && *ds <= *du + delta)) return kExitFalsified;
  return 0;
}

int cmd_reduce(const std::string& ftext, const std::vector<std::string>& terms, bool exact_v) {
  const RingCtx ctx(parse_modulus(ftext));
  std::vector<Elem> elems;
  for (const auto& t : terms) elems.push_back(ctx.elem(parse(t)));
  const Seq seq(std::move(elems));
  try {
    const auto tr = reduce_sequence(ctx, seq, {exact_v});
    std::cout << to_json(ctx, tr).dump() << '\n';
    return 0;
  } catch (const IrreducibleInput& e) {
    Json j;
    j["f"] = format(ctx.modulus());
    j["irreducible"] = true;
    j["sequence"] = to_json(e.sequence());
    j["sigma"] = format(e.sigma());
    j["proper_product_count"] = e.proper_product_count();
    std::cout << j.dump() << '\n';
    return kExitIrreducible;
  }
}

struct VerifyFlags {
  int max_degree = 4;
  unsigned jobs = 1;
  std::string cache_dir;
  std::uint64_t budget = kDefaultBudget;
  bool budget_given = false;
  bool fast_path = false;
  bool timings = false;
  bool subgroup_inequality = false;
  bool stabilizers = false;
  bool small_davenport = false;
  bool symmetry = false;
};

struct Job {
  Poly f;
  std::optional<std::string> line{};
  std::optional<int> budget_lower_bound{};
  std::vector<SuiteOutcome> suites{};
};

int cmd_verify(const VerifyFlags& fl) {
  if (fl.max_degree < 1) throw UsageError("--max-degree must be at least 1");
  if (fl.max_degree > 6) throw UsageError("--max-degree above 6 is not supported");
  if (fl.max_degree > 4 && (!fl.budget_given || !fl.fast_path))
    throw UsageError("degrees 5-6 need an explicit --budget and --cyclic-fast-path");

  const RecordOptions ropts{fl.budget, fl.fast_path, fl.timings};
  std::optional<RecordCache> cache;
  if (!fl.timings) cache = RecordCache::open(fl.cache_dir);

  std::vector<Job> jobs;
  for (int d = 1; d <= fl.max_degree; ++d)
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << d); ++low) jobs.push_back(Job{.f = Poly((std::uint64_t{1} << d) | low)});

  std::mutex warn_mu;
  auto run_one = [&](Job& job) {
    const RingCtx ctx(job.f);
    if (cache) {
      std::ostringstream warn;
      job.line = cache->load(job.f, ropts, warn);
      if (!warn.str().empty()) {
        std::lock_guard lock(warn_mu);
        std::cerr << warn.str();
      }
    }
    int d_s = 0;
    if (!job.line) {
      try {
        const auto rec = compute_record(ctx, ropts);
        job.line = record_line(rec);
        if (cache) cache->store(job.f, ropts, *job.line);
      } catch (const BudgetExceeded& e) {
        job.budget_lower_bound = e.lower_bound();
        return;
      }
    }
    d_s = Json::parse(*job.line).at("D_S").get<int>();
    if (fl.subgroup_inequality) job.suites.push_back(check_subgroup_inequality(ctx, fl.budget));
    if (fl.stabilizers) job.suites.push_back(check_stabilizer_order(ctx));
    if (fl.small_davenport) job.suites.push_back(check_small_davenport(ctx, d_s));
  };

  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1U, fl.jobs);
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex fail_mu;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) {
        try {
          run_one(jobs[i]);
        } catch (...) {
          std::lock_guard lock(fail_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  // Records are written by this thread alone, in enumeration order.
  bool falsified = false;
  std::size_t budget_hits = 0;
  std::size_t ok_count = 0;
  std::map<int, std::map<int, std::size_t>> gaps;
  std::map<std::string, Json> by_f;
  std::map<std::string, SuiteOutcome> suite_totals;
  for (const auto& job : jobs) {
    if (!job.line) {
      Json err;
      err["f"] = format(job.f);
      err["error"] = "budget_exceeded";
      err["lower_bound_D"] = *job.budget_lower_bound;
      std::cout << err.dump() << '\n';
      ++budget_hits;
      continue;
    }
    std::cout << *job.line << '\n';
    const Json rec = Json::parse(*job.line);
    if (rec.at("bound_ok").get<bool>()) {
      ++ok_count;
    } else {
      falsified = true;
    }
    ++gaps[rec.at("delta").get<int>()][rec.at("gap").get<int>()];
    by_f[rec.at("f").get<std::string>()] = rec;
    for (const auto& s : job.suites) {
      auto& tot = suite_totals.try_emplace(s.name, SuiteOutcome{.name = s.name}).first->second;
      tot.checks += s.checks;
      tot.notes += s.notes;
      for (const auto& f : s.failures) tot.fail(f);
      if (!s.ok) tot.ok = false;
    }
  }

  Json summary;
  summary["records"] = jobs.size() - budget_hits;
  summary["bound_ok"] = ok_count;
  summary["budget_exceeded"] = budget_hits;
  Json gj = Json::object();
  for (const auto& [delta, m] : gaps) {
    Json inner = Json::object();
    for (const auto& [gap, n] : m) inner[std::to_string(gap)] = n;
    gj[std::to_string(delta)] = inner;
  }
  summary["gaps_by_delta"] = gj;

  Json suites = Json::object();
  for (const auto& [name, s] : suite_totals) {
    suites[name] = {{"ok", s.ok}, {"checks", s.checks}, {"notes", s.notes}, {"failures", s.failures}};
    if (!s.ok) falsified = true;
  }
  if (fl.symmetry) {
    // x -> x+1 is a ring automorphism, so images must share D_S, D_U, delta.
    SuiteOutcome sym{.name = "symmetry"};
    for (const auto& [fs, rec] : by_f) {
      const std::string img = format(shift_argument(parse(fs)));
      const auto it = by_f.find(img);
      if (it == by_f.end()) continue;
      ++sym.checks;
      for (const char* key : {"D_S", "D_U", "delta"})
        if (rec.at(key) != it->second.at(key)) sym.fail(fs + " vs " + img + ": " + key);
    }
    suites["symmetry"] = {{"ok", sym.ok}, {"checks", sym.checks}, {"notes", 0}, {"failures", sym.failures}};
    if (!sym.ok) falsified = true;
  }
  if (!suites.empty()) summary["suites"] = suites;
  std::cout << Json{{"summary", summary}}.dump() << '\n';

  if (falsified) return kExitFalsified;
  if (budget_hits > 0) return kExitBudget;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Davenport constants of the multiplicative semigroup of GF(2)[x]/(f)"};
  app.require_subcommand(1);

  std::string ftext;
  auto* factor_cmd = app.add_subcommand("factor", "Irreducible factorization of f");
  factor_cmd->add_option("f", ftext, "Polynomial, e.g. x^4+x^2 or 0x14")->required();

  auto* info_cmd = app.add_subcommand("info", "Structure of GF(2)[x]/(f)");
  info_cmd->add_option("f", ftext, "Modulus")->required();

  std::string target = "both";
  std::uint64_t budget = kDefaultBudget;
  bool fast_path = false;
  auto* dav_cmd = app.add_subcommand("davenport", "Davenport constants D(S_R) and D(U(S_R))");
  dav_cmd->add_option("f", ftext, "Modulus")->required();
  dav_cmd->add_option("--target", target, "semigroup, units or both")
      ->check(CLI::IsMember({"semigroup", "units", "both"}));
  dav_cmd->add_option("--budget", budget, "DFS node budget");
  dav_cmd->add_flag("--cyclic-fast-path", fast_path, "Use D(C_m) = m for cyclic unit groups when the budget runs out");

  std::vector<std::string> terms;
  bool exact_v = false;
  auto* red_cmd = app.add_subcommand("reduce", "Reduce a sequence to a proper subsequence with the same product");
  red_cmd->add_option("f", ftext, "Modulus")->required();
  red_cmd->add_option("terms", terms, "Sequence terms");
  red_cmd->add_flag("--exact-v", exact_v, "Use a globally shortest V (at most 20 terms)");

  VerifyFlags vf;
  auto* ver_cmd = app.add_subcommand("verify", "Check the D(S_R) bounds for every f up to a degree");
  ver_cmd->add_option("--max-degree", vf.max_degree, "Largest degree of f (default 4)");
  ver_cmd->add_option("-j,--jobs", vf.jobs, "Worker threads");
  ver_cmd->add_option("--cache-dir", vf.cache_dir, "Record cache directory (default $DAVENPORT_CACHE)");
  auto* budget_opt = ver_cmd->add_option("--budget", vf.budget, "DFS node budget per search");
  ver_cmd->add_flag("--cyclic-fast-path", vf.fast_path, "Allow D(C_m) = m for cyclic unit groups");
  ver_cmd->add_flag("--timings", vf.timings, "Add timings to records (disables the cache)");
  ver_cmd->add_flag("--subgroup-inequality", vf.subgroup_inequality, "Subgroup inequality D(G) >= D(G/H) + D(H) - 1");
  ver_cmd->add_flag("--stabilizers", vf.stabilizers, "Green's preorder / stabilizer suite");
  ver_cmd->add_flag("--small-davenport", vf.small_davenport, "D(S_R) = d(S_R) + 1 for deg f <= 3");
  ver_cmd->add_flag("--symmetry", vf.symmetry, "x -> x+1 symmetry of records");
  bool all_suites = false;
  ver_cmd->add_flag("--all-suites", all_suites, "Enable every property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*factor_cmd) return cmd_factor(ftext);
    if (*info_cmd) return cmd_info(ftext);
    if (*dav_cmd) return cmd_davenport(ftext, target, budget, fast_path);
    if (*red_cmd) return cmd_reduce(ftext, terms, exact_v);
    if (*ver_cmd) {
      vf.budget_given = budget_opt->count() > 0;
      if (all_suites) vf.subgroup_inequality = vf.stabilizers = vf.small_davenport = vf.symmetry = true;
      return cmd_verify(vf);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

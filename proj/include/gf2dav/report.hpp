#pragma once

// Structured reports for the command-line front end: factorization text,
// verification records (one JSON object per line), reduction traces and the
// on-disk record cache.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gf2dav/poly.hpp"
#include "gf2dav/reduce.hpp"
#include "gf2dav/ring.hpp"
#include "gf2dav/zerosum.hpp"

namespace gf2dav {

inline constexpr const char* kToolkitVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// "x^2 * (x+1)^2": factors in factorization order, multi-term factors
/// parenthesized when raised to a power or multiplied by others.
inline std::string format_factorization(const Factorization& fact) {
  std::string out;
  const bool several = fact.size() > 1;
  for (const auto& [p, k] : fact) {
    if (!out.empty()) out += " * ";
    const bool paren = p.weight() > 1 && (several || k > 1);
    out += paren ? "(" + format(p) + ")" : format(p);
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

inline std::string factor_report(const Poly& f) {
  const Factorization fact = factor(f);
  std::string out = format_factorization(fact);
  if (f.degree() >= 2 && fact.size() == 1 && fact[0].multiplicity == 1) out += " (irreducible)";
  return out;
}

inline Json to_json(const Seq& s) {
  Json arr = Json::array();
  for (const auto& e : s) arr.push_back(format(e));
  return arr;
}

inline Json to_json(const std::vector<Elem>& s) {
  Json arr = Json::array();
  for (const auto& e : s) arr.push_back(format(e));
  return arr;
}

struct VerifyRecord {
  std::string f;
  int degree = 0;
  std::string factorization;
  std::size_t unit_count = 0;
  int d_u = 0;
  int d_s = 0;
  int delta = 0;
  bool bound_ok = false;
  int gap = 0;
  Provenance provenance_u = Provenance::search;
  Provenance provenance_s = Provenance::search;
  Seq extremal_u;
  Seq extremal_s;
  std::optional<double> ms_u;
  std::optional<double> ms_s;
};

struct RecordOptions {
  std::uint64_t budget = kDefaultBudget;
  bool cyclic_fast_path = false;
  bool timings = false;
};

/// Computes both Davenport constants of one modulus. Throws BudgetExceeded.
inline VerifyRecord compute_record(const RingCtx& ctx, const RecordOptions& opts) {
  using Clock = std::chrono::steady_clock;
  VerifyRecord rec;
  rec.f = format(ctx.modulus());
  rec.degree = ctx.degree();
  rec.factorization = format_factorization(ctx.factorization());
  rec.unit_count = ctx.unit_count();
  rec.delta = delta_f(ctx.modulus()).value;

  auto t0 = Clock::now();
  const auto du = davenport_group(unit_group_table(ctx), {opts.budget, opts.cyclic_fast_path});
  auto t1 = Clock::now();
  const auto ds = davenport_semigroup(ctx, opts.budget);
  auto t2 = Clock::now();

  rec.d_u = du.value;
  rec.d_s = ds.value;
  rec.gap = ds.value - du.value;
  rec.bound_ok = du.value <= ds.value && ds.value <= du.value + rec.delta;
  rec.provenance_u = du.provenance;
  rec.provenance_s = ds.provenance;
  rec.extremal_u = du.extremal;
  rec.extremal_s = ds.extremal;
  if (opts.timings) {
    rec.ms_u = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rec.ms_s = std::chrono::duration<double, std::milli>(t2 - t1).count();
  }
  return rec;
}

inline Json to_json(const VerifyRecord& r) {
  Json j;
  j["f"] = r.f;
  j["degree"] = r.degree;
  j["factorization"] = r.factorization;
  j["unit_count"] = r.unit_count;
  j["D_U"] = r.d_u;
  j["D_S"] = r.d_s;
  j["delta"] = r.delta;
  j["bound_ok"] = r.bound_ok;
  j["gap"] = r.gap;
  j["provenance"] = {{"D_U", to_string(r.provenance_u)}, {"D_S", to_string(r.provenance_s)}};
  j["extremal"] = {{"D_U", to_json(r.extremal_u)}, {"D_S", to_json(r.extremal_s)}};
  if (r.ms_u || r.ms_s) j["timings"] = {{"D_U_ms", r.ms_u.value_or(0.0)}, {"D_S_ms", r.ms_s.value_or(0.0)}};
  return j;
}

inline std::string record_line(const VerifyRecord& r) { return to_json(r).dump(); }

inline Json to_json(const RingCtx& ctx, const ReductionTrace& tr) {
  Json j;
  j["f"] = format(ctx.modulus());
  j["path"] = to_string(tr.path);
  j["V"] = to_json(tr.v);
  j["J"] = tr.j;
  Json sizes = Json::array();
  for (const auto& k : tr.chain.chain) sizes.push_back(k.size());
  j["chain_sizes"] = sizes;
  j["M"] = tr.chain.strict_steps;
  j["M_size"] = tr.chain.strict_steps.size();
  j["counting_ok"] = tr.chain.counting_ok;
  Json lifted = Json::array();
  for (const auto& [a, la] : tr.lifted) lifted.push_back({format(a), format(la)});
  j["lifted"] = lifted;
  j["W"] = to_json(tr.w);
  j["result"] = to_json(tr.result);
  return j;
}

/// Stable 64-bit FNV-1a, used for cache keys.
inline std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Verification records on disk, one file per (f, budget, fast path, version).
class RecordCache {
 public:
  explicit RecordCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  /// --cache-dir wins, then $DAVENPORT_CACHE, else no cache.
  static std::optional<RecordCache> open(const std::string& flag_dir) {
    if (!flag_dir.empty()) return RecordCache(flag_dir);
    if (const char* env = std::getenv("DAVENPORT_CACHE"); env != nullptr && *env != '\0')
      return RecordCache(env);
    return std::nullopt;
  }

  static std::string key(const Poly& f, const RecordOptions& opts) {
    std::ostringstream os;
    os << format_hex(f) << '|' << opts.budget << '|' << (opts.cyclic_fast_path ? 1 : 0) << '|' << kToolkitVersion;
    std::ostringstream hex;
    hex << std::hex;
    hex.width(16);
    hex.fill('0');
    hex << fnv1a(os.str());
    return hex.str();
  }

  std::filesystem::path path_for(const Poly& f, const RecordOptions& opts) const {
    return dir_ / (key(f, opts) + ".json");
  }

  /// The cached record line, or nullopt when absent. Unreadable or
  /// mismatching entries produce a warning on `warn` and count as absent.
  std::optional<std::string> load(const Poly& f, const RecordOptions& opts, std::ostream& warn) const {
    const auto p = path_for(f, opts);
    std::ifstream in(p);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      const Json j = Json::parse(buf.str());
      if (j.at("f_bits").get<std::string>() != format_hex(f) || j.at("budget").get<std::uint64_t>() != opts.budget ||
          j.at("cyclic_fast_path").get<bool>() != opts.cyclic_fast_path ||
          j.at("version").get<std::string>() != kToolkitVersion)
        throw std::runtime_error("key mismatch");
      const auto line = j.at("record").get<std::string>();
      const Json rec = Json::parse(line);
      if (rec.at("f").get<std::string>() != format(f)) throw std::runtime_error("record for a different modulus");
      return line;
    } catch (const std::exception& e) {
      warn << "warning: ignoring corrupt cache entry " << p.string() << " (" << e.what() << "); recomputing\n";
      return std::nullopt;
    }
  }

  void store(const Poly& f, const RecordOptions& opts, const std::string& line) const {
    Json j;
    j["f_bits"] = format_hex(f);
    j["budget"] = opts.budget;
    j["cyclic_fast_path"] = opts.cyclic_fast_path;
    j["version"] = kToolkitVersion;
    j["record"] = line;
    const auto p = path_for(f, opts);
    const auto tmp = p.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, p);
  }

  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace gf2dav

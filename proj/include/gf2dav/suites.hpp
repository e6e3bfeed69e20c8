#pragma once

// Property suites run by `gf2dav verify` on each modulus.

#include <cstdint>
#include <string>
#include <vector>

#include "gf2dav/reduce.hpp"
#include "gf2dav/ring.hpp"
#include "gf2dav/zerosum.hpp"

namespace gf2dav {

struct SuiteOutcome {
  std::string name;
  bool ok = true;
  std::uint64_t checks = 0;
  std::vector<std::string> failures{};
  /// Informational counters (not pass/fail).
  std::uint64_t notes = 0;

  void fail(std::string what) {
    ok = false;
    if (failures.size() < 8) failures.push_back(std::move(what));
  }
};

/// D(U) >= D(U/H) + D(H) - 1 for every subgroup H of the unit group.
inline SuiteOutcome check_subgroup_inequality(const RingCtx& ctx, std::uint64_t budget) {
  SuiteOutcome out;
  out.name = "subgroup_inequality";
  const GroupTable u = unit_group_table(ctx);
  const int du = davenport_group(u, {budget, false}).value;
  for (const auto& h : enumerate_subgroups(u)) {
    const int dq = davenport_group(quotient_group(u, h), {budget, false}).value;
    const int dh = davenport_group(u.subgroup(h), {budget, false}).value;
    ++out.checks;
    if (du < dq + dh - 1)
      out.fail(format(ctx.modulus()) + ": |H|=" + std::to_string(h.size()) + " D(U)=" + std::to_string(du) +
               " D(U/H)=" + std::to_string(dq) + " D(H)=" + std::to_string(dh));
  }
  return out;
}

/// Green's preorder versus stabilizers and gcd profiles, over all pairs.
/// `notes` counts pairs with St(b) strictly inside St(a) although the
/// separation condition is not positive.
inline SuiteOutcome check_stabilizer_order(const RingCtx& ctx) {
  SuiteOutcome out;
  out.name = "stabilizers";
  const std::string fs = format(ctx.modulus());
  std::vector<UnitSet> st;
  st.reserve(ctx.size());
  for (std::uint32_t i = 0; i < ctx.size(); ++i) st.push_back(ctx.stabilizer(ctx.elem_at(i)));

  for (std::uint32_t ia = 0; ia < ctx.size(); ++ia) {
    for (std::uint32_t ib = 0; ib < ctx.size(); ++ib) {
      const Elem a = ctx.elem_at(ia), b = ctx.elem_at(ib);
      const std::string pair = fs + ": (" + format(a) + ", " + format(b) + ")";
      ++out.checks;
      const bool leq = ctx.leq_h(a, b);
      if (leq != leq_h_by_scan(ctx, a, b)) out.fail(pair + " profile test disagrees with definition");
      if (!leq) continue;
      if (!st[ib].subset_of(st[ia]) || !ctx.profile(b).leq(ctx.profile(a)))
        out.fail(pair + " containment/dominance");
      if (ctx.h_equiv(a, b)) {
        if (!(st[ia] == st[ib])) out.fail(pair + " H-equivalent but stabilizers differ");
        if (!leq_h_by_scan(ctx, a, b) || !leq_h_by_scan(ctx, b, a)) out.fail(pair + " equal profiles but not mutually <=_H");
        continue;
      }
      const int cond = ctx.separation_condition(a, b);
      if (cond > 0) {
        const auto d = ctx.find_separating_unit(a, b);
        if (!d || !st[ib].strict_subset_of(st[ia])) out.fail(pair + " separation: no separating unit");
        const auto w = construct_separating_unit(ctx, a, b);
        if (!w) {
          out.fail(pair + " separation: construction not applicable");
        } else if (!ctx.is_unit(w->unit) || ctx.mul(w->unit, a) != a || ctx.mul(w->unit, b) == b) {
          out.fail(pair + " separation: constructed unit does not separate");
        }
      } else if (st[ib].strict_subset_of(st[ia])) {
        ++out.notes;
      }
    }
  }
  return out;
}

/// d(S_R) from its definition equals D(S_R) - 1. Only run for deg f <= 3.
inline SuiteOutcome check_small_davenport(const RingCtx& ctx, int d_s) {
  SuiteOutcome out;
  out.name = "small_davenport";
  if (ctx.degree() > 3) return out;
  ++out.checks;
  const int d = small_davenport_direct(ctx, static_cast<std::size_t>(d_s));
  if (d != d_s - 1)
    out.fail(format(ctx.modulus()) + ": direct d=" + std::to_string(d) + " but D_S-1=" + std::to_string(d_s - 1));
  return out;
}

}  // namespace gf2dav

#pragma once

// Constructive reduction: any sequence over S_R of length D(U(S_R)) + delta_f
// has a proper subsequence with the same product. The pipeline picks V with
// sigma(V) H sigma(T), walks the stabilizer chain of its prefix products,
// lifts the remaining terms to units by CRT and finds a nonempty W among
// them whose lifted product stabilizes sigma(V).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gf2dav/poly.hpp"
#include "gf2dav/ring.hpp"
#include "gf2dav/zerosum.hpp"

namespace gf2dav {

/// delta_f = [x | f] + [x+1 | f], read off gcd(x^2+x, f).
struct DeltaClass {
  int value = 0;
  Poly gcd_with_x_x1;
};

inline DeltaClass delta_f(const Poly& f) {
  if (f.degree() < 1) throw ConstantInput("delta_f");
  Poly g = gcd(Poly(0b110), f);
  int v = 0;
  if (!g.is_one()) v = g.degree() == 2 ? 2 : 1;
  return {v, std::move(g)};
}

/// Greedy V: repeatedly take the remaining term with the largest strict gain
/// in the running gcd profile (lowest element on ties) until the profile of
/// sigma(T) is reached. Terms come back in selection order, so each prefix
/// product is strictly H-below the previous one.
inline std::vector<Elem> select_v(const RingCtx& ctx, const Seq& t) {
  const std::size_t r = ctx.factor_count();
  const std::uint32_t target = sigma(ctx, t).index();
  auto total = [&](std::uint32_t e) {
    int s = 0;
    for (std::size_t i = 0; i < r; ++i) s += ctx.alpha(e, i);
    return s;
  };
  const int goal = total(target);
  std::vector<bool> used(t.length(), false);
  std::vector<Elem> v;
  std::uint32_t run = 1;
  while (total(run) < goal) {
    std::optional<std::size_t> pick_pos;
    int best_gain = 0;
    for (std::size_t p = 0; p < t.length(); ++p) {
      if (used[p]) continue;
      const int gain = total(ctx.mul_index(run, t[p].index())) - total(run);
      if (gain > best_gain) {
        best_gain = gain;
        pick_pos = p;
      }
    }
    if (!pick_pos) throw std::logic_error("select_v: no term makes progress");
    used[*pick_pos] = true;
    v.push_back(t[*pick_pos]);
    run = ctx.mul_index(run, t[*pick_pos].index());
  }
  return v;
}

/// A globally shortest V with sigma(V) H sigma(T), by enumerating
/// sub-multisets in order of size. Limited to |T| <= 20.
inline std::vector<Elem> shortest_v(const RingCtx& ctx, const Seq& t) {
  if (t.length() > 20) throw std::invalid_argument("shortest_v: sequence longer than 20");
  const Elem target = sigma(ctx, t);
  const auto counts = t.counts();
  for (std::size_t size = 0; size <= t.length(); ++size) {
    std::vector<std::size_t> take(counts.size(), 0);
    std::optional<std::vector<Elem>> found;
    auto rec = [&](auto&& self, std::size_t i, std::size_t left, std::uint32_t prod) -> void {
      if (found) return;
      if (i == counts.size()) {
        if (left == 0 && ctx.h_equiv(ctx.elem_at(prod), target)) {
          std::vector<Elem> v;
          for (std::size_t k = 0; k < counts.size(); ++k) v.insert(v.end(), take[k], counts[k].first);
          found = std::move(v);
        }
        return;
      }
      std::uint32_t p = prod;
      for (std::size_t c = 0; c <= std::min(left, counts[i].second); ++c) {
        take[i] = c;
        self(self, i + 1, left - c, p);
        p = ctx.mul_index(p, counts[i].first.index());
      }
      take[i] = 0;
    };
    rec(rec, 0, size, 1);
    if (found) return *found;
  }
  throw std::logic_error("shortest_v: T itself always qualifies");
}

struct StabilizerChain {
  std::vector<UnitSet> chain;  ///< K_0 = {1}, K_i = St(a_1 ... a_i)
  IndexSet strict_steps;       ///< M = { i : K_i strictly inside K_{i+1} }
  bool nested = true;          ///< every K_i is contained in K_{i+1}
  /// |M| >= |V| - delta_f. Expected but not guaranteed for a non-shortest V.
  bool counting_ok = true;
};

inline StabilizerChain stabilizer_chain(const RingCtx& ctx, const std::vector<Elem>& v) {
  StabilizerChain out;
  Elem prefix = ctx.one();
  out.chain.push_back(ctx.stabilizer(prefix));
  for (const auto& a : v) {
    prefix = ctx.mul(prefix, a);
    out.chain.push_back(ctx.stabilizer(prefix));
  }
  for (std::size_t i = 0; i + 1 < out.chain.size(); ++i) {
    if (!out.chain[i].subset_of(out.chain[i + 1])) out.nested = false;
    if (out.chain[i].strict_subset_of(out.chain[i + 1])) out.strict_steps.push_back(i);
  }
  const int delta = delta_f(ctx.modulus()).value;
  out.counting_ok = static_cast<int>(out.strict_steps.size()) >= static_cast<int>(v.size()) - delta;
  return out;
}

enum class ReductionPath { proof, dp_fallback };

inline const char* to_string(ReductionPath p) { return p == ReductionPath::proof ? "proof-path" : "dp-fallback"; }

struct ReductionTrace {
  std::vector<Elem> v;
  IndexSet j;
  StabilizerChain chain;
  std::vector<std::pair<Elem, Elem>> lifted;  ///< (a, a~) for each term of T V^[-1]
  Seq w;
  Seq result;  ///< T W^[-1]
  ReductionPath path = ReductionPath::proof;
};

/// The input has no proper subsequence with the same product (so it is
/// shorter than D(S_R)); proper_products is the DP certificate.
class IrreducibleInput : public std::runtime_error {
 public:
  IrreducibleInput(Seq t, Elem sigma, std::size_t proper_products)
      : std::runtime_error("sequence is irreducible"),
        sequence_(std::move(t)),
        sigma_(sigma),
        proper_products_(proper_products) {}
  const Seq& sequence() const noexcept { return sequence_; }
  Elem sigma() const noexcept { return sigma_; }
  std::size_t proper_product_count() const noexcept { return proper_products_; }

 private:
  Seq sequence_;
  Elem sigma_;
  std::size_t proper_products_;
};

struct ReduceOptions {
  /// Use the exact shortest V instead of the greedy one (|T| <= 20).
  bool exact_v = false;
};

inline ReductionTrace reduce_sequence(const RingCtx& ctx, const Seq& t, ReduceOptions opts = {}) {
  ReductionTrace tr;
  tr.v = opts.exact_v ? shortest_v(ctx, t) : select_v(ctx, t);
  tr.chain = stabilizer_chain(ctx, tr.v);

  const Elem total = sigma(ctx, t);
  for (std::size_t i = 0; i < ctx.factor_count(); ++i)
    if (ctx.alpha(total.index(), i) == ctx.multiplicity(i)) tr.j.push_back(i);

  const Seq rest = t.without(Seq(tr.v));
  std::vector<Elem> lifted;
  lifted.reserve(rest.length());
  for (const auto& a : rest) {
    const Elem la = ctx.crt_lift(a, tr.j);
    lifted.push_back(la);
    tr.lifted.emplace_back(a, la);
  }

  if (auto pos = subset_positions_with_product_in(ctx, lifted, tr.chain.chain.back())) {
    tr.w = pick(rest.terms(), *pos);
    tr.result = t.without(tr.w);
    tr.path = ReductionPath::proof;
    if (sigma(ctx, tr.result) != total) throw std::logic_error("reduce_sequence: proof path broke the product");
    return tr;
  }

  // Only reachable when V is longer than a shortest one.
  const ProductTable table = build_table(ctx, t);
  const auto pos = table.witness_proper(total);
  if (!pos) throw IrreducibleInput(t, total, table.proper_products().count());
  tr.result = pick(t.terms(), *pos);
  tr.w = t.without(tr.result);
  tr.path = ReductionPath::dp_fallback;
  if (sigma(ctx, tr.result) != total) throw std::logic_error("reduce_sequence: fallback broke the product");
  return tr;
}

}  // namespace gf2dav

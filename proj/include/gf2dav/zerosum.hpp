#pragma once

// Exact Davenport constants of S_R and of finite abelian groups built from
// its units, via subset-product dynamic programming and pruned DFS.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gf2dav/elemset.hpp"
#include "gf2dav/ring.hpp"

namespace gf2dav {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Search gave up after visiting its node budget. lower_bound is a proven
/// lower bound on the Davenport constant (one more than the longest
/// irreducible sequence seen).
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(int lower_bound, std::uint64_t nodes)
      : std::runtime_error("search budget exceeded after " + std::to_string(nodes) +
                           " nodes; lower bound " + std::to_string(lower_bound)),
        lower_bound_(lower_bound),
        nodes_(nodes) {}
  int lower_bound() const noexcept { return lower_bound_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  int lower_bound_;
  std::uint64_t nodes_;
};

class NotASubgroup : public std::invalid_argument {
 public:
  NotASubgroup() : std::invalid_argument("set is not a subgroup of the group") {}
};

/// A finite multiset of ring elements; terms are kept sorted.
class Seq {
 public:
  Seq() = default;
  explicit Seq(std::vector<Elem> terms) : terms_(std::move(terms)) { std::sort(terms_.begin(), terms_.end()); }
  Seq(std::initializer_list<Elem> terms) : Seq(std::vector<Elem>(terms)) {}

  std::size_t length() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  std::span<const Elem> terms() const noexcept { return terms_; }
  const Elem& operator[](std::size_t i) const { return terms_[i]; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  std::size_t multiplicity(const Elem& e) const {
    auto [lo, hi] = std::equal_range(terms_.begin(), terms_.end(), e);
    return static_cast<std::size_t>(hi - lo);
  }

  void add(const Elem& e) { terms_.insert(std::upper_bound(terms_.begin(), terms_.end(), e), e); }

  /// (element, multiplicity) pairs in ascending element order.
  std::vector<std::pair<Elem, std::size_t>> counts() const {
    std::vector<std::pair<Elem, std::size_t>> out;
    for (const auto& t : terms_) {
      if (!out.empty() && out.back().first == t) {
        ++out.back().second;
      } else {
        out.emplace_back(t, 1);
      }
    }
    return out;
  }

  /// sub | *this.
  bool has_subsequence(const Seq& sub) const {
    return std::includes(terms_.begin(), terms_.end(), sub.terms_.begin(), sub.terms_.end());
  }

  /// *this with the terms of sub removed (T * sub^[-1]).
  Seq without(const Seq& sub) const {
    if (!has_subsequence(sub)) throw std::invalid_argument("not a subsequence");
    std::vector<Elem> out;
    std::set_difference(terms_.begin(), terms_.end(), sub.terms_.begin(), sub.terms_.end(),
                        std::back_inserter(out));
    return Seq(std::move(out));
  }

  friend bool operator==(const Seq&, const Seq&) = default;

 private:
  std::vector<Elem> terms_;
};

inline Seq pick(std::span<const Elem> terms, std::span<const std::size_t> positions) {
  std::vector<Elem> out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(terms[p]);
  return Seq(std::move(out));
}

inline Elem sigma(const RingCtx& ctx, const Seq& t) { return ctx.product(t.terms()); }

/// Subset products of a growing term list. Appending a turns (all, proper)
/// into (all | all*a, all | proper*a); one predecessor record per product,
/// first reach wins.
class ProductTable {
 public:
  explicit ProductTable(const RingCtx& ctx)
      : ctx_(&ctx),
        all_(ctx.size()),
        proper_(ctx.size()),
        all_rec_(ctx.size()),
        proper_rec_(ctx.size()),
        sigma_(1) {
    all_.insert(1);
    all_rec_[1] = {0, 1, false};
  }

  void append(const Elem& a) {
    if (!ctx_->owns(a)) throw MixedContext();
    terms_.push_back(a);
    const auto step = static_cast<std::int32_t>(terms_.size());
    const std::uint32_t ai = a.index();
    ElemSet next_all = all_;
    ElemSet next_proper = all_;
    all_.for_each([&](std::uint32_t y) {
      if (!proper_.contains(y)) proper_rec_[y] = {step, y, true};
    });
    proper_.for_each([&](std::uint32_t y) {
      const std::uint32_t z = ctx_->mul_index(y, ai);
      if (!next_proper.contains(z)) {
        next_proper.insert(z);
        proper_rec_[z] = {step, y, false};
      }
    });
    all_.for_each([&](std::uint32_t y) {
      const std::uint32_t z = ctx_->mul_index(y, ai);
      if (!next_all.contains(z)) {
        next_all.insert(z);
        all_rec_[z] = {step, y, false};
      }
    });
    all_ = std::move(next_all);
    proper_ = std::move(next_proper);
    sigma_ = ctx_->mul_index(sigma_, ai);
  }

  const ElemSet& all_products() const noexcept { return all_; }
  const ElemSet& proper_products() const noexcept { return proper_; }
  Elem sigma() const { return ctx_->elem_at(sigma_); }
  std::span<const Elem> terms() const noexcept { return terms_; }

  /// Positions of a subset multiplying to x, or nullopt if x is unreachable.
  std::optional<std::vector<std::size_t>> witness_all(const Elem& x) const {
    if (!all_.contains(x.index())) return std::nullopt;
    std::vector<std::size_t> pos;
    trace_all(x.index(), pos);
    std::sort(pos.begin(), pos.end());
    return pos;
  }

  /// Positions of a proper subset multiplying to x.
  std::optional<std::vector<std::size_t>> witness_proper(const Elem& x) const {
    if (!proper_.contains(x.index())) return std::nullopt;
    std::vector<std::size_t> pos;
    std::uint32_t cur = x.index();
    for (;;) {
      const Record& r = proper_rec_[cur];
      if (r.from_all) {
        trace_all(cur, pos);
        break;
      }
      pos.push_back(static_cast<std::size_t>(r.step - 1));
      cur = r.pred;
    }
    std::sort(pos.begin(), pos.end());
    return pos;
  }

 private:
  struct Record {
    std::int32_t step = -1;   // 1-based term that first produced the value
    std::uint32_t pred = 0;   // value before multiplying by that term
    bool from_all = false;    // proper records: value was already a full-prefix product
  };

  void trace_all(std::uint32_t cur, std::vector<std::size_t>& pos) const {
    while (all_rec_[cur].step > 0) {
      pos.push_back(static_cast<std::size_t>(all_rec_[cur].step - 1));
      cur = all_rec_[cur].pred;
    }
  }

  const RingCtx* ctx_;
  ElemSet all_;
  ElemSet proper_;
  std::vector<Record> all_rec_;
  std::vector<Record> proper_rec_;
  std::vector<Elem> terms_;
  std::uint32_t sigma_;
};

inline ProductTable build_table(const RingCtx& ctx, std::span<const Elem> terms) {
  ProductTable t(ctx);
  for (const auto& a : terms) t.append(a);
  return t;
}
inline ProductTable build_table(const RingCtx& ctx, const Seq& s) { return build_table(ctx, s.terms()); }

/// A proper subsequence with the same product, or nullopt iff s is irreducible.
inline std::optional<Seq> reducibility_witness(const RingCtx& ctx, const Seq& s) {
  const ProductTable t = build_table(ctx, s);
  auto pos = t.witness_proper(t.sigma());
  if (!pos) return std::nullopt;
  return pick(s.terms(), *pos);
}

inline bool is_reducible(const RingCtx& ctx, const Seq& s) {
  const ProductTable t = build_table(ctx, s);
  return t.proper_products().contains(t.sigma().index());
}

enum class Provenance { search, formula };

inline const char* to_string(Provenance p) { return p == Provenance::search ? "search" : "formula"; }

struct DavenportResult {
  int value = 0;
  Seq extremal;  ///< a longest irreducible (zero-sum-free) sequence
  std::uint64_t nodes = 0;
  Provenance provenance = Provenance::search;
};

/// D(S_R) = 1 + longest irreducible sequence. DFS over multisets in
/// nondecreasing element order; reducible nodes are pruned since appending
/// a term keeps a sequence reducible.
inline DavenportResult davenport_semigroup(const RingCtx& ctx, std::uint64_t budget = kDefaultBudget) {
  const std::uint32_t size = ctx.size();
  struct Level {
    ElemSet all, proper;
  };
  std::deque<Level> levels;  // stable references while growing
  std::vector<std::uint32_t> path, best;
  std::uint64_t nodes = 0;

  auto level = [&](std::size_t d) -> Level& {
    while (levels.size() <= d) levels.push_back({ElemSet(size), ElemSet(size)});
    return levels[d];
  };
  level(0).all.insert(1);

  auto dfs = [&](auto&& self, std::uint32_t first, std::uint32_t sig) -> void {
    if (++nodes > budget) throw BudgetExceeded(static_cast<int>(best.size()) + 1, nodes - 1);
    if (path.size() > best.size()) best = path;
    const std::size_t d = path.size();
    for (std::uint32_t e = first; e < size; ++e) {
      const std::uint32_t s2 = ctx.mul_index(sig, e);
      Level& cur = level(d);
      Level& nxt = level(d + 1);
      if (cur.all.contains(s2)) continue;
      bool reducible = false;
      cur.proper.for_each([&](std::uint32_t y) {
        if (!reducible && ctx.mul_index(y, e) == s2) reducible = true;
      });
      if (reducible) continue;
      nxt.all = cur.all;
      nxt.proper = cur.all;
      cur.proper.for_each([&](std::uint32_t y) { nxt.proper.insert(ctx.mul_index(y, e)); });
      cur.all.for_each([&](std::uint32_t y) { nxt.all.insert(ctx.mul_index(y, e)); });
      path.push_back(e);
      self(self, e, s2);
      path.pop_back();
    }
  };
  dfs(dfs, 0, 1);

  std::vector<Elem> ext;
  for (auto i : best) ext.push_back(ctx.elem_at(i));
  return {static_cast<int>(best.size()) + 1, Seq(std::move(ext)), nodes, Provenance::search};
}

/// A finite abelian group given by its elements (ring units or coset
/// representatives) and a full operation table.
class GroupTable {
 public:
  /// The units in `members` under ring multiplication. Throws NotASubgroup
  /// unless they form a group.
  static GroupTable from_units(const RingCtx& ctx, const UnitSet& members) {
    if (members.modulus_tag() != ctx.tag()) throw MixedContext();
    GroupTable g;
    g.tag_ = ctx.tag();
    g.universe_ = ctx.size();
    g.elements_ = members.members(ctx);
    g.build_lookup();
    const std::size_t k = g.elements_.size();
    g.table_.resize(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const Elem p = ctx.mul(g.elements_[i], g.elements_[j]);
        const auto idx = g.index_of(p);
        if (!idx) throw NotASubgroup();
        g.table_[i * k + j] = *idx;
      }
    }
    const auto id = g.index_of(ctx.one());
    if (!id) throw NotASubgroup();
    g.identity_ = *id;
    g.finish();
    return g;
  }

  std::size_t order() const noexcept { return elements_.size(); }
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t op(std::uint32_t i, std::uint32_t j) const noexcept {
    return table_[std::size_t{i} * elements_.size() + j];
  }
  std::uint32_t inverse(std::uint32_t i) const noexcept { return inverse_[i]; }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  const Elem& element(std::uint32_t i) const { return elements_[i]; }
  std::uint64_t modulus_tag() const noexcept { return tag_; }
  std::uint32_t universe() const noexcept { return universe_; }

  std::optional<std::uint32_t> index_of(const Elem& e) const {
    if (e.modulus_tag() != tag_ || e.index() >= lookup_.size()) return std::nullopt;
    const auto v = lookup_[e.index()];
    if (v < 0) return std::nullopt;
    return static_cast<std::uint32_t>(v);
  }

  int element_order(std::uint32_t i) const {
    int k = 1;
    for (std::uint32_t cur = i; cur != identity_; cur = op(cur, i)) ++k;
    return k;
  }

  bool is_cyclic() const {
    for (std::uint32_t i = 0; i < order(); ++i)
      if (static_cast<std::size_t>(element_order(i)) == order()) return true;
    return false;
  }

  /// The members of this group as a UnitSet over the ring's index space.
  UnitSet as_unit_set() const {
    ElemSet bits(universe_);
    for (const auto& e : elements_) bits.insert(e.index());
    return UnitSet(tag_, std::move(bits));
  }

  /// Subgroup given by a UnitSet of this group's elements.
  GroupTable subgroup(const UnitSet& h) const {
    std::vector<std::uint32_t> idx;
    for (std::uint32_t i = 0; i < order(); ++i)
      if (h.contains(elements_[i])) idx.push_back(i);
    if (idx.size() != h.size()) throw NotASubgroup();
    GroupTable g;
    g.tag_ = tag_;
    g.universe_ = universe_;
    for (auto i : idx) g.elements_.push_back(elements_[i]);
    g.build_lookup();
    const std::size_t k = idx.size();
    g.table_.resize(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        const auto p = g.index_of(elements_[op(idx[a], idx[b])]);
        if (!p) throw NotASubgroup();
        g.table_[a * k + b] = *p;
      }
    }
    const auto id = g.index_of(elements_[identity_]);
    if (!id) throw NotASubgroup();
    g.identity_ = *id;
    g.finish();
    return g;
  }

  /// Coset group G/K; each coset is represented by its lowest-index member.
  friend GroupTable quotient_group(const GroupTable& g, const UnitSet& k) {
    std::vector<std::uint32_t> kidx;
    for (std::uint32_t i = 0; i < g.order(); ++i)
      if (k.contains(g.elements_[i])) kidx.push_back(i);
    if (kidx.size() != k.size() || !k.contains(g.elements_[g.identity_])) throw NotASubgroup();
    for (auto a : kidx)
      for (auto b : kidx)
        if (!k.contains(g.elements_[g.op(a, b)])) throw NotASubgroup();

    std::vector<std::int32_t> coset(g.order(), -1);
    std::vector<std::uint32_t> reps;
    for (std::uint32_t i = 0; i < g.order(); ++i) {
      if (coset[i] >= 0) continue;
      const auto c = static_cast<std::int32_t>(reps.size());
      reps.push_back(i);
      for (auto m : kidx) coset[g.op(i, m)] = c;
    }
    GroupTable q;
    q.tag_ = g.tag_;
    q.universe_ = g.universe_;
    for (auto r : reps) q.elements_.push_back(g.elements_[r]);
    q.build_lookup();
    const std::size_t n = reps.size();
    q.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        q.table_[a * n + b] = static_cast<std::uint32_t>(coset[g.op(reps[a], reps[b])]);
    q.identity_ = static_cast<std::uint32_t>(coset[g.identity_]);
    q.finish();
    return q;
  }

 private:
  GroupTable() = default;

  void build_lookup() {
    lookup_.assign(universe_, -1);
    for (std::size_t i = 0; i < elements_.size(); ++i)
      lookup_[elements_[i].index()] = static_cast<std::int32_t>(i);
  }

  void finish() {
    const std::size_t k = elements_.size();
    inverse_.assign(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      bool found = false;
      for (std::uint32_t j = 0; j < k && !found; ++j) {
        if (op(i, j) == identity_) {
          inverse_[i] = j;
          found = true;
        }
      }
      if (!found) throw NotASubgroup();
      for (std::uint32_t j = 0; j < k; ++j)
        if (op(i, j) != op(j, i)) throw std::invalid_argument("group table is not abelian");
    }
  }

  std::uint64_t tag_ = 0;
  std::uint32_t universe_ = 0;
  std::vector<Elem> elements_;
  std::vector<std::uint32_t> table_;
  std::vector<std::int32_t> lookup_;
  std::vector<std::uint32_t> inverse_;
  std::uint32_t identity_ = 0;
};

inline GroupTable unit_group_table(const RingCtx& ctx) { return GroupTable::from_units(ctx, ctx.unit_group()); }

struct GroupSearchOptions {
  std::uint64_t budget = kDefaultBudget;
  /// On budget exhaustion, answer D(C_m) = m for cyclic groups instead of failing.
  bool cyclic_fast_path = false;
};

/// D(G) = 1 + longest zero-sum-free sequence, via DFS that keeps the set of
/// nonempty-subset products and prunes once the identity becomes reachable.
inline DavenportResult davenport_group(const GroupTable& g, GroupSearchOptions opts = {}) {
  const auto k = static_cast<std::uint32_t>(g.order());
  std::deque<ElemSet> levels;
  std::vector<std::uint32_t> path, best;
  std::uint64_t nodes = 0;
  auto level = [&](std::size_t d) -> ElemSet& {
    while (levels.size() <= d) levels.emplace_back(k);
    return levels[d];
  };
  level(0);

  auto dfs = [&](auto&& self, std::uint32_t first) -> void {
    if (++nodes > opts.budget) throw BudgetExceeded(static_cast<int>(best.size()) + 1, nodes - 1);
    if (path.size() > best.size()) best = path;
    const std::size_t d = path.size();
    for (std::uint32_t e = first; e < k; ++e) {
      if (e == g.identity()) continue;
      ElemSet& cur = level(d);
      // identity in P*e  <=>  e^{-1} in P
      if (cur.contains(g.inverse(e))) continue;
      ElemSet& nxt = level(d + 1);
      nxt = cur;
      nxt.insert(e);
      cur.for_each([&](std::uint32_t y) { nxt.insert(g.op(y, e)); });
      path.push_back(e);
      self(self, e);
      path.pop_back();
    }
  };

  try {
    dfs(dfs, 0);
  } catch (const BudgetExceeded&) {
    if (!opts.cyclic_fast_path || !g.is_cyclic()) throw;
    // D(C_m) = m, witnessed by m-1 copies of a generator.
    std::uint32_t gen = 0;
    while (static_cast<std::size_t>(g.element_order(gen)) != g.order()) ++gen;
    std::vector<Elem> ext(g.order() - 1, g.element(gen));
    return {static_cast<int>(g.order()), Seq(std::move(ext)), nodes - 1, Provenance::formula};
  }
  std::vector<Elem> ext;
  for (auto i : best) ext.push_back(g.element(i));
  return {static_cast<int>(best.size()) + 1, Seq(std::move(ext)), nodes, Provenance::search};
}

/// Every subgroup of g, as UnitSets, ordered by size then members.
inline std::vector<UnitSet> enumerate_subgroups(const GroupTable& g) {
  const auto k = static_cast<std::uint32_t>(g.order());
  auto close = [&](std::vector<bool> in) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < k; ++i)
      if (in[i]) members.push_back(i);
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        const auto p = g.op(members[a], members[b]);
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    }
    return in;
  };
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue;
  std::vector<bool> trivial(k, false);
  trivial[g.identity()] = true;
  seen.insert(trivial);
  queue.push_back(trivial);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (std::uint32_t e = 0; e < k; ++e) {
      if (queue[qi][e]) continue;
      auto next = queue[qi];
      next[e] = true;
      next = close(std::move(next));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<UnitSet> out;
  for (const auto& in : queue) {
    ElemSet bits(g.universe());
    for (std::uint32_t i = 0; i < k; ++i)
      if (in[i]) bits.insert(g.element(i).index());
    out.emplace_back(g.modulus_tag(), std::move(bits));
  }
  std::stable_sort(out.begin(), out.end(), [](const UnitSet& a, const UnitSet& b) { return a.size() < b.size(); });
  return out;
}

/// Positions of a nonempty subset of `terms` (all units) whose product lies
/// in k, or nullopt when none exists.
inline std::optional<std::vector<std::size_t>> subset_positions_with_product_in(const RingCtx& ctx,
                                                                                std::span<const Elem> terms,
                                                                                const UnitSet& k) {
  struct Record {
    std::int32_t step = -1;
    std::int64_t pred = -1;  // -1: the term alone
  };
  for (const auto& t : terms)
    if (!ctx.is_unit(t)) throw NonUnit();
  ElemSet reached(ctx.size());
  std::vector<Record> rec(ctx.size());
  for (std::size_t s = 0; s < terms.size(); ++s) {
    const auto step = static_cast<std::int32_t>(s + 1);
    const std::uint32_t a = terms[s].index();
    ElemSet next = reached;
    if (!next.contains(a)) {
      next.insert(a);
      rec[a] = {step, -1};
    }
    reached.for_each([&](std::uint32_t y) {
      const auto z = ctx.mul_index(y, a);
      if (!next.contains(z)) {
        next.insert(z);
        rec[z] = {step, y};
      }
    });
    reached = std::move(next);
    ElemSet hit = reached;
    hit &= k.bits();
    if (!hit.empty()) {
      std::uint32_t cur = hit.to_vector().front();
      std::vector<std::size_t> pos;
      for (;;) {
        pos.push_back(static_cast<std::size_t>(rec[cur].step - 1));
        if (rec[cur].pred < 0) break;
        cur = static_cast<std::uint32_t>(rec[cur].pred);
      }
      std::sort(pos.begin(), pos.end());
      return pos;
    }
  }
  return std::nullopt;
}

inline std::optional<Seq> subset_with_product_in(const RingCtx& ctx, const Seq& terms, const UnitSet& k) {
  auto pos = subset_positions_with_product_in(ctx, terms.terms(), k);
  if (!pos) return std::nullopt;
  return pick(terms.terms(), *pos);
}

/// d(S_R) = D(S_R) - 1.
inline int small_davenport(const RingCtx& ctx, std::uint64_t budget = kDefaultBudget) {
  return davenport_semigroup(ctx, budget).value - 1;
}

/// d(S_R) straight from its definition: over every sequence of length
/// 1..max_length, the least size of a sub-multiset with the same product;
/// the answer is the maximum of those. Exact once max_length >= D(S_R).
inline int small_davenport_direct(const RingCtx& ctx, std::size_t max_length) {
  const std::uint32_t size = ctx.size();
  std::vector<std::uint32_t> counts(size, 0);
  int worst = 0;

  auto min_subset = [&](std::uint32_t target) {
    // Enumerate every sub-multiset by its count vector.
    std::vector<std::uint32_t> support;
    for (std::uint32_t e = 0; e < size; ++e)
      if (counts[e] != 0) support.push_back(e);
    std::vector<std::uint32_t> pick_count(support.size(), 0);
    int best = std::numeric_limits<int>::max();
    for (;;) {
      std::uint32_t prod = 1;
      int len = 0;
      for (std::size_t i = 0; i < support.size(); ++i) {
        for (std::uint32_t c = 0; c < pick_count[i]; ++c) prod = ctx.mul_index(prod, support[i]);
        len += static_cast<int>(pick_count[i]);
      }
      if (prod == target) best = std::min(best, len);
      std::size_t i = 0;
      while (i < support.size() && pick_count[i] == counts[support[i]]) pick_count[i++] = 0;
      if (i == support.size()) break;
      ++pick_count[i];
    }
    return best;
  };

  auto rec = [&](auto&& self, std::uint32_t first, std::size_t len, std::uint32_t prod) -> void {
    if (len > 0) worst = std::max(worst, min_subset(prod));
    if (len == max_length) return;
    for (std::uint32_t e = first; e < size; ++e) {
      ++counts[e];
      self(self, e, len + 1, ctx.mul_index(prod, e));
      --counts[e];
    }
  };
  rec(rec, 0, 0, 1);
  return worst;
}

}  // namespace gf2dav

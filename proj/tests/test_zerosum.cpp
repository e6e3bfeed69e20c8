#include <gtest/gtest.h>

#include <random>

#include "gf2dav/zerosum.hpp"
#include "oracles.hpp"

namespace {

using gf2dav::Elem;
using gf2dav::Poly;
using gf2dav::RingCtx;
using gf2dav::Seq;

Poly P(const char* s) { return gf2dav::parse(s); }

std::vector<Poly> all_moduli(int max_degree) {
  std::vector<Poly> out;
  for (int d = 1; d <= max_degree; ++d)
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << d); ++low) out.emplace_back((std::uint64_t{1} << d) | low);
  return out;
}

TEST(Seq, SortedMultiset) {
  const RingCtx ctx(P("x^2+x"));
  const Elem x = ctx.elem(P("x")), x1 = ctx.elem(P("x+1"));
  Seq s{x1, x, x1};
  EXPECT_EQ(s.length(), 3U);
  EXPECT_EQ(s[0], x);
  EXPECT_EQ(s.multiplicity(x1), 2U);
  EXPECT_TRUE(s.has_subsequence(Seq{x1, x1}));
  EXPECT_FALSE(s.has_subsequence(Seq{x, x}));
  EXPECT_EQ(s.without(Seq{x1}), (Seq{x, x1}));
  EXPECT_EQ(gf2dav::sigma(ctx, Seq{}), ctx.one());
}

TEST(ProductTable, Examples) {
  const RingCtx ctx(P("x^2+x"));
  const Elem x = ctx.elem(P("x")), x1 = ctx.elem(P("x+1"));
  const auto t = gf2dav::build_table(ctx, Seq{x, x1});
  EXPECT_EQ(t.all_products().to_vector(), (std::vector<std::uint32_t>{0, 1, 2, 3}));
  EXPECT_EQ(t.proper_products().to_vector(), (std::vector<std::uint32_t>{1, 2, 3}));
  EXPECT_EQ(t.sigma(), ctx.zero());
  EXPECT_FALSE(gf2dav::is_reducible(ctx, Seq{x, x1}));

  const auto empty = gf2dav::build_table(ctx, Seq{});
  EXPECT_EQ(empty.all_products().to_vector(), (std::vector<std::uint32_t>{1}));
  EXPECT_TRUE(empty.proper_products().empty());
}

TEST(ProductTable, Reducibility) {
  const RingCtx ctx(P("x"));
  EXPECT_TRUE(gf2dav::is_reducible(ctx, Seq{ctx.zero(), ctx.zero()}));
  EXPECT_EQ(gf2dav::reducibility_witness(ctx, Seq{ctx.zero(), ctx.zero()}), (Seq{ctx.zero()}));
  EXPECT_FALSE(gf2dav::is_reducible(ctx, Seq{ctx.zero()}));
  EXPECT_TRUE(gf2dav::is_reducible(ctx, Seq{ctx.one()}));  // empty product is 1
  EXPECT_EQ(gf2dav::reducibility_witness(ctx, Seq{ctx.one()}), Seq{});
  EXPECT_FALSE(gf2dav::reducibility_witness(ctx, Seq{ctx.zero()}).has_value());
}

TEST(ProductTable, WitnessesMultiplyToTarget) {
  const RingCtx ctx(P("x^3+x"));
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<Elem> terms;
    const int len = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < len; ++i) terms.push_back(ctx.elem_at(static_cast<std::uint32_t>(rng() % ctx.size())));
    const auto t = gf2dav::build_table(ctx, terms);
    for (std::uint32_t v = 0; v < ctx.size(); ++v) {
      const auto all = t.witness_all(ctx.elem_at(v));
      ASSERT_EQ(all.has_value(), t.all_products().contains(v));
      if (all) { EXPECT_EQ(ctx.product(gf2dav::pick(terms, *all).terms()), ctx.elem_at(v)); }
      const auto proper = t.witness_proper(ctx.elem_at(v));
      ASSERT_EQ(proper.has_value(), t.proper_products().contains(v));
      if (proper) {
        EXPECT_LT(proper->size(), terms.size());
        EXPECT_EQ(ctx.product(gf2dav::pick(terms, *proper).terms()), ctx.elem_at(v));
      }
    }
  }
}

TEST(ProductTable, MixedContextThrows) {
  const RingCtx a(P("x^2")), b(P("x^2+1"));
  gf2dav::ProductTable t(a);
  EXPECT_THROW(t.append(b.one()), gf2dav::MixedContext);
}

TEST(Davenport, SemigroupExamples) {
  EXPECT_EQ(gf2dav::davenport_semigroup(RingCtx(P("x"))).value, 2);
  EXPECT_EQ(gf2dav::davenport_semigroup(RingCtx(P("x^2+x"))).value, 3);
  EXPECT_EQ(gf2dav::davenport_semigroup(RingCtx(P("x^2+x+1"))).value, 3);
  const RingCtx sq(P("x^2"));
  const auto r = gf2dav::davenport_semigroup(sq);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.extremal.length(), 2U);
  EXPECT_FALSE(gf2dav::is_reducible(sq, r.extremal));
  EXPECT_EQ(r.provenance, gf2dav::Provenance::search);
}

TEST(Davenport, GroupExamples) {
  EXPECT_EQ(gf2dav::davenport_group(gf2dav::unit_group_table(RingCtx(P("x")))).value, 1);
  EXPECT_EQ(gf2dav::davenport_group(gf2dav::unit_group_table(RingCtx(P("x^2")))).value, 2);
  EXPECT_EQ(gf2dav::davenport_group(gf2dav::unit_group_table(RingCtx(P("x^2+x+1")))).value, 3);
  // Klein four-group
  const auto g = gf2dav::unit_group_table(RingCtx(P("x^4+x^2")));
  EXPECT_EQ(g.order(), 4U);
  EXPECT_FALSE(g.is_cyclic());
  EXPECT_EQ(gf2dav::davenport_group(g).value, 3);
}

TEST(Davenport, QuotientGroup) {
  const RingCtx ctx(P("x^3"));
  const auto g = gf2dav::unit_group_table(ctx);
  ASSERT_EQ(g.order(), 4U);
  gf2dav::ElemSet bits(ctx.size());
  bits.insert(ctx.one().index());
  bits.insert(ctx.elem(P("x^2+1")).index());
  const gf2dav::UnitSet k(ctx.tag(), bits);
  ASSERT_TRUE(k.is_subgroup(ctx));
  const auto q = quotient_group(g, k);
  EXPECT_EQ(q.order(), 2U);
  EXPECT_EQ(gf2dav::davenport_group(q).value, 2);

  gf2dav::ElemSet bad(ctx.size());
  bad.insert(ctx.elem(P("x+1")).index());
  EXPECT_THROW(quotient_group(g, gf2dav::UnitSet(ctx.tag(), bad)), gf2dav::NotASubgroup);
}

TEST(Davenport, BudgetExceeded) {
  const RingCtx ctx(P("x^4+x+1"));
  try {
    gf2dav::davenport_semigroup(ctx, 10);
    FAIL() << "expected BudgetExceeded";
  } catch (const gf2dav::BudgetExceeded& e) {
    EXPECT_GE(e.lower_bound(), 1);
    EXPECT_EQ(e.nodes(), 10U);  // nodes visited before stopping
  }
  const auto g = gf2dav::unit_group_table(ctx);
  EXPECT_THROW(gf2dav::davenport_group(g, {.budget = 3}), gf2dav::BudgetExceeded);
  const auto fast = gf2dav::davenport_group(g, {.budget = 3, .cyclic_fast_path = true});
  EXPECT_EQ(fast.value, 15);
  EXPECT_EQ(fast.provenance, gf2dav::Provenance::formula);
  const auto searched = gf2dav::davenport_group(g);
  EXPECT_EQ(searched.value, 15);
  EXPECT_EQ(searched.provenance, gf2dav::Provenance::search);
}

TEST(Subgroups, Enumerate) {
  const auto g = gf2dav::unit_group_table(RingCtx(P("x^4+x^2")));
  const auto subs = gf2dav::enumerate_subgroups(g);
  EXPECT_EQ(subs.size(), 5U);  // Klein four-group
  EXPECT_EQ(subs.front().size(), 1U);
  EXPECT_EQ(subs.back().size(), 4U);
  EXPECT_EQ(gf2dav::enumerate_subgroups(gf2dav::unit_group_table(RingCtx(P("x^4+x+1")))).size(), 4U);  // C15
}

TEST(Subgroups, SubsetWithProductIn) {
  const RingCtx ctx(P("x^2+x+1"));
  const Elem x = ctx.elem(P("x")), x1 = ctx.elem(P("x+1"));
  gf2dav::UnitSet trivial(ctx.tag(), [&] {
    gf2dav::ElemSet b(ctx.size());
    b.insert(1);
    return b;
  }());
  EXPECT_EQ(gf2dav::subset_with_product_in(ctx, Seq{x, x1}, trivial), (Seq{x, x1}));
  EXPECT_EQ(gf2dav::subset_with_product_in(ctx, Seq{x, x, x}, trivial), (Seq{x, x, x}));
  EXPECT_FALSE(gf2dav::subset_with_product_in(ctx, Seq{x, x}, trivial).has_value());
  EXPECT_FALSE(gf2dav::subset_with_product_in(ctx, Seq{}, trivial).has_value());
  EXPECT_THROW(gf2dav::subset_with_product_in(ctx, Seq{ctx.zero()}, trivial), gf2dav::NonUnit);
}

TEST(ZeroSumProperty, SemigroupMatchesNaive) {
  for (const Poly& f : all_moduli(3)) {
    const auto naive = oracle::davenport_semigroup(f.to_u64(), 7);
    ASSERT_FALSE(naive.saturated);
    EXPECT_EQ(gf2dav::davenport_semigroup(RingCtx(f)).value, naive.value) << gf2dav::format(f);
  }
}

TEST(ZeroSumProperty, GroupMatchesNaiveUpToOrderEight) {
  for (const Poly& f : all_moduli(5)) {
    const RingCtx ctx(f);
    const auto g = gf2dav::unit_group_table(ctx);
    if (g.order() > 8) continue;
    const auto naive = oracle::davenport_units(f.to_u64(), g.order() + 1);
    ASSERT_FALSE(naive.saturated);
    EXPECT_EQ(gf2dav::davenport_group(g).value, naive.value) << gf2dav::format(f);
  }
}

TEST(ZeroSumProperty, TableMatchesSubsetEnumeration) {
  std::mt19937_64 rng(12345);
  const auto moduli = all_moduli(3);
  for (int rep = 0; rep < 300; ++rep) {
    const RingCtx ctx(moduli[rng() % moduli.size()]);
    std::vector<Elem> terms;
    std::vector<std::uint64_t> raw;
    const auto len = rng() % 11;
    for (std::size_t i = 0; i < len; ++i) {
      const auto v = static_cast<std::uint32_t>(rng() % ctx.size());
      terms.push_back(ctx.elem_at(v));
      raw.push_back(v);
    }
    const auto t = gf2dav::build_table(ctx, terms);
    const auto [all, proper] = oracle::subset_products(raw, ctx.modulus().to_u64());
    for (std::uint32_t v = 0; v < ctx.size(); ++v) {
      EXPECT_EQ(t.all_products().contains(v), all[v]);
      EXPECT_EQ(t.proper_products().contains(v), proper[v]);
    }
  }
}

TEST(ZeroSumProperty, ReducibilityIsMonotone) {
  std::mt19937_64 rng(99);
  const RingCtx ctx(P("x^3+x^2"));
  for (int rep = 0; rep < 300; ++rep) {
    Seq s;
    for (int i = 0; i < 4; ++i) s.add(ctx.elem_at(static_cast<std::uint32_t>(rng() % ctx.size())));
    if (!gf2dav::is_reducible(ctx, s)) continue;
    Seq longer = s;
    longer.add(ctx.elem_at(static_cast<std::uint32_t>(rng() % ctx.size())));
    EXPECT_TRUE(gf2dav::is_reducible(ctx, longer));
  }
}

TEST(ZeroSumProperty, UnitsEmbedInSemigroupBound) {
  // Every irreducible sequence of units is zero-sum free, so D(U) <= D(S_R).
  for (const Poly& f : all_moduli(4)) {
    const RingCtx ctx(f);
    EXPECT_LE(gf2dav::davenport_group(gf2dav::unit_group_table(ctx)).value, gf2dav::davenport_semigroup(ctx).value);
  }
}

TEST(ZeroSumProperty, SubgroupProductExists) {
  // Any |G/K| units contain a nonempty subsequence with product in K.
  for (const Poly& f : all_moduli(4)) {
    const RingCtx ctx(f);
    const auto g = gf2dav::unit_group_table(ctx);
    std::mt19937_64 rng(f.to_u64());
    for (const auto& k : gf2dav::enumerate_subgroups(g)) {
      const auto q = quotient_group(g, k);
      const int dq = gf2dav::davenport_group(q).value;
      for (int rep = 0; rep < 10; ++rep) {
        Seq s;
        for (int i = 0; i < dq; ++i) s.add(g.element(static_cast<std::uint32_t>(rng() % g.order())));
        const auto w = gf2dav::subset_with_product_in(ctx, s, k);
        ASSERT_TRUE(w.has_value());
        EXPECT_FALSE(w->empty());
        EXPECT_TRUE(s.has_subsequence(*w));
        EXPECT_TRUE(k.contains(gf2dav::sigma(ctx, *w)));
      }
    }
  }
}

TEST(SmallDavenport, DirectMatchesShifted) {
  for (const Poly& f : all_moduli(3)) {
    const RingCtx ctx(f);
    const int big = gf2dav::davenport_semigroup(ctx).value;
    EXPECT_EQ(gf2dav::small_davenport_direct(ctx, static_cast<std::size_t>(big) + 1), big - 1) << gf2dav::format(f);
    EXPECT_EQ(gf2dav::small_davenport(ctx), big - 1);
  }
}

}  // namespace

#include <gtest/gtest.h>

#include <random>

#include "gf2dav/reduce.hpp"

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

Seq random_seq(const RingCtx& ctx, std::size_t len, std::mt19937_64& rng) {
  Seq s;
  for (std::size_t i = 0; i < len; ++i) s.add(ctx.elem_at(static_cast<std::uint32_t>(rng() % ctx.size())));
  return s;
}

TEST(Delta, Examples) {
  EXPECT_EQ(gf2dav::delta_f(P("x")).value, 1);
  EXPECT_EQ(gf2dav::delta_f(P("x+1")).value, 1);
  EXPECT_EQ(gf2dav::delta_f(P("x^2+x")).value, 2);
  EXPECT_EQ(gf2dav::delta_f(P("x^2+x+1")).value, 0);
  EXPECT_EQ(gf2dav::delta_f(P("x^2+1")).value, 1);
  EXPECT_EQ(gf2dav::delta_f(P("x^5+x")).gcd_with_x_x1, P("x^2+x"));
  EXPECT_THROW(gf2dav::delta_f(Poly::one()), gf2dav::ConstantInput);
}

TEST(SelectV, Examples) {
  const RingCtx a(P("x^2+x"));
  const Elem x = a.elem(P("x")), x1 = a.elem(P("x+1"));
  EXPECT_EQ(gf2dav::select_v(a, Seq{a.one(), x, x1}), (std::vector<Elem>{x, x1}));

  const RingCtx b(P("x^2"));
  const Elem bx = b.elem(P("x"));
  EXPECT_EQ(gf2dav::select_v(b, Seq{b.one(), bx, bx}), (std::vector<Elem>{bx, bx}));
  EXPECT_TRUE(gf2dav::select_v(b, Seq{b.one(), b.elem(P("x+1"))}).empty());
}

TEST(StabilizerChain, Examples) {
  const RingCtx a(P("x^2"));
  const Elem x = a.elem(P("x"));
  const auto ch = gf2dav::stabilizer_chain(a, {x, x});
  ASSERT_EQ(ch.chain.size(), 3U);
  EXPECT_EQ(ch.chain[0].size(), 1U);
  EXPECT_EQ(ch.chain[1].size(), 2U);
  EXPECT_EQ(ch.strict_steps, (gf2dav::IndexSet{0}));
  EXPECT_TRUE(ch.nested);
  EXPECT_TRUE(ch.counting_ok);  // |M| = 1 >= 2 - 1

  const RingCtx b(P("x^2+x"));
  const auto ch2 = gf2dav::stabilizer_chain(b, {b.elem(P("x")), b.elem(P("x+1"))});
  EXPECT_TRUE(ch2.strict_steps.empty());
  EXPECT_TRUE(ch2.counting_ok);  // 0 >= 2 - 2
}

TEST(Reduce, Examples) {
  const RingCtx a(P("x^2+x"));
  const Elem x = a.elem(P("x")), x1 = a.elem(P("x+1"));
  const auto t1 = gf2dav::reduce_sequence(a, Seq{x, x1, a.one()});
  EXPECT_EQ(t1.w, (Seq{a.one()}));
  EXPECT_EQ(t1.result, (Seq{x, x1}));
  EXPECT_EQ(t1.j, (gf2dav::IndexSet{0, 1}));
  EXPECT_EQ(t1.path, gf2dav::ReductionPath::proof);

  const RingCtx b(P("x"));
  const auto t2 = gf2dav::reduce_sequence(b, Seq{b.zero(), b.zero()});
  EXPECT_EQ(t2.result, (Seq{b.zero()}));
  ASSERT_EQ(t2.lifted.size(), 1U);
  EXPECT_EQ(t2.lifted[0].second, b.one());

  const RingCtx c(P("x^2+x+1"));
  const Elem cx = c.elem(P("x"));
  const auto t3 = gf2dav::reduce_sequence(c, Seq{cx, cx, cx});
  EXPECT_TRUE(t3.v.empty());
  EXPECT_TRUE(t3.j.empty());
  EXPECT_TRUE(t3.result.empty());
  EXPECT_EQ(t3.w.length(), 3U);
}

TEST(Reduce, IrreducibleInputCarriesCertificate) {
  const RingCtx a(P("x^2+x"));
  const Seq t{a.elem(P("x")), a.elem(P("x+1"))};
  try {
    gf2dav::reduce_sequence(a, t);
    FAIL() << "expected IrreducibleInput";
  } catch (const gf2dav::IrreducibleInput& e) {
    EXPECT_EQ(e.sequence(), t);
    EXPECT_EQ(e.sigma(), a.zero());
    EXPECT_EQ(e.proper_product_count(), 3U);
  }
}

TEST(ReduceProperty, OutputIsProperSubsequenceWithSameProduct) {
  std::mt19937_64 rng(2024);
  for (const Poly& f : all_moduli(4)) {
    const RingCtx ctx(f);
    const auto d = static_cast<std::size_t>(gf2dav::davenport_semigroup(ctx).value);
    for (int rep = 0; rep < 40; ++rep) {
      const Seq t = random_seq(ctx, d, rng);
      for (const bool exact : {false, true}) {
        const auto tr = gf2dav::reduce_sequence(ctx, t, {.exact_v = exact});
        EXPECT_LT(tr.result.length(), t.length());
        EXPECT_TRUE(t.has_subsequence(tr.result));
        EXPECT_EQ(gf2dav::sigma(ctx, tr.result), gf2dav::sigma(ctx, t));
        EXPECT_EQ(tr.result.length() + tr.w.length(), t.length());
      }
    }
  }
}

TEST(ReduceProperty, VIsHEquivalentAndChainNested) {
  std::mt19937_64 rng(77);
  for (const Poly& f : all_moduli(4)) {
    const RingCtx ctx(f);
    for (int rep = 0; rep < 30; ++rep) {
      const Seq t = random_seq(ctx, 1 + rng() % 7, rng);
      const auto v = gf2dav::select_v(ctx, t);
      EXPECT_TRUE(t.has_subsequence(Seq(v)));
      EXPECT_TRUE(ctx.h_equiv(ctx.product(v), gf2dav::sigma(ctx, t)));
      EXPECT_TRUE(gf2dav::stabilizer_chain(ctx, v).nested);
      const auto s = gf2dav::shortest_v(ctx, t);
      EXPECT_LE(s.size(), v.size());
      EXPECT_TRUE(ctx.h_equiv(ctx.product(s), gf2dav::sigma(ctx, t)));
      EXPECT_TRUE(gf2dav::stabilizer_chain(ctx, s).counting_ok) << gf2dav::format(f);
    }
  }
}

TEST(ReduceProperty, LiftPreservesProductWithV) {
  std::mt19937_64 rng(31337);
  for (const Poly& f : all_moduli(4)) {
    const RingCtx ctx(f);
    for (int rep = 0; rep < 30; ++rep) {
      const Seq t = random_seq(ctx, 1 + rng() % 8, rng);
      gf2dav::ReductionTrace tr;
      try {
        tr = gf2dav::reduce_sequence(ctx, t);
      } catch (const gf2dav::IrreducibleInput&) {
        continue;
      }
      const Elem sv = ctx.product(tr.v);
      for (const auto& [a, la] : tr.lifted) {
        EXPECT_TRUE(ctx.is_unit(la));
        EXPECT_EQ(ctx.mul(sv, la), ctx.mul(sv, a));
      }
    }
  }
}

TEST(ReduceProperty, IrreducibleIffNoProperProduct) {
  std::mt19937_64 rng(5);
  for (const Poly& f : all_moduli(3)) {
    const RingCtx ctx(f);
    for (int rep = 0; rep < 50; ++rep) {
      const Seq t = random_seq(ctx, 1 + rng() % 4, rng);
      bool threw = false;
      try {
        gf2dav::reduce_sequence(ctx, t);
      } catch (const gf2dav::IrreducibleInput&) {
        threw = true;
      }
      EXPECT_EQ(threw, !gf2dav::is_reducible(ctx, t));
    }
  }
}

}  // namespace

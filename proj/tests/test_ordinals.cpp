#include "doctest.h"
#include "hfzf/fixedpoint.hpp"
#include "hfzf/grammar.hpp"
#include "hfzf/ordinals.hpp"
#include "hfzf/testing.hpp"

using namespace hfzf;

TEST_CASE("ordinal predicates") {
  Ctx ctx;
  CHECK(is_ord(ctx.ordinal(3)));
  // {1} is not transitive: 0 in 1 but 0 not in {1}
  CHECK_FALSE(is_ord(parse_set(ctx, "{1}")));
  CHECK_FALSE(is_transset(parse_set(ctx, "{1}")));
  CHECK(is_transset(ctx.ordinal(4)));
  for (std::uint32_t n = 0; n <= 8; ++n) CHECK_FALSE(is_limit(ctx.ordinal(n)));
  CHECK(lt(ctx.ordinal(2), ctx.ordinal(5)));
  CHECK_FALSE(lt(ctx.ordinal(5), ctx.ordinal(2)));
  // membership without ordinality on the right is not <
  CHECK_FALSE(lt(ctx.ordinal(1), parse_set(ctx, "{1}")));
}

TEST_CASE("nat_upto equals the iterated successor operator") {
  Ctx ctx;
  CHECK(nat_upto(ctx, 0) == ctx.empty());
  CHECK(nat_upto(ctx, 3) == parse_set(ctx, "{0,1,2}"));
  for (std::uint32_t k = 0; k <= 6; ++k)
    CHECK(nat_upto(ctx, k) == iterate_op(ctx, MonoOp::repl_succ(), k));
  CtxOptions tiny;
  tiny.nat_bound = 10;
  Ctx bounded(tiny);
  CHECK_THROWS_AS((void)nat_upto(bounded, 11), Error);
}

TEST_CASE("nat_case") {
  Ctx ctx;
  HSet seven = ctx.ordinal(7);
  SetFn identity = [](HSet m) { return m; };
  CHECK(nat_case(seven, identity, ctx.ordinal(0)) == seven);
  CHECK(nat_case(seven, identity, succ(ctx.ordinal(2))) == ctx.ordinal(2));
  // succ works on non-ordinals too
  HSet odd = parse_set(ctx, "{3,5}");
  CHECK(nat_case(seven, identity, succ(odd)) == odd);
  try {
    (void)nat_case(seven, identity, parse_set(ctx, "{1}"));
    FAIL("accepted a non-successor");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotZeroOrSucc);
  }
}

TEST_CASE("nat_rec and nat_add") {
  Ctx ctx;
  BinFn step = [](HSet, HSet r) { return succ(r); };
  BinFn dbl = [](HSet, HSet r) { return succ(succ(r)); };
  CHECK(nat_rec(ctx.ordinal(4), step, ctx.ordinal(0)) == ctx.ordinal(4));
  CHECK(nat_rec(ctx.ordinal(0), dbl, ctx.ordinal(3)) == ctx.ordinal(6));
  CHECK(nat_add(ctx.ordinal(3), ctx.ordinal(2)) == ctx.ordinal(5));
  CHECK(nat_add(ctx.ordinal(0), ctx.ordinal(4)) == ctx.ordinal(4));
  CHECK(nat_add(ctx.ordinal(2), ctx.ordinal(2)) == ctx.ordinal(4));
  CHECK(nat_add(ctx.ordinal(1), ctx.ordinal(3)) == ctx.ordinal(4));
  try {
    (void)nat_rec(ctx.ordinal(0), step, parse_set(ctx, "{1}"));
    FAIL("accepted a non-natural");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotANat);
  }
  testing::Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    HSet a = ctx.ordinal(static_cast<std::uint32_t>(rng.below(5)));
    HSet k = ctx.ordinal(static_cast<std::uint32_t>(rng.below(7)));
    CHECK(nat_rec(a, dbl, k) == testing::native_nat_rec(a, dbl, k));
  }
}

TEST_CASE("trichotomy and closure rules") {
  Ctx ctx;
  for (std::uint32_t i = 0; i <= 8; ++i)
    for (std::uint32_t j = 0; j <= 8; ++j) {
      HSet a = ctx.ordinal(i), b = ctx.ordinal(j);
      int count = (lt(a, b) ? 1 : 0) + (a == b ? 1 : 0) + (lt(b, a) ? 1 : 0);
      CHECK(count == 1);
    }
  CHECK(is_ord(ctx.empty()));
  CHECK(is_ord(succ(ctx.ordinal(7))));
  CHECK(is_ord(big_union(parse_set(ctx, "{1,4,2}"))));
  for (HSet x : ctx.ordinal(6)) CHECK(is_ord(x));
}

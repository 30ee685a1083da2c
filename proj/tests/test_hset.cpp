#include "doctest.h"
#include "hfzf/grammar.hpp"
#include "hfzf/hset.hpp"
#include "hfzf/testing.hpp"

using namespace hfzf;

TEST_CASE("parsing and printing the set grammar") {
  Ctx ctx;
  CHECK(parse_set(ctx, "{}") == ctx.empty());
  CHECK(parse_set(ctx, "2") == ctx.make({ctx.empty(), ctx.make({ctx.empty()})}));
  // <0,1> = {{0},{0,1}}
  HSet zero = ctx.empty();
  HSet one = ctx.make({zero});
  CHECK(parse_set(ctx, "<0,1>") ==
        ctx.make({ctx.make({zero}), ctx.make({zero, one})}));
  CHECK(parse_set(ctx, " { 1 , 2 } ") == parse_set(ctx, "{1,2}"));
  // duplicates collapse
  CHECK(parse_set(ctx, "{{},{}}") == parse_set(ctx, "{{}}"));

  CHECK(print_set(ctx.empty()) == "0");
  CHECK(print_set(ctx.ordinal(7)) == "7");
  CHECK(print_set(pair(ctx.ordinal(0), ctx.ordinal(1))) == "<0,1>");
  CHECK(print_set(ctx.make({ctx.ordinal(2)})) == "{2}");

  CHECK_THROWS_WITH_AS(parse_set(ctx, "{"), doctest::Contains("position"),
                       Error);
  CHECK_THROWS_AS(parse_set(ctx, "{1,}"), Error);
  CHECK_THROWS_AS(parse_set(ctx, "<1>"), Error);
  CHECK_THROWS_AS(parse_set(ctx, "1 2"), Error);
}

TEST_CASE("print/parse round trip on random sets") {
  Ctx ctx;
  testing::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    HSet a = testing::random_hset(ctx, rng, 5, 3);
    CHECK(parse_set(ctx, print_set(a)) == a);
  }
}

TEST_CASE("membership, subset, extensional equality") {
  Ctx ctx;
  HSet zero = ctx.empty();
  HSet se = ctx.make({zero});
  CHECK(member(zero, se));
  CHECK_FALSE(member(se, se));
  CHECK(subset(zero, se));
  CHECK(subset(zero, zero));
  CHECK(eq(parse_set(ctx, "{{},{}}"), parse_set(ctx, "{{}}")));
  testing::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    HSet s = testing::random_hset(ctx, rng, 4, 3);
    CHECK(subset(zero, s));
  }
}

TEST_CASE("basic algebra") {
  Ctx ctx;
  HSet two = ctx.ordinal(2);
  CHECK(union2(ctx.ordinal(1), parse_set(ctx, "{1}")) == two);
  CHECK(inter(ctx.ordinal(3), parse_set(ctx, "{1,5}")) == parse_set(ctx, "{1}"));
  CHECK(diff(ctx.ordinal(3), two) == parse_set(ctx, "{2}"));
  // big_union({{a},{a,b}}) with a=0, b={0} flattens to {0,{0}} = 2
  CHECK(big_union(parse_set(ctx, "{2}")) == two);
  CHECK(big_union(parse_set(ctx, "{{0},{0,1}}")) == two);
  CHECK(powerset(ctx.ordinal(1)) == two);
  CHECK(cons(two, two) == succ(two));
  CHECK(succ(two) == ctx.ordinal(3));
  CHECK(big_union(ctx.empty()) == ctx.empty());
}

TEST_CASE("powerset guard and budget guard") {
  CtxOptions small;
  small.budget = 400;
  Ctx ctx(small);
  std::vector<HSet> many;
  for (std::uint32_t i = 0; i < 21; ++i) many.push_back(ctx.ordinal(i));
  HSet wide = ctx.make(many);
  CHECK_THROWS_AS((void)powerset(wide), Error);
  try {
    powerset(wide);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundExceeded);
  }
  try {
    for (std::uint32_t i = 0; i < 100; ++i) (void)powerset(ctx.ordinal(4));
    // keep allocating distinct sets until the budget trips
    HSet acc = ctx.empty();
    for (std::uint32_t i = 0; i < 100000; ++i) acc = ctx.make({acc});
    FAIL("budget never tripped");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("pairs") {
  Ctx ctx;
  HSet zero = ctx.ordinal(0), one = ctx.ordinal(1), two = ctx.ordinal(2);
  // pair(0,0) = {{0}}
  CHECK(pair(zero, zero) == parse_set(ctx, "{{0}}"));
  CHECK(fst(pair(one, two)) == one);
  CHECK(snd(pair(one, two)) == two);
  CHECK(split([](HSet a, HSet b) { return pair(b, a); }, pair(zero, one)) ==
        pair(one, zero));
  CHECK_THROWS_AS((void)fst(two), Error);
  try {
    (void)snd(ctx.ordinal(3));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAPair);
  }
}

TEST_CASE("pair injectivity on random samples") {
  Ctx ctx;
  testing::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    HSet a = testing::random_hset(ctx, rng, 4, 2);
    HSet b = testing::random_hset(ctx, rng, 4, 2);
    HSet c = testing::random_hset(ctx, rng, 4, 2);
    HSet d = testing::random_hset(ctx, rng, 4, 2);
    if (pair(a, b) == pair(c, d)) {
      CHECK(a == c);
      CHECK(b == d);
    }
  }
}

TEST_CASE("separation and replacement") {
  Ctx ctx;
  HSet one = ctx.ordinal(1);
  CHECK(sep(ctx.ordinal(3), [&](HSet x) { return eq(x, one); }) ==
        parse_set(ctx, "{1}"));
  CHECK(repl(ctx.ordinal(2), [](HSet x) { return succ(x); }) ==
        parse_set(ctx, "{1,2}"));
  CHECK(repl(ctx.empty(), [](HSet x) { return succ(x); }) == ctx.empty());
}

TEST_CASE("lambda sets, application, restriction") {
  Ctx ctx;
  HSet f = lambda_set(ctx.ordinal(2), [](HSet x) { return succ(x); });
  CHECK(apply(f, ctx.ordinal(1)) == ctx.ordinal(2));
  CHECK_THROWS_AS((void)apply(f, ctx.ordinal(5)), Error);
  try {
    (void)apply(f, ctx.ordinal(5));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInDomain);
  }
  HSet multi = ctx.make({pair(ctx.ordinal(0), ctx.ordinal(1)),
                         pair(ctx.ordinal(0), ctx.ordinal(2))});
  try {
    (void)apply(multi, ctx.ordinal(0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSingleValued);
  }
  HSet identity3 = lambda_set(ctx.ordinal(3), [](HSet x) { return x; });
  CHECK(restrict_fn(identity3, ctx.ordinal(1)) ==
        ctx.make({pair(ctx.empty(), ctx.empty())}));
}

TEST_CASE("canonical order is total and stable") {
  Ctx ctx;
  testing::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    HSet a = testing::random_hset(ctx, rng, 4, 3);
    HSet b = testing::random_hset(ctx, rng, 4, 3);
    HSet c = testing::random_hset(ctx, rng, 4, 3);
    int ab = ctx.compare(a, b);
    CHECK(ctx.compare(b, a) == -ab);
    CHECK((ab == 0) == (a == b));
    if (ctx.compare(a, b) < 0 && ctx.compare(b, c) < 0)
      CHECK(ctx.compare(a, c) < 0);
  }
}

TEST_CASE("frozen context rejects construction, serves queries") {
  Ctx ctx;
  HSet two = ctx.ordinal(2);
  HSet p = pair(two, two);
  ctx.freeze();
  CHECK(ctx.frozen());
  CHECK(member(ctx.make({two}), p));  // re-deriving existing values is fine
  CHECK(print_set(p) == "<2,2>");
  CHECK_FALSE(subset(p, two));
  try {
    (void)pair(p, p);  // genuinely new value
    FAIL("construction on a frozen context succeeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FrozenContext);
  }
}

TEST_CASE("mixed contexts are rejected") {
  Ctx a, b;
  CHECK_THROWS_AS((void)union2(a.empty(), b.empty()), Error);
}

#include "doctest.h"
#include "hfzf/datatypes.hpp"
#include "hfzf/fixedpoint.hpp"
#include "hfzf/grammar.hpp"
#include "hfzf/relations.hpp"
#include "hfzf/testing.hpp"

using namespace hfzf;

TEST_CASE("operator evaluation") {
  Ctx ctx;
  HSet s = parse_set(ctx, "{1,{2}}");
  CHECK(eval_op(MonoOp::identity(), s) == s);
  CHECK(eval_op(MonoOp::repl_succ(), parse_set(ctx, "{0,1}")) ==
        parse_set(ctx, "{0,1,2}"));
  HSet r = parse_set(ctx, "{<0,1>}");
  MonoOp closure = MonoOp::id_union(parse_set(ctx, "{0,1}"),
                                    MonoOp::compose_rel(r, MonoOp::identity()));
  CHECK(eval_op(closure, ctx.empty()) == parse_set(ctx, "{<0,0>,<1,1>}"));
  MonoOp listop = MonoOp::sum(
      MonoOp::constant(parse_set(ctx, "{0}")),
      MonoOp::product(MonoOp::constant(parse_set(ctx, "{0}")),
                      MonoOp::identity()));
  CHECK(eval_op(listop, ctx.empty()) == ctx.make({nil(ctx)}));
}

TEST_CASE("bnd_mono_check") {
  Ctx ctx;
  HSet r = parse_set(ctx, "{<0,1>}");
  HSet fld = field(r);
  MonoOp closure =
      MonoOp::id_union(fld, MonoOp::compose_rel(r, MonoOp::identity()));
  CHECK(bnd_mono_check(prod(fld, fld), closure));
  CHECK_FALSE(bnd_mono_check(ctx.ordinal(1), MonoOp::constant(ctx.ordinal(3))));
  // tiny banach instance: h({0}) = {0} - g``({1} - f``{0}) = {0}
  HSet x = parse_set(ctx, "{0}"), y = parse_set(ctx, "{1}");
  HSet f = parse_set(ctx, "{<0,1>}"), g = parse_set(ctx, "{<1,0>}");
  CHECK(bnd_mono_check(x, MonoOp::diff_const(x, g, y, f)));
  // the raw escape hatch is excluded from the guarantee
  CHECK_FALSE(bnd_mono_check(
      ctx.ordinal(1), MonoOp::raw([](HSet v) { return v; }, "identity")));
}

TEST_CASE("lfp_iterate") {
  Ctx ctx;
  try {
    (void)lfp_iterate(ctx.ordinal(5), MonoOp::repl_succ());
    FAIL("unbounded operator accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBounded);
  }
  // an oscillating raw body is bounded but never stationary
  HSet d = ctx.ordinal(2);
  MonoOp flip = MonoOp::raw([d](HSet x) { return diff(d, x); }, "flip");
  try {
    (void)lfp_iterate(d, flip);
    FAIL("oscillating operator accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonConvergence);
  }
  // empty bounding set degenerates immediately
  CHECK(lfp_iterate(ctx.empty(), MonoOp::identity()) == ctx.empty());
  HSet r = parse_set(ctx, "{<0,1>}");
  HSet fld = field(r);
  MonoOp closure =
      MonoOp::id_union(fld, MonoOp::compose_rel(r, MonoOp::identity()));
  CHECK(lfp_iterate(prod(fld, fld), closure) == rtrancl(r));
  CHECK(lfp_iterate(prod(fld, fld), closure) == testing::warshall_rtrancl(r));
  // two steps of the list operator over {0}
  MonoOp listop = MonoOp::sum(
      MonoOp::constant(ctx.make({ctx.empty()})),
      MonoOp::product(MonoOp::constant(parse_set(ctx, "{0}")),
                      MonoOp::identity()));
  HSet two_steps = iterate_op(ctx, listop, 2);
  CHECK(two_steps == ctx.make({nil(ctx), cons_list(ctx.ordinal(0), nil(ctx))}));
}

TEST_CASE("lfp matches the intersection oracle and the lfp rules") {
  Ctx ctx;
  testing::Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    auto inst = testing::random_bounded_op(ctx, rng);
    HSet fix = lfp_iterate(inst.bound, inst.op);
    CHECK(fix == testing::lfp_by_intersection(inst.bound, inst.op));
    CHECK(eval_op(inst.op, fix) == fix);
    for (HSet a : powerset(inst.bound))
      if (subset(eval_op(inst.op, a), a)) CHECK(subset(fix, a));
  }
}

TEST_CASE("induction rule") {
  Ctx ctx;
  HSet r = parse_set(ctx, "{<0,1>,<1,2>}");
  HSet fld = field(r);
  MonoOp closure =
      MonoOp::id_union(fld, MonoOp::compose_rel(r, MonoOp::identity()));
  HSet bound = prod(fld, fld);
  HSet oracle = testing::warshall_rtrancl(r);
  CHECK(induction_check(bound, closure,
                        [&](HSet e) { return member(e, oracle); }));
  CHECK(induction_check(bound, closure, [](HSet) { return true; }));
  CHECK_FALSE(induction_check(bound, closure, [](HSet) { return false; }));
}

TEST_CASE("lfp monotonicity rule") {
  Ctx ctx;
  HSet r = parse_set(ctx, "{<0,1>}");
  HSet bigger = parse_set(ctx, "{<0,1>,<1,2>}");
  auto closure_of = [&](HSet rel) {
    return MonoOp::id_union(field(rel),
                            MonoOp::compose_rel(rel, MonoOp::identity()));
  };
  HSet dr = prod(field(r), field(r));
  HSet db = prod(field(bigger), field(bigger));
  CHECK(lfp_mono_check(dr, closure_of(r), db, closure_of(bigger)));
  CHECK(lfp_mono_check(dr, closure_of(r), dr, closure_of(r)));
  HSet d = parse_set(ctx, "{0}");
  CHECK_FALSE(lfp_mono_check(d, MonoOp::constant(d), d,
                             MonoOp::constant(ctx.empty())));
}

TEST_CASE("banach decomposition") {
  Ctx ctx;
  HSet x = parse_set(ctx, "{0}"), y = parse_set(ctx, "{1}");
  HSet f = parse_set(ctx, "{<0,1>}"), g = parse_set(ctx, "{<1,0>}");
  BanachParts parts = banach_decompose(x, y, f, g);
  CHECK(parts.xa == ctx.empty());
  CHECK(parts.xb == x);
  CHECK(parts.ya == ctx.empty());
  CHECK(parts.yb == y);
  BanachParts none = banach_decompose(ctx.empty(), ctx.empty(), ctx.empty(),
                                      ctx.empty());
  CHECK(none.xa == ctx.empty());
  CHECK(none.xb == ctx.empty());
  CHECK(none.ya == ctx.empty());
  CHECK(none.yb == ctx.empty());
  try {
    (void)banach_decompose(x, y, parse_set(ctx, "{<0,1>,<0,0>}"), g);
    FAIL("multivalued f accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAFunction);
  }
  try {
    (void)banach_decompose(x, y, parse_set(ctx, "{<1,1>}"), g);
    FAIL("wrong domain accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainMismatch);
  }
  testing::Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    HSet xs = ctx.ordinal(1 + static_cast<std::uint32_t>(rng.below(8)));
    HSet ys = repl(ctx.ordinal(1 + static_cast<std::uint32_t>(rng.below(8))),
                   [](HSet e) { return pair(e, e); });
    HSet ff = testing::random_function(ctx, rng, xs, ys);
    HSet gg = testing::random_function(ctx, rng, ys, xs);
    BanachParts p = banach_decompose(xs, ys, ff, gg);
    CHECK(inter(p.xa, p.xb) == ctx.empty());
    CHECK(union2(p.xa, p.xb) == xs);
    CHECK(inter(p.ya, p.yb) == ctx.empty());
    CHECK(union2(p.ya, p.yb) == ys);
    CHECK(image(ff, p.xa) == p.ya);
    CHECK(image(gg, p.yb) == p.xb);
  }
}

TEST_CASE("schroeder-bernstein") {
  Ctx ctx;
  HSet x = parse_set(ctx, "{0}"), y = parse_set(ctx, "{1}");
  HSet f = parse_set(ctx, "{<0,1>}"), g = parse_set(ctx, "{<1,0>}");
  CHECK(schroeder_bernstein(x, y, f, g) == f);
  CHECK(schroeder_bernstein(ctx.empty(), ctx.empty(), ctx.empty(),
                            ctx.empty()) == ctx.empty());
  try {
    HSet x2 = parse_set(ctx, "{0,1}");
    HSet f2 = parse_set(ctx, "{<0,2>,<1,2>}");
    (void)schroeder_bernstein(x2, parse_set(ctx, "{2}"), f2,
                              parse_set(ctx, "{<2,0>}"));
    FAIL("non-injective f accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInjective);
  }
  testing::Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    HSet xs = ctx.ordinal(6);
    HSet ys = repl(ctx.ordinal(6), [](HSet e) { return pair(e, e); });
    HSet ff = testing::random_injection(ctx, rng, xs, ys);
    HSet gg = testing::random_injection(ctx, rng, ys, xs);
    CHECK(testing::is_bijection(schroeder_bernstein(xs, ys, ff, gg), xs, ys));
  }
}

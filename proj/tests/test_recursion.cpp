#include "doctest.h"
#include "hfzf/datatypes.hpp"
#include "hfzf/grammar.hpp"
#include "hfzf/ordinals.hpp"
#include "hfzf/recursion.hpp"
#include "hfzf/relations.hpp"
#include "hfzf/testing.hpp"

using namespace hfzf;

namespace {

// H(x, f) = {x} union the set of previous results
const RecBody collect_body = [](HSet x, const RecArgs& f) {
  return cons(x, rel_range(f.as_set()));
};

}  // namespace

TEST_CASE("nfold_union") {
  Ctx ctx;
  HSet a = parse_set(ctx, "{2}");
  CHECK(nfold_union(a, 0) == a);
  CHECK(nfold_union(a, 1) == ctx.ordinal(2));
  CHECK(nfold_union(parse_set(ctx, "{{0}}"), 2) == ctx.empty());
}

TEST_CASE("eclose") {
  Ctx ctx;
  CHECK(eclose(ctx.empty()) == ctx.empty());
  CHECK(eclose(parse_set(ctx, "{2}")) == ctx.ordinal(3));
  CHECK(eclose(parse_set(ctx, "{{1}}")) == parse_set(ctx, "{{1},1,0}"));
  testing::Rng rng(19);
  for (int i = 0; i < 100; ++i) {
    HSet a = testing::random_hset(ctx, rng, 4, 3);
    HSet t = eclose(a);
    CHECK(subset(a, t));
    CHECK(is_transset(t));
  }
}

TEST_CASE("is_recfun") {
  Ctx ctx;
  HSet r = memrel(ctx.ordinal(2));
  RecBody zero_body = [&](HSet, const RecArgs&) { return ctx.empty(); };
  HSet f = parse_set(ctx, "{<0,0>}");
  CHECK(is_recfun(r, ctx.ordinal(1), zero_body, f));
  CHECK_FALSE(is_recfun(r, ctx.ordinal(1), zero_body, ctx.empty()));
  // empty predecessor set: only the empty function qualifies
  CHECK(is_recfun(r, ctx.ordinal(0), zero_body, ctx.empty()));
}

TEST_CASE("the_recfun") {
  Ctx ctx;
  RecBody id_body = [](HSet x, const RecArgs&) { return x; };
  CHECK(the_recfun(memrel(ctx.ordinal(3)), ctx.ordinal(2), id_body) ==
        parse_set(ctx, "{<0,0>,<1,1>}"));
  CHECK(the_recfun(memrel(ctx.ordinal(3)), ctx.ordinal(0), id_body) ==
        ctx.empty());
  try {
    (void)the_recfun(parse_set(ctx, "{<0,0>}"), ctx.ordinal(0), id_body);
    FAIL("cyclic relation accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotWellFounded);
  }
  try {
    (void)the_recfun(parse_set(ctx, "{<0,1>,<1,2>}"), ctx.ordinal(2), id_body);
    FAIL("non-transitive relation accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTransitive);
  }
}

TEST_CASE("wfrec") {
  Ctx ctx;
  RecBody id_body = [](HSet x, const RecArgs&) { return x; };
  CHECK(wfrec(parse_set(ctx, "{<0,1>,<1,2>}"), ctx.ordinal(5), id_body) ==
        ctx.ordinal(5));
  // over Memrel(4) the collect body rebuilds its argument
  RecBody values_body = [](HSet, const RecArgs& f) {
    return rel_range(f.as_set());
  };
  CHECK(wfrec(memrel(ctx.ordinal(4)), ctx.ordinal(3), values_body) ==
        ctx.ordinal(3));
  try {
    (void)wfrec(parse_set(ctx, "{<0,0>}"), ctx.ordinal(0), id_body);
    FAIL("cyclic relation accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotWellFounded);
  }
  // the equation wfrec(r,a,H) = H(a, lam x in preds. wfrec(r,x,H))
  testing::Rng rng(29);
  for (int i = 0; i < 60; ++i) {
    HSet r = testing::random_acyclic_relation(ctx, rng, 7, 10);
    HSet fld = field(r);
    if (fld.card() == 0) continue;
    HSet a = fld.at(rng.below(fld.card()));
    HSet lam = lambda_set(inv_image_singleton(r, a),
                          [&](HSet x) { return wfrec(r, x, collect_body); });
    CHECK(wfrec(r, a, collect_body) == collect_body(a, SetRecArgs(lam)));
  }
}

TEST_CASE("transrec") {
  Ctx ctx;
  RecBody id_body = [](HSet x, const RecArgs&) { return x; };
  CHECK(transrec(ctx.empty(), id_body) == ctx.empty());
  // the rank body through transrec equals rank
  RecBody rank_body = [](HSet x, const RecArgs& f) {
    std::vector<HSet> stages;
    for (HSet y : x) stages.push_back(succ(f.lookup(y)));
    return big_union(x.ctx().make(std::move(stages)));
  };
  testing::Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    HSet a = testing::random_hset(ctx, rng, 4, 3);
    CHECK(transrec(a, rank_body) == rank(a));
    HSet lam = lambda_set(a, [&](HSet x) { return transrec(x, collect_body); });
    CHECK(transrec(a, collect_body) == collect_body(a, SetRecArgs(lam)));
    for (HSet k : a) {
      HSet big = memrel(eclose(ctx.make({a})));
      HSet small = memrel(eclose(ctx.make({k})));
      CHECK(wfrec(big, k, collect_body) == wfrec(small, k, collect_body));
    }
  }
}

TEST_CASE("rank") {
  Ctx ctx;
  CHECK(rank(ctx.empty()) == ctx.empty());
  for (std::uint32_t n = 0; n <= 8; ++n)
    CHECK(rank(ctx.ordinal(n)) == ctx.ordinal(n));
  CHECK(rank(pair(ctx.ordinal(0), ctx.ordinal(0))) == ctx.ordinal(2));
  testing::Rng rng(37);
  for (int i = 0; i < 200; ++i) {
    HSet a = testing::random_hset(ctx, rng, 4, 3);
    HSet b = testing::random_hset(ctx, rng, 4, 3);
    for (HSet x : a) CHECK(lt(rank(x), rank(a)));
    CHECK(lt(rank(a), rank(pair(a, b))));
    CHECK(lt(rank(b), rank(pair(a, b))));
  }
}

TEST_CASE("vfrom") {
  Ctx ctx;
  CHECK(vfrom(ctx.empty(), 0) == ctx.empty());
  CHECK(vfrom(ctx.empty(), 2) == parse_set(ctx, "{0,{0}}"));
  CHECK(vfrom(ctx.empty(), 4).card() == 16);
  // V[A]_1 = A union powerset(V[A]_0) = A union powerset(A)
  HSet a = parse_set(ctx, "{7}");
  CHECK(vfrom(a, 1) == union2(a, powerset(a)));
  try {
    (void)vfrom(ctx.empty(), 5);
    FAIL("stage 5 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundExceeded);
  }
  // the rank criterion
  for (std::size_t n = 0; n <= 4; ++n) {
    HSet stage = vfrom(ctx.empty(), n);
    for (HSet y : stage)
      CHECK(lt(rank(y), ctx.ordinal(static_cast<std::uint32_t>(n))));
  }
}

TEST_CASE("in_univ") {
  Ctx ctx;
  HSet a = parse_set(ctx, "{{{2}}}");
  for (std::uint32_t n = 0; n < 6; ++n) CHECK(in_univ(a, ctx.ordinal(n)));
  for (HSet x : a) CHECK(in_univ(a, x));
  testing::Rng rng(41);
  for (int i = 0; i < 60; ++i)
    CHECK(in_univ(ctx.empty(), testing::random_hset(ctx, rng, 4, 3)));
}

TEST_CASE("vrec") {
  Ctx ctx;
  HSet a = parse_set(ctx, "{2,{2}}");
  CHECK(vrec(a, [](HSet x, const RecArgs&) { return x; }) == a);
  // list length through the vrec-based list_rec on [0,0]
  HSet l = list_of(ctx, {ctx.ordinal(0), ctx.ordinal(0)});
  CHECK(list_rec(ctx.ordinal(0),
                 [](HSet, HSet, HSet r) { return succ(r); }, l) ==
        ctx.ordinal(2));
  try {
    (void)vrec(a, [](HSet x, const RecArgs& f) { return f.lookup(x); });
    FAIL("self query accepted");
  } catch (const VrecGuardError& e) {
    CHECK(e.query_rank() == e.bound_rank());
    CHECK(e.query() == print_set(a));
  }
  try {
    (void)vrec(a, [](HSet, const RecArgs& f) { return f.as_set(); });
    FAIL("materialized a whole stage");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMaterializable);
  }
}

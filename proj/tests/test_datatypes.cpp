#include "doctest.h"
#include "hfzf/datatypes.hpp"
#include "hfzf/grammar.hpp"
#include "hfzf/ordinals.hpp"
#include "hfzf/testing.hpp"

using namespace hfzf;

namespace {

const SetPred any = [](HSet) { return true; };

}  // namespace

TEST_CASE("sums") {
  Ctx ctx;
  CHECK(inl(ctx.empty()) == pair(ctx.ordinal(0), ctx.empty()));
  CHECK(inr(ctx.ordinal(1)) == pair(ctx.ordinal(1), ctx.ordinal(1)));
  CHECK(case_sum([](HSet a) { return succ(a); }, [](HSet b) { return b; },
                 inl(ctx.ordinal(5))) == ctx.ordinal(6));
  CHECK(case_sum([](HSet a) { return a; }, [](HSet b) { return succ(b); },
                 inr(ctx.ordinal(5))) == ctx.ordinal(6));
  testing::Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    HSet x = testing::random_hset(ctx, rng, 3, 2);
    HSet y = testing::random_hset(ctx, rng, 3, 2);
    CHECK(inl(x) != inr(y));
    if (inl(x) == inl(y)) CHECK(x == y);
  }
  try {
    (void)case_sum([](HSet a) { return a; }, [](HSet b) { return b; },
                   ctx.ordinal(3));
    FAIL("untagged value accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASum);
  }
}

TEST_CASE("part") {
  Ctx ctx;
  HSet z = ctx.make({inl(ctx.ordinal(0)), inr(ctx.ordinal(1))});
  CHECK(part(z, {Inj::Left}) == ctx.make({inl(ctx.ordinal(0))}));
  CHECK(part(ctx.empty(), {Inj::Right}) == ctx.empty());
  HSet nested = ctx.make({inr(inl(ctx.ordinal(2)))});
  CHECK(part(nested, {Inj::Right, Inj::Left}) == nested);
  CHECK(part(nested, {Inj::Left}) == ctx.empty());
}

TEST_CASE("list recognizer and case analysis") {
  Ctx ctx;
  SetPred in_a = [&](HSet x) { return x == ctx.ordinal(0); };
  CHECK(is_list(in_a, cons_list(ctx.ordinal(0), nil(ctx))));
  CHECK(is_list(in_a, nil(ctx)));
  CHECK_FALSE(is_list(in_a, pair(ctx.ordinal(0), ctx.ordinal(1))));
  CHECK_FALSE(is_list(in_a, cons_list(ctx.ordinal(1), nil(ctx))));
  HSet c = ctx.ordinal(7);
  CHECK(list_case(c, [](HSet, HSet) { return HSet(); }, nil(ctx)) == c);
  CHECK(list_case(c, [](HSet x, HSet y) { return pair(x, y); },
                  cons_list(ctx.ordinal(0), nil(ctx))) ==
        pair(ctx.ordinal(0), nil(ctx)));
  try {
    (void)list_case(c, [](HSet, HSet) { return HSet(); }, ctx.ordinal(2));
    FAIL("non-list accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAList);
  }
}

TEST_CASE("list recursion equations") {
  Ctx ctx;
  HSet c = ctx.ordinal(0);
  TernFn len = [](HSet, HSet, HSet r) { return succ(r); };
  CHECK(list_rec(c, len, list_of(ctx, {ctx.ordinal(0), ctx.ordinal(0)})) ==
        ctx.ordinal(2));
  CHECK(list_rec(c, len, nil(ctx)) == c);
  HSet ys = list_of(ctx, {ctx.ordinal(1)});
  CHECK(append(nil(ctx), ys) == ys);
  HSet l = list_of(ctx, {ctx.ordinal(0), ctx.ordinal(1), ctx.ordinal(2)});
  CHECK(rev(l) == list_of(ctx, {ctx.ordinal(2), ctx.ordinal(1), ctx.ordinal(0)}));
  CHECK(append(list_of(ctx, {ctx.ordinal(0)}), ys) ==
        list_of(ctx, {ctx.ordinal(0), ctx.ordinal(1)}));
  SetFn h = [](HSet x) { return succ(x); };
  CHECK(list_map(h, cons_list(ctx.ordinal(0), l)) ==
        cons_list(ctx.ordinal(1), list_map(h, l)));
  testing::Rng rng(47);
  std::vector<HSet> atoms{ctx.ordinal(0), ctx.ordinal(1)};
  for (int i = 0; i < 60; ++i) {
    HSet m = testing::random_list(ctx, rng, atoms, 6);
    CHECK(rev(rev(m)) == m);
    CHECK(rev(list_map(h, m)) == list_map(h, rev(m)));
    CHECK(list_map([](HSet u) { return u; }, m) == m);
    CHECK(list_rec(ctx.ordinal(0), len, m) ==
          testing::native_list_rec(ctx.ordinal(0), len, m));
  }
}

TEST_CASE("terms") {
  Ctx ctx;
  SetPred in_a = [&](HSet x) {
    return x == ctx.ordinal(0) || x == ctx.ordinal(1);
  };
  HSet leaf1 = apply_term(ctx.ordinal(1), nil(ctx));
  HSet t = apply_term(ctx.ordinal(0), list_of(ctx, {leaf1}));
  CHECK(is_term(in_a, t));
  CHECK_FALSE(is_term(in_a, ctx.ordinal(3)));
  CHECK_FALSE(is_term(in_a, apply_term(ctx.ordinal(2), nil(ctx))));
  TernFn d = [](HSet x, HSet zs, HSet rs) {
    return pair(x, pair(zs, rs));
  };
  CHECK(term_rec(d, apply_term(ctx.ordinal(0), nil(ctx))) ==
        pair(ctx.ordinal(0), pair(nil(ctx), nil(ctx))));
  // node count of a three-node term
  TernFn size_body = [](HSet, HSet, HSet rs) {
    HSet total = rs.ctx().ordinal(1);
    for (HSet r : list_elements(rs)) total = nat_add(total, r);
    return total;
  };
  HSet three = apply_term(ctx.ordinal(0), list_of(ctx, {leaf1, leaf1}));
  CHECK(term_rec(size_body, three) == ctx.ordinal(3));
  try {
    (void)term_rec(d, ctx.ordinal(2));
    FAIL("non-term accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotATerm);
  }
}

TEST_CASE("reflect") {
  Ctx ctx;
  HSet a = ctx.ordinal(0);
  HSet leafB = apply_term(ctx.ordinal(1), nil(ctx));
  HSet leafC = apply_term(ctx.ordinal(2), nil(ctx));
  CHECK(reflect(apply_term(a, nil(ctx))) == apply_term(a, nil(ctx)));
  CHECK(reflect(apply_term(a, list_of(ctx, {leafB, leafC}))) ==
        apply_term(a, list_of(ctx, {leafC, leafB})));
  testing::Rng rng(53);
  std::vector<HSet> labels{ctx.ordinal(0), ctx.ordinal(1)};
  for (int i = 0; i < 60; ++i) {
    HSet t = testing::random_term(ctx, rng, labels, 4, 3);
    CHECK(reflect(reflect(t)) == t);
  }
}

TEST_CASE("tf views decode the constructors") {
  Ctx ctx;
  HSet f = fcons(tcons(ctx.ordinal(1), fnil(ctx)), fnil(ctx));
  auto v = try_tf(f);
  REQUIRE(v.has_value());
  CHECK(v->kind == TFView::Kind::Fcons);
  CHECK(v->tree == tcons(ctx.ordinal(1), fnil(ctx)));
  CHECK(v->forest == fnil(ctx));
  auto t = try_tf(tcons(ctx.ordinal(0), f));
  REQUIRE(t.has_value());
  CHECK(t->kind == TFView::Kind::Tcons);
  CHECK(t->label == ctx.ordinal(0));
  CHECK(t->forest == f);
  CHECK(try_tf(fnil(ctx))->kind == TFView::Kind::Fnil);
  CHECK_FALSE(try_tf(ctx.ordinal(3)).has_value());
}

TEST_CASE("trees and forests") {
  Ctx ctx;
  SetPred in_a = [&](HSet x) {
    return x == ctx.ordinal(0) || x == ctx.ordinal(1);
  };
  CHECK(is_forest(in_a, fnil(ctx)));
  CHECK(is_tree(in_a, tcons(ctx.ordinal(0), fnil(ctx))));
  CHECK_FALSE(is_tree(in_a, fnil(ctx)));
  CHECK_FALSE(is_forest(in_a, tcons(ctx.ordinal(0), fnil(ctx))));
  CHECK(is_tf(in_a, fcons(tcons(ctx.ordinal(1), fnil(ctx)), fnil(ctx))));

  HSet c = ctx.ordinal(9);
  BinFn b2 = [](HSet x, HSet f) { return pair(x, f); };
  BinFn d2 = [](HSet t, HSet f) { return pair(f, t); };
  CHECK(tf_case(b2, c, d2, fnil(ctx)) == c);
  HSet tree = tcons(ctx.ordinal(0), fnil(ctx));
  CHECK(tf_case(b2, c, d2, tree) == pair(ctx.ordinal(0), fnil(ctx)));
  CHECK(tf_case(b2, c, d2, fcons(tree, fnil(ctx))) == pair(fnil(ctx), tree));
  try {
    (void)tf_case(b2, c, d2, ctx.ordinal(2));
    FAIL("untagged value accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotATF);
  }
}

TEST_CASE("tf recursion and derived operations") {
  Ctx ctx;
  std::vector<HSet> labels{ctx.ordinal(0), ctx.ordinal(1)};
  TernFn b = [](HSet x, HSet f, HSet r) { return pair(x, pair(f, r)); };
  HSet c = ctx.ordinal(9);
  QuadFn d = [](HSet t, HSet f, HSet r1, HSet r2) {
    return pair(t, pair(f, pair(r1, r2)));
  };
  CHECK(tf_rec(b, c, d, fnil(ctx)) == c);
  testing::Rng rng(59);
  for (int i = 0; i < 50; ++i) {
    HSet z = testing::random_tf(ctx, rng, labels, 1 + rng.below(5));
    CHECK(tf_rec(b, c, d, z) == testing::native_tf_rec(b, c, d, z));
    CHECK(tf_map([](HSet u) { return u; }, z) == z);
    CHECK(ordinal_value(tf_size(z)) ==
          static_cast<std::int64_t>(list_length(tf_preorder(z))));
  }
  HSet two = tcons(labels[0], fcons(tcons(labels[1], fnil(ctx)), fnil(ctx)));
  CHECK(tf_size(two) == ctx.ordinal(2));
  CHECK(tf_preorder(two) == list_of(ctx, {labels[0], labels[1]}));
  CHECK(tf_size(fnil(ctx)) == ctx.ordinal(0));
}

TEST_CASE("recursion operators reject malformed encodings up front") {
  Ctx ctx;
  TernFn noop3 = [](HSet, HSet, HSet r) { return r; };
  QuadFn noop4 = [](HSet, HSet, HSet, HSet r) { return r; };
  // Cons whose deep tail is not Nil
  HSet broken_list = cons_list(ctx.ordinal(0), ctx.ordinal(0));
  CHECK_THROWS_AS((void)list_rec(ctx.empty(), noop3, broken_list), Error);
  try {
    (void)list_rec(ctx.empty(), noop3, broken_list);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAList);
  }
  HSet broken_term = apply_term(ctx.ordinal(0), broken_list);
  try {
    (void)term_rec(noop3, broken_term);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotATerm);
  }
  HSet broken_tf = fcons(ctx.ordinal(1), fnil(ctx));  // head is not a tree
  try {
    (void)tf_rec(noop3, ctx.empty(), noop4, broken_tf);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotATF);
  }
}

TEST_CASE("finite powerset") {
  Ctx ctx;
  CHECK(fin_enum(ctx.ordinal(2)) == powerset(ctx.ordinal(2)));
  CHECK(fin_enum(ctx.empty()) == ctx.make({ctx.empty()}));
  HSet fin3 = fin_enum(ctx.ordinal(3));
  for (HSet b : fin3)
    for (HSet cset : fin3) CHECK(member(union2(b, cset), fin3));
  // union of a finite family of finite sets
  HSet family = parse_set(ctx, "{{0,1},{2}}");
  CHECK(member(big_union(family), fin3));
  CHECK(fin_induction_check(ctx.ordinal(3),
                            [&](HSet x) { return x.card() <= 3; }));
  try {
    std::vector<HSet> big;
    for (std::uint32_t i = 0; i < 13; ++i) big.push_back(ctx.ordinal(i));
    (void)fin_enum(ctx.make(big));
    FAIL("oversized carrier accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundExceeded);
  }
}

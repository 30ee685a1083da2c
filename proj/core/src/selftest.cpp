#include "hfzf/selftest.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "hfzf/datatypes.hpp"
#include "hfzf/fixedpoint.hpp"
#include "hfzf/grammar.hpp"
#include "hfzf/ordinals.hpp"
#include "hfzf/proplogic.hpp"
#include "hfzf/recursion.hpp"
#include "hfzf/relations.hpp"
#include "hfzf/testing.hpp"

namespace hfzf::selftest {

namespace {

using testing::Rng;

class Suite {
 public:
  explicit Suite(std::ostream& out) : out_(out) {}

  bool ok() const { return ok_; }

  // body returns a counterexample description, or nothing
  void prop(const std::string& name,
            const std::function<std::optional<std::string>()>& body) {
    try {
      if (auto fail = body()) {
        ok_ = false;
        out_ << "FAIL " << name << ": " << *fail << "\n";
      } else {
        out_ << "ok " << name << "\n";
      }
    } catch (const Error& e) {
      ok_ = false;
      out_ << "FAIL " << name << ": unexpected " << e.what() << "\n";
    }
  }

 private:
  std::ostream& out_;
  bool ok_ = true;
};

std::optional<std::string> pass() { return std::nullopt; }
std::optional<std::string> fail(const std::string& s) { return s; }

// ---------------------------------------------------------------- core ----

void core_suite(Suite& s, std::uint64_t seed) {
  s.prop("core.extensionality", [&] {
    Ctx ctx;
    Rng rng(seed);
    for (int i = 0; i < 500; ++i) {
      HSet a = testing::random_hset(ctx, rng, 5, 3);
      HSet b = testing::random_hset(ctx, rng, 5, 3);
      bool same_members = true;
      for (HSet x : union2(a, b))
        if (member(x, a) != member(x, b)) same_members = false;
      if (eq(a, b) != same_members)
        return fail(print_set(a) + " vs " + print_set(b));
    }
    return pass();
  });

  s.prop("core.pair_injective", [&] {
    Ctx ctx;
    Rng rng(seed + 1);
    for (int i = 0; i < 400; ++i) {
      HSet a = testing::random_hset(ctx, rng, 4, 2);
      HSet b = testing::random_hset(ctx, rng, 4, 2);
      HSet c = testing::random_hset(ctx, rng, 4, 2);
      HSet d = testing::random_hset(ctx, rng, 4, 2);
      if (pair(a, b) == pair(c, d) && !(a == c && b == d))
        return fail(print_set(a) + "," + print_set(b) + " vs " +
                    print_set(c) + "," + print_set(d));
      auto dec = try_pair(pair(a, b));
      if (!dec || dec->first != a || dec->second != b)
        return fail("decode failed for " + print_set(pair(a, b)));
    }
    return pass();
  });

  s.prop("core.succ_injective_nonzero", [&] {
    Ctx ctx;
    Rng rng(seed + 2);
    for (int i = 0; i < 300; ++i) {
      HSet x = testing::random_hset(ctx, rng, 4, 3);
      HSet y = testing::random_hset(ctx, rng, 4, 3);
      if (succ(x) == ctx.ordinal(0)) return fail("succ = 0 at " + print_set(x));
      if (succ(x) == succ(y) && x != y)
        return fail(print_set(x) + " vs " + print_set(y));
    }
    return pass();
  });

  s.prop("core.print_parse_roundtrip", [&] {
    Ctx ctx;
    Rng rng(seed + 3);
    for (int i = 0; i < 300; ++i) {
      HSet a = testing::random_hset(ctx, rng, 5, 3);
      if (parse_set(ctx, print_set(a)) != a) return fail(print_set(a));
    }
    return pass();
  });

  s.prop("core.description_failures", [&] {
    Ctx ctx;
    HSet f = ctx.make({pair(ctx.ordinal(0), ctx.ordinal(1)),
                       pair(ctx.ordinal(0), ctx.ordinal(2))});
    try {
      apply(f, ctx.ordinal(0));
      return fail("ambiguous application accepted");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotSingleValued) return fail(e.what());
    }
    try {
      apply(f, ctx.ordinal(3));
      return fail("out-of-domain application accepted");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotInDomain) return fail(e.what());
    }
    return pass();
  });
}

// ---------------------------------------------------------- fixedpoint ----

void fixedpoint_suite(Suite& s, std::uint64_t seed) {
  s.prop("fixedpoint.lfp_matches_intersection_oracle", [&] {
    Ctx ctx;
    Rng rng(seed + 10);
    for (int i = 0; i < 100; ++i) {
      auto inst = testing::random_bounded_op(ctx, rng);
      HSet fast = lfp_iterate(inst.bound, inst.op);
      HSet oracle = testing::lfp_by_intersection(inst.bound, inst.op);
      if (fast != oracle)
        return fail(inst.op.describe() + " bound " + print_set(inst.bound));
    }
    return pass();
  });

  s.prop("fixedpoint.knaster_tarski_and_least_prefixedpoint", [&] {
    Ctx ctx;
    Rng rng(seed + 11);
    for (int i = 0; i < 100; ++i) {
      auto inst = testing::random_bounded_op(ctx, rng);
      if (!bnd_mono_check(inst.bound, inst.op))
        return fail("generated operator not bnd_mono");
      HSet fix = lfp_iterate(inst.bound, inst.op);
      if (eval_op(inst.op, fix) != fix)
        return fail("not a fixedpoint: " + inst.op.describe());
      for (HSet a : powerset(inst.bound)) {
        if (subset(eval_op(inst.op, a), a) && !subset(fix, a))
          return fail("not least at " + print_set(a));
      }
    }
    return pass();
  });

  s.prop("fixedpoint.monotonicity_by_construction", [&] {
    Ctx ctx;
    Rng rng(seed + 12);
    for (int i = 0; i < 200; ++i) {
      auto inst = testing::random_bounded_op(ctx, rng);
      HSet y = sep(inst.bound, [&](HSet) { return rng.below(4) != 0; });
      HSet x = sep(y, [&](HSet) { return rng.below(4) != 0; });
      if (!subset(eval_op(inst.op, x), eval_op(inst.op, y)))
        return fail(inst.op.describe());
    }
    return pass();
  });

  s.prop("fixedpoint.monotonicity_per_constructor", [&] {
    Ctx ctx;
    Rng rng(seed + 21);
    HSet r = parse_set(ctx, "{<0,1>,<1,2>,<2,0>}");
    HSet carrier = parse_set(ctx, "{0,1,2,<0,1>,{2}}");
    std::vector<MonoOp> ops{
        MonoOp::constant(parse_set(ctx, "{1}")),
        MonoOp::identity(),
        MonoOp::union_of(MonoOp::identity(), MonoOp::constant(ctx.ordinal(1))),
        MonoOp::product(MonoOp::identity(), MonoOp::identity()),
        MonoOp::sum(MonoOp::identity(), MonoOp::constant(ctx.ordinal(2))),
        MonoOp::id_union(ctx.ordinal(3), MonoOp::identity()),
        MonoOp::diff_const(ctx.ordinal(3), parse_set(ctx, "{<0,1>,<1,0>}"),
                           ctx.ordinal(2), parse_set(ctx, "{<0,0>,<1,1>}")),
        MonoOp::part_of({Inj::Right}, MonoOp::identity()),
        MonoOp::lists_of(MonoOp::identity(), 2),
        MonoOp::repl_succ(),
        MonoOp::fin_op(ctx.ordinal(2)),
    };
    auto check_chain = [&](const MonoOp& op,
                           HSet ground) -> std::optional<std::string> {
      if (!op.structurally_monotone()) return fail(op.describe());
      for (int i = 0; i < 40; ++i) {
        HSet y = sep(ground, [&](HSet) { return rng.below(3) != 0; });
        HSet x = sep(y, [&](HSet) { return rng.below(3) != 0; });
        if (!subset(eval_op(op, x), eval_op(op, y)))
          return fail(op.describe() + " at " + print_set(x) + " vs " +
                      print_set(y));
      }
      return pass();
    };
    for (const MonoOp& op : ops)
      if (auto failure = check_chain(op, carrier)) return failure;
    // composition consumes relations, so it gets a carrier of pairs
    HSet pair_carrier = prod(ctx.ordinal(3), ctx.ordinal(3));
    return check_chain(MonoOp::compose_rel(r, MonoOp::identity()),
                       pair_carrier);
  });

  s.prop("fixedpoint.not_bounded_is_reported", [&] {
    Ctx ctx;
    try {
      lfp_iterate(ctx.ordinal(5), MonoOp::repl_succ());
      return fail("successor operator accepted on a finite segment");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotBounded) return fail(e.what());
    }
    return pass();
  });

  s.prop("fixedpoint.induction_rule", [&] {
    Ctx ctx;
    HSet r = ctx.make({pair(ctx.ordinal(0), ctx.ordinal(1)),
                       pair(ctx.ordinal(1), ctx.ordinal(2))});
    HSet fld = field(r);
    MonoOp op = MonoOp::id_union(fld, MonoOp::compose_rel(r, MonoOp::identity()));
    HSet bound = prod(fld, fld);
    HSet closure = testing::warshall_rtrancl(r);
    SetPred reachable = [&](HSet e) { return member(e, closure); };
    if (!induction_check(bound, op, reachable)) return fail("oracle psi rejected");
    for (HSet e : lfp_iterate(bound, op))
      if (!reachable(e)) return fail("soundness: " + print_set(e));
    if (!induction_check(bound, op, [](HSet) { return true; }))
      return fail("constantly-true psi rejected");
    if (induction_check(bound, op, [](HSet) { return false; }))
      return fail("constantly-false psi accepted on nonempty lfp");
    return pass();
  });

  s.prop("fixedpoint.lfp_monotone_rule", [&] {
    Ctx ctx;
    HSet r = ctx.make({pair(ctx.ordinal(0), ctx.ordinal(1))});
    HSet extra = union2(r, ctx.make({pair(ctx.ordinal(1), ctx.ordinal(2))}));
    HSet fld_r = field(r), fld_e = field(extra);
    MonoOp h = MonoOp::id_union(fld_r, MonoOp::compose_rel(r, MonoOp::identity()));
    MonoOp i = MonoOp::id_union(fld_e, MonoOp::compose_rel(extra, MonoOp::identity()));
    if (!lfp_mono_check(prod(fld_r, fld_r), h, prod(fld_e, fld_e), i))
      return fail("nested closures rejected");
    if (!lfp_mono_check(prod(fld_r, fld_r), h, prod(fld_r, fld_r), h))
      return fail("reflexive instance rejected");
    HSet d = ctx.make({ctx.ordinal(0)});
    if (lfp_mono_check(d, MonoOp::constant(d), d, MonoOp::constant(ctx.empty())))
      return fail("shrinking constants accepted");
    return pass();
  });

  s.prop("relations.closure_matches_warshall", [&] {
    Ctx ctx;
    Rng rng(seed + 13);
    for (int i = 0; i < 500; ++i) {
      HSet r = testing::random_relation(ctx, rng, 1 + rng.below(8), 12);
      if (rtrancl(r) != testing::warshall_rtrancl(r))
        return fail(print_set(r));
      if (trancl(r) != testing::warshall_trancl(r)) return fail(print_set(r));
    }
    return pass();
  });

  s.prop("relations.closure_recursion_equation", [&] {
    Ctx ctx;
    Rng rng(seed + 14);
    for (int i = 0; i < 200; ++i) {
      HSet r = testing::random_relation(ctx, rng, 1 + rng.below(8), 12);
      HSet star = rtrancl(r);
      if (star != union2(id_on(field(r)), compose(r, star)))
        return fail(print_set(r));
    }
    return pass();
  });

  s.prop("relations.closure_intro_and_transitivity", [&] {
    Ctx ctx;
    Rng rng(seed + 15);
    for (int i = 0; i < 100; ++i) {
      HSet r = testing::random_relation(ctx, rng, 1 + rng.below(6), 10);
      HSet star = rtrancl(r);
      for (HSet a : field(r))
        if (!member(pair(a, a), star)) return fail("reflexivity at " + print_set(a));
      for (HSet e1 : star) {
        auto ab = try_pair(e1);
        for (HSet e2 : r) {
          auto bc = try_pair(e2);
          if (ab->second == bc->first &&
              !member(pair(ab->first, bc->second), star))
            return fail("step from " + print_set(e1));
        }
        for (HSet e2 : star) {
          auto bc = try_pair(e2);
          if (ab->second == bc->first &&
              !member(pair(ab->first, bc->second), star))
            return fail("transitivity from " + print_set(e1));
        }
      }
    }
    return pass();
  });

  s.prop("relations.wf_matches_subset_oracle", [&] {
    Ctx ctx;
    Rng rng(seed + 16);
    for (int i = 0; i < 200; ++i) {
      HSet r = testing::random_relation(ctx, rng, 1 + rng.below(5), 8);
      if (is_wf(r) != testing::wf_by_subsets(r)) return fail(print_set(r));
    }
    return pass();
  });

  s.prop("relations.wf_preserved_by_trancl", [&] {
    Ctx ctx;
    Rng rng(seed + 17);
    for (int i = 0; i < 200; ++i) {
      HSet r = testing::random_acyclic_relation(ctx, rng, 6, 10);
      if (!is_wf(r)) return fail("acyclic generator produced a cycle");
      if (!is_wf(trancl(r))) return fail(print_set(r));
    }
    return pass();
  });

  s.prop("relations.memrel_well_founded", [&] {
    Ctx ctx;
    Rng rng(seed + 18);
    for (int i = 0; i < 100; ++i) {
      HSet a = testing::random_hset(ctx, rng, 4, 3);
      if (!is_wf(memrel(a))) return fail(print_set(a));
    }
    return pass();
  });

  s.prop("fixedpoint.banach_six_equations", [&] {
    Ctx ctx;
    Rng rng(seed + 19);
    for (int i = 0; i < 200; ++i) {
      HSet x = ctx.ordinal(static_cast<std::uint32_t>(rng.below(9)));
      HSet y = repl(ctx.ordinal(static_cast<std::uint32_t>(rng.below(9))),
                    [](HSet e) { return pair(e, e); });
      if (x.card() == 0 || y.card() == 0) continue;
      HSet f = testing::random_function(ctx, rng, x, y);
      HSet g = testing::random_function(ctx, rng, y, x);
      auto parts = banach_decompose(x, y, f, g);
      bool ok = inter(parts.xa, parts.xb).card() == 0 &&
                union2(parts.xa, parts.xb) == x &&
                inter(parts.ya, parts.yb).card() == 0 &&
                union2(parts.ya, parts.yb) == y &&
                image(f, parts.xa) == parts.ya &&
                image(g, parts.yb) == parts.xb;
      if (!ok) return fail("f=" + print_set(f) + " g=" + print_set(g));
    }
    return pass();
  });

  s.prop("fixedpoint.schroeder_bernstein_bijection", [&] {
    Ctx ctx;
    Rng rng(seed + 20);
    for (int i = 0; i < 100; ++i) {
      HSet x = ctx.ordinal(6);
      HSet y = repl(ctx.ordinal(6), [](HSet e) { return pair(e, e); });
      HSet f = testing::random_injection(ctx, rng, x, y);
      HSet g = testing::random_injection(ctx, rng, y, x);
      HSet h = schroeder_bernstein(x, y, f, g);
      if (!testing::is_bijection(h, x, y))
        return fail("f=" + print_set(f) + " g=" + print_set(g));
      auto parts = banach_decompose(x, y, f, g);
      if (h != union2(restrict_fn(f, parts.xa),
                      converse(restrict_fn(g, parts.yb))))
        return fail("bijection differs from its stated form");
    }
    return pass();
  });
}

// ----------------------------------------------------------- recursion ----

void recursion_suite(Suite& s, std::uint64_t seed) {
  s.prop("recursion.rank_laws", [&] {
    Ctx ctx;
    Rng rng(seed + 30);
    for (std::uint32_t n = 0; n <= 8; ++n)
      if (rank(ctx.ordinal(n)) != ctx.ordinal(n))
        return fail("rank of ordinal " + std::to_string(n));
    for (int i = 0; i < 500; ++i) {
      HSet a = testing::random_hset(ctx, rng, 4, 3);
      HSet b = testing::random_hset(ctx, rng, 4, 3);
      if (!is_ord(rank(a))) return fail("rank not an ordinal");
      for (HSet x : a)
        if (!lt(rank(x), rank(a))) return fail("monotone at " + print_set(a));
      HSet p = pair(a, b);
      if (!lt(rank(a), rank(p)) || !lt(rank(b), rank(p)))
        return fail("pair ranks at " + print_set(p));
    }
    return pass();
  });

  s.prop("recursion.rank_agrees_with_transrec", [&] {
    Ctx ctx;
    Rng rng(seed + 31);
    for (int i = 0; i < 60; ++i) {
      HSet a = testing::random_hset(ctx, rng, 4, 3);
      HSet via = transrec(a, [](HSet x, const RecArgs& f) {
        std::vector<HSet> stages;
        for (HSet y : x) stages.push_back(succ(f.lookup(y)));
        return big_union(x.ctx().make(std::move(stages)));
      });
      if (via != rank(a)) return fail(print_set(a));
    }
    return pass();
  });

  s.prop("recursion.eclose_properties", [&] {
    Ctx ctx;
    Rng rng(seed + 32);
    for (int i = 0; i < 200; ++i) {
      HSet a = testing::random_hset(ctx, rng, 4, 3);
      HSet t = eclose(a);
      if (!subset(a, t)) return fail("not a superset: " + print_set(a));
      if (!is_transset(t)) return fail("not transitive: " + print_set(a));
      // minimality against a transitive superset with extra junk
      HSet junk = union2(t, eclose(ctx.make({testing::random_hset(ctx, rng, 3, 2)})));
      if (is_transset(junk) && subset(a, junk) && !subset(t, junk))
        return fail("not minimal under " + print_set(junk));
    }
    return pass();
  });

  s.prop("recursion.nfold_union_examples", [&] {
    Ctx ctx;
    HSet a = parse_set(ctx, "{2}");
    if (nfold_union(a, 0) != a) return fail("0-fold");
    if (nfold_union(a, 1) != ctx.ordinal(2)) return fail("1-fold of {2}");
    if (nfold_union(parse_set(ctx, "{{0}}"), 2) != ctx.empty())
      return fail("2-fold of {{0}}");
    return pass();
  });

  s.prop("recursion.v_hierarchy", [&] {
    Ctx ctx;
    HSet zero = ctx.empty();
    HSet a = ctx.make({ctx.ordinal(1)});
    HSet b = union2(a, ctx.make({parse_set(ctx, "{1}")}));
    // non-empty bases blow past the powerset guard at stage 3, so the
    // monotonicity grid stops at 2 for them and runs to 4 over the empty base
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t n = m; n <= 2; ++n) {
        if (!subset(vfrom(a, m), vfrom(b, n)))
          return fail("monotonicity " + std::to_string(m) + "," + std::to_string(n));
        if (!subset(vfrom(zero, m), vfrom(a, n)))
          return fail("base monotonicity " + std::to_string(m) + "," + std::to_string(n));
      }
    for (std::size_t m = 0; m <= 4; ++m)
      for (std::size_t n = m; n <= 4; ++n)
        if (!subset(vfrom(zero, m), vfrom(zero, n)))
          return fail("stage monotonicity " + std::to_string(m) + "," + std::to_string(n));
    Rng rng(seed + 33);
    for (int i = 0; i < 50; ++i) {
      HSet x = testing::random_hset(ctx, rng, 3, 2);
      for (std::size_t n = 0; n < 2; ++n)
        if (subset(x, vfrom(a, n)) && !member(x, vfrom(a, n + 1)))
          return fail("stage closure at " + print_set(x));
      for (std::size_t n = 0; n < 4; ++n)
        if (subset(x, vfrom(zero, n)) && !member(x, vfrom(zero, n + 1)))
          return fail("empty-base stage closure at " + print_set(x));
    }
    return pass();
  });

  s.prop("recursion.rank_criterion_for_stages", [&] {
    Ctx ctx;
    Rng rng(seed + 34);
    for (std::size_t n = 0; n <= 4; ++n) {
      HSet stage = vfrom(ctx.empty(), n);
      for (HSet y : stage)
        if (!lt(rank(y), ctx.ordinal(static_cast<std::uint32_t>(n))))
          return fail("member of V_" + std::to_string(n));
      for (int i = 0; i < 50; ++i) {
        HSet y = testing::random_hset(ctx, rng, 4, 2);
        bool inside = member(y, stage);
        bool small = lt(rank(y), ctx.ordinal(static_cast<std::uint32_t>(n)));
        if (inside != small) return fail(print_set(y));
      }
    }
    return pass();
  });

  s.prop("recursion.univ_closure", [&] {
    Ctx ctx;
    Rng rng(seed + 35);
    HSet a = ctx.make({parse_set(ctx, "{{2}}")});
    for (std::uint32_t n = 0; n < 6; ++n)
      if (!in_univ(a, ctx.ordinal(n))) return fail("naturals");
    for (HSet x : a)
      if (!in_univ(a, x)) return fail("base");
    for (int i = 0; i < 100; ++i) {
      HSet x = testing::random_hset(ctx, rng, 4, 3);
      HSet y = testing::random_hset(ctx, rng, 4, 3);
      if (!in_univ(ctx.empty(), x)) return fail("HF outside V_omega");
      if (in_univ(a, x) && in_univ(a, y) && !in_univ(a, pair(x, y)))
        return fail("pair closure at " + print_set(pair(x, y)));
    }
    return pass();
  });

  s.prop("recursion.membership_induction", [&] {
    Ctx ctx;
    Rng rng(seed + 36);
    // psi closed under the membership step must hold everywhere
    SetPred psi = [&](HSet x) { return in_univ(ctx.empty(), x); };
    for (int i = 0; i < 50; ++i) {
      HSet a = testing::random_hset(ctx, rng, 4, 3);
      for (HSet x : cons(a, eclose(a))) {
        bool all_members = true;
        for (HSet y : x)
          if (!psi(y)) all_members = false;
        if (all_members && !psi(x)) return fail("closure gap");
      }
      if (!psi(a)) return fail("psi fails at " + print_set(a));
    }
    return pass();
  });

  s.prop("recursion.the_recfun_laws", [&] {
    Ctx ctx;
    Rng rng(seed + 37);
    RecBody body = [](HSet x, const RecArgs& f) {
      return cons(x, rel_range(f.as_set()));
    };
    for (int i = 0; i < 100; ++i) {
      HSet r = trancl(testing::random_acyclic_relation(ctx, rng, 6, 8));
      HSet fld = field(r);
      if (fld.card() == 0) continue;
      HSet a = fld.at(rng.below(fld.card()));
      HSet f = the_recfun(r, a, body);
      if (!is_recfun(r, a, body, f)) return fail("is_recfun rejected output");
      if (wftrec(r, a, body) != body(a, SetRecArgs(f)))
        return fail("wftrec differs from its definition");
      // a perturbed candidate must be rejected
      if (f.card() > 0) {
        auto p = try_pair(f.at(0));
        HSet g = cons(pair(p->first, succ(p->second)),
                      diff(f, ctx.make({f.at(0)})));
        if (g != f && is_recfun(r, a, body, g))
          return fail("uniqueness violated");
      }
    }
    return pass();
  });

  s.prop("recursion.wfrec_equation", [&] {
    Ctx ctx;
    Rng rng(seed + 38);
    RecBody body = [](HSet x, const RecArgs& f) {
      return cons(x, rel_range(f.as_set()));
    };
    for (int i = 0; i < 100; ++i) {
      HSet r = testing::random_acyclic_relation(ctx, rng, 7, 10);
      HSet fld = field(r);
      if (fld.card() == 0) continue;
      HSet a = fld.at(rng.below(fld.card()));
      HSet lhs = wfrec(r, a, body);
      HSet lam = lambda_set(inv_image_singleton(r, a),
                            [&](HSet x) { return wfrec(r, x, body); });
      if (lhs != body(a, SetRecArgs(lam))) return fail(print_set(r));
    }
    return pass();
  });

  s.prop("recursion.transrec_equation_and_field_independence", [&] {
    Ctx ctx;
    Rng rng(seed + 39);
    RecBody body = [](HSet x, const RecArgs& f) {
      return cons(x, rel_range(f.as_set()));
    };
    for (int i = 0; i < 60; ++i) {
      HSet a = testing::random_hset(ctx, rng, 4, 3);
      HSet lhs = transrec(a, body);
      HSet lam = lambda_set(a, [&](HSet x) { return transrec(x, body); });
      if (lhs != body(a, SetRecArgs(lam))) return fail(print_set(a));
      // recursion below i computes the same values as recursion below k
      for (HSet k : a) {
        HSet big = memrel(eclose(ctx.make({a})));
        HSet small = memrel(eclose(ctx.make({k})));
        if (wfrec(big, k, body) != wfrec(small, k, body))
          return fail("field dependence at " + print_set(k));
      }
    }
    return pass();
  });

  s.prop("recursion.vrec_guard", [&] {
    Ctx ctx;
    HSet a = ctx.ordinal(3);
    if (vrec(a, [](HSet x, const RecArgs&) { return x; }) != a)
      return fail("identity body");
    try {
      vrec(a, [&](HSet x, const RecArgs& f) { return f.lookup(x); });
      return fail("self-query accepted");
    } catch (const VrecGuardError& e) {
      if (e.query_rank() != 3 || e.bound_rank() != 3)
        return fail("guard payload wrong");
    }
    return pass();
  });

  s.prop("ordinals.predicates_and_order", [&] {
    Ctx ctx;
    Rng rng(seed + 40);
    if (!is_ord(ctx.ordinal(3))) return fail("3 not an ordinal");
    if (is_ord(parse_set(ctx, "{1}"))) return fail("{1} accepted");
    for (std::uint32_t i = 0; i <= 8; ++i) {
      HSet a = ctx.ordinal(i);
      if (is_limit(a)) return fail("finite limit ordinal");
      for (HSet x : a)
        if (!is_ord(x)) return fail("element not ordinal");
      for (std::uint32_t j = 0; j <= 8; ++j) {
        HSet b = ctx.ordinal(j);
        int count = (lt(a, b) ? 1 : 0) + (a == b ? 1 : 0) + (lt(b, a) ? 1 : 0);
        if (count != 1) return fail("trichotomy at " + std::to_string(i) + "," + std::to_string(j));
      }
    }
    if (!is_ord(ctx.ordinal(0))) return fail("zero");
    for (int i = 0; i < 50; ++i) {
      std::uint32_t n = static_cast<std::uint32_t>(rng.below(8));
      if (!is_ord(succ(ctx.ordinal(n)))) return fail("succ closure");
    }
    HSet family = ctx.make({ctx.ordinal(2), ctx.ordinal(5), ctx.ordinal(1)});
    if (!is_ord(big_union(family))) return fail("union closure");
    return pass();
  });

  s.prop("ordinals.nat_operators", [&] {
    Ctx ctx;
    Rng rng(seed + 41);
    for (std::uint32_t k = 0; k <= 6; ++k) {
      if (nat_upto(ctx, k) != iterate_op(ctx, MonoOp::repl_succ(), k))
        return fail("nat_upto vs iterated operator at " + std::to_string(k));
    }
    HSet seven = ctx.ordinal(7);
    if (nat_case(seven, [](HSet m) { return m; }, ctx.ordinal(0)) != seven)
      return fail("nat_case zero");
    if (nat_case(seven, [](HSet m) { return m; }, succ(ctx.ordinal(2))) !=
        ctx.ordinal(2))
      return fail("nat_case successor");
    try {
      nat_case(seven, [](HSet m) { return m; }, parse_set(ctx, "{1}"));
      return fail("nat_case accepted {1}");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotZeroOrSucc) return fail(e.what());
    }
    BinFn dbl = [](HSet, HSet r) { return succ(succ(r)); };
    if (nat_rec(ctx.ordinal(0), dbl, ctx.ordinal(3)) != ctx.ordinal(6))
      return fail("doubling");
    for (int i = 0; i < 30; ++i) {
      HSet k = ctx.ordinal(static_cast<std::uint32_t>(rng.below(7)));
      HSet a = ctx.ordinal(static_cast<std::uint32_t>(rng.below(4)));
      if (nat_rec(a, dbl, k) != testing::native_nat_rec(a, dbl, k))
        return fail("loop oracle at " + print_set(k));
    }
    if (nat_add(ctx.ordinal(2), ctx.ordinal(2)) != ctx.ordinal(4))
      return fail("2+2");
    if (nat_add(ctx.ordinal(1), ctx.ordinal(3)) != ctx.ordinal(4))
      return fail("1+3");
    if (nat_add(ctx.ordinal(0), ctx.ordinal(5)) != ctx.ordinal(5))
      return fail("0+5");
    return pass();
  });
}

// ----------------------------------------------------------- datatypes ----

void datatypes_suite(Suite& s, std::uint64_t seed) {
  s.prop("datatypes.sum_laws", [&] {
    Ctx ctx;
    HSet five = ctx.ordinal(5);
    if (inl(ctx.empty()) != pair(ctx.ordinal(0), ctx.empty()))
      return fail("inl encoding");
    if (case_sum([](HSet a) { return succ(a); }, [](HSet b) { return b; },
                 inl(five)) != ctx.ordinal(6))
      return fail("case on inl");
    Rng rng(seed + 50);
    for (int i = 0; i < 100; ++i) {
      HSet x = testing::random_hset(ctx, rng, 3, 2);
      HSet y = testing::random_hset(ctx, rng, 3, 2);
      if (inl(x) == inr(y)) return fail("tags collide");
      auto v = try_sum(inl(x));
      if (!v || v->side != Inj::Left || v->payload != x)
        return fail("decode inl");
    }
    return pass();
  });

  s.prop("datatypes.part_filters", [&] {
    Ctx ctx;
    HSet z = ctx.make({inl(ctx.ordinal(0)), inr(ctx.ordinal(1)),
                       inr(inl(ctx.ordinal(2)))});
    if (part(z, {Inj::Left}) != ctx.make({inl(ctx.ordinal(0))}))
      return fail("Inl filter");
    if (part(ctx.empty(), {Inj::Right}) != ctx.empty()) return fail("empty");
    if (part(z, {Inj::Right, Inj::Left}) != ctx.make({inr(inl(ctx.ordinal(2)))}))
      return fail("composed filter");
    return pass();
  });

  s.prop("datatypes.list_equations", [&] {
    Ctx ctx;
    Rng rng(seed + 51);
    std::vector<HSet> atoms{ctx.ordinal(0), ctx.ordinal(1)};
    SetPred in_a = [&](HSet x) { return x == atoms[0] || x == atoms[1]; };
    HSet c = ctx.ordinal(7);
    BinFn h2 = [](HSet x, HSet y) { return pair(x, y); };
    if (list_case(c, h2, nil(ctx)) != c) return fail("list_case Nil");
    HSet l0 = cons_list(atoms[0], nil(ctx));
    if (list_case(c, h2, l0) != pair(atoms[0], nil(ctx)))
      return fail("list_case Cons");
    if (!is_list(in_a, l0)) return fail("recognizer rejects Cons(0,Nil)");
    if (is_list(in_a, pair(ctx.ordinal(0), ctx.ordinal(1))))
      return fail("recognizer accepts a bare pair");
    TernFn len_body = [](HSet, HSet, HSet r) { return succ(r); };
    for (int i = 0; i < 100; ++i) {
      HSet l = testing::random_list(ctx, rng, atoms, 6);
      if (list_rec(ctx.ordinal(0), len_body, l) !=
          testing::native_list_rec(ctx.ordinal(0), len_body, l))
        return fail("list_rec vs native");
      if (list_rec(c, [](HSet, HSet, HSet) { return HSet(); }, nil(ctx)) != c)
        return fail("list_rec Nil");
      auto v = try_list(l);
      if (v->is_cons) {
        HSet expect = len_body(v->head, v->tail,
                               list_rec(ctx.ordinal(0), len_body, v->tail));
        if (list_rec(ctx.ordinal(0), len_body, l) != expect)
          return fail("list_rec Cons equation");
      }
    }
    return pass();
  });

  s.prop("datatypes.map_laws", [&] {
    Ctx ctx;
    Rng rng(seed + 52);
    std::vector<HSet> atoms{ctx.ordinal(0), ctx.ordinal(1), ctx.ordinal(2)};
    SetFn h = [](HSet x) { return succ(x); };
    SetFn h2 = [](HSet x) { return pair(x, x); };
    for (int i = 0; i < 100; ++i) {
      HSet l = testing::random_list(ctx, rng, atoms, 6);
      HSet m = testing::random_list(ctx, rng, atoms, 5);
      if (rev(list_map(h, l)) != list_map(h, rev(l))) return fail("eq 10");
      if (list_map(h, list_map(h2, l)) !=
          list_map([&](HSet u) { return h(h2(u)); }, l))
        return fail("eq 11");
      if (list_map([](HSet u) { return u; }, l) != l) return fail("eq 12");
      if (rev(rev(l)) != l) return fail("eq 13");
      if (list_map(h, append(l, m)) != append(list_map(h, l), list_map(h, m)))
        return fail("map over append");
      // typing: every mapped element lands in {h(x) | x in A}
      SetPred image_pred = [&](HSet x) {
        for (HSet a : atoms)
          if (x == h(a)) return true;
        return false;
      };
      if (!is_list(image_pred, list_map(h, l))) return fail("map typing");
      if (append(nil(ctx), m) != m) return fail("Nil append");
      auto v = try_list(l);
      if (v->is_cons &&
          list_map(h, l) != cons_list(h(v->head), list_map(h, v->tail)))
        return fail("map Cons equation");
    }
    return pass();
  });

  s.prop("datatypes.kleene_agreement", [&] {
    Ctx ctx;
    for (std::uint32_t asz = 0; asz <= 2; ++asz) {
      HSet a = ctx.ordinal(asz);
      SetPred in_a = [&](HSet x) { return member(x, a); };
      MonoOp list_op = MonoOp::sum(
          MonoOp::constant(ctx.make({ctx.empty()})),
          MonoOp::product(MonoOp::constant(a), MonoOp::identity()));
      for (std::size_t n = 0; n <= 4; ++n) {
        HSet stage = iterate_op(ctx, list_op, n);
        for (HSet x : stage) {
          if (!is_list(in_a, x)) return fail("stage holds a non-list");
          if (list_length(x) >= n) return fail("stage holds a long list");
        }
        std::vector<HSet> short_lists =
            n == 0 ? std::vector<HSet>{}
                   : testing::gen_lists(ctx, std::vector<HSet>(a.begin(), a.end()),
                                        n - 1);
        if (stage.card() != short_lists.size()) return fail("stage size");
        for (HSet l : short_lists)
          if (!member(l, stage)) return fail("missing list");
      }
    }
    return pass();
  });

  s.prop("datatypes.term_laws", [&] {
    Ctx ctx;
    Rng rng(seed + 53);
    std::vector<HSet> labels{ctx.ordinal(0), ctx.ordinal(1)};
    SetPred in_a = [&](HSet x) { return x == labels[0] || x == labels[1]; };
    HSet leaf = apply_term(labels[0], nil(ctx));
    if (!is_term(in_a, apply_term(labels[0],
                                  list_of(ctx, {apply_term(labels[1], nil(ctx))}))))
      return fail("recognizer");
    TernFn size_body = [](HSet, HSet, HSet rs) {
      HSet total = rs.ctx().ordinal(1);
      for (HSet r : list_elements(rs)) total = nat_add(total, r);
      return total;
    };
    if (term_rec(size_body, leaf) != ctx.ordinal(1)) return fail("leaf size");
    for (int i = 0; i < 60; ++i) {
      HSet t = testing::random_term(ctx, rng, labels, 4, 3);
      if (term_rec(size_body, t) != testing::native_term_rec(size_body, t))
        return fail("term_rec vs native");
      if (reflect(reflect(t)) != t) return fail("reflect involution");
      auto v = try_term(reflect(t));
      auto orig = try_term(t);
      std::vector<HSet> args = list_elements(orig->args);
      std::vector<HSet> rargs = list_elements(v->args);
      if (args.size() != rargs.size()) return fail("reflect arity");
      for (std::size_t k = 0; k < args.size(); ++k)
        if (rargs[k] != reflect(args[args.size() - 1 - k]))
          return fail("equation 9");
    }
    return pass();
  });

  s.prop("datatypes.tf_laws", [&] {
    Ctx ctx;
    Rng rng(seed + 54);
    std::vector<HSet> labels{ctx.ordinal(0), ctx.ordinal(1)};
    SetPred in_a = [&](HSet x) { return x == labels[0] || x == labels[1]; };
    TernFn b = [](HSet x, HSet f, HSet r) { return pair(x, pair(f, r)); };
    HSet c = ctx.ordinal(9);
    QuadFn d = [](HSet t, HSet f, HSet r1, HSet r2) {
      return pair(t, pair(f, pair(r1, r2)));
    };
    if (tf_rec(b, c, d, fnil(ctx)) != c) return fail("TF_rec Fnil");
    for (int i = 0; i < 60; ++i) {
      HSet z = testing::random_tf(ctx, rng, labels, 1 + rng.below(5));
      if (tf_rec(b, c, d, z) != testing::native_tf_rec(b, c, d, z))
        return fail("TF_rec vs native");
      auto v = try_sum(z);
      if (v->side == Inj::Left) {
        auto p = try_pair(v->payload);
        if (tf_rec(b, c, d, z) !=
            b(p->first, p->second, tf_rec(b, c, d, p->second)))
          return fail("TF_rec Tcons equation");
      } else {
        auto lv = try_list(v->payload);
        if (lv->is_cons &&
            tf_rec(b, c, d, z) != d(lv->head, lv->tail,
                                    tf_rec(b, c, d, lv->head),
                                    tf_rec(b, c, d, lv->tail)))
          return fail("TF_rec Fcons equation");
      }
      if (tf_map([](HSet u) { return u; }, z) != z) return fail("TF_map id");
      bool was_tree = is_tree(in_a, z);
      HSet mapped = tf_map([](HSet u) { return succ(u); }, z);
      SetPred in_b = [&](HSet x) {
        return x == succ(labels[0]) || x == succ(labels[1]);
      };
      if (was_tree != is_tree(in_b, mapped)) return fail("map sort: tree");
      if (is_forest(in_a, z) != is_forest(in_b, mapped))
        return fail("map sort: forest");
      if (tf_size(z) != ctx.ordinal(static_cast<std::uint32_t>(
                            list_length(tf_preorder(z)))))
        return fail("preorder length vs size");
    }
    HSet two_nodes = tcons(labels[0], fcons(tcons(labels[1], fnil(ctx)), fnil(ctx)));
    if (tf_size(two_nodes) != ctx.ordinal(2)) return fail("size example");
    std::vector<HSet> pre = list_elements(tf_preorder(two_nodes));
    if (pre.size() != 2 || pre[0] != labels[0] || pre[1] != labels[1])
      return fail("preorder example");
    if (is_tree(in_a, fnil(ctx))) return fail("Fnil as tree");
    if (!is_forest(in_a, fnil(ctx))) return fail("Fnil as forest");
    return pass();
  });

  s.prop("datatypes.recognizer_fixedpoint_shapes", [&] {
    Ctx ctx;
    Rng rng(seed + 55);
    std::vector<HSet> labels{ctx.ordinal(0), ctx.ordinal(1)};
    SetPred in_a = [&](HSet x) { return x == labels[0] || x == labels[1]; };
    // pools of genuine encodings and of junk
    std::vector<HSet> pool = testing::gen_lists(ctx, labels, 3);
    for (HSet t : testing::gen_terms(ctx, labels, 2, 2)) pool.push_back(t);
    for (HSet z : testing::gen_tfs(ctx, labels, 3)) pool.push_back(z);
    for (int i = 0; i < 60; ++i)
      pool.push_back(testing::random_hset(ctx, rng, 4, 3));
    for (HSet x : pool) {
      // list(A) = {0} + A x list(A)
      bool by_shape = false;
      if (auto v = try_list(x))
        by_shape = v->is_cons ? (in_a(v->head) && is_list(in_a, v->tail))
                              : true;
      if (is_list(in_a, x) != by_shape)
        return fail("list shape law at " + print_set(x));
      // term(A) = A x list(term(A))
      bool term_shape = false;
      if (auto tv = try_term(x))
        term_shape = in_a(tv->label) &&
                     is_list([&](HSet z) { return is_term(in_a, z); },
                             tv->args);
      if (is_term(in_a, x) != term_shape)
        return fail("term shape law at " + print_set(x));
      // TF(A) = A x forest(A) + ({0} + tree(A) x forest(A))
      bool tf_shape = false;
      if (auto sv = try_sum(x)) {
        if (sv->side == Inj::Left) {
          if (auto p = try_pair(sv->payload))
            tf_shape = in_a(p->first) && is_forest(in_a, p->second);
        } else if (auto lv = try_list(sv->payload)) {
          tf_shape = lv->is_cons ? (is_tree(in_a, lv->head) &&
                                    is_forest(in_a, lv->tail))
                                 : true;
        }
      }
      if (is_tf(in_a, x) != tf_shape)
        return fail("TF shape law at " + print_set(x));
    }
    return pass();
  });

  s.prop("datatypes.recognizers_accept_generated_values", [&] {
    Ctx ctx;
    std::vector<HSet> labels{ctx.ordinal(0), ctx.ordinal(1)};
    SetPred in_a = [&](HSet x) { return x == labels[0] || x == labels[1]; };
    for (HSet z : testing::gen_tfs(ctx, labels, 4)) {
      if (!is_tf(in_a, z)) return fail("generated TF rejected: " + print_set(z));
      bool tree = is_tree(in_a, z), forest = is_forest(in_a, z);
      if (tree == forest) return fail("sort not exclusive: " + print_set(z));
    }
    for (HSet l : testing::gen_lists(ctx, labels, 4))
      if (!is_list(in_a, l)) return fail("generated list rejected");
    std::vector<HSet> terms = testing::gen_terms(ctx, labels, 3, 2);
    for (HSet t : terms)
      if (!is_term(in_a, t)) return fail("generated term rejected");
    return pass();
  });

  s.prop("datatypes.constructor_freeness", [&] {
    Ctx ctx;
    std::vector<HSet> labels{ctx.ordinal(0), ctx.ordinal(1)};
    std::vector<HSet> values = testing::gen_tfs(ctx, labels, 3);
    for (std::size_t i = 0; i < values.size(); ++i)
      for (std::size_t j = i + 1; j < values.size(); ++j)
        if (values[i] == values[j]) return fail("distinct builds collide");
    std::vector<HSet> lists = testing::gen_lists(ctx, labels, 3);
    for (std::size_t i = 0; i < lists.size(); ++i)
      for (std::size_t j = i + 1; j < lists.size(); ++j)
        if (lists[i] == lists[j]) return fail("list builds collide");
    return pass();
  });

  s.prop("datatypes.fin_properties", [&] {
    Ctx ctx;
    for (std::uint32_t n = 0; n <= 4; ++n) {
      HSet a = ctx.ordinal(n);
      HSet fin = fin_enum(a);
      if (fin != powerset(a)) return fail("Fin vs powerset at " + std::to_string(n));
      for (HSet b : fin)
        for (HSet c : fin) {
          if (!member(union2(b, c), fin)) return fail("union closure");
          if (!member(inter(b, c), fin)) return fail("subset closure");
        }
    }
    HSet a = ctx.ordinal(3);
    SetPred cardinality_le3 = [&](HSet x) { return x.card() <= 3; };
    if (!fin_induction_check(a, cardinality_le3)) return fail("valid psi rejected");
    // a psi whose step genuinely needs the x-not-in-y discharge
    SetPred no_repeat = [&](HSet x) { return subset(x, a); };
    if (!fin_induction_check(a, no_repeat)) return fail("subset psi rejected");
    return pass();
  });
}

// --------------------------------------------------------------- logic ----

void logic_suite(Suite& s, std::uint64_t seed) {
  s.prop("logic.parse_print_roundtrip", [&] {
    Rng rng(seed + 70);
    for (int i = 0; i < 300; ++i) {
      Prop p = testing::random_prop(rng, 3, rng.below(5));
      if (parse_prop(print_prop(p)) != p) return fail(print_prop(p));
    }
    Prop p = parse_prop("#0 => #1 => #0");
    if (p != Prop::imp(Prop::var(0), Prop::imp(Prop::var(1), Prop::var(0))))
      return fail("right associativity");
    return pass();
  });

  s.prop("logic.encode_decode", [&] {
    Ctx ctx;
    Rng rng(seed + 71);
    if (encode_prop(ctx, Prop::fls()) != inl(ctx.empty()))
      return fail("Fls coding");
    for (int i = 0; i < 100; ++i) {
      Prop p = testing::random_prop(rng, 3, rng.below(4));
      if (decode_prop(encode_prop(ctx, p)) != p) return fail(print_prop(p));
    }
    try {
      decode_prop(ctx.ordinal(2));
      return fail("decoded a non-code");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotAPropCode) return fail(e.what());
    }
    return pass();
  });

  s.prop("logic.truth_semantics", [&] {
    Ctx ctx;
    Rng rng(seed + 72);
    if (is_true(Prop::fls(), {0, 1})) return fail("Fls true");
    if (!is_true(Prop::var(0), {0})) return fail("#0 under {0}");
    if (is_true(Prop::imp(Prop::var(0), Prop::fls()), {0}))
      return fail("negation clause");
    for (int i = 0; i < 200; ++i) {
      Prop p = testing::random_prop(rng, 3, rng.below(4));
      Valuation t;
      for (std::uint32_t v = 0; v < 5; ++v)
        if (rng.coin()) t.insert(v);
      // finite support
      Valuation support;
      for (std::uint32_t v : prop_vars(p))
        if (t.count(v)) support.insert(v);
      if (is_true(p, t) != is_true(p, support)) return fail(print_prop(p));
      // the {0,1}-valued realization agrees
      std::vector<HSet> tv;
      for (std::uint32_t v : t) tv.push_back(ctx.ordinal(v));
      HSet val = truth_value(encode_prop(ctx, p), ctx.make(std::move(tv)));
      if ((ordinal_value(val) == 1) != is_true(p, t)) return fail(print_prop(p));
    }
    return pass();
  });

  s.prop("logic.transformer_soundness", [&] {
    Rng rng(seed + 73);
    for (int i = 0; i < 100; ++i) {
      Prop p = testing::random_prop(rng, 2, rng.below(3));
      Prop q = testing::random_prop(rng, 2, rng.below(3));
      Derivation di = derive_I(p);
      if (check_derivation(di, {}) != Prop::imp(p, p)) return fail("derive_I");
      Derivation w = weaken_right(di, q);
      if (check_derivation(w, {}) != Prop::imp(q, Prop::imp(p, p)))
        return fail("weaken_right");
      if (!models({}, conclusion(w))) return fail("weaken_right validity");
    }
    return pass();
  });

  s.prop("logic.deduction_roundtrip", [&] {
    Rng rng(seed + 74);
    for (int i = 0; i < 60; ++i) {
      Prop p = testing::random_prop(rng, 2, rng.below(3));
      PropSet context;
      for (int j = 0; j < 2; ++j)
        if (rng.coin()) context.insert(testing::random_prop(rng, 2, rng.below(3)));
      PropSet extended = context;
      extended.insert(p);
      auto pool = testing::grow_derivations(rng, extended, 12);
      const Derivation& d = pool[rng.below(pool.size())];
      Prop q = check_derivation(d, extended);
      Derivation out = deduction(d, p, context);
      if (check_derivation(out, context) != Prop::imp(p, q))
        return fail(print_prop(q));
    }
    return pass();
  });

  s.prop("logic.excluded_middle_rule", [&] {
    Prop q = Prop::var(0);
    Prop goal = Prop::imp(q, q);
    PropSet with_q{q};
    PropSet with_nq{Prop::imp(q, Prop::fls())};
    Derivation d1 = derive_I(q);
    Derivation d2 = derive_I(q);
    Derivation out = excluded_middle(d1, d2, q, {});
    if (check_derivation(out, {}) != goal) return fail("conclusion");
    PropSet bigger{Prop::var(1)};
    Derivation out2 = excluded_middle(d1, d2, q, bigger);
    if (check_derivation(out2, bigger) != goal) return fail("relative context");
    return pass();
  });

  s.prop("logic.hyps_and_truth_lemma", [&] {
    Rng rng(seed + 75);
    if (!hyps(Prop::fls(), {1}).empty()) return fail("hyps of Fls");
    PropSet h3 = hyps(Prop::var(3), {});
    if (h3 != PropSet{Prop::imp(Prop::var(3), Prop::fls())})
      return fail("hyps of unsatisfied atom");
    for (int i = 0; i < 150; ++i) {
      Prop p = testing::random_prop(rng, 3, rng.below(4));
      Valuation t;
      for (std::uint32_t v = 0; v < 3; ++v)
        if (rng.coin()) t.insert(v);
      PropSet basis = hyps(p, t);
      Derivation d = truth_lemma(p, t);
      Prop expect = is_true(p, t) ? p : Prop::imp(p, Prop::fls());
      if (check_derivation(d, basis) != expect) return fail(print_prop(p));
      // the variable-elimination identity
      for (std::uint32_t v : prop_vars(p)) {
        if (!t.count(v)) continue;
        Valuation t2 = t;
        t2.erase(v);
        PropSet lhs = hyps(p, t2);
        PropSet rhs = hyps(p, t);
        rhs.erase(Prop::var(v));
        rhs.insert(Prop::imp(Prop::var(v), Prop::fls()));
        if (lhs != rhs) return fail("elimination identity " + print_prop(p));
      }
    }
    return pass();
  });

  s.prop("logic.random_derivations_sound", [&] {
    Rng rng(seed + 76);
    PropSet context{parse_prop("#0"), parse_prop("#0 => #1")};
    auto pool = testing::grow_derivations(rng, context, 1000);
    for (const Derivation& d : pool) {
      Prop c = check_derivation(d, context);
      if (!models(context, c)) return fail(print_prop(c));
    }
    return pass();
  });

  s.prop("logic.completeness_desk_sweep", [&] {
    for (const Prop& p : testing::all_props(2, 3)) {
      bool valid = models({}, p);
      auto result = prove_complete({}, p);
      if (valid != std::holds_alternative<Derivation>(result))
        return fail(print_prop(p));
      if (valid) {
        if (check_derivation(std::get<Derivation>(result), {}) != p)
          return fail("did not conclude " + print_prop(p));
      } else {
        const Valuation& t = std::get<Valuation>(result);
        if (is_true(p, t)) return fail("claimed countermodel satisfies " + print_prop(p));
      }
    }
    return pass();
  });

  s.prop("logic.completeness_with_hypotheses", [&] {
    Rng rng(seed + 77);
    for (int i = 0; i < 100; ++i) {
      PropSet context;
      for (int j = 0; j < 2; ++j)
        if (rng.coin()) context.insert(testing::random_prop(rng, 2, rng.below(3)));
      Prop p = testing::random_prop(rng, 2, rng.below(4));
      auto result = prove_complete(context, p);
      if (std::holds_alternative<Derivation>(result)) {
        if (!models(context, p)) return fail("proved invalid " + print_prop(p));
        if (check_derivation(std::get<Derivation>(result), context) != p)
          return fail("wrong conclusion");
      } else {
        const Valuation& t = std::get<Valuation>(result);
        if (models(context, p)) return fail("refused valid " + print_prop(p));
        for (const Prop& h : context)
          if (!is_true(h, t)) return fail("countermodel misses context");
        if (is_true(p, t)) return fail("countermodel satisfies goal");
      }
    }
    return pass();
  });

  s.prop("logic.thms_bounded_oracle", [&] {
    // subformula closure of (#0 => #0) plus the helper instances that the
    // K/S derivation of I uses
    Prop v0 = Prop::var(0);
    Prop i0 = Prop::imp(v0, v0);
    PropSet candidates{v0, i0};
    candidates.insert(Prop::imp(v0, i0));                      // K instance
    candidates.insert(Prop::imp(v0, Prop::imp(i0, v0)));       // K instance
    candidates.insert(Prop::imp(Prop::imp(v0, Prop::imp(i0, v0)),
                                Prop::imp(Prop::imp(v0, i0), i0)));  // S instance
    candidates.insert(Prop::imp(Prop::imp(v0, i0), i0));
    PropSet closed = thms_bounded({}, candidates, 64);
    if (!closed.count(i0)) return fail("I not derived with helpers present");
    PropSet no_helpers = thms_bounded({}, PropSet{v0, i0}, 64);
    if (no_helpers.count(i0)) return fail("I derived without helpers");
    if (!thms_bounded({}, {}, 8).empty()) return fail("empty candidates");
    PropSet with_h = thms_bounded({v0}, PropSet{v0}, 1);
    if (!with_h.count(v0)) return fail("context member missing after one step");
    for (const Prop& p : closed)
      if (!models({}, p)) return fail("bounded thms unsound: " + print_prop(p));
    return pass();
  });

  s.prop("logic.prover_replayed_by_bounded_thms", [&] {
    // every formula the prover derives along the way, plus subformulas,
    // forms a candidate set over which the bounded thms operator re-derives
    // the goal
    std::function<void(const Prop&, PropSet&)> subf = [&](const Prop& q,
                                                          PropSet& out) {
      out.insert(q);
      if (q.kind() == Prop::Kind::Imp) {
        subf(q.lhs(), out);
        subf(q.rhs(), out);
      }
    };
    // single pass: conclusions computed bottom-up alongside collection
    std::function<Prop(const Derivation&, PropSet&)> collect =
        [&](const Derivation& d, PropSet& out) -> Prop {
      Prop c = [&] {
        if (d.kind() == Derivation::Kind::MP) {
          Prop left = collect(d.child(0), out);
          collect(d.child(1), out);
          return left.rhs();
        }
        return conclusion(d);
      }();
      subf(c, out);
      return c;
    };
    std::vector<Prop> goals{
        parse_prop("#0 => #0"),
        parse_prop("((#0 => Fls) => Fls) => #0"),
        parse_prop("Fls => #0"),
    };
    for (const Prop& goal : goals) {
      auto result = prove_complete({}, goal);
      if (!std::holds_alternative<Derivation>(result))
        return fail("prover refused " + print_prop(goal));
      PropSet candidates;
      collect(std::get<Derivation>(result), candidates);
      PropSet derived = thms_bounded({}, candidates, candidates.size() + 2);
      if (!derived.count(goal))
        return fail("bounded thms cannot replay " + print_prop(goal));
    }
    return pass();
  });

  s.prop("logic.hyps_finiteness_via_fin", [&] {
    Ctx ctx;
    Prop p = parse_prop("(#0 => #1) => #2 => Fls");
    Valuation t{0, 2};
    PropSet basis = hyps(p, t);
    std::vector<HSet> literal_pool;
    for (std::uint32_t v : prop_vars(p)) {
      literal_pool.push_back(encode_prop(ctx, Prop::var(v)));
      literal_pool.push_back(
          encode_prop(ctx, Prop::imp(Prop::var(v), Prop::fls())));
    }
    HSet bound_set = ctx.make(std::move(literal_pool));
    std::vector<HSet> encoded;
    for (const Prop& q : basis) encoded.push_back(encode_prop(ctx, q));
    HSet basis_set = ctx.make(std::move(encoded));
    if (!member(basis_set, fin_enum(bound_set)))
      return fail("hyps not in Fin of the literal pool");
    return pass();
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "core", "fixedpoint", "recursion", "datatypes", "logic", "all"};
  return names;
}

bool run(const std::string& suite, std::uint64_t seed, std::ostream& out) {
  Suite s(out);
  bool known = false;
  auto want = [&](const char* name) {
    bool match = suite == name || suite == "all";
    known = known || suite == name;
    return match;
  };
  if (want("core")) core_suite(s, seed);
  if (want("fixedpoint")) fixedpoint_suite(s, seed);
  if (want("recursion")) recursion_suite(s, seed);
  if (want("datatypes")) datatypes_suite(s, seed);
  if (want("logic")) logic_suite(s, seed);
  if (!known && suite != "all")
    throw Error(ErrorKind::SyntaxError, "unknown selftest suite: " + suite);
  out << (s.ok() ? "selftest passed" : "selftest FAILED") << "\n";
  return s.ok();
}

}  // namespace hfzf::selftest

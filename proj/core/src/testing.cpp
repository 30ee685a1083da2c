#include "hfzf/testing.hpp"

#include <algorithm>
#include <map>

#include "hfzf/ordinals.hpp"
#include "hfzf/relations.hpp"

namespace hfzf::testing {

HSet random_hset(Ctx& ctx, Rng& rng, std::size_t max_rank,
                 std::size_t max_width) {
  if (max_rank == 0) return ctx.empty();
  std::size_t width = rng.below(max_width + 1);
  std::vector<HSet> elems;
  elems.reserve(width);
  for (std::size_t i = 0; i < width; ++i)
    elems.push_back(random_hset(ctx, rng, max_rank - 1, max_width));
  return ctx.make(std::move(elems));
}

HSet random_relation(Ctx& ctx, Rng& rng, std::size_t points,
                     std::size_t max_pairs) {
  std::vector<HSet> elems;
  std::size_t count = rng.below(max_pairs + 1);
  for (std::size_t i = 0; i < count; ++i) {
    auto a = static_cast<std::uint32_t>(rng.below(points));
    auto b = static_cast<std::uint32_t>(rng.below(points));
    elems.push_back(pair(ctx.ordinal(a), ctx.ordinal(b)));
  }
  return ctx.make(std::move(elems));
}

HSet random_acyclic_relation(Ctx& ctx, Rng& rng, std::size_t points,
                             std::size_t max_pairs) {
  std::vector<HSet> elems;
  std::size_t count = rng.below(max_pairs + 1);
  for (std::size_t i = 0; i < count && points > 1; ++i) {
    auto a = static_cast<std::uint32_t>(rng.below(points));
    auto b = static_cast<std::uint32_t>(rng.below(points));
    if (a == b) continue;
    if (a > b) std::swap(a, b);  // edges point upward, so no cycles
    elems.push_back(pair(ctx.ordinal(a), ctx.ordinal(b)));
  }
  return ctx.make(std::move(elems));
}

HSet random_function(Ctx& ctx, Rng& rng, HSet domain, HSet codomain) {
  std::vector<HSet> graph;
  for (HSet x : domain) {
    HSet y = codomain.at(rng.below(codomain.card()));
    graph.push_back(pair(x, y));
  }
  return ctx.make(std::move(graph));
}

HSet random_injection(Ctx& ctx, Rng& rng, HSet domain, HSet codomain) {
  std::vector<HSet> targets(codomain.begin(), codomain.end());
  // Fisher-Yates with the deterministic rng
  for (std::size_t i = targets.size(); i > 1; --i)
    std::swap(targets[i - 1], targets[rng.below(i)]);
  std::vector<HSet> graph;
  std::size_t i = 0;
  for (HSet x : domain) graph.push_back(pair(x, targets.at(i++)));
  return ctx.make(std::move(graph));
}

std::vector<HSet> gen_lists(Ctx& ctx, const std::vector<HSet>& atoms,
                            std::size_t max_len) {
  std::vector<HSet> out{nil(ctx)};
  std::size_t lo = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t hi = out.size();
    for (std::size_t i = lo; i < hi; ++i)
      for (HSet a : atoms) out.push_back(cons_list(a, out[i]));
    lo = hi;
  }
  return out;
}

HSet random_list(Ctx& ctx, Rng& rng, const std::vector<HSet>& atoms,
                 std::size_t max_len) {
  HSet l = nil(ctx);
  std::size_t len = rng.below(max_len + 1);
  for (std::size_t i = 0; i < len; ++i)
    l = cons_list(atoms[rng.below(atoms.size())], l);
  return l;
}

std::vector<HSet> gen_terms(Ctx& ctx, const std::vector<HSet>& labels,
                            std::size_t depth, std::size_t branch) {
  std::vector<HSet> pool;
  for (HSet a : labels) pool.push_back(apply_term(a, nil(ctx)));
  if (depth <= 1) return pool;
  std::vector<HSet> shallower = gen_terms(ctx, labels, depth - 1, branch);
  // argument lists of length 1..branch over the shallower pool
  std::vector<HSet> arg_lists{nil(ctx)};
  std::size_t lo = 0;
  for (std::size_t len = 1; len <= branch; ++len) {
    std::size_t hi = arg_lists.size();
    for (std::size_t i = lo; i < hi; ++i)
      for (HSet t : shallower) arg_lists.push_back(cons_list(t, arg_lists[i]));
    lo = hi;
  }
  for (HSet a : labels)
    for (std::size_t i = 1; i < arg_lists.size(); ++i)
      pool.push_back(apply_term(a, arg_lists[i]));
  std::sort(pool.begin(), pool.end(),
            [&](HSet x, HSet y) { return ctx.compare(x, y) < 0; });
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

HSet random_term(Ctx& ctx, Rng& rng, const std::vector<HSet>& labels,
                 std::size_t depth, std::size_t branch) {
  HSet label = labels[rng.below(labels.size())];
  if (depth <= 1) return apply_term(label, nil(ctx));
  std::size_t args = rng.below(branch + 1);
  std::vector<HSet> subterms;
  for (std::size_t i = 0; i < args; ++i)
    subterms.push_back(random_term(ctx, rng, labels, depth - 1, branch));
  return apply_term(label, list_of(ctx, subterms));
}

namespace {

void gen_tfs_exact(Ctx& ctx, const std::vector<HSet>& labels, std::size_t size,
                   std::vector<std::vector<HSet>>& trees,
                   std::vector<std::vector<HSet>>& forests) {
  // trees[n]: exactly n labels; forests[n] likewise
  trees.assign(size + 1, {});
  forests.assign(size + 1, {});
  forests[0].push_back(fnil(ctx));
  for (std::size_t n = 1; n <= size; ++n) {
    for (HSet a : labels)
      for (HSet f : forests[n - 1]) trees[n].push_back(tcons(a, f));
    for (std::size_t i = 1; i <= n; ++i)
      for (HSet t : trees[i])
        for (HSet f : forests[n - i]) forests[n].push_back(fcons(t, f));
  }
}

}  // namespace

std::vector<HSet> gen_tfs(Ctx& ctx, const std::vector<HSet>& labels,
                          std::size_t size) {
  std::vector<std::vector<HSet>> trees, forests;
  gen_tfs_exact(ctx, labels, size, trees, forests);
  std::vector<HSet> out;
  for (std::size_t n = 0; n <= size; ++n) {
    out.insert(out.end(), trees[n].begin(), trees[n].end());
    out.insert(out.end(), forests[n].begin(), forests[n].end());
  }
  return out;
}

HSet random_tf(Ctx& ctx, Rng& rng, const std::vector<HSet>& labels,
               std::size_t size) {
  if (size == 0) return fnil(ctx);
  if (rng.coin()) {
    // a tree spends one label on its root
    HSet f = random_tf(ctx, rng, labels, size - 1);
    if (!is_forest([](HSet) { return true; }, f)) f = fnil(ctx);
    return tcons(labels[rng.below(labels.size())], f);
  }
  std::size_t head = 1 + rng.below(size);
  HSet t = random_tf(ctx, rng, labels, head);
  if (!is_tree([](HSet) { return true; }, t))
    t = tcons(labels[rng.below(labels.size())], fnil(ctx));
  HSet f = random_tf(ctx, rng, labels, size - head);
  if (!is_forest([](HSet) { return true; }, f)) f = fnil(ctx);
  return fcons(t, f);
}

namespace {

HSet random_subset(Ctx& ctx, Rng& rng, HSet ground) {
  std::vector<HSet> elems;
  for (HSet x : ground)
    if (rng.coin()) elems.push_back(x);
  return ctx.make(std::move(elems));
}

MonoOp random_inflationary_tree(Ctx& ctx, Rng& rng, HSet bound,
                                std::size_t depth) {
  if (depth == 0 || rng.below(3) == 0) {
    if (rng.coin()) return MonoOp::identity();
    return MonoOp::constant(random_subset(ctx, rng, bound));
  }
  return MonoOp::union_of(random_inflationary_tree(ctx, rng, bound, depth - 1),
                          random_inflationary_tree(ctx, rng, bound, depth - 1));
}

}  // namespace

OpInstance random_bounded_op(Ctx& ctx, Rng& rng) {
  switch (rng.below(6)) {
    case 0:
    case 1: {
      // union/const/id trees over a small ground set
      std::vector<HSet> pool{ctx.ordinal(0), ctx.ordinal(1), ctx.ordinal(2),
                             ctx.make({ctx.ordinal(1)}),
                             pair(ctx.ordinal(0), ctx.ordinal(0))};
      std::vector<HSet> chosen;
      for (HSet x : pool)
        if (rng.coin()) chosen.push_back(x);
      HSet bound = ctx.make(std::move(chosen));
      return {bound, random_inflationary_tree(ctx, rng, bound, 2)};
    }
    case 2: {
      // the closure operator of a tiny relation
      HSet r = random_relation(ctx, rng, 2, 3);
      HSet fld = field(r);
      return {prod(fld, fld),
              MonoOp::id_union(fld, MonoOp::compose_rel(r, MonoOp::identity()))};
    }
    case 3: {
      // the finite-powerset operator
      HSet a = random_subset(ctx, rng, ctx.ordinal(2));
      return {powerset(a), MonoOp::fin_op(a)};
    }
    case 4: {
      // a banach-shaped double difference over tiny carriers
      std::uint32_t nx = 1 + static_cast<std::uint32_t>(rng.below(2));
      std::uint32_t ny = 1 + static_cast<std::uint32_t>(rng.below(2));
      HSet x = ctx.ordinal(nx);
      HSet y = repl(ctx.ordinal(ny), [](HSet e) { return succ(succ(e)); });
      HSet f = random_function(ctx, rng, x, y);
      HSet g = random_function(ctx, rng, y, x);
      return {x, MonoOp::diff_const(x, g, y, f)};
    }
    default: {
      // a Part filter over tagged elements
      std::vector<HSet> tagged{inl(ctx.ordinal(0)), inr(ctx.ordinal(0)),
                               inr(inl(ctx.ordinal(1))), ctx.ordinal(0)};
      std::vector<HSet> chosen;
      for (HSet t : tagged)
        if (rng.coin()) chosen.push_back(t);
      HSet bound = ctx.make(std::move(chosen));
      InjTag tag;
      if (rng.coin())
        tag = {Inj::Left};
      else
        tag = rng.coin() ? InjTag{Inj::Right} : InjTag{Inj::Right, Inj::Left};
      return {bound, MonoOp::union_of(
                         MonoOp::part_of(tag, MonoOp::identity()),
                         MonoOp::constant(random_subset(ctx, rng, bound)))};
    }
  }
}

Prop random_prop(Rng& rng, std::uint32_t num_vars, std::size_t connectives) {
  if (connectives == 0) {
    if (num_vars > 0 && rng.below(4) != 0)
      return Prop::var(static_cast<std::uint32_t>(rng.below(num_vars)));
    return Prop::fls();
  }
  std::size_t left = rng.below(connectives);
  return Prop::imp(random_prop(rng, num_vars, left),
                   random_prop(rng, num_vars, connectives - 1 - left));
}

std::vector<Prop> all_props(std::uint32_t num_vars,
                            std::size_t max_connectives) {
  std::vector<std::vector<Prop>> by_size(max_connectives + 1);
  by_size[0].push_back(Prop::fls());
  for (std::uint32_t v = 0; v < num_vars; ++v)
    by_size[0].push_back(Prop::var(v));
  for (std::size_t c = 1; c <= max_connectives; ++c)
    for (std::size_t i = 0; i < c; ++i)
      for (const Prop& p : by_size[i])
        for (const Prop& q : by_size[c - 1 - i])
          by_size[c].push_back(Prop::imp(p, q));
  std::vector<Prop> out;
  for (auto& bucket : by_size)
    out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

std::vector<Derivation> grow_derivations(Rng& rng, const PropSet& context,
                                         std::size_t count) {
  std::vector<Derivation> pool;
  std::vector<Prop> concls;
  auto push = [&](Derivation d) {
    concls.push_back(check_derivation(d, context));
    pool.push_back(std::move(d));
  };
  for (const Prop& h : context) push(Derivation::hyp(h));
  while (pool.size() < count) {
    switch (rng.below(5)) {
      case 0:
        push(Derivation::ax_k(random_prop(rng, 3, rng.below(2)),
                              random_prop(rng, 3, rng.below(2))));
        break;
      case 1:
        push(Derivation::ax_s(random_prop(rng, 3, rng.below(2)),
                              random_prop(rng, 3, rng.below(2)),
                              random_prop(rng, 3, rng.below(2))));
        break;
      case 2:
        push(Derivation::ax_dn(random_prop(rng, 3, rng.below(2))));
        break;
      case 3: {
        if (pool.empty()) break;
        // weakening through K always composes
        std::size_t i = rng.below(pool.size());
        Prop extra = random_prop(rng, 3, rng.below(2));
        push(Derivation::mp(Derivation::ax_k(concls[i], extra), pool[i]));
        break;
      }
      case 4: {
        // opportunistic modus ponens on matching shapes
        if (pool.empty()) break;
        bool done = false;
        for (std::size_t tries = 0; tries < 8 && !done; ++tries) {
          std::size_t i = rng.below(pool.size());
          if (concls[i].kind() != Prop::Kind::Imp) continue;
          for (std::size_t j = 0; j < pool.size(); ++j) {
            if (concls[j] == concls[i].lhs()) {
              push(Derivation::mp(pool[i], pool[j]));
              done = true;
              break;
            }
          }
        }
        break;
      }
    }
  }
  return pool;
}

HSet warshall_rtrancl(HSet r) {
  Ctx& ctx = r.ctx();
  HSet fld = field(r);
  std::vector<HSet> points(fld.begin(), fld.end());
  std::map<std::uint32_t, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) index[points[i].id()] = i;
  const std::size_t n = points.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) adj[i][i] = true;
  for (HSet e : r) {
    auto p = try_pair(e);
    adj[index.at(p->first.id())][index.at(p->second.id())] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (adj[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (adj[k][j]) adj[i][j] = true;
  std::vector<HSet> elems;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (adj[i][j]) elems.push_back(pair(points[i], points[j]));
  return ctx.make(std::move(elems));
}

HSet warshall_trancl(HSet r) {
  // same matrix computation without seeding the diagonal
  Ctx& ctx = r.ctx();
  HSet fld = field(r);
  std::vector<HSet> points(fld.begin(), fld.end());
  std::map<std::uint32_t, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) index[points[i].id()] = i;
  const std::size_t n = points.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (HSet e : r) {
    auto p = try_pair(e);
    adj[index.at(p->first.id())][index.at(p->second.id())] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (adj[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (adj[k][j]) adj[i][j] = true;
  std::vector<HSet> elems;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (adj[i][j]) elems.push_back(pair(points[i], points[j]));
  return ctx.make(std::move(elems));
}

bool wf_by_subsets(HSet r) {
  HSet fld = field(r);
  std::vector<HSet> points(fld.begin(), fld.end());
  const std::size_t n = points.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool has_minimal = false;
    for (std::size_t i = 0; i < n && !has_minimal; ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < n && minimal; ++j) {
        if (!(mask & (std::uint64_t{1} << j))) continue;
        if (member(pair(points[j], points[i]), r)) minimal = false;
      }
      has_minimal = minimal;
    }
    if (!has_minimal) return false;
  }
  return true;
}

HSet lfp_by_intersection(HSet d, const MonoOp& h) {
  Ctx& ctx = d.ctx();
  std::optional<HSet> acc;
  for (HSet x : powerset(d)) {
    if (!subset(h.eval(x), x)) continue;
    acc = acc ? inter(*acc, x) : x;
  }
  return acc ? *acc : ctx.empty();
}

bool is_bijection(HSet h, HSet x, HSet y) {
  if (!is_function(h) || !is_injective(h)) return false;
  return rel_domain(h) == x && rel_range(h) == y;
}

HSet native_list_rec(HSet c, const TernFn& h, HSet l) {
  auto v = try_list(l);
  if (!v) throw Error(ErrorKind::NotAList, "native_list_rec");
  if (!v->is_cons) return c;
  return h(v->head, v->tail, native_list_rec(c, h, v->tail));
}

HSet native_nat_rec(HSet a, const BinFn& b, HSet k) {
  std::int64_t kv = ordinal_value(k);
  if (kv < 0) throw Error(ErrorKind::NotANat, "native_nat_rec");
  Ctx& ctx = k.ctx();
  HSet acc = a;
  for (std::int64_t i = 0; i < kv; ++i)
    acc = b(ctx.ordinal(static_cast<std::uint32_t>(i)), acc);
  return acc;
}

HSet native_term_rec(const TernFn& d, HSet t) {
  auto v = try_term(t);
  if (!v) throw Error(ErrorKind::NotATerm, "native_term_rec");
  Ctx& ctx = t.ctx();
  std::vector<HSet> results;
  for (HSet sub : list_elements(v->args))
    results.push_back(native_term_rec(d, sub));
  return d(v->label, v->args, list_of(ctx, results));
}

HSet native_tf_rec(const TernFn& b, HSet c, const QuadFn& d, HSet z) {
  auto v = try_sum(z);
  if (!v) throw Error(ErrorKind::NotATF, "native_tf_rec");
  if (v->side == Inj::Left) {
    auto p = try_pair(v->payload);
    if (!p) throw Error(ErrorKind::NotATF, "native_tf_rec");
    return b(p->first, p->second, native_tf_rec(b, c, d, p->second));
  }
  auto lv = try_list(v->payload);
  if (!lv) throw Error(ErrorKind::NotATF, "native_tf_rec");
  if (!lv->is_cons) return c;
  return d(lv->head, lv->tail, native_tf_rec(b, c, d, lv->head),
           native_tf_rec(b, c, d, lv->tail));
}

std::vector<HSet> all_subsets(HSet ground) {
  HSet p = powerset(ground);
  return std::vector<HSet>(p.begin(), p.end());
}

}  // namespace hfzf::testing

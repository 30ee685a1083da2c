#include "hfzf/recursion.hpp"

#include <map>
#include <vector>

#include "hfzf/grammar.hpp"
#include "hfzf/relations.hpp"

namespace hfzf {

HSet nfold_union(HSet a, std::size_t n) {
  HSet x = a;
  for (std::size_t i = 0; i < n; ++i) x = big_union(x);
  return x;
}

HSet eclose(HSet a) {
  Ctx& ctx = a.ctx();
  auto it = ctx.eclose_memo().find(a.id());
  if (it != ctx.eclose_memo().end()) return it->second;
  HSet acc = a;
  HSet layer = a;
  for (;;) {
    layer = big_union(layer);
    if (subset(layer, acc)) break;
    acc = union2(acc, layer);
  }
  ctx.eclose_memo().emplace(a.id(), acc);
  return acc;
}

bool is_recfun(HSet r, HSet a, const RecBody& body, HSet f) {
  require_relation(r, "is_recfun");
  HSet dom = inv_image_singleton(r, a);
  HSet expected = lambda_set(dom, [&](HSet x) {
    SetRecArgs args(restrict_fn(f, inv_image_singleton(r, x)));
    return body(x, args);
  });
  return expected == f;
}

HSet the_recfun(HSet r, HSet a, const RecBody& body) {
  if (!is_wf(r))
    throw Error(ErrorKind::NotWellFounded, "the_recfun: relation has a cycle");
  if (!is_transitive_rel(r))
    throw Error(ErrorKind::NotTransitive, "the_recfun: relation not transitive");
  Ctx& ctx = r.ctx();
  HSet dom = inv_image_singleton(r, a);

  // process r-minimal points first; transitivity keeps every predecessor
  // set inside dom
  std::map<std::uint32_t, std::size_t> preds_left;
  std::map<std::uint32_t, std::vector<HSet>> succs;
  for (HSet x : dom) preds_left[x.id()] = 0;
  for (HSet x : dom) {
    HSet px = inter(inv_image_singleton(r, x), dom);
    preds_left[x.id()] = px.card();
    for (HSet p : px) succs[p.id()].push_back(x);
  }
  std::vector<HSet> ready;
  for (HSet x : dom)
    if (preds_left[x.id()] == 0) ready.push_back(x);

  std::map<std::uint32_t, HSet> value;
  std::size_t done = 0;
  while (!ready.empty()) {
    HSet x = ready.back();
    ready.pop_back();
    ++done;
    HSet sub_dom = inter(inv_image_singleton(r, x), dom);
    std::vector<HSet> graph;
    for (HSet y : sub_dom) graph.push_back(pair(y, value.at(y.id())));
    SetRecArgs args(ctx.make(std::move(graph)));
    value.emplace(x.id(), body(x, args));
    for (HSet s : succs[x.id()])
      if (--preds_left[s.id()] == 0) ready.push_back(s);
  }
  if (done != dom.card())
    throw Error(ErrorKind::NotWellFounded, "the_recfun: cyclic predecessors");

  std::vector<HSet> graph;
  for (HSet x : dom) graph.push_back(pair(x, value.at(x.id())));
  HSet f = ctx.make(std::move(graph));
  if (!is_recfun(r, a, body, f))
    throw Error(ErrorKind::NonConvergence,
                "the_recfun: result fails its defining equation");
  return f;
}

HSet wftrec(HSet r, HSet a, const RecBody& body) {
  return body(a, SetRecArgs(the_recfun(r, a, body)));
}

HSet wfrec(HSet r, HSet a, const RecBody& body) {
  if (!is_wf(r))
    throw Error(ErrorKind::NotWellFounded, "wfrec: relation has a cycle");
  HSet rplus = trancl(r);
  RecBody restricted = [&](HSet x, const RecArgs& f) {
    SetRecArgs narrowed(
        restrict_fn(f.as_set(), inv_image_singleton(r, x)));
    return body(x, narrowed);
  };
  return wftrec(rplus, a, restricted);
}

HSet transrec(HSet a, const RecBody& body) {
  Ctx& ctx = a.ctx();
  HSet closure = eclose(ctx.make({a}));
  return wfrec(memrel(closure), a, body);
}

HSet rank(HSet a) {
  // rank(a) = U_{y in a} succ(rank(y)), memoized per context. An explicit
  // stack keeps deep encodings from overflowing the call stack.
  Ctx& ctx = a.ctx();
  std::vector<HSet> stack{a};
  while (!stack.empty()) {
    HSet x = stack.back();
    if (ctx.rank_memo().count(x.id())) {
      stack.pop_back();
      continue;
    }
    bool ready = true;
    for (HSet y : x) {
      if (!ctx.rank_memo().count(y.id())) {
        if (ready) ready = false;
        stack.push_back(y);
      }
    }
    if (!ready) continue;
    std::vector<HSet> stages;
    for (HSet y : x) stages.push_back(succ(ctx.rank_memo().at(y.id())));
    ctx.rank_memo().emplace(x.id(), big_union(ctx.make(std::move(stages))));
    stack.pop_back();
  }
  return ctx.rank_memo().at(a.id());
}

std::size_t rank_value(HSet a) {
  std::int64_t v = ordinal_value(rank(a));
  return static_cast<std::size_t>(v);
}

HSet vfrom(HSet a, std::size_t n) {
  if (n > 4)
    throw Error(ErrorKind::BoundExceeded,
                "vfrom stage " + std::to_string(n) + " exceeds the guard of 4");
  std::vector<HSet> stages;
  for (std::size_t k = 0; k <= n; ++k) {
    HSet v = a;
    for (std::size_t m = 0; m < k; ++m) v = union2(v, powerset(stages[m]));
    stages.push_back(v);
  }
  return stages[n];
}

bool in_univ(HSet a, HSet x) {
  if (member(x, a)) return true;
  for (HSet y : x)
    if (!in_univ(a, y)) return false;
  return true;
}

namespace {

class VrecEvaluator;

// Query interface for one vrec frame: only strictly smaller ranks may be
// asked for, matching the domain V_rank(x).
class GuardedArgs : public RecArgs {
 public:
  GuardedArgs(VrecEvaluator& eval, std::size_t bound_rank)
      : eval_(eval), bound_rank_(bound_rank) {}
  HSet lookup(HSet y) const override;
  HSet as_set() const override {
    throw Error(ErrorKind::NotMaterializable,
                "vrec interface has no set form; its domain is a whole stage");
  }

 private:
  VrecEvaluator& eval_;
  std::size_t bound_rank_;
};

class VrecEvaluator {
 public:
  explicit VrecEvaluator(const RecBody& body) : body_(body) {}

  HSet eval(HSet x) {
    auto it = memo_.find(x.id());
    if (it != memo_.end()) return it->second;
    GuardedArgs args(*this, rank_value(x));
    HSet result = body_(x, args);
    memo_.emplace(x.id(), result);
    return result;
  }

 private:
  const RecBody& body_;
  std::map<std::uint32_t, HSet> memo_;
};

HSet GuardedArgs::lookup(HSet y) const {
  std::size_t ry = rank_value(y);
  if (ry >= bound_rank_) {
    std::string text = print_set(y);
    throw VrecGuardError("query " + text + " of rank " + std::to_string(ry) +
                             " is not below the current argument's rank " +
                             std::to_string(bound_rank_),
                         std::move(text), ry, bound_rank_);
  }
  return eval_.eval(y);
}

}  // namespace

HSet vrec(HSet a, const RecBody& body) {
  VrecEvaluator evaluator(body);
  return evaluator.eval(a);
}

}  // namespace hfzf

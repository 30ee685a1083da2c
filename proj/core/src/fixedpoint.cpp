#include "hfzf/fixedpoint.hpp"

#include <map>
#include <utility>

#include "hfzf/datatypes.hpp"
#include "hfzf/relations.hpp"

namespace hfzf {

struct MonoOp::Node {
  Kind kind;
  std::vector<MonoOp> children;
  HSet c0, c1, c2, c3;
  InjTag tag;
  std::size_t bound = 0;
  SetFn fn;
  std::string name;
};

MonoOp MonoOp::from_node(std::shared_ptr<Node> node) {
  return MonoOp(std::move(node));
}

namespace {

std::shared_ptr<MonoOp::Node> new_node(MonoOp::Kind kind,
                                       std::vector<MonoOp> children = {},
                                       HSet c0 = {}, HSet c1 = {},
                                       HSet c2 = {}, HSet c3 = {}) {
  auto node = std::make_shared<MonoOp::Node>();
  node->kind = kind;
  node->children = std::move(children);
  node->c0 = c0;
  node->c1 = c1;
  node->c2 = c2;
  node->c3 = c3;
  return node;
}

}  // namespace

MonoOp MonoOp::constant(HSet c) { return from_node(new_node(Kind::Const, {}, c)); }
MonoOp MonoOp::identity() { return from_node(new_node(Kind::Id)); }
MonoOp MonoOp::union_of(MonoOp a, MonoOp b) {
  return from_node(new_node(Kind::Union, {std::move(a), std::move(b)}));
}
MonoOp MonoOp::product(MonoOp a, MonoOp b) {
  return from_node(new_node(Kind::Prod, {std::move(a), std::move(b)}));
}
MonoOp MonoOp::sum(MonoOp a, MonoOp b) {
  return from_node(new_node(Kind::Sum, {std::move(a), std::move(b)}));
}
MonoOp MonoOp::compose_rel(HSet r, MonoOp h) {
  return from_node(new_node(Kind::ComposeRel, {std::move(h)}, r));
}
MonoOp MonoOp::id_union(HSet a, MonoOp h) {
  return from_node(new_node(Kind::IdUnion, {std::move(h)}, a));
}
MonoOp MonoOp::diff_const(HSet outer, HSet gfun, HSet inner, HSet ffun) {
  return from_node(new_node(Kind::DiffConst, {}, outer, gfun, inner, ffun));
}
MonoOp MonoOp::part_of(InjTag tag, MonoOp h) {
  auto node = new_node(Kind::Part, {std::move(h)});
  node->tag = std::move(tag);
  return from_node(std::move(node));
}
MonoOp MonoOp::lists_of(MonoOp h, std::size_t max_len) {
  auto node = new_node(Kind::ListOf, {std::move(h)});
  node->bound = max_len;
  return from_node(std::move(node));
}
MonoOp MonoOp::repl_succ() { return from_node(new_node(Kind::ReplSucc)); }
MonoOp MonoOp::fin_op(HSet a) { return from_node(new_node(Kind::FinOp, {}, a)); }
MonoOp MonoOp::raw(SetFn fn, std::string name) {
  auto node = new_node(Kind::Raw);
  node->fn = std::move(fn);
  node->name = std::move(name);
  return from_node(std::move(node));
}

namespace {

HSet sum_encode_left(HSet a) { return pair(a.ctx().ordinal(0), a); }
HSet sum_encode_right(HSet b) { return pair(b.ctx().ordinal(1), b); }

// All list encodings over base with length <= max_len.
HSet bounded_lists(Ctx& ctx, HSet base, std::size_t max_len) {
  std::vector<HSet> pool{nil(ctx)};
  std::size_t lo = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t hi = pool.size();
    for (std::size_t i = lo; i < hi; ++i)
      for (HSet a : base) pool.push_back(cons_list(a, pool[i]));
    lo = hi;
  }
  return ctx.make(std::move(pool));
}

}  // namespace

bool matches_inj_tag(HSet x, const InjTag& tag) {
  HSet cur = x;
  for (Inj side : tag) {
    auto p = try_pair(cur);
    if (!p) return false;
    std::int64_t t = ordinal_value(p->first);
    if (side == Inj::Left && t != 0) return false;
    if (side == Inj::Right && t != 1) return false;
    cur = p->second;
  }
  return true;
}

MonoOp::Kind MonoOp::kind() const { return node_->kind; }

bool MonoOp::structurally_monotone() const {
  if (node_->kind == Kind::Raw) return false;
  for (const MonoOp& c : node_->children)
    if (!c.structurally_monotone()) return false;
  return true;
}

std::string MonoOp::describe() const {
  switch (node_->kind) {
    case Kind::Const: return "const";
    case Kind::Id: return "id";
    case Kind::Union: return "(" + node_->children[0].describe() + " U " +
                             node_->children[1].describe() + ")";
    case Kind::Prod: return "(" + node_->children[0].describe() + " x " +
                            node_->children[1].describe() + ")";
    case Kind::Sum: return "(" + node_->children[0].describe() + " + " +
                           node_->children[1].describe() + ")";
    case Kind::ComposeRel: return "(r o " + node_->children[0].describe() + ")";
    case Kind::IdUnion: return "(id U " + node_->children[0].describe() + ")";
    case Kind::DiffConst: return "banach";
    case Kind::Part: return "part(" + node_->children[0].describe() + ")";
    case Kind::ListOf: return "lists(" + node_->children[0].describe() + ")";
    case Kind::ReplSucc: return "replsucc";
    case Kind::FinOp: return "finop";
    case Kind::Raw: return "raw:" + node_->name;
  }
  return "?";
}

HSet MonoOp::eval(HSet x) const {
  Ctx& ctx = x.ctx();
  switch (node_->kind) {
    case Kind::Const:
      return node_->c0;
    case Kind::Id:
      return x;
    case Kind::Union:
      return union2(node_->children[0].eval(x), node_->children[1].eval(x));
    case Kind::Prod:
      return prod(node_->children[0].eval(x), node_->children[1].eval(x));
    case Kind::Sum: {
      HSet a = node_->children[0].eval(x);
      HSet b = node_->children[1].eval(x);
      std::vector<HSet> elems;
      for (HSet e : a) elems.push_back(sum_encode_left(e));
      for (HSet e : b) elems.push_back(sum_encode_right(e));
      return ctx.make(std::move(elems));
    }
    case Kind::ComposeRel:
      return compose(node_->c0, node_->children[0].eval(x));
    case Kind::IdUnion:
      return union2(id_on(node_->c0), node_->children[0].eval(x));
    case Kind::DiffConst:
      return diff(node_->c0,
                  image(node_->c1, diff(node_->c2, image(node_->c3, x))));
    case Kind::Part:
      return sep(node_->children[0].eval(x),
                 [this](HSet e) { return matches_inj_tag(e, node_->tag); });
    case Kind::ListOf:
      return bounded_lists(ctx, node_->children[0].eval(x), node_->bound);
    case Kind::ReplSucc: {
      std::vector<HSet> elems{ctx.ordinal(0)};
      for (HSet i : x) elems.push_back(succ(i));
      return ctx.make(std::move(elems));
    }
    case Kind::FinOp: {
      std::vector<HSet> elems{ctx.empty()};
      for (HSet y : x)
        for (HSet a : node_->c0) elems.push_back(cons(a, y));
      return ctx.make(std::move(elems));
    }
    case Kind::Raw:
      return node_->fn(x);
  }
  throw Error(ErrorKind::NonConvergence, "unreachable operator kind");
}

HSet eval_op(const MonoOp& h, HSet x) { return h.eval(x); }

bool bnd_mono_check(HSet d, const MonoOp& h) {
  return h.structurally_monotone() && subset(h.eval(d), d);
}

HSet lfp_iterate(HSet d, const MonoOp& h) {
  if (!subset(h.eval(d), d))
    throw Error(ErrorKind::NotBounded,
                "operator " + h.describe() + " is not bounded by the given set");
  HSet x = d.ctx().empty();
  const std::size_t max_steps = d.card() + 1;
  for (std::size_t step = 0; step <= max_steps; ++step) {
    HSet next = h.eval(x);
    if (next == x) return x;
    x = next;
  }
  throw Error(ErrorKind::NonConvergence,
              "iteration did not become stationary within |D|+1 steps");
}

HSet iterate_op(Ctx& ctx, const MonoOp& h, std::size_t n) {
  HSet x = ctx.empty();
  for (std::size_t i = 0; i < n; ++i) x = h.eval(x);
  return x;
}

bool induction_check(HSet d, const MonoOp& h, const SetPred& psi) {
  HSet a = lfp_iterate(d, h);
  HSet a_psi = sep(a, psi);
  for (HSet x : h.eval(a_psi))
    if (!psi(x)) return false;
  return true;
}

bool lfp_mono_check(HSet d, const MonoOp& h, HSet e, const MonoOp& i) {
  if (!subset(h.eval(d), d) || !subset(i.eval(e), e))
    throw Error(ErrorKind::NotBounded, "lfp_mono_check: operator not bounded");
  bool premise = true;
  HSet x = d.ctx().empty();
  const std::size_t max_steps = d.card() + 1;
  for (std::size_t step = 0; step <= max_steps && premise; ++step) {
    if (!subset(h.eval(x), i.eval(x))) premise = false;
    HSet next = h.eval(x);
    if (next == x) break;
    x = next;
  }
  bool conclusion = subset(lfp_iterate(d, h), lfp_iterate(e, i));
  return premise && conclusion;
}

namespace {

void require_fn_between(HSet f, HSet from, HSet to, const char* who) {
  if (!is_function(f))
    throw Error(ErrorKind::NotAFunction,
                std::string(who) + ": not a single-valued set of pairs");
  if (rel_domain(f) != from)
    throw Error(ErrorKind::DomainMismatch,
                std::string(who) + ": domain differs from the given set");
  if (!subset(rel_range(f), to))
    throw Error(ErrorKind::DomainMismatch,
                std::string(who) + ": range escapes the target set");
}

}  // namespace

BanachParts banach_decompose(HSet x, HSet y, HSet f, HSet g) {
  require_fn_between(f, x, y, "banach f");
  require_fn_between(g, y, x, "banach g");
  MonoOp op = MonoOp::diff_const(x, g, y, f);
  BanachParts parts;
  parts.xa = lfp_iterate(x, op);
  parts.xb = diff(x, parts.xa);
  parts.ya = image(f, parts.xa);
  parts.yb = diff(y, parts.ya);
  return parts;
}

HSet schroeder_bernstein(HSet x, HSet y, HSet f, HSet g) {
  if (!is_injective(f))
    throw Error(ErrorKind::NotInjective, "schroeder_bernstein: f");
  if (!is_injective(g))
    throw Error(ErrorKind::NotInjective, "schroeder_bernstein: g");
  BanachParts parts = banach_decompose(x, y, f, g);
  HSet h = union2(restrict_fn(f, parts.xa), converse(restrict_fn(g, parts.yb)));
  // bijection X -> Y, verified before returning
  if (!is_function(h) || !is_injective(h) || rel_domain(h) != x ||
      rel_range(h) != y)
    throw Error(ErrorKind::NotInjective,
                "schroeder_bernstein: assembled map is not a bijection");
  return h;
}

}  // namespace hfzf

#include "hfzf/datatypes.hpp"

#include <algorithm>

#include "hfzf/ordinals.hpp"
#include "hfzf/recursion.hpp"

namespace hfzf {

HSet inl(HSet a) { return pair(a.ctx().ordinal(0), a); }
HSet inr(HSet b) { return pair(b.ctx().ordinal(1), b); }

std::optional<SumView> try_sum(HSet z) {
  auto p = try_pair(z);
  if (!p) return std::nullopt;
  std::int64_t tag = ordinal_value(p->first);
  if (tag == 0) return SumView{Inj::Left, p->second};
  if (tag == 1) return SumView{Inj::Right, p->second};
  return std::nullopt;
}

HSet case_sum(const SetFn& c, const SetFn& d, HSet z) {
  auto v = try_sum(z);
  if (!v) throw Error(ErrorKind::NotASum, "case: not a tagged value");
  return v->side == Inj::Left ? c(v->payload) : d(v->payload);
}

HSet part(HSet a, const InjTag& tag) {
  return sep(a, [&](HSet x) { return matches_inj_tag(x, tag); });
}

HSet nil(Ctx& ctx) { return inl(ctx.empty()); }
HSet cons_list(HSet a, HSet l) { return inr(pair(a, l)); }

std::optional<ListView> try_list(HSet x) {
  auto v = try_sum(x);
  if (!v) return std::nullopt;
  if (v->side == Inj::Left) {
    if (v->payload.card() != 0) return std::nullopt;
    return ListView{false, {}, {}};
  }
  auto p = try_pair(v->payload);
  if (!p) return std::nullopt;
  return ListView{true, p->first, p->second};
}

bool is_list(const SetPred& elem, HSet x) {
  HSet cur = x;
  for (;;) {
    auto v = try_list(cur);
    if (!v) return false;
    if (!v->is_cons) return true;
    if (!elem(v->head)) return false;
    cur = v->tail;
  }
}

HSet list_case(HSet c, const BinFn& h, HSet l) {
  auto v = try_list(l);
  if (!v) throw Error(ErrorKind::NotAList, "list_case: not a list encoding");
  return v->is_cons ? h(v->head, v->tail) : c;
}

namespace {

const SetPred accept_any = [](HSet) { return true; };

}  // namespace

HSet list_rec(HSet c, const TernFn& h, HSet l) {
  if (!is_list(accept_any, l))
    throw Error(ErrorKind::NotAList, "list_rec: not a list encoding");
  return vrec(l, [&](HSet x, const RecArgs& g) {
    return list_case(
        c, [&](HSet hd, HSet tl) { return h(hd, tl, g.lookup(tl)); }, x);
  });
}

HSet list_map(const SetFn& h, HSet l) {
  Ctx& ctx = l.ctx();
  return list_rec(
      nil(ctx), [&](HSet x, HSet, HSet r) { return cons_list(h(x), r); }, l);
}

HSet append(HSet xs, HSet ys) {
  return list_rec(
      ys, [](HSet x, HSet, HSet r) { return cons_list(x, r); }, xs);
}

HSet rev(HSet l) {
  // the reversing body: r @ Cons(x, Nil); quadratic but easy to reason about
  Ctx& ctx = l.ctx();
  return list_rec(
      nil(ctx),
      [&](HSet x, HSet, HSet r) {
        return append(r, cons_list(x, nil(ctx)));
      },
      l);
}

HSet list_of(Ctx& ctx, const std::vector<HSet>& elems) {
  HSet l = nil(ctx);
  for (auto it = elems.rbegin(); it != elems.rend(); ++it)
    l = cons_list(*it, l);
  return l;
}

std::vector<HSet> list_elements(HSet l) {
  std::vector<HSet> out;
  HSet cur = l;
  for (;;) {
    auto v = try_list(cur);
    if (!v) throw Error(ErrorKind::NotAList, "not a list encoding");
    if (!v->is_cons) return out;
    out.push_back(v->head);
    cur = v->tail;
  }
}

std::size_t list_length(HSet l) { return list_elements(l).size(); }

HSet apply_term(HSet a, HSet ts) { return pair(a, ts); }

std::optional<TermView> try_term(HSet x) {
  auto p = try_pair(x);
  if (!p) return std::nullopt;
  if (!try_list(p->second)) return std::nullopt;
  return TermView{p->first, p->second};
}

bool is_term(const SetPred& label, HSet x) {
  auto v = try_term(x);
  if (!v) return false;
  if (!label(v->label)) return false;
  HSet cur = v->args;
  for (;;) {
    auto lv = try_list(cur);
    if (!lv) return false;
    if (!lv->is_cons) return true;
    if (!is_term(label, lv->head)) return false;
    cur = lv->tail;
  }
}

HSet term_rec(const TernFn& d, HSet t) {
  // rejecting non-terms up front discharges the subterm-list premise of the
  // recursion equation
  if (!is_term(accept_any, t))
    throw Error(ErrorKind::NotATerm, "term_rec: not a term encoding");
  return vrec(t, [&](HSet x, const RecArgs& g) {
    return split(
        [&](HSet label, HSet zs) {
          HSet rs = list_map([&](HSet z) { return g.lookup(z); }, zs);
          return d(label, zs, rs);
        },
        x);
  });
}

HSet reflect(HSet t) {
  return term_rec(
      [](HSet x, HSet, HSet rs) { return apply_term(x, rev(rs)); }, t);
}

HSet tcons(HSet a, HSet f) { return inl(pair(a, f)); }
HSet fnil(Ctx& ctx) { return inr(nil(ctx)); }
HSet fcons(HSet t, HSet f) { return inr(cons_list(t, f)); }

std::optional<TFView> try_tf(HSet x) {
  auto v = try_sum(x);
  if (!v) return std::nullopt;
  if (v->side == Inj::Left) {
    auto p = try_pair(v->payload);
    if (!p) return std::nullopt;
    return TFView{TFView::Kind::Tcons, p->first, {}, p->second};
  }
  auto lv = try_list(v->payload);
  if (!lv) return std::nullopt;
  if (!lv->is_cons) return TFView{TFView::Kind::Fnil, {}, {}, {}};
  return TFView{TFView::Kind::Fcons, {}, lv->head, lv->tail};
}

bool is_tree(const SetPred& label, HSet x) {
  auto v = try_tf(x);
  if (!v || v->kind != TFView::Kind::Tcons) return false;
  return label(v->label) && is_forest(label, v->forest);
}

bool is_forest(const SetPred& label, HSet x) {
  // Fcons(t,f) = Inr(Cons(t,f)): the cons tail is itself a tagged forest
  auto v = try_tf(x);
  if (!v) return false;
  if (v->kind == TFView::Kind::Fnil) return true;
  if (v->kind != TFView::Kind::Fcons) return false;
  return is_tree(label, v->tree) && is_forest(label, v->forest);
}

bool is_tf(const SetPred& label, HSet x) {
  return is_tree(label, x) || is_forest(label, x);
}

HSet tf_case(const BinFn& b, HSet c, const BinFn& d, HSet z) {
  auto v = try_tf(z);
  if (!v) throw Error(ErrorKind::NotATF, "TF_case: not a tree/forest encoding");
  switch (v->kind) {
    case TFView::Kind::Tcons:
      return b(v->label, v->forest);
    case TFView::Kind::Fnil:
      return c;
    case TFView::Kind::Fcons:
      return d(v->tree, v->forest);
  }
  throw Error(ErrorKind::NotATF, "unreachable");
}

HSet tf_rec(const TernFn& b, HSet c, const QuadFn& d, HSet z) {
  if (!is_tf(accept_any, z))
    throw Error(ErrorKind::NotATF, "TF_rec: not a tree/forest encoding");
  return vrec(z, [&](HSet x, const RecArgs& r) {
    return tf_case(
        [&](HSet label, HSet f) { return b(label, f, r.lookup(f)); }, c,
        [&](HSet t, HSet f) { return d(t, f, r.lookup(t), r.lookup(f)); }, x);
  });
}

HSet tf_map(const SetFn& h, HSet z) {
  Ctx& ctx = z.ctx();
  return tf_rec(
      [&](HSet x, HSet, HSet r) { return tcons(h(x), r); }, fnil(ctx),
      [](HSet, HSet, HSet r1, HSet r2) { return fcons(r1, r2); }, z);
}

HSet tf_size(HSet z) {
  Ctx& ctx = z.ctx();
  return tf_rec(
      [](HSet, HSet, HSet r) { return succ(r); }, ctx.ordinal(0),
      [](HSet, HSet, HSet r1, HSet r2) { return nat_add(r1, r2); }, z);
}

HSet tf_preorder(HSet z) {
  Ctx& ctx = z.ctx();
  return tf_rec(
      [](HSet x, HSet, HSet r) { return cons_list(x, r); }, nil(ctx),
      [](HSet, HSet, HSet r1, HSet r2) { return append(r1, r2); }, z);
}

HSet fin_enum(HSet a) {
  if (a.card() > 12)
    throw Error(ErrorKind::BoundExceeded,
                "fin_enum carrier larger than 12 elements");
  return lfp_iterate(powerset(a), MonoOp::fin_op(a));
}

bool fin_induction_check(HSet a, const SetPred& psi) {
  Ctx& ctx = a.ctx();
  if (!psi(ctx.empty())) return false;
  for (HSet y : fin_enum(a)) {
    if (!psi(y)) continue;  // step premises are conditional on psi(y)
    for (HSet x : a) {
      if (member(x, y)) continue;  // discharged assumption
      if (!psi(cons(x, y))) return false;
    }
  }
  return true;
}

}  // namespace hfzf

#include "hfzf/hset.hpp"

#include <algorithm>
#include <cassert>

namespace hfzf {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::MixedContext: return "MixedContext";
    case ErrorKind::FrozenContext: return "FrozenContext";
    case ErrorKind::NotAPair: return "NotAPair";
    case ErrorKind::NotInDomain: return "NotInDomain";
    case ErrorKind::NotSingleValued: return "NotSingleValued";
    case ErrorKind::NotARelation: return "NotARelation";
    case ErrorKind::NotAFunction: return "NotAFunction";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NotWellFounded: return "NotWellFounded";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NotZeroOrSucc: return "NotZeroOrSucc";
    case ErrorKind::NotANat: return "NotANat";
    case ErrorKind::NotASum: return "NotASum";
    case ErrorKind::NotAList: return "NotAList";
    case ErrorKind::NotATerm: return "NotATerm";
    case ErrorKind::NotATF: return "NotATF";
    case ErrorKind::NotMaterializable: return "NotMaterializable";
    case ErrorKind::VrecGuardViolation: return "VrecGuardViolation";
    case ErrorKind::NotAPropCode: return "NotAPropCode";
    case ErrorKind::MalformedFormula: return "MalformedFormula";
    case ErrorKind::HypNotInContext: return "HypNotInContext";
    case ErrorKind::MalformedMP: return "MalformedMP";
  }
  return "Error";
}

namespace {

std::uint64_t hash_children(const std::vector<std::uint32_t>& ids) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(ids.size());
  for (std::uint32_t id : ids) mix(id);
  return h;
}

Ctx& same_ctx(HSet a, HSet b) {
  if (&a.ctx() != &b.ctx())
    throw Error(ErrorKind::MixedContext, "values from different contexts");
  return a.ctx();
}

}  // namespace

std::size_t HSet::card() const { return ctx_->node_card(id_); }

HSet HSet::at(std::size_t i) const {
  return HSet(ctx_, ctx_->node_child(id_, i));
}

Ctx::Ctx(CtxOptions options) : options_(options) {
  intern({});  // id 0 is the empty set
}

void Ctx::charge(std::size_t units) {
  spent_ += units;
  if (spent_ > options_.budget)
    throw Error(ErrorKind::BudgetExceeded,
                "element budget of " + std::to_string(options_.budget) +
                    " exhausted");
}

std::uint32_t Ctx::intern(std::vector<std::uint32_t> sorted_children) {
  std::uint64_t h = hash_children(sorted_children);
  auto it = buckets_.find(h);
  if (it != buckets_.end()) {
    for (std::uint32_t cand : it->second) {
      const Node& n = nodes_[cand];
      if (n.len != sorted_children.size()) continue;
      if (std::equal(sorted_children.begin(), sorted_children.end(),
                     arena_.begin() + n.off))
        return cand;
    }
  }
  if (frozen_)
    throw Error(ErrorKind::FrozenContext, "context is frozen");
  charge(1 + sorted_children.size());
  Node n;
  n.off = static_cast<std::uint32_t>(arena_.size());
  n.len = static_cast<std::uint32_t>(sorted_children.size());
  arena_.insert(arena_.end(), sorted_children.begin(), sorted_children.end());
  std::uint32_t id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(n);
  buckets_[h].push_back(id);
  return id;
}

int Ctx::compare_ids(std::uint32_t a, std::uint32_t b) {
  if (a == b) return 0;
  std::size_t ca = node_card(a), cb = node_card(b);
  if (ca != cb) return ca < cb ? -1 : 1;
  bool flip = a > b;
  if (flip) std::swap(a, b);
  std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
  auto it = cmp_memo_.find(key);
  int r;
  if (it != cmp_memo_.end()) {
    r = it->second;
  } else {
    r = 0;
    for (std::size_t i = 0; i < ca; ++i) {
      r = compare_ids(node_child(a, i), node_child(b, i));
      if (r != 0) break;
    }
    if (!frozen_) cmp_memo_.emplace(key, r);
  }
  return flip ? -r : r;
}

int Ctx::compare(HSet a, HSet b) {
  same_ctx(a, b);
  return compare_ids(a.id(), b.id());
}

HSet Ctx::empty() { return wrap(0); }

HSet Ctx::make(std::vector<HSet> elems) {
  std::vector<std::uint32_t> ids;
  ids.reserve(elems.size());
  for (const HSet& e : elems) {
    if (&e.ctx() != this)
      throw Error(ErrorKind::MixedContext, "element from another context");
    ids.push_back(e.id());
  }
  std::sort(ids.begin(), ids.end(), [this](std::uint32_t x, std::uint32_t y) {
    return compare_ids(x, y) < 0;
  });
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return wrap(intern(std::move(ids)));
}

HSet Ctx::ordinal(std::uint32_t n) {
  if (n > options_.nat_bound)
    throw Error(ErrorKind::BoundExceeded,
                "numeral " + std::to_string(n) + " exceeds nat bound " +
                    std::to_string(options_.nat_bound));
  while (ordinal_cache_.size() <= n) {
    if (ordinal_cache_.empty()) {
      ordinal_cache_.push_back(0);
      continue;
    }
    // ordinal k = {0, ..., k-1}; the cache prefix is already in canonical
    // order because ordinals sort by cardinality
    std::vector<std::uint32_t> ids(ordinal_cache_.begin(), ordinal_cache_.end());
    ordinal_cache_.push_back(intern(std::move(ids)));
  }
  return wrap(ordinal_cache_[n]);
}

std::int64_t Ctx::ordinal_value_id(std::uint32_t id) {
  auto it = ordv_memo_.find(id);
  if (it != ordv_memo_.end()) return it->second;
  const std::size_t n = node_card(id);
  std::int64_t v = static_cast<std::int64_t>(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ordinal_value_id(node_child(id, i)) != static_cast<std::int64_t>(i)) {
      v = -1;
      break;
    }
  }
  if (!frozen_) ordv_memo_.emplace(id, v);
  return v;
}

std::int64_t ordinal_value(HSet s) { return s.ctx().ordinal_value_id(s.id()); }

bool member(HSet x, HSet s) {
  Ctx& ctx = same_ctx(x, s);
  // canonical order allows binary search
  std::size_t lo = 0, hi = s.card();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    int c = ctx.compare(s.at(mid), x);
    if (c == 0) return true;
    if (c < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return false;
}

bool subset(HSet a, HSet b) {
  same_ctx(a, b);
  if (a == b) return true;
  if (a.card() > b.card()) return false;
  for (HSet x : a)
    if (!member(x, b)) return false;
  return true;
}

bool eq(HSet a, HSet b) {
  same_ctx(a, b);
  return a == b;
}

HSet union2(HSet a, HSet b) {
  Ctx& ctx = same_ctx(a, b);
  std::vector<HSet> elems(a.begin(), a.end());
  elems.insert(elems.end(), b.begin(), b.end());
  return ctx.make(std::move(elems));
}

HSet inter(HSet a, HSet b) {
  Ctx& ctx = same_ctx(a, b);
  std::vector<HSet> elems;
  for (HSet x : a)
    if (member(x, b)) elems.push_back(x);
  return ctx.make(std::move(elems));
}

HSet diff(HSet a, HSet b) {
  Ctx& ctx = same_ctx(a, b);
  std::vector<HSet> elems;
  for (HSet x : a)
    if (!member(x, b)) elems.push_back(x);
  return ctx.make(std::move(elems));
}

HSet big_union(HSet s) {
  std::vector<HSet> elems;
  for (HSet x : s)
    for (HSet y : x) elems.push_back(y);
  return s.ctx().make(std::move(elems));
}

HSet powerset(HSet a) {
  Ctx& ctx = a.ctx();
  const std::size_t n = a.card();
  if (n > ctx.options().powerset_bound)
    throw Error(ErrorKind::BoundExceeded,
                "powerset of a " + std::to_string(n) +
                    "-element set exceeds the guard of " +
                    std::to_string(ctx.options().powerset_bound));
  std::vector<HSet> subsets;
  subsets.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<HSet> elems;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) elems.push_back(a.at(i));
    subsets.push_back(ctx.make(std::move(elems)));
  }
  return ctx.make(std::move(subsets));
}

HSet cons(HSet x, HSet a) {
  Ctx& ctx = same_ctx(x, a);
  std::vector<HSet> elems(a.begin(), a.end());
  elems.push_back(x);
  return ctx.make(std::move(elems));
}

HSet succ(HSet x) { return cons(x, x); }

HSet pair(HSet a, HSet b) {
  Ctx& ctx = same_ctx(a, b);
  HSet sa = ctx.make({a});
  HSet sab = ctx.make({a, b});
  return ctx.make({sa, sab});
}

std::optional<std::pair<HSet, HSet>> try_pair(HSet p) {
  if (p.card() == 1) {
    HSet e = p.at(0);
    if (e.card() != 1) return std::nullopt;
    HSet a = e.at(0);
    return std::make_pair(a, a);
  }
  if (p.card() == 2) {
    // canonical order puts the singleton {a} before the doubleton {a,b}
    HSet s = p.at(0), t = p.at(1);
    if (s.card() != 1 || t.card() != 2) return std::nullopt;
    HSet a = s.at(0);
    if (!member(a, t)) return std::nullopt;
    HSet b = (t.at(0) == a) ? t.at(1) : t.at(0);
    return std::make_pair(a, b);
  }
  return std::nullopt;
}

HSet fst(HSet p) {
  auto d = try_pair(p);
  if (!d) throw Error(ErrorKind::NotAPair, "fst of a non-pair");
  return d->first;
}

HSet snd(HSet p) {
  auto d = try_pair(p);
  if (!d) throw Error(ErrorKind::NotAPair, "snd of a non-pair");
  return d->second;
}

HSet split(const BinFn& h, HSet p) {
  auto d = try_pair(p);
  if (!d) throw Error(ErrorKind::NotAPair, "split of a non-pair");
  return h(d->first, d->second);
}

HSet sep(HSet s, const SetPred& pred) {
  std::vector<HSet> elems;
  for (HSet x : s)
    if (pred(x)) elems.push_back(x);
  return s.ctx().make(std::move(elems));
}

HSet repl(HSet s, const SetFn& fn) {
  std::vector<HSet> elems;
  for (HSet x : s) elems.push_back(fn(x));
  return s.ctx().make(std::move(elems));
}

HSet lambda_set(HSet a, const SetFn& body) {
  return repl(a, [&](HSet x) { return pair(x, body(x)); });
}

HSet apply(HSet f, HSet x) {
  same_ctx(f, x);
  std::optional<HSet> value;
  for (HSet e : f) {
    auto d = try_pair(e);
    if (!d || d->first != x) continue;
    if (value && *value != d->second)
      throw Error(ErrorKind::NotSingleValued, "application is ambiguous");
    value = d->second;
  }
  if (!value) throw Error(ErrorKind::NotInDomain, "argument outside domain");
  return *value;
}

HSet restrict_fn(HSet f, HSet a) {
  Ctx& ctx = same_ctx(f, a);
  std::vector<HSet> dom;
  for (HSet e : f) {
    auto d = try_pair(e);
    if (d && member(d->first, a)) dom.push_back(d->first);
  }
  HSet domain = ctx.make(std::move(dom));
  return lambda_set(domain, [&](HSet x) { return apply(f, x); });
}

}  // namespace hfzf

#include "hfzf/relations.hpp"

#include <map>
#include <vector>

#include "hfzf/fixedpoint.hpp"

namespace hfzf {

bool is_relation(HSet r) {
  for (HSet e : r)
    if (!try_pair(e)) return false;
  return true;
}

void require_relation(HSet r, const char* who) {
  if (!is_relation(r))
    throw Error(ErrorKind::NotARelation,
                std::string(who) + ": a non-pair element is present");
}

HSet prod(HSet a, HSet b) {
  std::vector<HSet> elems;
  for (HSet x : a)
    for (HSet y : b) elems.push_back(pair(x, y));
  return a.ctx().make(std::move(elems));
}

namespace {

std::vector<std::pair<HSet, HSet>> pairs_of(HSet r, const char* who) {
  std::vector<std::pair<HSet, HSet>> out;
  out.reserve(r.card());
  for (HSet e : r) {
    auto d = try_pair(e);
    if (!d)
      throw Error(ErrorKind::NotARelation,
                  std::string(who) + ": a non-pair element is present");
    out.push_back(*d);
  }
  return out;
}

}  // namespace

HSet converse(HSet r) {
  auto ps = pairs_of(r, "converse");
  std::vector<HSet> elems;
  for (auto& [x, y] : ps) elems.push_back(pair(y, x));
  return r.ctx().make(std::move(elems));
}

HSet rel_domain(HSet r) {
  auto ps = pairs_of(r, "domain");
  std::vector<HSet> elems;
  for (auto& [x, y] : ps) elems.push_back(x);
  return r.ctx().make(std::move(elems));
}

HSet rel_range(HSet r) {
  auto ps = pairs_of(r, "range");
  std::vector<HSet> elems;
  for (auto& [x, y] : ps) elems.push_back(y);
  return r.ctx().make(std::move(elems));
}

HSet field(HSet r) { return union2(rel_domain(r), rel_range(r)); }

HSet image(HSet r, HSet a) {
  auto ps = pairs_of(r, "image");
  std::vector<HSet> elems;
  for (auto& [x, y] : ps)
    if (member(x, a)) elems.push_back(y);
  return r.ctx().make(std::move(elems));
}

HSet inv_image_singleton(HSet r, HSet x) {
  auto ps = pairs_of(r, "inv_image");
  std::vector<HSet> elems;
  for (auto& [y, z] : ps)
    if (z == x) elems.push_back(y);
  return r.ctx().make(std::move(elems));
}

HSet compose(HSet r, HSet s) {
  auto rp = pairs_of(r, "compose");
  auto sp = pairs_of(s, "compose");
  // bucket r by first component to avoid the quadratic scan
  std::map<std::uint32_t, std::vector<HSet>> r_by_first;
  for (auto& [y, z] : rp) r_by_first[y.id()].push_back(z);
  std::vector<HSet> elems;
  for (auto& [x, y] : sp) {
    auto it = r_by_first.find(y.id());
    if (it == r_by_first.end()) continue;
    for (HSet z : it->second) elems.push_back(pair(x, z));
  }
  return r.ctx().make(std::move(elems));
}

HSet id_on(HSet a) {
  return repl(a, [](HSet x) { return pair(x, x); });
}

HSet memrel(HSet a) {
  std::vector<HSet> elems;
  for (HSet x : a)
    for (HSet y : a)
      if (member(x, y)) elems.push_back(pair(x, y));
  return a.ctx().make(std::move(elems));
}

bool is_wf(HSet r) {
  auto ps = pairs_of(r, "wf");
  // depth-first cycle detection over the edges y -> x for <y,x> in r
  std::map<std::uint32_t, std::vector<std::uint32_t>> succs;
  std::map<std::uint32_t, int> state;  // 0 new, 1 open, 2 done
  for (auto& [y, x] : ps) {
    succs[y.id()].push_back(x.id());
    state.emplace(y.id(), 0);
    state.emplace(x.id(), 0);
  }
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;
  for (auto& [start, st] : state) {
    if (st != 0) continue;
    stack.push_back({start, 0});
    state[start] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto& out = succs[v];
      if (next < out.size()) {
        std::uint32_t w = out[next++];
        if (state[w] == 1) return false;
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

bool is_transitive_rel(HSet r) {
  auto ps = pairs_of(r, "trans");
  std::map<std::uint32_t, std::vector<HSet>> by_first;
  for (auto& [x, y] : ps) by_first[x.id()].push_back(y);
  for (auto& [x, y] : ps) {
    auto it = by_first.find(y.id());
    if (it == by_first.end()) continue;
    for (HSet z : it->second)
      if (!member(pair(x, z), r)) return false;
  }
  return true;
}

HSet rtrancl(HSet r) {
  require_relation(r, "rtrancl");
  HSet fld = field(r);
  HSet bound = prod(fld, fld);
  MonoOp op = MonoOp::id_union(fld, MonoOp::compose_rel(r, MonoOp::identity()));
  return lfp_iterate(bound, op);
}

HSet trancl(HSet r) { return compose(r, rtrancl(r)); }

bool is_function(HSet f) {
  if (!is_relation(f)) return false;
  auto ps = pairs_of(f, "function");
  std::map<std::uint32_t, std::uint32_t> seen;
  for (auto& [x, y] : ps) {
    auto [it, inserted] = seen.emplace(x.id(), y.id());
    if (!inserted && it->second != y.id()) return false;
  }
  return true;
}

bool is_injective(HSet f) {
  if (!is_function(f)) return false;
  auto ps = pairs_of(f, "injective");
  std::map<std::uint32_t, std::uint32_t> seen;
  for (auto& [x, y] : ps) {
    auto [it, inserted] = seen.emplace(y.id(), x.id());
    if (!inserted && it->second != x.id()) return false;
  }
  return true;
}

}  // namespace hfzf

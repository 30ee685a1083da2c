#include "hfzf/ordinals.hpp"

#include "hfzf/relations.hpp"

namespace hfzf {

bool is_transset(HSet a) {
  for (HSet x : a)
    if (!subset(x, a)) return false;
  return true;
}

bool is_ord(HSet a) {
  if (!is_transset(a)) return false;
  for (HSet x : a)
    if (!is_transset(x)) return false;
  return true;
}

bool lt(HSet a, HSet b) { return member(a, b) && is_ord(b); }

bool is_limit(HSet a) {
  if (!is_ord(a)) return false;
  Ctx& ctx = a.ctx();
  if (!lt(ctx.ordinal(0), a)) return false;
  for (HSet y : a)
    if (lt(y, a) && !lt(succ(y), a)) return false;
  return true;
}

HSet nat_upto(Ctx& ctx, std::uint32_t k) {
  if (k > ctx.options().nat_bound)
    throw Error(ErrorKind::BoundExceeded,
                "nat_upto(" + std::to_string(k) + ") exceeds the bound of " +
                    std::to_string(ctx.options().nat_bound));
  return ctx.ordinal(k);
}

namespace {

// k = succ(x) iff x in k and k \ {x} = x; unique by foundation.
std::optional<HSet> try_pred(HSet k) {
  Ctx& ctx = k.ctx();
  for (HSet x : k) {
    if (diff(k, ctx.make({x})) == x) return x;
  }
  return std::nullopt;
}

}  // namespace

HSet nat_case(HSet a, const SetFn& b, HSet k) {
  if (k.card() == 0) return a;
  if (auto m = try_pred(k)) return b(*m);
  throw Error(ErrorKind::NotZeroOrSucc,
              "nat_case: argument is neither 0 nor a successor");
}

HSet nat_rec(HSet a, const BinFn& b, HSet k) {
  std::int64_t kv = ordinal_value(k);
  if (kv < 0)
    throw Error(ErrorKind::NotANat, "nat_rec: argument is not a natural");
  Ctx& ctx = k.ctx();
  HSet segment = nat_upto(ctx, static_cast<std::uint32_t>(kv) + 1);
  RecBody body = [&](HSet n, const RecArgs& f) {
    return nat_case(a, [&](HSet m) { return b(m, f.lookup(m)); }, n);
  };
  return wfrec(memrel(segment), k, body);
}

HSet nat_add(HSet m, HSet n) {
  if (ordinal_value(n) < 0)
    throw Error(ErrorKind::NotANat, "nat_add: argument is not a natural");
  return nat_rec(n, [](HSet, HSet r) { return succ(r); }, m);
}

}  // namespace hfzf

#ifndef HFZF_HSET_HPP
#define HFZF_HSET_HPP

#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hfzf/errors.hpp"

namespace hfzf {

class Ctx;

// A hereditarily finite set. Values are canonical and interned in a Ctx, so
// extensional equality coincides with (ctx, id) identity. Copying is free;
// all values are immutable.
class HSet {
 public:
  HSet() = default;

  bool valid() const { return ctx_ != nullptr; }
  Ctx& ctx() const { return *ctx_; }
  std::uint32_t id() const { return id_; }

  std::size_t card() const;
  HSet at(std::size_t i) const;  // i-th element in canonical order

  friend bool operator==(const HSet& a, const HSet& b) {
    return a.ctx_ == b.ctx_ && a.id_ == b.id_;
  }
  friend bool operator!=(const HSet& a, const HSet& b) { return !(a == b); }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = HSet;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = HSet;

    const_iterator(const HSet* s, std::size_t i) : set_(s), i_(i) {}
    HSet operator*() const { return set_->at(i_); }
    const_iterator& operator++() { ++i_; return *this; }
    const_iterator operator++(int) { auto c = *this; ++i_; return c; }
    bool operator==(const const_iterator& o) const { return i_ == o.i_; }
    bool operator!=(const const_iterator& o) const { return i_ != o.i_; }

   private:
    const HSet* set_;
    std::size_t i_;
  };

  const_iterator begin() const { return {this, 0}; }
  const_iterator end() const { return {this, card()}; }

 private:
  friend class Ctx;
  HSet(Ctx* ctx, std::uint32_t id) : ctx_(ctx), id_(id) {}

  Ctx* ctx_ = nullptr;
  std::uint32_t id_ = 0;
};

struct CtxOptions {
  // Total construction budget, charged one unit per interned node plus one
  // per stored element slot. Blowing it raises BudgetExceeded instead of
  // exhausting memory.
  std::size_t budget = 1'000'000;
  // Largest k accepted by nat_upto / parsed numerals.
  std::uint32_t nat_bound = 4096;
  // Largest carrier powerset() will expand.
  std::size_t powerset_bound = 20;
};

// Owns the interning tables and memo caches for one family of HSet values.
// Single writer: construction must be serialized. A frozen context rejects
// construction and may be shared read-only.
class Ctx {
 public:
  explicit Ctx(CtxOptions options = {});
  Ctx(const Ctx&) = delete;
  Ctx& operator=(const Ctx&) = delete;

  HSet empty();
  HSet make(std::vector<HSet> elems);
  HSet ordinal(std::uint32_t n);

  // Total order on canonical forms: by cardinality, then lexicographically
  // on the (canonically ordered) element lists. Returns <0, 0, >0.
  int compare(HSet a, HSet b);

  std::size_t spent() const { return spent_; }
  const CtxOptions& options() const { return options_; }

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  // Memo tables owned by the context (single-writer, like interning).
  std::unordered_map<std::uint32_t, HSet>& rank_memo() { return rank_memo_; }
  std::unordered_map<std::uint32_t, HSet>& eclose_memo() { return eclose_memo_; }

 private:
  friend class HSet;
  friend std::string print_set(HSet s);
  friend std::optional<std::pair<HSet, HSet>> try_pair(HSet p);
  friend std::int64_t ordinal_value(HSet s);

  struct Node {
    std::uint32_t off;
    std::uint32_t len;
  };

  std::size_t node_card(std::uint32_t id) const { return nodes_[id].len; }
  std::uint32_t node_child(std::uint32_t id, std::size_t i) const {
    return arena_[nodes_[id].off + i];
  }
  HSet wrap(std::uint32_t id) { return HSet(this, id); }

  std::uint32_t intern(std::vector<std::uint32_t> sorted_children);
  int compare_ids(std::uint32_t a, std::uint32_t b);
  std::int64_t ordinal_value_id(std::uint32_t id);
  void charge(std::size_t units);

  CtxOptions options_;
  bool frozen_ = false;
  std::size_t spent_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> arena_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets_;
  std::unordered_map<std::uint64_t, int> cmp_memo_;
  std::unordered_map<std::uint32_t, std::int64_t> ordv_memo_;
  std::unordered_map<std::uint32_t, HSet> rank_memo_;
  std::unordered_map<std::uint32_t, HSet> eclose_memo_;
  std::vector<std::uint32_t> ordinal_cache_;
};

using SetFn = std::function<HSet(HSet)>;
using SetPred = std::function<bool(HSet)>;
using BinFn = std::function<HSet(HSet, HSet)>;

// ZF primitives. All results are canonical values in the operands' context.
bool member(HSet x, HSet s);
bool subset(HSet a, HSet b);
bool eq(HSet a, HSet b);

HSet union2(HSet a, HSet b);
HSet inter(HSet a, HSet b);
HSet diff(HSet a, HSet b);
HSet big_union(HSet s);
HSet powerset(HSet a);
HSet cons(HSet x, HSet a);
HSet succ(HSet x);  // succ(x) = cons(x, x)

// Kuratowski pairs {{a},{a,b}}.
HSet pair(HSet a, HSet b);
std::optional<std::pair<HSet, HSet>> try_pair(HSet p);
HSet fst(HSet p);
HSet snd(HSet p);
HSet split(const BinFn& h, HSet p);

// Separation and replacement as evaluation primitives.
HSet sep(HSet s, const SetPred& pred);
HSet repl(HSet s, const SetFn& fn);

// Sets as functions: lambda-sets, application, restriction. apply realizes
// the definite description operationally and fails loudly.
HSet lambda_set(HSet a, const SetFn& body);
HSet apply(HSet f, HSet x);
HSet restrict_fn(HSet f, HSet a);

// The von Neumann numeral this set denotes, or -1.
std::int64_t ordinal_value(HSet s);

}  // namespace hfzf

#endif

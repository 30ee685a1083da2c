#ifndef HFZF_RECURSION_HPP
#define HFZF_RECURSION_HPP

#include <functional>

#include "hfzf/hset.hpp"

namespace hfzf {

// The recursive-results interface handed to a recursion body. For wfrec the
// domain is the r-predecessors of the current argument, for transrec the
// elements of it, for vrec everything of smaller rank (query-only).
class RecArgs {
 public:
  virtual ~RecArgs() = default;
  virtual HSet lookup(HSet y) const = 0;
  // The function as a set of pairs, where a set form exists.
  virtual HSet as_set() const = 0;
};

// A recursion body H(x, f); it must reach previous results only through f.
using RecBody = std::function<HSet(HSet, const RecArgs&)>;

// A recursive-results view backed by a materialized set of pairs.
class SetRecArgs : public RecArgs {
 public:
  explicit SetRecArgs(HSet fn) : fn_(fn) {}
  HSet lookup(HSet y) const override { return apply(fn_, y); }
  HSet as_set() const override { return fn_; }

 private:
  HSet fn_;
};

// n-fold union of a set.
HSet nfold_union(HSet a, std::size_t n);

// Smallest transitive set with a as a subset; iterated union until
// stationary (HF sets have finite rank). Memoized per context.
HSet eclose(HSet a);

// f is the restricted recursive function for a over r: literally evaluates
// f = lambda_{x in r^-1{a}}. H(x, f restricted to r^-1{x}).
bool is_recfun(HSet r, HSet a, const RecBody& body, HSet f);

// The unique restricted recursive function, built bottom-up along r.
// Requires a well-founded transitive relation.
HSet the_recfun(HSet r, HSet a, const RecBody& body);

// wftrec(r,a,H) = H(a, the_recfun(r,a,H)); wfrec applies wftrec to the
// transitive closure while restricting calls to immediate predecessors.
HSet wftrec(HSet r, HSet a, const RecBody& body);
HSet wfrec(HSet r, HSet a, const RecBody& body);

// Membership recursion: the interface domain is exactly the elements of a.
HSet transrec(HSet a, const RecBody& body);

// rank(a) = U_{y in a} succ(rank(y)), via transrec; memoized per context.
HSet rank(HSet a);
std::size_t rank_value(HSet a);  // the same ordinal as a machine integer

// Cumulative hierarchy stage: V[A]_n = A U U_{m<n} powerset(V[A]_m).
// Guarded at n <= 4; the next stage over the empty base already has 65536
// elements.
HSet vfrom(HSet a, std::size_t n);

// Decides x in V[A]_omega: x in A, or all elements of x are in there.
bool in_univ(HSet a, HSet x);

// Rank recursion. The extensional lambda over V_rank(x) is replaced by a
// rank-guarded query interface with memoization; lookups of rank >= the
// current argument's rank raise VrecGuardViolation.
HSet vrec(HSet a, const RecBody& body);

}  // namespace hfzf

#endif

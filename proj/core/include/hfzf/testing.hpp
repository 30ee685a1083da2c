#ifndef HFZF_TESTING_HPP
#define HFZF_TESTING_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hfzf/datatypes.hpp"
#include "hfzf/fixedpoint.hpp"
#include "hfzf/hset.hpp"
#include "hfzf/proplogic.hpp"

// Deterministic generators and brute-force oracles. The oracles deliberately
// avoid the code paths they check: closures by matrix iteration, fixedpoints
// by the intersection over all prefixedpoints, recursion by native
// structural descent.
namespace hfzf::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  bool coin() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

// --- generators -----------------------------------------------------------

HSet random_hset(Ctx& ctx, Rng& rng, std::size_t max_rank,
                 std::size_t max_width);

// Relations over the ordinals 0..points-1.
HSet random_relation(Ctx& ctx, Rng& rng, std::size_t points,
                     std::size_t max_pairs);
HSet random_acyclic_relation(Ctx& ctx, Rng& rng, std::size_t points,
                             std::size_t max_pairs);

HSet random_function(Ctx& ctx, Rng& rng, HSet domain, HSet codomain);
// Requires |codomain| >= |domain|.
HSet random_injection(Ctx& ctx, Rng& rng, HSet domain, HSet codomain);

std::vector<HSet> gen_lists(Ctx& ctx, const std::vector<HSet>& atoms,
                            std::size_t max_len);
HSet random_list(Ctx& ctx, Rng& rng, const std::vector<HSet>& atoms,
                 std::size_t max_len);

std::vector<HSet> gen_terms(Ctx& ctx, const std::vector<HSet>& labels,
                            std::size_t depth, std::size_t branch);
HSet random_term(Ctx& ctx, Rng& rng, const std::vector<HSet>& labels,
                 std::size_t depth, std::size_t branch);

// All trees and forests with up to the given number of labels.
std::vector<HSet> gen_tfs(Ctx& ctx, const std::vector<HSet>& labels,
                          std::size_t size);
HSet random_tf(Ctx& ctx, Rng& rng, const std::vector<HSet>& labels,
               std::size_t size);

// A random structurally monotone operator together with a bounding set of
// at most five elements (so the intersection oracle stays enumerable).
struct OpInstance {
  HSet bound;
  MonoOp op;
};
OpInstance random_bounded_op(Ctx& ctx, Rng& rng);

Prop random_prop(Rng& rng, std::uint32_t num_vars, std::size_t connectives);
std::vector<Prop> all_props(std::uint32_t num_vars,
                            std::size_t max_connectives);

// Randomly grown derivations, every one of which checks under the context.
std::vector<Derivation> grow_derivations(Rng& rng, const PropSet& context,
                                         std::size_t count);

// --- oracles --------------------------------------------------------------

// Reflexive/transitive closure by boolean-matrix iteration.
HSet warshall_rtrancl(HSet r);
HSet warshall_trancl(HSet r);

// The literal well-foundedness criterion: every non-empty Z subset field(r)
// has an r-minimal element. Exponential; for |field| <= 5 or so.
bool wf_by_subsets(HSet r);

// The literal lfp definition: intersection of all prefixedpoints in P(D).
HSet lfp_by_intersection(HSet d, const MonoOp& h);

bool is_bijection(HSet h, HSet x, HSet y);

// Native structural recursions, bypassing vrec/wfrec.
HSet native_list_rec(HSet c, const TernFn& h, HSet l);
HSet native_nat_rec(HSet a, const BinFn& b, HSet k);
HSet native_term_rec(const TernFn& d, HSet t);
HSet native_tf_rec(const TernFn& b, HSet c, const QuadFn& d, HSet z);

// Elements of powerset(ground) as a vector, canonical order.
std::vector<HSet> all_subsets(HSet ground);

}  // namespace hfzf::testing

#endif

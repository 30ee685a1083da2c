#ifndef HFZF_FIXEDPOINT_HPP
#define HFZF_FIXEDPOINT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hfzf/hset.hpp"

namespace hfzf {

// Injection descriptor for Part-style filters: the composition chain of sum
// injections, outermost first. {Right, Left} matches Inr(Inl(x)).
enum class Inj : std::uint8_t { Left, Right };
using InjTag = std::vector<Inj>;

bool matches_inj_tag(HSet x, const InjTag& tag);

// A closed algebra of operators on subsets, monotone by construction. Each
// AST denotes a mapping X |-> h(X); the constructors mirror the standard
// monotonicity rules, so any tree built from them (raw() excepted) is
// monotone without sampling.
class MonoOp {
 public:
  enum class Kind {
    Const,       // X |-> C
    Id,          // X |-> X
    Union,       // X |-> h1(X) U h2(X)
    Prod,        // X |-> h1(X) x h2(X)
    Sum,         // X |-> h1(X) + h2(X)   (disjoint sum)
    ComposeRel,  // X |-> r o h(X)
    IdUnion,     // X |-> id(A) U h(X)
    DiffConst,   // W |-> C - g``(D - f``W); the double difference keeps the
                 // contravariant position monotone overall
    Part,        // X |-> Part(h(X), tag)
    ListOf,      // X |-> list encodings over h(X), length <= bound
    ReplSucc,    // X |-> {0} U {succ(i) | i in X}
    FinOp,       // Z |-> {0} U U_{y in Z} U_{x in A} {cons(x,y)}
    Raw,         // unverified escape hatch; excluded from bnd_mono_check
  };

  static MonoOp constant(HSet c);
  static MonoOp identity();
  static MonoOp union_of(MonoOp a, MonoOp b);
  static MonoOp product(MonoOp a, MonoOp b);
  static MonoOp sum(MonoOp a, MonoOp b);
  static MonoOp compose_rel(HSet r, MonoOp h);
  static MonoOp id_union(HSet a, MonoOp h);
  static MonoOp diff_const(HSet outer, HSet gfun, HSet inner, HSet ffun);
  static MonoOp part_of(InjTag tag, MonoOp h);
  static MonoOp lists_of(MonoOp h, std::size_t max_len);
  static MonoOp repl_succ();
  static MonoOp fin_op(HSet a);
  static MonoOp raw(SetFn fn, std::string name);

  Kind kind() const;
  HSet eval(HSet x) const;
  bool structurally_monotone() const;
  std::string describe() const;

  struct Node;  // defined in the implementation

 private:
  explicit MonoOp(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static MonoOp from_node(std::shared_ptr<Node> node);
  std::shared_ptr<const Node> node_;
};

HSet eval_op(const MonoOp& h, HSet x);

// h(D) subset of D, together with monotonicity by construction.
bool bnd_mono_check(HSet d, const MonoOp& h);

// Least fixedpoint by Kleene iteration from the empty set. Stationary after
// at most |D| proper steps for a monotone h bounded by D; the step guard
// turns a broken (raw, non-monotone) operator into NonConvergence.
HSet lfp_iterate(HSet d, const MonoOp& h);

// h^n applied to the empty set, with no bounding set.
HSet iterate_op(Ctx& ctx, const MonoOp& h, std::size_t n);

// The general induction rule: with A = lfp(D,h) and A_psi = {x in A |
// psi(x)}, checks the closure premise "x in h(A_psi) implies psi(x)".
bool induction_check(HSet d, const MonoOp& h, const SetPred& psi);

// The rule that lfp is monotone: checks h(X) subset i(X) along the h-chain
// and that lfp(D,h) subset lfp(E,i); true iff both hold.
bool lfp_mono_check(HSet d, const MonoOp& h, HSet e, const MonoOp& i);

struct BanachParts {
  HSet xa, xb, ya, yb;
};

// Partitions X and Y for functions f : X -> Y and g : Y -> X, with
// XA = lfp(X, W |-> X - g``(Y - f``W)), XB = X - XA, YA = f``XA, YB = Y - YA.
BanachParts banach_decompose(HSet x, HSet y, HSet f, HSet g);

// For injections f, g the union restrict(f,XA) U converse(restrict(g,YB))
// is a bijection X -> Y; verified before returning.
HSet schroeder_bernstein(HSet x, HSet y, HSet f, HSet g);

}  // namespace hfzf

#endif

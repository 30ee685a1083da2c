#ifndef HFZF_DATATYPES_HPP
#define HFZF_DATATYPES_HPP

#include <optional>
#include <vector>

#include "hfzf/fixedpoint.hpp"
#include "hfzf/hset.hpp"

namespace hfzf {

using TernFn = std::function<HSet(HSet, HSet, HSet)>;
using QuadFn = std::function<HSet(HSet, HSet, HSet, HSet)>;

// Disjoint sums: Inl(a) = <0,a>, Inr(b) = <1,b>.
HSet inl(HSet a);
HSet inr(HSet b);
struct SumView {
  Inj side;
  HSet payload;
};
std::optional<SumView> try_sum(HSet z);
HSet case_sum(const SetFn& c, const SetFn& d, HSet z);

// Part(A, h): the subset of A whose elements match the injection chain.
HSet part(HSet a, const InjTag& tag);

// Lists: Nil = Inl(0), Cons(a,l) = Inr(<a,l>).
HSet nil(Ctx& ctx);
HSet cons_list(HSet a, HSet l);
struct ListView {
  bool is_cons;
  HSet head, tail;  // meaningful when is_cons
};
std::optional<ListView> try_list(HSet x);
bool is_list(const SetPred& elem, HSet x);
HSet list_case(HSet c, const BinFn& h, HSet l);

// Structural recursion on lists, routed through vrec so the rank guard is
// exercised for real.
HSet list_rec(HSet c, const TernFn& h, HSet l);
HSet list_map(const SetFn& h, HSet l);
HSet append(HSet xs, HSet ys);
HSet rev(HSet l);

// Encoding helpers.
HSet list_of(Ctx& ctx, const std::vector<HSet>& elems);
std::vector<HSet> list_elements(HSet l);
std::size_t list_length(HSet l);

// Terms: Apply(a, ts) = <a, ts> with ts a list of subterms.
HSet apply_term(HSet a, HSet ts);
struct TermView {
  HSet label;
  HSet args;  // list encoding
};
std::optional<TermView> try_term(HSet x);
bool is_term(const SetPred& label, HSet x);
HSet term_rec(const TernFn& d, HSet t);
HSet reflect(HSet t);

// Mutually recursive trees and forests:
//   Tcons(a,f) = Inl(<a,f>), Fnil = Inr(Nil), Fcons(t,f) = Inr(Cons(t,f)).
HSet tcons(HSet a, HSet f);
HSet fnil(Ctx& ctx);
HSet fcons(HSet t, HSet f);
struct TFView {
  enum class Kind : std::uint8_t { Tcons, Fnil, Fcons };
  Kind kind;
  HSet label, tree, forest;  // Tcons: label+forest; Fcons: tree+forest
};
std::optional<TFView> try_tf(HSet x);
bool is_tree(const SetPred& label, HSet x);
bool is_forest(const SetPred& label, HSet x);
bool is_tf(const SetPred& label, HSet x);

HSet tf_case(const BinFn& b, HSet c, const BinFn& d, HSet z);
HSet tf_rec(const TernFn& b, HSet c, const QuadFn& d, HSet z);
HSet tf_map(const SetFn& h, HSet z);
HSet tf_size(HSet z);
HSet tf_preorder(HSet z);

// Finite powerset as a least fixedpoint; equals powerset(A) on HF carriers.
HSet fin_enum(HSet a);

// Checks the strengthened induction premises: psi(0), and the cons step
// with the assumption x not in y discharged.
bool fin_induction_check(HSet a, const SetPred& psi);

}  // namespace hfzf

#endif

#ifndef HFZF_PROPLOGIC_HPP
#define HFZF_PROPLOGIC_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hfzf/hset.hpp"

namespace hfzf {

// Implication-only propositional formulas: Fls | #v | p => q.
class Prop {
 public:
  enum class Kind : std::uint8_t { Fls, Var, Imp };

  static Prop fls();
  static Prop var(std::uint32_t v);
  static Prop imp(Prop p, Prop q);

  Kind kind() const;
  std::uint32_t var_index() const;  // Var only
  Prop lhs() const;                 // Imp only
  Prop rhs() const;                 // Imp only

  bool operator==(const Prop& o) const;
  bool operator!=(const Prop& o) const { return !(*this == o); }
  bool operator<(const Prop& o) const;  // structural, for ordered sets

  struct Node;  // defined in the implementation

 private:
  explicit Prop(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using PropSet = std::set<Prop>;
// Atoms regarded as true; everything absent is false.
using Valuation = std::set<std::uint32_t>;

// Grammar: prop := "Fls" | "#" NAT | prop "=>" prop | "(" prop ")",
// with "=>" associating to the right.
Prop parse_prop(std::string_view text);
std::string print_prop(const Prop& p);

// Set coding of prop = {0} + nat + prop x prop, tags ordered (Fls|Var|Imp).
HSet encode_prop(Ctx& ctx, const Prop& p);
Prop decode_prop(HSet code);

bool is_true(const Prop& p, const Valuation& t);
// The {0,1}-valued realization on codes; the valuation is a set of numerals.
HSet truth_value(HSet prop_code, HSet valuation);

std::vector<std::uint32_t> prop_vars(const Prop& p);

// A finite hypothesis set together with a goal.
struct Sequent {
  PropSet context;
  Prop goal;
};

// H |= p, quantified over valuations of the occurring variables only; the
// finite-support property makes this equal to quantifying over all of nat.
bool models(const PropSet& context, const Prop& p);
bool models(const Sequent& s);
std::optional<Valuation> find_countermodel(const PropSet& context,
                                           const Prop& p);

// Hilbert-system proof trees over axioms K, S, DN and rule MP; conclusions
// are computed, never stored.
class Derivation {
 public:
  enum class Kind : std::uint8_t { Hyp, AxK, AxS, AxDN, MP };

  static Derivation hyp(Prop p);
  static Derivation ax_k(Prop p, Prop q);
  static Derivation ax_s(Prop p, Prop q, Prop r);
  static Derivation ax_dn(Prop p);
  static Derivation mp(Derivation left, Derivation right);

  Kind kind() const;
  const Prop& prop(std::size_t i) const;     // formula parameters
  const Derivation& child(std::size_t i) const;  // MP only; 0 = left

  struct Node;  // defined in the implementation

 private:
  explicit Derivation(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Shape-level conclusion; throws MalformedMP with the offending node path.
Prop conclusion(const Derivation& d);

// Full check: additionally every Hyp must be in the context. A passing
// check certifies context |- conclusion.
Prop check_derivation(const Derivation& d, const PropSet& context);

// Derived-rule transformers. Each output checks by construction.
Derivation derive_I(const Prop& p);                      // |- p => p
Derivation weaken_right(const Derivation& d, const Prop& p);
// From cons(p, H) |- q produce H |- p => q (the Deduction Theorem).
Derivation deduction(const Derivation& d, const Prop& p, const PropSet& context);
// From cons(q,H) |- p and cons(q=>Fls,H) |- p produce H |- p.
Derivation excluded_middle(const Derivation& d1, const Derivation& d2,
                           const Prop& q, const PropSet& context);

// The literal basis of p under t: one literal per occurring atom.
PropSet hyps(const Prop& p, const Valuation& t);

// Two-sided truth lemma: concludes p when is_true(p,t), else p => Fls,
// checking under hyps(p,t).
Derivation truth_lemma(const Prop& p, const Valuation& t);

// Constructive completeness: a checking derivation when context |= p,
// otherwise a falsifying valuation.
using ProofOrCountermodel = std::variant<Derivation, Valuation>;
ProofOrCountermodel prove_complete(const PropSet& context, const Prop& p);
ProofOrCountermodel prove_complete(const Sequent& s);

// The thms operator restricted to a finite candidate universe; iterates to
// stationarity or max_steps.
PropSet thms_bounded(const PropSet& context, const PropSet& candidates,
                     std::size_t max_steps);

// Line-oriented s-expression file format:
//   (hyp <prop>) (K <prop> <prop>) (S <prop> <prop> <prop>) (DN <prop>)
//   (mp <deriv> <deriv>)
std::string derivation_to_sexpr(const Derivation& d);
Derivation parse_derivation(std::string_view text);

}  // namespace hfzf

#endif

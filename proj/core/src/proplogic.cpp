#include "hfzf/proplogic.hpp"

#include <algorithm>
#include <cctype>

#include "hfzf/datatypes.hpp"
#include "hfzf/recursion.hpp"

namespace hfzf {

struct Prop::Node {
  Kind kind;
  std::uint32_t var = 0;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

// Fls is shared; formulas are small so sharing beyond that is incidental.
const std::shared_ptr<const Prop::Node>& fls_node() {
  static const std::shared_ptr<const Prop::Node> node = [] {
    auto n = std::make_shared<Prop::Node>();
    n->kind = Prop::Kind::Fls;
    return n;
  }();
  return node;
}

}  // namespace

Prop Prop::fls() { return Prop(fls_node()); }

Prop Prop::var(std::uint32_t v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = v;
  return Prop(std::move(n));
}

Prop Prop::imp(Prop p, Prop q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Imp;
  n->lhs = p.node_;
  n->rhs = q.node_;
  return Prop(std::move(n));
}

Prop::Kind Prop::kind() const { return node_->kind; }
std::uint32_t Prop::var_index() const { return node_->var; }
Prop Prop::lhs() const { return Prop(node_->lhs); }
Prop Prop::rhs() const { return Prop(node_->rhs); }

namespace {

int compare_nodes(const Prop::Node* a, const Prop::Node* b) {
  if (a == b) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  switch (a->kind) {
    case Prop::Kind::Fls:
      return 0;
    case Prop::Kind::Var:
      return a->var == b->var ? 0 : (a->var < b->var ? -1 : 1);
    case Prop::Kind::Imp: {
      int c = compare_nodes(a->lhs.get(), b->lhs.get());
      if (c != 0) return c;
      return compare_nodes(a->rhs.get(), b->rhs.get());
    }
  }
  return 0;
}

}  // namespace

bool Prop::operator==(const Prop& o) const {
  return compare_nodes(node_.get(), o.node_.get()) == 0;
}
bool Prop::operator<(const Prop& o) const {
  return compare_nodes(node_.get(), o.node_.get()) < 0;
}

namespace {

struct PropToken {
  enum Kind { LParen, RParen, Arrow, Fls, Var, Symbol, End } kind;
  std::uint32_t var = 0;
  std::string text;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const PropToken& peek() const { return tok_; }

  PropToken next() {
    PropToken t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError,
                what + " at position " + std::to_string(tok_.pos));
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    tok_ = PropToken{PropToken::End, 0, "", pos_};
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    if (c == '(') {
      tok_.kind = PropToken::LParen;
      ++pos_;
      return;
    }
    if (c == ')') {
      tok_.kind = PropToken::RParen;
      ++pos_;
      return;
    }
    if (c == '=' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      tok_.kind = PropToken::Arrow;
      pos_ += 2;
      return;
    }
    if (c == '#') {
      ++pos_;
      if (pos_ >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw Error(ErrorKind::SyntaxError,
                    "expected digits after '#' at position " +
                        std::to_string(pos_));
      std::uint64_t v = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        if (v > 0xffffffffull)
          throw Error(ErrorKind::SyntaxError, "variable index too large");
        ++pos_;
      }
      tok_.kind = PropToken::Var;
      tok_.var = static_cast<std::uint32_t>(v);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      tok_.kind = tok_.text == "Fls" ? PropToken::Fls : PropToken::Symbol;
      return;
    }
    throw Error(ErrorKind::SyntaxError, std::string("unexpected character '") +
                                            c + "' at position " +
                                            std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  PropToken tok_;
};

Prop parse_prop_expr(Lexer& lex);

Prop parse_prop_atom(Lexer& lex) {
  const PropToken& t = lex.peek();
  switch (t.kind) {
    case PropToken::Fls:
      lex.next();
      return Prop::fls();
    case PropToken::Var: {
      std::uint32_t v = lex.next().var;
      return Prop::var(v);
    }
    case PropToken::LParen: {
      lex.next();
      Prop p = parse_prop_expr(lex);
      if (lex.peek().kind != PropToken::RParen) lex.fail("expected ')'");
      lex.next();
      return p;
    }
    default:
      lex.fail("expected a proposition");
  }
}

Prop parse_prop_expr(Lexer& lex) {
  Prop p = parse_prop_atom(lex);
  if (lex.peek().kind == PropToken::Arrow) {
    lex.next();
    return Prop::imp(p, parse_prop_expr(lex));  // right-associative
  }
  return p;
}

}  // namespace

Prop parse_prop(std::string_view text) {
  Lexer lex(text);
  Prop p = parse_prop_expr(lex);
  if (lex.peek().kind != PropToken::End) lex.fail("trailing input");
  return p;
}

std::string print_prop(const Prop& p) {
  switch (p.kind()) {
    case Prop::Kind::Fls:
      return "Fls";
    case Prop::Kind::Var:
      return "#" + std::to_string(p.var_index());
    case Prop::Kind::Imp: {
      std::string l = print_prop(p.lhs());
      if (p.lhs().kind() == Prop::Kind::Imp) l = "(" + l + ")";
      return l + " => " + print_prop(p.rhs());
    }
  }
  return "?";
}

HSet encode_prop(Ctx& ctx, const Prop& p) {
  switch (p.kind()) {
    case Prop::Kind::Fls:
      return inl(ctx.empty());
    case Prop::Kind::Var:
      return inr(inl(ctx.ordinal(p.var_index())));
    case Prop::Kind::Imp:
      return inr(inr(pair(encode_prop(ctx, p.lhs()), encode_prop(ctx, p.rhs()))));
  }
  throw Error(ErrorKind::MalformedFormula, "unreachable");
}

Prop decode_prop(HSet code) {
  auto outer = try_sum(code);
  if (!outer) throw Error(ErrorKind::NotAPropCode, "no outer tag");
  if (outer->side == Inj::Left) {
    if (outer->payload.card() != 0)
      throw Error(ErrorKind::NotAPropCode, "Fls payload must be empty");
    return Prop::fls();
  }
  auto inner = try_sum(outer->payload);
  if (!inner) throw Error(ErrorKind::NotAPropCode, "no inner tag");
  if (inner->side == Inj::Left) {
    std::int64_t v = ordinal_value(inner->payload);
    if (v < 0)
      throw Error(ErrorKind::NotAPropCode, "variable payload not a numeral");
    return Prop::var(static_cast<std::uint32_t>(v));
  }
  auto p = try_pair(inner->payload);
  if (!p) throw Error(ErrorKind::NotAPropCode, "implication payload not a pair");
  return Prop::imp(decode_prop(p->first), decode_prop(p->second));
}

bool is_true(const Prop& p, const Valuation& t) {
  switch (p.kind()) {
    case Prop::Kind::Fls:
      return false;
    case Prop::Kind::Var:
      return t.count(p.var_index()) != 0;
    case Prop::Kind::Imp:
      return !is_true(p.lhs(), t) || is_true(p.rhs(), t);
  }
  return false;
}

HSet truth_value(HSet prop_code, HSet valuation) {
  // {0,1}-valued recursion on the code itself, by rank recursion
  return vrec(prop_code, [&](HSet code, const RecArgs& f) -> HSet {
    Ctx& ctx = code.ctx();
    auto outer = try_sum(code);
    if (!outer) throw Error(ErrorKind::NotAPropCode, "no outer tag");
    if (outer->side == Inj::Left) return ctx.ordinal(0);
    auto inner = try_sum(outer->payload);
    if (!inner) throw Error(ErrorKind::NotAPropCode, "no inner tag");
    if (inner->side == Inj::Left)
      return member(inner->payload, valuation) ? ctx.ordinal(1)
                                               : ctx.ordinal(0);
    auto p = try_pair(inner->payload);
    if (!p) throw Error(ErrorKind::NotAPropCode, "bad implication payload");
    HSet lv = f.lookup(p->first);
    HSet rv = f.lookup(p->second);
    bool result = ordinal_value(lv) == 0 || ordinal_value(rv) == 1;
    return ctx.ordinal(result ? 1 : 0);
  });
}

namespace {

void collect_vars(const Prop& p, std::vector<std::uint32_t>& out) {
  switch (p.kind()) {
    case Prop::Kind::Fls:
      return;
    case Prop::Kind::Var:
      out.push_back(p.var_index());
      return;
    case Prop::Kind::Imp:
      collect_vars(p.lhs(), out);
      collect_vars(p.rhs(), out);
      return;
  }
}

}  // namespace

std::vector<std::uint32_t> prop_vars(const Prop& p) {
  std::vector<std::uint32_t> vs;
  collect_vars(p, vs);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::optional<Valuation> find_countermodel(const PropSet& context,
                                           const Prop& p) {
  std::vector<std::uint32_t> vs = prop_vars(p);
  for (const Prop& q : context) {
    std::vector<std::uint32_t> more = prop_vars(q);
    vs.insert(vs.end(), more.begin(), more.end());
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (vs.size() >= 24)
    throw Error(ErrorKind::BoundExceeded, "too many variables to enumerate");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vs.size()); ++mask) {
    Valuation t;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) t.insert(vs[i]);
    bool context_true = true;
    for (const Prop& q : context)
      if (!is_true(q, t)) {
        context_true = false;
        break;
      }
    if (context_true && !is_true(p, t)) return t;
  }
  return std::nullopt;
}

bool models(const PropSet& context, const Prop& p) {
  return !find_countermodel(context, p).has_value();
}

bool models(const Sequent& s) { return models(s.context, s.goal); }

struct Derivation::Node {
  Kind kind;
  std::vector<Prop> props;
  std::vector<Derivation> children;
};

Derivation Derivation::hyp(Prop p) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Hyp;
  n->props = {std::move(p)};
  return Derivation(std::move(n));
}
Derivation Derivation::ax_k(Prop p, Prop q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::AxK;
  n->props = {std::move(p), std::move(q)};
  return Derivation(std::move(n));
}
Derivation Derivation::ax_s(Prop p, Prop q, Prop r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::AxS;
  n->props = {std::move(p), std::move(q), std::move(r)};
  return Derivation(std::move(n));
}
Derivation Derivation::ax_dn(Prop p) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::AxDN;
  n->props = {std::move(p)};
  return Derivation(std::move(n));
}
Derivation Derivation::mp(Derivation left, Derivation right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::MP;
  n->children = {std::move(left), std::move(right)};
  return Derivation(std::move(n));
}

Derivation::Kind Derivation::kind() const { return node_->kind; }
const Prop& Derivation::prop(std::size_t i) const { return node_->props[i]; }
const Derivation& Derivation::child(std::size_t i) const {
  return node_->children[i];
}

namespace {

Prop check_node(const Derivation& d, const PropSet* context,
                std::string& path) {
  switch (d.kind()) {
    case Derivation::Kind::Hyp: {
      const Prop& p = d.prop(0);
      if (context && !context->count(p))
        throw Error(ErrorKind::HypNotInContext,
                    print_prop(p) + " at node " + (path.empty() ? "/" : path));
      return p;
    }
    case Derivation::Kind::AxK: {
      const Prop &p = d.prop(0), &q = d.prop(1);
      return Prop::imp(p, Prop::imp(q, p));
    }
    case Derivation::Kind::AxS: {
      const Prop &p = d.prop(0), &q = d.prop(1), &r = d.prop(2);
      return Prop::imp(Prop::imp(p, Prop::imp(q, r)),
                       Prop::imp(Prop::imp(p, q), Prop::imp(p, r)));
    }
    case Derivation::Kind::AxDN: {
      const Prop& p = d.prop(0);
      Prop np = Prop::imp(p, Prop::fls());
      return Prop::imp(Prop::imp(np, Prop::fls()), p);
    }
    case Derivation::Kind::MP: {
      std::size_t mark = path.size();
      path += "/0";
      Prop left = check_node(d.child(0), context, path);
      path.resize(mark);
      path += "/1";
      Prop right = check_node(d.child(1), context, path);
      path.resize(mark);
      if (left.kind() != Prop::Kind::Imp || left.lhs() != right)
        throw Error(ErrorKind::MalformedMP,
                    "premise shapes do not match at node " +
                        (path.empty() ? std::string("/") : path));
      return left.rhs();
    }
  }
  throw Error(ErrorKind::MalformedMP, "unreachable");
}

}  // namespace

Prop conclusion(const Derivation& d) {
  std::string path;
  return check_node(d, nullptr, path);
}

Prop check_derivation(const Derivation& d, const PropSet& context) {
  std::string path;
  return check_node(d, &context, path);
}

Derivation derive_I(const Prop& p) {
  Prop pp = Prop::imp(p, p);
  return Derivation::mp(
      Derivation::mp(Derivation::ax_s(p, pp, p), Derivation::ax_k(p, pp)),
      Derivation::ax_k(p, p));
}

Derivation weaken_right(const Derivation& d, const Prop& p) {
  Prop q = conclusion(d);
  return Derivation::mp(Derivation::ax_k(q, p), d);
}

namespace {

// Returns the transformed derivation plus the conclusion of the original
// subtree, so nothing is recomputed along the way.
struct DeductionStep {
  Derivation out;
  Prop concl;
};

DeductionStep deduction_impl(const Derivation& d, const Prop& p) {
  switch (d.kind()) {
    case Derivation::Kind::Hyp: {
      const Prop& x = d.prop(0);
      if (x == p) return {derive_I(p), x};
      return {weaken_right(d, p), x};
    }
    case Derivation::Kind::AxK:
    case Derivation::Kind::AxS:
    case Derivation::Kind::AxDN: {
      Prop c = conclusion(d);
      return {Derivation::mp(Derivation::ax_k(c, p), d), c};
    }
    case Derivation::Kind::MP: {
      DeductionStep e1 = deduction_impl(d.child(0), p);
      DeductionStep e2 = deduction_impl(d.child(1), p);
      const Prop& x = e1.concl.lhs();
      const Prop& y = e1.concl.rhs();
      return {Derivation::mp(
                  Derivation::mp(Derivation::ax_s(p, x, y), e1.out), e2.out),
              y};
    }
  }
  throw Error(ErrorKind::MalformedMP, "unreachable");
}

}  // namespace

Derivation deduction(const Derivation& d, const Prop& p,
                     const PropSet& context) {
  PropSet extended = context;
  extended.insert(p);
  check_derivation(d, extended);  // validate the premise
  return deduction_impl(d, p).out;
}

namespace {

// From f : a => b and g : b => c (under context), a derivation of a => c.
Derivation compose_imp(const Derivation& f, const Derivation& g,
                       const PropSet& context) {
  Prop fab = conclusion(f);
  const Prop& a = fab.lhs();
  Derivation chain =
      Derivation::mp(g, Derivation::mp(f, Derivation::hyp(a)));
  return deduction(chain, a, context);
}

// Fls => q, via K and DN.
Derivation ex_falso(const Prop& q) {
  Prop nq = Prop::imp(q, Prop::fls());
  Derivation k = Derivation::ax_k(Prop::fls(), nq);
  Derivation dn = Derivation::ax_dn(q);
  return compose_imp(k, dn, PropSet{});
}

// The closed combinator |- (q => p) => ((q => Fls) => p) => p. Keeping the
// case split in one fixed template keeps repeated eliminations from
// inflating the proof: each step costs 3x its branches plus a constant.
Derivation em_combinator(const Prop& q, const Prop& p) {
  Prop bot = Prop::fls();
  Prop nq = Prop::imp(q, bot);
  Prop np = Prop::imp(p, bot);
  Prop qp = Prop::imp(q, p);
  Prop nqp = Prop::imp(nq, p);
  PropSet h2{qp, nqp};
  PropSet h3 = h2;
  h3.insert(np);
  // under {q=>p, (q=>Fls)=>p, p=>Fls}: a contradiction
  Derivation s3 = compose_imp(Derivation::hyp(qp), Derivation::hyp(np), h3);
  Derivation s4 = Derivation::mp(Derivation::hyp(nqp), s3);  // p
  Derivation s5 = Derivation::mp(Derivation::hyp(np), s4);   // Fls
  Derivation d4 = deduction(s5, np, h2);                     // (p=>Fls)=>Fls
  Derivation dp = Derivation::mp(Derivation::ax_dn(p), d4);  // p
  Derivation d5 = deduction(dp, nqp, PropSet{qp});
  return deduction(d5, qp, PropSet{});
}

}  // namespace

Derivation excluded_middle(const Derivation& d1, const Derivation& d2,
                           const Prop& q, const PropSet& context) {
  PropSet with_q = context;
  with_q.insert(q);
  Prop p = check_derivation(d1, with_q);
  Prop nq = Prop::imp(q, Prop::fls());
  PropSet with_nq = context;
  with_nq.insert(nq);
  Prop p2 = check_derivation(d2, with_nq);
  if (p != p2)
    throw Error(ErrorKind::MalformedMP,
                "excluded_middle: branch conclusions differ");

  Derivation e1 = deduction(d1, q, context);   // q => p
  Derivation e2 = deduction(d2, nq, context);  // (q => Fls) => p
  return Derivation::mp(Derivation::mp(em_combinator(q, p), e1), e2);
}

PropSet hyps(const Prop& p, const Valuation& t) {
  switch (p.kind()) {
    case Prop::Kind::Fls:
      return {};
    case Prop::Kind::Var:
      if (t.count(p.var_index())) return {p};
      return {Prop::imp(p, Prop::fls())};
    case Prop::Kind::Imp: {
      PropSet l = hyps(p.lhs(), t);
      PropSet r = hyps(p.rhs(), t);
      l.insert(r.begin(), r.end());
      return l;
    }
  }
  return {};
}

Derivation truth_lemma(const Prop& p, const Valuation& t) {
  switch (p.kind()) {
    case Prop::Kind::Fls:
      return derive_I(Prop::fls());  // Fls => Fls
    case Prop::Kind::Var:
      if (t.count(p.var_index())) return Derivation::hyp(p);
      return Derivation::hyp(Prop::imp(p, Prop::fls()));
    case Prop::Kind::Imp: {
      const Prop& a = p.lhs();
      const Prop& b = p.rhs();
      PropSet basis = hyps(p, t);
      if (is_true(p, t)) {
        if (!is_true(a, t)) {
          // from a => Fls conclude a => b through ex falso
          Derivation na = truth_lemma(a, t);
          Derivation fls_d = Derivation::mp(na, Derivation::hyp(a));
          Derivation b_d = Derivation::mp(ex_falso(b), fls_d);
          return deduction(b_d, a, basis);
        }
        Derivation db = truth_lemma(b, t);
        return weaken_right(db, a);
      }
      // a true and b false: conclude (a => b) => Fls
      Derivation da = truth_lemma(a, t);
      Derivation ndb = truth_lemma(b, t);
      Derivation b_d = Derivation::mp(Derivation::hyp(p), da);
      Derivation fls_d = Derivation::mp(ndb, b_d);
      return deduction(fls_d, p, basis);
    }
  }
  throw Error(ErrorKind::MalformedFormula, "unreachable");
}

ProofOrCountermodel prove_complete(const PropSet& context, const Prop& p) {
  if (auto cm = find_countermodel(context, p)) return *cm;

  // curry the (finite, canonically ordered) context into the goal
  std::vector<Prop> hs(context.begin(), context.end());
  Prop goal = p;
  for (auto it = hs.rbegin(); it != hs.rend(); ++it)
    goal = Prop::imp(*it, goal);

  // goal is valid; eliminate its variables one by one. Each elimination
  // roughly triples the proof while halving the table, so the overall cost
  // is about 6^n; beyond six variables the proof object stops fitting.
  std::vector<std::uint32_t> vs = prop_vars(goal);
  if (vs.size() > 6)
    throw Error(ErrorKind::BoundExceeded,
                "proof construction over " + std::to_string(vs.size()) +
                    " variables exceeds the guard of 6");
  const std::size_t n = vs.size();
  std::vector<Derivation> table;
  table.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Valuation t;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) t.insert(vs[i]);
    table.push_back(truth_lemma(goal, t));
  }
  for (std::size_t i = n; i-- > 0;) {
    std::vector<Derivation> next;
    next.reserve(std::size_t{1} << i);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << i); ++mask) {
      Valuation t;
      PropSet rest;
      for (std::size_t j = 0; j < i; ++j) {
        Prop vj = Prop::var(vs[j]);
        if (mask & (std::uint64_t{1} << j)) {
          t.insert(vs[j]);
          rest.insert(vj);
        } else {
          rest.insert(Prop::imp(vj, Prop::fls()));
        }
      }
      next.push_back(excluded_middle(table[mask | (std::uint64_t{1} << i)],
                                     table[mask], Prop::var(vs[i]), rest));
    }
    table = std::move(next);
  }
  Derivation d = table[0];  // |- goal under the empty context
  for (const Prop& h : hs) d = Derivation::mp(d, Derivation::hyp(h));
  return d;
}

ProofOrCountermodel prove_complete(const Sequent& s) {
  return prove_complete(s.context, s.goal);
}

namespace {

bool matches_axiom(const Prop& c) {
  if (c.kind() != Prop::Kind::Imp) return false;
  // K: a => b => a
  if (c.rhs().kind() == Prop::Kind::Imp && c.rhs().rhs() == c.lhs()) return true;
  // S: (a => b => c) => (a => b) => a => c
  do {
    const Prop& l = c.lhs();
    if (l.kind() != Prop::Kind::Imp) break;
    if (l.rhs().kind() != Prop::Kind::Imp) break;
    const Prop& a = l.lhs();
    const Prop& b = l.rhs().lhs();
    const Prop& cc = l.rhs().rhs();
    const Prop& r = c.rhs();
    if (r.kind() != Prop::Kind::Imp) break;
    if (r.lhs() != Prop::imp(a, b)) break;
    if (r.rhs() != Prop::imp(a, cc)) break;
    return true;
  } while (false);
  // DN: ((a => Fls) => Fls) => a
  do {
    const Prop& l = c.lhs();
    if (l.kind() != Prop::Kind::Imp) break;
    if (!(l.rhs() == Prop::fls())) break;
    if (l.lhs() != Prop::imp(c.rhs(), Prop::fls())) break;
    return true;
  } while (false);
  return false;
}

}  // namespace

PropSet thms_bounded(const PropSet& context, const PropSet& candidates,
                     std::size_t max_steps) {
  PropSet base;
  for (const Prop& c : candidates) {
    if (context.count(c) || matches_axiom(c)) base.insert(c);
  }
  PropSet x;
  for (std::size_t step = 0; step < max_steps; ++step) {
    // the literal operator: base axioms plus one round of modus ponens
    PropSet next = base;
    for (const Prop& maj : x) {
      if (maj.kind() != Prop::Kind::Imp) continue;
      if (x.count(maj.lhs()) && candidates.count(maj.rhs()))
        next.insert(maj.rhs());
    }
    if (next == x) break;
    x = std::move(next);
  }
  return x;
}

namespace {

Derivation parse_deriv(Lexer& lex) {
  if (lex.peek().kind != PropToken::LParen) lex.fail("expected '('");
  lex.next();
  if (lex.peek().kind != PropToken::Symbol && lex.peek().kind != PropToken::Fls)
    lex.fail("expected a node head");
  std::string head = lex.next().text;
  Derivation result = [&]() -> Derivation {
    if (head == "hyp") return Derivation::hyp(parse_prop_expr(lex));
    if (head == "K") {
      Prop p = parse_prop_expr(lex);
      Prop q = parse_prop_expr(lex);
      return Derivation::ax_k(p, q);
    }
    if (head == "S") {
      Prop p = parse_prop_expr(lex);
      Prop q = parse_prop_expr(lex);
      Prop r = parse_prop_expr(lex);
      return Derivation::ax_s(p, q, r);
    }
    if (head == "DN") return Derivation::ax_dn(parse_prop_expr(lex));
    if (head == "mp") {
      Derivation l = parse_deriv(lex);
      Derivation r = parse_deriv(lex);
      return Derivation::mp(l, r);
    }
    lex.fail("unknown node head '" + head + "'");
  }();
  if (lex.peek().kind != PropToken::RParen) lex.fail("expected ')'");
  lex.next();
  return result;
}

void write_deriv(const Derivation& d, std::string& out, int indent) {
  auto pad = [&] { out.append(static_cast<std::size_t>(indent) * 2, ' '); };
  pad();
  switch (d.kind()) {
    case Derivation::Kind::Hyp:
      out += "(hyp " + print_prop(d.prop(0)) + ")";
      return;
    case Derivation::Kind::AxK:
      out += "(K " + print_prop(d.prop(0)) + " " + print_prop(d.prop(1)) + ")";
      return;
    case Derivation::Kind::AxS:
      out += "(S " + print_prop(d.prop(0)) + " " + print_prop(d.prop(1)) +
             " " + print_prop(d.prop(2)) + ")";
      return;
    case Derivation::Kind::AxDN:
      out += "(DN " + print_prop(d.prop(0)) + ")";
      return;
    case Derivation::Kind::MP:
      out += "(mp\n";
      write_deriv(d.child(0), out, indent + 1);
      out += "\n";
      write_deriv(d.child(1), out, indent + 1);
      out += ")";
      return;
  }
}

}  // namespace

std::string derivation_to_sexpr(const Derivation& d) {
  std::string out;
  write_deriv(d, out, 0);
  out += "\n";
  return out;
}

Derivation parse_derivation(std::string_view text) {
  Lexer lex(text);
  Derivation d = parse_deriv(lex);
  if (lex.peek().kind != PropToken::End) lex.fail("trailing input");
  return d;
}

}  // namespace hfzf

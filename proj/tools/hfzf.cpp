#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hfzf/datatypes.hpp"
#include "hfzf/fixedpoint.hpp"
#include "hfzf/grammar.hpp"
#include "hfzf/ordinals.hpp"
#include "hfzf/proplogic.hpp"
#include "hfzf/recursion.hpp"
#include "hfzf/relations.hpp"
#include "hfzf/selftest.hpp"

using namespace hfzf;

namespace {

// exit codes: 0 ok, 1 semantic negative, 2 input error, 3 budget exceeded
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

struct Output {
  bool sexpr = false;

  void value(const std::string& head, const std::string& payload) const {
    if (sexpr)
      std::cout << "(" << head << " \"" << payload << "\")\n";
    else
      std::cout << payload << "\n";
  }

  void flag(const std::string& head, bool v) const {
    if (sexpr)
      std::cout << "(" << head << " " << (v ? "true" : "false") << ")\n";
    else
      std::cout << (v ? "true" : "false") << "\n";
  }
};

std::string valuation_text(const Valuation& t) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t v : t) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string list_text(HSet l) {
  std::string out = "[";
  bool first = true;
  for (HSet e : list_elements(l)) {
    if (!first) out += ",";
    out += print_set(e);
    first = false;
  }
  return out + "]";
}

PropSet read_hyp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::SyntaxError, "cannot open hypothesis file " + path);
  PropSet out;
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (!trimmed.empty() && trimmed.back() == '\r') trimmed.pop_back();
    if (trimmed.empty()) continue;
    out.insert(parse_prop(trimmed));
  }
  return out;
}

// builtin operator specs for the lfp subcommand:
//   replsucc | const:<set> | finop:<set> | closure:<set>
MonoOp parse_op_spec(Ctx& ctx, const std::string& spec) {
  if (spec == "replsucc") return MonoOp::repl_succ();
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string head = spec.substr(0, colon);
    std::string arg = spec.substr(colon + 1);
    if (head == "const") return MonoOp::constant(parse_set(ctx, arg));
    if (head == "finop") return MonoOp::fin_op(parse_set(ctx, arg));
    if (head == "closure") {
      HSet r = parse_set(ctx, arg);
      require_relation(r, "closure operator");
      return MonoOp::id_union(field(r),
                              MonoOp::compose_rel(r, MonoOp::identity()));
    }
  }
  throw Error(ErrorKind::SyntaxError, "unknown operator spec: " + spec);
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::BoundExceeded:
      return kBudget;
    default:
      return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hfzf - a workbench for hereditarily finite set theory"};
  app.name("hfzf");
  app.fallthrough();

  std::size_t budget = 1'000'000;
  std::uint64_t seed = 1;
  std::string format = "text";
  app.add_option("--budget", budget, "element budget for set construction");
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--format", format, "output format: text or sexpr")
      ->check(CLI::IsMember({"text", "sexpr"}));

  std::string arg_set, arg_a, arg_k, arg_n, arg_body = "add";
  std::string arg_op, arg_bound, arg_x, arg_y, arg_f, arg_g, arg_base = "{}";
  std::string arg_tf_op, arg_suite, arg_prop, arg_hfile, arg_out, arg_deriv;

  CLI::App* c_rtrancl =
      app.add_subcommand("rtrancl", "reflexive/transitive closure of a relation");
  c_rtrancl->add_option("set", arg_set)->required();
  CLI::App* c_memrel =
      app.add_subcommand("memrel", "membership relation on a set");
  c_memrel->add_option("set", arg_set)->required();
  CLI::App* c_wf = app.add_subcommand("wf", "well-foundedness of a relation");
  c_wf->add_option("set", arg_set)->required();
  CLI::App* c_ord =
      app.add_subcommand("ord", "transitive-set/ordinal/limit report");
  c_ord->add_option("set", arg_set)->required();
  CLI::App* c_natrec =
      app.add_subcommand("natrec", "primitive recursion with a builtin body");
  c_natrec->add_option("a", arg_a)->required();
  c_natrec->add_option("k", arg_k)->required();
  c_natrec->add_option("--body", arg_body, "add or double")
      ->check(CLI::IsMember({"add", "double"}));
  CLI::App* c_lfp =
      app.add_subcommand("lfp", "least fixedpoint of a builtin operator");
  c_lfp->add_option("--op", arg_op,
                    "replsucc | const:<set> | finop:<set> | closure:<set>")
      ->required();
  c_lfp->add_option("--bound", arg_bound, "bounding set")->required();
  CLI::App* c_banach =
      app.add_subcommand("banach", "Banach decomposition and the bijection");
  c_banach->add_option("--X", arg_x)->required();
  c_banach->add_option("--Y", arg_y)->required();
  c_banach->add_option("--f", arg_f)->required();
  c_banach->add_option("--g", arg_g)->required();
  CLI::App* c_rank = app.add_subcommand("rank", "ordinal rank of a set");
  c_rank->add_option("set", arg_set)->required();
  CLI::App* c_eclose =
      app.add_subcommand("eclose", "transitive closure of a set");
  c_eclose->add_option("set", arg_set)->required();
  CLI::App* c_vfrom =
      app.add_subcommand("vfrom", "cumulative hierarchy stage V[A]_n");
  c_vfrom->add_option("set", arg_set)->required();
  c_vfrom->add_option("n", arg_n)->required();
  CLI::App* c_inuniv = app.add_subcommand("inuniv", "membership in V[A]_omega");
  c_inuniv->add_option("--A", arg_base, "base set");
  c_inuniv->add_option("set", arg_set)->required();
  CLI::App* c_list =
      app.add_subcommand("list", "recognize and pretty-print a list encoding");
  c_list->add_option("set", arg_set)->required();
  CLI::App* c_reflect =
      app.add_subcommand("reflect", "reflect a term about its vertical axis");
  c_reflect->add_option("set", arg_set)->required();
  CLI::App* c_tf = app.add_subcommand("tf", "tree/forest operations");
  c_tf->add_option("--op", arg_tf_op, "map | size | preorder")
      ->required()
      ->check(CLI::IsMember({"map", "size", "preorder"}));
  c_tf->add_option("set", arg_set)->required();
  CLI::App* c_fin = app.add_subcommand("fin", "finite powerset of a set");
  c_fin->add_option("set", arg_set)->required();
  CLI::App* c_selftest =
      app.add_subcommand("selftest", "run the property suites");
  c_selftest
      ->add_option("suite", arg_suite,
                   "core|fixedpoint|recursion|datatypes|logic|all")
      ->required();

  CLI::App* c_prop =
      app.add_subcommand("prop", "propositional logic commands");
  c_prop->require_subcommand(1);
  CLI::App* p_valid = c_prop->add_subcommand("valid", "decide logical consequence");
  p_valid->add_option("-H,--hyps", arg_hfile, "file with one hypothesis per line");
  p_valid->add_option("prop", arg_prop)->required();
  CLI::App* p_prove = c_prop->add_subcommand(
      "prove", "produce a checkable derivation or a countermodel");
  p_prove->add_option("-H,--hyps", arg_hfile);
  p_prove->add_option("-o,--out", arg_out, "write the derivation to this file");
  p_prove->add_option("prop", arg_prop)->required();
  CLI::App* p_check = c_prop->add_subcommand("check", "check a derivation file");
  p_check->add_option("file", arg_deriv)->required();
  p_check->add_option("-H,--hyps", arg_hfile);

  // allow invocation as "prop ..." via a symlink or renamed binary
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string argv0 = std::filesystem::path(argv[0]).filename().string();
  if (argv0 == "prop") args.insert(args.begin(), "prop");

  try {
    std::reverse(args.begin(), args.end());  // CLI11 wants a reversed vector
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  }

  Output out{format == "sexpr"};
  CtxOptions options;
  options.budget = budget;

  try {
    Ctx ctx(options);
    if (*c_rtrancl) {
      HSet r = parse_set(ctx, arg_set);
      require_relation(r, "rtrancl");
      out.value("rtrancl", print_set(rtrancl(r)));
      return kOk;
    }
    if (*c_memrel) {
      out.value("memrel", print_set(memrel(parse_set(ctx, arg_set))));
      return kOk;
    }
    if (*c_wf) {
      HSet r = parse_set(ctx, arg_set);
      require_relation(r, "wf");
      bool v = is_wf(r);
      out.flag("wf", v);
      return v ? kOk : kNegative;
    }
    if (*c_ord) {
      HSet a = parse_set(ctx, arg_set);
      bool ts = is_transset(a), ord = is_ord(a), lim = is_limit(a);
      if (out.sexpr) {
        std::cout << "(ord (transset " << (ts ? "true" : "false")
                  << ") (ordinal " << (ord ? "true" : "false") << ") (limit "
                  << (lim ? "true" : "false") << "))\n";
      } else {
        std::cout << "transset=" << (ts ? "true" : "false") << "\n"
                  << "ord=" << (ord ? "true" : "false") << "\n"
                  << "limit=" << (lim ? "true" : "false") << "\n";
      }
      return ord ? kOk : kNegative;
    }
    if (*c_natrec) {
      HSet a = parse_set(ctx, arg_a);
      HSet k = parse_set(ctx, arg_k);
      BinFn body = arg_body == "add"
                       ? BinFn([](HSet, HSet r) { return succ(r); })
                       : BinFn([](HSet, HSet r) { return succ(succ(r)); });
      out.value("natrec", print_set(nat_rec(a, body, k)));
      return kOk;
    }
    if (*c_lfp) {
      HSet bound = parse_set(ctx, arg_bound);
      MonoOp op = parse_op_spec(ctx, arg_op);
      out.value("lfp", print_set(lfp_iterate(bound, op)));
      return kOk;
    }
    if (*c_banach) {
      HSet x = parse_set(ctx, arg_x), y = parse_set(ctx, arg_y);
      HSet f = parse_set(ctx, arg_f), g = parse_set(ctx, arg_g);
      BanachParts parts = banach_decompose(x, y, f, g);
      std::string bij;
      if (is_injective(f) && is_injective(g))
        bij = print_set(schroeder_bernstein(x, y, f, g));
      if (out.sexpr) {
        std::cout << "(banach (xa \"" << print_set(parts.xa) << "\") (xb \""
                  << print_set(parts.xb) << "\") (ya \"" << print_set(parts.ya)
                  << "\") (yb \"" << print_set(parts.yb) << "\")";
        if (!bij.empty()) std::cout << " (bij \"" << bij << "\")";
        std::cout << ")\n";
      } else {
        std::cout << "XA=" << print_set(parts.xa) << "\n"
                  << "XB=" << print_set(parts.xb) << "\n"
                  << "YA=" << print_set(parts.ya) << "\n"
                  << "YB=" << print_set(parts.yb) << "\n";
        if (!bij.empty()) std::cout << "bij=" << bij << "\n";
      }
      return kOk;
    }
    if (*c_rank) {
      out.value("rank", print_set(rank(parse_set(ctx, arg_set))));
      return kOk;
    }
    if (*c_eclose) {
      out.value("eclose", print_set(eclose(parse_set(ctx, arg_set))));
      return kOk;
    }
    if (*c_vfrom) {
      HSet a = parse_set(ctx, arg_set);
      std::size_t n = 0;
      try {
        n = std::stoul(arg_n);
      } catch (const std::exception&) {
        throw Error(ErrorKind::SyntaxError, "stage must be a number");
      }
      out.value("vfrom", print_set(vfrom(a, n)));
      return kOk;
    }
    if (*c_inuniv) {
      HSet a = parse_set(ctx, arg_base);
      HSet x = parse_set(ctx, arg_set);
      bool v = in_univ(a, x);
      out.flag("inuniv", v);
      return v ? kOk : kNegative;
    }
    if (*c_list) {
      HSet x = parse_set(ctx, arg_set);
      if (!is_list([](HSet) { return true; }, x)) {
        out.value("list", "not a list");
        return kNegative;
      }
      out.value("list", list_text(x));
      return kOk;
    }
    if (*c_reflect) {
      HSet t = parse_set(ctx, arg_set);
      if (!is_term([](HSet) { return true; }, t))
        throw Error(ErrorKind::NotATerm, "input is not a term encoding");
      out.value("reflect", print_set(reflect(t)));
      return kOk;
    }
    if (*c_tf) {
      HSet z = parse_set(ctx, arg_set);
      if (!is_tf([](HSet) { return true; }, z))
        throw Error(ErrorKind::NotATF, "input is not a tree/forest encoding");
      if (arg_tf_op == "map")
        out.value("tf", print_set(tf_map([](HSet u) { return succ(u); }, z)));
      else if (arg_tf_op == "size")
        out.value("tf", print_set(tf_size(z)));
      else
        out.value("tf", list_text(tf_preorder(z)));
      return kOk;
    }
    if (*c_fin) {
      out.value("fin", print_set(fin_enum(parse_set(ctx, arg_set))));
      return kOk;
    }
    if (*c_selftest) {
      bool ok = selftest::run(arg_suite, seed, std::cout);
      return ok ? kOk : kNegative;
    }
    if (*p_valid) {
      PropSet hs = arg_hfile.empty() ? PropSet{} : read_hyp_file(arg_hfile);
      Prop p = parse_prop(arg_prop);
      if (auto t = find_countermodel(hs, p)) {
        if (out.sexpr)
          std::cout << "(falsifiable \"" << valuation_text(*t) << "\")\n";
        else
          std::cout << "falsifiable: " << valuation_text(*t) << "\n";
        return kNegative;
      }
      if (out.sexpr)
        std::cout << "(valid)\n";
      else
        std::cout << "valid\n";
      return kOk;
    }
    if (*p_prove) {
      PropSet hs = arg_hfile.empty() ? PropSet{} : read_hyp_file(arg_hfile);
      Prop p = parse_prop(arg_prop);
      auto result = prove_complete(hs, p);
      if (std::holds_alternative<Valuation>(result)) {
        const Valuation& t = std::get<Valuation>(result);
        if (out.sexpr)
          std::cout << "(falsifiable \"" << valuation_text(t) << "\")\n";
        else
          std::cout << "falsifiable: " << valuation_text(t) << "\n";
        return kNegative;
      }
      const Derivation& d = std::get<Derivation>(result);
      std::string sx = derivation_to_sexpr(d);
      if (!arg_out.empty()) {
        std::ofstream f(arg_out);
        if (!f) throw Error(ErrorKind::SyntaxError, "cannot write " + arg_out);
        f << sx;
      }
      std::cout << sx;
      return kOk;
    }
    if (*p_check) {
      PropSet hs = arg_hfile.empty() ? PropSet{} : read_hyp_file(arg_hfile);
      std::ifstream f(arg_deriv);
      if (!f) throw Error(ErrorKind::SyntaxError, "cannot open " + arg_deriv);
      std::stringstream buffer;
      buffer << f.rdbuf();
      Derivation d = parse_derivation(buffer.str());
      Prop concl = check_derivation(d, hs);
      out.value("check", print_prop(concl));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  }
  std::cerr << app.help();
  return kInputError;
}

#include "hfzf/grammar.hpp"

#include <cctype>

namespace hfzf {

namespace {

class SetParser {
 public:
  explicit SetParser(std::string_view text) : text_(text) {}

  SetExpr parse() {
    SetExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorKind::SyntaxError,
                what + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  SetExpr parse_expr() {
    char c = peek();
    if (c == '{') {
      ++pos_;
      SetExpr e;
      e.kind = SetExpr::Kind::Braces;
      if (peek() == '}') {
        ++pos_;
        return e;
      }
      e.children.push_back(parse_expr());
      while (peek() == ',') {
        ++pos_;
        e.children.push_back(parse_expr());
      }
      expect('}');
      return e;
    }
    if (c == '<') {
      ++pos_;
      SetExpr e;
      e.kind = SetExpr::Kind::Pair;
      e.children.push_back(parse_expr());
      expect(',');
      e.children.push_back(parse_expr());
      expect('>');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t n = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + (text_[pos_] - '0');
        if (n > 0xffffffffull) fail("numeral out of range");
        ++pos_;
      }
      SetExpr e;
      e.kind = SetExpr::Kind::Numeral;
      e.numeral = static_cast<std::uint32_t>(n);
      return e;
    }
    fail("expected '{', '<' or a numeral");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_to(HSet s, std::string& out) {
  std::int64_t v = ordinal_value(s);
  if (v >= 0) {
    out += std::to_string(v);
    return;
  }
  if (auto p = try_pair(s)) {
    out += '<';
    print_to(p->first, out);
    out += ',';
    print_to(p->second, out);
    out += '>';
    return;
  }
  out += '{';
  for (std::size_t i = 0; i < s.card(); ++i) {
    if (i) out += ',';
    print_to(s.at(i), out);
  }
  out += '}';
}

}  // namespace

SetExpr parse_set_expr(std::string_view text) {
  return SetParser(text).parse();
}

HSet eval_set_expr(Ctx& ctx, const SetExpr& expr) {
  switch (expr.kind) {
    case SetExpr::Kind::Numeral:
      return ctx.ordinal(expr.numeral);
    case SetExpr::Kind::Pair:
      return pair(eval_set_expr(ctx, expr.children[0]),
                  eval_set_expr(ctx, expr.children[1]));
    case SetExpr::Kind::Braces: {
      std::vector<HSet> elems;
      elems.reserve(expr.children.size());
      for (const SetExpr& c : expr.children)
        elems.push_back(eval_set_expr(ctx, c));
      return ctx.make(std::move(elems));
    }
  }
  throw Error(ErrorKind::SyntaxError, "unreachable expression kind");
}

HSet parse_set(Ctx& ctx, std::string_view text) {
  return eval_set_expr(ctx, parse_set_expr(text));
}

std::string print_set(HSet s) {
  std::string out;
  print_to(s, out);
  return out;
}

}  // namespace hfzf

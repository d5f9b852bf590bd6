#include "nbe/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

namespace nbe {

namespace {

enum class Tok { Ident, Backslash, Colon, Dot, Comma, LParen, RParen, Arrow, Star, End };

struct Token {
  Tok kind;
  std::string_view text;
  SourceSpan span;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Ident:
      return "'" + std::string(t.text) + "'";
    case Tok::End:
      return "end of input";
    default:
      return "'" + std::string(t.text) + "'";
  }
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto single = [&](Tok kind) {
    out.push_back({kind, src.substr(i, 1), {i, i + 1}});
    ++i;
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (ident_start(c)) {
      std::size_t start = i;
      while (i < src.size() && ident_char(src[i])) ++i;
      out.push_back({Tok::Ident, src.substr(start, i - start), {start, i}});
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Arrow, src.substr(i, 2), {i, i + 2}});
      i += 2;
    } else {
      switch (c) {
        case '\\': single(Tok::Backslash); break;
        case ':': single(Tok::Colon); break;
        case '.': single(Tok::Dot); break;
        case ',': single(Tok::Comma); break;
        case '(': single(Tok::LParen); break;
        case ')': single(Tok::RParen); break;
        case '*': single(Tok::Star); break;
        default:
          throw ParseError("unexpected character '" + std::string(1, c) + "'", SourceSpan{i, i + 1});
      }
    }
  }
  out.push_back({Tok::End, {}, {src.size(), src.size()}});
  return out;
}

bool is_keyword(std::string_view s) { return s == "fst" || s == "snd" || s == "Unit"; }

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  Token next() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError("expected " + expected + ", found " + describe(peek()), peek().span);
  }

  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(what);
    return next();
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("end of input");
  }

  Type type() {
    Guard g(*this);
    Type left = prod();
    if (peek().kind == Tok::Arrow) {
      next();
      return Type::arrow(std::move(left), type());
    }
    return left;
  }

  SurfaceTerm term() {
    Guard g(*this);
    if (peek().kind == Tok::Backslash) {
      std::size_t start = next().span.start;
      Token name = expect(Tok::Ident, "a bound variable name");
      if (is_keyword(name.text)) throw ParseError("keyword '" + std::string(name.text) + "' cannot be bound", name.span);
      expect(Tok::Colon, "':'");
      Type domain = type();
      expect(Tok::Dot, "'.'");
      SurfaceTerm body = term();
      SourceSpan span{start, body.span().end};
      return SurfaceTerm(surface::Node{surface::Lam{std::string(name.text), std::move(domain), std::move(body)}}, span);
    }
    SurfaceTerm head = atom();
    while (starts_atom()) {
      SurfaceTerm arg = atom();
      SourceSpan span{head.span().start, arg.span().end};
      head = SurfaceTerm(surface::Node{surface::App{std::move(head), std::move(arg)}}, span);
    }
    return head;
  }

  NamedCtx context() {
    std::vector<NamedCtx::Entry> entries;
    if (peek().kind == Tok::End) return NamedCtx();
    while (true) {
      Token name = expect(Tok::Ident, "a variable name");
      if (is_keyword(name.text)) throw ParseError("keyword '" + std::string(name.text) + "' cannot be bound", name.span);
      expect(Tok::Colon, "':'");
      entries.push_back({std::string(name.text), type()});
      if (peek().kind != Tok::Comma) break;
      next();
    }
    return NamedCtx(std::move(entries));
  }

 private:
  struct Guard {
    explicit Guard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) {
        throw ParseError("input nested deeper than " + std::to_string(kMaxNesting) + " levels", parser.peek().span);
      }
    }
    ~Guard() { --parser.depth_; }
    Parser& parser;
  };

  Type prod() {
    Type left = type_atom();
    while (peek().kind == Tok::Star) {
      next();
      left = Type::prod(std::move(left), type_atom());
    }
    return left;
  }

  Type type_atom() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      Type inner = type();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "Unit") {
        next();
        return Type::unit();
      }
      if (t.text.size() > 1 && t.text[0] == 'b') {
        std::string_view digits = t.text.substr(1);
        std::size_t index = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
        if (ec == std::errc() && end == digits.data() + digits.size()) {
          next();
          return Type::base(index);
        }
      }
    }
    fail("a type");
  }

  bool starts_atom() const {
    const Token& t = peek();
    return t.kind == Tok::LParen || (t.kind == Tok::Ident && t.text != "Unit");
  }

  SurfaceTerm atom() {
    Guard g(*this);
    const Token t = peek();
    if (t.kind == Tok::Ident) {
      if (t.text == "fst" || t.text == "snd") {
        next();
        if (!starts_atom()) fail("an argument to '" + std::string(t.text) + "'");
        SurfaceTerm arg = atom();
        SourceSpan span{t.span.start, arg.span().end};
        if (t.text == "fst") return SurfaceTerm(surface::Node{surface::Fst{std::move(arg)}}, span);
        return SurfaceTerm(surface::Node{surface::Snd{std::move(arg)}}, span);
      }
      if (t.text == "Unit") fail("a term");
      next();
      return SurfaceTerm(surface::Node{surface::Name{std::string(t.text)}}, t.span);
    }
    if (t.kind == Tok::LParen) {
      next();
      if (peek().kind == Tok::RParen) {
        Token close = next();
        return SurfaceTerm(surface::Node{surface::Unit{}}, SourceSpan{t.span.start, close.span.end});
      }
      SurfaceTerm first = term();
      if (peek().kind == Tok::Comma) {
        next();
        SurfaceTerm second = term();
        Token close = expect(Tok::RParen, "')'");
        return SurfaceTerm(surface::Node{surface::Pair{std::move(first), std::move(second)}},
                           SourceSpan{t.span.start, close.span.end});
      }
      expect(Tok::RParen, "',' or ')'");
      return first;
    }
    fail("a term");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace

Type parse_type(std::string_view src) {
  Parser p(src);
  Type t = p.type();
  p.expect_end();
  return t;
}

SurfaceTerm parse_term(std::string_view src) {
  Parser p(src);
  SurfaceTerm t = p.term();
  p.expect_end();
  return t;
}

NamedCtx parse_context(std::string_view src) {
  Parser p(src);
  NamedCtx ctx = p.context();
  p.expect_end();
  return ctx;
}

}  // namespace nbe

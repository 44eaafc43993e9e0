#include <algorithm>
#include <cctype>
#include <set>

#include "slodowy/errors.hpp"
#include "slodowy/exact/mpoly.hpp"

namespace slodowy::exact {

namespace {

enum class Tok { Number, Ident, Sqrt2, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string id(s.substr(i, j - i));
      out.push_back({id == "sqrt2" ? Tok::Sqrt2 : Tok::Ident, id});
      i = j;
      continue;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw InputError(std::string("unexpected character '") + ch + "' in polynomial");
    }
    out.push_back({k, std::string(1, ch)});
    ++i;
  }
  out.push_back({Tok::End, ""});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, VarListPtr env) : toks_(std::move(toks)), env_(std::move(env)) {}

  MPoly parse_all() {
    MPoly p = expr();
    if (peek() != Tok::End) throw InputError("trailing input in polynomial near '" + toks_[pos_].text + "'");
    return p;
  }

 private:
  Tok peek() const { return toks_[pos_].kind; }
  const Token& take() { return toks_[pos_++]; }
  void expect(Tok k, const char* what) {
    if (peek() != k) throw InputError(std::string("expected ") + what + " in polynomial");
    ++pos_;
  }

  MPoly expr() {
    MPoly p = term();
    while (peek() == Tok::Plus || peek() == Tok::Minus) {
      bool minus = take().kind == Tok::Minus;
      MPoly q = term();
      if (minus) {
        p -= q;
      } else {
        p += q;
      }
    }
    return p;
  }

  MPoly term() {
    MPoly p = unary();
    while (peek() == Tok::Star || peek() == Tok::Slash) {
      bool div = take().kind == Tok::Slash;
      MPoly q = unary();
      if (div) {
        auto c = q.as_constant();
        if (!c || c->is_zero()) throw InputError("division by a non-constant or zero polynomial");
        p *= c->inverse();
      } else {
        p *= q;
      }
    }
    return p;
  }

  MPoly unary() {
    if (peek() == Tok::Minus) {
      ++pos_;
      return -unary();
    }
    if (peek() == Tok::Plus) {
      ++pos_;
      return unary();
    }
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (peek() == Tok::Caret) {
      ++pos_;
      if (peek() != Tok::Number) throw InputError("exponent must be a non-negative integer");
      const std::string& digits = take().text;
      if (digits.size() > 6) throw InputError("exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  MPoly atom() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::Number: return MPoly::constant(env_, Scalar(mpq_class(mpz_class(t.text))));
      case Tok::Ident: return MPoly::variable(env_, t.text);
      case Tok::Sqrt2: return MPoly::constant(env_, Scalar::sqrt2());
      case Tok::LParen: {
        MPoly p = expr();
        expect(Tok::RParen, "')'");
        return p;
      }
      default: throw InputError("unexpected token '" + t.text + "' in polynomial");
    }
  }

  std::vector<Token> toks_;
  VarListPtr env_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly MPoly::parse(std::string_view text, const VarList& declared) {
  auto toks = lex(text);
  VarList names = declared;
  std::set<std::string> extra;
  for (const auto& t : toks) {
    if (t.kind == Tok::Ident && std::find(names.begin(), names.end(), t.text) == names.end()) extra.insert(t.text);
  }
  names.insert(names.end(), extra.begin(), extra.end());
  Parser p(std::move(toks), make_env(std::move(names)));
  return p.parse_all();
}

}  // namespace slodowy::exact

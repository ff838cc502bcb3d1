#include "superband/expr.hpp"

#include <cctype>
#include <sstream>

namespace superband {

namespace {

enum class Tok { Number, Gen, Ident, Plus, Minus, Star, Dot, LParen, RParen,
                 LBrack, RBrack, Comma, End };

struct Token {
  Tok kind;
  std::string text;  // number or identifier
  int gen_index = 0;
  std::size_t pos = 0;
};

class Lexer {
 public:
  Lexer(const std::string& s, int n_generators) : s_(s), n_(n_generators) {
    advance();
  }
  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
    std::ostringstream os;
    os << msg << " at position " << pos;
    throw ParseError(os.str());
  }

  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
    tok_.pos = i_;
    if (i_ >= s_.size()) {
      tok_ = {Tok::End, "", 0, i_};
      return;
    }
    char c = s_[i_];
    auto one = [&](Tok k) {
      tok_ = {k, std::string(1, c), 0, i_};
      ++i_;
    };
    switch (c) {
      case '+': one(Tok::Plus); return;
      case '-': one(Tok::Minus); return;
      case '*': one(Tok::Star); return;
      case '.': one(Tok::Dot); return;
      case '(': one(Tok::LParen); return;
      case ')': one(Tok::RParen); return;
      case '[': one(Tok::LBrack); return;
      case ']': one(Tok::RBrack); return;
      case ',': one(Tok::Comma); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
        ++i_;
      if (i_ + 1 < s_.size() && s_[i_] == '/' &&
          std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
        ++i_;
        while (i_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[i_])))
          ++i_;
      }
      tok_ = {Tok::Number, s_.substr(start, i_ - start), 0, start};
      return;
    }
    // theta generator: UTF-8 CE B8 followed by digits
    if (static_cast<unsigned char>(c) == 0xCE && i_ + 1 < s_.size() &&
        static_cast<unsigned char>(s_[i_ + 1]) == 0xB8) {
      std::size_t start = i_;
      i_ += 2;
      read_gen_index(start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() &&
             std::isalnum(static_cast<unsigned char>(s_[i_])))
        ++i_;
      std::string word = s_.substr(start, i_ - start);
      if (word[0] == 'g' && word.size() > 1 &&
          word.find_first_not_of("0123456789", 1) == std::string::npos) {
        i_ = start + 1;
        read_gen_index(start);
        return;
      }
      tok_ = {Tok::Ident, word, 0, start};
      return;
    }
    fail("unexpected character", i_);
  }

  void read_gen_index(std::size_t start) {
    std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
      ++i_;
    if (digits == i_) fail("generator needs an index", start);
    int idx = std::stoi(s_.substr(digits, i_ - digits));
    if (idx < 1 || idx > n_)
      fail("generator index out of range 1.." + std::to_string(n_), start);
    tok_ = {Tok::Gen, "", idx, start};
  }

  const std::string& s_;
  int n_;
  std::size_t i_ = 0;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& text, int n) : lex_(text, n), n_(n) {}

  Value parse() {
    Value v = expr();
    expect(Tok::End, "trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    std::ostringstream os;
    os << msg << " at position " << lex_.peek().pos;
    throw ParseError(os.str());
  }

  Token expect(Tok kind, const char* what) {
    if (lex_.peek().kind != kind) fail(std::string("expected ") + what);
    return lex_.next();
  }

  static GrassmannElement as_element(const Value& v, const char* what) {
    if (!std::holds_alternative<GrassmannElement>(v))
      throw ParseError(std::string(what) + " expects an algebra element");
    return std::get<GrassmannElement>(v);
  }

  Value expr() {
    Value v = term();
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      bool minus = lex_.next().kind == Tok::Minus;
      Value rhs = term();
      GrassmannElement a = as_element(v, "addition");
      GrassmannElement b = as_element(rhs, "addition");
      v = minus ? a - b : a + b;
    }
    return v;
  }

  Value term() {
    Value v = factor();
    while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Dot) {
      lex_.next();
      Value rhs = factor();
      if (std::holds_alternative<Supermatrix>(v) &&
          std::holds_alternative<Supermatrix>(rhs)) {
        v = std::get<Supermatrix>(v) * std::get<Supermatrix>(rhs);
      } else if (std::holds_alternative<GrassmannElement>(v) &&
                 std::holds_alternative<GrassmannElement>(rhs)) {
        v = std::get<GrassmannElement>(v) * std::get<GrassmannElement>(rhs);
      } else {
        fail("cannot mix element and matrix in a product");
      }
    }
    return v;
  }

  Value factor() {
    if (lex_.peek().kind == Tok::Minus) {
      lex_.next();
      Value v = factor();
      if (std::holds_alternative<GrassmannElement>(v))
        return -std::get<GrassmannElement>(v);
      fail("unary minus applies to elements");
    }
    return primary();
  }

  Value primary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Number: {
        Token tok = lex_.next();
        return GrassmannElement::scalar(n_, rat_parse(tok.text));
      }
      case Tok::Gen: {
        Token tok = lex_.next();
        return GrassmannElement::generator(n_, tok.gen_index);
      }
      case Tok::LParen: {
        lex_.next();
        Value v = expr();
        expect(Tok::RParen, "')'");
        return v;
      }
      case Tok::LBrack:
        return matrix();
      case Tok::Ident:
        return call();
      default:
        fail("expected a value");
    }
  }

  Value matrix() {
    expect(Tok::LBrack, "'['");
    std::vector<std::vector<GrassmannElement>> rows;
    for (;;) {
      rows.push_back(matrix_row());
      if (lex_.peek().kind != Tok::Comma) break;
      lex_.next();
    }
    expect(Tok::RBrack, "']'");
    const std::size_t d = rows.size();
    for (const auto& row : rows)
      if (row.size() != d) fail("matrix literal must be square");
    try {
      return Supermatrix::from_rows(1, static_cast<int>(d) - 1,
                                    std::move(rows));
    } catch (const GradingError& e) {
      throw ParseError(std::string("matrix literal: ") + e.what());
    }
  }

  std::vector<GrassmannElement> matrix_row() {
    expect(Tok::LBrack, "'['");
    std::vector<GrassmannElement> row;
    for (;;) {
      row.push_back(as_element(expr(), "matrix entry"));
      if (lex_.peek().kind != Tok::Comma) break;
      lex_.next();
    }
    expect(Tok::RBrack, "']'");
    return row;
  }

  Value call() {
    Token name = lex_.next();
    expect(Tok::LParen, "'('");
    std::vector<Value> args;
    if (lex_.peek().kind != Tok::RParen) {
      for (;;) {
        args.push_back(expr());
        if (lex_.peek().kind != Tok::Comma) break;
        lex_.next();
      }
    }
    expect(Tok::RParen, "')'");
    if (name.text == "str") {
      if (args.size() != 1 || !std::holds_alternative<Supermatrix>(args[0]))
        fail("str(M) expects one matrix");
      return std::get<Supermatrix>(args[0]).supertrace();
    }
    if (name.text == "ber") {
      if (args.size() != 1 || !std::holds_alternative<Supermatrix>(args[0]))
        fail("ber(M) expects one matrix");
      return std::get<Supermatrix>(args[0]).berezinian();
    }
    if (name.text == "pow") {
      if (args.size() != 2) fail("pow(x, n) expects two arguments");
      long n = integer_arg(args[1]);
      if (n < 0) fail("pow exponent must be >= 0");
      if (std::holds_alternative<GrassmannElement>(args[0]))
        return std::get<GrassmannElement>(args[0]).pow(
            static_cast<unsigned>(n));
      Supermatrix m = std::get<Supermatrix>(args[0]);
      Supermatrix acc = Supermatrix::identity(m.even_dim(), m.odd_dim(),
                                              m.generators());
      for (long i = 0; i < n; ++i) acc = acc * m;
      return acc;
    }
    fail("unknown function '" + name.text + "'");
  }

  long integer_arg(const Value& v) {
    GrassmannElement x = as_element(v, "pow exponent");
    if (!x.soul().is_zero() || x.body().get_den() != 1)
      throw ParseError("pow exponent must be an integer");
    return x.body().get_num().get_si();
  }

  Lexer lex_;
  int n_;
};

}  // namespace

Value parse_value(const std::string& text, int n_generators) {
  return Parser(text, n_generators).parse();
}

GrassmannElement parse_element(const std::string& text, int n_generators) {
  Value v = parse_value(text, n_generators);
  if (!std::holds_alternative<GrassmannElement>(v))
    throw ParseError("expected an algebra element, got a matrix");
  return std::get<GrassmannElement>(v);
}

std::string value_to_string(const Value& v, GenStyle style) {
  if (std::holds_alternative<GrassmannElement>(v))
    return to_string(std::get<GrassmannElement>(v), style);
  const Supermatrix& m = std::get<Supermatrix>(v);
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.dim(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (int j = 0; j < m.dim(); ++j) {
      if (j) os << ", ";
      os << to_string(m.at(i, j), style);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace superband

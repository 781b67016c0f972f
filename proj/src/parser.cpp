#include "opg/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace opg {

namespace {

struct Token {
  enum Kind { Ident, Num, Sym, End } kind = End;
  std::string text;
  int64_t num = 0;
  int line = 0, col = 0;
};

class Lexer {
public:
  Lexer(const std::string& s, int line) : s_(s), line_(line) {}

  Token peek() {
    if (!has_) {
      cur_ = lex();
      has_ = true;
    }
    return cur_;
  }

  Token next() {
    Token t = peek();
    has_ = false;
    return t;
  }

  bool accept_sym(char c) {
    Token t = peek();
    if (t.kind == Token::Sym && t.text[0] == c) {
      next();
      return true;
    }
    return false;
  }

  void expect_sym(char c) {
    Token t = next();
    if (t.kind != Token::Sym || t.text[0] != c)
      throw ParseError(t.line, t.col, std::string("expected '") + c + "'");
  }

private:
  Token lex() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
    Token t;
    t.line = line_;
    t.col = static_cast<int>(i_) + 1;
    if (i_ >= s_.size() || s_[i_] == '#') {
      t.kind = Token::End;
      return t;
    }
    char c = s_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      t.kind = Token::Ident;
      t.text = s_.substr(i_, j - i_);
      i_ = j;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      t.kind = Token::Num;
      t.text = s_.substr(i_, j - i_);
      try {
        t.num = std::stoll(t.text);
      } catch (const std::exception&) {
        throw ParseError(t.line, t.col, "integer literal out of range");
      }
      i_ = j;
      return t;
    }
    static const std::string syms = "^*[](),=+-";
    if (syms.find(c) != std::string::npos) {
      t.kind = Token::Sym;
      t.text = std::string(1, c);
      ++i_;
      return t;
    }
    throw ParseError(t.line, t.col, std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  size_t i_ = 0;
  int line_;
  Token cur_;
  bool has_ = false;
};

int64_t checked_mul(int64_t a, int64_t b, const Token& at) {
  __int128 r = static_cast<__int128>(a) * b;
  if (r > INT64_MAX || r < INT64_MIN)
    throw ParseError(at.line, at.col, "integer overflow in expression");
  return static_cast<int64_t>(r);
}

int64_t checked_add(int64_t a, int64_t b, const Token& at) {
  __int128 r = static_cast<__int128>(a) + b;
  if (r > INT64_MAX || r < INT64_MIN)
    throw ParseError(at.line, at.col, "integer overflow in expression");
  return static_cast<int64_t>(r);
}

// Integer expressions in the symbol p. Values are tracked exactly as int64;
// reduction mod p^prec is equivalent to exact evaluation followed by
// reduction since Z -> Z/p^prec is a ring homomorphism.
int64_t parse_int_expr(Lexer& lx, int64_t p);

int64_t parse_int_atom(Lexer& lx, int64_t p) {
  Token t = lx.peek();
  if (t.kind == Token::Num) {
    lx.next();
    return t.num;
  }
  if (t.kind == Token::Ident && t.text == "p") {
    lx.next();
    return p;
  }
  if (t.kind == Token::Sym && t.text == "(") {
    lx.next();
    int64_t v = parse_int_expr(lx, p);
    lx.expect_sym(')');
    return v;
  }
  if (t.kind == Token::Sym && t.text == "-") {
    lx.next();
    return checked_mul(-1, parse_int_atom(lx, p), t);
  }
  throw ParseError(t.line, t.col, "expected an integer expression");
}

int64_t parse_int_power(Lexer& lx, int64_t p) {
  Token at = lx.peek();
  int64_t base = parse_int_atom(lx, p);
  if (lx.accept_sym('^')) {
    int64_t e = parse_int_atom(lx, p);
    if (e < 0) throw ParseError(at.line, at.col, "negative exponent in integer expression");
    int64_t r = 1;
    for (int64_t i = 0; i < e; ++i) r = checked_mul(r, base, at);
    return r;
  }
  return base;
}

int64_t parse_int_term(Lexer& lx, int64_t p) {
  int64_t v = parse_int_power(lx, p);
  while (true) {
    Token t = lx.peek();
    if (t.kind == Token::Sym && t.text == "*") {
      lx.next();
      v = checked_mul(v, parse_int_power(lx, p), t);
    } else {
      return v;
    }
  }
}

int64_t parse_int_expr(Lexer& lx, int64_t p) {
  Token t0 = lx.peek();
  int64_t v = 0;
  bool neg = false;
  if (t0.kind == Token::Sym && (t0.text == "-" || t0.text == "+")) {
    lx.next();
    neg = t0.text == "-";
  }
  v = parse_int_term(lx, p);
  if (neg) v = checked_mul(-1, v, t0);
  while (true) {
    Token t = lx.peek();
    if (t.kind == Token::Sym && (t.text == "+" || t.text == "-")) {
      lx.next();
      int64_t rhs = parse_int_term(lx, p);
      v = checked_add(v, t.text == "+" ? rhs : -rhs, t);
    } else {
      return v;
    }
  }
}

// Exponent after '^': NUM, p, -atom, or a parenthesized integer expression.
int64_t parse_exponent(Lexer& lx, int64_t p) {
  Token t = lx.peek();
  if (t.kind == Token::Sym && t.text == "(") {
    lx.next();
    int64_t v = parse_int_expr(lx, p);
    lx.expect_sym(')');
    return v;
  }
  if (t.kind == Token::Sym && t.text == "-") {
    lx.next();
    return -parse_exponent(lx, p);
  }
  if (t.kind == Token::Num) {
    lx.next();
    return t.num;
  }
  if (t.kind == Token::Ident && t.text == "p") {
    lx.next();
    return p;
  }
  throw ParseError(t.line, t.col, "expected an exponent");
}

Word parse_word(Lexer& lx, const Presentation& pres);

Word parse_word_factor(Lexer& lx, const Presentation& pres) {
  Token t = lx.peek();
  Word w;
  if (t.kind == Token::Ident) {
    lx.next();
    int g = pres.gen_index(t.text);
    if (g < 0) throw ParseError(t.line, t.col, "unknown generator '" + t.text + "'");
    w.append_power(g, 1);
  } else if (t.kind == Token::Sym && t.text == "[") {
    lx.next();
    Word l = parse_word(lx, pres);
    lx.expect_sym(',');
    Word r = parse_word(lx, pres);
    lx.expect_sym(']');
    w.append_commutator(std::move(l), std::move(r));
  } else if (t.kind == Token::Sym && t.text == "(") {
    lx.next();
    w = parse_word(lx, pres);
    lx.expect_sym(')');
  } else {
    throw ParseError(t.line, t.col, "expected a generator, '[' or '('");
  }
  if (lx.accept_sym('^')) {
    int64_t e = parse_exponent(lx, pres.p);
    if (w.atoms.size() == 1 && w.atoms[0].is_power()) {
      w.atoms[0].exp *= e;
    } else {
      Word inner = std::move(w);
      w = Word{};
      if (e >= 0) {
        for (int64_t i = 0; i < e; ++i) w.append(inner);
      } else {
        Word inv = inverse_reduced(expand_commutators(inner));
        for (int64_t i = 0; i < -e; ++i) w.append(inv);
      }
    }
  }
  return w;
}

Word parse_word(Lexer& lx, const Presentation& pres) {
  Word w = parse_word_factor(lx, pres);
  while (true) {
    Token t = lx.peek();
    bool starts_factor = (t.kind == Token::Ident && t.text != "p") ||
                         (t.kind == Token::Sym && (t.text == "[" || t.text == "("));
    if (lx.accept_sym('*') || starts_factor) {
      Word f = parse_word_factor(lx, pres);
      w.append(f);
    } else {
      return w;
    }
  }
}

void expect_end(Lexer& lx) {
  Token t = lx.peek();
  if (t.kind != Token::End)
    throw ParseError(t.line, t.col, "trailing input '" + t.text + "'");
}

} // namespace

OrientedPresentation parse_presentation(const std::string& text, int precision_override) {
  std::vector<std::pair<int, std::string>> lines;
  {
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) lines.emplace_back(++no, line);
  }

  Presentation pres;
  int precision = 4;
  bool saw_prime = false, saw_gens = false;

  auto keyword_of = [](const std::string& s) -> std::string {
    Lexer lx(s, 0);
    Token t = lx.peek();
    return t.kind == Token::Ident ? t.text : std::string();
  };

  // first pass: prime, precision, generators
  for (const auto& [no, line] : lines) {
    std::string kw = keyword_of(line);
    Lexer lx(line, no);
    if (kw == "prime") {
      lx.next();
      Token t = lx.next();
      if (t.kind != Token::Num) throw ParseError(no, t.col, "expected a prime number");
      if (t.num == 2) throw ParseError(no, t.col, "p = 2 is not supported");
      pres.p = t.num;
      expect_end(lx);
      saw_prime = true;
    } else if (kw == "precision") {
      lx.next();
      Token t = lx.next();
      if (t.kind != Token::Num || t.num < 1)
        throw ParseError(no, t.col, "expected a positive precision");
      precision = static_cast<int>(t.num);
      expect_end(lx);
    } else if (kw == "generators") {
      lx.next();
      while (lx.peek().kind == Token::Ident) {
        Token t = lx.next();
        if (t.text == "p")
          throw ParseError(no, t.col, "'p' is reserved for the prime");
        if (pres.gen_index(t.text) >= 0)
          throw ParseError(no, t.col, "duplicate generator '" + t.text + "'");
        pres.gens.push_back(t.text);
      }
      expect_end(lx);
      saw_gens = true;
    }
  }
  if (!saw_prime) throw ParseError(1, 1, "missing 'prime' line");
  if (!saw_gens) throw ParseError(1, 1, "missing 'generators' line");
  if (precision_override > 0) precision = precision_override;

  Orientation orient = Orientation::trivial(pres.p, pres.ngens(), precision);

  // second pass: relators and orientation values
  for (const auto& [no, line] : lines) {
    std::string kw = keyword_of(line);
    Lexer lx(line, no);
    if (kw == "relator") {
      lx.next();
      Word w = parse_word(lx, pres);
      expect_end(lx);
      pres.relators.push_back(normalize(w));
    } else if (kw == "orientation") {
      lx.next();
      Token g = lx.next();
      if (g.kind != Token::Ident) throw ParseError(no, g.col, "expected a generator name");
      int gi = pres.gen_index(g.text);
      if (gi < 0) throw ParseError(no, g.col, "unknown generator '" + g.text + "'");
      lx.expect_sym('=');
      int64_t v = parse_int_expr(lx, pres.p);
      expect_end(lx);
      Padic val(pres.p, v, precision);
      if (val.value() % static_cast<uint64_t>(pres.p) != 1)
        throw ParseError(no, g.col, "orientation value " + std::to_string(v) +
                                        " is not 1 mod p");
      orient.theta[static_cast<size_t>(gi)] = Unit1(val);
    } else if (kw == "prime" || kw == "precision" || kw == "generators" || kw.empty()) {
      // handled above / blank / comment
      if (kw.empty()) {
        Lexer probe(line, no);
        expect_end(probe);
      }
    } else {
      throw ParseError(no, 1, "unknown directive '" + kw + "'");
    }
  }

  OrientedPresentation op{std::move(pres), std::move(orient)};
  Diagnostics d = validate(op);
  if (!d.ok()) {
    std::string msg = "validation failed:";
    for (const std::string& s : d.issues) msg += "\n  " + s;
    throw ParseError(0, 0, msg);
  }
  return op;
}

OrientedPresentation parse_presentation_file(const std::string& path,
                                             int precision_override) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str(), precision_override);
}

std::string print_presentation(const OrientedPresentation& op) {
  std::string s;
  s += "prime " + std::to_string(op.p()) + "\n";
  s += "precision " + std::to_string(op.precision()) + "\n";
  s += "generators";
  for (const std::string& g : op.pres.gens) s += " " + g;
  s += "\n";
  for (const Word& r : op.pres.relators)
    s += "relator " + word_str(r, op.pres.gens) + "\n";
  for (size_t i = 0; i < op.orient.theta.size(); ++i) {
    const Unit1& u = op.orient.theta[i];
    if (u.is_one()) continue;
    s += "orientation " + op.pres.gens[i] + " = " +
         std::to_string(u.padic().signed_value()) + "\n";
  }
  return s;
}

Padic eval_p_expression(const std::string& text, int64_t p, int prec) {
  Lexer lx(text, 1);
  int64_t v = parse_int_expr(lx, p);
  expect_end(lx);
  return Padic(p, v, prec);
}

FpVec parse_h1_class(const std::string& text, const Presentation& pres) {
  const uint32_t p = static_cast<uint32_t>(pres.p);
  FpVec v(pres.gens.size(), 0);
  Lexer lx(text, 1);
  bool first = true;
  while (true) {
    Token t = lx.peek();
    if (t.kind == Token::End) break;
    uint32_t sign = 1;
    if (t.kind == Token::Sym && (t.text == "+" || t.text == "-")) {
      lx.next();
      if (t.text == "-") sign = p - 1;
    } else if (!first) {
      throw ParseError(t.line, t.col, "expected '+' or '-'");
    }
    first = false;
    uint32_t coeff = 1;
    Token u = lx.peek();
    if (u.kind == Token::Num) {
      lx.next();
      coeff = static_cast<uint32_t>(((u.num % p) + p) % p);
      lx.accept_sym('*');
      u = lx.peek();
      if (u.kind != Token::Ident) {
        if (coeff == 0) continue; // a bare 0 term
        throw ParseError(u.line, u.col, "expected a generator name");
      }
    }
    if (u.kind != Token::Ident)
      throw ParseError(u.line, u.col, "expected a generator name");
    lx.next();
    int gi = pres.gen_index(u.text);
    if (gi < 0) throw ParseError(u.line, u.col, "unknown generator '" + u.text + "'");
    v[static_cast<size_t>(gi)] =
        fp_add(v[static_cast<size_t>(gi)], fp_mul(sign, coeff, p), p);
  }
  return v;
}

} // namespace opg

#include "consensus/protocol_io.hpp"

#include <cctype>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

namespace consensus {

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Caret, Slash, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line, int lineno) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) ||
              line[j] == '_'))
        ++j;
      toks.push_back({Tok::Ident, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < line.size() &&
             std::isdigit(static_cast<unsigned char>(line[j])))
        ++j;
      toks.push_back({Tok::Number, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '/': kind = Tok::Slash; break;
      case '=': kind = Tok::Equals; break;
      default:
        throw ParseError(lineno, col,
                         std::string("unexpected character '") + c + "'");
    }
    toks.push_back({kind, std::string(1, c), col});
    ++i;
  }
  toks.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
  return toks;
}

class ExprParser {
 public:
  ExprParser(const std::vector<Token>& toks, std::size_t start, int lineno,
             const Ring& ring)
      : toks_(toks), pos_(start), lineno_(lineno), ring_(ring) {}

  Polynomial parse() {
    Polynomial poly = parse_sum();
    if (peek().kind != Tok::End)
      fail("unexpected token '" + peek().text + "'");
    return poly;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(lineno_, peek().column, msg);
  }

  Polynomial parse_sum() {
    int sign = 1;
    if (peek().kind == Tok::Minus) {
      next();
      sign = -1;
    } else if (peek().kind == Tok::Plus) {
      next();
    }
    Polynomial poly = parse_term(sign);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      sign = next().kind == Tok::Plus ? 1 : -1;
      poly = poly + parse_term(sign);
    }
    return poly;
  }

  Polynomial parse_term(int sign) {
    Rational coeff(sign);
    std::vector<int> exps(ring_.size(), 0);
    parse_factor(coeff, exps);
    while (peek().kind == Tok::Star) {
      next();
      parse_factor(coeff, exps);
    }
    return Polynomial::term(ring_, std::move(coeff), Monomial(std::move(exps)));
  }

  void parse_factor(Rational& coeff, std::vector<int>& exps) {
    if (peek().kind == Tok::Minus) {  // unary minus binds to the factor
      next();
      coeff = -coeff;
    }
    if (peek().kind == Tok::Number) {
      Integer num(next().text);
      if (peek().kind == Tok::Slash) {
        next();
        if (peek().kind != Tok::Number) fail("expected denominator");
        Integer den(next().text);
        if (den == 0) fail("zero denominator");
        coeff *= Rational(num, den);
      } else {
        coeff *= Rational(num);
      }
      return;
    }
    if (peek().kind == Tok::Ident) {
      Token tok = next();
      auto index = ring_.index_of(tok.text);
      if (!index)
        throw ParseError(lineno_, tok.column,
                         "undeclared variable '" + tok.text + "'");
      long long power = 1;
      if (peek().kind == Tok::Caret) {
        next();
        if (peek().kind != Tok::Number) fail("expected integer exponent");
        Token e = next();
        if (e.text.size() > 9)
          throw ParseError(lineno_, e.column, "exponent too large");
        power = std::stoll(e.text);
        if (power < 1)
          throw ParseError(lineno_, e.column, "non-positive exponent");
      }
      long long total = exps[*index] + power;
      if (total > 1000000000)
        throw ParseError(lineno_, tok.column, "exponent too large");
      exps[*index] = static_cast<int>(total);
      return;
    }
    fail("expected a number or variable");
  }

  const std::vector<Token>& toks_;
  std::size_t pos_;
  int lineno_;
  const Ring& ring_;
};

std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos)
    line.erase(hash);
  return line;
}

// "f<digits>" -> 0-based index, or nullopt.
std::optional<std::size_t> f_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'f') return std::nullopt;
  std::size_t value = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(name[i] - '0');
    if (value > 1000000) return std::nullopt;
  }
  if (value == 0) return std::nullopt;
  return value - 1;
}

}  // namespace

Protocol parse_protocol(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool have_vars = false;
  Ring ring;
  std::vector<bool> defined;
  std::vector<Polynomial> polys;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    std::vector<Token> toks = tokenize(line, lineno);
    if (toks[0].kind == Tok::End) continue;  // blank

    if (!have_vars) {
      if (toks[0].kind != Tok::Ident || toks[0].text != "vars")
        throw ParseError(lineno, toks[0].column,
                         "expected 'vars' declaration first");
      std::vector<std::string> names;
      for (std::size_t i = 1; toks[i].kind != Tok::End; ++i) {
        if (toks[i].kind != Tok::Ident)
          throw ParseError(lineno, toks[i].column, "expected variable name");
        for (const auto& n : names)
          if (n == toks[i].text)
            throw ParseError(lineno, toks[i].column,
                             "duplicate variable '" + toks[i].text + "'");
        names.push_back(toks[i].text);
      }
      if (names.empty())
        throw ParseError(lineno, toks[0].column,
                         "vars declaration needs at least one variable");
      ring = Ring(std::move(names));
      defined.assign(ring.size(), false);
      polys.assign(ring.size(), Polynomial(ring));
      have_vars = true;
      continue;
    }

    if (toks[0].kind != Tok::Ident)
      throw ParseError(lineno, toks[0].column, "expected f<i> definition");
    auto idx = f_index(toks[0].text);
    if (!idx)
      throw ParseError(lineno, toks[0].column,
                       "expected f<i> on the left-hand side");
    if (*idx >= ring.size())
      throw ParseError(lineno, toks[0].column,
                       "index of '" + toks[0].text + "' exceeds agent count");
    if (defined[*idx])
      throw ParseError(lineno, toks[0].column,
                       "duplicate definition of '" + toks[0].text + "'");
    if (toks[1].kind != Tok::Equals)
      throw ParseError(lineno, toks[1].column, "expected '='");

    ExprParser parser(toks, 2, lineno, ring);
    polys[*idx] = parser.parse();
    defined[*idx] = true;
  }

  if (!have_vars)
    throw ParseError(lineno == 0 ? 1 : lineno, 1, "missing vars declaration");
  for (std::size_t i = 0; i < defined.size(); ++i)
    if (!defined[i])
      throw ParseError(lineno, 1,
                       "missing definition for f" + std::to_string(i + 1));
  return Protocol(std::move(ring), std::move(polys));
}

Polynomial parse_polynomial(const std::string& expr, const Ring& ring) {
  std::vector<Token> toks = tokenize(strip_comment(expr), 1);
  if (toks[0].kind == Tok::End) throw ParseError(1, 1, "empty expression");
  ExprParser parser(toks, 0, 1, ring);
  return parser.parse();
}

std::string format_protocol(const Protocol& p) {
  std::ostringstream out;
  out << "vars";
  for (const auto& name : p.ring.names()) out << " " << name;
  out << "\n";
  for (std::size_t i = 0; i < p.polys.size(); ++i)
    out << "f" << (i + 1) << " = " << p.polys[i].str() << "\n";
  return out.str();
}

void write_trajectory_csv(const Trajectory& tr, std::ostream& out) {
  if (tr.states.empty())
    throw std::invalid_argument("empty trajectory");
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  out << "t";
  for (Eigen::Index i = 0; i < tr.states.front().size(); ++i)
    out << ",x" << (i + 1);
  out << "\n";
  for (std::size_t row = 0; row < tr.times.size(); ++row) {
    out << fmt(tr.times[row]);
    for (Eigen::Index i = 0; i < tr.states[row].size(); ++i)
      out << "," << fmt(tr.states[row][i]);
    out << "\n";
  }
  switch (tr.outcome.kind) {
    case OutcomeKind::Converged:
      out << "# outcome: converged t=" << fmt(tr.outcome.time)
          << " value=" << fmt(tr.outcome.consensus_value) << "\n";
      break;
    case OutcomeKind::HorizonReached:
      out << "# outcome: horizon_reached\n";
      break;
    case OutcomeKind::Diverged:
      out << "# outcome: diverged t=" << fmt(tr.outcome.time) << "\n";
      break;
  }
  if (!out) throw std::runtime_error("trajectory write failed");
}

}  // namespace consensus

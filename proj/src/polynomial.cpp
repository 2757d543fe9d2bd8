#include "consensus/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace consensus {

namespace {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring() == b.ring()))
    throw std::invalid_argument("polynomial ring mismatch");
}

}  // namespace

Ring::Ring(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(
          std::move(names))) {}

Ring Ring::numbered(std::size_t n, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i)
    names.push_back(std::string(prefix) + std::to_string(i));
  return Ring(std::move(names));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

Polynomial::Polynomial(Ring ring, std::map<Monomial, Rational> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != ring_.size())
      throw std::invalid_argument("monomial dimension does not match ring");
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Polynomial Polynomial::constant(Ring ring, Rational value) {
  Polynomial p(ring);
  if (value != 0) p.terms_.emplace(Monomial::unit(ring.size()), std::move(value));
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index, int power) {
  std::size_t n = ring.size();
  return term(std::move(ring), 1, Monomial::variable(n, index, power));
}

Polynomial Polynomial::term(Ring ring, Rational coefficient,
                            Monomial monomial) {
  if (monomial.size() != ring.size())
    throw std::invalid_argument("monomial dimension does not match ring");
  Polynomial p(std::move(ring));
  if (coefficient != 0)
    p.terms_.emplace(std::move(monomial), std::move(coefficient));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  check_same_ring(*this, rhs);
  Polynomial out(ring_);
  out.terms_ = terms_;
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, inserted] = out.terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  return *this + (-rhs);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  check_same_ring(*this, rhs);
  Polynomial out(ring_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m = ma * mb;
      Rational c = ca * cb;
      auto [it, inserted] = out.terms_.emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  Polynomial out(ring_);
  if (scalar == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * scalar);
  return out;
}

Term Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty())
    throw std::domain_error("leading term of the zero polynomial is undefined");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (ord.greater(it->first, best->first)) best = it;
  return Term{best->second, best->first};
}

Monomial Polynomial::leading_monomial(const MonomialOrder& ord) const {
  return leading_term(ord).monomial;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  Rational lc = leading_term(ord).coefficient;
  return *this * (Rational(1) / lc);
}

std::set<std::size_t> Polynomial::support() const {
  std::set<std::size_t> vars;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) vars.insert(i);
  return vars;
}

Polynomial Polynomial::substitute_diagonal() const {
  static const Ring t_ring(std::vector<std::string>{"t"});
  Polynomial out(t_ring);
  std::map<Monomial, Rational> acc;
  for (const auto& [m, c] : terms_) {
    Monomial tm(std::vector<int>{m.degree()});
    auto [it, inserted] = acc.emplace(std::move(tm), c);
    if (!inserted) it->second += c;
  }
  return Polynomial(t_ring, std::move(acc));
}

std::string Polynomial::str() const { return str(MonomialOrder::lex()); }

std::string Polynomial::str(const MonomialOrder& ord) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });

  std::ostringstream out;
  bool first = true;
  for (auto* t : sorted) {
    const auto& [m, c] = *t;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    if (mag != 1 || m.is_unit()) factors.push_back(to_string(mag));
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      std::string f = ring_.name(i);
      if (m[i] > 1) f += "^" + std::to_string(m[i]);
      factors.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors,
                      const MonomialOrder& ord) {
  if (divisors.empty())
    throw std::invalid_argument("division requires at least one divisor");
  for (const auto& g : divisors) {
    if (g.is_zero()) throw std::invalid_argument("zero divisor in list");
    check_same_ring(f, g);
  }

  std::vector<Monomial> lead;
  lead.reserve(divisors.size());
  for (const auto& g : divisors) lead.push_back(g.leading_monomial(ord));

  DivisionResult res;
  res.quotients.assign(divisors.size(), Polynomial(f.ring()));
  res.remainder = Polynomial(f.ring());
  Polynomial p = f;

  while (!p.is_zero()) {
    Term lt = p.leading_term(ord);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!lead[i].divides(lt.monomial)) continue;
      Rational c = lt.coefficient /
                   divisors[i].leading_term(ord).coefficient;
      Polynomial t =
          Polynomial::term(f.ring(), std::move(c), lt.monomial / lead[i]);
      res.quotients[i] = res.quotients[i] + t;
      p = p - t * divisors[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial t = Polynomial::term(f.ring(), lt.coefficient, lt.monomial);
      res.remainder = res.remainder + t;
      p = p - t;
    }
  }
  return res;
}

Polynomial remainder(const Polynomial& f,
                     const std::vector<Polynomial>& divisors,
                     const MonomialOrder& ord) {
  return divide(f, divisors, ord).remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomial of a zero polynomial");
  check_same_ring(f, g);
  Term lf = f.leading_term(ord);
  Term lg = g.leading_term(ord);
  Monomial l = Monomial::lcm(lf.monomial, lg.monomial);
  Polynomial a = Polynomial::term(f.ring(), Rational(1) / lf.coefficient,
                                  l / lf.monomial);
  Polynomial b = Polynomial::term(g.ring(), Rational(1) / lg.coefficient,
                                  l / lg.monomial);
  return a * f - b * g;
}

}  // namespace consensus

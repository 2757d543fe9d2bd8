#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "consensus/monomial.hpp"
#include "consensus/rational.hpp"

namespace consensus {

// Ordered variable-name list shared by the polynomials of a system.
// Cheap to copy; equality is by variable names.
class Ring {
 public:
  Ring() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Ring(std::vector<std::string> names);
  // x1..xN style rings.
  static Ring numbered(std::size_t n, std::string_view prefix = "x");

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Ring& other) const {
    return names_ == other.names_ || *names_ == *other.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

struct Term {
  Rational coefficient;  // nonzero
  Monomial monomial;
  bool operator==(const Term&) const = default;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Canonical form: no zero coefficients, no duplicate monomials; the zero
// polynomial is the empty term map. Immutable value type.
class Polynomial {
 public:
  Polynomial() = default;  // zero over the empty ring
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  Polynomial(Ring ring, std::map<Monomial, Rational> terms);

  static Polynomial constant(Ring ring, Rational value);
  static Polynomial variable(Ring ring, std::size_t index, int power = 1);
  static Polynomial term(Ring ring, Rational coefficient, Monomial monomial);

  const Ring& ring() const { return ring_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  // True when the polynomial is a constant (possibly zero).
  bool is_constant() const;
  int degree() const;  // -1 for the zero polynomial

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const Rational& scalar) const;

  bool operator==(const Polynomial& rhs) const {
    return ring_ == rhs.ring_ && terms_ == rhs.terms_;
  }

  // The order-maximal term; throws std::domain_error on the zero polynomial.
  Term leading_term(const MonomialOrder& ord) const;
  Monomial leading_monomial(const MonomialOrder& ord) const;
  // Divide through by the leading coefficient.
  Polynomial monic(const MonomialOrder& ord) const;

  // Indices of variables occurring with positive exponent.
  std::set<std::size_t> support() const;

  // f(t,...,t) as a univariate polynomial over the ring {"t"}.
  Polynomial substitute_diagonal() const;

  // Text form: terms joined by " + " / " - ", descending under `ord`
  // (default lex), "3*x1^2*x2 - 1/2*x3" style. Zero renders as "0".
  std::string str() const;
  std::string str(const MonomialOrder& ord) const;

 private:
  Ring ring_;
  std::map<Monomial, Rational> terms_;
};

inline Polynomial operator*(const Rational& scalar, const Polynomial& p) {
  return p * scalar;
}

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division of f by an ordered divisor list: f = sum q_i g_i + r
// with no monomial of r divisible by any LM(g_i). Reduction always uses the
// first divisor whose leading monomial divides, so the result is
// deterministic for a fixed list order.
DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors,
                      const MonomialOrder& ord);
Polynomial remainder(const Polynomial& f,
                     const std::vector<Polynomial>& divisors,
                     const MonomialOrder& ord);

// S(f,g) = (lcm/LT(f)) f - (lcm/LT(g)) g; throws on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& ord);

}  // namespace consensus

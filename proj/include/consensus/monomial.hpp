#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace consensus {

// Power product stored as an exponent vector; the length equals the
// variable count of the ring the monomial lives in.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial unit(std::size_t nvars);
  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return exp_.size(); }
  int operator[](std::size_t i) const { return exp_[i]; }
  const std::vector<int>& exponents() const { return exp_; }

  int degree() const;
  bool is_unit() const;

  Monomial operator*(const Monomial& rhs) const;
  // Divisibility of power products: this | other.
  bool divides(const Monomial& other) const;
  // Exact quotient *this / d; throws std::domain_error if d does not divide.
  Monomial operator/(const Monomial& d) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  // Structural comparison only (container ordering); monomial orders live
  // in MonomialOrder.
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<int> exp_;
};

// Total multiplication-compatible well-ordering on exponent vectors.
// Block is the elimination order: the designated variables compare first
// (under the inner order of the big block), ties fall through to the
// remaining variables.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrLex, GrevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder grlex() { return MonomialOrder(Kind::GrLex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex); }
  // `eliminated` is the set of variable indices forming the big block.
  static MonomialOrder block(std::vector<int> eliminated,
                             Kind big_kind = Kind::GrevLex,
                             Kind small_kind = Kind::GrevLex);

  Kind kind() const { return kind_; }
  const std::vector<int>& eliminated() const { return eliminated_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

 private:
  explicit MonomialOrder(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Lex;
  std::vector<int> eliminated_;  // sorted, Block only
  Kind big_kind_ = Kind::GrevLex;
  Kind small_kind_ = Kind::GrevLex;
};

}  // namespace consensus

#include "consensus/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace consensus {

namespace {

void check_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("monomial dimension mismatch");
}

int total_degree(const std::vector<int>& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

// Flat (non-block) comparison of two exponent vectors of equal length.
std::strong_ordering compare_flat(MonomialOrder::Kind kind,
                                  const std::vector<int>& a,
                                  const std::vector<int>& b) {
  using Kind = MonomialOrder::Kind;
  auto lex_cmp = [&]() -> std::strong_ordering {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  };
  switch (kind) {
    case Kind::Lex:
      return lex_cmp();
    case Kind::GrLex: {
      if (int d = total_degree(a) - total_degree(b); d != 0)
        return d <=> 0;
      return lex_cmp();
    }
    case Kind::GrevLex: {
      if (int d = total_degree(a) - total_degree(b); d != 0)
        return d <=> 0;
      // Rightmost nonzero entry of a-b negative means a is greater.
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    }
    case Kind::Block:
      break;
  }
  throw std::logic_error("block order has no flat comparison");
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  for (int e : exp_)
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
}

Monomial Monomial::unit(std::size_t nvars) {
  return Monomial(std::vector<int>(nvars, 0));
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  if (index >= nvars) throw std::invalid_argument("variable index out of range");
  if (power < 0) throw std::invalid_argument("negative exponent in monomial");
  std::vector<int> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

int Monomial::degree() const { return total_degree(exp_); }

bool Monomial::is_unit() const {
  return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  check_same_size(*this, rhs);
  std::vector<int> e(exp_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exp_[i] + rhs.exp_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  check_same_size(*this, other);
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& d) const {
  check_same_size(*this, d);
  std::vector<int> e(exp_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = exp_[i] - d.exp_[i];
    if (e[i] < 0) throw std::domain_error("monomial quotient is not exact");
  }
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  check_same_size(a, b);
  std::vector<int> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(a.exp_[i], b.exp_[i]);
  return Monomial(std::move(e));
}

MonomialOrder MonomialOrder::block(std::vector<int> eliminated, Kind big_kind,
                                   Kind small_kind) {
  if (big_kind == Kind::Block || small_kind == Kind::Block)
    throw std::invalid_argument("block order cannot nest block inner orders");
  std::sort(eliminated.begin(), eliminated.end());
  if (std::adjacent_find(eliminated.begin(), eliminated.end()) !=
      eliminated.end())
    throw std::invalid_argument("duplicate variable in block partition");
  for (int i : eliminated)
    if (i < 0) throw std::invalid_argument("negative variable index");
  MonomialOrder ord(Kind::Block);
  ord.eliminated_ = std::move(eliminated);
  ord.big_kind_ = big_kind;
  ord.small_kind_ = small_kind;
  return ord;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a,
                                            const Monomial& b) const {
  check_same_size(a, b);
  if (kind_ != Kind::Block) return compare_flat(kind_, a.exponents(), b.exponents());

  if (!eliminated_.empty() &&
      static_cast<std::size_t>(eliminated_.back()) >= a.size())
    throw std::invalid_argument("block partition exceeds monomial dimension");

  std::vector<int> big_a, big_b, small_a, small_b;
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool in_big = k < eliminated_.size() &&
                  static_cast<std::size_t>(eliminated_[k]) == i;
    if (in_big) {
      ++k;
      big_a.push_back(a[i]);
      big_b.push_back(b[i]);
    } else {
      small_a.push_back(a[i]);
      small_b.push_back(b[i]);
    }
  }
  if (auto c = compare_flat(big_kind_, big_a, big_b);
      c != std::strong_ordering::equal)
    return c;
  return compare_flat(small_kind_, small_a, small_b);
}

}  // namespace consensus

#pragma once

#include <set>
#include <vector>

#include "consensus/polynomial.hpp"

namespace consensus {

// Finitely generated ideal. Zero generators are dropped at construction;
// the zero ideal is the empty generator list.
struct Ideal {
  Ideal() = default;
  Ideal(Ring ring, std::vector<Polynomial> gens);

  bool is_zero() const { return generators.empty(); }

  Ring ring;
  std::vector<Polynomial> generators;
};

// Reduced Groebner basis: monic elements, no monomial of any element
// divisible by another element's leading monomial, stored descending by
// leading monomial. Unique per ideal and order.
class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<Polynomial> elements)
      : order_(std::move(order)), elements_(std::move(elements)) {}

  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  bool empty() const { return elements_.empty(); }
  // True when the basis is {1}, i.e. the ideal is the whole ring.
  bool is_unit() const;

 private:
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
};

// Buchberger's algorithm; returns the reduced Groebner basis. S-pairs are
// processed in ascending lcm total degree and pairs with coprime leading
// monomials are skipped.
GroebnerBasis buchberger(const Ideal& gens,
                         const MonomialOrder& ord = MonomialOrder::lex());

// Minimalize and auto-reduce a Groebner basis. Throws std::invalid_argument
// if the input fails the S-pair criterion, i.e. is not a Groebner basis.
GroebnerBasis reduce_basis(std::vector<Polynomial> basis,
                           const MonomialOrder& ord);

// Zero remainder against a reduced basis.
bool ideal_membership(const Polynomial& f, const GroebnerBasis& gb);

// Emptiness of the complex variety (reduced basis equal to {1}). A nonempty
// complex variety does not guarantee real points.
bool variety_is_empty(const Ideal& gens);

// Generator-list concatenation; V(I+J) = V(I) intersect V(J).
Ideal sum_ideal(const Ideal& lhs, const Ideal& rhs);

// Reduced Groebner basis of the elimination ideal onto the `keep` variables,
// computed through a block order with the eliminated variables larger. Empty
// result means the elimination ideal is the zero ideal. `keep` must be a
// nonempty proper subset of the ring variables. The result does not depend
// on the inner order chosen for the eliminated block.
std::vector<Polynomial> elimination_ideal(
    const Ideal& gens, const std::set<std::size_t>& keep,
    MonomialOrder::Kind eliminated_inner = MonomialOrder::Kind::GrevLex);

}  // namespace consensus

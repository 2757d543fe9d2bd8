#include "consensus/groebner.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace consensus {

namespace {

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// Minimalize + auto-reduce + make monic + sort descending by LM.
// Precondition: `basis` is a Groebner basis under `ord`.
std::vector<Polynomial> reduce_to_canonical(std::vector<Polynomial> basis,
                                            const MonomialOrder& ord) {
  std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
  for (auto& g : basis) g = g.monic(ord);

  // Minimal basis: drop any element whose LM is divisible by another's.
  std::sort(basis.begin(), basis.end(), [&](const auto& a, const auto& b) {
    return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
  });
  std::vector<Polynomial> minimal;
  for (const auto& g : basis) {
    Monomial lm = g.leading_monomial(ord);
    bool redundant =
        std::any_of(minimal.begin(), minimal.end(), [&](const auto& f) {
          return f.leading_monomial(ord).divides(lm);
        });
    if (!redundant) minimal.push_back(g);
  }

  // Auto-reduce: replace each element by its remainder modulo the others.
  // Leading monomials are pairwise indivisible, so they survive reduction.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    if (!others.empty())
      minimal[i] = remainder(minimal[i], others, ord).monic(ord);
  }

  std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
    return ord.greater(a.leading_monomial(ord), b.leading_monomial(ord));
  });
  return minimal;
}

}  // namespace

Ideal::Ideal(Ring r, std::vector<Polynomial> gens) : ring(std::move(r)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!(g.ring() == ring))
      throw std::invalid_argument("generator ring mismatch");
    generators.push_back(std::move(g));
  }
}

bool GroebnerBasis::is_unit() const {
  return elements_.size() == 1 && elements_[0].is_constant() &&
         !elements_[0].is_zero();
}

GroebnerBasis buchberger(const Ideal& gens, const MonomialOrder& ord) {
  std::vector<Polynomial> basis;
  for (const auto& g : gens.generators) basis.push_back(g.monic(ord));

  struct Pair {
    int degree;  // total degree of lcm(LM_i, LM_j)
    std::size_t i, j;
    bool operator>(const Pair& o) const { return degree > o.degree; }
  };
  std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> pairs;
  auto push_pairs_for = [&](std::size_t j) {
    Monomial lm_j = basis[j].leading_monomial(ord);
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(basis[i].leading_monomial(ord), lm_j);
      pairs.push(Pair{l.degree(), i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  while (!pairs.empty()) {
    auto [deg, i, j] = pairs.top();
    pairs.pop();
    Monomial lm_i = basis[i].leading_monomial(ord);
    Monomial lm_j = basis[j].leading_monomial(ord);
    if (coprime(lm_i, lm_j)) continue;  // Buchberger's first criterion
    Polynomial s = s_polynomial(basis[i], basis[j], ord);
    Polynomial r = remainder(s, basis, ord);
    if (r.is_zero()) continue;
    basis.push_back(r.monic(ord));
    push_pairs_for(basis.size() - 1);
  }

  return GroebnerBasis(ord, reduce_to_canonical(std::move(basis), ord));
}

GroebnerBasis reduce_basis(std::vector<Polynomial> basis,
                           const MonomialOrder& ord) {
  std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Polynomial s = s_polynomial(basis[i], basis[j], ord);
      if (!remainder(s, basis, ord).is_zero())
        throw std::invalid_argument(
            "reduce_basis: input is not a Groebner basis (S-pair does not "
            "reduce to zero)");
    }
  }
  return GroebnerBasis(ord, reduce_to_canonical(std::move(basis), ord));
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.empty()) return f.is_zero();
  if (!(f.ring() == gb.elements()[0].ring()))
    throw std::invalid_argument("polynomial ring mismatch");
  return remainder(f, gb.elements(), gb.order()).is_zero();
}

bool variety_is_empty(const Ideal& gens) {
  if (gens.is_zero()) return false;  // V(<0>) is all of affine space
  return buchberger(gens, MonomialOrder::grevlex()).is_unit();
}

Ideal sum_ideal(const Ideal& lhs, const Ideal& rhs) {
  if (!(lhs.ring == rhs.ring))
    throw std::invalid_argument("ideal ring mismatch");
  std::vector<Polynomial> gens = lhs.generators;
  gens.insert(gens.end(), rhs.generators.begin(), rhs.generators.end());
  return Ideal(lhs.ring, std::move(gens));
}

std::vector<Polynomial> elimination_ideal(const Ideal& gens,
                                          const std::set<std::size_t>& keep,
                                          MonomialOrder::Kind eliminated_inner) {
  std::size_t n = gens.ring.size();
  if (keep.empty() || keep.size() >= n)
    throw std::invalid_argument(
        "keep must be a nonempty proper subset of the ring variables");
  for (std::size_t v : keep)
    if (v >= n) throw std::invalid_argument("keep variable out of range");

  std::vector<int> eliminated;
  for (std::size_t i = 0; i < n; ++i)
    if (!keep.contains(i)) eliminated.push_back(static_cast<int>(i));
  MonomialOrder ord = MonomialOrder::block(std::move(eliminated),
                                           eliminated_inner);

  GroebnerBasis gb = buchberger(gens, ord);
  std::vector<Polynomial> result;
  for (const auto& g : gb.elements()) {
    std::set<std::size_t> supp = g.support();
    if (std::all_of(supp.begin(), supp.end(),
                    [&](std::size_t v) { return keep.contains(v); }))
      result.push_back(g);
  }
  return result;
}

}  // namespace consensus

#pragma once

#include <stdexcept>
#include <vector>

#include "consensus/polynomial.hpp"

namespace consensus {

// Consensus protocol: N polynomials over N agent-state variables, driving
// the first-order dynamics dx_i/dt = f_i(x).
struct Protocol {
  Protocol() = default;
  Protocol(Ring r, std::vector<Polynomial> fs)
      : ring(std::move(r)), polys(std::move(fs)) {
    if (polys.size() != ring.size() || ring.size() == 0)
      throw std::invalid_argument(
          "protocol needs exactly one polynomial per variable");
    for (const auto& f : polys)
      if (!(f.ring() == ring))
        throw std::invalid_argument("protocol polynomial ring mismatch");
  }

  std::size_t size() const { return ring.size(); }

  bool operator==(const Protocol& other) const {
    return ring == other.ring && polys == other.polys;
  }

  Ring ring;
  std::vector<Polynomial> polys;
};

}  // namespace consensus

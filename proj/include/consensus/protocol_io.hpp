#pragma once

#include <ostream>
#include <string>

#include "consensus/parse_error.hpp"
#include "consensus/protocol.hpp"
#include "consensus/simulate.hpp"

namespace consensus {

// Canonical .protocol format:
//   vars x1 x2 x3
//   f1 = x2 - x1
//   f2 = x1 - x2
//   f3 = 0
// '#' starts a comment; blank lines are ignored; `vars` must come first and
// every f_i in 1..N must be defined exactly once. Expression precedence is
// ^ > unary - > * > binary +/-, with integer and p/q rational literals.
Protocol parse_protocol(const std::string& text);

// Single polynomial expression over an existing ring (CLI `--with` inputs).
Polynomial parse_polynomial(const std::string& expr, const Ring& ring);

// Canonical rendering; parse_protocol(format_protocol(p)) == p.
std::string format_protocol(const Protocol& p);

// CSV with header "t,x1,...,xN", 17 significant digits, and a trailing
// "# outcome: ..." comment line.
void write_trajectory_csv(const Trajectory& tr, std::ostream& out);

}  // namespace consensus

#pragma once

#include <ostream>
#include <string>

#include "ospds/ospds.hpp"

inline ospds::WeightDiagram P(const std::string& s, int t) { return ospds::parse_valid(s, t); }

namespace ospds {

// Readable values in assertion messages.
inline void PrintTo(const WeightDiagram& d, std::ostream* os) { *os << format(d) << " (t=" << d.t << ")"; }

inline void PrintTo(const Arc& a, std::ostream* os) {
  *os << "(" << a.support;
  if (a.stack_index) *os << "#" << a.stack_index;
  *os << ";";
  for (std::size_t i = 0; i < a.ends.size(); ++i) *os << (i ? "," : "") << a.ends[i];
  *os << ")";
}

inline void PrintTo(const GradedMult& g, std::ostream* os) { *os << g.str(); }

}  // namespace ospds

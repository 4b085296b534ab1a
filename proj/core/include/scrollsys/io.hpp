#pragma once

// Text form of systems and classes: L{n}({a},{b},{m1}^{r1},...).
// The printed form of a SystemSpec is canonical (multiplicities descending,
// run-length grouped) and is the key used in all reports.

#include <string>

#include "scrollsys/lattice.hpp"

namespace scrollsys {

struct parse_error : std::runtime_error {
  std::size_t position;
  parse_error(std::size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Canonical text form, e.g. "L6(0,4,3^11)", "L0(2,2)", "L3(7,0,3)".
std::string to_string(const SystemSpec& s);

// Same notation for a raw class; multiplicities are printed in canonical
// (descending) order, negative entries allowed, e.g. "L6(-6,1,0^11)".
std::string to_string(const BlowupClass& c);

// Parses the L-notation.  Accepts "m" and "m^1" alike; throws parse_error
// with the offending position.
SystemSpec parse_system(const std::string& text);
BlowupClass parse_class(const std::string& text);

}  // namespace scrollsys

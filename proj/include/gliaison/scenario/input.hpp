#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gliaison/homology/presentation.hpp"

namespace gliaison {

// Line-oriented input:
//   ring <p> <v1> <v2> ...          first statement
//   modulus <poly>                  optional hypersurface
//   ideal <name>                    followed by one polynomial per line
//   matrix <name> <rows> <cols>     followed by rows, entries separated by commas
//   module <name> twists(a1,...)    generator degrees a_i, followed by one
//                                   comma-separated relation row per generator
// '#' starts a comment; blank lines are ignored. Matrix degrees are inferred
// from the entries, with first target degree 0.
struct InputDocument {
  RingPtr ring;
  std::optional<Polynomial> modulus;
  std::map<std::string, std::vector<Polynomial>> ideals;
  std::map<std::string, GradedMap> matrices;
  std::map<std::string, ModulePresentation> modules;
  std::vector<std::string> order;  // block names in input order

  Ring context() const { return modulus ? Ring(ring, *modulus) : Ring(ring); }
};

// Throws ParseError with the line (and column when known) of the problem.
InputDocument parse_input(std::string_view text);

}  // namespace gliaison

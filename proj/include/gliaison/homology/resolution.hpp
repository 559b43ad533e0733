#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gliaison/homology/presentation.hpp"

namespace gliaison {

// beta_{i,j}: number of degree-j generators of the i-th free module.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(std::map<std::pair<int, int>, int> entries);

  int at(int i, int j) const;
  const std::map<std::pair<int, int>, int>& entries() const { return entries_; }
  // Largest homological index with a nonzero entry; -1 when empty.
  int length() const;
  int total(int i) const;
  std::vector<int> totals() const;
  // Degrees shifted by s (the table of M(-s)).
  BettiTable shifted(int s) const;
  // beta_{i,j} == beta_{c-i, sigma-j} for the c = length() and sigma fixed by the ends.
  bool is_symmetric() const;
  bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }
  bool operator!=(const BettiTable& o) const { return !(*this == o); }

  // Rows indexed by j - i, in the usual display layout.
  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, int> entries_;
};

// Minimal graded free resolution F_0 <- F_1 <- ... over the module's ring.
// Over P it is finite; over R_X it is truncated at the requested length.
struct FreeResolution {
  Ring ring;
  std::vector<Degrees> modules;  // F_0 .. F_n
  std::vector<GradedMap> maps;   // maps[i] : F_{i+1} -> F_i
  bool complete = false;         // the last kernel was zero

  int length() const;
  BettiTable betti() const;
  // Every composition of consecutive maps vanishes (modulo f).
  bool is_complex() const;
  // sum_i (-1)^i sum_j beta_{i,j} t^j
  LaurentPoly euler_numerator() const;
};

FreeResolution resolve(const ModulePresentation& M, int max_length = -1);
// Resolution of R/I over the given ring.
FreeResolution resolve_quotient(const Ring& ring, const GradedIdeal& I, int max_length = -1);

// Projective dimension over P and depth = v - pd (Auslander-Buchsbaum).
std::pair<int, int> pd_and_depth(const ModulePresentation& M);

// Minimal presentation (kernel of the map from the minimal free cover).
ModulePresentation minimal_presentation(const ModulePresentation& M);

}  // namespace gliaison

#pragma once

#include <map>
#include <optional>

#include "gliaison/liaison/subscheme.hpp"

namespace gliaison {

using HilbertTable = std::map<int, long long>;

// M_C = H^1_*(I_C), a finite-length module over P.
struct RaoModule {
  ModulePresentation module;
  HilbertTable hilbert;
  BettiTable betti;  // minimal Betti numbers of the module over P

  bool is_zero() const { return hilbert.empty(); }
};

// Throws UsageError unless C is a curve.
RaoModule rao_module(const Subscheme& C);
// Wraps a finite-length module given directly.
RaoModule rao_record(const ModulePresentation& M);

// h with b(n + h) = a(n) for all n; zero tables are translates by 0.
std::optional<int> table_translate(const HilbertTable& a, const HilbertTable& b);
// h with b(n) = a(h - n) for all n, i.e. b is a translate of the reversal of a.
std::optional<int> table_reversed_translate(const HilbertTable& a, const HilbertTable& b);
HilbertTable reversed(const HilbertTable& a);

// Shift h when M2 looks like M1(-h): translated Hilbert function and Betti
// table. A necessary condition for isomorphism up to shift, used as a proxy.
std::optional<int> rao_shift_equivalent(const RaoModule& m1, const RaoModule& m2);

}  // namespace gliaison

#include "gliaison/liaison/rao.hpp"

#include "gliaison/errors.hpp"
#include "gliaison/homology/ext.hpp"

namespace gliaison {

RaoModule rao_record(const ModulePresentation& M) {
  ModulePresentation A = M.over_ambient();
  if (A.is_zero()) return RaoModule{ModulePresentation::free(A.ring(), {}), {}, {}};
  HilbertTable h = finite_hilbert_function(A);
  ModulePresentation mp = minimal_presentation(A);
  return RaoModule{mp, h, resolve(mp).betti()};
}

RaoModule rao_module(const Subscheme& C) {
  if (C.dimension() != 1) throw UsageError("rao_module needs a curve");
  CohomologyModule h = ideal_sheaf_cohomology(C.ideal(), 1);
  if (!h.finite_length) throw DomainError("H^1_*(I_C) is not of finite length; C is not locally CM");
  return rao_record(h.module);
}

std::optional<int> table_translate(const HilbertTable& a, const HilbertTable& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.empty()) return 0;
  int h = b.begin()->first - a.begin()->first;
  for (auto [n, v] : a) {
    auto it = b.find(n + h);
    if (it == b.end() || it->second != v) return std::nullopt;
  }
  return h;
}

HilbertTable reversed(const HilbertTable& a) {
  HilbertTable out;
  for (auto [n, v] : a) out[-n] = v;
  return out;
}

std::optional<int> table_reversed_translate(const HilbertTable& a, const HilbertTable& b) {
  return table_translate(reversed(a), b);
}

std::optional<int> rao_shift_equivalent(const RaoModule& m1, const RaoModule& m2) {
  auto h = table_translate(m1.hilbert, m2.hilbert);
  if (!h) return std::nullopt;
  if (m1.betti.shifted(*h) != m2.betti) return std::nullopt;
  return h;
}

}  // namespace gliaison

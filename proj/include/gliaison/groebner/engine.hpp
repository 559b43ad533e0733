#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gliaison/kernel/field.hpp"
#include "gliaison/kernel/monomial.hpp"

namespace gliaison {

struct ModuleTerm {
  Coeff coeff;
  Monomial mono;
  std::uint32_t comp;
};

// Terms sorted descending under the TermOrder the vector was built for.
using SparseVector = std::vector<ModuleTerm>;

// Term order on free-module terms m*e_i.
//  1. position block: components below `position_split` dominate all others
//  2. degree in the eliminated variables (block elimination order)
//  3. total degree deg(m) + deg(e_i)
//  4. grevlex on m
//  5. lower component index is larger
// With split 0 and no eliminated variables this is the degree-compatible
// term-over-position order used for all homogeneous work.
class TermOrder {
 public:
  TermOrder() = default;
  explicit TermOrder(std::vector<int> component_degrees, std::uint32_t position_split = 0,
                     VariableMask eliminate = 0);

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (split_) {
      bool ha = ca < split_, hb = cb < split_;
      if (ha != hb) return ha ? 1 : -1;
    }
    if (eliminate_) {
      unsigned ea = a.masked_degree(eliminate_), eb = b.masked_degree(eliminate_);
      if (ea != eb) return ea > eb ? 1 : -1;
    }
    int da = static_cast<int>(a.degree()) + degrees_[ca];
    int db = static_cast<int>(b.degree()) + degrees_[cb];
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = kMaxVariables; i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int compare(const ModuleTerm& a, const ModuleTerm& b) const {
    return compare(a.mono, a.comp, b.mono, b.comp);
  }
  int term_degree(const Monomial& m, std::uint32_t comp) const {
    return static_cast<int>(m.degree()) + degrees_[comp];
  }

  std::size_t rank() const { return degrees_.size(); }
  const std::vector<int>& component_degrees() const { return degrees_; }
  std::uint32_t position_split() const { return split_; }
  VariableMask eliminated() const { return eliminate_; }

 private:
  std::vector<int> degrees_;
  std::uint32_t split_ = 0;
  VariableMask eliminate_ = 0;
};

// Order in which S-pairs of equal sugar are processed. Both produce the same
// reduced basis; the alternative exists to test exactly that.
enum class PairStrategy { SmallestLcmFirst, LargestLcmFirst };

struct EngineOptions {
  PairStrategy strategy = PairStrategy::SmallestLcmFirst;
};

struct EngineStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

// Reduced Groebner basis of a submodule of a free module over GF(p)[x].
// Inputs are processed degree by degree (sugar for inhomogeneous input);
// the first `forced` inputs are processed ahead of the rest in each degree
// and never counted as minimal generators.
class ModuleGroebnerBasis {
 public:
  static ModuleGroebnerBasis compute(const PrimeField& field, const TermOrder& order,
                                     std::vector<SparseVector> inputs, std::size_t forced = 0,
                                     EngineOptions options = {});

  const TermOrder& order() const { return order_; }
  // Monic, interreduced, sorted by leading term ascending.
  const std::vector<SparseVector>& elements() const { return elements_; }
  // For every input (forced ones always false): nonzero modulo everything
  // processed before it, i.e. part of a minimal generating set when homogeneous.
  const std::vector<bool>& minimal_inputs() const { return minimal_; }
  const EngineStats& stats() const { return stats_; }

  SparseVector normal_form(const SparseVector& v) const;
  bool reduces_to_zero(const SparseVector& v) const { return normal_form(v).empty(); }

 private:
  PrimeField field_{};
  TermOrder order_;
  std::vector<SparseVector> elements_;
  std::vector<std::vector<std::uint32_t>> lead_index_;  // per component
  std::vector<bool> minimal_;
  EngineStats stats_;
};

// Utilities on sparse vectors under a fixed order.
SparseVector sparse_add(const PrimeField& F, const TermOrder& order, const SparseVector& a,
                        const SparseVector& b, Coeff scale_b);
void sort_sparse(const PrimeField& F, const TermOrder& order, SparseVector& v);

}  // namespace gliaison

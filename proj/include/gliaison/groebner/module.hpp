#pragma once

#include <optional>
#include <vector>

#include "gliaison/groebner/engine.hpp"
#include "gliaison/groebner/hilbert.hpp"
#include "gliaison/kernel/ring.hpp"

namespace gliaison {

// Dense vector of a free module; one polynomial per component.
using Column = std::vector<Polynomial>;

SparseVector to_sparse(const Column& col, const TermOrder& order, const PrimeField& F,
                       std::uint32_t offset = 0);
Column to_column(const RingPtr& ring, const SparseVector& v, std::size_t rank,
                 std::uint32_t offset = 0);

// Degree of a homogeneous column relative to component degrees; nullopt for
// zero columns; throws UsageError when the column is not homogeneous.
std::optional<int> column_degree(const Column& col, const std::vector<int>& degrees);

// Entries reduced modulo the ring's hypersurface (identity over P).
Polynomial reduce_mod(const Ring& ring, const Polynomial& p);
Column reduce_mod(const Ring& ring, const Column& col);

// Groebner basis of a submodule M of F = sum P(-d_i); over R_X the
// submodule f*F is adjoined, so the quotient F/M is the R_X-module F/(M + fF).
class SubmoduleBasis {
 public:
  SubmoduleBasis(const Ring& ring, std::vector<int> degrees, const std::vector<Column>& gens,
                 EngineOptions options = {});

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return degrees_.size(); }
  const std::vector<int>& degrees() const { return degrees_; }
  const ModuleGroebnerBasis& basis() const { return gb_; }

  std::vector<Column> elements() const;
  Column normal_form(const Column& v) const;
  bool contains(const Column& v) const;
  // Flags over the given generators: true for a minimal generating subset
  // of M + fF modulo fF.
  std::vector<bool> minimal_flags() const;
  // Lead monomials of the basis, grouped by component.
  std::vector<std::vector<Monomial>> leading_monomials() const;
  HilbertSeries quotient_hilbert_series() const;

 private:
  Ring ring_;
  std::vector<int> degrees_;
  std::size_t forced_;
  ModuleGroebnerBasis gb_;
  std::vector<bool> minimal_;
};

// Minimal generating subset of the given columns (over the ring of `ring`).
std::vector<Column> minimal_columns(const Ring& ring, const std::vector<int>& degrees,
                                    const std::vector<Column>& gens,
                                    std::vector<std::size_t>* kept = nullptr);

// Minimal generators of {a : sum_k a_k g_k = 0 in F (modulo fF over R_X)},
// entries reduced modulo f. Source degree k must equal the degree of g_k.
std::vector<Column> syzygy_columns(const Ring& ring, const std::vector<int>& target_degrees,
                                   const std::vector<int>& source_degrees,
                                   const std::vector<Column>& gens);

// Expresses vectors as combinations of fixed generators (modulo fF over R_X).
class Lifter {
 public:
  Lifter(const Ring& ring, std::vector<int> target_degrees, std::vector<int> source_degrees,
         const std::vector<Column>& gens);
  std::optional<Column> lift(const Column& v) const;

 private:
  Ring ring_;
  std::size_t rank_;
  std::size_t ngens_;
  std::optional<ModuleGroebnerBasis> gb_;
};

}  // namespace gliaison

#include "gliaison/groebner/module.hpp"

#include "gliaison/errors.hpp"

namespace gliaison {

SparseVector to_sparse(const Column& col, const TermOrder& order, const PrimeField& F,
                       std::uint32_t offset) {
  SparseVector v;
  for (std::size_t i = 0; i < col.size(); ++i)
    for (auto& t : col[i].terms())
      v.push_back(ModuleTerm{t.coeff, t.mono, static_cast<std::uint32_t>(i) + offset});
  sort_sparse(F, order, v);
  return v;
}

Column to_column(const RingPtr& ring, const SparseVector& v, std::size_t rank, std::uint32_t offset) {
  std::vector<std::vector<Term>> parts(rank);
  for (auto& t : v) {
    if (t.comp < offset) continue;
    std::size_t c = t.comp - offset;
    if (c >= rank) continue;
    parts[c].push_back(Term{t.coeff, t.mono});
  }
  Column col;
  col.reserve(rank);
  for (auto& p : parts) col.emplace_back(ring, std::move(p));
  return col;
}

std::optional<int> column_degree(const Column& col, const std::vector<int>& degrees) {
  if (col.size() != degrees.size()) throw UsageError("column length does not match the free module");
  std::optional<int> d;
  for (std::size_t i = 0; i < col.size(); ++i) {
    for (auto& t : col[i].terms()) {
      int e = static_cast<int>(t.mono.degree()) + degrees[i];
      if (d && *d != e) throw UsageError("column is not homogeneous");
      d = e;
    }
  }
  return d;
}

Polynomial reduce_mod(const Ring& ring, const Polynomial& p) {
  if (!ring.has_modulus() || p.is_zero()) return p;
  const Polynomial& f = ring.modulus();  // monic
  const Monomial lm = f.leading_term().mono;
  const PrimeField& F = ring.field();
  std::vector<Term> rem;
  Polynomial h = p;
  while (!h.is_zero()) {
    const Term lt = h.leading_term();
    if (lm.divides(lt.mono)) {
      h -= f.times_term(lt.coeff, lt.mono / lm);
    } else {
      rem.push_back(lt);
      h -= ring.poly().monomial(lt.mono, lt.coeff);
    }
  }
  (void)F;
  return Polynomial::from_sorted(ring.ambient(), std::move(rem));
}

Column reduce_mod(const Ring& ring, const Column& col) {
  Column out;
  out.reserve(col.size());
  for (auto& p : col) out.push_back(reduce_mod(ring, p));
  return out;
}

namespace {

std::vector<SparseVector> forced_inputs(const Ring& ring, const TermOrder& order, std::size_t rank,
                                        std::uint32_t offset) {
  std::vector<SparseVector> out;
  if (!ring.has_modulus()) return out;
  for (std::size_t i = 0; i < rank; ++i) {
    Column c(rank);
    c[i] = ring.modulus();
    out.push_back(to_sparse(c, order, ring.field(), offset));
  }
  return out;
}

}  // namespace

SubmoduleBasis::SubmoduleBasis(const Ring& ring, std::vector<int> degrees,
                               const std::vector<Column>& gens, EngineOptions options)
    : ring_(ring), degrees_(std::move(degrees)) {
  TermOrder order(degrees_);
  std::vector<SparseVector> inputs = forced_inputs(ring_, order, degrees_.size(), 0);
  forced_ = inputs.size();
  for (auto& g : gens) {
    if (g.size() != degrees_.size()) throw UsageError("generator length does not match the free module");
    inputs.push_back(to_sparse(g, order, ring_.field()));
  }
  gb_ = ModuleGroebnerBasis::compute(ring_.field(), order, std::move(inputs), forced_, options);
  minimal_.assign(gb_.minimal_inputs().begin() + static_cast<std::ptrdiff_t>(forced_),
                  gb_.minimal_inputs().end());
}

std::vector<Column> SubmoduleBasis::elements() const {
  std::vector<Column> out;
  for (auto& e : gb_.elements()) out.push_back(to_column(ring_.ambient(), e, rank()));
  return out;
}

Column SubmoduleBasis::normal_form(const Column& v) const {
  if (v.size() != rank()) throw UsageError("vector length does not match the free module");
  return to_column(ring_.ambient(), gb_.normal_form(to_sparse(v, gb_.order(), ring_.field())), rank());
}

bool SubmoduleBasis::contains(const Column& v) const {
  if (v.size() != rank()) throw UsageError("vector length does not match the free module");
  return gb_.reduces_to_zero(to_sparse(v, gb_.order(), ring_.field()));
}

std::vector<bool> SubmoduleBasis::minimal_flags() const { return minimal_; }

std::vector<std::vector<Monomial>> SubmoduleBasis::leading_monomials() const {
  std::vector<std::vector<Monomial>> out(rank());
  for (auto& e : gb_.elements()) out[e[0].comp].push_back(e[0].mono);
  return out;
}

HilbertSeries SubmoduleBasis::quotient_hilbert_series() const {
  auto leads = leading_monomials();
  LaurentPoly num;
  for (std::size_t i = 0; i < rank(); ++i) {
    LaurentPoly part = monomial_quotient_numerator(leads[i], ring_.nvars());
    for (auto& [e, c] : part) num[e + degrees_[i]] += c;
  }
  return HilbertSeries(std::move(num), ring_.nvars());
}

std::vector<Column> minimal_columns(const Ring& ring, const std::vector<int>& degrees,
                                    const std::vector<Column>& gens, std::vector<std::size_t>* kept) {
  SubmoduleBasis sb(ring, degrees, gens);
  auto flags = sb.minimal_flags();
  std::vector<Column> out;
  if (kept) kept->clear();
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (flags[k]) {
      out.push_back(reduce_mod(ring, gens[k]));
      if (kept) kept->push_back(k);
    }
  return out;
}

std::vector<Column> syzygy_columns(const Ring& ring, const std::vector<int>& target_degrees,
                                   const std::vector<int>& source_degrees,
                                   const std::vector<Column>& gens) {
  const std::size_t r = target_degrees.size();
  const std::size_t m = gens.size();
  if (source_degrees.size() != m) throw UsageError("source degrees do not match generators");
  if (m == 0) return {};
  std::vector<int> degs = target_degrees;
  degs.insert(degs.end(), source_degrees.begin(), source_degrees.end());
  TermOrder order(degs, static_cast<std::uint32_t>(r));
  const PrimeField& F = ring.field();
  std::vector<SparseVector> inputs = forced_inputs(ring, order, r, 0);
  std::size_t forced = inputs.size();
  for (std::size_t k = 0; k < m; ++k) {
    if (gens[k].size() != r) throw UsageError("generator length does not match target");
    auto d = column_degree(gens[k], target_degrees);
    if (d && *d != source_degrees[k]) throw UsageError("source degree does not match generator degree");
    SparseVector v = to_sparse(gens[k], order, F);
    v.push_back(ModuleTerm{1, Monomial(), static_cast<std::uint32_t>(r + k)});
    sort_sparse(F, order, v);
    inputs.push_back(std::move(v));
  }
  auto gb = ModuleGroebnerBasis::compute(F, order, std::move(inputs), forced);
  std::vector<Column> syz;
  for (auto& e : gb.elements())
    if (e[0].comp >= r) syz.push_back(to_column(ring.ambient(), e, m, static_cast<std::uint32_t>(r)));
  return minimal_columns(ring, source_degrees, syz);
}

Lifter::Lifter(const Ring& ring, std::vector<int> target_degrees, std::vector<int> source_degrees,
               const std::vector<Column>& gens)
    : ring_(ring), rank_(target_degrees.size()), ngens_(gens.size()) {
  if (source_degrees.size() != gens.size()) throw UsageError("source degrees do not match generators");
  std::vector<int> degs = target_degrees;
  degs.insert(degs.end(), source_degrees.begin(), source_degrees.end());
  TermOrder order(degs, static_cast<std::uint32_t>(rank_));
  const PrimeField& F = ring.field();
  std::vector<SparseVector> inputs = forced_inputs(ring, order, rank_, 0);
  std::size_t forced = inputs.size();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].size() != rank_) throw UsageError("generator length does not match target");
    SparseVector v = to_sparse(gens[k], order, F);
    v.push_back(ModuleTerm{1, Monomial(), static_cast<std::uint32_t>(rank_ + k)});
    sort_sparse(F, order, v);
    inputs.push_back(std::move(v));
  }
  gb_ = ModuleGroebnerBasis::compute(F, order, std::move(inputs), forced);
}

std::optional<Column> Lifter::lift(const Column& v) const {
  if (v.size() != rank_) throw UsageError("vector length does not match target");
  const TermOrder& order = gb_->order();
  SparseVector r = gb_->normal_form(to_sparse(v, order, ring_.field()));
  for (auto& t : r)
    if (t.comp < rank_) return std::nullopt;
  Column c = to_column(ring_.ambient(), r, ngens_, static_cast<std::uint32_t>(rank_));
  for (auto& p : c) p = reduce_mod(ring_, -p);
  return c;
}

}  // namespace gliaison

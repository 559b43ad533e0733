#include "gliaison/homology/presentation.hpp"

#include <algorithm>

#include "gliaison/errors.hpp"

namespace gliaison {

Degrees negated(const Degrees& d) {
  Degrees out;
  for (int x : d) out.push_back(-x);
  return out;
}

Degrees concat(const Degrees& a, const Degrees& b) {
  Degrees out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Degrees shifted(const Degrees& d, int s) {
  Degrees out;
  for (int x : d) out.push_back(x + s);
  return out;
}

GradedMap::GradedMap(Ring ring, Degrees target, Degrees source, Matrix matrix)
    : ring_(std::move(ring)), target_(std::move(target)), source_(std::move(source)) {
  if (!matrix.ring()) matrix = Matrix(ring_.ambient(), target_.size(), source_.size());
  if (matrix.ring() != ring_.ambient()) throw UsageError("matrix belongs to a different ring");
  if (matrix.rows() != target_.size() || matrix.cols() != source_.size())
    throw UsageError("matrix shape does not match the free modules");
  matrix_ = reduce_mod(ring_, matrix);
  for (std::size_t i = 0; i < target_.size(); ++i)
    for (std::size_t j = 0; j < source_.size(); ++j) {
      const Polynomial& p = matrix_(i, j);
      if (p.is_zero()) continue;
      if (!p.is_homogeneous() || p.degree() != source_[j] - target_[i])
        throw UsageError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") has the wrong degree for a graded map: " + p.to_string());
    }
}

GradedMap GradedMap::zero(const Ring& ring, Degrees target, Degrees source) {
  Matrix m(ring.ambient(), target.size(), source.size());
  return GradedMap(ring, std::move(target), std::move(source), std::move(m));
}

GradedMap GradedMap::identity(const Ring& ring, const Degrees& d) {
  return GradedMap(ring, d, d, Matrix::identity(ring.ambient(), d.size()));
}

GradedMap GradedMap::dual() const {
  return GradedMap(ring_, negated(source_), negated(target_), matrix_.transpose());
}

GradedMap GradedMap::compose(const GradedMap& inner) const {
  if (inner.ring_ != ring_) throw UsageError("maps over different rings");
  if (inner.target_ != source_) throw UsageError("maps do not compose");
  return GradedMap(ring_, target_, inner.source_, matrix_ * inner.matrix_);
}

ModulePresentation::ModulePresentation(GradedMap relations) : relations_(std::move(relations)) {}

ModulePresentation ModulePresentation::free(const Ring& ring, Degrees degrees) {
  return ModulePresentation(GradedMap::zero(ring, std::move(degrees), {}));
}

ModulePresentation ModulePresentation::cyclic_quotient(const Ring& ring, const GradedIdeal& I) {
  if (I.ring() != ring.ambient()) throw UsageError("ideal belongs to a different ring");
  std::vector<Column> cols;
  for (auto& g : I.minimal_generators()) cols.push_back({g});
  cols = minimal_columns(ring, {0}, cols);
  Degrees src;
  for (auto& c : cols) src.push_back(c[0].degree());
  return ModulePresentation(GradedMap(ring, {0}, src, Matrix::from_columns(ring.ambient(), 1, cols)));
}

ModulePresentation ModulePresentation::ideal_module(const Ring& ring, const GradedIdeal& I) {
  if (I.ring() != ring.ambient()) throw UsageError("ideal belongs to a different ring");
  std::vector<Column> cols;
  for (auto& g : I.minimal_generators()) cols.push_back({g});
  cols = minimal_columns(ring, {0}, cols);
  Degrees degs;
  std::vector<Polynomial> row;
  for (auto& c : cols) {
    degs.push_back(c[0].degree());
    row.push_back(c[0]);
  }
  auto syz = syzygy_columns(ring, {0}, degs, cols);
  Degrees src;
  for (auto& s : syz) src.push_back(*column_degree(s, degs));
  return ModulePresentation(GradedMap(ring, degs, src, Matrix::from_columns(ring.ambient(), degs.size(), syz)));
}

HilbertSeries ModulePresentation::hilbert_series() const {
  SubmoduleBasis sb(ring(), degrees(), relations_.matrix().columns());
  return sb.quotient_hilbert_series();
}

bool ModulePresentation::is_zero() const {
  return num_generators() == 0 || hilbert_series().is_zero();
}

ModulePresentation ModulePresentation::twisted(int a) const {
  return ModulePresentation(GradedMap(ring(), shifted(degrees(), -a),
                                      shifted(relations_.source(), -a), relations_.matrix()));
}

ModulePresentation ModulePresentation::over_ambient() const {
  if (!ring().has_modulus()) return *this;
  Ring P = ring().without_modulus();
  std::size_t n = num_generators();
  Matrix m = relations_.matrix().hconcat(Matrix::scalar(ring().ambient(), n, ring().modulus()));
  Degrees src = concat(relations_.source(), shifted(degrees(), ring().modulus_degree()));
  return ModulePresentation(GradedMap(P, degrees(), src, m));
}

ModulePresentation ModulePresentation::over(const Ring& r) const {
  if (r.ambient() != ring().ambient()) throw UsageError("contexts over different polynomial rings");
  return ModulePresentation(GradedMap(r, degrees(), relations_.source(), relations_.matrix()));
}

std::string ModulePresentation::describe() const {
  std::string s = "coker over " + ring().describe() + " with generator degrees [";
  for (std::size_t i = 0; i < degrees().size(); ++i) s += (i ? "," : "") + std::to_string(degrees()[i]);
  return s + "] and " + std::to_string(relations_.source().size()) + " relations";
}

namespace {

struct UnitElimination {
  std::vector<bool> alive_row;
  std::vector<bool> alive_col;
  std::vector<Column> cols;
  std::vector<Column> expr;  // original generator g in current coordinates
};

UnitElimination eliminate_units(const Ring& ring, std::size_t n, std::vector<Column> cols) {
  const PrimeField& F = ring.field();
  UnitElimination u{std::vector<bool>(n, true), std::vector<bool>(cols.size(), true), std::move(cols), {}};
  for (std::size_t g = 0; g < n; ++g) {
    Column e(n, ring.poly().zero());
    e[g] = ring.poly().one();
    u.expr.push_back(std::move(e));
  }
  for (;;) {
    // pivot: a constant entry, preferring the sparsest column
    std::size_t pi = n, pj = u.cols.size(), best = 0;
    for (std::size_t j = 0; j < u.cols.size(); ++j) {
      if (!u.alive_col[j]) continue;
      std::size_t nnz = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (u.alive_row[i] && !u.cols[j][i].is_zero()) ++nnz;
      if (pj != u.cols.size() && nnz >= best) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (u.alive_row[i] && u.cols[j][i].is_unit()) {
          pi = i;
          pj = j;
          best = nnz;
          break;
        }
    }
    if (pj == u.cols.size()) break;
    const Column pivot = u.cols[pj];
    Coeff inv = F.inv(pivot[pi].leading_term().coeff);
    auto eliminate_in = [&](Column& c) {
      if (c[pi].is_zero()) return;
      Polynomial factor = c[pi].scaled(inv);
      for (std::size_t k = 0; k < n; ++k)
        if (u.alive_row[k] && k != pi && !pivot[k].is_zero())
          c[k] = reduce_mod(ring, c[k] - factor * pivot[k]);
      c[pi] = ring.poly().zero();
    };
    for (std::size_t j = 0; j < u.cols.size(); ++j)
      if (u.alive_col[j] && j != pj) eliminate_in(u.cols[j]);
    for (auto& e : u.expr) eliminate_in(e);
    u.alive_col[pj] = false;
    u.alive_row[pi] = false;
  }
  return u;
}

}  // namespace

Matrix prune_units(const Ring& ring, const Matrix& m) {
  UnitElimination u = eliminate_units(ring, m.rows(), m.columns());
  std::vector<Column> out;
  for (std::size_t j = 0; j < u.cols.size(); ++j) {
    if (!u.alive_col[j]) continue;
    Column c;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (u.alive_row[i]) c.push_back(u.cols[j][i]);
    out.push_back(std::move(c));
  }
  std::size_t rows = 0;
  for (bool b : u.alive_row) rows += b;
  return Matrix::from_columns(ring.ambient(), rows, out);
}

PrunedPresentation prune(const ModulePresentation& M) {
  const Ring& ring = M.ring();
  const std::size_t n = M.num_generators();
  UnitElimination u = eliminate_units(ring, n, M.relations().matrix().columns());
  const Degrees& src = M.relations().source();
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (u.alive_row[i]) kept.push_back(i);
  Degrees tgt;
  for (auto i : kept) tgt.push_back(M.degrees()[i]);
  std::vector<Column> new_cols;
  Degrees new_src;
  for (std::size_t j = 0; j < u.cols.size(); ++j) {
    if (!u.alive_col[j]) continue;
    Column c;
    bool nonzero = false;
    for (auto i : kept) {
      c.push_back(u.cols[j][i]);
      nonzero = nonzero || !u.cols[j][i].is_zero();
    }
    if (!nonzero) continue;
    new_cols.push_back(std::move(c));
    new_src.push_back(src[j]);
  }
  Matrix T(ring.ambient(), kept.size(), n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t r = 0; r < kept.size(); ++r) T.at(r, g) = u.expr[g][kept[r]];
  ModulePresentation out(GradedMap(ring, tgt, new_src, Matrix::from_columns(ring.ambient(), tgt.size(), new_cols)));
  return PrunedPresentation{std::move(out), std::move(kept), std::move(T)};
}

PrunedPresentation minimize(const ModulePresentation& M) {
  PrunedPresentation p = prune(M);
  const ModulePresentation& Q = p.module;
  std::vector<std::size_t> keep;
  auto cols = minimal_columns(Q.ring(), Q.degrees(), Q.relations().matrix().columns(), &keep);
  Degrees src;
  for (auto k : keep) src.push_back(Q.relations().source()[k]);
  p.module = ModulePresentation(
      GradedMap(Q.ring(), Q.degrees(), src, Matrix::from_columns(Q.ring().ambient(), Q.degrees().size(), cols)));
  return p;
}

Subquotient subquotient(const Ring& ring, const Degrees& ambient, const Matrix& gens,
                        const Degrees& gen_degrees, const Matrix& rels, const Degrees& rel_degrees) {
  const std::size_t k = gens.cols();
  if (gen_degrees.size() != k || rel_degrees.size() != rels.cols())
    throw UsageError("degree lists do not match the matrices");
  Matrix all = gens.hconcat(rels);
  Degrees degs = concat(gen_degrees, rel_degrees);
  std::vector<Column> projected;
  Degrees src;
  if (k > 0) {
    for (auto& s : syzygy_columns(ring, ambient, degs, all.columns())) {
      Column c(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
      auto d = column_degree(c, gen_degrees);
      if (!d) continue;
      projected.push_back(std::move(c));
      src.push_back(*d);
    }
  }
  ModulePresentation P(GradedMap(ring, gen_degrees, src, Matrix::from_columns(ring.ambient(), k, projected)));
  PrunedPresentation m = minimize(P);
  return Subquotient{std::move(m.module), gens.select_columns(m.kept)};
}

GradedMap kernel(const GradedMap& map) {
  auto syz = syzygy_columns(map.ring(), map.target(), map.source(), map.matrix().columns());
  Degrees degs;
  for (auto& s : syz) degs.push_back(*column_degree(s, map.source()));
  return GradedMap(map.ring(), map.source(), degs,
                   Matrix::from_columns(map.ring().ambient(), map.source().size(), syz));
}

bool is_well_defined(const ModuleMap& h) {
  const auto& N = h.target;
  SubmoduleBasis sb(N.ring(), N.degrees(), N.relations().matrix().columns());
  Matrix img = h.matrix * h.source.relations().matrix();
  for (auto& c : img.columns())
    if (!sb.contains(c)) return false;
  return true;
}

Subquotient kernel(const ModuleMap& h) {
  const auto& M = h.source;
  const auto& N = h.target;
  const Ring& ring = M.ring();
  std::size_t k = M.num_generators();
  Matrix all = h.matrix.hconcat(N.relations().matrix());
  Degrees degs = concat(M.degrees(), N.relations().source());
  std::vector<Column> gens;
  Degrees gdeg;
  if (k > 0) {
    for (auto& s : syzygy_columns(ring, N.degrees(), degs, all.columns())) {
      Column c(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
      auto d = column_degree(c, M.degrees());
      if (!d) continue;
      gens.push_back(std::move(c));
      gdeg.push_back(*d);
    }
  }
  return subquotient(ring, M.degrees(), Matrix::from_columns(ring.ambient(), k, gens), gdeg,
                     M.relations().matrix(), M.relations().source());
}

Subquotient image(const ModuleMap& h) {
  const auto& N = h.target;
  return subquotient(N.ring(), N.degrees(), h.matrix, h.source.degrees(), N.relations().matrix(),
                     N.relations().source());
}

ModulePresentation cokernel(const ModuleMap& h) {
  const auto& N = h.target;
  Matrix m = N.relations().matrix().hconcat(h.matrix);
  return ModulePresentation(GradedMap(N.ring(), N.degrees(), concat(N.relations().source(), h.source.degrees()), m));
}

ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b) {
  if (a.ring() != b.ring()) throw UsageError("modules over different rings");
  return ModulePresentation(GradedMap(a.ring(), concat(a.degrees(), b.degrees()),
                                      concat(a.relations().source(), b.relations().source()),
                                      direct_sum(a.relations().matrix(), b.relations().matrix())));
}

ModulePresentation fibered_sum(const ModulePresentation& a, const ModulePresentation& b,
                               const ModulePresentation& c, const Matrix& f1, const Matrix& f2) {
  if (f1.rows() != b.num_generators() || f1.cols() != a.num_generators() ||
      f2.rows() != c.num_generators() || f2.cols() != a.num_generators())
    throw UsageError("fibered sum maps have the wrong shape");
  Matrix rel = direct_sum(b.relations().matrix(), c.relations().matrix()).hconcat(f1.vconcat(-f2));
  Degrees src = concat(concat(b.relations().source(), c.relations().source()), a.degrees());
  return ModulePresentation(GradedMap(a.ring(), concat(b.degrees(), c.degrees()), src, rel));
}

GradedIdeal annihilator(const ModulePresentation& M) {
  const Ring& ring = M.ring();
  const RingPtr& P = ring.ambient();
  std::optional<GradedIdeal> acc;
  const std::size_t n = M.num_generators();
  for (std::size_t i = 0; i < n; ++i) {
    Column e(n, P->zero());
    e[i] = P->one();
    Matrix all = Matrix::from_columns(P, n, {e}).hconcat(M.relations().matrix());
    Degrees degs = concat({M.degrees()[i]}, M.relations().source());
    std::vector<Polynomial> gens;
    for (auto& s : syzygy_columns(ring, M.degrees(), degs, all.columns())) gens.push_back(s[0]);
    if (ring.has_modulus()) gens.push_back(ring.modulus());
    GradedIdeal ann(P, gens);
    acc = acc ? intersect(*acc, ann) : ann;
  }
  return acc ? *acc : GradedIdeal::unit(P);
}

Column random_module_element(const ModulePresentation& M, int d, SeedStream& rng) {
  Column v;
  for (int g : M.degrees()) v.push_back(reduce_mod(M.ring(), random_homogeneous(M.ring().ambient(), d - g, rng)));
  return v;
}

bool is_zero_element(const ModulePresentation& M, const Column& v) {
  SubmoduleBasis sb(M.ring(), M.degrees(), M.relations().matrix().columns());
  return sb.contains(v);
}

}  // namespace gliaison

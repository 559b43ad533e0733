#include "gliaison/groebner/engine.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "gliaison/errors.hpp"

namespace gliaison {

TermOrder::TermOrder(std::vector<int> component_degrees, std::uint32_t position_split,
                     VariableMask eliminate)
    : degrees_(std::move(component_degrees)), split_(position_split), eliminate_(eliminate) {}

SparseVector sparse_add(const PrimeField& F, const TermOrder& order, const SparseVector& a,
                        const SparseVector& b, Coeff scale_b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = order.compare(a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(ModuleTerm{F.mul(scale_b, b[j].coeff), b[j].mono, b[j].comp});
      ++j;
    } else {
      Coeff v = F.add(a[i].coeff, F.mul(scale_b, b[j].coeff));
      if (v) out.push_back(ModuleTerm{v, a[i].mono, a[i].comp});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(ModuleTerm{F.mul(scale_b, b[j].coeff), b[j].mono, b[j].comp});
  return out;
}

void sort_sparse(const PrimeField& F, const TermOrder& order, SparseVector& v) {
  std::sort(v.begin(), v.end(),
            [&](const ModuleTerm& a, const ModuleTerm& b) { return order.compare(a, b) > 0; });
  SparseVector out;
  out.reserve(v.size());
  for (auto& t : v) {
    Coeff c = t.coeff % F.characteristic();
    if (!out.empty() && out.back().mono == t.mono && out.back().comp == t.comp) {
      out.back().coeff = F.add(out.back().coeff, c);
      if (!out.back().coeff) out.pop_back();
    } else if (c) {
      out.push_back(ModuleTerm{c, t.mono, t.comp});
    }
  }
  v.swap(out);
}

namespace {

// h[start..] - c * m * g, with g monic and its leading term cancelling h[start].
SparseVector subtract_multiple(const PrimeField& F, const TermOrder& order, const SparseVector& h,
                               std::size_t start, Coeff c, const Monomial& m,
                               const SparseVector& g) {
  SparseVector out;
  out.reserve(h.size() - start + g.size());
  Coeff negc = F.neg(c);
  std::size_t i = start + 1, j = 1;
  while (i < h.size() && j < g.size()) {
    Monomial gm = g[j].mono * m;
    int cmp = order.compare(h[i].mono, h[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back(ModuleTerm{F.mul(negc, g[j].coeff), gm, g[j].comp});
      ++j;
    } else {
      Coeff v = F.add(h[i].coeff, F.mul(negc, g[j].coeff));
      if (v) out.push_back(ModuleTerm{v, h[i].mono, h[i].comp});
      ++i;
      ++j;
    }
  }
  for (; i < h.size(); ++i) out.push_back(h[i]);
  for (; j < g.size(); ++j) out.push_back(ModuleTerm{F.mul(negc, g[j].coeff), g[j].mono * m, g[j].comp});
  return out;
}

int find_divisor(const std::vector<SparseVector>& elems, const std::vector<std::uint32_t>& candidates,
                 const Monomial& mono) {
  int best = -1;
  std::size_t best_len = 0;
  for (auto idx : candidates) {
    const SparseVector& g = elems[idx];
    if (g[0].mono.divides(mono) && (best < 0 || g.size() < best_len)) {
      best = static_cast<int>(idx);
      best_len = g.size();
    }
  }
  return best;
}

// Full reduction (leading and tail terms).
SparseVector reduce_full(const PrimeField& F, const TermOrder& order,
                         const std::vector<SparseVector>& elems,
                         const std::vector<std::vector<std::uint32_t>>& index, SparseVector h) {
  SparseVector rem;
  std::size_t pos = 0;
  while (pos < h.size()) {
    const ModuleTerm& t = h[pos];
    int d = t.comp < index.size() ? find_divisor(elems, index[t.comp], t.mono) : -1;
    if (d < 0) {
      rem.push_back(t);
      ++pos;
      continue;
    }
    const SparseVector& g = elems[static_cast<std::size_t>(d)];
    h = subtract_multiple(F, order, h, pos, t.coeff, t.mono / g[0].mono, g);
    pos = 0;
  }
  return rem;
}

void make_monic(const PrimeField& F, SparseVector& v) {
  if (v.empty() || v[0].coeff == 1) return;
  Coeff inv = F.inv(v[0].coeff);
  for (auto& t : v) t.coeff = F.mul(t.coeff, inv);
}

int vector_degree(const TermOrder& order, const SparseVector& v) {
  int d = INT_MIN;
  for (auto& t : v) d = std::max(d, order.term_degree(t.mono, t.comp));
  return d;
}

struct Pair {
  std::uint32_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  int sugar;
  bool alive;
};

class Builder {
 public:
  Builder(const PrimeField& F, const TermOrder& order, EngineOptions options, EngineStats& stats)
      : F_(F), order_(order), options_(options), stats_(stats), index_(order.rank()) {}

  void run(std::vector<SparseVector>& inputs, std::size_t forced, std::vector<bool>& minimal) {
    minimal.assign(inputs.size(), false);
    std::vector<int> degree(inputs.size());
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      sort_sparse(F_, order_, inputs[k]);
      degree[k] = inputs[k].empty() ? INT_MAX : vector_degree(order_, inputs[k]);
    }
    std::vector<std::size_t> perm(inputs.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      if (degree[a] != degree[b]) return degree[a] < degree[b];
      return (a < forced) && !(b < forced);
    });
    std::size_t next = 0;
    for (;;) {
      int dp = min_pair_sugar();
      int di = next < perm.size() && !inputs[perm[next]].empty() ? degree[perm[next]] : INT_MAX;
      int d = std::min(dp, di);
      if (d == INT_MAX) break;
      while (min_pair_sugar() == d) process_pair(select_pair(d));
      while (next < perm.size() && !inputs[perm[next]].empty() && degree[perm[next]] == d) {
        std::size_t k = perm[next++];
        SparseVector h = reduce_full(F_, order_, elems_, index_, inputs[k]);
        if (h.empty()) continue;
        if (k >= forced) minimal[k] = true;
        add(std::move(h), d);
      }
    }
  }

  std::vector<SparseVector> finish() {
    std::vector<std::uint32_t> active;
    for (std::uint32_t k = 0; k < elems_.size(); ++k)
      if (active_[k]) active.push_back(k);
    for (auto k : active) {
      SparseVector tail(elems_[k].begin() + 1, elems_[k].end());
      SparseVector red = reduce_full(F_, order_, elems_, index_, std::move(tail));
      SparseVector v;
      v.reserve(red.size() + 1);
      v.push_back(elems_[k][0]);
      v.insert(v.end(), red.begin(), red.end());
      elems_[k] = std::move(v);
    }
    std::vector<SparseVector> out;
    for (auto k : active) out.push_back(std::move(elems_[k]));
    std::sort(out.begin(), out.end(), [&](const SparseVector& a, const SparseVector& b) {
      return order_.compare(a[0], b[0]) < 0;
    });
    return out;
  }

 private:
  int min_pair_sugar() {
    int best = INT_MAX;
    std::size_t alive = 0;
    for (auto& p : pairs_)
      if (p.alive) {
        ++alive;
        best = std::min(best, p.sugar);
      }
    if (alive * 2 < pairs_.size()) {
      std::erase_if(pairs_, [](const Pair& p) { return !p.alive; });
    }
    return best;
  }

  std::size_t select_pair(int d) {
    std::size_t best = pairs_.size();
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      const Pair& p = pairs_[k];
      if (!p.alive || p.sugar != d) continue;
      if (best == pairs_.size()) {
        best = k;
        continue;
      }
      const Pair& b = pairs_[best];
      int c = order_.compare(p.lcm, p.comp, b.lcm, b.comp);
      bool better = options_.strategy == PairStrategy::SmallestLcmFirst ? c < 0 : c > 0;
      if (better) best = k;
    }
    return best;
  }

  void process_pair(std::size_t k) {
    Pair p = pairs_[k];
    pairs_[k].alive = false;
    ++stats_.pairs_reduced;
    const SparseVector& a = elems_[p.i];
    const SparseVector& b = elems_[p.j];
    SparseVector sa, sb;
    Monomial ma = p.lcm / a[0].mono, mb = p.lcm / b[0].mono;
    sa.reserve(a.size());
    for (auto& t : a) sa.push_back(ModuleTerm{t.coeff, t.mono * ma, t.comp});
    // leading terms cancel: drop them and subtract the rest
    SparseVector rest_a(sa.begin() + 1, sa.end());
    sb.reserve(b.size());
    for (std::size_t t = 1; t < b.size(); ++t)
      sb.push_back(ModuleTerm{b[t].coeff, b[t].mono * mb, b[t].comp});
    SparseVector s = sparse_add(F_, order_, rest_a, sb, F_.neg(1));
    SparseVector h = reduce_full(F_, order_, elems_, index_, std::move(s));
    if (h.empty()) {
      ++stats_.zero_reductions;
      return;
    }
    add(std::move(h), p.sugar);
  }

  void add(SparseVector h, int sugar) {
    make_monic(F_, h);
    std::uint32_t n = static_cast<std::uint32_t>(elems_.size());
    const Monomial lm = h[0].mono;
    const std::uint32_t comp = h[0].comp;
    elems_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
    update_pairs(n, lm, comp);
    auto& bucket = index_[comp];
    std::erase_if(bucket, [&](std::uint32_t g) {
      if (lm.divides(elems_[g][0].mono)) {
        active_[g] = false;
        return true;
      }
      return false;
    });
    bucket.push_back(n);
  }

  // Gebauer-Moeller installation of the pairs created by element n.
  void update_pairs(std::uint32_t n, const Monomial& lm, std::uint32_t comp) {
    const bool product_ok = order_.rank() == 1;
    struct Cand {
      std::uint32_t g;
      Monomial lcm;
      bool coprime;
      bool keep;
    };
    std::vector<Cand> cands;
    for (auto g : index_[comp]) {
      const Monomial& mg = elems_[g][0].mono;
      cands.push_back(Cand{g, lm.lcm(mg), product_ok && lm.coprime(mg), true});
    }
    stats_.pairs_considered += cands.size();
    // chain criterion among the new pairs
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].keep) continue;
        if (!cands[b].lcm.divides(cands[a].lcm)) continue;
        // equal lcms: keep exactly one, preferring a coprime representative
        if (cands[b].lcm == cands[a].lcm && !cands[b].coprime && b > a) continue;
        cands[a].keep = false;
        break;
      }
    }
    // criterion on old pairs
    for (auto& p : pairs_) {
      if (!p.alive || p.comp != comp || !lm.divides(p.lcm)) continue;
      Monomial li = lm.lcm(elems_[p.i][0].mono), lj = lm.lcm(elems_[p.j][0].mono);
      if (li != p.lcm && lj != p.lcm) p.alive = false;
    }
    for (auto& c : cands) {
      if (!c.keep || c.coprime) continue;
      int s1 = sugar_[c.g] + static_cast<int>(c.lcm.degree() - elems_[c.g][0].mono.degree());
      int s2 = sugar_[n] + static_cast<int>(c.lcm.degree() - lm.degree());
      pairs_.push_back(Pair{c.g, n, c.lcm, comp, std::max(s1, s2), true});
    }
  }

  const PrimeField& F_;
  const TermOrder& order_;
  EngineOptions options_;
  EngineStats& stats_;
  std::vector<SparseVector> elems_;
  std::vector<int> sugar_;
  std::vector<bool> active_;
  std::vector<std::vector<std::uint32_t>> index_;
  std::vector<Pair> pairs_;
};

}  // namespace

ModuleGroebnerBasis ModuleGroebnerBasis::compute(const PrimeField& field, const TermOrder& order,
                                                 std::vector<SparseVector> inputs,
                                                 std::size_t forced, EngineOptions options) {
  for (auto& v : inputs)
    for (auto& t : v)
      if (t.comp >= order.rank()) throw UsageError("vector component outside the free module");
  ModuleGroebnerBasis gb;
  gb.field_ = field;
  gb.order_ = order;
  Builder builder(field, gb.order_, options, gb.stats_);
  builder.run(inputs, forced, gb.minimal_);
  gb.elements_ = builder.finish();
  gb.lead_index_.assign(order.rank(), {});
  for (std::uint32_t k = 0; k < gb.elements_.size(); ++k)
    gb.lead_index_[gb.elements_[k][0].comp].push_back(k);
  return gb;
}

SparseVector ModuleGroebnerBasis::normal_form(const SparseVector& v) const {
  SparseVector h = v;
  sort_sparse(field_, order_, h);
  return reduce_full(field_, order_, elements_, lead_index_, std::move(h));
}

}  // namespace gliaison

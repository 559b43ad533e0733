#include "gliaison/homology/resolution.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "gliaison/errors.hpp"

namespace gliaison {

BettiTable::BettiTable(std::map<std::pair<int, int>, int> entries) {
  for (auto& [k, v] : entries)
    if (v) entries_[k] = v;
}

int BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::length() const {
  int l = -1;
  for (auto& [k, v] : entries_) l = std::max(l, k.first);
  return l;
}

int BettiTable::total(int i) const {
  int t = 0;
  for (auto& [k, v] : entries_)
    if (k.first == i) t += v;
  return t;
}

std::vector<int> BettiTable::totals() const {
  std::vector<int> out;
  for (int i = 0; i <= length(); ++i) out.push_back(total(i));
  return out;
}

BettiTable BettiTable::shifted(int s) const {
  std::map<std::pair<int, int>, int> e;
  for (auto& [k, v] : entries_) e[{k.first, k.second + s}] = v;
  return BettiTable(e);
}

bool BettiTable::is_symmetric() const {
  int c = length();
  if (c < 0) return true;
  int lo = INT_MAX, hi = INT_MIN;
  for (auto& [k, v] : entries_) {
    if (k.first == 0) lo = std::min(lo, k.second);
    if (k.first == c) hi = std::max(hi, k.second);
  }
  int sigma = lo + hi;
  for (auto& [k, v] : entries_)
    if (at(c - k.first, sigma - k.second) != v) return false;
  return true;
}

std::string BettiTable::to_string() const {
  int c = length();
  if (c < 0) return "0";
  int rlo = INT_MAX, rhi = INT_MIN;
  for (auto& [k, v] : entries_) {
    rlo = std::min(rlo, k.second - k.first);
    rhi = std::max(rhi, k.second - k.first);
  }
  std::ostringstream os;
  std::vector<std::size_t> width(static_cast<std::size_t>(c + 1), 1);
  for (int i = 0; i <= c; ++i) {
    width[i] = std::max(std::to_string(total(i)).size(), std::to_string(i).size());
    for (int r = rlo; r <= rhi; ++r) width[i] = std::max(width[i], std::to_string(at(i, i + r)).size());
  }
  std::size_t label = std::max<std::size_t>(6, std::to_string(rlo).size() + 1);
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
  os << pad("", label);
  for (int i = 0; i <= c; ++i) os << ' ' << pad(std::to_string(i), width[i]);
  os << '\n' << pad("total:", label);
  for (int i = 0; i <= c; ++i) os << ' ' << pad(std::to_string(total(i)), width[i]);
  for (int r = rlo; r <= rhi; ++r) {
    os << '\n' << pad(std::to_string(r) + ":", label);
    for (int i = 0; i <= c; ++i) {
      int v = at(i, i + r);
      os << ' ' << pad(v ? std::to_string(v) : ".", width[i]);
    }
  }
  return os.str();
}

int FreeResolution::length() const {
  int l = -1;
  for (std::size_t i = 0; i < modules.size(); ++i)
    if (!modules[i].empty()) l = static_cast<int>(i);
  return l;
}

BettiTable FreeResolution::betti() const {
  std::map<std::pair<int, int>, int> e;
  for (std::size_t i = 0; i < modules.size(); ++i)
    for (int d : modules[i]) ++e[{static_cast<int>(i), d}];
  return BettiTable(e);
}

bool FreeResolution::is_complex() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (!maps[i].compose(maps[i + 1]).is_zero()) return false;
  return true;
}

LaurentPoly FreeResolution::euler_numerator() const {
  LaurentPoly p;
  for (std::size_t i = 0; i < modules.size(); ++i)
    for (int d : modules[i]) p[d] += (i % 2 ? -1 : 1);
  for (auto it = p.begin(); it != p.end();) it = it->second ? std::next(it) : p.erase(it);
  return p;
}

ModulePresentation minimal_presentation(const ModulePresentation& M) { return minimize(M).module; }

FreeResolution resolve(const ModulePresentation& M, int max_length) {
  const Ring& ring = M.ring();
  if (max_length < 0) max_length = static_cast<int>(ring.nvars()) + 1;
  ModulePresentation min = minimal_presentation(M);
  FreeResolution res{ring, {min.degrees()}, {}, false};
  if (min.relations().source().empty()) {
    res.complete = true;
    return res;
  }
  GradedMap current = min.relations();
  res.maps.push_back(current);
  res.modules.push_back(current.source());
  while (static_cast<int>(res.maps.size()) < max_length) {
    GradedMap k = kernel(current);
    if (k.source().empty()) {
      res.complete = true;
      break;
    }
    res.maps.push_back(k);
    res.modules.push_back(k.source());
    current = k;
  }
  if (!res.complete && !ring.has_modulus()) {
    // a resolution over P can only stop at the cap when the cap is too small
    res.complete = kernel(current).source().empty();
  }
  return res;
}

FreeResolution resolve_quotient(const Ring& ring, const GradedIdeal& I, int max_length) {
  return resolve(ModulePresentation::cyclic_quotient(ring, I), max_length);
}

std::pair<int, int> pd_and_depth(const ModulePresentation& M) {
  ModulePresentation A = M.over_ambient();
  FreeResolution res = resolve(A);
  int pd = res.length();
  return {pd, static_cast<int>(A.ring().nvars()) - pd};
}

}  // namespace gliaison

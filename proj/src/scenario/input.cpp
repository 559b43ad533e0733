#include "gliaison/scenario/input.hpp"

#include <charconv>
#include <sstream>

#include "gliaison/errors.hpp"
#include "gliaison/kernel/parse.hpp"

namespace gliaison {

namespace {

struct Line {
  std::size_t number;
  std::string text;  // comment stripped, trimmed
  std::size_t indent;
};

std::string trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) {
    if (lead) *lead = 0;
    return {};
  }
  std::size_t b = s.find_last_not_of(" \t\r");
  if (lead) *lead = a;
  return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

bool is_keyword(const std::string& text) {
  auto w = words(text);
  if (w.empty()) return false;
  return w[0] == "ring" || w[0] == "modulus" || w[0] == "ideal" || w[0] == "matrix" || w[0] == "module";
}

long long to_integer(const std::string& s, const Line& line, const std::string& what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(line.number, 1, "expected an integer " + what);
  return v;
}

// Comma-separated entries of a row, each parsed with its column.
std::vector<Polynomial> parse_row(const RingPtr& R, const Line& line) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  const std::string& t = line.text;
  while (true) {
    std::size_t comma = t.find(',', start);
    std::string_view cell = std::string_view(t).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t lead = 0;
    std::string entry = trim(cell, &lead);
    if (entry.empty()) throw ParseError(line.number, line.indent + start + 1, "empty matrix entry");
    out.push_back(parse_polynomial(R, entry, line.number, line.indent + start + lead));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Polynomial parse_homogeneous(const RingPtr& R, const Line& line) {
  Polynomial p = parse_polynomial(R, line.text, line.number, line.indent);
  if (!p.is_homogeneous()) throw ParseError(line.number, line.indent + 1, "inhomogeneous polynomial " + line.text);
  return p;
}

// Degrees making every nonzero entry (i, j) of degree source[j] - target[i].
std::pair<Degrees, Degrees> infer_degrees(const std::vector<std::vector<Polynomial>>& rows,
                                          const std::vector<Line>& lines, std::optional<Degrees> fixed_target) {
  const std::size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
  std::vector<std::optional<int>> tgt(r), src(c);
  if (fixed_target)
    for (std::size_t i = 0; i < r; ++i) tgt[i] = (*fixed_target)[i];
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!rows[i][j].is_zero() && !rows[i][j].is_homogeneous())
        throw ParseError(lines[i].number, 1, "inhomogeneous entry in column " + std::to_string(j + 1));
  // propagate along nonzero entries; each component is anchored at its first row
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        const Polynomial& e = rows[i][j];
        if (e.is_zero()) continue;
        if (tgt[i] && !src[j]) src[j] = *tgt[i] + e.degree(), changed = true;
        if (src[j] && !tgt[i]) tgt[i] = *src[j] - e.degree(), changed = true;
        if (tgt[i] && src[j] && *src[j] - *tgt[i] != e.degree())
          throw ParseError(lines[i].number, 1,
                           "entry in column " + std::to_string(j + 1) + " has a degree incompatible with the others");
      }
    if (!changed) {
      for (std::size_t i = 0; i < r; ++i)
        if (!tgt[i]) {
          tgt[i] = 0;
          changed = true;
          break;
        }
    }
  }
  Degrees t, s;
  for (auto& d : tgt) t.push_back(*d);
  for (auto& d : src) s.push_back(d.value_or(0));
  return {t, s};
}

}  // namespace

InputDocument parse_input(std::string_view text) {
  std::vector<Line> lines;
  {
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++number;
      std::size_t hash = raw.find('#');
      if (hash != std::string_view::npos) raw = raw.substr(0, hash);
      std::size_t lead = 0;
      std::string t = trim(raw, &lead);
      if (!t.empty()) lines.push_back(Line{number, t, lead});
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }
  if (lines.empty()) throw ParseError(1, 1, "empty input; expected 'ring <p> <variables>'");

  InputDocument doc;
  std::size_t k = 0;
  {
    auto w = words(lines[0].text);
    if (w.empty() || w[0] != "ring") throw ParseError(lines[0].number, 1, "the first statement must be 'ring'");
    if (w.size() < 3) throw ParseError(lines[0].number, 1, "'ring' needs a characteristic and at least one variable");
    long long p = to_integer(w[1], lines[0], "characteristic");
    if (p <= 0 || p > 0xffffffffLL) throw ParseError(lines[0].number, 1, "characteristic out of range");
    try {
      doc.ring = PolynomialRing::create(static_cast<std::uint32_t>(p), std::vector<std::string>(w.begin() + 2, w.end()));
    } catch (const std::exception& e) {
      throw ParseError(lines[0].number, 1, e.what());
    }
    k = 1;
  }
  auto claim = [&](const std::string& name, const Line& line) {
    for (auto& n : doc.order)
      if (n == name) throw ParseError(line.number, 1, "duplicate block name " + name);
    doc.order.push_back(name);
  };
  auto body = [&]() {
    std::vector<Line> out;
    while (k < lines.size() && !is_keyword(lines[k].text)) out.push_back(lines[k++]);
    return out;
  };

  while (k < lines.size()) {
    const Line head = lines[k++];
    auto w = words(head.text);
    if (w[0] == "ring") throw ParseError(head.number, 1, "only one 'ring' statement is allowed");
    if (w[0] == "modulus") {
      if (doc.modulus) throw ParseError(head.number, 1, "only one modulus is allowed");
      if (!doc.modules.empty()) throw ParseError(head.number, 1, "the modulus must precede every module");
      Line rest = head;
      std::size_t off = head.text.find("modulus") + 7;
      rest.text = trim(std::string_view(head.text).substr(off));
      rest.indent = head.indent + head.text.find(rest.text, off);
      if (rest.text.empty()) throw ParseError(head.number, 1, "'modulus' needs a polynomial");
      Polynomial f = parse_homogeneous(doc.ring, rest);
      if (f.degree() < 2) throw ParseError(head.number, 1, "the modulus must have degree at least 2");
      doc.modulus = f;
      continue;
    }
    if (w.size() < 2) throw ParseError(head.number, 1, "'" + w[0] + "' needs a name");
    const std::string name = w[1];
    if (w[0] == "ideal") {
      if (w.size() != 2) throw ParseError(head.number, 1, "'ideal' takes only a name");
      claim(name, head);
      std::vector<Polynomial> gens;
      for (auto& l : body()) gens.push_back(parse_homogeneous(doc.ring, l));
      doc.ideals[name] = gens;
    } else if (w[0] == "matrix") {
      if (w.size() != 4) throw ParseError(head.number, 1, "expected 'matrix <name> <rows> <cols>'");
      claim(name, head);
      long long r = to_integer(w[2], head, "row count"), c = to_integer(w[3], head, "column count");
      if (r <= 0 || c <= 0) throw ParseError(head.number, 1, "matrix dimensions must be positive");
      auto rl = body();
      if (rl.size() != static_cast<std::size_t>(r))
        throw ParseError(head.number, 1, "matrix " + name + " declares " + std::to_string(r) + " rows, found " +
                                             std::to_string(rl.size()));
      std::vector<std::vector<Polynomial>> rows;
      for (auto& l : rl) {
        rows.push_back(parse_row(doc.ring, l));
        if (rows.back().size() != static_cast<std::size_t>(c))
          throw ParseError(l.number, 1, "expected " + std::to_string(c) + " entries");
      }
      auto [t, s] = infer_degrees(rows, rl, std::nullopt);
      Matrix m(doc.ring, rows.size(), static_cast<std::size_t>(c));
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
      doc.matrices.emplace(name, GradedMap(Ring(doc.ring), t, s, m));
    } else if (w[0] == "module") {
      std::string twist_text;
      for (std::size_t i = 2; i < w.size(); ++i) twist_text += w[i];
      if (twist_text.rfind("twists(", 0) != 0 || twist_text.back() != ')')
        throw ParseError(head.number, 1, "expected 'module <name> twists(a1,...)'");
      claim(name, head);
      Degrees twists;
      std::string inner = twist_text.substr(7, twist_text.size() - 8);
      std::stringstream ss(inner);
      for (std::string item; std::getline(ss, item, ',');)
        twists.push_back(static_cast<int>(to_integer(trim(item), head, "twist")));
      if (twists.empty()) throw ParseError(head.number, 1, "a module needs at least one generator");
      auto rl = body();
      Ring ctx = doc.context();
      if (rl.empty()) {
        doc.modules.emplace(name, ModulePresentation::free(ctx, twists));
        continue;
      }
      if (rl.size() != twists.size())
        throw ParseError(head.number, 1, "module " + name + " needs one relation row per generator");
      std::vector<std::vector<Polynomial>> rows;
      for (auto& l : rl) {
        rows.push_back(parse_row(doc.ring, l));
        if (rows.back().size() != rows.front().size()) throw ParseError(l.number, 1, "ragged relation rows");
      }
      auto [t, s] = infer_degrees(rows, rl, twists);
      Matrix m(doc.ring, rows.size(), rows[0].size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
      doc.modules.emplace(name, ModulePresentation(GradedMap(ctx, t, s, m)));
    } else {
      throw ParseError(head.number, 1, "unknown statement '" + w[0] + "'");
    }
  }
  return doc;
}

}  // namespace gliaison

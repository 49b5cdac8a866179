#include "qcanon/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qcanon/error.hpp"

namespace qcanon {

int ArcDiagram::degree(int p) const {
  int d = 0;
  for (const auto& [i, j] : chords) d += (i == p) + (j == p);
  return d;
}

ArcDiagram make_diagram(std::vector<int> capacities, std::vector<Chord> chords) {
  std::sort(chords.begin(), chords.end());
  return {std::move(capacities), std::move(chords)};
}

namespace {

bool crosses(const Chord& a, const Chord& b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

std::string chord_text(const Chord& c) {
  return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

// First unsaturated point passed over by a chord, as (chord, point).
std::optional<std::pair<Chord, int>> pass_over(const ArcDiagram& d) {
  for (const auto& c : d.chords) {
    for (int p = c.first + 1; p < c.second; ++p) {
      if (p >= 1 && d.degree(p) < d.capacities[static_cast<std::size_t>(p - 1)]) return std::make_pair(c, p);
    }
  }
  return std::nullopt;
}

}  // namespace

DiagramReport validate_diagram(const ArcDiagram& d) {
  const int n = d.points();
  for (const auto& c : d.chords) {
    if (c.first < 0 || c.second > n || c.first >= c.second) {
      return {false, "endpoints", "chord " + chord_text(c) + " is not a pair 0 <= i < j <= " + std::to_string(n)};
    }
  }
  for (std::size_t a = 0; a < d.chords.size(); ++a) {
    for (std::size_t b = a + 1; b < d.chords.size(); ++b) {
      if (crosses(d.chords[a], d.chords[b])) {
        return {false, "crossing", chord_text(d.chords[a]) + " crosses " + chord_text(d.chords[b])};
      }
    }
  }
  for (int p = 1; p <= n; ++p) {
    const int cap = d.capacities[static_cast<std::size_t>(p - 1)];
    if (d.degree(p) > cap) {
      return {false, "capacity", "z" + std::to_string(p) + " has degree " + std::to_string(d.degree(p)) +
                                     " > " + std::to_string(cap)};
    }
  }
  if (auto po = pass_over(d)) {
    return {false, "pass-over",
            chord_text(po->first) + " passes over unsaturated z" + std::to_string(po->second)};
  }
  return {};
}

std::vector<ArcDiagram> enumerate_B(const std::vector<int>& lambda, int level) {
  std::vector<ArcDiagram> out;
  if (level < 0) return out;
  const int n = static_cast<int>(lambda.size());
  std::vector<Chord> types;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) types.emplace_back(i, j);
  }
  std::vector<int> deg(static_cast<std::size_t>(n + 1), 0);
  auto cap = [&](int p) { return lambda[static_cast<std::size_t>(p - 1)]; };
  std::vector<Chord> chosen;
  auto rec = [&](auto&& self, std::size_t t, int remaining) -> void {
    if (remaining == 0) {
      ArcDiagram d{lambda, chosen};
      if (!pass_over(d)) out.push_back(std::move(d));
      return;
    }
    if (t == types.size()) return;
    const auto [i, j] = types[t];
    self(self, t + 1, remaining);
    if (std::any_of(chosen.begin(), chosen.end(), [&](const Chord& c) { return crosses(c, types[t]); })) return;
    int room = std::min(remaining, cap(j) - deg[static_cast<std::size_t>(j)]);
    if (i >= 1) room = std::min(room, cap(i) - deg[static_cast<std::size_t>(i)]);
    for (int c = 1; c <= room; ++c) {
      chosen.push_back(types[t]);
      if (i >= 1) ++deg[static_cast<std::size_t>(i)];
      ++deg[static_cast<std::size_t>(j)];
      self(self, t + 1, remaining - c);
    }
    for (int c = 1; c <= room; ++c) {
      chosen.pop_back();
      if (i >= 1) --deg[static_cast<std::size_t>(i)];
      --deg[static_cast<std::size_t>(j)];
    }
  };
  rec(rec, 0, level);
  for (auto& d : out) std::sort(d.chords.begin(), d.chords.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MultiIndex index_of_diagram(const ArcDiagram& d) {
  const DiagramReport r = validate_diagram(d);
  if (!r.valid) throw Error(ErrorCode::InvalidDiagram, r.clause + ": " + r.detail);
  MultiIndex a(static_cast<std::size_t>(d.points()), 0);
  for (const auto& c : d.chords) ++a[static_cast<std::size_t>(c.second - 1)];
  return a;
}

namespace {

void require_in_P(const std::vector<int>& lambda, const MultiIndex& a) {
  if (a.size() != lambda.size()) throw Error(ErrorCode::NotInP, "index length differs from the number of points");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] > lambda[i]) {
      throw Error(ErrorCode::NotInP, "a_" + std::to_string(i + 1) + " = " + std::to_string(a[i]) +
                                         " outside [0, " + std::to_string(lambda[i]) + "]");
    }
  }
}

}  // namespace

ArcDiagram diagram_of_index(const std::vector<int>& lambda, const MultiIndex& a) {
  require_in_P(lambda, a);
  const int level = std::accumulate(a.begin(), a.end(), 0);
  std::vector<ArcDiagram> hits;
  for (auto& d : enumerate_B(lambda, level)) {
    if (index_of_diagram(d) == a) hits.push_back(std::move(d));
  }
  if (hits.size() != 1) {
    throw Error(ErrorCode::CrossCheckFailure, std::to_string(hits.size()) + " diagrams share one index");
  }
  return hits.front();
}

ArcDiagram diagram_of_index_greedy(const std::vector<int>& lambda, const MultiIndex& a) {
  require_in_P(lambda, a);
  std::vector<int> open;  // open endpoint slots; the origin lies beneath them all
  std::vector<Chord> chords;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int p = static_cast<int>(i + 1);
    for (int k = 0; k < a[i]; ++k) {
      if (open.empty()) {
        chords.emplace_back(0, p);
      } else {
        chords.emplace_back(open.back(), p);
        open.pop_back();
      }
    }
    open.insert(open.end(), static_cast<std::size_t>(lambda[i] - a[i]), p);
  }
  return make_diagram(lambda, std::move(chords));
}

std::vector<ArcDiagram> filter_singular(const std::vector<ArcDiagram>& diagrams) {
  std::vector<ArcDiagram> out;
  for (const auto& d : diagrams) {
    if (std::none_of(d.chords.begin(), d.chords.end(), [](const Chord& c) { return c.first == 0; })) {
      out.push_back(d);
    }
  }
  return out;
}

std::vector<ArcDiagram> filter_invariant(const std::vector<ArcDiagram>& diagrams, const std::vector<int>& lambda,
                                         int level) {
  const int total = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (total != 2 * level) {
    throw Error(ErrorCode::WeightMismatch, "invariants need sum(lambda) = 2 level, got " + std::to_string(total) +
                                               " and level " + std::to_string(level));
  }
  std::vector<ArcDiagram> out;
  for (const auto& d : filter_singular(diagrams)) {
    bool saturated = true;
    for (int p = 1; p <= d.points(); ++p) saturated = saturated && d.degree(p) == d.capacities[static_cast<std::size_t>(p - 1)];
    if (saturated) out.push_back(d);
  }
  return out;
}

std::vector<int> block_map(const std::vector<int>& lambda) {
  std::vector<int> pi;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) throw Error(ErrorCode::ZeroBlock, "block " + std::to_string(i + 1) + " has size 0");
    pi.insert(pi.end(), static_cast<std::size_t>(lambda[i]), static_cast<int>(i + 1));
  }
  return pi;
}

std::optional<ArcDiagram> cable_diagram(const ArcDiagram& unit, const std::vector<int>& lambda) {
  const std::vector<int> pi = block_map(lambda);
  if (unit.capacities != std::vector<int>(pi.size(), 1)) {
    throw Error(ErrorCode::InvalidDiagram, "cabling starts from a unit-capacity diagram on sum(lambda) points");
  }
  const DiagramReport r = validate_diagram(unit);
  if (!r.valid) throw Error(ErrorCode::InvalidDiagram, r.clause + ": " + r.detail);
  std::vector<Chord> chords;
  for (const auto& [i, j] : unit.chords) {
    const int pj = pi[static_cast<std::size_t>(j - 1)];
    if (i == 0) {
      chords.emplace_back(0, pj);
      continue;
    }
    const int pi_i = pi[static_cast<std::size_t>(i - 1)];
    if (pi_i == pj) return std::nullopt;
    chords.emplace_back(pi_i, pj);
  }
  return make_diagram(lambda, std::move(chords));
}

namespace {

struct Layout {
  std::vector<int> base;                // column of each point's first port
  std::vector<std::pair<int, int>> ends;  // port columns per chord (same order as d.chords)
  std::vector<int> height;              // nesting height per chord, 1 = innermost
  int width = 0;
  int max_height = 0;
};

// Each point gets one port per incident chord.  Ports are ordered left to
// right so that nested chords stay nested: chords arriving from the left
// (innermost first) then chords leaving to the right (outermost first).
Layout layout(const ArcDiagram& d, int port_step, int gap) {
  const int n = d.points();
  Layout L;
  std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(n + 1));
  for (int p = 0; p <= n; ++p) {
    std::vector<std::size_t> arriving;
    std::vector<std::size_t> leaving;
    for (std::size_t c = 0; c < d.chords.size(); ++c) {
      if (d.chords[c].second == p) arriving.push_back(c);
      if (d.chords[c].first == p) leaving.push_back(c);
    }
    auto& inc = incident[static_cast<std::size_t>(p)];
    inc.insert(inc.end(), arriving.rbegin(), arriving.rend());
    inc.insert(inc.end(), leaving.rbegin(), leaving.rend());
  }
  L.ends.assign(d.chords.size(), {0, 0});
  int col = 0;
  for (int p = 0; p <= n; ++p) {
    L.base.push_back(col);
    const auto& inc = incident[static_cast<std::size_t>(p)];
    for (std::size_t k = 0; k < inc.size(); ++k) {
      const int port = col + static_cast<int>(k) * port_step;
      const Chord& c = d.chords[inc[k]];
      if (c.second == p) L.ends[inc[k]].second = port;
      if (c.first == p) L.ends[inc[k]].first = port;
    }
    col += std::max<int>(1, static_cast<int>(inc.size())) * port_step + gap;
  }
  // parallel copies arrive at one point in one order and leave the other in
  // the same order, which would cross them; mirror the arriving side
  for (std::size_t a = 0; a < d.chords.size();) {
    std::size_t b = a;
    while (b < d.chords.size() && d.chords[b] == d.chords[a]) ++b;
    std::vector<int> rights;
    for (std::size_t c = a; c < b; ++c) rights.push_back(L.ends[c].second);
    std::sort(rights.begin(), rights.end());
    std::vector<int> lefts;
    for (std::size_t c = a; c < b; ++c) lefts.push_back(L.ends[c].first);
    std::sort(lefts.begin(), lefts.end());
    for (std::size_t c = a; c < b; ++c) {
      L.ends[c] = {lefts[c - a], rights[b - 1 - c]};
    }
    a = b;
  }
  L.width = col;
  std::vector<std::size_t> order(d.chords.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return L.ends[x].second - L.ends[x].first < L.ends[y].second - L.ends[y].first;
  });
  L.height.assign(d.chords.size(), 1);
  for (std::size_t x : order) {
    for (std::size_t y : order) {
      if (L.ends[x].first < L.ends[y].first && L.ends[y].second < L.ends[x].second) {
        L.height[x] = std::max(L.height[x], L.height[y] + 1);
      }
    }
    L.max_height = std::max(L.max_height, L.height[x]);
  }
  return L;
}

std::string render_ascii(const ArcDiagram& d) {
  const Layout L = layout(d, 2, 3);
  const int rows = L.max_height;
  std::vector<std::string> grid(static_cast<std::size_t>(rows), std::string(static_cast<std::size_t>(L.width), ' '));
  auto put = [&](int row, int col, char ch) {
    grid[static_cast<std::size_t>(rows - row)][static_cast<std::size_t>(col)] = ch;
  };
  for (std::size_t c = 0; c < d.chords.size(); ++c) {
    const auto [a, b] = L.ends[c];
    const int h = L.height[c];
    for (int x = a + 1; x < b; ++x) put(h, x, '-');
    put(h, a, '.');
    put(h, b, '.');
    put(h, (a + b) / 2, '*');
    for (int r = 1; r < h; ++r) {
      put(r, a, '|');
      put(r, b, '|');
    }
  }
  std::string base(static_cast<std::size_t>(L.width), ' ');
  for (int p = 0; p <= d.points(); ++p) {
    const std::string label = p == 0 ? "0" : "z" + std::to_string(p);
    base.replace(static_cast<std::size_t>(L.base[static_cast<std::size_t>(p)]), label.size(), label);
  }
  std::ostringstream os;
  for (auto& line : grid) {
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << '\n';
  }
  base.erase(base.find_last_not_of(' ') + 1);
  os << base << '\n';
  return os.str();
}

std::string render_svg(const ArcDiagram& d) {
  constexpr int unit = 10;
  constexpr int margin = 20;
  const Layout L = layout(d, 1, 4);
  int top = 0;
  for (std::size_t c = 0; c < d.chords.size(); ++c) top = std::max(top, (L.ends[c].second - L.ends[c].first) * unit / 2);
  const int width = L.width * unit + 2 * margin;
  const int baseline = top + margin;
  const int height = baseline + 2 * margin;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "  <line x1=\"" << margin / 2 << "\" y1=\"" << baseline << "\" x2=\"" << width - margin / 2 << "\" y2=\""
     << baseline << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  for (std::size_t c = 0; c < d.chords.size(); ++c) {
    const int x1 = margin + L.ends[c].first * unit;
    const int x2 = margin + L.ends[c].second * unit;
    const int r = (x2 - x1) / 2;
    os << "  <path d=\"M " << x1 << ' ' << baseline << " A " << r << ' ' << r << " 0 0 1 " << x2 << ' ' << baseline
       << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
    os << "  <circle cx=\"" << (x1 + x2) / 2 << "\" cy=\"" << baseline - r << "\" r=\"3\" fill=\"#c00\"/>\n";
  }
  for (int p = 0; p <= d.points(); ++p) {
    const int x = margin + L.base[static_cast<std::size_t>(p)] * unit;
    os << "  <circle cx=\"" << x << "\" cy=\"" << baseline << "\" r=\"4\" fill=\"" << (p == 0 ? "#00c" : "#000")
       << "\"/>\n";
    os << "  <text x=\"" << x << "\" y=\"" << baseline + 18 << "\" font-size=\"12\" text-anchor=\"middle\">"
       << (p == 0 ? std::string("0") : "z" + std::to_string(p)) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render(const ArcDiagram& d, RenderFormat format) {
  const DiagramReport r = validate_diagram(d);
  if (!r.valid) throw Error(ErrorCode::InvalidDiagram, r.clause + ": " + r.detail);
  return format == RenderFormat::Ascii ? render_ascii(d) : render_svg(d);
}

}  // namespace qcanon

#include "plrep/plmap.hpp"

#include <algorithm>
#include <cassert>

#include "plrep/error.hpp"

namespace plrep {

namespace {

// True iff b is removable between a and c: the graph is collinear, i.e.
// both segments have equal slope.
bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

}  // namespace

Reparam Reparam::canonicalize(std::vector<Breakpoint> pts) {
  if (pts.empty()) fail("BadEndpoints", "empty breakpoint list");
  for (const auto& bp : pts) {
    if (!in_unit(bp.x) || !in_unit(bp.y)) {
      fail("OutOfRange", "breakpoint outside the unit square");
    }
  }
  if (pts.front().x != 0 || pts.front().y != 0) {
    fail("BadEndpoints", "first breakpoint must be (0,0)");
  }
  if (pts.back().x != 1 || pts.back().y != 1) {
    fail("BadEndpoints", "last breakpoint must be (1,1)");
  }
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].x <= pts[i - 1].x) {
      fail("NotMonotone", "x-coordinates must be strictly increasing");
    }
    if (pts[i].y < pts[i - 1].y) {
      fail("NotMonotone", "y-coordinates must be weakly increasing");
    }
  }
  std::vector<Breakpoint> out;
  out.reserve(pts.size());
  for (auto& bp : pts) {
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), bp)) {
      out.pop_back();
    }
    out.push_back(std::move(bp));
  }
  Reparam r;
  r.pts_ = std::move(out);
  return r;
}

const Reparam& Reparam::identity() {
  static const Reparam id =
      Reparam::canonicalize({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}});
  return id;
}

Rat eval(const Reparam& f, const Rat& t) {
  if (!in_unit(t)) fail("OutOfRange", "argument outside [0,1]");
  const auto& p = f.points();
  // Last segment index i with p[i].x <= t.
  std::size_t lo = 0, hi = p.size() - 1;
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (p[mid].x <= t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const auto& a = p[lo];
  const auto& b = p[hi];
  if (t == a.x) return a.y;
  if (t == b.x) return b.y;
  return a.y + (t - a.x) * (b.y - a.y) / (b.x - a.x);
}

Rat preimage_min(const Reparam& f, const Rat& v) {
  if (!in_unit(v)) fail("OutOfRange", "value outside [0,1]");
  const auto& p = f.points();
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i].y == v) return p[i].x;
    if (p[i].y < v && v <= p[i + 1].y) {
      return p[i].x +
             (v - p[i].y) * (p[i + 1].x - p[i].x) / (p[i + 1].y - p[i].y);
    }
  }
  return Rat(1);  // v == 1
}

Rat preimage_max(const Reparam& f, const Rat& v) {
  if (!in_unit(v)) fail("OutOfRange", "value outside [0,1]");
  const auto& p = f.points();
  for (std::size_t i = p.size() - 1; i > 0; --i) {
    if (p[i].y == v) return p[i].x;
    if (p[i - 1].y <= v && v < p[i].y) {
      return p[i - 1].x + (v - p[i - 1].y) * (p[i].x - p[i - 1].x) /
                              (p[i].y - p[i - 1].y);
    }
  }
  return Rat(0);  // v == 0
}

std::vector<Rat> merged_grid(const Reparam& f, const Reparam& g) {
  std::vector<Rat> xs;
  xs.reserve(f.size() + g.size());
  for (const auto& bp : f.points()) xs.push_back(bp.x);
  for (const auto& bp : g.points()) xs.push_back(bp.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

Reparam compose(const Reparam& f, const Reparam& g) {
  std::vector<Rat> ts;
  for (const auto& bp : g.points()) ts.push_back(bp.x);
  for (const auto& bp : f.points()) {
    ts.push_back(preimage_min(g, bp.x));
    ts.push_back(preimage_max(g, bp.x));
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Breakpoint> pts;
  pts.reserve(ts.size());
  for (const auto& t : ts) pts.push_back({t, eval(f, eval(g, t))});
  return Reparam::canonicalize(std::move(pts));
}

Reparam invert(const Reparam& h) {
  const auto& p = h.points();
  std::vector<Breakpoint> pts;
  pts.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && p[i + 1].y == p[i].y) {
      fail("NotInjective", "zero-slope segment has no inverse");
    }
    pts.push_back({p[i].y, p[i].x});
  }
  return Reparam::canonicalize(std::move(pts));
}

Rat sup_distance(const Reparam& f, const Reparam& g) {
  Rat best(0);
  for (const auto& x : merged_grid(f, g)) {
    Rat d = eval(f, x) - eval(g, x);
    if (d < 0) d = -d;
    if (d > best) best = d;
  }
  return best;
}

namespace {

Reparam pointwise_extremum(const Reparam& f, const Reparam& g, bool want_max) {
  const auto grid = merged_grid(f, g);
  std::vector<Breakpoint> pts;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Rat fa = eval(f, grid[i]);
    const Rat ga = eval(g, grid[i]);
    pts.push_back({grid[i], want_max ? std::max(fa, ga) : std::min(fa, ga)});
    if (i + 1 < grid.size()) {
      const Rat da = fa - ga;
      const Rat db = eval(f, grid[i + 1]) - eval(g, grid[i + 1]);
      if ((da > 0 && db < 0) || (da < 0 && db > 0)) {
        // f and g cross strictly inside the segment.
        const Rat t =
            grid[i] + (grid[i + 1] - grid[i]) * da / (da - db);
        pts.push_back({t, eval(f, t)});
      }
    }
  }
  return Reparam::canonicalize(std::move(pts));
}

}  // namespace

Reparam pointwise_max(const Reparam& f, const Reparam& g) {
  return pointwise_extremum(f, g, true);
}

Reparam pointwise_min(const Reparam& f, const Reparam& g) {
  return pointwise_extremum(f, g, false);
}

Reparam convex_combination(const Reparam& f, const Reparam& g, const Rat& s) {
  if (!in_unit(s)) fail("OutOfRange", "mixing weight outside [0,1]");
  std::vector<Breakpoint> pts;
  for (const auto& x : merged_grid(f, g)) {
    pts.push_back({x, (1 - s) * eval(f, x) + s * eval(g, x)});
  }
  return Reparam::canonicalize(std::move(pts));
}

bool is_homeo(const Reparam& f) {
  const auto& p = f.points();
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i].y == p[i - 1].y) return false;
  }
  return true;
}

}  // namespace plrep

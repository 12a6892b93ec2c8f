#include "plrep/trace.hpp"

#include <algorithm>
#include <cassert>

#include "plrep/error.hpp"

namespace plrep {

namespace {

Point sub(const Point& a, const Point& b) {
  Point d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

bool is_zero(const Point& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
}

bool parallel(const Point& u, const Point& w) {
  for (std::size_t j = 0; j < u.size(); ++j) {
    for (std::size_t k = j + 1; k < u.size(); ++k) {
      if (u[j] * w[k] != u[k] * w[j]) return false;
    }
  }
  return true;
}

Rat dot(const Point& u, const Point& w) {
  Rat s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * w[i];
  return s;
}

// w is a positive multiple of u (both nonzero).
bool same_direction(const Point& u, const Point& w) {
  return parallel(u, w) && dot(u, w) > 0;
}

}  // namespace

bool Path::is_constant() const {
  return pts_.size() == 2 && pts_.front().p == pts_.back().p;
}

Path Path::canonicalize(int dim, std::vector<PathBreakpoint> pts) {
  if (dim <= 0) fail("DimensionMismatch", "dimension must be positive");
  if (pts.empty()) fail("BadTimeRange", "empty breakpoint list");
  for (const auto& bp : pts) {
    if (static_cast<int>(bp.p.size()) != dim) {
      fail("DimensionMismatch", "point width does not match dim");
    }
    if (!in_unit(bp.t)) fail("BadTimeRange", "time outside [0,1]");
  }
  if (pts.front().t != 0 || pts.back().t != 1) {
    fail("BadTimeRange", "times must run from 0 to 1");
  }
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].t <= pts[i - 1].t) {
      fail("NotIncreasingTime", "times must be strictly increasing");
    }
  }
  std::vector<PathBreakpoint> out;
  out.reserve(pts.size());
  auto removable = [](const PathBreakpoint& a, const PathBreakpoint& b,
                      const PathBreakpoint& c) {
    // Equal velocity on both sides, componentwise.
    for (std::size_t i = 0; i < a.p.size(); ++i) {
      if ((b.p[i] - a.p[i]) * (c.t - b.t) != (c.p[i] - b.p[i]) * (b.t - a.t)) {
        return false;
      }
    }
    return true;
  };
  for (auto& bp : pts) {
    while (out.size() >= 2 && removable(out[out.size() - 2], out.back(), bp)) {
      out.pop_back();
    }
    out.push_back(std::move(bp));
  }
  Path p;
  p.dim_ = dim;
  p.pts_ = std::move(out);
  return p;
}

Point path_eval(const Path& p, const Rat& t) {
  if (!in_unit(t)) fail("OutOfRange", "time outside [0,1]");
  const auto& bps = p.points();
  std::size_t lo = 0, hi = bps.size() - 1;
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (bps[mid].t <= t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const auto& a = bps[lo];
  const auto& b = bps[hi];
  if (t == a.t) return a.p;
  if (t == b.t) return b.p;
  Point out(a.p.size());
  const Rat w = (t - a.t) / (b.t - a.t);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.p[i] + w * (b.p[i] - a.p[i]);
  }
  return out;
}

Path path_reparam(const Path& p, const Reparam& f) {
  std::vector<Rat> ts;
  for (const auto& bp : f.points()) ts.push_back(bp.x);
  for (const auto& bp : p.points()) {
    ts.push_back(preimage_min(f, bp.t));
    ts.push_back(preimage_max(f, bp.t));
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<PathBreakpoint> pts;
  pts.reserve(ts.size());
  for (const auto& t : ts) pts.push_back({t, path_eval(p, eval(f, t))});
  return Path::canonicalize(p.dim(), std::move(pts));
}

PathStopData path_stop_data(const Path& p) {
  PathStopData sd;
  if (p.is_constant()) {
    sd.whole = true;
    sd.stops.push_back({{Rat(0), Rat(1)}, p.points().front().p});
    return sd;
  }
  const auto& bps = p.points();
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    if (bps[i].p == bps[i + 1].p) {
      // Canonical form merges adjacent constant segments.
      sd.stops.push_back({{bps[i].t, bps[i + 1].t}, bps[i].p});
    }
  }
  return sd;
}

bool is_regular(const Path& p) {
  const auto sd = path_stop_data(p);
  return sd.whole || sd.stops.empty();
}

Regularization regularize(const Path& p) {
  const auto sd = path_stop_data(p);
  if (sd.whole || sd.stops.empty()) {
    return Regularization{p, Reparam::identity()};
  }
  // Stop map of the regularizing reparametrization: midpoints, except that
  // an interval touching an endpoint of [0,1] must carry that endpoint's
  // value.
  StopData phi_sd;
  for (const auto& st : sd.stops) {
    Rat v = (st.interval.lo + st.interval.hi) / 2;
    if (st.interval.lo == 0) v = 0;
    if (st.interval.hi == 1) v = 1;
    phi_sd.stops.push_back({st.interval, v});
  }
  Reparam phi = realize(phi_sd);
  // q = p o phi^-1 on move parts: push every breakpoint time through phi;
  // plateaus collapse to points.
  std::vector<PathBreakpoint> qpts;
  for (const auto& bp : p.points()) {
    PathBreakpoint nb{eval(phi, bp.t), bp.p};
    if (!qpts.empty() && qpts.back().t == nb.t) {
      assert(qpts.back().p == nb.p);
      continue;
    }
    qpts.push_back(std::move(nb));
  }
  Path q = Path::canonicalize(p.dim(), std::move(qpts));
  return Regularization{std::move(q), std::move(phi)};
}

namespace {

// Stack reduction of a vertex sequence: drop consecutive duplicates and
// interior vertices strictly between their neighbours in a consistent
// direction. Applied to (time, point) pairs so callers can recover the
// surviving times.
std::vector<PathBreakpoint> reduce_chain(const std::vector<PathBreakpoint>& in) {
  std::vector<PathBreakpoint> out;
  for (const auto& bp : in) {
    if (!out.empty() && out.back().p == bp.p) continue;
    while (out.size() >= 2 &&
           same_direction(sub(out.back().p, out[out.size() - 2].p),
                          sub(bp.p, out.back().p))) {
      out.pop_back();
    }
    out.push_back(bp);
  }
  return out;
}

}  // namespace

TraceNF normal_form(const Path& p) {
  const Path q = regularize(p).q;
  if (q.is_constant()) {
    return TraceNF{{q.points().front().p}};
  }
  TraceNF nf;
  for (const auto& bp : reduce_chain(q.points())) nf.vertices.push_back(bp.p);
  return nf;
}

bool equivalent(const Path& p, const Path& q) {
  if (p.dim() != q.dim()) fail("DimensionMismatch", "paths of different dims");
  return normal_form(p) == normal_form(q);
}

namespace {

// Scalar position of a point along the segment from base in direction e,
// measured with e's first nonzero coordinate.
Rat segment_param(const Point& base, const Point& e, const Point& x) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) return (x[i] - base[i]) / e[i];
  }
  assert(false);
  return Rat(0);
}

// The homeomorphism h with r2 == r1 o h for two regular paths with equal
// normal forms. Matches the surviving vertices of the reductions and solves
// segmentwise.
Reparam matching_homeo(const Path& r1, const Path& r2) {
  const auto nf1 = reduce_chain(r1.points());
  const auto nf2 = reduce_chain(r2.points());
  assert(nf1.size() == nf2.size());
  std::vector<Breakpoint> pts;
  pts.push_back({Rat(0), Rat(0)});
  for (std::size_t j = 0; j + 1 < nf1.size(); ++j) {
    const Point e = sub(nf1[j + 1].p, nf1[j].p);
    const Rat a0 = nf1[j].t, a1 = nf1[j + 1].t;
    const Rat b0 = nf2[j].t, b1 = nf2[j + 1].t;
    // Positions along the segment as strictly increasing PL functions of
    // time; h is lambda1^-1 o lambda2 on [b0, b1].
    std::vector<std::pair<Rat, Rat>> l1;  // (time in r1, position)
    for (const auto& bp : r1.points()) {
      if (a0 <= bp.t && bp.t <= a1) {
        l1.push_back({bp.t, segment_param(nf1[j].p, e, bp.p)});
      }
    }
    std::vector<std::pair<Rat, Rat>> l2;
    for (const auto& bp : r2.points()) {
      if (b0 <= bp.t && bp.t <= b1) {
        l2.push_back({bp.t, segment_param(nf1[j].p, e, bp.p)});
      }
    }
    auto invert_at = [](const std::vector<std::pair<Rat, Rat>>& l,
                        const Rat& pos) {
      for (std::size_t i = 0; i + 1 < l.size(); ++i) {
        if (l[i].second <= pos && pos <= l[i + 1].second) {
          if (pos == l[i].second) return l[i].first;
          return Rat(l[i].first + (pos - l[i].second) *
                                      (l[i + 1].first - l[i].first) /
                                      (l[i + 1].second - l[i].second));
        }
      }
      assert(false);
      return Rat(0);
    };
    auto value_at = [](const std::vector<std::pair<Rat, Rat>>& l, const Rat& t) {
      for (std::size_t i = 0; i + 1 < l.size(); ++i) {
        if (l[i].first <= t && t <= l[i + 1].first) {
          if (t == l[i].first) return l[i].second;
          return Rat(l[i].second + (t - l[i].first) *
                                       (l[i + 1].second - l[i].second) /
                                       (l[i + 1].first - l[i].first));
        }
      }
      assert(false);
      return Rat(0);
    };
    // Cut at r2's breakpoints and at r2-times matching r1's breakpoints.
    std::vector<Rat> cuts;
    for (const auto& [t, pos] : l2) cuts.push_back(t);
    for (const auto& [t, pos] : l1) cuts.push_back(invert_at(l2, pos));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (const auto& t : cuts) {
      pts.push_back({t, invert_at(l1, value_at(l2, t))});
    }
  }
  pts.push_back({Rat(1), Rat(1)});
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) { return a.x < b.x; });
  std::vector<Breakpoint> dedup;
  for (auto& bp : pts) {
    if (!dedup.empty() && dedup.back().x == bp.x) continue;
    dedup.push_back(std::move(bp));
  }
  return Reparam::canonicalize(std::move(dedup));
}

}  // namespace

SharedSource shared_source(const Path& p, const Path& q) {
  if (p.dim() != q.dim()) fail("DimensionMismatch", "paths of different dims");
  if (!equivalent(p, q)) fail("NotEquivalent", "paths have distinct traces");
  auto [r1, f1] = regularize(p);
  auto [r2, f2] = regularize(q);
  if (r1.is_constant()) {
    return SharedSource{std::move(r1), std::move(f1), std::move(f2)};
  }
  Reparam h = matching_homeo(r1, r2);
  Reparam psi = compose(h, f2);
  return SharedSource{std::move(r1), std::move(f1), std::move(psi)};
}

Reparam factor_regular(const Path& p, const Reparam& phi, const Path& p2,
                       const Reparam& phi2) {
  if (!is_regular(p)) fail("NotRegular", "first path must be regular");
  if (path_reparam(p, phi) != path_reparam(p2, phi2)) {
    fail("WitnessMismatch", "the two compositions differ");
  }
  if (p.is_constant()) return Reparam::identity();  // any factor works
  return left_factor(phi, phi2);
}

Path concat(const Path& p, const Path& q) {
  if (p.dim() != q.dim()) fail("DimensionMismatch", "paths of different dims");
  if (p.points().back().p != q.points().front().p) {
    fail("EndpointMismatch", "end of first path differs from start of second");
  }
  std::vector<PathBreakpoint> pts;
  for (const auto& bp : p.points()) pts.push_back({bp.t / 2, bp.p});
  for (const auto& bp : q.points()) {
    if (bp.t == 0) continue;  // shared midpoint
    pts.push_back({(bp.t + 1) / 2, bp.p});
  }
  return Path::canonicalize(p.dim(), std::move(pts));
}

bool is_directed(const Path& p) {
  const auto& bps = p.points();
  for (std::size_t i = 1; i < bps.size(); ++i) {
    for (std::size_t c = 0; c < bps[i].p.size(); ++c) {
      if (bps[i].p[c] < bps[i - 1].p[c]) return false;
    }
  }
  return true;
}

namespace {

// Exact intersection test for closed segments [a,b] and [c,d] in Q^n.
bool segments_intersect(const Point& a, const Point& b, const Point& c,
                        const Point& d) {
  const Point u = sub(b, a);
  const Point w = sub(d, c);
  const Point ca = sub(c, a);
  if (parallel(u, w)) {
    if (!parallel(u, ca)) return false;  // distinct parallel lines
    // Collinear: compare parameter ranges along u.
    const Rat sc = segment_param(a, u, c);
    const Rat sd = segment_param(a, u, d);
    const Rat lo = std::min(sc, sd), hi = std::max(sc, sd);
    return hi >= 0 && lo <= 1;
  }
  // Solve s u - t w = c - a via an invertible 2x2 coordinate minor.
  for (std::size_t j = 0; j < u.size(); ++j) {
    for (std::size_t k = j + 1; k < u.size(); ++k) {
      const Rat det = u[j] * (-w[k]) - (-w[j]) * u[k];
      if (det == 0) continue;
      const Rat s = (ca[j] * (-w[k]) - (-w[j]) * ca[k]) / det;
      const Rat t = (u[j] * ca[k] - ca[j] * u[k]) / det;
      if (s < 0 || s > 1 || t < 0 || t > 1) return false;
      for (std::size_t m = 0; m < u.size(); ++m) {
        if (s * u[m] - t * w[m] != ca[m]) return false;
      }
      return true;
    }
  }
  return false;  // unreachable: non-parallel vectors have a nonzero minor
}

}  // namespace

bool is_loop_free(const Path& p) {
  const TraceNF nf = normal_form(p);
  const auto& v = nf.vertices;
  if (v.size() <= 2) return true;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    // Adjacent segments never share the same direction in a normal form;
    // any parallel adjacent pair therefore backtracks and overlaps.
    if (i + 2 < v.size() &&
        parallel(sub(v[i + 1], v[i]), sub(v[i + 2], v[i + 1]))) {
      return false;
    }
    for (std::size_t j = i + 2; j + 1 < v.size(); ++j) {
      if (segments_intersect(v[i], v[i + 1], v[j], v[j + 1])) return false;
    }
  }
  return true;
}

ImageChain image_chain(const Path& p) {
  if (!is_loop_free(p)) fail("NotLoopFree", "path revisits a point");
  const TraceNF nf = normal_form(p);
  ImageChain out;
  if (nf.vertices.size() == 1) {
    out.is_point = true;
    out.point = nf.vertices.front();
  } else {
    out.chain = nf.vertices;
  }
  return out;
}

HomotopyWitness thin_homotopy(const Path& p, const Path& q) {
  SharedSource src = shared_source(p, q);
  Reparam eta = pointwise_max(src.phi, src.psi);
  return HomotopyWitness{std::move(src.r), std::move(src.phi),
                         std::move(src.psi), std::move(eta)};
}

Point witness_eval(const HomotopyWitness& w, int side, const Rat& s,
                   const Rat& t) {
  if (!in_unit(s) || !in_unit(t)) fail("OutOfRange", "arguments outside [0,1]");
  if (side != 1 && side != 2) fail("OutOfRange", "side must be 1 or 2");
  const Reparam& base = (side == 1) ? w.phi : w.psi;
  const Rat u = (1 - s) * eval(base, t) + s * eval(w.eta, t);
  return path_eval(w.r, u);
}

std::pair<Reparam, Reparam> witness_endpoints(const HomotopyWitness& w) {
  return {w.phi, w.psi};
}

}  // namespace plrep

#include "plrep/stopmap.hpp"

#include <algorithm>
#include <cassert>

#include "plrep/error.hpp"

namespace plrep {

void StopData::validate() const {
  for (std::size_t i = 0; i < stops.size(); ++i) {
    const auto& [iv, v] = stops[i];
    if (!in_unit(iv.lo) || !in_unit(iv.hi) || iv.lo >= iv.hi) {
      fail("InvalidStopData", "stop interval must be nondegenerate in [0,1]");
    }
    if (!in_unit(v)) fail("InvalidStopData", "stop value outside [0,1]");
    if (i > 0) {
      if (stops[i - 1].first.hi >= iv.lo) {
        fail("InvalidStopData", "stop intervals must be disjoint and ordered");
      }
      if (stops[i - 1].second >= v) {
        fail("InvalidStopData", "stop values must be strictly increasing");
      }
    }
    // An interval touching an endpoint of [0,1] must carry that endpoint's
    // value, and vice versa: otherwise maximality of the realized plateau
    // fails.
    if ((iv.lo == 0) != (v == 0)) {
      fail("InvalidStopData", "value 0 exactly for the interval containing 0");
    }
    if ((iv.hi == 1) != (v == 1)) {
      fail("InvalidStopData", "value 1 exactly for the interval containing 1");
    }
  }
}

StopData stop_data(const Reparam& f) {
  StopData sd;
  const auto& p = f.points();
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i].y == p[i + 1].y) {
      // Canonical form merges adjacent flat segments, so this plateau is
      // maximal.
      sd.stops.push_back({{p[i].x, p[i + 1].x}, p[i].y});
    }
  }
  return sd;
}

std::vector<Rat> stop_values(const Reparam& f) {
  std::vector<Rat> vs;
  for (const auto& [iv, v] : stop_data(f).stops) vs.push_back(v);
  return vs;
}

std::vector<Interval> move_intervals(const Reparam& f) {
  const auto sd = stop_data(f);
  std::vector<Interval> out;
  Rat prev(0);
  for (const auto& [iv, v] : sd.stops) {
    if (prev < iv.lo) out.push_back({prev, iv.lo});
    prev = iv.hi;
  }
  if (prev < 1) out.push_back({prev, Rat(1)});
  return out;
}

namespace {

// True iff v lies in some stop interval of sd.
bool in_stop_set(const StopData& sd, const Rat& v) {
  for (const auto& [iv, val] : sd.stops) {
    if (iv.lo <= v && v <= iv.hi) return true;
  }
  return false;
}

}  // namespace

StopData compose_stop_data(const Reparam& f, const Reparam& g) {
  const StopData sf = stop_data(f);
  const StopData sg = stop_data(g);
  std::vector<std::pair<Interval, Rat>> stops;
  // Plateaus of g whose value misses the stop set of f survive, with value
  // pushed forward through f.
  for (const auto& [iv, v] : sg.stops) {
    if (!in_stop_set(sf, v)) stops.push_back({iv, eval(f, v)});
  }
  // Plateaus of f pull back along g to plateaus of the composite.
  for (const auto& [iv, v] : sf.stops) {
    stops.push_back({{preimage_min(g, iv.lo), preimage_max(g, iv.hi)}, v});
  }
  std::sort(stops.begin(), stops.end(),
            [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
  StopData out;
  out.stops = std::move(stops);
  return out;
}

Reparam realize(const StopData& sd) {
  sd.validate();
  std::vector<Breakpoint> pts;
  pts.push_back({Rat(0), Rat(0)});
  for (const auto& [iv, v] : sd.stops) {
    if (iv.lo > 0) pts.push_back({iv.lo, v});
    pts.push_back({iv.hi, v});
  }
  if (pts.back().x < 1) pts.push_back({Rat(1), Rat(1)});
  return Reparam::canonicalize(std::move(pts));
}

Reparam realize_values(std::vector<Rat> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (const auto& v : values) {
    if (!in_unit(v)) fail("OutOfRange", "stop value outside [0,1]");
  }
  const auto k = static_cast<long long>(values.size());
  const Rat den(2 * k + 1);
  std::vector<Breakpoint> pts;
  pts.push_back({Rat(0), Rat(0)});
  for (long long i = 1; i <= k; ++i) {
    pts.push_back({Rat(2 * i - 1) / den, values[static_cast<std::size_t>(i - 1)]});
    pts.push_back({Rat(2 * i) / den, values[static_cast<std::size_t>(i - 1)]});
  }
  pts.push_back({Rat(1), Rat(1)});
  return Reparam::canonicalize(std::move(pts));
}

Reparam countable_builder(const std::vector<Rat>& values, std::size_t depth) {
  if (depth > values.size()) {
    fail("OutOfRange", "depth exceeds number of values");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!in_unit(values[i])) fail("OutOfRange", "value outside [0,1]");
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) fail("DuplicateValue", "repeated stop value");
    }
  }
  Reparam phi = Reparam::identity();
  Rat bound(1);  // 2^{-n} at step n, starting with n = 0
  for (std::size_t n = 0; n < depth; ++n) {
    const Rat& c = values[n];
    const auto& p = phi.points();
    // Hosting strictly increasing segment: breakpoint ordinates are exactly
    // {0,1} together with already inserted values, so c is either strictly
    // interior to a segment's value range or an endpoint of [0,1].
    std::size_t seg = p.size();
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      const bool interior = p[i].y < c && c < p[i + 1].y;
      const bool at_left = c == 0 && p[i].y == 0 && p[i + 1].y > 0 && p[i].x == 0;
      const bool at_right =
          c == 1 && p[i + 1].y == 1 && p[i].y < 1 && p[i + 1].x == 1;
      if (interior || at_left || at_right) {
        seg = i;
        break;
      }
    }
    assert(seg < p.size());
    const Rat a = p[seg].x, b = p[seg + 1].x;
    const Rat slope = (p[seg + 1].y - p[seg].y) / (b - a);
    const Rat xstar = a + (c - p[seg].y) / slope;
    const Rat left = xstar - a, right = b - xstar, reach = bound / slope;
    Rat h;
    if (c == 0) {
      h = std::min(right, reach) / 4;
    } else if (c == 1) {
      h = std::min(left, reach) / 4;
    } else {
      h = std::min({left, right, reach}) / 4;
    }
    const Rat plo = (c == 0) ? xstar : xstar - h;
    const Rat phi_hi = (c == 1) ? xstar : xstar + h;
    std::vector<Breakpoint> pts(p.begin(), p.begin() + seg + 1);
    // The plateau endpoints coincide with the hosting segment's endpoints
    // exactly when c is 0 resp. 1; those corners are already present.
    if (plo > a) pts.push_back({plo, c});
    if (!(phi_hi == b && c == p[seg + 1].y)) pts.push_back({phi_hi, c});
    pts.insert(pts.end(), p.begin() + seg + 1, p.end());
    phi = Reparam::canonicalize(std::move(pts));
    bound /= 2;
  }
  return phi;
}

Reparam approx_homeo(const Reparam& f, unsigned n) {
  if (n == 0) fail("OutOfRange", "n must be at least 1");
  std::vector<Breakpoint> pts;
  pts.push_back({Rat(0), Rat(0)});
  for (unsigned k = 1; k < n; ++k) {
    const Rat target = Rat(k) / Rat(n);
    pts.push_back({preimage_min(f, target), target});
  }
  pts.push_back({Rat(1), Rat(1)});
  return Reparam::canonicalize(std::move(pts));
}

Reparam approx_noninjective(const Reparam& f, unsigned n) {
  if (n == 0) fail("OutOfRange", "n must be at least 1");
  const Rat level = Rat(1) / Rat(n);
  const Rat c1 = preimage_min(f, level);
  std::vector<Breakpoint> pts;
  pts.push_back({Rat(0), Rat(0)});
  pts.push_back({c1 / 2, Rat(0)});
  pts.push_back({c1, level});
  for (const auto& bp : f.points()) {
    if (bp.x > c1) pts.push_back(bp);
  }
  if (pts.back().x < 1) pts.push_back({Rat(1), Rat(1)});
  return Reparam::canonicalize(std::move(pts));
}

}  // namespace plrep

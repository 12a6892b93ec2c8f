#include "plrep/factorization.hpp"

#include <algorithm>
#include <cassert>

#include "plrep/error.hpp"

namespace plrep {

namespace {

bool contains(const std::vector<Rat>& sorted, const Rat& v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

// The stop interval of f carrying value v, if any.
const Interval* stop_interval_at(const StopData& sd, const Rat& v) {
  for (const auto& [iv, val] : sd.stops) {
    if (val == v) return &iv;
  }
  return nullptr;
}

}  // namespace

Reparam right_lift(const Reparam& eta, const Reparam& phi,
                   const std::optional<std::vector<Rat>>& extra_stops) {
  const std::vector<Rat> c_eta = stop_values(eta);
  const std::vector<Rat> c_phi = stop_values(phi);
  for (const auto& v : c_phi) {
    if (!contains(c_eta, v)) {
      fail("NoRightLift", "phi has a stop value eta lacks");
    }
  }
  const StopData sd_eta = stop_data(eta);
  const StopData sd_phi = stop_data(phi);

  // Forced stop values of the lift: unique phi-preimages of eta's stop
  // values outside C_phi.
  std::vector<Rat> forced;
  for (const auto& v : c_eta) {
    if (!contains(c_phi, v)) forced.push_back(preimage_min(phi, v));
  }
  std::sort(forced.begin(), forced.end());

  std::vector<Rat> wanted = forced;
  if (extra_stops) {
    wanted = *extra_stops;
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    for (const auto& x : forced) {
      if (!contains(wanted, x)) {
        fail("BadExtraStops", "missing a forced stop value");
      }
    }
    for (const auto& x : wanted) {
      bool ok = contains(forced, x);
      for (const auto& [iv, v] : sd_phi.stops) {
        ok = ok || (iv.lo <= x && x <= iv.hi);
      }
      if (!ok) fail("BadExtraStops", "value outside the allowed sandwich");
    }
  }

  std::vector<Breakpoint> pts;
  // Walk eta's stop intervals in order, filling the move interval to the
  // left of each and finally the one reaching t = 1.
  Rat cursor(0);
  auto emit_move = [&](const Rat& k0, const Rat& k1) {
    if (k0 >= k1) return;
    // Cut at eta's breakpoints and at eta-preimages of phi's breakpoint
    // ordinates; psi = phi^-1 o eta is linear between consecutive cuts.
    std::vector<Rat> cuts;
    for (const auto& bp : eta.points()) {
      if (k0 < bp.x && bp.x < k1) cuts.push_back(bp.x);
    }
    const Rat v0 = eval(eta, k0), v1 = eval(eta, k1);
    for (const auto& bp : phi.points()) {
      if (v0 < bp.y && bp.y < v1) {
        // eta only attains values of (v0, v1) inside this move interval,
        // where it is strictly increasing; the preimage is a single point.
        cuts.push_back(preimage_min(eta, bp.y));
      }
    }
    if (k0 == 0) cuts.push_back(Rat(0));
    if (k1 == 1) cuts.push_back(Rat(1));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (const auto& t : cuts) {
      const Rat v = eval(eta, t);
      // Interior values avoid C_phi, so min and max preimages agree; the
      // endpoints 0 and 1 are fixed points of both maps here.
      pts.push_back({t, preimage_min(phi, v)});
    }
  };

  for (const auto& [iv, v] : sd_eta.stops) {
    emit_move(cursor, iv.lo);
    if (!contains(c_phi, v)) {
      const Rat x = preimage_min(phi, v);  // unique
      pts.push_back({iv.lo, x});
      pts.push_back({iv.hi, x});
    } else {
      const Interval* target = stop_interval_at(sd_phi, v);
      assert(target);
      // Values requested strictly inside the target plateau become extra
      // plateaus of the lift, laid out as in realize_values and rescaled.
      std::vector<Rat> inner;
      for (const auto& x : wanted) {
        if (target->lo <= x && x <= target->hi) inner.push_back(x);
      }
      if (inner.empty()) {
        pts.push_back({iv.lo, target->lo});
        pts.push_back({iv.hi, target->hi});
      } else {
        const Rat w = target->hi - target->lo;
        std::vector<Rat> scaled;
        for (const auto& x : inner) scaled.push_back((x - target->lo) / w);
        const Reparam layout = realize_values(std::move(scaled));
        for (const auto& bp : layout.points()) {
          pts.push_back({iv.lo + bp.x * (iv.hi - iv.lo),
                         target->lo + bp.y * w});
        }
      }
    }
    cursor = iv.hi;
  }
  emit_move(cursor, Rat(1));
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return Reparam::canonicalize(std::move(pts));
}

Reparam left_factor(const Reparam& eta, const Reparam& phi) {
  const StopData sd_eta = stop_data(eta);
  const StopData sd_phi = stop_data(phi);
  for (const auto& [iv, v] : sd_phi.stops) {
    bool inside = false;
    for (const auto& [jv, w] : sd_eta.stops) {
      if (jv.lo <= iv.lo && iv.hi <= jv.hi) {
        inside = true;
        break;
      }
    }
    if (!inside) {
      fail("NoLeftFactor", "a stop interval of phi is not contained in one of eta");
    }
  }
  // psi(phi(t)) = eta(t); sample at the union of both breakpoint grids.
  std::vector<Rat> ts = merged_grid(eta, phi);
  std::vector<Breakpoint> pts;
  for (const auto& t : ts) pts.push_back({eval(phi, t), eval(eta, t)});
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) { return a.x < b.x; });
  std::vector<Breakpoint> dedup;
  for (auto& bp : pts) {
    if (!dedup.empty() && dedup.back().x == bp.x) {
      assert(dedup.back().y == bp.y);
      continue;
    }
    dedup.push_back(std::move(bp));
  }
  return Reparam::canonicalize(std::move(dedup));
}

}  // namespace plrep

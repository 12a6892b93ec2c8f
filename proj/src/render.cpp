#include "plrep/render.hpp"

#include <cstdio>
#include <sstream>

#include "plrep/error.hpp"

namespace plrep {

namespace {

constexpr double kSize = 512.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

double to_d(const Rat& r) { return static_cast<double>(r); }

// Unit square with y inverted for plotting.
double px(const Rat& x) { return to_d(x) * kSize; }
double py(const Rat& y) { return kSize - to_d(y) * kSize; }

void open_svg(std::ostringstream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 512 512\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"512\" height=\"512\" fill=\"#ffffff\" "
         "stroke=\"#888888\"/>\n";
}

void render_reparam(std::ostringstream& out, const Reparam& f) {
  open_svg(out);
  for (const auto& [iv, v] : stop_data(f).stops) {
    out << "<rect class=\"stopband\" x=\"" << num(px(iv.lo)) << "\" y=\"0\" width=\""
        << num(px(iv.hi) - px(iv.lo)) << "\" height=\"512\" fill=\"#e0e0f8\"/>\n";
  }
  out << "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" points=\"";
  bool first = true;
  for (const auto& bp : f.points()) {
    if (!first) out << " ";
    first = false;
    out << num(px(bp.x)) << "," << num(py(bp.y));
  }
  out << "\"/>\n</svg>\n";
}

void render_stopdata(std::ostringstream& out, const StopData& sd) {
  open_svg(out);
  for (const auto& [iv, v] : sd.stops) {
    out << "<rect class=\"stopband\" x=\"" << num(px(iv.lo)) << "\" y=\"0\" width=\""
        << num(px(iv.hi) - px(iv.lo)) << "\" height=\"512\" fill=\"#e0e0f8\"/>\n";
    // The interval-to-value pairing: a horizontal bar at the value over its
    // interval and a tick on the value axis.
    out << "<line x1=\"" << num(px(iv.lo)) << "\" y1=\"" << num(py(v))
        << "\" x2=\"" << num(px(iv.hi)) << "\" y2=\"" << num(py(v))
        << "\" stroke=\"#000000\" stroke-width=\"3\"/>\n";
    out << "<line x1=\"0\" y1=\"" << num(py(v)) << "\" x2=\"8\" y2=\""
        << num(py(v)) << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
}

void render_path(std::ostringstream& out, const Path& p) {
  if (p.dim() > 2) fail("Unrenderable", "can only draw paths with dim <= 2");
  // Bounding box of the drawn coordinates, padded, then mapped to the view.
  Rat xmin(0), xmax(1), ymin(0), ymax(1);
  bool init = false;
  auto upd = [&](const Rat& x, const Rat& y) {
    if (!init) {
      xmin = xmax = x;
      ymin = ymax = y;
      init = true;
    } else {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  };
  auto coords = [&](const PathBreakpoint& bp) {
    // dim 1 is drawn as the graph t -> value; dim 2 as the plane curve.
    return p.dim() == 1 ? std::pair<Rat, Rat>{bp.t, bp.p[0]}
                        : std::pair<Rat, Rat>{bp.p[0], bp.p[1]};
  };
  for (const auto& bp : p.points()) {
    auto [x, y] = coords(bp);
    upd(x, y);
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  auto sx = [&](const Rat& x) {
    return 16.0 + 480.0 * to_d((x - xmin) / (xmax - xmin));
  };
  auto sy = [&](const Rat& y) {
    return kSize - 16.0 - 480.0 * to_d((y - ymin) / (ymax - ymin));
  };
  open_svg(out);
  for (const auto& st : path_stop_data(p).stops) {
    if (p.dim() == 1) {
      out << "<rect class=\"stopband\" x=\"" << num(sx(st.interval.lo))
          << "\" y=\"0\" width=\""
          << num(sx(st.interval.hi) - sx(st.interval.lo))
          << "\" height=\"512\" fill=\"#e0e0f8\"/>\n";
    } else {
      out << "<circle class=\"stoppoint\" cx=\"" << num(sx(st.value[0]))
          << "\" cy=\"" << num(sy(st.value[1]))
          << "\" r=\"5\" fill=\"#e0e0f8\" stroke=\"#000000\"/>\n";
    }
  }
  out << "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" points=\"";
  bool first = true;
  for (const auto& bp : p.points()) {
    auto [x, y] = coords(bp);
    if (!first) out << " ";
    first = false;
    out << num(sx(x)) << "," << num(sy(y));
  }
  out << "\"/>\n</svg>\n";
}

}  // namespace

std::string render(const Document& doc) {
  std::ostringstream out;
  if (const auto* f = std::get_if<Reparam>(&doc.payload)) {
    render_reparam(out, *f);
  } else if (const auto* sd = std::get_if<StopData>(&doc.payload)) {
    render_stopdata(out, *sd);
  } else if (const auto* p = std::get_if<Path>(&doc.payload)) {
    render_path(out, *p);
  } else {
    fail("Unrenderable", "only reparam, path and stopdata can be drawn");
  }
  return out.str();
}

}  // namespace plrep

#pragma once

#include <random>
#include <string>
#include <vector>

#include "plrep/error.hpp"
#include "plrep/trace.hpp"

namespace testutil {

using namespace plrep;

inline Rat rq(const std::string& s) { return parse_rat(s); }

inline Reparam mk(std::vector<std::pair<std::string, std::string>> pts) {
  std::vector<Breakpoint> bps;
  for (auto& [x, y] : pts) bps.push_back({rq(x), rq(y)});
  return Reparam::canonicalize(std::move(bps));
}

// Shared fixtures.
inline Reparam fix_id() { return Reparam::identity(); }

inline Reparam fix_A() {
  return mk({{"0/1", "0/1"}, {"1/4", "1/2"}, {"3/4", "1/2"}, {"1/1", "1/1"}});
}

inline Reparam fix_B() {
  return mk({{"0/1", "0/1"}, {"1/2", "1/4"}, {"3/4", "1/4"}, {"1/1", "1/1"}});
}

inline Reparam fix_AB() {  // compose(fix_A(), fix_B())
  return mk({{"0/1", "0/1"}, {"1/2", "1/2"}, {"11/12", "1/2"}, {"1/1", "1/1"}});
}

inline Path path1(std::vector<std::pair<std::string, std::string>> pts) {
  std::vector<PathBreakpoint> bps;
  for (auto& [t, v] : pts) bps.push_back({rq(t), {rq(v)}});
  return Path::canonicalize(1, std::move(bps));
}

inline Path fix_idpath() { return path1({{"0/1", "0/1"}, {"1/1", "1/1"}}); }

// The 1-space path with the graph of fix_A().
inline Path fix_P1() {
  return path1(
      {{"0/1", "0/1"}, {"1/4", "1/2"}, {"3/4", "1/2"}, {"1/1", "1/1"}});
}

inline Path fix_Pz() {
  return Path::canonicalize(
      2, {{Rat(0), {Rat(0), Rat(0)}},
          {Rat(1) / 2, {Rat(1), Rat(0)}},
          {Rat(1), {Rat(1), Rat(1)}}});
}

inline Path fix_Pc() {
  return Path::canonicalize(2, {{Rat(0), {Rat(0), Rat(0)}},
                                {Rat(1), {Rat(0), Rat(0)}}});
}

using Rng = std::mt19937;

// Random reparametrization with breakpoints on the k/64 grid. Weakly
// increasing ordinates drawn with repeats, so plateaus are common.
inline Reparam rand_reparam(Rng& rng, int max_interior = 8) {
  std::uniform_int_distribution<int> count(0, max_interior);
  std::uniform_int_distribution<int> cell(1, 63);
  const int n = count(rng);
  std::vector<int> xs, ys;
  for (int i = 0; i < n; ++i) {
    xs.push_back(cell(rng));
    ys.push_back(cell(rng));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.resize(xs.size());  // ys stays sorted, repeats allowed
  std::vector<Breakpoint> pts{{Rat(0), Rat(0)}};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    pts.push_back({Rat(xs[i]) / 64, Rat(ys[i]) / 64});
  }
  pts.push_back({Rat(1), Rat(1)});
  return Reparam::canonicalize(std::move(pts));
}

// Random homeomorphism: strictly increasing ordinates.
inline Reparam rand_homeo(Rng& rng, int max_interior = 8) {
  std::uniform_int_distribution<int> count(0, max_interior);
  std::uniform_int_distribution<int> cell(1, 63);
  const int n = count(rng);
  std::vector<int> xs, ys;
  for (int i = 0; i < n; ++i) {
    xs.push_back(cell(rng));
    ys.push_back(cell(rng));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  const std::size_t m = std::min(xs.size(), ys.size());
  std::vector<Breakpoint> pts{{Rat(0), Rat(0)}};
  for (std::size_t i = 0; i < m; ++i) {
    pts.push_back({Rat(xs[i]) / 64, Rat(ys[i]) / 64});
  }
  pts.push_back({Rat(1), Rat(1)});
  return Reparam::canonicalize(std::move(pts));
}

// Random path on a k/64 time grid, coordinates on the j/8 grid in [-2, 2].
// With plateaus: a breakpoint repeats the previous point now and then.
inline Path rand_path(Rng& rng, int dim, int max_interior = 10) {
  std::uniform_int_distribution<int> count(0, max_interior);
  std::uniform_int_distribution<int> cell(1, 63);
  std::uniform_int_distribution<int> coord(-16, 16);
  std::uniform_int_distribution<int> hold(0, 3);
  const int n = count(rng);
  std::vector<int> ts;
  for (int i = 0; i < n; ++i) ts.push_back(cell(rng));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  auto rand_point = [&]() {
    Point p;
    for (int k = 0; k < dim; ++k) p.push_back(Rat(coord(rng)) / 8);
    return p;
  };
  std::vector<PathBreakpoint> pts{{Rat(0), rand_point()}};
  for (int t : ts) {
    Point p = hold(rng) == 0 ? pts.back().p : rand_point();
    pts.push_back({Rat(t) / 64, std::move(p)});
  }
  pts.push_back({Rat(1), rand_point()});
  return Path::canonicalize(dim, std::move(pts));
}

}  // namespace testutil

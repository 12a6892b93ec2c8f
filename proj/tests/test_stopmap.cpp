#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace plrep;
using namespace testutil;

static StopData sd1(const std::string& lo, const std::string& hi,
                    const std::string& v) {
  StopData sd;
  sd.stops.push_back({{rq(lo), rq(hi)}, rq(v)});
  return sd;
}

TEST_CASE("stop_data") {
  CHECK(stop_data(Reparam::identity()).empty());
  CHECK(stop_data(fix_A()) == sd1("1/4", "3/4", "1/2"));
  CHECK(stop_data(fix_AB()) == sd1("1/2", "11/12", "1/2"));
}

TEST_CASE("stop data validation") {
  CHECK_NOTHROW(sd1("1/4", "3/4", "1/2").validate());
  CHECK_THROWS_AS(sd1("3/4", "1/4", "1/2").validate(), Error);  // degenerate
  CHECK_THROWS_AS(sd1("0", "1/2", "1/4").validate(), Error);    // 0 rule
  CHECK_THROWS_AS(sd1("1/2", "1", "3/4").validate(), Error);    // 1 rule
  CHECK_THROWS_AS(sd1("1/4", "3/4", "0").validate(), Error);    // 0 rule, dual
  StopData bad;  // overlapping intervals
  bad.stops.push_back({{rq("0/1"), rq("1/2")}, rq("0/1")});
  bad.stops.push_back({{rq("1/4"), rq("3/4")}, rq("1/2")});
  CHECK_THROWS_AS(bad.validate(), Error);
  StopData decreasing;  // values must increase with the intervals
  decreasing.stops.push_back({{rq("1/8"), rq("1/4")}, rq("3/4")});
  decreasing.stops.push_back({{rq("1/2"), rq("5/8")}, rq("1/4")});
  CHECK_THROWS_AS(decreasing.validate(), Error);
}

TEST_CASE("move_intervals") {
  CHECK(move_intervals(Reparam::identity()) ==
        std::vector<Interval>{{Rat(0), Rat(1)}});
  CHECK(move_intervals(fix_A()) ==
        std::vector<Interval>{{Rat(0), rq("1/4")}, {rq("3/4"), Rat(1)}});
  CHECK(move_intervals(realize_values({Rat(0)})) ==
        std::vector<Interval>{{rq("2/3"), Rat(1)}});
}

TEST_CASE("maps are strictly increasing on move intervals") {
  Rng rng(201);
  for (int i = 0; i < 40; ++i) {
    const Reparam f = rand_reparam(rng);
    for (const Interval& iv : move_intervals(f)) {
      Rat prev = eval(f, iv.lo);
      for (int k = 1; k <= 8; ++k) {
        const Rat t = iv.lo + (iv.hi - iv.lo) * k / 8;
        const Rat v = eval(f, t);
        CHECK(v > prev);
        prev = v;
      }
    }
  }
}

TEST_CASE("compose_stop_data fixtures") {
  const Reparam A = fix_A(), B = fix_B(), id = Reparam::identity();
  CHECK(compose_stop_data(A, id) == stop_data(A));
  CHECK(compose_stop_data(id, A) == stop_data(A));
  CHECK(compose_stop_data(A, B) == sd1("1/2", "11/12", "1/2"));
}

TEST_CASE("compose_stop_data oracle") {
  Rng rng(202);
  for (int i = 0; i < 200; ++i) {
    const Reparam f = rand_reparam(rng), g = rand_reparam(rng);
    CHECK(compose_stop_data(f, g) == stop_data(compose(f, g)));
  }
}

TEST_CASE("homeo factor specializations") {
  Rng rng(203);
  for (int i = 0; i < 60; ++i) {
    const Reparam f = rand_reparam(rng);
    const Reparam h = rand_homeo(rng);
    // Precomposing with a homeomorphism keeps the stop values.
    CHECK(stop_values(compose(f, h)) == stop_values(f));
    // Postcomposing with a homeomorphism pushes them forward.
    std::vector<Rat> pushed;
    for (const Rat& v : stop_values(f)) pushed.push_back(eval(h, v));
    CHECK(stop_values(compose(h, f)) == pushed);
  }
}

TEST_CASE("realize") {
  CHECK(realize(StopData{}) == Reparam::identity());
  CHECK(realize(sd1("1/4", "3/4", "1/2")) == fix_A());
  CHECK_THROWS_AS(realize(sd1("0", "1/2", "1/4")), Error);
}

TEST_CASE("realization round-trips") {
  Rng rng(204);
  for (int i = 0; i < 60; ++i) {
    const Reparam f = rand_reparam(rng);
    const StopData sd = stop_data(f);
    CHECK(stop_data(realize(sd)) == sd);
  }
}

TEST_CASE("realize_values") {
  CHECK(realize_values({}) == Reparam::identity());
  CHECK(realize_values({rq("1/2")}) ==
        mk({{"0", "0"}, {"1/3", "1/2"}, {"2/3", "1/2"}, {"1", "1"}}));
  CHECK(realize_values({rq("1/4"), rq("1/2")}) ==
        mk({{"0", "0"}, {"1/5", "1/4"}, {"2/5", "1/4"}, {"3/5", "1/2"},
            {"4/5", "1/2"}, {"1", "1"}}));
  CHECK_THROWS_AS(realize_values({rq("3/2")}), Error);
  Rng rng(205);
  for (int i = 0; i < 60; ++i) {
    std::uniform_int_distribution<int> cell(0, 64);
    std::vector<Rat> vals;
    for (int k = 0; k < i % 6; ++k) vals.push_back(Rat(cell(rng)) / 64);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    CHECK(stop_values(realize_values(vals)) == vals);
  }
}

TEST_CASE("countable_builder fixtures") {
  CHECK(countable_builder({rq("1/2")}, 0) == Reparam::identity());
  CHECK(countable_builder({rq("1/2")}, 1) ==
        mk({{"0", "0"}, {"3/8", "1/2"}, {"5/8", "1/2"}, {"1", "1"}}));
  const Reparam one = countable_builder({rq("1/2"), rq("1/4")}, 1);
  const Reparam two = countable_builder({rq("1/2"), rq("1/4")}, 2);
  CHECK(stop_values(two) == std::vector<Rat>{rq("1/4"), rq("1/2")});
  CHECK(sup_distance(one, two) < 1);
  CHECK_THROWS_AS(countable_builder({rq("1/2"), rq("1/2")}, 2), Error);
}

TEST_CASE("countable_builder convergence") {
  Rng rng(206);
  std::uniform_int_distribution<int> cell(0, 64);
  for (int i = 0; i < 20; ++i) {
    std::vector<Rat> vals;
    while (vals.size() < 8) {
      const Rat v = Rat(cell(rng)) / 64;
      if (std::find(vals.begin(), vals.end(), v) == vals.end())
        vals.push_back(v);
    }
    Reparam prev = countable_builder(vals, 0);
    Rat bound(1);
    for (std::size_t n = 1; n <= vals.size(); ++n) {
      const Reparam next = countable_builder(vals, n);
      CHECK(sup_distance(prev, next) < bound);
      std::vector<Rat> expect(vals.begin(), vals.begin() + n);
      std::sort(expect.begin(), expect.end());
      CHECK(stop_values(next) == expect);
      prev = next;
      bound /= 2;
    }
  }
}

TEST_CASE("approx_homeo") {
  CHECK(approx_homeo(Reparam::identity(), 5) == Reparam::identity());
  CHECK(approx_homeo(fix_A(), 2) == mk({{"0", "0"}, {"1/4", "1/2"}, {"1", "1"}}));
  CHECK(sup_distance(fix_A(), approx_homeo(fix_A(), 2)) == rq("1/3"));
  const Reparam a4 = approx_homeo(fix_A(), 4);
  CHECK(sup_distance(fix_A(), a4) <= rq("1/4"));
}

TEST_CASE("approx_noninjective") {
  CHECK(approx_noninjective(Reparam::identity(), 4) ==
        mk({{"0", "0"}, {"1/8", "0"}, {"1/4", "1/4"}, {"1", "1"}}));
  CHECK(approx_noninjective(Reparam::identity(), 1) ==
        mk({{"0", "0"}, {"1/2", "0"}, {"1", "1"}}));
}

TEST_CASE("density bounds") {
  Rng rng(207);
  std::uniform_int_distribution<int> pick_n(1, 64);
  for (int i = 0; i < 60; ++i) {
    const Reparam f = rand_reparam(rng);
    const unsigned n = pick_n(rng);
    const Reparam h = approx_homeo(f, n);
    CHECK(is_homeo(h));
    CHECK(sup_distance(f, h) <= Rat(1) / n);
    const Reparam s = approx_noninjective(f, n);
    CHECK(!is_homeo(s));
    CHECK(!stop_values(s).empty());
    CHECK(sup_distance(f, s) <= Rat(1) / n);
  }
}

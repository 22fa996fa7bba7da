#include "amenity/foelner.hpp"

#include <set>
#include <vector>

#include "amenity/error.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace amenity;
using amenity::testutil::Rng;
using amenity::testutil::pick;
using amenity::testutil::random_elem;
using amenity::testutil::random_prob;

namespace {

TransformationGroup point_setup(const GroupPtr& g) {
  return TransformationGroup(Space::point(), g, ActionKind::Trivial,
                             ActionKind::Trivial);
}

FoelnerPair point_region(const TransformationGroup& t,
                         const std::vector<Elem>& b) {
  std::vector<Cell> cells;
  for (const auto& e : b) cells.emplace_back(t.space()->pt(), e);
  return make_region(t, std::move(cells));
}

}  // namespace

TEST_CASE("region construction and mass") {
  auto z = Group::free_abelian(1);
  auto t = point_setup(z);
  auto w = point_region(t, ball(z, 2));
  CHECK(w.cells.size() == 5);
  CHECK(w.mass == Rat(5));

  CHECK_THROWS_AS(make_region(t, {}), ConfigError);
  std::vector<Cell> dup{{t.space()->pt(), z->vec({0})},
                        {t.space()->pt(), z->vec({0})}};
  CHECK_THROWS_AS(make_region(t, dup), ConfigError);

  auto f2 = Group::free_group(2);
  std::vector<Cell> foreign{{t.space()->pt(), f2->word("a")}};
  CHECK_THROWS_AS(make_region(t, foreign), DomainError);

  // weighted sections contribute mu(x) * haar(t)
  auto x2 = Space::finite(2, {Rat(1, 3), Rat(2, 3)});
  TransformationGroup tw(x2, z, ActionKind::Trivial, ActionKind::Trivial);
  std::vector<Cell> cells{{x2->at(0), z->vec({0})}, {x2->at(0), z->vec({1})},
                          {x2->at(1), z->vec({1})}, {x2->at(1), z->vec({2})}};
  auto ww = make_region(tw, cells);
  CHECK(ww.mass == Rat(2));

  auto win = make_window(tw, {x2->at(0), x2->at(1)}, {z->vec({0}), z->vec({1})});
  auto prod = region_from_window(tw, win);
  CHECK(prod.cells.size() == 4);
  CHECK(prod.mass == Rat(2));
}

TEST_CASE("deficit of shifted intervals and balls") {
  auto z = Group::free_abelian(1);
  auto t = point_setup(z);

  std::vector<Elem> interval;
  for (int i = 0; i <= 9; ++i) interval.push_back(z->vec({i}));
  auto w = point_region(t, interval);
  CHECK(foelner_deficit(t, w, z->vec({1})) == Rat(1, 5));
  CHECK(foelner_deficit(t, w, z->identity()) == Rat(0));
  CHECK(foelner_deficit(t, w, z->vec({-1})) == Rat(1, 5));
  CHECK(foelner_deficit(t, w, z->vec({3})) == Rat(3, 5));

  for (int n = 1; n <= 8; ++n) {
    auto bn = point_region(t, ball(z, n));
    CHECK(foelner_deficit(t, bn, z->vec({1})) == Rat(2, 2 * n + 1));
  }

  auto f2 = Group::free_group(2);
  auto tf = point_setup(f2);
  long pow3 = 3;
  for (int r = 1; r <= 4; ++r, pow3 *= 3) {
    auto br = point_region(tf, ball(f2, r));
    Rat expect(2 * pow3, 2 * pow3 - 1);
    CHECK(foelner_deficit(tf, br, f2->word("a")) == expect);
    CHECK(expect >= Rat(1));
  }
  auto b1 = point_region(tf, ball(f2, 1));
  CHECK(foelner_deficit(tf, b1, f2->word("a")) == Rat(6, 5));
}

TEST_CASE("deficit sees the diagonal action on the space part") {
  auto z = Group::free_abelian(1);
  auto x = Space::carrier(z);
  TransformationGroup t(x, z, ActionKind::CarrierLeft);
  std::vector<Cell> cells;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 9; ++j)
      cells.emplace_back(x->carrier_point(z->vec({i})), z->vec({j}));
  auto w = make_region(t, std::move(cells));
  // 5x10 block moved one step along both axes: |A| + |B| - 2|A cap B|
  CHECK(foelner_deficit(t, w, z->vec({1})) == Rat(100 - 2 * 36, 50));
}

TEST_CASE("indicator density of a region") {
  auto z = Group::free_abelian(1);
  auto t = point_setup(z);
  std::vector<Elem> interval;
  for (int i = 0; i <= 9; ++i) interval.push_back(z->vec({i}));
  auto w = point_region(t, interval);
  auto f = indicator_net(t, w, 3);
  CHECK(f.stage == 3);
  CHECK(f.sections.empty());
  REQUIRE(f.common.has_value());
  CHECK(*f.common == uniform(interval));
  CHECK(f.section(t.space()->pt()) != nullptr);

  // weighted non-product region: density collects mu over each column
  auto x2 = Space::finite(2, {Rat(1, 3), Rat(2, 3)});
  TransformationGroup tw(x2, z, ActionKind::Trivial, ActionKind::Trivial);
  std::vector<Cell> cells{{x2->at(0), z->vec({0})}, {x2->at(0), z->vec({1})},
                          {x2->at(1), z->vec({1})}, {x2->at(1), z->vec({2})}};
  auto fw = indicator_net(tw, make_region(tw, cells));
  REQUIRE(fw.common.has_value());
  CHECK(fw.common->at(z->vec({0})) == Rat(1, 6));
  CHECK(fw.common->at(z->vec({1})) == Rat(1, 2));
  CHECK(fw.common->at(z->vec({2})) == Rat(1, 3));
  CHECK(haar_mass(*fw.common, z) == Rat(1));
}

TEST_CASE("indicator sections always have haar-mass one") {
  Rng rng(20260818);
  std::vector<GroupPtr> groups{Group::free_abelian(1), Group::free_abelian(2),
                               Group::free_group(2), Group::lamp_sum()};
  for (int iter = 0; iter < 60; ++iter) {
    const auto& g = groups[iter % groups.size()];
    auto x = Space::finite(3, {Rat(1, 2), Rat(1, 3), Rat(1, 6)});
    TransformationGroup t(x, g, ActionKind::Trivial, ActionKind::Trivial);
    std::set<Cell, CellLess> cells;
    int want = pick(rng, 1, 12);
    while ((int)cells.size() < want)
      cells.emplace(x->at(pick(rng, 0, 2)), random_elem(rng, g, 3));
    auto w = make_region(t, {cells.begin(), cells.end()});
    auto f = indicator_net(t, w);
    for (int i = 0; i < 3; ++i)
      CHECK(haar_mass(*f.section(x->at(i)), g) == Rat(1));
  }
}

TEST_CASE("invariance defect of interval and ball densities") {
  auto z = Group::free_abelian(1);
  auto t = point_setup(z);
  auto pt = t.space()->pt();
  for (int n = 1; n <= 6; ++n) {
    auto f = indicator_net(t, point_region(t, ball(z, n)));
    CHECK(aicm_inv_defect_at(t, f, pt, z->vec({1})) == Rat(2, 2 * n + 1));
    CHECK(aicm_inv_defect_at(t, f, pt, z->identity()) == Rat(0));
  }
  auto f2 = Group::free_group(2);
  auto tf = point_setup(f2);
  auto f = indicator_net(tf, point_region(tf, ball(f2, 1)));
  CHECK(aicm_inv_defect_at(tf, f, tf.space()->pt(), f2->word("a")) ==
        Rat(6, 5));

  Window k = make_window(t, {pt}, {z->vec({1}), z->vec({-1})});
  auto d = aicm_defect(t, indicator_net(t, point_region(t, ball(z, 10))), k);
  CHECK(d.norm == Rat(0));
  CHECK(d.inv == Rat(2, 21));
  CHECK_FALSE(d.missing_sections);
}

TEST_CASE("point-space deficit equals indicator invariance defect") {
  Rng rng(7117);
  std::vector<GroupPtr> groups{Group::free_abelian(1), Group::free_group(2)};
  for (int iter = 0; iter < 50; ++iter) {
    const auto& g = groups[iter % groups.size()];
    auto t = point_setup(g);
    std::set<Elem, ElemLess> atoms;
    int want = pick(rng, 1, 10);
    while ((int)atoms.size() < want) atoms.insert(random_elem(rng, g, 12));
    auto w = point_region(t, {atoms.begin(), atoms.end()});
    Elem s = random_elem(rng, g, 2);
    CHECK(aicm_inv_defect_at(t, indicator_net(t, w), t.space()->pt(), s) ==
          foelner_deficit(t, w, s));
  }
}

TEST_CASE("indicator invariance defect never exceeds the region deficit") {
  Rng rng(90210);
  std::vector<GroupPtr> groups{Group::free_abelian(1), Group::free_abelian(2),
                               Group::free_group(2), Group::lamp_sum()};
  for (int iter = 0; iter < 80; ++iter) {
    const auto& g = groups[iter % groups.size()];
    SpacePtr x;
    std::optional<TransformationGroup> t;
    std::vector<Point> pts;
    if (iter % 2 == 0) {
      x = Space::finite(3, {Rat(1, 2), Rat(1, 3), Rat(1, 6)});
      t.emplace(x, g, ActionKind::Trivial, ActionKind::Trivial);
      pts = x->universe(8);
    } else {
      x = Space::carrier(g);
      t.emplace(x, g, ActionKind::CarrierLeft);
      for (const auto& e : ball(g, 1)) pts.push_back(x->carrier_point(e));
    }
    std::set<Cell, CellLess> cells;
    int want = pick(rng, 1, 12);
    while ((int)cells.size() < want)
      cells.emplace(pts[pick(rng, 0, (int)pts.size() - 1)],
                    random_elem(rng, g, 3));
    auto w = make_region(*t, {cells.begin(), cells.end()});
    auto f = indicator_net(*t, w);
    Elem s = random_elem(rng, g, 2);
    const Point& at = pts[pick(rng, 0, (int)pts.size() - 1)];
    CHECK(aicm_inv_defect_at(*t, f, at, s) <= foelner_deficit(*t, w, s));
  }
}

TEST_CASE("missing sections are flagged and read as zero") {
  auto z = Group::free_abelian(1);
  auto x = Space::finite(2);
  TransformationGroup t(x, z, ActionKind::Trivial, ActionKind::Trivial);
  NetFunction f;
  f.sections.emplace(x->at(0), uniform({z->vec({0}), z->vec({1})}));
  Window k = make_window(t, {x->at(0), x->at(1)}, {z->vec({1})});
  auto d = aicm_defect(t, f, k);
  CHECK(d.missing_sections);
  CHECK(d.norm == Rat(1));  // absent section has mass 0
  CHECK(d.inv == Rat(1));   // |f^x - 0| pulled against the stored section
}

TEST_CASE("stagewise certification against a shrinking schedule") {
  auto z = Group::free_abelian(1);
  auto t = point_setup(z);
  auto pt = t.space()->pt();
  std::vector<NetFunction> nets;
  for (int n = 1; n <= 20; ++n)
    nets.push_back(indicator_net(t, point_region(t, ball(z, n)), n));
  Window k = make_window(t, {pt}, {z->vec({1}), z->vec({-1})});
  std::vector<Rat> eps{Rat(1, 2), Rat(1, 4), Rat(1, 10)};
  auto rep = verify_aicm(t, nets, k, eps);
  CHECK(rep.certified);
  CHECK(rep.rows.size() == 40);
  CHECK(rep.stage_max.size() == 20);
  for (int n = 1; n <= 20; ++n)
    CHECK(rep.stage_max[n - 1] == Rat(2, 2 * n + 1));
  CHECK(rep.rows.front().label == "-1");
  CHECK(rep.rows.front().inv_defect == Rat(2, 3));
  CHECK(rep.rows.back().inv_defect == Rat(2, 41));

  auto f2 = Group::free_group(2);
  auto tf = point_setup(f2);
  std::vector<NetFunction> fnets;
  for (int r = 1; r <= 4; ++r)
    fnets.push_back(indicator_net(tf, point_region(tf, ball(f2, r)), r));
  Window kf =
      make_window(tf, {tf.space()->pt()}, {f2->word("a"), f2->word("b")});
  auto frep = verify_aicm(tf, fnets, kf, eps);
  CHECK_FALSE(frep.certified);
  for (const auto& m : frep.stage_max) CHECK(m >= Rat(1));
  CHECK(frep.stage_max.front() == Rat(6, 5));

  CHECK_THROWS_AS(verify_aicm(t, nets, k, {}), ConfigError);
  CHECK_THROWS_AS(verify_aicm(t, nets, k, {Rat(0)}), ConfigError);
  CHECK_THROWS_AS(verify_aicm(t, nets, k, {Rat(1, 4), Rat(1, 2)}),
                  ConfigError);
  CHECK_THROWS_AS(verify_aicm(t, {}, k, eps), ConfigError);
}

TEST_CASE("trivial group certifies instantly") {
  auto c1 = Group::cyclic(1);
  auto t = point_setup(c1);
  std::vector<NetFunction> nets;
  for (int n = 1; n <= 3; ++n)
    nets.push_back(indicator_net(t, point_region(t, ball(c1, n)), n));
  Window k = make_window(t, {t.space()->pt()}, {c1->identity()});
  auto rep = verify_aicm(t, nets, k, {Rat(1, 1000)});
  CHECK(rep.certified);
  for (const auto& m : rep.stage_max) CHECK(m == Rat(0));
}

TEST_CASE("mixing a density toward a bump") {
  auto z = Group::free_abelian(1);
  auto pt = Space::point()->pt();

  NetFunction f;
  GFn half;
  half.set(z->vec({0}), Rat(1, 2));
  f.sections.emplace(pt, half);
  GFn bump = uniform({z->vec({0}), z->vec({1})});
  auto out = regularize(z, f, bump, 2);
  REQUIRE(out.sections.size() == 1);
  const GFn& sec = out.sections.begin()->second;
  CHECK(sec.at(z->vec({0})) == Rat(3, 4));
  CHECK(sec.at(z->vec({1})) == Rat(1, 4));
  CHECK(haar_mass(sec, z) == Rat(1));

  // zero net: the mixture is the bump itself
  NetFunction zero;
  auto out0 = regularize(z, zero, delta(z->identity()), 1, {pt});
  CHECK(out0.sections.at(pt) == delta(z->identity()));

  CHECK_THROWS_AS(regularize(z, f, bump, 0), DomainError);
  GFn heavy = bump.scaled(Rat(2));
  CHECK_THROWS_AS(regularize(z, f, heavy, 2), DomainError);
  CHECK_THROWS_AS(regularize(z, zero, bump, 1), ConfigError);
}

TEST_CASE("regularized random nets are probabilities") {
  Rng rng(5150);
  std::vector<GroupPtr> groups{Group::free_abelian(2), Group::free_group(2),
                               Group::cyclic(12)};
  auto pt = Space::point()->pt();
  for (int iter = 0; iter < 40; ++iter) {
    const auto& g = groups[iter % groups.size()];
    NetFunction f;
    GFn raw = amenity::testutil::random_fn(rng, g, pick(rng, 0, 6), 3);
    if (!raw.empty()) f.sections.emplace(pt, raw);
    GFn bump = random_prob(rng, g, pick(rng, 1, 4), 2);
    long n = pick(rng, 1, 9);
    auto out = regularize(g, f, bump, n, {pt});
    const GFn& sec = out.sections.at(pt);
    CHECK(is_probability(sec));
    // mixture weights: (f + bump/n) / (|f| + 1/n)
    Rat denom = haar_mass(raw, g) + Rat(1, n);
    for (const auto& [e, v] : sec.entries())
      CHECK(v == (raw.at(e) + bump.at(e) / Rat(n)) / denom);
  }
}

#include <cstdint>
#include <string>
#include <vector>

#include "amenity/action.hpp"
#include "amenity/group.hpp"
#include "amenity/space.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace amenity;
using testutil::Rng;
using testutil::pick;

TEST_CASE("finite spaces carry point weights") {
  auto plain = Space::finite(3);
  CHECK(plain->mu(plain->at(0)) == Rat(1));
  CHECK(plain->mu(plain->at(2)) == Rat(1));
  CHECK(plain->format(plain->at(2)) == "x2");
  CHECK(plain->parse("x2") == plain->at(2));
  CHECK(plain->universe(10).size() == 3);
  CHECK_THROWS_AS(plain->at(3), DomainError);
  CHECK_THROWS_AS(plain->at(-1), DomainError);
  CHECK_THROWS_AS(plain->parse("y1"), ParseError);

  auto weighted = Space::finite(3, {Rat(1, 2), Rat(1, 3), Rat(1, 6)});
  CHECK(weighted->mu(weighted->at(1)) == Rat(1, 3));
  CHECK_THROWS_AS(Space::finite(0), ConstructionError);
  CHECK_THROWS_AS(Space::finite(2, {Rat(1)}), ConstructionError);
  CHECK_THROWS_AS(Space::finite(2, {Rat(1), Rat(0)}), ConstructionError);
  CHECK_THROWS_AS(Space::finite(2, {Rat(1), Rat(-1, 2)}), ConstructionError);
}

TEST_CASE("point and carrier spaces") {
  auto one = Space::point();
  CHECK(one->format(one->pt()) == "pt");
  CHECK(one->parse("pt") == one->pt());
  CHECK(one->universe(1).size() == 1);
  CHECK(one->mu(one->pt()) == Rat(1));

  auto z = Group::free_abelian(1);
  auto car = Space::carrier(z);
  Point x = car->carrier_point(z->vec({3}));
  CHECK(car->format(x) == "3");
  CHECK(car->parse("3") == x);
  CHECK(car->mu(x) == Rat(1));
  CHECK_THROWS_AS(car->universe(1000000), ConfigError);
  CHECK_THROWS_AS(car->check_member(one->pt(), "test"), DomainError);
  auto f2 = Group::free_group(2);
  CHECK_THROWS_AS(car->carrier_point(f2->word("a")), DomainError);
}

TEST_CASE("boundary spaces hold reduced words of exact depth") {
  auto bd = Space::boundary(2, 3);
  Point x = bd->boundary_point("abA");
  CHECK(bd->format(x) == "abA");
  CHECK(bd->parse("abA") == x);
  CHECK_THROWS_AS(bd->boundary_point("ab"), DomainError);    // too short
  CHECK_THROWS_AS(bd->boundary_point("abab"), DomainError);  // too long
  CHECK_THROWS_AS(bd->boundary_point("aAb"), DomainError);   // not reduced
  CHECK_THROWS_AS(bd->boundary_point("abx"), DomainError);   // no such letter
  CHECK_THROWS_AS(Space::boundary(0, 3), ConstructionError);
  CHECK_THROWS_AS(Space::boundary(2, 0), ConstructionError);

  // 2k(2k-1)^{d-1} reduced words of depth d over k free generators.
  CHECK(Space::boundary(2, 1)->universe(100).size() == 4);
  CHECK(Space::boundary(2, 2)->universe(100).size() == 12);
  CHECK(bd->universe(100).size() == 36);
  CHECK_THROWS_AS(bd->universe(10), ConfigError);
  for (const auto& p : bd->universe(100)) CHECK(bd->parse(bd->format(p)) == p);
}

TEST_CASE("product spaces multiply weights") {
  auto a = Space::finite(2, {Rat(1, 2), Rat(3, 2)});
  auto b = Space::finite(3);
  auto p = Space::product(a, b);
  Point x = p->pair_point(a->at(1), b->at(2));
  CHECK(p->mu(x) == Rat(3, 2));
  CHECK(p->format(x) == "(x1;x2)");
  CHECK(p->parse("(x1;x2)") == x);
  CHECK(p->universe(10).size() == 6);
  // Finite points are structural, so x0 belongs to both factors; an index
  // past the first factor's size does not.
  CHECK_NOTHROW(p->pair_point(b->at(0), b->at(0)));
  CHECK_THROWS_AS(p->pair_point(b->at(2), b->at(0)), DomainError);

  auto pb = Space::product(Space::finite(2), Space::boundary(2, 2));
  for (const auto& q : pb->universe(100)) CHECK(pb->parse(pb->format(q)) == q);
}

TEST_CASE("carrier translations from both sides") {
  auto z = Group::free_abelian(1);
  auto car = Space::carrier(z);
  TransformationGroup t(car, z, ActionKind::CarrierLeft, ActionKind::CarrierRight);
  CHECK(t.act_left(z->vec({2}), car->carrier_point(z->vec({3}))) ==
        car->carrier_point(z->vec({5})));
  CHECK(t.act_right(car->carrier_point(z->vec({3})), z->vec({2})) ==
        car->carrier_point(z->vec({5})));

  auto f2 = Group::free_group(2);
  auto carf = Space::carrier(f2);
  TransformationGroup tf(carf, f2, ActionKind::CarrierLeft,
                         ActionKind::InverseRight);
  CHECK(tf.act_left(f2->word("a"), carf->carrier_point(f2->word("b"))) ==
        carf->carrier_point(f2->word("ab")));
  CHECK(tf.right_kind() == ActionKind::InverseRight);

  Rng rng(41);
  for (int i = 0; i < 40; ++i) {
    Elem s = testutil::random_elem(rng, f2, 3);
    Elem u = testutil::random_elem(rng, f2, 3);
    Point x = carf->carrier_point(testutil::random_elem(rng, f2, 3));
    // Left action laws.
    CHECK(tf.act_left(f2->identity(), x) == x);
    CHECK(tf.act_left(s, tf.act_left(u, x)) == tf.act_left(f2->mul(s, u), x));
    // The inverse-bridged right action is a genuine right action.
    CHECK(tf.act_right(x, s) == tf.act_left(f2->inv(s), x));
    CHECK(tf.act_right(tf.act_right(x, s), u) ==
          tf.act_right(x, f2->mul(s, u)));
  }

  CHECK_THROWS_AS(TransformationGroup(Space::point(), f2, ActionKind::CarrierLeft),
                  ConstructionError);
  CHECK_THROWS_AS(TransformationGroup(carf, z, ActionKind::CarrierLeft),
                  ConstructionError);
  TransformationGroup no_right(carf, f2, ActionKind::CarrierLeft);
  CHECK_THROWS_AS(no_right.act_right(carf->carrier_point(f2->identity()),
                                     f2->word("a")),
                  DomainError);
  CHECK_THROWS_AS(no_right.right_kind(), DomainError);
}

TEST_CASE("boundary action prepends and renormalizes the prefix") {
  auto f2 = Group::free_group(2);
  auto bd = Space::boundary(2, 6);
  TransformationGroup t(bd, f2, ActionKind::BoundaryLeft);

  // Plain prepend with one junction cancellation.
  CHECK(t.act_left(f2->word("a"), bd->boundary_point("Abaabb")) ==
        bd->boundary_point("baabbb"));
  // Overflow truncates back to the stored depth.
  CHECK(t.act_left(f2->word("a"), bd->boundary_point("aaaaaa")) ==
        bd->boundary_point("aaaaaa"));
  CHECK(t.act_left(f2->word("ba"), bd->boundary_point("ababab")) ==
        bd->boundary_point("baabab"));
  // Identity acts trivially at full precision.
  CHECK(t.act_left(f2->identity(), bd->boundary_point("abaBAB")) ==
        bd->boundary_point("abaBAB"));
  // Cancelling the whole stored prefix is a hard error, not a guess, both
  // when the cancellation lands exactly and when it overshoots.
  CHECK_THROWS_AS(t.act_left(f2->word("AAAAAA"), bd->boundary_point("aaaaaa")),
                  DomainError);
  CHECK_THROWS_AS(t.act_left(f2->word("AAAAAAA"), bd->boundary_point("aaaaaa")),
                  DomainError);

  CHECK_THROWS_AS(TransformationGroup(bd, Group::free_group(3),
                                      ActionKind::BoundaryLeft),
                  ConstructionError);
  CHECK_THROWS_AS(TransformationGroup(bd, Group::free_abelian(1),
                                      ActionKind::BoundaryLeft),
                  ConstructionError);
}

TEST_CASE("boundary action is compatible on the surviving prefix") {
  // Truncation at the stored depth means g.(h.x) and (gh).x can disagree in
  // the deepest letters; both provably match the untruncated action on the
  // first depth - |g| - |h| letters.
  auto f2 = Group::free_group(2);
  const int depth = 16;
  auto bd = Space::boundary(2, depth);
  TransformationGroup t(bd, f2, ActionKind::BoundaryLeft);
  Rng rng(99);
  auto random_word = [&] {
    Elem::Word w;
    for (int k = 0; k < depth; ++k) {
      std::int32_t l;
      do {
        l = static_cast<std::int32_t>(pick(rng, 1, 2));
        if (pick(rng, 0, 1)) l = -l;
      } while (!w.empty() && w.back() == -l);
      w.push_back(l);
    }
    return bd->boundary_point(std::move(w));
  };
  for (int i = 0; i < 60; ++i) {
    Elem s = testutil::random_elem(rng, f2, 3);
    Elem u = testutil::random_elem(rng, f2, 3);
    Point x = random_word();
    Point two_step = t.act_left(s, t.act_left(u, x));
    Point one_step = t.act_left(f2->mul(s, u), x);
    int keep = depth - static_cast<int>(s.letters().size()) -
               static_cast<int>(u.letters().size());
    for (int k = 0; k < keep; ++k)
      CHECK(two_step.boundary_word()[k] == one_step.boundary_word()[k]);
  }
}

TEST_CASE("product pairs act through the second coordinate") {
  auto z = Group::free_abelian(1);
  auto lamp_cfg = Group::lamp_sum();
  auto lamplighter = Group::semidirect(lamp_cfg, z, TauFamily::shift());
  auto y = Space::carrier(z);
  TransformationGroup t_n(y, lamp_cfg, ActionKind::Trivial);
  TransformationGroup t_h(y, z, ActionKind::CarrierLeft);
  auto t = TransformationGroup::product_action(t_n, t_h, lamplighter);

  CHECK(t.space()->kind() == Space::Kind::Product);
  CHECK(t.left_kind() == ActionKind::ProductSecondLeft);
  Point p = t.space()->pair_point(y->carrier_point(z->vec({4})),
                                  y->carrier_point(z->vec({-1})));
  Elem s = lamplighter->pair(lamp_cfg->lamps({0, 7}), z->vec({3}));
  Point moved = t.act_left(s, p);
  CHECK(moved.first() == y->carrier_point(z->vec({4})));
  CHECK(moved.second() == y->carrier_point(z->vec({2})));

  Rng rng(7);
  for (int i = 0; i < 30; ++i) {
    Elem a = testutil::random_elem(rng, lamplighter, 3);
    Elem b = testutil::random_elem(rng, lamplighter, 3);
    Point q = t.space()->pair_point(
        y->carrier_point(testutil::random_elem(rng, z, 5)),
        y->carrier_point(testutil::random_elem(rng, z, 5)));
    CHECK(t.act_left(a, t.act_left(b, q)) ==
          t.act_left(lamplighter->mul(a, b), q));
    CHECK(t.act_left(lamplighter->identity(), q) == q);
  }

  TransformationGroup busy_n(y, lamp_cfg, ActionKind::Trivial);
  // Structurally equal spaces interoperate even across instances.
  TransformationGroup alias_space(Space::carrier(Group::free_abelian(1)), z,
                                  ActionKind::CarrierLeft);
  CHECK_NOTHROW(TransformationGroup::product_action(busy_n, alias_space,
                                                    lamplighter));
  TransformationGroup other_space(Space::point(), z, ActionKind::Trivial);
  CHECK_THROWS_AS(TransformationGroup::product_action(busy_n, other_space,
                                                      lamplighter),
                  ConstructionError);
  CHECK_THROWS_AS(TransformationGroup::product_action(t_h, t_h, lamplighter),
                  ConstructionError);
  CHECK_THROWS_AS(TransformationGroup::product_action(t_n, t_h, z),
                  ConstructionError);
  CHECK_THROWS_AS(TransformationGroup(t.space(), lamplighter,
                                      ActionKind::ProductSecondLeft),
                  ConstructionError);
}

TEST_CASE("windows deduplicate and stay nonempty") {
  auto z = Group::free_abelian(1);
  auto car = Space::carrier(z);
  TransformationGroup t(car, z, ActionKind::CarrierLeft);

  Point x0 = car->carrier_point(z->vec({0}));
  Point x1 = car->carrier_point(z->vec({1}));
  Window w = make_window(t, {x1, x0, x1}, {z->vec({0}), z->vec({0})});
  CHECK(w.space_part.size() == 2);
  CHECK(w.space_part[0] == x0);
  CHECK(w.group_part.size() == 1);
  CHECK_THROWS_AS(make_window(t, {}, {z->vec({0})}), ConfigError);
  CHECK_THROWS_AS(make_window(t, {x0}, {}), ConfigError);

  Window r = window_from_radii(t, 2, 3);
  CHECK(r.space_part.size() == 5);
  CHECK(r.group_part.size() == 7);

  auto fin = Space::finite(4);
  TransformationGroup tf(fin, z, ActionKind::Trivial);
  Window wf = window_from_radii(tf, 10, 1);
  CHECK(wf.space_part.size() == 4);

  auto f2 = Group::free_group(2);
  auto bd = Space::boundary(2, 5);
  TransformationGroup tb(bd, f2, ActionKind::BoundaryLeft);
  CHECK_THROWS_AS(window_from_radii(tb, 1, 1), ConfigError);
  Window wb = window_from_radii(tb, 2, 1, {bd->boundary_point("aaaaa")});
  CHECK(wb.space_part.size() > 1);
  for (const auto& p : wb.space_part) CHECK_NOTHROW(bd->check_member(p, "test"));
}

TEST_CASE("actions reject foreign points and elements") {
  auto z = Group::free_abelian(1);
  auto f2 = Group::free_group(2);
  auto car = Space::carrier(z);
  TransformationGroup t(car, z, ActionKind::CarrierLeft);
  CHECK_THROWS_AS(t.act_left(f2->word("a"), car->carrier_point(z->vec({0}))),
                  DomainError);
  CHECK_THROWS_AS(t.act_left(z->vec({1}), Space::point()->pt()), DomainError);
}

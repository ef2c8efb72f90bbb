#include "doctest.h"
#include "support.hpp"

using namespace podec;
using namespace podec::test;

TEST_CASE("build from covers") {
  auto b2 = build({"0", "a", "b", "1"},
                  {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  CHECK(b2.size() == 4);
  REQUIRE(b2.top());
  CHECK(b2.label(*b2.top()) == "1");
  CHECK(b2 == fx("B2").poset);

  auto c3 = build({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});
  CHECK(c3.leq(el(c3, "0"), el(c3, "1")));
  CHECK(c3.height(el(c3, "1")) == 2);

  CHECK(error_code_of([] {
          build({"0", "x", "y"}, {{"0", "x"}, {"x", "y"}, {"y", "x"}});
        }) == ErrorCode::cycle);
  CHECK(error_code_of([] { build({"0", "x", "x"}, {}); }) ==
        ErrorCode::duplicate_label);
  CHECK(error_code_of([] { build({"0", "x"}, {{"0", "q"}}); }) ==
        ErrorCode::unknown_element);
  CHECK(error_code_of([] {
          Poset::from_covers({"0", "x"}, "x", {{"0", "x"}});
        }) == ErrorCode::bottom_not_minimum);
  CHECK(error_code_of([] {
          Poset::from_covers({"0", "x", "y"}, "0", {{"0", "x"}}, 2);
        }) == ErrorCode::guardrail);
}

TEST_CASE("joins") {
  auto p = fx("B2").poset;
  CHECK(join_set(p, set_of(p, "a b")) == el(p, "1"));
  CHECK(join_set(p, p.none()) == p.bottom());

  auto bt = bowtie();
  auto j = join_set(bt, set_of(bt, "x y"));
  CHECK_FALSE(j.has_value());
  CHECK(j.reason() == Undefined::no_least_upper_bound);
  CHECK(j.frontier() == set_of(bt, "u v"));

  auto two_max = build({"0", "x", "y"}, {{"0", "x"}, {"0", "y"}});
  auto none = join_set(two_max, set_of(two_max, "x y"));
  CHECK(none.reason() == Undefined::no_upper_bound);
}

TEST_CASE("meets") {
  auto mo2 = fx("MO2").poset;
  CHECK(meet_set(mo2, set_of(mo2, "a b")) == mo2.bottom());
  CHECK(meet_set(mo2, set_of(mo2, "1")) == el(mo2, "1"));
  auto b2 = fx("B2").poset;
  CHECK(meet_set(b2, b2.none()) == el(b2, "1"));

  auto two_max = build({"0", "x", "y"}, {{"0", "x"}, {"0", "y"}});
  auto m = meet_set(two_max, two_max.none());
  CHECK_FALSE(m.has_value());
  CHECK(m.reason() == Undefined::no_upper_bound);
  CHECK(m.frontier() == set_of(two_max, "x y"));

  auto bt = bowtie();
  auto uv = meet_set(bt, set_of(bt, "u v"));
  CHECK(uv.reason() == Undefined::no_greatest_lower_bound);
  CHECK(uv.frontier() == set_of(bt, "x y"));
}

TEST_CASE("intervals") {
  auto b2 = fx("B2").poset;
  CHECK(interval(b2, el(b2, "0"), el(b2, "a")) == set_of(b2, "0 a"));
  auto mo2 = fx("MO2").poset;
  CHECK(interval(mo2, el(mo2, "a"), el(mo2, "1")) == set_of(mo2, "a 1"));
  auto c3 = fx("C3").poset;
  CHECK(interval(c3, el(c3, "1"), el(c3, "0")).empty());
}

TEST_CASE("induced subposet") {
  auto mo2 = fx("MO2").poset;
  auto chain = induced_subposet(mo2, set_of(mo2, "0 1"));
  CHECK(chain.size() == 2);
  CHECK(chain.leq(ElementId(0u), ElementId(1u)));

  auto b2 = fx("B2").poset;
  CHECK(induced_subposet(b2, b2.all()) == b2);

  // a v b = c in P, but c is not in Z, so the join within Z is d.
  auto p = build({"0", "a", "b", "c", "d", "1"},
                 {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"},
                  {"c", "d"}, {"d", "1"}});
  auto z = set_of(p, "0 a b d 1");
  auto sub = induced_subposet(p, z);
  auto ja = p.join(el(p, "a"), el(p, "b"));
  auto jz = sub.join(sub.at("a"), sub.at("b"));
  CHECK(p.label(*ja) == "c");
  CHECK(sub.label(*jz) == "d");

  CHECK(error_code_of([&] { induced_subposet(mo2, set_of(mo2, "a 1")); }) ==
        ErrorCode::bottom_not_minimum);
}

TEST_CASE("products") {
  auto c2 = gen_chain(1).poset;
  auto sq = product(c2, c2);
  CHECK(sq.size() == 4);
  CHECK(sq.covers().size() == 4);
  CHECK(central_elements(sq).size() == 4);

  auto b1mo2 = fx("B1xMO2").poset;
  CHECK(b1mo2.size() == 12);

  auto point = gen_chain(0).poset;
  auto mo2 = fx("MO2").poset;
  auto same = product(mo2, point);
  CHECK(same.size() == mo2.size());
  for (auto a : mo2.elements())
    for (auto b : mo2.elements())
      CHECK(same.leq(product_index(point, a, point.bottom()),
                     product_index(point, b, point.bottom())) ==
            mo2.leq(a, b));
}

TEST_CASE("centre") {
  auto b2 = fx("B2").poset;
  CHECK(central_elements(b2) == b2.all());
  auto mo2 = fx("MO2").poset;
  CHECK(central_elements(mo2) == set_of(mo2, "0 1"));
  auto c3 = fx("C3").poset;
  CHECK(central_elements(c3) == set_of(c3, "0 1"));
  CHECK(*central_partner(b2, el(b2, "a")) == el(b2, "b"));

  auto no_top = build({"0", "x", "y"}, {{"0", "x"}, {"0", "y"}});
  CHECK(error_code_of([&] { central_elements(no_top); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("element sets") {
  ElementSet s(70, {ElementId(3u), ElementId(65u)});
  CHECK(s.size() == 2);
  CHECK(s.contains(ElementId(65u)));
  CHECK(*s.first() == ElementId(3u));
  auto t = ElementSet::full(70) - s;
  CHECK(t.size() == 68);
  CHECK_FALSE(t.intersects(s));
  CHECK((t | s) == ElementSet::full(70));
  std::vector<ElementId> members(s.begin(), s.end());
  CHECK(members == std::vector{ElementId(3u), ElementId(65u)});
}

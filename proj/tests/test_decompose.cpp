#include "doctest.h"
#include "support.hpp"

#include "podec/decompose.hpp"

using namespace podec;
using namespace podec::test;

TEST_CASE("decomposition by I ^ Z") {
  auto b2 = fx("B2");
  const auto &p = b2.poset;
  ZContext full(p, b2.sets.at("Zfull"));
  auto cert = decompose_IcapZ(full, set_of(p, "0 a"));
  CHECK(cert.holds());
  CHECK(cert.element == el(p, "a"));
  CHECK(decompose_IcapZ(full, set_of(p, "0")).element == p.bottom());

  auto mo2 = fx("MO2");
  ZContext z01(mo2.poset, mo2.sets.at("Z01"));
  auto atoms = decompose_IcapZ(z01, mo2.sets.at("Iatoms"));
  CHECK(atoms.holds());
  CHECK(atoms.element == mo2.poset.bottom());
}

TEST_CASE("hypothesis reports") {
  auto c3 = fx("C3");
  ZContext chain(c3.poset, c3.sets.at("Zchain"));
  auto full = decompose_IcapZ(chain, set_of(c3.poset, "0"));
  CHECK(full.status() == Status::hypothesis_not_satisfied);
  CHECK_FALSE(full.element);
  CHECK(full.hypotheses().size() == 3);

  TheoremOptions opts;
  opts.mode = HypothesisMode::short_circuit;
  auto b2 = fx("B2");
  ZContext za(b2.poset, b2.sets.at("Za"));
  auto sc = decompose_cZI(za, set_of(b2.poset, "0"), opts);
  CHECK(sc.status() == Status::hypothesis_not_satisfied);
  CHECK(sc.hypotheses().size() == 1);
  CHECK_FALSE(sc.hypotheses()[0].witness.empty());
}

TEST_CASE("decomposition by covers") {
  auto mo2 = fx("MO2");
  ZContext z01(mo2.poset, mo2.sets.at("Z01"));
  auto cert = decompose_cZI(z01, mo2.sets.at("Iatoms"));
  CHECK(cert.holds());
  CHECK(cert.element == el(mo2.poset, "1"));
  CHECK(decompose_cZI(z01, set_of(mo2.poset, "0")).element ==
        mo2.poset.bottom());

  auto b = fx("B1xMO2");
  ZContext centre(b.poset, b.sets.at("center"));
  auto f = decompose_cZI(centre, b.sets.at("F"));
  CHECK(f.holds());
  CHECK(f.element == el(b.poset, "(1,1)"));
  CHECK(cover_image(centre, b.sets.at("F")) == b.sets.at("center"));
}

TEST_CASE("cover images are complete ideals") {
  auto mo2 = fx("MO2");
  ZContext z01(mo2.poset, mo2.sets.at("Z01"));
  CHECK(check_cZI_ideal(z01, mo2.sets.at("Iatoms")).holds());
  CHECK(check_cZI_ideal(z01, set_of(mo2.poset, "0")).holds());

  auto b = fx("B1xMO2");
  ZContext centre(b.poset, b.sets.at("center"));
  auto i = set_of(b.poset, "(0,0) (1,0)");
  CHECK(is_Z_complete(centre, i).holds());
  CHECK(check_cZI_ideal(centre, i).holds());
  CHECK(cover_image(centre, i) == i);
}

TEST_CASE("complementary splits") {
  auto b2 = fx("B2");
  const auto &p = b2.poset;
  ZContext full(p, p.all());
  auto s = complementary_split(full, el(p, "a"));
  REQUIRE(s);
  CHECK(s->complement == el(p, "b"));
  CHECK(s->lower == set_of(p, "0 a"));
  CHECK(s->complement_lower == set_of(p, "0 b"));
  CHECK(s->central_partner == el(p, "b"));

  auto mo2 = fx("MO2");
  ZContext z01(mo2.poset, mo2.sets.at("Z01"));
  auto top = complementary_split(z01, el(mo2.poset, "1"));
  REQUIRE(top);
  CHECK(top->lower == mo2.sets.at("Z01"));
  CHECK(top->complement_lower == set_of(mo2.poset, "0"));

  auto c3 = fx("C3");
  ZContext chain(c3.poset, c3.sets.at("Zchain"));
  CHECK_FALSE(complementary_split(chain, el(c3.poset, "m")));
  CHECK(error_code_of([&] {
          complementary_split(z01, el(mo2.poset, "a"));
        }) == ErrorCode::not_in_z);
}

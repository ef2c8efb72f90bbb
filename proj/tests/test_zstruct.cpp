#include "doctest.h"
#include "support.hpp"

#include "podec/zstruct.hpp"

using namespace podec;
using namespace podec::test;

TEST_CASE("Z-disjoint witnesses") {
  auto b2 = fx("B2");
  const auto &p = b2.poset;
  ZContext ctx(p, b2.sets.at("Zfull"));
  auto w = z_disjoint_witness(ctx, set_of(p, "a b"));
  REQUIRE(w);
  CHECK(w->at(el(p, "a")) == el(p, "a"));
  CHECK(w->at(el(p, "b")) == el(p, "b"));
  CHECK_FALSE(z_disjoint_witness(ctx, set_of(p, "a 1")));
  auto empty = z_disjoint_witness(ctx, p.none());
  REQUIRE(empty);
  CHECK(empty->assignment.empty());

  for (auto method : {WitnessMethod::backtracking, WitnessMethod::covers})
    CHECK(z_disjoint_witness(ctx, set_of(p, "a 1"), method).has_value() ==
          false);
}

TEST_CASE("Z-completeness") {
  auto b2 = fx("B2");
  const auto &p = b2.poset;
  ZContext ctx(p, b2.sets.at("Zfull"));
  CHECK(is_Z_complete(ctx, set_of(p, "0 a")).holds());

  auto ab = is_Z_complete(ctx, set_of(p, "0 a b"));
  CHECK(ab.status() == Status::fails);
  CHECK(ab.first_failure()->name.starts_with("(1)"));

  auto a1 = is_Z_complete(ctx, set_of(p, "0 a 1"));
  CHECK(a1.status() == Status::fails);
  REQUIRE(a1.first_failure());
  bool cond2_failed = false;
  for (const auto &c : a1.conclusions())
    if (c.name.starts_with("(2)"))
      cond2_failed = !c.ok;
  CHECK(cond2_failed);

  CHECK_FALSE(is_Z_complete(ctx, set_of(p, "a")).holds());
  CHECK(is_Z_complete(ctx, set_of(p, "0")).holds());

  EnumerationLimits tiny;
  tiny.max_nodes = 2;
  CHECK(is_Z_complete(ctx, p.all(), tiny).status() == Status::sampled);
}

TEST_CASE("S-centrality") {
  for (const auto &e : standard_catalog()) {
    auto z = ElementSet(e.poset.size(), {e.poset.bottom(), *e.poset.top()});
    CHECK(is_S_central(e.poset, z, e.poset.all()).holds());
  }
  auto c3 = fx("C3").poset;
  auto chain = set_of(c3, "0 m 1");
  auto cert = is_S_central(c3, chain, chain);
  CHECK(cert.status() == Status::fails);
  CHECK(cert.first_failure()->witness.find("m") != std::string::npos);

  auto b2 = fx("B2").poset;
  CHECK(is_S_central(b2, b2.all(), b2.all()).holds());
  auto split = central_split(b2, b2.all(), el(b2, "1"), el(b2, "a"));
  REQUIRE(split);
  CHECK(split->z == el(b2, "b"));
}

TEST_CASE("central covers") {
  auto mo2 = fx("MO2");
  const auto &p = mo2.poset;
  ZContext ctx(p, mo2.sets.at("Z01"));
  CHECK(central_cover(ctx, el(p, "a")) == el(p, "1"));
  CHECK(central_cover(ctx, p.bottom()) == p.bottom());

  auto b2 = fx("B2");
  ZContext za(b2.poset, b2.sets.at("Za"));
  CHECK_FALSE(za.flags().lower_complete_sublattice);
  CHECK(error_code_of([&] { central_cover(za, el(b2.poset, "a")); }) ==
        ErrorCode::not_lower_complete_sublattice);
}

TEST_CASE("lower complete sublattices") {
  auto mo2 = fx("MO2").poset;
  CHECK(is_lower_complete_sublattice(mo2, set_of(mo2, "0 1")).holds());
  CHECK(is_lower_complete_sublattice(mo2, set_of(mo2, "0 a b 1")).holds());
  auto b2 = fx("B2").poset;
  CHECK(is_lower_complete_sublattice(b2, b2.all()).holds());
  CHECK_FALSE(is_lower_complete_sublattice(b2, set_of(b2, "0 a")).holds());
  CHECK(is_upper_complete_sublattice(b2, set_of(b2, "0 a")).holds());
}

TEST_CASE("modularity") {
  auto b2 = fx("B2").poset;
  CHECK(is_P_modular(b2, b2.all()).holds());
  CHECK(is_Z_modular(b2, b2.all()).holds());
  auto n5 = fx("N5").poset;
  auto cert = is_P_modular(n5, set_of(n5, "0 y z 1"));
  CHECK(cert.status() == Status::fails);
  for (const auto &e : standard_catalog())
    CHECK(is_P_modular(e.poset, ElementSet(e.poset.size(),
                                               {e.poset.bottom(),
                                                *e.poset.top()}))
              .holds());
}

TEST_CASE("pseudocomplements") {
  auto b2 = fx("B2").poset;
  ZContext full(b2, b2.all());
  CHECK(pseudocomplement_in_Z(full, el(b2, "a")) == el(b2, "b"));
  CHECK(pseudocomplement_in_Z(full, b2.bottom()) == el(b2, "1"));
  auto mo2 = fx("MO2").poset;
  ZContext z01(mo2, set_of(mo2, "0 1"));
  CHECK(pseudocomplement_in_Z(z01, el(mo2, "1")) == mo2.bottom());
  CHECK(error_code_of([&] { pseudocomplement_in_Z(z01, el(mo2, "a")); }) ==
        ErrorCode::not_in_z);
}

TEST_CASE("Z-directed") {
  auto mo2 = fx("MO2").poset;
  CHECK(is_Z_directed(mo2, set_of(mo2, "0 1")).holds());
  auto b2 = fx("B2").poset;
  CHECK(is_Z_directed(b2, b2.all()).holds());
  auto bt = bowtie();
  CHECK(is_Z_directed(bt, bt.all()).status() == Status::fails);
}

TEST_CASE("cross-checks of Z-completeness") {
  auto b2 = fx("B2").poset;
  ZContext ctx(b2, b2.all());
  auto a = crosscheck_pwedgez(ctx, set_of(b2, "0 a"));
  CHECK(a.holds());
  CHECK(*a.fact("Z-complete"));
  auto ab = crosscheck_pwedgez(ctx, set_of(b2, "0 a b"));
  CHECK(ab.holds());
  CHECK_FALSE(*ab.fact("Z-complete"));
  CHECK_FALSE(*ab.fact("(1)"));

  auto n5 = fx("N5").poset;
  ZContext bad(n5, set_of(n5, "0 y z 1"));
  CHECK(crosscheck_pwedgez(bad, set_of(n5, "0")).status() ==
        Status::hypothesis_not_satisfied);

  CHECK(crosscheck_bidirectional(ctx, set_of(b2, "0 a")).holds());
  auto a1 = crosscheck_bidirectional(ctx, set_of(b2, "0 a 1"));
  CHECK(a1.holds());
  CHECK_FALSE(*a1.fact("Z-complete"));
  CHECK(crosscheck_bidirectional(ctx, set_of(b2, "0")).holds());
}

TEST_CASE("cover-meet decomposition") {
  auto mo2 = fx("MO2").poset;
  ZContext z01(mo2, set_of(mo2, "0 1"));
  auto cm = cover_meet_decomposition(z01, el(mo2, "a"), el(mo2, "1"));
  CHECK(cm.q == el(mo2, "a"));
  CHECK(cover_meet_decomposition(z01, el(mo2, "a"), mo2.bottom()).q ==
        mo2.bottom());

  auto b = fx("B1xMO2");
  const auto &p = b.poset;
  ZContext ctx(p, b.sets.at("center"));
  auto r = cover_meet_decomposition(ctx, el(p, "(1,a)"), el(p, "(0,1)"));
  CHECK(r.q == el(p, "(0,a)"));
  CHECK(central_cover(ctx, r.q) == el(p, "(0,1)"));
  CHECK(r.hull_identity);

  CHECK(error_code_of([&] {
          cover_meet_decomposition(z01, el(mo2, "a"), el(mo2, "b"));
        }) == ErrorCode::not_in_z);
}

#include "doctest.h"
#include "support.hpp"

using namespace podec;
using namespace podec::test;

namespace {

// {a, b} is orthogonal but has the two minimal upper bounds u and v.
Orthoposet not_orthocomplete() {
  auto p = build({"0", "a", "b", "u'", "v'", "a'", "b'", "u", "v", "1"},
                 {{"0", "a"},   {"0", "b"},   {"0", "u'"},  {"0", "v'"},
                  {"a", "u"},   {"a", "v"},   {"a", "b'"},  {"b", "u"},
                  {"b", "v"},   {"b", "a'"},  {"u'", "a'"}, {"u'", "b'"},
                  {"v'", "a'"}, {"v'", "b'"}, {"a'", "1"},  {"b'", "1"},
                  {"u", "1"},   {"v", "1"}});
  return validate_ortho(
      p, {{"0", "1"}, {"a", "a'"}, {"b", "b'"}, {"u", "u'"}, {"v", "v'"}});
}

} // namespace

TEST_CASE("validate") {
  auto b2 = fx("B2");
  CHECK(validate_ortho(b2.poset, {{"0", "1"}, {"a", "b"}}) == *b2.ortho);
  auto mo2 = fx("MO2");
  CHECK(validate_ortho(mo2.poset, {{"0", "1"}, {"a", "a'"}, {"b", "b'"}}) ==
        *mo2.ortho);

  // m has no complement in C3
  auto c3 = fx("C3").poset;
  CHECK(error_code_of([&] { validate_ortho(c3, {{"0", "1"}, {"m", "m"}}); }) ==
        ErrorCode::not_orthocomplemented);
  CHECK(error_code_of([&] { validate_ortho(c3, {{"0", "m"}, {"1", "1"}}); }) ==
        ErrorCode::not_orthocomplemented);
  CHECK(error_code_of([&] {
          validate_ortho(mo2.poset, {{"0", "1"}, {"a", "a"}, {"b", "b'"}});
        }) == ErrorCode::not_orthocomplemented);
  CHECK(error_code_of([&] { validate_ortho(mo2.poset, {{"0", "1"}}); }) ==
        ErrorCode::not_orthocomplemented);
}

TEST_CASE("orthogonality") {
  auto mo2 = fx("MO2");
  const auto &o = *mo2.ortho;
  const auto &p = mo2.poset;
  CHECK(orthogonal(o, el(p, "a"), el(p, "a'")));
  CHECK_FALSE(orthogonal(o, el(p, "a"), el(p, "b")));
  for (auto x : p.elements()) {
    CHECK(orthogonal(o, p.bottom(), x));
    CHECK(orthogonal(o, x, x) == (x == p.bottom()));
  }
}

TEST_CASE("orthocomplete") {
  CHECK(is_orthocomplete(*fx("MO2").ortho).holds());
  CHECK(is_orthocomplete(*fx("B2").ortho).holds());

  auto bad = not_orthocomplete();
  auto cert = is_orthocomplete(bad);
  CHECK(cert.status() == Status::fails);
  REQUIRE(cert.first_failure());
  const auto &p = bad.poset();
  ElementSet witness = p.none();
  for (auto e : cert.counterexample)
    witness.insert(e);
  CHECK_FALSE(join_set(p, witness).has_value());

  OrthocompleteLimits tight;
  tight.max_nodes = 3;
  auto capped = is_orthocomplete(*fx("B1xMO2").ortho, tight);
  CHECK(capped.status() == Status::sampled);
}

TEST_CASE("perp closure") {
  auto mo2 = fx("MO2");
  CHECK(is_perp_closed(*mo2.ortho, mo2.sets.at("Z01")));
  auto b2 = fx("B2");
  CHECK_FALSE(is_perp_closed(*b2.ortho, set_of(b2.poset, "0 a 1")));
  CHECK(is_perp_closed(*b2.ortho, b2.poset.all()));
}

#include "podec/decompose.hpp"

#include "podec/error.hpp"
#include "hypotheses.hpp"

namespace podec {

namespace {

using detail::flag_verdict;
using detail::HypothesisRecorder;
using detail::verdict;

// y ^ z = 0 <=> (down(y) ^ set) = {0}, checked for all y in Z.
struct Characterization {
  const ZContext &ctx;
  const ElementSet &set; // I ^ Z or I

  bool holds_for(ElementId z, ElementId y) const {
    const auto &p = ctx.poset();
    bool lhs = p.disjoint(y, z);
    auto below = p.down(y) & set;
    bool rhs = below.size() == 1 && below.contains(p.bottom());
    return lhs == rhs;
  }

  std::optional<ElementId> first_failure(ElementId z) const {
    for (auto y : ctx.z())
      if (!holds_for(z, y))
        return y;
    return std::nullopt;
  }
};

void certify_characterization(Certificate &cert, const ZContext &ctx,
                              const Characterization &ch, ElementId z,
                              const char *eq_name) {
  const auto &p = ctx.poset();
  auto bad = ch.first_failure(z);
  cert.conclude(eq_name, !bad,
                bad ? "equivalence fails at y=" + p.label(*bad) : "");

  ElementSet satisfying(p.size());
  for (auto w : ctx.z())
    if (!ch.first_failure(w))
      satisfying.insert(w);
  bool unique = satisfying.size() == 1 && satisfying.contains(z);
  cert.conclude("z is the unique element of Z satisfying it", unique,
                "satisfied by " + p.format(satisfying));
}

} // namespace

Certificate z_completeness(const ZContext &ctx, const ElementSet &s,
                           const TheoremOptions &opts) {
  if (opts.families && opts.families->exhaustive() &&
      s.is_subset_of(opts.families->ground()))
    return opts.families->check(s);
  return is_Z_complete(ctx, s, opts.limits);
}

ElementSet cover_image(const ZContext &ctx, const ElementSet &i) {
  ElementSet out(ctx.poset().size());
  for (auto e : i)
    out.insert(ctx.cover(e));
  return out;
}

Certificate decompose_IcapZ(const ZContext &ctx, const ElementSet &i,
                            const TheoremOptions &opts) {
  const auto &p = ctx.poset();
  Certificate cert("decompose_IcapZ");
  HypothesisRecorder h(cert, opts.mode);
  h.need("I is Z-complete", [&] { return verdict(z_completeness(ctx, i, opts)); });
  h.need("Z is Z-complete",
         [&] { return verdict(z_completeness(ctx, ctx.z(), opts)); });
  h.need("Z is Z-central", [&] {
    return flag_verdict(ctx.flags().z_central, is_S_central(ctx, ctx.z()));
  });
  if (!h.ok())
    return cert;

  const auto iz = i & ctx.z();
  auto z = join_set(p, iz);
  if (!cert.conclude("join of I^Z exists", z.has_value(),
                     std::string(to_string(z.reason())) + " frontier " +
                         p.format(z.frontier())))
    return cert;
  cert.element = *z;
  cert.conclude("z lies in I^Z", iz.contains(*z),
                p.label(*z) + " not in I^Z");

  std::string lower_witness;
  for (auto w : iz)
    for (auto y : p.down(w) & ctx.z())
      if (!i.contains(y) && lower_witness.empty())
        lower_witness = p.label(y) + " <= " + p.label(w) + " but not in I";
  cert.conclude("I^Z is a lower set of Z", lower_witness.empty(),
                lower_witness);

  auto upper = is_upper_complete_sublattice(p, iz);
  cert.conclude("I^Z is an upper complete sublattice of P", upper.holds(),
                upper.first_failure() ? upper.first_failure()->witness : "");

  certify_characterization(cert, ctx, Characterization{ctx, iz}, *z,
                           "y^z=0 <=> [0,y]^I^Z={0} for all y in Z");
  return cert;
}

Certificate decompose_cZI(const ZContext &ctx, const ElementSet &i,
                          const TheoremOptions &opts) {
  const auto &p = ctx.poset();
  Certificate cert("decompose_cZI");
  HypothesisRecorder h(cert, opts.mode);
  h.need("Z is a lower complete sublattice", [&] {
    return flag_verdict(ctx.flags().lower_complete_sublattice,
                        is_lower_complete_sublattice(p, ctx.z()));
  });
  h.need("Z is P-central", [&] {
    return flag_verdict(ctx.flags().p_central, is_S_central(ctx, p.all()));
  });
  h.need("I is Z-complete", [&] { return verdict(z_completeness(ctx, i, opts)); });
  if (!h.ok())
    return cert;

  const auto ci = cover_image(ctx, i);
  auto z = ctx.join_in_z(ci);
  if (!cert.conclude("join of c_Z I within Z exists", z.has_value(),
                     std::string(to_string(z.reason())) + " frontier " +
                         p.format(z.frontier())))
    return cert;
  cert.element = *z;
  cert.conclude("z = c_Z(p) for some p in I", ci.contains(*z),
                p.label(*z) + " is not the cover of an element of I");

  // closure of c_Z I under joins within Z: empty join and pairwise joins
  std::string closure;
  auto least = ctx.join_in_z(ElementSet(p.size()));
  if (!least || !ci.contains(*least))
    closure = "least element of Z not in c_Z I";
  for (auto a : ci)
    for (auto b : ci) {
      if (b <= a || !closure.empty())
        continue;
      auto j = ctx.join_in_z(a, b);
      if (!j || !ci.contains(*j))
        closure = "{" + p.label(a) + "," + p.label(b) + "}: join in Z " +
                  (j ? p.label(*j) + " not in c_Z I" : "undefined");
    }
  cert.conclude("c_Z I is an upper complete sublattice of Z", closure.empty(),
                closure);

  certify_characterization(cert, ctx, Characterization{ctx, i}, *z,
                           "y^z=0 <=> [0,y]^I={0} for all y in Z");
  return cert;
}

Certificate check_cZI_ideal(const ZContext &ctx, const ElementSet &i,
                            const TheoremOptions &opts) {
  const auto &p = ctx.poset();
  Certificate cert("check_cZI_ideal");
  HypothesisRecorder h(cert, opts.mode);
  h.need("Z is a lower complete sublattice", [&] {
    return flag_verdict(ctx.flags().lower_complete_sublattice,
                        is_lower_complete_sublattice(p, ctx.z()));
  });
  h.need("Z is P-central", [&] {
    return flag_verdict(ctx.flags().p_central, is_S_central(ctx, p.all()));
  });
  h.need("Z is Z-modular", [&] {
    return flag_verdict(ctx.flags().z_modular, is_Z_modular(p, ctx.z()));
  });
  h.need("I is Z-complete", [&] { return verdict(z_completeness(ctx, i, opts)); });
  if (!h.ok())
    return cert;

  const auto ci = cover_image(ctx, i);
  std::string lower;
  for (auto w : ci)
    for (auto y : p.down(w) & ctx.z())
      if (!ci.contains(y) && lower.empty())
        lower = p.label(y) + " <= " + p.label(w) + " but not in c_Z I";
  cert.conclude("c_Z I is a lower set of Z", lower.empty(), lower);

  auto top = p.greatest_of(ci);
  cert.conclude("c_Z I is completely upwards directed", top.has_value(),
                "c_Z I=" + p.format(ci) + " has no greatest element");
  if (top)
    cert.element = *top;
  return cert;
}

std::optional<ComplementarySplit> complementary_split(const ZContext &ctx,
                                                      ElementId z) {
  const auto &p = ctx.poset();
  if (!ctx.z().contains(z))
    throw Error(ErrorCode::not_in_z, p.label(z) + " is not in Z");
  auto top = p.top();
  if (!top)
    return std::nullopt;
  for (auto y : ctx.z()) {
    if (!p.disjoint(y, z))
      continue;
    auto j = ctx.join_in_z(y, z);
    if (!j || *j != *top)
      continue;
    ComplementarySplit out{y, p.down(z) & ctx.z(), p.down(y) & ctx.z(),
                           central_partner(p, z)};
    return out;
  }
  return std::nullopt;
}

} // namespace podec

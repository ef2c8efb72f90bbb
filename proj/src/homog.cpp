#include "podec/homog.hpp"

#include <algorithm>

#include "hypotheses.hpp"
#include "podec/error.hpp"

namespace podec {

using detail::flag_verdict;
using detail::HypothesisRecorder;
using detail::verdict;

BinaryRelation build_H(const Orthoposet &o, const ZContext &ctx,
                       const ElementSet &i) {
  const auto &p = o.poset();
  BinaryRelation h(p.size());
  for (auto a : i)
    for (auto b : i)
      if (orthogonal(o, a, b) && ctx.cover(a) == ctx.cover(b))
        h.insert(a, b);
  return h;
}

BinaryRelation build_H(const Orthoposet &o, const ElementSet &z,
                       const ElementSet &i) {
  return build_H(o, ZContext(o.poset(), z), i);
}

namespace {

std::string format_members(const Poset &p, const std::vector<ElementId> &m) {
  std::string s = "{";
  for (std::size_t k = 0; k < m.size(); ++k)
    s += (k ? "," : "") + p.label(m[k]);
  return s + "}";
}

} // namespace

Certificate validate_witness(const Poset &p, const BinaryRelation &h,
                             const ElementSet &i, const HomogeneityWitness &w) {
  Certificate cert("validate_witness");
  cert.element = w.element;
  ElementSet members(p.size());
  for (auto m : w.members)
    members.insert(m);
  cert.conclude("members are distinct", members.size() == w.members.size(),
                format_members(p, w.members));
  auto j = join_set(p, members);
  cert.conclude("join of members is the element", j == w.element,
                "join of " + format_members(p, w.members) + " is " +
                    (j.has_value() ? p.label(*j) : "undefined"));
  std::string bad;
  for (auto a : w.members)
    for (auto b : w.members)
      if (a != b && !h.contains(a, b) && bad.empty())
        bad = "(" + p.label(a) + "," + p.label(b) + ") not in H";
  cert.conclude("members are pairwise H-related", bad.empty(), bad);
  if (w.order() == 1)
    cert.conclude("order 1 member lies in I", i.contains(w.members[0]),
                  p.label(w.members[0]) + " not in I");
  return cert;
}

std::map<std::size_t, HomogeneityWitness>
homogeneous_orders(const Poset &p, const BinaryRelation &h,
                   const ElementSet &i, ElementId e) {
  std::map<std::size_t, HomogeneityWitness> out;
  if (i.contains(e))
    out.emplace(1, HomogeneityWitness{e, {e}});

  // cliques of size >= 2 in the H-graph below e
  std::vector<ElementId> candidates;
  for (auto q : p.down(e) & i)
    if (q != e)
      candidates.push_back(q);
  std::vector<ElementId> clique;
  auto dfs = [&](auto &self, std::size_t start, const ElementSet &ub) -> void {
    if (clique.size() >= 2 && !out.contains(clique.size()) &&
        p.least_of(ub) == e)
      out.emplace(clique.size(), HomogeneityWitness{e, clique});
    for (std::size_t k = start; k < candidates.size(); ++k) {
      auto c = candidates[k];
      if (!std::all_of(clique.begin(), clique.end(),
                       [&](ElementId s) { return h.contains(s, c); }))
        continue;
      clique.push_back(c);
      self(self, k + 1, ub & p.up(c));
      clique.pop_back();
    }
  };
  dfs(dfs, 0, p.all());
  return out;
}

std::map<std::size_t, HomogeneityWitness>
homogeneous_orders(const Orthoposet &o, const ElementSet &z,
                   const ElementSet &i, ElementId e) {
  return homogeneous_orders(o.poset(), build_H(o, z, i), i, e);
}

Certificate is_order_dense(const Poset &p, const ElementSet &i) {
  Certificate cert("is_order_dense");
  ElementSet nonzero = i;
  nonzero.erase(p.bottom());
  for (auto e : p.elements()) {
    if (e == p.bottom() || p.down(e).intersects(nonzero))
      continue;
    cert.element = e;
    cert.conclude("every nonzero element dominates a nonzero member of I",
                  false, p.label(e) + " dominates none");
    return cert;
  }
  cert.conclude("every nonzero element dominates a nonzero member of I", true);
  return cert;
}

BlockwiseJoin join_blockwise(const ZContext &ctx, const BinaryRelation &h,
                             const ElementSet &i, const HomogeneityWitness &a,
                             const HomogeneityWitness &b) {
  const auto &p = ctx.poset();
  BlockwiseJoin out;
  auto &cert = out.certificate;
  cert.require("same order", a.order() == b.order(),
               std::to_string(a.order()) + " vs " + std::to_string(b.order()));
  cert.require("elements are Z-disjoint", ctx.pair_disjoint(a.element, b.element),
               p.label(a.element) + "," + p.label(b.element));
  if (!cert.hypotheses_hold())
    return out;

  auto top = p.join(a.element, b.element);
  if (!cert.conclude("join of the elements exists", top.has_value(),
                     p.label(a.element) + " v " + p.label(b.element)))
    return out;
  HomogeneityWitness w{*top, {}};
  for (std::size_t k = 0; k < a.order(); ++k) {
    auto m = p.join(a.members[k], b.members[k]);
    if (!cert.conclude("block joins exist", m.has_value(),
                       p.label(a.members[k]) + " v " + p.label(b.members[k])))
      return out;
    w.members.push_back(*m);
  }
  auto valid = validate_witness(p, h, i, w);
  auto v = verdict(valid);
  cert.conclude("blockwise joins form a witness", v.first, v.second);
  cert.element = w.element;
  out.witness = std::move(w);
  return out;
}

ElementId merge_to_cover_join(const ZContext &ctx, const ElementSet &i_alpha) {
  const auto &p = ctx.poset();
  auto target = join_set(p, cover_image(ctx, i_alpha));
  if (!target.has_value())
    throw Error(ErrorCode::search_exhausted,
                "covers of " + p.format(i_alpha) + " have no join");
  for (auto e : i_alpha)
    if (ctx.cover(e) == *target)
      return e;

  // Grow the best candidate by the part of each other element that lies
  // outside its cover.
  ElementId current = *i_alpha.first();
  for (auto e : i_alpha)
    if (p.height(ctx.cover(e)) > p.height(ctx.cover(current)))
      current = e;
  for (auto e : i_alpha) {
    auto y = ctx.cover(current);
    if (p.leq(ctx.cover(e), y))
      continue;
    auto split = central_split(p, ctx.z(), e, y);
    if (!split)
      throw Error(ErrorCode::search_exhausted,
                  "no central split of " + p.label(e) + " across " +
                      p.label(y));
    auto merged = p.join(current, split->r);
    if (!merged || !i_alpha.contains(*merged))
      throw Error(ErrorCode::search_exhausted,
                  "merge of " + p.label(current) + " and " +
                      p.label(split->r) + " left I");
    current = *merged;
  }
  if (ctx.cover(current) != *target)
    throw Error(ErrorCode::search_exhausted,
                "merge ended below the cover join at " + p.label(current));
  return current;
}

HomogeneousOutcome homog_decompose(const Orthoposet &o, const ZContext &ctx,
                                   const ElementSet &i,
                                   const TheoremOptions &opts) {
  const auto &p = o.poset();
  const auto &z = ctx.z();
  HomogeneousOutcome out;
  auto &cert = out.certificate;
  HypothesisRecorder hyp(cert, opts.mode);
  hyp.need("P is orthocomplete",
           [&] { return verdict(is_orthocomplete(o)); });
  hyp.need("Z = perp(Z)", [&] {
    auto img = perp_image(o, z);
    return std::pair{img == z, "perp(Z)=" + p.format(img)};
  });
  hyp.need("Z is contained in the centre", [&] {
    auto outside = z - central_elements(p);
    return std::pair{outside.empty(), "not central: " + p.format(outside)};
  });
  hyp.need("Z is a lower complete sublattice", [&] {
    return flag_verdict(ctx.flags().lower_complete_sublattice,
                        is_lower_complete_sublattice(p, z));
  });
  hyp.need("Z is an upper complete sublattice", [&] {
    return flag_verdict(ctx.flags().upper_complete_sublattice,
                        is_upper_complete_sublattice(p, z));
  });
  hyp.need("I is order-dense",
           [&] { return verdict(is_order_dense(p, i)); });
  hyp.need("I is Z-complete",
           [&] { return verdict(z_completeness(ctx, i, opts)); });
  if (!hyp.ok())
    return out;

  HomogeneousDecomposition d;
  d.h = build_H(o, ctx, i);
  const auto zero = p.bottom();
  const auto one = *p.top();

  ElementId acc = zero;
  for (;;) {
    auto i_alpha = i & p.down(o.perp(acc));
    if (i_alpha == ElementSet(p.size(), {zero}))
      break;
    auto step = merge_to_cover_join(ctx, i_alpha);
    auto next = p.join(acc, step);
    if (!next)
      throw Error(ErrorCode::search_exhausted,
                  "join of " + p.label(acc) + " and " + p.label(step));
    d.steps.push_back(step);
    acc = *next;
  }
  auto residual = i & p.down(o.perp(acc));
  cert.conclude("no nonzero element of I remains under the complement",
                residual.size() == 1, "residual " + p.format(residual));
  cert.conclude("chosen elements join to 1", acc == one,
                "join is " + p.label(acc));

  // z_a = perp(c(p_a)) ^ meet_{b<a} c(p_b), with c(p_N) = 0
  const std::size_t n_steps = d.steps.size();
  for (std::size_t a = 0; a <= n_steps; ++a) {
    ElementSet terms(p.size(),
                     {o.perp(a < n_steps ? ctx.cover(d.steps[a]) : zero)});
    for (std::size_t b = 0; b < a; ++b)
      terms.insert(ctx.cover(d.steps[b]));
    auto m = meet_set(p, terms);
    if (!m.has_value())
      throw Error(ErrorCode::search_exhausted,
                  "meet of " + p.format(terms) + " undefined");
    d.raw.push_back(*m);
  }
  cert.conclude("z_0 = 0", d.raw[0] == zero, "z_0=" + p.label(d.raw[0]));

  for (std::size_t a = 1; a <= n_steps; ++a) {
    auto za = d.raw[a];
    if (za == zero)
      continue;
    HomogeneityWitness w{za, {}};
    std::string bad;
    for (std::size_t b = 0; b < a; ++b) {
      auto m = p.meet(za, d.steps[b]);
      if (!m || ctx.cover(*m) != za) {
        bad = "c(z_" + std::to_string(a) + " ^ p_" + std::to_string(b) +
              ") != z_" + std::to_string(a);
        break;
      }
      w.members.push_back(*m);
    }
    cert.conclude("c(z_a ^ p_b) = z_a", bad.empty(), bad);
    if (!bad.empty())
      continue;
    auto v = verdict(validate_witness(p, d.h, i, w));
    cert.conclude("z_a is homogeneous of order a", v.first,
                  "z_" + std::to_string(a) + ": " + v.second);
    d.parts.emplace(a, za);
    d.witnesses.emplace(a, std::move(w));
  }

  std::string clash;
  ElementSet all_parts(p.size());
  for (auto [k, zk] : d.parts) {
    all_parts.insert(zk);
    for (auto [l, zl] : d.parts)
      if (k < l && (!p.disjoint(zk, zl) || !orthogonal(o, zk, zl)) &&
          clash.empty())
        clash = "z_" + std::to_string(k) + "," + "z_" + std::to_string(l);
  }
  cert.conclude("parts are pairwise orthogonal", clash.empty(), clash);
  cert.conclude("parts join to 1", join_set(p, all_parts) == one,
                "join of " + p.format(all_parts));
  out.decomposition = std::move(d);
  return out;
}

HomogeneousOutcome homog_decompose(const Orthoposet &o, const ElementSet &z,
                                   const ElementSet &i) {
  return homog_decompose(o, ZContext(o.poset(), z), i);
}

Certificate check_uniqueness(const Orthoposet &o, const ZContext &ctx,
                             const ElementSet &i,
                             const HomogeneousDecomposition &d) {
  const auto &p = o.poset();
  Certificate cert("check_uniqueness");
  std::map<ElementId, std::vector<std::size_t>> orders;
  std::map<std::size_t, ElementSet> by_order;
  std::string overlap;
  for (auto w : ctx.z()) {
    for (const auto &[k, wit] : homogeneous_orders(p, d.h, i, w)) {
      orders[w].push_back(k);
      by_order.try_emplace(k, p.size()).first->second.insert(w);
    }
    if (w != p.bottom() && orders[w].size() > 1 && overlap.empty()) {
      overlap = p.label(w) + " has orders";
      for (auto k : orders[w])
        overlap += " " + std::to_string(k);
      cert.element = w;
    }
  }
  if (!cert.require("I_k ^ I_l ^ Z = {0} for k != l", overlap.empty(),
                    overlap))
    return cert;

  for (const auto &[k, members] : by_order) {
    auto j = join_set(p, members);
    auto expected = d.parts.contains(k) ? d.parts.at(k) : p.bottom();
    cert.conclude("z_k = join(I_k ^ Z)", j == expected,
                  "order " + std::to_string(k) + ": join is " +
                      (j.has_value() ? p.label(*j) : "undefined") +
                      ", z_k is " + p.label(expected));
  }
  for (const auto &[k, zk] : d.parts)
    if (!by_order.contains(k))
      cert.conclude("z_k = join(I_k ^ Z)", false,
                    "order " + std::to_string(k) + " not realized in Z");

  // Alternative families: one nonzero element of Z per chosen order,
  // pairwise orthogonal, joining to 1.
  std::vector<std::size_t> ks;
  for (const auto &[k, members] : by_order)
    ks.push_back(k);
  std::map<std::size_t, ElementId> chosen;
  std::optional<std::map<std::size_t, ElementId>> alternative;
  const auto one = *p.top();
  auto dfs = [&](auto &self, std::size_t idx, ElementId acc) -> void {
    if (alternative)
      return;
    if (idx == ks.size()) {
      if (acc == one && chosen != d.parts)
        alternative = chosen;
      return;
    }
    self(self, idx + 1, acc);
    for (auto w : by_order.at(ks[idx])) {
      if (w == p.bottom() ||
          !std::all_of(chosen.begin(), chosen.end(),
                       [&](auto &kv) { return orthogonal(o, kv.second, w); }))
        continue;
      auto next = p.join(acc, w);
      if (!next)
        continue;
      chosen.emplace(ks[idx], w);
      self(self, idx + 1, *next);
      chosen.erase(ks[idx]);
    }
  };
  dfs(dfs, 0, p.bottom());
  std::string alt;
  if (alternative)
    for (auto [k, w] : *alternative)
      alt += std::to_string(k) + "->" + p.label(w) + " ";
  cert.conclude("no other orthogonal family decomposes 1", !alternative,
                alt);
  return cert;
}

} // namespace podec

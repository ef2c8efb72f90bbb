#include "podec/relations.hpp"

#include <algorithm>

#include "podec/error.hpp"
#include "hypotheses.hpp"

namespace podec {

std::vector<std::pair<ElementId, ElementId>> BinaryRelation::to_pairs() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (auto e : pairs_)
    out.emplace_back(ElementId(e.index / n_), ElementId(e.index % n_));
  return out;
}

BinaryRelation BinaryRelation::converse() const {
  BinaryRelation out(n_);
  for (auto [p, q] : to_pairs())
    out.insert(q, p);
  return out;
}

ElementSet BinaryRelation::predecessors(ElementId q) const {
  ElementSet out(n_);
  for (std::size_t p = 0; p < n_; ++p)
    if (contains(ElementId(p), q))
      out.insert(ElementId(p));
  return out;
}

BinaryRelation diagonal_on(const Poset &p, const ElementSet &z) {
  BinaryRelation r(p.size());
  for (auto e : z)
    r.insert(e, e);
  return r;
}

BinaryRelation order_relation(const Poset &p) {
  BinaryRelation r(p.size());
  for (auto a : p.elements())
    for (auto b : p.up(a))
      r.insert(a, b);
  return r;
}

bool is_reflexive(const BinaryRelation &r) {
  for (std::size_t i = 0; i < r.domain_size(); ++i)
    if (!r.contains(ElementId(i), ElementId(i)))
      return false;
  return true;
}

RelationContext::RelationContext(const Poset &p, const ElementSet &z,
                                 const EnumerationLimits &limits)
    : base_(p), z_(z) {
  auto sq = product(p, p, p.size() * p.size());
  square_ = std::make_unique<ZContext>(sq, diagonal_on(p, z).pairs());
  families_ = std::make_unique<ZDisjointFamilies>(*square_, sq.all(), limits);
}

Certificate RelationContext::is_complete(const BinaryRelation &r) const {
  if (r.domain_size() != base_.size())
    throw Error(ErrorCode::invalid_argument,
                "relation does not belong to this poset");
  auto cert = families_->check(r.pairs());
  return cert;
}

Certificate is_relation_Z_complete(const Poset &p, const ElementSet &z,
                                   const BinaryRelation &r) {
  RelationContext ctx(p, z);
  auto cert = ctx.is_complete(r);
  return cert;
}

namespace {

std::string pair_label(const Poset &p, ElementId a, ElementId b) {
  return "(" + p.label(a) + "," + p.label(b) + ")";
}

// Condition (1) evaluated in P: families of related pairs dominated by
// pairwise disjoint elements of Z, joined componentwise.
class ComponentwiseJoins {
public:
  ComponentwiseJoins(const Poset &p, const ElementSet &z,
                     const BinaryRelation &r)
      : p_(p), z_(z), r_(r), pairs_(r.to_pairs()) {}

  std::optional<std::string> first_failure() {
    dfs(0, p_.all(), p_.all());
    return failure_;
  }

private:
  void check(const ElementSet &up_first, const ElementSet &up_second) {
    auto a = p_.least_of(up_first), b = p_.least_of(up_second);
    if (a && b && r_.contains(*a, *b))
      return;
    std::string s;
    for (auto i : chosen_)
      s += pair_label(p_, pairs_[i].first, pairs_[i].second);
    failure_ = "family {" + s + "}: componentwise join " +
               (a && b ? pair_label(p_, *a, *b) + " not related"
                       : std::string("undefined"));
  }

  bool assignable(std::size_t k, std::vector<ElementId> &assigned) {
    if (k == chosen_.size())
      return true;
    auto [a, b] = pairs_[chosen_[k]];
    for (auto w : p_.up(a) & p_.up(b) & z_) {
      if (!std::all_of(assigned.begin(), assigned.end(),
                       [&](ElementId g) { return p_.disjoint(g, w); }))
        continue;
      assigned.push_back(w);
      if (assignable(k + 1, assigned))
        return true;
      assigned.pop_back();
    }
    return false;
  }

  void dfs(std::size_t start, const ElementSet &up_first,
           const ElementSet &up_second) {
    if (failure_)
      return;
    check(up_first, up_second);
    for (std::size_t i = start; i < pairs_.size() && !failure_; ++i) {
      chosen_.push_back(i);
      std::vector<ElementId> assigned;
      if (assignable(0, assigned))
        dfs(i + 1, up_first & p_.up(pairs_[i].first),
            up_second & p_.up(pairs_[i].second));
      chosen_.pop_back();
    }
  }

  const Poset &p_;
  const ElementSet &z_;
  const BinaryRelation &r_;
  std::vector<std::pair<ElementId, ElementId>> pairs_;
  std::vector<std::size_t> chosen_;
  std::optional<std::string> failure_;
};

} // namespace

Certificate crosscheck_rel_pwedgez(const Poset &p, const ElementSet &z,
                                   const BinaryRelation &r) {
  Certificate cert("crosscheck_rel_pwedgez");
  auto modular = is_P_modular(p, z);
  if (!cert.require("Z is P-modular", modular.holds(),
                    modular.first_failure() ? modular.first_failure()->witness
                                            : ""))
    return cert;

  RelationContext ctx(p, z);
  auto base = ctx.is_complete(r);
  bool complete = base.status() == Status::holds ||
                  base.status() == Status::sampled;

  auto joins = ComponentwiseJoins(p, z, r).first_failure();
  std::string meet_witness;
  for (auto [a, b] : r.to_pairs()) {
    for (auto w : z) {
      auto ma = p.meet(a, w), mb = p.meet(b, w);
      if (!ma || !mb || !r.contains(*ma, *mb)) {
        meet_witness = pair_label(p, a, b) + " with z=" + p.label(w);
        break;
      }
    }
    if (!meet_witness.empty())
      break;
  }
  bool characterization = !joins && meet_witness.empty();
  cert.note_fact("Z-complete", complete);
  cert.note_fact("(1) componentwise joins", !joins);
  cert.note_fact("(2') meets with Z", meet_witness.empty());

  cert.conclude("characterization implies Z-complete",
                !characterization || complete,
                base.first_failure() ? base.first_failure()->witness : "");
  bool central =
      is_S_central(ctx.square().poset(), ctx.square().z(),
                   ctx.square().poset().all())
          .holds();
  cert.note_fact("=_Z is PxP-central", central);
  if (central)
    cert.conclude("Z-complete implies characterization",
                  !complete || characterization,
                  joins ? *joins : meet_witness);
  return cert;
}

FinitenessReport finite_elements(const Poset &p, const BinaryRelation &r) {
  FinitenessReport out{p.none(), std::vector<std::optional<ElementId>>(p.size())};
  for (auto e : p.elements()) {
    std::optional<ElementId> witness;
    for (auto q : p.down(e))
      if (q != e && r.contains(e, q)) {
        witness = q;
        break;
      }
    if (witness)
      out.counterexample[e.index] = witness;
    else
      out.finite.insert(e);
  }
  return out;
}

BinaryRelation rel_precsim_Z(const Poset &p, const ElementSet &z,
                             PrecsimDirection direction) {
  BinaryRelation r(p.size());
  for (auto a : p.elements()) {
    auto above_a = p.up(a) & z;
    for (auto b : p.elements()) {
      auto above_b = p.up(b) & z;
      bool related = direction == PrecsimDirection::proof_consistent
                         ? above_b.is_subset_of(above_a)
                         : above_a.is_subset_of(above_b);
      if (related)
        r.insert(a, b);
    }
  }
  return r;
}

BinaryRelation rel_sim_Z(const Poset &p, const ElementSet &z) {
  auto r = rel_precsim_Z(p, z);
  return r & r.converse();
}

using detail::HypothesisRecorder;
using detail::verdict;

Certificate check_fincom(const Orthoposet &o, const ElementSet &z,
                         const BinaryRelation &r, HypothesisMode mode,
                         const RelationContext *rel_ctx) {
  const auto &p = o.poset();
  Certificate cert("check_fincom");
  HypothesisRecorder h(cert, mode);
  h.need("Z = perp(Z)", [&] {
    auto img = perp_image(o, z);
    return std::pair{img == z, "perp(Z)=" + p.format(img)};
  });
  h.need("Z is contained in the centre", [&] {
    auto outside = z - central_elements(p);
    return std::pair{outside.empty(), "not central: " + p.format(outside)};
  });
  h.need("R is reflexive", [&] {
    for (auto e : p.elements())
      if (!r.contains(e, e))
        return std::pair{false, "missing " + pair_label(p, e, e)};
    return std::pair{true, std::string()};
  });
  std::unique_ptr<ZContext> ctx;
  h.need("P is Z-complete", [&] {
    ctx = std::make_unique<ZContext>(p, z);
    return verdict(is_Z_complete(*ctx, p.all()));
  });
  h.need("R is Z-complete", [&] {
    if (rel_ctx)
      return verdict(rel_ctx->is_complete(r));
    return verdict(is_relation_Z_complete(p, z, r));
  });
  if (!h.ok())
    return cert;

  auto report = finite_elements(p, r);
  auto fin = is_Z_complete(*ctx, report.finite);
  auto v = verdict(fin);
  cert.conclude("F_R is Z-complete", v.first,
                "F=" + p.format(report.finite) + ": " + v.second);
  if (fin.sampled())
    cert.mark_sampled(fin.note());
  return cert;
}

Certificate check_weakest(const Poset &p, const ElementSet &z,
                          const BinaryRelation &r, HypothesisMode mode,
                          const RelationContext *rel_ctx) {
  Certificate cert("check_weakest");
  HypothesisRecorder h(cert, mode);
  h.need("only 0 is related to 0", [&] {
    auto pre = r.predecessors(p.bottom());
    return std::pair{pre == ElementSet(p.size(), {p.bottom()}),
                     "{p : p R 0}=" + p.format(pre)};
  });
  h.need("Z is P-central",
       [&] { return verdict(is_S_central(p, z, p.all())); });
  h.need("R is Z-complete", [&] {
    if (rel_ctx)
      return verdict(rel_ctx->is_complete(r));
    return verdict(is_relation_Z_complete(p, z, r));
  });
  if (!h.ok())
    return cert;

  auto weakest = rel_precsim_Z(p, z);
  std::string witness;
  for (auto [a, b] : r.to_pairs())
    if (!weakest.contains(a, b)) {
      witness = pair_label(p, a, b) + " not in <~_Z";
      cert.counterexample = {a, b};
      break;
    }
  cert.conclude("R is contained in <~_Z", witness.empty(), witness);
  return cert;
}

Certificate finite_characterization(const ZContext &ctx, ElementId e,
                                    HypothesisMode mode) {
  const auto &p = ctx.poset();
  const auto &z = ctx.z();
  Certificate cert("finite_characterization");
  HypothesisRecorder h(cert, mode);
  auto flag = [&](const char *name, bool ok, auto detail) {
    h.need(name, [&] {
      if (ok)
        return std::pair{true, std::string()};
      return verdict(detail());
    });
  };
  flag("Z is a lower complete sublattice", ctx.flags().lower_complete_sublattice,
       [&] { return is_lower_complete_sublattice(p, z); });
  flag("P is Z-directed", ctx.flags().z_directed,
       [&] { return is_Z_directed(ctx); });
  flag("Z is P-central", ctx.flags().p_central,
       [&] { return is_S_central(ctx, p.all()); });
  flag("Z is P-modular", ctx.flags().p_modular,
       [&] { return is_P_modular(p, z); });
  flag("Z is Z-modular", ctx.flags().z_modular,
       [&] { return is_Z_modular(p, z); });
  if (!h.ok())
    return cert;

  auto report = finite_elements(p, rel_precsim_Z(p, z));
  bool finite = report.finite.contains(e);
  cert.note_fact("finite", finite);

  ElementSet meets(p.size());
  std::string undefined;
  for (auto w : z) {
    auto m = p.meet(e, w);
    if (m)
      meets.insert(*m);
    else if (undefined.empty())
      undefined = p.label(e) + " ^ " + p.label(w) + " undefined";
  }
  cert.conclude("p ^ z exists for all z in Z", undefined.empty(), undefined);
  bool sections = meets == p.down(e);
  cert.note_fact("[0,p] = {p^z}", sections);
  cert.conclude("p finite <=> [0,p] = {p ^ z : z in Z}", finite == sections,
                "finite=" + std::string(finite ? "true" : "false") +
                    " [0,p]=" + p.format(p.down(e)) +
                    " {p^z}=" + p.format(meets));
  if (!finite)
    return cert;

  // q -> c_Z(q) and w -> p ^ w between [0,p] and [0,c_Z(p)] ^ Z
  const auto lower = p.down(e);
  const auto target = p.down(ctx.cover(e)) & z;
  std::string bad;
  for (auto q : lower) {
    auto c = ctx.cover(q);
    auto back = p.meet(e, c);
    if (!target.contains(c) || !back || *back != q) {
      bad = "q=" + p.label(q) + " -> " + p.label(c) + " -> " +
            (back ? p.label(*back) : "undefined");
      break;
    }
  }
  if (bad.empty())
    for (auto w : target) {
      auto m = p.meet(e, w);
      if (!m || !lower.contains(*m) || ctx.cover(*m) != w) {
        bad = "z=" + p.label(w) + " -> " + (m ? p.label(*m) : "undefined") +
              (m ? " -> " + p.label(ctx.cover(*m)) : "");
        break;
      }
    }
  cert.conclude("maps are mutually inverse", bad.empty(), bad);

  std::string order;
  for (auto a : lower)
    for (auto b : lower)
      if (p.leq(a, b) != p.leq(ctx.cover(a), ctx.cover(b)) && order.empty())
        order = p.label(a) + "," + p.label(b);
  cert.conclude("maps preserve and reflect order", order.empty(),
                "order differs at " + order);
  return cert;
}

Certificate finite_characterization(const Poset &poset, const ElementSet &z,
                                    ElementId p) {
  return finite_characterization(ZContext(poset, z), p);
}

} // namespace podec

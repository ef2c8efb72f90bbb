#include "podec/zstruct.hpp"

#include <algorithm>

#include "podec/error.hpp"

namespace podec {

namespace {

constexpr const char *kCond1 = "(1) joins of Z-disjoint subsets of I lie in I";
constexpr const char *kCond2 = "(2) Z-disjoint pairs with join in I lie in I";

// Z-elements above p ordered by increasing height, then index.
std::vector<ElementId> candidates_above(const Poset &p, const ElementSet &z,
                                        ElementId e) {
  auto v = (p.up(e) & z).to_vector();
  std::stable_sort(v.begin(), v.end(), [&](ElementId a, ElementId b) {
    return p.height(a) < p.height(b);
  });
  return v;
}

bool compatible(const Poset &p, const std::vector<ElementId> &assigned,
                ElementId f) {
  return std::all_of(assigned.begin(), assigned.end(),
                     [&](ElementId g) { return p.disjoint(f, g); });
}

bool backtrack(const Poset &p, const std::vector<std::vector<ElementId>> &cands,
               std::size_t k, std::vector<ElementId> &assigned) {
  if (k == cands.size())
    return true;
  for (auto f : cands[k]) {
    if (!compatible(p, assigned, f))
      continue;
    assigned.push_back(f);
    if (backtrack(p, cands, k + 1, assigned))
      return true;
    assigned.pop_back();
  }
  return false;
}

std::optional<std::vector<ElementId>>
search_assignment(const Poset &p, const ElementSet &z,
                  const std::vector<ElementId> &elems) {
  std::vector<std::vector<ElementId>> cands;
  cands.reserve(elems.size());
  for (auto e : elems) {
    cands.push_back(candidates_above(p, z, e));
    if (cands.back().empty())
      return std::nullopt;
  }
  std::vector<ElementId> assigned;
  if (!backtrack(p, cands, 0, assigned))
    return std::nullopt;
  return assigned;
}

DisjointWitness make_witness(const std::vector<ElementId> &elems,
                             const std::vector<ElementId> &values) {
  DisjointWitness w;
  for (std::size_t i = 0; i < elems.size(); ++i)
    w.assignment.emplace_back(elems[i], values[i]);
  return w;
}

std::string describe_pair(const Poset &p, ElementId a, ElementId b) {
  return "{" + p.label(a) + "," + p.label(b) + "}";
}

MaybeElement least_within(const Poset &p, const ElementSet &upper) {
  if (upper.empty())
    return MaybeElement::undefined(Undefined::no_upper_bound, p.none());
  if (auto l = p.least_of(upper))
    return MaybeElement::of(*l);
  return MaybeElement::undefined(Undefined::no_least_upper_bound,
                                 p.minimal_of(upper));
}

// Depth-first enumeration of Z-disjoint subsets of a ground set, keeping
// one witness assignment for the current family.
class FamilyWalker {
public:
  FamilyWalker(const ZContext &ctx, const ElementSet &ground,
               const EnumerationLimits &limits,
               std::vector<ZDisjointFamilies::Family> &out)
      : ctx_(ctx), p_(ctx.poset()), ground_(ground.to_vector()),
        limits_(limits), out_(out) {}

  bool run() {
    out_.push_back({p_.none(), p_.bottom()});
    dfs(0, p_.all());
    return !truncated_;
  }

private:
  void dfs(std::size_t start, const ElementSet &upper) {
    for (std::size_t i = start; i < ground_.size(); ++i) {
      if (truncated_)
        return;
      if (++nodes_ > limits_.max_nodes) {
        truncated_ = true;
        return;
      }
      auto e = ground_[i];
      bool pairwise = std::all_of(chosen_.begin(), chosen_.end(), [&](auto c) {
        return ctx_.pair_disjoint(c, e);
      });
      if (!pairwise)
        continue;
      auto saved = assigned_;
      if (!extend(e)) {
        assigned_ = std::move(saved);
        continue;
      }
      chosen_.push_back(e);
      auto u = upper & p_.up(e);
      ElementSet members(p_.size());
      for (auto c : chosen_)
        members.insert(c);
      out_.push_back({std::move(members), p_.least_of(u)});
      dfs(i + 1, u);
      chosen_.pop_back();
      assigned_ = std::move(saved);
    }
  }

  bool extend(ElementId e) {
    if (ctx_.has_covers()) {
      // pairwise disjoint covers already verified
      assigned_.push_back(ctx_.cover(e));
      return true;
    }
    for (auto f : candidates_above(p_, ctx_.z(), e))
      if (compatible(p_, assigned_, f)) {
        assigned_.push_back(f);
        return true;
      }
    auto elems = chosen_;
    elems.push_back(e);
    auto full = search_assignment(p_, ctx_.z(), elems);
    if (!full)
      return false;
    assigned_ = std::move(*full);
    return true;
  }

  const ZContext &ctx_;
  const Poset &p_;
  std::vector<ElementId> ground_;
  const EnumerationLimits &limits_;
  std::vector<ZDisjointFamilies::Family> &out_;
  std::vector<ElementId> chosen_;
  std::vector<ElementId> assigned_;
  std::size_t nodes_ = 0;
  bool truncated_ = false;
};

Certificate modularity_check(const Poset &p, const ElementSet &z,
                             bool within_z, const char *operation) {
  Certificate cert(operation);
  auto join_of = [&](ElementId a, ElementId b) -> std::optional<ElementId> {
    if (!within_z)
      return p.join(a, b);
    return p.least_of(p.up(a) & p.up(b) & z);
  };
  auto meet_of = [&](ElementId a, ElementId b) -> std::optional<ElementId> {
    if (!within_z)
      return p.meet(a, b);
    return p.greatest_of(p.down(a) & p.down(b) & z);
  };
  for (auto y : z)
    for (auto w : z) {
      auto m = meet_of(y, w);
      if (!m || *m != p.bottom())
        continue;
      auto lower_y = p.down(y), lower_w = p.down(w);
      if (within_z) {
        lower_y &= z;
        lower_w &= z;
      }
      for (auto a : lower_y)
        for (auto b : lower_w) {
          auto j = join_of(a, b);
          if (!j)
            continue;
          auto back = meet_of(w, *j);
          if (!back || *back != b) {
            cert.counterexample = {y, w, a, b};
            cert.conclude("disjoint pairs in Z are modular", false,
                          "y=" + p.label(y) + " z=" + p.label(w) +
                              " p=" + p.label(a) + " q=" + p.label(b) +
                              ": z^(pvq)=" +
                              (back ? p.label(*back) : "undefined") +
                              " != q");
            return cert;
          }
        }
    }
  cert.conclude("disjoint pairs in Z are modular", true);
  return cert;
}

} // namespace

ZContext::ZContext(Poset p, ElementSet z) : p_(std::move(p)), z_(std::move(z)) {
  if (z_.universe() != p_.size())
    throw Error(ErrorCode::invalid_argument,
                "Z does not belong to this poset");
  const std::size_t n = p_.size();
  flags_.lower_complete_sublattice =
      is_lower_complete_sublattice(p_, z_).holds();
  if (flags_.lower_complete_sublattice) {
    covers_.reserve(n);
    for (auto e : p_.elements())
      covers_.push_back(*meet_set(p_, p_.up(e) & z_).as_optional());
  }
  flags_.upper_complete_sublattice =
      is_upper_complete_sublattice(p_, z_).holds();

  pair_disjoint_.assign(n, ElementSet(n));
  for (auto a : p_.elements())
    for (auto b : p_.elements()) {
      if (b <= a)
        continue;
      bool d = false;
      if (has_covers()) {
        d = p_.disjoint(covers_[a.index], covers_[b.index]);
      } else {
        for (auto y : p_.up(a) & z_) {
          for (auto w : p_.up(b) & z_)
            if (p_.disjoint(y, w)) {
              d = true;
              break;
            }
          if (d)
            break;
        }
      }
      if (d) {
        pair_disjoint_[a.index].insert(b);
        pair_disjoint_[b.index].insert(a);
      }
    }

  flags_.z_directed = is_Z_directed(*this).holds();
  flags_.pseudocomplemented = true;
  for (auto e : z_)
    if (!pseudocomplement_in_Z(*this, e)) {
      flags_.pseudocomplemented = false;
      break;
    }
  flags_.p_modular = is_P_modular(p_, z_).holds();
  flags_.z_modular = is_Z_modular(p_, z_).holds();
  flags_.z_central = is_S_central(p_, z_, z_).holds();
  flags_.p_central = is_S_central(p_, z_, p_.all()).holds();
}

ElementId ZContext::cover(ElementId p) const {
  if (!has_covers())
    throw Error(ErrorCode::not_lower_complete_sublattice,
                "Z-covers need Z to be a lower complete sublattice: " +
                    is_lower_complete_sublattice(p_, z_)
                        .first_failure()
                        ->witness);
  return covers_[p.index];
}

std::optional<ElementId> ZContext::join_in_z(ElementId a, ElementId b) const {
  return p_.least_of(p_.up(a) & p_.up(b) & z_);
}

std::optional<ElementId> ZContext::meet_in_z(ElementId a, ElementId b) const {
  return p_.greatest_of(p_.down(a) & p_.down(b) & z_);
}

MaybeElement ZContext::join_in_z(const ElementSet &s) const {
  ElementSet upper = z_;
  for (auto e : s)
    upper &= p_.up(e);
  return least_within(p_, upper);
}

std::optional<DisjointWitness> z_disjoint_witness(const Poset &p,
                                                  const ElementSet &z,
                                                  const ElementSet &s) {
  auto elems = s.to_vector();
  auto values = search_assignment(p, z, elems);
  if (!values)
    return std::nullopt;
  return make_witness(elems, *values);
}

std::optional<DisjointWitness> z_disjoint_witness(const ZContext &ctx,
                                                  const ElementSet &s,
                                                  WitnessMethod method) {
  if (method == WitnessMethod::automatic)
    method = ctx.has_covers() ? WitnessMethod::covers
                              : WitnessMethod::backtracking;
  if (method == WitnessMethod::backtracking)
    return z_disjoint_witness(ctx.poset(), ctx.z(), s);

  const auto &p = ctx.poset();
  auto elems = s.to_vector();
  std::vector<ElementId> values;
  for (auto e : elems)
    values.push_back(ctx.cover(e));
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (!p.disjoint(values[i], values[j]))
        return std::nullopt;
  return make_witness(elems, values);
}

ZDisjointFamilies::ZDisjointFamilies(const ZContext &ctx,
                                     const ElementSet &ground,
                                     const EnumerationLimits &limits)
    : ctx_(&ctx), ground_(ground) {
  FamilyWalker walker(ctx, ground, limits, families_);
  exhaustive_ = walker.run();
}

Certificate ZDisjointFamilies::check(const ElementSet &i) const {
  const auto &p = ctx_->poset();
  if (!i.is_subset_of(ground_))
    throw Error(ErrorCode::invalid_argument,
                "candidate set is not inside the enumerated ground set");
  Certificate cert("is_Z_complete");
  bool cond1 = true;
  for (const auto &f : families_) {
    if (!f.members.is_subset_of(i))
      continue;
    if (!f.join || !i.contains(*f.join)) {
      cond1 = false;
      cert.counterexample = f.members.to_vector();
      std::string why;
      if (!f.join) {
        why = "join undefined (" +
              std::string(to_string(join_set(p, f.members).reason())) + ")";
      } else {
        why = "join " + p.label(*f.join) + " not in I";
      }
      cert.conclude(kCond1, false, "S=" + p.format(f.members) + ": " + why);
      break;
    }
  }
  if (cond1)
    cert.conclude(kCond1, true);

  bool cond2 = true;
  for (auto a : p.elements()) {
    for (auto b : ctx_->disjoint_partners(a)) {
      if (b <= a)
        continue;
      auto j = p.join(a, b);
      if (!j || !i.contains(*j))
        continue;
      if (!i.contains(a) || !i.contains(b)) {
        cond2 = false;
        if (cert.counterexample.empty())
          cert.counterexample = {a, b};
        cert.conclude(kCond2, false,
                      "pair " + describe_pair(p, a, b) + " with join " +
                          p.label(*j) + " in I but " +
                          p.label(i.contains(a) ? b : a) + " not in I");
        break;
      }
    }
    if (!cond2)
      break;
  }
  if (cond2)
    cert.conclude(kCond2, true);
  if (!exhaustive_)
    cert.mark_sampled("Z-disjoint subset enumeration hit the node limit");
  return cert;
}

Certificate is_Z_complete(const ZContext &ctx, const ElementSet &i,
                          const EnumerationLimits &limits) {
  ZDisjointFamilies families(ctx, i, limits);
  return families.check(i);
}

std::optional<CentralSplit> central_split(const Poset &p, const ElementSet &z,
                                          ElementId elem, ElementId y) {
  const auto &below = p.down(elem);
  auto qs = p.down(y) & below;
  for (auto w : z) {
    if (!p.disjoint(y, w))
      continue;
    auto rs = p.down(w) & below;
    for (auto q : qs)
      for (auto r : rs) {
        auto j = p.join(q, r);
        if (j && *j == elem)
          return CentralSplit{w, q, r};
      }
  }
  return std::nullopt;
}

Certificate is_S_central(const Poset &p, const ElementSet &z,
                         const ElementSet &s) {
  Certificate cert("is_S_central");
  for (auto e : s)
    for (auto y : z)
      if (!central_split(p, z, e, y)) {
        cert.counterexample = {e, y};
        cert.conclude("every p in S splits across every y in Z", false,
                      "p=" + p.label(e) + " y=" + p.label(y));
        return cert;
      }
  cert.conclude("every p in S splits across every y in Z", true);
  return cert;
}

Certificate is_S_central(const ZContext &ctx, const ElementSet &s) {
  return is_S_central(ctx.poset(), ctx.z(), s);
}

ElementId central_cover(const ZContext &ctx, ElementId p) {
  return ctx.cover(p);
}

Certificate is_lower_complete_sublattice(const Poset &p, const ElementSet &z) {
  Certificate cert("is_lower_complete_sublattice");
  auto t = p.top();
  if (!t || !z.contains(*t)) {
    cert.conclude("empty meet 1 lies in Z", false,
                  t ? "1=" + p.label(*t) + " not in Z" : "poset has no top");
    return cert;
  }
  cert.conclude("empty meet 1 lies in Z", true);
  for (auto a : z)
    for (auto b : z) {
      if (b <= a)
        continue;
      auto m = p.meet(a, b);
      if (!m || !z.contains(*m)) {
        cert.counterexample = {a, b};
        cert.conclude("pairwise meets exist in Z", false,
                      describe_pair(p, a, b) + ": meet " +
                          (m ? p.label(*m) + " not in Z" : "undefined"));
        return cert;
      }
    }
  cert.conclude("pairwise meets exist in Z", true);
  return cert;
}

Certificate is_upper_complete_sublattice(const Poset &p, const ElementSet &z) {
  Certificate cert("is_upper_complete_sublattice");
  if (!z.contains(p.bottom())) {
    cert.conclude("empty join 0 lies in Z", false,
                  "0=" + p.label(p.bottom()) + " not in Z");
    return cert;
  }
  cert.conclude("empty join 0 lies in Z", true);
  for (auto a : z)
    for (auto b : z) {
      if (b <= a)
        continue;
      auto j = p.join(a, b);
      if (!j || !z.contains(*j)) {
        cert.counterexample = {a, b};
        cert.conclude("pairwise joins exist in Z", false,
                      describe_pair(p, a, b) + ": join " +
                          (j ? p.label(*j) + " not in Z" : "undefined"));
        return cert;
      }
    }
  cert.conclude("pairwise joins exist in Z", true);
  return cert;
}

Certificate is_P_modular(const Poset &p, const ElementSet &z) {
  return modularity_check(p, z, false, "is_P_modular");
}

Certificate is_Z_modular(const Poset &p, const ElementSet &z) {
  return modularity_check(p, z, true, "is_Z_modular");
}

MaybeElement pseudocomplement_in_Z(const ZContext &ctx, ElementId z) {
  const auto &p = ctx.poset();
  if (!ctx.z().contains(z))
    throw Error(ErrorCode::not_in_z, p.label(z) + " is not in Z");
  ElementSet disjoint(p.size());
  for (auto y : ctx.z())
    if (p.disjoint(y, z))
      disjoint.insert(y);
  auto j = ctx.join_in_z(disjoint);
  if (!j)
    return j;
  if (!p.disjoint(*j, z))
    return MaybeElement::undefined(Undefined::no_least_upper_bound,
                                   ElementSet(p.size(), {*j}));
  return j;
}

Certificate is_Z_directed(const ZContext &ctx) {
  const auto &p = ctx.poset();
  Certificate cert("is_Z_directed");
  for (auto a : p.elements())
    for (auto b : ctx.disjoint_partners(a)) {
      if (b <= a)
        continue;
      if (!p.join(a, b)) {
        cert.counterexample = {a, b};
        cert.conclude("Z-disjoint pairs have joins", false,
                      "pair " + describe_pair(p, a, b) + " has no join");
        return cert;
      }
    }
  cert.conclude("Z-disjoint pairs have joins", true);
  return cert;
}

Certificate is_Z_directed(const Poset &p, const ElementSet &z) {
  return is_Z_directed(ZContext(p, z));
}

Certificate crosscheck_pwedgez(const ZContext &ctx, const ElementSet &i,
                               const EnumerationLimits &limits) {
  const auto &p = ctx.poset();
  Certificate cert("crosscheck_pwedgez");
  if (!ctx.flags().p_modular) {
    cert.require("Z is P-modular", false,
                 is_P_modular(p, ctx.z()).first_failure()->witness);
    return cert;
  }
  cert.require("Z is P-modular", true);

  auto base = is_Z_complete(ctx, i, limits);
  bool complete = base.status() == Status::holds ||
                  base.status() == Status::sampled;
  bool cond1 = base.conclusions().front().ok;

  bool meet_closed = true;
  std::string meet_witness;
  for (auto e : i) {
    for (auto w : ctx.z()) {
      auto m = p.meet(e, w);
      if (!m || !i.contains(*m)) {
        meet_closed = false;
        meet_witness = "p=" + p.label(e) + " z=" + p.label(w) + ": p^z " +
                       (m ? p.label(*m) + " not in I" : "undefined");
        break;
      }
    }
    if (!meet_closed)
      break;
  }
  bool alternative = cond1 && meet_closed;
  cert.note_fact("Z-complete", complete);
  cert.note_fact("(1)", cond1);
  cert.note_fact("(2')", meet_closed);

  cert.conclude("(1) and (2') imply Z-complete", !alternative || complete,
                "characterization holds but " +
                    (base.first_failure() ? base.first_failure()->witness
                                          : std::string()));
  if (ctx.flags().p_central) {
    cert.conclude("Z-complete implies (1) and (2')", !complete || alternative,
                  meet_witness);
  } else {
    cert.note_fact("converse checked (Z is P-central)", false);
  }
  if (base.sampled())
    cert.mark_sampled(base.note());
  return cert;
}

Certificate crosscheck_bidirectional(const ZContext &ctx, const ElementSet &i,
                                     const EnumerationLimits &limits) {
  const auto &p = ctx.poset();
  Certificate cert("crosscheck_bidirectional");
  ZDisjointFamilies all(ctx, p.all(), limits);
  auto whole = all.check(p.all());
  bool ok = cert.require("P is Z-complete", whole.holds() || whole.sampled(),
                         whole.first_failure() ? whole.first_failure()->witness
                                               : "");
  std::string pc_witness;
  if (!ctx.flags().pseudocomplemented)
    for (auto w : ctx.z())
      if (!pseudocomplement_in_Z(ctx, w)) {
        pc_witness = p.label(w) + " has no pseudocomplement in Z";
        break;
      }
  ok = cert.require("Z is pseudocomplemented", ctx.flags().pseudocomplemented,
                    pc_witness) &&
       ok;
  if (!ok)
    return cert;

  auto base = all.check(i);
  bool complete = base.status() == Status::holds ||
                  base.status() == Status::sampled;
  bool biconditional = true;
  std::string witness;
  for (const auto &f : all.families()) {
    bool inside = f.members.is_subset_of(i);
    bool join_in = f.join && i.contains(*f.join);
    if (inside != join_in) {
      biconditional = false;
      witness = "S=" + p.format(f.members) +
                (inside ? " inside I, join outside" : " not inside I, join " +
                                                          p.label(*f.join) +
                                                          " in I");
      cert.counterexample = f.members.to_vector();
      break;
    }
  }
  cert.note_fact("Z-complete", complete);
  cert.note_fact("biconditional", biconditional);
  cert.conclude("biconditional agrees with Z-completeness",
                biconditional == complete,
                "Z-complete=" + std::string(complete ? "true" : "false") +
                    " biconditional=" + (biconditional ? "true" : "false") +
                    (witness.empty() ? "" : " " + witness));
  if (!all.exhaustive())
    cert.mark_sampled("Z-disjoint subset enumeration hit the node limit");
  return cert;
}

CoverMeet cover_meet_decomposition(const ZContext &ctx, ElementId p,
                                   ElementId z) {
  const auto &poset = ctx.poset();
  if (!ctx.z().contains(z))
    throw Error(ErrorCode::not_in_z, poset.label(z) + " is not in Z");
  std::string missing;
  if (!ctx.flags().lower_complete_sublattice)
    missing += " lower-complete-sublattice";
  if (!ctx.flags().z_modular)
    missing += " Z-modular";
  if (!ctx.flags().p_central)
    missing += " P-central";
  if (!missing.empty())
    throw Error(ErrorCode::hypothesis_not_satisfied,
                "cover_meet_decomposition needs Z to be" + missing);

  auto target = *poset.meet(ctx.cover(p), z);
  auto cands = (poset.down(p) & poset.down(z)).to_vector();
  std::stable_sort(cands.begin(), cands.end(), [&](ElementId a, ElementId b) {
    return poset.height(a) > poset.height(b);
  });
  for (auto q : cands) {
    if (ctx.cover(q) != target)
      continue;
    CoverMeet out{q, poset.meet(p, z), true};
    if (out.meet)
      out.hull_identity = ctx.cover(*out.meet) == target;
    return out;
  }
  throw Error(ErrorCode::search_exhausted,
              "no q below " + poset.label(p) + " and " + poset.label(z) +
                  " has cover " + poset.label(target));
}

} // namespace podec

#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "podec/certificate.hpp"
#include "podec/decompose.hpp"
#include "podec/ortho.hpp"
#include "podec/zstruct.hpp"

namespace podec {

/// Binary relation on an n-element poset, stored as a subset of P x P with
/// pair (p, q) at index p * n + q (the same indexing as product(P, P)).
class BinaryRelation {
public:
  BinaryRelation() = default;
  explicit BinaryRelation(std::size_t n) : n_(n), pairs_(n * n) {}
  BinaryRelation(std::size_t n, ElementSet pairs)
      : n_(n), pairs_(std::move(pairs)) {}

  std::size_t domain_size() const { return n_; }
  bool contains(ElementId p, ElementId q) const {
    return pairs_.contains(index(p, q));
  }
  void insert(ElementId p, ElementId q) { pairs_.insert(index(p, q)); }
  void erase(ElementId p, ElementId q) { pairs_.erase(index(p, q)); }
  std::size_t count() const { return pairs_.size(); }

  const ElementSet &pairs() const { return pairs_; }
  std::vector<std::pair<ElementId, ElementId>> to_pairs() const;

  bool is_subset_of(const BinaryRelation &o) const {
    return pairs_.is_subset_of(o.pairs_);
  }
  BinaryRelation operator&(const BinaryRelation &o) const {
    return {n_, pairs_ & o.pairs_};
  }
  BinaryRelation converse() const;
  bool operator==(const BinaryRelation &) const = default;

  /// {p : p R q}
  ElementSet predecessors(ElementId q) const;

private:
  ElementId index(ElementId p, ElementId q) const {
    return ElementId(static_cast<std::size_t>(p.index) * n_ + q.index);
  }
  std::size_t n_ = 0;
  ElementSet pairs_;
};

/// =_Z = {(z, z) : z in Z}
BinaryRelation diagonal_on(const Poset &p, const ElementSet &z);
/// The order relation <=.
BinaryRelation order_relation(const Poset &p);
bool is_reflexive(const BinaryRelation &r);

/// P x P with =_Z as its distinguished subset. Z-completeness of relations
/// is decided here, and the Z-disjoint families of P x P are enumerated
/// once so many relations can be tested against the same (P, Z).
class RelationContext {
public:
  RelationContext(const Poset &p, const ElementSet &z,
                  const EnumerationLimits &limits = {});

  const Poset &base() const { return base_; }
  const ElementSet &z() const { return z_; }
  const ZContext &square() const { return *square_; }
  const ZDisjointFamilies &families() const { return *families_; }

  Certificate is_complete(const BinaryRelation &r) const;

private:
  Poset base_;
  ElementSet z_;
  std::unique_ptr<ZContext> square_;
  std::unique_ptr<ZDisjointFamilies> families_;
};

/// R is Z-complete iff it is =_Z-complete as a subset of P x P.
Certificate is_relation_Z_complete(const Poset &p, const ElementSet &z,
                                   const BinaryRelation &r);

/// Compares is_relation_Z_complete with the componentwise
/// characterization: joins of =_Z-disjoint related pairs stay related, and
/// p R q implies (p ^ z) R (q ^ z).
Certificate crosscheck_rel_pwedgez(const Poset &p, const ElementSet &z,
                                   const BinaryRelation &r);

struct FinitenessReport {
  ElementSet finite;
  /// For p outside `finite`: some q <= p, q != p with p R q.
  std::vector<std::optional<ElementId>> counterexample;
};

/// p is R-finite iff p R q <= p forces q = p.
FinitenessReport finite_elements(const Poset &p, const BinaryRelation &r);

enum class PrecsimDirection {
  /// p <~_Z q iff [q,1] ^ Z is contained in [p,1] ^ Z (c_Z(p) <= c_Z(q)).
  proof_consistent,
  /// The reverse inclusion, kept for comparison experiments.
  as_displayed,
};

BinaryRelation rel_precsim_Z(
    const Poset &p, const ElementSet &z,
    PrecsimDirection direction = PrecsimDirection::proof_consistent);
/// ~_Z, the symmetric part of <~_Z.
BinaryRelation rel_sim_Z(const Poset &p, const ElementSet &z);

/// F_R is Z-complete when P is Z-complete, Z = perp(Z) lies in the centre
/// and R is reflexive and Z-complete.
Certificate check_fincom(const Orthoposet &o, const ElementSet &z,
                         const BinaryRelation &r,
                         HypothesisMode mode = HypothesisMode::full,
                         const RelationContext *rel_ctx = nullptr);

/// R is contained in <~_Z when Z is P-central, R is Z-complete and only 0
/// is related to 0.
Certificate check_weakest(const Poset &p, const ElementSet &z,
                          const BinaryRelation &r,
                          HypothesisMode mode = HypothesisMode::full,
                          const RelationContext *rel_ctx = nullptr);

/// p is <~_Z-finite iff [0,p] = {p ^ z : z in Z}; in that case
/// q -> c_Z(q) and z -> p ^ z are inverse isomorphisms between [0,p] and
/// [0,c_Z(p)] ^ Z.
Certificate finite_characterization(const ZContext &ctx, ElementId p,
                                    HypothesisMode mode = HypothesisMode::full);
Certificate finite_characterization(const Poset &poset, const ElementSet &z,
                                    ElementId p);

} // namespace podec

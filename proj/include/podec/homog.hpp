#pragma once

#include <map>
#include <optional>
#include <vector>

#include "podec/certificate.hpp"
#include "podec/decompose.hpp"
#include "podec/ortho.hpp"
#include "podec/relations.hpp"

namespace podec {

/// p as the join of pairwise related elements; the order is |members|.
struct HomogeneityWitness {
  ElementId element;
  std::vector<ElementId> members;

  std::size_t order() const { return members.size(); }
  bool operator==(const HomogeneityWitness &) const = default;
};

/// H_{I,Z}: p H q iff p, q in I, p orthogonal to q and c_Z(p) = c_Z(q).
/// Throws not_lower_complete_sublattice when covers are unavailable.
BinaryRelation build_H(const Orthoposet &o, const ZContext &ctx,
                       const ElementSet &i);
BinaryRelation build_H(const Orthoposet &o, const ElementSet &z,
                       const ElementSet &i);

/// Join equals the element, members pairwise H-related, and (order 1)
/// the single member lies in I.
Certificate validate_witness(const Poset &p, const BinaryRelation &h,
                             const ElementSet &i, const HomogeneityWitness &w);

/// Every order in which `e` is H-homogeneous, with the first witness found
/// for each. Order 1 is reserved for e itself when e is in I.
std::map<std::size_t, HomogeneityWitness>
homogeneous_orders(const Poset &p, const BinaryRelation &h,
                   const ElementSet &i, ElementId e);
std::map<std::size_t, HomogeneityWitness>
homogeneous_orders(const Orthoposet &o, const ElementSet &z,
                   const ElementSet &i, ElementId e);

/// Every nonzero element lies above some nonzero member of I.
Certificate is_order_dense(const Poset &p, const ElementSet &i);

/// Members paired index by index: {s_k v t_k}. The certificate asserts the
/// result is a valid witness of the same order for p v q.
struct BlockwiseJoin {
  std::optional<HomogeneityWitness> witness;
  Certificate certificate{"join_blockwise"};
};
BlockwiseJoin join_blockwise(const ZContext &ctx, const BinaryRelation &h,
                             const ElementSet &i, const HomogeneityWitness &a,
                             const HomogeneityWitness &b);

struct HomogeneousDecomposition {
  /// order -> z_order, nonzero parts only
  std::map<std::size_t, ElementId> parts;
  std::map<std::size_t, HomogeneityWitness> witnesses;
  /// p_0, p_1, ... chosen by the recursion
  std::vector<ElementId> steps;
  /// z_0, ..., z_N before zero parts are dropped
  std::vector<ElementId> raw;
  BinaryRelation h;
};

struct HomogeneousOutcome {
  Certificate certificate{"homog_decompose"};
  std::optional<HomogeneousDecomposition> decomposition;
};

HomogeneousOutcome homog_decompose(const Orthoposet &o, const ZContext &ctx,
                                   const ElementSet &i,
                                   const TheoremOptions &opts = {});
HomogeneousOutcome homog_decompose(const Orthoposet &o, const ElementSet &z,
                                   const ElementSet &i);

/// Element of I_alpha whose cover is the join of the covers of I_alpha,
/// merging elements through central splits when no single one attains it.
/// `i_alpha` must be Z-complete for the merge to stay inside it.
ElementId merge_to_cover_join(const ZContext &ctx, const ElementSet &i_alpha);

/// Uniqueness of the decomposition: requires every nonzero z in Z to have
/// at most one order, then checks z_k = join(I_k ^ Z) and that no other
/// orthogonal family in Z is a valid decomposition.
Certificate check_uniqueness(const Orthoposet &o, const ZContext &ctx,
                             const ElementSet &i,
                             const HomogeneousDecomposition &d);

} // namespace podec

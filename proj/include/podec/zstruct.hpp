#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "podec/certificate.hpp"
#include "podec/poset.hpp"

namespace podec {

/// Witness f for Z-disjointness: p <= f(p) in Z, with pairwise meets 0.
struct DisjointWitness {
  std::vector<std::pair<ElementId, ElementId>> assignment;

  std::optional<ElementId> at(ElementId p) const {
    for (auto [q, z] : assignment)
      if (q == p)
        return z;
    return std::nullopt;
  }
};

/// Split of p across y in Z used by centrality: z in Z with y ^ z = 0 and
/// p = q v r, where q <= y and r <= z.
struct CentralSplit {
  ElementId z;
  ElementId q;
  ElementId r;
};

struct ZFlags {
  bool lower_complete_sublattice = false;
  bool upper_complete_sublattice = false;
  bool pseudocomplemented = false;
  bool z_modular = false;
  bool p_modular = false;
  bool z_directed = false;
  bool z_central = false;
  bool p_central = false;

  bool operator==(const ZFlags &) const = default;
};

/// A poset with a distinguished subset Z. All flags, the Z-covers (when Z
/// is a lower complete sublattice) and the table of Z-disjoint pairs are
/// computed at construction; afterwards the context is immutable.
class ZContext {
public:
  ZContext(Poset p, ElementSet z);

  const Poset &poset() const { return p_; }
  const ElementSet &z() const { return z_; }
  const ZFlags &flags() const { return flags_; }
  bool has_covers() const { return flags_.lower_complete_sublattice; }

  /// c_Z(p): the meet of [p,1] ^ Z. Throws
  /// ErrorCode::not_lower_complete_sublattice when covers are not defined.
  ElementId cover(ElementId p) const;

  /// True iff {p, q} (p != q) is Z-disjoint.
  bool pair_disjoint(ElementId p, ElementId q) const {
    return pair_disjoint_[p.index].contains(q);
  }
  /// Every q != p with {p, q} Z-disjoint.
  const ElementSet &disjoint_partners(ElementId p) const {
    return pair_disjoint_[p.index];
  }

  /// Join and meet inside the induced order on Z.
  std::optional<ElementId> join_in_z(ElementId a, ElementId b) const;
  std::optional<ElementId> meet_in_z(ElementId a, ElementId b) const;
  MaybeElement join_in_z(const ElementSet &s) const;

private:
  Poset p_;
  ElementSet z_;
  ZFlags flags_;
  std::vector<ElementId> covers_;
  std::vector<ElementSet> pair_disjoint_;
};

enum class WitnessMethod { automatic, backtracking, covers };

/// Finds f: S -> Z with p <= f(p) and pairwise meets 0. The automatic
/// method uses the covers when Z is a lower complete sublattice, and
/// backtracking (candidates by increasing height) otherwise.
std::optional<DisjointWitness>
z_disjoint_witness(const ZContext &ctx, const ElementSet &s,
                   WitnessMethod method = WitnessMethod::automatic);

/// Backtracking search that needs no context.
std::optional<DisjointWitness> z_disjoint_witness(const Poset &p,
                                                  const ElementSet &z,
                                                  const ElementSet &s);

struct EnumerationLimits {
  std::size_t max_nodes = std::size_t{1} << 22;
};

/// All Z-disjoint subsets of a ground set together with their joins. Used
/// to decide Z-completeness of many candidate sets against one context.
class ZDisjointFamilies {
public:
  struct Family {
    ElementSet members;
    std::optional<ElementId> join;
  };

  ZDisjointFamilies(const ZContext &ctx, const ElementSet &ground,
                    const EnumerationLimits &limits = {});

  const std::vector<Family> &families() const { return families_; }
  const ElementSet &ground() const { return ground_; }
  /// False when the enumeration stopped at the node limit.
  bool exhaustive() const { return exhaustive_; }

  /// Z-completeness of `i`; `i` must lie inside the ground set for
  /// condition (1) to be exhaustive.
  Certificate check(const ElementSet &i) const;

private:
  const ZContext *ctx_;
  ElementSet ground_;
  std::vector<Family> families_;
  bool exhaustive_ = true;
};

/// Conditions (1) joins of Z-disjoint subsets of I stay in I, and (2)
/// Z-disjoint pairs whose join lies in I lie in I.
Certificate is_Z_complete(const ZContext &ctx, const ElementSet &i,
                          const EnumerationLimits &limits = {});

/// For every p in S and y in Z: some z in Z with y ^ z = 0 splits p.
Certificate is_S_central(const Poset &p, const ElementSet &z,
                         const ElementSet &s);
Certificate is_S_central(const ZContext &ctx, const ElementSet &s);

/// Witness for one (p, y) pair of the centrality condition.
std::optional<CentralSplit> central_split(const Poset &p, const ElementSet &z,
                                          ElementId elem, ElementId y);

ElementId central_cover(const ZContext &ctx, ElementId p);

/// 1 in Z and all pairwise meets exist in Z (equivalent to every subset
/// having its meet in Z for finite posets).
Certificate is_lower_complete_sublattice(const Poset &p, const ElementSet &z);
/// Dual: 0 in Z and all pairwise joins exist in Z.
Certificate is_upper_complete_sublattice(const Poset &p, const ElementSet &z);

/// Disjoint y, z in Z, p <= y, q <= z with p v q defined imply
/// q = z ^ (p v q).
Certificate is_P_modular(const Poset &p, const ElementSet &z);
/// The same condition with p, q in Z and joins / meets taken within Z.
Certificate is_Z_modular(const Poset &p, const ElementSet &z);

/// Join within Z of {y in Z : y ^ z = 0}, provided it is itself disjoint
/// from z. Throws ErrorCode::not_in_z when z is outside Z.
MaybeElement pseudocomplement_in_Z(const ZContext &ctx, ElementId z);

/// Every Z-disjoint pair has a join.
Certificate is_Z_directed(const ZContext &ctx);
Certificate is_Z_directed(const Poset &p, const ElementSet &z);

/// Compares is_Z_complete with the characterization by condition (1) plus
/// closure under p ^ z, in the directions licensed by P-modularity (and
/// P-centrality for the converse).
Certificate crosscheck_pwedgez(const ZContext &ctx, const ElementSet &i,
                               const EnumerationLimits &limits = {});

/// Compares is_Z_complete with "S in I iff join(S) in I for every Z-disjoint
/// S of P", valid when P is Z-complete and Z is pseudocomplemented.
Certificate crosscheck_bidirectional(const ZContext &ctx, const ElementSet &i,
                                     const EnumerationLimits &limits = {});

struct CoverMeet {
  ElementId q;
  /// p ^ z when it exists.
  std::optional<ElementId> meet;
  /// c_Z(p ^ z) = c_Z(p) ^ z whenever p ^ z exists.
  bool hull_identity = true;
};

/// Finds q <= p, z with c_Z(q) = c_Z(p) ^ z. Requires Z to be a Z-modular,
/// P-central lower complete sublattice. Throws hypothesis_not_satisfied, or
/// search_exhausted if no q exists (impossible under the hypotheses).
CoverMeet cover_meet_decomposition(const ZContext &ctx, ElementId p,
                                   ElementId z);

} // namespace podec

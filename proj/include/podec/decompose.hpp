#pragma once

#include <optional>

#include "podec/certificate.hpp"
#include "podec/zstruct.hpp"

namespace podec {

/// Shared knobs for theorem-level certifiers.
struct TheoremOptions {
  HypothesisMode mode = HypothesisMode::full;
  /// Z-disjoint families over the whole poset for the same context. When
  /// set, Z-completeness checks reuse it instead of re-enumerating.
  const ZDisjointFamilies *families = nullptr;
  EnumerationLimits limits;
};

/// Z-completeness of `s`, using `opts.families` when available.
Certificate z_completeness(const ZContext &ctx, const ElementSet &s,
                           const TheoremOptions &opts);

/// c_Z I = {c_Z(p) : p in I}.
ElementSet cover_image(const ZContext &ctx, const ElementSet &i);

/// Decomposition by I ^ Z: for Z-complete I and Z with Z Z-central,
/// z = join(I ^ Z) is the unique z in Z with
///   y ^ z = 0  <=>  [0,y] ^ I ^ Z = {0}   for all y in Z.
/// The certificate's element is z.
Certificate decompose_IcapZ(const ZContext &ctx, const ElementSet &i,
                            const TheoremOptions &opts = {});

/// Decomposition by covers: for Z a P-central lower complete sublattice and
/// Z-complete I, z = join_Z(c_Z I) is the unique z in Z with
///   y ^ z = 0  <=>  [0,y] ^ I = {0}   for all y in Z.
Certificate decompose_cZI(const ZContext &ctx, const ElementSet &i,
                          const TheoremOptions &opts = {});

/// Under the additional Z-modularity hypothesis, c_Z I is a complete ideal
/// of Z.
Certificate check_cZI_ideal(const ZContext &ctx, const ElementSet &i,
                            const TheoremOptions &opts = {});

struct ComplementarySplit {
  ElementId complement;
  ElementSet lower;            ///< [0,z] ^ Z
  ElementSet complement_lower; ///< [0,y] ^ Z
  /// Set when z is central in P: the partner giving P = [0,z] x [0,z'].
  std::optional<ElementId> central_partner;
};

/// Complement y of z inside Z (meet 0, join within Z the top), if any.
std::optional<ComplementarySplit> complementary_split(const ZContext &ctx,
                                                      ElementId z);

} // namespace podec

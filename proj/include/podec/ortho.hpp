#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "podec/certificate.hpp"
#include "podec/poset.hpp"

namespace podec {

/// A bounded poset with an orthocomplementation: an order-reversing
/// involution with p ^ perp(p) = 0 and p v perp(p) = 1.
class Orthoposet {
public:
  /// Validates all three laws exhaustively. Throws
  /// ErrorCode::not_orthocomplemented with a witness on failure.
  static Orthoposet validate(Poset base, std::vector<ElementId> perp);

  const Poset &poset() const { return base_; }
  ElementId perp(ElementId p) const { return perp_[p.index]; }
  const std::vector<ElementId> &perp_map() const { return perp_; }
  ElementId top() const { return *base_.top(); }

  bool operator==(const Orthoposet &o) const {
    return base_ == o.base_ && perp_ == o.perp_;
  }

private:
  Orthoposet(Poset base, std::vector<ElementId> perp)
      : base_(std::move(base)), perp_(std::move(perp)) {}

  Poset base_;
  std::vector<ElementId> perp_;
};

/// Builds an orthoposet from label pairs "p:q" (perp(p) = q and perp(q) = p).
Orthoposet
validate_ortho(const Poset &p,
               const std::vector<std::pair<std::string, std::string>> &perp);

/// p <= perp(q)
inline bool orthogonal(const Orthoposet &o, ElementId p, ElementId q) {
  return o.poset().leq(p, o.perp(q));
}

struct OrthocompleteLimits {
  std::size_t max_clique = 64;
  std::size_t max_nodes = std::size_t{1} << 22;
};

/// Checks that every pairwise-orthogonal subset has a join by enumerating
/// the cliques of the orthogonality graph. Beyond the limits the
/// certificate is marked sampled (incomplete check).
Certificate is_orthocomplete(const Orthoposet &o,
                             const OrthocompleteLimits &limits = {});

/// perp applied elementwise.
ElementSet perp_image(const Orthoposet &o, const ElementSet &z);

/// perp(Z) = Z
inline bool is_perp_closed(const Orthoposet &o, const ElementSet &z) {
  return perp_image(o, z) == z;
}

} // namespace podec

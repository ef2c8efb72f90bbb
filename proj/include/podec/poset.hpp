#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "podec/element_set.hpp"

namespace podec {

/// Largest poset accepted by default. PODEC_MAX_N overrides it.
std::size_t default_max_elements();

/// Why a join or meet failed to exist.
enum class Undefined {
  no_upper_bound,
  no_least_upper_bound,
  no_lower_bound,
  no_greatest_lower_bound,
};

const char *to_string(Undefined reason);

/// Result of a partial join or meet. When undefined it carries the reason
/// and, for the "no least/greatest" cases, the minimal upper (maximal lower)
/// bounds that were found.
class MaybeElement {
public:
  static MaybeElement of(ElementId e) { return MaybeElement(e); }
  static MaybeElement undefined(Undefined reason, ElementSet frontier) {
    return MaybeElement(reason, std::move(frontier));
  }

  bool has_value() const { return value_.has_value(); }
  explicit operator bool() const { return has_value(); }
  ElementId value() const;
  ElementId operator*() const { return value(); }
  std::optional<ElementId> as_optional() const { return value_; }

  Undefined reason() const { return reason_; }
  const ElementSet &frontier() const { return frontier_; }

  bool operator==(ElementId e) const { return value_ && *value_ == e; }

private:
  explicit MaybeElement(ElementId e) : value_(e) {}
  MaybeElement(Undefined r, ElementSet f)
      : reason_(r), frontier_(std::move(f)) {}

  std::optional<ElementId> value_;
  Undefined reason_ = Undefined::no_upper_bound;
  ElementSet frontier_;
};

/// Finite poset with a least element. The order is kept as a full
/// reachability matrix (both up- and down-sets) together with tables of
/// binary meets and joins. Instances are immutable and cheap to copy.
class Poset {
public:
  Poset();

  /// Builds the reflexive-transitive closure of `covers`. Throws on cycles,
  /// duplicate or unknown labels, and when `bottom` is not the minimum.
  static Poset
  from_covers(std::vector<std::string> labels, std::string_view bottom,
              const std::vector<std::pair<std::string, std::string>> &covers,
              std::size_t max_n = default_max_elements());

  /// Builds from up-sets: `up[i]` must hold every j with i <= j. Reflexive
  /// and transitive closure is taken; antisymmetry and the least element
  /// are validated.
  static Poset from_up_sets(std::vector<std::string> labels,
                            std::vector<ElementSet> up,
                            std::size_t max_n = default_max_elements());

  std::size_t size() const;
  auto elements() const {
    return std::views::iota(std::size_t{0}, size()) |
           std::views::transform([](std::size_t i) { return ElementId(i); });
  }

  bool leq(ElementId p, ElementId q) const { return up(p).contains(q); }
  bool lt(ElementId p, ElementId q) const { return p != q && leq(p, q); }
  bool comparable(ElementId p, ElementId q) const {
    return leq(p, q) || leq(q, p);
  }

  /// {q : p <= q}
  const ElementSet &up(ElementId p) const;
  /// {q : q <= p}
  const ElementSet &down(ElementId p) const;

  ElementId bottom() const;
  std::optional<ElementId> top() const;

  const std::string &label(ElementId e) const;
  const std::vector<std::string> &labels() const;
  std::optional<ElementId> find(std::string_view label) const;
  /// Like find() but throws ErrorCode::unknown_element.
  ElementId at(std::string_view label) const;

  ElementSet none() const { return ElementSet(size()); }
  ElementSet all() const { return ElementSet::full(size()); }

  /// Binary meet / join, looked up in precomputed tables.
  std::optional<ElementId> meet(ElementId p, ElementId q) const;
  std::optional<ElementId> join(ElementId p, ElementId q) const;

  /// True iff the meet of p and q exists and is the bottom.
  bool disjoint(ElementId p, ElementId q) const {
    auto m = meet(p, q);
    return m && *m == bottom();
  }

  /// Least / greatest element of a subset, if it has one.
  std::optional<ElementId> least_of(const ElementSet &s) const;
  std::optional<ElementId> greatest_of(const ElementSet &s) const;
  ElementSet minimal_of(const ElementSet &s) const;
  ElementSet maximal_of(const ElementSet &s) const;

  /// Length of the longest chain from the bottom to `p`.
  unsigned height(ElementId p) const;

  /// Hasse covers (p, q) with p < q and nothing strictly between,
  /// ordered by (p, q) index.
  std::vector<std::pair<ElementId, ElementId>> covers() const;

  /// Elements of `s` rendered as "{a,b,c}".
  std::string format(const ElementSet &s) const;

  bool operator==(const Poset &o) const;

private:
  struct Data;
  explicit Poset(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Supremum of `s`. The empty join is the bottom.
MaybeElement join_set(const Poset &p, const ElementSet &s);
/// Infimum of `s`. The empty meet is the top when there is one, otherwise
/// Undefined(no_upper_bound) with the maximal elements as frontier.
MaybeElement meet_set(const Poset &p, const ElementSet &s);

/// {p : lo <= p <= hi}, empty when lo is not below hi.
ElementSet interval(const Poset &p, ElementId lo, ElementId hi);

/// Restriction of the order to `z`. Element i of the result is the i-th
/// member of `z` in index order; labels are kept. Joins and meets computed
/// in the result are the suprema and infima within `z`, which can differ
/// from those of the ambient poset. Throws when the bottom is missing.
Poset induced_subposet(const Poset &p, const ElementSet &z);

/// Componentwise order on pairs. Element (i, j) has index i * |q| + j and
/// label "(li,lj)".
Poset product(const Poset &p, const Poset &q,
              std::size_t max_n = default_max_elements());

inline ElementId product_index(const Poset &q, ElementId a, ElementId b) {
  return ElementId(static_cast<std::size_t>(a.index) * q.size() + b.index);
}

/// Partner z' of `z` for which p -> (p^z, p^z') and (a, b) -> a v b are
/// mutually inverse order isomorphisms between P and [0,z] x [0,z'].
std::optional<ElementId> central_partner(const Poset &p, ElementId z);

/// The centre: all elements with a central partner. Throws when the poset
/// has no top.
ElementSet central_elements(const Poset &p);

} // namespace podec

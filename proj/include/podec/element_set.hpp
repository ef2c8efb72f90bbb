#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace podec {

/// Dense index of an element within one poset. Labels live on the poset.
struct ElementId {
  std::uint32_t index = 0;

  constexpr ElementId() = default;
  constexpr explicit ElementId(std::uint32_t i) : index(i) {}
  constexpr explicit ElementId(std::size_t i)
      : index(static_cast<std::uint32_t>(i)) {}

  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

/// Subset of a poset's elements, stored as a bitmask over indices
/// 0..universe-1. Posets up to 128 elements stay allocation free.
class ElementSet {
  using Words = boost::container::small_vector<std::uint64_t, 2>;

public:
  class const_iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ElementId;
    using difference_type = std::ptrdiff_t;
    using pointer = const ElementId *;
    using reference = ElementId;

    const_iterator() = default;
    const_iterator(const ElementSet *set, std::size_t pos)
        : set_(set), pos_(pos) {}

    ElementId operator*() const { return ElementId(pos_); }
    const_iterator &operator++() {
      pos_ = set_->next_from(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator &o) const { return pos_ == o.pos_; }

  private:
    const ElementSet *set_ = nullptr;
    std::size_t pos_ = 0;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<ElementId> members)
      : ElementSet(universe) {
    for (auto m : members)
      insert(m);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (auto &w : s.words_)
      w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  /// Set whose members are the bits of `mask` (universe <= 64).
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask) {
    ElementSet s(universe);
    if (!s.words_.empty())
      s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(ElementId e) const {
    return e.index < universe_ &&
           ((words_[e.index / 64] >> (e.index % 64)) & 1u) != 0;
  }
  void insert(ElementId e) {
    words_[e.index / 64] |= std::uint64_t{1} << (e.index % 64);
  }
  void erase(ElementId e) {
    words_[e.index / 64] &= ~(std::uint64_t{1} << (e.index % 64));
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_)
      n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0)
        return false;
    return true;
  }

  bool is_subset_of(const ElementSet &o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.word(i)) != 0)
        return false;
    return true;
  }
  bool intersects(const ElementSet &o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.word(i)) != 0)
        return true;
    return false;
  }

  ElementSet &operator&=(const ElementSet &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.word(i);
    return *this;
  }
  ElementSet &operator|=(const ElementSet &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.word(i);
    return *this;
  }
  ElementSet &operator-=(const ElementSet &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~o.word(i);
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet &b) {
    return a &= b;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet &b) {
    return a |= b;
  }
  friend ElementSet operator-(ElementSet a, const ElementSet &b) {
    return a -= b;
  }
  friend bool operator==(const ElementSet &a, const ElementSet &b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  const_iterator begin() const { return {this, next_from(0)}; }
  const_iterator end() const { return {this, universe_}; }

  std::optional<ElementId> first() const {
    auto p = next_from(0);
    if (p == universe_)
      return std::nullopt;
    return ElementId(p);
  }

  std::vector<ElementId> to_vector() const { return {begin(), end()}; }

  std::uint64_t word(std::size_t i) const {
    return i < words_.size() ? words_[i] : 0;
  }
  std::size_t word_count() const { return words_.size(); }

private:
  std::size_t next_from(std::size_t pos) const {
    while (pos < universe_) {
      std::size_t w = pos / 64;
      std::uint64_t bits = words_[w] >> (pos % 64);
      if (bits != 0)
        return pos + static_cast<std::size_t>(std::countr_zero(bits));
      pos = (w + 1) * 64;
    }
    return universe_;
  }
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  Words words_;
};

} // namespace podec

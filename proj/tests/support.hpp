#pragma once

#include <string_view>

#include "podec/catalog.hpp"
#include "podec/error.hpp"

namespace podec::test {

inline CatalogEntry fx(std::string_view name) { return *fixture(name); }

inline ElementSet set_of(const Poset &p, std::string_view labels) {
  return parse_set(p, labels);
}

inline ElementId el(const Poset &p, std::string_view label) {
  return p.at(label);
}

inline Poset build(std::vector<std::string> labels,
                   std::vector<std::pair<std::string, std::string>> covers) {
  return Poset::from_covers(labels, labels.front(), covers);
}

// 0 < x, y < u, v < 1: the pair x, y has two minimal upper bounds.
inline Poset bowtie() {
  return build({"0", "x", "y", "u", "v", "1"},
               {{"0", "x"}, {"0", "y"}, {"x", "u"}, {"x", "v"}, {"y", "u"},
                {"y", "v"}, {"u", "1"}, {"v", "1"}});
}

inline ErrorCode error_code_of(auto &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::invalid_argument;
}

} // namespace podec::test

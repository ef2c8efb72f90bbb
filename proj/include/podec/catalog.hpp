#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "podec/ortho.hpp"
#include "podec/poset.hpp"
#include "podec/relations.hpp"

namespace podec {

struct CatalogEntry {
  std::string name;
  /// Generator id ("boolean", "chain", "mo", "product", "random", "file")
  /// and its parameters, enough to regenerate the entry.
  std::string generator = "file";
  std::vector<std::string> parameters;
  Poset poset;
  std::optional<Orthoposet> ortho;
  std::map<std::string, ElementSet> sets;
  std::map<std::string, BinaryRelation> relations;
  /// Expected values keyed by check ("center", ...), in set notation.
  std::map<std::string, std::string> expectations;

  /// Same order, perp, named sets and relations.
  bool same_structure(const CatalogEntry &o) const;
};

/// Powerset of k atoms ordered by inclusion, perp = complement.
CatalogEntry gen_boolean(std::size_t k);
/// 0 < c1 < ... < 1 with k+1 elements; perp only for k <= 1.
CatalogEntry gen_chain(std::size_t k);
/// 0, 1 and k complementary atom pairs a, a', b, b', ...
CatalogEntry gen_MO(std::size_t k);
/// Componentwise order; perp componentwise when both factors have one.
CatalogEntry gen_product(const CatalogEntry &a, const CatalogEntry &b);
/// Forced bottom and top around a random DAG on n - 2 middle elements,
/// each forward edge present with probability `density`.
CatalogEntry gen_random(std::size_t n, double density, std::uint64_t seed);

/// B2, C3, MO2, N5 and B1xMO2 with their named Z and I candidates.
std::vector<CatalogEntry> standard_catalog();
/// Fixture by name, nullopt when unknown.
std::optional<CatalogEntry> fixture(std::string_view name);

/// Line-oriented text format. Errors carry the offending line.
CatalogEntry parse_entry(std::string_view text,
                         std::size_t max_n = default_max_elements());
std::vector<CatalogEntry> parse_entries(std::string_view text,
                                        std::size_t max_n =
                                            default_max_elements());
std::string serialize(const CatalogEntry &e);

/// Resolve labels against the entry's poset ("0 a b" or "{0,a,b}").
ElementSet parse_set(const Poset &p, std::string_view text);
BinaryRelation parse_relation(const Poset &p, std::string_view text);

/// Graphviz Hasse diagram, bottom to top, with `highlight` filled.
std::string to_dot(const CatalogEntry &e, const ElementSet *highlight = nullptr);

} // namespace podec

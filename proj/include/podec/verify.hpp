#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "podec/catalog.hpp"

namespace podec {

struct VerifyOptions {
  std::size_t max_n = default_max_elements();
  std::uint64_t seed = 1;
  /// 0 picks the hardware concurrency.
  std::size_t workers = 1;
  /// Posets up to this size get every Z and every I containing 0.
  std::size_t exhaustive_limit = 8;
  /// Cross-checks and witness comparisons enumerate every I (and S) only
  /// up to this size; larger posets use the sampled candidates.
  std::size_t crosscheck_limit = 8;
  /// Random Z and I candidates drawn per entry above the limits.
  std::size_t samples = 16;
};

struct Tally {
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t sampled = 0;
  /// Cases filtered out because a hypothesis fails.
  std::size_t skipped = 0;

  void add(Status s);
  Tally &operator+=(const Tally &o);
  bool operator==(const Tally &) const = default;
};

struct FailureRecord {
  std::string check;
  std::string z;
  std::string i;
  std::string detail;
  std::string witness;
};

struct EntryReport {
  std::string name;
  std::size_t size = 0;
  bool exhaustive = false;
  std::size_t z_cases = 0;
  std::map<std::string, Tally> checks;
  std::size_t failure_count = 0;
  /// First failures, in sweep order.
  std::vector<FailureRecord> failures;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::size_t max_n = 0;
  std::string input_digest;
  std::vector<EntryReport> entries;

  std::size_t failures() const;
  Tally total(const std::string &check) const;
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const;
};

VerificationReport run_verification(const std::vector<CatalogEntry> &entries,
                                    const VerifyOptions &opts = {});

/// Versioned JSON document. Without a timestamp the field is omitted, which
/// makes reports byte-comparable.
std::string report_json(const VerificationReport &r,
                        const std::optional<std::string> &timestamp);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(std::string_view data);

} // namespace podec

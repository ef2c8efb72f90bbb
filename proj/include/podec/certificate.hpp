#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "podec/element_set.hpp"

namespace podec {

enum class Status { holds, fails, hypothesis_not_satisfied, sampled };

const char *to_string(Status s);

/// One named boolean entry of a certificate. A false entry always carries a
/// witness describing the failing elements.
struct Check {
  std::string name;
  bool ok = true;
  std::string witness;
};

/// Structured evidence returned by every theorem-level operation: the
/// hypothesis report, the conclusion checks, an optional distinguished
/// element (the decomposition element z where there is one) and the
/// elements of the first counterexample found.
class Certificate {
public:
  Certificate() = default;
  explicit Certificate(std::string operation)
      : operation_(std::move(operation)) {}

  const std::string &operation() const { return operation_; }
  Status status() const;
  bool holds() const { return status() == Status::holds; }

  /// Records a hypothesis. Returns `ok` so callers can short-circuit.
  bool require(std::string name, bool ok, std::string witness = {});
  /// Records a conclusion check. Returns `ok`.
  bool conclude(std::string name, bool ok, std::string witness = {});

  /// Marks the check as sampled / incomplete rather than exhaustive.
  void mark_sampled(std::string note);
  bool sampled() const { return sampled_; }
  const std::string &note() const { return note_; }

  const std::vector<Check> &hypotheses() const { return hypotheses_; }
  const std::vector<Check> &conclusions() const { return conclusions_; }
  bool hypotheses_hold() const;

  /// Informational verdicts that do not affect the status.
  void note_fact(std::string name, bool value) {
    facts_.emplace_back(std::move(name), value);
  }
  const std::vector<std::pair<std::string, bool>> &facts() const {
    return facts_;
  }
  std::optional<bool> fact(const std::string &name) const;

  /// First false hypothesis or conclusion, if any.
  const Check *first_failure() const;

  std::optional<ElementId> element;
  std::vector<ElementId> counterexample;

private:
  std::string operation_;
  std::vector<Check> hypotheses_;
  std::vector<Check> conclusions_;
  std::vector<std::pair<std::string, bool>> facts_;
  bool sampled_ = false;
  std::string note_;
};

/// How theorem-level operations evaluate their hypotheses. `full` evaluates
/// every hypothesis so the report is complete; `short_circuit` stops at the
/// first failing one, which is what the verification sweep uses.
enum class HypothesisMode { full, short_circuit };

} // namespace podec

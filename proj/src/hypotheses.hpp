#pragma once

#include <string>
#include <utility>

#include "podec/certificate.hpp"

namespace podec::detail {

// Evaluates hypotheses in order, skipping the rest after the first failure
// in short-circuit mode.
class HypothesisRecorder {
public:
  HypothesisRecorder(Certificate &cert, HypothesisMode mode)
      : cert_(cert), mode_(mode) {}

  template <class Eval> void need(const char *name, Eval eval) {
    if (failed_ && mode_ == HypothesisMode::short_circuit)
      return;
    std::pair<bool, std::string> r = eval();
    if (!cert_.require(name, r.first, std::move(r.second)))
      failed_ = true;
  }
  bool ok() const { return !failed_; }

private:
  Certificate &cert_;
  HypothesisMode mode_;
  bool failed_ = false;
};

inline std::pair<bool, std::string> verdict(const Certificate &c) {
  bool ok = c.status() == Status::holds || c.status() == Status::sampled;
  return {ok, c.first_failure() ? c.first_failure()->witness : ""};
}

inline std::pair<bool, std::string> flag_verdict(bool ok,
                                                 const Certificate &detail) {
  if (ok)
    return {true, ""};
  return verdict(detail);
}

} // namespace podec::detail

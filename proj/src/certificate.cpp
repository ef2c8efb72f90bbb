#include "podec/certificate.hpp"

#include <algorithm>

namespace podec {

const char *to_string(Status s) {
  switch (s) {
  case Status::holds:
    return "holds";
  case Status::fails:
    return "fails";
  case Status::hypothesis_not_satisfied:
    return "hypothesis-not-satisfied";
  case Status::sampled:
    return "sampled";
  }
  return "unknown";
}

namespace {
std::string ensure_witness(std::string w) {
  return w.empty() ? std::string("(no witness)") : w;
}
} // namespace

bool Certificate::require(std::string name, bool ok, std::string witness) {
  witness = ok ? std::string() : ensure_witness(std::move(witness));
  hypotheses_.push_back({std::move(name), ok, std::move(witness)});
  return ok;
}

bool Certificate::conclude(std::string name, bool ok, std::string witness) {
  witness = ok ? std::string() : ensure_witness(std::move(witness));
  conclusions_.push_back({std::move(name), ok, std::move(witness)});
  return ok;
}

void Certificate::mark_sampled(std::string note) {
  sampled_ = true;
  note_ = std::move(note);
}

bool Certificate::hypotheses_hold() const {
  return std::all_of(hypotheses_.begin(), hypotheses_.end(),
                     [](const Check &c) { return c.ok; });
}

Status Certificate::status() const {
  if (!hypotheses_hold())
    return Status::hypothesis_not_satisfied;
  for (const auto &c : conclusions_)
    if (!c.ok)
      return Status::fails;
  return sampled_ ? Status::sampled : Status::holds;
}

std::optional<bool> Certificate::fact(const std::string &name) const {
  for (const auto &[n, v] : facts_)
    if (n == name)
      return v;
  return std::nullopt;
}

const Check *Certificate::first_failure() const {
  for (const auto &c : hypotheses_)
    if (!c.ok)
      return &c;
  for (const auto &c : conclusions_)
    if (!c.ok)
      return &c;
  return nullptr;
}

} // namespace podec

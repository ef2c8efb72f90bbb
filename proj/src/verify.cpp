#include "podec/verify.hpp"

#include <atomic>
#include <random>
#include <set>
#include <thread>

#include "json.hpp"

#include "podec/decompose.hpp"
#include "podec/error.hpp"
#include "podec/homog.hpp"

namespace podec {

void Tally::add(Status s) {
  switch (s) {
  case Status::holds:
    ++holds;
    break;
  case Status::fails:
    ++fails;
    break;
  case Status::sampled:
    ++sampled;
    break;
  case Status::hypothesis_not_satisfied:
    ++skipped;
    break;
  }
}

Tally &Tally::operator+=(const Tally &o) {
  holds += o.holds;
  fails += o.fails;
  sampled += o.sampled;
  skipped += o.skipped;
  return *this;
}

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto &e : entries)
    n += e.failure_count;
  return n;
}

Tally VerificationReport::total(const std::string &check) const {
  Tally t;
  for (const auto &e : entries)
    if (auto it = e.checks.find(check); it != e.checks.end())
      t += it->second;
  return t;
}

int VerificationReport::exit_code() const { return failures() ? 1 : 0; }

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

constexpr std::size_t kMaxRecords = 32;

struct TaskResult {
  std::map<std::string, Tally> checks;
  std::vector<FailureRecord> failures;
  std::size_t failure_count = 0;
};

// Per-entry data shared read-only by all tasks.
struct EntryData {
  const CatalogEntry *entry = nullptr;
  bool exhaustive = false;
  bool exhaustive_cross = false;
  ElementSet centre;
  bool orthocomplete = false;
  std::vector<ElementSet> i_all;     // every I containing 0, or samples
  std::vector<ElementSet> i_samples; // candidates for cross-checks
};

class Recorder {
public:
  Recorder(TaskResult &out, const Poset &p, const ElementSet &z)
      : out_(out), p_(p), z_(p.format(z)) {}

  void skip(const char *check, std::size_t n = 1) {
    out_.checks[check].skipped += n;
  }
  void record(const char *check, const Certificate &c,
              const ElementSet *i = nullptr, std::string detail = "") {
    auto s = c.status();
    out_.checks[check].add(s);
    if (s != Status::fails)
      return;
    auto f = c.first_failure();
    fail(check, i, std::move(detail),
         f ? f->name + ": " + f->witness : "(no witness)");
  }
  void fail(const char *check, const ElementSet *i, std::string detail,
            std::string witness) {
    ++out_.failure_count;
    if (out_.failures.size() < kMaxRecords)
      out_.failures.push_back({check, z_, i ? p_.format(*i) : "",
                               std::move(detail), std::move(witness)});
  }
  void error(const char *check, const ElementSet *i, std::string detail,
             const std::exception &e) {
    out_.checks[check].fails++;
    fail(check, i, std::move(detail), std::string("error: ") + e.what());
  }

private:
  TaskResult &out_;
  const Poset &p_;
  std::string z_;
};

template <class F>
void guarded(Recorder &rec, const char *check, const ElementSet *i,
             const std::string &detail, F f) {
  try {
    f();
  } catch (const std::exception &e) {
    rec.error(check, i, detail, e);
  }
}

bool passes(const Certificate &c) {
  return c.status() == Status::holds || c.status() == Status::sampled;
}

// Subsets S used for the witness comparison.
std::vector<ElementSet> witness_sets(const EntryData &d) {
  const auto n = d.entry->poset.size();
  std::vector<ElementSet> out;
  if (d.exhaustive_cross) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      out.push_back(ElementSet::from_mask(n, m));
    return out;
  }
  return d.i_samples;
}

void run_z(const EntryData &d, const ElementSet &z, TaskResult &out) {
  const auto &e = *d.entry;
  const auto &p = e.poset;
  Recorder rec(out, p, z);
  ZContext ctx(p, z);
  const auto &flags = ctx.flags();
  const bool has_top = p.top().has_value();

  // Witness search: backtracking against the cover fast path.
  if (flags.lower_complete_sublattice) {
    for (const auto &s : witness_sets(d)) {
      auto slow = z_disjoint_witness(ctx, s, WitnessMethod::backtracking);
      auto fast = z_disjoint_witness(ctx, s, WitnessMethod::covers);
      Certificate c("witness_fast_path");
      c.conclude("backtracking and cover verdicts agree",
                 slow.has_value() == fast.has_value(),
                 "S=" + p.format(s));
      rec.record("witness_fast_path", c, &s);
    }
  } else {
    rec.skip("witness_fast_path");
  }

  std::optional<ZDisjointFamilies> families;
  auto fams = [&]() -> const ZDisjointFamilies & {
    if (!families)
      families.emplace(ctx, p.all());
    return *families;
  };
  auto complete = [&](const ElementSet &s) {
    return passes(fams().check(s));
  };
  TheoremOptions topts;
  topts.mode = HypothesisMode::short_circuit;

  const bool icapz = flags.z_central && complete(z);
  const bool czi = flags.lower_complete_sublattice && flags.p_central;
  std::vector<const ElementSet *> complete_is;
  if (icapz || czi) {
    topts.families = &fams();
    for (const auto &i : d.i_all)
      if (complete(i))
        complete_is.push_back(&i);
  }
  auto skipped_is = d.i_all.size() - complete_is.size();

  if (icapz) {
    rec.skip("decompose_IcapZ", skipped_is);
    for (auto i : complete_is)
      guarded(rec, "decompose_IcapZ", i, "", [&] {
        rec.record("decompose_IcapZ", decompose_IcapZ(ctx, *i, topts), i);
      });
  } else {
    rec.skip("decompose_IcapZ");
  }

  if (czi) {
    rec.skip("decompose_cZI", skipped_is);
    for (auto i : complete_is) {
      guarded(rec, "decompose_cZI", i, "", [&] {
        rec.record("decompose_cZI", decompose_cZI(ctx, *i, topts), i);
      });
      if (flags.z_modular)
        guarded(rec, "check_cZI_ideal", i, "", [&] {
          rec.record("check_cZI_ideal", check_cZI_ideal(ctx, *i, topts), i);
        });
      else
        rec.skip("check_cZI_ideal");
    }
  } else {
    rec.skip("decompose_cZI");
    rec.skip("check_cZI_ideal");
  }

  // Characterizations of Z-completeness against the enumeration.
  const auto &cross_is = d.exhaustive_cross ? d.i_all : d.i_samples;
  if (flags.p_modular) {
    for (const auto &i : cross_is)
      guarded(rec, "crosscheck_pwedgez", &i, "", [&] {
        rec.record("crosscheck_pwedgez", crosscheck_pwedgez(ctx, i), &i);
      });
  } else {
    rec.skip("crosscheck_pwedgez");
  }
  if (flags.pseudocomplemented && complete(p.all())) {
    for (const auto &i : cross_is)
      guarded(rec, "crosscheck_bidirectional", &i, "", [&] {
        rec.record("crosscheck_bidirectional",
                   crosscheck_bidirectional(ctx, i), &i);
      });
  } else {
    rec.skip("crosscheck_bidirectional");
  }

  // c_Z(p ^ z) = c_Z(p) ^ z
  if (flags.lower_complete_sublattice && flags.p_central && flags.z_modular) {
    for (auto x : p.elements())
      for (auto w : z) {
        std::string detail = "p=" + p.label(x) + " z=" + p.label(w);
        guarded(rec, "hull_property", nullptr, detail, [&] {
          auto cm = cover_meet_decomposition(ctx, x, w);
          Certificate c("hull_property");
          c.conclude("q <= p, z", p.leq(cm.q, x) && p.leq(cm.q, w),
                     "q=" + p.label(cm.q));
          auto cz = p.meet(ctx.cover(x), w);
          c.conclude("c(q) = c(p) ^ z", cz && ctx.cover(cm.q) == *cz,
                     "q=" + p.label(cm.q));
          if (cm.meet)
            c.conclude("c(p ^ z) = c(p) ^ z", cm.hull_identity,
                       "p^z=" + p.label(*cm.meet));
          rec.record("hull_property", c, nullptr, detail);
        });
      }
  } else {
    rec.skip("hull_property");
  }

  // Relations: <=, <~_Z, ~_Z and any named ones.
  std::vector<std::pair<std::string, BinaryRelation>> rels{
      {"leq", order_relation(p)},
      {"precsim_Z", rel_precsim_Z(p, z)},
      {"sim_Z", rel_sim_Z(p, z)}};
  for (const auto &[name, r] : e.relations)
    rels.emplace_back("rel:" + name, r);

  std::optional<RelationContext> rel_ctx;
  auto relations = [&]() -> const RelationContext & {
    if (!rel_ctx)
      rel_ctx.emplace(p, z);
    return *rel_ctx;
  };
  const bool zero_in_z = z.contains(p.bottom());
  for (const auto &[name, r] : rels) {
    bool only_zero = r.predecessors(p.bottom()) ==
                     ElementSet(p.size(), {p.bottom()});
    if (zero_in_z && only_zero && flags.p_central) {
      guarded(rec, "check_weakest", nullptr, name, [&] {
        rec.record("check_weakest",
                   check_weakest(p, z, r, HypothesisMode::short_circuit,
                                 &relations()),
                   nullptr, name);
      });
    } else {
      rec.skip("check_weakest");
    }
  }

  const bool fincom_z = e.ortho && perp_image(*e.ortho, z) == z &&
                        z.is_subset_of(d.centre) && complete(p.all());
  for (const auto &[name, r] : rels) {
    if (fincom_z && is_reflexive(r)) {
      guarded(rec, "check_fincom", nullptr, name, [&] {
        rec.record("check_fincom",
                   check_fincom(*e.ortho, z, r, HypothesisMode::short_circuit,
                                &relations()),
                   nullptr, name);
      });
    } else {
      rec.skip("check_fincom");
    }
  }

  if (flags.lower_complete_sublattice && flags.z_directed && flags.p_central &&
      flags.p_modular && flags.z_modular) {
    for (auto x : p.elements())
      guarded(rec, "finite_characterization", nullptr, "p=" + p.label(x), [&] {
        rec.record("finite_characterization",
                   finite_characterization(ctx, x,
                                           HypothesisMode::short_circuit),
                   nullptr, "p=" + p.label(x));
      });
  } else {
    rec.skip("finite_characterization");
  }

  // Homogeneous decomposition.
  const bool homog_z = has_top && e.ortho && d.orthocomplete &&
                       perp_image(*e.ortho, z) == z &&
                       z.is_subset_of(d.centre) &&
                       flags.lower_complete_sublattice &&
                       flags.upper_complete_sublattice;
  if (!homog_z) {
    rec.skip("homog_decompose");
    return;
  }
  topts.families = &fams();
  std::vector<ElementSet> homog_is;
  for (const auto &i : d.i_all)
    if (passes(is_order_dense(p, i)) && complete(i))
      homog_is.push_back(i);
  if (!d.exhaustive) {
    auto f = finite_elements(p, rel_precsim_Z(p, z)).finite;
    if (complete(f) && passes(is_order_dense(p, f)))
      homog_is.push_back(f);
  }
  rec.skip("homog_decompose", d.i_all.size() - homog_is.size());
  for (const auto &i : homog_is)
    guarded(rec, "homog_decompose", &i, "", [&] {
      auto res = homog_decompose(*e.ortho, ctx, i, topts);
      rec.record("homog_decompose", res.certificate, &i);
      if (res.decomposition)
        rec.record("check_uniqueness",
                   check_uniqueness(*e.ortho, ctx, i, *res.decomposition), &i);
    });
}

ElementSet random_subset(const Poset &p, std::mt19937_64 &rng) {
  auto s = p.none();
  for (auto x : p.elements())
    if (rng() & 1)
      s.insert(x);
  return s;
}

void push_unique(std::vector<ElementSet> &v, std::set<std::vector<std::uint64_t>> &seen,
                 const ElementSet &s) {
  std::vector<std::uint64_t> key;
  for (std::size_t w = 0; w < s.word_count(); ++w)
    key.push_back(s.word(w));
  if (seen.insert(key).second)
    v.push_back(s);
}

struct Plan {
  EntryData data;
  std::vector<ElementSet> zs;
};

Plan plan_entry(const CatalogEntry &e, std::size_t index,
                const VerifyOptions &opts) {
  const auto &p = e.poset;
  const auto n = p.size();
  Plan plan;
  plan.data.entry = &e;
  plan.data.exhaustive = n <= opts.exhaustive_limit;
  plan.data.exhaustive_cross = n <= opts.crosscheck_limit;
  plan.data.centre = p.none();
  auto &d = plan.data;
  if (p.top())
    d.centre = central_elements(p);
  if (e.ortho)
    d.orthocomplete = passes(is_orthocomplete(*e.ortho));

  std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ull + index);
  const auto zero = p.bottom();

  // Candidate I: principal ideals, atoms with 0, {0}, P, named sets,
  // random subsets containing 0.
  std::set<std::vector<std::uint64_t>> seen_i;
  for (auto x : p.elements())
    push_unique(d.i_samples, seen_i, p.down(x));
  auto atoms = ElementSet(n, {zero});
  for (auto [a, b] : p.covers())
    if (a == zero)
      atoms.insert(b);
  push_unique(d.i_samples, seen_i, atoms);
  push_unique(d.i_samples, seen_i, p.all());
  for (const auto &[name, s] : e.sets)
    push_unique(d.i_samples, seen_i, s);
  for (std::size_t k = 0; k < opts.samples; ++k) {
    auto s = random_subset(p, rng);
    s.insert(zero);
    push_unique(d.i_samples, seen_i, s);
  }

  if (d.exhaustive) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      auto s = ElementSet::from_mask(n, m);
      plan.zs.push_back(s);
      if (s.contains(zero))
        d.i_all.push_back(s);
    }
    return plan;
  }
  d.i_all = d.i_samples;

  std::set<std::vector<std::uint64_t>> seen_z;
  if (p.top()) {
    push_unique(plan.zs, seen_z, d.centre);
    push_unique(plan.zs, seen_z, ElementSet(n, {zero, *p.top()}));
  }
  for (const auto &[name, s] : e.sets)
    push_unique(plan.zs, seen_z, s);
  for (std::size_t k = 0; k < opts.samples; ++k) {
    auto s = random_subset(p, rng);
    if (e.ortho)
      s |= perp_image(*e.ortho, s);
    push_unique(plan.zs, seen_z, s);
  }
  return plan;
}

} // namespace

VerificationReport run_verification(const std::vector<CatalogEntry> &entries,
                                    const VerifyOptions &opts) {
  VerificationReport report;
  report.seed = opts.seed;
  report.max_n = opts.max_n;
  std::string digest_input;
  for (const auto &e : entries)
    digest_input += serialize(e);
  report.input_digest = "fnv1a64:" + fnv1a_hex(digest_input);

  std::vector<Plan> plans;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].poset.size() > opts.max_n)
      throw Error(ErrorCode::guardrail,
                  entries[k].name + " exceeds the element limit");
    plans.push_back(plan_entry(entries[k], k, opts));
  }

  struct Task {
    std::size_t plan;
    std::size_t z;
  };
  std::vector<Task> tasks;
  for (std::size_t k = 0; k < plans.size(); ++k)
    for (std::size_t j = 0; j < plans[k].zs.size(); ++j)
      tasks.push_back({k, j});
  std::vector<TaskResult> results(tasks.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      const auto &plan = plans[tasks[t].plan];
      try {
        run_z(plan.data, plan.zs[tasks[t].z], results[t]);
      } catch (const std::exception &ex) {
        Recorder rec(results[t], plan.data.entry->poset, plan.zs[tasks[t].z]);
        rec.error("sweep", nullptr, "", ex);
      }
    }
  };
  std::size_t workers = opts.workers ? opts.workers
                                     : std::max(1u, std::thread::hardware_concurrency());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(work);
  }

  for (std::size_t k = 0; k < plans.size(); ++k) {
    const auto &e = entries[k];
    EntryReport er;
    er.name = e.name;
    er.size = e.poset.size();
    er.exhaustive = plans[k].data.exhaustive;
    er.z_cases = plans[k].zs.size();
    // expected values stored with the entry
    for (const auto &[key, value] : e.expectations) {
      std::string actual;
      if (key == "center")
        actual = e.poset.format(plans[k].data.centre);
      else
        continue;
      bool ok = actual == value;
      er.checks["expectations"].add(ok ? Status::holds : Status::fails);
      if (!ok) {
        ++er.failure_count;
        er.failures.push_back(
            {"expectations", "", "", key, "expected " + value + ", got " + actual});
      }
    }
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      if (tasks[t].plan != k)
        continue;
      for (const auto &[name, tally] : results[t].checks)
        er.checks[name] += tally;
      er.failure_count += results[t].failure_count;
      for (auto &f : results[t].failures)
        if (er.failures.size() < kMaxRecords)
          er.failures.push_back(std::move(f));
    }
    report.entries.push_back(std::move(er));
  }
  return report;
}

std::string report_json(const VerificationReport &r,
                        const std::optional<std::string> &timestamp) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema"] = "podec-report";
  doc["schema_version"] = 1;
  doc["tool_version"] = PODEC_VERSION;
  doc["seed"] = r.seed;
  doc["max_n"] = r.max_n;
  doc["input_digest"] = r.input_digest;
  if (timestamp)
    doc["timestamp"] = *timestamp;
  auto tally_json = [](const Tally &t) {
    return ordered_json{{"holds", t.holds},
                        {"fails", t.fails},
                        {"sampled", t.sampled},
                        {"skipped", t.skipped}};
  };
  std::map<std::string, Tally> totals;
  ordered_json entries = ordered_json::array();
  for (const auto &e : r.entries) {
    ordered_json checks = ordered_json::object();
    for (const auto &[name, t] : e.checks) {
      checks[name] = tally_json(t);
      totals[name] += t;
    }
    ordered_json failures = ordered_json::array();
    for (const auto &f : e.failures)
      failures.push_back({{"check", f.check},
                          {"z", f.z},
                          {"i", f.i},
                          {"detail", f.detail},
                          {"witness", f.witness}});
    entries.push_back({{"name", e.name},
                       {"size", e.size},
                       {"mode", e.exhaustive ? "exhaustive" : "sampled"},
                       {"z_cases", e.z_cases},
                       {"checks", checks},
                       {"failure_count", e.failure_count},
                       {"failures", failures}});
  }
  doc["entries"] = entries;
  ordered_json tot = ordered_json::object();
  for (const auto &[name, t] : totals)
    tot[name] = tally_json(t);
  doc["totals"] = tot;
  doc["failure_count"] = r.failures();
  doc["exit_code"] = r.exit_code();
  return doc.dump(2) + "\n";
}

} // namespace podec

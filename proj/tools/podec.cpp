// podec: command-line front end for the poset decomposition library.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "podec/catalog.hpp"
#include "podec/decompose.hpp"
#include "podec/error.hpp"
#include "podec/homog.hpp"
#include "podec/verify.hpp"

using namespace podec;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kParse = 3 };

std::vector<CatalogEntry> load(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::invalid_argument, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_entries(buf.str());
}

const CatalogEntry &pick(const std::vector<CatalogEntry> &all,
                         const std::string &name) {
  if (name.empty())
    return all.front();
  for (const auto &e : all)
    if (e.name == name)
      return e;
  throw Error(ErrorCode::invalid_argument, "no poset named " + name);
}

// A named set of the entry, or a literal list of labels.
ElementSet resolve_set(const CatalogEntry &e, const std::string &arg) {
  if (auto it = e.sets.find(arg); it != e.sets.end())
    return it->second;
  if (arg == "center" || arg == "centre")
    return central_elements(e.poset);
  if (arg == "all")
    return e.poset.all();
  return parse_set(e.poset, arg);
}

void print(const Certificate &c, const Poset &p) {
  std::cout << c.operation() << ": " << to_string(c.status()) << "\n";
  auto rows = [](const char *head, const std::vector<Check> &checks) {
    for (const auto &k : checks) {
      std::cout << "  " << head << " [" << (k.ok ? "ok" : "FAIL") << "] "
                << k.name;
      if (!k.ok)
        std::cout << ": " << k.witness;
      std::cout << "\n";
    }
  };
  rows("hypothesis", c.hypotheses());
  rows("conclusion", c.conclusions());
  for (const auto &[name, value] : c.facts())
    std::cout << "  fact " << name << " = " << (value ? "true" : "false")
              << "\n";
  if (c.sampled())
    std::cout << "  sampled: " << c.note() << "\n";
  if (c.element)
    std::cout << "  element " << p.label(*c.element) << "\n";
}

int status_exit(const Certificate &c) {
  return c.status() == Status::fails ? kFailed : kOk;
}

std::string utc_now() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int cmd_check(const std::string &file) {
  for (const auto &e : load(file)) {
    const auto &p = e.poset;
    std::cout << e.name << ": " << p.size() << " elements, "
              << p.covers().size() << " covers, bottom "
              << p.label(p.bottom());
    if (p.top())
      std::cout << ", top " << p.label(*p.top());
    std::cout << "\n";
    if (e.ortho) {
      auto oc = is_orthocomplete(*e.ortho);
      std::cout << "  orthoposet, orthocomplete: " << to_string(oc.status())
                << "\n";
    }
    if (p.top())
      std::cout << "  centre " << p.format(central_elements(p)) << "\n";
    for (const auto &[name, s] : e.sets) {
      ZContext ctx(p, s);
      const auto &f = ctx.flags();
      std::cout << "  set " << name << " " << p.format(s)
                << (f.lower_complete_sublattice ? " lower-complete" : "")
                << (f.upper_complete_sublattice ? " upper-complete" : "")
                << (f.p_central ? " P-central" : "")
                << (f.z_central ? " Z-central" : "")
                << (f.z_modular ? " Z-modular" : "") << "\n";
    }
    for (const auto &[name, r] : e.relations)
      std::cout << "  rel " << name << " " << r.count() << " pairs\n";
  }
  return kOk;
}

int cmd_cover(const CatalogEntry &e, const std::string &z_arg,
              const std::string &p_arg) {
  ZContext ctx(e.poset, resolve_set(e, z_arg));
  auto p = e.poset.at(p_arg);
  std::cout << e.poset.label(ctx.cover(p)) << "\n";
  return kOk;
}

int cmd_decompose(const CatalogEntry &e, const std::string &mode,
                  const std::string &z_arg, const std::string &i_arg) {
  const auto &p = e.poset;
  ZContext ctx(p, resolve_set(e, z_arg));
  auto i = resolve_set(e, i_arg);
  if (mode == "icz") {
    auto c = decompose_IcapZ(ctx, i);
    print(c, p);
    return status_exit(c);
  }
  if (mode == "czi") {
    auto c = decompose_cZI(ctx, i);
    print(c, p);
    int code = status_exit(c);
    if (ctx.flags().z_modular) {
      auto ideal = check_cZI_ideal(ctx, i);
      print(ideal, p);
      code = std::max(code, status_exit(ideal));
    }
    return code;
  }
  if (!e.ortho)
    throw Error(ErrorCode::invalid_argument,
                "homogeneous decomposition needs an ortho directive");
  auto out = homog_decompose(*e.ortho, ctx, i);
  print(out.certificate, p);
  int code = status_exit(out.certificate);
  if (out.decomposition) {
    for (const auto &[k, z] : out.decomposition->parts) {
      const auto &w = out.decomposition->witnesses.at(k);
      std::cout << "  " << k << " -> " << p.label(z) << "  witness {";
      for (std::size_t m = 0; m < w.members.size(); ++m)
        std::cout << (m ? "," : "") << p.label(w.members[m]);
      std::cout << "}\n";
    }
    auto u = check_uniqueness(*e.ortho, ctx, i, *out.decomposition);
    print(u, p);
    code = std::max(code, status_exit(u));
  }
  return code;
}

int cmd_finite(const CatalogEntry &e, const std::string &z_arg,
               const std::string &rel_arg) {
  const auto &p = e.poset;
  auto z = resolve_set(e, z_arg);
  BinaryRelation r;
  if (rel_arg.empty() || rel_arg == "precsim")
    r = rel_precsim_Z(p, z);
  else if (rel_arg == "sim")
    r = rel_sim_Z(p, z);
  else if (rel_arg == "leq")
    r = order_relation(p);
  else if (auto it = e.relations.find(rel_arg); it != e.relations.end())
    r = it->second;
  else
    r = parse_relation(p, rel_arg);
  auto report = finite_elements(p, r);
  std::cout << "F = " << p.format(report.finite) << "\n";
  for (auto x : p.elements())
    if (auto q = report.counterexample[x.index])
      std::cout << "  " << p.label(x) << " not finite: " << p.label(x)
                << " R " << p.label(*q) << " < " << p.label(x) << "\n";
  return kOk;
}

int cmd_verify(const std::vector<CatalogEntry> &entries,
               const VerifyOptions &opts, const std::string &json_out,
               bool timestamp) {
  auto report = run_verification(entries, opts);
  // With the JSON document on stdout the summary goes to stderr.
  std::ostream &os = json_out == "-" ? std::cerr : std::cout;
  char line[160];
  for (const auto &e : report.entries) {
    os << e.name << " (n=" << e.size << ", "
       << (e.exhaustive ? "exhaustive" : "sampled") << ", " << e.z_cases
       << " Z)\n";
    for (const auto &[name, t] : e.checks) {
      std::snprintf(line, sizeof line,
                    "  %-26s holds %-8zu fails %-4zu sampled %-4zu skipped %zu\n",
                    name.c_str(), t.holds, t.fails, t.sampled, t.skipped);
      os << line;
    }
    for (const auto &f : e.failures)
      os << "  FAIL " << f.check << " Z=" << f.z
         << (f.i.empty() ? "" : " I=" + f.i)
         << (f.detail.empty() ? "" : " " + f.detail) << ": " << f.witness
         << "\n";
  }
  os << report.failures() << " failure(s)\n";
  if (!json_out.empty()) {
    auto doc = report_json(report, timestamp ? std::optional(utc_now())
                                             : std::nullopt);
    if (json_out == "-") {
      std::cout << doc;
    } else {
      std::ofstream out(json_out);
      if (!out)
        throw Error(ErrorCode::invalid_argument, "cannot write " + json_out);
      out << doc;
    }
  }
  return report.exit_code();
}

CatalogEntry generate(const std::vector<std::string> &args) {
  if (args.empty())
    throw Error(ErrorCode::invalid_argument, "gen needs a family");
  auto num = [&](std::size_t k) -> std::size_t {
    if (k >= args.size())
      throw Error(ErrorCode::invalid_argument,
                  args[0] + ": missing argument " + std::to_string(k));
    try {
      return std::stoull(args[k]);
    } catch (const std::exception &) {
      throw Error(ErrorCode::invalid_argument,
                  "not a number: " + args[k]);
    }
  };
  const auto &family = args[0];
  if (family == "boolean")
    return gen_boolean(num(1));
  if (family == "chain")
    return gen_chain(num(1));
  if (family == "mo")
    return gen_MO(num(1));
  if (family == "random") {
    double density = args.size() > 2 ? std::stod(args[2]) : 0.3;
    return gen_random(num(1), density, args.size() > 3 ? num(3) : 1);
  }
  if (family == "product") {
    // product FAMILY:K FAMILY:K
    auto factor = [&](std::size_t k) {
      if (k >= args.size())
        throw Error(ErrorCode::invalid_argument, "product needs two factors");
      auto arg = args[k];
      auto colon = arg.find(':');
      std::vector<std::string> sub{arg.substr(0, colon)};
      if (colon != std::string::npos)
        sub.push_back(arg.substr(colon + 1));
      return generate(sub);
    };
    return gen_product(factor(1), factor(2));
  }
  if (auto f = fixture(family))
    return *f;
  throw Error(ErrorCode::invalid_argument, "unknown family " + family);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Type decomposition of finite posets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PODEC_VERSION);

  std::string file, entry, z_arg, i_arg, p_arg, mode = "icz", rel_arg,
                                                json_out;
  auto add_entry = [&](CLI::App *sub) {
    sub->add_option("FILE", file, "poset file")->required();
    sub->add_option("--entry", entry, "poset name within the file");
  };

  auto *check = app.add_subcommand("check", "validate and summarize a file");
  check->add_option("FILE", file)->required();

  auto *cover = app.add_subcommand("cover", "central cover c_Z(p)");
  add_entry(cover);
  cover->add_option("--z", z_arg, "Z: set name or labels")->required();
  cover->add_option("--p", p_arg, "element")->required();

  auto *dec = app.add_subcommand("decompose", "run a decomposition theorem");
  add_entry(dec);
  dec->add_option("--mode", mode)->check(CLI::IsMember({"icz", "czi", "homog"}));
  dec->add_option("--z", z_arg)->required();
  dec->add_option("--i", i_arg)->required();

  auto *fin = app.add_subcommand("finite", "R-finite elements");
  add_entry(fin);
  fin->add_option("--z", z_arg)->required();
  fin->add_option("--rel", rel_arg,
                  "precsim (default), sim, leq, a relation name or pairs");

  VerifyOptions vopts;
  bool catalog = false, no_timestamp = false;
  std::size_t random_count = 0;
  auto *ver = app.add_subcommand("verify", "sweep every certifier");
  ver->add_flag("--catalog", catalog, "built-in catalog");
  ver->add_option("FILE", file);
  ver->add_option("--max-n", vopts.max_n);
  ver->add_option("--seed", vopts.seed);
  ver->add_option("--workers", vopts.workers, "0 = all cores");
  ver->add_option("--exhaustive-limit", vopts.exhaustive_limit)
      ->capture_default_str();
  ver->add_option("--crosscheck-limit", vopts.crosscheck_limit)
      ->capture_default_str();
  ver->add_option("--samples", vopts.samples)->capture_default_str();
  ver->add_option("--random", random_count,
                  "add this many random posets (n <= 8)");
  ver->add_option("--json", json_out, "write the report ('-' for stdout)");
  ver->add_flag("--no-timestamp", no_timestamp);

  std::vector<std::string> gen_args;
  auto *gen = app.add_subcommand(
      "gen", "generate: boolean K | chain K | mo K | random N [DENSITY SEED] "
             "| product F:K F:K | fixture name");
  gen->add_option("ARGS", gen_args)->required();

  auto *dot = app.add_subcommand("dot", "Graphviz Hasse diagram");
  add_entry(dot);
  dot->add_option("--z", z_arg, "highlighted set");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check)
      return cmd_check(file);
    if (*gen) {
      std::cout << serialize(generate(gen_args));
      return kOk;
    }
    if (*ver) {
      std::vector<CatalogEntry> entries;
      if (catalog || file.empty())
        entries = standard_catalog();
      if (!file.empty()) {
        auto more = load(file);
        entries.insert(entries.end(), more.begin(), more.end());
      }
      for (std::size_t k = 0; k < random_count; ++k)
        entries.push_back(gen_random(2 + k % 7, 0.35, vopts.seed + k));
      return cmd_verify(entries, vopts, json_out, !no_timestamp);
    }
    auto all = load(file);
    const auto &e = pick(all, entry);
    if (*cover)
      return cmd_cover(e, z_arg, p_arg);
    if (*dec)
      return cmd_decompose(e, mode, z_arg, i_arg);
    if (*fin)
      return cmd_finite(e, z_arg, rel_arg);
    if (*dot) {
      std::optional<ElementSet> z;
      if (!z_arg.empty())
        z = resolve_set(e, z_arg);
      std::cout << to_dot(e, z ? &*z : nullptr);
      return kOk;
    }
  } catch (const Error &err) {
    std::cerr << "podec: " << to_string(err.code()) << ": " << err.what()
              << "\n";
    return err.code() == ErrorCode::parse_error ? kParse : kInvalid;
  }
  return kOk;
}

#include "podec/ortho.hpp"

#include "podec/error.hpp"

namespace podec {

Orthoposet Orthoposet::validate(Poset base, std::vector<ElementId> perp) {
  const auto &p = base;
  if (perp.size() != p.size())
    throw Error(ErrorCode::not_orthocomplemented,
                "orthocomplement must be defined on every element");
  if (!p.top())
    throw Error(ErrorCode::not_orthocomplemented,
                "orthoposet requires a top element");
  auto name = [&](ElementId e) { return p.label(e); };
  for (auto x : p.elements()) {
    auto px = perp[x.index];
    if (perp[px.index] != x)
      throw Error(ErrorCode::not_orthocomplemented,
                  "involution fails at " + name(x) + ": perp(perp(" +
                      name(x) + ")) = " + name(perp[px.index]));
  }
  for (auto x : p.elements())
    for (auto y : p.up(x))
      if (!p.leq(perp[y.index], perp[x.index]))
        throw Error(ErrorCode::not_orthocomplemented,
                    "not antitone: " + name(x) + " <= " + name(y) +
                        " but perp(" + name(y) + ") is not below perp(" +
                        name(x) + ")");
  for (auto x : p.elements()) {
    auto px = perp[x.index];
    if (!p.disjoint(x, px))
      throw Error(ErrorCode::not_orthocomplemented,
                  "complement law fails: " + name(x) + " ^ " + name(px) +
                      " is not 0");
    auto j = p.join(x, px);
    if (!j || *j != *p.top())
      throw Error(ErrorCode::not_orthocomplemented,
                  "complement law fails: " + name(x) + " v " + name(px) +
                      " is not 1");
  }
  return Orthoposet(std::move(base), std::move(perp));
}

Orthoposet
validate_ortho(const Poset &p,
               const std::vector<std::pair<std::string, std::string>> &perp) {
  std::vector<std::optional<ElementId>> map(p.size());
  auto assign = [&](ElementId a, ElementId b) {
    if (map[a.index] && *map[a.index] != b)
      throw Error(ErrorCode::not_orthocomplemented,
                  "involution fails at " + p.label(a) +
                      ": two complements given");
    map[a.index] = b;
  };
  for (const auto &[a, b] : perp) {
    auto x = p.at(a), y = p.at(b);
    assign(x, y);
    assign(y, x);
  }
  std::vector<ElementId> out;
  out.reserve(p.size());
  for (auto x : p.elements()) {
    if (!map[x.index])
      throw Error(ErrorCode::not_orthocomplemented,
                  "no orthocomplement given for " + p.label(x));
    out.push_back(*map[x.index]);
  }
  return Orthoposet::validate(p, std::move(out));
}

ElementSet perp_image(const Orthoposet &o, const ElementSet &z) {
  ElementSet out(z.universe());
  for (auto e : z)
    out.insert(o.perp(e));
  return out;
}

namespace {

struct CliqueSearch {
  const Orthoposet &o;
  const OrthocompleteLimits &limits;
  Certificate &cert;
  std::vector<ElementId> clique;
  std::size_t nodes = 0;
  bool truncated = false;
  bool failed = false;

  void run(const ElementSet &candidates, const ElementSet &upper) {
    const auto &p = o.poset();
    for (auto c : candidates) {
      if (failed)
        return;
      if (++nodes > limits.max_nodes || clique.size() >= limits.max_clique) {
        truncated = true;
        return;
      }
      clique.push_back(c);
      auto u = upper & p.up(c);
      if (!p.least_of(u)) {
        failed = true;
        ElementSet s(p.size());
        for (auto e : clique)
          s.insert(e);
        auto j = join_set(p, s);
        cert.counterexample = clique;
        cert.conclude("pairwise-orthogonal sets have joins", false,
                      "S=" + p.format(s) + " " + to_string(j.reason()) +
                          " frontier " + p.format(j.frontier()));
        return;
      }
      // later candidates orthogonal to c
      ElementSet next(p.size());
      for (auto d : candidates)
        if (d > c && orthogonal(o, c, d))
          next.insert(d);
      run(next, u);
      clique.pop_back();
    }
  }
};

} // namespace

Certificate is_orthocomplete(const Orthoposet &o,
                             const OrthocompleteLimits &limits) {
  Certificate cert("is_orthocomplete");
  const auto &p = o.poset();
  auto nonzero = p.all();
  nonzero.erase(p.bottom());
  CliqueSearch search{o, limits, cert, {}, 0, false, false};
  search.run(nonzero, p.all());
  if (!search.failed) {
    cert.conclude("pairwise-orthogonal sets have joins", true);
    if (search.truncated)
      cert.mark_sampled("clique enumeration stopped at the configured limit");
  }
  return cert;
}

} // namespace podec

#include "podec/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "podec/error.hpp"

namespace podec {

namespace {
constexpr std::int32_t kNone = -1;
}

const char *to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::invalid_argument:
    return "invalid-argument";
  case ErrorCode::duplicate_label:
    return "duplicate-label";
  case ErrorCode::unknown_element:
    return "unknown-element";
  case ErrorCode::cycle:
    return "cycle";
  case ErrorCode::bottom_not_minimum:
    return "bottom-not-minimum";
  case ErrorCode::guardrail:
    return "guardrail";
  case ErrorCode::not_orthocomplemented:
    return "not-orthocomplemented";
  case ErrorCode::not_lower_complete_sublattice:
    return "not-lower-complete-sublattice";
  case ErrorCode::not_in_z:
    return "not-in-z";
  case ErrorCode::hypothesis_not_satisfied:
    return "hypothesis-not-satisfied";
  case ErrorCode::search_exhausted:
    return "search-exhausted";
  case ErrorCode::parse_error:
    return "parse-error";
  }
  return "unknown";
}

const char *to_string(Undefined reason) {
  switch (reason) {
  case Undefined::no_upper_bound:
    return "no-upper-bound";
  case Undefined::no_least_upper_bound:
    return "no-least-upper-bound";
  case Undefined::no_lower_bound:
    return "no-lower-bound";
  case Undefined::no_greatest_lower_bound:
    return "no-greatest-lower-bound";
  }
  return "unknown";
}

std::size_t default_max_elements() {
  if (const char *env = std::getenv("PODEC_MAX_N")) {
    char *end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return 64;
}

ElementId MaybeElement::value() const {
  if (!value_)
    throw Error(ErrorCode::invalid_argument,
                std::string("element undefined: ") + to_string(reason_));
  return *value_;
}

struct Poset::Data {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<ElementSet> up;
  std::vector<ElementSet> down;
  std::vector<unsigned> height;
  std::vector<std::int32_t> meet;
  std::vector<std::int32_t> join;
  ElementId bottom;
  std::optional<ElementId> top;
};

Poset::Poset() : Poset(from_up_sets({"0"}, {ElementSet(1)})) {}

std::size_t Poset::size() const { return d_->labels.size(); }
const ElementSet &Poset::up(ElementId p) const { return d_->up[p.index]; }
const ElementSet &Poset::down(ElementId p) const { return d_->down[p.index]; }
ElementId Poset::bottom() const { return d_->bottom; }
std::optional<ElementId> Poset::top() const { return d_->top; }
const std::string &Poset::label(ElementId e) const {
  return d_->labels[e.index];
}
const std::vector<std::string> &Poset::labels() const { return d_->labels; }
unsigned Poset::height(ElementId p) const { return d_->height[p.index]; }

std::optional<ElementId> Poset::find(std::string_view label) const {
  auto it = d_->index.find(std::string(label));
  if (it == d_->index.end())
    return std::nullopt;
  return ElementId(it->second);
}

ElementId Poset::at(std::string_view label) const {
  if (auto e = find(label))
    return *e;
  throw Error(ErrorCode::unknown_element,
              "unknown element '" + std::string(label) + "'");
}

std::optional<ElementId> Poset::meet(ElementId p, ElementId q) const {
  auto v = d_->meet[p.index * size() + q.index];
  if (v == kNone)
    return std::nullopt;
  return ElementId(static_cast<std::uint32_t>(v));
}

std::optional<ElementId> Poset::join(ElementId p, ElementId q) const {
  auto v = d_->join[p.index * size() + q.index];
  if (v == kNone)
    return std::nullopt;
  return ElementId(static_cast<std::uint32_t>(v));
}

std::optional<ElementId> Poset::least_of(const ElementSet &s) const {
  for (auto u : s)
    if (s.is_subset_of(up(u)))
      return u;
  return std::nullopt;
}

std::optional<ElementId> Poset::greatest_of(const ElementSet &s) const {
  for (auto u : s)
    if (s.is_subset_of(down(u)))
      return u;
  return std::nullopt;
}

ElementSet Poset::minimal_of(const ElementSet &s) const {
  ElementSet out(size());
  for (auto u : s) {
    auto below = down(u) & s;
    if (below.size() == 1)
      out.insert(u);
  }
  return out;
}

ElementSet Poset::maximal_of(const ElementSet &s) const {
  ElementSet out(size());
  for (auto u : s) {
    auto above = up(u) & s;
    if (above.size() == 1)
      out.insert(u);
  }
  return out;
}

std::vector<std::pair<ElementId, ElementId>> Poset::covers() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (auto p : elements()) {
    for (auto q : up(p)) {
      if (q == p)
        continue;
      // q covers p iff the open interval (p, q) is empty
      auto between = up(p) & down(q);
      if (between.size() == 2)
        out.emplace_back(p, q);
    }
  }
  return out;
}

std::string Poset::format(const ElementSet &s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto e : s) {
    if (!first)
      os << ',';
    first = false;
    os << label(e);
  }
  os << '}';
  return os.str();
}

bool Poset::operator==(const Poset &o) const {
  return d_ == o.d_ || (d_->labels == o.d_->labels && d_->up == o.d_->up &&
                        d_->bottom == o.d_->bottom);
}

Poset Poset::from_up_sets(std::vector<std::string> labels,
                          std::vector<ElementSet> up, std::size_t max_n) {
  const std::size_t n = labels.size();
  if (n == 0)
    throw Error(ErrorCode::invalid_argument, "poset must be non-empty");
  if (n > max_n)
    throw Error(ErrorCode::guardrail,
                "poset has " + std::to_string(n) +
                    " elements, above the limit of " + std::to_string(max_n));
  if (up.size() != n)
    throw Error(ErrorCode::invalid_argument, "order matrix size mismatch");

  auto d = std::make_shared<Data>();
  for (std::size_t i = 0; i < n; ++i) {
    if (!d->index.emplace(labels[i], static_cast<std::uint32_t>(i)).second)
      throw Error(ErrorCode::duplicate_label,
                  "duplicate label '" + labels[i] + "'");
    if (up[i].universe() != n)
      throw Error(ErrorCode::invalid_argument, "order matrix size mismatch");
    up[i].insert(ElementId(i));
  }
  // Warshall closure on bit rows
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].contains(ElementId(k)))
        up[i] |= up[k];

  std::vector<ElementSet> down(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : up[i]) {
      if (j.index != i && up[j.index].contains(ElementId(i)))
        throw Error(ErrorCode::cycle, "order cycle through '" + labels[i] +
                                          "' and '" + labels[j.index] + "'");
      down[j.index].insert(ElementId(i));
    }

  std::optional<ElementId> bottom, top;
  for (std::size_t i = 0; i < n; ++i) {
    if (up[i].size() == n)
      bottom = ElementId(i);
    if (down[i].size() == n)
      top = ElementId(i);
  }
  if (!bottom)
    throw Error(ErrorCode::bottom_not_minimum, "poset has no least element");

  // heights by increasing down-set size gives a linear extension
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return down[a].size() < down[b].size();
  });
  std::vector<unsigned> height(n, 0);
  for (auto i : order)
    for (auto j : down[i])
      if (j.index != i)
        height[i] = std::max(height[i], height[j.index] + 1);

  d->labels = std::move(labels);
  d->up = std::move(up);
  d->down = std::move(down);
  d->height = std::move(height);
  d->bottom = *bottom;
  d->top = top;
  d->meet.assign(n * n, kNone);
  d->join.assign(n * n, kNone);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto upper = d->up[i] & d->up[j];
      for (auto u : upper)
        if (upper.is_subset_of(d->up[u.index])) {
          d->join[i * n + j] = d->join[j * n + i] =
              static_cast<std::int32_t>(u.index);
          break;
        }
      auto lower = d->down[i] & d->down[j];
      for (auto l : lower)
        if (lower.is_subset_of(d->down[l.index])) {
          d->meet[i * n + j] = d->meet[j * n + i] =
              static_cast<std::int32_t>(l.index);
          break;
        }
    }
  return Poset(std::move(d));
}

Poset Poset::from_covers(
    std::vector<std::string> labels, std::string_view bottom,
    const std::vector<std::pair<std::string, std::string>> &covers,
    std::size_t max_n) {
  const std::size_t n = labels.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(labels[i], i).second)
      throw Error(ErrorCode::duplicate_label,
                  "duplicate label '" + labels[i] + "'");
  auto lookup = [&](const std::string &l) {
    auto it = index.find(l);
    if (it == index.end())
      throw Error(ErrorCode::unknown_element, "unknown element '" + l + "'");
    return it->second;
  };
  const std::size_t b = lookup(std::string(bottom));

  std::vector<ElementSet> up(n, ElementSet(n));
  for (const auto &[lo, hi] : covers) {
    auto i = lookup(lo), j = lookup(hi);
    if (i == j)
      throw Error(ErrorCode::cycle, "cover '" + lo + "<" + hi + "' is a loop");
    up[i].insert(ElementId(j));
  }
  auto p = from_up_sets(std::move(labels), std::move(up), max_n);
  if (p.bottom() != ElementId(b))
    throw Error(ErrorCode::bottom_not_minimum,
                "declared bottom '" + std::string(bottom) +
                    "' is not below every element");
  return p;
}

MaybeElement join_set(const Poset &p, const ElementSet &s) {
  ElementSet upper = p.all();
  for (auto e : s)
    upper &= p.up(e);
  if (upper.empty())
    return MaybeElement::undefined(Undefined::no_upper_bound, p.none());
  if (auto l = p.least_of(upper))
    return MaybeElement::of(*l);
  return MaybeElement::undefined(Undefined::no_least_upper_bound,
                                 p.minimal_of(upper));
}

MaybeElement meet_set(const Poset &p, const ElementSet &s) {
  if (s.empty()) {
    if (auto t = p.top())
      return MaybeElement::of(*t);
    return MaybeElement::undefined(Undefined::no_upper_bound,
                                   p.maximal_of(p.all()));
  }
  ElementSet lower = p.all();
  for (auto e : s)
    lower &= p.down(e);
  // the bottom is always a lower bound of a non-empty set
  if (auto g = p.greatest_of(lower))
    return MaybeElement::of(*g);
  return MaybeElement::undefined(Undefined::no_greatest_lower_bound,
                                 p.maximal_of(lower));
}

ElementSet interval(const Poset &p, ElementId lo, ElementId hi) {
  return p.up(lo) & p.down(hi);
}

Poset induced_subposet(const Poset &p, const ElementSet &z) {
  if (!z.contains(p.bottom()))
    throw Error(ErrorCode::bottom_not_minimum,
                "induced subposet requires the bottom '" +
                    p.label(p.bottom()) + "'");
  auto members = z.to_vector();
  const std::size_t m = members.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (auto e : members)
    labels.push_back(p.label(e));
  std::vector<ElementSet> up(m, ElementSet(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (p.leq(members[i], members[j]))
        up[i].insert(ElementId(j));
  return Poset::from_up_sets(std::move(labels), std::move(up),
                             std::max(m, std::size_t{1}));
}

Poset product(const Poset &p, const Poset &q, std::size_t max_n) {
  const std::size_t n = p.size(), m = q.size();
  if (n * m > max_n)
    throw Error(ErrorCode::guardrail,
                "product has " + std::to_string(n * m) +
                    " elements, above the limit of " + std::to_string(max_n));
  std::vector<std::string> labels;
  labels.reserve(n * m);
  for (auto a : p.elements())
    for (auto b : q.elements())
      labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
  std::vector<ElementSet> up(n * m, ElementSet(n * m));
  for (auto a : p.elements())
    for (auto b : q.elements()) {
      auto &row = up[product_index(q, a, b).index];
      for (auto c : p.up(a))
        for (auto d : q.up(b))
          row.insert(product_index(q, c, d));
    }
  return Poset::from_up_sets(std::move(labels), std::move(up), max_n);
}

namespace {

bool is_central_pair(const Poset &p, ElementId z, ElementId w) {
  const auto &lower_z = p.down(z);
  const auto &lower_w = p.down(w);
  if (lower_z.size() * lower_w.size() != p.size())
    return false;
  // psi(x) = (x ^ z, x ^ w), phi(a, b) = a v b
  std::vector<std::pair<ElementId, ElementId>> psi;
  psi.reserve(p.size());
  for (auto x : p.elements()) {
    auto a = p.meet(x, z), b = p.meet(x, w);
    if (!a || !b)
      return false;
    auto back = p.join(*a, *b);
    if (!back || *back != x)
      return false;
    psi.emplace_back(*a, *b);
  }
  for (auto a : lower_z)
    for (auto b : lower_w) {
      auto x = p.join(a, b);
      if (!x || psi[x->index] != std::pair{a, b})
        return false;
    }
  for (auto x : p.elements())
    for (auto y : p.up(x))
      if (!p.leq(psi[x.index].first, psi[y.index].first) ||
          !p.leq(psi[x.index].second, psi[y.index].second))
        return false;
  for (auto a : lower_z)
    for (auto b : lower_w)
      for (auto c : p.up(a) & lower_z)
        for (auto d : p.up(b) & lower_w)
          if (!p.leq(*p.join(a, b), *p.join(c, d)))
            return false;
  return true;
}

void require_top(const Poset &p) {
  if (!p.top())
    throw Error(ErrorCode::invalid_argument,
                "central elements require a top element");
}

} // namespace

std::optional<ElementId> central_partner(const Poset &p, ElementId z) {
  require_top(p);
  for (auto w : p.elements())
    if (is_central_pair(p, z, w))
      return w;
  return std::nullopt;
}

ElementSet central_elements(const Poset &p) {
  require_top(p);
  ElementSet out(p.size());
  for (auto z : p.elements())
    if (central_partner(p, z))
      out.insert(z);
  return out;
}

} // namespace podec

#include "podec/catalog.hpp"

#include <random>
#include <sstream>
#include <type_traits>
#include <unordered_map>

#include "podec/error.hpp"

namespace podec {

bool CatalogEntry::same_structure(const CatalogEntry &o) const {
  return poset == o.poset && ortho == o.ortho && sets == o.sets &&
         relations == o.relations;
}

namespace {

CatalogEntry make_entry(std::string name, std::string generator,
                        std::vector<std::string> params, Poset p,
                        std::optional<Orthoposet> o) {
  CatalogEntry e;
  e.name = std::move(name);
  e.generator = std::move(generator);
  e.parameters = std::move(params);
  e.poset = std::move(p);
  e.ortho = std::move(o);
  return e;
}

Orthoposet ortho_from_indices(const Poset &p, std::vector<std::size_t> perp) {
  std::vector<ElementId> ids;
  for (auto i : perp)
    ids.emplace_back(i);
  return Orthoposet::validate(p, std::move(ids));
}

void expect_center(CatalogEntry &e) {
  e.expectations["center"] = e.poset.format(central_elements(e.poset));
}

} // namespace

CatalogEntry gen_boolean(std::size_t k) {
  if (k > 26 || (std::size_t{1} << k) > default_max_elements())
    throw Error(ErrorCode::guardrail,
                "B" + std::to_string(k) + " exceeds the element limit");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  for (std::size_t m = 0; m < n; ++m) {
    std::string l;
    for (std::size_t b = 0; b < k; ++b)
      if (m >> b & 1)
        l += static_cast<char>('a' + b);
    labels.push_back(m == 0 ? "0" : m == n - 1 ? "1" : l);
  }
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::size_t> perp;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t b = 0; b < k; ++b)
      if (!(m >> b & 1))
        covers.emplace_back(labels[m], labels[m | std::size_t{1} << b]);
    perp.push_back(~m & (n - 1));
  }
  auto p = Poset::from_covers(labels, "0", covers);
  auto e = make_entry("B" + std::to_string(k), "boolean", {std::to_string(k)},
                      p, ortho_from_indices(p, perp));
  expect_center(e);
  return e;
}

CatalogEntry gen_chain(std::size_t k) {
  if (k + 1 > default_max_elements())
    throw Error(ErrorCode::guardrail, "chain exceeds the element limit");
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i < k; ++i)
    labels.push_back("c" + std::to_string(i));
  if (k > 0)
    labels.push_back("1");
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < k; ++i)
    covers.emplace_back(labels[i], labels[i + 1]);
  auto p = Poset::from_covers(labels, "0", covers);
  std::optional<Orthoposet> o;
  if (k <= 1)
    o = ortho_from_indices(p, k == 0 ? std::vector<std::size_t>{0}
                                     : std::vector<std::size_t>{1, 0});
  auto e = make_entry("C" + std::to_string(k + 1), "chain",
                      {std::to_string(k)}, p, o);
  expect_center(e);
  return e;
}

CatalogEntry gen_MO(std::size_t k) {
  if (k > 26 || 2 * k + 2 > default_max_elements())
    throw Error(ErrorCode::guardrail, "MO" + std::to_string(k) +
                                          " exceeds the element limit");
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 0; i < k; ++i) {
    std::string a(1, static_cast<char>('a' + i));
    labels.push_back(a);
    labels.push_back(a + "'");
  }
  labels.push_back("1");
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::size_t> perp{labels.size() - 1};
  for (std::size_t i = 1; i + 1 < labels.size(); ++i) {
    covers.emplace_back("0", labels[i]);
    covers.emplace_back(labels[i], "1");
    perp.push_back(i % 2 ? i + 1 : i - 1);
  }
  if (k == 0)
    covers.emplace_back("0", "1");
  perp.push_back(0);
  auto p = Poset::from_covers(labels, "0", covers);
  auto e = make_entry("MO" + std::to_string(k), "mo", {std::to_string(k)}, p,
                      ortho_from_indices(p, perp));
  expect_center(e);
  return e;
}

CatalogEntry gen_product(const CatalogEntry &a, const CatalogEntry &b) {
  const auto &p = a.poset, &q = b.poset;
  auto prod = product(p, q);
  std::optional<Orthoposet> o;
  if (a.ortho && b.ortho) {
    std::vector<std::size_t> perp;
    for (auto x : p.elements())
      for (auto y : q.elements())
        perp.push_back(product_index(q, a.ortho->perp(x), b.ortho->perp(y)).index);
    o = ortho_from_indices(prod, perp);
  }
  auto e = make_entry(a.name + "x" + b.name, "product", {a.name, b.name},
                      prod, o);
  expect_center(e);
  return e;
}

CatalogEntry gen_random(std::size_t n, double density, std::uint64_t seed) {
  if (n == 0 || n > default_max_elements())
    throw Error(ErrorCode::guardrail,
                "random poset size must lie in 1.." +
                    std::to_string(default_max_elements()));
  if (!(density >= 0.0 && density <= 1.0))
    throw Error(ErrorCode::invalid_argument, "density must lie in [0,1]");
  std::mt19937_64 rng(seed);
  auto coin = [&] {
    // 53 random bits, identical on every platform
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < density;
  };
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i)
    labels.push_back("e" + std::to_string(i));
  if (n > 1)
    labels.push_back("1");
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    covers.emplace_back("0", labels[i]);
    covers.emplace_back(labels[i], "1");
    for (std::size_t j = i + 1; j + 1 < n; ++j)
      if (coin())
        covers.emplace_back(labels[i], labels[j]);
  }
  if (n == 2)
    covers.emplace_back("0", "1");
  std::ostringstream d;
  d << density;
  auto e = make_entry("R" + std::to_string(n) + "-" + std::to_string(seed),
                      "random",
                      {std::to_string(n), d.str(), std::to_string(seed)},
                      Poset::from_covers(labels, "0", covers), std::nullopt);
  return e;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Split at `sep` outside parentheses.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(')
      ++depth;
    else if (s[i] == ')')
      --depth;
    else if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::optional<std::pair<std::string_view, std::string_view>>
split_pair(std::string_view tok) {
  if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
    return std::nullopt;
  auto parts = split_top(tok.substr(1, tok.size() - 2), ',');
  if (parts.size() != 2 || parts[0].empty() || parts[1].empty())
    return std::nullopt;
  return std::pair{parts[0], parts[1]};
}

struct Pending {
  std::size_t line;
  std::vector<std::string_view> tokens;
};

class EntryParser {
public:
  explicit EntryParser(std::size_t max_n) : max_n_(max_n) {}

  void line(std::size_t no, std::string_view raw) {
    auto text = trim(raw.substr(0, raw.find('#')));
    if (text.empty())
      return;
    auto toks = split_ws(text);
    auto kw = toks[0];
    std::vector<std::string_view> args(toks.begin() + 1, toks.end());
    if (kw == "poset") {
      if (args.size() != 1)
        fail(no, "poset takes exactly one name");
      if (!name_.empty())
        fail(no, "second poset directive in one entry");
      name_ = std::string(args[0]);
    } else if (kw == "elements") {
      for (auto a : args) {
        if (index_.contains(std::string(a)))
          throw Error(ErrorCode::duplicate_label,
                      "line " + std::to_string(no) + ": duplicate element " +
                          std::string(a),
                      no);
        index_.emplace(std::string(a), labels_.size());
        labels_.emplace_back(a);
      }
    } else if (kw == "bottom") {
      if (args.size() != 1)
        fail(no, "bottom takes exactly one element");
      resolve(no, args[0]);
      bottom_ = std::string(args[0]);
      bottom_line_ = no;
    } else if (kw == "covers") {
      if (!covers_line_)
        covers_line_ = no;
      for (auto a : args) {
        auto chain = split_top(a, '<');
        if (chain.size() < 2)
          fail(no, "expected a<b, got '" + std::string(a) + "'");
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
          resolve(no, chain[k]);
          resolve(no, chain[k + 1]);
          covers_.emplace_back(chain[k], chain[k + 1]);
        }
      }
    } else if (kw == "ortho") {
      if (!ortho_line_)
        ortho_line_ = no;
      for (auto a : args) {
        auto pq = split_top(a, ':');
        if (pq.size() != 2)
          fail(no, "expected p:q, got '" + std::string(a) + "'");
        resolve(no, pq[0]);
        resolve(no, pq[1]);
        perp_.emplace_back(pq[0], pq[1]);
      }
    } else if (kw == "set" || kw == "rel") {
      if (args.empty())
        fail(no, std::string(kw) + " needs a name");
      auto &target = kw == "set" ? sets_ : rels_;
      if (target.contains(std::string(args[0])))
        fail(no, "duplicate " + std::string(kw) + " " + std::string(args[0]));
      target.emplace(std::string(args[0]),
                     Pending{no, {args.begin() + 1, args.end()}});
      for (auto a : target.at(std::string(args[0])).tokens) {
        if (kw == "set") {
          resolve(no, a);
          continue;
        }
        auto pq = split_pair(a);
        if (!pq)
          fail(no, "expected (p,q), got '" + std::string(a) + "'");
        resolve(no, pq->first);
        resolve(no, pq->second);
      }
    } else {
      fail(no, "unknown directive '" + std::string(kw) + "'");
    }
  }

  CatalogEntry finish(std::size_t last_line) {
    if (name_.empty())
      fail(last_line, "missing poset directive");
    if (labels_.empty())
      fail(last_line, "missing elements directive");
    if (bottom_.empty())
      fail(last_line, "missing bottom directive");
    CatalogEntry e;
    e.name = name_;
    e.poset = rethrow_at(covers_line_ ? covers_line_ : bottom_line_, [&] {
      return Poset::from_covers(labels_, bottom_, covers_, max_n_);
    });
    if (!perp_.empty())
      e.ortho = rethrow_at(ortho_line_, [&] {
        return validate_ortho(e.poset, perp_);
      });
    for (auto &[name, pending] : sets_) {
      ElementSet s(labels_.size());
      for (auto t : pending.tokens)
        s.insert(ElementId(index_.at(std::string(t))));
      e.sets.emplace(name, std::move(s));
    }
    for (auto &[name, pending] : rels_) {
      BinaryRelation r(labels_.size());
      for (auto t : pending.tokens) {
        auto pq = *split_pair(t);
        r.insert(ElementId(index_.at(std::string(pq.first))),
                 ElementId(index_.at(std::string(pq.second))));
      }
      e.relations.emplace(name, std::move(r));
    }
    return e;
  }

private:
  [[noreturn]] static void fail(std::size_t no, const std::string &msg) {
    throw Error(ErrorCode::parse_error,
                "line " + std::to_string(no) + ": " + msg, no);
  }

  void resolve(std::size_t no, std::string_view label) {
    if (!index_.contains(std::string(label)))
      throw Error(ErrorCode::unknown_element,
                  "line " + std::to_string(no) + ": unknown element '" +
                      std::string(label) + "'",
                  no);
  }

  template <class F>
  static std::invoke_result_t<F> rethrow_at(std::size_t no, F f) {
    try {
      return f();
    } catch (const Error &err) {
      throw Error(err.code(), "line " + std::to_string(no) + ": " + err.what(),
                  no);
    }
  }

  std::size_t max_n_;
  std::string name_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::string bottom_;
  std::size_t bottom_line_ = 0, covers_line_ = 0, ortho_line_ = 0;
  std::vector<std::pair<std::string, std::string>> covers_, perp_;
  std::map<std::string, Pending> sets_, rels_;
};

} // namespace

std::vector<CatalogEntry> parse_entries(std::string_view text,
                                        std::size_t max_n) {
  std::vector<CatalogEntry> out;
  std::optional<EntryParser> cur;
  std::size_t no = 0, start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    auto line = text.substr(start, end - start);
    ++no;
    auto toks = split_ws(trim(line.substr(0, line.find('#'))));
    if (!toks.empty() && toks[0] == "poset" && cur) {
      out.push_back(cur->finish(no - 1));
      cur.reset();
    }
    if (!toks.empty()) {
      if (!cur)
        cur.emplace(max_n);
      cur->line(no, line);
    }
    start = end + 1;
  }
  if (cur)
    out.push_back(cur->finish(no));
  if (out.empty())
    throw Error(ErrorCode::parse_error, "line 1: no poset directive", 1);
  return out;
}

CatalogEntry parse_entry(std::string_view text, std::size_t max_n) {
  auto all = parse_entries(text, max_n);
  if (all.size() != 1)
    throw Error(ErrorCode::parse_error,
                "expected one poset, found " + std::to_string(all.size()));
  return std::move(all.front());
}

std::string serialize(const CatalogEntry &e) {
  const auto &p = e.poset;
  std::ostringstream out;
  out << "poset " << e.name << "\n";
  out << "elements";
  for (const auto &l : p.labels())
    out << ' ' << l;
  out << "\nbottom " << p.label(p.bottom()) << "\n";
  auto cov = p.covers();
  if (!cov.empty()) {
    out << "covers";
    for (auto [a, b] : cov)
      out << ' ' << p.label(a) << '<' << p.label(b);
    out << "\n";
  }
  if (e.ortho) {
    out << "ortho";
    for (auto x : p.elements())
      if (x <= e.ortho->perp(x))
        out << ' ' << p.label(x) << ':' << p.label(e.ortho->perp(x));
    out << "\n";
  }
  for (const auto &[name, s] : e.sets) {
    out << "set " << name;
    for (auto x : s)
      out << ' ' << p.label(x);
    out << "\n";
  }
  for (const auto &[name, r] : e.relations) {
    out << "rel " << name;
    for (auto [a, b] : r.to_pairs())
      out << " (" << p.label(a) << ',' << p.label(b) << ')';
    out << "\n";
  }
  return out.str();
}

ElementSet parse_set(const Poset &p, std::string_view text) {
  auto t = trim(text);
  if (!t.empty() && t.front() == '{' && t.back() == '}')
    t = t.substr(1, t.size() - 2);
  ElementSet s = p.none();
  for (auto tok : split_ws(t))
    for (auto part : split_top(tok, ','))
      if (!trim(part).empty())
        s.insert(p.at(trim(part)));
  return s;
}

BinaryRelation parse_relation(const Poset &p, std::string_view text) {
  BinaryRelation r(p.size());
  auto t = trim(text);
  if (!t.empty() && t.front() == '{' && t.back() == '}')
    t = t.substr(1, t.size() - 2);
  for (auto tok : split_ws(t))
    for (auto part : split_top(tok, ',')) {
      if (trim(part).empty())
        continue;
      auto pq = split_pair(trim(part));
      if (!pq)
        throw Error(ErrorCode::parse_error,
                    "expected (p,q), got '" + std::string(part) + "'");
      r.insert(p.at(pq->first), p.at(pq->second));
    }
  return r;
}

std::string to_dot(const CatalogEntry &e, const ElementSet *highlight) {
  const auto &p = e.poset;
  auto quote = [](const std::string &s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\')
        q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "digraph " << quote(e.name) << " {\n";
  out << "  rankdir=BT;\n  node [shape=circle];\n";
  for (auto x : p.elements()) {
    out << "  n" << x.index << " [label=" << quote(p.label(x));
    if (highlight && highlight->contains(x))
      out << ", style=filled, fillcolor=lightblue";
    out << "];\n";
  }
  for (auto [a, b] : p.covers())
    out << "  n" << a.index << " -> n" << b.index << " [dir=none];\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

constexpr std::string_view kB2 = R"(poset B2
elements 0 a b 1
bottom 0
covers 0<a 0<b a<1 b<1
ortho 0:1 a:b
set Z01 0 1
set Za 0 a
set Zfull 0 a b 1
set Ia 0 a
)";

constexpr std::string_view kC3 = R"(poset C3
elements 0 m 1
bottom 0
covers 0<m m<1
set Z01 0 1
set Zchain 0 m 1
set Zm 0 m
)";

constexpr std::string_view kMO2 = R"(poset MO2
elements 0 a a' b b' 1
bottom 0
covers 0<a 0<a' 0<b 0<b' a<1 a'<1 b<1 b'<1
ortho 0:1 a:a' b:b'
set Z01 0 1
set Iatoms 0 a a' b b'
)";

constexpr std::string_view kN5 = R"(poset N5
elements 0 x y z 1
bottom 0
covers 0<x x<z z<1 0<y y<1
set Z01 0 1
set Zxz 0 z 1
)";

} // namespace

std::vector<CatalogEntry> standard_catalog() {
  std::vector<CatalogEntry> out;
  for (auto text : {kB2, kC3, kMO2, kN5}) {
    auto e = parse_entry(text);
    expect_center(e);
    out.push_back(std::move(e));
  }
  out[0].expectations["center"] = "{0,a,b,1}";
  out[2].expectations["center"] = "{0,1}";

  auto prod = gen_product(gen_chain(1), gen_MO(2));
  prod.name = "B1xMO2";
  const auto &p = prod.poset;
  auto center = central_elements(p);
  prod.sets.emplace("center", center);
  prod.sets.emplace("F", finite_elements(p, rel_precsim_Z(p, center)).finite);
  prod.expectations["center"] = "{(0,0),(0,1),(1,0),(1,1)}";
  out.push_back(std::move(prod));
  return out;
}

std::optional<CatalogEntry> fixture(std::string_view name) {
  for (auto &e : standard_catalog())
    if (e.name == name)
      return e;
  return std::nullopt;
}

} // namespace podec

#pragma once

// Brute-force reference implementations. They only read the order relation
// of a poset and recompute everything else by exhaustive scans over
// elements, subsets and functions, so they share no code paths with the
// library beyond leq().

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "podec/poset.hpp"
#include "podec/relations.hpp"

namespace podec::oracle {

using Mask = std::uint64_t;

inline ElementId id(int i) { return ElementId(static_cast<std::size_t>(i)); }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool has(Mask m, int i) { return (m >> i) & 1u; }

struct Order {
  int n = 0;
  std::vector<std::vector<char>> le;
  int bot = 0;

  bool leq(int a, int b) const { return le[a][b] != 0; }
  Mask all() const { return n == 64 ? ~Mask{0} : bit(n) - 1; }
};

inline Order from_poset(const Poset &p) {
  Order o;
  o.n = static_cast<int>(p.size());
  o.le.assign(o.n, std::vector<char>(o.n, 0));
  for (int a = 0; a < o.n; ++a)
    for (int b = 0; b < o.n; ++b)
      o.le[a][b] = p.leq(id(a), id(b));
  for (int a = 0; a < o.n; ++a) {
    bool least = true;
    for (int b = 0; b < o.n; ++b)
      least = least && o.leq(a, b);
    if (least)
      o.bot = a;
  }
  return o;
}

// Pair (a, b) sits at a * b.n + b, ordered componentwise.
inline Order product(const Order &a, const Order &b) {
  Order o;
  o.n = a.n * b.n;
  o.le.assign(o.n, std::vector<char>(o.n, 0));
  for (int x = 0; x < o.n; ++x)
    for (int y = 0; y < o.n; ++y)
      o.le[x][y] = a.leq(x / b.n, y / b.n) && b.leq(x % b.n, y % b.n);
  o.bot = a.bot * b.n + b.bot;
  return o;
}

inline Mask to_mask(const ElementSet &s) {
  Mask m = 0;
  for (auto e : s)
    m |= bit(static_cast<int>(e.index));
  return m;
}

inline ElementSet to_set(const Order &o, Mask m) {
  return ElementSet::from_mask(static_cast<std::size_t>(o.n), m);
}

inline std::vector<int> members(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u)
      out.push_back(i);
  return out;
}

// Least upper bound of the set, by scanning all upper bounds.
inline std::optional<int> sup(const Order &o, Mask s) {
  std::vector<int> ub;
  for (int x = 0; x < o.n; ++x) {
    bool upper = true;
    for (int a : members(s))
      upper = upper && o.leq(a, x);
    if (upper)
      ub.push_back(x);
  }
  for (int x : ub) {
    bool least = true;
    for (int y : ub)
      least = least && o.leq(x, y);
    if (least)
      return x;
  }
  return std::nullopt;
}

inline std::optional<int> inf(const Order &o, Mask s) {
  std::vector<int> lb;
  for (int x = 0; x < o.n; ++x) {
    bool lower = true;
    for (int a : members(s))
      lower = lower && o.leq(x, a);
    if (lower)
      lb.push_back(x);
  }
  for (int x : lb) {
    bool greatest = true;
    for (int y : lb)
      greatest = greatest && o.leq(y, x);
    if (greatest)
      return x;
  }
  return std::nullopt;
}

inline std::optional<int> join2(const Order &o, int a, int b) {
  return sup(o, bit(a) | bit(b));
}
inline std::optional<int> meet2(const Order &o, int a, int b) {
  return inf(o, bit(a) | bit(b));
}
inline bool disjoint(const Order &o, int a, int b) {
  return meet2(o, a, b) == o.bot;
}

// Some f: S -> Z with s <= f(s) and f(s) ^ f(t) = 0 for s != t.
inline bool z_disjoint(const Order &o, Mask z, Mask s) {
  auto elems = members(s);
  auto zs = members(z);
  std::vector<int> f(elems.size());
  std::function<bool(std::size_t)> go = [&](std::size_t k) {
    if (k == elems.size())
      return true;
    for (int c : zs) {
      if (!o.leq(elems[k], c))
        continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j)
        ok = disjoint(o, f[j], c);
      if (!ok)
        continue;
      f[k] = c;
      if (go(k + 1))
        return true;
    }
    return false;
  };
  return go(0);
}

// Z-disjointness of subsets of `ground`, computed on demand and cached.
class DisjointTable {
public:
  DisjointTable(const Order &o, Mask z, Mask ground)
      : o_(&o), z_(z), ground_(ground) {}
  bool operator()(Mask s) const {
    auto it = cache_.find(s);
    if (it == cache_.end())
      it = cache_.emplace(s, z_disjoint(*o_, z_, s)).first;
    return it->second;
  }
  Mask ground() const { return ground_; }

private:
  const Order *o_;
  Mask z_;
  Mask ground_;
  mutable std::unordered_map<Mask, bool> cache_;
};

// (1) joins of Z-disjoint subsets of I exist and lie in I, and (2) a
// Z-disjoint pair whose join lies in I lies in I.
inline bool z_complete(const Order &o, const DisjointTable &zd, Mask i) {
  auto ims = members(i);
  for (Mask sub = 0; sub < (Mask{1} << ims.size()); ++sub) {
    Mask s = 0;
    for (std::size_t k = 0; k < ims.size(); ++k)
      if (has(sub, static_cast<int>(k)))
        s |= bit(ims[k]);
    if (!zd(s))
      continue;
    auto j = sup(o, s);
    if (!j || !has(i, *j))
      return false;
  }
  for (int p = 0; p < o.n; ++p)
    for (int q = p + 1; q < o.n; ++q) {
      if (!has(zd.ground(), p) || !has(zd.ground(), q) ||
          !zd(bit(p) | bit(q)))
        continue;
      auto j = join2(o, p, q);
      if (j && has(i, *j) && !(has(i, p) && has(i, q)))
        return false;
    }
  return true;
}

inline bool z_complete(const Order &o, Mask z, Mask i) {
  return z_complete(o, DisjointTable(o, z, o.all()), i);
}

inline bool lower_complete(const Order &o, Mask z) {
  auto zs = members(z);
  for (Mask sub = 0; sub < (Mask{1} << zs.size()); ++sub) {
    Mask s = 0;
    for (std::size_t k = 0; k < zs.size(); ++k)
      if (has(sub, static_cast<int>(k)))
        s |= bit(zs[k]);
    auto m = inf(o, s);
    if (!m || !has(z, *m))
      return false;
  }
  return true;
}

inline bool upper_complete(const Order &o, Mask z) {
  auto zs = members(z);
  for (Mask sub = 0; sub < (Mask{1} << zs.size()); ++sub) {
    Mask s = 0;
    for (std::size_t k = 0; k < zs.size(); ++k)
      if (has(sub, static_cast<int>(k)))
        s |= bit(zs[k]);
    auto m = sup(o, s);
    if (!m || !has(z, *m))
      return false;
  }
  return true;
}

// Least z in Z above p.
inline std::optional<int> cover(const Order &o, Mask z, int p) {
  Mask above = 0;
  for (int x : members(z))
    if (o.leq(p, x))
      above |= bit(x);
  for (int x : members(above)) {
    bool least = true;
    for (int y : members(above))
      least = least && o.leq(x, y);
    if (least)
      return x;
  }
  return std::nullopt;
}

// For p in S, y in Z: z in Z, q <= y, r <= z with y ^ z = 0 and p = q v r.
inline bool s_central(const Order &o, Mask z, Mask s) {
  for (int p : members(s))
    for (int y : members(z)) {
      bool found = false;
      for (int w : members(z)) {
        if (found || !disjoint(o, y, w))
          continue;
        for (int q = 0; q < o.n && !found; ++q)
          for (int r = 0; r < o.n && !found; ++r)
            found = o.leq(q, y) && o.leq(r, w) && join2(o, q, r) == p;
      }
      if (!found)
        return false;
    }
  return true;
}

// z is central iff some z' makes p -> (p ^ z, p ^ z') and (a, b) -> a v b
// mutually inverse bijections between P and [0,z] x [0,z'].
inline bool is_central(const Order &o, int z) {
  for (int w = 0; w < o.n; ++w) {
    bool ok = true;
    for (int p = 0; p < o.n && ok; ++p) {
      auto a = meet2(o, p, z);
      auto b = meet2(o, p, w);
      ok = a && b && join2(o, *a, *b) == p;
    }
    for (int a = 0; a < o.n && ok; ++a)
      for (int b = 0; b < o.n && ok; ++b) {
        if (!o.leq(a, z) || !o.leq(b, w))
          continue;
        auto j = join2(o, a, b);
        ok = j && meet2(o, *j, z) == a && meet2(o, *j, w) == b;
      }
    if (ok)
      return true;
  }
  return false;
}

inline Mask centre(const Order &o) {
  Mask c = 0;
  for (int z = 0; z < o.n; ++z)
    if (is_central(o, z))
      c |= bit(z);
  return c;
}

// p <~ q iff every z in Z above q is above p.
inline bool precsim(const Order &o, Mask z, int p, int q) {
  for (int x : members(z))
    if (o.leq(q, x) && !o.leq(p, x))
      return false;
  return true;
}

using Relation = std::vector<std::vector<char>>;

inline Relation precsim_relation(const Order &o, Mask z) {
  Relation r(o.n, std::vector<char>(o.n, 0));
  for (int p = 0; p < o.n; ++p)
    for (int q = 0; q < o.n; ++q)
      r[p][q] = precsim(o, z, p, q);
  return r;
}

inline Relation from_relation(const BinaryRelation &r) {
  auto n = static_cast<int>(r.domain_size());
  Relation out(n, std::vector<char>(n, 0));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      out[p][q] = r.contains(id(p), id(q));
  return out;
}

// p is finite iff p R q <= p forces q = p.
inline Mask finite(const Order &o, const Relation &r) {
  Mask f = 0;
  for (int p = 0; p < o.n; ++p) {
    bool ok = true;
    for (int q = 0; q < o.n; ++q)
      ok = ok && !(q != p && o.leq(q, p) && r[p][q]);
    if (ok)
      f |= bit(p);
  }
  return f;
}

// R as a subset of P x P against the diagonal of Z.
class RelationOracle {
public:
  RelationOracle(const Order &o, Mask z)
      : base_(o), sq_(product(o, o)), diag_(diagonal(o, z)),
        table_(sq_, diag_, sq_.all()) {}

  bool complete(const Relation &r) const {
    Mask m = 0;
    for (int p = 0; p < base_.n; ++p)
      for (int q = 0; q < base_.n; ++q)
        if (r[p][q])
          m |= bit(p * base_.n + q);
    return z_complete(sq_, table_, m);
  }

private:
  static Mask diagonal(const Order &o, Mask z) {
    Mask d = 0;
    for (int x : members(z))
      d |= bit(x * o.n + x);
    return d;
  }

  Order base_;
  Order sq_;
  Mask diag_;
  DisjointTable table_;
};

// Every z in Z with  y ^ z = 0  <=>  [0,y] ^ target = {0}  for all y in Z.
inline std::vector<int> decomposition_elements(const Order &o, Mask z,
                                               Mask target) {
  std::vector<int> out;
  for (int c : members(z)) {
    bool ok = true;
    for (int y : members(z)) {
      bool trivial = true;
      for (int x : members(target))
        trivial = trivial && !(o.leq(x, y) && x != o.bot);
      ok = ok && (disjoint(o, y, c) == trivial);
    }
    if (ok)
      out.push_back(c);
  }
  return out;
}

// Orders k >= 1 in which p is the join of k distinct elements of I that
// are pairwise related by H. Searches every H-clique below p.
inline std::vector<int> homogeneous_orders(const Order &o, Mask i,
                                           const Relation &h, int p) {
  std::vector<int> below;
  for (int x : members(i))
    if (o.leq(x, p))
      below.push_back(x);
  std::vector<char> seen(below.size() + 1, 0);
  std::vector<int> chosen;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (!chosen.empty()) {
      Mask s = 0;
      for (int x : chosen)
        s |= bit(x);
      if (sup(o, s) == p)
        seen[chosen.size()] = 1;
    }
    for (std::size_t k = from; k < below.size(); ++k) {
      bool clique = true;
      for (int x : chosen)
        clique = clique && h[x][below[k]];
      if (!clique)
        continue;
      chosen.push_back(below[k]);
      go(k + 1);
      chosen.pop_back();
    }
  };
  go(0);
  std::vector<int> out;
  for (std::size_t k = 1; k < seen.size(); ++k)
    if (seen[k])
      out.push_back(static_cast<int>(k));
  return out;
}

// All families k -> z_k in Z (zero parts omitted), pairwise disjoint, each
// nonzero z_k homogeneous of order k, joining to the top.
inline std::vector<std::map<int, int>>
homogeneous_families(const Order &o, Mask z, Mask i, const Relation &h) {
  std::map<int, std::vector<int>> by_order;
  for (int c : members(z)) {
    if (c == o.bot)
      continue;
    for (int k : homogeneous_orders(o, i, h, c))
      by_order[k].push_back(c);
  }
  std::vector<std::pair<int, std::vector<int>>> slots(by_order.begin(),
                                                      by_order.end());
  std::vector<std::map<int, int>> out;
  std::map<int, int> cur;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == slots.size()) {
      Mask s = 0;
      for (auto [ord, e] : cur)
        s |= bit(e);
      auto j = sup(o, s);
      bool top = j.has_value();
      for (int x = 0; x < o.n && top; ++x)
        top = o.leq(x, *j);
      if (top)
        out.push_back(cur);
      return;
    }
    go(k + 1);
    for (int c : slots[k].second) {
      bool ok = true;
      for (auto [ord, e] : cur)
        ok = ok && disjoint(o, e, c);
      if (!ok)
        continue;
      cur[slots[k].first] = c;
      go(k + 1);
      cur.erase(slots[k].first);
    }
  };
  go(0);
  return out;
}

} // namespace podec::oracle

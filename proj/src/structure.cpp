#include "gvz/structure.hpp"

#include <algorithm>
#include <set>

namespace gvz {

std::size_t p_part(std::size_t n, std::size_t p) {
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_prime_power(std::size_t n) { return n > 1 && prime_divisors(n).size() == 1; }

Subgroup ClassPartition::union_of(const std::vector<bool>& which) const {
  Subgroup s(class_of.size());
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (which[k])
      for (auto x : classes[k].members) s.insert(x);
  return s;
}

bool ClassPartition::is_union_of_classes(const Subgroup& s) const {
  for (const auto& c : classes) {
    const bool first = s.contains(c.rep);
    for (auto x : c.members)
      if (s.contains(x) != first) return false;
  }
  return true;
}

ClassPartition conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  ClassPartition cp;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  cp.class_of.assign(n, kNone);
  for (std::size_t x = 0; x < n; ++x) {
    if (cp.class_of[x] != kNone) continue;
    const std::size_t id = cp.classes.size();
    ConjugacyClass c{Elem(x), {Elem(x)}, 0};
    cp.class_of[x] = id;
    for (std::size_t i = 0; i < c.members.size(); ++i)
      for (auto s : g.generators()) {
        const Elem y = g.conj(c.members[i], s);
        if (cp.class_of[y] == kNone) {
          cp.class_of[y] = id;
          c.members.push_back(y);
        }
      }
    std::sort(c.members.begin(), c.members.end());
    cp.classes.push_back(std::move(c));
  }
  for (auto& c : cp.classes) c.inverse_class = cp.class_of[g.inv(c.rep)];
  for (std::size_t p = 2; p <= g.exponent(); ++p) {
    if (!is_prime(p)) continue;
    auto& row = cp.power_map[p];
    for (const auto& c : cp.classes) row.push_back(cp.class_of[g.pow(c.rep, p)]);
  }
  return cp;
}

Subgroup center(const Group& g) {
  Subgroup z(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (auto s : g.generators())
      if (g.mul(Elem(x), s) != g.mul(s, Elem(x))) {
        central = false;
        break;
      }
    if (central) z.insert(Elem(x));
  }
  return z;
}

std::size_t centralizer_order(const Group& g, Elem x) {
  std::size_t c = 0;
  for (std::size_t y = 0; y < g.order(); ++y)
    if (g.mul(x, Elem(y)) == g.mul(Elem(y), x)) ++c;
  return c;
}

namespace {

// Closure of `start` (already containing the identity) under right
// multiplication by `gens`.
void close_under(const Group& g, Subgroup& s, const std::vector<Elem>& gens) {
  auto queue = s.members();
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto t : gens) {
      const Elem z = g.mul(queue[i], t);
      if (!s.contains(z)) {
        s.insert(z);
        queue.push_back(z);
      }
    }
}

// Greedy generating set of a subgroup.
std::vector<Elem> generators_of(const Group& g, const Subgroup& h) {
  std::vector<Elem> gens;
  Subgroup reached = Subgroup::trivial(g.order());
  for (auto x : h.members()) {
    if (reached.contains(x)) continue;
    gens.push_back(x);
    close_under(g, reached, gens);
  }
  return gens;
}

}  // namespace

Subgroup generated(const Group& g, const std::vector<Elem>& gens) {
  Subgroup s = Subgroup::trivial(g.order());
  for (auto x : gens)
    if (x >= g.order()) throw ArgumentError("generated: element index out of range");
  close_under(g, s, gens);
  return s;
}

Subgroup normal_closure(const Group& g, const std::vector<Elem>& elems) {
  std::vector<Elem> gens;
  for (auto x : elems)
    if (x != 0) gens.push_back(x);
  Subgroup h = generated(g, gens);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (auto s : g.generators()) {
      const Elem c = g.conj(gens[i], s);
      if (!h.contains(c)) {
        gens.push_back(c);
        close_under(g, h, gens);
      }
    }
  return h;
}

Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> comms;
  const auto bm = b.members();
  for (auto x : a.members())
    for (auto y : bm) {
      const Elem c = g.comm(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  // The commutator set of subgroups generates [A, B]; pruning to a greedy
  // generating set keeps the closure cheap.
  Subgroup s = Subgroup::trivial(g.order());
  std::vector<Elem> gens;
  for (auto c : comms) {
    if (s.contains(c)) continue;
    gens.push_back(c);
    close_under(g, s, gens);
  }
  return s;
}

Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b) {
  if (b.is_subset_of(a)) return a;
  if (a.is_subset_of(b)) return b;
  auto gens = generators_of(g, a);
  for (auto x : generators_of(g, b)) gens.push_back(x);
  return generated(g, gens);
}

Subgroup derived_subgroup(const Group& g) {
  const auto whole = Subgroup::whole(g.order());
  return commutator_subgroup(g, whole, whole);
}

Subgroup commutator_with_group(const Group& g, Elem x) {
  if (x >= g.order()) throw ArgumentError("commutator_with_group: index out of range");
  Subgroup s = Subgroup::trivial(g.order());
  std::vector<Elem> gens;
  for (std::size_t y = 0; y < g.order(); ++y) {
    const Elem c = g.comm(x, Elem(y));
    if (s.contains(c)) continue;
    gens.push_back(c);
    close_under(g, s, gens);
  }
  return s;
}

bool is_normal(const Group& g, const Subgroup& s) {
  if (!is_subgroup(g, s)) return false;
  for (auto x : s.members())
    for (std::size_t y = 0; y < g.order(); ++y)
      if (!s.contains(g.conj(x, Elem(y)))) return false;
  return true;
}

bool is_flat(const Group& g, Elem x) {
  if (x >= g.order()) throw ArgumentError("is_flat: index out of range");
  const std::size_t cl = g.order() / centralizer_order(g, x);
  return cl == commutator_with_group(g, x).size();
}

std::vector<bool> flat_classes(const Group& g, const ClassPartition& cp) {
  std::vector<bool> out;
  for (const auto& c : cp.classes) out.push_back(c.size() == commutator_with_group(g, c.rep).size());
  return out;
}

std::vector<Subgroup> normal_subgroups(const Group& g, const ClassPartition& cp) {
  // Every normal subgroup is the join of the normal closures of the classes
  // it contains, so joining against the class closures reaches all of them.
  std::set<Subgroup> found;
  std::vector<Subgroup> base;
  for (std::size_t k = 1; k < cp.count(); ++k) {
    auto h = normal_closure(g, {cp.classes[k].rep});
    if (found.insert(h).second) base.push_back(h);
  }
  const auto trivial = Subgroup::trivial(g.order());
  found.insert(trivial);
  std::vector<Subgroup> work(found.begin(), found.end());
  for (std::size_t i = 0; i < work.size(); ++i)
    for (const auto& b : base) {
      if (b.is_subset_of(work[i])) continue;
      auto j = join(g, work[i], b);
      if (found.insert(j).second) work.push_back(j);
    }
  return {found.begin(), found.end()};
}

CentralSeries central_series(const Group& g) {
  const std::size_t n = g.order();
  CentralSeries out;
  out.lower.kind = SeriesKind::LowerCentral;
  out.upper.kind = SeriesKind::UpperCentral;

  const auto whole = Subgroup::whole(n);
  out.lower.terms.push_back(whole);
  while (true) {
    auto next = commutator_subgroup(g, out.lower.terms.back(), whole);
    if (next == out.lower.terms.back()) break;
    out.lower.terms.push_back(std::move(next));
  }

  // Z_{i+1} = { x : comm(x, s) in Z_i for every generator s }.
  out.upper.terms.push_back(Subgroup::trivial(n));
  while (true) {
    const auto& cur = out.upper.terms.back();
    Subgroup next(n);
    for (std::size_t x = 0; x < n; ++x) {
      bool ok = true;
      for (auto s : g.generators())
        if (!cur.contains(g.comm(Elem(x), s))) {
          ok = false;
          break;
        }
      if (ok) next.insert(Elem(x));
    }
    if (next == cur) break;
    out.upper.terms.push_back(std::move(next));
  }
  out.hypercenter = out.upper.terms.back();
  out.is_nilpotent = out.hypercenter.is_whole();
  if (out.lower.terms.back().is_trivial())
    out.nilpotence_class = out.lower.terms.size() - 1;
  return out;
}

std::optional<std::size_t> nilpotence_class_in(const Group& g, const Subgroup& n) {
  Subgroup cur = n;
  std::size_t c = 0;
  while (!cur.is_trivial()) {
    auto next = commutator_subgroup(g, cur, n);
    if (next == cur) return std::nullopt;
    cur = std::move(next);
    ++c;
  }
  return c;
}

Subgroup normalizer(const Group& g, const Subgroup& h) {
  const auto gens = generators_of(g, h);
  Subgroup out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto s : gens)
      if (!h.contains(g.conj(s, Elem(x)))) {
        ok = false;
        break;
      }
    if (ok) out.insert(Elem(x));
  }
  return out;
}

Subgroup sylow_subgroup(const Group& g, std::size_t p) {
  if (!is_prime(p) || g.order() % p != 0)
    throw ArgumentError("sylow_subgroup: p must be a prime dividing |G|");
  const std::size_t target = p_part(g.order(), p);
  Subgroup cur = Subgroup::trivial(g.order());
  while (cur.size() < target) {
    // Least-index x in N(P) \ P with x^(p^k) in P; then P<x> is a larger p-group.
    const auto norm = normalizer(g, cur);
    bool grew = false;
    for (auto x : norm.members()) {
      if (cur.contains(x)) continue;
      Elem y = x;
      std::size_t steps = 0;
      while (!cur.contains(y) && steps < 64) {
        y = g.pow(y, p);
        ++steps;
      }
      if (!cur.contains(y)) continue;
      auto gens = generators_of(g, cur);
      gens.push_back(x);
      cur = generated(g, gens);
      grew = true;
      break;
    }
    if (!grew) throw std::logic_error("sylow_subgroup: normalizer ascent stalled");
  }
  return cur;
}

Subgroup hall_complement(const Group& g, std::size_t p) {
  if (!is_prime(p)) throw ArgumentError("hall_complement: p must be prime");
  if (!central_series(g).is_nilpotent)
    throw UnsupportedStructure("hall_complement: group is not nilpotent");
  Subgroup out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.elem_order(Elem(x)) % p != 0) out.insert(Elem(x));
  return out;
}

SylowHall sylow_and_hall(const Group& g, std::size_t p) {
  auto syl = sylow_subgroup(g, p);
  return {std::move(syl), hall_complement(g, p)};
}

}  // namespace gvz

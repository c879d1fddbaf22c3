#pragma once

// Independent reference computations used by the unit and acceptance tests.
// They work from definitions (floating-point character values, exhaustive
// subgroup scans) rather than the library's kernel-intersection formulas.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gvz/chartab.hpp"
#include "gvz/group.hpp"
#include "gvz/structure.hpp"

namespace oracle {

using gvz::CharacterTable;
using gvz::Elem;
using gvz::Group;
using gvz::Subgroup;

inline constexpr double kTol = 1e-9;

inline std::complex<double> to_complex(const gvz::Cyclotomic& v) {
  std::complex<double> s = 0;
  const auto e = static_cast<double>(v.conductor());
  for (std::size_t k = 0; k < v.coeffs().size(); ++k)
    s += static_cast<double>(v.coeffs()[k]) * std::polar(1.0, 2 * std::numbers::pi * k / e);
  return s;
}

/// chi(x) as a complex number, per element.
inline std::vector<std::vector<std::complex<double>>> numeric_values(const CharacterTable& t) {
  const std::size_t n = t.group->order();
  std::vector<std::vector<std::complex<double>>> out(t.size(), std::vector<std::complex<double>>(n));
  for (std::size_t c = 0; c < t.size(); ++c)
    for (std::size_t x = 0; x < n; ++x) out[c][x] = to_complex(t.at(c, Elem(x)));
  return out;
}

inline Subgroup brute_center(const Group& g) {
  Subgroup z(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (std::size_t y = 0; y < g.order() && central; ++y)
      central = g.mul(Elem(x), Elem(y)) == g.mul(Elem(y), Elem(x));
    if (central) z.insert(Elem(x));
  }
  return z;
}

inline Subgroup brute_closure(const Group& g, Subgroup s) {
  std::vector<Elem> mem = s.members();
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (Elem z : {g.mul(mem[i], mem[j]), g.mul(mem[j], mem[i])})
        if (!s.contains(z)) {
          s.insert(z);
          mem.push_back(z);
        }
  return s;
}

inline bool brute_normal(const Group& g, const Subgroup& s) {
  for (auto x : s.members())
    for (std::size_t y = 0; y < g.order(); ++y)
      if (!s.contains(g.conj(x, Elem(y)))) return false;
  return true;
}

/// Every subgroup, as joins of cyclic subgroups closed to a fixed point.
inline std::vector<Subgroup> all_subgroups(const Group& g) {
  std::set<Subgroup> found;
  std::vector<Subgroup> cyclic;
  for (std::size_t x = 0; x < g.order(); ++x) {
    Subgroup c(g.order());
    c.insert(0);
    c.insert(Elem(x));
    auto s = brute_closure(g, c);
    if (found.insert(s).second) cyclic.push_back(s);
  }
  std::vector<Subgroup> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& a : frontier)
      for (const auto& c : cyclic) {
        if (c.is_subset_of(a)) continue;
        auto s = brute_closure(g, a.unite(c));
        if (found.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

inline std::vector<Subgroup> brute_normal_subgroups(const Group& g) {
  std::vector<Subgroup> out;
  for (const auto& s : all_subgroups(g))
    if (brute_normal(g, s)) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

struct NumericChar {
  Subgroup kernel;
  Subgroup zcenter;
  bool central_type = false;
};

/// Kernel, center and central type from complex values: |chi(x)| = chi(1)
/// defines Z(chi); central type means chi vanishes off Z(chi).
inline std::vector<NumericChar> numeric_chars(const CharacterTable& t) {
  const auto vals = numeric_values(t);
  const std::size_t n = t.group->order();
  std::vector<NumericChar> out;
  for (std::size_t c = 0; c < t.size(); ++c) {
    const double d = vals[c][0].real();
    NumericChar nc{Subgroup(n), Subgroup(n), true};
    for (std::size_t x = 0; x < n; ++x) {
      if (std::abs(vals[c][x] - d) < kTol) nc.kernel.insert(Elem(x));
      if (std::abs(std::abs(vals[c][x]) - d) < kTol) nc.zcenter.insert(Elem(x));
    }
    for (std::size_t x = 0; x < n; ++x)
      if (!nc.zcenter.contains(Elem(x)) && std::abs(vals[c][x]) > kTol) nc.central_type = false;
    out.push_back(nc);
  }
  return out;
}

/// Largest normal N (possibly trivial) such that every character whose kernel
/// misses N satisfies `good`. Also checks that the good subgroups are closed
/// under products, returning nullopt if the largest one is not unique.
template <typename Pred>
std::optional<Subgroup> largest_normal_with(const CharacterTable& t, const std::vector<Subgroup>& normals,
                                            Pred good) {
  const auto nc = numeric_chars(t);
  std::vector<Subgroup> ok;
  for (const auto& n : normals) {
    bool all = true;
    for (std::size_t c = 0; c < t.size() && all; ++c)
      if (!n.is_subset_of(nc[c].kernel)) all = good(c);
    if (all) ok.push_back(n);
  }
  Subgroup product = Subgroup::trivial(t.group->order());
  for (const auto& n : ok) product = brute_closure(*t.group, product.unite(n));
  if (std::find(ok.begin(), ok.end(), product) == ok.end()) return std::nullopt;
  for (const auto& n : ok)
    if (!n.is_subset_of(product)) return std::nullopt;
  return product;
}

/// R(G) by definition: the largest normal N with Irr(G|N) all central type.
inline std::optional<Subgroup> brute_r(const CharacterTable& t, const std::vector<Subgroup>& normals) {
  const auto nc = numeric_chars(t);
  return largest_normal_with(t, normals, [&](std::size_t c) { return nc[c].central_type; });
}

/// U(G) by definition: the largest normal U with Irr(G|U) all fully ramified
/// over Z(G), i.e. vanishing on G \ Z(G).
inline std::optional<Subgroup> brute_u(const CharacterTable& t, const std::vector<Subgroup>& normals) {
  const auto vals = numeric_values(t);
  const auto z = brute_center(*t.group);
  return largest_normal_with(t, normals, [&](std::size_t c) {
    for (std::size_t x = 0; x < t.group->order(); ++x)
      if (!z.contains(Elem(x)) && std::abs(vals[c][x]) > kTol) return false;
    return true;
  });
}

// -- textbook character tables ----------------------------------------------

/// A value written as a sum of e-th roots of unity: {k1, k2, ...} means
/// zeta_e^k1 + zeta_e^k2 + ...; {} is zero.
using RootSum = std::vector<int>;

struct TextbookTable {
  std::size_t conductor;
  /// (element order, class size) per column.
  std::vector<std::pair<std::size_t, std::size_t>> columns;
  std::vector<std::vector<RootSum>> rows;
};

inline gvz::Cyclotomic root_sum(std::size_t e, const RootSum& r) {
  gvz::Cyclotomic v(e);
  for (int k : r) v += gvz::Cyclotomic::root_of_unity(e, k);
  return v;
}

// S3: classes 1, (123), (12).
inline TextbookTable s3_table() {
  return {6, {{1, 1}, {3, 2}, {2, 3}}, {{{0}, {0}, {0}}, {{0}, {0}, {3}}, {{0, 0}, {3}, {}}}};
}
// Q8: 1, -1, i, j, k.
inline TextbookTable q8_table() {
  return {4,
          {{1, 1}, {2, 1}, {4, 2}, {4, 2}, {4, 2}},
          {{{0}, {0}, {0}, {0}, {0}},
           {{0}, {0}, {0}, {2}, {2}},
           {{0}, {0}, {2}, {0}, {2}},
           {{0}, {0}, {2}, {2}, {0}},
           {{0, 0}, {2, 2}, {}, {}, {}}}};
}
// D8: 1, r^2, r, s, rs.
inline TextbookTable d8_table() {
  return {4,
          {{1, 1}, {2, 1}, {4, 2}, {2, 2}, {2, 2}},
          {{{0}, {0}, {0}, {0}, {0}},
           {{0}, {0}, {0}, {2}, {2}},
           {{0}, {0}, {2}, {0}, {2}},
           {{0}, {0}, {2}, {2}, {0}},
           {{0, 0}, {2, 2}, {}, {}, {}}}};
}
// A4: 1, (12)(34), (123), (132); omega = zeta_6^2.
inline TextbookTable a4_table() {
  return {6,
          {{1, 1}, {2, 3}, {3, 4}, {3, 4}},
          {{{0}, {0}, {0}, {0}},
           {{0}, {0}, {2}, {4}},
           {{0}, {0}, {4}, {2}},
           {{0, 0, 0}, {3}, {}, {}}}};
}
// D10: 1, {r, r^4}, {r^2, r^3}, s; zeta_5 = zeta_10^2.
inline TextbookTable d10_table() {
  return {10,
          {{1, 1}, {5, 2}, {5, 2}, {2, 5}},
          {{{0}, {0}, {0}, {0}},
           {{0}, {0}, {0}, {5}},
           {{0, 0}, {2, 8}, {4, 6}, {}},
           {{0, 0}, {4, 6}, {2, 8}, {}}}};
}

inline Group alternating4() {
  return Group::from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4, "A4");
}

/// True if some column bijection respecting (element order, class size)
/// makes the computed rows equal to the textbook rows as multisets.
inline bool matches_textbook(const CharacterTable& t, const TextbookTable& ref) {
  const std::size_t r = t.partition.count();
  if (ref.columns.size() != r || ref.rows.size() != t.size()) return false;
  const std::size_t e = t.conductor();
  if (e % ref.conductor != 0) return false;
  std::vector<std::vector<gvz::Cyclotomic>> want;
  for (const auto& row : ref.rows) {
    std::vector<gvz::Cyclotomic> w;
    for (const auto& v : row) w.push_back(root_sum(ref.conductor, v).embed(e));
    want.push_back(w);
  }
  std::vector<std::size_t> perm(r);
  for (std::size_t i = 0; i < r; ++i) perm[i] = i;
  do {
    bool shape = true;
    for (std::size_t k = 0; k < r && shape; ++k) {
      const auto& cls = t.partition.classes[perm[k]];
      shape = ref.columns[k] == std::make_pair(t.group->elem_order(cls.rep), cls.size());
    }
    if (!shape) continue;
    std::vector<std::vector<gvz::Cyclotomic>> got;
    for (std::size_t c = 0; c < t.size(); ++c) {
      std::vector<gvz::Cyclotomic> row;
      for (std::size_t k = 0; k < r; ++k) row.push_back(t.value(c, perm[k]));
      got.push_back(row);
    }
    auto a = got, b = want;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// -- generators for property tests ------------------------------------------

/// Random permutation group on up to `max_degree` points with 1..3 generators,
/// rejecting orders above `max_order`.
inline Group random_perm_group(std::mt19937& rng, std::size_t max_degree, std::size_t max_order) {
  for (;;) {
    std::uniform_int_distribution<std::size_t> deg(2, max_degree), ngen(1, 3);
    const std::size_t d = deg(rng);
    std::vector<gvz::Perm> gens;
    for (std::size_t i = ngen(rng); i > 0; --i) {
      gvz::Perm p(d);
      for (std::size_t j = 0; j < d; ++j) p[j] = static_cast<std::uint32_t>(j);
      std::shuffle(p.begin(), p.end(), rng);
      gens.push_back(p);
    }
    try {
      auto g = Group::from_permutations(gens, d, "random", max_order);
      return g;
    } catch (const gvz::OrderCapExceeded&) {
    }
  }
}

}  // namespace oracle

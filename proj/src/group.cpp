#include "gvz/group.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace gvz {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

std::string cat(auto&&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

// Right-regular permutation representation of a group given by a
// multiplication rule on 0..m-1.
template <class Mul>
std::vector<Perm> regular_perms(std::size_t m, const std::vector<std::size_t>& gens, Mul mul) {
  std::vector<Perm> out;
  for (auto s : gens) {
    Perm p(m);
    for (std::size_t i = 0; i < m; ++i) p[i] = static_cast<std::uint32_t>(mul(i, s));
    out.push_back(std::move(p));
  }
  return out;
}

Perm cycle_perm(std::size_t degree, std::size_t start, std::size_t len) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0U);
  for (std::size_t i = 0; i < len; ++i)
    p[start + i] = static_cast<std::uint32_t>(start + (i + 1) % len);
  return p;
}

std::size_t parse_size(const std::string& s, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ArgumentError(cat("invalid ", what, ": '", s, "'"));
  return v;
}

}  // namespace

// -- number theory -----------------------------------------------------------

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// -- Group -------------------------------------------------------------------

Elem Group::pow(Elem x, std::size_t k) const {
  Elem r = 0;
  Elem b = x;
  while (k) {
    if (k & 1U) r = mul(r, b);
    b = mul(b, b);
    k >>= 1U;
  }
  return r;
}

bool Group::is_abelian() const {
  for (auto a : gens_)
    for (auto b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Group::is_associative_exhaustive() const {
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y) {
      const Elem xy = mul(Elem(x), Elem(y));
      for (std::size_t z = 0; z < n_; ++z)
        if (mul(xy, Elem(z)) != mul(Elem(x), mul(Elem(y), Elem(z)))) return false;
    }
  return true;
}

void Group::finish(std::string label) {
  label_ = std::move(label);
  inv_.assign(n_, 0);
  order_of_.assign(n_, 1);
  exponent_ = 1;
  for (std::size_t x = 0; x < n_; ++x) {
    std::size_t o = 1;
    Elem prev = 0;
    Elem cur = Elem(x);
    while (cur != 0) {
      prev = cur;
      cur = mul(cur, Elem(x));
      ++o;
    }
    // x^o = 1, so x^(o-1) = x^-1; for the identity o = 1 and prev stays 0.
    order_of_[x] = (x == 0) ? 1 : o;
    inv_[x] = (x == 0) ? Elem(0) : prev;
    exponent_ = std::lcm(exponent_, order_of_[x]);
  }
  if (gens_.empty()) {
    // Greedy least-index generating set.
    std::vector<char> in(n_, 0);
    in[0] = 1;
    std::size_t covered = 1;
    for (std::size_t x = 1; x < n_ && covered < n_; ++x) {
      if (in[x]) continue;
      gens_.push_back(Elem(x));
      std::vector<Elem> queue;
      for (std::size_t y = 0; y < n_; ++y)
        if (in[y]) queue.push_back(Elem(y));
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (auto s : gens_) {
          const Elem z = mul(queue[i], s);
          if (!in[z]) {
            in[z] = 1;
            ++covered;
            queue.push_back(z);
          }
        }
    }
  }
}

Group Group::from_table(std::vector<Elem> table, std::size_t n, std::string label,
                        std::size_t cap) {
  if (n == 0) throw InvalidGroup("table must have at least one element");
  if (n > cap) throw OrderCapExceeded(cat("order ", n, " exceeds cap ", cap));
  if (table.size() != n * n) throw InvalidGroup("table is not n x n");
  for (auto v : table)
    if (v >= n) throw InvalidGroup(cat("table entry ", v, " out of range"));
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x] != x || table[x * n] != x)
      throw InvalidGroup("element 0 is not a two-sided identity");
  }
  // Latin square: every row and column a permutation.
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t x = 0; x < n; ++x) {
    ++stamp;
    for (std::size_t y = 0; y < n; ++y) {
      auto& s = seen[table[x * n + y]];
      if (s == stamp) throw InvalidGroup(cat("row ", x, " repeats an entry (no inverses)"));
      s = stamp;
    }
    ++stamp;
    for (std::size_t y = 0; y < n; ++y) {
      auto& s = seen[table[y * n + x]];
      if (s == stamp) throw InvalidGroup(cat("column ", x, " repeats an entry (no inverses)"));
      s = stamp;
    }
  }
  Group g;
  g.n_ = n;
  g.table_ = std::move(table);
  if (n <= 512) {
    if (!g.is_associative_exhaustive()) throw InvalidGroup("table is not associative");
  } else {
    // Light's test over a magma generating set built from left-associated
    // products; the verified set of "associative" elements is closed under
    // multiplication, so generators suffice.
    std::vector<Elem> gens;
    std::vector<char> in(n, 0);
    for (std::size_t x = 1; x < n; ++x) {
      if (in[x]) continue;
      gens.push_back(Elem(x));
      std::fill(in.begin(), in.end(), 0);
      in[0] = 1;
      std::vector<Elem> reached{0};
      for (std::size_t i = 0; i < reached.size(); ++i)
        for (auto s : gens) {
          const Elem z = g.mul(reached[i], s);
          if (!in[z]) {
            in[z] = 1;
            reached.push_back(z);
          }
        }
    }
    for (auto s : gens)
      for (std::size_t x = 0; x < n; ++x) {
        const Elem xs = g.mul(Elem(x), s);
        for (std::size_t y = 0; y < n; ++y)
          if (g.mul(xs, Elem(y)) != g.mul(Elem(x), g.mul(s, Elem(y))))
            throw InvalidGroup("table is not associative");
      }
  }
  g.finish(std::move(label));
  return g;
}

Group Group::from_permutations(const std::vector<Perm>& gens, std::size_t degree,
                               std::string label, std::size_t cap) {
  for (const auto& p : gens) {
    if (p.size() != degree) throw ParseError("generator has wrong degree");
    std::vector<char> hit(degree, 0);
    for (auto v : p) {
      if (v >= degree || hit[v]) throw ParseError("generator is not a permutation");
      hit[v] = 1;
    }
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0U);
  std::unordered_map<Perm, std::size_t, PermHash> index;
  std::vector<Perm> elems{id};
  index.emplace(id, 0);
  std::vector<std::size_t> parent{0}, via{0};
  const std::size_t k = gens.size();
  std::vector<std::size_t> right;  // right[x * k + s] = index of x * gens[s]
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      Perm prod(degree);
      for (std::size_t j = 0; j < degree; ++j) prod[j] = gens[s][elems[i][j]];
      auto [it, inserted] = index.emplace(prod, elems.size());
      if (inserted) {
        if (elems.size() + 1 > cap)
          throw OrderCapExceeded(cat("group order exceeds cap ", cap));
        elems.push_back(std::move(prod));
        parent.push_back(i);
        via.push_back(s);
      }
      right.push_back(it->second);
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    table[x * n] = Elem(x);
    for (std::size_t y = 1; y < n; ++y)
      table[x * n + y] = Elem(right[table[x * n + parent[y]] * k + via[y]]);
  }
  Group g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.perm_gens_ = gens;
  g.perm_degree_ = degree;
  for (const auto& p : gens) {
    const auto idx = Elem(index.at(p));
    if (idx != 0 && std::find(g.gens_.begin(), g.gens_.end(), idx) == g.gens_.end())
      g.gens_.push_back(idx);
  }
  g.finish(std::move(label));
  return g;
}

// -- Subgroup ----------------------------------------------------------------

Subgroup Subgroup::whole(std::size_t n) {
  Subgroup s(n);
  for (std::size_t x = 0; x < n; ++x) s.insert(Elem(x));
  return s;
}

Subgroup Subgroup::from_members(std::size_t n, const std::vector<Elem>& members) {
  Subgroup s(n);
  for (auto x : members) s.insert(x);
  return s;
}

std::size_t Subgroup::size() const {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Elem> Subgroup::members() const {
  std::vector<Elem> out;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    auto word = bits_[w];
    while (word) {
      out.push_back(Elem(w * 64 + static_cast<std::size_t>(std::countr_zero(word))));
      word &= word - 1;
    }
  }
  return out;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & ~other.bits_[w]) return false;
  return true;
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
  Subgroup r(n_);
  for (std::size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] & other.bits_[w];
  return r;
}

Subgroup Subgroup::unite(const Subgroup& other) const {
  Subgroup r(n_);
  for (std::size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] | other.bits_[w];
  return r;
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  return a.bits_ < b.bits_;
}

bool is_subgroup(const Group& g, const Subgroup& s) {
  if (s.universe() != g.order() || !s.contains(0)) return false;
  const auto m = s.members();
  for (auto x : m) {
    if (!s.contains(g.inv(x))) return false;
    for (auto y : m)
      if (!s.contains(g.mul(x, y))) return false;
  }
  return true;
}

// -- quotients and embeddings ------------------------------------------------

Subgroup QuotientMap::preimage(const Subgroup& in_quotient) const {
  Subgroup r(source->order());
  for (std::size_t x = 0; x < projection.size(); ++x)
    if (in_quotient.contains(projection[x])) r.insert(Elem(x));
  return r;
}

QuotientMap quotient_group(std::shared_ptr<const Group> gp, const Subgroup& n) {
  const Group& g = *gp;
  if (!is_subgroup(g, n)) throw InvalidGroup("quotient_group: N is not a subgroup");
  const auto members = n.members();
  for (std::size_t x = 0; x < g.order(); ++x)
    for (auto m : members)
      if (!n.contains(g.conj(m, Elem(x)))) throw NotNormal("quotient_group: N is not normal");

  const std::size_t order = g.order();
  std::vector<int> coset(order, -1);
  std::vector<Elem> reps;
  for (std::size_t x = 0; x < order; ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(Elem(x));
    for (auto m : members) coset[g.mul(Elem(x), m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      table[i * q + j] = Elem(coset[g.mul(reps[i], reps[j])]);
  std::vector<Elem> proj(order);
  for (std::size_t x = 0; x < order; ++x) proj[x] = Elem(coset[x]);
  auto quotient = Group::from_table(std::move(table), q,
                                    cat(g.label(), "/N", members.size()), std::max(q, kDefaultOrderCap));
  return QuotientMap{std::move(gp), std::move(quotient), std::move(proj), n};
}

Subgroup Embedding::image_of(const Subgroup& local, std::size_t parent_order) const {
  Subgroup r(parent_order);
  for (auto x : local.members()) r.insert(to_parent[x]);
  return r;
}

Subgroup Embedding::local_of(const Subgroup& parent_subset) const {
  Subgroup r(to_parent.size());
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    if (parent_subset.contains(to_parent[i])) r.insert(Elem(i));
  return r;
}

Embedding subgroup_as_group(const Group& g, const Subgroup& s, std::string label) {
  if (!is_subgroup(g, s)) throw InvalidGroup("subgroup_as_group: not a subgroup");
  auto to_parent = s.members();
  std::vector<int> to_local(g.order(), -1);
  for (std::size_t i = 0; i < to_parent.size(); ++i) to_local[to_parent[i]] = int(i);
  const std::size_t m = to_parent.size();
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = Elem(to_local[g.mul(to_parent[i], to_parent[j])]);
  if (label.empty()) label = cat(g.label(), "[", m, "]");
  return Embedding{Group::from_table(std::move(table), m, std::move(label), std::max(m, kDefaultOrderCap)),
                   std::move(to_parent), std::move(to_local)};
}

DirectProduct direct_product(const Group& a, const Group& b, std::size_t cap) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t n = na * nb;
  if (n > cap) throw OrderCapExceeded(cat("direct product order ", n, " exceeds cap ", cap));
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] =
          Elem(a.mul(Elem(x / nb), Elem(y / nb)) * nb + b.mul(Elem(x % nb), Elem(y % nb)));
  DirectProduct out{Group::from_table(std::move(table), n, cat(a.label(), "x", b.label()), cap),
                    Subgroup(n), Subgroup(n)};
  for (std::size_t x = 0; x < na; ++x) out.first.insert(Elem(x * nb));
  for (std::size_t y = 0; y < nb; ++y) out.second.insert(Elem(y));
  return out;
}

ElementData element_arithmetic(const Group& g, std::size_t x, std::size_t y) {
  if (x >= g.order() || y >= g.order()) throw ArgumentError("element index out of range");
  return {g.elem_order(Elem(x)), g.conj(Elem(x), Elem(y)), g.comm(Elem(x), Elem(y))};
}

// -- GRP format --------------------------------------------------------------

Group parse_grp(std::string_view text, std::string label, std::size_t cap) {
  std::vector<std::vector<std::size_t>> rows;
  std::string header;
  std::size_t header_arg = 0;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (header.empty()) {
      std::string extra;
      if (!(ls >> header >> header_arg) || (ls >> extra) ||
          (header != "perm" && header != "table"))
        throw ParseError(cat("line ", line_no, ": expected 'perm <d>' or 'table <n>'"));
      continue;
    }
    std::vector<std::size_t> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(cat("line ", line_no, ": not a non-negative integer: '", tok, "'"));
      row.push_back(v);
    }
    if (row.size() != header_arg)
      throw ParseError(cat("line ", line_no, ": expected ", header_arg, " entries, got ", row.size()));
    rows.push_back(std::move(row));
  }
  if (header.empty()) throw ParseError("missing 'perm' or 'table' header");

  if (header == "perm") {
    std::vector<Perm> gens;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Perm p;
      for (auto v : rows[r]) {
        if (v < 1 || v > header_arg)
          throw ParseError(cat("generator ", r + 1, ": image ", v, " outside 1..", header_arg));
        p.push_back(static_cast<std::uint32_t>(v - 1));
      }
      std::vector<char> hit(header_arg, 0);
      for (auto v : p) {
        if (hit[v]) throw ParseError(cat("generator ", r + 1, " is not a permutation"));
        hit[v] = 1;
      }
      gens.push_back(std::move(p));
    }
    return Group::from_permutations(gens, header_arg, std::move(label), cap);
  }
  if (header_arg > cap) throw OrderCapExceeded(cat("table order ", header_arg, " exceeds cap ", cap));
  if (rows.size() != header_arg)
    throw ParseError(cat("table: expected ", header_arg, " rows, got ", rows.size()));
  std::vector<Elem> table;
  table.reserve(header_arg * header_arg);
  for (const auto& row : rows)
    for (auto v : row) {
      if (v >= header_arg) throw InvalidGroup(cat("table entry ", v, " out of range"));
      table.push_back(Elem(v));
    }
  return Group::from_table(std::move(table), header_arg, std::move(label), cap);
}

Group load_grp_file(const std::string& path, std::size_t cap) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError(cat("cannot open ", path));
  std::ostringstream ss;
  ss << f.rdbuf();
  auto label = path;
  if (auto slash = label.find_last_of('/'); slash != std::string::npos) label = label.substr(slash + 1);
  if (auto dot = label.rfind(".grp"); dot != std::string::npos && dot + 4 == label.size())
    label = label.substr(0, dot);
  return parse_grp(ss.str(), label, cap);
}

std::string write_grp(const Group& g) {
  std::string out;
  if (!g.perm_generators().empty() || (g.order() == 1 && g.perm_degree() > 0)) {
    out += cat("perm ", g.perm_degree(), "\n");
    for (const auto& p : g.perm_generators()) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p[i] + 1);
      }
      out += '\n';
    }
    return out;
  }
  const std::size_t n = g.order();
  out += cat("table ", n, "\n");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y) out += ' ';
      out += std::to_string(g.mul(Elem(x), Elem(y)));
    }
    out += '\n';
  }
  return out;
}

// -- builtin families --------------------------------------------------------

Group cyclic_group(std::size_t n) {
  if (n == 0) throw ArgumentError("cyclic: n must be positive");
  if (n == 1) return Group::from_permutations({}, 1, "C1");
  return Group::from_permutations({cycle_perm(n, 0, n)}, n, cat("C", n));
}

Group dihedral_group(std::size_t order) {
  if (order < 2 || order % 2) throw ArgumentError("dihedral: order must be even and >= 2");
  const std::size_t n = order / 2;
  auto label = cat("D", order);
  if (n == 1) return Group::from_permutations({Perm{1, 0}}, 2, label);
  if (n == 2) return Group::from_permutations({Perm{1, 0, 3, 2}, Perm{2, 3, 0, 1}}, 4, label);
  Perm r(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = static_cast<std::uint32_t>((i + 1) % n);
    s[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return Group::from_permutations({r, s}, n, label);
}

Group quaternion_group(std::size_t order) {
  if (order < 8 || order % 4) throw ArgumentError("quaternion: order must be a multiple of 4, >= 8");
  // a^i b^j with a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1; index = i + 2m j.
  const std::size_t m = order / 4;
  const std::size_t h = 2 * m;
  auto mul = [h, m](std::size_t x, std::size_t y) {
    const std::size_t i = x % h, j = x / h, k = y % h, l = y / h;
    if (j == 0) return (i + k) % h + h * l;
    const std::size_t e = (i + h - k) % h;
    if (l == 0) return e + h;
    return (e + m) % h;
  };
  return Group::from_permutations(regular_perms(order, {1, h}, mul), order, cat("Q", order));
}

Group extraspecial_group(std::size_t p, bool plus) {
  if (!is_prime(p)) throw ArgumentError("extraspecial: p must be prime");
  const auto label = cat("ES", p * p * p, plus ? "+" : "-");
  if (p == 2) {
    auto g = plus ? dihedral_group(8) : quaternion_group(8);
    g.set_label(label);
    return g;
  }
  const std::size_t n = p * p * p;
  if (plus) {
    // Heisenberg: (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b'); index a + p b + p^2 c.
    auto mul = [p](std::size_t x, std::size_t y) {
      const std::size_t a = x % p, b = (x / p) % p, c = x / (p * p);
      const std::size_t a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
      return (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p);
    };
    return Group::from_permutations(regular_perms(n, {1, p}, mul), n, label);
  }
  // x^(p^2) = y^p = 1, y x y^-1 = x^(1-p); element x^i y^j at index i + p^2 j.
  const std::size_t q = p * p;
  auto mul = [p, q](std::size_t x, std::size_t y) {
    const std::size_t i = x % q, j = x / q, k = y % q, l = y / q;
    std::size_t t = k;
    for (std::size_t r = 0; r < j; ++r) t = (t * (q + 1 - p)) % q;
    return (i + t) % q + q * ((j + l) % p);
  };
  return Group::from_permutations(regular_perms(n, {1, q}, mul), n, label);
}

Group frobenius_group(std::size_t p, std::size_t q) {
  if (!is_prime(p)) throw ArgumentError("frobenius: p must be prime");
  if (q < 2 || (p - 1) % q != 0) throw ArgumentError("frobenius: need q >= 2 dividing p - 1");
  std::size_t a = 2;
  for (;; ++a) {
    std::size_t t = 1, o = 0;
    do {
      t = (t * a) % p;
      ++o;
    } while (t != 1);
    if (o == q) break;
  }
  Perm shift(p), scale(p);
  for (std::size_t i = 0; i < p; ++i) {
    shift[i] = static_cast<std::uint32_t>((i + 1) % p);
    scale[i] = static_cast<std::uint32_t>((i * a) % p);
  }
  return Group::from_permutations({shift, scale}, p, cat("F", p, ":", q));
}

Group symmetric_group(std::size_t n) {
  if (n < 1 || n > 6) throw ArgumentError("symmetric: n must be in 1..6");
  auto label = cat("S", n);
  if (n == 1) return Group::from_permutations({}, 1, label);
  Perm t(n);
  std::iota(t.begin(), t.end(), 0U);
  std::swap(t[0], t[1]);
  if (n == 2) return Group::from_permutations({t}, 2, label);
  return Group::from_permutations({cycle_perm(n, 0, n), t}, n, label);
}

Group elementary_abelian_group(std::size_t p, std::size_t k) {
  if (!is_prime(p)) throw ArgumentError("elementary: p must be prime");
  auto label = cat("E", p, "^", k);
  if (k == 0) return Group::from_permutations({}, 1, label);
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(cycle_perm(p * k, i * p, p));
  return Group::from_permutations(gens, p * k, label);
}

Group builtin_family(std::string_view name, const std::vector<std::string>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw ArgumentError(cat(name, ": expected ", count, " parameter(s), got ", params.size()));
  };
  if (name == "cyclic") {
    need(1);
    return cyclic_group(parse_size(params[0], "order"));
  }
  if (name == "dihedral") {
    need(1);
    return dihedral_group(parse_size(params[0], "order"));
  }
  if (name == "quaternion") {
    need(1);
    return quaternion_group(parse_size(params[0], "order"));
  }
  if (name == "extraspecial") {
    need(2);
    if (params[1] != "+" && params[1] != "-") throw ArgumentError("extraspecial: type must be + or -");
    return extraspecial_group(parse_size(params[0], "prime"), params[1] == "+");
  }
  if (name == "frobenius") {
    need(2);
    return frobenius_group(parse_size(params[0], "p"), parse_size(params[1], "q"));
  }
  if (name == "symmetric") {
    need(1);
    return symmetric_group(parse_size(params[0], "degree"));
  }
  if (name == "elementary") {
    need(2);
    return elementary_abelian_group(parse_size(params[0], "prime"), parse_size(params[1], "rank"));
  }
  throw ArgumentError(cat("unknown family '", name, "'"));
}

}  // namespace gvz

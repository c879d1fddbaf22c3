#include "gvz/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gvz {

namespace {

using u64 = std::uint64_t;

// Arithmetic in F_p for p < 2^31.
struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 b, u64 e) const {
    u64 r = 1;
    b %= p;
    while (e) {
      if (e & 1U) r = mul(r, b);
      b = mul(b, b);
      e >>= 1U;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p == 0) throw std::logic_error("F_p: inverse of zero");
    return pow(a, p - 2);
  }
  u64 from(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p);
    return static_cast<u64>(((v % m) + m) % m);
  }
};

using Matrix = std::vector<std::vector<u64>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& rows, const Fp& f) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const u64 inv = f.inv(rows[r][c]);
    for (auto& v : rows[r]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 factor = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of { y : A y = 0 } for a square matrix A.
Matrix nullspace(Matrix a, const Fp& f) {
  const std::size_t m = a.size();
  const auto pivots = rref(a, f);
  std::vector<int> pivot_row(m, -1);
  for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = int(i);
  Matrix basis;
  for (std::size_t free = 0; free < m; ++free) {
    if (pivot_row[free] >= 0) continue;
    std::vector<u64> y(m, 0);
    y[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) y[pivots[i]] = f.sub(0, a[i][free]);
    basis.push_back(std::move(y));
  }
  return basis;
}

// Characteristic polynomial det(x I - A), constant term first, via
// reduction to upper Hessenberg form.
std::vector<u64> charpoly(Matrix h, const Fp& f) {
  const std::size_t n = h.size();
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h[piv][c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      std::swap(h[piv], h[c + 1]);
      for (auto& row : h) std::swap(row[piv], row[c + 1]);
    }
    const u64 inv = f.inv(h[c + 1][c]);
    for (std::size_t k = c + 2; k < n; ++k) {
      const u64 u = f.mul(h[k][c], inv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[k][j] = f.sub(h[k][j], f.mul(u, h[c + 1][j]));
      for (std::size_t i = 0; i < n; ++i) h[i][c + 1] = f.add(h[i][c + 1], f.mul(u, h[i][k]));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i=1}^{k-1} h_{k-i,k} (prod_{j=k-i+1}^{k} h_{j,j-1}) p_{k-i-1}
  // with 1-based indices.
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  auto H = [&](std::size_t i, std::size_t j) { return h[i - 1][j - 1]; };
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<u64> cur(k + 1, 0);
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      cur[d + 1] = f.add(cur[d + 1], p[k - 1][d]);
      cur[d] = f.sub(cur[d], f.mul(H(k, k), p[k - 1][d]));
    }
    u64 prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = f.mul(prod, H(k - i + 1, k - i));
      if (prod == 0) break;
      const u64 coef = f.mul(H(k - i, k), prod);
      if (coef == 0) continue;
      for (std::size_t d = 0; d < p[k - i - 1].size(); ++d)
        cur[d] = f.sub(cur[d], f.mul(coef, p[k - i - 1][d]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

std::size_t primitive_root(std::size_t p) {
  const auto qs = prime_divisors(p - 1);
  const Fp f{p};
  for (std::size_t g = 2;; ++g) {
    bool ok = true;
    for (auto q : qs)
      if (f.pow(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

// One simultaneous-eigenspace candidate: RREF basis rows with pivot columns.
struct Space {
  Matrix basis;
  std::vector<std::size_t> pivots;
};

// Split `s` into eigenspaces of the class matrix `m` (r x r, row-major).
std::vector<Space> split(const Space& s, const std::vector<std::int64_t>& m, std::size_t r,
                         const Fp& f) {
  const std::size_t dim = s.basis.size();
  // Restriction: M b_t = sum_s A[s][t] b_s, and A[s][t] = (M b_t)[pivot_s].
  Matrix a(dim, std::vector<u64>(dim, 0));
  for (std::size_t row = 0; row < dim; ++row) {
    const std::size_t c = s.pivots[row];
    for (std::size_t t = 0; t < dim; ++t) {
      u64 acc = 0;
      for (std::size_t k = 0; k < r; ++k) {
        const auto mk = m[c * r + k];
        if (mk && s.basis[t][k]) acc = (acc + f.from(mk) * s.basis[t][k]) % f.p;
      }
      a[row][t] = acc;
    }
  }
  const auto cp = charpoly(a, f);
  std::vector<u64> roots;
  for (u64 lambda = 0; lambda < f.p; ++lambda) {
    u64 v = 0;
    for (std::size_t d = cp.size(); d-- > 0;) v = f.add(f.mul(v, lambda), cp[d]);
    if (v == 0) roots.push_back(lambda);
  }
  if (roots.size() <= 1) return {s};
  std::vector<Space> out;
  std::size_t total = 0;
  for (auto lambda : roots) {
    Matrix shifted = a;
    for (std::size_t i = 0; i < dim; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
    const auto ys = nullspace(std::move(shifted), f);
    Matrix vs;
    for (const auto& y : ys) {
      std::vector<u64> v(r, 0);
      for (std::size_t t = 0; t < dim; ++t) {
        if (y[t] == 0) continue;
        for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + y[t] * s.basis[t][k]) % f.p;
      }
      vs.push_back(std::move(v));
    }
    Space sub;
    sub.pivots = rref(vs, f);
    sub.basis = std::move(vs);
    total += sub.basis.size();
    out.push_back(std::move(sub));
  }
  if (total != dim) throw std::logic_error("character_table: class matrix not diagonalizable mod p");
  return out;
}

std::int64_t checked_i64(u64 v) { return static_cast<std::int64_t>(v); }

}  // namespace

ClassAlgebra class_constants(const Group& g, const ClassPartition& cp) {
  ClassAlgebra alg;
  const std::size_t r = cp.count();
  alg.r = r;
  alg.a.assign(r * r * r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    const Elem z = cp.classes[k].rep;
    for (std::size_t x = 0; x < g.order(); ++x) {
      const std::size_t i = cp.class_of[x];
      const std::size_t j = cp.class_of[g.mul(g.inv(Elem(x)), z)];
      ++alg.a[(i * r + j) * r + k];
    }
  }
  return alg;
}

std::vector<std::int64_t> class_matrix(const Group& g, const ClassPartition& cp, std::size_t i) {
  const std::size_t r = cp.count();
  std::vector<std::int64_t> m(r * r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    const Elem z = cp.classes[k].rep;
    for (auto x : cp.classes[i].members) ++m[cp.class_of[g.mul(g.inv(x), z)] * r + k];
  }
  return m;
}

Cyclotomic CharacterTable::norm_squared(std::size_t chi, std::size_t k) const {
  return chars[chi][k] * chars[chi][partition.classes[k].inverse_class];
}

std::size_t dixon_prime(std::size_t order, std::size_t exponent) {
  const auto root = static_cast<std::size_t>(std::sqrt(static_cast<double>(order)));
  std::size_t fl = root;
  while (fl * fl > order) --fl;
  while ((fl + 1) * (fl + 1) <= order) ++fl;
  const std::size_t bound = 2 * fl;
  for (std::size_t p = exponent + 1;; p += exponent)
    if (p > bound && is_prime(p)) return p;
}

CharacterTable character_table(std::shared_ptr<const Group> g) {
  auto cp = conjugacy_classes(*g);
  return character_table(std::move(g), std::move(cp));
}

CharacterTable character_table(std::shared_ptr<const Group> gp, ClassPartition cp) {
  const Group& g = *gp;
  const std::size_t n = g.order();
  const std::size_t r = cp.count();
  const std::size_t e = g.exponent();
  const std::size_t p = dixon_prime(n, e);
  const Fp f{p};
  const u64 zeta = f.pow(primitive_root(p), (p - 1) / e);

  // Simultaneous eigenspaces of the class matrices, split in ascending class order.
  Space full;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<u64> v(r, 0);
    v[i] = 1;
    full.basis.push_back(std::move(v));
    full.pivots.push_back(i);
  }
  std::vector<Space> spaces{full};
  for (std::size_t i = 1; i < r; ++i) {
    const bool done = std::all_of(spaces.begin(), spaces.end(),
                                  [](const Space& s) { return s.basis.size() == 1; });
    if (done) break;
    const auto m = class_matrix(g, cp, i);
    std::vector<Space> next;
    for (const auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& piece : split(s, m, r, f)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r)
    throw std::logic_error("character_table: eigenspaces did not split into lines");

  // Powers of each class representative, for the Fourier inversion.
  std::vector<std::vector<std::size_t>> power_classes(r);
  for (std::size_t k = 0; k < r; ++k) {
    const Elem rep = cp.classes[k].rep;
    Elem cur = 0;
    for (std::size_t l = 0; l < g.elem_order(rep); ++l) {
      power_classes[k].push_back(cp.class_of[cur]);
      cur = g.mul(cur, rep);
    }
  }

  CharacterTable t;
  t.group = gp;
  t.prime = p;
  for (const auto& s : spaces) {
    const auto& w = s.basis[0];  // central character, normalized so w[0] = 1
    if (w[0] != 1) throw std::logic_error("character_table: eigenvector has zero identity entry");
    // chi(1)^2 = |G| / sum_k w_k w_{k'} / |C_k|
    u64 sum = 0;
    for (std::size_t k = 0; k < r; ++k)
      sum = f.add(sum, f.mul(f.mul(w[k], w[cp.classes[k].inverse_class]), f.inv(cp.classes[k].size() % p)));
    const u64 d2 = f.mul(n % p, f.inv(sum));
    std::int64_t degree = 0;
    for (std::size_t d = 1; d * d <= n; ++d)
      if ((d * d) % p == d2) {
        degree = static_cast<std::int64_t>(d);
        break;
      }
    if (degree == 0) throw std::logic_error("character_table: no integer degree lifts mod p");
    std::vector<u64> modp(r);
    for (std::size_t k = 0; k < r; ++k)
      modp[k] = f.mul(f.mul(static_cast<u64>(degree), w[k]), f.inv(cp.classes[k].size() % p));

    std::vector<Cyclotomic> row;
    row.reserve(r);
    for (std::size_t k = 0; k < r; ++k) {
      const auto& pw = power_classes[k];
      const std::size_t o = pw.size();
      const u64 zo = f.pow(zeta, e / o);
      std::vector<u64> zpow(o);
      zpow[0] = 1;
      for (std::size_t l = 1; l < o; ++l) zpow[l] = f.mul(zpow[l - 1], zo);
      const u64 inv_o = f.inv(o % p);
      std::vector<std::int64_t> poly(e, 0);
      std::int64_t mult_sum = 0;
      for (std::size_t j = 0; j < o; ++j) {
        u64 acc = 0;
        for (std::size_t l = 0; l < o; ++l) acc = f.add(acc, f.mul(modp[pw[l]], zpow[(o - (j * l) % o) % o]));
        const u64 mj = f.mul(acc, inv_o);
        poly[j * (e / o)] = checked_i64(mj);
        mult_sum += checked_i64(mj);
      }
      if (mult_sum != degree) throw std::logic_error("character_table: eigenvalue multiplicities do not sum to the degree");
      row.push_back(Cyclotomic::from_polynomial(e, std::move(poly)));
    }
    t.chars.push_back(std::move(row));
    t.degrees.push_back(degree);
  }

  // Principal character first, then (degree, values).
  std::vector<std::size_t> order(r);
  for (std::size_t i = 0; i < r; ++i) order[i] = i;
  auto is_principal = [&](std::size_t c) {
    for (const auto& v : t.chars[c])
      if (v.as_integer() != std::optional<std::int64_t>{1}) return false;
    return true;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool pa = is_principal(a), pb = is_principal(b);
    if (pa != pb) return pa;
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    return t.chars[a] < t.chars[b];
  });
  CharacterTable sorted;
  sorted.group = gp;
  sorted.prime = p;
  sorted.partition = std::move(cp);
  for (auto i : order) {
    sorted.chars.push_back(std::move(t.chars[i]));
    sorted.degrees.push_back(t.degrees[i]);
  }
  return sorted;
}

bool rows_orthogonal(const CharacterTable& t) {
  const std::size_t r = t.size();
  const auto e = t.conductor();
  const auto n = static_cast<std::int64_t>(t.group->order());
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      Cyclotomic acc(e);
      for (std::size_t k = 0; k < r; ++k)
        acc += t.value(a, k) * t.value(b, t.partition.classes[k].inverse_class) * t.class_size(k);
      if (acc != Cyclotomic::integer(e, a == b ? n : 0)) return false;
    }
  return true;
}

bool columns_orthogonal(const CharacterTable& t) {
  const std::size_t r = t.size();
  const auto e = t.conductor();
  const auto n = static_cast<std::int64_t>(t.group->order());
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < r; ++l) {
      Cyclotomic acc(e);
      const std::size_t linv = t.partition.classes[l].inverse_class;
      for (std::size_t c = 0; c < r; ++c) acc += t.value(c, k) * t.value(c, linv);
      const std::int64_t expect = (k == l) ? n / t.class_size(k) : 0;
      if (acc != Cyclotomic::integer(e, expect)) return false;
    }
  return true;
}

}  // namespace gvz

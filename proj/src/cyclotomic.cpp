#include "gvz/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace gvz {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic: integer overflow");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic: integer overflow");
  return r;
}

// Exact division of `num` by the monic `den`; the remainder must vanish.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num,
                                       const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t lead = num[i];
    q[i - dn] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j)
      num[i - dn + j] = add_checked(num[i - dn + j], -mul_checked(lead, den[j]));
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
  return q;
}

// Reduce in place modulo the monic polynomial `mod`, leaving deg < deg(mod).
void reduce(std::vector<std::int64_t>& c, const std::vector<std::int64_t>& mod) {
  const std::size_t d = mod.size() - 1;
  for (std::size_t i = c.size(); i-- > d;) {
    const std::int64_t lead = c[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= d; ++j)
      c[i - d + j] = add_checked(c[i - d + j], -mul_checked(lead, mod[j]));
  }
  c.resize(d);
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::size_t e) {
  if (e == 0) throw std::invalid_argument("cyclotomic_polynomial: e must be positive");
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<std::vector<std::int64_t>>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(e); it != cache.end()) return *it->second;
  }
  std::vector<std::int64_t> poly(e + 1, 0);
  poly[0] = -1;
  poly[e] = 1;
  for (std::size_t d = 1; d < e; ++d)
    if (e % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(e, std::make_unique<std::vector<std::int64_t>>(std::move(poly)));
  return *it->second;
}

std::size_t euler_phi(std::size_t e) {
  std::size_t r = e;
  for (std::size_t p = 2; p * p <= e; ++p) {
    if (e % p) continue;
    while (e % p == 0) e /= p;
    r -= r / p;
  }
  if (e > 1) r -= r / e;
  return r;
}

Cyclotomic::Cyclotomic(std::size_t conductor) : e_(conductor) {
  if (conductor == 0) throw std::invalid_argument("Cyclotomic: conductor must be positive");
  c_.assign(euler_phi(conductor), 0);
}

Cyclotomic Cyclotomic::integer(std::size_t conductor, std::int64_t v) {
  Cyclotomic r(conductor);
  r.c_[0] = v;
  return r;
}

Cyclotomic Cyclotomic::root_of_unity(std::size_t conductor, std::int64_t k) {
  const auto e = static_cast<std::int64_t>(conductor);
  const auto m = static_cast<std::size_t>(((k % e) + e) % e);
  std::vector<std::int64_t> poly(m + 1, 0);
  poly[m] = 1;
  return from_polynomial(conductor, std::move(poly));
}

Cyclotomic Cyclotomic::from_polynomial(std::size_t conductor, std::vector<std::int64_t> coeffs) {
  Cyclotomic r(conductor);
  const auto& mod = cyclotomic_polynomial(conductor);
  if (coeffs.size() < mod.size() - 1) coeffs.resize(mod.size() - 1, 0);
  reduce(coeffs, mod);
  r.c_ = std::move(coeffs);
  return r;
}

bool Cyclotomic::is_zero() const {
  for (auto v : c_)
    if (v != 0) return false;
  return true;
}

std::optional<std::int64_t> Cyclotomic::as_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

Cyclotomic Cyclotomic::embed(std::size_t f) const {
  if (f % e_ != 0) throw std::invalid_argument("Cyclotomic::embed: conductor must divide target");
  if (f == e_) return *this;
  const std::size_t step = f / e_;
  std::vector<std::int64_t> poly((c_.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
  return from_polynomial(f, std::move(poly));
}

void Cyclotomic::check_conductor(const Cyclotomic& o) const {
  if (o.e_ != e_) throw std::invalid_argument("Cyclotomic: conductor mismatch");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_conductor(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = add_checked(c_[i], o.c_[i]);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_conductor(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = add_checked(c_[i], -o.c_[i]);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(std::int64_t k) {
  for (auto& v : c_) v = mul_checked(v, k);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  check_conductor(o);
  if (auto k = o.as_integer()) return *this *= *k;
  if (auto k = as_integer()) {
    Cyclotomic r = o;
    r *= *k;
    return *this = std::move(r);
  }
  std::vector<std::int64_t> prod(2 * c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) prod[i + j] = add_checked(prod[i + j], mul_checked(c_[i], o.c_[j]));
  }
  reduce(prod, cyclotomic_polynomial(e_));
  c_ = std::move(prod);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  r *= -1;
  return r;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (auto c = a.e_ <=> b.e_; c != 0) return c;
  return a.c_ <=> b.c_;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const auto v = c_[i];
    if (v == 0) continue;
    const auto mag = v < 0 ? -v : v;
    if (out.empty())
      out += v < 0 ? "-" : "";
    else
      out += v < 0 ? " - " : " + ";
    if (i == 0 || mag != 1) out += std::to_string(mag);
    if (i > 0) out += i == 1 ? "z" : "z^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace gvz

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gvz {

/// Coefficients (constant term first) of the e-th cyclotomic polynomial.
/// Computed by dividing x^e - 1 by the cyclotomic polynomials of the proper
/// divisors of e; results are cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::size_t e);

std::size_t euler_phi(std::size_t e);

/// Exact element of Z[x]/(Phi_e(x)), i.e. of Z[zeta_e], in the power basis
/// 1, zeta, ..., zeta^(phi(e)-1). The representation is canonical, so
/// equality and zero tests are coefficientwise.
///
/// Arithmetic is overflow-checked; overflow throws std::overflow_error.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(std::size_t conductor);

  static Cyclotomic integer(std::size_t conductor, std::int64_t v);
  /// zeta_e^k for any integer k.
  static Cyclotomic root_of_unity(std::size_t conductor, std::int64_t k);
  /// Reduce sum_i coeffs[i] x^i modulo Phi_e.
  static Cyclotomic from_polynomial(std::size_t conductor, std::vector<std::int64_t> coeffs);

  std::size_t conductor() const { return e_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  bool is_zero() const;
  /// The value as a rational integer, if it is one.
  std::optional<std::int64_t> as_integer() const;

  /// Image under zeta_e -> zeta_f^(f/e); requires e | f.
  Cyclotomic embed(std::size_t f) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(std::int64_t k);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, std::int64_t k) { return a *= k; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;
  /// Lexicographic on (conductor, coefficients); only used for ordering.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  /// e.g. "2", "-1 - z^2" with z = zeta_e.
  std::string to_string() const;

 private:
  void check_conductor(const Cyclotomic& o) const;

  std::size_t e_;
  std::vector<std::int64_t> c_;
};

}  // namespace gvz

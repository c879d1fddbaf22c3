#pragma once

#include <memory>
#include <vector>

#include "gvz/cyclotomic.hpp"
#include "gvz/group.hpp"
#include "gvz/structure.hpp"

namespace gvz {

/// Class algebra structure constants
///   a[i][j][k] = #{ (x, y) in C_i x C_j : x y = z_k }
/// for the fixed representative z_k of class k.
struct ClassAlgebra {
  std::size_t r = 0;
  std::vector<std::int64_t> a;  // (i * r + j) * r + k

  std::int64_t at(std::size_t i, std::size_t j, std::size_t k) const { return a[(i * r + j) * r + k]; }
};

ClassAlgebra class_constants(const Group& g, const ClassPartition& cp);

/// Row-major r x r matrix M_i with M_i[j][k] = a[i][j][k].
std::vector<std::int64_t> class_matrix(const Group& g, const ClassPartition& cp, std::size_t i);

/// Irreducible characters of a group with exact values in Z[zeta_e],
/// e = exponent. chars[c][k] is the value of character c on class k.
///
/// Characters are ordered with the principal character first, then by
/// (degree, lexicographic value vector).
struct CharacterTable {
  std::shared_ptr<const Group> group;
  ClassPartition partition;
  std::vector<std::vector<Cyclotomic>> chars;
  std::vector<std::int64_t> degrees;
  std::size_t prime = 0;  // modulus used by the Dixon computation

  std::size_t size() const { return chars.size(); }
  std::size_t conductor() const { return group->exponent(); }
  const Cyclotomic& value(std::size_t chi, std::size_t k) const { return chars[chi][k]; }
  /// chi(x) for an element index.
  const Cyclotomic& at(std::size_t chi, Elem x) const { return chars[chi][partition.class_of[x]]; }
  /// chi(g_k) * chi(g_k^-1) = |chi(g_k)|^2, a real cyclotomic.
  Cyclotomic norm_squared(std::size_t chi, std::size_t k) const;
  std::int64_t class_size(std::size_t k) const {
    return static_cast<std::int64_t>(partition.classes[k].size());
  }
};

/// The Dixon prime: least p = 1 (mod exponent) with p > 2 floor(sqrt(order)).
std::size_t dixon_prime(std::size_t order, std::size_t exponent);

CharacterTable character_table(std::shared_ptr<const Group> g);
CharacterTable character_table(std::shared_ptr<const Group> g, ClassPartition cp);

/// sum_k |C_k| chi(g_k) psi(g_k^-1) == |G| [chi == psi], exactly.
bool rows_orthogonal(const CharacterTable& t);
/// sum_chi chi(g_k) chi(g_l^-1) == |C_G(g_k)| [k == l], exactly.
bool columns_orthogonal(const CharacterTable& t);

}  // namespace gvz

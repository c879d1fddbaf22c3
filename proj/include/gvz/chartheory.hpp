#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gvz/chartab.hpp"

namespace gvz {

/// Kernel, center Z(chi) and vanishing-off subgroup V(chi) of one character.
struct CharAnalysis {
  std::size_t id = 0;
  std::int64_t degree = 0;
  Subgroup kernel;
  Subgroup zcenter;
  Subgroup voff;
  /// chi vanishes off Z(chi).
  bool central_type = false;
};

/// kernel = {g : chi(g) = chi(1)}, Z(chi) = {g : |chi(g)|^2 = chi(1)^2},
/// V(chi) = <g : chi(g) != 0>. Central type is decided twice
/// (Z(chi) = V(chi), and chi(1)^2 = |G : Z(chi)|); a disagreement throws
/// std::logic_error.
CharAnalysis analyze_char(const CharacterTable& t, std::size_t chi);
std::vector<CharAnalysis> analyze_all(const CharacterTable& t);

/// Class-level kernel membership, indexed by class id.
std::vector<bool> kernel_classes(const CharacterTable& t, std::size_t chi);
Subgroup kernel(const CharacterTable& t, std::size_t chi);

/// Irr(G | N): characters whose kernel does not contain N. N must be normal.
std::vector<std::size_t> irr_over(const CharacterTable& t, const Subgroup& n);
/// cd(G | N).
std::set<std::int64_t> cd_over(const CharacterTable& t, const Subgroup& n);

/// chi vanishes on every element outside `s`.
bool vanishes_off(const CharacterTable& t, std::size_t chi, const Subgroup& s);

struct RamificationReport {
  std::size_t chi = 0;
  Subgroup normal;
  /// (character of N, multiplicity in chi_N), positive multiplicities only.
  std::vector<std::pair<std::size_t, std::int64_t>> constituents;
  bool homogeneous = false;
  bool fully_ramified = false;
  /// psi^G = e chi for a constituent psi that induces homogeneously.
  std::optional<std::int64_t> e;
};

/// Restriction of characters of G to a normal subgroup N, with N's own table
/// computed once from its Cayley subtable.
class NormalRestriction {
 public:
  NormalRestriction(const CharacterTable& tg, const Subgroup& n);

  const CharacterTable& subgroup_table() const { return tn_; }
  const Embedding& embedding() const { return emb_; }

  /// <chi_N, psi> for every psi in Irr(N).
  std::vector<std::int64_t> multiplicities(std::size_t chi) const;
  RamificationReport report(std::size_t chi) const;

 private:
  const CharacterTable* tg_;
  Subgroup n_;
  Embedding emb_;
  CharacterTable tn_;
};

RamificationReport restriction_constituents(const CharacterTable& tg, const Subgroup& n,
                                            std::size_t chi);

/// Every irreducible character has central type.
bool is_gvz(const CharacterTable& t);
/// Some chi has chi(1)^2 = |G : Z(G)|.
bool is_central_type_group(const CharacterTable& t);
/// chi vanishes on G \ Z(G) (chi_Z(G) is always homogeneous).
bool fully_ramified_over_center(const CharacterTable& t, std::size_t chi);

/// Every member of Irr(G | N) has central type. N must be nontrivial and normal.
bool partial_gvz_wrt(const CharacterTable& t, const Subgroup& n);

/// R(G): intersection of ker(chi) over chi with V(chi) > Z(chi).
Subgroup r_subgroup(const CharacterTable& t);
/// U(G): intersection of ker(chi) over chi not fully ramified over Z(G).
Subgroup u_subgroup(const CharacterTable& t);

struct USeries {
  std::vector<Subgroup> terms;  // U_1 = U(G) <= U_2 <= ...; last term is U_inf
  const Subgroup& terminal() const { return terms.back(); }
};
/// Ascending series U_{i+1}/U_i = U(G/U_i) through explicit quotients.
USeries u_series(const CharacterTable& t);
inline Subgroup u_infinity(const CharacterTable& t) { return u_series(t).terminal(); }

/// Every g outside N is conjugate to all of gN (element test).
bool is_camina_pair(const CharacterTable& t, const Subgroup& n);
/// Every chi in Irr(G | N) vanishes on G \ N (character test).
bool is_camina_pair_by_characters(const CharacterTable& t, const Subgroup& n);
/// Z(G) > 1 and (G, Z(G)) is a Camina pair.
bool is_central_camina(const CharacterTable& t);

struct CaminaResult {
  bool is_camina_pair = false;
  bool is_central_camina = false;
};
CaminaResult camina_ops(const CharacterTable& t, const Subgroup& n);

/// Group-level summary used by the `analyze` command.
struct GroupAnalysis {
  std::vector<CharAnalysis> chars;
  bool gvz = false;
  bool central_type_group = false;
  std::size_t r_order = 0;
  std::size_t u_order = 0;
  std::size_t u_inf_order = 0;
  std::size_t flat_class_count = 0;
  bool camina_center = false;
};
GroupAnalysis analyze_group(const CharacterTable& t);

}  // namespace gvz

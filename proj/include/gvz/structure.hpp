#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gvz/group.hpp"

namespace gvz {

struct ConjugacyClass {
  Elem rep;                   // least member
  std::vector<Elem> members;  // sorted
  std::size_t inverse_class;
  std::size_t size() const { return members.size(); }
};

/// Conjugacy classes ordered by least representative (identity class first).
struct ClassPartition {
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of;
  /// power_map[p][k] = class of rep(k)^p, for every prime p <= exponent.
  std::map<std::size_t, std::vector<std::size_t>> power_map;

  std::size_t count() const { return classes.size(); }
  /// Subgroup-sized bitset of the union of a set of classes.
  Subgroup union_of(const std::vector<bool>& which) const;
  /// True iff `s` is a union of classes.
  bool is_union_of_classes(const Subgroup& s) const;
};

ClassPartition conjugacy_classes(const Group& g);

Subgroup center(const Group& g);
std::size_t centralizer_order(const Group& g, Elem x);

/// Subgroup generated by a set of elements.
Subgroup generated(const Group& g, const std::vector<Elem>& gens);
/// Smallest normal subgroup containing the elements.
Subgroup normal_closure(const Group& g, const std::vector<Elem>& elems);
/// [A, B] = < a^-1 b^-1 a b >.
Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b);
Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b);
inline Subgroup intersection(const Subgroup& a, const Subgroup& b) { return a.intersect(b); }
Subgroup derived_subgroup(const Group& g);

/// [g, G] = < comm(g, x) : x in G >.
Subgroup commutator_with_group(const Group& g, Elem x);

bool is_normal(const Group& g, const Subgroup& s);

/// cl(x) = x [x, G]  <=>  |cl(x)| = |[x, G]|.
bool is_flat(const Group& g, Elem x);
/// Flatness of every class, indexed by class id.
std::vector<bool> flat_classes(const Group& g, const ClassPartition& cp);

/// All normal subgroups sorted by (order, bitset).
std::vector<Subgroup> normal_subgroups(const Group& g, const ClassPartition& cp);
inline std::vector<Subgroup> normal_subgroups(const Group& g) {
  return normal_subgroups(g, conjugacy_classes(g));
}

enum class SeriesKind { LowerCentral, UpperCentral };

struct SeriesResult {
  SeriesKind kind;
  std::vector<Subgroup> terms;
  bool stabilized = true;
};

struct CentralSeries {
  SeriesResult lower;
  SeriesResult upper;
  bool is_nilpotent = false;
  std::optional<std::size_t> nilpotence_class;
  Subgroup hypercenter;
};

CentralSeries central_series(const Group& g);

/// Lower central series of a normal subgroup N computed inside G:
/// N_1 = N, N_{i+1} = [N_i, N]. Returns the class if N is nilpotent.
std::optional<std::size_t> nilpotence_class_in(const Group& g, const Subgroup& n);

Subgroup normalizer(const Group& g, const Subgroup& h);

/// Sylow p-subgroup by normalizer ascent from the least-index p-element.
Subgroup sylow_subgroup(const Group& g, std::size_t p);

/// Hall p'-subgroup {x : p does not divide |x|} of a nilpotent group.
/// Throws UnsupportedStructure if g is not nilpotent.
Subgroup hall_complement(const Group& g, std::size_t p);

struct SylowHall {
  Subgroup sylow;
  Subgroup hall_complement;
};
SylowHall sylow_and_hall(const Group& g, std::size_t p);

/// p-part of n.
std::size_t p_part(std::size_t n, std::size_t p);
bool is_prime_power(std::size_t n);

}  // namespace gvz

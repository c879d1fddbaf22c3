#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gvz {

/// Element index inside a Group. 16 bits suffice for the order cap.
using Elem = std::uint16_t;

inline constexpr std::size_t kDefaultOrderCap = 4096;

// Error types. Everything derives from std::runtime_error so callers that
// only want a message can catch that.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidGroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OrderCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotNormal : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedStructure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A permutation of {0..d-1}, stored as images. Products act left to right:
/// (a * b)(i) = b(a(i)).
using Perm = std::vector<std::uint32_t>;

/// Finite group given by its full Cayley table. Element 0 is the identity.
///
/// Immutable after construction; share freely across threads.
class Group {
 public:
  /// Build from a Cayley table (row-major, n*n). Validates the group axioms;
  /// associativity is exhaustive for n <= 512 and uses Light's test over a
  /// generating set above that.
  static Group from_table(std::vector<Elem> table, std::size_t n, std::string label,
                          std::size_t cap = kDefaultOrderCap);

  /// Breadth-first closure of permutation generators on `degree` points.
  /// Index 0 is the identity; new elements are appended in the order
  /// x * g for x in queue order and g in listed order.
  static Group from_permutations(const std::vector<Perm>& gens, std::size_t degree,
                                 std::string label, std::size_t cap = kDefaultOrderCap);

  std::size_t order() const { return n_; }
  Elem identity() const { return 0; }
  Elem mul(Elem x, Elem y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  Elem inv(Elem x) const { return inv_[x]; }
  std::size_t elem_order(Elem x) const { return order_of_[x]; }
  std::size_t exponent() const { return exponent_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Generating set: the listed generators for permutation groups, a greedy
  /// least-index generating set otherwise.
  const std::vector<Elem>& generators() const { return gens_; }

  /// Permutation generators and degree when the group came from
  /// permutations (empty otherwise).
  const std::vector<Perm>& perm_generators() const { return perm_gens_; }
  std::size_t perm_degree() const { return perm_degree_; }

  const std::vector<Elem>& table() const { return table_; }

  Elem conj(Elem x, Elem y) const { return mul(mul(inv(y), x), y); }
  Elem comm(Elem x, Elem y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  Elem pow(Elem x, std::size_t k) const;

  bool is_abelian() const;

  /// Exhaustive O(n^3) associativity check.
  bool is_associative_exhaustive() const;

 private:
  Group() = default;
  void finish(std::string label);

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<std::size_t> order_of_;
  std::size_t exponent_ = 1;
  std::vector<Elem> gens_;
  std::vector<Perm> perm_gens_;
  std::size_t perm_degree_ = 0;
  std::string label_;
};

/// Set of element indices of a parent group, stored as a bitset.
/// Whether it is closed (a subgroup) is checked by `is_subgroup`.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(std::size_t n) : n_(n), bits_((n + 63) / 64, 0) {}

  static Subgroup trivial(std::size_t n) {
    Subgroup s(n);
    s.insert(0);
    return s;
  }
  static Subgroup whole(std::size_t n);
  static Subgroup from_members(std::size_t n, const std::vector<Elem>& members);

  std::size_t universe() const { return n_; }
  bool contains(Elem x) const { return (bits_[x >> 6] >> (x & 63)) & 1U; }
  void insert(Elem x) { bits_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  std::size_t size() const;
  bool is_trivial() const { return size() == 1; }
  bool is_whole() const { return size() == n_; }

  std::vector<Elem> members() const;
  bool is_subset_of(const Subgroup& other) const;
  Subgroup intersect(const Subgroup& other) const;
  Subgroup unite(const Subgroup& other) const;

  const std::vector<std::uint64_t>& words() const { return bits_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) = default;
  /// Order by (size, bitset); the canonical sort for subgroup lists.
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// True iff `s` contains the identity and is closed under mul and inv.
bool is_subgroup(const Group& g, const Subgroup& s);

/// Projection G -> G/N; cosets indexed by their least member.
struct QuotientMap {
  std::shared_ptr<const Group> source;
  Group quotient;
  std::vector<Elem> projection;
  Subgroup kernel;

  /// Full preimage of a subset of the quotient.
  Subgroup preimage(const Subgroup& in_quotient) const;
};

/// Quotient by a normal subgroup. Throws NotNormal / InvalidGroup.
QuotientMap quotient_group(std::shared_ptr<const Group> g, const Subgroup& n);

/// A subgroup realized as a standalone Group. Local element i corresponds to
/// parent element `to_parent[i]`; members are taken in ascending parent order.
struct Embedding {
  Group group;
  std::vector<Elem> to_parent;
  std::vector<int> to_local;  // -1 for parent elements outside the subgroup

  Subgroup image_of(const Subgroup& local, std::size_t parent_order) const;
  Subgroup local_of(const Subgroup& parent_subset) const;
};

Embedding subgroup_as_group(const Group& g, const Subgroup& s, std::string label = {});

/// Direct product with element (a, b) at index a * |B| + b.
struct DirectProduct {
  Group group;
  Subgroup first;   // A x 1
  Subgroup second;  // 1 x B
};

DirectProduct direct_product(const Group& a, const Group& b, std::size_t cap = kDefaultOrderCap);

/// Element helpers with range checking.
struct ElementData {
  std::size_t order;
  Elem conj;  // y^-1 x y
  Elem comm;  // x^-1 y^-1 x y
};
ElementData element_arithmetic(const Group& g, std::size_t x, std::size_t y);

// GRP text format ------------------------------------------------------------

/// Parse a GRP document (`perm <d>` or `table <n>` header).
Group parse_grp(std::string_view text, std::string label, std::size_t cap = kDefaultOrderCap);
Group load_grp_file(const std::string& path, std::size_t cap = kDefaultOrderCap);

/// Serialize: permutation form when the group carries permutation
/// generators, table form otherwise. LF line endings, single spaces.
std::string write_grp(const Group& g);

// Builtin families -----------------------------------------------------------

Group cyclic_group(std::size_t n);
/// Dihedral group of the given order (2n).
Group dihedral_group(std::size_t order);
/// Generalized quaternion / dicyclic group of order 4n (n >= 2).
Group quaternion_group(std::size_t order);
/// Extraspecial group of order p^3; plus = exponent p (D8 for p = 2),
/// minus = exponent p^2 (Q8 for p = 2).
Group extraspecial_group(std::size_t p, bool plus);
/// x -> x + 1 and x -> a x on Z/p with a the least element of order q.
Group frobenius_group(std::size_t p, std::size_t q);
Group symmetric_group(std::size_t n);
Group elementary_abelian_group(std::size_t p, std::size_t k);

/// Dispatch by family name: cyclic n | dihedral 2n | quaternion 4n |
/// extraspecial p {+,-} | frobenius p q | symmetric n | elementary p k.
Group builtin_family(std::string_view name, const std::vector<std::string>& params);

// Small number theory helpers shared across modules.
bool is_prime(std::size_t n);
std::vector<std::size_t> prime_divisors(std::size_t n);

}  // namespace gvz

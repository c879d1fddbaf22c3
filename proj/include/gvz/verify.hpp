#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gvz/chartheory.hpp"

namespace gvz {

/// Checkable statements. Those marked (N) are quantified over the
/// nontrivial proper normal subgroups of each group.
enum class Statement {
  A,                    // (N) Irr(G|N) central type => G nilpotent, N flat
  B,                    // (N) ... and |N| not a prime power => G is GVZ
  C,                    // (N) ... and N a p-group => Hall p-complement is GVZ
  D,                    // (N) ... => c(N) <= |cd(G|N)|, c(N) of N as a group
  E,                    // (N) N flat in G => N <= Z_inf(G)
  F,                    // (N) Irr(G|N) fully ramified over N => p-group, N = Z(G)
  TrivialInt,           // (N) intersection of kernels over Irr(G|N) is 1
  CenterInt,            // Z(G/(N cap M)) = (Z_N cap Z_M)/(N cap M) for all pairs
  PartialGvzSylow,      // (N) Sylow S: S cap Z(G) = Z(S), characters over N central type
  Flat,                 // (N) Irr(G|[N,G]) central type => N flat
  FlatCorollary,        // (N) N \ Z(N) flat => N nilpotent
  Nilp2,                // (N) Irr(G|N) central type <=> G = S x Q decomposition
  Taketa,               // (N) c(N) <= |cd(G|N)| via [N_i, N] inside G
  RStructure,           // R(G) = G <=> GVZ; S x Q form; R(G/R(G)) = 1
  RLtDerived,           // not GVZ => R(G) < G'
  DirectProductR,       // R(M x N) = 1 or R(M) for non-GVZ M
  UInfLeR,              // U_inf(G) <= R(G), Irr(G|U_inf) central type
  CaminaCor,            // central Camina pair <=> Irr(G|N) fully ramified over some N
  GvzClassBound,        // GVZ => c(G) <= |cd(G)|
  InvariantCharRemark,  // (N) N flat => G-invariant Irr(N) central type
};

inline constexpr std::size_t kStatementCount = 20;

std::string_view statement_id(Statement s);
std::optional<Statement> parse_statement(std::string_view id);
std::vector<Statement> all_statements();
bool quantified_over_normal(Statement s);

struct NormalDescriptor {
  std::size_t index;  // position in the group's sorted normal-subgroup list
  std::size_t order;
};

struct VerdictRecord {
  Statement statement;
  std::string group;
  std::size_t group_index = 0;  // position in the corpus
  std::optional<NormalDescriptor> normal;
  bool hypothesis_holds = false;
  std::optional<bool> conclusion_holds;  // nullopt when the hypothesis fails
  std::string witness;

  bool violation() const { return hypothesis_holds && conclusion_holds == false; }
  bool substantive() const { return hypothesis_holds; }
};

/// Everything the checks need about one group, computed once.
/// Not thread-safe; each worker owns its own context.
class GroupContext {
 public:
  GroupContext(std::shared_ptr<const Group> g, std::string label);

  /// Optional direct-product structure (G = first x second, index a |B| + b).
  void set_factors(std::shared_ptr<const Group> first, std::shared_ptr<const Group> second);

  const Group& group() const { return *group_; }
  std::shared_ptr<const Group> group_ptr() const { return group_; }
  const std::string& label() const { return label_; }
  const CharacterTable& table() const { return table_; }
  const std::vector<CharAnalysis>& analyses() const { return analyses_; }
  const std::vector<Subgroup>& normals() const { return normals_; }
  const CentralSeries& series() const { return series_; }
  const Subgroup& center() const { return center_; }
  bool gvz() const { return gvz_; }

  std::vector<std::size_t> irr_over(const Subgroup& n) const;
  bool partial_gvz(const Subgroup& n) const;
  bool all_flat(const Subgroup& n) const;
  bool elem_flat(Elem x) const { return flat_[table_.partition.class_of[x]]; }

  const NormalRestriction& restriction(const Subgroup& n);
  const CharacterTable& subgroup_table(const Subgroup& s);
  const Embedding& subgroup_embedding(const Subgroup& s);
  const Subgroup& sylow(std::size_t p);
  const Subgroup& r_subgroup();
  const Subgroup& u_infinity();

  std::shared_ptr<const Group> first_factor() const { return first_; }
  std::shared_ptr<const Group> second_factor() const { return second_; }

 private:
  std::shared_ptr<const Group> group_;
  std::string label_;
  CharacterTable table_;
  std::vector<CharAnalysis> analyses_;
  std::vector<std::vector<bool>> kernel_classes_;
  std::vector<Subgroup> normals_;
  CentralSeries series_;
  Subgroup center_;
  std::vector<bool> flat_;
  bool gvz_ = false;
  std::map<Subgroup, std::unique_ptr<NormalRestriction>> restrictions_;
  std::map<Subgroup, std::pair<std::unique_ptr<Embedding>, std::unique_ptr<CharacterTable>>> subtables_;
  std::map<std::size_t, Subgroup> sylows_;
  std::optional<Subgroup> r_;
  std::optional<Subgroup> u_inf_;
  std::shared_ptr<const Group> first_, second_;
};

/// Evaluate one statement. For N-quantified statements `normal_index`
/// selects the subgroup from ctx.normals(); it must be nontrivial and proper.
VerdictRecord check_statement(Statement s, GroupContext& ctx,
                              std::optional<std::size_t> normal_index = std::nullopt);

/// Convenience overload that builds the context. N must be a nontrivial
/// proper normal subgroup when the statement is quantified over N.
VerdictRecord check_statement(Statement s, std::shared_ptr<const Group> g,
                              std::optional<Subgroup> n = std::nullopt);

struct CorpusEntry {
  std::string label;
  std::string source;  // "builtin: ..." or a fixture path
  std::function<std::shared_ptr<const Group>()> load;
  /// Set for direct products built from two corpus factors.
  std::function<std::pair<std::shared_ptr<const Group>, std::shared_ptr<const Group>>()> factors;
};

using Corpus = std::vector<CorpusEntry>;

/// Builtin families plus any smallgroup_<order>_<id>.grp files found in
/// `fixtures_dir` (and fixture_128_71 x Q8 when that file is present).
Corpus builtin_corpus(const std::optional<std::string>& fixtures_dir = std::nullopt);

struct RunOptions {
  std::vector<Statement> statements = all_statements();
  /// Minimum substantive passes per statement; default 1 each.
  std::map<Statement, std::size_t> min_substantive;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct StatementTally {
  std::size_t substantive = 0;
  std::size_t vacuous = 0;
  std::size_t violations = 0;
};

struct RunReport {
  std::vector<VerdictRecord> records;  // sorted by (statement, group, N)
  std::vector<std::pair<std::string, std::string>> load_errors;  // (label, message)
  std::map<Statement, StatementTally> tallies;
  std::vector<Statement> below_threshold;

  std::size_t violations() const;
  /// 0 no violations, 1 violations, 2 load errors.
  int exit_code() const;
};

RunReport run_corpus(const Corpus& corpus, const RunOptions& opts = {});

}  // namespace gvz

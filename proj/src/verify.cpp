#include "gvz/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <filesystem>
#include <sstream>
#include <thread>
#include <tuple>

#include "gvz/fixtures.hpp"

namespace gvz {

namespace {

constexpr std::array<std::pair<Statement, std::string_view>, kStatementCount> kIds{{
    {Statement::A, "A"},
    {Statement::B, "B"},
    {Statement::C, "C"},
    {Statement::D, "D"},
    {Statement::E, "E"},
    {Statement::F, "F"},
    {Statement::TrivialInt, "trivial-int"},
    {Statement::CenterInt, "center-int"},
    {Statement::PartialGvzSylow, "partial-gvz-sylow"},
    {Statement::Flat, "flat"},
    {Statement::FlatCorollary, "flat-corollary"},
    {Statement::Nilp2, "nilp2"},
    {Statement::Taketa, "taketa"},
    {Statement::RStructure, "r-structure"},
    {Statement::RLtDerived, "r-lt-derived"},
    {Statement::DirectProductR, "direct-product-r"},
    {Statement::UInfLeR, "u-inf-le-r"},
    {Statement::CaminaCor, "camina-cor"},
    {Statement::GvzClassBound, "gvz-class-bound"},
    {Statement::InvariantCharRemark, "invariant-char-remark"},
}};

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

/// A small generating set of a subgroup (greedy over ascending members).
std::vector<Elem> subgroup_generators(const Group& g, const Subgroup& s) {
  std::vector<Elem> gens;
  auto closure = Subgroup::trivial(g.order());
  for (auto x : s.members()) {
    if (closure.contains(x)) continue;
    gens.push_back(x);
    closure = generated(g, gens);
  }
  return gens;
}

/// Every character of `t` outside whose kernel `local` lies has central type.
/// Returns the first offending character id, if any.
std::optional<std::size_t> first_noncentral_over(const CharacterTable& t, const Subgroup& local) {
  for (std::size_t c = 0; c < t.size(); ++c)
    if (!local.is_subset_of(kernel(t, c)) && !analyze_char(t, c).central_type) return c;
  return std::nullopt;
}

std::optional<std::size_t> first_noncentral(const CharacterTable& t) {
  for (std::size_t c = 0; c < t.size(); ++c)
    if (!analyze_char(t, c).central_type) return c;
  return std::nullopt;
}

struct Decomposition {
  std::size_t p;
  Subgroup s;  // normal Sylow p-subgroup
  Subgroup q;  // p'-elements, a normal complement centralizing S
};

/// G = S x Q with S the Sylow p-subgroup and Q the p'-elements, if it holds.
std::optional<Decomposition> sylow_direct_factor(GroupContext& ctx, std::size_t p) {
  const Group& g = ctx.group();
  const auto& s = ctx.sylow(p);
  if (!is_normal(g, s)) return std::nullopt;
  Subgroup q(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.elem_order(static_cast<Elem>(x)) % p != 0) q.insert(static_cast<Elem>(x));
  if (!is_subgroup(g, q) || s.size() * q.size() != g.order()) return std::nullopt;
  const auto qgens = subgroup_generators(g, q);
  for (auto x : s.members())
    for (auto y : qgens)
      if (g.mul(x, y) != g.mul(y, x)) return std::nullopt;
  return Decomposition{p, s, q};
}

bool table_is_gvz(const CharacterTable& t) { return !first_noncentral(t).has_value(); }

}  // namespace

std::string_view statement_id(Statement s) {
  for (const auto& [st, id] : kIds)
    if (st == s) return id;
  throw ArgumentError("unknown statement");
}

std::optional<Statement> parse_statement(std::string_view id) {
  for (const auto& [st, sid] : kIds)
    if (sid == id) return st;
  return std::nullopt;
}

std::vector<Statement> all_statements() {
  std::vector<Statement> out;
  for (const auto& entry : kIds) out.push_back(entry.first);
  return out;
}

bool quantified_over_normal(Statement s) {
  switch (s) {
    case Statement::A:
    case Statement::B:
    case Statement::C:
    case Statement::D:
    case Statement::E:
    case Statement::F:
    case Statement::TrivialInt:
    case Statement::PartialGvzSylow:
    case Statement::Flat:
    case Statement::FlatCorollary:
    case Statement::Nilp2:
    case Statement::Taketa:
    case Statement::InvariantCharRemark:
      return true;
    default:
      return false;
  }
}

// -- context -----------------------------------------------------------------

GroupContext::GroupContext(std::shared_ptr<const Group> g, std::string label)
    : group_(std::move(g)), label_(std::move(label)), table_(character_table(group_)) {
  analyses_ = analyze_all(table_);
  for (std::size_t c = 0; c < table_.size(); ++c) kernel_classes_.push_back(kernel_classes(table_, c));
  normals_ = normal_subgroups(*group_, table_.partition);
  series_ = central_series(*group_);
  center_ = gvz::center(*group_);
  flat_ = flat_classes(*group_, table_.partition);
  gvz_ = std::all_of(analyses_.begin(), analyses_.end(), [](const auto& a) { return a.central_type; });
}

void GroupContext::set_factors(std::shared_ptr<const Group> first, std::shared_ptr<const Group> second) {
  if (first->order() * second->order() != group_->order())
    throw ArgumentError("set_factors: factor orders do not multiply to |G|");
  first_ = std::move(first);
  second_ = std::move(second);
}

std::vector<std::size_t> GroupContext::irr_over(const Subgroup& n) const {
  std::vector<std::size_t> out;
  const auto& cp = table_.partition;
  for (std::size_t c = 0; c < table_.size(); ++c) {
    for (auto x : n.members())
      if (!kernel_classes_[c][cp.class_of[x]]) {
        out.push_back(c);
        break;
      }
  }
  return out;
}

bool GroupContext::partial_gvz(const Subgroup& n) const {
  for (auto c : irr_over(n))
    if (!analyses_[c].central_type) return false;
  return true;
}

bool GroupContext::all_flat(const Subgroup& n) const {
  for (auto x : n.members())
    if (!elem_flat(x)) return false;
  return true;
}

const NormalRestriction& GroupContext::restriction(const Subgroup& n) {
  auto it = restrictions_.find(n);
  if (it == restrictions_.end())
    it = restrictions_.emplace(n, std::make_unique<NormalRestriction>(table_, n)).first;
  return *it->second;
}

const Embedding& GroupContext::subgroup_embedding(const Subgroup& s) {
  auto it = subtables_.find(s);
  if (it == subtables_.end()) {
    auto emb = std::make_unique<Embedding>(subgroup_as_group(*group_, s));
    it = subtables_.emplace(s, std::make_pair(std::move(emb), nullptr)).first;
  }
  return *it->second.first;
}

const CharacterTable& GroupContext::subgroup_table(const Subgroup& s) {
  const auto& emb = subgroup_embedding(s);
  auto& slot = subtables_.at(s).second;
  if (!slot) slot = std::make_unique<CharacterTable>(character_table(std::make_shared<Group>(emb.group)));
  return *slot;
}

const Subgroup& GroupContext::sylow(std::size_t p) {
  auto it = sylows_.find(p);
  if (it == sylows_.end()) it = sylows_.emplace(p, sylow_subgroup(*group_, p)).first;
  return it->second;
}

const Subgroup& GroupContext::r_subgroup() {
  if (!r_) r_ = gvz::r_subgroup(table_);
  return *r_;
}

const Subgroup& GroupContext::u_infinity() {
  if (!u_inf_) u_inf_ = gvz::u_infinity(table_);
  return *u_inf_;
}

// -- checks ------------------------------------------------------------------

namespace {

struct Verdict {
  bool hypothesis = false;
  std::optional<bool> conclusion;
  std::string witness;
};

Verdict vacuous(std::string why = {}) { return {false, std::nullopt, std::move(why)}; }

Verdict decided(bool ok, std::string witness = {}) { return {true, ok, std::move(witness)}; }

std::string describe_noncentral(GroupContext& ctx, const Subgroup& n) {
  for (auto c : ctx.irr_over(n))
    if (!ctx.analyses()[c].central_type) return cat("chi", c, " not central type");
  return {};
}

std::optional<Elem> first_nonflat(const GroupContext& ctx, const Subgroup& n) {
  for (auto x : n.members())
    if (!ctx.elem_flat(x)) return x;
  return std::nullopt;
}

Verdict check_a(GroupContext& ctx, const Subgroup& n) {
  if (!ctx.partial_gvz(n)) return vacuous(describe_noncentral(ctx, n));
  if (!ctx.series().is_nilpotent) return decided(false, "G not nilpotent");
  if (auto x = first_nonflat(ctx, n)) return decided(false, cat("element ", *x, " not flat"));
  return decided(true);
}

Verdict check_b(GroupContext& ctx, const Subgroup& n) {
  if (is_prime_power(n.size())) return vacuous("|N| is a prime power");
  if (!ctx.partial_gvz(n)) return vacuous(describe_noncentral(ctx, n));
  if (auto c = first_noncentral(ctx.table())) return decided(false, cat("chi", *c, " not central type"));
  return decided(true);
}

Verdict check_c(GroupContext& ctx, const Subgroup& n) {
  if (!is_prime_power(n.size())) return vacuous("N is not a p-group");
  if (!ctx.partial_gvz(n)) return vacuous(describe_noncentral(ctx, n));
  const auto p = prime_divisors(n.size()).front();
  if (!ctx.series().is_nilpotent) return decided(false, "G not nilpotent; no normal Hall complement");
  const auto q = hall_complement(ctx.group(), p);
  const auto& tq = ctx.subgroup_table(q);
  if (auto c = first_noncentral(tq))
    return decided(false, cat("Hall ", p, "'-subgroup: chi", *c, " not central type"));
  return decided(true, cat("p=", p, " |Q|=", q.size()));
}

Verdict check_d(GroupContext& ctx, const Subgroup& n) {
  if (!ctx.partial_gvz(n)) return vacuous(describe_noncentral(ctx, n));
  const auto& emb = ctx.subgroup_embedding(n);
  const auto cls = central_series(emb.group).nilpotence_class;
  std::set<std::int64_t> cd;
  for (auto c : ctx.irr_over(n)) cd.insert(ctx.table().degrees[c]);
  if (!cls) return decided(false, "N not nilpotent");
  return decided(*cls <= cd.size(), cat("c(N)=", *cls, " |cd(G|N)|=", cd.size()));
}

Verdict check_taketa(GroupContext& ctx, const Subgroup& n) {
  if (!ctx.partial_gvz(n)) return vacuous(describe_noncentral(ctx, n));
  const auto cls = nilpotence_class_in(ctx.group(), n);
  std::set<std::int64_t> cd;
  for (auto c : ctx.irr_over(n)) cd.insert(ctx.table().degrees[c]);
  if (!cls) return decided(false, "N not nilpotent");
  return decided(*cls <= cd.size(), cat("c(N)=", *cls, " |cd(G|N)|=", cd.size()));
}

Verdict check_e(GroupContext& ctx, const Subgroup& n) {
  if (auto x = first_nonflat(ctx, n)) return vacuous(cat("element ", *x, " not flat"));
  if (!n.is_subset_of(ctx.series().hypercenter)) return decided(false, "N not in hypercenter");
  return decided(true);
}

/// First character of Irr(G|N) not fully ramified over N, if any.
std::optional<std::size_t> first_not_fully_ramified(GroupContext& ctx, const Subgroup& n) {
  const auto over = ctx.irr_over(n);
  for (auto c : over)
    if (!vanishes_off(ctx.table(), c, n)) return c;
  const auto& res = ctx.restriction(n);
  for (auto c : over)
    if (!res.report(c).fully_ramified) return c;
  return std::nullopt;
}

Verdict check_f(GroupContext& ctx, const Subgroup& n) {
  if (auto c = first_not_fully_ramified(ctx, n)) return vacuous(cat("chi", *c, " not fully ramified"));
  if (!is_prime_power(ctx.group().order())) return decided(false, "G not a p-group");
  if (n != ctx.center()) return decided(false, "N != Z(G)");
  return decided(true);
}

Verdict check_trivial_int(GroupContext& ctx, const Subgroup& n) {
  auto k = Subgroup::whole(ctx.group().order());
  for (auto c : ctx.irr_over(n)) k = k.intersect(ctx.analyses()[c].kernel);
  return decided(k.is_trivial(), cat("|K|=", k.size()));
}

Verdict check_center_int(GroupContext& ctx) {
  const auto g = ctx.group_ptr();
  const auto& normals = ctx.normals();
  std::map<Subgroup, std::size_t> index;
  std::vector<Subgroup> zpre;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    index.emplace(normals[i], i);
    const auto q = quotient_group(g, normals[i]);
    zpre.push_back(q.preimage(center(q.quotient)));
  }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (std::size_t j = i; j < normals.size(); ++j) {
      const auto meet = normals[i].intersect(normals[j]);
      const auto it = index.find(meet);
      if (it == index.end()) return decided(false, cat("N", i, " cap N", j, " not in the lattice"));
      if (zpre[it->second] != zpre[i].intersect(zpre[j]))
        return decided(false, cat("pair (N", i, ", N", j, ")"));
      ++pairs;
    }
  return decided(true, cat(pairs, " pairs"));
}

Verdict check_partial_gvz_sylow(GroupContext& ctx, const Subgroup& n) {
  if (!ctx.partial_gvz(n)) return vacuous(describe_noncentral(ctx, n));
  const Group& g = ctx.group();
  for (auto p : prime_divisors(g.order())) {
    const auto s = ctx.sylow(p);
    const auto& emb = ctx.subgroup_embedding(s);
    const auto& ts = ctx.subgroup_table(s);
    const auto zs = emb.image_of(center(emb.group), g.order());
    if (s.intersect(ctx.center()) != zs) return decided(false, cat("p=", p, ": S cap Z(G) != Z(S)"));
    for (std::size_t c = 0; c < ts.size(); ++c) {
      const auto ker = emb.image_of(kernel(ts, c), g.order());
      if (!n.is_subset_of(ker) && !analyze_char(ts, c).central_type)
        return decided(false, cat("p=", p, ": theta", c, " over N not central type"));
    }
    if (s.intersect(n).is_trivial())
      if (auto c = first_noncentral(ts))
        return decided(false, cat("p=", p, ": S cap N = 1 but theta", *c, " not central type"));
  }
  return decided(true);
}

Verdict check_flat(GroupContext& ctx, const Subgroup& n) {
  const auto ng = commutator_subgroup(ctx.group(), n, Subgroup::whole(ctx.group().order()));
  if (!ctx.partial_gvz(ng)) return vacuous(describe_noncentral(ctx, ng));
  if (auto x = first_nonflat(ctx, n)) return decided(false, cat("element ", *x, " not flat"));
  return decided(true, cat("|[N,G]|=", ng.size()));
}

Verdict check_flat_corollary(GroupContext& ctx, const Subgroup& n) {
  const Group& g = ctx.group();
  const auto gens = subgroup_generators(g, n);
  for (auto x : n.members()) {
    const bool central_in_n =
        std::all_of(gens.begin(), gens.end(), [&](Elem y) { return g.mul(x, y) == g.mul(y, x); });
    if (!central_in_n && !ctx.elem_flat(x)) return vacuous(cat("element ", x, " not flat"));
  }
  const auto cls = nilpotence_class_in(g, n);
  if (!cls) return decided(false, "N not nilpotent");
  return decided(true, cat("c(N)=", *cls));
}

/// Right-hand side of the nilp2 equivalence; returns the witnessing prime.
std::optional<std::size_t> nilp2_rhs(GroupContext& ctx, const Subgroup& n) {
  for (auto p : prime_divisors(ctx.group().order())) {
    const auto d = sylow_direct_factor(ctx, p);
    if (!d) continue;
    const auto sn = d->s.intersect(n);
    if (sn.is_trivial()) continue;
    if (!table_is_gvz(ctx.subgroup_table(d->q))) continue;
    const auto& emb = ctx.subgroup_embedding(d->s);
    if (first_noncentral_over(ctx.subgroup_table(d->s), emb.local_of(sn))) continue;
    return p;
  }
  return std::nullopt;
}

Verdict check_nilp2(GroupContext& ctx, const Subgroup& n) {
  const bool lhs = ctx.partial_gvz(n);
  const auto rhs = nilp2_rhs(ctx, n);
  if (!lhs && !rhs) return vacuous("neither side holds");
  if (lhs != rhs.has_value())
    return decided(false, lhs ? "Irr(G|N) central type but no S x Q decomposition"
                              : cat("decomposition at p=", *rhs, " but Irr(G|N) not central type"));
  return decided(true, cat("p=", *rhs));
}

Verdict check_r_structure(GroupContext& ctx) {
  const Group& g = ctx.group();
  const auto& r = ctx.r_subgroup();
  if (r.is_whole() != ctx.gvz()) return decided(false, "R(G) = G disagrees with GVZ");
  if (!r.is_trivial() && !ctx.gvz()) {
    bool found = false;
    for (auto p : prime_divisors(g.order())) {
      const auto d = sylow_direct_factor(ctx, p);
      if (!d || !table_is_gvz(ctx.subgroup_table(d->q))) continue;
      const auto& emb = ctx.subgroup_embedding(d->s);
      const auto rs = emb.image_of(gvz::r_subgroup(ctx.subgroup_table(d->s)), g.order());
      if (rs == r && !rs.is_trivial() && rs != d->s) {
        found = true;
        break;
      }
    }
    if (!found) return decided(false, "no S x Q form with R(S) = R(G)");
  }
  if (!r.is_trivial() && !r.is_whole()) {
    const auto q = quotient_group(ctx.group_ptr(), r);
    const auto tq = character_table(std::make_shared<Group>(q.quotient));
    if (!gvz::r_subgroup(tq).is_trivial()) return decided(false, "R(G/R(G)) > 1");
  }
  return decided(true, cat("|R|=", r.size()));
}

Verdict check_r_lt_derived(GroupContext& ctx) {
  if (ctx.gvz()) return vacuous("G is GVZ");
  const auto& r = ctx.r_subgroup();
  const auto d = derived_subgroup(ctx.group());
  return decided(r.is_subset_of(d) && r != d, cat("|R|=", r.size(), " |G'|=", d.size()));
}

Verdict check_direct_product_r(GroupContext& ctx) {
  const auto a = ctx.first_factor();
  const auto b = ctx.second_factor();
  if (!a || !b) return vacuous("not a recorded direct product");
  const auto ta = character_table(a);
  const auto tb = character_table(b);
  const bool ga = table_is_gvz(ta), gb = table_is_gvz(tb);
  if (ga && gb) return vacuous("both factors GVZ");
  const auto& r = ctx.r_subgroup();
  if (!ga && !gb) return decided(r.is_trivial(), cat("both non-GVZ, |R|=", r.size()));
  // Exactly one factor M is non-GVZ; R(G) should be R(M) embedded.
  const std::size_t nb = b->order();
  Subgroup expect(ctx.group().order());
  const auto rm = gvz::r_subgroup(ga ? tb : ta);
  for (auto x : rm.members())
    expect.insert(static_cast<Elem>(ga ? x : static_cast<std::size_t>(x) * nb));
  return decided(r == expect, cat("|R(G)|=", r.size(), " |R(M)|=", rm.size()));
}

Verdict check_u_inf_le_r(GroupContext& ctx) {
  const auto& u = ctx.u_infinity();
  const auto& r = ctx.r_subgroup();
  if (!u.is_subset_of(r)) return decided(false, "U_inf not in R");
  if (!ctx.partial_gvz(u)) return decided(false, describe_noncentral(ctx, u));
  return decided(true, cat("|U_inf|=", u.size(), " |R|=", r.size()));
}

Verdict check_camina_cor(GroupContext& ctx) {
  const auto& z = ctx.center();
  const bool lhs = !z.is_trivial() && !z.is_whole() && is_camina_pair(ctx.table(), z);
  std::vector<std::size_t> witnesses;
  const auto& normals = ctx.normals();
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const auto& n = normals[i];
    if (n.is_trivial() || n.is_whole()) continue;
    if (!first_not_fully_ramified(ctx, n)) witnesses.push_back(i);
  }
  const bool rhs = !witnesses.empty();
  if (!lhs && !rhs) return vacuous("no central Camina pair and no fully ramified N");
  if (lhs != rhs) return decided(false, lhs ? "central Camina pair without fully ramified N"
                                            : "fully ramified N without central Camina pair");
  for (auto i : witnesses)
    if (normals[i] != z) return decided(false, cat("N", i, " fully ramified but != Z(G)"));
  // In the central case every character over Z has e^2 = |G:Z|.
  const auto& res = ctx.restriction(z);
  const auto index = static_cast<std::int64_t>(ctx.group().order() / z.size());
  for (auto c : ctx.irr_over(z)) {
    const auto rep = res.report(c);
    if (!rep.e || *rep.e * *rep.e != index) return decided(false, cat("chi", c, ": e^2 != |G:Z|"));
  }
  return decided(true, cat("|Z|=", z.size()));
}

Verdict check_gvz_class_bound(GroupContext& ctx) {
  if (!ctx.gvz()) return vacuous("G is not GVZ");
  const auto cls = ctx.series().nilpotence_class;
  const std::set<std::int64_t> cd(ctx.table().degrees.begin(), ctx.table().degrees.end());
  if (!cls) return decided(false, "GVZ group not nilpotent");
  return decided(*cls <= cd.size(), cat("c(G)=", *cls, " |cd(G)|=", cd.size()));
}

Verdict check_invariant_char_remark(GroupContext& ctx, const Subgroup& n) {
  if (auto x = first_nonflat(ctx, n)) return vacuous(cat("element ", *x, " not flat"));
  const Group& g = ctx.group();
  const auto& res = ctx.restriction(n);
  const auto& tn = res.subgroup_table();
  const auto& emb = res.embedding();
  const auto& cpn = tn.partition;
  const auto gens = g.generators();
  std::size_t invariant = 0;
  for (std::size_t psi = 0; psi < tn.size(); ++psi) {
    bool inv = true;
    for (std::size_t k = 0; k < cpn.count() && inv; ++k) {
      const Elem x = emb.to_parent[cpn.classes[k].rep];
      for (auto s : gens) {
        const auto y = static_cast<Elem>(emb.to_local[g.conj(x, s)]);
        if (tn.value(psi, cpn.class_of[y]) != tn.value(psi, k)) {
          inv = false;
          break;
        }
      }
    }
    if (!inv) continue;
    ++invariant;
    if (!analyze_char(tn, psi).central_type)
      return decided(false, cat("invariant psi", psi, " not central type"));
  }
  return decided(true, cat(invariant, " invariant characters"));
}

Verdict evaluate(Statement s, GroupContext& ctx, const Subgroup* n) {
  switch (s) {
    case Statement::A: return check_a(ctx, *n);
    case Statement::B: return check_b(ctx, *n);
    case Statement::C: return check_c(ctx, *n);
    case Statement::D: return check_d(ctx, *n);
    case Statement::E: return check_e(ctx, *n);
    case Statement::F: return check_f(ctx, *n);
    case Statement::TrivialInt: return check_trivial_int(ctx, *n);
    case Statement::CenterInt: return check_center_int(ctx);
    case Statement::PartialGvzSylow: return check_partial_gvz_sylow(ctx, *n);
    case Statement::Flat: return check_flat(ctx, *n);
    case Statement::FlatCorollary: return check_flat_corollary(ctx, *n);
    case Statement::Nilp2: return check_nilp2(ctx, *n);
    case Statement::Taketa: return check_taketa(ctx, *n);
    case Statement::RStructure: return check_r_structure(ctx);
    case Statement::RLtDerived: return check_r_lt_derived(ctx);
    case Statement::DirectProductR: return check_direct_product_r(ctx);
    case Statement::UInfLeR: return check_u_inf_le_r(ctx);
    case Statement::CaminaCor: return check_camina_cor(ctx);
    case Statement::GvzClassBound: return check_gvz_class_bound(ctx);
    case Statement::InvariantCharRemark: return check_invariant_char_remark(ctx, *n);
  }
  throw ArgumentError("unknown statement");
}

}  // namespace

VerdictRecord check_statement(Statement s, GroupContext& ctx, std::optional<std::size_t> normal_index) {
  VerdictRecord rec;
  rec.statement = s;
  rec.group = ctx.label();
  const Subgroup* n = nullptr;
  if (quantified_over_normal(s)) {
    if (!normal_index)
      throw ArgumentError(cat("statement ", statement_id(s), " needs a normal subgroup"));
    if (*normal_index >= ctx.normals().size()) throw ArgumentError("normal subgroup index out of range");
    n = &ctx.normals()[*normal_index];
    if (n->is_trivial() || n->is_whole())
      throw ArgumentError(cat("statement ", statement_id(s), " needs 1 < N < G"));
    rec.normal = NormalDescriptor{*normal_index, n->size()};
  }
  auto v = evaluate(s, ctx, n);
  rec.hypothesis_holds = v.hypothesis;
  rec.conclusion_holds = v.conclusion;
  rec.witness = std::move(v.witness);
  return rec;
}

VerdictRecord check_statement(Statement s, std::shared_ptr<const Group> g, std::optional<Subgroup> n) {
  GroupContext ctx(g, g->label());
  std::optional<std::size_t> idx;
  if (n) {
    const auto& normals = ctx.normals();
    const auto it = std::find(normals.begin(), normals.end(), *n);
    if (it == normals.end()) throw NotNormal("check_statement: N is not a normal subgroup");
    idx = static_cast<std::size_t>(it - normals.begin());
  }
  return check_statement(s, ctx, idx);
}

// -- corpus ------------------------------------------------------------------

namespace {

using GroupPtr = std::shared_ptr<const Group>;

CorpusEntry builtin_entry(std::string source, std::function<Group()> make) {
  auto g = std::make_shared<std::function<Group()>>(std::move(make));
  CorpusEntry e;
  e.source = "builtin: " + source;
  e.load = [g]() -> GroupPtr { return std::make_shared<Group>((*g)()); };
  return e;
}

CorpusEntry product_entry(std::string source, std::function<Group()> a, std::function<Group()> b) {
  CorpusEntry e;
  e.source = "builtin: " + source;
  e.factors = [a, b]() { return std::make_pair(std::make_shared<const Group>(a()), std::make_shared<const Group>(b())); };
  auto factors = e.factors;
  e.load = [factors]() -> GroupPtr {
    const auto [x, y] = factors();
    return std::make_shared<Group>(direct_product(*x, *y).group);
  };
  return e;
}

}  // namespace

Corpus builtin_corpus(const std::optional<std::string>& fixtures_dir) {
  Corpus c;
  auto add = [&](CorpusEntry e, std::string label) {
    e.label = std::move(label);
    c.push_back(std::move(e));
  };
  for (std::size_t n = 1; n <= 32; ++n)
    add(builtin_entry(cat("cyclic ", n), [n] { return cyclic_group(n); }), cat("C", n));
  for (std::size_t p : {2, 3, 5})
    for (std::size_t k = 2, q = p * p; q <= 32; ++k, q *= p)
      add(builtin_entry(cat("elementary ", p, " ", k), [p, k] { return elementary_abelian_group(p, k); }),
          cat("E", p, "^", k));
  for (std::size_t n = 8; n <= 64; n += 2)
    add(builtin_entry(cat("dihedral ", n), [n] { return dihedral_group(n); }), cat("D", n));
  for (std::size_t n = 8; n <= 32; n += 4)
    add(builtin_entry(cat("quaternion ", n), [n] { return quaternion_group(n); }), cat("Q", n));
  for (std::size_t p : {2, 3})
    for (bool plus : {true, false})
      add(builtin_entry(cat("extraspecial ", p, plus ? " +" : " -"),
                        [p, plus] { return extraspecial_group(p, plus); }),
          cat("ES", p * p * p, plus ? "+" : "-"));
  for (auto [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {5, 2}, {7, 3}, {7, 2}})
    add(builtin_entry(cat("frobenius ", p, " ", q), [p, q] { return frobenius_group(p, q); }),
        cat("F", p, ":", q));
  for (std::size_t n : {3, 4})
    add(builtin_entry(cat("symmetric ", n), [n] { return symmetric_group(n); }), cat("S", n));

  const auto s3 = [] { return symmetric_group(3); };
  const auto q8 = [] { return quaternion_group(8); };
  const auto d16 = [] { return dihedral_group(16); };
  const auto c3 = [] { return cyclic_group(3); };
  add(product_entry("S3 x Q8", s3, q8), "S3xQ8");
  add(product_entry("Q8 x C3", q8, c3), "Q8xC3");
  add(product_entry("D16 x Q8", d16, q8), "D16xQ8");
  add(product_entry("D16 x D16", d16, d16), "D16xD16");

  if (fixtures_dir) {
    for (const auto& path : fixture_paths(*fixtures_dir)) {
      CorpusEntry e;
      e.source = path;
      e.load = [path]() -> GroupPtr { return std::make_shared<Group>(load_fixture(path)); };
      const auto name = std::filesystem::path(path).stem().string();
      add(std::move(e), name);
      if (name == "smallgroup_128_71")
        add(product_entry(name + " x Q8", [path] { return load_fixture(path); }, q8), name + "xQ8");
    }
  }
  return c;
}

std::size_t RunReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const VerdictRecord& r) { return r.violation(); }));
}

int RunReport::exit_code() const {
  if (!load_errors.empty()) return 2;
  return violations() > 0 ? 1 : 0;
}

RunReport run_corpus(const Corpus& corpus, const RunOptions& opts) {
  const auto statements = opts.statements;
  std::vector<std::vector<VerdictRecord>> per_group(corpus.size());
  std::vector<std::optional<std::string>> errors(corpus.size());

  auto work = [&](std::size_t gi) {
    const auto& entry = corpus[gi];
    try {
      const auto g = entry.load();
      GroupContext ctx(g, entry.label);
      if (entry.factors) {
        auto [a, b] = entry.factors();
        ctx.set_factors(std::move(a), std::move(b));
      }
      auto& out = per_group[gi];
      for (auto s : statements) {
        if (!quantified_over_normal(s)) {
          out.push_back(check_statement(s, ctx));
          continue;
        }
        for (std::size_t i = 0; i < ctx.normals().size(); ++i) {
          const auto& n = ctx.normals()[i];
          if (n.is_trivial() || n.is_whole()) continue;
          out.push_back(check_statement(s, ctx, i));
        }
      }
      for (auto& r : out) r.group_index = gi;
    } catch (const std::exception& ex) {
      errors[gi] = ex.what();
      per_group[gi].clear();
    }
  };

  // Later entries (fixtures, products) are the largest; start them first.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < corpus.size();) work(corpus.size() - 1 - k);
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, corpus.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  RunReport report;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    if (errors[gi]) report.load_errors.emplace_back(corpus[gi].label, *errors[gi]);
    for (auto& r : per_group[gi]) report.records.push_back(std::move(r));
  }
  std::stable_sort(report.records.begin(), report.records.end(), [](const auto& x, const auto& y) {
    const auto kx = std::make_tuple(x.statement, x.group_index, x.normal ? x.normal->index : 0);
    const auto ky = std::make_tuple(y.statement, y.group_index, y.normal ? y.normal->index : 0);
    return kx < ky;
  });
  for (auto s : statements) report.tallies[s];
  for (const auto& r : report.records) {
    auto& t = report.tallies[r.statement];
    if (r.violation()) ++t.violations;
    else if (r.substantive()) ++t.substantive;
    else ++t.vacuous;
  }
  for (auto s : statements) {
    const auto it = opts.min_substantive.find(s);
    const std::size_t need = it == opts.min_substantive.end() ? 1 : it->second;
    if (report.tallies[s].substantive < need) report.below_threshold.push_back(s);
  }
  return report;
}

}  // namespace gvz

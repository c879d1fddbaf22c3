#include "gvz/chartheory.hpp"

#include <stdexcept>

namespace gvz {

namespace {

void require_normal(const CharacterTable& t, const Subgroup& n, const char* what) {
  if (n.universe() != t.group->order() || !t.partition.is_union_of_classes(n) ||
      !is_subgroup(*t.group, n))
    throw NotNormal(std::string(what) + ": subgroup is not normal");
}

Subgroup from_classes(const CharacterTable& t, const std::vector<bool>& which) {
  return t.partition.union_of(which);
}

}  // namespace

std::vector<bool> kernel_classes(const CharacterTable& t, std::size_t chi) {
  const auto one = Cyclotomic::integer(t.conductor(), t.degrees[chi]);
  std::vector<bool> out(t.partition.count());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = t.value(chi, k) == one;
  return out;
}

Subgroup kernel(const CharacterTable& t, std::size_t chi) {
  return from_classes(t, kernel_classes(t, chi));
}

CharAnalysis analyze_char(const CharacterTable& t, std::size_t chi) {
  if (chi >= t.size()) throw ArgumentError("analyze_char: character id out of range");
  const Group& g = *t.group;
  const std::size_t r = t.partition.count();
  CharAnalysis a;
  a.id = chi;
  a.degree = t.degrees[chi];
  a.kernel = kernel(t, chi);

  const auto d2 = Cyclotomic::integer(t.conductor(), a.degree * a.degree);
  std::vector<bool> central(r), nonzero(r);
  std::vector<Elem> support;
  for (std::size_t k = 0; k < r; ++k) {
    central[k] = t.norm_squared(chi, k) == d2;
    nonzero[k] = !t.value(chi, k).is_zero();
    if (nonzero[k]) support.push_back(t.partition.classes[k].rep);
  }
  a.zcenter = from_classes(t, central);
  // The support is a union of classes, so the normal closure of the class
  // representatives is the subgroup it generates.
  a.voff = normal_closure(g, support);

  if (!a.kernel.is_subset_of(a.zcenter) || !a.zcenter.is_subset_of(a.voff))
    throw std::logic_error("analyze_char: kernel <= Z(chi) <= V(chi) violated");
  const bool by_subgroups = a.zcenter == a.voff;
  const bool by_degree =
      static_cast<std::size_t>(a.degree * a.degree) * a.zcenter.size() == g.order();
  if (by_subgroups != by_degree)
    throw std::logic_error("analyze_char: central-type criteria disagree");
  a.central_type = by_subgroups;
  return a;
}

std::vector<CharAnalysis> analyze_all(const CharacterTable& t) {
  std::vector<CharAnalysis> out;
  for (std::size_t c = 0; c < t.size(); ++c) out.push_back(analyze_char(t, c));
  return out;
}

std::vector<std::size_t> irr_over(const CharacterTable& t, const Subgroup& n) {
  require_normal(t, n, "irr_over");
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < t.size(); ++c)
    if (!n.is_subset_of(kernel(t, c))) out.push_back(c);
  return out;
}

std::set<std::int64_t> cd_over(const CharacterTable& t, const Subgroup& n) {
  std::set<std::int64_t> out;
  for (auto c : irr_over(t, n)) out.insert(t.degrees[c]);
  return out;
}

bool vanishes_off(const CharacterTable& t, std::size_t chi, const Subgroup& s) {
  for (std::size_t k = 0; k < t.partition.count(); ++k)
    if (!s.contains(t.partition.classes[k].rep) && !t.value(chi, k).is_zero()) return false;
  return true;
}

// -- restriction -------------------------------------------------------------

NormalRestriction::NormalRestriction(const CharacterTable& tg, const Subgroup& n)
    : tg_(&tg), n_(n), emb_(subgroup_as_group(*tg.group, n)),
      tn_(character_table(std::make_shared<Group>(emb_.group))) {
  require_normal(tg, n, "NormalRestriction");
}

std::vector<std::int64_t> NormalRestriction::multiplicities(std::size_t chi) const {
  const auto e = tg_->conductor();
  const auto order_n = static_cast<std::int64_t>(n_.size());
  std::vector<std::int64_t> out;
  for (std::size_t psi = 0; psi < tn_.size(); ++psi) {
    Cyclotomic acc(e);
    for (std::size_t c = 0; c < tn_.partition.count(); ++c) {
      const auto& cls = tn_.partition.classes[c];
      const auto& chi_val = tg_->at(chi, emb_.to_parent[cls.rep]);
      const auto psi_bar = tn_.value(psi, cls.inverse_class).embed(e);
      acc += chi_val * psi_bar * static_cast<std::int64_t>(cls.size());
    }
    const auto v = acc.as_integer();
    if (!v || *v % order_n != 0)
      throw std::logic_error("restriction: inner product is not an integer");
    out.push_back(*v / order_n);
  }
  return out;
}

RamificationReport NormalRestriction::report(std::size_t chi) const {
  RamificationReport rep;
  rep.chi = chi;
  rep.normal = n_;
  const auto mult = multiplicities(chi);
  const auto chi1 = tg_->degrees[chi];
  const auto index = static_cast<std::int64_t>(tg_->group->order() / n_.size());
  std::int64_t restricted_degree = 0;
  for (std::size_t psi = 0; psi < mult.size(); ++psi) {
    if (mult[psi] < 0) throw std::logic_error("restriction: negative multiplicity");
    if (mult[psi] == 0) continue;
    rep.constituents.emplace_back(psi, mult[psi]);
    restricted_degree += mult[psi] * tn_.degrees[psi];
  }
  if (restricted_degree != chi1) throw std::logic_error("restriction: degrees do not add up");
  rep.homogeneous = rep.constituents.size() == 1;
  rep.fully_ramified = rep.homogeneous && vanishes_off(*tg_, chi, n_);
  for (const auto& [psi, m] : rep.constituents)
    if (m * chi1 == index * tn_.degrees[psi]) {
      rep.e = m;
      break;
    }
  // Equivalent form: unique theta with |G:N| = (chi(1) / theta(1))^2.
  const bool by_degree = rep.homogeneous && index * tn_.degrees[rep.constituents[0].first] *
                                                    tn_.degrees[rep.constituents[0].first] ==
                                                chi1 * chi1;
  if (by_degree != rep.fully_ramified)
    throw std::logic_error("restriction: fully-ramified criteria disagree");
  return rep;
}

RamificationReport restriction_constituents(const CharacterTable& tg, const Subgroup& n,
                                            std::size_t chi) {
  return NormalRestriction(tg, n).report(chi);
}

// -- group predicates --------------------------------------------------------

bool is_gvz(const CharacterTable& t) {
  for (std::size_t c = 0; c < t.size(); ++c)
    if (!analyze_char(t, c).central_type) return false;
  return true;
}

bool is_central_type_group(const CharacterTable& t) {
  const auto index = static_cast<std::int64_t>(t.group->order() / center(*t.group).size());
  for (auto d : t.degrees)
    if (d * d == index) return true;
  return false;
}

bool fully_ramified_over_center(const CharacterTable& t, std::size_t chi) {
  return vanishes_off(t, chi, center(*t.group));
}

bool partial_gvz_wrt(const CharacterTable& t, const Subgroup& n) {
  if (n.is_trivial()) throw ArgumentError("partial_gvz_wrt: N must be nontrivial");
  for (auto c : irr_over(t, n))
    if (!analyze_char(t, c).central_type) return false;
  return true;
}

Subgroup r_subgroup(const CharacterTable& t) {
  auto r = Subgroup::whole(t.group->order());
  for (std::size_t c = 0; c < t.size(); ++c) {
    const auto a = analyze_char(t, c);
    if (a.voff != a.zcenter) r = r.intersect(a.kernel);
  }
  return r;
}

Subgroup u_subgroup(const CharacterTable& t) {
  const auto z = center(*t.group);
  auto u = Subgroup::whole(t.group->order());
  for (std::size_t c = 0; c < t.size(); ++c)
    if (!vanishes_off(t, c, z)) u = u.intersect(kernel(t, c));
  return u;
}

USeries u_series(const CharacterTable& t) {
  USeries s;
  s.terms.push_back(u_subgroup(t));
  // Each step strictly enlarges the term, so the loop runs at most log2 |G| times.
  while (!s.terminal().is_trivial() && !s.terminal().is_whole()) {
    const auto q = quotient_group(t.group, s.terminal());
    const auto tq = character_table(std::make_shared<Group>(q.quotient));
    const auto uq = u_subgroup(tq);
    if (uq.is_trivial()) break;
    s.terms.push_back(q.preimage(uq));
  }
  return s;
}

// -- Camina pairs ------------------------------------------------------------

bool is_camina_pair(const CharacterTable& t, const Subgroup& n) {
  require_normal(t, n, "is_camina_pair");
  const Group& g = *t.group;
  const auto members = n.members();
  for (std::size_t k = 0; k < t.partition.count(); ++k) {
    const Elem rep = t.partition.classes[k].rep;
    if (n.contains(rep)) continue;
    for (auto m : members)
      if (t.partition.class_of[g.mul(rep, m)] != k) return false;
  }
  return true;
}

bool is_camina_pair_by_characters(const CharacterTable& t, const Subgroup& n) {
  for (auto c : irr_over(t, n))
    if (!vanishes_off(t, c, n)) return false;
  return true;
}

bool is_central_camina(const CharacterTable& t) {
  const auto z = center(*t.group);
  return !z.is_trivial() && is_camina_pair(t, z);
}

CaminaResult camina_ops(const CharacterTable& t, const Subgroup& n) {
  CaminaResult r;
  r.is_camina_pair = is_camina_pair(t, n);
  if (r.is_camina_pair != is_camina_pair_by_characters(t, n))
    throw std::logic_error("camina_ops: element and character tests disagree");
  r.is_central_camina = is_central_camina(t);
  return r;
}

GroupAnalysis analyze_group(const CharacterTable& t) {
  GroupAnalysis a;
  a.chars = analyze_all(t);
  a.gvz = true;
  for (const auto& c : a.chars) a.gvz = a.gvz && c.central_type;
  a.central_type_group = is_central_type_group(t);
  a.r_order = r_subgroup(t).size();
  a.u_order = u_subgroup(t).size();
  a.u_inf_order = u_infinity(t).size();
  for (bool f : flat_classes(*t.group, t.partition)) a.flat_class_count += f ? 1 : 0;
  a.camina_center = is_central_camina(t);
  return a;
}

}  // namespace gvz

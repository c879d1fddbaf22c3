#include <doctest.h>

#include "gvz/structure.hpp"
#include "oracles.hpp"

using namespace gvz;

namespace {

Elem first_of_order(const Group& g, std::size_t k) {
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.elem_order(Elem(x)) == k) return Elem(x);
  FAIL("no element of the requested order");
  return 0;
}

std::vector<std::size_t> class_sizes(const ClassPartition& cp) {
  std::vector<std::size_t> out;
  for (const auto& c : cp.classes) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Group> sample_groups() {
  std::vector<Group> out{symmetric_group(3), quaternion_group(8), dihedral_group(16), symmetric_group(4),
                         oracle::alternating4(), extraspecial_group(3, false), frobenius_group(7, 3),
                         direct_product(symmetric_group(3), quaternion_group(8)).group,
                         quaternion_group(12), elementary_abelian_group(2, 3)};
  std::mt19937 rng(31337);
  for (int i = 0; i < 12; ++i) out.push_back(oracle::random_perm_group(rng, 6, 64));
  return out;
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("conjugacy classes") {
    const auto c12 = cyclic_group(12);
    CHECK(conjugacy_classes(c12).count() == 12);
    CHECK(class_sizes(conjugacy_classes(symmetric_group(3))) == std::vector<std::size_t>{1, 2, 3});
    CHECK(class_sizes(conjugacy_classes(quaternion_group(8))) == std::vector<std::size_t>{1, 1, 2, 2, 2});

    const auto cp = conjugacy_classes(symmetric_group(4));
    CHECK(cp.count() == 5);
    CHECK(cp.classes[0].rep == 0);
    for (std::size_t k = 1; k < cp.count(); ++k) CHECK(cp.classes[k - 1].rep < cp.classes[k].rep);
    // Power maps cover every prime up to the exponent (12).
    CHECK(cp.power_map.size() == 5);
    CHECK(cp.power_map.count(11) == 1);
  }

  TEST_CASE("centers and commutators") {
    CHECK(center(cyclic_group(9)).is_whole());
    CHECK(center(symmetric_group(3)).is_trivial());
    CHECK(center(quaternion_group(8)).size() == 2);

    const auto q8 = quaternion_group(8);
    const Elem z = first_of_order(q8, 2);
    CHECK(commutator_with_group(q8, z).is_trivial());
    CHECK(commutator_with_group(q8, first_of_order(q8, 4)) == center(q8));
    CHECK(normal_closure(q8, {z}).size() == 2);

    const auto s3 = symmetric_group(3);
    const Elem t = first_of_order(s3, 2);
    const auto a3 = generated(s3, {first_of_order(s3, 3)});
    CHECK(a3.size() == 3);
    CHECK(commutator_with_group(s3, t) == a3);
    CHECK(commutator_subgroup(s3, a3, Subgroup::whole(6)) == a3);
    CHECK(derived_subgroup(s3) == a3);
    CHECK(join(s3, Subgroup::trivial(6), a3) == a3);
    CHECK(join(s3, a3, generated(s3, {t})).is_whole());
  }

  TEST_CASE("flat elements") {
    const auto s3 = symmetric_group(3);
    CHECK(is_flat(s3, 0));
    CHECK(is_flat(s3, first_of_order(s3, 2)));
    CHECK_FALSE(is_flat(s3, first_of_order(s3, 3)));
    const auto q8 = quaternion_group(8);
    for (std::size_t x = 0; x < 8; ++x) CHECK(is_flat(q8, Elem(x)));
  }

  TEST_CASE("normal subgroups") {
    const auto s3 = normal_subgroups(symmetric_group(3));
    REQUIRE(s3.size() == 3);
    CHECK(s3[0].size() == 1);
    CHECK(s3[1].size() == 3);
    CHECK(s3[2].size() == 6);

    CHECK(normal_subgroups(elementary_abelian_group(2, 2)).size() == 5);

    const auto q8 = normal_subgroups(quaternion_group(8));
    std::vector<std::size_t> sizes;
    for (const auto& n : q8) sizes.push_back(n.size());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 4, 4, 4, 8});
  }

  TEST_CASE("central series") {
    const auto v = central_series(elementary_abelian_group(3, 2));
    CHECK(v.is_nilpotent);
    CHECK(v.nilpotence_class == 1);
    CHECK(v.hypercenter.is_whole());

    const auto d16 = central_series(dihedral_group(16));
    CHECK(d16.is_nilpotent);
    CHECK(d16.nilpotence_class == 3);

    const auto p = direct_product(symmetric_group(3), quaternion_group(8));
    const auto s = central_series(p.group);
    CHECK_FALSE(s.is_nilpotent);
    CHECK_FALSE(s.nilpotence_class.has_value());
    CHECK(s.hypercenter == p.second);
    CHECK(center(p.group).size() == 2);

    CHECK(nilpotence_class_in(p.group, p.second) == 2);
    CHECK_FALSE(nilpotence_class_in(p.group, p.first).has_value());
  }

  TEST_CASE("Sylow and Hall subgroups") {
    const auto q8 = quaternion_group(8);
    CHECK(sylow_subgroup(q8, 2).is_whole());
    CHECK(hall_complement(q8, 2).is_trivial());

    const auto s3 = symmetric_group(3);
    CHECK(sylow_subgroup(s3, 3).size() == 3);
    CHECK(sylow_subgroup(s3, 2).size() == 2);
    CHECK_THROWS_AS(hall_complement(s3, 2), UnsupportedStructure);
    CHECK_THROWS_AS(sylow_subgroup(s3, 5), ArgumentError);
    CHECK_THROWS_AS(sylow_subgroup(s3, 4), ArgumentError);

    const auto p = direct_product(quaternion_group(8), cyclic_group(3));
    const auto sh = sylow_and_hall(p.group, 2);
    CHECK(sh.sylow == p.first);
    CHECK(sh.hall_complement == p.second);

    CHECK(sylow_subgroup(symmetric_group(4), 2).size() == 8);
    CHECK(sylow_subgroup(frobenius_group(7, 3), 7).size() == 7);
    CHECK(p_part(48, 2) == 16);
    CHECK(is_prime_power(27));
    CHECK_FALSE(is_prime_power(12));
  }

  TEST_CASE("property: class identities") {
    for (const auto& g : sample_groups()) {
      CAPTURE(g.label());
      CAPTURE(g.order());
      const auto cp = conjugacy_classes(g);
      std::size_t total = 0;
      for (const auto& cls : cp.classes) {
        total += cls.size();
        const Elem x = cls.rep;
        CHECK(cls.size() * centralizer_order(g, x) == g.order());
        // cl(x) lies in x [x, G].
        const auto gx = commutator_with_group(g, x);
        for (auto y : cls.members) CHECK(gx.contains(g.mul(g.inv(x), y)));
        CHECK(is_flat(g, x) == (cls.size() == gx.size()));
        CHECK(cp.class_of[g.inv(x)] == cls.inverse_class);
      }
      CHECK(total == g.order());
      for (const auto& [p, images] : cp.power_map)
        for (std::size_t k = 0; k < cp.count(); ++k)
          CHECK(images[k] == cp.class_of[g.pow(cp.classes[k].rep, p)]);
    }
  }

  TEST_CASE("property: normal subgroups match exhaustive enumeration") {
    for (const auto& g : sample_groups()) {
      if (g.order() > 64) continue;
      CAPTURE(g.label());
      CAPTURE(g.order());
      CHECK(normal_subgroups(g) == oracle::brute_normal_subgroups(g));
    }
  }

  TEST_CASE("property: upper and lower series agree on nilpotence") {
    for (const auto& g : sample_groups()) {
      CAPTURE(g.label());
      const auto s = central_series(g);
      const bool lower_reaches_one = s.lower.terms.back().is_trivial();
      CHECK(s.is_nilpotent == lower_reaches_one);
      CHECK(s.is_nilpotent == s.hypercenter.is_whole());
      CHECK(s.upper.terms.front().is_trivial());
      if (s.upper.terms.size() > 1) CHECK(s.upper.terms[1] == oracle::brute_center(g));
      if (s.is_nilpotent) CHECK(*s.nilpotence_class + 1 == s.lower.terms.size());
    }
  }

  TEST_CASE("property: Sylow subgroups have full p-part order") {
    for (const auto& g : sample_groups()) {
      for (auto p : prime_divisors(g.order())) {
        const auto s = sylow_subgroup(g, p);
        CHECK(is_subgroup(g, s));
        CHECK(s.size() == p_part(g.order(), p));
      }
    }
  }
}

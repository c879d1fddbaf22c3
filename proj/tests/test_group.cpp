#include <doctest.h>

#include <map>
#include <numeric>

#include "gvz/group.hpp"
#include "gvz/structure.hpp"
#include "oracles.hpp"

using namespace gvz;

namespace {

std::multiset<std::size_t> order_profile(const Group& g) {
  std::multiset<std::size_t> out;
  for (std::size_t x = 0; x < g.order(); ++x) out.insert(g.elem_order(Elem(x)));
  return out;
}

std::size_t count_of_order(const Group& g, std::size_t k) {
  const auto p = order_profile(g);
  return p.count(k);
}

/// Swap an intercalate (2x2 Latin subsquare) in an elementary abelian 2-group
/// table, giving a Latin square with identity that is not associative.
std::vector<Elem> broken_table(const Group& g) {
  auto t = g.table();
  const std::size_t n = g.order();
  const Elem x = 1, y = 2, u = 4;
  const Elem xu = g.mul(x, u), yu = g.mul(y, u);
  std::swap(t[x * n + y], t[x * n + yu]);
  std::swap(t[xu * n + y], t[xu * n + yu]);
  return t;
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("permutation closure") {
    const auto s3 = Group::from_permutations({{1, 2, 0}, {1, 0, 2}}, 3, "S3");
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());

    const auto one = Group::from_permutations({}, 1, "1");
    CHECK(one.order() == 1);
    CHECK(one.exponent() == 1);

    const auto c8 = Group::from_permutations({{1, 2, 3, 4, 5, 6, 7, 0}}, 8, "C8");
    CHECK(c8.order() == 8);
    CHECK(c8.exponent() == 8);
    CHECK(c8.is_abelian());
  }

  TEST_CASE("element helpers") {
    const auto s3 = symmetric_group(3);
    CHECK(s3.elem_order(s3.identity()) == 1);
    for (std::size_t x = 0; x < 6; ++x) CHECK(s3.conj(Elem(x), 0) == x);
    // comm of a transposition and a 3-cycle is a 3-cycle.
    Elem t = 0, c = 0;
    for (std::size_t x = 0; x < 6; ++x) {
      if (s3.elem_order(Elem(x)) == 2) t = Elem(x);
      if (s3.elem_order(Elem(x)) == 3) c = Elem(x);
    }
    CHECK(s3.elem_order(s3.comm(t, c)) == 3);
    const auto d = element_arithmetic(s3, t, c);
    CHECK(d.order == 2);
    CHECK(d.comm == s3.comm(t, c));
    CHECK_THROWS_AS(element_arithmetic(s3, 6, 0), ArgumentError);
    CHECK(s3.pow(c, 3) == 0);
    CHECK(s3.pow(c, 4) == c);
  }

  TEST_CASE("builtin families") {
    const auto f = frobenius_group(3, 2);
    CHECK(f.order() == 6);
    CHECK_FALSE(f.is_abelian());

    const auto q = extraspecial_group(2, false);
    CHECK(q.order() == 8);
    CHECK(count_of_order(q, 2) == 1);
    CHECK(count_of_order(q, 4) == 6);

    const auto d8 = extraspecial_group(2, true);
    CHECK(count_of_order(d8, 2) == 5);

    const auto d16 = dihedral_group(16);
    CHECK(d16.order() == 16);
    CHECK(d16.exponent() == 8);

    const auto q16 = quaternion_group(16);
    CHECK(q16.order() == 16);
    CHECK(count_of_order(q16, 2) == 1);
    const auto dic12 = quaternion_group(12);
    CHECK(dic12.order() == 12);
    CHECK(count_of_order(dic12, 2) == 1);

    const auto h27 = extraspecial_group(3, true);
    CHECK(h27.exponent() == 3);
    const auto m27 = extraspecial_group(3, false);
    CHECK(m27.exponent() == 9);
    CHECK(oracle::brute_center(m27).size() == 3);

    CHECK(frobenius_group(7, 3).order() == 21);
    CHECK(symmetric_group(4).order() == 24);
    CHECK(elementary_abelian_group(3, 3).order() == 27);
    CHECK(elementary_abelian_group(3, 3).exponent() == 3);
    CHECK(cyclic_group(1).order() == 1);

    CHECK(builtin_family("dihedral", {"10"}).order() == 10);
    CHECK(builtin_family("extraspecial", {"3", "-"}).exponent() == 9);
    CHECK_THROWS_AS(builtin_family("frobenius", {"7", "4"}), ArgumentError);
    CHECK_THROWS_AS(builtin_family("dihedral", {}), ArgumentError);
    CHECK_THROWS(builtin_family("nosuch", {"1"}));
    CHECK_THROWS(quaternion_group(10));
  }

  TEST_CASE("direct products") {
    const auto c2 = cyclic_group(2);
    const auto v4 = direct_product(c2, c2).group;
    CHECK(v4.order() == 4);
    CHECK(v4.exponent() == 2);

    const auto s3q8 = direct_product(symmetric_group(3), quaternion_group(8));
    CHECK(s3q8.group.order() == 48);
    CHECK(oracle::brute_center(s3q8.group).size() == 2);
    CHECK(s3q8.first.size() == 6);
    CHECK(s3q8.second.size() == 8);
    CHECK(is_normal(s3q8.group, s3q8.first));

    const auto d10 = dihedral_group(10);
    const auto same = direct_product(d10, cyclic_group(1)).group;
    CHECK(same.order() == 10);
    CHECK(same.exponent() == 10);
    CHECK(order_profile(same) == order_profile(d10));

    CHECK_THROWS_AS(direct_product(symmetric_group(4), symmetric_group(4), 500), OrderCapExceeded);
  }

  TEST_CASE("quotients") {
    const auto q8 = std::make_shared<Group>(quaternion_group(8));
    const auto z = center(*q8);
    const auto q = quotient_group(q8, z);
    CHECK(q.quotient.order() == 4);
    CHECK(q.quotient.exponent() == 2);
    CHECK(q.preimage(Subgroup::trivial(4)) == z);

    const auto id = quotient_group(q8, Subgroup::trivial(8));
    CHECK(id.quotient.order() == 8);
    std::set<Elem> image(id.projection.begin(), id.projection.end());
    CHECK(image.size() == 8);

    const auto triv = quotient_group(q8, Subgroup::whole(8));
    CHECK(triv.quotient.order() == 1);

    const auto s3 = std::make_shared<Group>(symmetric_group(3));
    Elem t = 0;
    for (std::size_t x = 0; x < 6; ++x)
      if (s3->elem_order(Elem(x)) == 2) t = Elem(x);
    const auto two = generated(*s3, {t});
    CHECK_THROWS_AS(quotient_group(s3, two), NotNormal);
    auto not_sub = Subgroup::trivial(6);
    not_sub.insert(t);
    not_sub.insert(1);
    CHECK_THROWS(quotient_group(s3, not_sub));
  }

  TEST_CASE("table validation") {
    CHECK_THROWS_AS(Group::from_table({0, 1, 1, 1}, 2, "bad"), InvalidGroup);
    // Latin square without identity at index 0.
    CHECK_THROWS_AS(Group::from_table({1, 0, 0, 1}, 2, "bad"), InvalidGroup);
    CHECK_THROWS_AS(Group::from_table({0}, 1, "ok", 0), OrderCapExceeded);

    const auto e256 = elementary_abelian_group(2, 8);
    CHECK_NOTHROW(Group::from_table(e256.table(), 256, "e256"));
    CHECK_THROWS_AS(Group::from_table(broken_table(e256), 256, "loop"), InvalidGroup);

    // Above 512 elements associativity goes through Light's test.
    const auto e1024 = elementary_abelian_group(2, 10);
    CHECK_NOTHROW(Group::from_table(e1024.table(), 1024, "e1024"));
    CHECK_THROWS_AS(Group::from_table(broken_table(e1024), 1024, "loop"), InvalidGroup);
  }

  TEST_CASE("GRP parsing") {
    const auto g = parse_grp("# comment\nperm 3\n2 3 1\n2 1 3\n", "s3");
    CHECK(g.order() == 6);
    CHECK(g.label() == "s3");
    CHECK(parse_grp("table 2\n0 1\n1 0\n", "c2").order() == 2);
    CHECK(parse_grp("perm 4\r\n2 3 4 1\r\n", "c4").order() == 4);

    CHECK_THROWS_AS(parse_grp("", "x"), ParseError);
    CHECK_THROWS_AS(parse_grp("perms 3\n", "x"), ParseError);
    CHECK_THROWS_AS(parse_grp("perm 3\n1 2\n", "x"), ParseError);
    CHECK_THROWS_AS(parse_grp("perm 3\n1 1 2\n", "x"), ParseError);
    CHECK_THROWS_AS(parse_grp("perm 3\n0 1 2\n", "x"), ParseError);
    CHECK_THROWS_AS(parse_grp("perm 3\n1 2 x\n", "x"), ParseError);
    CHECK_THROWS_AS(parse_grp("table 2\n0 1\n", "x"), ParseError);
    CHECK_THROWS_AS(parse_grp("table 2\n0 1\n1 1\n", "x"), InvalidGroup);
    CHECK_THROWS_AS(parse_grp("table 2\n0 1\n1 5\n", "x"), InvalidGroup);
    CHECK_THROWS_AS(parse_grp("perm 4\n2 3 4 1\n2 1 3 4\n", "s4", 10), OrderCapExceeded);
    CHECK_THROWS_AS(load_grp_file("/nonexistent/file.grp"), ParseError);
  }

  TEST_CASE("GRP round trip") {
    for (const auto& g : {symmetric_group(4), dihedral_group(10), quaternion_group(12), cyclic_group(1)}) {
      const auto text = write_grp(g);
      const auto back = parse_grp(text, g.label());
      CHECK(back.order() == g.order());
      CHECK(back.table() == g.table());
      CHECK(write_grp(back) == text);
    }
    const auto q8 = std::make_shared<Group>(quaternion_group(8));
    const auto q = quotient_group(q8, center(*q8));
    const auto text = write_grp(q.quotient);
    CHECK(text.rfind("table 4\n", 0) == 0);
    CHECK(parse_grp(text, "q").table() == q.quotient.table());
  }

  TEST_CASE("property: random groups satisfy the axioms") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 40; ++trial) {
      const auto g = oracle::random_perm_group(rng, 7, 512);
      CAPTURE(trial);
      CAPTURE(g.order());
      CHECK(g.is_associative_exhaustive());
      for (std::size_t x = 0; x < g.order(); ++x) {
        CHECK(g.mul(Elem(x), g.inv(Elem(x))) == 0);
        CHECK(g.mul(0, Elem(x)) == x);
      }
      std::size_t lcm = 1;
      for (std::size_t x = 0; x < g.order(); ++x) lcm = std::lcm(lcm, g.elem_order(Elem(x)));
      CHECK(lcm == g.exponent());
      CHECK(generated(g, g.generators()).is_whole());
    }
  }

  TEST_CASE("property: quotient tables round-trip through GRP") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      const auto g = std::make_shared<Group>(oracle::random_perm_group(rng, 6, 200));
      for (const auto& n : normal_subgroups(*g)) {
        const auto q = quotient_group(g, n);
        CHECK(q.quotient.order() * n.size() == g->order());
        const auto back = parse_grp(write_grp(q.quotient), "q");
        CHECK(back.order() == q.quotient.order());
        CHECK(order_profile(back) == order_profile(q.quotient));
        // The projection is a homomorphism.
        for (std::size_t x = 0; x < g->order(); x += 3)
          for (std::size_t y = 0; y < g->order(); y += 5)
            CHECK(q.projection[g->mul(Elem(x), Elem(y))] ==
                  q.quotient.mul(q.projection[x], q.projection[y]));
      }
    }
  }

  TEST_CASE("property: direct product exponent is the lcm") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = oracle::random_perm_group(rng, 5, 60);
      const auto b = oracle::random_perm_group(rng, 5, 60);
      const auto p = direct_product(a, b);
      CHECK(p.group.order() == a.order() * b.order());
      CHECK(p.group.exponent() == std::lcm(a.exponent(), b.exponent()));
      CHECK(p.first.intersect(p.second).is_trivial());
    }
  }
}

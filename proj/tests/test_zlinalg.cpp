#include <doctest.h>

#include <random>

#include "bredon/zlinalg.hpp"

using namespace bredon;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int span = 4) {
  std::uniform_int_distribution<int> d(-span, span);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form on the running example") {
  IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
  auto s = smith_normal_form(a);
  CHECK(s.u * a * s.v == s.d);
  CHECK(s.d(0, 0) == 2);
  CHECK(s.d(1, 1) == 4);
  CHECK(s.d(0, 1) == 0);
  CHECK(s.d(1, 0) == 0);
  Int da = det(a);
  CHECK((da == 8 || da == -8));
  CHECK(s.d(0, 0) * s.d(1, 1) == 8);  // |det| = product of invariants
}

TEST_CASE("smith normal form degenerate cases") {
  IntMatrix z(3, 2);
  auto s = smith_normal_form(z);
  CHECK(s.d.is_zero());
  CHECK(s.u == IntMatrix::identity(3));
  CHECK(s.v == IntMatrix::identity(2));

  IntMatrix id = IntMatrix::identity(4);
  auto si = smith_normal_form(id);
  CHECK(si.d == id);
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(20240517);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
    IntMatrix a = random_matrix(rng, r, c);
    auto s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(s.u * s.u_inv == IntMatrix::identity(r));
    Int du = det(s.u), dv = det(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (std::size_t i = 0; i + 1 < std::min(r, c); ++i) {
      if (s.d(i + 1, i + 1) != 0) {
        REQUIRE(s.d(i, i) != 0);
        CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
      }
    }
    CHECK(rank(a) + kernel_basis(a).cols() == c);
  }
}

TEST_CASE("solve and kernel") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix a = random_matrix(rng, 2 + trial % 3, 2 + (trial / 3) % 3);
    IntMatrix k = kernel_basis(a);
    CHECK((a * k).is_zero());
    IntMatrix x = random_matrix(rng, a.cols(), 2, 3);
    auto sol = solve_columns(a, a * x);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == a * x);
  }
  // unsolvable: 2x = 1
  IntMatrix two(1, 1), one(1, 1);
  two(0, 0) = 2;
  one(0, 0) = 1;
  CHECK(!solve_columns(two, one).has_value());
}

TEST_CASE("iso invariants") {
  // Z + Z/2 + Z/2 presented on 3 generators
  IntMatrix rel(3, 2);
  rel(1, 0) = 2;
  rel(2, 1) = 2;
  FgAbelianGroup g(3, rel);
  auto inv = iso_invariants(g);
  CHECK(inv.free_rank == 1);
  REQUIRE(inv.factors.size() == 2);
  CHECK(inv.factors[0] == 2);
  CHECK(inv.factors[1] == 2);

  // Z^2 modulo diag(2,3) is Z/6
  FgAbelianGroup h(2, IntMatrix::from_rows({{2, 0}, {0, 3}}));
  auto ih = iso_invariants(h);
  CHECK(ih.free_rank == 0);
  REQUIRE(ih.factors.size() == 1);
  CHECK(ih.factors[0] == 6);

  CHECK(iso_invariants(FgAbelianGroup()).is_trivial());
}

TEST_CASE("subquotient on the spec examples") {
  FgAbelianGroup z(1), triv;

  // Z --2--> Z --> 0 : homology Z/2
  GroupHom times2(z, z, IntMatrix::from_rows({{2}}));
  GroupHom to0 = GroupHom::zero(z, triv);
  auto sq = subquotient(times2, to0);
  CHECK(iso_invariants(sq.group) == IsoInvariants{0, {2}});

  // 0 --> Z --0--> Z : homology Z
  GroupHom from0 = GroupHom::zero(triv, z);
  GroupHom zero_zz = GroupHom::zero(z, z);
  auto sq2 = subquotient(from0, zero_zz);
  CHECK(iso_invariants(sq2.group) == IsoInvariants{1, {}});

  // Z^2 --[[1,1],[1,1]]--> Z^2 --[1,-1]--> Z : homology 0
  FgAbelianGroup z2(2);
  GroupHom b(z2, z2, IntMatrix::from_rows({{1, 1}, {1, 1}}));
  GroupHom c(z2, z, IntMatrix::from_rows({{1, -1}}));
  auto sq3 = subquotient(b, c);
  CHECK(iso_invariants(sq3.group).is_trivial());

  // exactness violation is reported
  GroupHom id_z = GroupHom::identity(z);
  CHECK_THROWS_WITH_AS(subquotient(id_z, id_z), "not a subgroup", ZlinalgError);
}

TEST_CASE("subquotient of an exact pair is trivial and sections round-trip") {
  FgAbelianGroup z2(2), z(1), triv;
  // Z --(1,2)--> Z^2 --[2,-1]--> Z is exact at the middle
  GroupHom in(z, z2, IntMatrix::from_rows({{1}, {2}}));
  GroupHom out(z2, z, IntMatrix::from_rows({{2, -1}}));
  auto sq = subquotient(in, out);
  CHECK(iso_invariants(sq.group).is_trivial());

  // projection of the section is the identity of the subquotient
  GroupHom times2(z, z, IntMatrix::from_rows({{2}}));
  auto q = subquotient(times2, GroupHom::zero(z, triv));
  auto back = project_to_subquotient(q, q.section);
  REQUIRE(back.has_value());
  CHECK(GroupHom(q.group, q.group, *back).equals(GroupHom::identity(q.group)));
}

TEST_CASE("induced maps on subquotients") {
  FgAbelianGroup z(1), triv;
  GroupHom times2(z, z, IntMatrix::from_rows({{2}}));
  auto h = subquotient(times2, GroupHom::zero(z, triv));  // Z/2

  // identity induces identity
  auto ind = induced_on_subquotient(GroupHom::identity(z), h, h);
  CHECK(ind.equals(GroupHom::identity(h.group)));

  // multiplication by 2 induces zero on Z/2
  auto ind2 = induced_on_subquotient(times2, h, h);
  CHECK(ind2.is_zero());

  // a boundary map induces zero on homology: d(x) = 2x from one copy of Z
  auto full = subquotient(GroupHom::zero(triv, z), GroupHom::zero(z, triv));
  auto ind3 = induced_on_subquotient(times2, full, h);
  CHECK(ind3.is_zero());

  // a map that does not preserve the cycle lattice fails
  FgAbelianGroup z2(2);
  GroupHom pr(z2, z, IntMatrix::from_rows({{1, 0}}));
  auto cyc = subquotient(GroupHom::zero(triv, z2),
                         GroupHom(z2, z, IntMatrix::from_rows({{0, 1}})));  // ker = Z e1
  GroupHom shear(z2, z2, IntMatrix::from_rows({{1, 0}, {1, 0}}));
  CHECK_THROWS_WITH_AS(induced_on_subquotient(shear, cyc, cyc), "does not descend",
                       ZlinalgError);
  (void)pr;
}

TEST_CASE("invariants unchanged by transposition-style reshuffles") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix a = random_matrix(rng, 3, 4);
    FgAbelianGroup g1(3, a);
    // permute relation columns: same lattice
    IntMatrix b(3, 4);
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t i = 0; i < 3; ++i) b(i, j) = a(i, 3 - j);
    FgAbelianGroup g2(3, b);
    CHECK(iso_invariants(g1) == iso_invariants(g2));
  }
}

#include <doctest.h>

#include <random>

#include "bredon/recognition.hpp"

using namespace bredon;

namespace {

const GroupDatum& K = GroupDatum::k4();
const GroupDatum& C = GroupDatum::c2();

// change of basis at every level by unimodular matrices: an isomorphic copy
MackeyFunctor conjugate(const MackeyFunctor& m, std::mt19937& rng) {
  const GroupDatum& g = *m.g;
  std::vector<IntMatrix> u(g.num_subgroups()), uinv(g.num_subgroups());
  std::uniform_int_distribution<int> d(-2, 2);
  for (SubId h = 0; h < g.num_subgroups(); ++h) {
    std::size_t n = m.level[h].ambient();
    // product of a unit lower and unit upper triangular matrix
    IntMatrix lo = IntMatrix::identity(n), hi = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        lo(i, j) = d(rng);
        hi(j, i) = d(rng);
      }
    u[h] = lo * hi;
    // invert exactly: solve u * x = id
    auto inv = solve_columns(u[h], IntMatrix::identity(n));
    REQUIRE(inv.has_value());
    uinv[h] = *inv;
  }
  MackeyFunctor out;
  out.g = &g;
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    out.level.push_back(FgAbelianGroup(m.level[h].ambient(), u[h] * m.level[h].relations()));
  for (std::size_t i = 0; i < g.covering_pairs().size(); ++i) {
    const auto& [up, lw] = g.covering_pairs()[i];
    out.res_c.push_back(
        GroupHom(out.level[up], out.level[lw], u[lw] * m.res_c[i].matrix * uinv[up]));
    out.tr_c.push_back(
        GroupHom(out.level[lw], out.level[up], u[up] * m.tr_c[i].matrix * uinv[lw]));
  }
  out.weyl.resize(g.num_subgroups());
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    for (const auto& w : m.weyl[h])
      out.weyl[h].push_back(
          GroupHom(out.level[h], out.level[h], u[h] * w.matrix * uinv[h]));
  return out;
}

}  // namespace

TEST_CASE("catalog fingerprints are pairwise distinct") {
  for (const GroupDatum* g : {&C, &K}) {
    auto cat = match_catalog(*g);
    std::vector<Fingerprint> fps;
    for (const auto& n : cat) fps.push_back(fingerprint(zoo(*g, n)));
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = i + 1; j < cat.size(); ++j) {
        INFO(cat[i], " vs ", cat[j]);
        CHECK(!(fps[i] == fps[j]));
      }
  }
}

TEST_CASE("duals are distinguished") {
  CHECK(!(fingerprint(zoo(C, "Z")) == fingerprint(zoo(C, "Z*"))));
  CHECK(!(fingerprint(zoo(K, "phi*Z")) == fingerprint(zoo(K, "phi*Z*"))));
  CHECK(!(fingerprint(zoo(K, "mg")) == fingerprint(zoo(K, "mg*"))));
}

TEST_CASE("fingerprint ignores zero summands and decompositions") {
  MackeyFunctor m = zoo(K, "phi*Q");
  CHECK(fingerprint(direct_sum(m, MackeyFunctor::zero(K))) == fingerprint(m));
}

TEST_CASE("fingerprint is stable under unimodular base change") {
  std::mt19937 rng(5150);
  for (const char* name : {"A", "I", "phi*Q", "sum up<Z>", "E", "mg"}) {
    MackeyFunctor m = zoo(K, name);
    for (int t = 0; t < 3; ++t) {
      MackeyFunctor c = conjugate(m, rng);
      REQUIRE(validate_axioms(c).ok);
      CHECK(fingerprint(c) == fingerprint(m));
    }
  }
}

TEST_CASE("match recovers pairs of catalog members") {
  auto cat = match_catalog(K);
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i; j < cat.size(); ++j) {
      MackeyFunctor sum = direct_sum(zoo(K, cat[i]), zoo(K, cat[j]));
      MatchResult r = match(sum, cat);
      INFO(cat[i], " + ", cat[j], " -> ", r.to_string());
      REQUIRE(r.recognized());
      std::vector<std::string> expect = {cat[i], cat[j]};
      std::sort(expect.begin(), expect.end());
      CHECK(r.names == expect);
    }
}

TEST_CASE("match results") {
  CHECK(match(MackeyFunctor::zero(K), match_catalog(K)).to_string() == "0");

  // a top-level Z/4 is outside the catalog
  MackeyFunctor odd = MackeyFunctor::zero(K);
  odd.level[K.full_sub()] = FgAbelianGroup::cyclic(4);
  for (auto& w : odd.weyl[K.full_sub()]) w = GroupHom::identity(odd.level[K.full_sub()]);
  // rebuild trivial structure maps with the right endpoints
  odd.res_c.clear();
  odd.tr_c.clear();
  for (const auto& [u, l] : K.covering_pairs()) {
    odd.res_c.push_back(GroupHom::zero(odd.level[u], odd.level[l]));
    odd.tr_c.push_back(GroupHom::zero(odd.level[l], odd.level[u]));
  }
  CHECK(match(odd, match_catalog(K)).status == MatchResult::Status::Unrecognized);
}

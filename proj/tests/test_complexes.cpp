#include <doctest.h>

#include "bredon/complexes.hpp"
#include "bredon/recognition.hpp"

using namespace bredon;

namespace {

const GroupDatum& K = GroupDatum::k4();
const GroupDatum& C = GroupDatum::c2();

SubId sub(const char* n) { return K.sub_by_name(n); }

void check_dsquared(const FreeComplex& c) {
  for (int i = c.lo + 2; i <= c.hi; ++i) {
    SpanMatrix dd = compose_spans(c.diff(i), c.diff(i - 1));
    INFO("degree ", i);
    CHECK(dd.is_zero());
  }
}

void check_dsquared(const MackeyComplex& c) {
  for (int i = c.lo + 2; i <= c.hi; ++i)
    for (std::size_t h = 0; h < c.term(i).level.size(); ++h) {
      // diff(i) lives at index i - lo - 1
      GroupHom dd = compose(c.diffs[i - c.lo - 2].comp[h], c.diffs[i - c.lo - 1].comp[h]);
      INFO("degree ", i, " level ", h);
      CHECK(dd.is_zero());
    }
}

std::string name_of(const MackeyFunctor& m) {
  return match(m, match_catalog(*m.g)).to_string();
}

long long euler_ranks(const MackeyComplex& c, SubId lvl) {
  long long chi = 0;
  for (int i = c.lo; i <= c.hi; ++i) {
    long long r = static_cast<long long>(c.term(i).level[lvl].free_rank());
    chi += (i % 2 == 0 ? r : -r);
  }
  return chi;
}

long long euler_homology(const MackeyComplex& c, SubId lvl) {
  long long chi = 0;
  for (int i = c.lo; i <= c.hi; ++i) {
    long long r = static_cast<long long>(homology(c, i).level[lvl].free_rank());
    chi += (i % 2 == 0 ? r : -r);
  }
  return chi;
}

}  // namespace

TEST_CASE("sign sphere complexes") {
  FreeComplex s0 = sphere_sigma(K, sub("L"), 0);
  CHECK(s0.lo == 0);
  CHECK(s0.hi == 0);
  CHECK(s0.term(0).orbits[0].stab == sub("K"));

  FreeComplex s5 = sphere_sigma(K, sub("L"), 5);
  check_dsquared(s5);
  CHECK(s5.term(3).orbits[0].stab == sub("L"));

  check_dsquared(sphere_sigma(C, C.trivial_sub(), 4));
}

TEST_CASE("smash terms of the regular representation sphere") {
  FreeComplex rho = suspension_complex(K, VirtualRep::rho_bar(1));
  CHECK(rho.lo == 0);
  CHECK(rho.hi == 3);
  CHECK(rho.term(0).num_orbits() == 1);
  CHECK(rho.term(1).num_orbits() == 3);
  // degree 2: three products K/H x K/J, each a single free orbit
  CHECK(rho.term(2).num_orbits() == 3);
  for (const Orbit& o : rho.term(2).orbits) CHECK(o.stab == sub("e"));
  // degree 3: K/L x K/D x K/R has eight points, i.e. two free orbits
  CHECK(rho.term(3).num_points() == 8);
  CHECK(rho.term(3).num_orbits() == 2);
  check_dsquared(rho);
  check_dsquared(suspension_complex(K, VirtualRep::rho_bar(2)));
  check_dsquared(suspension_complex(K, VirtualRep{0, {-1, -1, -1}}));
  check_dsquared(suspension_complex(K, VirtualRep{2, {1, -1, 0}}));

  // binomial bookkeeping: cell counts of a smash convolve
  FreeComplex a = sphere_sigma(K, sub("L"), 2), b = sphere_sigma(K, sub("D"), 3);
  FreeComplex ab = smash(a, b);
  for (int n = ab.lo; n <= ab.hi; ++n) {
    std::size_t expect = 0;
    for (int i = a.lo; i <= a.hi; ++i)
      if (n - i >= b.lo && n - i <= b.hi)
        expect += a.term(i).num_points() * b.term(n - i).num_points();
    CHECK(ab.term(n).num_points() == expect);
  }
}

TEST_CASE("C2 suspensions of the Burnside functor") {
  MackeyComplex s1 = realize(sphere_sigma(C, C.trivial_sub(), 1), zoo(C, "A"));
  check_dsquared(s1);
  CHECK(name_of(homology(s1, 0)) == "<Z>");
  CHECK(name_of(homology(s1, 1)) == "f");

  MackeyComplex s2 = realize(sphere_sigma(C, C.trivial_sub(), 2), zoo(C, "A"));
  CHECK(name_of(homology(s2, 0)) == "<Z>");
  CHECK(name_of(homology(s2, 1)) == "0");
  CHECK(name_of(homology(s2, 2)) == "Z");
  CHECK(name_of(homology(s2, 5)) == "0");  // out of range
}

TEST_CASE("single sign sphere over K4") {
  MackeyComplex s1 = realize(sphere_sigma(K, sub("L"), 1), zoo(K, "A"));
  // top level of H_0 is the cokernel of the transfer, of rank 3
  MackeyFunctor h0 = homology(s1, 0);
  CHECK(iso_invariants(h0.level[sub("K")]) == IsoInvariants{3, {}});
  CHECK(validate_axioms(h0).ok);
}

TEST_CASE("dualization") {
  FreeComplex c = suspension_complex(K, VirtualRep::rho_bar(1));
  FreeComplex dd = dualize(dualize(c));
  CHECK(dd.lo == c.lo);
  CHECK(dd.hi == c.hi);
  for (int i = c.lo; i <= c.hi; ++i) CHECK(dd.term(i).num_orbits() == c.term(i).num_orbits());
  for (int i = c.lo + 1; i <= c.hi; ++i) {
    SpanMatrix diff = c.diff(i), back = dd.diff(i);
    for (std::size_t a = 0; a < diff.e.size(); ++a)
      CHECK(diff.e[a] == back.e[a]);
  }

  // first desuspension of the C2 Burnside functor: pi_0 is ker(res) at the top
  MackeyComplex dual = realize(dualize(sphere_sigma(C, C.trivial_sub(), 1)), zoo(C, "A"));
  check_dsquared(dual);
  MackeyFunctor p0 = homology(dual, 0);
  CHECK(iso_invariants(p0.level[1]) == IsoInvariants{1, {}});

  // a complex with zero differentials has the homology of its dual
  FreeComplex flat;
  flat.g = &K;
  flat.lo = 0;
  flat.hi = 1;
  flat.terms = {single_orbit(K, sub("L")), single_orbit(K, sub("D"))};
  flat.diffs = {SpanMatrix::zero(flat.terms[1], flat.terms[0])};
  MackeyComplex rf = realize(flat, zoo(K, "A"));
  MackeyComplex rdf = realize(dualize(flat), zoo(K, "A"));
  for (int i = 0; i <= 1; ++i)
    CHECK(iso_invariants(homology(rf, i).level[sub("K")]) ==
          iso_invariants(homology(rdf, -i).level[sub("K")]));
}

TEST_CASE("rho-bar suspensions with small coefficients") {
  MackeyComplex ri = realize(suspension_complex(K, VirtualRep::rho_bar(1)), zoo(K, "I"));
  check_dsquared(ri);
  CHECK(name_of(homology(ri, 0)) == "<F2>^2 (+) <Z>");
  CHECK(name_of(homology(ri, 1)) == "phi*f");
  CHECK(name_of(homology(ri, 2)) == "0");
  CHECK(name_of(homology(ri, 3)) == "0");

  MackeyComplex ra = realize(suspension_complex(K, VirtualRep::rho_bar(1)), zoo(K, "A"));
  CHECK(name_of(homology(ra, 0)) == "<Z>");
  CHECK(name_of(homology(ra, 1)) == "phi*f");
  CHECK(name_of(homology(ra, 2)) == "0");
  CHECK(name_of(homology(ra, 3)) == "Z");
  for (int n = ra.lo; n <= ra.hi; ++n) CHECK(validate_axioms(homology(ra, n)).ok);
}

TEST_CASE("free cells kill coefficients that vanish at the bottom") {
  for (int k = 1; k <= 2; ++k) {
    MackeyComplex r = realize(suspension_complex(K, VirtualRep::rho_bar(k)), zoo(K, "I"));
    for (int n = k + 1; n <= r.hi; ++n) {
      INFO("k = ", k, ", n = ", n);
      CHECK(name_of(homology(r, n)) == "0");
    }
  }
}

TEST_CASE("euler characteristic is conserved levelwise") {
  for (const char* coeff : {"A", "I", "Z*"}) {
    MackeyComplex r =
        realize(suspension_complex(K, VirtualRep::rho_bar(1)), zoo(K, coeff));
    for (SubId h = 0; h < K.num_subgroups(); ++h)
      CHECK(euler_ranks(r, h) == euler_homology(r, h));
  }
  MackeyComplex neg =
      realize(suspension_complex(K, VirtualRep{0, {-1, -1, -1}}), zoo(K, "A"));
  for (SubId h = 0; h < K.num_subgroups(); ++h) {
    long long chi = 0, chih = 0;
    for (int i = neg.lo; i <= neg.hi; ++i) {
      long long sign = ((i % 2) == 0) ? 1 : -1;
      chi += sign * static_cast<long long>(neg.term(i).level[h].free_rank());
      chih += sign * static_cast<long long>(homology(neg, i).level[h].free_rank());
    }
    CHECK(chi == chih);
  }
}

TEST_CASE("smash factor order does not change homology") {
  std::vector<FreeComplex> factors = {sphere_sigma(K, sub("L"), 1),
                                      sphere_sigma(K, sub("D"), 1),
                                      sphere_sigma(K, sub("R"), 1)};
  FreeComplex fwd = smash({factors[0], factors[1], factors[2]});
  FreeComplex rev = smash({factors[2], factors[0], factors[1]});
  for (const char* coeff : {"A", "I"}) {
    MackeyComplex a = realize(fwd, zoo(K, coeff)), b = realize(rev, zoo(K, coeff));
    for (int n = a.lo; n <= a.hi; ++n)
      CHECK(fingerprint(homology(a, n)) == fingerprint(homology(b, n)));
  }
}

TEST_CASE("negative suspensions") {
  MackeyComplex r = realize(suspension_complex(K, VirtualRep{0, {-1, -1, -1}}), zoo(K, "I"));
  CHECK(r.lo == -3);
  CHECK(r.hi == 0);
  CHECK(name_of(homology(r, 0)) == "<Z>");
  CHECK(name_of(homology(r, -1)) == "E");
  CHECK(name_of(homology(r, -2)) == "0");
  CHECK(name_of(homology(r, -3)) == "0");

  MackeyComplex ra = realize(suspension_complex(K, VirtualRep{0, {-1, -1, -1}}), zoo(K, "A"));
  CHECK(name_of(homology(ra, 0)) == "<Z>");
  CHECK(name_of(homology(ra, -1)) == "E");
  CHECK(name_of(homology(ra, -3)) == "Z*");
}

TEST_CASE("cofiber long exact sequences on small inputs") {
  LesReport triv = verify_cofiber_les(sub("L"), VirtualRep::trivial(0),
                                      MackeyFunctor::zero(K), -2, 2);
  CHECK(triv.exact);

  LesReport a0 = verify_cofiber_les(sub("L"), VirtualRep::trivial(0), zoo(K, "A"), -2, 2);
  std::string a0_first = a0.failures.empty() ? std::string() : a0.failures[0];
  INFO(a0_first);
  CHECK(a0.exact);

  LesReport z1 = verify_cofiber_les(sub("D"), VirtualRep::rho_bar(1), zoo(K, "Z"), -1, 4);
  std::string z1_first = z1.failures.empty() ? std::string() : z1.failures[0];
  INFO(z1_first);
  CHECK(z1.exact);
}

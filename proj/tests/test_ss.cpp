#include <doctest.h>

#include "bredon/recognition.hpp"
#include "bredon/ss.hpp"

using namespace bredon;

namespace {

const GroupDatum& K = GroupDatum::k4();
const GroupDatum& C = GroupDatum::c2();

std::string name_of(const MackeyFunctor& m) {
  return match(m, match_catalog(*m.g)).to_string();
}

// restrict a realized bicomplex to an order-2 subgroup, reusing only the
// grid (pages never look at the underlying free complexes)
Bicomplex restrict_grid(const Bicomplex& b, SubId h) {
  Bicomplex r;
  r.g = &C;
  r.ilo = b.ilo;
  r.ihi = b.ihi;
  r.jlo = b.jlo;
  r.jhi = b.jhi;
  r.terms.resize(b.terms.size());
  r.dh.resize(b.dh.size());
  r.dv.resize(b.dv.size());
  for (std::size_t i = 0; i < b.terms.size(); ++i) {
    for (const auto& t : b.terms[i]) r.terms[i].push_back(restrict_to(h, t));
    for (const auto& f : b.dh[i]) r.dh[i].push_back(restrict_morphism(h, f));
    for (const auto& f : b.dv[i]) r.dv[i].push_back(restrict_morphism(h, f));
  }
  return r;
}

}  // namespace

TEST_CASE("C2 double complex for the two-fold sign suspension") {
  FreeComplex s = sphere_sigma(C, C.trivial_sub(), 1);
  Bicomplex b = bicomplex_from_smash(s, s, zoo(C, "A"));

  SpectralPage e1 = page(b, 1);
  CHECK(name_of(e1.entry(0, 0)) == "<Z>");
  CHECK(name_of(e1.entry(1, 0)) == "f");
  CHECK(name_of(e1.entry(0, 1)) == "0");
  // the (1,1) entry is the free functor on the free orbit with Z coefficients
  CHECK(iso_invariants(e1.entry(1, 1).level[0]) == IsoInvariants{2, {}});
  CHECK(iso_invariants(e1.entry(1, 1).level[1]) == IsoInvariants{1, {}});

  SpectralPage e2 = page(b, 2);
  CHECK(name_of(e2.entry(0, 0)) == "<Z>");
  CHECK(name_of(e2.entry(1, 1)) == "Z");
  CHECK(name_of(e2.entry(1, 0)) == "0");
  CHECK(name_of(e2.entry(0, 1)) == "0");

  TotalCompare cmp = compare_with_total(b);
  CHECK(cmp.consistent);
  CHECK(cmp.extension_degrees().empty());
}

TEST_CASE("first page of the 2 rho-bar spectral sequence for I") {
  FreeComplex rho = suspension_complex(K, VirtualRep::rho_bar(1));
  Bicomplex b = bicomplex_from_smash(rho, rho, zoo(K, "I"));

  SpectralPage e1 = page(b, 1);
  CHECK(name_of(e1.entry(0, 0)) == "<F2>^2 (+) <Z>");
  CHECK(name_of(e1.entry(1, 0)) == "phi*f");
  CHECK(name_of(e1.entry(1, 1)) == "sum up<Z>");
  CHECK(name_of(e1.entry(0, 1)) == "0");
  CHECK(name_of(e1.entry(2, 1)) == "0");
  CHECK(name_of(e1.entry(2, 2)) == "0");

  SpectralPage e2 = page(b, 2);
  CHECK(name_of(e2.entry(0, 0)) == "<F2>^2 (+) <Z>");
  CHECK(name_of(e2.entry(1, 1)) == "phi*Z");
  CHECK(name_of(e2.entry(1, 0)) == "0");

  TotalCompare cmp = compare_with_total(b);
  CHECK(cmp.consistent);
  CHECK(cmp.extension_degrees().empty());
}

TEST_CASE("pages restrict to the C2 pages levelwise") {
  FreeComplex rho = suspension_complex(K, VirtualRep::rho_bar(1));
  Bicomplex b = bicomplex_from_smash(rho, rho, zoo(K, "I"));
  SpectralPage e1 = page(b, 1);
  SpectralPage e2 = page(b, 2);
  for (SubId h : K.index_two_chain()) {
    Bicomplex rb = restrict_grid(b, h);
    SpectralPage re1 = page(rb, 1);
    SpectralPage re2 = page(rb, 2);
    for (int i = b.ilo; i <= b.ihi; ++i)
      for (int j = b.jlo; j <= b.jhi; ++j) {
        INFO("entry (", i, ",", j, ") at subgroup ", K.sub_name(h));
        CHECK(fingerprint(restrict_to(h, e1.entry(i, j))) ==
              fingerprint(re1.entry(i, j)));
        CHECK(fingerprint(restrict_to(h, e2.entry(i, j))) ==
              fingerprint(re2.entry(i, j)));
      }
  }
}

TEST_CASE("a bicomplex concentrated in one row has that row's homology") {
  FreeComplex rho = suspension_complex(K, VirtualRep::rho_bar(1));
  FreeComplex pt = unit_complex(K);
  Bicomplex b = bicomplex_from_smash(rho, pt, zoo(K, "A"));
  SpectralPage e2 = page(b, 2);
  MackeyComplex direct = realize(rho, zoo(K, "A"));
  for (int i = b.ilo; i <= b.ihi; ++i)
    CHECK(fingerprint(e2.entry(i, 0)) == fingerprint(homology(direct, i)));
  TotalCompare cmp = compare_with_total(b);
  CHECK(cmp.consistent);
  CHECK(cmp.extension_degrees().empty());
}

TEST_CASE("levelwise rank bookkeeping of a bicomplex") {
  FreeComplex rho = suspension_complex(K, VirtualRep::rho_bar(1));
  Bicomplex b = bicomplex_from_smash(rho, rho, zoo(K, "A"));
  MackeyComplex tot = realize(smash(rho, rho), zoo(K, "A"));
  for (SubId h = 0; h < K.num_subgroups(); ++h) {
    long long grid = 0;
    for (int i = b.ilo; i <= b.ihi; ++i)
      for (int j = b.jlo; j <= b.jhi; ++j) {
        long long r = static_cast<long long>(b.term(i, j).level[h].free_rank());
        grid += ((i + j) % 2 == 0) ? r : -r;
      }
    long long hom = 0;
    for (int n = tot.lo; n <= tot.hi; ++n) {
      long long r = static_cast<long long>(homology(tot, n).level[h].free_rank());
      hom += (n % 2 == 0) ? r : -r;
    }
    CHECK(grid == hom);
  }
}

#include <doctest.h>

#include <random>

#include "bredon/json_io.hpp"
#include "bredon/mackey.hpp"
#include "bredon/recognition.hpp"

using namespace bredon;

namespace {

const GroupDatum& K = GroupDatum::k4();
const GroupDatum& C = GroupDatum::c2();

SubId sub(const char* n) { return K.sub_by_name(n); }

bool functor_zero(const MackeyFunctor& m) {
  for (const auto& lv : m.level)
    if (!lv.is_trivial()) return false;
  return true;
}

}  // namespace

TEST_CASE("every named functor satisfies the axioms") {
  for (const GroupDatum* g : {&C, &K})
    for (const auto& name : zoo_names(*g)) {
      AxiomReport rep = validate_axioms(zoo(*g, name));
      INFO(name, ": ", rep.violations.empty() ? "" : rep.violations[0]);
      CHECK(rep.ok);
    }
}

TEST_CASE("Burnside functor matrices") {
  MackeyFunctor a = zoo(K, "A");
  CHECK(iso_invariants(a.level[sub("K")]) == IsoInvariants{5, {}});
  CHECK(a.res(sub("K"), sub("L")).matrix ==
        IntMatrix::from_rows({{2, 0, 1, 1, 0}, {0, 2, 0, 0, 1}}));
  CHECK(a.res(sub("K"), sub("D")).matrix ==
        IntMatrix::from_rows({{2, 1, 0, 1, 0}, {0, 0, 2, 0, 1}}));
  CHECK(a.tr(sub("L"), sub("K")).matrix ==
        IntMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 0}}));
  // derived full restriction: counts fixed points of the underlying sets
  CHECK(a.res(sub("K"), sub("e")).matrix == IntMatrix::from_rows({{4, 2, 2, 2, 1}}));
}

TEST_CASE("a corrupted transfer violates the double coset identity") {
  MackeyFunctor a = zoo(K, "A");
  int idx = a.cover_index(sub("K"), sub("L"));
  a.tr_c[idx] = a.tr_c[idx].scaled(-1);
  AxiomReport rep = validate_axioms(a);
  CHECK(!rep.ok);
  bool mentions_dc = false;
  for (const auto& v : rep.violations)
    mentions_dc = mentions_dc || v.find("double coset") != std::string::npos;
  CHECK(mentions_dc);
}

TEST_CASE("I is the paper's augmentation kernel") {
  MackeyFunctor i = zoo(K, "I");
  CHECK(i.level[sub("e")].is_trivial());
  CHECK(iso_invariants(i.level[sub("K")]) == IsoInvariants{4, {}});
  CHECK(iso_invariants(i.level[sub("L")]) == IsoInvariants{1, {}});

  // hand transcription of the Lewis diagram of I
  MackeyFunctor expect = MackeyFunctor::zero(K);
  expect.level = {FgAbelianGroup(0), FgAbelianGroup(1), FgAbelianGroup(1),
                  FgAbelianGroup(1), FgAbelianGroup(4)};
  expect.res_c.clear();
  expect.tr_c.clear();
  for (const auto& [u, l] : K.covering_pairs()) {
    expect.res_c.push_back(GroupHom::zero(expect.level[u], expect.level[l]));
    expect.tr_c.push_back(GroupHom::zero(expect.level[l], expect.level[u]));
  }
  auto set_res = [&](SubId u, SubId l, IntMatrix m) {
    expect.res_c[expect.cover_index(u, l)] = GroupHom(expect.level[u], expect.level[l], m);
  };
  auto set_tr = [&](SubId l, SubId u, IntMatrix m) {
    expect.tr_c[expect.cover_index(u, l)] = GroupHom(expect.level[l], expect.level[u], m);
  };
  set_res(sub("K"), sub("L"), IntMatrix::from_rows({{2, 0, 1, 1}}));
  set_res(sub("K"), sub("D"), IntMatrix::from_rows({{2, 1, 0, 1}}));
  set_res(sub("K"), sub("R"), IntMatrix::from_rows({{2, 1, 1, 0}}));
  set_tr(sub("L"), sub("K"), IntMatrix::from_rows({{1}, {-2}, {0}, {0}}));
  set_tr(sub("D"), sub("K"), IntMatrix::from_rows({{1}, {0}, {-2}, {0}}));
  set_tr(sub("R"), sub("K"), IntMatrix::from_rows({{1}, {0}, {0}, {-2}}));
  expect.weyl.assign(K.num_subgroups(), {});
  for (SubId h = 0; h < K.num_subgroups(); ++h)
    for (std::size_t w = 0; w < K.weyl_gens(h).size(); ++w)
      expect.weyl[h].push_back(GroupHom::identity(expect.level[h]));

  CHECK(validate_axioms(expect).ok);
  CHECK(fingerprint(i) == fingerprint(expect));
}

TEST_CASE("free functors have the stated levels") {
  MackeyFunctor ae = zoo(K, "A_{K/e}");
  CHECK(iso_invariants(ae.level[sub("K")]) == IsoInvariants{1, {}});
  for (const char* h : {"L", "D", "R"})
    CHECK(iso_invariants(ae.level[sub(h)]) == IsoInvariants{2, {}});
  CHECK(iso_invariants(ae.level[sub("e")]) == IsoInvariants{4, {}});

  MackeyFunctor al = zoo(K, "A_{K/L}");
  CHECK(iso_invariants(al.level[sub("K")]) == IsoInvariants{2, {}});
  CHECK(iso_invariants(al.level[sub("L")]) == IsoInvariants{4, {}});
  CHECK(iso_invariants(al.level[sub("D")]) == IsoInvariants{1, {}});
  CHECK(iso_invariants(al.level[sub("e")]) == IsoInvariants{2, {}});

  // the fixed orbit represents the Burnside functor itself
  CHECK(fingerprint(free_on(single_orbit(K, sub("K")))) == fingerprint(zoo(K, "A")));
}

TEST_CASE("hand-built A_{K/L} from the Lewis diagram") {
  // levels: K: A(L), L: Z[K/L] (x) A(L), D and R: A(e), e: Z[K/L] (x) A(e)
  MackeyFunctor expect = MackeyFunctor::zero(K);
  expect.level = {FgAbelianGroup(2), FgAbelianGroup(4), FgAbelianGroup(1),
                  FgAbelianGroup(1), FgAbelianGroup(2)};
  expect.res_c.clear();
  expect.tr_c.clear();
  for (const auto& [u, l] : K.covering_pairs()) {
    expect.res_c.push_back(GroupHom::zero(expect.level[u], expect.level[l]));
    expect.tr_c.push_back(GroupHom::zero(expect.level[l], expect.level[u]));
  }
  auto set_res = [&](SubId u, SubId l, IntMatrix m) {
    expect.res_c[expect.cover_index(u, l)] = GroupHom(expect.level[u], expect.level[l], m);
  };
  auto set_tr = [&](SubId l, SubId u, IntMatrix m) {
    expect.tr_c[expect.cover_index(u, l)] = GroupHom(expect.level[l], expect.level[u], m);
  };
  set_res(sub("K"), sub("L"), IntMatrix::from_rows({{1, 0}, {0, 1}, {1, 0}, {0, 1}}));
  set_res(sub("K"), sub("D"), IntMatrix::from_rows({{2, 1}}));
  set_res(sub("K"), sub("R"), IntMatrix::from_rows({{2, 1}}));
  set_tr(sub("L"), sub("K"), IntMatrix::from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}}));
  set_tr(sub("D"), sub("K"), IntMatrix::from_rows({{1}, {0}}));
  set_tr(sub("R"), sub("K"), IntMatrix::from_rows({{1}, {0}}));
  set_res(sub("L"), sub("e"),
          IntMatrix::from_rows({{2, 1, 0, 0}, {0, 0, 2, 1}}));
  set_res(sub("D"), sub("e"), IntMatrix::from_rows({{1}, {1}}));
  set_res(sub("R"), sub("e"), IntMatrix::from_rows({{1}, {1}}));
  set_tr(sub("e"), sub("L"),
          IntMatrix::from_rows({{1, 0}, {0, 0}, {0, 1}, {0, 0}}));
  set_tr(sub("e"), sub("D"), IntMatrix::from_rows({{1, 1}}));
  set_tr(sub("e"), sub("R"), IntMatrix::from_rows({{1, 1}}));
  expect.weyl.assign(K.num_subgroups(), {});
  for (SubId h = 0; h < K.num_subgroups(); ++h)
    for (std::size_t w = 0; w < K.weyl_gens(h).size(); ++w)
      expect.weyl[h].push_back(GroupHom::identity(expect.level[h]));
  // Weyl swaps of the induced copies at levels L and e
  IntMatrix sw2 = IntMatrix::from_rows({{0, 1}, {1, 0}});
  IntMatrix sw4 = IntMatrix::from_rows(
      {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  expect.weyl[sub("L")][0] = GroupHom(expect.level[sub("L")], expect.level[sub("L")], sw4);
  // at the bottom, l fixes the cosets and r (hence d) swaps them
  expect.weyl[sub("e")][1] = GroupHom(expect.level[sub("e")], expect.level[sub("e")], sw2);

  REQUIRE(validate_axioms(expect).ok);
  CHECK(fingerprint(zoo(K, "A_{K/L}")) == fingerprint(expect));
}

TEST_CASE("span realizations match the labeled differentials") {
  MackeyFunctor a = zoo(K, "A");
  FinGSet kl = single_orbit(K, sub("L"));
  FinGSet kk = single_orbit(K, sub("K"));

  // counit at the top level is the transfer
  SpanMatrix counit = SpanMatrix::zero(kl, kk);
  counit.e[0][0] = {SpanTerm{tr_span(K, sub("L"), sub("K")), 1}};
  MackeyMorphism f = realize_span_morphism(counit, a);
  CHECK(f.comp[sub("K")].matrix == a.tr(sub("L"), sub("K")).matrix);

  // 1 + eps doubles at the top, 1 - eps kills it
  SpanMatrix plus = SpanMatrix::zero(kl, kl);
  plus.e[0][0] = combo_add({SpanTerm{identity_span(K, sub("L")), 1}},
                           {SpanTerm{weyl_span(K, sub("L"), 2), 1}});
  MackeyMorphism fp = realize_span_morphism(plus, a);
  CHECK(fp.comp[sub("K")].matrix == IntMatrix::identity(2).scaled(2));
  SpanMatrix minus = SpanMatrix::zero(kl, kl);
  minus.e[0][0] = combo_add({SpanTerm{identity_span(K, sub("L")), 1}},
                            {SpanTerm{weyl_span(K, sub("L"), 2), -1}});
  MackeyMorphism fm = realize_span_morphism(minus, a);
  CHECK(fm.comp[sub("K")].is_zero());
}

TEST_CASE("realization is functorial on random spans") {
  std::mt19937 rng(904);
  MackeyFunctor a = zoo(K, "A");
  for (int trial = 0; trial < 25; ++trial) {
    SubId x = rng() % 5, y = rng() % 5, z = rng() % 5;
    FinGSet sx = single_orbit(K, x), sy = single_orbit(K, y), sz = single_orbit(K, z);
    auto bx = span_basis(sx, sy);
    auto by = span_basis(sy, sz);
    SpanMatrix u = SpanMatrix::zero(sx, sy);
    u.e[0][0] = {SpanTerm{bx[rng() % bx.size()], 1 + (long long)(rng() % 3)}};
    SpanMatrix v = SpanMatrix::zero(sy, sz);
    v.e[0][0] = {SpanTerm{by[rng() % by.size()], 1}};
    MackeyMorphism lhs = realize_span_morphism(compose_spans(u, v), a);
    MackeyMorphism rhs = compose(realize_span_morphism(v, a), realize_span_morphism(u, a));
    for (SubId h = 0; h < K.num_subgroups(); ++h) CHECK(lhs.comp[h].equals(rhs.comp[h]));
  }
}

TEST_CASE("inflation") {
  MackeyFunctor pf = inflate(sub("L"), zoo(C, "f"));
  CHECK(pf.level[sub("K")].is_trivial());
  CHECK(iso_invariants(pf.level[sub("L")]) == IsoInvariants{1, {}});
  CHECK(pf.level[sub("D")].is_trivial());
  CHECK(pf.level[sub("e")].is_trivial());
  CHECK(pf.weyl[sub("L")][0].matrix == IntMatrix::from_rows({{-1}}));
  CHECK(validate_axioms(pf).ok);

  // phi*f is the sum of the three inflations of f
  MackeyFunctor sum = direct_sum(
      {inflate(sub("L"), zoo(C, "f")), inflate(sub("D"), zoo(C, "f")),
       inflate(sub("R"), zoo(C, "f"))},
      K);
  CHECK(fingerprint(sum) == fingerprint(zoo(K, "phi*f")));
}

TEST_CASE("restriction and induction") {
  MackeyFunctor a = zoo(K, "A");
  MackeyFunctor ra = restrict_to(sub("L"), a);
  CHECK(iso_invariants(ra.level[0]) == IsoInvariants{1, {}});
  CHECK(iso_invariants(ra.level[1]) == IsoInvariants{2, {}});
  CHECK(validate_axioms(ra).ok);
  CHECK(fingerprint(ra) == fingerprint(zoo(C, "A")));

  CHECK(fingerprint(induce(sub("L"), ra)) == fingerprint(zoo(K, "A_{K/L}")));
  CHECK(validate_axioms(induce(sub("D"), zoo(C, "Q"))).ok);
}

TEST_CASE("box and hom realizations on selected functors") {
  // box with an order-2 orbit against induction-restriction
  for (const char* name : {"A", "Z", "phi*Q", "mg", "sum up<Z>", "E", "I"}) {
    MackeyFunctor m = zoo(K, name);
    for (SubId h : K.index_two_chain()) {
      CHECK(fingerprint(realize_box_free(single_orbit(K, h), m)) ==
            fingerprint(induce(h, restrict_to(h, m))));
    }
    CHECK(fingerprint(realize_box_free(single_orbit(K, sub("K")), m)) == fingerprint(m));
  }
  // hom evaluation: top level of Hom(A_{K/H}, M) is M(K/H)
  for (const char* name : {"A", "Z*", "phi*Z", "<F2>"}) {
    MackeyFunctor m = zoo(K, name);
    for (SubId h = 0; h < K.num_subgroups(); ++h) {
      MackeyFunctor hom = realize_hom_free(single_orbit(K, h), m);
      CHECK(iso_invariants(hom.level[sub("K")]) == iso_invariants(m.level[h]));
      CHECK(validate_axioms(hom).ok);
    }
  }
  // hom from a free orbit into a top-concentrated functor vanishes
  MackeyFunctor h0 = realize_hom_free(single_orbit(K, sub("e")), zoo(K, "<F2>"));
  CHECK(functor_zero(h0));
  // the box realization with the empty set is zero
  CHECK(functor_zero(realize_box_free(FinGSet{&K, {}}, zoo(K, "A"))));
}

TEST_CASE("kernels and cokernels") {
  MackeyFunctor z = zoo(K, "Z");
  CokernelResult c = cokernel(z, z, identity_morphism(z));
  CHECK(functor_zero(c.functor));

  KernelResult k = kernel(z, z, identity_morphism(z));
  CHECK(functor_zero(k.functor));

  // J is the cokernel of Z* -> A by construction; check it validates
  CHECK(validate_axioms(zoo(K, "J")).ok);
  CHECK(zoo(K, "J").level[sub("e")].is_trivial());
}

TEST_CASE("json round trip is faithful and deterministic") {
  for (const char* name : {"A", "I", "phi*Q", "sum up<Z>", "A_{K/L}"}) {
    MackeyFunctor m = zoo(K, name);
    auto j = mackey_to_json(m);
    MackeyFunctor back = mackey_from_json(j);
    CHECK(validate_axioms(back).ok);
    CHECK(fingerprint(back) == fingerprint(m));
    CHECK(j.dump() == mackey_to_json(m).dump());
    CHECK(mackey_to_json(back).dump() == j.dump());
  }
  MackeyFunctor q = zoo(C, "Q");
  CHECK(fingerprint(mackey_from_json(mackey_to_json(q))) == fingerprint(q));
}

#include "bredon/verify.hpp"

#include <sstream>

namespace bredon {

namespace {

bool functor_is_zero(const MackeyFunctor& m) {
  for (const auto& lv : m.level)
    if (!lv.is_trivial()) return false;
  return true;
}

}  // namespace

CheckReport verify_axioms() {
  CheckReport rep;
  for (const GroupDatum* g : {&GroupDatum::c2(), &GroupDatum::k4()}) {
    for (const auto& name : zoo_names(*g)) {
      AxiomReport a = validate_axioms(zoo(*g, name));
      std::string detail;
      for (const auto& v : a.violations) detail += v + "; ";
      rep.add((g->kind() == GroupKind::K4 ? "K4 " : "C2 ") + name + " axioms", a.ok,
              detail);
    }
  }
  return rep;
}

CheckReport verify_ses() {
  CheckReport rep;
  const GroupDatum& g = GroupDatum::k4();
  MackeyFunctor a = zoo(g, "A"), z = zoo(g, "Z"), zs = zoo(g, "Z*");

  MackeyMorphism aug;
  aug.comp.push_back(GroupHom(a.level[0], z.level[0], IntMatrix::from_rows({{1}})));
  for (SubId h : g.index_two_chain())
    aug.comp.push_back(GroupHom(a.level[h], z.level[h], IntMatrix::from_rows({{2, 1}})));
  aug.comp.push_back(
      GroupHom(a.level[g.full_sub()], z.level[g.full_sub()],
               IntMatrix::from_rows({{4, 2, 2, 2, 1}})));
  rep.add("augmentation A -> Z is a morphism", is_morphism(a, z, aug));

  KernelResult ker = kernel(a, z, aug);
  rep.add("kernel of augmentation matches I",
          fingerprint(ker.functor) == fingerprint(zoo(g, "I")));
  rep.add("I vanishes at the bottom level", ker.functor.level[0].is_trivial());
  rep.add("kernel inclusion composes to zero",
          morphism_is_zero(compose(aug, ker.inclusion)));
  for (SubId h = 0; h < g.num_subgroups(); ++h) {
    bool surj = cokernel_invariants(aug.comp[h]).is_trivial();
    bool inj = kernel_invariants(ker.inclusion.comp[h]).is_trivial();
    rep.add("I -> A -> Z exact at " + g.sub_name(h), surj && inj);
  }

  MackeyMorphism dual;
  dual.comp.push_back(GroupHom(zs.level[0], a.level[0], IntMatrix::from_rows({{1}})));
  for (SubId h : g.index_two_chain())
    dual.comp.push_back(GroupHom(zs.level[h], a.level[h], IntMatrix::from_rows({{1}, {0}})));
  dual.comp.push_back(GroupHom(zs.level[g.full_sub()], a.level[g.full_sub()],
                               IntMatrix::from_rows({{1}, {0}, {0}, {0}, {0}})));
  rep.add("Z* -> A is a morphism", is_morphism(zs, a, dual));
  CokernelResult cok = cokernel(zs, a, dual);
  rep.add("cokernel of Z* -> A matches J",
          fingerprint(cok.functor) == fingerprint(zoo(g, "J")));
  rep.add("cokernel projection composes to zero",
          morphism_is_zero(compose(cok.projection, dual)));
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    rep.add("Z* -> A injective at " + g.sub_name(h),
            kernel_invariants(dual.comp[h]).is_trivial());
  return rep;
}

CheckReport verify_boxformula() {
  CheckReport rep;
  for (const GroupDatum* gp : {&GroupDatum::c2(), &GroupDatum::k4()}) {
    const GroupDatum& g = *gp;
    std::string pre = g.kind() == GroupKind::K4 ? "K4 " : "C2 ";
    for (const auto& name : zoo_names(g)) {
      MackeyFunctor m = zoo(g, name);
      // top orbit: the box realization is the functor itself
      rep.add(pre + name + " box with fixed orbit",
              fingerprint(realize_box_free(single_orbit(g, g.full_sub()), m)) ==
                  fingerprint(m));
      // free orbit: induction from the trivial subgroup of the bottom group
      rep.add(pre + name + " box with free orbit",
              fingerprint(realize_box_free(single_orbit(g, g.trivial_sub()), m)) ==
                  fingerprint(induce_from_trivial(g, m.level[g.trivial_sub()])));
      if (g.kind() == GroupKind::K4)
        for (SubId h : g.index_two_chain())
          rep.add(pre + name + " box formula at " + g.sub_name(h),
                  fingerprint(realize_box_free(single_orbit(g, h), m)) ==
                      fingerprint(induce(h, restrict_to(h, m))));
      // evaluation of maps out of frees at the top level
      for (SubId h = 0; h < g.num_subgroups(); ++h) {
        MackeyFunctor hom = realize_hom_free(single_orbit(g, h), m);
        rep.add(pre + name + " hom evaluation at " + g.sub_name(h),
                iso_invariants(hom.level[g.full_sub()]) == iso_invariants(m.level[h]));
      }
    }
  }
  return rep;
}

CheckReport verify_les(int kmax) {
  CheckReport rep;
  const GroupDatum& g = GroupDatum::k4();
  for (const char* coeff : {"A", "Z", "I"})
    for (SubId h : g.index_two_chain())
      for (int k = 0; k <= kmax; ++k) {
        LesReport les =
            verify_cofiber_les(h, VirtualRep::rho_bar(k), zoo(g, coeff), -3, k + 3);
        std::ostringstream name;
        name << "cofiber LES " << coeff << " sigma_" << g.sub_name(h) << " on " << k
             << " rho-bar";
        std::string detail;
        for (const auto& f : les.failures) detail += f + "; ";
        rep.add(name.str(), les.exact, detail);
      }
  return rep;
}

CheckReport verify_sscompare() {
  CheckReport rep;
  {
    const GroupDatum& c2 = GroupDatum::c2();
    FreeComplex s = sphere_sigma(c2, c2.trivial_sub(), 1);
    Bicomplex b = bicomplex_from_smash(s, s, zoo(c2, "A"));
    SpectralPage e2 = page(b, 2);
    auto cat = match_catalog(c2);
    rep.add("C2 sigma^2 page entry (0,0)",
            match(e2.entry(0, 0), cat).to_string() == "<Z>");
    rep.add("C2 sigma^2 page entry (1,1)", match(e2.entry(1, 1), cat).to_string() == "Z");
    rep.add("C2 sigma^2 page entry (1,0)", functor_is_zero(e2.entry(1, 0)));
    rep.add("C2 sigma^2 page entry (0,1)", functor_is_zero(e2.entry(0, 1)));
    TotalCompare cmp = compare_with_total(b);
    rep.add("C2 sigma^2 consistent with total homology", cmp.consistent);
    rep.add("C2 sigma^2 without extension degrees", cmp.extension_degrees().empty());
  }
  {
    const GroupDatum& g = GroupDatum::k4();
    Bicomplex b =
        bicomplex_from_smash(suspension_complex(g, VirtualRep::rho_bar(1)),
                             suspension_complex(g, VirtualRep::rho_bar(1)), zoo(g, "I"));
    SpectralPage e2 = page(b, 2);
    auto cat = match_catalog(g);
    rep.add("K4 I 2rho page entry (1,1)",
            match(e2.entry(1, 1), cat).to_string() == "phi*Z");
    rep.add("K4 I 2rho page entry (0,0)",
            match(e2.entry(0, 0), cat).to_string() == "<F2>^2 (+) <Z>");
    TotalCompare cmp = compare_with_total(b);
    rep.add("K4 I 2rho consistent with total homology", cmp.consistent);
  }
  return rep;
}

CheckReport verify_all() {
  CheckReport rep;
  rep.merge(verify_axioms());
  rep.merge(verify_ses());
  rep.merge(verify_boxformula());
  rep.merge(verify_les());
  rep.merge(verify_sscompare());
  return rep;
}

CheckReport verify_suite(const std::string& name) {
  if (name == "axioms") return verify_axioms();
  if (name == "ses") return verify_ses();
  if (name == "boxformula") return verify_boxformula();
  if (name == "les") return verify_les();
  if (name == "sscompare") return verify_sscompare();
  if (name == "all") return verify_all();
  throw MackeyError("unknown verify suite: " + name);
}

}  // namespace bredon

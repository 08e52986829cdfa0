#include "bredon/mackey.hpp"

#include <algorithm>
#include <sstream>

namespace bredon {

MackeyFunctor MackeyFunctor::zero(const GroupDatum& g) {
  MackeyFunctor m;
  m.g = &g;
  m.level.assign(g.num_subgroups(), FgAbelianGroup());
  for (const auto& [u, l] : g.covering_pairs()) {
    m.res_c.push_back(GroupHom::zero(m.level[u], m.level[l]));
    m.tr_c.push_back(GroupHom::zero(m.level[l], m.level[u]));
  }
  m.weyl.resize(g.num_subgroups());
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    for (std::size_t i = 0; i < g.weyl_gens(h).size(); ++i)
      m.weyl[h].push_back(GroupHom::identity(m.level[h]));
  return m;
}

int MackeyFunctor::cover_index(SubId upper, SubId lower) const {
  const auto& cp = g->covering_pairs();
  for (std::size_t i = 0; i < cp.size(); ++i)
    if (cp[i].first == upper && cp[i].second == lower) return static_cast<int>(i);
  throw MackeyError("not a covering pair");
}

GroupHom MackeyFunctor::res(SubId from, SubId to) const {
  if (from == to) return GroupHom::identity(level[from]);
  if (!g->sub_leq(to, from)) throw MackeyError("res: not a subgroup pair");
  for (std::size_t i = 0; i < g->covering_pairs().size(); ++i) {
    const auto& [u, l] = g->covering_pairs()[i];
    if (u == from && l == to) return res_c[i];
  }
  // composite: go through the first intermediate subgroup
  for (SubId mid = 0; mid < g->num_subgroups(); ++mid)
    if (mid != from && mid != to && g->sub_leq(to, mid) && g->sub_leq(mid, from))
      return compose(res(mid, to), res(from, mid));
  throw MackeyError("res: no chain found");
}

GroupHom MackeyFunctor::tr(SubId from, SubId to) const {
  if (from == to) return GroupHom::identity(level[from]);
  if (!g->sub_leq(from, to)) throw MackeyError("tr: not a subgroup pair");
  for (std::size_t i = 0; i < g->covering_pairs().size(); ++i) {
    const auto& [u, l] = g->covering_pairs()[i];
    if (u == to && l == from) return tr_c[i];
  }
  for (SubId mid = 0; mid < g->num_subgroups(); ++mid)
    if (mid != from && mid != to && g->sub_leq(from, mid) && g->sub_leq(mid, to))
      return compose(tr(mid, to), tr(from, mid));
  throw MackeyError("tr: no chain found");
}

GroupHom MackeyFunctor::weyl_action(SubId h, Elem w) const {
  GroupHom out = GroupHom::identity(level[h]);
  for (int i : g->weyl_word(h, w)) out = compose(weyl[h][i], out);
  return out;
}

MackeyMorphism zero_morphism(const MackeyFunctor& a, const MackeyFunctor& b) {
  MackeyMorphism f;
  for (SubId h = 0; h < a.g->num_subgroups(); ++h)
    f.comp.push_back(GroupHom::zero(a.level[h], b.level[h]));
  return f;
}

MackeyMorphism identity_morphism(const MackeyFunctor& m) {
  MackeyMorphism f;
  for (SubId h = 0; h < m.g->num_subgroups(); ++h)
    f.comp.push_back(GroupHom::identity(m.level[h]));
  return f;
}

MackeyMorphism compose(const MackeyMorphism& g, const MackeyMorphism& f) {
  MackeyMorphism out;
  for (std::size_t h = 0; h < f.comp.size(); ++h)
    out.comp.push_back(compose(g.comp[h], f.comp[h]));
  return out;
}

MackeyMorphism add(const MackeyMorphism& a, const MackeyMorphism& b) {
  MackeyMorphism out;
  for (std::size_t h = 0; h < a.comp.size(); ++h) out.comp.push_back(a.comp[h] + b.comp[h]);
  return out;
}

MackeyMorphism negate(const MackeyMorphism& a) {
  MackeyMorphism out;
  for (const auto& c : a.comp) out.comp.push_back(-c);
  return out;
}

bool morphism_is_zero(const MackeyMorphism& f) {
  for (const auto& c : f.comp)
    if (!c.is_zero()) return false;
  return true;
}

bool is_morphism(const MackeyFunctor& a, const MackeyFunctor& b, const MackeyMorphism& f) {
  const GroupDatum& g = *a.g;
  for (const auto& c : f.comp)
    if (!c.well_defined()) return false;
  for (std::size_t i = 0; i < g.covering_pairs().size(); ++i) {
    const auto& [u, l] = g.covering_pairs()[i];
    if (!compose(f.comp[l], a.res_c[i]).equals(compose(b.res_c[i], f.comp[u]))) return false;
    if (!compose(f.comp[u], a.tr_c[i]).equals(compose(b.tr_c[i], f.comp[l]))) return false;
  }
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    for (std::size_t i = 0; i < g.weyl_gens(h).size(); ++i)
      if (!compose(f.comp[h], a.weyl[h][i]).equals(compose(b.weyl[h][i], f.comp[h])))
        return false;
  return true;
}

AxiomReport validate_axioms(const MackeyFunctor& m) {
  const GroupDatum& g = *m.g;
  AxiomReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.violations.push_back(s);
  };

  for (SubId h = 0; h < g.num_subgroups(); ++h) {
    const auto& gens = g.weyl_gens(h);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const GroupHom& w = m.weyl[h][i];
      if (!w.well_defined()) fail("weyl generator not well defined at " + g.sub_name(h));
      if (!compose(w, w).equals(GroupHom::identity(m.level[h])))
        fail("weyl generator not an involution at " + g.sub_name(h));
      for (std::size_t k = i + 1; k < gens.size(); ++k)
        if (!compose(w, m.weyl[h][k]).equals(compose(m.weyl[h][k], w)))
          fail("weyl generators do not commute at " + g.sub_name(h));
    }
  }

  // equivariance of res and tr on covering pairs, for each group generator
  for (std::size_t i = 0; i < g.covering_pairs().size(); ++i) {
    const auto& [u, l] = g.covering_pairs()[i];
    if (!m.res_c[i].well_defined()) fail("res not well defined");
    if (!m.tr_c[i].well_defined()) fail("tr not well defined");
    for (Elem w = 1; w < g.order(); ++w) {
      if (!compose(m.weyl_action(l, w), m.res_c[i])
               .equals(compose(m.res_c[i], m.weyl_action(u, w))))
        fail("res not Weyl-equivariant on " + g.sub_name(u) + " -> " + g.sub_name(l));
      if (!compose(m.weyl_action(u, w), m.tr_c[i])
               .equals(compose(m.tr_c[i], m.weyl_action(l, w))))
        fail("tr not Weyl-equivariant on " + g.sub_name(l) + " -> " + g.sub_name(u));
    }
  }

  if (g.kind() == GroupKind::K4) {
    // transitivity: the three chains from the top to the bottom agree
    auto chain = [&](SubId mid) {
      return compose(m.res(mid, g.trivial_sub()), m.res(g.full_sub(), mid));
    };
    auto chain_t = [&](SubId mid) {
      return compose(m.tr(mid, g.full_sub()), m.tr(g.trivial_sub(), mid));
    };
    auto twos = g.index_two_chain();
    for (std::size_t i = 1; i < twos.size(); ++i) {
      if (!chain(twos[0]).equals(chain(twos[i])))
        fail("res transitivity mismatch through " + g.sub_name(twos[i]));
      if (!chain_t(twos[0]).equals(chain_t(twos[i])))
        fail("tr transitivity mismatch through " + g.sub_name(twos[i]));
    }
  }

  // double coset identities
  for (SubId h : g.index_two_chain()) {
    // res^H_e tr^H_e = sum over H at the bottom level
    GroupHom lhs = compose(m.res(h, g.trivial_sub()), m.tr(g.trivial_sub(), h));
    GroupHom rhs = GroupHom::zero(m.level[g.trivial_sub()], m.level[g.trivial_sub()]);
    for (Elem e = 0; e < g.order(); ++e)
      if (g.sub_contains(h, e)) rhs = rhs + m.weyl_action(g.trivial_sub(), e);
    if (!lhs.equals(rhs)) fail("double coset res.tr at the bottom for " + g.sub_name(h));
  }
  if (g.kind() == GroupKind::K4) {
    SubId top = g.full_sub();
    for (SubId j : g.index_two_chain()) {
      GroupHom lhs = compose(m.res(top, j), m.tr(j, top));
      Elem eps = g.weyl_gens(j)[0];
      GroupHom rhs = GroupHom::identity(m.level[j]) + m.weyl_action(j, eps);
      if (!lhs.equals(rhs)) fail("double coset res.tr at level " + g.sub_name(j));
      for (SubId j2 : g.index_two_chain()) {
        if (j2 == j) continue;
        GroupHom l2 = compose(m.res(top, j2), m.tr(j, top));
        GroupHom r2 = compose(m.tr(g.trivial_sub(), j2), m.res(j, g.trivial_sub()));
        if (!l2.equals(r2))
          fail("double coset res_" + g.sub_name(j2) + " tr_" + g.sub_name(j));
      }
    }
  }
  return rep;
}

MackeyFunctor direct_sum(const MackeyFunctor& a, const MackeyFunctor& b) {
  const GroupDatum& g = *a.g;
  auto sum_group = [](const FgAbelianGroup& x, const FgAbelianGroup& y) {
    std::size_t n = x.ambient() + y.ambient();
    IntMatrix rel(n, x.relations().cols() + y.relations().cols());
    for (std::size_t i = 0; i < x.ambient(); ++i)
      for (std::size_t j = 0; j < x.relations().cols(); ++j) rel(i, j) = x.relations()(i, j);
    for (std::size_t i = 0; i < y.ambient(); ++i)
      for (std::size_t j = 0; j < y.relations().cols(); ++j)
        rel(x.ambient() + i, x.relations().cols() + j) = y.relations()(i, j);
    return FgAbelianGroup(n, rel);
  };
  auto blockdiag = [&](const GroupHom& f, const GroupHom& h, const FgAbelianGroup& src,
                       const FgAbelianGroup& tgt) {
    IntMatrix m(tgt.ambient(), src.ambient());
    for (std::size_t i = 0; i < f.matrix.rows(); ++i)
      for (std::size_t j = 0; j < f.matrix.cols(); ++j) m(i, j) = f.matrix(i, j);
    for (std::size_t i = 0; i < h.matrix.rows(); ++i)
      for (std::size_t j = 0; j < h.matrix.cols(); ++j)
        m(f.matrix.rows() + i, f.matrix.cols() + j) = h.matrix(i, j);
    return GroupHom(src, tgt, m);
  };
  MackeyFunctor out;
  out.g = &g;
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    out.level.push_back(sum_group(a.level[h], b.level[h]));
  for (std::size_t i = 0; i < g.covering_pairs().size(); ++i) {
    const auto& [u, l] = g.covering_pairs()[i];
    out.res_c.push_back(blockdiag(a.res_c[i], b.res_c[i], out.level[u], out.level[l]));
    out.tr_c.push_back(blockdiag(a.tr_c[i], b.tr_c[i], out.level[l], out.level[u]));
  }
  out.weyl.resize(g.num_subgroups());
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    for (std::size_t i = 0; i < g.weyl_gens(h).size(); ++i)
      out.weyl[h].push_back(
          blockdiag(a.weyl[h][i], b.weyl[h][i], out.level[h], out.level[h]));
  return out;
}

MackeyFunctor direct_sum(const std::vector<MackeyFunctor>& parts, const GroupDatum& g) {
  MackeyFunctor acc = MackeyFunctor::zero(g);
  for (const auto& p : parts) acc = direct_sum(acc, p);
  return acc;
}

SubquotientFunctor subquotient_functor(const MackeyFunctor& parent,
                                       std::vector<Subquotient> sqs) {
  const GroupDatum& g = *parent.g;
  SubquotientFunctor out;
  out.sq = std::move(sqs);
  out.m.g = &g;
  for (SubId h = 0; h < g.num_subgroups(); ++h) out.m.level.push_back(out.sq[h].group);
  for (std::size_t i = 0; i < g.covering_pairs().size(); ++i) {
    const auto& [u, l] = g.covering_pairs()[i];
    out.m.res_c.push_back(induced_on_subquotient(parent.res_c[i], out.sq[u], out.sq[l]));
    out.m.tr_c.push_back(induced_on_subquotient(parent.tr_c[i], out.sq[l], out.sq[u]));
  }
  out.m.weyl.resize(g.num_subgroups());
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    for (std::size_t i = 0; i < g.weyl_gens(h).size(); ++i)
      out.m.weyl[h].push_back(
          induced_on_subquotient(parent.weyl[h][i], out.sq[h], out.sq[h]));
  return out;
}

MackeyMorphism induced_morphism(const MackeyMorphism& f, const SubquotientFunctor& src,
                                const SubquotientFunctor& tgt) {
  MackeyMorphism out;
  for (std::size_t h = 0; h < f.comp.size(); ++h)
    out.comp.push_back(induced_on_subquotient(f.comp[h], src.sq[h], tgt.sq[h]));
  return out;
}

KernelResult kernel(const MackeyFunctor& src, const MackeyFunctor& tgt,
                    const MackeyMorphism& f) {
  const GroupDatum& g = *src.g;
  FgAbelianGroup triv;
  std::vector<Subquotient> sqs;
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    sqs.push_back(subquotient(GroupHom::zero(triv, src.level[h]), f.comp[h]));
  KernelResult out;
  out.data = subquotient_functor(src, std::move(sqs));
  out.functor = out.data.m;
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    out.inclusion.comp.push_back(
        GroupHom(out.functor.level[h], src.level[h],
                 out.data.sq[h].section * out.functor.level[h].canonical_section()));
  (void)tgt;
  return out;
}

CokernelResult cokernel(const MackeyFunctor& src, const MackeyFunctor& tgt,
                        const MackeyMorphism& f) {
  const GroupDatum& g = *tgt.g;
  FgAbelianGroup triv;
  std::vector<Subquotient> sqs;
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    sqs.push_back(subquotient(f.comp[h], GroupHom::zero(tgt.level[h], triv)));
  CokernelResult out;
  out.data = subquotient_functor(tgt, std::move(sqs));
  out.functor = out.data.m;
  for (SubId h = 0; h < g.num_subgroups(); ++h) {
    auto proj = project_to_subquotient(out.data.sq[h],
                                       IntMatrix::identity(tgt.level[h].ambient()));
    if (!proj) throw MackeyError("internal: cokernel projection failed");
    out.projection.comp.push_back(GroupHom(tgt.level[h], out.functor.level[h], *proj));
  }
  (void)src;
  return out;
}

SetValue eval_set(const MackeyFunctor& m, const FinGSet& x) {
  SetValue v;
  std::size_t n = 0;
  std::vector<IntMatrix> rels;
  for (const Orbit& o : x.orbits) {
    v.offset.push_back(n);
    n += m.level[o.stab].ambient();
  }
  std::size_t rcols = 0;
  for (const Orbit& o : x.orbits) rcols += m.level[o.stab].relations().cols();
  IntMatrix rel(n, rcols);
  std::size_t c0 = 0;
  for (std::size_t i = 0; i < x.orbits.size(); ++i) {
    const auto& r = m.level[x.orbits[i].stab].relations();
    for (std::size_t a = 0; a < r.rows(); ++a)
      for (std::size_t b = 0; b < r.cols(); ++b) rel(v.offset[i] + a, c0 + b) = r(a, b);
    c0 += r.cols();
  }
  v.group = FgAbelianGroup(n, rel);
  return v;
}

IntMatrix eval_span_matrix(const MackeyFunctor& m, const SpanMatrix& sp) {
  SetValue from = eval_set(m, sp.from), to = eval_set(m, sp.to);
  IntMatrix out(to.group.ambient(), from.group.ambient());
  for (std::size_t ti = 0; ti < sp.to.num_orbits(); ++ti)
    for (std::size_t si = 0; si < sp.from.num_orbits(); ++si) {
      for (const SpanTerm& t : sp.e[ti][si]) {
        const SpanBasis& b = t.basis;
        IntMatrix block = compose(m.tr(b.through, b.to_stab),
                                  compose(m.weyl_action(b.through, b.twist),
                                          m.res(b.from_stab, b.through)))
                              .matrix.scaled(Int(t.coeff));
        for (std::size_t i = 0; i < block.rows(); ++i)
          for (std::size_t j = 0; j < block.cols(); ++j)
            out(to.offset[ti] + i, from.offset[si] + j) += block(i, j);
      }
    }
  return out;
}

GroupHom eval_span_hom(const MackeyFunctor& m, const SpanMatrix& sp) {
  return GroupHom(eval_set(m, sp.from).group, eval_set(m, sp.to).group,
                  eval_span_matrix(m, sp));
}

namespace {

SpanMatrix level_span(const GroupDatum& g, SubId from, SubId to, const SpanBasis& b) {
  SpanMatrix sp = SpanMatrix::zero(single_orbit(g, from), single_orbit(g, to));
  sp.e[0][0] = {SpanTerm{b, 1}};
  return sp;
}

}  // namespace

MackeyFunctor realize_box_free(const FinGSet& s, const MackeyFunctor& m) {
  const GroupDatum& g = *m.g;
  std::vector<ProductCert> certs;
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    certs.push_back(product(s, single_orbit(g, h)));

  MackeyFunctor out;
  out.g = &g;
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    out.level.push_back(eval_set(m, certs[h].set).group);

  SpanMatrix ids = SpanMatrix::identity(s);
  for (const auto& [u, l] : g.covering_pairs()) {
    SpanMatrix r = span_product(ids, level_span(g, u, l, res_span(g, u, l)), certs[u],
                                certs[l]);
    out.res_c.push_back(GroupHom(out.level[u], out.level[l], eval_span_matrix(m, r)));
    SpanMatrix t = span_product(ids, level_span(g, l, u, tr_span(g, l, u)), certs[l],
                                certs[u]);
    out.tr_c.push_back(GroupHom(out.level[l], out.level[u], eval_span_matrix(m, t)));
  }
  out.weyl.resize(g.num_subgroups());
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    for (Elem w : g.weyl_gens(h)) {
      SpanMatrix ws =
          span_product(ids, level_span(g, h, h, weyl_span(g, h, w)), certs[h], certs[h]);
      out.weyl[h].push_back(GroupHom(out.level[h], out.level[h], eval_span_matrix(m, ws)));
    }
  return out;
}

MackeyFunctor realize_hom_free(const FinGSet& s, const MackeyFunctor& m) {
  const GroupDatum& g = *m.g;
  std::vector<ProductCert> certs;
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    certs.push_back(product(s, single_orbit(g, h)));

  MackeyFunctor out;
  out.g = &g;
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    out.level.push_back(eval_set(m, certs[h].set).group);

  // dual assembly: each structure map is the transpose of the opposite-variance
  // span, so restriction data of the hom comes from transfer spans.
  SpanMatrix ids = SpanMatrix::identity(s);
  for (const auto& [u, l] : g.covering_pairs()) {
    SpanMatrix r = transpose_spans(
        span_product(ids, level_span(g, l, u, tr_span(g, l, u)), certs[l], certs[u]));
    out.res_c.push_back(GroupHom(out.level[u], out.level[l], eval_span_matrix(m, r)));
    SpanMatrix t = transpose_spans(
        span_product(ids, level_span(g, u, l, res_span(g, u, l)), certs[u], certs[l]));
    out.tr_c.push_back(GroupHom(out.level[l], out.level[u], eval_span_matrix(m, t)));
  }
  out.weyl.resize(g.num_subgroups());
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    for (Elem w : g.weyl_gens(h)) {
      SpanMatrix ws = transpose_spans(span_product(
          ids, level_span(g, h, h, weyl_span(g, h, g.inv(w))), certs[h], certs[h]));
      out.weyl[h].push_back(GroupHom(out.level[h], out.level[h], eval_span_matrix(m, ws)));
    }
  return out;
}

MackeyFunctor free_on(const FinGSet& s) {
  return realize_box_free(s, zoo(*s.g, "A"));
}

MackeyMorphism realize_span_morphism(const SpanMatrix& u, const MackeyFunctor& m) {
  const GroupDatum& g = *m.g;
  MackeyMorphism f;
  for (SubId h = 0; h < g.num_subgroups(); ++h) {
    ProductCert cf = product(u.from, single_orbit(g, h));
    ProductCert ct = product(u.to, single_orbit(g, h));
    SpanMatrix lvl = span_product(u, SpanMatrix::identity(single_orbit(g, h)), cf, ct);
    f.comp.push_back(eval_span_hom(m, lvl));
  }
  return f;
}

MackeyFunctor inflate(SubId h, const MackeyFunctor& n) {
  const GroupDatum& g = GroupDatum::k4();
  const GroupDatum& c2 = GroupDatum::c2();
  if (n.g != &c2) throw MackeyError("inflate expects a C2 functor");
  if (g.sub_order(h) != 2) throw MackeyError("inflate: subgroup must have order 2");

  MackeyFunctor out = MackeyFunctor::zero(g);
  out.level[g.full_sub()] = n.level[c2.full_sub()];
  out.level[h] = n.level[c2.trivial_sub()];
  for (std::size_t i = 0; i < g.covering_pairs().size(); ++i) {
    const auto& [u, l] = g.covering_pairs()[i];
    if (u == g.full_sub() && l == h) {
      out.res_c[i] = n.res_c[0];
      out.tr_c[i] = n.tr_c[0];
    } else {
      out.res_c[i] = GroupHom::zero(out.level[u], out.level[l]);
      out.tr_c[i] = GroupHom::zero(out.level[l], out.level[u]);
    }
  }
  out.weyl[h][0] = n.weyl[c2.trivial_sub()][0];
  return out;
}

MackeyFunctor restrict_to(SubId h, const MackeyFunctor& m) {
  const GroupDatum& g = *m.g;
  const GroupDatum& c2 = GroupDatum::c2();
  if (g.kind() != GroupKind::K4 || g.sub_order(h) != 2)
    throw MackeyError("restrict_to: subgroup must have order 2 in K4");
  Elem h0 = 0;
  for (Elem e = 1; e < g.order(); ++e)
    if (g.sub_contains(h, e)) h0 = e;

  MackeyFunctor out;
  out.g = &c2;
  out.level = {m.level[g.trivial_sub()], m.level[h]};
  out.res_c = {m.res(h, g.trivial_sub())};
  out.tr_c = {m.tr(g.trivial_sub(), h)};
  out.weyl.resize(2);
  out.weyl[0].push_back(m.weyl_action(g.trivial_sub(), h0));
  return out;
}

MackeyMorphism restrict_morphism(SubId h, const MackeyMorphism& f) {
  MackeyMorphism out;
  out.comp = {f.comp[0], f.comp[h]};
  return out;
}

namespace {

// H-orbit decomposition of K/J: base points (coset reps) ascending, all with
// the same stabilizer H meet J.
struct HOrbits {
  std::vector<Elem> base;
  SubId stab;
};

HOrbits h_orbit_data(const GroupDatum& g, SubId h, SubId j) {
  HOrbits out;
  out.stab = g.sub_meet(h, j);
  std::vector<bool> seen(g.order(), false);
  for (Elem rep : g.coset_reps(j)) {
    Elem mn = -1;
    for (Elem x = 0; x < g.order(); ++x) {
      if (!g.sub_contains(h, x)) continue;
      Elem p = g.coset_rep(j, g.mul(x, rep));
      if (mn < 0 || p < mn) mn = p;
    }
    if (!seen[mn]) {
      seen[mn] = true;
      out.base.push_back(mn);
    }
  }
  return out;
}

// locate the H-orbit of the point pJ: (orbit index, twist t in H with p = t.base)
std::pair<int, Elem> locate_h_orbit(const GroupDatum& g, SubId h, SubId j,
                                    const HOrbits& ho, Elem p) {
  for (std::size_t i = 0; i < ho.base.size(); ++i)
    for (Elem t = 0; t < g.order(); ++t) {
      if (!g.sub_contains(h, t)) continue;
      if (g.coset_rep(j, g.mul(t, ho.base[i])) == g.coset_rep(j, p))
        return {static_cast<int>(i), t};
    }
  throw MackeyError("internal: H-orbit not located");
}

}  // namespace

MackeyFunctor induce(SubId h, const MackeyFunctor& n) {
  const GroupDatum& g = GroupDatum::k4();
  const GroupDatum& c2 = GroupDatum::c2();
  if (n.g != &c2) throw MackeyError("induce expects a C2 functor");
  if (g.sub_order(h) != 2) throw MackeyError("induce: subgroup must have order 2");

  // C2 level of an H-stabilizer: H itself -> top, trivial -> bottom
  auto lv = [&](SubId stab) { return stab == h ? c2.full_sub() : c2.trivial_sub(); };
  // Weyl action of t in H on the C2 level lv(stab)
  auto tw = [&](SubId stab, Elem t) -> GroupHom {
    const FgAbelianGroup& grp = n.level[lv(stab)];
    if (t == 0 || stab == h) return GroupHom::identity(grp);
    return n.weyl[c2.trivial_sub()][0];
  };

  std::vector<HOrbits> ho(g.num_subgroups());
  for (SubId j = 0; j < g.num_subgroups(); ++j) ho[j] = h_orbit_data(g, h, j);

  MackeyFunctor out;
  out.g = &g;
  std::vector<std::vector<std::size_t>> off(g.num_subgroups());
  for (SubId j = 0; j < g.num_subgroups(); ++j) {
    FinGSet blocks{&c2, {}};
    for (std::size_t i = 0; i < ho[j].base.size(); ++i)
      blocks.orbits.push_back(Orbit{lv(ho[j].stab)});
    SetValue v = eval_set(n, blocks);
    off[j] = v.offset;
    out.level.push_back(v.group);
  }

  auto place = [&](IntMatrix& big, const IntMatrix& blk, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j2 = 0; j2 < blk.cols(); ++j2) big(r0 + i, c0 + j2) += blk(i, j2);
  };

  for (const auto& [u, l] : g.covering_pairs()) {
    // res along q: K/l -> K/u
    IntMatrix rm(out.level[l].ambient(), out.level[u].ambient());
    IntMatrix tm(out.level[u].ambient(), out.level[l].ambient());
    for (std::size_t oi = 0; oi < ho[l].base.size(); ++oi) {
      Elem img = ho[l].base[oi];  // point img*u in K/u
      auto [ti, t] = locate_h_orbit(g, h, u, ho[u], img);
      GroupHom resblk =
          compose(n.res(lv(ho[u].stab), lv(ho[l].stab)), tw(ho[u].stab, t));
      place(rm, resblk.matrix, off[l][oi], off[u][ti]);
      GroupHom trblk =
          compose(tw(ho[u].stab, t), n.tr(lv(ho[l].stab), lv(ho[u].stab)));
      place(tm, trblk.matrix, off[u][ti], off[l][oi]);
    }
    out.res_c.push_back(GroupHom(out.level[u], out.level[l], rm));
    out.tr_c.push_back(GroupHom(out.level[l], out.level[u], tm));
  }

  out.weyl.resize(g.num_subgroups());
  for (SubId j = 0; j < g.num_subgroups(); ++j)
    for (Elem w : g.weyl_gens(j)) {
      IntMatrix wm(out.level[j].ambient(), out.level[j].ambient());
      for (std::size_t oi = 0; oi < ho[j].base.size(); ++oi) {
        Elem moved = g.mul(w, ho[j].base[oi]);
        auto [ti, t] = locate_h_orbit(g, h, j, ho[j], moved);
        place(wm, tw(ho[j].stab, t).matrix, off[j][ti], off[j][oi]);
      }
      out.weyl[j].push_back(GroupHom(out.level[j], out.level[j], wm));
    }
  return out;
}

MackeyFunctor induce_from_trivial(const GroupDatum& g, const FgAbelianGroup& a) {
  MackeyFunctor out;
  out.g = &g;
  std::vector<std::vector<Elem>> pts(g.num_subgroups());
  for (SubId j = 0; j < g.num_subgroups(); ++j) {
    pts[j] = g.coset_reps(j);
    std::size_t cnt = pts[j].size();
    IntMatrix rel(a.ambient() * cnt, a.relations().cols() * cnt);
    for (std::size_t b = 0; b < cnt; ++b)
      for (std::size_t i = 0; i < a.ambient(); ++i)
        for (std::size_t c = 0; c < a.relations().cols(); ++c)
          rel(b * a.ambient() + i, b * a.relations().cols() + c) = a.relations()(i, c);
    out.level.push_back(FgAbelianGroup(a.ambient() * cnt, rel));
  }
  const std::size_t d = a.ambient();
  auto unit = [&](IntMatrix& m, std::size_t bi, std::size_t bj) {
    for (std::size_t i = 0; i < d; ++i) m(bi * d + i, bj * d + i) += 1;
  };
  for (const auto& [u, l] : g.covering_pairs()) {
    IntMatrix rm(out.level[l].ambient(), out.level[u].ambient());
    IntMatrix tm(out.level[u].ambient(), out.level[l].ambient());
    for (std::size_t bl = 0; bl < pts[l].size(); ++bl) {
      std::size_t bu = g.coset_index(u, pts[l][bl]);
      unit(rm, bl, bu);  // contravariant: each point over bu contributes
      unit(tm, bu, bl);
    }
    out.res_c.push_back(GroupHom(out.level[u], out.level[l], rm));
    out.tr_c.push_back(GroupHom(out.level[l], out.level[u], tm));
  }
  out.weyl.resize(g.num_subgroups());
  for (SubId j = 0; j < g.num_subgroups(); ++j)
    for (Elem w : g.weyl_gens(j)) {
      IntMatrix wm(out.level[j].ambient(), out.level[j].ambient());
      for (std::size_t b = 0; b < pts[j].size(); ++b)
        unit(wm, g.coset_index(j, g.mul(w, pts[j][b])), b);
      out.weyl[j].push_back(GroupHom(out.level[j], out.level[j], wm));
    }
  return out;
}

}  // namespace bredon

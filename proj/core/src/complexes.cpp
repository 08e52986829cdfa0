#include "bredon/complexes.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace bredon {

namespace {

const FinGSet& empty_set(const GroupDatum& g) {
  static const FinGSet empty_k4{&GroupDatum::k4(), {}};
  static const FinGSet empty_c2{&GroupDatum::c2(), {}};
  return g.kind() == GroupKind::K4 ? empty_k4 : empty_c2;
}

// Embed the entries of `part` into `big` with given orbit offsets.
void embed_span(SpanMatrix& big, const SpanMatrix& part, std::size_t to_off,
                std::size_t from_off, long long scale = 1) {
  for (std::size_t i = 0; i < part.e.size(); ++i)
    for (std::size_t j = 0; j < part.e[i].size(); ++j)
      big.e[to_off + i][from_off + j] =
          combo_add(big.e[to_off + i][from_off + j], combo_scale(part.e[i][j], scale));
}

}  // namespace

const FinGSet& FreeComplex::term(int i) const {
  if (!in_range(i)) return empty_set(*g);
  return terms[i - lo];
}

SpanMatrix FreeComplex::diff(int i) const {
  if (i > lo && i <= hi) return diffs[i - lo - 1];
  return SpanMatrix::zero(term(i), term(i - 1));
}

std::string FreeComplex::to_string() const {
  std::ostringstream os;
  for (int i = lo; i <= hi; ++i) os << i << ": " << term(i).to_string() << "\n";
  return os.str();
}

FreeComplex unit_complex(const GroupDatum& g) {
  FreeComplex c;
  c.g = &g;
  c.lo = c.hi = 0;
  c.terms.push_back(single_orbit(g, g.full_sub()));
  return c;
}

FreeComplex sphere_sigma(const GroupDatum& g, SubId cell_stab, int k) {
  if (g.kind() == GroupKind::K4 && g.sub_order(cell_stab) != 2)
    throw ComplexError("sphere_sigma: cell stabilizer must have order 2 in K4");
  if (g.kind() == GroupKind::C2 && cell_stab != g.trivial_sub())
    throw ComplexError("sphere_sigma: C2 sign sphere has free cells");
  if (k < 0) throw ComplexError("sphere_sigma: negative exponent");
  if (k == 0) return unit_complex(g);

  FreeComplex c;
  c.g = &g;
  c.lo = 0;
  c.hi = k;
  c.terms.push_back(single_orbit(g, g.full_sub()));
  for (int i = 1; i <= k; ++i) c.terms.push_back(single_orbit(g, cell_stab));

  const Elem eps = g.weyl_gens(cell_stab)[0];
  {
    SpanMatrix d1 = SpanMatrix::zero(c.terms[1], c.terms[0]);
    d1.e[0][0] = {SpanTerm{tr_span(g, cell_stab, g.full_sub()), 1}};
    c.diffs.push_back(d1);
  }
  for (int i = 2; i <= k; ++i) {
    SpanMatrix d = SpanMatrix::zero(c.terms[i], c.terms[i - 1]);
    long long sign = (i % 2 == 0) ? -1 : 1;  // 1 - eps for even i, 1 + eps for odd
    d.e[0][0] = combo_add({SpanTerm{identity_span(g, cell_stab), 1}},
                          {SpanTerm{weyl_span(g, cell_stab, eps), sign}});
    c.diffs.push_back(d);
  }
  return c;
}

FreeComplex smash(const FreeComplex& a, const FreeComplex& b) {
  if (a.g != b.g) throw ComplexError("smash: ambient group mismatch");
  const GroupDatum& g = *a.g;
  if (a.hi < a.lo || b.hi < b.lo) {
    FreeComplex c;
    c.g = &g;
    return c;
  }
  FreeComplex c;
  c.g = &g;
  c.lo = a.lo + b.lo;
  c.hi = a.hi + b.hi;

  // per degree: blocks (i, j = n - i) with ascending i; keep certificates and
  // orbit offsets
  struct Block {
    int i, j;
    ProductCert cert;
    std::size_t off;
  };
  std::vector<std::vector<Block>> blocks(c.hi - c.lo + 1);
  for (int n = c.lo; n <= c.hi; ++n) {
    FinGSet t{&g, {}};
    for (int i = std::max(a.lo, n - b.hi); i <= std::min(a.hi, n - b.lo); ++i) {
      int j = n - i;
      ProductCert pc = product(a.term(i), b.term(j));
      blocks[n - c.lo].push_back(Block{i, j, pc, t.orbits.size()});
      for (const Orbit& o : pc.set.orbits) t.orbits.push_back(o);
    }
    c.terms.push_back(t);
  }

  for (int n = c.lo + 1; n <= c.hi; ++n) {
    SpanMatrix d = SpanMatrix::zero(c.terms[n - c.lo], c.terms[n - 1 - c.lo]);
    const auto& src = blocks[n - c.lo];
    const auto& tgt = blocks[n - 1 - c.lo];
    auto tgt_block = [&](int i, int j) -> const Block* {
      for (const Block& blk : tgt)
        if (blk.i == i && blk.j == j) return &blk;
      return nullptr;
    };
    for (const Block& sb : src) {
      if (sb.i > a.lo) {
        const Block* tb = tgt_block(sb.i - 1, sb.j);
        if (tb) {
          SpanMatrix part = span_product(a.diff(sb.i), SpanMatrix::identity(b.term(sb.j)),
                                         sb.cert, tb->cert);
          embed_span(d, part, tb->off, sb.off);
        }
      }
      if (sb.j > b.lo) {
        const Block* tb = tgt_block(sb.i, sb.j - 1);
        if (tb) {
          SpanMatrix part = span_product(SpanMatrix::identity(a.term(sb.i)), b.diff(sb.j),
                                         sb.cert, tb->cert);
          embed_span(d, part, tb->off, sb.off, (sb.i % 2 == 0) ? 1 : -1);
        }
      }
    }
    c.diffs.push_back(d);
  }
  return c;
}

FreeComplex smash(const std::vector<FreeComplex>& cs) {
  if (cs.empty()) throw ComplexError("smash of empty list");
  FreeComplex acc = cs[0];
  for (std::size_t i = 1; i < cs.size(); ++i) acc = smash(acc, cs[i]);
  return acc;
}

FreeComplex dualize(const FreeComplex& c) {
  FreeComplex d;
  d.g = c.g;
  if (c.hi < c.lo) return d;
  d.lo = -c.hi;
  d.hi = -c.lo;
  for (int i = d.lo; i <= d.hi; ++i) d.terms.push_back(c.term(-i));
  for (int i = d.lo + 1; i <= d.hi; ++i) d.diffs.push_back(transpose_spans(c.diff(-i + 1)));
  return d;
}

FreeComplex shift(const FreeComplex& c, int n) {
  FreeComplex s = c;
  s.lo += n;
  s.hi += n;
  return s;
}

bool VirtualRep::mixed_signs() const {
  bool pos = false, neg = false;
  for (int x : q) {
    pos = pos || x > 0;
    neg = neg || x < 0;
  }
  return pos && neg;
}

std::string VirtualRep::to_string(const GroupDatum& g) const {
  std::ostringstream os;
  os << n;
  if (g.kind() == GroupKind::K4) {
    const char* names[3] = {"sL", "sD", "sR"};
    for (int i = 0; i < 3; ++i)
      if (q[i] != 0) os << (q[i] > 0 ? "+" : "") << q[i] << names[i];
  } else if (q[0] != 0) {
    os << (q[0] > 0 ? "+" : "") << q[0] << "s";
  }
  return os.str();
}

FreeComplex suspension_complex(const GroupDatum& g, const VirtualRep& v) {
  std::vector<FreeComplex> parts;
  auto add = [&](SubId cell, int mult) {
    if (mult > 0)
      parts.push_back(sphere_sigma(g, cell, mult));
    else if (mult < 0)
      parts.push_back(dualize(sphere_sigma(g, cell, -mult)));
  };
  if (g.kind() == GroupKind::K4) {
    auto twos = g.index_two_chain();
    for (int i = 0; i < 3; ++i) add(twos[i], v.q[i]);
  } else {
    add(g.trivial_sub(), v.q[0]);
  }
  FreeComplex c = parts.empty() ? unit_complex(g) : smash(parts);
  return shift(c, v.n);
}

const MackeyFunctor& MackeyComplex::term(int i) const {
  static const MackeyFunctor zero_k4 = MackeyFunctor::zero(GroupDatum::k4());
  static const MackeyFunctor zero_c2 = MackeyFunctor::zero(GroupDatum::c2());
  if (!in_range(i)) return g->kind() == GroupKind::K4 ? zero_k4 : zero_c2;
  return terms[i - lo];
}

MackeyComplex realize(const FreeComplex& c, const MackeyFunctor& m) {
  MackeyComplex r;
  r.g = c.g;
  r.lo = c.lo;
  r.hi = c.hi;
  for (int i = c.lo; i <= c.hi; ++i) r.terms.push_back(realize_box_free(c.term(i), m));
  for (int i = c.lo + 1; i <= c.hi; ++i)
    r.diffs.push_back(realize_span_morphism(c.diff(i), m));
  return r;
}

HomologyResult homology_at(const MackeyComplex& c, int n) {
  const GroupDatum& g = *c.g;
  if (!c.in_range(n)) {
    HomologyResult out;
    out.m = MackeyFunctor::zero(g);
    return out;
  }
  const MackeyFunctor& mid = c.term(n);
  FgAbelianGroup triv;
  std::vector<Subquotient> sqs;
  for (SubId h = 0; h < g.num_subgroups(); ++h) {
    GroupHom b_in = (n + 1 <= c.hi) ? c.diffs[n + 1 - c.lo - 1].comp[h]
                                    : GroupHom::zero(triv, mid.level[h]);
    GroupHom z_out = (n > c.lo) ? c.diffs[n - c.lo - 1].comp[h]
                                : GroupHom::zero(mid.level[h], triv);
    sqs.push_back(subquotient(b_in, z_out));
  }
  HomologyResult out;
  out.data = subquotient_functor(mid, std::move(sqs));
  out.m = out.data.m;
  return out;
}

MackeyFunctor homology(const MackeyComplex& c, int n) { return homology_at(c, n).m; }

MackeyFunctor homotopy_of_suspension(const GroupDatum& g, const VirtualRep& v,
                                     const MackeyFunctor& m, int n) {
  return homology(realize(suspension_complex(g, v), m), n);
}

namespace {

// spans realizing the three chain maps of the cofiber sequence
struct CofiberData {
  FreeComplex x, sx, khx;  // X, S^sigma ^ X, G/H+ ^ X
  // per degree: chain-level morphisms after realization
  std::vector<MackeyMorphism> incl;   // X_n -> SX_n
  std::vector<MackeyMorphism> proj;   // SX_n -> KHX_{n-1}
  std::vector<MackeyMorphism> conn;   // KHX_n -> X_n
};

}  // namespace

LesReport verify_cofiber_les(SubId h, const VirtualRep& v, const MackeyFunctor& m,
                             int deg_lo, int deg_hi) {
  const GroupDatum& g = *m.g;
  LesReport rep;

  FreeComplex x = suspension_complex(g, v);
  FreeComplex sphere = sphere_sigma(g, h, 1);
  FreeComplex sx = smash(sphere, x);  // blocks: (0,n) = X_n, (1,n-1) = K/H x X_{n-1}

  FreeComplex khx;
  khx.g = &g;
  khx.lo = x.lo;
  khx.hi = x.hi;
  std::vector<ProductCert> kcert;
  FinGSet orb = single_orbit(g, h);
  for (int i = x.lo; i <= x.hi; ++i) {
    ProductCert pc = product(orb, x.term(i));
    kcert.push_back(pc);
    khx.terms.push_back(pc.set);
  }
  for (int i = x.lo + 1; i <= x.hi; ++i)
    khx.diffs.push_back(span_product(SpanMatrix::identity(orb), x.diff(i),
                                     kcert[i - x.lo], kcert[i - 1 - x.lo]));

  MackeyComplex rx = realize(x, m), rsx = realize(sx, m), rkhx = realize(khx, m);

  // chain maps as spans, realized
  FinGSet fixed = single_orbit(g, g.full_sub());
  std::vector<ProductCert> fcert;
  for (int i = x.lo; i <= x.hi; ++i) fcert.push_back(product(fixed, x.term(i)));

  auto incl_at = [&](int n) -> MackeyMorphism {
    // X_n -> SX_n onto the (0, n) block (first block; fixed x X_n has the same
    // orbit list as X_n)
    SpanMatrix sp = SpanMatrix::zero(x.term(n), sx.term(n));
    for (std::size_t i = 0; i < x.term(n).num_orbits(); ++i)
      sp.e[i][i] = {SpanTerm{identity_span(g, x.term(n).orbits[i].stab), 1}};
    return realize_span_morphism(sp, m);
  };
  auto proj_at = [&](int n) -> MackeyMorphism {
    // SX_n -> KHX_{n-1}: the (1, n-1) block sits after the (0, n) block
    std::size_t off = (sx.in_range(n) && x.in_range(n)) ? x.term(n).num_orbits() : 0;
    SpanMatrix sp = SpanMatrix::zero(sx.term(n), khx.term(n - 1));
    for (std::size_t i = 0; i < khx.term(n - 1).num_orbits(); ++i)
      sp.e[i][off + i] = {SpanTerm{identity_span(g, khx.term(n - 1).orbits[i].stab), 1}};
    return realize_span_morphism(sp, m);
  };
  auto conn_at = [&](int n) -> MackeyMorphism {
    // KHX_n -> X_n: counit smashed with the identity
    SpanMatrix sp = SpanMatrix::zero(khx.term(n), x.term(n));
    if (x.in_range(n)) {
      SpanMatrix counit = SpanMatrix::zero(orb, fixed);
      counit.e[0][0] = {SpanTerm{tr_span(g, h, g.full_sub()), 1}};
      SpanMatrix part = span_product(counit, SpanMatrix::identity(x.term(n)),
                                     kcert[n - x.lo], fcert[n - x.lo]);
      sp.e = part.e;  // fixed x X_n has the same orbit list as X_n
    }
    return realize_span_morphism(sp, m);
  };

  // homology with data in the requested window (pad by one for connecting maps)
  std::map<int, HomologyResult> hx, hsx, hkhx;
  for (int n = deg_lo - 1; n <= deg_hi + 1; ++n) {
    hx[n] = homology_at(rx, n);
    hsx[n] = homology_at(rsx, n);
    hkhx[n] = homology_at(rkhx, n);
  }

  auto induced = [&](const MackeyMorphism& f, const HomologyResult& a,
                     const HomologyResult& b) -> std::optional<MackeyMorphism> {
    if (a.data.sq.empty() || b.data.sq.empty()) return std::nullopt;  // zero functor
    return induced_morphism(f, a.data, b.data);
  };
  auto hom_of = [&](const std::optional<MackeyMorphism>& f, const HomologyResult& a,
                    const HomologyResult& b, SubId lvl) -> GroupHom {
    if (f) return f->comp[lvl];
    return GroupHom::zero(a.m.level[lvl], b.m.level[lvl]);
  };

  auto check_exact = [&](const GroupHom& f, const GroupHom& gmap, const std::string& where) {
    // im(f) + rel == ker(gmap) as lattices inside the middle group
    IntMatrix im = f.matrix.hstack(f.target.relations());
    IntMatrix ker = preimage_of_relations(gmap);
    bool ok = solve_columns(im, ker).has_value() && solve_columns(ker, im).has_value();
    if (!ok) {
      rep.exact = false;
      rep.failures.push_back(where);
    }
  };

  const int numlvl = g.num_subgroups();
  for (int n = deg_lo; n <= deg_hi; ++n) {
    auto d_n = induced(conn_at(n), hkhx[n], hx[n]);
    auto i_n = induced(incl_at(n), hx[n], hsx[n]);
    auto q_n = induced(proj_at(n), hsx[n], hkhx[n - 1]);
    auto q_n1 = induced(proj_at(n + 1), hsx[n + 1], hkhx[n]);
    for (SubId lvl = 0; lvl < numlvl; ++lvl) {
      std::ostringstream tag;
      tag << "n=" << n << " level=" << g.sub_name(lvl);
      check_exact(hom_of(q_n1, hsx[n + 1], hkhx[n], lvl), hom_of(d_n, hkhx[n], hx[n], lvl),
                  "exactness at H(G/H+ ^ X) " + tag.str());
      check_exact(hom_of(d_n, hkhx[n], hx[n], lvl), hom_of(i_n, hx[n], hsx[n], lvl),
                  "exactness at H(X) " + tag.str());
      check_exact(hom_of(i_n, hx[n], hsx[n], lvl), hom_of(q_n, hsx[n], hkhx[n - 1], lvl),
                  "exactness at H(S^sigma ^ X) " + tag.str());
    }
  }
  return rep;
}

}  // namespace bredon

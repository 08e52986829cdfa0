#include "bredon/ss.hpp"

#include <sstream>

namespace bredon {

namespace {

const MackeyFunctor& zero_functor(const GroupDatum& g) {
  static const MackeyFunctor zk = MackeyFunctor::zero(GroupDatum::k4());
  static const MackeyFunctor zc = MackeyFunctor::zero(GroupDatum::c2());
  return g.kind() == GroupKind::K4 ? zk : zc;
}

}  // namespace

const MackeyFunctor& Bicomplex::term(int i, int j) const {
  if (!in_range(i, j)) return zero_functor(*g);
  return terms[i - ilo][j - jlo];
}

const MackeyFunctor& SpectralPage::entry(int i, int j) const {
  if (!in_range(i, j)) return zero_functor(*g);
  return entries[i - ilo][j - jlo];
}

Bicomplex bicomplex_from_smash(const FreeComplex& left, const FreeComplex& right,
                               const MackeyFunctor& m) {
  Bicomplex b;
  b.g = left.g;
  b.left = left;
  b.right = right;
  b.coeff = m;
  b.ilo = left.lo;
  b.ihi = left.hi;
  b.jlo = right.lo;
  b.jhi = right.hi;

  std::vector<std::vector<ProductCert>> certs(b.ihi - b.ilo + 1);
  for (int i = b.ilo; i <= b.ihi; ++i) {
    for (int j = b.jlo; j <= b.jhi; ++j)
      certs[i - b.ilo].push_back(product(left.term(i), right.term(j)));
  }
  b.terms.resize(b.ihi - b.ilo + 1);
  for (int i = b.ilo; i <= b.ihi; ++i)
    for (int j = b.jlo; j <= b.jhi; ++j)
      b.terms[i - b.ilo].push_back(
          realize_box_free(certs[i - b.ilo][j - b.jlo].set, m));

  b.dh.resize(b.ihi - b.ilo + 1);
  b.dv.resize(b.ihi - b.ilo + 1);
  for (int i = b.ilo; i <= b.ihi; ++i)
    for (int j = b.jlo; j <= b.jhi; ++j) {
      if (i > b.ilo) {
        SpanMatrix sp =
            span_product(left.diff(i), SpanMatrix::identity(right.term(j)),
                         certs[i - b.ilo][j - b.jlo], certs[i - 1 - b.ilo][j - b.jlo]);
        b.dh[i - b.ilo].push_back(realize_span_morphism(sp, m));
      }
      if (j > b.jlo) {
        SpanMatrix sp =
            span_product(SpanMatrix::identity(left.term(i)), right.diff(j),
                         certs[i - b.ilo][j - b.jlo], certs[i - b.ilo][j - 1 - b.jlo]);
        long long sign = (i % 2 == 0) ? 1 : -1;
        b.dv[i - b.ilo].push_back(realize_span_morphism(sp.scaled(sign), m));
      }
    }
  return b;
}

namespace {

// dh(i, j) with zero morphisms outside the stored range
MackeyMorphism dh_at(const Bicomplex& b, int i, int j) {
  if (b.in_range(i, j) && i > b.ilo) return b.dh[i - b.ilo][j - b.jlo];
  return zero_morphism(b.term(i, j), b.term(i - 1, j));
}

MackeyMorphism dv_at(const Bicomplex& b, int i, int j) {
  if (b.in_range(i, j) && j > b.jlo) return b.dv[i - b.ilo][j - b.jlo - 1];
  return zero_morphism(b.term(i, j), b.term(i, j - 1));
}

}  // namespace

SpectralPage page(const Bicomplex& b, int r) {
  if (r != 1 && r != 2) throw ComplexError("page: only pages 1 and 2 are computed");
  const GroupDatum& g = *b.g;
  const int ni = b.ihi - b.ilo + 1, nj = b.jhi - b.jlo + 1;

  // E1: horizontal homology, with data for inducing the verticals
  std::vector<std::vector<SubquotientFunctor>> e1(ni);
  for (int i = b.ilo; i <= b.ihi; ++i)
    for (int j = b.jlo; j <= b.jhi; ++j) {
      const MackeyFunctor& mid = b.term(i, j);
      FgAbelianGroup triv;
      std::vector<Subquotient> sqs;
      for (SubId h = 0; h < g.num_subgroups(); ++h) {
        GroupHom b_in = (i + 1 <= b.ihi) ? dh_at(b, i + 1, j).comp[h]
                                         : GroupHom::zero(triv, mid.level[h]);
        GroupHom z_out = (i > b.ilo) ? dh_at(b, i, j).comp[h]
                                     : GroupHom::zero(mid.level[h], triv);
        sqs.push_back(subquotient(b_in, z_out));
      }
      e1[i - b.ilo].push_back(subquotient_functor(mid, std::move(sqs)));
    }

  auto d1_at = [&](int i, int j) -> MackeyMorphism {
    // induced vertical differential E1(i,j) -> E1(i,j-1)
    if (j <= b.jlo || !b.in_range(i, j))
      return zero_morphism(b.in_range(i, j) ? e1[i - b.ilo][j - b.jlo].m : zero_functor(g),
                           b.in_range(i, j - 1) ? e1[i - b.ilo][j - 1 - b.jlo].m
                                                : zero_functor(g));
    return induced_morphism(dv_at(b, i, j), e1[i - b.ilo][j - b.jlo],
                            e1[i - b.ilo][j - 1 - b.jlo]);
  };

  SpectralPage p;
  p.g = b.g;
  p.r = r;
  p.ilo = b.ilo;
  p.ihi = b.ihi;
  p.jlo = b.jlo;
  p.jhi = b.jhi;
  p.entries.resize(ni);

  if (r == 1) {
    p.d.resize(ni);
    for (int i = b.ilo; i <= b.ihi; ++i)
      for (int j = b.jlo; j <= b.jhi; ++j) {
        p.entries[i - b.ilo].push_back(e1[i - b.ilo][j - b.jlo].m);
        if (j > b.jlo) p.d[i - b.ilo].push_back(d1_at(i, j));
      }
    return p;
  }

  // E2: homology of the E1 columns
  for (int i = b.ilo; i <= b.ihi; ++i)
    for (int j = b.jlo; j <= b.jhi; ++j) {
      const MackeyFunctor& mid = e1[i - b.ilo][j - b.jlo].m;
      FgAbelianGroup triv;
      std::vector<Subquotient> sqs;
      MackeyMorphism into = (j + 1 <= b.jhi) ? d1_at(i, j + 1)
                                             : zero_morphism(zero_functor(g), mid);
      MackeyMorphism out = (j > b.jlo) ? d1_at(i, j)
                                       : zero_morphism(mid, zero_functor(g));
      for (SubId h = 0; h < g.num_subgroups(); ++h) {
        GroupHom b_in = (j + 1 <= b.jhi) ? into.comp[h] : GroupHom::zero(triv, mid.level[h]);
        GroupHom z_out = (j > b.jlo) ? out.comp[h] : GroupHom::zero(mid.level[h], triv);
        sqs.push_back(subquotient(b_in, z_out));
      }
      p.entries[i - b.ilo].push_back(subquotient_functor(mid, std::move(sqs)).m);
    }
  return p;
}

std::vector<int> TotalCompare::extension_degrees() const {
  std::vector<int> out;
  for (const auto& d : degrees)
    if (d.kind == Kind::ExtensionSplit || d.kind == Kind::ExtensionNonSplit)
      out.push_back(d.n);
  return out;
}

TotalCompare compare_with_total(const Bicomplex& b) {
  const GroupDatum& g = *b.g;
  TotalCompare cmp;
  SpectralPage e2 = page(b, 2);
  MackeyComplex tot = realize(smash(b.left, b.right), b.coeff);

  for (int n = b.ilo + b.jlo; n <= b.ihi + b.jhi; ++n) {
    MackeyFunctor direct = homology(tot, n);
    std::vector<MackeyFunctor> pieces;
    for (int i = b.ilo; i <= b.ihi; ++i) {
      int j = n - i;
      if (!e2.in_range(i, j)) continue;
      const MackeyFunctor& piece = e2.entry(i, j);
      bool zero = true;
      for (const auto& lv : piece.level) zero = zero && lv.is_trivial();
      if (!zero) pieces.push_back(piece);
    }
    MackeyFunctor graded = direct_sum(pieces, g);

    TotalCompare::Degree deg;
    deg.n = n;
    deg.pieces = static_cast<int>(pieces.size());
    bool ranks_ok = true, iso_ok = true;
    std::ostringstream detail;
    for (SubId h = 0; h < g.num_subgroups(); ++h) {
      auto a = iso_invariants(direct.level[h]);
      auto c = iso_invariants(graded.level[h]);
      if (a.free_rank != c.free_rank) ranks_ok = false;
      if (!(a == c)) iso_ok = false;
      detail << g.sub_name(h) << ": " << a.to_string() << " vs graded " << c.to_string()
             << "; ";
    }
    deg.detail = detail.str();
    if (pieces.size() <= 1) {
      deg.kind = iso_ok ? TotalCompare::Kind::ExactMatch : TotalCompare::Kind::Mismatch;
    } else if (!ranks_ok) {
      deg.kind = TotalCompare::Kind::Mismatch;
    } else {
      deg.kind = iso_ok ? TotalCompare::Kind::ExtensionSplit
                        : TotalCompare::Kind::ExtensionNonSplit;
    }
    if (deg.kind == TotalCompare::Kind::Mismatch) cmp.consistent = false;
    cmp.degrees.push_back(deg);
  }
  return cmp;
}

}  // namespace bredon

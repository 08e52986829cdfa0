#include "bredon/gset.hpp"

#include <algorithm>
#include <sstream>

namespace bredon {

GroupDatum::GroupDatum(GroupKind kind) : kind_(kind) {
  if (kind == GroupKind::K4) {
    order_ = 4;
    elem_names_ = {"e", "l", "d", "r"};  // d = l*r, so d = 2 = 1 xor 3
    sub_names_ = {"e", "L", "D", "R", "K"};
    sub_mask_ = {0b0001, 0b0011, 0b0101, 0b1001, 0b1111};
    covers_ = {{1, 0}, {2, 0}, {3, 0}, {4, 1}, {4, 2}, {4, 3}};
  } else {
    order_ = 2;
    elem_names_ = {"e", "t"};
    sub_names_ = {"e", "C2"};
    sub_mask_ = {0b01, 0b11};
    covers_ = {{1, 0}};
  }
  const int ns = num_subgroups();
  coset_reps_.resize(ns);
  weyl_gens_.resize(ns);
  for (SubId h = 0; h < ns; ++h) {
    std::vector<bool> seen(order_, false);
    for (Elem g = 0; g < order_; ++g) {
      Elem rep = coset_rep(h, g);
      if (!seen[rep]) {
        seen[rep] = true;
        coset_reps_[h].push_back(rep);
      }
    }
    if (kind == GroupKind::K4 && h == 0) {
      weyl_gens_[h] = {1, 3};  // l and r generate; d is derived
    } else if (sub_order(h) < order_) {
      // single generator: the smallest nontrivial coset rep
      weyl_gens_[h] = {coset_reps_[h][1]};
    }
  }
}

const GroupDatum& GroupDatum::k4() {
  static const GroupDatum g(GroupKind::K4);
  return g;
}

const GroupDatum& GroupDatum::c2() {
  static const GroupDatum g(GroupKind::C2);
  return g;
}

SubId GroupDatum::sub_by_name(const std::string& name) const {
  for (SubId h = 0; h < num_subgroups(); ++h)
    if (sub_names_[h] == name) return h;
  throw GsetError("unknown subgroup name: " + name);
}

int GroupDatum::sub_order(SubId h) const {
  int n = 0;
  for (Elem e = 0; e < order_; ++e)
    if (sub_contains(h, e)) ++n;
  return n;
}

SubId GroupDatum::sub_meet(SubId a, SubId b) const {
  std::uint8_t m = sub_mask_[a] & sub_mask_[b];
  for (SubId h = 0; h < num_subgroups(); ++h)
    if (sub_mask_[h] == m) return h;
  throw GsetError("intersection is not a listed subgroup");
}

SubId GroupDatum::sub_join(SubId a, SubId b) const {
  if (sub_leq(a, b)) return b;
  if (sub_leq(b, a)) return a;
  return full_sub();  // two distinct order-2 subgroups generate everything
}

std::vector<SubId> GroupDatum::all_subgroups() const {
  std::vector<SubId> out(num_subgroups());
  for (SubId h = 0; h < num_subgroups(); ++h) out[h] = h;
  return out;
}

std::vector<SubId> GroupDatum::index_two_chain() const {
  std::vector<SubId> out;
  for (SubId h = 0; h < num_subgroups(); ++h)
    if (sub_order(h) == 2) out.push_back(h);
  return out;
}

Elem GroupDatum::coset_rep(SubId h, Elem g) const {
  Elem best = -1;
  for (Elem e = 0; e < order_; ++e)
    if (sub_contains(h, e)) {
      Elem x = mul(g, e);
      if (best < 0 || x < best) best = x;
    }
  return best;
}

int GroupDatum::coset_index(SubId h, Elem g) const {
  Elem rep = coset_rep(h, g);
  const auto& reps = coset_reps_[h];
  auto it = std::find(reps.begin(), reps.end(), rep);
  return static_cast<int>(it - reps.begin());
}

Elem GroupDatum::double_coset_rep(SubId h, Elem g, SubId j) const {
  Elem best = -1;
  for (Elem a = 0; a < order_; ++a) {
    if (!sub_contains(h, a)) continue;
    for (Elem b = 0; b < order_; ++b) {
      if (!sub_contains(j, b)) continue;
      Elem x = mul(mul(a, g), b);
      if (best < 0 || x < best) best = x;
    }
  }
  return best;
}

std::vector<Elem> GroupDatum::double_coset_reps(SubId h, SubId j) const {
  std::vector<Elem> out;
  std::vector<bool> seen(order_, false);
  for (Elem g = 0; g < order_; ++g) {
    Elem rep = double_coset_rep(h, g, j);
    if (!seen[rep]) {
      seen[rep] = true;
      out.push_back(rep);
    }
  }
  return out;
}

std::vector<int> GroupDatum::weyl_word(SubId h, Elem g) const {
  const auto& gens = weyl_gens_[h];
  // try all subsets of generators; groups are tiny
  for (int mask = 0; mask < (1 << gens.size()); ++mask) {
    Elem prod = 0;
    std::vector<int> word;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if ((mask >> i) & 1) {
        prod = mul(prod, gens[i]);
        word.push_back(static_cast<int>(i));
      }
    if (coset_rep(h, prod) == coset_rep(h, g)) return word;
  }
  throw GsetError("element not generated by Weyl generators");
}

std::size_t FinGSet::num_points() const {
  std::size_t n = 0;
  for (const Orbit& o : orbits) n += g->order() / g->sub_order(o.stab);
  return n;
}

std::string FinGSet::to_string() const {
  if (orbits.empty()) return "{}";
  std::ostringstream os;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (i) os << " + ";
    os << "G/" << g->sub_name(orbits[i].stab);
  }
  return os.str();
}

FinGSet single_orbit(const GroupDatum& g, SubId stab) {
  return FinGSet{&g, {Orbit{stab}}};
}

FinGSet disjoint_union(const FinGSet& a, const FinGSet& b) {
  if (a.g != b.g) throw GsetError("disjoint_union: ambient group mismatch");
  FinGSet out = a;
  out.orbits.insert(out.orbits.end(), b.orbits.begin(), b.orbits.end());
  return out;
}

std::vector<PairOrbit> pair_orbits(const GroupDatum& g, SubId h, SubId j) {
  std::vector<PairOrbit> out;
  SubId stab = g.sub_meet(h, j);
  for (Elem rep : g.double_coset_reps(h, j)) out.push_back(PairOrbit{stab, rep});
  return out;
}

Located locate_pair(const GroupDatum& g, SubId h, SubId j, Elem a, Elem b) {
  Elem rep = g.double_coset_rep(h, g.mul(g.inv(a), b), j);
  auto orbits = pair_orbits(g, h, j);
  int idx = -1;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i].rep == rep) idx = static_cast<int>(i);
  if (idx < 0) throw GsetError("internal: pair orbit not found");
  // translation c with (cH, c rep J) = (aH, bJ)
  Elem best = -1;
  for (Elem c = 0; c < g.order(); ++c) {
    if (g.coset_rep(h, c) != g.coset_rep(h, a)) continue;
    if (g.coset_rep(j, g.mul(c, rep)) != g.coset_rep(j, b)) continue;
    if (best < 0 || c < best) best = c;
  }
  if (best < 0) throw GsetError("internal: no translation found");
  return Located{idx, best};
}

ProductCert product(const FinGSet& s, const FinGSet& t) {
  if (s.g != t.g) throw GsetError("product: ambient group mismatch");
  const GroupDatum& g = *s.g;
  ProductCert cert;
  cert.set.g = s.g;
  for (std::size_t i = 0; i < s.orbits.size(); ++i)
    for (std::size_t j = 0; j < t.orbits.size(); ++j)
      for (const PairOrbit& po : pair_orbits(g, s.orbits[i].stab, t.orbits[j].stab)) {
        cert.entries.push_back(
            ProductCert::Entry{static_cast<int>(i), static_cast<int>(j), po});
        cert.set.orbits.push_back(Orbit{po.stab});
      }
  return cert;
}

SpanMatrix SpanMatrix::zero(const FinGSet& from, const FinGSet& to) {
  SpanMatrix m;
  m.from = from;
  m.to = to;
  m.e.assign(to.num_orbits(), std::vector<SpanCombo>(from.num_orbits()));
  return m;
}

SpanMatrix SpanMatrix::identity(const FinGSet& s) {
  SpanMatrix m = zero(s, s);
  for (std::size_t i = 0; i < s.num_orbits(); ++i)
    m.e[i][i] = {SpanTerm{identity_span(*s.g, s.orbits[i].stab), 1}};
  return m;
}

SpanMatrix SpanMatrix::operator+(const SpanMatrix& o) const {
  SpanMatrix m = *this;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e[i].size(); ++j) m.e[i][j] = combo_add(e[i][j], o.e[i][j]);
  return m;
}

SpanMatrix SpanMatrix::scaled(long long k) const {
  SpanMatrix m = *this;
  for (auto& row : m.e)
    for (auto& c : row) c = combo_scale(c, k);
  return m;
}

bool SpanMatrix::is_zero() const {
  for (const auto& row : e)
    for (const auto& c : row)
      if (!c.empty()) return false;
  return true;
}

SpanCombo combo_normalize(SpanCombo c) {
  std::sort(c.begin(), c.end(),
            [](const SpanTerm& a, const SpanTerm& b) { return a.basis < b.basis; });
  SpanCombo out;
  for (const SpanTerm& t : c) {
    if (!out.empty() && out.back().basis == t.basis)
      out.back().coeff += t.coeff;
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const SpanTerm& t) { return t.coeff == 0; });
  return out;
}

SpanCombo combo_add(const SpanCombo& a, const SpanCombo& b) {
  SpanCombo c = a;
  c.insert(c.end(), b.begin(), b.end());
  return combo_normalize(std::move(c));
}

SpanCombo combo_scale(const SpanCombo& a, long long k) {
  if (k == 0) return {};
  SpanCombo c = a;
  for (SpanTerm& t : c) t.coeff *= k;
  return c;
}

SpanBasis identity_span(const GroupDatum& g, SubId h) {
  (void)g;
  return SpanBasis{h, h, h, 0};
}

SpanBasis res_span(const GroupDatum& g, SubId h, SubId j) {
  if (!g.sub_leq(j, h)) throw GsetError("res_span: not a subgroup pair");
  return SpanBasis{h, j, j, 0};
}

SpanBasis tr_span(const GroupDatum& g, SubId j, SubId h) {
  if (!g.sub_leq(j, h)) throw GsetError("tr_span: not a subgroup pair");
  return SpanBasis{j, h, j, 0};
}

SpanBasis weyl_span(const GroupDatum& g, SubId h, Elem w) {
  return SpanBasis{h, h, h, g.double_coset_rep(h, w, h)};
}

SpanCombo compose_basis(const GroupDatum& g, const SpanBasis& a, const SpanBasis& b) {
  if (a.to_stab != b.from_stab) throw GsetError("compose_basis: middle mismatch");
  const SubId j = a.to_stab;
  const SubId q = g.sub_meet(a.through, b.through);
  // orbits of the pullback over G/J <-> cosets of (Qa Qb) meet J inside ga J
  SubId qq = g.sub_join(a.through, b.through);
  std::vector<Elem> ys;
  {
    std::vector<bool> seen(g.order(), false);
    for (Elem x = 0; x < g.order(); ++x) {
      if (!g.sub_contains(j, x)) continue;
      Elem y = g.mul(a.twist, x);
      // representative of y modulo (Qa Qb) meet J
      Elem rep = -1;
      for (Elem z = 0; z < g.order(); ++z) {
        if (!g.sub_contains(qq, z) || !g.sub_contains(j, z)) continue;
        Elem cand = g.mul(y, z);
        if (rep < 0 || cand < rep) rep = cand;
      }
      if (!seen[rep]) {
        seen[rep] = true;
        ys.push_back(rep);
      }
    }
  }
  SpanCombo out;
  for (Elem y : ys) {
    Elem tw = g.double_coset_rep(a.from_stab, g.mul(y, b.twist), b.to_stab);
    out.push_back(SpanTerm{SpanBasis{a.from_stab, b.to_stab, q, tw}, 1});
  }
  return combo_normalize(std::move(out));
}

SpanMatrix compose_spans(const SpanMatrix& a, const SpanMatrix& b) {
  if (a.to.num_orbits() != b.from.num_orbits())
    throw GsetError("compose_spans: middle object mismatch");
  const GroupDatum& g = *a.from.g;
  SpanMatrix m = SpanMatrix::zero(a.from, b.to);
  for (std::size_t u = 0; u < b.to.num_orbits(); ++u)
    for (std::size_t s = 0; s < a.from.num_orbits(); ++s) {
      SpanCombo acc;
      for (std::size_t t = 0; t < a.to.num_orbits(); ++t) {
        for (const SpanTerm& ta : a.e[t][s])
          for (const SpanTerm& tb : b.e[u][t]) {
            SpanCombo c = compose_basis(g, ta.basis, tb.basis);
            acc = combo_add(acc, combo_scale(c, ta.coeff * tb.coeff));
          }
      }
      m.e[u][s] = std::move(acc);
    }
  return m;
}

namespace {

// index of (s_idx, t_idx, rep) in a product certificate
int cert_index(const ProductCert& c, int s_idx, int t_idx, Elem rep) {
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const auto& e = c.entries[i];
    if (e.s_idx == s_idx && e.t_idx == t_idx && e.po.rep == rep)
      return static_cast<int>(i);
  }
  throw GsetError("internal: product certificate entry not found");
}

}  // namespace

SpanMatrix span_product(const SpanMatrix& u, const SpanMatrix& v,
                        const ProductCert& from_cert, const ProductCert& to_cert) {
  const GroupDatum& g = *u.from.g;
  SpanMatrix m = SpanMatrix::zero(from_cert.set, to_cert.set);

  for (std::size_t src = 0; src < from_cert.entries.size(); ++src) {
    const auto& fe = from_cert.entries[src];
    const SubId h1 = u.from.orbits[fe.s_idx].stab;
    const SubId h2 = v.from.orbits[fe.t_idx].stab;
    // base point of the source product orbit: (eH1, fe.po.rep H2)
    const Elem src_b = fe.po.rep;

    for (std::size_t j1 = 0; j1 < u.to.num_orbits(); ++j1)
      for (const SpanTerm& tu : u.e[j1][fe.s_idx])
        for (std::size_t j2 = 0; j2 < v.to.num_orbits(); ++j2)
          for (const SpanTerm& tv : v.e[j2][fe.t_idx]) {
            const SpanBasis& a = tu.basis;  // Q1, g1: orbit(H1) -> orbit(J1)
            const SpanBasis& b = tv.basis;  // Q2, g2
            const SubId q = g.sub_meet(a.through, b.through);
            // middle orbits of G/Q1 x G/Q2: reps t of Q1\G/Q2
            for (Elem t : g.double_coset_reps(a.through, b.through)) {
              // source point ((e)H1, (t)H2) against this source orbit's base
              Located ls = locate_pair(g, h1, h2, 0, t);
              auto pos = pair_orbits(g, h1, h2);
              Elem src_rep = pos[ls.pair_idx].rep;
              if (src_rep != src_b) continue;  // lives in a different source orbit
              Elem cp = ls.trans;

              const SubId u1 = u.to.orbits[j1].stab;
              const SubId u2 = v.to.orbits[j2].stab;
              Located lt = locate_pair(g, u1, u2, a.twist, g.mul(t, b.twist));
              auto pot = pair_orbits(g, u1, u2);
              Elem tgt_rep = pot[lt.pair_idx].rep;
              Elem cq = lt.trans;
              int tgt_idx = cert_index(to_cert, static_cast<int>(j1),
                                       static_cast<int>(j2), tgt_rep);

              SubId hs = g.sub_meet(h1, h2);
              SubId ju = g.sub_meet(u1, u2);
              Elem tw = g.double_coset_rep(hs, g.mul(g.inv(cp), cq), ju);
              SpanTerm term{SpanBasis{hs, ju, q, tw}, tu.coeff * tv.coeff};
              m.e[tgt_idx][src] = combo_add(m.e[tgt_idx][src], {term});
            }
          }
  }
  return m;
}

SpanBasis transpose_span(const GroupDatum& g, const SpanBasis& b) {
  Elem tw = g.double_coset_rep(b.to_stab, g.inv(b.twist), b.from_stab);
  return SpanBasis{b.to_stab, b.from_stab, b.through, tw};
}

SpanMatrix transpose_spans(const SpanMatrix& m) {
  const GroupDatum& g = *m.from.g;
  SpanMatrix t = SpanMatrix::zero(m.to, m.from);
  for (std::size_t i = 0; i < m.e.size(); ++i)
    for (std::size_t j = 0; j < m.e[i].size(); ++j) {
      SpanCombo c;
      for (const SpanTerm& term : m.e[i][j])
        c.push_back(SpanTerm{transpose_span(g, term.basis), term.coeff});
      t.e[j][i] = combo_normalize(std::move(c));
    }
  return t;
}

std::vector<SpanBasis> span_basis(const FinGSet& left, const FinGSet& right) {
  const GroupDatum& g = *left.g;
  std::vector<SpanBasis> out;
  for (const Orbit& a : left.orbits)
    for (const Orbit& b : right.orbits)
      for (const PairOrbit& po : pair_orbits(g, a.stab, b.stab))
        out.push_back(SpanBasis{a.stab, b.stab, po.stab, po.rep});
  return out;
}

std::string to_string(const GroupDatum& g, const SpanBasis& b) {
  std::ostringstream os;
  os << "G/" << g.sub_name(b.from_stab) << " <- G/" << g.sub_name(b.through) << " ("
     << g.elem_name(b.twist) << ") -> G/" << g.sub_name(b.to_stab);
  return os.str();
}

}  // namespace bredon

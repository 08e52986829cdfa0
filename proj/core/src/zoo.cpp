#include "bredon/mackey.hpp"

#include <map>
#include <mutex>

namespace bredon {

namespace {

FgAbelianGroup zn(std::size_t n) { return FgAbelianGroup::free_group(n); }

FgAbelianGroup f2n(std::size_t n) {
  IntMatrix rel(n, n);
  for (std::size_t i = 0; i < n; ++i) rel(i, i) = 2;
  return FgAbelianGroup(n, rel);
}

struct Builder {
  MackeyFunctor m;

  Builder(const GroupDatum& g, std::vector<FgAbelianGroup> levels) {
    m.g = &g;
    m.level = std::move(levels);
    for (const auto& [u, l] : g.covering_pairs()) {
      m.res_c.push_back(GroupHom::zero(m.level[u], m.level[l]));
      m.tr_c.push_back(GroupHom::zero(m.level[l], m.level[u]));
    }
    m.weyl.resize(g.num_subgroups());
    for (SubId h = 0; h < g.num_subgroups(); ++h)
      for (std::size_t i = 0; i < g.weyl_gens(h).size(); ++i)
        m.weyl[h].push_back(GroupHom::identity(m.level[h]));
  }

  Builder& res(SubId u, SubId l, IntMatrix a) {
    m.res_c[m.cover_index(u, l)] = GroupHom(m.level[u], m.level[l], std::move(a));
    return *this;
  }
  Builder& tr(SubId l, SubId u, IntMatrix a) {
    m.tr_c[m.cover_index(u, l)] = GroupHom(m.level[l], m.level[u], std::move(a));
    return *this;
  }
  Builder& weyl(SubId h, int gen, IntMatrix a) {
    m.weyl[h][gen] = GroupHom(m.level[h], m.level[h], std::move(a));
    return *this;
  }
  Builder& weyl_all_gens(SubId h, const IntMatrix& a) {
    for (auto& w : m.weyl[h]) w = GroupHom(m.level[h], m.level[h], a);
    return *this;
  }
};

IntMatrix scalar(long long v) {
  IntMatrix a(1, 1);
  a(0, 0) = v;
  return a;
}

// --- C2 catalog ---------------------------------------------------------

MackeyFunctor c2_zoo(const std::string& name) {
  const GroupDatum& g = GroupDatum::c2();
  const SubId e = 0, t = 1;
  if (name == "Z")
    return Builder(g, {zn(1), zn(1)}).res(t, e, scalar(1)).tr(e, t, scalar(2)).m;
  if (name == "Z*")
    return Builder(g, {zn(1), zn(1)}).res(t, e, scalar(2)).tr(e, t, scalar(1)).m;
  if (name == "F2")
    return Builder(g, {f2n(1), f2n(1)}).res(t, e, scalar(1)).tr(e, t, scalar(0)).m;
  if (name == "F2*")
    return Builder(g, {f2n(1), f2n(1)}).res(t, e, scalar(0)).tr(e, t, scalar(1)).m;
  if (name == "<Z>") return Builder(g, {zn(0), zn(1)}).m;
  if (name == "<F2>") return Builder(g, {zn(0), f2n(1)}).m;
  if (name == "f") return Builder(g, {zn(1), zn(0)}).weyl(e, 0, scalar(-1)).m;
  if (name == "Q")
    return Builder(g, {zn(1), f2n(1)})
        .res(t, e, scalar(0))
        .tr(e, t, scalar(1))
        .weyl(e, 0, scalar(-1))
        .m;
  if (name == "A")
    return Builder(g, {zn(1), zn(2)})
        .res(t, e, IntMatrix::from_rows({{2, 1}}))
        .tr(e, t, IntMatrix::from_rows({{1}, {0}}))
        .m;
  if (name == "A_{C2/e}") return free_on(single_orbit(g, 0));
  throw MackeyError("unknown C2 Mackey functor: " + name);
}

// --- K4 catalog ---------------------------------------------------------

// level order: e, L, D, R, K; middle-level data indexed in (L, D, R) order
MackeyFunctor k4_zoo(const std::string& name) {
  const GroupDatum& g = GroupDatum::k4();
  const SubId e = 0, L = 1, D = 2, R = 3, K = 4;
  const std::vector<SubId> mids = {L, D, R};

  auto proj = [](int i) {  // p_i : X^3 -> X
    IntMatrix a(1, 3);
    a(0, i) = 1;
    return a;
  };
  auto incl = [](int i, long long c = 1) {  // c * i_i : X -> X^3
    IntMatrix a(3, 1);
    a(i, 0) = c;
    return a;
  };

  if (name == "Z") {
    Builder b(g, {zn(1), zn(1), zn(1), zn(1), zn(1)});
    for (SubId h : mids) b.res(K, h, scalar(1)).res(h, e, scalar(1));
    for (SubId h : mids) b.tr(h, K, scalar(2)).tr(e, h, scalar(2));
    return b.m;
  }
  if (name == "Z*") {
    Builder b(g, {zn(1), zn(1), zn(1), zn(1), zn(1)});
    for (SubId h : mids) b.res(K, h, scalar(2)).res(h, e, scalar(2));
    for (SubId h : mids) b.tr(h, K, scalar(1)).tr(e, h, scalar(1));
    return b.m;
  }
  if (name == "phi*F2") {
    Builder b(g, {zn(0), f2n(1), f2n(1), f2n(1), f2n(3)});
    for (int i = 0; i < 3; ++i) b.res(K, mids[i], proj(i));
    return b.m;
  }
  if (name == "phi*F2*") {
    Builder b(g, {zn(0), f2n(1), f2n(1), f2n(1), f2n(3)});
    for (int i = 0; i < 3; ++i) b.tr(mids[i], K, incl(i));
    return b.m;
  }
  if (name == "mg") {
    Builder b(g, {zn(0), f2n(1), f2n(1), f2n(1), f2n(2)});
    b.res(K, L, IntMatrix::from_rows({{1, 0}}));
    b.res(K, D, IntMatrix::from_rows({{1, 1}}));
    b.res(K, R, IntMatrix::from_rows({{0, 1}}));
    return b.m;
  }
  if (name == "mg*") {
    Builder b(g, {zn(0), f2n(1), f2n(1), f2n(1), f2n(2)});
    b.tr(L, K, IntMatrix::from_rows({{1}, {0}}));
    b.tr(D, K, IntMatrix::from_rows({{1}, {1}}));
    b.tr(R, K, IntMatrix::from_rows({{0}, {1}}));
    return b.m;
  }
  if (name == "phi*Z") {
    Builder b(g, {zn(0), zn(1), zn(1), zn(1), zn(3)});
    for (int i = 0; i < 3; ++i) b.res(K, mids[i], proj(i)).tr(mids[i], K, incl(i, 2));
    return b.m;
  }
  if (name == "phi*Z*") {
    Builder b(g, {zn(0), zn(1), zn(1), zn(1), zn(3)});
    for (int i = 0; i < 3; ++i) {
      IntMatrix r = proj(i);
      r(0, i) = 2;
      b.res(K, mids[i], r).tr(mids[i], K, incl(i));
    }
    return b.m;
  }
  if (name == "phi*f") {
    Builder b(g, {zn(0), zn(1), zn(1), zn(1), zn(0)});
    for (SubId h : mids) b.weyl(h, 0, scalar(-1));
    return b.m;
  }
  if (name == "phi*Q") {
    Builder b(g, {zn(0), zn(1), zn(1), zn(1), f2n(3)});
    for (int i = 0; i < 3; ++i) b.tr(mids[i], K, incl(i)).weyl(mids[i], 0, scalar(-1));
    return b.m;
  }
  if (name == "<Z>") return Builder(g, {zn(0), zn(0), zn(0), zn(0), zn(1)}).m;
  if (name == "<F2>") return Builder(g, {zn(0), zn(0), zn(0), zn(0), f2n(1)}).m;
  if (name == "sum up<Z>" || name == "sum up<F2>") {
    auto lvl = name == "sum up<Z>" ? zn(2) : f2n(2);
    auto top = name == "sum up<Z>" ? zn(3) : f2n(3);
    Builder b(g, {zn(0), lvl, lvl, lvl, top});
    IntMatrix swap = IntMatrix::from_rows({{0, 1}, {1, 0}});
    for (int i = 0; i < 3; ++i) {
      IntMatrix rr(2, 3);  // diagonal after projecting the i-th coordinate
      rr(0, i) = 1;
      rr(1, i) = 1;
      IntMatrix tt(3, 2);  // fold then include as i-th coordinate
      tt(i, 0) = 1;
      tt(i, 1) = 1;
      b.res(K, mids[i], rr).tr(mids[i], K, tt).weyl(mids[i], 0, swap);
    }
    return b.m;
  }
  if (name == "E") {
    Builder b(g, {zn(0), zn(1), zn(1), zn(1), f2n(1)});
    for (SubId h : mids) b.tr(h, K, scalar(1)).weyl(h, 0, scalar(-1));
    return b.m;
  }
  if (name == "A") {
    // Burnside functor; top basis (free orbit, K/L, K/D, K/R, fixed point),
    // middle bases (free orbit, fixed point)
    Builder b(g, {zn(1), zn(2), zn(2), zn(2), zn(5)});
    for (SubId h : mids)
      b.res(h, e, IntMatrix::from_rows({{2, 1}}))
          .tr(e, h, IntMatrix::from_rows({{1}, {0}}));
    b.res(K, L, IntMatrix::from_rows({{2, 0, 1, 1, 0}, {0, 2, 0, 0, 1}}));
    b.res(K, D, IntMatrix::from_rows({{2, 1, 0, 1, 0}, {0, 0, 2, 0, 1}}));
    b.res(K, R, IntMatrix::from_rows({{2, 1, 1, 0, 0}, {0, 0, 0, 2, 1}}));
    b.tr(L, K, IntMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 0}}));
    b.tr(D, K, IntMatrix::from_rows({{1, 0}, {0, 0}, {0, 1}, {0, 0}, {0, 0}}));
    b.tr(R, K, IntMatrix::from_rows({{1, 0}, {0, 0}, {0, 0}, {0, 1}, {0, 0}}));
    return b.m;
  }
  if (name == "sum upZ" || name == "sum upZ*") {
    std::string base = name == "sum upZ" ? "Z" : "Z*";
    std::vector<MackeyFunctor> parts;
    for (SubId h : mids) parts.push_back(induce(h, c2_zoo(base)));
    return direct_sum(parts, g);
  }
  if (name == "up_e Z") return induce_from_trivial(g, zn(1));
  if (name == "up_e F2") return induce_from_trivial(g, f2n(1));
  if (name == "A_{K/e}") return free_on(single_orbit(g, e));
  if (name == "A_{K/L}") return free_on(single_orbit(g, L));
  if (name == "A_{K/D}") return free_on(single_orbit(g, D));
  if (name == "A_{K/R}") return free_on(single_orbit(g, R));
  if (name == "A_{K/K}") return k4_zoo("A");
  if (name == "I") {
    MackeyFunctor a = zoo(g, "A"), z = zoo(g, "Z");
    MackeyMorphism aug;
    aug.comp.push_back(GroupHom(a.level[e], z.level[e], scalar(1)));
    for (SubId h : mids)
      aug.comp.push_back(GroupHom(a.level[h], z.level[h], IntMatrix::from_rows({{2, 1}})));
    aug.comp.push_back(
        GroupHom(a.level[K], z.level[K], IntMatrix::from_rows({{4, 2, 2, 2, 1}})));
    return kernel(a, z, aug).functor;
  }
  if (name == "J") {
    MackeyFunctor a = zoo(g, "A"), zs = zoo(g, "Z*");
    MackeyMorphism f;
    f.comp.push_back(GroupHom(zs.level[e], a.level[e], scalar(1)));
    for (SubId h : mids)
      f.comp.push_back(GroupHom(zs.level[h], a.level[h], IntMatrix::from_rows({{1}, {0}})));
    f.comp.push_back(GroupHom(
        zs.level[K], a.level[K], IntMatrix::from_rows({{1}, {0}, {0}, {0}, {0}})));
    return cokernel(zs, a, f).functor;
  }
  throw MackeyError("unknown K4 Mackey functor: " + name);
}

}  // namespace

MackeyFunctor zoo(const GroupDatum& g, const std::string& name) {
  static std::mutex mu;
  static std::map<std::pair<GroupKind, std::string>, MackeyFunctor> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({g.kind(), name});
    if (it != cache.end()) return it->second;
  }
  MackeyFunctor m = g.kind() == GroupKind::C2 ? c2_zoo(name) : k4_zoo(name);
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(std::make_pair(g.kind(), name), m);
  return m;
}

std::vector<std::string> zoo_names(const GroupDatum& g) {
  if (g.kind() == GroupKind::C2)
    return {"Z", "Z*", "F2", "F2*", "<Z>", "f", "<F2>", "Q", "A", "A_{C2/e}"};
  return {"Z",        "Z*",       "phi*F2", "phi*F2*", "mg",       "mg*",
          "phi*Z",    "phi*Z*",   "phi*f",  "phi*Q",   "<Z>",      "<F2>",
          "sum up<Z>", "sum up<F2>", "sum upZ", "sum upZ*", "up_e Z", "up_e F2",
          "E",        "A",        "A_{K/e}", "A_{K/L}", "A_{K/D}", "A_{K/R}",
          "I",        "J"};
}

}  // namespace bredon

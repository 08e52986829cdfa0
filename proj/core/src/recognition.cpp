#include "bredon/recognition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bredon {

namespace {

void append_inv(std::ostringstream& os, const IsoInvariants& v) {
  os << v.free_rank << "(";
  for (const Int& f : v.factors) os << f << ",";
  os << ")";
}

void append_hom(std::ostringstream& os, const GroupHom& f) {
  append_inv(os, kernel_invariants(f));
  os << "/";
  append_inv(os, image_invariants(f));
  os << "/";
  append_inv(os, cokernel_invariants(f));
  os << ";";
}

}  // namespace

Fingerprint fingerprint(const MackeyFunctor& m) {
  const GroupDatum& g = *m.g;
  std::ostringstream os;
  for (SubId h = 0; h < g.num_subgroups(); ++h) {
    os << "L" << g.sub_name(h) << ":";
    append_inv(os, iso_invariants(m.level[h]));
    os << ";";
  }
  // all derived res/tr between comparable pairs
  for (SubId a = 0; a < g.num_subgroups(); ++a)
    for (SubId bs = 0; bs < g.num_subgroups(); ++bs) {
      if (a == bs || !g.sub_leq(bs, a)) continue;
      os << "R" << g.sub_name(a) << ">" << g.sub_name(bs) << ":";
      append_hom(os, m.res(a, bs));
      os << "T" << g.sub_name(bs) << ">" << g.sub_name(a) << ":";
      append_hom(os, m.tr(bs, a));
    }
  // Weyl data per level and generator: 1 - w and 1 + w
  for (SubId h = 0; h < g.num_subgroups(); ++h)
    for (std::size_t i = 0; i < m.weyl[h].size(); ++i) {
      GroupHom idh = GroupHom::identity(m.level[h]);
      os << "W" << g.sub_name(h) << i << ":";
      append_hom(os, idh + (-m.weyl[h][i]));
      append_hom(os, idh + m.weyl[h][i]);
    }
  // double coset composites res.tr
  for (SubId h : g.index_two_chain()) {
    os << "DC" << g.sub_name(h) << ":";
    append_hom(os, compose(m.res(h, g.trivial_sub()), m.tr(g.trivial_sub(), h)));
    if (g.kind() == GroupKind::K4) {
      append_hom(os, compose(m.res(g.full_sub(), h), m.tr(h, g.full_sub())));
    }
  }
  // joint restriction and transfer across all covered/covering levels at
  // once; collective cokernels separate functors (I vs J for one) whose
  // single structure maps have identical invariants
  for (SubId h = 0; h < g.num_subgroups(); ++h) {
    std::vector<SubId> lowers, uppers;
    for (const auto& [u, l] : g.covering_pairs()) {
      if (u == h) lowers.push_back(l);
      if (l == h) uppers.push_back(u);
    }
    if (lowers.size() > 1) {
      IntMatrix stacked(0, m.level[h].ambient());
      std::size_t rcols = 0, rrows = 0;
      for (SubId l : lowers) {
        rrows += m.level[l].ambient();
        rcols += m.level[l].relations().cols();
      }
      IntMatrix rels(rrows, rcols);
      std::size_t r0 = 0, c0 = 0;
      for (SubId l : lowers) {
        stacked = stacked.vstack(m.res(h, l).matrix);
        const auto& lr = m.level[l].relations();
        for (std::size_t i = 0; i < lr.rows(); ++i)
          for (std::size_t j = 0; j < lr.cols(); ++j) rels(r0 + i, c0 + j) = lr(i, j);
        r0 += m.level[l].ambient();
        c0 += lr.cols();
      }
      FgAbelianGroup sum(rrows, rels);
      os << "JR" << g.sub_name(h) << ":";
      append_hom(os, GroupHom(m.level[h], sum, stacked));
      // joint transfer up into this level
      IntMatrix side(m.level[h].ambient(), 0);
      for (SubId l : lowers) side = side.hstack(m.tr(l, h).matrix);
      os << "JT" << g.sub_name(h) << ":";
      append_hom(os, GroupHom(sum, m.level[h], side));
    }
    if (uppers.size() > 1) {
      std::size_t rrows = 0, rcols = 0;
      for (SubId u : uppers) {
        rrows += m.level[u].ambient();
        rcols += m.level[u].relations().cols();
      }
      IntMatrix rels(rrows, rcols);
      std::size_t r0 = 0, c0 = 0;
      IntMatrix up(0, m.level[h].ambient());
      for (SubId u : uppers) {
        up = up.vstack(m.tr(h, u).matrix);
        const auto& ur = m.level[u].relations();
        for (std::size_t i = 0; i < ur.rows(); ++i)
          for (std::size_t j = 0; j < ur.cols(); ++j) rels(r0 + i, c0 + j) = ur(i, j);
        r0 += m.level[u].ambient();
        c0 += ur.cols();
      }
      FgAbelianGroup sum(rrows, rels);
      os << "JU" << g.sub_name(h) << ":";
      append_hom(os, GroupHom(m.level[h], sum, up));
      IntMatrix down(m.level[h].ambient(), 0);
      for (SubId u : uppers) down = down.hstack(m.res(u, h).matrix);
      os << "JD" << g.sub_name(h) << ":";
      append_hom(os, GroupHom(sum, m.level[h], down));
    }
  }
  return Fingerprint{os.str()};
}

std::string MatchResult::to_string() const {
  if (status == Status::Ambiguous) return "ambiguous";
  if (status == Status::Unrecognized) return "unrecognized";
  if (names.empty()) return "0";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < names.size()) {
    std::size_t j = i;
    while (j < names.size() && names[j] == names[i]) ++j;
    if (!first) os << " (+) ";
    os << names[i];
    if (j - i > 1) os << "^" << (j - i);
    first = false;
    i = j;
  }
  return os.str();
}

namespace {

// levelwise budget: free rank and multiset of prime-power torsion factors
struct Budget {
  std::vector<long long> free_rank;                 // per level
  std::vector<std::map<Int, int>> prime_powers;     // per level

  bool contains(const Budget& o) const {
    for (std::size_t h = 0; h < free_rank.size(); ++h) {
      if (o.free_rank[h] > free_rank[h]) return false;
      for (const auto& [p, c] : o.prime_powers[h]) {
        auto it = prime_powers[h].find(p);
        if (it == prime_powers[h].end() || it->second < c) return false;
      }
    }
    return true;
  }
  void subtract(const Budget& o) {
    for (std::size_t h = 0; h < free_rank.size(); ++h) {
      free_rank[h] -= o.free_rank[h];
      for (const auto& [p, c] : o.prime_powers[h]) prime_powers[h][p] -= c;
    }
  }
  void add(const Budget& o) {
    for (std::size_t h = 0; h < free_rank.size(); ++h) {
      free_rank[h] += o.free_rank[h];
      for (const auto& [p, c] : o.prime_powers[h]) prime_powers[h][p] += c;
    }
  }
  bool exhausted() const {
    for (std::size_t h = 0; h < free_rank.size(); ++h) {
      if (free_rank[h] != 0) return false;
      for (const auto& [p, c] : prime_powers[h])
        if (c != 0) return false;
    }
    return true;
  }
};

std::vector<Int> prime_power_split(Int n) {
  std::vector<Int> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    Int q = 1;
    while (n % p == 0) {
      q *= p;
      n /= p;
    }
    out.push_back(q);
  }
  if (n > 1) out.push_back(n);
  return out;
}

Budget budget_of(const MackeyFunctor& m) {
  const GroupDatum& g = *m.g;
  Budget b;
  b.free_rank.resize(g.num_subgroups());
  b.prime_powers.resize(g.num_subgroups());
  for (SubId h = 0; h < g.num_subgroups(); ++h) {
    b.free_rank[h] = static_cast<long long>(m.level[h].free_rank());
    for (const Int& f : m.level[h].invariant_factors())
      for (const Int& q : prime_power_split(f)) b.prime_powers[h][q] += 1;
  }
  return b;
}

}  // namespace

MatchResult match(const MackeyFunctor& m, const std::vector<std::string>& catalog) {
  const GroupDatum& g = *m.g;
  bool zero = true;
  for (const auto& lv : m.level) zero = zero && lv.is_trivial();
  if (zero) return MatchResult{MatchResult::Status::Recognized, {}};

  Fingerprint target = fingerprint(m);
  Budget total = budget_of(m);

  std::vector<MackeyFunctor> members;
  std::vector<Budget> mb;
  for (const auto& name : catalog) {
    members.push_back(zoo(g, name));
    mb.push_back(budget_of(members.back()));
  }

  std::vector<std::vector<std::string>> solutions;
  std::vector<int> counts(catalog.size(), 0);

  // depth-first over multisets with exact levelwise budgets
  auto dfs = [&](auto&& self, std::size_t from, Budget remaining) -> void {
    if (solutions.size() > 1) return;  // ambiguity already established
    if (remaining.exhausted()) {
      std::vector<MackeyFunctor> parts;
      std::vector<std::string> names;
      for (std::size_t i = 0; i < catalog.size(); ++i)
        for (int c = 0; c < counts[i]; ++c) {
          parts.push_back(members[i]);
          names.push_back(catalog[i]);
        }
      if (fingerprint(direct_sum(parts, g)) == target) {
        std::sort(names.begin(), names.end());
        solutions.push_back(names);
      }
      return;
    }
    for (std::size_t i = from; i < catalog.size(); ++i) {
      if (!remaining.contains(mb[i])) continue;
      Budget next = remaining;
      next.subtract(mb[i]);
      counts[i] += 1;
      self(self, i, next);
      counts[i] -= 1;
      if (solutions.size() > 1) return;
    }
  };
  dfs(dfs, 0, total);

  if (solutions.empty()) return MatchResult{MatchResult::Status::Unrecognized, {}};
  if (solutions.size() > 1) return MatchResult{MatchResult::Status::Ambiguous, {}};
  return MatchResult{MatchResult::Status::Recognized, solutions[0]};
}

std::vector<std::string> match_catalog(const GroupDatum& g) {
  if (g.kind() == GroupKind::C2)
    return {"Z", "Z*", "F2", "F2*", "<Z>", "f", "<F2>", "Q", "A"};
  return {"Z",      "Z*",     "phi*Z",     "phi*Z*",     "phi*F2", "phi*F2*",
          "phi*f",  "phi*Q",  "mg",        "mg*",        "<Z>",    "<F2>",
          "E",      "sum up<Z>", "sum up<F2>", "sum upZ", "sum upZ*", "up_e Z",
          "up_e F2", "A",      "I",         "J"};
}

}  // namespace bredon

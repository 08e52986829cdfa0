#include "bredon/json_io.hpp"

namespace bredon {

namespace {

using njson = nlohmann::ordered_json;

njson matrix_to_json(const IntMatrix& m) {
  njson rows = njson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    njson row = njson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).convert_to<long long>());
    rows.push_back(row);
  }
  njson out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["data"] = rows;
  return out;
}

IntMatrix matrix_from_json(const njson& j) {
  IntMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const auto& rows = j.at("data");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = rows[i][c].get<long long>();
  return m;
}

FgAbelianGroup canonical_group(std::size_t free_rank, const std::vector<long long>& tors) {
  std::size_t n = free_rank + tors.size();
  IntMatrix rel(n, tors.size());
  for (std::size_t i = 0; i < tors.size(); ++i) rel(i, i) = tors[i];
  return FgAbelianGroup(n, rel);
}

}  // namespace

njson mackey_to_json(const MackeyFunctor& m) {
  const GroupDatum& g = *m.g;
  njson j;
  j["group"] = g.kind() == GroupKind::K4 ? "K4" : "C2";
  njson levels;
  for (SubId h = 0; h < g.num_subgroups(); ++h) {
    njson lv;
    lv["free_rank"] = m.level[h].free_rank();
    njson tors = njson::array();
    for (const Int& f : m.level[h].invariant_factors())
      tors.push_back(f.convert_to<long long>());
    lv["torsion"] = tors;
    levels[g.sub_name(h)] = lv;
  }
  j["levels"] = levels;
  njson res, tr;
  for (std::size_t i = 0; i < g.covering_pairs().size(); ++i) {
    const auto& [u, l] = g.covering_pairs()[i];
    res[g.sub_name(u) + "->" + g.sub_name(l)] = matrix_to_json(m.res_c[i].canonical_matrix());
    tr[g.sub_name(l) + "->" + g.sub_name(u)] = matrix_to_json(m.tr_c[i].canonical_matrix());
  }
  j["res"] = res;
  j["tr"] = tr;
  njson weyl;
  for (SubId h = 0; h < g.num_subgroups(); ++h) {
    njson gens = njson::array();
    for (const auto& w : m.weyl[h]) gens.push_back(matrix_to_json(w.canonical_matrix()));
    weyl[g.sub_name(h)] = gens;
  }
  j["weyl"] = weyl;
  return j;
}

MackeyFunctor mackey_from_json(const njson& j) {
  const GroupDatum& g =
      j.at("group").get<std::string>() == "K4" ? GroupDatum::k4() : GroupDatum::c2();
  MackeyFunctor m;
  m.g = &g;
  for (SubId h = 0; h < g.num_subgroups(); ++h) {
    const auto& lv = j.at("levels").at(g.sub_name(h));
    m.level.push_back(canonical_group(lv.at("free_rank").get<std::size_t>(),
                                      lv.at("torsion").get<std::vector<long long>>()));
  }
  for (const auto& [u, l] : g.covering_pairs()) {
    IntMatrix r = matrix_from_json(j.at("res").at(g.sub_name(u) + "->" + g.sub_name(l)));
    IntMatrix t = matrix_from_json(j.at("tr").at(g.sub_name(l) + "->" + g.sub_name(u)));
    m.res_c.push_back(GroupHom(m.level[u], m.level[l], std::move(r)));
    m.tr_c.push_back(GroupHom(m.level[l], m.level[u], std::move(t)));
  }
  m.weyl.resize(g.num_subgroups());
  for (SubId h = 0; h < g.num_subgroups(); ++h) {
    const auto& gens = j.at("weyl").at(g.sub_name(h));
    for (const auto& w : gens)
      m.weyl[h].push_back(GroupHom(m.level[h], m.level[h], matrix_from_json(w)));
  }
  return m;
}

}  // namespace bredon

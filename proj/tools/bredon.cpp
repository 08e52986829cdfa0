// Batch front-end: RO(K)-graded homotopy charts of equivariant
// Eilenberg-Mac Lane spectra for C2 and the Klein four group, invariant
// verification suites, the functor catalog, and double-complex spectral
// sequence pages.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

#include "bredon/json_io.hpp"
#include "bredon/recognition.hpp"
#include "bredon/ss.hpp"
#include "bredon/verify.hpp"

using namespace bredon;
using njson = nlohmann::ordered_json;

namespace {

struct ChartRequest {
  std::string group = "K4";
  std::string coeff = "A";
  std::string grading = "rho_bar";  // or "sigma:L", "sigma:D", "sigma:R", "sigma"
  int x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
  std::string format = "table";  // table | csv | json
  std::string convention = "plus";
  int max_degree = 16;
};

const GroupDatum& group_of(const std::string& name) {
  if (name == "K4" || name == "k4") return GroupDatum::k4();
  if (name == "C2" || name == "c2") return GroupDatum::c2();
  throw std::runtime_error("unknown group: " + name);
}

// y is the suspension multiple: the cell at (x, y) is pi_x of the y-fold
// suspension.  For sigma charts the plus convention grades by pi_{x+y sigma},
// i.e. positive y suspends by -sigma.
VirtualRep cell_grading(const GroupDatum& g, const ChartRequest& req, int y) {
  if (req.grading == "rho_bar") {
    if (g.kind() != GroupKind::K4)
      throw std::runtime_error("rho_bar grading needs --group K4");
    return VirtualRep::rho_bar(y);
  }
  int sign = req.convention == "plus" ? -1 : 1;
  if (req.convention != "plus" && req.convention != "minus")
    throw std::runtime_error("convention must be plus or minus");
  if (req.grading == "sigma") {
    if (g.kind() != GroupKind::C2)
      throw std::runtime_error("plain sigma grading needs --group C2");
    return VirtualRep{0, {sign * y, 0, 0}};
  }
  if (req.grading.rfind("sigma:", 0) == 0) {
    if (g.kind() != GroupKind::K4)
      throw std::runtime_error("sigma:H grading needs --group K4");
    std::string h = req.grading.substr(6);
    VirtualRep v;
    if (h == "L")
      v.q[0] = sign * y;
    else if (h == "D")
      v.q[1] = sign * y;
    else if (h == "R")
      v.q[2] = sign * y;
    else
      throw std::runtime_error("unknown sigma axis: " + h);
    return v;
  }
  throw std::runtime_error("unknown grading: " + req.grading);
}

struct Cell {
  int x = 0, y = 0;
  MackeyFunctor value;
  MatchResult name;
};

std::vector<Cell> compute_chart(const ChartRequest& req) {
  const GroupDatum& g = group_of(req.group);
  if (std::abs(req.x_lo) > req.max_degree || std::abs(req.x_hi) > req.max_degree ||
      std::abs(req.y_lo) > req.max_degree || std::abs(req.y_hi) > req.max_degree)
    throw std::runtime_error("range exceeds the --max-degree cap");
  MackeyFunctor coeff = zoo(g, req.coeff);
  auto catalog = match_catalog(g);

  struct Job {
    int x, y;
  };
  std::vector<Job> jobs;
  for (int y = req.y_lo; y <= req.y_hi; ++y)
    for (int x = req.x_lo; x <= req.x_hi; ++x) jobs.push_back({x, y});

  // cells are independent pure computations; merge is by coordinates
  std::vector<Cell> cells(jobs.size());
  std::mutex mu;
  std::size_t next = 0;
  auto worker = [&]() {
    for (;;) {
      std::size_t idx;
      {
        std::lock_guard<std::mutex> lk(mu);
        if (next >= jobs.size()) return;
        idx = next++;
      }
      const Job& job = jobs[idx];
      VirtualRep v = cell_grading(g, req, job.y);
      MackeyFunctor h = homotopy_of_suspension(g, v, coeff, job.x);
      cells[idx] = Cell{job.x, job.y, h, match(h, catalog)};
    }
  };
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (!jobs.empty()) n = std::min<unsigned>(n, static_cast<unsigned>(jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return cells;
}

std::string cell_label(const Cell& c) {
  if (c.name.status == MatchResult::Status::Recognized) return c.name.to_string();
  std::string out = c.name.status == MatchResult::Status::Ambiguous ? "ambiguous! " : "? ";
  for (std::size_t h = 0; h < c.value.level.size(); ++h) {
    if (h) out += "|";
    out += iso_invariants(c.value.level[h]).to_string();
  }
  return out;
}

void emit_table(const ChartRequest& req, const std::vector<Cell>& cells) {
  std::map<std::pair<int, int>, const Cell*> at;
  std::size_t width = 8;
  for (const auto& c : cells) {
    at[{c.x, c.y}] = &c;
    width = std::max(width, cell_label(c).size() + 1);
  }
  std::printf("pi_x of the y-fold %s suspension of H(%s), group %s\n",
              req.grading.c_str(), req.coeff.c_str(), req.group.c_str());
  for (int y = req.y_hi; y >= req.y_lo; --y) {
    std::printf("y=%-4d|", y);
    for (int x = req.x_lo; x <= req.x_hi; ++x)
      std::printf(" %-*s", static_cast<int>(width), cell_label(*at[{x, y}]).c_str());
    std::printf("\n");
  }
  std::printf("      +");
  for (int x = req.x_lo; x <= req.x_hi; ++x)
    std::printf("-%s", std::string(width, '-').c_str());
  std::printf("\n       ");
  for (int x = req.x_lo; x <= req.x_hi; ++x) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "x=%d", x);
    std::printf("%-*s ", static_cast<int>(width), buf);
  }
  std::printf("\n");
}

void emit_csv(const std::vector<Cell>& cells, const GroupDatum& g) {
  std::printf("x,y,level,invariants,name\n");
  for (const auto& c : cells)
    for (std::size_t h = 0; h < c.value.level.size(); ++h)
      std::printf("%d,%d,%s,%s,%s\n", c.x, c.y, g.sub_name(static_cast<SubId>(h)).c_str(),
                  iso_invariants(c.value.level[h]).to_string().c_str(),
                  c.name.to_string().c_str());
}

void emit_json(const ChartRequest& req, const std::vector<Cell>& cells,
               const GroupDatum& g) {
  njson out;
  out["schema"] = 1;
  out["group"] = req.group;
  out["coeff"] = req.coeff;
  out["grading"] = req.grading;
  out["convention"] = req.convention;
  njson arr = njson::array();
  for (const auto& c : cells) {
    njson jc;
    jc["x"] = c.x;
    jc["y"] = c.y;
    jc["name"] = c.name.to_string();
    jc["recognized"] = c.name.status == MatchResult::Status::Recognized;
    njson lv;
    for (std::size_t h = 0; h < c.value.level.size(); ++h) {
      njson l;
      l["free_rank"] = c.value.level[h].free_rank();
      njson tors = njson::array();
      for (const Int& f : c.value.level[h].invariant_factors())
        tors.push_back(f.convert_to<long long>());
      l["torsion"] = tors;
      lv[g.sub_name(static_cast<SubId>(h))] = l;
    }
    jc["levels"] = lv;
    jc["mackey"] = mackey_to_json(c.value);
    arr.push_back(jc);
  }
  out["cells"] = arr;
  std::cout << out.dump(2) << "\n";
}

int cmd_compute(const ChartRequest& req) {
  const GroupDatum& g = group_of(req.group);
  auto cells = compute_chart(req);
  for (int y = req.y_lo; y <= req.y_hi; ++y)
    if (cell_grading(g, req, y).mixed_signs())
      std::fprintf(stderr, "note: mixed-sign grading at y=%d (experimental)\n", y);
  if (req.format == "table")
    emit_table(req, cells);
  else if (req.format == "csv")
    emit_csv(cells, g);
  else if (req.format == "json")
    emit_json(req, cells, g);
  else
    throw std::runtime_error("unknown format: " + req.format);
  return 0;
}

int cmd_verify(const std::string& suite) {
  CheckReport rep = verify_suite(suite);
  for (const auto& it : rep.items)
    std::printf("[%s] %s%s%s\n", it.pass ? "pass" : "FAIL", it.name.c_str(),
                it.detail.empty() ? "" : " -- ", it.detail.c_str());
  std::printf("%zu checks, %s\n", rep.items.size(), rep.ok() ? "all passed" : "FAILURES");
  return rep.ok() ? 0 : 1;
}

int cmd_zoo_list(const std::string& group) {
  for (const auto& n : zoo_names(group_of(group))) std::printf("%s\n", n.c_str());
  return 0;
}

int cmd_zoo_show(const std::string& group, const std::string& name) {
  std::cout << mackey_to_json(zoo(group_of(group), name)).dump(2) << "\n";
  return 0;
}

int cmd_ss(const std::string& group, const std::string& coeff, int k, int page_no) {
  const GroupDatum& g = group_of(group);
  int a = std::abs(k);
  if (a < 1) throw std::runtime_error("--k must be a nonzero suspension index");
  FreeComplex left, right;
  if (g.kind() == GroupKind::C2) {
    left = sphere_sigma(g, g.trivial_sub(), a >= 2 ? a - 1 : 1);
    right = sphere_sigma(g, g.trivial_sub(), 1);
    if (k < 0) {
      left = dualize(left);
      right = dualize(right);
    }
  } else {
    left = suspension_complex(g, VirtualRep::rho_bar(k > 0 ? a - 1 : -(a - 1)));
    right = suspension_complex(g, VirtualRep::rho_bar(k > 0 ? 1 : -1));
  }
  Bicomplex b = bicomplex_from_smash(left, right, zoo(g, coeff));
  auto catalog = match_catalog(g);
  for (int r = 1; r <= page_no; ++r) {
    SpectralPage p = page(b, r);
    std::printf("page %d:\n", r);
    for (int j = p.jhi; j >= p.jlo; --j) {
      std::printf("j=%-3d |", j);
      for (int i = p.ilo; i <= p.ihi; ++i)
        std::printf(" %-20s", match(p.entry(i, j), catalog).to_string().c_str());
      std::printf("\n");
    }
    std::printf("       ");
    for (int i = p.ilo; i <= p.ihi; ++i) std::printf(" i=%-19d", i);
    std::printf("\n");
  }
  TotalCompare cmp = compare_with_total(b);
  for (const auto& d : cmp.degrees) {
    const char* kind = d.kind == TotalCompare::Kind::ExactMatch         ? "match"
                       : d.kind == TotalCompare::Kind::ExtensionSplit   ? "extension (split)"
                       : d.kind == TotalCompare::Kind::ExtensionNonSplit
                           ? "extension (nonsplit)"
                           : "MISMATCH";
    std::printf("total degree %d: %s (%d pieces)\n", d.n, kind, d.pieces);
  }
  return cmp.consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Bredon homology of representation spheres for C2 and the Klein four group"};
  app.require_subcommand(1);

  ChartRequest req;
  auto* compute = app.add_subcommand("compute", "compute a homotopy chart");
  compute->add_option("--group", req.group, "C2 or K4")->capture_default_str();
  compute->add_option("--coeff", req.coeff, "coefficient functor name")
      ->capture_default_str();
  compute->add_option("--grading", req.grading, "rho_bar, sigma:L/D/R, or sigma (C2)")
      ->capture_default_str();
  compute->add_option("--x", req.x_lo, "x (trivial degree), lower end with --x-hi")
      ->required();
  compute->add_option("--x-hi", req.x_hi, "upper end of the x range");
  compute->add_option("--y", req.y_lo, "suspension multiple, lower end with --y-hi")
      ->required();
  compute->add_option("--y-hi", req.y_hi, "upper end of the y range");
  compute->add_option("--format", req.format, "table, csv, or json")->capture_default_str();
  compute
      ->add_option("--convention", req.convention,
                   "plus or minus sign convention for sigma gradings")
      ->capture_default_str();
  compute->add_option("--max-degree", req.max_degree, "degree cap")->capture_default_str();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", suite, "axioms, ses, les, boxformula, sscompare, or all")
      ->capture_default_str();

  std::string zoo_group = "K4", zoo_action = "list", zoo_name;
  auto* zoo_cmd = app.add_subcommand("zoo", "list or show catalog functors");
  zoo_cmd->add_option("action", zoo_action, "list or show")->capture_default_str();
  zoo_cmd->add_option("name", zoo_name, "functor name for show");
  zoo_cmd->add_option("--group", zoo_group, "C2 or K4")->capture_default_str();

  std::string ss_group = "K4", ss_coeff = "A";
  int ss_k = 2, ss_page = 2;
  auto* ss_cmd = app.add_subcommand("ss", "double complex spectral sequence pages");
  ss_cmd->add_option("--group", ss_group, "C2 or K4")->capture_default_str();
  ss_cmd->add_option("--coeff", ss_coeff, "coefficient functor")->capture_default_str();
  ss_cmd->add_option("--k", ss_k, "target suspension index (sign picks the cone)")
      ->capture_default_str();
  ss_cmd->add_option("--page", ss_page, "highest page to print (1 or 2)")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) {
      if (compute->count("--x-hi") == 0) req.x_hi = req.x_lo;
      if (compute->count("--y-hi") == 0) req.y_hi = req.y_lo;
      if (req.x_hi < req.x_lo || req.y_hi < req.y_lo)
        throw std::runtime_error("empty range");
      return cmd_compute(req);
    }
    if (*verify) return cmd_verify(suite);
    if (*zoo_cmd) {
      if (zoo_action == "list") return cmd_zoo_list(zoo_group);
      if (zoo_action == "show") {
        if (zoo_name.empty()) throw std::runtime_error("zoo show needs a name");
        return cmd_zoo_show(zoo_group, zoo_name);
      }
      throw std::runtime_error("unknown zoo action: " + zoo_action);
    }
    if (*ss_cmd) return cmd_ss(ss_group, ss_coeff, ss_k, ss_page);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}

#pragma once

#include "bredon/recognition.hpp"
#include "bredon/ss.hpp"

namespace bredon {

struct CheckReport {
  struct Item {
    std::string name;
    bool pass = true;
    std::string detail;
  };
  std::vector<Item> items;

  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  void add(const std::string& name, bool pass, const std::string& detail = "") {
    items.push_back(Item{name, pass, detail});
  }
  void merge(const CheckReport& o) {
    items.insert(items.end(), o.items.begin(), o.items.end());
  }
};

/// Every named functor of both groups passes the axiom validator.
CheckReport verify_axioms();

/// Exactness of the coefficient sequences I -> A -> Z and Z* -> A -> J.
CheckReport verify_ses();

/// Box-with-free against induction-restriction, the trivial-subgroup case,
/// and the evaluation of hom-from-free, for every named functor and level.
CheckReport verify_boxformula();

/// Cofiber long exact sequences for A, Z, I coefficients, all three order-2
/// subgroups and suspensions up to k rho-bar.
CheckReport verify_les(int kmax = 3);

/// Double-complex pages against directly computed total homology on small
/// examples for both groups.
CheckReport verify_sscompare();

CheckReport verify_all();

CheckReport verify_suite(const std::string& name);

}  // namespace bredon

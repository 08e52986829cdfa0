#pragma once

#include "bredon/mackey.hpp"

namespace bredon {

/// Isomorphism-invariant fingerprint of a Mackey functor: per level the group
/// invariants and the fixed/coinvariant data of the Weyl action, and for
/// every derived restriction, transfer, and double-coset composite the
/// invariants of kernel, image, and cokernel.
struct Fingerprint {
  std::string repr;

  bool operator==(const Fingerprint&) const = default;
  bool operator<(const Fingerprint& o) const { return repr < o.repr; }
};

Fingerprint fingerprint(const MackeyFunctor& m);

struct MatchResult {
  enum class Status { Recognized, Unrecognized, Ambiguous };
  Status status = Status::Unrecognized;
  std::vector<std::string> names;  // sorted with multiplicity when recognized

  bool recognized() const { return status == Status::Recognized; }
  std::string to_string() const;
};

/// Find the unique multiset over the catalog whose direct sum has the same
/// fingerprint; exhaustive within levelwise rank and torsion budgets, so two
/// distinct matching multisets are reported as ambiguous rather than chosen.
MatchResult match(const MackeyFunctor& m, const std::vector<std::string>& catalog);

/// Catalog used for chart labels; a subset of the zoo without aliases.
std::vector<std::string> match_catalog(const GroupDatum& g);

}  // namespace bredon

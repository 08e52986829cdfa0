#pragma once

#include "bredon/mackey.hpp"

#include <array>

namespace bredon {

struct ComplexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coefficient-free chain complex: each term a finite G-set, differentials
/// span matrices.  Degrees run over [lo, hi]; out-of-range terms are empty.
struct FreeComplex {
  const GroupDatum* g = nullptr;
  int lo = 0, hi = -1;
  std::vector<FinGSet> terms;      // term(i) at index i - lo
  std::vector<SpanMatrix> diffs;   // diff(i): term(i) -> term(i-1), index i - lo - 1

  bool in_range(int i) const { return i >= lo && i <= hi; }
  const FinGSet& term(int i) const;
  SpanMatrix diff(int i) const;  // zero span when out of range
  std::string to_string() const;
};

/// The unit: one fixed orbit in degree 0.
FreeComplex unit_complex(const GroupDatum& g);

/// Reduced cellular complex of the k-fold sign-representation sphere whose
/// free cells have stabilizer `cell_stab` (L, D or R for K4; the trivial
/// subgroup for C2).  Degree 0 holds the fixed orbit, degrees 1..k one cell
/// of type G/cell_stab with alternating twist differentials.
FreeComplex sphere_sigma(const GroupDatum& g, SubId cell_stab, int k);

FreeComplex smash(const FreeComplex& a, const FreeComplex& b);
FreeComplex smash(const std::vector<FreeComplex>& cs);

/// Terms reindexed i -> -i with transposed differentials.
FreeComplex dualize(const FreeComplex& c);

FreeComplex shift(const FreeComplex& c, int n);

/// Element of RO(G): trivial part n plus sign multiplicities.  For K4 the
/// slots are (sigma_L, sigma_D, sigma_R); for C2 only q[0] is used.
struct VirtualRep {
  int n = 0;
  std::array<int, 3> q{0, 0, 0};

  static VirtualRep rho_bar(int k) { return VirtualRep{0, {k, k, k}}; }
  static VirtualRep trivial(int n) { return VirtualRep{n, {0, 0, 0}}; }
  bool mixed_signs() const;
  std::string to_string(const GroupDatum& g) const;
};

/// Chain complex of S^V: smash of sign spheres (dualized for negative
/// multiplicities) shifted by the trivial part.
FreeComplex suspension_complex(const GroupDatum& g, const VirtualRep& v);

struct MackeyComplex {
  const GroupDatum* g = nullptr;
  int lo = 0, hi = -1;
  std::vector<MackeyFunctor> terms;
  std::vector<MackeyMorphism> diffs;  // diff(i): term(i) -> term(i-1)

  bool in_range(int i) const { return i >= lo && i <= hi; }
  const MackeyFunctor& term(int i) const;
};

/// Degreewise box realization with coefficients in m.
MackeyComplex realize(const FreeComplex& c, const MackeyFunctor& m);

struct HomologyResult {
  MackeyFunctor m;
  SubquotientFunctor data;
};

HomologyResult homology_at(const MackeyComplex& c, int n);
MackeyFunctor homology(const MackeyComplex& c, int n);

/// pi_n of the V-suspension of the Eilenberg-Mac Lane spectrum of m.
MackeyFunctor homotopy_of_suspension(const GroupDatum& g, const VirtualRep& v,
                                     const MackeyFunctor& m, int n);

struct LesReport {
  bool exact = true;
  std::vector<std::string> failures;
};

/// Builds the cellular cofiber sequence G/H+ ^ X -> X -> S^sigma_H ^ X for
/// X = S^V with coefficients m and checks exactness of the induced long
/// sequence on homology in the given degree range (all levels).
LesReport verify_cofiber_les(SubId h, const VirtualRep& v, const MackeyFunctor& m,
                             int deg_lo, int deg_hi);

}  // namespace bredon

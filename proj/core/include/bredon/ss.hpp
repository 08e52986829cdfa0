#pragma once

#include "bredon/complexes.hpp"

namespace bredon {

/// First-quadrant style double complex D(i,j) realized from a smash of two
/// free complexes: horizontal differential from the left factor, vertical
/// from the right one, with verticals negated on odd columns so the total
/// differential matches the smash complex.
struct Bicomplex {
  const GroupDatum* g = nullptr;
  FreeComplex left, right;
  MackeyFunctor coeff;
  int ilo = 0, ihi = -1, jlo = 0, jhi = -1;
  std::vector<std::vector<MackeyFunctor>> terms;    // [i-ilo][j-jlo]
  std::vector<std::vector<MackeyMorphism>> dh;      // (i,j) -> (i-1,j), i > ilo
  std::vector<std::vector<MackeyMorphism>> dv;      // (i,j) -> (i,j-1), j > jlo

  bool in_range(int i, int j) const {
    return i >= ilo && i <= ihi && j >= jlo && j <= jhi;
  }
  const MackeyFunctor& term(int i, int j) const;
};

Bicomplex bicomplex_from_smash(const FreeComplex& left, const FreeComplex& right,
                               const MackeyFunctor& m);

/// Page of the associated spectral sequence.  Page 1 is homology in the
/// horizontal direction carrying the induced vertical differentials
/// (bidegree (0,-1)); page 2 is homology of page 1.
struct SpectralPage {
  const GroupDatum* g = nullptr;
  int r = 1;
  int ilo = 0, ihi = -1, jlo = 0, jhi = -1;
  std::vector<std::vector<MackeyFunctor>> entries;
  std::vector<std::vector<MackeyMorphism>> d;  // page 1 only: (i,j) -> (i,j-1)

  bool in_range(int i, int j) const {
    return i >= ilo && i <= ihi && j >= jlo && j <= jhi;
  }
  const MackeyFunctor& entry(int i, int j) const;
};

SpectralPage page(const Bicomplex& b, int r);

/// Comparison of the second page against the directly computed homology of
/// the total complex.  Degrees with one associated-graded piece must match
/// exactly; degrees with several pieces are extension degrees and are checked
/// for consistency (rank additivity) and classified by whether the direct
/// answer is the split sum.
struct TotalCompare {
  enum class Kind { ExactMatch, ExtensionSplit, ExtensionNonSplit, Mismatch };
  struct Degree {
    int n = 0;
    Kind kind = Kind::ExactMatch;
    int pieces = 0;
    std::string detail;
  };
  std::vector<Degree> degrees;
  bool consistent = true;  // no Mismatch entries

  std::vector<int> extension_degrees() const;
};

TotalCompare compare_with_total(const Bicomplex& b);

}  // namespace bredon

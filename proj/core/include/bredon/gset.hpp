#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bredon {

// Element and subgroup handles.  Both C2 and the Klein four group are
// elementary abelian 2-groups, so elements are bitmask indices and the
// product is xor.
using Elem = int;
using SubId = int;

struct GsetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GroupKind { C2, K4 };

/// Group tables for C2 and the Klein four group.  Element order is fixed
/// (e < l < d < r for K4) and every canonical choice downstream derives
/// from it.
class GroupDatum {
public:
  static const GroupDatum& k4();
  static const GroupDatum& c2();

  GroupKind kind() const { return kind_; }
  int order() const { return order_; }
  int num_subgroups() const { return static_cast<int>(sub_mask_.size()); }

  Elem mul(Elem a, Elem b) const { return a ^ b; }
  Elem inv(Elem a) const { return a; }

  const std::string& elem_name(Elem e) const { return elem_names_[e]; }
  const std::string& sub_name(SubId h) const { return sub_names_[h]; }
  SubId sub_by_name(const std::string& name) const;

  int sub_order(SubId h) const;
  bool sub_contains(SubId h, Elem e) const { return (sub_mask_[h] >> e) & 1; }
  bool sub_leq(SubId a, SubId b) const { return (sub_mask_[a] & ~sub_mask_[b]) == 0; }
  SubId sub_meet(SubId a, SubId b) const;  // intersection
  SubId sub_join(SubId a, SubId b) const;  // subgroup generated

  SubId trivial_sub() const { return 0; }
  SubId full_sub() const { return num_subgroups() - 1; }
  std::vector<SubId> all_subgroups() const;
  /// Order-2 subgroups (K4: L, D, R; C2: the full group).
  std::vector<SubId> index_two_chain() const;

  /// Pairs (upper, lower) with [upper : lower] = 2; the stored structure maps
  /// of a Mackey functor live on exactly these.
  const std::vector<std::pair<SubId, SubId>>& covering_pairs() const { return covers_; }

  /// Canonical coset representatives of G/H, ascending by minimal element.
  const std::vector<Elem>& coset_reps(SubId h) const { return coset_reps_[h]; }
  Elem coset_rep(SubId h, Elem g) const;   // min of gH
  int coset_index(SubId h, Elem g) const;  // index of gH in coset_reps(h)

  /// Minimal element of the double coset H g J.
  Elem double_coset_rep(SubId h, Elem g, SubId j) const;
  /// Ascending minimal representatives of H\G/J.
  std::vector<Elem> double_coset_reps(SubId h, SubId j) const;

  /// Generators of the Weyl group G/H, as canonical nontrivial coset reps.
  /// K4 level e: {l, r}; order-2 levels: one generator; top level: none.
  const std::vector<Elem>& weyl_gens(SubId h) const { return weyl_gens_[h]; }
  /// Word in weyl_gens(h) representing the coset gH (indices into the list).
  std::vector<int> weyl_word(SubId h, Elem g) const;

private:
  GroupDatum(GroupKind kind);

  GroupKind kind_;
  int order_;
  std::vector<std::string> elem_names_;
  std::vector<std::string> sub_names_;
  std::vector<std::uint8_t> sub_mask_;
  std::vector<std::pair<SubId, SubId>> covers_;
  std::vector<std::vector<Elem>> coset_reps_;
  std::vector<std::vector<Elem>> weyl_gens_;
};

/// One orbit G/H, recorded by its stabilizer.
struct Orbit {
  SubId stab;
  bool operator==(const Orbit&) const = default;
};

/// Finite G-set as an ordered list of orbits (a multiset; order only fixes
/// coordinates).
struct FinGSet {
  const GroupDatum* g = nullptr;
  std::vector<Orbit> orbits;

  std::size_t num_orbits() const { return orbits.size(); }
  std::size_t num_points() const;
  bool empty() const { return orbits.empty(); }
  std::string to_string() const;
};

FinGSet single_orbit(const GroupDatum& g, SubId stab);
FinGSet disjoint_union(const FinGSet& a, const FinGSet& b);

/// Orbit of G/H x G/J under the diagonal action: stabilizer is H meet J and
/// the orbit contains the point (eH, rep J).
struct PairOrbit {
  SubId stab;
  Elem rep;
};

/// Orbits of G/H x G/J, ascending by double-coset representative.
std::vector<PairOrbit> pair_orbits(const GroupDatum& g, SubId h, SubId j);

/// Locate the orbit of the point (aH, bJ): index into pair_orbits(h, j) and
/// the canonical translation c with c.(eH, rep J) = (aH, bJ).
struct Located {
  int pair_idx;
  Elem trans;
};
Located locate_pair(const GroupDatum& g, SubId h, SubId j, Elem a, Elem b);

/// Certificate for the orbit decomposition of S x T.
struct ProductCert {
  struct Entry {
    int s_idx, t_idx;  // orbit indices in S and T
    PairOrbit po;
  };
  FinGSet set;  // the product as a FinGSet, entries in (s_idx, t_idx, rep) order
  std::vector<Entry> entries;
};

ProductCert product(const FinGSet& s, const FinGSet& t);

/// Basis morphism of the Burnside category between single orbits:
/// the span G/H <- G/Q -> G/J, x |-> (xH, x twist J).  `twist` is the
/// canonical representative of its double coset H twist J.
struct SpanBasis {
  SubId from_stab, to_stab;
  SubId through;
  Elem twist;

  auto operator<=>(const SpanBasis&) const = default;
};

struct SpanTerm {
  SpanBasis basis;
  long long coeff;

  bool operator==(const SpanTerm&) const = default;
};

/// Integer combination of basis spans between two fixed orbits; kept sorted
/// with nonzero coefficients.
using SpanCombo = std::vector<SpanTerm>;

SpanCombo combo_normalize(SpanCombo c);
SpanCombo combo_add(const SpanCombo& a, const SpanCombo& b);
SpanCombo combo_scale(const SpanCombo& a, long long k);

/// Morphism S -> T in the span category: a matrix of span combinations
/// indexed by (target orbit, source orbit).
struct SpanMatrix {
  FinGSet from, to;
  std::vector<std::vector<SpanCombo>> e;  // e[to_idx][from_idx]

  static SpanMatrix zero(const FinGSet& from, const FinGSet& to);
  static SpanMatrix identity(const FinGSet& s);

  SpanMatrix operator+(const SpanMatrix& o) const;
  SpanMatrix scaled(long long k) const;
  bool is_zero() const;
};

/// Identity basis span on G/H.
SpanBasis identity_span(const GroupDatum& g, SubId h);
/// Restriction-type span G/H -> G/J for J <= H (realizes res on values).
SpanBasis res_span(const GroupDatum& g, SubId h, SubId j);
/// Transfer-type span G/J -> G/H for J <= H (realizes tr on values).
SpanBasis tr_span(const GroupDatum& g, SubId j, SubId h);
/// Weyl translation span on G/H by the coset of g.
SpanBasis weyl_span(const GroupDatum& g, SubId h, Elem w);

/// Composition of basis spans a: G/H -> G/J, b: G/J -> G/U by decomposing the
/// pullback over G/J into orbits.
SpanCombo compose_basis(const GroupDatum& g, const SpanBasis& a, const SpanBasis& b);

/// b after a, for a: S -> T and b: T -> U.
SpanMatrix compose_spans(const SpanMatrix& a, const SpanMatrix& b);

/// Product span u x v : S x S' -> T x T' with respect to the given
/// decomposition certificates.
SpanMatrix span_product(const SpanMatrix& u, const SpanMatrix& v,
                        const ProductCert& from_cert, const ProductCert& to_cert);

/// Left/right legs swapped (the dual morphism).
SpanBasis transpose_span(const GroupDatum& g, const SpanBasis& b);
SpanMatrix transpose_spans(const SpanMatrix& m);

/// One basis element per orbit of left x right, with the full stabilizer as
/// the through-subgroup (the Yoneda basis of maps of free functors).
std::vector<SpanBasis> span_basis(const FinGSet& left, const FinGSet& right);

std::string to_string(const GroupDatum& g, const SpanBasis& b);

}  // namespace bredon

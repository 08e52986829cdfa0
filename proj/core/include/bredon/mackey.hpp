#pragma once

#include "bredon/gset.hpp"
#include "bredon/zlinalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace bredon {

struct MackeyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A Mackey functor for C2 or the Klein four group: one finitely generated
/// abelian group per subgroup level, restriction/transfer on covering pairs,
/// and Weyl generator actions per level.  Longer restrictions and transfers
/// are derived by composition.
struct MackeyFunctor {
  const GroupDatum* g = nullptr;
  std::vector<FgAbelianGroup> level;        // by SubId
  std::vector<GroupHom> res_c, tr_c;        // by covering-pair index
  std::vector<std::vector<GroupHom>> weyl;  // [SubId][weyl generator]

  static MackeyFunctor zero(const GroupDatum& g);

  const FgAbelianGroup& at(SubId h) const { return level[h]; }
  int cover_index(SubId upper, SubId lower) const;

  /// res from `from` down to `to` (composite when not a covering pair).
  GroupHom res(SubId from, SubId to) const;
  /// tr from `from` up to `to`.
  GroupHom tr(SubId from, SubId to) const;
  /// Action of the coset of w on the level h.
  GroupHom weyl_action(SubId h, Elem w) const;
};

/// Levelwise maps; validity against a pair of functors is a separate check.
struct MackeyMorphism {
  std::vector<GroupHom> comp;  // by SubId
};

MackeyMorphism zero_morphism(const MackeyFunctor& a, const MackeyFunctor& b);
MackeyMorphism identity_morphism(const MackeyFunctor& m);
MackeyMorphism compose(const MackeyMorphism& g, const MackeyMorphism& f);
MackeyMorphism add(const MackeyMorphism& a, const MackeyMorphism& b);
MackeyMorphism negate(const MackeyMorphism& a);
bool morphism_is_zero(const MackeyMorphism& f);

/// True when f commutes with every res, tr and Weyl generator of (a, b).
bool is_morphism(const MackeyFunctor& a, const MackeyFunctor& b, const MackeyMorphism& f);

struct AxiomReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks Weyl equivariance of res/tr, transitivity of derived composites,
/// Weyl group relations, and the double coset identities.
AxiomReport validate_axioms(const MackeyFunctor& m);

MackeyFunctor direct_sum(const MackeyFunctor& a, const MackeyFunctor& b);
MackeyFunctor direct_sum(const std::vector<MackeyFunctor>& parts, const GroupDatum& g);

/// A functor built levelwise from subquotients of a parent functor, with the
/// subquotient data kept for inducing maps.
struct SubquotientFunctor {
  MackeyFunctor m;
  std::vector<Subquotient> sq;  // by SubId, inside parent levels
};

SubquotientFunctor subquotient_functor(const MackeyFunctor& parent,
                                       std::vector<Subquotient> sqs);

/// Induce a morphism between subquotient functors from a parent-level one.
MackeyMorphism induced_morphism(const MackeyMorphism& f, const SubquotientFunctor& src,
                                const SubquotientFunctor& tgt);

struct KernelResult {
  MackeyFunctor functor;
  MackeyMorphism inclusion;  // functor -> source
  SubquotientFunctor data;
};
struct CokernelResult {
  MackeyFunctor functor;
  MackeyMorphism projection;  // target -> functor
  SubquotientFunctor data;
};

KernelResult kernel(const MackeyFunctor& src, const MackeyFunctor& tgt,
                    const MackeyMorphism& f);
CokernelResult cokernel(const MackeyFunctor& src, const MackeyFunctor& tgt,
                        const MackeyMorphism& f);

/// Value of m on a finite G-set: direct sum of level groups over orbits.
struct SetValue {
  FgAbelianGroup group;
  std::vector<std::size_t> offset;  // per orbit, into the ambient coordinates
};
SetValue eval_set(const MackeyFunctor& m, const FinGSet& x);

/// Matrix of the span morphism on values: each basis span
/// (G/H <- G/Q -(w)-> G/J) acts by tr . weyl(w) . res blockwise.
IntMatrix eval_span_matrix(const MackeyFunctor& m, const SpanMatrix& sp);
GroupHom eval_span_hom(const MackeyFunctor& m, const SpanMatrix& sp);

/// The box product A_S (box) M via the orbit formula, with structure maps
/// evaluated through the span calculus in the level variable.
MackeyFunctor realize_box_free(const FinGSet& s, const MackeyFunctor& m);

/// Hom(A_S, M) via the same orbit formula assembled through transposed
/// spans (stable orbits are self-dual).
MackeyFunctor realize_hom_free(const FinGSet& s, const MackeyFunctor& m);

/// The free Mackey functor on S, i.e. A_S = A boxed with itself over S.
MackeyFunctor free_on(const FinGSet& s);

/// Morphism realize_box_free(S, M) -> realize_box_free(T, M) induced by a
/// span matrix S -> T.
MackeyMorphism realize_span_morphism(const SpanMatrix& u, const MackeyFunctor& m);

/// Inflation along the quotient with kernel H (order 2): nonzero only at the
/// top and at level H.
MackeyFunctor inflate(SubId h, const MackeyFunctor& n);

/// Restriction of a K4 functor to the order-2 subgroup H, as a C2 functor.
MackeyFunctor restrict_to(SubId h, const MackeyFunctor& m);
MackeyMorphism restrict_morphism(SubId h, const MackeyMorphism& f);

/// Induction of a C2 functor along H <= K4 (H of order 2).
MackeyFunctor induce(SubId h, const MackeyFunctor& n);

/// Induction from the trivial subgroup of a plain abelian group.
MackeyFunctor induce_from_trivial(const GroupDatum& g, const FgAbelianGroup& a);

/// Named Mackey functors: the catalog of the tables plus A, the free
/// functors, and the augmentation kernel I / cokernel J.
MackeyFunctor zoo(const GroupDatum& g, const std::string& name);
std::vector<std::string> zoo_names(const GroupDatum& g);

}  // namespace bredon

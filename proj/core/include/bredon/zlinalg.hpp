#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bredon {

// All arithmetic is exact. Intermediate entries of normal-form computations
// can exceed machine words even for small inputs, so a fixed-width type is
// not an option here.
using Int = boost::multiprecision::cpp_int;

struct ZlinalgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool operator==(const IntMatrix& o) const = default;

  bool is_zero() const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  IntMatrix scaled(const Int& c) const;

  IntMatrix col(std::size_t j) const;
  std::vector<Int> col_vec(std::size_t j) const;
  /// Columns of `o` appended on the right.
  IntMatrix hstack(const IntMatrix& o) const;
  /// Rows of `o` appended below.
  IntMatrix vstack(const IntMatrix& o) const;

  std::string to_string() const;

private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

/// d = u * a * v with u, v unimodular, d diagonal, d11 | d22 | ... and
/// nonnegative.  u_inv satisfies u * u_inv = id.
struct SmithDecomposition {
  IntMatrix u, u_inv, d, v;
};

/// Deterministic Smith normal form.  Pivot choice: smallest absolute nonzero
/// entry, ties broken by lowest row then lowest column index.
SmithDecomposition smith_normal_form(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);
Int det(const IntMatrix& a);

/// Basis (columns) of the integer kernel {x : a x = 0}.  The basis spans the
/// saturated kernel lattice.
IntMatrix kernel_basis(const IntMatrix& a);

/// Solve a x = b columnwise over the integers.
std::optional<IntMatrix> solve_columns(const IntMatrix& a, const IntMatrix& b);

/// Column-operations-only reduction; returns an echelon matrix spanning the
/// same column lattice with zero columns pruned.
IntMatrix column_echelon(IntMatrix a);

/// Isomorphism class of a finitely generated abelian group.
struct IsoInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> factors;  // invariant factors >= 2, each dividing the next

  bool operator==(const IsoInvariants&) const = default;
  bool operator<(const IsoInvariants& o) const;
  std::string to_string() const;
  bool is_trivial() const { return free_rank == 0 && factors.empty(); }
};

/// Finitely generated abelian group presented as Z^ambient modulo the column
/// lattice of a relation matrix, with a cached Smith basis giving canonical
/// coordinates (torsion coordinates first, then free ones).
class FgAbelianGroup {
public:
  FgAbelianGroup() : FgAbelianGroup(0) {}
  explicit FgAbelianGroup(std::size_t ambient);
  FgAbelianGroup(std::size_t ambient, IntMatrix relations);

  static FgAbelianGroup free_group(std::size_t rank) { return FgAbelianGroup(rank); }
  static FgAbelianGroup cyclic(long long n);

  std::size_t ambient() const { return ambient_; }
  const IntMatrix& relations() const { return relations_; }

  std::size_t free_rank() const { return free_idx_.size(); }
  const std::vector<Int>& invariant_factors() const { return factors_; }
  bool is_trivial() const { return free_idx_.empty() && factors_.empty(); }
  bool is_equal_presentation(const FgAbelianGroup& o) const;

  /// True when every column of `vecs` lies in the relation lattice.
  bool in_relation_lattice(const IntMatrix& vecs) const;

  /// Canonical coordinates of an ambient vector: torsion entries reduced mod
  /// their invariant factor, then free entries.
  std::vector<Int> canonical_coords(const std::vector<Int>& x) const;

  /// Ambient representatives of the canonical generators, one column per
  /// canonical coordinate (torsion first, then free).
  IntMatrix canonical_section() const;

  std::size_t canonical_dim() const { return torsion_idx_.size() + free_idx_.size(); }

private:
  std::size_t ambient_;
  IntMatrix relations_;
  IntMatrix u_, u_inv_;
  std::vector<Int> diag_;  // per ambient coordinate: invariant (0 = free)
  std::vector<std::size_t> torsion_idx_, free_idx_;
  std::vector<Int> factors_;
};

IsoInvariants iso_invariants(const FgAbelianGroup& g);

/// Homomorphism between presented groups, as a matrix on ambient generators.
struct GroupHom {
  FgAbelianGroup source, target;
  IntMatrix matrix;  // target.ambient() x source.ambient()

  GroupHom() = default;
  GroupHom(FgAbelianGroup src, FgAbelianGroup tgt, IntMatrix m);

  static GroupHom zero(const FgAbelianGroup& src, const FgAbelianGroup& tgt);
  static GroupHom identity(const FgAbelianGroup& g);

  /// The matrix maps the source relation lattice into the target one.
  bool well_defined() const;
  bool is_zero() const;
  bool equals(const GroupHom& o) const;

  GroupHom operator+(const GroupHom& o) const;
  GroupHom operator-() const;
  GroupHom scaled(const Int& c) const;

  /// Matrix of the map in canonical coordinates of source and target, torsion
  /// rows reduced.  Deterministic; used for serialization.
  IntMatrix canonical_matrix() const;
};

/// g after f.
GroupHom compose(const GroupHom& g, const GroupHom& f);

/// Lattice basis of {x : f(x) = 0 in target}, i.e. the full preimage of the
/// target relation lattice.  Contains the source relation lattice.
IntMatrix preimage_of_relations(const GroupHom& f);

IsoInvariants kernel_invariants(const GroupHom& f);
IsoInvariants image_invariants(const GroupHom& f);
IsoInvariants cokernel_invariants(const GroupHom& f);

/// A subquotient ker(z_out)/im(b_in) of the parent group, with coordinates:
/// `section` lifts canonical generators to parent ambient vectors and `bnd`
/// spans the boundary lattice (image of b_in plus parent relations).
struct Subquotient {
  FgAbelianGroup group;
  IntMatrix section;  // parent_ambient x group.ambient()
  IntMatrix bnd;      // parent_ambient x *
};

/// Homology-style subquotient at the middle of  B --b_in--> G --z_out--> C.
/// Throws ZlinalgError("not a subgroup") when im(b_in) is not contained in
/// ker(z_out).
Subquotient subquotient(const GroupHom& b_in, const GroupHom& z_out);

/// Trivial subquotient: the whole group G (z_out = 0, b_in = 0).
Subquotient full_subquotient(const FgAbelianGroup& g);

/// The map induced by f on subquotients.  Throws
/// ZlinalgError("does not descend") when f fails either lattice condition.
GroupHom induced_on_subquotient(const GroupHom& f, const Subquotient& src,
                                const Subquotient& tgt);

/// Express parent-ambient columns in subquotient coordinates (mod boundaries).
std::optional<IntMatrix> project_to_subquotient(const Subquotient& sq, const IntMatrix& vecs);

}  // namespace bredon

#pragma once

// Finitely generated abelian groups presented as cokernels of integer
// matrices, marked elements, and the maps between such presentations.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "ckdual/intmat.hpp"

namespace ckdual {

/// Z^free_rank (+) Z/t_1 (+) ... with t_1 | t_2 | ... and every t_i >= 2.
struct FgAbelianGroup {
  std::size_t free_rank = 0;
  IntVector torsion;

  /// Normalizes an arbitrary list of cyclic orders (0 = infinite cyclic).
  static FgAbelianGroup from_cyclic_orders(const IntVector& orders);
  /// Inverse of to_string(); throws std::invalid_argument on malformed text.
  static FgAbelianGroup parse(std::string_view text);

  bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
  /// Order of the torsion subgroup.
  Int torsion_order() const;
  /// "0", "Z", "Z^2", "Z/2", "Z (+) Z/2 (+) Z/6", ...
  std::string to_string() const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
};

bool groups_isomorphic(const FgAbelianGroup& g, const FgAbelianGroup& h);
FgAbelianGroup direct_sum(const FgAbelianGroup& g, const FgAbelianGroup& h);

/// Z^ambient / im(relations), together with the coordinate data needed to
/// read any integer vector as an element of the group.
class Cokernel {
 public:
  explicit Cokernel(IntMatrix relations);

  const FgAbelianGroup& group() const noexcept { return group_; }
  const IntMatrix& relations() const noexcept { return relations_; }
  std::size_t ambient() const noexcept { return relations_.rows(); }

  /// Canonical coordinates: one per torsion factor (reduced into [0, t)),
  /// followed by one per free generator.
  IntVector coordinates(const IntVector& x) const;
  /// A vector whose class has the given canonical coordinates.
  IntVector representative(const IntVector& coords) const;

  std::size_t generator_count() const noexcept { return moduli_.size(); }
  /// Representative of the k-th canonical generator.
  IntVector generator(std::size_t k) const;

  bool is_zero(const IntVector& x) const;
  bool same_class(const IntVector& x, const IntVector& y) const;
  /// nullopt means infinite order.
  std::optional<Int> order(const IntVector& x) const;

 private:
  IntMatrix relations_;
  SnfResult snf_;
  FgAbelianGroup group_;
  std::vector<std::size_t> slots_;  // rows of u·x that carry a coordinate
  IntVector moduli_;                // matching modulus; 0 for free slots
};

Cokernel cokernel_presentation(const IntMatrix& m);

/// A group with a distinguished element, remembering the presentation
/// (M, v) it was built from so the quotient can be formed by adjoining v.
class MarkedGroup {
 public:
  MarkedGroup(IntMatrix presentation, IntVector raw);

  const FgAbelianGroup& group() const noexcept { return cokernel_.group(); }
  const IntVector& element() const noexcept { return element_; }
  const IntMatrix& presentation() const noexcept { return cokernel_.relations(); }
  const IntVector& raw() const noexcept { return raw_; }
  const Cokernel& cokernel() const noexcept { return cokernel_; }

 private:
  Cokernel cokernel_;
  IntVector raw_;
  IntVector element_;
};

std::optional<Int> element_order(const MarkedGroup& p);
FgAbelianGroup quotient_by_element(const MarkedGroup& p);

struct PairInvariant {
  FgAbelianGroup group;
  FgAbelianGroup quotient;
  friend bool operator==(const PairInvariant&, const PairInvariant&) = default;
};

PairInvariant pair_invariant(const MarkedGroup& p);

/// Compares (G, G/<g>) componentwise. Complete for the Cuntz-Krieger unit
/// pairs handled in this library; for arbitrary marked groups it is only a
/// necessary condition for the existence of an isomorphism.
bool pairs_equivalent(const MarkedGroup& p, const MarkedGroup& q);

/// Homomorphism Z^a/im(S) -> Z^b/im(T) induced by an integer b×a matrix.
struct InducedMap {
  bool well_defined = false;
  bool injective = false;
  bool surjective = false;
  /// Column k: target coordinates of the image of the k-th source generator.
  IntMatrix on_generators;

  bool isomorphism() const noexcept { return well_defined && injective && surjective; }
};

InducedMap induced_map(const Cokernel& source, const Cokernel& target, const IntMatrix& lift);

/// Map between two saturated kernel lattices induced by an integer matrix.
struct LatticeMap {
  bool well_defined = false;
  /// Column k: coordinates of lift·source[k] in the target basis.
  IntMatrix matrix;

  bool isomorphism() const;
};

LatticeMap lattice_map(const KernelBasis& source, const KernelBasis& target, const IntMatrix& lift);

}  // namespace ckdual

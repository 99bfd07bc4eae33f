#pragma once

// K-groups and extension groups of the finite-level Toeplitz-type algebras
// attached to a seed, the maps between consecutive levels, and the six-term
// sequence linking strong and weak extension groups.

#include <cstddef>
#include <optional>
#include <string>

#include "ckdual/abelian.hpp"
#include "ckdual/intmat.hpp"
#include "ckdual/zomat.hpp"

namespace ckdual {

/// n×n matrix with entries A(i,j) - c_i (possibly negative).
IntMatrix tilde_a_cn(const StableSeed& s, std::size_t n);

/// (n+1)×n matrix [I_n - A_nᵗ ; -C_nᵗ].
IntMatrix k_theory_matrix(const StableSeed& s, std::size_t n);
/// n×(n+1) matrix [I_n - A_n | -C_n].
IntMatrix weak_ext_matrix(const StableSeed& s, std::size_t n);
/// I_n - tilde_a_cn(s, n).
IntMatrix strong_ext_matrix(const StableSeed& s, std::size_t n);

/// Checks [I_n - A_n | -C_n]·(I_{n+1} - R_{n+1}) == [I_n - Ã | 0], with R
/// the matrix whose last row is all ones and whose other rows vanish.
bool matrix_identity_holds(const StableSeed& s, std::size_t n);

struct KGroups {
  MarkedGroup k0;  // marked with the unit class
  KernelBasis k1;
};

KGroups k_groups_level(const StableSeed& s, std::size_t n);
/// Level K values; throws HypothesisNotCertified unless (DRS)+(LI) is
/// certified or assumed.
KGroups k_groups_el(const StableSeed& s, bool assume_drs_li = false);

FgAbelianGroup ext_weak_level(const StableSeed& s, std::size_t n);

struct StrongExt {
  MarkedGroup ext_s;  // marked with the class of -C_n
  KernelBasis ext_s0;
};

StrongExt ext_strong_level(const StableSeed& s, std::size_t n);

struct ExtGroups {
  MarkedGroup ext_s;
  KernelBasis ext_s0;
  FgAbelianGroup ext_w;
};

ExtGroups ext_groups_el(const StableSeed& s, bool assume_drs_li = false);

struct LevelInvariants {
  std::size_t level;
  MarkedGroup k0;
  KernelBasis k1;
  FgAbelianGroup ext_w;
  MarkedGroup ext_s;
  KernelBasis ext_s0;
};

LevelInvariants level_invariants(const StableSeed& s, std::size_t n);

// Level n -> n+1 (K-theory) and n+1 -> n (extension groups).

struct MapCheck {
  bool well_defined = false;
  /// The lifting square with the relation matrices commutes exactly, and the
  /// distinguished class goes to the distinguished class.
  bool commutes = false;
  bool isomorphism = false;
};

struct StabilizationReport {
  std::size_t level = 0;
  /// Diagonal condition A(n+1,n+1) = c_{n+1} at this step.
  bool dc = false;
  MapCheck k0_map;      // duplicate the last coordinate
  MapCheck k1_map;      // append a zero coordinate
  MapCheck strong_map;  // drop the last coordinate
  MapCheck weak_map;    // drop the last coordinate
  /// Kernel of I - Ã at level n+1 restricted to level n, in the computed
  /// kernel bases.
  LatticeMap ext_s0_restriction;

  bool all_commute() const noexcept;
  bool all_isomorphisms() const noexcept;
};

/// Throws TailNotCovered when level n+1 is not described.
StabilizationReport stabilization_check(const StableSeed& s, std::size_t n);

/// Restriction Ker(I - Ã_{n+1}) -> Ker(I - Ã_n) written in caller-chosen
/// bases. Each basis must span the whole kernel lattice; otherwise
/// std::invalid_argument.
LatticeMap ext_s0_restriction_in(const StableSeed& s, std::size_t n, const KernelBasis& upper,
                                 const KernelBasis& lower);

// 0 -> Ker(I-Ã) -j-> Ker W -s-> Z -ι̂-> Coker(I-Ã) -q-> Coker W -> 0,
// W = [I_n - A_n | -C_n].
struct SixTermReport {
  std::size_t level = 0;
  bool identity_holds = false;
  bool iota_well_defined = false;

  bool j_injective = false;
  bool exact_at_ker_w = false;     // im j == ker s
  bool exact_at_z = false;         // im s == ker ι̂
  bool exact_at_coker_s = false;   // im ι̂ == ker q
  bool q_surjective = false;

  std::size_t ext_s0_rank = 0;
  std::size_t ext_w0_rank = 0;
  std::size_t im_j_rank = 0;
  std::size_t ker_s_rank = 0;
  /// Generators of the subgroups im s and ker ι̂ of Z (0 = zero subgroup).
  Int im_s;
  Int ker_iota;
  /// Order of ι̂(1) = [-C_n]; nullopt when infinite.
  std::optional<Int> im_iota_order;
  FgAbelianGroup ker_q;
  FgAbelianGroup ext_s;
  FgAbelianGroup ext_w;

  bool exact() const noexcept;
};

SixTermReport six_term_check(const StableSeed& s, std::size_t n);

/// Class of [I_n - A_n | -C_n]·k in Coker(I_n - Ã); only the sum of k
/// matters.
IntVector iota_hat_image(const StableSeed& s, std::size_t n, const IntVector& k);

/// K_0 = Coker(I - Aᵗ) marked with the class of (1,...,1), K_1 = Ker(I - Aᵗ).
/// Throws NotIrreducible or IsPermutation.
KGroups ck_k_theory(const ZeroOneMatrix& a);

}  // namespace ckdual

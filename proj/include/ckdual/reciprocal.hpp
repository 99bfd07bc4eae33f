#pragma once

// Dual matrices realizing the strong extension groups as K-theory of a
// Cuntz-Krieger algebra, and the complete invariants used to compare
// Cuntz-Krieger algebras.

#include <cstddef>
#include <string>
#include <vector>

#include "ckdual/abelian.hpp"
#include "ckdual/intmat.hpp"
#include "ckdual/invariants.hpp"
#include "ckdual/zomat.hpp"

namespace ckdual {

/// Validates a, then returns the hat seed at K = N+1.
StableSeed hat_of_finite(const ZeroOneMatrix& a);

/// (n+2)×(n+2) matrix with rows [A_nᵗ | 1 | 0] (n of them), all ones, and
/// (c_1, ..., c_n, 1, 1).
ZeroOneMatrix hat_a_cn(const StableSeed& s, std::size_t n);

/// hat_a_cn at level K after certifying (DRS)+(LI).
ZeroOneMatrix reciprocal_dual_matrix(const StableSeed& s, bool assume_drs_li = false);
/// The dual with rows and columns K+1, K+2 exchanged.
ZeroOneMatrix dual_swap_matrix(const StableSeed& s, bool assume_drs_li = false);

/// (n+2)×(n+2) matrix with rows [A_n | C_n | 0], all ones, (0,...,0,1,0).
IntMatrix intermediate_a_cn(const StableSeed& s, std::size_t n);

/// One presentation step: group, marked class, kernel rank, plus whether it
/// agrees with the previous step.
struct PresentationStep {
  std::string name;
  PairInvariant pair;
  std::size_t kernel_rank = 0;
  bool matches_previous = true;
};

struct PresentationChain {
  std::size_t level = 0;
  /// x -> (x, 0, 0) from Coker(I - Ã) to Coker(I - A_C) is an isomorphism
  /// carrying [-C_n] to the marked class.
  bool embedding_isomorphism = false;
  std::vector<PresentationStep> steps;
  bool consistent() const noexcept;
};

PresentationChain presentation_chain(const StableSeed& s, std::size_t n);

struct DualityReport {
  ZeroOneMatrix dual;
  bool dual_valid = false;
  std::string dual_error;
  PairInvariant left_pair;  // (Ext_s, Ext_s/<[-C_K]>)
  std::size_t left_kernel_rank = 0;
  IntVector left_marked;
  PairInvariant right_pair;  // (K_0, K_0/<[1]>) of the dual
  std::size_t right_kernel_rank = 0;
  IntVector right_marked;
  bool pairs_equivalent = false;
  bool ranks_equal = false;
  bool verdict = false;
  std::vector<std::string> assumptions;
};

DualityReport verify_duality(const StableSeed& s, bool assume_drs_li = false);

/// The (N+3)×(N+3) dual of hat_of_finite(a).
ZeroOneMatrix double_hat(const ZeroOneMatrix& a);

struct DoubleHatReport {
  ZeroOneMatrix double_hat;
  bool pairs_equivalent = false;
  bool k1_ranks_equal = false;
  Int det_double_hat;  // det(I_{N+3} - double hat)
  Int det_original;    // det(I_N - A)
  bool det_identity = false;
  bool passed() const noexcept { return pairs_equivalent && k1_ranks_equal && det_identity; }
};

DoubleHatReport double_hat_check(const ZeroOneMatrix& a);

struct CkInvariant {
  FgAbelianGroup g1;  // Coker(I - Aᵗ)
  FgAbelianGroup g2;  // Coker([I - Aᵗ | 1])
  FgAbelianGroup g3;  // cokernel of the 2N×(2N+1) block matrix
  bool g3_is_sum = false;
};

CkInvariant ck_complete_invariant(const ZeroOneMatrix& a);
bool ck_isomorphic(const ZeroOneMatrix& a, const ZeroOneMatrix& b);

}  // namespace ckdual

#include "ckdual/reciprocal.hpp"

#include "ckdual/errors.hpp"

namespace ckdual {

StableSeed hat_of_finite(const ZeroOneMatrix& a) {
  validate_ck(a);
  return StableSeed::hat(a);
}

ZeroOneMatrix hat_a_cn(const StableSeed& s, std::size_t n) {
  const SeedLevel lv = expand_seed(s, n);
  ZeroOneMatrix h(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h.set(i, j, lv.a(j, i));
    h.set(i, n, 1);
  }
  for (std::size_t j = 0; j < n + 2; ++j) h.set(n, j, 1);
  for (std::size_t j = 0; j < n; ++j) h.set(n + 1, j, lv.c[j]);
  h.set(n + 1, n, 1);
  h.set(n + 1, n + 1, 1);
  return h;
}

ZeroOneMatrix reciprocal_dual_matrix(const StableSeed& s, bool assume_drs_li) {
  require_drs_li(s, assume_drs_li);
  return hat_a_cn(s, s.k());
}

ZeroOneMatrix dual_swap_matrix(const StableSeed& s, bool assume_drs_li) {
  return reciprocal_dual_matrix(s, assume_drs_li).conjugate_swap(s.k(), s.k() + 1);
}

IntMatrix intermediate_a_cn(const StableSeed& s, std::size_t n) {
  const SeedLevel lv = expand_seed(s, n);
  IntMatrix m(n + 2, n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = lv.a(i, j);
    m(i, n) = lv.c[i];
  }
  for (std::size_t j = 0; j < n + 2; ++j) m(n, j) = 1;
  m(n + 1, n) = 1;
  return m;
}

bool PresentationChain::consistent() const noexcept {
  if (!embedding_isomorphism) return false;
  for (const auto& st : steps)
    if (!st.matches_previous) return false;
  return true;
}

PresentationChain presentation_chain(const StableSeed& s, std::size_t n) {
  PresentationChain out;
  out.level = n;

  const StrongExt st = ext_strong_level(s, n);
  const IntVector minus_c = st.ext_s.raw();

  const IntMatrix i_ac = IntMatrix::identity(n + 2) - intermediate_a_cn(s, n);
  IntVector lifted(n + 2);
  for (std::size_t i = 0; i < n; ++i) lifted[i] = minus_c[i];
  const MarkedGroup mid(i_ac, lifted);

  IntMatrix embed(n + 2, n);
  for (std::size_t i = 0; i < n; ++i) embed(i, i) = 1;
  const InducedMap emb = induced_map(st.ext_s.cokernel(), mid.cokernel(), embed);
  out.embedding_isomorphism = emb.isomorphism();

  const ZeroOneMatrix hat = hat_a_cn(s, n);
  const IntMatrix i_hat_t = IntMatrix::identity(n + 2) - hat.to_int().transpose();
  const MarkedGroup dual(i_hat_t, ones(n + 2));

  auto step = [&](std::string name, const MarkedGroup& g, std::size_t rank) {
    PresentationStep p{std::move(name), pair_invariant(g), rank, true};
    if (!out.steps.empty())
      p.matches_previous = p.pair == out.steps.back().pair && rank == out.steps.back().kernel_rank;
    out.steps.push_back(std::move(p));
  };
  step("strong extension presentation", st.ext_s, st.ext_s0.rank());
  step("intermediate matrix", mid, kernel_basis(i_ac).rank());
  step("dual matrix", dual, kernel_basis(i_hat_t).rank());
  return out;
}

DualityReport verify_duality(const StableSeed& s, bool assume_drs_li) {
  const Certification cert = require_drs_li(s, assume_drs_li);
  DualityReport rep;
  rep.assumptions = cert.assumptions;
  rep.dual = hat_a_cn(s, s.k());

  const ExtGroups left = ext_groups_el(s, assume_drs_li);
  rep.left_pair = pair_invariant(left.ext_s);
  rep.left_kernel_rank = left.ext_s0.rank();
  rep.left_marked = left.ext_s.element();

  try {
    const KGroups right = ck_k_theory(rep.dual);
    rep.dual_valid = true;
    rep.right_pair = pair_invariant(right.k0);
    rep.right_kernel_rank = right.k1.rank();
    rep.right_marked = right.k0.element();
    rep.pairs_equivalent = pairs_equivalent(left.ext_s, right.k0);
    rep.ranks_equal = rep.left_kernel_rank == rep.right_kernel_rank;
  } catch (const Error& e) {
    rep.dual_error = e.what();
  }
  rep.verdict = rep.dual_valid && rep.pairs_equivalent && rep.ranks_equal;
  return rep;
}

ZeroOneMatrix double_hat(const ZeroOneMatrix& a) { return reciprocal_dual_matrix(hat_of_finite(a)); }

DoubleHatReport double_hat_check(const ZeroOneMatrix& a) {
  DoubleHatReport rep;
  rep.double_hat = double_hat(a);
  const KGroups orig = ck_k_theory(a);
  const KGroups dh = ck_k_theory(rep.double_hat);
  rep.pairs_equivalent = pairs_equivalent(orig.k0, dh.k0);
  rep.k1_ranks_equal = orig.k1.rank() == dh.k1.rank();
  const std::size_t n = a.size();
  rep.det_double_hat = determinant(IntMatrix::identity(n + 3) - rep.double_hat.to_int());
  rep.det_original = determinant(IntMatrix::identity(n) - a.to_int());
  rep.det_identity = rep.det_double_hat == -rep.det_original;
  return rep;
}

CkInvariant ck_complete_invariant(const ZeroOneMatrix& a) {
  validate_ck(a);
  const std::size_t n = a.size();
  const IntMatrix base = IntMatrix::identity(n) - a.to_int().transpose();
  const IntMatrix one_col = IntMatrix::column_vector(ones(n));

  CkInvariant inv;
  inv.g1 = Cokernel(base).group();
  inv.g2 = Cokernel(base.hconcat(one_col)).group();

  IntMatrix block(2 * n, 2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      block(i, j) = base(i, j);
      block(n + i, n + j) = base(i, j);
    }
    block(n + i, 2 * n) = 1;
  }
  inv.g3 = Cokernel(block).group();
  inv.g3_is_sum = groups_isomorphic(inv.g3, direct_sum(inv.g1, inv.g2));
  return inv;
}

bool ck_isomorphic(const ZeroOneMatrix& a, const ZeroOneMatrix& b) {
  const CkInvariant x = ck_complete_invariant(a);
  const CkInvariant y = ck_complete_invariant(b);
  return groups_isomorphic(x.g1, y.g1) && groups_isomorphic(x.g2, y.g2);
}

}  // namespace ckdual

#include "ckdual/invariants.hpp"

#include <numeric>
#include <stdexcept>

#include "ckdual/errors.hpp"

namespace ckdual {

namespace {

IntVector c_vector(const SeedLevel& lv) {
  IntVector c(lv.c.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = lv.c[i];
  return c;
}

// Drop the last coordinate: n×(n+1).
IntMatrix drop_last(std::size_t n) { return IntMatrix::identity(n + 1).block(0, 0, n, n + 1); }

// Append a zero coordinate: (n+1)×n.
IntMatrix append_zero(std::size_t n) { return IntMatrix::identity(n + 1).block(0, 0, n + 1, n); }

// Duplicate the last coordinate: (n+2)×(n+1).
IntMatrix duplicate_last(std::size_t n) {
  IntMatrix m = append_zero(n + 1);
  m(n + 1, n) = 1;
  return m;
}

// Merge the last two coordinates: (n+1)×(n+2).
IntMatrix merge_last_two(std::size_t n) {
  IntMatrix m = drop_last(n + 1);
  m(n, n + 1) = 1;
  return m;
}

MapCheck cokernel_map_check(const Cokernel& source, const Cokernel& target, const IntMatrix& lift,
                            bool square) {
  const InducedMap im = induced_map(source, target, lift);
  return MapCheck{im.well_defined, square, im.isomorphism()};
}

}  // namespace

IntMatrix tilde_a_cn(const StableSeed& s, std::size_t n) {
  const SeedLevel lv = expand_seed(s, n);
  IntMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = lv.a(i, j) - lv.c[i];
  return t;
}

IntMatrix k_theory_matrix(const StableSeed& s, std::size_t n) {
  const SeedLevel lv = expand_seed(s, n);
  const IntMatrix top = IntMatrix::identity(n) - lv.a.to_int().transpose();
  return top.vconcat(-IntMatrix::column_vector(c_vector(lv)).transpose());
}

IntMatrix weak_ext_matrix(const StableSeed& s, std::size_t n) {
  const SeedLevel lv = expand_seed(s, n);
  return (IntMatrix::identity(n) - lv.a.to_int()).hconcat(-IntMatrix::column_vector(c_vector(lv)));
}

IntMatrix strong_ext_matrix(const StableSeed& s, std::size_t n) {
  return IntMatrix::identity(n) - tilde_a_cn(s, n);
}

bool matrix_identity_holds(const StableSeed& s, std::size_t n) {
  IntMatrix r(n + 1, n + 1);
  for (std::size_t j = 0; j <= n; ++j) r(n, j) = 1;
  const IntMatrix lhs = weak_ext_matrix(s, n) * (IntMatrix::identity(n + 1) - r);
  const IntMatrix rhs = strong_ext_matrix(s, n).hconcat(IntMatrix(n, 1));
  return lhs == rhs;
}

KGroups k_groups_level(const StableSeed& s, std::size_t n) {
  const IntMatrix m = k_theory_matrix(s, n);
  return KGroups{MarkedGroup(m, ones(n + 1)), kernel_basis(m)};
}

KGroups k_groups_el(const StableSeed& s, bool assume_drs_li) {
  require_drs_li(s, assume_drs_li);
  return k_groups_level(s, s.k());
}

FgAbelianGroup ext_weak_level(const StableSeed& s, std::size_t n) {
  return Cokernel(weak_ext_matrix(s, n)).group();
}

StrongExt ext_strong_level(const StableSeed& s, std::size_t n) {
  const IntMatrix t = strong_ext_matrix(s, n);
  const SeedLevel lv = expand_seed(s, n);
  return StrongExt{MarkedGroup(t, -c_vector(lv)), kernel_basis(t)};
}

ExtGroups ext_groups_el(const StableSeed& s, bool assume_drs_li) {
  require_drs_li(s, assume_drs_li);
  StrongExt st = ext_strong_level(s, s.k());
  return ExtGroups{std::move(st.ext_s), std::move(st.ext_s0), ext_weak_level(s, s.k())};
}

LevelInvariants level_invariants(const StableSeed& s, std::size_t n) {
  KGroups k = k_groups_level(s, n);
  StrongExt st = ext_strong_level(s, n);
  return LevelInvariants{n,
                         std::move(k.k0),
                         std::move(k.k1),
                         ext_weak_level(s, n),
                         std::move(st.ext_s),
                         std::move(st.ext_s0)};
}

bool StabilizationReport::all_commute() const noexcept {
  return k0_map.commutes && k1_map.commutes && strong_map.commutes && weak_map.commutes;
}

bool StabilizationReport::all_isomorphisms() const noexcept {
  return k0_map.isomorphism && k1_map.isomorphism && strong_map.isomorphism &&
         weak_map.isomorphism;
}

StabilizationReport stabilization_check(const StableSeed& s, std::size_t n) {
  if (!s.covers(n + 1)) throw TailNotCovered(n + 1);
  StabilizationReport rep;
  rep.level = n;
  const SeedLevel upper = expand_seed(s, n + 1);
  rep.dc = upper.a(n, n) == upper.c[n];

  // K-theory, n -> n+1. Both maps come from one chain map, so one square
  // serves for the cokernel and the kernel.
  const IntMatrix mk_lo = k_theory_matrix(s, n);
  const IntMatrix mk_hi = k_theory_matrix(s, n + 1);
  const IntMatrix phi = duplicate_last(n);
  const IntMatrix phi1 = append_zero(n);
  const bool k_square = mk_hi * phi1 == phi * mk_lo;
  {
    const Cokernel lo(mk_lo), hi(mk_hi);
    const bool unit = hi.same_class(phi * ones(n + 1), ones(n + 2));
    rep.k0_map = cokernel_map_check(lo, hi, phi, k_square && unit);
  }
  {
    const LatticeMap lm = lattice_map(kernel_basis(mk_lo), kernel_basis(mk_hi), phi1);
    rep.k1_map = MapCheck{lm.well_defined, k_square, lm.isomorphism()};
  }

  // Extension groups, n+1 -> n.
  const IntMatrix t_lo = strong_ext_matrix(s, n);
  const IntMatrix t_hi = strong_ext_matrix(s, n + 1);
  const IntMatrix w_lo = weak_ext_matrix(s, n);
  const IntMatrix w_hi = weak_ext_matrix(s, n + 1);
  const IntMatrix p = drop_last(n);
  const Cokernel cs_lo(t_lo), cs_hi(t_hi), cw_lo(w_lo), cw_hi(w_hi);
  {
    const bool square = p * t_hi == t_lo * p;
    const bool mark = cs_lo.same_class(p * (-c_vector(upper)), -c_vector(expand_seed(s, n)));
    rep.strong_map = cokernel_map_check(cs_hi, cs_lo, p, square && mark);
  }
  {
    // Weak restriction after the quotient map equals the quotient map after
    // the strong restriction, on canonical coordinates.
    const InducedMap iw = induced_map(cw_hi, cw_lo, p);
    const InducedMap q_hi = induced_map(cs_hi, cw_hi, IntMatrix::identity(n + 1));
    const InducedMap q_lo = induced_map(cs_lo, cw_lo, IntMatrix::identity(n));
    bool square = p * w_hi == w_lo * merge_last_two(n);
    for (std::size_t k = 0; k < cs_hi.generator_count() && square; ++k) {
      const IntVector g = cs_hi.generator(k);
      square = cw_lo.same_class(p * cw_hi.representative(cw_hi.coordinates(g)),
                                cs_lo.representative(cs_lo.coordinates(p * g)));
    }
    rep.weak_map = MapCheck{iw.well_defined, square && q_hi.well_defined && q_lo.well_defined,
                            iw.isomorphism()};
  }

  rep.ext_s0_restriction = lattice_map(kernel_basis(t_hi), kernel_basis(t_lo), p);
  return rep;
}

LatticeMap ext_s0_restriction_in(const StableSeed& s, std::size_t n, const KernelBasis& upper,
                                 const KernelBasis& lower) {
  const IntMatrix t_lo = strong_ext_matrix(s, n);
  const IntMatrix t_hi = strong_ext_matrix(s, n + 1);
  auto spans = [](const KernelBasis& b, const IntMatrix& t) {
    const KernelBasis ref = kernel_basis(t);
    return b.ambient == ref.ambient && b.rank() == ref.rank() &&
           (t * b.as_matrix()).is_zero() && lattice_equal(b.as_matrix(), ref.as_matrix());
  };
  if (!spans(upper, t_hi) || !spans(lower, t_lo))
    throw std::invalid_argument("ext_s0_restriction_in: basis does not span the kernel lattice");
  return lattice_map(upper, lower, drop_last(n));
}

bool SixTermReport::exact() const noexcept {
  return identity_holds && iota_well_defined && j_injective && exact_at_ker_w && exact_at_z &&
         exact_at_coker_s && q_surjective;
}

IntVector iota_hat_image(const StableSeed& s, std::size_t n, const IntVector& k) {
  if (k.size() != n + 1) throw DimensionMismatch("iota_hat_image: expected n+1 coordinates");
  return Cokernel(strong_ext_matrix(s, n)).coordinates(weak_ext_matrix(s, n) * k);
}

SixTermReport six_term_check(const StableSeed& s, std::size_t n) {
  SixTermReport rep;
  rep.level = n;
  rep.identity_holds = matrix_identity_holds(s, n);

  const IntMatrix t = strong_ext_matrix(s, n);
  const IntMatrix w = weak_ext_matrix(s, n);
  const Cokernel cs(t), cw(w);
  rep.ext_s = cs.group();
  rep.ext_w = cw.group();
  const IntVector minus_c = w.column(n);

  // ι̂ must not depend on how m is split across the n+1 coordinates: compare
  // every unit vector against e_{n+1}.
  rep.iota_well_defined = true;
  for (std::size_t i = 0; i < n; ++i)
    rep.iota_well_defined = rep.iota_well_defined && cs.same_class(w.column(i), minus_c);

  const KernelBasis ks = kernel_basis(t);
  const KernelBasis kw = kernel_basis(w);
  rep.ext_s0_rank = ks.rank();
  rep.ext_w0_rank = kw.rank();

  // j(l) = (l, -Σl)
  IntMatrix j(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, i) = 1;
    j(n, i) = -1;
  }
  const IntMatrix im_j = j * ks.as_matrix();
  rep.im_j_rank = rational_rank(im_j);
  rep.j_injective = rep.im_j_rank == ks.rank() && (w * im_j).is_zero();

  // s = coordinate sum, restricted to Ker W.
  const IntMatrix kw_m = kw.as_matrix();
  const IntMatrix sum_row = IntMatrix::column_vector(ones(n + 1)).transpose();
  const IntMatrix s_on_basis = sum_row * kw_m;
  const KernelBasis ker_s_coords = kernel_basis(s_on_basis);
  const IntMatrix ker_s = kw_m * ker_s_coords.as_matrix();
  rep.ker_s_rank = ker_s_coords.rank();
  rep.exact_at_ker_w = lattice_equal(im_j, ker_s);

  Int g = 0;
  for (std::size_t k = 0; k < s_on_basis.cols(); ++k) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s_on_basis(0, k).get_mpz_t());
  rep.im_s = g;

  rep.im_iota_order = cs.order(minus_c);
  rep.ker_iota = rep.im_iota_order ? *rep.im_iota_order : Int(0);
  rep.exact_at_z = rep.im_s == rep.ker_iota;

  // ker q = im W / im T, presented in a basis of im W.
  const SnfResult snf = smith_normal_form(w);
  IntMatrix im_w_basis(n, snf.rank());
  for (std::size_t k = 0; k < snf.rank(); ++k)
    for (std::size_t i = 0; i < n; ++i) im_w_basis(i, k) = snf.u_inverse(i, k) * snf.d(k, k);
  IntMatrix t_coords(snf.rank(), n);
  bool q_well_defined = true;
  for (std::size_t k = 0; k < n; ++k) {
    const auto z = image_membership(im_w_basis, t.column(k));
    if (!z) {
      q_well_defined = false;
      break;
    }
    for (std::size_t i = 0; i < z->size(); ++i) t_coords(i, k) = (*z)[i];
  }
  if (q_well_defined) rep.ker_q = Cokernel(t_coords).group();
  rep.exact_at_coker_s =
      q_well_defined && lattice_equal(w, t.hconcat(IntMatrix::column_vector(minus_c)));

  rep.q_surjective = induced_map(cs, cw, IntMatrix::identity(n)).surjective;
  return rep;
}

KGroups ck_k_theory(const ZeroOneMatrix& a) {
  validate_ck(a);
  const std::size_t n = a.size();
  const IntMatrix m = IntMatrix::identity(n) - a.to_int().transpose();
  return KGroups{MarkedGroup(m, ones(n)), kernel_basis(m)};
}

}  // namespace ckdual

// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "ckdual/cli.hpp"
#include "ckdual/corpus.hpp"
#include "ckdual/errors.hpp"
#include "ckdual/invariants.hpp"
#include "ckdual/reciprocal.hpp"
#include "oracles.hpp"

using namespace ckdual;

namespace {

struct Tally {
  bool ok = true;
  std::ostringstream notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) notes << what;
      ok = false;
    }
  }
};

// AC4 matrices: the separation matrix plus 60 random ones, N in 2..6.
std::vector<ZeroOneMatrix> ck_suite() {
  std::vector<ZeroOneMatrix> out{separation_matrix()};
  std::mt19937 rng(20250101);
  for (int t = 0; t < 60; ++t) out.push_back(oracle::random_ck(rng, 2 + t % 5));
  return out;
}

std::vector<StableSeed> certified_seeds() {
  std::vector<StableSeed> out{StableSeed::all_ones()};
  for (const auto& a : ck_suite()) out.push_back(hat_of_finite(a));
  for (const auto& ns : explicit_drs_seeds()) out.push_back(ns.seed);
  return out;
}

std::size_t capped(const StableSeed& s, std::size_t want) {
  return s.max_level() ? std::min(*s.max_level(), want) : want;
}

void ac1(Tally& t) {
  const StableSeed s = StableSeed::all_ones();
  const ExtGroups e = ext_groups_el(s);
  const KGroups k = k_groups_el(s);
  t.require(e.ext_s.group().is_trivial(), "Ext_s nonzero");
  t.require(e.ext_s0.rank() == 0, "Ext_s0 nonzero");
  t.require(k.k0.group() == FgAbelianGroup{1, {}}, "K_0 not Z");
  t.require(k.k0.element().size() == 1 && abs(k.k0.element()[0]) == 1, "unit does not generate");
  t.require(k.k1.rank() == 0, "K_1 nonzero");
  const KGroups d = ck_k_theory(reciprocal_dual_matrix(s));
  t.require(d.k0.group().is_trivial() && d.k1.rank() == 0 && is_zero(d.k0.element()), "dual not O_2 class");
}

void ac2(Tally& t) {
  const StableSeed s = StableSeed::p_infinity();
  auto basis = [](std::size_t n) {
    KernelBasis b{n, {IntVector(n), IntVector(n)}};
    b.vectors[0][n - 2] = 1;
    b.vectors[1][n - 1] = 1;
    return b;
  };
  for (std::size_t n = 4; n <= 8; ++n) {
    const StrongExt e = ext_strong_level(s, n);
    t.require(e.ext_s.group() == FgAbelianGroup{2, {}}, "Coker not Z^2 at level " + std::to_string(n));
    t.require(e.ext_s0.rank() == 2, "kernel rank not 2 at level " + std::to_string(n));
    const LatticeMap hi = ext_s0_restriction_in(s, n, basis(n + 1), basis(n));
    const LatticeMap next = ext_s0_restriction_in(s, n + 1, basis(n + 2), basis(n + 1));
    t.require(hi.well_defined && hi.matrix == IntMatrix{{0, 0}, {1, 0}}, "restriction is not the shift");
    t.require((hi.matrix * next.matrix).is_zero(), "shift does not square to zero");
    t.require((hi.matrix * hi.matrix).is_zero(), "shift does not square to zero");
  }
}

void ac3(Tally& t) {
  const ZeroOneMatrix a = separation_matrix();
  const KGroups ka = ck_k_theory(a), kb = ck_k_theory(a.transpose());
  t.require(pair_invariant(ka.k0) == PairInvariant{FgAbelianGroup{0, {2}}, FgAbelianGroup{}}, "pair of A");
  t.require(pair_invariant(kb.k0) == PairInvariant{FgAbelianGroup{0, {2}}, FgAbelianGroup{0, {2}}}, "pair of At");
  std::ostringstream out, err;
  const std::string dir = CKDUAL_TEST_DATA;
  const int code = run({"compare", dir + "/a.json", dir + "/at.json"}, out, err);
  t.require(code == 1, "compare exit code");
  t.require(out.str().find("not isomorphic") != std::string::npos, "compare report");
}

void ac4(Tally& t) {
  for (const auto& a : ck_suite()) {
    const DoubleHatReport r = double_hat_check(a);
    t.require(r.pairs_equivalent, "pair mismatch for " + a.to_string());
    t.require(r.k1_ranks_equal, "K_1 rank mismatch for " + a.to_string());
    t.require(r.det_identity, "determinant identity fails for " + a.to_string());
  }
}

void ac5(Tally& t) {
  for (const auto& s : certified_seeds())
    t.require(verify_duality(s).verdict, "duality fails for seed with block " + s.block().to_string());
}

void ac6(Tally& t) {
  std::size_t checked = 0;
  for (const auto& s : certified_seeds()) {
    const PropertyReport p = check_seed_properties(s, default_check_depth(s));
    if (!p.dc) continue;
    for (std::size_t n = s.k(); n <= s.k() + 3 && s.covers(n + 1); ++n) {
      const StabilizationReport r = stabilization_check(s, n);
      t.require(r.all_commute(), "square fails at level " + std::to_string(n));
      t.require(r.all_isomorphisms(), "map not an isomorphism at level " + std::to_string(n));
      ++checked;
    }
  }
  t.require(checked > 0, "nothing checked");
}

void ac7(Tally& t) {
  std::vector<StableSeed> seeds = certified_seeds();
  seeds.push_back(StableSeed::p_infinity());
  seeds.push_back(block_diagonal_seed());
  for (const auto& s : seeds)
    for (std::size_t n = s.k(); n <= capped(s, s.k() + 2); ++n) {
      const SixTermReport r = six_term_check(s, n);
      t.require(r.identity_holds, "matrix identity fails at level " + std::to_string(n));
      t.require(r.exact(), "not exact at level " + std::to_string(n) + " for " + s.block().to_string());
    }
}

void ac8(Tally& t) {
  for (const auto& a : ck_suite()) {
    const KGroups ck = ck_k_theory(a);
    t.require(ck.k0.group().free_rank == ck.k1.rank(), "CK rank difference nonzero");
    const KGroups el = k_groups_el(hat_of_finite(a));
    t.require(el.k0.group().free_rank == el.k1.rank() + 1, "hat rank difference not 1");
  }
}

void ac9(Tally& t) {
  std::mt19937 rng(9090);
  std::uniform_int_distribution<std::size_t> dim(1, 10);
  std::size_t oracle_checked = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t r = dim(rng), c = dim(rng);
    const IntMatrix m = oracle::random_matrix(rng, r, c, -20, 20);
    const SnfResult s = smith_normal_form(m);
    t.require(s.u * m * s.v == s.d, "U·M·V != D");
    t.require(abs(determinant(s.u)) == 1 && abs(determinant(s.v)) == 1, "transform not unimodular");
    const IntVector f = s.invariant_factors();
    for (std::size_t k = 0; k + 1 < f.size(); ++k) t.require(f[k + 1] % f[k] == 0, "divisibility chain");
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < c; ++b)
        if (a != b) t.require(s.d(a, b) == 0, "off-diagonal entry");
    if (r <= 6 && c <= 6) {
      t.require(f == oracle::minors_invariant_factors(m), "minors oracle disagrees");
      ++oracle_checked;
    }
    const KernelBasis kb = kernel_basis(m);
    t.require(kb.rank() == c - f.size(), "kernel rank");
    const IntMatrix km = kb.as_matrix();
    for (const auto& v : oracle::rational_nullspace(m)) {
      Int g = 0;
      for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      IntVector prim = v;
      for (Int& x : prim) x /= g;
      t.require(image_membership(km, prim).has_value(), "kernel basis not saturated");
    }
  }
  t.require(oracle_checked > 50, "too few oracle comparisons");
}

void ac10(Tally& t) {
  for (const auto& s : certified_seeds()) {
    const PairInvariant a = pair_invariant(ck_k_theory(reciprocal_dual_matrix(s)).k0);
    const PairInvariant b = pair_invariant(ck_k_theory(dual_swap_matrix(s)).k0);
    t.require(a == b, "swap changes the invariant pair");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
      {"AC1 O_infinity groups and O_2 dual", ac1},
      {"AC2 P_infinity levels 4..8 and nilpotent kernel shift", ac2},
      {"AC3 separation example, compare says not isomorphic", ac3},
      {"AC4 double-dual suite (61 matrices)", ac4},
      {"AC5 duality verdict on every certified seed", ac5},
      {"AC6 stabilization maps commute and are isomorphisms", ac6},
      {"AC7 six-term exactness and matrix identity", ac7},
      {"AC8 rank identities", ac8},
      {"AC9 normal-form engine property suite (500 matrices)", ac9},
      {"AC10 swapped dual has the same invariant pair", ac10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(t);
    } catch (const std::exception& e) {
      t.ok = false;
      t.notes << "threw: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (t.ok ? "PASS " : "FAIL ") << name << "  [" << secs << " s]";
    if (!t.ok) std::cout << "  " << t.notes.str();
    std::cout << "\n";
    failed += t.ok ? 0 : 1;
  }
  return failed;
}

#include <doctest.h>

#include "ckdual/corpus.hpp"
#include "ckdual/errors.hpp"
#include "ckdual/reciprocal.hpp"
#include "oracles.hpp"

using namespace ckdual;

TEST_CASE("hat_of_finite") {
  const StableSeed s = hat_of_finite(ZeroOneMatrix{{1, 1}, {1, 1}});
  CHECK(s.k() == 3);
  CHECK(s.block() == ZeroOneMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(s.c() == std::vector<int>{0, 0, 1});
  const StableSeed t = hat_of_finite(separation_matrix());
  CHECK(t.k() == 4);
  CHECK(t.c() == std::vector<int>{0, 0, 0, 1});
  CHECK_THROWS_AS(hat_of_finite(ZeroOneMatrix{{0, 1}, {1, 0}}), IsPermutation);
}

TEST_CASE("dual matrices of the all-ones seed") {
  const StableSeed s = StableSeed::all_ones();
  CHECK(reciprocal_dual_matrix(s) == ZeroOneMatrix{{1, 1, 0}, {1, 1, 1}, {1, 1, 1}});
  CHECK(dual_swap_matrix(s) == ZeroOneMatrix{{1, 0, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(intermediate_a_cn(s, 1) == IntMatrix{{1, 1, 0}, {1, 1, 1}, {0, 1, 0}});
  CHECK_THROWS_AS(reciprocal_dual_matrix(StableSeed::p_infinity()), HypothesisNotCertified);
}

TEST_CASE("double-hat matrix has the displayed block shape") {
  const ZeroOneMatrix a = separation_matrix();
  const ZeroOneMatrix dh = double_hat(a);
  const std::size_t n = a.size();
  REQUIRE(dh.size() == n + 3);
  for (std::size_t i = 0; i < n + 3; ++i)
    for (std::size_t j = 0; j < n + 3; ++j) {
      int expected;
      if (i < n && j < n) expected = a(i, j);
      else if (i < n) expected = j < n + 2 ? 1 : 0;
      else if (i == n) expected = j < n + 2 ? 1 : 0;
      else if (i == n + 1) expected = 1;
      else expected = j >= n ? 1 : 0;
      CHECK(dh(i, j) == expected);
    }
}

TEST_CASE("dual row K+1 is all ones and the dual is a valid CK matrix") {
  std::vector<StableSeed> seeds{StableSeed::all_ones(), StableSeed::hat(separation_matrix())};
  for (const auto& ns : explicit_drs_seeds()) seeds.push_back(ns.seed);
  for (const auto& s : seeds) {
    const ZeroOneMatrix d = reciprocal_dual_matrix(s);
    for (std::size_t j = 0; j < d.size(); ++j) CHECK(d(s.k(), j) == 1);
    CHECK_NOTHROW(validate_ck(d));
    CHECK(pair_invariant(ck_k_theory(d).k0) == pair_invariant(ck_k_theory(dual_swap_matrix(s)).k0));
  }
}

TEST_CASE("presentation chain keeps group, class and kernel rank") {
  std::vector<StableSeed> seeds{StableSeed::all_ones(), StableSeed::p_infinity(),
                                StableSeed::hat(separation_matrix()), block_diagonal_seed()};
  for (const auto& ns : explicit_drs_seeds()) seeds.push_back(ns.seed);
  for (const auto& s : seeds) {
    const std::size_t top = s.max_level().value_or(s.k() + 3);
    for (std::size_t n = s.k(); n <= top; ++n) {
      const PresentationChain c = presentation_chain(s, n);
      CAPTURE(n);
      CHECK(c.embedding_isomorphism);
      REQUIRE(c.steps.size() == 3);
      CHECK(c.steps[1].matches_previous);
      CHECK(c.steps[2].matches_previous);
    }
  }
  const PresentationChain p = presentation_chain(StableSeed::p_infinity(), 4);
  CHECK(p.steps[1].pair.group.to_string() == "Z^2");
}

TEST_CASE("duality verdicts") {
  const DualityReport o = verify_duality(StableSeed::all_ones());
  CHECK(o.verdict);
  CHECK(o.left_pair.group.is_trivial());
  CHECK(o.right_pair.group.is_trivial());
  CHECK(o.right_kernel_rank == 0);

  const DualityReport h = verify_duality(hat_of_finite(separation_matrix()));
  CHECK(h.verdict);
  CHECK(h.left_pair.group.to_string() == "Z/2");
  CHECK(h.left_pair.quotient.is_trivial());

  std::mt19937 rng(55);
  for (int t = 0; t < 20; ++t) CHECK(verify_duality(hat_of_finite(oracle::random_ck(rng, 2 + t % 5))).verdict);

  const StableSeed plain(2, ZeroOneMatrix{{0, 1}, {1, 1}}, {0, 1}, ExplicitTail{{{1, 0, 1}}, {1}, false});
  CHECK_THROWS_AS(verify_duality(plain), HypothesisNotCertified);
  const DualityReport assumed = verify_duality(plain, true);
  CHECK(assumed.verdict);
  CHECK(assumed.assumptions.size() == 1);
}

TEST_CASE("double-hat checks") {
  const DoubleHatReport a = double_hat_check(separation_matrix());
  CHECK(a.passed());
  CHECK(a.det_original == -2);
  CHECK(a.det_double_hat == 2);
  const DoubleHatReport o2 = double_hat_check(ZeroOneMatrix{{1, 1}, {1, 1}});
  CHECK(o2.passed());
  CHECK(ck_k_theory(o2.double_hat).k0.group().is_trivial());
  // Oracle for the determinant identity.
  std::mt19937 rng(12);
  for (int t = 0; t < 10; ++t) {
    const ZeroOneMatrix m = oracle::random_ck(rng, 2 + t % 3);
    const DoubleHatReport r = double_hat_check(m);
    CHECK(oracle::laplace_det(IntMatrix::identity(m.size() + 3) - r.double_hat.to_int()) ==
          -oracle::laplace_det(IntMatrix::identity(m.size()) - m.to_int()));
  }
}

TEST_CASE("complete invariants") {
  const ZeroOneMatrix a = separation_matrix();
  const CkInvariant x = ck_complete_invariant(a);
  CHECK(x.g1.to_string() == "Z/2");
  CHECK(x.g2.to_string() == "0");
  CHECK(x.g3.to_string() == "Z/2");
  CHECK(x.g3_is_sum);
  const CkInvariant y = ck_complete_invariant(a.transpose());
  CHECK(y.g1.to_string() == "Z/2");
  CHECK(y.g2.to_string() == "Z/2");
  CHECK(y.g3.to_string() == "Z/2 (+) Z/2");
  const CkInvariant o2 = ck_complete_invariant(ZeroOneMatrix{{1, 1}, {1, 1}});
  CHECK(o2.g1.is_trivial());
  CHECK(o2.g2.is_trivial());
  CHECK(o2.g3.is_trivial());
}

TEST_CASE("ck_isomorphic") {
  const ZeroOneMatrix a = separation_matrix();
  CHECK(ck_isomorphic(a, a));
  CHECK_FALSE(ck_isomorphic(a, a.transpose()));
  CHECK(ck_isomorphic(a, double_hat(a)));
  CHECK_THROWS_AS(ck_isomorphic(a, ZeroOneMatrix{{0, 1}, {1, 0}}), IsPermutation);

  std::mt19937 rng(77);
  std::vector<ZeroOneMatrix> ms;
  for (int t = 0; t < 12; ++t) ms.push_back(oracle::random_ck(rng, 2 + t % 3));
  for (const auto& x : ms)
    for (const auto& y : ms) {
      CHECK(ck_isomorphic(x, y) == ck_isomorphic(y, x));
      for (const auto& z : ms)
        if (ck_isomorphic(x, y) && ck_isomorphic(y, z)) CHECK(ck_isomorphic(x, z));
    }
}

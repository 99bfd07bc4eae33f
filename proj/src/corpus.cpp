#include "ckdual/corpus.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ckdual/errors.hpp"
#include "ckdual/invariants.hpp"
#include "ckdual/reciprocal.hpp"

namespace ckdual {

ZeroOneMatrix separation_matrix() { return ZeroOneMatrix{{1, 1, 1}, {1, 1, 1}, {1, 0, 0}}; }

StableSeed block_diagonal_seed() {
  ExplicitTail tail{{{0, 0, 1, 1}, {0, 0, 1, 1, 1}}, {1, 1}, false};
  return StableSeed(3, ZeroOneMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {0, 0, 1}, tail);
}

std::vector<NamedSeed> explicit_drs_seeds() {
  auto seed = [](std::string name, ZeroOneMatrix a, std::vector<int> c,
                 std::vector<std::vector<int>> rows, std::vector<int> tc) {
    const std::size_t k = a.size();
    return NamedSeed{std::move(name),
                     StableSeed(k, std::move(a), std::move(c), ExplicitTail{std::move(rows), std::move(tc), true})};
  };
  std::vector<NamedSeed> out;
  out.push_back(seed("loop-then-sinks", {{1}}, {1}, {{1, 0}, {0, 1, 0}}, {0, 0}));
  out.push_back(seed("two-cycle-growing", {{0, 1}, {1, 1}}, {0, 1}, {{1, 0, 1}, {0, 0, 1, 1}}, {1, 1}));
  out.push_back(seed("golden-mean-chain", {{1, 1}, {1, 0}}, {1, 0},
                     {{0, 1, 0}, {1, 0, 0, 0}, {0, 0, 1, 0, 0}}, {0, 0, 0}));
  out.push_back(seed("three-cycle-chord", {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}, {0, 0, 1},
                     {{1, 0, 0, 1}, {0, 1, 1, 0, 0}}, {1, 0}));
  out.push_back(seed("full-three", {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, {1, 1, 1}, {{0, 0, 1, 1}}, {1}));
  out.push_back(seed("full-two-sinks", {{1, 1}, {1, 1}}, {1, 1}, {{1, 0, 0}, {0, 0, 1, 0}}, {0, 0}));
  out.push_back(seed("four-cycle-chord", {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}},
                     {1, 0, 0, 0}, {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1, 1}}, {0, 1}));
  out.push_back(seed("mixed-three", {{1, 0, 1}, {1, 0, 0}, {0, 1, 0}}, {0, 1, 0},
                     {{0, 0, 1, 0}, {1, 1, 1, 1, 1}}, {0, 1}));
  out.push_back(seed("single-loop-ones", {{1}}, {1}, {{1, 1}, {1, 1, 1}, {0, 0, 1, 1}}, {1, 1, 1}));
  out.push_back(seed("five-cycle", {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {1, 0, 1, 0, 0}},
                     {0, 0, 1, 0, 1}, {{0, 1, 0, 0, 0, 1}}, {1}));
  return out;
}

namespace {

using Check = std::function<bool(std::ostringstream&)>;

bool group_is(const FgAbelianGroup& g, const char* text, std::ostringstream& why) {
  if (g.to_string() == text) return true;
  why << "expected " << text << ", got " << g.to_string() << "; ";
  return false;
}

std::vector<std::pair<std::string, Check>> examples() {
  std::vector<std::pair<std::string, Check>> ex;

  ex.emplace_back("o-infinity/groups", [](std::ostringstream& why) {
    const StableSeed s = StableSeed::all_ones();
    const ExtGroups e = ext_groups_el(s);
    const KGroups k = k_groups_el(s);
    bool ok = group_is(e.ext_s.group(), "0", why) && e.ext_s0.rank() == 0;
    ok = group_is(k.k0.group(), "Z", why) && ok;
    // The unit must generate Z.
    ok = ok && k.k0.element().size() == 1 && abs(k.k0.element()[0]) == 1 && k.k1.rank() == 0;
    return ok;
  });
  ex.emplace_back("o-infinity/dual-is-o2", [](std::ostringstream& why) {
    const ZeroOneMatrix d = reciprocal_dual_matrix(StableSeed::all_ones());
    const KGroups k = ck_k_theory(d);
    return group_is(k.k0.group(), "0", why) && k.k1.rank() == 0 && is_zero(k.k0.element());
  });
  ex.emplace_back("o-infinity/duality", [](std::ostringstream&) {
    return verify_duality(StableSeed::all_ones()).verdict;
  });
  ex.emplace_back("p-infinity/not-drs", [](std::ostringstream&) {
    const StableSeed s = StableSeed::p_infinity();
    const PropertyReport r = check_seed_properties(s, default_check_depth(s));
    return r.rs && !r.dc && !r.drs && r.li_from == std::optional<std::size_t>(4) &&
           !certify_drs_li(s).certified;
  });
  ex.emplace_back("p-infinity/strong-ext-levels", [](std::ostringstream& why) {
    const StableSeed s = StableSeed::p_infinity();
    bool ok = true;
    for (std::size_t n = 4; n <= 8; ++n) {
      const StrongExt e = ext_strong_level(s, n);
      ok = group_is(e.ext_s.group(), "Z^2", why) && e.ext_s0.rank() == 2 && ok;
    }
    return ok;
  });
  ex.emplace_back("p-infinity/displayed-matrix", [](std::ostringstream&) {
    const IntMatrix expected{{1, 1, 0, 0}, {1, 1, 0, 0}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
    return strong_ext_matrix(StableSeed::p_infinity(), 4) == expected;
  });
  ex.emplace_back("p-infinity/kernel-shift", [](std::ostringstream& why) {
    const StableSeed s = StableSeed::p_infinity();
    auto basis = [](std::size_t n) {
      KernelBasis b{n, {IntVector(n), IntVector(n)}};
      b.vectors[0][n - 2] = 1;
      b.vectors[1][n - 1] = 1;
      return b;
    };
    const IntMatrix shift{{0, 0}, {1, 0}};
    bool ok = true;
    for (std::size_t n = 4; n <= 7; ++n) {
      const LatticeMap l = ext_s0_restriction_in(s, n, basis(n + 1), basis(n));
      if (!l.well_defined || !(l.matrix == shift)) {
        why << "level " << n << " map " << l.matrix << "; ";
        ok = false;
      }
      const LatticeMap l2 = ext_s0_restriction_in(s, n + 1, basis(n + 2), basis(n + 1));
      ok = ok && (l.matrix * l2.matrix).is_zero();
    }
    return ok;
  });
  ex.emplace_back("separation/invariant-pairs", [](std::ostringstream& why) {
    const ZeroOneMatrix a = separation_matrix();
    const CkInvariant x = ck_complete_invariant(a);
    const CkInvariant y = ck_complete_invariant(a.transpose());
    bool ok = group_is(x.g1, "Z/2", why) && group_is(x.g2, "0", why);
    ok = group_is(y.g1, "Z/2", why) && group_is(y.g2, "Z/2", why) && ok;
    return ok && x.g3_is_sum && y.g3_is_sum;
  });
  ex.emplace_back("separation/not-isomorphic", [](std::ostringstream&) {
    const ZeroOneMatrix a = separation_matrix();
    return !ck_isomorphic(a, a.transpose()) && ck_isomorphic(a, a);
  });
  ex.emplace_back("double-dual/separation-matrix", [](std::ostringstream& why) {
    const DoubleHatReport r = double_hat_check(separation_matrix());
    const ZeroOneMatrix expected{{1, 1, 1, 1, 1, 0}, {1, 1, 1, 1, 1, 0}, {1, 0, 0, 1, 1, 0},
                                 {1, 1, 1, 1, 1, 0}, {1, 1, 1, 1, 1, 1}, {0, 0, 0, 1, 1, 1}};
    if (!(r.double_hat == expected)) why << "double hat " << r.double_hat.to_string() << "; ";
    return r.passed() && r.double_hat == expected;
  });
  ex.emplace_back("double-dual/full-two", [](std::ostringstream&) {
    return double_hat_check(ZeroOneMatrix{{1, 1}, {1, 1}}).passed();
  });
  ex.emplace_back("hat/separation-duality", [](std::ostringstream& why) {
    const DualityReport r = verify_duality(hat_of_finite(separation_matrix()));
    return r.verdict && group_is(r.left_pair.group, "Z/2", why) &&
           group_is(r.left_pair.quotient, "0", why);
  });
  ex.emplace_back("hat/rank-identity", [](std::ostringstream&) {
    const KGroups k = k_groups_el(hat_of_finite(separation_matrix()));
    return k.k0.group().free_rank == k.k1.rank() + 1;
  });
  ex.emplace_back("block-diagonal/drs-not-li", [](std::ostringstream&) {
    const StableSeed s = block_diagonal_seed();
    const PropertyReport r = check_seed_properties(s, default_check_depth(s));
    return r.drs && !r.li_all_checked;
  });
  ex.emplace_back("swap-dual/all-ones", [](std::ostringstream&) {
    const ZeroOneMatrix expected{{1, 0, 1}, {1, 1, 1}, {1, 1, 1}};
    return dual_swap_matrix(StableSeed::all_ones()) == expected;
  });
  return ex;
}

}  // namespace

std::vector<ExampleResult> run_example_corpus() {
  std::vector<ExampleResult> out;
  for (auto& [name, check] : examples()) {
    ExampleResult r{name, false, {}};
    std::ostringstream why;
    try {
      r.passed = check(why);
    } catch (const std::exception& e) {
      why << "threw: " << e.what();
    }
    r.detail = why.str();
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(),
            [](const ExampleResult& a, const ExampleResult& b) { return a.name < b.name; });
  return out;
}

}  // namespace ckdual

#pragma once

// Fixed example matrices and seeds, and the regression run over them.

#include <string>
#include <vector>

#include "ckdual/zomat.hpp"

namespace ckdual {

/// [[1,1,1],[1,1,1],[1,0,0]]; its transpose has the same K_0 but a different
/// unit class.
ZeroOneMatrix separation_matrix();

/// Two identity rows followed by an all-ones corner: (DRS) holds, (LI) fails.
StableSeed block_diagonal_seed();

struct NamedSeed {
  std::string name;
  StableSeed seed;
};

/// Hand-written explicit seeds satisfying (DRS) and (LI) on every described
/// level, each flagged assumed_drs.
std::vector<NamedSeed> explicit_drs_seeds();

struct ExampleResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Sorted by name.
std::vector<ExampleResult> run_example_corpus();

}  // namespace ckdual

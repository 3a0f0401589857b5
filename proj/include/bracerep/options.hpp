#pragma once

#include <cstdint>

namespace bracerep {

/// Shared knobs for the verification-heavy entry points. All randomized
/// checks draw from the seed here, so equal options give identical runs.
struct Options {
  long element_cap = 5000;  ///< exhaustive pair loops allowed up to this order
  long iso_cap = 2000;      ///< brute-force isomorphism search cap
  double tol_entry = 1e-9;  ///< entrywise matrix comparisons
  double tol_char = 1e-6;   ///< character inner products
  std::uint64_t seed = 20260801;
  bool exhaustive_axiom = false;  ///< force the full triple check on large braces
};

}  // namespace bracerep

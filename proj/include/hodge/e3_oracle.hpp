#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hodge/e3.hpp"

namespace hodge {

/// One Aut(M)-orbit of e = 3 data of a fixed Jordan type over F_2.
struct IsoClass {
  StrataPoint label;       // invariants computed directly from the bitmask representation
  PRDatum representative;  // the same flag as a library datum
  std::uint64_t orbit_size = 0;
};

/// Isomorphism classes of (M, M_1, M_2) over F_2 with M of the Jordan type
/// given by δ and graded dimensions μ, found by explicit orbit enumeration
/// under Aut(M). Requires |μ| <= 5. Independent of the subspace engine.
std::vector<IsoClass> iso_classes_for_delta(int h, const std::array<int, 3>& delta, const std::array<int, 3>& mu);

/// All classes over every δ compatible with (h, μ), in label order.
std::vector<IsoClass> iso_classes_oracle(int h, const std::array<int, 3>& mu);

inline constexpr int kOracleMaxDim = 5;

}  // namespace hodge

#pragma once

namespace htarea::tol {

// Relative thresholds. Everything that decides "degenerate or not" reads these.
inline constexpr double det = 1e-12;
inline constexpr double conv = 1e-10;

// General position certificate on normalized wedges.
inline constexpr double general_position = 1e-10;

// Collinear / coincident unit-ball points are merged below this.
inline constexpr double merge = 1e-12;

}  // namespace htarea::tol

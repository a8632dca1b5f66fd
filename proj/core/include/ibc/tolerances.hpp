#pragma once

namespace ibc {

/// Relative tolerance under which two eigenvalues (or an eigenvalue and a
/// threshold) are treated as equal.
inline constexpr double kRelTie = 1e-12;

/// Default accuracy target for quadrature-based checks.
inline constexpr double kQuadTol = 1e-8;

}  // namespace ibc

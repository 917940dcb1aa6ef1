#pragma once

#include "hankelcat/matrix.hpp"

namespace hankelcat {

enum class DetMethod { Auto, Laplace, Bareiss };

/// Largest dimension det_laplace accepts. Past this the O(n!) expansion is
/// useless even as an oracle.
inline constexpr std::size_t kLaplaceCap = 8;

/// Determinant by recursive cofactor expansion along the first row. The
/// trusted small-scale oracle: slow, but too simple to be wrong.
/// det of the 0x0 matrix is 1. Throws NotSquare or DimensionCapExceeded.
Int det_laplace(const ExactMatrix& m);

/// Determinant by fraction-free single-step elimination (Bareiss). Every
/// interior division is exact; a nonzero remainder throws
/// InternalExactDivisionViolation, which indicates a bug here, never bad
/// input. Zero pivots are handled by row swap with sign flip; a fully zero
/// pivot column short-circuits to 0. Throws NotSquare.
Int det_bareiss(const ExactMatrix& m);

/// Dispatcher. Auto picks Laplace for rows <= 4, Bareiss otherwise.
Int det(const ExactMatrix& m, DetMethod method = DetMethod::Auto);

}  // namespace hankelcat

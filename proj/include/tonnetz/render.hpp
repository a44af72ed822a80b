#pragma once

#include <string>
#include <vector>

#include "tonnetz/length_vector.hpp"

namespace tonnetz {

/// Z_n label of the plane lattice point at grid position (col, row): the
/// unfolded triangulation steps by +l_1 to the right and by -l_2 one row
/// down. Rows and columns index a rows x cols patch.
int unfolded_label(const LengthVector& L, int col, int row);

/// SVG of a rows x cols patch of the unit-equilateral plane triangulation,
/// each lattice point carrying its Z_n label, with the fundamental-domain
/// parallelogram of Lambda_L outlined. k = 3 only (throws UnsupportedK).
std::string render_svg(const LengthVector& L, int rows, int cols);

}  // namespace tonnetz

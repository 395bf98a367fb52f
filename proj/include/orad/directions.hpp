#pragma once

#include "orad/common.hpp"

namespace orad {

/// Deterministic unit-vector sets, one direction per column.
Mat circle_directions(int count);               ///< angles 2*pi*k/count, k = 0..count-1
Mat fibonacci_sphere(int count);                ///< golden-spiral points on S^2
Mat halton_sphere(int dim, int count);          ///< Halton points pushed to S^{dim-1}
Mat direction_grid(int dim, int count);         ///< dispatches on dimension

/// Test-grid sizes: 256 in 2-D, 1024 in 3-D, 4 n^2 above.
int default_grid_size(int dim);
inline Mat default_direction_grid(int dim) { return direction_grid(dim, default_grid_size(dim)); }

/// Largest angular gap estimate for a grid of `count` directions in `dim` dims.
double grid_spacing(int dim, int count);

}  // namespace orad

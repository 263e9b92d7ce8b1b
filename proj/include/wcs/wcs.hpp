#ifndef WCS_WCS_HPP
#define WCS_WCS_HPP

#include "wcs/complex_matrix.hpp"
#include "wcs/graded.hpp"
#include "wcs/matrix_wcs.hpp"
#include "wcs/parallel.hpp"
#include "wcs/permutation.hpp"
#include "wcs/product_state.hpp"
#include "wcs/report.hpp"
#include "wcs/tensor_power.hpp"

#endif

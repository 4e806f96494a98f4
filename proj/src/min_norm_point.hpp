#ifndef ASSOFORM_SRC_MIN_NORM_POINT_HPP
#define ASSOFORM_SRC_MIN_NORM_POINT_HPP

#include <vector>

#include "assoform/matrix.hpp"

namespace assoform::detail {

// The point of minimal Euclidean norm in the convex hull of `points`,
// computed exactly with Wolfe's algorithm. `points` must be nonempty and of
// equal dimension.
QVector min_norm_point(const std::vector<QVector>& points);

}  // namespace assoform::detail

#endif  // ASSOFORM_SRC_MIN_NORM_POINT_HPP

#pragma once

#include "gwkit/rational.hpp"

#include <optional>
#include <vector>

namespace gwkit {

using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;  // row-major

Q det(QMat a);
int rank(QMat a);

/* Some solution of A x = b with free variables set to zero, or nullopt if inconsistent. */
std::optional<QVec> solve(QMat a, QVec b);

/* Inverse of a square nonsingular matrix; throws DegenerateSample if singular. */
QMat inverse(const QMat& a);

}  // namespace gwkit

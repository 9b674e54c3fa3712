#pragma once

#include <optional>
#include <vector>

#include "pomstar/scalar.hpp"

namespace pomstar {

using GVec = std::vector<GaussRat>;
using GMat = std::vector<GVec>;

GMat gmat_identity(int n);
GMat gmat_mul(const GMat& a, const GMat& b);
GaussRat gmat_det(GMat m);
/// Exact inverse; nullopt when singular.
std::optional<GMat> gmat_inverse(GMat m);

/// Exact square root in Q, if one exists (argument must be >= 0).
std::optional<BigRat> rat_sqrt(const BigRat& v);
/// Exact square root in Q(i), if one exists.
std::optional<GaussRat> gauss_sqrt(const GaussRat& z);

}  // namespace pomstar

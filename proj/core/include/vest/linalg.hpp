#pragma once

#include "vest/rat.hpp"

#include <optional>
#include <vector>

namespace vest {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

RatMatrix identity_matrix(size_t n);
RatMatrix zero_matrix(size_t rows, size_t cols);
RatMatrix matmul(const RatMatrix &a, const RatMatrix &b);
RatVector matvec(const RatMatrix &a, const RatVector &v);
RatMatrix matadd(const RatMatrix &a, const RatMatrix &b);
RatMatrix matsub(const RatMatrix &a, const RatMatrix &b);
bool is_zero_matrix(const RatMatrix &a);

// reduced row echelon basis of the span of the given rows
std::vector<RatVector> span_basis(std::vector<RatVector> rows);
size_t rank(const RatMatrix &a);
std::optional<RatMatrix> inverse(const RatMatrix &a);

} // namespace vest

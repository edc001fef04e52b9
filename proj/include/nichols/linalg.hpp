#pragma once

// Exact linear algebra over Q(q): reduced echelon forms, kernels, ranks,
// solving, and the cycle-structured inverse of I - (monomial matrix).

#include "nichols/braid.hpp"
#include "nichols/tensor.hpp"

#include <vector>

namespace nichols {

using DenseMatrix = std::vector<std::vector<Scalar>>;

struct Echelon {
    DenseMatrix rows;         // nonzero rows of the reduced echelon form
    std::vector<int> pivots;  // pivot column of each row
};

/// Reduced row echelon form; pivots are 1 and are the first nonzero entry of
/// each column in scan order.
Echelon rref(DenseMatrix m);

int rank(const DenseMatrix& m);
int rank(const OperatorMatrix& m);

/// Null space basis of an r x `cols` matrix; each vector has first nonzero
/// coordinate 1.
std::vector<std::vector<Scalar>> kernel(const DenseMatrix& m, std::size_t cols);
std::vector<TensorVector> kernel(const OperatorMatrix& m);

/// One solution of m x = b; throws NoSolution.
std::vector<Scalar> solve(const DenseMatrix& m, const std::vector<Scalar>& b);
TensorVector solve(const OperatorMatrix& m, const TensorVector& b);

/// Gaussian inverse; throws SingularMatrix.
DenseMatrix inverse(const DenseMatrix& m);
OperatorMatrix inverse(const OperatorMatrix& m);

/// (I - M)^{-1} for a monomial M, one permutation cycle at a time. Throws
/// SingularFactor when the scalar product around some cycle is 1.
OperatorMatrix invert_one_minus_monomial(const OperatorMatrix& m);

/// Same for a factor written as 1 - (braid word); throws std::invalid_argument
/// for any other shape.
OperatorMatrix invert_one_minus_monomial(const GroupAlgebraElement& factor, const ClassPtr& cls,
                                         const BraidingSpec& spec);

/// Basis of the span of `vectors` in reduced echelon form over the class basis.
std::vector<TensorVector> row_reduce(const std::vector<TensorVector>& vectors, const ClassPtr& cls);

}  // namespace nichols

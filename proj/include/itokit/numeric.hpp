#pragma once

#include <vector>

#include "itokit/types.hpp"

namespace itokit::numeric {

/// Largest singular value; 0 for empty matrices.
double spectral_norm(const Matrix& m);

/// Largest absolute entry; 0 for empty matrices.
double max_abs(const Matrix& m);

/// Orthonormal basis of the right null space {x : m x = 0}, decided at
/// singular values <= rel_tol * sigma_max. A matrix with no rows has the
/// whole space as kernel. Columns are phase-canonicalized.
Matrix kernel_basis(const Matrix& m, double rel_tol);

/// Orthonormal basis of the column space, rank decided at
/// rel_tol * sigma_max. Columns are phase-canonicalized.
Matrix column_space_basis(const Matrix& m, double rel_tol);

/// Orthonormal basis of the orthogonal complement of span(basis) in
/// C^ambient. basis must have orthonormal columns (or be empty).
Matrix orthonormal_complement(const Matrix& basis, Index ambient);

/// Spectral norm of the difference of the two orthoprojectors. Inputs are
/// matrices with orthonormal columns spanning the subspaces; either may
/// have zero columns.
double subspace_distance(const Matrix& a, const Matrix& b);

/// Rotate each column so its largest-magnitude entry is real positive.
void canonicalize_phases(Matrix& basis);

/// Greedy in-order orthonormalization with respect to a Hermitian PSD
/// form G (an n x n Gram matrix over the candidate vectors e_1..e_n).
/// Returns W (n x m) with W^dagger G W = I; candidate i is accepted when
/// its residual squared norm exceeds rel_tol * ||G||_2. Optionally
/// records the accepted pivot indices.
Matrix gram_orthonormal_frame(const Matrix& gram, double rel_tol,
                              std::vector<Index>* pivots = nullptr);

/// Minimum-norm least-squares solution of a x = b; optionally reports the
/// residual max |a x - b|.
Vector solve_min_norm(const Matrix& a, const Vector& b,
                      double* residual = nullptr);

}  // namespace itokit::numeric

#include "itokit/numeric.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace itokit::numeric {

double spectral_norm(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

double max_abs(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

void canonicalize_phases(Matrix& basis) {
    for (Index c = 0; c < basis.cols(); ++c) {
        Index r = 0;
        basis.col(c).cwiseAbs().maxCoeff(&r);
        const Complex pivot = basis(r, c);
        const double mag = std::abs(pivot);
        if (mag > 0.0) basis.col(c) *= std::conj(pivot) / mag;
    }
}

Matrix kernel_basis(const Matrix& m, double rel_tol) {
    const Index n = m.cols();
    if (m.rows() == 0 || n == 0) {
        Matrix id = Matrix::Identity(n, n);
        return id;
    }
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = (sv.size() > 0 ? sv(0) : 0.0) * rel_tol;
    Index rank = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    Matrix ker = svd.matrixV().rightCols(n - rank);
    canonicalize_phases(ker);
    return ker;
}

Matrix column_space_basis(const Matrix& m, double rel_tol) {
    if (m.rows() == 0 || m.cols() == 0) return Matrix(m.rows(), 0);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    const double cutoff = (sv.size() > 0 ? sv(0) : 0.0) * rel_tol;
    Index rank = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    Matrix range = svd.matrixU().leftCols(rank);
    canonicalize_phases(range);
    return range;
}

Matrix orthonormal_complement(const Matrix& basis, Index ambient) {
    if (basis.cols() == 0) {
        Matrix id = Matrix::Identity(ambient, ambient);
        return id;
    }
    return kernel_basis(basis.adjoint(), 1e-12);
}

double subspace_distance(const Matrix& a, const Matrix& b) {
    const Index n = std::max(a.rows(), b.rows());
    if (n == 0) return 0.0;
    Matrix pa = Matrix::Zero(n, n);
    Matrix pb = Matrix::Zero(n, n);
    if (a.cols() > 0) pa = a * a.adjoint();
    if (b.cols() > 0) pb = b * b.adjoint();
    return spectral_norm(pa - pb);
}

Matrix gram_orthonormal_frame(const Matrix& gram, double rel_tol,
                              std::vector<Index>* pivots) {
    const Index n = gram.rows();
    const double scale = spectral_norm(gram);
    const double thresh = rel_tol * scale;
    Matrix frame(n, 0);
    if (pivots) pivots->clear();
    for (Index i = 0; i < n; ++i) {
        Vector v = Vector::Zero(n);
        v(i) = 1.0;
        // Two projection passes keep the frame orthonormal to roundoff.
        for (int pass = 0; pass < 2; ++pass) {
            for (Index p = 0; p < frame.cols(); ++p) {
                const Complex coef = frame.col(p).dot(gram * v);
                v -= coef * frame.col(p);
            }
        }
        const double nrm2 = std::real(v.dot(gram * v));
        if (nrm2 > thresh) {
            frame.conservativeResize(n, frame.cols() + 1);
            frame.col(frame.cols() - 1) = v / std::sqrt(nrm2);
            if (pivots) pivots->push_back(i);
        }
    }
    return frame;
}

Vector solve_min_norm(const Matrix& a, const Vector& b, double* residual) {
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(a);
    Vector x = cod.solve(b);
    if (residual) {
        if (b.size() == 0)
            *residual = 0.0;
        else
            *residual = (a * x - b).cwiseAbs().maxCoeff();
    }
    return x;
}

}  // namespace itokit::numeric

#pragma once

#include "oseenvb/common.hpp"

#include <Eigen/SparseCore>

#include <memory>
#include <string>

namespace oseenvb {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// UMFPACK LU factorization. Rejects pivots (of the row-scaled matrix)
/// below pivot_tolerance times the largest pivot, reporting the original
/// column index, and checks the residual of every solve.
class SparseFactorization {
public:
    explicit SparseFactorization(const SparseMatrix& matrix, double pivot_tolerance = 1e-14);
    ~SparseFactorization();
    SparseFactorization(SparseFactorization&&) noexcept;
    SparseFactorization& operator=(SparseFactorization&&) noexcept;

    /// Throws SolverError when ||Ax - b|| / ||b|| exceeds max_residual.
    Eigen::VectorXd solve(const Eigen::VectorXd& rhs, double* relative_residual = nullptr,
                          double max_residual = 1e-10) const;

    Eigen::Index size() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

Eigen::VectorXd solve_sparse(const SparseMatrix& matrix, const Eigen::VectorXd& rhs,
                             double* relative_residual = nullptr);

/// Name and version of the sparse direct solver, e.g. "UMFPACK 5.7.9".
std::string solver_version();

} // namespace oseenvb

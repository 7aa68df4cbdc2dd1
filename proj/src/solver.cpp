#include "oseenvb/solver.hpp"

#include <umfpack.h>

#include <cmath>
#include <string>
#include <vector>

namespace oseenvb {

struct SparseFactorization::Impl {
    SparseMatrix matrix;
    void* symbolic = nullptr;
    void* numeric = nullptr;

    ~Impl()
    {
        if (numeric) umfpack_di_free_numeric(&numeric);
        if (symbolic) umfpack_di_free_symbolic(&symbolic);
    }
};

SparseFactorization::SparseFactorization(const SparseMatrix& matrix, double pivot_tolerance)
    : impl_(std::make_unique<Impl>())
{
    if (matrix.rows() != matrix.cols()) throw SolverError("matrix is not square");
    impl_->matrix = matrix;
    impl_->matrix.makeCompressed();
    const SparseMatrix& A = impl_->matrix;
    const int n = static_cast<int>(A.rows());
    double scale = 0.0;
    for (int k = 0; k < A.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(A, k); it; ++it) scale = std::max(scale, std::abs(it.value()));
    if (scale == 0.0) throw SolverError("matrix is identically zero", 0);

    double control[UMFPACK_CONTROL];
    double info[UMFPACK_INFO];
    umfpack_di_defaults(control);
    int status = umfpack_di_symbolic(n, n, A.outerIndexPtr(), A.innerIndexPtr(), A.valuePtr(), &impl_->symbolic, control, info);
    if (status != UMFPACK_OK) throw SolverError("symbolic factorization failed (status " + std::to_string(status) + ")");
    status = umfpack_di_numeric(A.outerIndexPtr(), A.innerIndexPtr(), A.valuePtr(), impl_->symbolic, &impl_->numeric, control, info);
    if (status != UMFPACK_OK && status != UMFPACK_WARNING_singular_matrix)
        throw SolverError("numeric factorization failed (status " + std::to_string(status) + ")");

    // Pivots of the row-scaled matrix, in factorization order.
    std::vector<double> udiag(static_cast<std::size_t>(n));
    std::vector<int> q(static_cast<std::size_t>(n));
    int do_recip = 0;
    status = umfpack_di_get_numeric(nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, q.data(), udiag.data(),
                                    &do_recip, nullptr, impl_->numeric);
    if (status != UMFPACK_OK) throw SolverError("cannot read the LU pivots (status " + std::to_string(status) + ")");
    double umax = 0.0;
    for (double d : udiag) umax = std::max(umax, std::abs(d));
    for (int j = 0; j < n; ++j) {
        if (!(std::abs(udiag[static_cast<std::size_t>(j)]) >= pivot_tolerance * umax)) {
            const int col = q[static_cast<std::size_t>(j)];
            throw SolverError("matrix is singular to working precision (pivot " + std::to_string(j) + ", column " +
                                  std::to_string(col) + ")",
                              col);
        }
    }
}

SparseFactorization::~SparseFactorization() = default;
SparseFactorization::SparseFactorization(SparseFactorization&&) noexcept = default;
SparseFactorization& SparseFactorization::operator=(SparseFactorization&&) noexcept = default;

Eigen::Index SparseFactorization::size() const { return impl_->matrix.rows(); }

Eigen::VectorXd SparseFactorization::solve(const Eigen::VectorXd& rhs, double* relative_residual,
                                           double max_residual) const
{
    const SparseMatrix& A = impl_->matrix;
    if (rhs.size() != A.rows()) throw SolverError("right-hand side has the wrong length");
    const double bnorm = rhs.norm();
    if (bnorm == 0.0) {
        if (relative_residual) *relative_residual = 0.0;
        return Eigen::VectorXd::Zero(rhs.size());
    }
    Eigen::VectorXd x(rhs.size());
    double control[UMFPACK_CONTROL];
    double info[UMFPACK_INFO];
    umfpack_di_defaults(control);
    const int status = umfpack_di_solve(UMFPACK_A, A.outerIndexPtr(), A.innerIndexPtr(), A.valuePtr(), x.data(), rhs.data(),
                                        impl_->numeric, control, info);
    if (status != UMFPACK_OK) throw SolverError("triangular solves failed (status " + std::to_string(status) + ")");
    const double res = (A * x - rhs).norm() / bnorm;
    if (relative_residual) *relative_residual = res;
    if (!x.allFinite() || !(res <= max_residual))
        throw SolverError("linear solve residual " + std::to_string(res) + " exceeds " + std::to_string(max_residual));
    return x;
}

Eigen::VectorXd solve_sparse(const SparseMatrix& matrix, const Eigen::VectorXd& rhs, double* relative_residual)
{
    return SparseFactorization(matrix).solve(rhs, relative_residual);
}

std::string solver_version()
{
    return "UMFPACK " + std::to_string(UMFPACK_MAIN_VERSION) + "." + std::to_string(UMFPACK_SUB_VERSION) + "." +
           std::to_string(UMFPACK_SUBSUB_VERSION);
}

} // namespace oseenvb

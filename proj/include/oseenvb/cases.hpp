#pragma once

namespace oseenvb {

/// Closed-form values of one manufactured solution at a point.
/// du[i][j] = d_j u_i, and likewise for dbeta and df.
struct ExactPoint {
    double omega = 0.0, omega_x = 0.0, omega_y = 0.0;
    double p = 0.0, p_x = 0.0, p_y = 0.0;
    double u[2] = {0.0, 0.0};
    double du[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    double beta[2] = {0.0, 0.0};
    double dbeta[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    double f[2] = {0.0, 0.0};
    double df[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
};

namespace detail {

void eval_ex1(double x, double y, double nu, double sigma, double p0, ExactPoint& o);
void eval_ex2a(double x, double y, double nu, double sigma, double p0, ExactPoint& o);
void eval_ex2b(double x, double y, double nu, double sigma, double p0, ExactPoint& o);
void eval_ex2c(double x, double y, double nu, double sigma, double p0, ExactPoint& o);

} // namespace detail

} // namespace oseenvb

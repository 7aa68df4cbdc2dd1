#include "oseenvb/quadrature.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <utility>

namespace oseenvb {

namespace {

constexpr int kMaxLinePoints = 16;

// Returns (P_n(x), P_n'(x)) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x)
{
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
    }
    return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

LineRule build_gauss_legendre(int n)
{
    LineRule rule;
    rule.points.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(n, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double dp = legendre(n, x).second;
        // Map [-1, 1] to [0, 1], ascending.
        rule.points[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (x + 1.0);
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

QuadRule build_collapsed(int exactness)
{
    // x = s, y = t (1 - s), Jacobian (1 - s): degree exactness + 1 in s.
    const LineRule& gs = gauss_line((exactness + 3) / 2);
    const LineRule& gt = gauss_line((exactness + 2) / 2);
    QuadRule rule;
    rule.exactness = exactness;
    for (std::size_t i = 0; i < gs.points.size(); ++i) {
        for (std::size_t j = 0; j < gt.points.size(); ++j) {
            const double s = gs.points[i];
            const double x = s;
            const double y = gt.points[j] * (1.0 - s);
            rule.points.emplace_back(1.0 - x - y, x, y);
            rule.weights.push_back(gs.weights[i] * gt.weights[j] * (1.0 - s));
        }
    }
    return rule;
}

} // namespace

const LineRule& gauss_line(int n)
{
    static std::array<LineRule, kMaxLinePoints + 1> rules;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int k = 1; k <= kMaxLinePoints; ++k) rules[static_cast<std::size_t>(k)] = build_gauss_legendre(k);
    });
    if (n < 1 || n > kMaxLinePoints) throw ConfigError("Gauss-Legendre point count out of range");
    return rules[static_cast<std::size_t>(n)];
}

const LineRule& line_rule(int exactness)
{
    return gauss_line(std::max(1, (exactness + 2) / 2));
}

const QuadRule& quadrature_rule(int exactness)
{
    static std::array<QuadRule, 9> rules;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int d = 1; d <= 8; ++d) rules[static_cast<std::size_t>(d)] = build_collapsed(d);
    });
    if (exactness < 1 || exactness > 8)
        throw ConfigError("quadrature exactness " + std::to_string(exactness) + " outside 1..8");
    return rules[static_cast<std::size_t>(exactness)];
}

} // namespace oseenvb

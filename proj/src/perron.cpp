#include "okishio/perron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "okishio/error.hpp"

namespace okishio {

PerronResult perron_left(const Matrix& m, const PerronOptions& options) {
    if (!m.square()) throw EconomyError(ErrorKind::DimensionMismatch, "Perron root of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) throw EconomyError(ErrorKind::DimensionMismatch, "Perron root of an empty matrix");

    bool positive_diagonal = false;
    for (std::size_t i = 0; i < n; ++i) positive_diagonal = positive_diagonal || m(i, i) > 0.0;
    const double shift = positive_diagonal ? 0.0 : norm_inf(m);

    Vector x(n, 1.0);
    for (int it = 1; it <= options.max_iterations; ++it) {
        Vector y = left_multiply(x, m);
        for (std::size_t j = 0; j < n; ++j) y[j] += shift * x[j];

        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (x[j] <= 0.0) continue;
            const double ratio = y[j] / x[j];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }

        const double scale = norm_inf(y);
        if (scale == 0.0) return PerronResult{0.0, Vector(n, 0.0), it};
        for (double& v : y) v /= scale;
        x = std::move(y);

        if (hi - lo < options.tolerance * std::max(1.0, hi)) {
            const double rho = 0.5 * (lo + hi) - shift;
            if (*std::max_element(x.begin(), x.end(), [](double a, double b) {
                    return std::abs(a) < std::abs(b);
                }) < 0.0) {
                for (double& v : x) v = -v;
            }
            return PerronResult{std::max(rho, 0.0), std::move(x), it};
        }
    }
    throw EconomyError(ErrorKind::NoConvergence,
                       "power iteration did not reach tolerance " + std::to_string(options.tolerance) + " in " +
                           std::to_string(options.max_iterations) + " iterations");
}

namespace {

void dfs_order(const Matrix& m, std::size_t v, bool transpose, std::vector<bool>& seen,
               std::vector<std::size_t>& out) {
    // Iterative DFS producing post-order.
    std::vector<std::pair<std::size_t, std::size_t>> stack{{v, 0}};
    seen[v] = true;
    const std::size_t n = m.rows();
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        bool pushed = false;
        while (next < n) {
            const std::size_t w = next++;
            const double entry = transpose ? m(w, node) : m(node, w);
            if (entry > kPatternThreshold && !seen[w]) {
                seen[w] = true;
                stack.emplace_back(w, 0);
                pushed = true;
                break;
            }
        }
        if (!pushed) {
            out.push_back(stack.back().first);
            stack.pop_back();
        }
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> strongly_connected_components(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> order;
    for (std::size_t v = 0; v < n; ++v)
        if (!seen[v]) dfs_order(m, v, false, seen, order);

    std::fill(seen.begin(), seen.end(), false);
    std::vector<std::vector<std::size_t>> components;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (seen[*it]) continue;
        std::vector<std::size_t> component;
        dfs_order(m, *it, true, seen, component);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

bool is_strongly_connected(const Matrix& m) {
    return m.rows() > 0 && strongly_connected_components(m).size() == 1;
}

double spectral_radius(const Matrix& m, const PerronOptions& options) {
    double rho = 0.0;
    for (const auto& component : strongly_connected_components(m)) {
        if (component.size() == 1) {
            rho = std::max(rho, std::abs(m(component[0], component[0])));
            continue;
        }
        Matrix block(component.size(), component.size());
        for (std::size_t r = 0; r < component.size(); ++r)
            for (std::size_t c = 0; c < component.size(); ++c) block(r, c) = m(component[r], component[c]);
        rho = std::max(rho, perron_left(block, options).rho);
    }
    return rho;
}

}  // namespace okishio

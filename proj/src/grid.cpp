#include <starquant/grid.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <starquant/errors.hpp>
#include <starquant/kernels.hpp>

namespace starquant
{

grid_function_1d::grid_function_1d(double a, double b, std::size_t n, std::size_t pad)
    : grid_function_1d(a, b, n, pad, std::vector<std::complex<double>>(n + 2 * pad))
{
}

grid_function_1d::grid_function_1d(double a, double b, std::size_t n, std::size_t pad,
                                   std::vector<std::complex<double>> values)
    : m_a(a), m_b(b), m_n(n), m_pad(pad), m_values(std::move(values))
{
    if (n < min_grid_samples) {
        throw precondition_error("GridTooCoarse",
                                 "grid needs at least " + std::to_string(min_grid_samples) + " samples, got "
                                     + std::to_string(n));
    }
    if (!(b > a)) {
        throw std::invalid_argument("grid interval must satisfy a < b");
    }
    if (m_values.size() != n + 2 * pad) {
        throw std::invalid_argument("grid sample count does not match n + 2 pad");
    }
}

grid_function_1d grid_function_1d::sample(double a, double b, std::size_t n, std::size_t pad,
                                          const std::function<std::complex<double>(double)> &f)
{
    grid_function_1d g(a, b, n, pad);
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.m_values[i] = f(g.x(i));
    }
    return g;
}

bool grid_function_1d::same_grid(const grid_function_1d &o) const
{
    return m_a == o.m_a && m_b == o.m_b && m_n == o.m_n && m_pad == o.m_pad;
}

grid_function_1d grid_function_1d::derivative(unsigned order) const
{
    return {m_a, m_b, m_n, m_pad, kernels::differentiate(m_values, h(), order)};
}

double grid_function_1d::interior_max_abs() const
{
    double m = 0;
    for (std::size_t i = interior_begin(); i < interior_end(); ++i) {
        m = std::max(m, std::abs(m_values[i]));
    }
    return m;
}

std::complex<double> evaluate_base(const phase_polynomial &f, double q)
{
    if (f.dim() != 1) {
        throw std::invalid_argument("grid evaluation needs a one-dimensional polynomial");
    }
    std::complex<double> acc = 0;
    for (const auto &[m, c] : f.terms()) {
        if (m.p(0) != 0 || m.lam != 0) {
            throw std::invalid_argument("grid evaluation needs a lambda-free base polynomial");
        }
        acc += std::complex<double>(c.re().get_d(), c.im().get_d()) * std::pow(q, m.q(0));
    }
    return acc;
}

void read_two_column(const std::string &path, std::vector<double> &xs, std::vector<double> &ys)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    xs.clear();
    ys.clear();
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ls(line);
        double x, y;
        if (!(ls >> x >> y)) {
            throw std::runtime_error("malformed line in '" + path + "': " + line);
        }
        xs.push_back(x);
        ys.push_back(y);
    }
}

grid_function_1d resample_cubic(const std::vector<double> &xs, const std::vector<double> &ys, double a, double b,
                                std::size_t n, std::size_t pad)
{
    if (xs.size() != ys.size() || xs.size() < 4) {
        throw std::invalid_argument("cubic resampling needs at least four (x, y) pairs");
    }
    if (!std::is_sorted(xs.begin(), xs.end()) || std::adjacent_find(xs.begin(), xs.end()) != xs.end()) {
        throw std::invalid_argument("tabulated x values must be strictly increasing");
    }
    grid_function_1d g(a, b, n, pad);
    const double tol = 1e-12 * std::max(1.0, std::abs(xs.back() - xs.front()));
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = g.x(i);
        if (x < xs.front() - tol || x > xs.back() + tol) {
            throw precondition_error("InterpolationRange", "padded grid point " + std::to_string(x)
                                                               + " lies outside the tabulated range");
        }
        // Four nodes around x, clamped to the table.
        auto it = std::upper_bound(xs.begin(), xs.end(), x);
        long j = static_cast<long>(it - xs.begin()) - 2;
        j = std::clamp(j, 0L, static_cast<long>(xs.size()) - 4);
        double acc = 0;
        for (long u = j; u < j + 4; ++u) {
            double w = 1;
            for (long v = j; v < j + 4; ++v) {
                if (v != u) {
                    w *= (x - xs[static_cast<std::size_t>(v)]) / (xs[static_cast<std::size_t>(u)] - xs[static_cast<std::size_t>(v)]);
                }
            }
            acc += w * ys[static_cast<std::size_t>(u)];
        }
        g[i] = acc;
    }
    return g;
}

} // namespace starquant

#include <starquant/kernels.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace starquant::kernels
{

namespace
{

void accumulate_products(phase_polynomial &out, const phase_polynomial::map_type &a, std::size_t begin,
                         std::size_t end, const phase_polynomial &b)
{
    auto it = a.begin();
    std::advance(it, static_cast<long>(begin));
    for (std::size_t i = begin; i < end; ++i, ++it) {
        const auto &[ma, ca] = *it;
        for (const auto &[mb, cb] : b.terms()) {
            monomial m{ma.lam + mb.lam, ma.exps};
            for (std::size_t k = 0; k < m.exps.size(); ++k) {
                m.exps[k] += mb.exps[k];
            }
            out.add_term(m, ca * cb);
        }
    }
}

} // namespace

phase_polynomial multiply_serial(const phase_polynomial &a, const phase_polynomial &b)
{
    phase_polynomial r(a.dim());
    accumulate_products(r, a.terms(), 0, a.size(), b);
    return r;
}

phase_polynomial multiply_parallel(const phase_polynomial &a, const phase_polynomial &b)
{
    const int nthreads = omp_get_max_threads();
    std::vector<phase_polynomial> partial(static_cast<std::size_t>(nthreads), phase_polynomial(a.dim()));
    const std::size_t n = a.size();
#pragma omp parallel
    {
        const auto tid = static_cast<std::size_t>(omp_get_thread_num());
        const auto nt = static_cast<std::size_t>(omp_get_num_threads());
        const std::size_t begin = n * tid / nt;
        const std::size_t end = n * (tid + 1) / nt;
        accumulate_products(partial[tid], a.terms(), begin, end, b);
    }
    phase_polynomial r(a.dim());
    for (const auto &p : partial) {
        r += p;
    }
    return r;
}

phase_polynomial multiply(const phase_polynomial &a, const phase_polynomial &b)
{
    if (a.size() * b.size() >= parallel_threshold && omp_get_max_threads() > 1) {
        return multiply_parallel(a, b);
    }
    return multiply_serial(a, b);
}

std::vector<double> fd_weights(std::span<const double> nodes, double x0, unsigned deriv)
{
    const std::size_t n = nodes.size();
    if (n <= deriv) {
        throw std::invalid_argument("stencil too small for derivative order");
    }
    // c[i][k]: weight of node i for derivative k.
    std::vector<std::vector<double>> c(n, std::vector<double>(deriv + 1, 0.0));
    double c1 = 1.0;
    double c4 = nodes[0] - x0;
    c[0][0] = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t mn = std::min<std::size_t>(i, deriv);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = nodes[i] - x0;
        for (std::size_t j = 0; j < i; ++j) {
            const double c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if (j == i - 1) {
                for (std::size_t k = mn; k >= 1; --k) {
                    c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (std::size_t k = mn; k >= 1; --k) {
                c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = c[i][deriv];
    }
    return w;
}

namespace
{

struct stencil_table {
    std::size_t width = 0;
    // weights[s] is the stencil whose first node is offset s relative to the
    // evaluation point shifted by `half` (s == half is centred).
    std::vector<std::vector<double>> weights;
};

// deriv + 4 nodes rounded up to an odd count: at least 4th-order accurate
// both centred and one-sided.
stencil_table make_stencils(unsigned deriv)
{
    stencil_table t;
    std::size_t width = deriv + 4;
    if (width % 2 == 0) {
        ++width;
    }
    t.width = width;
    std::vector<double> nodes(width);
    for (std::size_t s = 0; s < width; ++s) {
        for (std::size_t j = 0; j < width; ++j) {
            nodes[j] = static_cast<double>(j) - static_cast<double>(s);
        }
        t.weights.push_back(fd_weights(nodes, 0.0, deriv));
    }
    return t;
}

std::complex<double> derivative_at(std::span<const std::complex<double>> f, const stencil_table &t, std::size_t i,
                                   double scale)
{
    const std::size_t n = f.size();
    const std::size_t half = t.width / 2;
    std::size_t start;
    if (i < half) {
        start = 0;
    } else if (i + half >= n) {
        start = n - t.width;
    } else {
        start = i - half;
    }
    const auto &w = t.weights[i - start];
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < t.width; ++j) {
        acc += w[j] * f[start + j];
    }
    return acc * scale;
}

void check_grid(std::size_t n, const stencil_table &t)
{
    if (n < t.width) {
        throw std::invalid_argument("grid has fewer samples than the derivative stencil");
    }
}

} // namespace

std::vector<std::complex<double>> differentiate_serial(std::span<const std::complex<double>> samples, double h,
                                                       unsigned deriv)
{
    if (deriv == 0) {
        return {samples.begin(), samples.end()};
    }
    const auto t = make_stencils(deriv);
    check_grid(samples.size(), t);
    const double scale = 1.0 / std::pow(h, deriv);
    std::vector<std::complex<double>> out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        out[i] = derivative_at(samples, t, i, scale);
    }
    return out;
}

std::vector<std::complex<double>> differentiate_parallel(std::span<const std::complex<double>> samples, double h,
                                                         unsigned deriv)
{
    if (deriv == 0) {
        return {samples.begin(), samples.end()};
    }
    const auto t = make_stencils(deriv);
    check_grid(samples.size(), t);
    const double scale = 1.0 / std::pow(h, deriv);
    std::vector<std::complex<double>> out(samples.size());
    const auto n = static_cast<long>(samples.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = derivative_at(samples, t, static_cast<std::size_t>(i), scale);
    }
    return out;
}

std::vector<std::complex<double>> differentiate(std::span<const std::complex<double>> samples, double h,
                                                unsigned deriv)
{
    if (samples.size() >= parallel_threshold && omp_get_max_threads() > 1) {
        return differentiate_parallel(samples, h, deriv);
    }
    return differentiate_serial(samples, h, deriv);
}

} // namespace starquant::kernels

#ifndef STARQUANT_KERNELS_HPP
#define STARQUANT_KERNELS_HPP

// Data-parallel kernels. Every kernel has a serial reference (`*_serial`)
// kept for testing and benchmarking, an OpenMP version (`*_parallel`) and a
// dispatcher that picks one by problem size.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <omp.h>

#include <starquant/phase_polynomial.hpp>

namespace starquant::kernels
{

// Work (term pairs, grid points) below which the dispatchers stay serial.
inline constexpr std::size_t parallel_threshold = 4096;

phase_polynomial multiply_serial(const phase_polynomial &a, const phase_polynomial &b);
phase_polynomial multiply_parallel(const phase_polynomial &a, const phase_polynomial &b);
phase_polynomial multiply(const phase_polynomial &a, const phase_polynomial &b);

// Sum of body(i) for i in [0, count). T needs +=, and `zero` must be the
// additive identity. Exact arithmetic makes the reduction order irrelevant.
template <typename T, typename Body>
T sum_serial(std::size_t count, const Body &body, T zero)
{
    for (std::size_t i = 0; i < count; ++i) {
        zero += body(i);
    }
    return zero;
}

template <typename T, typename Body>
T sum_parallel(std::size_t count, const Body &body, T zero)
{
    const int nthreads = omp_get_max_threads();
    std::vector<T> partial(static_cast<std::size_t>(nthreads), zero);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < count; ++i) {
        partial[static_cast<std::size_t>(omp_get_thread_num())] += body(i);
    }
    for (auto &p : partial) {
        zero += p;
    }
    return zero;
}

// Fornberg finite-difference weights for the derivative of order `deriv` at
// x0 on the given nodes.
std::vector<double> fd_weights(std::span<const double> nodes, double x0, unsigned deriv);

// Fourth-order accurate derivative of uniformly spaced samples. Centred
// stencils where they fit, shifted one-sided stencils near the ends.
std::vector<std::complex<double>> differentiate_serial(std::span<const std::complex<double>> samples, double h,
                                                       unsigned deriv);
std::vector<std::complex<double>> differentiate_parallel(std::span<const std::complex<double>> samples, double h,
                                                         unsigned deriv);
std::vector<std::complex<double>> differentiate(std::span<const std::complex<double>> samples, double h,
                                                unsigned deriv);

} // namespace starquant::kernels

#endif

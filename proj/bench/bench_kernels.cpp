// Serial reference kernels against their OpenMP counterparts.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include <omp.h>

#include <starquant/kernels.hpp>
#include <starquant/weyl_star.hpp>

using namespace starquant;

namespace
{

double seconds(const std::function<void()> &fn, int reps)
{
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) {
        fn();
    }
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

phase_polynomial dense(unsigned n, int degree, std::mt19937 &rng)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    phase_polynomial f(n);
    for (int d = 0; d <= degree; ++d) {
        for (const auto &e : multi_indices_of_degree(2 * n, d)) {
            f.add_term(monomial{0, e}, scalar(rational(coeff(rng), 1 + (d % 3))));
        }
    }
    return f;
}

void report(const char *name, double serial, double parallel)
{
    std::printf("%-28s serial %10.3f ms   parallel %10.3f ms   speedup %5.2fx\n", name, serial * 1e3,
                parallel * 1e3, serial / parallel);
}

} // namespace

int main()
{
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
    std::mt19937 rng(7);

    const auto a = dense(2, 6, rng);
    const auto b = dense(2, 6, rng);
    report("multiply (n=2, deg 6)", seconds([&] { kernels::multiply_serial(a, b); }, 3),
           seconds([&] { kernels::multiply_parallel(a, b); }, 3));

    const gaussian_observable f(dense(2, 4, rng));
    const gaussian_observable g(dense(2, 4, rng));
    report("star (n=2, deg 4)", seconds([&] { star_serial(f, g); }, 3), seconds([&] { star_parallel(f, g); }, 3));

    std::vector<std::complex<double>> samples(1 << 20);
    const double h = 1e-4;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double x = static_cast<double>(i) * h;
        samples[i] = {std::sin(x), std::cos(x)};
    }
    report("stencil d2 (2^20 samples)", seconds([&] { kernels::differentiate_serial(samples, h, 2); }, 5),
           seconds([&] { kernels::differentiate_parallel(samples, h, 2); }, 5));
    return 0;
}

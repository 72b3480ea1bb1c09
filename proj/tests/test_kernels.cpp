#include <doctest.h>

#include <cmath>

#include <starquant/kernels.hpp>
#include <starquant/weyl_star.hpp>

#include "test_helpers.hpp"

using namespace starquant;

TEST_CASE("multiply kernels agree")
{
    sq_test::random_source rs(71);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = rs.polynomial(2, 6, 80, -1, 1);
        const auto b = rs.polynomial(2, 6, 80, -1, 1);
        const auto ref = kernels::multiply_serial(a, b);
        CHECK(kernels::multiply_parallel(a, b) == ref);
        CHECK(kernels::multiply(a, b) == ref);
        CHECK(kernels::multiply_serial(b, a) == ref);
    }
}

TEST_CASE("sum kernels agree")
{
    auto body = [](std::size_t i) { return static_cast<long>(i * i); };
    CHECK(kernels::sum_serial(1000, body, 0L) == kernels::sum_parallel(1000, body, 0L));
}

TEST_CASE("Fornberg weights")
{
    const std::vector<double> nodes{-2, -1, 0, 1, 2};
    const auto w1 = kernels::fd_weights(nodes, 0.0, 1);
    const std::vector<double> e1{1.0 / 12, -2.0 / 3, 0, 2.0 / 3, -1.0 / 12};
    const auto w2 = kernels::fd_weights(nodes, 0.0, 2);
    const std::vector<double> e2{-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        CHECK(w1[i] == doctest::Approx(e1[i]));
        CHECK(w2[i] == doctest::Approx(e2[i]));
    }
}

TEST_CASE("stencil kernels agree")
{
    std::vector<std::complex<double>> samples(10000);
    const double h = 1e-3;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double x = static_cast<double>(i) * h;
        samples[i] = {std::sin(x), std::cos(2 * x)};
    }
    for (unsigned d : {1u, 2u, 3u}) {
        const auto ref = kernels::differentiate_serial(samples, h, d);
        const auto par = kernels::differentiate_parallel(samples, h, d);
        REQUIRE(ref.size() == par.size());
        for (std::size_t i = 0; i < ref.size(); ++i) {
            CHECK(ref[i] == par[i]);
        }
    }
}

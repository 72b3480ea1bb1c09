#include <starquant/weyl_star.hpp>

#include <algorithm>
#include <numeric>

#include <starquant/errors.hpp>
#include <starquant/kernels.hpp>

namespace starquant
{

std::vector<int> p_degree_bounds(const phase_polynomial &f)
{
    std::vector<int> bound(f.dim(), -1);
    for (const auto &[m, c] : f.terms()) {
        for (unsigned k = 0; k < f.dim(); ++k) {
            bound[k] = std::max(bound[k], m.p(k));
        }
    }
    return bound;
}

namespace
{

void check_dims(const gaussian_observable &f, const gaussian_observable &g)
{
    if (f.dim() != g.dim()) {
        throw mismatch_error("DimensionMismatch", "star operands have different dimensions");
    }
}

int total(const std::vector<int> &a)
{
    return std::accumulate(a.begin(), a.end(), 0);
}

// One (a, c) slot of the expansion: a counts d_q (x) d_p' factors, c counts
// d_p (x) d_q' factors.
struct slot {
    std::vector<int> a;
    std::vector<int> c;
};

std::vector<slot> expansion_slots(const gaussian_observable &f, const gaussian_observable &g, int only_order)
{
    std::vector<slot> out;
    if (f.is_zero() || g.is_zero()) {
        return out;
    }
    const auto a_bound = p_degree_bounds(g.body());
    const auto c_bound = p_degree_bounds(f.body());
    const auto as = multi_indices_below(a_bound);
    const auto cs = multi_indices_below(c_bound);
    for (const auto &a : as) {
        for (const auto &c : cs) {
            if (only_order >= 0 && total(a) + total(c) != only_order) {
                continue;
            }
            out.push_back({a, c});
        }
    }
    return out;
}

// (d_q^a d_p^c f) (d_p^a d_q^c g)
gaussian_observable slot_product(const gaussian_observable &f, const gaussian_observable &g, const slot &s)
{
    auto fd = f.derivative(s.a, s.c);
    if (fd.is_zero()) {
        return gaussian_observable(f.dim());
    }
    auto gd = g.derivative(s.c, s.a);
    if (gd.is_zero()) {
        return gaussian_observable(f.dim());
    }
    return fd * gd;
}

template <bool Parallel>
gaussian_observable star_impl(const gaussian_observable &f, const gaussian_observable &g)
{
    check_dims(f, g);
    const auto slots = expansion_slots(f, g, -1);
    auto body = [&](std::size_t idx) {
        const auto &s = slots[idx];
        const int b = total(s.a) + total(s.c);
        auto prod = slot_product(f, g, s);
        if (prod.is_zero()) {
            return prod;
        }
        // (i/2)^b (-1)^|c| / (a! c!)
        mpz_class two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(b));
        rational w = rational(1) / (multi_factorial(s.a) * multi_factorial(s.c) * rational(two_pow));
        if (total(s.c) % 2) {
            w = -w;
        }
        return (prod * (scalar::i_pow(b) * scalar(w))).shift_lambda(b);
    };
    gaussian_observable zero(f.dim());
    if constexpr (Parallel) {
        return kernels::sum_parallel(slots.size(), body, zero);
    } else {
        return kernels::sum_serial(slots.size(), body, zero);
    }
}

} // namespace

gaussian_observable bidiff_M(const gaussian_observable &f, const gaussian_observable &g, unsigned b)
{
    check_dims(f, g);
    gaussian_observable r(f.dim());
    const rational bfac = factorial(b);
    for (const auto &s : expansion_slots(f, g, static_cast<int>(b))) {
        auto prod = slot_product(f, g, s);
        if (prod.is_zero()) {
            continue;
        }
        rational w = bfac / (multi_factorial(s.a) * multi_factorial(s.c));
        if (total(s.c) % 2) {
            w = -w;
        }
        r += prod * scalar(w);
    }
    return r;
}

gaussian_observable star_serial(const gaussian_observable &f, const gaussian_observable &g)
{
    return star_impl<false>(f, g);
}

gaussian_observable star_parallel(const gaussian_observable &f, const gaussian_observable &g)
{
    return star_impl<true>(f, g);
}

gaussian_observable star(const gaussian_observable &f, const gaussian_observable &g)
{
    const std::size_t work = f.body().size() * g.body().size();
    if (work >= kernels::parallel_threshold && omp_get_max_threads() > 1) {
        return star_parallel(f, g);
    }
    return star_serial(f, g);
}

gaussian_observable star_commutator(const gaussian_observable &f, const gaussian_observable &g)
{
    return star(f, g) - star(g, f);
}

gaussian_observable mixed_laplacian(const gaussian_observable &f)
{
    gaussian_observable r(f.dim());
    for (unsigned k = 0; k < f.dim(); ++k) {
        r += f.dp(k).dq(k);
    }
    return r;
}

gaussian_observable s_map(const gaussian_observable &f, smap_direction dir)
{
    // (-+ i/2)^m / m! accumulated incrementally.
    const scalar step = dir == smap_direction::forward ? scalar(rational(0), rational(-1, 2))
                                                       : scalar(rational(0), rational(1, 2));
    gaussian_observable r = f;
    gaussian_observable power = f;
    scalar w(1);
    for (unsigned m = 1; ; ++m) {
        power = mixed_laplacian(power);
        if (power.is_zero()) {
            break;
        }
        w = w * step / scalar(static_cast<long>(m));
        r += (power * w).shift_lambda(static_cast<int>(m));
    }
    return r;
}

} // namespace starquant

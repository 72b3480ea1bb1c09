#ifndef STARQUANT_WEYL_STAR_HPP
#define STARQUANT_WEYL_STAR_HPP

#include <starquant/gaussian.hpp>

namespace starquant
{

// M_b(f, g) = (d_{q^k} d_{p'_k} - d_{p_k} d_{q'^k})^b (f(q,p) g(q',p')) on the
// diagonal. M_0 is the pointwise product and M_1 the Poisson bracket.
gaussian_observable bidiff_M(const gaussian_observable &f, const gaussian_observable &g, unsigned b);

inline gaussian_observable poisson_bracket(const gaussian_observable &f, const gaussian_observable &g)
{
    return bidiff_M(f, g, 1);
}

// Weyl product f * g = sum_b (1/b!) (i lambda / 2)^b M_b(f, g). The sum is
// finite because every M_b term differentiates both factors in p.
gaussian_observable star(const gaussian_observable &f, const gaussian_observable &g);
gaussian_observable star_serial(const gaussian_observable &f, const gaussian_observable &g);
gaussian_observable star_parallel(const gaussian_observable &f, const gaussian_observable &g);

// f * g - g * f
gaussian_observable star_commutator(const gaussian_observable &f, const gaussian_observable &g);

// Laplacian-type operator sum_k d^2 / dq^k dp_k.
gaussian_observable mixed_laplacian(const gaussian_observable &f);

enum class smap_direction { forward, backward };

// forward: exp(-(i lambda/2) Delta); backward: exp(+(i lambda/2) Delta), its
// inverse and complex-conjugate map.
gaussian_observable s_map(const gaussian_observable &f, smap_direction dir = smap_direction::forward);

// Per-coordinate maximal p-exponent of the body; -1 entries for the zero
// observable.
std::vector<int> p_degree_bounds(const phase_polynomial &f);

} // namespace starquant

#endif

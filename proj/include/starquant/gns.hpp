#ifndef STARQUANT_GNS_HPP
#define STARQUANT_GNS_HPP

#include <vector>

#include <starquant/gaussian.hpp>
#include <starquant/integral_value.hpp>
#include <starquant/schrodinger_operator.hpp>

namespace starquant
{

// Integral of the zero-section restriction over R^n, evaluated exactly by
// Gaussian moments. Throws precondition_error("NonIntegrable") when the
// restriction is a nonzero polynomial without envelope.
integral_value omega0(const gaussian_observable &f);

// omega0(conj(f) * g).
integral_value inner0(const gaussian_observable &f, const gaussian_observable &g);

// Factorised route: integral of (i* Sbar conj(f)) (i* S g). Shares no code
// path with the star product, so it checks inner0 independently.
integral_value inner0_factorized(const gaussian_observable &f, const gaussian_observable &g);

// f lies in the Gel'fand ideal of omega0 iff i* S f == 0.
bool gelfand_member0(const gaussian_observable &f);

// Returns g_1..g_n with f = sum_k g_k * p_k (star product). Peels the
// highest p-degree term each step; throws precondition_error("NotInIdeal")
// for non-members.
std::vector<gaussian_observable> momenta_decompose(const gaussian_observable &f);

// Canonical representative in H_0 = functions of q: i* S f.
gaussian_observable project_H0(const gaussian_observable &f);

// Zero-section GNS representation as a differential operator:
//   pi0(f) = sum_gamma (1/gamma!) (lambda/i)^|gamma| i*(d_p^gamma S f) d_q^gamma
schrodinger_operator pi0(const gaussian_observable &f);

// Average over all distinct orderings of the operator word with alpha[k]
// copies of q^k and beta[k] copies of -i lambda d/dq^k. At most 8 factors.
schrodinger_operator weyl_symmetrize_oracle(const std::vector<int> &alpha, const std::vector<int> &beta);

inline constexpr int weyl_oracle_max_factors = 8;

} // namespace starquant

#endif

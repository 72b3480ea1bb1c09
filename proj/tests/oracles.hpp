#ifndef STARQUANT_TEST_ORACLES_HPP
#define STARQUANT_TEST_ORACLES_HPP

// Independent reference computations. None of these go through the
// multinomial expansion or the nilpotent-series evolution used by the
// library.

#include <functional>
#include <vector>

#include <starquant/gaussian.hpp>
#include <starquant/lagrangian.hpp>
#include <starquant/weyl_star.hpp>

namespace sq_test
{

using namespace starquant;

// M_b by expanding the b-fold power of (d_q (x) d_p' - d_p (x) d_q') as
// ordered words over the 2n elementary bidifferential operators.
inline gaussian_observable bidiff_by_words(const gaussian_observable &f, const gaussian_observable &g, unsigned b)
{
    const unsigned n = f.dim();
    gaussian_observable total(n);
    std::vector<unsigned> word(b, 0);
    const unsigned letters = 2 * n;
    while (true) {
        gaussian_observable left = f;
        gaussian_observable right = g;
        bool negative = false;
        for (unsigned w : word) {
            const unsigned k = w % n;
            if (w < n) {
                left = left.dq(k);
                right = right.dp(k);
            } else {
                left = left.dp(k);
                right = right.dq(k);
                negative = !negative;
            }
        }
        auto prod = left * right;
        total += negative ? -prod : prod;
        // next word
        unsigned pos = 0;
        while (pos < b && ++word[pos] == letters) {
            word[pos] = 0;
            ++pos;
        }
        if (pos == b) {
            break;
        }
    }
    return total;
}

// t-polynomial of observables: sum_m t^m c[m].
using t_polynomial = std::vector<gaussian_observable>;

inline gaussian_observable evaluate_at(const t_polynomial &p, const rational &t, unsigned n)
{
    gaussian_observable r(n);
    rational tp(1);
    for (const auto &c : p) {
        r += c * scalar(tp);
        tp *= t;
    }
    return r;
}

// Picard iteration F <- f + int_0^t (i/lambda)[S, F(s)]_* ds on
// t-polynomials, using the generic star commutator, iterated until the
// iterate stops changing.
inline t_polynomial picard_evolution(const gaussian_observable &f, const action_data &s, int max_iter = 64)
{
    const unsigned n = f.dim();
    const gaussian_observable S_obs(s.S());
    t_polynomial cur{f};
    for (int it = 0; it < max_iter; ++it) {
        t_polynomial next{f};
        for (std::size_t m = 0; m < cur.size(); ++m) {
            auto rhs = star_commutator(S_obs, cur[m]);
            rhs = (rhs * scalar::i()).shift_lambda(-1);
            if (next.size() < m + 2) {
                next.resize(m + 2, gaussian_observable(n));
            }
            next[m + 1] += rhs * scalar(rational(1) / rational(static_cast<long>(m + 1)));
        }
        while (next.size() > 1 && next.back().is_zero()) {
            next.pop_back();
        }
        bool same = next.size() == cur.size();
        for (std::size_t m = 0; same && m < cur.size(); ++m) {
            same = next[m] == cur[m];
        }
        if (same) {
            return cur;
        }
        cur = std::move(next);
    }
    throw std::runtime_error("Picard iteration did not reach a fixed point");
}

// Composite Simpson over [-L, L] with many panels; numeric check of the
// exact Gaussian moment formula.
inline double simpson(const std::function<double(double)> &f, double lo, double hi, int panels)
{
    const double h = (hi - lo) / panels;
    double acc = f(lo) + f(hi);
    for (int i = 1; i < panels; ++i) {
        acc += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
    }
    return acc * h / 3.0;
}

} // namespace sq_test

#endif

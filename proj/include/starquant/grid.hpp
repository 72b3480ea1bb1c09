#ifndef STARQUANT_GRID_HPP
#define STARQUANT_GRID_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <starquant/phase_polynomial.hpp>

namespace starquant
{

inline constexpr std::size_t min_grid_samples = 16;
inline constexpr std::size_t default_grid_pad = 4;

// Complex samples on a uniform grid over [a, b] with `pad` ghost samples on
// each side. Sample i sits at a + (i - pad) h, h = (b - a) / (n - 1).
class grid_function_1d
{
public:
    // Throws precondition_error("GridTooCoarse") for n < 16.
    grid_function_1d(double a, double b, std::size_t n, std::size_t pad = default_grid_pad);
    grid_function_1d(double a, double b, std::size_t n, std::size_t pad, std::vector<std::complex<double>> values);

    static grid_function_1d sample(double a, double b, std::size_t n, std::size_t pad,
                                   const std::function<std::complex<double>(double)> &f);

    double a() const
    {
        return m_a;
    }
    double b() const
    {
        return m_b;
    }
    std::size_t n() const
    {
        return m_n;
    }
    std::size_t pad() const
    {
        return m_pad;
    }
    double h() const
    {
        return (m_b - m_a) / static_cast<double>(m_n - 1);
    }
    double x(std::size_t i) const
    {
        return m_a + (static_cast<double>(i) - static_cast<double>(m_pad)) * h();
    }
    std::size_t size() const
    {
        return m_values.size();
    }
    std::size_t interior_begin() const
    {
        return m_pad;
    }
    std::size_t interior_end() const
    {
        return m_pad + m_n;
    }

    const std::vector<std::complex<double>> &values() const
    {
        return m_values;
    }
    std::vector<std::complex<double>> &values()
    {
        return m_values;
    }
    std::complex<double> &operator[](std::size_t i)
    {
        return m_values[i];
    }
    const std::complex<double> &operator[](std::size_t i) const
    {
        return m_values[i];
    }

    bool same_grid(const grid_function_1d &o) const;

    // Fourth-order finite-difference derivative on the full padded grid.
    grid_function_1d derivative(unsigned order) const;

    // Max |f| over interior samples.
    double interior_max_abs() const;

private:
    double m_a;
    double m_b;
    std::size_t m_n;
    std::size_t m_pad;
    std::vector<std::complex<double>> m_values;
};

// Value of a one-dimensional, lambda-free base polynomial at q.
std::complex<double> evaluate_base(const phase_polynomial &f, double q);

// Reads whitespace-separated (x, y) pairs; '#' starts a comment line.
void read_two_column(const std::string &path, std::vector<double> &xs, std::vector<double> &ys);

// Resamples tabulated data (strictly increasing xs) onto the padded grid by
// local four-point cubic interpolation. Throws precondition_error
// ("InterpolationRange") if the padded grid leaves the tabulated range.
grid_function_1d resample_cubic(const std::vector<double> &xs, const std::vector<double> &ys, double a, double b,
                                std::size_t n, std::size_t pad = default_grid_pad);

} // namespace starquant

#endif

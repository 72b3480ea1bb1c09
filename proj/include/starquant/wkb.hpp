#ifndef STARQUANT_WKB_HPP
#define STARQUANT_WKB_HPP

#include <complex>
#include <optional>
#include <vector>

#include <starquant/errors.hpp>
#include <starquant/grid.hpp>
#include <starquant/lagrangian.hpp>
#include <starquant/schrodinger_operator.hpp>

namespace starquant
{

class hamilton_jacobi_violated : public precondition_error
{
public:
    explicit hamilton_jacobi_violated(phase_polynomial residual)
        : precondition_error("HamiltonJacobiViolated", "H(q, dS(q)) - E is not identically zero"),
          m_residual(std::move(residual))
    {
    }

    const phase_polynomial &residual() const
    {
        return m_residual;
    }

private:
    phase_polynomial m_residual;
};

// H(q, dS(q)) - E as a base polynomial.
phase_polynomial hj_residual(const phase_polynomial &H, const action_data &s, const rational &E);

// Operators D_0..D_R with pi0(A_{-1} H) - E = sum_j lambda^j D_j. The
// eigenproblem reads sum_{j <= m} D_j phi_{m-j} = 0 at lambda-order m.
struct transport_hierarchy {
    std::vector<schrodinger_operator> orders;
    phase_polynomial hamiltonian;
    action_data action;
    rational energy;
};

// Throws hamilton_jacobi_violated when the residual is nonzero.
transport_hierarchy eigenproblem_hierarchy(const phase_polynomial &H, const action_data &s, const rational &E,
                                           int max_order);

// lhs phi_r = rhs phi_{r-1} with lhs = Lap(S) + 2 grad S . grad and
// rhs = i Lap. For r == 0 the right side acts on phi_{-1} = 0.
struct transport_equation {
    schrodinger_operator lhs;
    schrodinger_operator rhs;
    bool homogeneous = false;
};

transport_equation physical_transport_equation(const action_data &s, int r);

using wkb_solution = std::vector<grid_function_1d>;

// One order of the 1-D transport hierarchy by integrating factor:
//   phi_r = (S')^{-1/2} [ C + (i/2) int_a^q (S')^{-1/2} phi''_{r-1} ds ],
// with phi_r(a) = boundary. Throws precondition_error("TurningPointError")
// if S' <= 0 at any sample, including ghosts.
grid_function_1d solve_transport_1d(const grid_function_1d &sprime, const grid_function_1d *phi_prev,
                                    std::complex<double> boundary);

// phi_0 .. phi_R; phi_0(a) = boundary, phi_r(a) = higher_boundary for r >= 1.
wkb_solution solve_wkb_1d(const grid_function_1d &sprime, int max_order, std::complex<double> boundary,
                          std::complex<double> higher_boundary = 0.0);

struct residual_report {
    std::vector<double> residuals;
    double tolerance = 0;
    bool pass = false;
};

// Applies a lambda-free one-dimensional operator to grid samples.
grid_function_1d apply_on_grid(const schrodinger_operator &op, const grid_function_1d &phi);

// For transport order r = 0..R: max interior |sum_j D_j phi_{r+1-j}|.
residual_report verify_eigen_residual(const transport_hierarchy &hier, const wkb_solution &sol, double tol);

// Same check against the physical transport equation with sampled S'.
residual_report verify_transport_residual(const grid_function_1d &sprime, const wkb_solution &sol, double tol);

} // namespace starquant

#endif

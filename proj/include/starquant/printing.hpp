#ifndef STARQUANT_PRINTING_HPP
#define STARQUANT_PRINTING_HPP

#include <string>

#include <starquant/gaussian.hpp>
#include <starquant/integral_value.hpp>
#include <starquant/schrodinger_operator.hpp>

namespace starquant
{

// Text in the parser's grammar; parse_polynomial(to_text(f), f.dim()) == f.
std::string to_text(const phase_polynomial &f);
// Appends "*exp(-c*|q|^2)" for a nonzero rate.
std::string to_text(const gaussian_observable &f);
// Terms "coeff*d(q1^a1 ...)" joined by " + ".
std::string to_text(const schrodinger_operator &op);
std::string to_text(const integral_value &v);

} // namespace starquant

#endif

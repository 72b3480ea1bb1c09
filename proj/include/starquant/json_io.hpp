#ifndef STARQUANT_JSON_IO_HPP
#define STARQUANT_JSON_IO_HPP

#include <json.hpp>

#include <starquant/gaussian.hpp>
#include <starquant/grid.hpp>
#include <starquant/integral_value.hpp>
#include <starquant/schrodinger_operator.hpp>
#include <starquant/wkb.hpp>

namespace starquant
{

// Exact rationals are serialised as "num/den" strings; keys are emitted in
// sorted order, so identical values always produce identical bytes.
//
//   observable term  {"l": k, "q": [..], "p": [..], "re": "a/b", "im": "c/d"}
//   integral value   {"unit": {"c": "a/b", "n": n}, "series": {"k": {"re", "im"}}}
//   operator term    {"l": k, "d": [..], "coeff": [{"q": [..], "re", "im"}]}
//   grid function    {"a", "b", "n", "pad", "re": [..], "im": [..]}

nlohmann::json to_json(const phase_polynomial &f);
nlohmann::json to_json(const gaussian_observable &f);
nlohmann::json to_json(const integral_value &v);
nlohmann::json to_json(const schrodinger_operator &op);
nlohmann::json to_json(const grid_function_1d &g);
nlohmann::json to_json(const transport_hierarchy &h);
nlohmann::json to_json(const residual_report &r);

gaussian_observable observable_from_json(const nlohmann::json &j);
grid_function_1d grid_from_json(const nlohmann::json &j);

} // namespace starquant

#endif

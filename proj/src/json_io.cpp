#include <starquant/json_io.hpp>

#include <map>

namespace starquant
{

using nlohmann::json;

namespace
{

std::vector<int> slice(const std::vector<int> &v, std::size_t from, std::size_t count)
{
    return {v.begin() + static_cast<long>(from), v.begin() + static_cast<long>(from + count)};
}

json scalar_fields(json j, const scalar &c)
{
    j["re"] = format_rational(c.re());
    j["im"] = format_rational(c.im());
    return j;
}

} // namespace

json to_json(const phase_polynomial &f)
{
    json terms = json::array();
    const unsigned n = f.dim();
    for (const auto &[m, c] : f.terms()) {
        terms.push_back(scalar_fields({{"l", m.lam}, {"q", slice(m.exps, 0, n)}, {"p", slice(m.exps, n, n)}}, c));
    }
    return terms;
}

json to_json(const gaussian_observable &f)
{
    return {{"dim", f.dim()}, {"rate", format_rational(f.rate())}, {"terms", to_json(f.body())}};
}

json to_json(const integral_value &v)
{
    json series = json::object();
    for (const auto &[k, c] : v.coeff().terms()) {
        series[std::to_string(k)] = scalar_fields(json::object(), c);
    }
    return {{"unit", {{"c", format_rational(v.rate())}, {"n", v.dim()}}}, {"series", series}};
}

json to_json(const schrodinger_operator &op)
{
    // Regroup by (lambda order, derivative multi-index).
    std::map<std::pair<int, std::vector<int>>, json> grouped;
    const unsigned n = op.dim();
    for (const auto &[gamma, coeff] : op.terms()) {
        for (const auto &[m, c] : coeff.terms()) {
            auto &slot = grouped[{m.lam, gamma}];
            if (slot.is_null()) {
                slot = json::array();
            }
            slot.push_back(scalar_fields({{"q", slice(m.exps, 0, n)}}, c));
        }
    }
    json terms = json::array();
    for (auto &[key, coeff] : grouped) {
        terms.push_back({{"l", key.first}, {"d", key.second}, {"coeff", std::move(coeff)}});
    }
    return {{"dim", n}, {"rate", format_rational(op.rate())}, {"terms", terms}};
}

json to_json(const grid_function_1d &g)
{
    json re = json::array();
    json im = json::array();
    for (const auto &v : g.values()) {
        re.push_back(v.real());
        im.push_back(v.imag());
    }
    return {{"a", g.a()}, {"b", g.b()}, {"n", g.n()}, {"pad", g.pad()}, {"re", re}, {"im", im}};
}

json to_json(const transport_hierarchy &h)
{
    json orders = json::array();
    for (const auto &d : h.orders) {
        orders.push_back(to_json(d));
    }
    return {{"hamiltonian", to_json(h.hamiltonian)},
            {"action", to_json(h.action.S())},
            {"energy", format_rational(h.energy)},
            {"orders", orders}};
}

json to_json(const residual_report &r)
{
    return {{"residuals", r.residuals}, {"tol", r.tolerance}, {"pass", r.pass}};
}

gaussian_observable observable_from_json(const json &j)
{
    const unsigned n = j.at("dim").get<unsigned>();
    phase_polynomial body(n);
    for (const auto &t : j.at("terms")) {
        auto q = t.at("q").get<std::vector<int>>();
        auto p = t.at("p").get<std::vector<int>>();
        monomial m{t.at("l").get<int>(), q};
        m.exps.insert(m.exps.end(), p.begin(), p.end());
        if (q.size() != n || p.size() != n) {
            throw std::invalid_argument("observable term has wrong multi-index length");
        }
        body.add_term(m, scalar(parse_rational(t.at("re").get<std::string>()),
                                parse_rational(t.at("im").get<std::string>())));
    }
    return {body, parse_rational(j.at("rate").get<std::string>())};
}

grid_function_1d grid_from_json(const json &j)
{
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != im.size()) {
        throw std::invalid_argument("grid function re/im arrays differ in length");
    }
    std::vector<std::complex<double>> values(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
        values[i] = {re[i], im[i]};
    }
    return {j.at("a").get<double>(), j.at("b").get<double>(), j.at("n").get<std::size_t>(),
            j.at("pad").get<std::size_t>(), std::move(values)};
}

} // namespace starquant

#include <doctest.h>

#include <starquant/integral_value.hpp>
#include <starquant/laurent.hpp>

#include "test_helpers.hpp"

using namespace starquant;
using sq_test::obs;
using sq_test::poly;

namespace
{

laurent_series<rational> real_series(std::initializer_list<std::pair<int, rational>> terms)
{
    laurent_series<rational> s;
    for (const auto &[k, c] : terms) {
        s.add_term(k, c);
    }
    return s;
}

laurent_series<scalar> random_series(sq_test::random_source &rs, int lo, int hi)
{
    laurent_series<scalar> s;
    const int n = rs.uniform(1, 3);
    for (int t = 0; t < n; ++t) {
        s.add_term(rs.uniform(lo, hi), rs.coefficient());
    }
    return s;
}

} // namespace

TEST_CASE("laurent positivity")
{
    CHECK(laurent_is_positive(real_series({{-1, rational(2)}, {0, rational(3)}})));
    CHECK_FALSE(laurent_is_positive(real_series({{2, rational(-1, 2)}, {3, rational(7)}})));
    CHECK_FALSE(laurent_is_positive(laurent_series<rational>{}));
}

TEST_CASE("laurent positive cone is a total order closed under + and *")
{
    sq_test::random_source rs(11);
    for (int trial = 0; trial < 200; ++trial) {
        laurent_series<rational> a, b;
        for (int t = 0; t < 3; ++t) {
            a.add_term(rs.uniform(-2, 2), rational(rs.uniform(-3, 3), rs.uniform(1, 3)));
            b.add_term(rs.uniform(-2, 2), rational(rs.uniform(-3, 3), rs.uniform(1, 3)));
        }
        const int count = int(laurent_is_positive(a)) + int(a.is_zero()) + int(laurent_is_positive(-a));
        CHECK(count == 1);
        if (laurent_is_positive(a) && laurent_is_positive(b)) {
            CHECK(laurent_is_positive(a + b));
            CHECK(laurent_is_positive(a * b));
        }
    }
}

TEST_CASE("laurent series field axioms")
{
    sq_test::random_source rs(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_series(rs, -1, 2);
        const auto b = random_series(rs, -2, 1);
        const auto c = random_series(rs, 0, 2);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        const int N = 6;
        const auto inv = a.inverse(N);
        CHECK((a * inv).truncated(N) == laurent_series<scalar>::monomial(0, scalar(1)));
    }
}

TEST_CASE("laurent inverse of a series with negative principal part")
{
    // (lambda^-1 + 1)^-1 = lambda - lambda^2 + lambda^3 - ...
    laurent_series<rational> s;
    s.add_term(-1, rational(1));
    s.add_term(0, rational(1));
    const auto inv = s.inverse(3);
    CHECK(inv.coeff(1) == 1);
    CHECK(inv.coeff(2) == -1);
    CHECK(inv.coeff(3) == 1);
    CHECK(inv.coeff(4) == -1);
    CHECK_FALSE(inv.min_order().value() < 1);
}

TEST_CASE("polynomial arithmetic")
{
    CHECK(poly("q") * poly("p") == poly("q*p"));
    CHECK((poly("q^2") + poly("-q^2")).is_zero());
    // (q + i lambda)(q - i lambda) = q^2 + lambda^2
    CHECK(poly("q + i*lambda") * poly("q - i*lambda") == poly("q^2 + lambda^2"));
    CHECK(poly("q") * scalar(rational(1, 2)) == poly("q/2"));
    CHECK_THROWS_AS(poly("q") + poly("q1", 2), mismatch_error);
}

TEST_CASE("polynomial product is commutative and conjugation is multiplicative")
{
    sq_test::random_source rs(3);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = static_cast<unsigned>(rs.uniform(1, 2));
        const auto f = rs.polynomial(n, 4, 4, -1, 1);
        const auto g = rs.polynomial(n, 4, 4, -1, 1);
        CHECK(f * g == g * f);
        CHECK((f * g).conjugate() == f.conjugate() * g.conjugate());
        CHECK(f.conjugate().conjugate() == f);
    }
}

TEST_CASE("canonical term order is (lambda, alpha, beta)")
{
    const auto f = poly("p + q + lambda + lambda^-1*q^2 + 1");
    std::vector<int> lams;
    for (const auto &[m, c] : f.terms()) {
        lams.push_back(m.lam);
    }
    CHECK(lams == std::vector<int>{-1, 0, 0, 0, 1});
    CHECK(to_text(f) == "lambda^-1*q^2 + 1 + p + q + lambda");
}

TEST_CASE("differentiate with and without envelope")
{
    CHECK(obs("q*p").dp(0) == obs("q"));
    // d/dq e^{-q^2} = -2 q e^{-q^2}
    CHECK(obs("1", 1, 1).dq(0) == obs("-2*q", 1, 1));
    // d/dq (p e^{-q^2}) = -2 q p e^{-q^2}
    CHECK(obs("p", 1, 1).dq(0) == obs("-2*q*p", 1, 1));
}

TEST_CASE("mixed partial derivatives commute")
{
    sq_test::random_source rs(17);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = static_cast<unsigned>(rs.uniform(1, 2));
        const auto f = rs.observable(n, 4, 4, rs.uniform(0, 2), -1, 1);
        for (unsigned k = 0; k < n; ++k) {
            for (unsigned l = 0; l < n; ++l) {
                CHECK(f.dq(k).dp(l) == f.dp(l).dq(k));
            }
        }
    }
}

TEST_CASE("substitute momenta")
{
    const std::vector<phase_polynomial> minus_q{poly("-q")};
    CHECK(obs("p").substitute_momenta(minus_q) == obs("p - q"));
    const std::vector<phase_polynomial> sprime{poly("q")};
    CHECK(obs("p^2").substitute_momenta(sprime) == obs("p^2 + 2*q*p + q^2"));
    CHECK(obs("q^3").substitute_momenta(sprime) == obs("q^3"));
    const std::vector<phase_polynomial> bad{poly("p")};
    CHECK_THROWS_AS(obs("p").substitute_momenta(bad), precondition_error);
}

TEST_CASE("restrict to the zero section")
{
    CHECK(obs("q*p + q^2").restrict_zero_section() == obs("q^2"));
    CHECK(obs("p1*p2", 2).restrict_zero_section().is_zero());
    CHECK(obs("q*p - i*lambda/2").restrict_zero_section() == obs("-i*lambda/2"));
    // envelope untouched
    CHECK(obs("q + p", 1, 3).restrict_zero_section().rate() == 3);
}

TEST_CASE("conjugation")
{
    CHECK(obs("i*q").conjugate() == obs("-i*q"));
    CHECK(obs("q + lambda*p").conjugate() == obs("q + lambda*p"));
    CHECK(obs("(2 + 3*i)*lambda^-1*p").conjugate() == obs("(2 - 3*i)*lambda^-1*p"));
}

TEST_CASE("observable sums need matching envelopes")
{
    CHECK_THROWS_AS(obs("q", 1, 1) + obs("q", 1, 2), mismatch_error);
    CHECK(obs("q", 1, 1) + obs("0", 1, 2) == obs("q", 1, 1));
    CHECK((obs("q", 1, 1) * obs("p", 1, 2)).rate() == 3);
}

TEST_CASE("integral values")
{
    laurent_series<scalar> s;
    s.add_term(2, scalar(rational(1, 4)));
    integral_value v(s, rational(2), 1);
    CHECK(v.is_positive());
    CHECK_FALSE(integral_value(-s, rational(2), 1).is_positive());
    CHECK(integral_value({}, rational(1), 1) == integral_value({}, rational(5), 2));
    CHECK_FALSE(v == integral_value(s, rational(1), 1));
    CHECK_THROWS(v += integral_value(s, rational(1), 1));
}

#include "hermsph/errors.hpp"
#include "hermsph/padic_oracle.hpp"
#include "hermsph/siegel.hpp"
#include "hermsph/spherical.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace hermsph;

namespace {

OracleConfig cfg(int p, int N, bool full = false)
{
    OracleConfig c;
    c.p = p;
    c.N = N;
    c.enumerate_alpha = full;
    return c;
}

} // namespace

TEST_CASE("config resolution")
{
    auto c = cfg(3, 2).resolved();
    CHECK(c.epsilon == 2);
    CHECK(cfg(7, 2).resolved().epsilon == 3);
    CHECK(c.budget == 10'000'000);
    CHECK_THROWS_AS(cfg(2, 2).resolved(), InputError);
    CHECK_THROWS_AS(cfg(9, 2).resolved(), InputError);
    CHECK_THROWS_AS(cfg(3, 0).resolved(), InputError);
    auto bad = cfg(5, 2);
    bad.epsilon = 4;
    CHECK_THROWS_AS(bad.resolved(), InputError);
}

TEST_CASE("quotient ring arithmetic")
{
    int64_t m = 27, eps = 2;
    for (int64_t a = 0; a < 27; a += 4)
        for (int64_t b = 0; b < 27; b += 5)
            for (int64_t c = 1; c < 27; c += 7)
                for (int64_t d = 0; d < 27; d += 3) {
                    QuotientRingElem x(a, b, m, eps), y(c, d, m, eps);
                    CHECK((x * y).norm() == (x.norm() * y.norm()) % m);
                    int vx = x.valuation(3, 3), vy = y.valuation(3, 3);
                    if (vx + vy < 3) CHECK((x * y).valuation(3, 3) == vx + vy);
                    if (x.is_unit(3)) CHECK(x * x.inverse(3) == QuotientRingElem(1, 0, m, eps));
                }
    CHECK_THROWS_AS(QuotientRingElem(3, 6, m, eps).inverse(3), AlgebraError);
}

TEST_CASE("cell measure")
{
    for (bool full : {false, true}) {
        auto cells = enumerate_k1_cells(cfg(3, 1, full));
        CHECK(static_cast<int64_t>(cells.size()) == k1_cell_count(cfg(3, 1, full)));
        BigRat total = 0, k12 = 0;
        for (const auto& c : cells) {
            CHECK(c.weight > 0);
            total += c.weight;
            if (c.block == 2) k12 += c.weight;
        }
        CHECK(total == 1);
        CHECK(k12 == BigRat(1, 4));
    }
}

TEST_CASE("budget and precision guards")
{
    auto c = cfg(3, 4);
    c.budget = 100;
    CHECK_THROWS_AS(oracle_omega_n1(c, 0, 0), BudgetError);
    CHECK_THROWS_AS(oracle_omega_n1(cfg(3, 2), 2, 0), InputError);
    CHECK_THROWS_AS(oracle_omega_n1(cfg(3, 4), 2, 2), InputError);
    setenv("HS_BUDGET", "50", 1);
    CHECK_THROWS_AS(oracle_omega_n1(cfg(3, 2), 0, 0), BudgetError);
    setenv("HS_BUDGET", "x", 1);
    CHECK_THROWS_AS(cfg(3, 2).resolved(), InputError);
    unsetenv("HS_BUDGET");
}

TEST_CASE("alpha integrates out")
{
    for (int lambda = 0; lambda <= 1; ++lambda)
        CHECK(oracle_omega_n1(cfg(3, lambda + 2, true), lambda, 0).equals(oracle_omega_n1(cfg(3, lambda + 2), lambda, 0)));
}

TEST_CASE("omega oracle matches the n=1 closed form")
{
    for (int p : {3, 5})
        for (int lambda = 0; lambda <= 2; ++lambda)
            for (int e = 0; 2 * e <= lambda; ++e) {
                int N = lambda - 2 * e + 2;
                CAPTURE(p);
                CAPTURE(lambda);
                CAPTURE(e);
                auto got = oracle_omega_n1(cfg(p, N), lambda, e);
                CHECK(got.equals(specialize_q(omega_n1_closed(lambda, e, 0), p)));
                if (k1_cell_count(cfg(p, N + 1)) <= 10'000'000)
                    CHECK(got.equals(oracle_omega_n1(cfg(p, N + 1), lambda, e)));
            }
}

TEST_CASE("character sums")
{
    CHECK(siegel_shell_sum(3, 2, 0) == 1);
    CHECK(siegel_shell_sum(3, 2, 2) == 6);
    CHECK(siegel_shell_sum(3, 2, 3) == -9);
    CHECK(siegel_shell_sum(5, 1, 2) == -5);
    for (int p : {3, 5})
        for (int lambda = 0; lambda <= 2; ++lambda) {
            CHECK(siegel_shell_sum(p, lambda, lambda + 2) == 0);
            CHECK(siegel_shell_sum(p, lambda, lambda + 3) == 0);
        }
    auto z = CyclotomicInt::zeta_power(3, 2, 7);
    CHECK_FALSE(z.is_rational());
    CHECK(z.degree() == 6);
}

TEST_CASE("Siegel oracle matches the shell sum formula")
{
    for (int p : {3, 5})
        for (int lambda = 0; lambda <= 2; ++lambda)
            CHECK(oracle_siegel_n1(cfg(p, 1), lambda).equals(specialize_q(siegel_b_n1(lambda), p)));
    CHECK_THROWS_AS(oracle_siegel_n1(cfg(3, 1), 4), InputError);
}

TEST_CASE("specialize_q")
{
    ExactScalar c = (ExactScalar(1) + ExactScalar::u_pow(1)) / (ExactScalar(2) - ExactScalar::u_pow(1));
    auto f = FactorizedRatFunc::monomial(Monomial{1}, c);
    // (1 + r)/(2 - r) at r^2 = 3 is 5 + 3r
    auto want = FactorizedRatFunc::monomial(Monomial{1}, ExactScalar(UPoly{5, 3}, UPoly{1}));
    CHECK(specialize_q(f, 3).equals(want));
}

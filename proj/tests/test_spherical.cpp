#include "hermsph/errors.hpp"
#include "hermsph/spherical.hpp"

#include <doctest.h>

using namespace hermsph;

namespace {

FactorizedRatFunc one(int n) { return FactorizedRatFunc::constant(n, ExactScalar(1)); }

// Value at q = q0 of a scalar that only involves even powers of u.
BigRat at_q(const ExactScalar& s, const BigRat& q0)
{
    auto ev = [&](const UPoly& p) {
        BigRat acc = 0, qp = 1;
        for (size_t k = 0; k < p.size(); ++k) {
            if (k % 2 == 0) {
                acc += p[k] * qp;
                qp *= q0;
            } else {
                REQUIRE(p[k] == 0);
            }
        }
        return acc;
    };
    return ev(s.num()) / ev(s.den());
}

std::vector<std::vector<int>> lambdas(int n, int e0, int top)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int hi) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int v = e0; v <= hi; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, top);
    return out;
}

// Y = q^s; value(s) -> value(-s)
FactorizedRatFunc flip(const FactorizedRatFunc& f)
{
    return f.substitute({1, {{1, 0, Monomial{-1}}}});
}

bool fe_holds(const SphericalValue& v)
{
    int n = v.input.n;
    for (int i = 0; i < n; ++i) {
        SimpleReflection r{i + 1 < n ? i + 1 : 0};
        WeylElem s = WeylElem::reflection(n, r);
        if (!gamma_factors(s, v.input.e0).times(s.act_on_poly(v.value)).equals(v.value)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("input validation")
{
    CHECK_THROWS_AS(SphericalInput({2, {1, 2}, 0}).validate(), InputError);
    CHECK_THROWS_AS(SphericalInput({2, {1, 0}, 1}).validate(), InputError);
    CHECK_THROWS_AS(SphericalInput({2, {1}, 0}).validate(), InputError);
    CHECK_THROWS_AS(omega_explicit({1, {0}, 1}), InputError);
    CHECK_NOTHROW(SphericalInput({3, {3, 1, 1}, 1}).validate());
}

TEST_CASE("gamma_z")
{
    LaurentPoly num(1, ExactScalar(1)), den(1, ExactScalar(1));
    num.add_term(Monomial{2}, -ExactScalar::q_pow(-1));
    den.add_term(Monomial{2}, ExactScalar(-1));
    CHECK(gamma_z(1).equals(FactorizedRatFunc(num) / FactorizedRatFunc(den)));
    // X_1 = u
    FactorizedRatFunc at_u = gamma_z(1).substitute({1, {{1, 1, Monomial{0}}}});
    CHECK(at_u.is_zero());
    for (int n = 1; n <= 4; ++n) CHECK(gamma_z(n).equals(gamma_z_pairs(n)));
}

TEST_CASE("q_const")
{
    CHECK(q_const(1) == ExactScalar(1) + ExactScalar::q_pow(-1));
    auto qm = [](int k) { return ExactScalar::q_pow(-k); };
    ExactScalar one_s(1);
    CHECK(q_const(2) == (one_s + qm(1)) * (one_s - qm(2)) * (one_s + qm(3)) * (one_s - qm(4)) /
                            ((one_s - qm(2)) * (one_s - qm(2))));
    CHECK(at_q(q_const(1), 3) == BigRat(4, 3));
}

TEST_CASE("f_factor examples")
{
    CHECK(f_factor(1, 0).equals(one(1)));
    CHECK(f_factor(1, 1).equals(FactorizedRatFunc::monomial(Monomial{1})));
    auto ratio = [](const Monomial& m) {
        return FactorizedRatFunc::binomial_ratio(m, ExactScalar(1), ExactScalar(1), m, -ExactScalar::q_pow(-1),
                                                 ExactScalar(1));
    };
    CHECK(f_factor(2, 0).equals(ratio(Monomial{1, -1}) * ratio(Monomial{1, 1})));
}

TEST_CASE("F(sigma z) = Gamma_sigma(z) F(z)")
{
    for (int n = 1; n <= 3; ++n)
        for (int e0 : {0, 1}) {
            FactorizedRatFunc F = f_factor(n, e0);
            for (const auto& s : enumerate_weyl(n)) CHECK(s.act_on_poly(F).equals(gamma_factors(s, e0).times(F)));
        }
}

TEST_CASE("omega_n1_closed examples and functional equation")
{
    CHECK(omega_n1_closed(0, 0, 0).equals(one(1)));
    // lambda = 1: -q^{-1/2} (Y^2 (1 - q^{-1} Y^{-2}) - Y^{-2} (1 - q^{-1} Y^2)) / ((1 + q^{-1})(Y - Y^{-1}))
    ExactScalar qi = ExactScalar::q_pow(-1);
    LaurentPoly num(1);
    num.add_term(Monomial{2}, ExactScalar(1));
    num.add_term(Monomial{0}, -qi);
    num.add_term(Monomial{-2}, ExactScalar(-1));
    num.add_term(Monomial{0}, qi);
    num = num.scaled(-ExactScalar::u_pow(-1) / (ExactScalar(1) + qi));
    LaurentPoly den = LaurentPoly::binomial(Monomial{1}, ExactScalar(1), ExactScalar(0));
    den.add_term(Monomial{-1}, ExactScalar(-1));
    CHECK(omega_n1_closed(1, 0, 0).equals(FactorizedRatFunc(num) / FactorizedRatFunc(den)));
    for (int e0 : {0, 1})
        for (int lam = e0; lam <= 5; ++lam)
            for (int e = -2; 2 * e <= lam - e0; ++e) {
                FactorizedRatFunc w = omega_n1_closed(lam, e, e0);
                CHECK(w.is_laurent());
                CHECK(w.equals(FactorizedRatFunc::monomial(Monomial{2 * e0}) * flip(w)));
            }
    CHECK_THROWS_AS(omega_n1_closed(1, 1, 0), InputError);
}

TEST_CASE("zeta_k1_closed examples and functional equation")
{
    CHECK(zeta_k1_closed(0, 0, 0, 0).equals(one(1)));
    CHECK(zeta_k1_closed(0, 1, 0, 0).equals(omega_n1_closed(1, 0, 0).scaled(-ExactScalar::u_pow(1))));
    for (int e0 : {0, 1})
        for (int lam = 0; lam <= 4; ++lam)
            for (int m : {0, 1, 3})
                for (int fpow : {0, 1, 2}) {
                    FactorizedRatFunc z = zeta_k1_closed(m, lam, fpow, e0);
                    CHECK(z.equals(FactorizedRatFunc::monomial(Monomial{2 * e0 - 2 * fpow}) * flip(z)));
                }
    CHECK_THROWS_AS(zeta_k1_closed(0, -1, 0, 0), InputError);
}

TEST_CASE("n = 1: explicit formula against the closed form")
{
    Substitution id = n1_identification();
    for (int e0 : {0, 1})
        for (int d = 0; d <= 3; ++d) {
            int lam = e0 + d;
            FactorizedRatFunc w = omega_explicit({1, {lam}, e0}).value.substitute(id);
            CHECK(w.equals(omega_n1_closed(lam, 0, e0)));
        }
    // The printed pairing sign already disagrees at lambda = 2.
    FactorizedRatFunc printed = omega_explicit({1, {2}, 0}, PairingSign::Printed).value.substitute(id);
    CHECK_FALSE(printed.equals(omega_n1_closed(2, 0, 0)));
}

TEST_CASE("functional equations, n <= 2")
{
    for (int n = 1; n <= 2; ++n)
        for (int e0 : {0, 1})
            for (const auto& lam : lambdas(n, e0, 3)) CHECK(fe_holds(omega_explicit({n, lam, e0})));
}

TEST_CASE("functional equations, n = 3 spot checks")
{
    CHECK(fe_holds(omega_explicit({3, {1, 0, 0}, 0})));
    CHECK(fe_holds(omega_explicit({3, {2, 1, 1}, 1})));
}

TEST_CASE("polynomial invariance examples")
{
    CHECK(check_polynomial_invariant(omega_explicit({1, {0}, 0})).pass);
    CHECK(check_polynomial_invariant(omega_explicit({2, {1, 1}, 0})).pass);
    SphericalValue v = omega_explicit({2, {1, 1}, 0});
    InvariantReport bare = check_polynomial_invariant(v, FactorProduct(2));
    CHECK_FALSE(bare.pass);
    CHECK(bare.detail.find("denominator") != std::string::npos);
}

TEST_CASE("polynomial invariance, n <= 2")
{
    for (int n = 1; n <= 2; ++n)
        for (int e0 : {0, 1})
            for (const auto& lam : lambdas(n, e0, 3)) {
                InvariantReport r = check_polynomial_invariant(omega_explicit({n, lam, e0}));
                CHECK_MESSAGE(r.pass, r.detail);
            }
}

TEST_CASE("S_n partial holomorphy")
{
    for (int n = 2; n <= 3; ++n) {
        auto sn = symmetric_subgroup(n);
        CHECK(sn.size() == (n == 2 ? 2u : 6u));
        for (const auto& lam : std::vector<std::vector<int>>{std::vector<int>(static_cast<size_t>(n), 1),
                                                               lambdas(n, 0, 2).back()}) {
            SphericalValue v = omega_explicit({n, lam, 0});
            FactorizedRatFunc P = f1_factor(n).times(v.value);
            for (const auto& [f, k] : P.den()) {
                auto ex = f.monomial().exps();
                bool diff = false;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (i != j && ex[i] == 1 && ex[j] == -1) diff = true;
                CHECK_MESSAGE(!diff, f.to_string());
            }
            for (const auto& s : sn) CHECK(s.act_on_poly(P).equals(P));
        }
    }
}

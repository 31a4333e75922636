#include "hermsph/errors.hpp"
#include "hermsph/gamma.hpp"

#include <doctest.h>

#include <random>

using namespace hermsph;

namespace {

ExactScalar qi() { return ExactScalar::q_pow(-1); }

FactorizedRatFunc one(int n) { return FactorizedRatFunc::constant(n, ExactScalar(1)); }

// (1 - q^{-1} X^m) / (X^m - q^{-1}) written out term by term.
FactorizedRatFunc short_factor(const Monomial& m)
{
    LaurentPoly num(m.nvars(), ExactScalar(1));
    num.add_term(m, -qi());
    LaurentPoly den(m, ExactScalar(1));
    den.add_term(Monomial(m.nvars()), -qi());
    return FactorizedRatFunc(num) / FactorizedRatFunc(den);
}

// Another reduced word: strip a uniformly random right descent each step.
Word random_reduced_word(const WeylElem& s, std::mt19937& rng)
{
    int n = s.rank();
    auto simples = simple_roots(n);
    Word rightmost_first;
    WeylElem cur = s;
    while (!cur.is_identity()) {
        std::vector<int> desc;
        for (size_t k = 0; k < simples.size(); ++k)
            if (!cur.act_on_root(simples[k]).is_positive()) desc.push_back(static_cast<int>(k));
        int k = desc[std::uniform_int_distribution<size_t>(0, desc.size() - 1)(rng)];
        SimpleReflection r{k + 1 < n ? k + 1 : 0};
        rightmost_first.push_back(r);
        cur = cur * WeylElem::reflection(n, r);
    }
    return {rightmost_first.rbegin(), rightmost_first.rend()};
}

} // namespace

TEST_CASE("f_alpha examples")
{
    CHECK(f_alpha(long_root(2, 1), 0).equals(one(2)));
    CHECK(f_alpha(long_root(2, 1), 1).equals(FactorizedRatFunc::monomial(Monomial{0, -2})));
    CHECK(f_alpha(short_root(2, 0, 1, 1, -1), 0).equals(short_factor(Monomial{1, -1})));
    CHECK_THROWS_AS(f_alpha(long_root(2, 0, -1), 0), InputError);
    CHECK_THROWS_AS(f_alpha(long_root(2, 0), -1), InputError);
}

TEST_CASE("f_alpha(-t) f_alpha(t) = 1")
{
    for (const auto& a : positive_roots(3))
        for (int e0 : {0, 1, 2}) {
            FactorizedRatFunc f = f_alpha(a, e0);
            // reflect t -> -t by inverting every variable
            Substitution inv = Substitution::identity(3);
            for (auto& im : inv.images) im.target = -im.target;
            CHECK((f * f.substitute(inv)).equals(one(3)));
        }
}

TEST_CASE("gamma_product examples")
{
    for (int e0 : {0, 1}) {
        CHECK(gamma_product(WeylElem::identity(3), e0).value.equals(one(3)));
        CHECK(gamma_product(WeylElem::reflection(3, {0}), e0).value.equals(
            FactorizedRatFunc::monomial(Monomial{0, 0, -2 * e0})));
        for (int i = 1; i < 3; ++i)
            CHECK(gamma_product(WeylElem::reflection(3, {i}), e0)
                      .value.equals(short_factor(Monomial::unit(3, i - 1, 1) + Monomial::unit(3, i, -1))));
    }
}

TEST_CASE("gamma_cocycle examples")
{
    for (int e0 : {0, 1}) {
        CHECK(gamma_cocycle(2, {}, e0).value.equals(one(2)));
        GammaFactor tt = gamma_cocycle(2, parse_word(2, "t t"), e0);
        CHECK(tt.sigma.is_identity());
        CHECK(tt.value.equals(one(2)));
        CHECK(gamma_cocycle(2, reduced_word(WeylElem::rho(2)), e0).value.equals(gamma_rho_closed(2, e0)));
    }
}

TEST_CASE("gamma_rho_closed examples")
{
    CHECK(gamma_rho_closed(1, 0).equals(one(1)));
    CHECK(gamma_rho_closed(1, 1).equals(FactorizedRatFunc::monomial(Monomial{-2})));
    CHECK(gamma_rho_closed(2, 0).equals(short_factor(Monomial{1, 1})));
}

TEST_CASE("closed form for rho matches the inversion-set product")
{
    for (int n = 1; n <= 4; ++n)
        for (int e0 : {0, 1}) CHECK(gamma_product(WeylElem::rho(n), e0).value.equals(gamma_rho_closed(n, e0)));
}

TEST_CASE("cocycle for all pairs, n <= 3")
{
    for (int n = 1; n <= 3; ++n)
        for (int e0 : {0, 1}) {
            auto all = enumerate_weyl(n);
            std::vector<FactorizedRatFunc> g;
            for (const auto& s : all) g.push_back(gamma_product(s, e0).value);
            for (size_t a = 0; a < all.size(); ++a)
                for (size_t b = 0; b < all.size(); ++b) {
                    // s2 = all[a], s1 = all[b]
                    FactorizedRatFunc lhs = gamma_product(all[a] * all[b], e0).value;
                    FactorizedRatFunc rhs = all[b].act_on_poly(g[a]) * g[b];
                    CHECK(lhs.equals(rhs));
                }
        }
}

TEST_CASE("reduced-word independence and inverse relation")
{
    std::mt19937 rng(11);
    for (int n = 1; n <= 3; ++n)
        for (int e0 : {0, 1})
            for (const auto& s : enumerate_weyl(n)) {
                Word w1 = reduced_word(s), w2 = random_reduced_word(s, rng);
                REQUIRE(WeylElem::from_word(n, w2) == s);
                GammaFactor g1 = gamma_cocycle(n, w1, e0), g2 = gamma_cocycle(n, w2, e0);
                CHECK(g1.sigma == s);
                CHECK(g1.value.equals(g2.value));
                CHECK(g1.value.equals(gamma_product(s, e0).value));
                // Gamma_s(z) Gamma_{s^-1}(s z) = 1
                CHECK((g1.value * s.act_on_poly(gamma_product(s.inverse(), e0).value)).equals(one(n)));
            }
}

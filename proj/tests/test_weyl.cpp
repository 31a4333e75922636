#include "hermsph/errors.hpp"
#include "hermsph/weyl.hpp"
#include "hermsph/random_algebra.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace hermsph;

namespace {

WeylElem tau(int n) { return WeylElem::reflection(n, {0}); }

std::set<Root> as_set(const std::vector<Root>& v) { return {v.begin(), v.end()}; }

// Brute-force pairing <alpha, z> as an integer vector of z-coefficients.
std::vector<int> pairing_after(const WeylElem& s, const std::vector<int>& alpha)
{
    // <alpha, s z> = sum_i alpha_i signs_i z_{perm(i)}
    std::vector<int> r(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) r[static_cast<size_t>(s.perm()[i])] += alpha[i] * s.signs()[i];
    return r;
}

} // namespace

TEST_CASE("enumeration sizes and order")
{
    CHECK(enumerate_weyl(1).size() == 2);
    CHECK(enumerate_weyl(2).size() == 8);
    CHECK(enumerate_weyl(3).size() == 48);
    for (int n = 1; n <= 4; ++n) {
        auto w = enumerate_weyl(n);
        CHECK(w.front().is_identity());
        CHECK(std::is_sorted(w.begin(), w.end()));
        CHECK(std::set<WeylElem>(w.begin(), w.end()).size() == w.size());
    }
    CHECK_THROWS_AS(enumerate_weyl(0), InputError);
    CHECK_THROWS_AS(enumerate_weyl(7), InputError);
}

TEST_CASE("roots")
{
    CHECK_THROWS_AS(Root({1, 1, 1}), InputError);
    CHECK_THROWS_AS(Root({2, 1}), InputError);
    CHECK_THROWS_AS(Root({0, 0}), InputError);
    CHECK(Root({0, -2}).is_long());
    for (int n = 1; n <= 6; ++n) {
        auto pr = positive_roots(n);
        CHECK(pr.size() == static_cast<size_t>(n * n));
        CHECK(std::count_if(pr.begin(), pr.end(), [](const Root& a) { return a.is_long(); }) == n);
    }
}

TEST_CASE("act_on_root examples")
{
    CHECK(tau(2).act_on_root(long_root(2, 1)) == long_root(2, 1, -1));
    CHECK(tau(3).act_on_root(short_root(3, 0, 2, 1, -1)) == short_root(3, 0, 2, 1, 1));
    Root a = short_root(3, 0, 1, 1, 1);
    CHECK(WeylElem::identity(3).act_on_root(a) == a);
}

TEST_CASE("act_on_root transports the pairing")
{
    // <sigma alpha, z> = <alpha, sigma^{-1} z>
    for (int n = 1; n <= 3; ++n)
        for (const auto& s : enumerate_weyl(n))
            for (const auto& a : positive_roots(n)) {
                Root b = s.act_on_root(a);
                CHECK(b.kind() == a.kind());
                CHECK(pairing_after(s.inverse(), a.vec()) == b.vec());
            }
}

TEST_CASE("inversion set examples")
{
    CHECK(inversion_set(WeylElem::identity(3)).empty());
    CHECK(as_set(inversion_set(tau(2))) == std::set<Root>{long_root(2, 1)});
    CHECK(as_set(inversion_set(WeylElem::rho(2))) ==
          std::set<Root>{short_root(2, 0, 1, 1, 1), long_root(2, 0), long_root(2, 1)});
}

TEST_CASE("rho inverts exactly e_i + e_j (i <= j)")
{
    for (int n = 1; n <= 5; ++n) {
        std::set<Root> want;
        for (int i = 0; i < n; ++i) {
            want.insert(long_root(n, i));
            for (int j = i + 1; j < n; ++j) want.insert(short_root(n, i, j, 1, 1));
        }
        CHECK(as_set(inversion_set(WeylElem::rho(n))) == want);
    }
}

TEST_CASE("reduced word examples")
{
    CHECK(reduced_word(WeylElem::identity(2)).empty());
    CHECK(format_word(reduced_word(tau(2))) == "t");
    CHECK(reduced_word(WeylElem::rho(2)).size() == 3);
}

TEST_CASE("reduced words multiply back and have minimal length")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& s : enumerate_weyl(n)) {
            Word w = reduced_word(s);
            CHECK(WeylElem::from_word(n, w) == s);
            CHECK(static_cast<int>(w.size()) == length(s));
        }
}

TEST_CASE("inversion set recursion along a reduced word")
{
    for (int n = 1; n <= 4; ++n) {
        auto simples = simple_roots(n);
        for (const auto& s : enumerate_weyl(n)) {
            Word w = reduced_word(s); // w = sigma_l ... sigma_1
            size_t l = w.size();
            std::set<Root> got;
            WeylElem prefix = WeylElem::identity(n); // sigma_1 ... sigma_{k-1}
            for (size_t k = 1; k <= l; ++k) {
                SimpleReflection r = w[l - k];
                const Root& alpha = simples[static_cast<size_t>(r.is_tau() ? n - 1 : r.index - 1)];
                got.insert(prefix.act_on_root(alpha));
                prefix = prefix * WeylElem::reflection(n, r);
            }
            CHECK(got == as_set(inversion_set(s)));
        }
    }
}

TEST_CASE("group axioms")
{
    for (int n = 1; n <= 3; ++n) {
        auto all = enumerate_weyl(n);
        WeylElem e = WeylElem::identity(n);
        for (const auto& a : all) {
            CHECK((a * a.inverse()).is_identity());
            CHECK(a * e == a);
            for (const auto& b : all) {
                std::vector<int> v(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = 10 * (i + 1) + 1;
                CHECK((a * b).act_on_vector(v) == a.act_on_vector(b.act_on_vector(v)));
            }
        }
    }
}

TEST_CASE("act_on_poly examples")
{
    LaurentPoly x2 = LaurentPoly::variable(2, 1);
    CHECK(tau(2).act_on_poly(x2) == LaurentPoly::variable(2, 1, -1));
    LaurentPoly m(Monomial{1, -1});
    CHECK(WeylElem::reflection(2, {1}).act_on_poly(m) == LaurentPoly(Monomial{-1, 1}));
    for (const auto& s : enumerate_weyl(2)) CHECK(s.act_on_poly(LaurentPoly(2, ExactScalar(1))).is_constant());
}

TEST_CASE("act_on_poly is the substitution z -> sigma z")
{
    // X^m -> X^{m'} with <m', z> = <m, sigma z>, and act(s2, act(s1, f)) = act(s1 s2, f).
    testing::AlgebraGen g(7);
    auto all = enumerate_weyl(3);
    for (int trial = 0; trial < 40; ++trial) {
        const auto& s1 = all[static_cast<size_t>(g.uniform(0, 47))];
        const auto& s2 = all[static_cast<size_t>(g.uniform(0, 47))];
        Monomial m = g.monomial(3);
        LaurentPoly img = s1.act_on_poly(LaurentPoly(m));
        REQUIRE(img.is_term());
        CHECK(img.leading().first.exps() == pairing_after(s1, m.exps()));
        FactorizedRatFunc f = g.ratfunc(3);
        CHECK(s2.act_on_poly(s1.act_on_poly(f)).equals((s1 * s2).act_on_poly(f)));
    }
}

TEST_CASE("word parsing")
{
    Word w = parse_word(3, "s1 s2,t");
    CHECK(format_word(w) == "s1 s2 t");
    CHECK(parse_word(3, "").empty());
    CHECK_THROWS_AS(parse_word(3, "s3"), InputError);
    CHECK_THROWS_AS(parse_word(3, "x"), InputError);
    CHECK_THROWS_AS(parse_word(1, "s1"), InputError);
}

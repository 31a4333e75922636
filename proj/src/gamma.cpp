#include "hermsph/gamma.hpp"

#include "hermsph/errors.hpp"

namespace hermsph {

namespace {

void check_e0(int e0)
{
    if (e0 < 0) throw InputError("e0 must be nonnegative, got " + std::to_string(e0));
}

int long_index(const Root& alpha)
{
    for (int i = 0; i < alpha.rank(); ++i)
        if (alpha.vec()[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

void mul_f_alpha(FactorProduct& p, const Root& alpha, int e0)
{
    int n = alpha.rank();
    if (alpha.is_long()) {
        p.mul_monomial(Monomial::unit(n, long_index(alpha), -2 * e0));
        return;
    }
    ExactScalar qi = ExactScalar::q_pow(-1);
    Monomial m = alpha.monomial();
    p.mul_binomial(m, -qi, ExactScalar(1), 1);
    p.mul_binomial(m, ExactScalar(1), -qi, -1);
}

} // namespace

FactorizedRatFunc f_alpha(const Root& alpha, int e0)
{
    check_e0(e0);
    if (!alpha.is_positive()) throw InputError("f_alpha needs a positive root, got " + alpha.to_string());
    FactorProduct p(alpha.rank());
    mul_f_alpha(p, alpha, e0);
    return p.to_ratfunc();
}

FactorProduct gamma_factors(const WeylElem& sigma, int e0)
{
    check_e0(e0);
    FactorProduct p(sigma.rank());
    for (const auto& a : inversion_set(sigma)) mul_f_alpha(p, a, e0);
    return p;
}

GammaFactor gamma_product(const WeylElem& sigma, int e0)
{
    return {gamma_factors(sigma, e0).to_ratfunc(), sigma, e0};
}

GammaFactor gamma_cocycle(int n, const Word& word, int e0)
{
    check_e0(e0);
    WeylElem cur = WeylElem::identity(n);
    FactorizedRatFunc g = FactorizedRatFunc::constant(n, ExactScalar(1));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        WeylElem s = WeylElem::reflection(n, *it);
        g = cur.act_on_poly(gamma_product(s, e0).value) * g;
        cur = s * cur;
    }
    return {g, cur, e0};
}

FactorizedRatFunc gamma_rho_closed(int n, int e0)
{
    check_e0(e0);
    if (n < 1 || n > kMaxVars) throw InputError("rank out of range");
    FactorProduct p(n);
    Monomial all(n);
    for (int i = 0; i < n; ++i) all[i] = -2 * e0;
    p.mul_monomial(all);
    ExactScalar qi = ExactScalar::q_pow(-1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Monomial m = Monomial::unit(n, i, 1) + Monomial::unit(n, j, 1);
            p.mul_binomial(m, -qi, ExactScalar(1), 1);
            p.mul_binomial(m, ExactScalar(1), -qi, -1);
        }
    return p.to_ratfunc();
}

} // namespace hermsph

#include "hermsph/spherical.hpp"

#include "hermsph/errors.hpp"

#include <algorithm>

namespace hermsph {

namespace {

void check_rank(int n)
{
    if (n < 1 || n > kMaxVars) throw InputError("rank n = " + std::to_string(n) + " out of range");
}

// (Y^{L+1}(1 - q^{-1} Y^{-2}) - Y^{-L-1}(1 - q^{-1} Y^2)) / (Y - Y^{-1})
FactorizedRatFunc n1_bracket(int L)
{
    ExactScalar qi = ExactScalar::q_pow(-1);
    LaurentPoly num(1);
    num.add_term(Monomial{L + 1}, ExactScalar(1));
    num.add_term(Monomial{L - 1}, -qi);
    num.add_term(Monomial{-L - 1}, ExactScalar(-1));
    num.add_term(Monomial{-L + 1}, qi);
    LaurentPoly den(Monomial{1}, ExactScalar(1));
    den.add_term(Monomial{-1}, ExactScalar(-1));
    return FactorizedRatFunc(num) / FactorizedRatFunc(den);
}

} // namespace

void SphericalInput::validate() const
{
    check_rank(n);
    if (lambda.size() != static_cast<size_t>(n))
        throw InputError("lambda has " + std::to_string(lambda.size()) + " entries, expected " + std::to_string(n));
    if (e0 < 0) throw InputError("e0 must be nonnegative");
    for (size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i] > lambda[i - 1]) throw InputError("lambda must be weakly decreasing");
    if (lambda.back() < e0) throw InputError("lambda_n must be at least e0");
}

FactorProduct gamma_z_factors(const WeylElem& sigma)
{
    int n = sigma.rank();
    WeylElem inv = sigma.inverse();
    FactorProduct p(n);
    for (const auto& a : positive_roots(n)) {
        Root b = inv.act_on_root(a);
        if (b.is_long()) {
            p.mul_binomial(b.monomial(), -ExactScalar::q_pow(-1), ExactScalar(1), 1);
            p.mul_binomial(b.monomial(), ExactScalar(-1), ExactScalar(1), -1);
        } else {
            Monomial m2 = b.monomial() * 2;
            p.mul_binomial(m2, -ExactScalar::q_pow(-2), ExactScalar(1), 1);
            p.mul_binomial(m2, ExactScalar(-1), ExactScalar(1), -1);
        }
    }
    return p;
}

FactorizedRatFunc gamma_z(int n)
{
    return gamma_z_factors(WeylElem::identity(n)).to_ratfunc();
}

FactorizedRatFunc gamma_z_pairs(int n)
{
    check_rank(n);
    // (1 - c X^m) / (1 - X^m)
    auto ratio = [n](const Monomial& m, const ExactScalar& c) {
        LaurentPoly num(n, ExactScalar(1)), den(n, ExactScalar(1));
        num.add_term(m, -c);
        den.add_term(m, ExactScalar(-1));
        return FactorizedRatFunc(num) / FactorizedRatFunc(den);
    };
    FactorizedRatFunc g = FactorizedRatFunc::constant(n, ExactScalar(1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            g = g * ratio(Monomial::unit(n, i, 2) + Monomial::unit(n, j, -2), ExactScalar::q_pow(-2));
            g = g * ratio(Monomial::unit(n, i, 2) + Monomial::unit(n, j, 2), ExactScalar::q_pow(-2));
        }
    for (int i = 0; i < n; ++i) g = g * ratio(Monomial::unit(n, i, 2), ExactScalar::q_pow(-1));
    return g;
}

ExactScalar q_const(int n)
{
    check_rank(n);
    ExactScalar num(1);
    for (int i = 1; i <= 2 * n; ++i) {
        ExactScalar t = ExactScalar::q_pow(-i);
        num *= (i % 2 == 0) ? ExactScalar(1) - t : ExactScalar(1) + t;
    }
    return num / (ExactScalar(1) - ExactScalar::q_pow(-2)).pow(n);
}

SphericalValue omega_explicit(const SphericalInput& in, PairingSign sign)
{
    in.validate();
    int n = in.n;
    int dir = sign == PairingSign::Calibrated ? -1 : 1;
    long sign_exp = 0, half_q = 0;
    for (int i = 1; i <= n; ++i) {
        long l = in.lambda[static_cast<size_t>(i - 1)];
        sign_exp += l * (n - i + 1);
        half_q += l * (2 * (n - i) + 1);
    }
    ExactScalar pref = ExactScalar::u_pow(dir * half_q) / q_const(n);
    if (sign_exp % 2 != 0) pref = -pref;

    std::vector<FactorizedRatFunc> terms;
    for (const auto& s : enumerate_weyl(n)) {
        FactorProduct p = gamma_z_factors(s);
        p *= gamma_factors(s, in.e0);
        std::vector<int> mv = s.inverse().act_on_vector(in.lambda);
        for (int& x : mv) x *= dir;
        p.mul_monomial(Monomial(std::span<const int>(mv)));
        terms.push_back(p.to_ratfunc());
    }
    return {FactorizedRatFunc::sum(terms).scaled(pref), in};
}

FactorProduct f_factor_product(int n, int e0)
{
    check_rank(n);
    if (e0 < 0) throw InputError("e0 must be nonnegative");
    FactorProduct p(n);
    for (const auto& a : positive_roots(n)) {
        if (a.is_long()) {
            Monomial m = a.monomial();
            for (int i = 0; i < n; ++i) m[i] = m[i] / 2 * e0;
            p.mul_monomial(m);
            continue;
        }
        p.mul_binomial(a.monomial(), ExactScalar(1), ExactScalar(1), 1);
        p.mul_binomial(a.monomial(), -ExactScalar::q_pow(-1), ExactScalar(1), -1);
    }
    return p;
}

FactorizedRatFunc f_factor(int n, int e0)
{
    return f_factor_product(n, e0).to_ratfunc();
}

FactorProduct f1_factor(int n)
{
    check_rank(n);
    FactorProduct p(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Monomial m = Monomial::unit(n, i, 1) + Monomial::unit(n, j, -1);
            p.mul_binomial(m, ExactScalar(1), ExactScalar(1), 1);
            p.mul_binomial(m, -ExactScalar::q_pow(-1), ExactScalar(1), -1);
        }
    return p;
}

std::vector<WeylElem> symmetric_subgroup(int n)
{
    std::vector<WeylElem> r;
    for (auto& s : enumerate_weyl(n))
        if (std::all_of(s.signs().begin(), s.signs().end(), [](int x) { return x == 1; })) r.push_back(s);
    return r;
}

InvariantReport check_polynomial_invariant(const SphericalValue& v, const FactorProduct& F,
                                           const std::vector<WeylElem>& group)
{
    InvariantReport rep;
    FactorizedRatFunc P = F.times(v.value);
    if (!P.is_laurent()) {
        rep.detail = "denominator persists:";
        for (const auto& [f, k] : P.den()) rep.detail += " (" + f.to_string() + ")^" + std::to_string(k);
        return rep;
    }
    const LaurentPoly& p = P.num();
    auto check = [&](const WeylElem& s) {
        if (s.act_on_poly(p) == p) return true;
        rep.detail = "not invariant under " + s.to_string() + " = [" + format_word(reduced_word(s)) + "]";
        return false;
    };
    if (group.empty()) {
        for (const auto& s : enumerate_weyl(v.input.n))
            if (!check(s)) return rep;
    } else {
        for (const auto& s : group)
            if (!check(s)) return rep;
    }
    rep.pass = true;
    rep.poly = p;
    return rep;
}

InvariantReport check_polynomial_invariant(const SphericalValue& v)
{
    return check_polynomial_invariant(v, f_factor_product(v.input.n, v.input.e0));
}

FactorizedRatFunc omega_n1_closed(int lambda, int e, int e0)
{
    if (e0 < 0) throw InputError("e0 must be nonnegative");
    if (2 * e > lambda - e0) throw InputError("need 2e <= lambda - e0");
    int L = lambda - 2 * e - e0;
    ExactScalar c = ExactScalar::u_pow(2 * e - lambda) / (ExactScalar(1) + ExactScalar::q_pow(-1));
    if (lambda % 2 != 0) c = -c;
    return (FactorizedRatFunc::monomial(Monomial{e0}, c) * n1_bracket(L));
}

FactorizedRatFunc zeta_k1_closed(int m, int lam, int fpow, int e0)
{
    if (lam < 0) throw InputError("lambda must be nonnegative");
    if (e0 < 0) throw InputError("e0 must be nonnegative");
    ExactScalar c = ExactScalar::u_pow(m) / (ExactScalar(1) + ExactScalar::q_pow(-1));
    return FactorizedRatFunc::monomial(Monomial{e0 - fpow}, c) * n1_bracket(lam);
}

Substitution n1_identification()
{
    return {1, {{1, 0, Monomial{-1}}}};
}

} // namespace hermsph

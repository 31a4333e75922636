#include "hermsph/siegel.hpp"

#include "hermsph/errors.hpp"
#include "hermsph/serialize.hpp"

namespace hermsph {

namespace {

void check_n(int n)
{
    if (n < 1 || n > kMaxVars) throw InputError("rank n = " + std::to_string(n) + " out of range");
}

void check_e0(int e0)
{
    if (e0 < 0) throw InputError("e0 must be nonnegative");
}

ExactScalar qp(long k) { return ExactScalar::q_pow(k); }

ExactScalar sign(long k) { return ExactScalar(k % 2 == 0 ? 1 : -1); }

// a + c V^k
LaurentPoly vbin(const ExactScalar& a, const ExactScalar& c, int k)
{
    LaurentPoly p(1, a);
    p.add_term(Monomial{k}, c);
    return p;
}

SVarFunc ratio(const LaurentPoly& num, const LaurentPoly& den)
{
    return SVarFunc(num) / SVarFunc(den);
}

SVarFunc constant(const ExactScalar& c) { return SVarFunc::constant(1, c); }

void expect(Verified& v, const std::string& name, const SVarFunc& lhs, const SVarFunc& rhs)
{
    if (!v.pass || lhs.equals(rhs)) return;
    v.pass = false;
    v.detail = name + ": lhs " + dump(to_json(lhs)) + " rhs " + dump(to_json(rhs));
}

// |2|^{-ns+n^2} = q^{-e0 n^2} V^{-2 n e0}
SVarFunc two_power(int n, int e0)
{
    return SVarFunc::monomial(Monomial{-2 * n * e0}, qp(-static_cast<long>(e0) * n * n));
}

// prod_{i=0}^{n-1} (1 - (-1)^i q^{-s+i}) / (1 - (-1)^i q^{-(2n-s)+i})
SVarFunc fe_product(int n)
{
    SVarFunc r = constant(ExactScalar(1));
    for (int i = 0; i < n; ++i)
        r = r * ratio(vbin(ExactScalar(1), -sign(i) * qp(i), 2), vbin(ExactScalar(1), -sign(i) * qp(i - 2 * n), -2));
    return r;
}

} // namespace

SVarFunc v_pow(int k) { return SVarFunc::monomial(Monomial{k}); }

Substitution reflect_s(int a)
{
    return {1, {{1, -static_cast<long>(a), Monomial{-1}}}};
}

Substitution z_star(int n)
{
    check_n(n);
    Substitution s{1, {}};
    for (int i = 1; i <= n; ++i) s.images.push_back({(n - i + 1) % 2 == 0 ? 1 : -1, 2L * i - 1, Monomial{1}});
    return s;
}

SVarFunc zeta_matrix(int n, ZetaMode mode)
{
    check_n(n);
    SVarFunc r = constant(ExactScalar(1));
    for (int i = 1; i <= n; ++i) {
        // 1 - q^{-2(t-i+1)}
        LaurentPoly den(1);
        switch (mode) {
        case ZetaMode::AtS: den = vbin(ExactScalar(1), -qp(2 * i - 2), 4); break;
        case ZetaMode::AtHalfS: den = vbin(ExactScalar(1), -qp(2 * i - 2), 2); break;
        case ZetaMode::AtNMinusHalfS: den = vbin(ExactScalar(1), -qp(2 * i - 2 * n - 2), -2); break;
        }
        r = r * ratio(LaurentPoly(1, ExactScalar(1) - qp(-2 * i)), den);
    }
    return r;
}

Verified zeta_ratio(int n)
{
    Verified v;
    v.value = zeta_matrix(n, ZetaMode::AtNMinusHalfS) * zeta_matrix(n, ZetaMode::AtHalfS).inverse();
    SVarFunc middle = constant(ExactScalar(1));
    for (int i = 1; i <= n; ++i)
        middle = middle * ratio(vbin(ExactScalar(1), -qp(2 * (i - 1)), 2), vbin(ExactScalar(1), -qp(-2 * (n - i + 1)), -2));
    SVarFunc closed = SVarFunc::monomial(Monomial{2 * n}, sign(n) * qp(static_cast<long>(n) * (n + 1))) *
                      ratio(vbin(ExactScalar(1), ExactScalar(-1), 2), vbin(ExactScalar(1), -qp(2 * n), 2));
    expect(v, "zeta ratio product form", v.value, middle);
    expect(v, "zeta ratio closed form", v.value, closed);
    return v;
}

Verified f_n_from_gamma_rho(int n, int e0)
{
    check_n(n);
    check_e0(e0);
    Verified v;
    v.value = gamma_rho_closed(n, e0).substitute(z_star(n));
    SVarFunc pairs = two_power(n, e0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            ExactScalar sg = sign(i + j);
            pairs = pairs * ratio(vbin(ExactScalar(1), -sg * qp(i + j - 2), 2), vbin(-qp(-1), sg * qp(i + j - 1), 2));
        }
    SVarFunc single = two_power(n, e0) * constant((-qp(1)).pow(n * (n - 1) / 2));
    for (int i = 1; i <= n - 1; ++i)
        single = single * ratio(vbin(ExactScalar(1), -sign(i) * qp(i), 2), vbin(ExactScalar(1), -sign(n + i) * qp(n + i), 2));
    expect(v, "F_n pair product", v.value, pairs);
    expect(v, "F_n single product", v.value, single);
    return v;
}

Verified chain_identity(int n, int e0)
{
    Verified f = f_n_from_gamma_rho(n, e0);
    Verified z = zeta_ratio(n);
    Verified v;
    v.value = f.value * z.value;
    if (!f.pass) return {v.value, false, f.detail};
    if (!z.pass) return {v.value, false, z.detail};
    expect(v, "F_n times zeta ratio", v.value, two_power(n, e0) * fe_product(n));
    return v;
}

SVarFunc siegel_b_n1(int lambda)
{
    if (lambda < 0) throw InputError("lambda must be nonnegative");
    LaurentPoly b(1, ExactScalar(1));
    ExactScalar c = ExactScalar(1) - qp(-1);
    for (int e = 1; e <= lambda; ++e) b.add_term(Monomial{2 * e}, c * qp(e));
    b.add_term(Monomial{2 * (lambda + 1)}, -qp(lambda));
    return SVarFunc(b);
}

Verified verify_siegel_fe_n1(int lambda, int e0)
{
    check_e0(e0);
    SVarFunc b = siegel_b_n1(lambda);
    Verified v;
    v.value = b * ratio(LaurentPoly(1, ExactScalar(1)), vbin(ExactScalar(1), ExactScalar(-1), 2));
    // |T/2|^{s-1} = q^{(lambda - e0)(1 - s)} = q^{lambda - e0} V^{2(lambda - e0)}
    SVarFunc t2 = SVarFunc::monomial(Monomial{2 * (lambda - e0)}, qp(lambda - e0));
    SVarFunc rhs = t2 * b.substitute(reflect_s(2)) *
                   ratio(LaurentPoly(1, ExactScalar(1)), vbin(ExactScalar(1), -qp(-2), -2));
    expect(v, "n=1 functional equation", v.value, rhs);
    return v;
}

SVarFunc fe_factor(int n, const std::vector<int>& lambda, int e0)
{
    check_n(n);
    check_e0(e0);
    if (lambda.size() != static_cast<size_t>(n)) throw InputError("lambda must have n entries");
    long sum = 0;
    for (int l : lambda) {
        if (l < 0) throw InputError("lambda entries must be nonnegative");
        sum += l;
    }
    // chi(det T)^{n-1} |det(T/2)|^{s-n}, |det(T/2)| = q^{-(sum - n e0)}
    long d = sum - static_cast<long>(n) * e0;
    ExactScalar c = sign((n - 1) * sum) * qp(d * n);
    return SVarFunc::monomial(Monomial{static_cast<int>(2 * d)}, c) * fe_product(n);
}

Verified fe_involution(int n, const std::vector<int>& lambda, int e0)
{
    Verified v;
    SVarFunc f = fe_factor(n, lambda, e0);
    v.value = f * f.substitute(reflect_s(2 * n));
    expect(v, "fe_factor involution", v.value, constant(ExactScalar(1)));
    return v;
}

} // namespace hermsph

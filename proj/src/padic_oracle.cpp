#include "hermsph/padic_oracle.hpp"

#include "hermsph/errors.hpp"

#include <cstdlib>
#include <map>

namespace hermsph {

namespace {

using i128 = __int128;

int64_t mulmod(int64_t x, int64_t y, int64_t m)
{
    return static_cast<int64_t>(static_cast<i128>(x) * y % m);
}

int64_t reduce(int64_t x, int64_t m)
{
    x %= m;
    return x < 0 ? x + m : x;
}

int64_t powmod(int64_t b, int64_t e, int64_t m)
{
    int64_t r = 1 % m;
    b = reduce(b, m);
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

int64_t invmod(int64_t a, int64_t m)
{
    int64_t g = m, x = 0, x1 = 1, r = reduce(a, m);
    while (r != 0) {
        int64_t q = g / r;
        std::tie(g, r) = std::make_tuple(r, g - q * r);
        std::tie(x, x1) = std::make_tuple(x1, x - q * x1);
    }
    if (g != 1) throw AlgebraError("no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
    return reduce(x, m);
}

int64_t ipow(int64_t b, int e)
{
    int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

int vp(int64_t x, int p, int cap)
{
    if (x == 0) return cap;
    int v = 0;
    while (x % p == 0 && v < cap) {
        x /= p;
        ++v;
    }
    return v;
}

bool is_prime(int p)
{
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

BigRat rat_pow(int p, int e)
{
    BigRat r = 1;
    for (int i = 0; i < std::abs(e); ++i) r *= p;
    if (e < 0) r = 1 / r;
    return r;
}

// (-1)^val q^{-val(s - 1/2)} = (-1)^val u^val Y^{-val}, with u^val = p^{(val-par)/2} u^par
ExactScalar signed_half_power(int val, int p)
{
    int par = ((val % 2) + 2) % 2;
    BigRat c = rat_pow(p, (val - par) / 2);
    if (par) c = -c;
    return par ? ExactScalar(UPoly{0, c}, UPoly{1}) : ExactScalar(c);
}

template <class F>
void for_each_cell(const OracleConfig& cfg, F&& f)
{
    int64_t m = ipow(cfg.p, cfg.N);
    for (int block = 1; block <= 2; ++block)
        for (int64_t u = 0; u < m; ++u)
            for (int64_t v = 0; v < m; ++v) {
                if (!cfg.enumerate_alpha) {
                    f(block, u, v, int64_t{1}, int64_t{0});
                    continue;
                }
                for (int64_t a = 0; a < m; ++a)
                    for (int64_t b = 0; b < m; ++b)
                        if (a % cfg.p != 0 || b % cfg.p != 0) f(block, u, v, a, b);
            }
}

BigRat block_weight(const OracleConfig& cfg, int block)
{
    BigRat q = cfg.p;
    BigRat cells = rat_pow(cfg.p, 2 * cfg.N);
    if (cfg.enumerate_alpha) cells *= rat_pow(cfg.p, 2 * cfg.N) * (1 - 1 / (q * q));
    BigRat vol = 1 / (1 + 1 / q);
    if (block == 2) vol /= q;
    return vol / cells;
}

} // namespace

QuotientRingElem::QuotientRingElem(int64_t a, int64_t b, int64_t modulus, int64_t eps)
    : a_(reduce(a, modulus)), b_(reduce(b, modulus)), mod_(modulus), eps_(reduce(eps, modulus))
{
}

int64_t QuotientRingElem::norm() const
{
    return reduce(mulmod(a_, a_, mod_) - mulmod(eps_, mulmod(b_, b_, mod_), mod_), mod_);
}

int QuotientRingElem::valuation(int p, int cap) const
{
    return std::min(vp(a_, p, cap), vp(b_, p, cap));
}

bool QuotientRingElem::is_unit(int p) const
{
    return valuation(p, 1) == 0;
}

QuotientRingElem QuotientRingElem::inverse(int p) const
{
    if (!is_unit(p)) throw AlgebraError("inverse of a non-unit in O/p^N");
    int64_t ni = invmod(norm(), mod_);
    QuotientRingElem c = conj();
    return {mulmod(c.a_, ni, mod_), mulmod(c.b_, ni, mod_), mod_, eps_};
}

QuotientRingElem operator+(const QuotientRingElem& x, const QuotientRingElem& y)
{
    return {x.a_ + y.a_, x.b_ + y.b_, x.mod_, x.eps_};
}

QuotientRingElem operator*(const QuotientRingElem& x, const QuotientRingElem& y)
{
    int64_t m = x.mod_;
    int64_t a = reduce(mulmod(x.a_, y.a_, m) + mulmod(x.eps_, mulmod(x.b_, y.b_, m), m), m);
    int64_t b = reduce(mulmod(x.a_, y.b_, m) + mulmod(x.b_, y.a_, m), m);
    return {a, b, m, x.eps_};
}

OracleConfig OracleConfig::resolved() const
{
    OracleConfig c = *this;
    if (c.p < 3 || !is_prime(c.p)) throw InputError("oracle needs an odd prime p, got " + std::to_string(c.p));
    if (c.N < 1) throw InputError("precision N must be at least 1");
    double size = 1;
    for (int i = 0; i < 2 * c.N; ++i) size *= c.p;
    if (size > 4e18) throw InputError("p^N too large");
    if (c.epsilon == 0) {
        for (int e = 2; e < c.p; ++e)
            if (powmod(e, (c.p - 1) / 2, c.p) == c.p - 1) {
                c.epsilon = e;
                break;
            }
    } else if (powmod(c.epsilon, (c.p - 1) / 2, c.p) != c.p - 1) {
        throw InputError("epsilon " + std::to_string(c.epsilon) + " is not a non-residue mod " + std::to_string(c.p));
    }
    if (c.budget <= 0) {
        c.budget = 10'000'000;
        if (const char* env = std::getenv("HS_BUDGET")) {
            char* end = nullptr;
            long b = std::strtol(env, &end, 10);
            if (end == env || *end != '\0' || b <= 0) throw InputError(std::string("bad HS_BUDGET value '") + env + "'");
            c.budget = b;
        }
    }
    return c;
}

CyclotomicInt::CyclotomicInt(int p, int M) : p_(p), M_(M), pm1_(ipow(p, M - 1))
{
    if (M < 1) throw InputError("cyclotomic level must be at least 1");
    c_.assign(static_cast<size_t>((p - 1) * pm1_), BigInt(0));
}

CyclotomicInt CyclotomicInt::zeta_power(int p, int M, int64_t k)
{
    CyclotomicInt z(p, M);
    z.add_monomial(k, 1);
    return z;
}

void CyclotomicInt::add_monomial(int64_t k, const BigInt& c)
{
    int64_t pm = pm1_ * p_;
    k = reduce(k, pm);
    int64_t phi = static_cast<int64_t>(c_.size());
    if (k < phi) {
        c_[static_cast<size_t>(k)] += c;
        return;
    }
    // x^{(p-1) p^{M-1}} = -sum_{j<p-1} x^{j p^{M-1}}
    int64_t r = k - phi;
    for (int j = 0; j + 1 < p_; ++j) c_[static_cast<size_t>(r + j * pm1_)] -= c;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o)
{
    if (o.p_ != p_ || o.M_ != M_) throw InputError("cyclotomic level mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

bool CyclotomicInt::is_rational() const
{
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

int64_t k1_cell_count(const OracleConfig& cfg)
{
    OracleConfig c = cfg.resolved();
    double n = 2;
    for (int i = 0; i < 2 * c.N; ++i) n *= c.p;
    if (c.enumerate_alpha) n *= static_cast<double>(ipow(c.p, 2 * c.N)) * (1 - 1.0 / (c.p * c.p));
    return n > 9e18 ? INT64_MAX : static_cast<int64_t>(n + 0.5);
}

namespace {

void check_budget(const OracleConfig& c)
{
    int64_t n = k1_cell_count(c);
    if (n > c.budget)
        throw BudgetError(std::to_string(n) + " cells at p=" + std::to_string(c.p) + ", N=" + std::to_string(c.N) +
                          " exceed the budget of " + std::to_string(c.budget));
}

} // namespace

std::vector<K1Cell> enumerate_k1_cells(const OracleConfig& cfg)
{
    OracleConfig c = cfg.resolved();
    check_budget(c);
    BigRat w[3] = {0, block_weight(c, 1), block_weight(c, 2)};
    std::vector<K1Cell> out;
    for_each_cell(c, [&](int block, int64_t u, int64_t v, int64_t a, int64_t b) {
        out.push_back({block, u, v, a, b, w[block]});
    });
    return out;
}

FactorizedRatFunc oracle_omega_n1(const OracleConfig& cfg, int lambda, int e)
{
    OracleConfig c = cfg.resolved();
    if (lambda < 0) throw InputError("lambda must be nonnegative");
    int L = lambda - 2 * e;
    if (L < 0) throw InputError("need 2e <= lambda");
    if (c.N < L + 2)
        throw InputError("precision N=" + std::to_string(c.N) + " insufficient, need N >= " + std::to_string(L + 2));
    check_budget(c);

    int64_t m = ipow(c.p, c.N);
    int64_t eps = c.epsilon;
    auto el = [&](int64_t a, int64_t b) { return QuotientRingElem(a, b, m, eps); };
    QuotientRingElem half_pl = el(mulmod(invmod(2, m), ipow(c.p, L) % m, m), 0); // p^L / 2
    int64_t inv_eps = invmod(eps, m);

    // (block, val) -> number of cells
    std::map<std::pair<int, int>, int64_t> counts;
    for_each_cell(c, [&](int block, int64_t u, int64_t v, int64_t a, int64_t b) {
        QuotientRingElem alpha = el(a, b);
        QuotientRingElem ainv = alpha.conj().inverse(c.p); // alpha^{*-1}
        QuotientRingElem h21 = el(0, 0), h22 = el(0, 0);
        if (block == 1) {
            h21 = ainv * el(0, u);                    // alpha^{*-1} u sqrt(eps)
            h22 = ainv * el(1 + mulmod(u, v, m), 0);  // alpha^{*-1} (1 + uv)
        } else {
            h21 = ainv;                               // alpha^{*-1}
            h22 = ainv * el(0, mulmod(v, inv_eps, m)); // alpha^{*-1} v / sqrt(eps)
        }
        // second coordinate of h (1, p^L / 2)^t; x_e carries the extra pi^e
        QuotientRingElem y = h21 + h22 * half_pl;
        int vy = y.valuation(c.p, c.N);
        if (vy >= c.N)
            throw InputError("valuation saturates at N=" + std::to_string(c.N) + "; increase N");
        ++counts[{block, 2 * (e + vy) - lambda}];
    });

    BigRat w[3] = {0, block_weight(c, 1), block_weight(c, 2)};
    LaurentPoly r(1);
    for (const auto& [key, cnt] : counts) {
        auto [block, val] = key;
        BigRat coeff = w[block] * BigRat(BigInt(std::to_string(cnt)));
        r.add_term(Monomial{-val}, signed_half_power(val, c.p) * ExactScalar(coeff));
    }
    return FactorizedRatFunc(r);
}

BigInt siegel_shell_sum(int p, int lambda, int e)
{
    if (e == 0) return 1;
    int m = std::max(1, e - lambda);
    int64_t pe = ipow(p, e), pm = ipow(p, m);
    CyclotomicInt acc(p, m);
    for (int64_t a = 1; a < pe; ++a) {
        if (a % p == 0) continue;
        // psi(p^lambda a p^{-e}) = zeta_{p^m}^{a p^{lambda - e + m}}
        int64_t k = e > lambda ? a % pm : 0;
        acc += CyclotomicInt::zeta_power(p, m, k);
    }
    if (!acc.is_rational()) throw AlgebraError("character sum is not rational");
    return acc.constant();
}

SVarFunc oracle_siegel_n1(const OracleConfig& cfg, int lambda)
{
    OracleConfig c = cfg.resolved();
    if (lambda < 0 || lambda > 3) throw InputError("oracle_siegel_n1 needs 0 <= lambda <= 3");
    double work = 0;
    for (int e = 1; e <= lambda + 2; ++e) work += static_cast<double>(ipow(c.p, e)) * ipow(c.p, std::max(0, e - lambda - 1));
    if (work > static_cast<double>(c.budget)) throw BudgetError("character sums exceed the budget");
    LaurentPoly b(1);
    for (int e = 0; e <= lambda + 1; ++e) b.add_term(Monomial{2 * e}, ExactScalar(BigRat(siegel_shell_sum(c.p, lambda, e))));
    // Shells beyond lambda + 1 sum a nontrivial character of (Z/p^{e-lambda})
    // over units, which vanishes; the first one is checked explicitly.
    if (siegel_shell_sum(c.p, lambda, lambda + 2) != 0) throw AlgebraError("shell lambda+2 does not vanish");
    return SVarFunc(b);
}

FactorizedRatFunc specialize_q(const FactorizedRatFunc& f, int p)
{
    if (!f.is_laurent()) throw InputError("specialize_q needs a Laurent polynomial");
    auto split = [p](const UPoly& c) {
        BigRat A = 0, B = 0, pp = 1;
        for (size_t k = 0; k < c.size(); ++k) {
            if (k % 2 == 0) {
                A += c[k] * pp;
            } else {
                B += c[k] * pp;
                pp *= p;
            }
        }
        return std::make_pair(A, B);
    };
    LaurentPoly r(f.nvars());
    for (const auto& [m, c] : f.num().terms()) {
        auto [A, B] = split(c.num());
        auto [C, D] = split(c.den());
        BigRat delta = C * C - D * D * p;
        BigRat a = (A * C - B * D * p) / delta, b = (B * C - A * D) / delta;
        r.add_term(m, ExactScalar(UPoly{a, b}, UPoly{1}));
    }
    return FactorizedRatFunc(r);
}

} // namespace hermsph

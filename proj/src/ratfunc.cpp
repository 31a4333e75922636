#include "hermsph/ratfunc.hpp"

#include "hermsph/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hermsph {

namespace {

Monomial halved(const Monomial& m)
{
    Monomial r = m;
    for (int i = 0; i < m.nvars(); ++i) r[i] = m[i] / 2;
    return r;
}

// X^m + c with m lex-positive, split along differences of squares.
void split_into(const Monomial& m, const ExactScalar& c, std::vector<BinomialFactor>& out,
                auto&& make)
{
    if (m.content() % 2 == 0) {
        if (auto d = (-c).monomial_sqrt()) {
            Monomial h = halved(m);
            split_into(h, -*d, out, make);
            split_into(h, *d, out, make);
            return;
        }
    }
    out.push_back(make(m, c));
}

FactorMultiset merge(const FactorMultiset& a, const FactorMultiset& b, auto&& combine)
{
    FactorMultiset r;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            if (int k = combine(a[i].second, 0); k > 0) r.emplace_back(a[i].first, k);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            if (int k = combine(0, b[j].second); k > 0) r.emplace_back(b[j].first, k);
            ++j;
        } else {
            if (int k = combine(a[i].second, b[j].second); k > 0) r.emplace_back(a[i].first, k);
            ++i;
            ++j;
        }
    }
    return r;
}

} // namespace

std::strong_ordering operator<=>(const BinomialFactor& x, const BinomialFactor& y)
{
    if (auto c = grlex(x.m_, y.m_); c != 0) return c;
    return x.b_ <=> y.b_;
}

std::string BinomialFactor::to_string() const
{
    return LaurentPoly::binomial(m_, a_, b_).to_string();
}

Canonical Canonical::of(const Monomial& m, const ExactScalar& a, const ExactScalar& b)
{
    Canonical r;
    r.shift = Monomial(m.nvars());
    auto make = [](const Monomial& mm, const ExactScalar& c) { return BinomialFactor(mm, c); };
    if (m.is_one()) {
        r.scalar = a + b;
        if (r.scalar.is_zero()) throw PoleError("binomial factor is identically zero");
        return r;
    }
    if (a.is_zero() && b.is_zero()) throw PoleError("binomial factor is identically zero");
    if (a.is_zero()) {
        r.scalar = b;
        return r;
    }
    if (b.is_zero()) {
        r.scalar = a;
        r.shift = m;
        return r;
    }
    if (m.lex_positive()) {
        r.scalar = a;
        split_into(m, b / a, r.factors, make);
    } else {
        r.scalar = b;
        r.shift = m;
        split_into(-m, a / b, r.factors, make);
    }
    return r;
}

Substitution Substitution::identity(int n)
{
    Substitution s;
    s.new_nvars = n;
    for (int i = 0; i < n; ++i) s.images.push_back({1, 0, Monomial::unit(n, i)});
    return s;
}

ExactScalar Substitution::scalar_of(const Monomial& m) const
{
    long upow = 0;
    long neg = 0;
    for (int i = 0; i < m.nvars(); ++i) {
        const auto& img = images[static_cast<size_t>(i)];
        upow += img.upow * m[i];
        if (img.sign < 0) neg += m[i];
    }
    ExactScalar s = ExactScalar::u_pow(upow);
    return (neg % 2 != 0) ? -s : s;
}

Monomial Substitution::monomial_of(const Monomial& m) const
{
    Monomial r(new_nvars);
    for (int i = 0; i < m.nvars(); ++i) r = r + images[static_cast<size_t>(i)].target * m[i];
    return r;
}

LaurentPoly expand(const FactorMultiset& factors)
{
    if (factors.empty()) throw AlgebraError("expand needs the variable count; use expand_in");
    LaurentPoly r(factors.front().first.monomial().nvars(), ExactScalar(1));
    for (const auto& [f, k] : factors)
        for (int i = 0; i < k; ++i) r = r * f.to_poly();
    return r;
}

namespace {

LaurentPoly expand_in(int nvars, const FactorMultiset& factors)
{
    return factors.empty() ? LaurentPoly(nvars, ExactScalar(1)) : expand(factors);
}

} // namespace

FactorizedRatFunc::FactorizedRatFunc(LaurentPoly num) : num_(std::move(num)) {}

FactorizedRatFunc::FactorizedRatFunc(LaurentPoly num, const FactorMultiset& den) : num_(std::move(num))
{
    std::vector<RawFactor> raw;
    for (const auto& [f, k] : den) raw.push_back({f.monomial(), f.coeff_a(), f.coeff_b(), k});
    *this = from_raw(std::move(num_), raw);
}

FactorizedRatFunc FactorizedRatFunc::from_raw(LaurentPoly num, const std::vector<RawFactor>& den)
{
    FactorizedRatFunc r;
    r.num_ = std::move(num);
    std::map<BinomialFactor, int> acc;
    for (const auto& rf : den) {
        if (rf.mult == 0) continue;
        if (rf.mult < 0) throw AlgebraError("negative denominator multiplicity");
        Canonical c = Canonical::of(rf.m, rf.a, rf.b);
        r.num_ = r.num_.scaled(c.scalar.pow(-rf.mult)).shifted(c.shift * (-rf.mult));
        for (const auto& f : c.factors) acc[f] += rf.mult;
    }
    r.den_.assign(acc.begin(), acc.end());
    r.cancel();
    return r;
}

void FactorizedRatFunc::cancel()
{
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    FactorMultiset kept;
    for (auto& [f, k] : den_) {
        LaurentPoly fp = f.to_poly();
        while (k > 0) {
            auto q = num_.exact_divide(fp);
            if (!q) break;
            num_ = std::move(*q);
            --k;
        }
        if (k > 0) kept.emplace_back(f, k);
    }
    den_ = std::move(kept);
}

FactorizedRatFunc FactorizedRatFunc::renormalized() const
{
    return FactorizedRatFunc(num_, den_);
}

FactorizedRatFunc FactorizedRatFunc::constant(int nvars, const ExactScalar& c)
{
    return FactorizedRatFunc(LaurentPoly(nvars, c));
}

FactorizedRatFunc FactorizedRatFunc::monomial(const Monomial& m, const ExactScalar& c)
{
    return FactorizedRatFunc(LaurentPoly(m, c));
}

FactorizedRatFunc FactorizedRatFunc::inverse_binomial(const Monomial& m, const ExactScalar& a,
                                                      const ExactScalar& b)
{
    return from_raw(LaurentPoly(m.nvars(), ExactScalar(1)), {{m, a, b, 1}});
}

FactorizedRatFunc FactorizedRatFunc::binomial_ratio(const Monomial& m, const ExactScalar& a,
                                                    const ExactScalar& b, const Monomial& k,
                                                    const ExactScalar& c, const ExactScalar& d)
{
    FactorProduct p(m.nvars());
    p.mul_binomial(m, a, b, 1);
    p.mul_binomial(k, c, d, -1);
    return p.to_ratfunc();
}

int FactorizedRatFunc::den_degree() const
{
    int d = 0;
    for (const auto& [f, k] : den_) d += k;
    return d;
}

LaurentPoly FactorizedRatFunc::den_poly() const
{
    return expand_in(nvars(), den_);
}

FactorizedRatFunc FactorizedRatFunc::operator-() const
{
    FactorizedRatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

FactorizedRatFunc operator+(const FactorizedRatFunc& a, const FactorizedRatFunc& b)
{
    return FactorizedRatFunc::sum({a, b});
}

FactorizedRatFunc operator-(const FactorizedRatFunc& a, const FactorizedRatFunc& b)
{
    return FactorizedRatFunc::sum({a, -b});
}

FactorizedRatFunc FactorizedRatFunc::sum(const std::vector<FactorizedRatFunc>& terms)
{
    if (terms.empty()) throw InputError("empty sum needs a variable count");
    int n = terms.front().nvars();
    FactorMultiset lcm;
    for (const auto& t : terms) {
        if (t.nvars() != n) throw InputError("variable count mismatch in sum");
        if (t.is_zero()) continue;
        lcm = merge(lcm, t.den_, [](int x, int y) { return std::max(x, y); });
    }
    FactorizedRatFunc r;
    r.num_ = LaurentPoly(n);
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        FactorMultiset missing = merge(lcm, t.den_, [](int x, int y) { return x - y; });
        if (missing.empty())
            r.num_ += t.num_;
        else
            r.num_ += t.num_ * expand(missing);
    }
    r.den_ = std::move(lcm);
    r.cancel();
    return r;
}

FactorizedRatFunc operator*(const FactorizedRatFunc& a, const FactorizedRatFunc& b)
{
    if (a.nvars() != b.nvars()) throw InputError("variable count mismatch in product");
    FactorizedRatFunc r;
    r.num_ = a.num_ * b.num_;
    r.den_ = merge(a.den_, b.den_, [](int x, int y) { return x + y; });
    r.cancel();
    return r;
}

FactorizedRatFunc FactorizedRatFunc::inverse() const
{
    if (num_.is_zero()) throw PoleError("inverse of the zero rational function");
    LaurentPoly num = den_poly();
    if (num_.is_term()) {
        const auto& [m, c] = num_.leading();
        return FactorizedRatFunc(num.scaled(c.inverse()).shifted(-m));
    }
    if (num_.size() == 2) {
        const auto& [m1, c1] = num_.leading();
        const auto& [m2, c2] = num_.trailing();
        return from_raw(num.shifted(-m2), {{m1 - m2, c1, c2, 1}});
    }
    throw AlgebraError("cannot invert: numerator " + num_.to_string() + " is not a tracked binomial");
}

FactorizedRatFunc operator/(const FactorizedRatFunc& a, const FactorizedRatFunc& b)
{
    if (b.is_zero()) throw PoleError("division by the zero rational function");
    return a * b.inverse();
}

FactorizedRatFunc FactorizedRatFunc::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    FactorizedRatFunc acc = constant(nvars(), ExactScalar(1)), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

FactorizedRatFunc FactorizedRatFunc::scaled(const ExactScalar& c) const
{
    FactorizedRatFunc r = *this;
    r.num_ = r.num_.scaled(c);
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

bool FactorizedRatFunc::equals(const FactorizedRatFunc& o) const
{
    if (nvars() != o.nvars()) throw InputError("variable count mismatch in equality test");
    FactorMultiset only_mine = merge(den_, o.den_, [](int x, int y) { return x - y; });
    FactorMultiset only_theirs = merge(o.den_, den_, [](int x, int y) { return x - y; });
    LaurentPoly lhs = only_theirs.empty() ? num_ : num_ * expand(only_theirs);
    LaurentPoly rhs = only_mine.empty() ? o.num_ : o.num_ * expand(only_mine);
    return lhs == rhs;
}

FactorizedRatFunc FactorizedRatFunc::substitute(const Substitution& s) const
{
    if (static_cast<int>(s.images.size()) != nvars())
        throw InputError("substitution has " + std::to_string(s.images.size()) + " images for " +
                         std::to_string(nvars()) + " variables");
    for (const auto& img : s.images) {
        if (img.sign != 1 && img.sign != -1) throw InputError("substitution sign must be +1 or -1");
        if (img.target.nvars() != s.new_nvars) throw InputError("substitution target has wrong arity");
    }
    LaurentPoly num(s.new_nvars);
    for (const auto& [m, c] : num_.terms()) num.add_term(s.monomial_of(m), c * s.scalar_of(m));
    std::vector<RawFactor> raw;
    for (const auto& [f, k] : den_) {
        ExactScalar a = f.coeff_a() * s.scalar_of(f.monomial());
        Monomial m = s.monomial_of(f.monomial());
        if (m.is_one() && (a + f.coeff_b()).is_zero())
            throw PoleError("pole under specialization: factor " + f.to_string() + " maps to zero");
        raw.push_back({m, a, f.coeff_b(), k});
    }
    return from_raw(std::move(num), raw);
}

BigRat FactorizedRatFunc::eval(const BigRat& u0, const std::vector<BigRat>& x0) const
{
    if (sgn(u0) == 0) throw PoleError("evaluation at u = 0");
    BigRat d = 1;
    for (const auto& [f, k] : den_) {
        BigRat v = f.to_poly().eval(u0, x0);
        if (sgn(v) == 0) throw PoleError("pole at point: factor " + f.to_string() + " vanishes");
        for (int i = 0; i < k; ++i) d *= v;
    }
    return num_.eval(u0, x0) / d;
}

std::string FactorizedRatFunc::to_string() const
{
    std::string s = num_.to_string();
    if (den_.empty()) return s;
    std::ostringstream os;
    os << "(" << s << ")/(";
    bool first = true;
    for (const auto& [f, k] : den_) {
        if (!first) os << "*";
        first = false;
        os << "(" << f.to_string() << ")";
        if (k > 1) os << "^" << k;
    }
    os << ")";
    return os.str();
}

FactorProduct& FactorProduct::mul_scalar(const ExactScalar& c)
{
    scalar_ *= c;
    return *this;
}

FactorProduct& FactorProduct::mul_monomial(const Monomial& m)
{
    shift_ = shift_ + m;
    return *this;
}

FactorProduct& FactorProduct::mul_binomial(const Monomial& m, const ExactScalar& a, const ExactScalar& b, int e)
{
    if (e == 0) return *this;
    if (a.is_zero() && b.is_zero()) {
        if (e < 0) throw PoleError("division by a zero binomial");
        scalar_ = ExactScalar();
        return *this;
    }
    Canonical c = Canonical::of(m, a, b);
    scalar_ *= c.scalar.pow(e);
    shift_ = shift_ + c.shift * e;
    for (const auto& f : c.factors) {
        int& k = factors_[f];
        k += e;
        if (k == 0) factors_.erase(f);
    }
    return *this;
}

FactorProduct& FactorProduct::operator*=(const FactorProduct& o)
{
    scalar_ *= o.scalar_;
    shift_ = shift_ + o.shift_;
    for (const auto& [f, e] : o.factors_) {
        int& k = factors_[f];
        k += e;
        if (k == 0) factors_.erase(f);
    }
    return *this;
}

FactorizedRatFunc FactorProduct::to_ratfunc() const
{
    LaurentPoly num(shift_, scalar_);
    FactorMultiset den;
    bool primitive = true;
    for (const auto& [f, e] : factors_) {
        if (e > 0) {
            for (int i = 0; i < e; ++i) num = num * f.to_poly();
            primitive = primitive && f.monomial().content() == 1;
        } else {
            den.emplace_back(f, -e);
        }
    }
    if (!primitive) return FactorizedRatFunc(std::move(num), den);
    // X^m + c with primitive m is irreducible, and distinct canonical
    // factors are coprime, so nothing can cancel.
    FactorizedRatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

FactorizedRatFunc FactorProduct::times(const FactorizedRatFunc& f) const
{
    if (f.nvars() != nvars()) throw InputError("variable count mismatch in product");
    if (f.is_zero()) return f;
    std::map<BinomialFactor, int> mine = factors_;
    std::map<BinomialFactor, int> den;
    for (const auto& [g, k] : f.den_) {
        int& e = mine[g];
        int c = std::clamp(e, 0, k);
        e -= c;
        if (k - c > 0) den[g] += k - c;
    }
    LaurentPoly num = f.num_.scaled(scalar_).shifted(shift_);
    for (auto& [g, e] : mine) {
        if (e >= 0) continue;
        LaurentPoly gp = g.to_poly();
        while (e < 0) {
            auto q = num.exact_divide(gp);
            if (!q) break;
            num = std::move(*q);
            ++e;
        }
        if (e < 0) den[g] += -e;
    }
    for (const auto& [g, e] : mine)
        for (int i = 0; i < e; ++i) num = num * g.to_poly();
    return FactorizedRatFunc(std::move(num), FactorMultiset(den.begin(), den.end()));
}

} // namespace hermsph

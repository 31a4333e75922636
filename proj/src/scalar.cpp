#include "hermsph/scalar.hpp"

#include "hermsph/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hermsph {

namespace upoly {

void trim(UPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly add(const UPoly& a, const UPoly& b)
{
    UPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

UPoly sub(const UPoly& a, const UPoly& b)
{
    UPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

UPoly mul(const UPoly& a, const UPoly& b)
{
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
{
    if (b.empty()) throw PoleError("polynomial division by zero");
    UPoly rem = a;
    if (rem.size() < b.size()) return {UPoly{}, rem};
    UPoly quo(rem.size() - b.size() + 1);
    const BigRat& lead = b.back();
    for (size_t k = quo.size(); k-- > 0;) {
        BigRat c = rem[k + b.size() - 1] / lead;
        quo[k] = c;
        if (sgn(c) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
    }
    trim(quo);
    trim(rem);
    return {quo, rem};
}

UPoly gcd(const UPoly& a, const UPoly& b)
{
    UPoly x = a, y = b;
    while (!y.empty()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return x;
    BigRat lead = x.back();
    for (auto& c : x) c /= lead;
    return x;
}

BigRat eval(const UPoly& p, const BigRat& x)
{
    BigRat acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

int compare(const UPoly& a, const UPoly& b)
{
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

} // namespace upoly

namespace {

size_t low_index(const UPoly& p)
{
    size_t i = 0;
    while (i < p.size() && sgn(p[i]) == 0) ++i;
    return i;
}

bool is_upow(const UPoly& p)
{
    return !p.empty() && low_index(p) == p.size() - 1;
}

UPoly shift_up(const UPoly& p, size_t k)
{
    if (p.empty() || k == 0) return p;
    UPoly r(p.size() + k);
    std::copy(p.begin(), p.end(), r.begin() + static_cast<long>(k));
    return r;
}

} // namespace

ExactScalar::ExactScalar(long v) : den_{BigRat(1)}
{
    if (v != 0) num_.push_back(BigRat(v));
}

ExactScalar::ExactScalar(const BigRat& v) : den_{BigRat(1)}
{
    if (sgn(v) != 0) num_.push_back(v);
}

ExactScalar::ExactScalar(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

ExactScalar ExactScalar::u_pow(long k)
{
    ExactScalar r;
    size_t m = static_cast<size_t>(k < 0 ? -k : k);
    UPoly p(m + 1);
    p[m] = 1;
    if (k >= 0) {
        r.num_ = std::move(p);
    } else {
        r.num_ = {BigRat(1)};
        r.den_ = std::move(p);
    }
    return r;
}

void ExactScalar::normalize()
{
    upoly::trim(num_);
    upoly::trim(den_);
    if (den_.empty()) throw PoleError("scalar with zero denominator");
    if (num_.empty()) {
        den_ = {BigRat(1)};
        return;
    }
    size_t k = std::min(low_index(num_), low_index(den_));
    if (k > 0) {
        num_.erase(num_.begin(), num_.begin() + static_cast<long>(k));
        den_.erase(den_.begin(), den_.begin() + static_cast<long>(k));
    }
    if (den_.size() > 1 && !is_upow(den_)) {
        UPoly g = upoly::gcd(num_, den_);
        if (g.size() > 1) {
            num_ = upoly::divmod(num_, g).first;
            den_ = upoly::divmod(den_, g).first;
        }
    }
    if (den_.back() != 1) {
        BigRat lead = den_.back();
        for (auto& c : num_) c /= lead;
        for (auto& c : den_) c /= lead;
    }
}

bool ExactScalar::is_one() const
{
    return num_.size() == 1 && num_[0] == 1 && den_.size() == 1;
}

BigRat ExactScalar::rational_value() const
{
    if (!is_rational()) throw AlgebraError("scalar " + to_string() + " is not rational");
    return num_.empty() ? BigRat(0) : num_[0];
}

std::optional<std::pair<BigRat, long>> ExactScalar::as_monomial() const
{
    if (num_.empty() || !is_upow(num_) || !is_upow(den_)) return std::nullopt;
    return std::make_pair(num_.back(),
                          static_cast<long>(num_.size()) - static_cast<long>(den_.size()));
}

std::optional<ExactScalar> ExactScalar::monomial_sqrt() const
{
    auto m = as_monomial();
    if (!m || m->second % 2 != 0 || sgn(m->first) < 0) return std::nullopt;
    BigInt n = m->first.get_num(), d = m->first.get_den();
    BigInt rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return ExactScalar(BigRat(rn, rd)) * u_pow(m->second / 2);
}

ExactScalar ExactScalar::operator-() const
{
    ExactScalar r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

ExactScalar ExactScalar::inverse() const
{
    if (is_zero()) throw PoleError("inverse of zero scalar");
    return ExactScalar(den_, num_);
}

ExactScalar ExactScalar::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    ExactScalar base = *this, acc(1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return ExactScalar(upoly::add(a.num_, b.num_), a.den_);
    if (is_upow(a.den_) && is_upow(b.den_)) {
        size_t m = std::max(a.den_.size(), b.den_.size());
        UPoly num = upoly::add(shift_up(a.num_, m - a.den_.size()),
                               shift_up(b.num_, m - b.den_.size()));
        UPoly den(m);
        den[m - 1] = 1;
        return ExactScalar(std::move(num), std::move(den));
    }
    return ExactScalar(upoly::add(upoly::mul(a.num_, b.den_), upoly::mul(b.num_, a.den_)),
                       upoly::mul(a.den_, b.den_));
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b)
{
    return a + (-b);
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b)
{
    if (a.is_zero() || b.is_zero()) return ExactScalar();
    return ExactScalar(upoly::mul(a.num_, b.num_), upoly::mul(a.den_, b.den_));
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b)
{
    if (b.is_zero()) throw PoleError("scalar division by zero");
    return ExactScalar(upoly::mul(a.num_, b.den_), upoly::mul(a.den_, b.num_));
}

std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b)
{
    int c = upoly::compare(a.num_, b.num_);
    if (c == 0) c = upoly::compare(a.den_, b.den_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

BigRat ExactScalar::eval(const BigRat& u0) const
{
    BigRat d = upoly::eval(den_, u0);
    if (sgn(d) == 0) throw PoleError("scalar " + to_string() + " has a pole at u = " + hermsph::to_string(u0));
    return upoly::eval(num_, u0) / d;
}

std::string to_string(const BigRat& r)
{
    return r.get_str();
}

namespace {

std::string poly_text(const UPoly& p)
{
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        if (sgn(p[i]) == 0) continue;
        BigRat c = p[i];
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        BigRat a = abs(c);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "u";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace

std::string ExactScalar::to_string() const
{
    auto paren = [](const UPoly& p) {
        size_t nz = 0;
        for (const auto& c : p) nz += sgn(c) != 0;
        std::string s = poly_text(p);
        return nz > 1 || (nz == 1 && sgn(p.back()) < 0) ? "(" + s + ")" : s;
    };
    if (den_.size() == 1 && den_[0] == 1) return poly_text(num_);
    return paren(num_) + "/" + paren(den_);
}

} // namespace hermsph

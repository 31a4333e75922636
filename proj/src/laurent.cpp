#include "hermsph/laurent.hpp"

#include "hermsph/errors.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace hermsph {

LaurentPoly::LaurentPoly(int nvars, const ExactScalar& c) : nvars_(nvars)
{
    add_term(Monomial(nvars), c);
}

LaurentPoly::LaurentPoly(const Monomial& m, const ExactScalar& c) : nvars_(m.nvars())
{
    add_term(m, c);
}

LaurentPoly LaurentPoly::variable(int nvars, int i, int power)
{
    return LaurentPoly(Monomial::unit(nvars, i, power));
}

LaurentPoly LaurentPoly::binomial(const Monomial& m, const ExactScalar& a, const ExactScalar& b)
{
    LaurentPoly p(m, a);
    p.add_term(Monomial(m.nvars()), b);
    return p;
}

bool LaurentPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

ExactScalar LaurentPoly::constant_term() const
{
    return coeff(Monomial(nvars_));
}

ExactScalar LaurentPoly::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? ExactScalar() : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const ExactScalar& c)
{
    if (c.is_zero()) return;
    if (m.nvars() != nvars_) throw InputError("monomial variable count mismatch");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const
{
    if (nvars_ != o.nvars_)
        throw InputError("variable count mismatch: " + std::to_string(nvars_) + " vs " +
                         std::to_string(o.nvars_));
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    a.check_compatible(b);
    LaurentPoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const ExactScalar& c) const
{
    if (c.is_zero()) return LaurentPoly(nvars_);
    LaurentPoly r = *this;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(const Monomial& s) const
{
    LaurentPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m + s, c);
    return r;
}

LaurentPoly LaurentPoly::pow(long e) const
{
    if (e < 0) {
        if (!is_term()) throw AlgebraError("negative power of a polynomial with several terms");
        const auto& [m, c] = leading();
        return LaurentPoly(m * static_cast<int>(e), c.pow(e));
    }
    LaurentPoly base = *this, acc(nvars_, ExactScalar(1));
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

std::vector<int> LaurentPoly::min_exponents() const
{
    std::vector<int> r(static_cast<size_t>(nvars_), INT_MAX);
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < nvars_; ++i) r[static_cast<size_t>(i)] = std::min(r[static_cast<size_t>(i)], m[i]);
    return r;
}

std::vector<int> LaurentPoly::max_exponents() const
{
    std::vector<int> r(static_cast<size_t>(nvars_), INT_MIN);
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < nvars_; ++i) r[static_cast<size_t>(i)] = std::max(r[static_cast<size_t>(i)], m[i]);
    return r;
}

std::optional<LaurentPoly> LaurentPoly::exact_divide(const LaurentPoly& d) const
{
    check_compatible(d);
    if (d.is_zero()) throw PoleError("division by the zero polynomial");
    if (is_zero()) return LaurentPoly(nvars_);
    if (d.is_term()) {
        const auto& [dm, dc] = d.leading();
        ExactScalar inv = dc.inverse();
        LaurentPoly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m - dm, c * inv);
        return r;
    }

    auto pmin = min_exponents(), pmax = max_exponents();
    auto dmin = d.min_exponents(), dmax = d.max_exponents();
    std::vector<int> lo(static_cast<size_t>(nvars_)), hi(static_cast<size_t>(nvars_));
    for (size_t i = 0; i < lo.size(); ++i) {
        lo[i] = pmin[i] - dmin[i];
        hi[i] = pmax[i] - dmax[i];
        if (lo[i] > hi[i]) return std::nullopt;
    }

    const auto& [lead_m, lead_c] = d.leading();
    ExactScalar lead_inv = lead_c.inverse();
    LaurentPoly rem = *this;
    LaurentPoly quo(nvars_);
    while (!rem.is_zero()) {
        const Monomial rm = rem.leading().first;
        const ExactScalar rc = rem.leading().second;
        Monomial t = rm - lead_m;
        for (int i = 0; i < nvars_; ++i)
            if (t[i] < lo[static_cast<size_t>(i)] || t[i] > hi[static_cast<size_t>(i)]) return std::nullopt;
        ExactScalar c = rc * lead_inv;
        quo.add_term(t, c);
        for (const auto& [dm, dc] : d.terms_) rem.add_term(t + dm, -(c * dc));
    }
    return quo;
}

BigRat LaurentPoly::eval(const BigRat& u0, const std::vector<BigRat>& x0) const
{
    if (x0.size() != static_cast<size_t>(nvars_)) throw InputError("evaluation point has wrong length");
    BigRat acc = 0;
    for (const auto& [m, c] : terms_) {
        BigRat t = c.eval(u0);
        for (int i = 0; i < nvars_; ++i) {
            int e = m[i];
            if (e == 0) continue;
            const BigRat& x = x0[static_cast<size_t>(i)];
            if (sgn(x) == 0) throw PoleError("evaluation at X_" + std::to_string(i + 1) + " = 0");
            BigRat p = 1;
            for (int k = 0; k < std::abs(e); ++k) p *= x;
            if (e > 0) t *= p; else t /= p;
        }
        acc += t;
    }
    return acc;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        const auto& [m, c] = *it;
        std::string cs = c.to_string();
        bool mono = !m.is_one();
        if (!mono) {
            os << cs;
            continue;
        }
        if (!c.is_one()) os << "(" << cs << ")*";
        bool f2 = true;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!f2) os << "*";
            f2 = false;
            os << "X" << (i + 1);
            if (m[i] != 1) os << "^" << m[i];
        }
    }
    return os.str();
}

} // namespace hermsph

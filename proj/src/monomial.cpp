#include "hermsph/monomial.hpp"

#include "hermsph/errors.hpp"

#include <numeric>
#include <string>

namespace hermsph {

Monomial::Monomial(int nvars) : n_(nvars)
{
    if (nvars < 0 || nvars > kMaxVars)
        throw InputError("variable count " + std::to_string(nvars) + " outside [0, " +
                         std::to_string(kMaxVars) + "]");
}

Monomial::Monomial(std::initializer_list<int> exps)
    : Monomial(std::span<const int>(exps.begin(), exps.size()))
{
}

Monomial::Monomial(std::span<const int> exps) : Monomial(static_cast<int>(exps.size()))
{
    for (size_t i = 0; i < exps.size(); ++i) e_[i] = exps[i];
}

Monomial Monomial::unit(int nvars, int i, int power)
{
    Monomial m(nvars);
    m[i] = power;
    return m;
}

int Monomial::degree() const
{
    int d = 0;
    for (int i = 0; i < n_; ++i) d += e_[static_cast<size_t>(i)];
    return d;
}

bool Monomial::is_one() const
{
    for (int i = 0; i < n_; ++i)
        if (e_[static_cast<size_t>(i)] != 0) return false;
    return true;
}

bool Monomial::lex_positive() const
{
    for (int i = 0; i < n_; ++i) {
        int v = e_[static_cast<size_t>(i)];
        if (v != 0) return v > 0;
    }
    return false;
}

int Monomial::content() const
{
    int g = 0;
    for (int i = 0; i < n_; ++i) g = std::gcd(g, e_[static_cast<size_t>(i)]);
    return g;
}

Monomial Monomial::operator+(const Monomial& o) const
{
    if (n_ != o.n_) throw InputError("monomial variable count mismatch");
    Monomial r = *this;
    for (int i = 0; i < n_; ++i) r[i] += o[i];
    return r;
}

Monomial Monomial::operator-(const Monomial& o) const
{
    return *this + (-o);
}

Monomial Monomial::operator-() const
{
    Monomial r = *this;
    for (int i = 0; i < n_; ++i) r[i] = -r[i];
    return r;
}

Monomial Monomial::operator*(int k) const
{
    Monomial r = *this;
    for (int i = 0; i < n_; ++i) r[i] *= k;
    return r;
}

std::strong_ordering grlex(const Monomial& a, const Monomial& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    int n = std::min(a.nvars(), b.nvars());
    for (int i = 0; i < n; ++i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    return a.nvars() <=> b.nvars();
}

} // namespace hermsph

#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace hermsph {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Dense univariate polynomial in u over Q, little-endian by degree.
// The empty vector is the zero polynomial; no trailing zeros are kept.
using UPoly = std::vector<BigRat>;

namespace upoly {
void trim(UPoly& p);
UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);
BigRat eval(const UPoly& p, const BigRat& x);
int compare(const UPoly& a, const UPoly& b);
} // namespace upoly

/// Element of Q(u), the field of rational functions in u = q^{1/2}.
///
/// Stored as num/den with gcd(num, den) = 1 and den monic.  Zero is 0/1.
/// All arithmetic is exact; values are immutable once built.
class ExactScalar {
public:
    ExactScalar() : den_{BigRat(1)} {}
    ExactScalar(long v);
    ExactScalar(const BigRat& v);
    ExactScalar(UPoly num, UPoly den);

    static ExactScalar u_pow(long k);
    static ExactScalar q_pow(long k) { return u_pow(2 * k); }
    static ExactScalar u() { return u_pow(1); }
    static ExactScalar q() { return u_pow(2); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    bool is_rational() const { return den_.size() == 1 && num_.size() <= 1; }
    BigRat rational_value() const;

    // If the value is c * u^k with c rational, returns (c, k).
    std::optional<std::pair<BigRat, long>> as_monomial() const;
    // Square root inside Q(u) when the value is c * u^(2j) with c a rational square.
    std::optional<ExactScalar> monomial_sqrt() const;

    ExactScalar operator-() const;
    ExactScalar inverse() const;
    ExactScalar pow(long e) const;

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
    ExactScalar& operator+=(const ExactScalar& b) { return *this = *this + b; }
    ExactScalar& operator-=(const ExactScalar& b) { return *this = *this - b; }
    ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    // Arbitrary but total structural order, used for canonical sorting.
    friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b);

    // Value at u = u0; throws PoleError when den(u0) = 0.
    BigRat eval(const BigRat& u0) const;

    // Plain-text rendering, e.g. "(1 - u^2)/u^4".
    std::string to_string() const;

private:
    void normalize();

    UPoly num_;
    UPoly den_;
};

std::string to_string(const BigRat& r);

} // namespace hermsph

#pragma once

#include "hermsph/laurent.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hermsph {

/// coeffA * X^m + coeffB kept in canonical form X^m + c:
/// coeffA = 1, m lexicographically positive, c nonzero.  Squares of the
/// form X^{2m} - d^2 are split into (X^m - d)(X^m + d) before storage, so
/// two factors that agree up to a unit compare equal structurally.
class BinomialFactor {
public:
    const Monomial& monomial() const { return m_; }
    const ExactScalar& coeff_a() const { return a_; }
    const ExactScalar& coeff_b() const { return b_; }
    LaurentPoly to_poly() const { return LaurentPoly::binomial(m_, a_, b_); }
    std::string to_string() const;

    friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
    friend std::strong_ordering operator<=>(const BinomialFactor& x, const BinomialFactor& y);

private:
    friend struct Canonical;
    BinomialFactor(Monomial m, ExactScalar c) : m_(m), a_(1), b_(std::move(c)) {}

    Monomial m_;
    ExactScalar a_;
    ExactScalar b_;
};

/// a X^m + b written as unit * prod(factors); unit = scalar * X^shift.
struct Canonical {
    ExactScalar scalar{1};
    Monomial shift;
    std::vector<BinomialFactor> factors;

    // Throws PoleError when a = b = 0 and m is the trivial monomial.
    static Canonical of(const Monomial& m, const ExactScalar& a, const ExactScalar& b);
};

using FactorMultiset = std::vector<std::pair<BinomialFactor, int>>;

/// One variable image for substitute(): X_i -> sign * u^upow * Y^target.
struct VarImage {
    int sign = 1;
    long upow = 0;
    Monomial target;
};

struct Substitution {
    int new_nvars = 0;
    std::vector<VarImage> images;

    static Substitution identity(int n);
    ExactScalar scalar_of(const Monomial& m) const;
    Monomial monomial_of(const Monomial& m) const;
};

/// Rational function num / prod(den factors ^ mult).  On construction every
/// denominator factor that divides the numerator exactly is cancelled, so the
/// stored denominator is minimal among tracked binomials.
class FactorizedRatFunc {
public:
    FactorizedRatFunc() = default;
    explicit FactorizedRatFunc(int nvars) : num_(nvars) {}
    FactorizedRatFunc(LaurentPoly num);
    FactorizedRatFunc(LaurentPoly num, const FactorMultiset& den);

    static FactorizedRatFunc constant(int nvars, const ExactScalar& c);
    static FactorizedRatFunc monomial(const Monomial& m, const ExactScalar& c = ExactScalar(1));
    // (a X^m + b) / (c X^k + d) with canonicalization; the workhorse for
    // closed forms made of binomial quotients.
    static FactorizedRatFunc binomial_ratio(const Monomial& m, const ExactScalar& a, const ExactScalar& b,
                                            const Monomial& k, const ExactScalar& c, const ExactScalar& d);
    // 1 / (a X^m + b)
    static FactorizedRatFunc inverse_binomial(const Monomial& m, const ExactScalar& a, const ExactScalar& b);

    int nvars() const { return num_.nvars(); }
    const LaurentPoly& num() const { return num_; }
    const FactorMultiset& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.empty(); }
    int den_degree() const;
    LaurentPoly den_poly() const;

    FactorizedRatFunc operator-() const;
    friend FactorizedRatFunc operator+(const FactorizedRatFunc& a, const FactorizedRatFunc& b);
    friend FactorizedRatFunc operator-(const FactorizedRatFunc& a, const FactorizedRatFunc& b);
    friend FactorizedRatFunc operator*(const FactorizedRatFunc& a, const FactorizedRatFunc& b);
    // The divisor's numerator must be a single term or a binomial.
    friend FactorizedRatFunc operator/(const FactorizedRatFunc& a, const FactorizedRatFunc& b);
    FactorizedRatFunc pow(long e) const;
    FactorizedRatFunc inverse() const;
    FactorizedRatFunc scaled(const ExactScalar& c) const;

    // Sum over a common denominator, cancelling once at the end.
    static FactorizedRatFunc sum(const std::vector<FactorizedRatFunc>& terms);

    // Cross-multiplied equality; no multivariate gcd involved.
    bool equals(const FactorizedRatFunc& o) const;

    FactorizedRatFunc substitute(const Substitution& s) const;

    BigRat eval(const BigRat& u0, const std::vector<BigRat>& x0) const;

    // Denominator factors that survived cancellation.
    std::string to_string() const;

    // Structural equality of the canonical representation.
    friend bool operator==(const FactorizedRatFunc& a, const FactorizedRatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Re-runs canonicalization and cancellation; a no-op on constructed values.
    FactorizedRatFunc renormalized() const;

private:
    struct RawFactor {
        Monomial m;
        ExactScalar a, b;
        int mult;
    };
    static FactorizedRatFunc from_raw(LaurentPoly num, const std::vector<RawFactor>& den);
    void cancel();

    friend class FactorProduct;

    LaurentPoly num_;
    FactorMultiset den_;
};

LaurentPoly expand(const FactorMultiset& factors);

/// Product scalar * X^shift * prod(factor^exponent) with signed exponents,
/// kept unexpanded so that numerator and denominator factors cancel
/// symbolically.  Used to build large products of binomial quotients
/// cheaply before a single expansion.
class FactorProduct {
public:
    explicit FactorProduct(int nvars) : shift_(nvars) {}

    int nvars() const { return shift_.nvars(); }
    FactorProduct& mul_scalar(const ExactScalar& c);
    FactorProduct& mul_monomial(const Monomial& m);
    // (a X^m + b)^e
    FactorProduct& mul_binomial(const Monomial& m, const ExactScalar& a, const ExactScalar& b, int e = 1);
    FactorProduct& operator*=(const FactorProduct& o);

    const ExactScalar& scalar() const { return scalar_; }
    const Monomial& shift() const { return shift_; }
    const std::map<BinomialFactor, int>& factors() const { return factors_; }

    FactorizedRatFunc to_ratfunc() const;
    // this * f.  Shared factors cancel symbolically and denominator factors
    // are divided out of f's numerator before anything is expanded.
    FactorizedRatFunc times(const FactorizedRatFunc& f) const;

private:
    ExactScalar scalar_{1};
    Monomial shift_;
    std::map<BinomialFactor, int> factors_;
};

} // namespace hermsph

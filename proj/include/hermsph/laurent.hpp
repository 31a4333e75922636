#pragma once

#include "hermsph/monomial.hpp"
#include "hermsph/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hermsph {

/// Sparse Laurent polynomial in X_1..X_n with coefficients in Q(u).
/// No stored coefficient is zero.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, ExactScalar, GrlexLess>;

    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}
    LaurentPoly(int nvars, const ExactScalar& c);
    LaurentPoly(const Monomial& m, const ExactScalar& c = ExactScalar(1));

    static LaurentPoly variable(int nvars, int i, int power = 1);
    // c_a X^m + c_b
    static LaurentPoly binomial(const Monomial& m, const ExactScalar& a, const ExactScalar& b);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Single term c X^m.
    bool is_term() const { return terms_.size() == 1; }
    ExactScalar constant_term() const;
    ExactScalar coeff(const Monomial& m) const;
    const std::pair<const Monomial, ExactScalar>& leading() const { return *terms_.rbegin(); }
    const std::pair<const Monomial, ExactScalar>& trailing() const { return *terms_.begin(); }

    // Adds c X^m in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const ExactScalar& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const ExactScalar& c) const;
    LaurentPoly shifted(const Monomial& m) const;
    // Negative exponents are allowed only for single terms.
    LaurentPoly pow(long e) const;

    // Quotient when divisor divides *this exactly in the Laurent ring,
    // std::nullopt otherwise.  Long division in grlex order, bounded by the
    // per-variable exponent box the quotient must live in.
    std::optional<LaurentPoly> exact_divide(const LaurentPoly& divisor) const;

    // Image of the linear substitution on exponents m -> f(m).
    template <class F>
    LaurentPoly map_monomials(int new_nvars, F&& f) const
    {
        LaurentPoly r(new_nvars);
        for (const auto& [m, c] : terms_) r.add_term(f(m), c);
        return r;
    }

    std::vector<int> min_exponents() const;
    std::vector<int> max_exponents() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // Value at u = u0, X = x0.
    BigRat eval(const BigRat& u0, const std::vector<BigRat>& x0) const;

    std::string to_string() const;

private:
    void check_compatible(const LaurentPoly& o) const;

    int nvars_ = 0;
    TermMap terms_;
};

} // namespace hermsph

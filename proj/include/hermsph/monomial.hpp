#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace hermsph {

inline constexpr int kMaxVars = 6;

/// Exponent vector of X_1^{e_1} ... X_n^{e_n}, where X_i stands for q^{z_i}.
/// Equivalently the coefficient vector of the linear form <m, z>.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars);
    Monomial(std::initializer_list<int> exps);
    explicit Monomial(std::span<const int> exps);

    int nvars() const { return n_; }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    int& operator[](int i) { return e_[static_cast<size_t>(i)]; }
    std::vector<int> exps() const { return {e_.begin(), e_.begin() + n_}; }

    static Monomial unit(int nvars, int i, int power = 1);

    int degree() const;
    bool is_one() const;
    // First nonzero exponent is positive.
    bool lex_positive() const;
    int content() const; // gcd of |exponents|, 0 for the trivial monomial

    Monomial operator+(const Monomial& o) const;
    Monomial operator-(const Monomial& o) const;
    Monomial operator-() const;
    Monomial operator*(int k) const;

    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

private:
    std::array<int32_t, kMaxVars> e_{};
    int n_ = 0;
};

// Graded lexicographic order: total degree first, then the first differing
// exponent.  Invariant under translation, so it is also the order on the
// monomial-shifted polynomials used for Laurent division.
std::strong_ordering grlex(const Monomial& a, const Monomial& b);

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex(a, b) < 0; }
};

} // namespace hermsph

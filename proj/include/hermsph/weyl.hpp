#pragma once

#include "hermsph/ratfunc.hpp"

#include <compare>
#include <string>
#include <vector>

namespace hermsph {

/// Root of type C_n: +-e_i +- e_j (short) or +-2e_i (long).
class Root {
public:
    enum class Kind { Short, Long };

    // Throws InputError for vectors that are not roots.
    explicit Root(std::vector<int> vec);

    int rank() const { return static_cast<int>(vec_.size()); }
    const std::vector<int>& vec() const { return vec_; }
    Kind kind() const { return kind_; }
    bool is_long() const { return kind_ == Kind::Long; }
    bool is_positive() const;
    Monomial monomial() const { return Monomial(std::span<const int>(vec_)); }
    Root operator-() const;
    std::string to_string() const;

    friend bool operator==(const Root& a, const Root& b) { return a.vec_ == b.vec_; }
    friend auto operator<=>(const Root& a, const Root& b) { return a.vec_ <=> b.vec_; }

private:
    std::vector<int> vec_;
    Kind kind_;
};

Root short_root(int n, int i, int j, int si, int sj); // si e_i + sj e_j
Root long_root(int n, int i, int sign = 1);            // sign 2 e_i

// e_i - e_j, e_i + e_j (i < j), then 2 e_i; zero-based indices.
std::vector<Root> positive_roots(int n);
// e_i - e_{i+1} for i < n - 1, then 2 e_n.
std::vector<Root> simple_roots(int n);

/// Simple reflection: tau_i swaps z_i and z_{i+1} (index 1..n-1); tau negates z_n.
struct SimpleReflection {
    int index = 0; // 1..n-1 for tau_i, 0 for tau

    bool is_tau() const { return index == 0; }
    std::string token() const; // "s1".."s{n-1}" or "t"
    friend bool operator==(const SimpleReflection&, const SimpleReflection&) = default;
};

using Word = std::vector<SimpleReflection>;

/// Signed permutation acting on z by (sigma z)_i = signs_i * z_{perm(i)}.
/// The same matrix acts on roots and on exponent vectors of the pairing
/// <alpha, z>, which is invariant: <alpha, z> = <sigma alpha, sigma z>.
class WeylElem {
public:
    WeylElem() = default;
    // perm is zero-based here.
    WeylElem(std::vector<int> perm, std::vector<int> signs);

    static WeylElem identity(int n);
    static WeylElem reflection(int n, SimpleReflection s);
    // rho(z) = (-z_n, ..., -z_1)
    static WeylElem rho(int n);
    // Product of a written word s_l ... s_1 (rightmost acts first).
    static WeylElem from_word(int n, const Word& w);

    int rank() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& signs() const { return signs_; }
    bool is_identity() const;

    // Composition: (a * b)(z) = a(b(z)).
    friend WeylElem operator*(const WeylElem& a, const WeylElem& b);
    WeylElem inverse() const;

    std::vector<int> act_on_vector(const std::vector<int>& v) const;
    Root act_on_root(const Root& a) const;
    // Substitution z -> sigma z, i.e. X^m -> X^{sigma^{-1} m}.  Note the
    // composition law is act(s2, act(s1, f)) = act(s1 * s2, f).
    FactorizedRatFunc act_on_poly(const FactorizedRatFunc& f) const;
    LaurentPoly act_on_poly(const LaurentPoly& f) const;
    Substitution substitution() const;

    friend bool operator==(const WeylElem&, const WeylElem&) = default;
    friend auto operator<=>(const WeylElem& a, const WeylElem& b)
    {
        if (auto c = a.perm_ <=> b.perm_; c != 0) return c;
        return b.signs_ <=> a.signs_; // +1 sorts before -1
    }

    std::string to_string() const;

private:
    std::vector<int> perm_;
    std::vector<int> signs_;
};

// All 2^n n! elements, identity first, ordered lexicographically by
// (perm, signs) with +1 before -1.  Requires 1 <= n <= 6.
std::vector<WeylElem> enumerate_weyl(int n);

std::vector<Root> inversion_set(const WeylElem& s);
int length(const WeylElem& s);

// Reduced expression in written order s_l ... s_1 (rightmost acts first),
// found by stripping right descents greedily.
Word reduced_word(const WeylElem& s);

// Parses "s1 s2 t" (also comma separated).  Tokens outside the rank are rejected.
Word parse_word(int n, const std::string& text);
std::string format_word(const Word& w);

} // namespace hermsph

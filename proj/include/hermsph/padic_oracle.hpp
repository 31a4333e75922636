#pragma once

#include "hermsph/siegel.hpp"

#include <cstdint>
#include <vector>

namespace hermsph {

/// a + b sqrt(eps) in O_{k'} / p^N for k = Q_p, p odd, eps a non-residue.
class QuotientRingElem {
public:
    QuotientRingElem(int64_t a, int64_t b, int64_t modulus, int64_t eps);

    int64_t a() const { return a_; }
    int64_t b() const { return b_; }
    int64_t modulus() const { return mod_; }

    QuotientRingElem conj() const { return {a_, mod_ - b_, mod_, eps_}; }
    int64_t norm() const; // a^2 - eps b^2 mod p^N
    // min(v_p(a), v_p(b)); returns `cap` when the element is zero mod p^N.
    int valuation(int p, int cap) const;
    bool is_unit(int p) const;
    QuotientRingElem inverse(int p) const; // requires a unit

    friend QuotientRingElem operator+(const QuotientRingElem& x, const QuotientRingElem& y);
    friend QuotientRingElem operator*(const QuotientRingElem& x, const QuotientRingElem& y);
    friend bool operator==(const QuotientRingElem&, const QuotientRingElem&) = default;

private:
    int64_t a_, b_, mod_, eps_;
};

struct OracleConfig {
    int p = 3;
    int N = 3;
    int epsilon = 0;           // 0: smallest non-residue
    bool enumerate_alpha = false; // also sum over alpha in (O_{k'}/p^N)^x
    long budget = 0;           // 0: HS_BUDGET or 10^7

    // Fills in epsilon and budget; throws InputError for bad p, N or epsilon.
    OracleConfig resolved() const;
};

/// Element of Z[x] / Phi_{p^M}(x), i.e. Z[zeta_{p^M}].
class CyclotomicInt {
public:
    CyclotomicInt(int p, int M);

    static CyclotomicInt zeta_power(int p, int M, int64_t k); // zeta^k

    CyclotomicInt& operator+=(const CyclotomicInt& o);
    bool is_rational() const;
    const BigInt& constant() const { return c_[0]; }
    int degree() const { return static_cast<int>(c_.size()); }

private:
    void add_monomial(int64_t k, const BigInt& c);

    int p_, M_;
    int64_t pm1_; // p^{M-1}
    std::vector<BigInt> c_;
};

struct K1Cell {
    int block;           // 1 for K_{1,1}, 2 for K_{1,2}
    int64_t u, v;        // residues mod p^N
    int64_t alpha_a = 1, alpha_b = 0;
    BigRat weight;
};

// Cells of K_1 mod p^N with exact Haar weights; alpha is included only when
// cfg.enumerate_alpha is set.  Throws BudgetError when too many cells.
std::vector<K1Cell> enumerate_k1_cells(const OracleConfig& cfg);
int64_t k1_cell_count(const OracleConfig& cfg);

// omega^{(1)}_{pi^lambda}(x_e; s) by summation over K_1 cells, as a Laurent
// polynomial in Y = q^s with coefficients a + b u where u^2 = p.
FactorizedRatFunc oracle_omega_n1(const OracleConfig& cfg, int lambda, int e);

// b(pi^lambda; s) for n = 1 from exact character sums, in V = q^{-s/2}.
SVarFunc oracle_siegel_n1(const OracleConfig& cfg, int lambda);

// Character sum of psi(pi^lambda r) over r in pi^{-e} O^x / O.
BigInt siegel_shell_sum(int p, int lambda, int e);

// Replaces q by p: every coefficient c(u) becomes a + b u with u^2 = p.
// Requires a Laurent polynomial (no denominator).
FactorizedRatFunc specialize_q(const FactorizedRatFunc& f, int p);

} // namespace hermsph

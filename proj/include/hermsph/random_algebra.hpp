#pragma once

// Seeded generators of random algebra elements for property checks.

#include "hermsph/ratfunc.hpp"

#include <random>

namespace hermsph::testing {

class AlgebraGen {
public:
    explicit AlgebraGen(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    BigRat small_rat()
    {
        int n = uniform(-5, 5);
        if (n == 0) n = 1;
        BigRat r(n, uniform(1, 4));
        r.canonicalize();
        return r;
    }

    // c * u^k, occasionally (1 + u^2)-flavoured to exercise non-monomial scalars.
    ExactScalar scalar()
    {
        ExactScalar s = ExactScalar(small_rat()) * ExactScalar::u_pow(uniform(-3, 3));
        if (uniform(0, 5) == 0) s = s * (ExactScalar(1) + ExactScalar::q());
        return s;
    }

    Monomial monomial(int n, int range = 2)
    {
        Monomial m(n);
        for (int i = 0; i < n; ++i) m[i] = uniform(-range, range);
        return m;
    }

    Monomial nonzero_monomial(int n)
    {
        Monomial m = monomial(n);
        while (m.is_one()) m = monomial(n);
        return m;
    }

    LaurentPoly poly(int n, int max_terms = 4)
    {
        LaurentPoly p(n);
        int t = uniform(1, max_terms);
        for (int i = 0; i < t; ++i) p.add_term(monomial(n), scalar());
        return p;
    }

    LaurentPoly binomial(int n)
    {
        return LaurentPoly::binomial(nonzero_monomial(n), scalar(), scalar());
    }

    // num / (one or two random binomials)
    FactorizedRatFunc ratfunc(int n)
    {
        FactorizedRatFunc f(poly(n));
        int k = uniform(0, 2);
        for (int i = 0; i < k; ++i)
            f = f * FactorizedRatFunc::inverse_binomial(nonzero_monomial(n), scalar(), scalar());
        return f;
    }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
};

} // namespace hermsph::testing

#include "hermsph/latex.hpp"

#include <cstdlib>

namespace hermsph {

namespace {

std::string rat(const BigRat& r)
{
    if (r.get_den() == 1) return r.get_num().get_str();
    return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

// k/2 as a signed exponent summand; `first` drops a leading "+".
std::string half(long k, bool first)
{
    if (k == 0) return "";
    std::string s = k < 0 ? "-" : (first ? "" : "+");
    long a = std::labs(k);
    return s + (a % 2 == 0 ? std::to_string(a / 2) : "\\frac{" + std::to_string(a) + "}{2}");
}

std::string linear(const Monomial& m)
{
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        int a = m[i];
        if (a == 0) continue;
        if (a < 0) s += "-";
        else if (!s.empty()) s += "+";
        if (std::abs(a) != 1) s += std::to_string(std::abs(a));
        s += "z_" + std::to_string(i + 1);
    }
    return s;
}

std::string qpow(const std::string& e)
{
    if (e.empty()) return "";
    return e == "1" ? "q" : "q^{" + e + "}";
}

// A term with its sign split off; returns (negative, body).
std::pair<bool, std::string> term(const Monomial& m, const ExactScalar& c)
{
    std::string lin = linear(m);
    if (auto mono = c.as_monomial()) {
        auto [r, k] = *mono;
        bool neg = r < 0;
        BigRat a = abs(r);
        std::string e = qpow(lin + half(k, lin.empty()));
        if (a == 1) return {neg, e.empty() ? "1" : e};
        return {neg, rat(a) + (e.empty() ? "" : " " + e)};
    }
    std::string e = qpow(lin);
    return {false, "\\left(" + emit_latex(c) + "\\right)" + (e.empty() ? "" : " " + e)};
}

std::string sum(const std::vector<std::pair<bool, std::string>>& ts)
{
    if (ts.empty()) return "0";
    std::string s;
    for (const auto& [neg, body] : ts) {
        if (s.empty()) s = (neg ? "-" : "") + body;
        else s += (neg ? " - " : " + ") + body;
    }
    return s;
}

std::string upoly_sum(const UPoly& p)
{
    std::vector<std::pair<bool, std::string>> ts;
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        ts.push_back(term(Monomial(0), ExactScalar(p[k]) * ExactScalar::u_pow(static_cast<long>(k))));
    }
    return sum(ts);
}

} // namespace

std::string emit_latex(const ExactScalar& c)
{
    if (c.den().size() == 1 && c.den()[0] == 1) return upoly_sum(c.num());
    return "\\frac{" + upoly_sum(c.num()) + "}{" + upoly_sum(c.den()) + "}";
}

std::string emit_latex(const FactorizedRatFunc& f)
{
    std::vector<std::pair<bool, std::string>> ts;
    for (const auto& [m, c] : f.num().terms()) ts.push_back(term(m, c));
    std::string num = sum(ts);
    if (f.den().empty()) return num;
    bool bare = f.den().size() == 1 && f.den()[0].second == 1;
    std::string den;
    for (const auto& [b, mult] : f.den()) {
        std::string fac = sum({term(b.monomial(), b.coeff_a()), term(Monomial(f.nvars()), b.coeff_b())});
        if (!bare) fac = "\\left(" + fac + "\\right)";
        if (mult != 1) fac += "^{" + std::to_string(mult) + "}";
        den += (den.empty() ? "" : " ") + fac;
    }
    return "\\frac{" + num + "}{" + den + "}";
}

} // namespace hermsph

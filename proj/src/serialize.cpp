#include "hermsph/serialize.hpp"

#include "hermsph/errors.hpp"

namespace hermsph {

using nlohmann::json;

namespace {

json int_to_json(const BigInt& v)
{
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

BigInt int_from_json(const json& j)
{
    if (j.is_number_integer()) return BigInt(j.get<long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw InputError("expected an integer coefficient, got " + j.dump());
}

// Scales num/den by the lcm of coefficient denominators and divides out the
// integer content, so both arrays are integral and coprime as a pair.
std::pair<std::vector<BigInt>, std::vector<BigInt>> integral_pair(const ExactScalar& s)
{
    BigInt l = 1;
    for (const auto* p : {&s.num(), &s.den()})
        for (const auto& c : *p) l = lcm(l, BigInt(c.get_den()));
    BigInt g = 0;
    std::vector<BigInt> num, den;
    for (const auto& c : s.num()) {
        num.push_back(BigInt(c * l));
        g = gcd(g, num.back());
    }
    for (const auto& c : s.den()) {
        den.push_back(BigInt(c * l));
        g = gcd(g, den.back());
    }
    if (g != 0 && g != 1) {
        for (auto& c : num) c /= g;
        for (auto& c : den) c /= g;
    }
    if (num.empty()) num.push_back(0);
    return {num, den};
}

} // namespace

json to_json(const ExactScalar& s)
{
    auto [num, den] = integral_pair(s);
    json jn = json::array(), jd = json::array();
    for (const auto& c : num) jn.push_back(int_to_json(c));
    for (const auto& c : den) jd.push_back(int_to_json(c));
    return json{{"num_u", jn}, {"den_u", jd}};
}

ExactScalar scalar_from_json(const json& j)
{
    UPoly num, den;
    for (const auto& c : j.at("num_u")) num.push_back(BigRat(int_from_json(c)));
    for (const auto& c : j.at("den_u")) den.push_back(BigRat(int_from_json(c)));
    return ExactScalar(std::move(num), std::move(den));
}

json to_json(const FactorizedRatFunc& f)
{
    json num = json::array();
    for (const auto& [m, c] : f.num().terms()) num.push_back({{"exps", m.exps()}, {"coeff", to_json(c)}});
    json den = json::array();
    for (const auto& [b, k] : f.den())
        den.push_back({{"exps", b.monomial().exps()},
                       {"coeffA", to_json(b.coeff_a())},
                       {"coeffB", to_json(b.coeff_b())},
                       {"mult", k}});
    return json{{"nvars", f.nvars()}, {"num", num}, {"den", den}};
}

FactorizedRatFunc ratfunc_from_json(const json& j)
{
    int n = j.at("nvars").get<int>();
    auto mono = [n](const json& e) {
        auto v = e.get<std::vector<int>>();
        if (static_cast<int>(v.size()) != n) throw InputError("exps length does not match nvars");
        return Monomial(std::span<const int>(v));
    };
    LaurentPoly num(n);
    for (const auto& t : j.at("num")) num.add_term(mono(t.at("exps")), scalar_from_json(t.at("coeff")));
    FactorizedRatFunc r(num);
    for (const auto& d : j.at("den")) {
        int k = d.at("mult").get<int>();
        if (k < 0) throw InputError("negative multiplicity");
        r = r * FactorizedRatFunc::inverse_binomial(mono(d.at("exps")), scalar_from_json(d.at("coeffA")),
                                                    scalar_from_json(d.at("coeffB")))
                    .pow(k);
    }
    return r;
}

std::string dump(const json& j)
{
    return j.dump(2);
}

} // namespace hermsph

#include "hermsph/errors.hpp"
#include "hermsph/latex.hpp"
#include "hermsph/padic_oracle.hpp"
#include "hermsph/serialize.hpp"
#include "hermsph/siegel.hpp"
#include "hermsph/spherical.hpp"
#include "hermsph/verify.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>

using namespace hermsph;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Mismatch = 1, Invalid = 2, Budget = 3 };

std::vector<int> parse_lambda(const std::string& s)
{
    std::vector<int> out;
    std::stringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw InputError("bad lambda entry '" + tok + "'");
        }
    }
    if (out.empty()) throw InputError("lambda is empty");
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i] > out[i - 1]) throw InputError("lambda must be weakly decreasing");
    return out;
}

json weyl_json(const WeylElem& s)
{
    std::vector<int> perm;
    for (int p : s.perm()) perm.push_back(p + 1);
    return {{"perm", perm}, {"signs", s.signs()}};
}

struct Printer {
    std::string format = "json";

    void ratfunc(const FactorizedRatFunc& f) const
    {
        if (format == "latex") std::cout << emit_latex(f) << "\n";
        else if (format == "text") std::cout << f.to_string() << "\n";
        else std::cout << dump(to_json(f)) << "\n";
    }
};

int report(const VerificationReport& r)
{
    std::cout << dump(r.to_json()) << "\n";
    std::cerr << r.suite << ": " << r.cases << " cases, " << r.failures.size() << " failures, " << r.seconds << " s\n";
    return r.pass() ? Ok : Mismatch;
}

int verified(const std::string& name, const Verified& v)
{
    std::cout << dump({{"identity", name}, {"pass", v.pass}, {"detail", v.detail}, {"value", to_json(v.value)}}) << "\n";
    if (!v.pass) std::cerr << name << " failed: " << v.detail << "\n";
    return v.pass ? Ok : Mismatch;
}

VerificationReport run_suite(const std::string& name, const std::vector<int>& ns)
{
    auto pick = [&](std::vector<int> dflt) { return ns.empty() ? dflt : ns; };
    if (name == "cocycle") return verify_cocycle(pick({2, 3, 4}));
    if (name == "rho") return verify_rho();
    if (name == "spherical-fe") return verify_spherical_fe(pick({1, 2, 3}));
    if (name == "polynomial-invariance") return verify_polynomial_invariance(pick({1, 2, 3}));
    if (name == "n1-consistency") return verify_n1_consistency();
    if (name == "oracle-omega") return verify_oracle_omega();
    if (name == "siegel-n1") return verify_siegel_n1();
    if (name == "siegel-chain") return verify_siegel_chain();
    if (name == "zeta-k1") return verify_zeta_k1();
    if (name == "algebra") return verify_algebra();
    throw InputError("unknown suite '" + name + "'");
}

const std::vector<std::string> kSuites = {"cocycle",        "rho",          "spherical-fe", "polynomial-invariance",
                                          "n1-consistency", "oracle-omega", "siegel-n1",    "siegel-chain",
                                          "zeta-k1",        "algebra"};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact spherical functions and Siegel series on hermitian forms"};
    app.require_subcommand(1);

    int n = 1, e0 = 0, p = 3, N = 3, e = 0;
    std::string lambda, sigma, suite;
    std::string format = "json";
    bool check = false;
    std::vector<int> suite_ns;
    std::function<int()> action;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "json, latex or text")->check(CLI::IsMember({"json", "latex", "text"}));
    };

    auto* gamma = app.add_subcommand("gamma", "Gamma factor for a generator word");
    gamma->add_option("--n", n)->required();
    gamma->add_option("--sigma", sigma, "generator word, e.g. \"s1 s2 t\"");
    gamma->add_option("--e0", e0);
    add_format(gamma);
    gamma->callback([&] {
        action = [&] {
            if (n < 1) throw InputError("n must be positive");
            Word w = parse_word(n, sigma);
            GammaFactor g = gamma_cocycle(n, w, e0);
            if (format != "json") {
                Printer{format}.ratfunc(g.value);
                return Ok;
            }
            std::cout << dump({{"nvars", n},
                               {"word", format_word(w)},
                               {"sigma", weyl_json(g.sigma)},
                               {"e0", e0},
                               {"gamma", to_json(g.value)},
                               {"latex", emit_latex(g.value)}})
                      << "\n";
            return Ok;
        };
    });

    auto* sph = app.add_subcommand("spherical", "explicit spherical function and F times it");
    sph->add_option("--n", n)->required();
    sph->add_option("--lambda", lambda)->required();
    sph->add_option("--e0", e0);
    add_format(sph);
    sph->callback([&] {
        action = [&] {
            SphericalInput in{n, parse_lambda(lambda), e0};
            SphericalValue v = omega_explicit(in);
            FactorizedRatFunc fw = f_factor_product(n, e0).times(v.value);
            if (format == "json") {
                std::cout << dump({{"nvars", n},
                                   {"lambda", in.lambda},
                                   {"e0", e0},
                                   {"omega", to_json(v.value)},
                                   {"F_omega", to_json(fw)}})
                          << "\n";
            } else {
                std::cout << (format == "latex" ? "\\omega = " : "omega = ");
                Printer{format}.ratfunc(v.value);
                std::cout << (format == "latex" ? "F\\omega = " : "F*omega = ");
                Printer{format}.ratfunc(fw);
            }
            return Ok;
        };
    });

    auto* sieg = app.add_subcommand("siegel", "Siegel series identities");
    sieg->require_subcommand(1);
    auto* fe = sieg->add_subcommand("fe", "functional equation check");
    fe->add_option("--n", n)->required();
    fe->add_option("--lambda", lambda)->required();
    fe->add_option("--e0", e0);
    fe->callback([&] {
        action = [&] {
            std::vector<int> lam = parse_lambda(lambda);
            if (static_cast<int>(lam.size()) != n) throw InputError("lambda needs n entries");
            if (n == 1) return verified("n=1 functional equation", verify_siegel_fe_n1(lam[0], e0));
            return verified("fe_factor involution", fe_involution(n, lam, e0));
        };
    });
    auto* b1 = sieg->add_subcommand("b1", "b(pi^lambda; s) for n = 1 in V = q^{-s/2}");
    b1->add_option("--lambda", lambda)->required();
    add_format(b1);
    b1->callback([&] {
        action = [&] {
            std::vector<int> lam = parse_lambda(lambda);
            if (lam.size() != 1) throw InputError("b1 takes a single lambda");
            Printer{format}.ratfunc(siegel_b_n1(lam[0]));
            return Ok;
        };
    });
    auto* chain = sieg->add_subcommand("chain", "proof chain identities for rank n");
    chain->add_option("--n", n)->required();
    chain->callback([&] {
        action = [&] {
            VerificationReport r("siegel-chain n=" + std::to_string(n));
            auto add = [&r](const std::string& id, const Verified& v) {
                ++r.cases;
                if (!v.pass) r.fail(id, v.detail);
            };
            add("zeta ratio", zeta_ratio(n));
            for (int x : {0, 1}) {
                add("F_n e0=" + std::to_string(x), f_n_from_gamma_rho(n, x));
                add("chain e0=" + std::to_string(x), chain_identity(n, x));
            }
            return report(r);
        };
    });

    auto* orc = app.add_subcommand("oracle", "brute-force p-adic computations");
    orc->require_subcommand(1);
    auto* om = orc->add_subcommand("omega1", "n = 1 spherical function by cell enumeration");
    om->add_option("--p", p);
    om->add_option("--N", N);
    om->add_option("--lambda", lambda)->required();
    om->add_option("--e", e);
    om->add_flag("--check", check, "compare with the closed form");
    add_format(om);
    om->callback([&] {
        action = [&] {
            std::vector<int> lam = parse_lambda(lambda);
            if (lam.size() != 1) throw InputError("omega1 takes a single lambda");
            OracleConfig c;
            c.p = p;
            c.N = N;
            FactorizedRatFunc got = oracle_omega_n1(c, lam[0], e);
            Printer{format}.ratfunc(got);
            if (check && !got.equals(specialize_q(omega_n1_closed(lam[0], e, 0), p))) {
                std::cerr << "oracle disagrees with the closed form\n";
                return Mismatch;
            }
            return Ok;
        };
    });
    auto* so = orc->add_subcommand("siegel1", "n = 1 Siegel series by character sums");
    so->add_option("--p", p);
    so->add_option("--lambda", lambda)->required();
    so->add_flag("--check", check, "compare with the closed form");
    add_format(so);
    so->callback([&] {
        action = [&] {
            std::vector<int> lam = parse_lambda(lambda);
            if (lam.size() != 1) throw InputError("siegel1 takes a single lambda");
            OracleConfig c;
            c.p = p;
            FactorizedRatFunc got = oracle_siegel_n1(c, lam[0]);
            Printer{format}.ratfunc(got);
            if (check && !got.equals(specialize_q(siegel_b_n1(lam[0]), p))) {
                std::cerr << "oracle disagrees with the closed form\n";
                return Mismatch;
            }
            return Ok;
        };
    });

    auto* ver = app.add_subcommand("verify", "run a property suite");
    std::vector<std::string> choices = kSuites;
    choices.push_back("all");
    ver->add_option("suite", suite)->required()->check(CLI::IsMember(choices));
    ver->add_option("--n", suite_ns, "restrict the rank (cocycle, spherical-fe, polynomial-invariance)")->delimiter(',');
    ver->callback([&] {
        action = [&] {
            if (suite != "all") return report(run_suite(suite, suite_ns));
            int worst = Ok;
            for (const auto& s : kSuites) worst = std::max(worst, report(run_suite(s, suite_ns)));
            return worst;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? Ok : Invalid;
    }

    try {
        return action();
    } catch (const BudgetError& err) {
        std::cerr << "budget exceeded: " << err.what() << "\n";
        return Budget;
    } catch (const InputError& err) {
        std::cerr << "invalid input: " << err.what() << "\n";
        return Invalid;
    } catch (const PoleError& err) {
        std::cerr << "pole: " << err.what() << "\n";
        return Invalid;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return Mismatch;
    }
}

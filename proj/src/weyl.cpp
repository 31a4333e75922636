#include "hermsph/weyl.hpp"

#include "hermsph/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hermsph {

namespace {

void check_rank(int n)
{
    if (n < 1 || n > kMaxVars)
        throw InputError("rank n = " + std::to_string(n) + " outside [1, " + std::to_string(kMaxVars) + "]");
}

} // namespace

Root::Root(std::vector<int> vec) : vec_(std::move(vec)), kind_(Kind::Short)
{
    int nonzero = 0, twos = 0, ones = 0;
    for (int v : vec_) {
        if (v == 0) continue;
        ++nonzero;
        if (v == 2 || v == -2) ++twos;
        else if (v == 1 || v == -1) ++ones;
        else throw InputError("not a root of type C: entry " + std::to_string(v));
    }
    if (nonzero == 1 && twos == 1) kind_ = Kind::Long;
    else if (nonzero == 2 && ones == 2) kind_ = Kind::Short;
    else throw InputError("not a root of type C: " + to_string());
}

bool Root::is_positive() const
{
    for (int v : vec_)
        if (v != 0) return v > 0;
    return false;
}

Root Root::operator-() const
{
    std::vector<int> v = vec_;
    for (int& x : v) x = -x;
    return Root(std::move(v));
}

std::string Root::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < vec_.size(); ++i) {
        int v = vec_[i];
        if (v == 0) continue;
        if (v < 0) os << (first ? "-" : " - ");
        else if (!first) os << " + ";
        if (std::abs(v) == 2) os << "2";
        os << "e" << (i + 1);
        first = false;
    }
    return first ? "0" : os.str();
}

Root short_root(int n, int i, int j, int si, int sj)
{
    std::vector<int> v(static_cast<size_t>(n));
    v[static_cast<size_t>(i)] = si;
    v[static_cast<size_t>(j)] = sj;
    return Root(std::move(v));
}

Root long_root(int n, int i, int sign)
{
    std::vector<int> v(static_cast<size_t>(n));
    v[static_cast<size_t>(i)] = 2 * sign;
    return Root(std::move(v));
}

std::vector<Root> positive_roots(int n)
{
    check_rank(n);
    std::vector<Root> r;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            r.push_back(short_root(n, i, j, 1, -1));
            r.push_back(short_root(n, i, j, 1, 1));
        }
    for (int i = 0; i < n; ++i) r.push_back(long_root(n, i));
    return r;
}

std::vector<Root> simple_roots(int n)
{
    check_rank(n);
    std::vector<Root> r;
    for (int i = 0; i + 1 < n; ++i) r.push_back(short_root(n, i, i + 1, 1, -1));
    r.push_back(long_root(n, n - 1));
    return r;
}

std::string SimpleReflection::token() const
{
    return is_tau() ? "t" : "s" + std::to_string(index);
}

WeylElem::WeylElem(std::vector<int> perm, std::vector<int> signs) : perm_(std::move(perm)), signs_(std::move(signs))
{
    if (perm_.size() != signs_.size()) throw InputError("perm and signs differ in length");
    std::vector<int> seen(perm_.size());
    for (int p : perm_) {
        if (p < 0 || p >= static_cast<int>(perm_.size()) || seen[static_cast<size_t>(p)]++)
            throw InputError("perm is not a bijection");
    }
    for (int s : signs_)
        if (s != 1 && s != -1) throw InputError("signs must be +1 or -1");
}

WeylElem WeylElem::identity(int n)
{
    check_rank(n);
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return WeylElem(p, std::vector<int>(static_cast<size_t>(n), 1));
}

WeylElem WeylElem::reflection(int n, SimpleReflection s)
{
    WeylElem e = identity(n);
    if (s.is_tau()) {
        e.signs_[static_cast<size_t>(n - 1)] = -1;
    } else {
        if (s.index < 1 || s.index >= n) throw InputError("reflection s" + std::to_string(s.index) + " outside rank");
        std::swap(e.perm_[static_cast<size_t>(s.index - 1)], e.perm_[static_cast<size_t>(s.index)]);
    }
    return e;
}

WeylElem WeylElem::rho(int n)
{
    check_rank(n);
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = n - 1 - i;
    return WeylElem(p, std::vector<int>(static_cast<size_t>(n), -1));
}

WeylElem WeylElem::from_word(int n, const Word& w)
{
    WeylElem e = identity(n);
    for (const auto& s : w) e = e * reflection(n, s);
    return e;
}

bool WeylElem::is_identity() const
{
    for (size_t i = 0; i < perm_.size(); ++i)
        if (perm_[i] != static_cast<int>(i) || signs_[i] != 1) return false;
    return true;
}

WeylElem operator*(const WeylElem& a, const WeylElem& b)
{
    if (a.rank() != b.rank()) throw InputError("Weyl elements of different rank");
    size_t n = a.perm_.size();
    std::vector<int> p(n), s(n);
    for (size_t i = 0; i < n; ++i) {
        auto ai = static_cast<size_t>(a.perm_[i]);
        p[i] = b.perm_[ai];
        s[i] = a.signs_[i] * b.signs_[ai];
    }
    return WeylElem(std::move(p), std::move(s));
}

WeylElem WeylElem::inverse() const
{
    size_t n = perm_.size();
    std::vector<int> p(n), s(n);
    for (size_t i = 0; i < n; ++i) {
        auto pi = static_cast<size_t>(perm_[i]);
        p[pi] = static_cast<int>(i);
        s[pi] = signs_[i];
    }
    return WeylElem(std::move(p), std::move(s));
}

std::vector<int> WeylElem::act_on_vector(const std::vector<int>& v) const
{
    if (v.size() != perm_.size()) throw InputError("vector rank mismatch");
    std::vector<int> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = signs_[i] * v[static_cast<size_t>(perm_[i])];
    return r;
}

Root WeylElem::act_on_root(const Root& a) const
{
    return Root(act_on_vector(a.vec()));
}

Substitution WeylElem::substitution() const
{
    Substitution s;
    int n = rank();
    s.new_nvars = n;
    for (int i = 0; i < n; ++i)
        s.images.push_back({1, 0, Monomial::unit(n, perm_[static_cast<size_t>(i)], signs_[static_cast<size_t>(i)])});
    return s;
}

FactorizedRatFunc WeylElem::act_on_poly(const FactorizedRatFunc& f) const
{
    if (f.nvars() != rank()) throw InputError("rational function rank mismatch");
    return f.substitute(substitution());
}

LaurentPoly WeylElem::act_on_poly(const LaurentPoly& f) const
{
    if (f.nvars() != rank()) throw InputError("polynomial rank mismatch");
    Substitution s = substitution();
    return f.map_monomials(rank(), [&s](const Monomial& m) { return s.monomial_of(m); });
}

std::string WeylElem::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < perm_.size(); ++i) {
        if (i) os << ", ";
        os << (signs_[i] < 0 ? "-" : "") << "z" << (perm_[i] + 1);
    }
    os << ")";
    return os.str();
}

std::vector<WeylElem> enumerate_weyl(int n)
{
    check_rank(n);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<WeylElem> out;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> signs(static_cast<size_t>(n));
            // Most significant bit drives the first coordinate, so the
            // order is lexicographic in signs with +1 first.
            for (int i = 0; i < n; ++i) signs[static_cast<size_t>(i)] = (mask >> (n - 1 - i)) & 1u ? -1 : 1;
            out.emplace_back(perm, std::move(signs));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<Root> inversion_set(const WeylElem& s)
{
    std::vector<Root> r;
    for (const auto& a : positive_roots(s.rank()))
        if (!s.act_on_root(a).is_positive()) r.push_back(a);
    return r;
}

int length(const WeylElem& s)
{
    return static_cast<int>(inversion_set(s).size());
}

Word reduced_word(const WeylElem& s)
{
    int n = s.rank();
    auto simples = simple_roots(n);
    Word rightmost_first;
    WeylElem cur = s;
    while (!cur.is_identity()) {
        bool found = false;
        for (size_t k = 0; k < simples.size(); ++k) {
            if (cur.act_on_root(simples[k]).is_positive()) continue;
            SimpleReflection r{k + 1 < simples.size() ? static_cast<int>(k + 1) : 0};
            rightmost_first.push_back(r);
            cur = cur * WeylElem::reflection(n, r);
            found = true;
            break;
        }
        if (!found) throw AlgebraError("no descent found for non-identity element");
    }
    return {rightmost_first.rbegin(), rightmost_first.rend()};
}

Word parse_word(int n, const std::string& text)
{
    std::string t = text;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream is(t);
    Word w;
    std::string tok;
    while (is >> tok) {
        if (tok == "t") {
            w.push_back({0});
            continue;
        }
        if (tok.size() >= 2 && tok[0] == 's' && std::all_of(tok.begin() + 1, tok.end(), ::isdigit)) {
            int i = std::stoi(tok.substr(1));
            if (i >= 1 && i < n) {
                w.push_back({i});
                continue;
            }
        }
        throw InputError("bad generator token '" + tok + "' for rank " + std::to_string(n));
    }
    return w;
}

std::string format_word(const Word& w)
{
    std::string s;
    for (const auto& r : w) {
        if (!s.empty()) s += " ";
        s += r.token();
    }
    return s;
}

} // namespace hermsph

#include "dersyz/polynomial.hpp"

#include <algorithm>
#include <map>

namespace dersyz {

Polynomial::Polynomial(PrimeField field, std::vector<value_type> coeffs) : field_(field), c_(std::move(coeffs))
{
    for (auto& x : c_)
        x = field_.reduce(x);
    trim();
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Polynomial Polynomial::constant(PrimeField field, value_type c)
{
    return Polynomial(field, {c});
}

Polynomial Polynomial::x(PrimeField field)
{
    return Polynomial(field, {0, 1});
}

Polynomial Polynomial::monomial(PrimeField field, std::size_t n)
{
    std::vector<value_type> c(n + 1, 0);
    c[n] = 1;
    return Polynomial(field, std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    std::vector<value_type> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = field_.add(coeff(i), o.coeff(i));
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    std::vector<value_type> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = field_.sub(coeff(i), o.coeff(i));
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    if (is_zero() || o.is_zero())
        return Polynomial(field_, {});
    std::vector<value_type> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i])
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = field_.add(c[i + j], field_.mul(c_[i], o.c_[j]));
    }
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::scaled(value_type k) const
{
    std::vector<value_type> c = c_;
    for (auto& x : c)
        x = field_.mul(x, k);
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return *this;
    return scaled(field_.inv(lead()));
}

Polynomial Polynomial::derivative() const
{
    if (c_.size() <= 1)
        return Polynomial(field_, {});
    std::vector<value_type> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = field_.mul(c_[i], field_.reduce(static_cast<std::int64_t>(i % field_.p())));
    return Polynomial(field_, std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const
{
    if (d.is_zero())
        throw ArgumentError("polynomial division by zero");
    std::vector<value_type> r = c_;
    if (r.size() < d.c_.size())
        return {Polynomial(field_, {}), *this};
    std::vector<value_type> q(r.size() - d.c_.size() + 1, 0);
    value_type inv_lead = field_.inv(d.lead());
    for (std::size_t k = q.size(); k-- > 0;) {
        value_type coef = field_.mul(r[k + d.c_.size() - 1], inv_lead);
        q[k] = coef;
        if (!coef)
            continue;
        for (std::size_t j = 0; j < d.c_.size(); ++j)
            r[k + j] = field_.sub(r[k + j], field_.mul(coef, d.c_[j]));
    }
    return {Polynomial(field_, std::move(q)), Polynomial(field_, std::move(r))};
}

bool Polynomial::operator<(const Polynomial& o) const
{
    if (degree() != o.degree())
        return degree() < o.degree();
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i])
            return c_[i] < o.c_[i];
    return false;
}

std::string Polynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (!c_[i])
            continue;
        if (!out.empty())
            out += "+";
        if (i == 0 || c_[i] != 1)
            out += std::to_string(c_[i]);
        if (i >= 1)
            out += "x";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& mod)
{
    Polynomial result = Polynomial::constant(base.field(), 1) % mod;
    Polynomial b = base % mod;
    while (e) {
        if (e & 1)
            result = (result * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return result;
}

Polynomial pow(const Polynomial& base, std::size_t e)
{
    Polynomial result = Polynomial::constant(base.field(), 1);
    for (std::size_t i = 0; i < e; ++i)
        result = result * base;
    return result;
}

namespace {

// f(x) = g(x^p) -> g, valid over the prime field where a^p = a.
Polynomial pth_root(const Polynomial& f)
{
    const std::uint32_t p = f.field().p();
    std::vector<Polynomial::value_type> c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p)
        c.push_back(f.coeffs()[i]);
    return Polynomial(f.field(), std::move(c));
}

void sff(const Polynomial& f, int mult, std::vector<std::pair<Polynomial, int>>& out)
{
    const PrimeField& F = f.field();
    if (f.degree() <= 0)
        return;
    Polynomial g = f.derivative();
    if (g.is_zero()) {
        sff(pth_root(f), mult * static_cast<int>(F.p()), out);
        return;
    }
    Polynomial c = gcd(f, g);
    Polynomial w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Polynomial y = gcd(w, c);
        Polynomial fac = (w / y).monic();
        if (fac.degree() > 0)
            out.emplace_back(fac, i * mult);
        ++i;
        w = y;
        c = c / y;
    }
    c = c.monic();
    if (c.degree() > 0)
        sff(pth_root(c), mult * static_cast<int>(F.p()), out);
}

// Squarefree monic f -> list of (product of all degree-d irreducible factors, d).
std::vector<std::pair<Polynomial, int>> distinct_degree(Polynomial f)
{
    const PrimeField& F = f.field();
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial X = Polynomial::x(F);
    Polynomial h = X % f;
    int i = 1;
    while (f.degree() >= 2 * i) {
        h = powmod(h, F.p(), f);
        Polynomial g = gcd(f, h - X);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = (f / g).monic();
            h = h % f;
        }
        ++i;
    }
    if (f.degree() > 0)
        out.emplace_back(f, f.degree());
    return out;
}

Polynomial random_poly(const PrimeField& F, int deg_bound, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint64_t> dist(0, F.p() - 1);
    std::vector<Polynomial::value_type> c(static_cast<std::size_t>(deg_bound));
    for (auto& x : c)
        x = static_cast<Polynomial::value_type>(dist(rng));
    return Polynomial(F, std::move(c));
}

void equal_degree(const Polynomial& f, int d, std::mt19937_64& rng, std::vector<Polynomial>& out)
{
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const PrimeField& F = f.field();
    for (;;) {
        Polynomial a = random_poly(F, f.degree(), rng);
        if (a.degree() <= 0)
            continue;
        Polynomial b;
        if (F.p() == 2) {
            Polynomial t = a % f;
            b = t;
            for (int i = 1; i < d; ++i) {
                t = (t * t) % f;
                b = b + t;
            }
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            Polynomial frob = a % f;
            Polynomial norm = frob;
            for (int i = 1; i < d; ++i) {
                frob = powmod(frob, F.p(), f);
                norm = (norm * frob) % f;
            }
            b = powmod(norm, (F.p() - 1) / 2, f) - Polynomial::constant(F, 1);
        }
        Polynomial g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree((f / g).monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<Polynomial, int>> squarefree_factorization(const Polynomial& f)
{
    std::vector<std::pair<Polynomial, int>> out;
    sff(f.monic(), 1, out);
    return out;
}

std::vector<std::pair<Polynomial, int>> factor(const Polynomial& f, std::mt19937_64& rng)
{
    if (f.is_zero())
        throw ArgumentError("cannot factor the zero polynomial");
    std::map<Polynomial, int> acc;
    for (auto& [sq, mult] : squarefree_factorization(f)) {
        for (auto& [block, d] : distinct_degree(sq)) {
            std::vector<Polynomial> pieces;
            equal_degree(block, d, rng, pieces);
            for (auto& piece : pieces)
                acc[piece] += mult;
        }
    }
    return {acc.begin(), acc.end()};
}

bool is_irreducible(const Polynomial& f)
{
    if (f.degree() <= 0)
        return false;
    auto sq = squarefree_factorization(f);
    if (sq.size() != 1 || sq.front().second != 1)
        return false;
    auto dd = distinct_degree(f.monic());
    return dd.size() == 1 && dd.front().second == f.degree();
}

}  // namespace dersyz

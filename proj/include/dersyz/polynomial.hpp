#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dersyz/field.hpp"

namespace dersyz {

/// Univariate polynomial over F_p, coefficients low degree first, no
/// trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
public:
    using value_type = PrimeField::value_type;

    Polynomial() = default;
    Polynomial(PrimeField field, std::vector<value_type> coeffs);

    static Polynomial constant(PrimeField field, value_type c);
    static Polynomial x(PrimeField field);
    /// x^n
    static Polynomial monomial(PrimeField field, std::size_t n);

    const PrimeField& field() const { return field_; }
    const std::vector<value_type>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    value_type lead() const { return c_.empty() ? 0 : c_.back(); }
    value_type coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(value_type k) const;
    Polynomial monic() const;
    Polynomial derivative() const;

    /// Euclidean division; throws on division by zero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
    Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

    bool operator==(const Polynomial& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    /// Ordering by degree, then coefficients from the top.
    bool operator<(const Polynomial& o) const;

    /// Human-readable form such as "x^2+x+1".
    std::string to_string() const;

private:
    void trim();
    PrimeField field_;
    std::vector<value_type> c_;
};

Polynomial gcd(Polynomial a, Polynomial b);
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& mod);
Polynomial pow(const Polynomial& base, std::size_t e);

/// Squarefree decomposition: f = prod g_i^{m_i}, g_i squarefree and coprime.
std::vector<std::pair<Polynomial, int>> squarefree_factorization(const Polynomial& f);
/// Complete factorization of a nonzero polynomial into monic irreducibles
/// with multiplicities, sorted. Leading coefficient is dropped.
std::vector<std::pair<Polynomial, int>> factor(const Polynomial& f, std::mt19937_64& rng);
/// Irreducibility test by distinct-degree factorization.
bool is_irreducible(const Polynomial& f);

}  // namespace dersyz

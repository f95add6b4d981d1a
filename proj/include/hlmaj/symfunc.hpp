#pragma once

#include <functional>
#include <map>
#include <string>

#include <gmpxx.h>

#include "hlmaj/combinatorics.hpp"

namespace hlmaj {

/// Polynomial in t with big-integer coefficients; zero coefficients are
/// never stored.
class TPoly {
public:
    TPoly() = default;
    static TPoly monomial(int degree, const mpz_class& coeff = 1);

    const std::map<int, mpz_class>& coeffs() const { return coeffs_; }
    void add(int degree, const mpz_class& coeff);
    mpz_class at(int degree) const;
    /// Specialization t = 1.
    mpz_class at_one() const;
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const;
    bool is_nonnegative() const;

    TPoly& operator+=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend bool operator==(const TPoly&, const TPoly&) = default;

    /// "1 + 3t + 5t^2", ascending degree; "0" for zero.
    std::string to_string() const;

private:
    std::map<int, mpz_class> coeffs_;
};

/// [n]_t! = [1]_t [2]_t ... [n]_t.
TPoly q_factorial(int n);

/// Symmetric function of degree n written in the monomial basis.
struct SymExpansion {
    int n = 0;
    std::map<Partition, TPoly, std::greater<Partition>> terms;

    TPoly coefficient(const Partition& mu) const;
    void add(const Partition& mu, const TPoly& c);
    /// One "m[2,2,1]: t^2 + 2t^3" line per nonzero term, largest mu first.
    std::string to_string() const;

    friend bool operator==(const SymExpansion&, const SymExpansion&) = default;
};

std::string term_to_string(const Partition& mu, const TPoly& c);

/// H~_lambda[X;t] = sum_mu (sum over sigma in J^maj_{lambda'} and shuff(mu)
/// of t^maj(sigma)) m_mu.
SymExpansion hl_via_descents(const Partition& lambda);
/// omega H~_lambda[X;t], the same sum over reverse shuffles.
SymExpansion hl_omega_via_descents(const Partition& lambda);

/// H~_{lambda'}[X;t] (or omega H~_{lambda'} when twisted) as a sum of
/// t^area over minimal ribbon tuples of shape lambda whose reading word is
/// a mu-shuffle (reverse shuffle when twisted). Note the conjugate.
SymExpansion hl_via_ribbons(const Partition& lambda, bool twisted);

/// The m_{lambda'} coefficient of omega H~_lambda is exactly t^{n(lambda)}.
bool leading_coefficient_check(const Partition& lambda);

/// omega H~_lambda is supported on mu dominated by lambda'.
bool dominance_support_check(const Partition& lambda);

/// Pairs (mu, lhs - rhs) for every mu where the expansions differ.
std::map<Partition, TPoly, std::greater<Partition>> expansion_diff(const SymExpansion& lhs, const SymExpansion& rhs);

}  // namespace hlmaj

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hlmaj/combinatorics.hpp"

namespace hlmaj {

/// Sparse polynomial in x_1..x_n over Q. Terms are keyed by exponent
/// vectors of length n; zero coefficients are never stored.
class MPoly {
public:
    explicit MPoly(int nvars = 0) : nvars_(nvars) {}
    static MPoly constant(int nvars, const mpq_class& c);
    static MPoly monomial(const Composition& exponent, const mpq_class& c = 1);
    /// x_i, 1-based.
    static MPoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    const std::map<Composition, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    mpq_class coefficient(const Composition& exponent) const;

    void add_term(const Composition& exponent, const mpq_class& c);

    /// Largest total degree, -1 for zero.
    int degree() const;
    bool is_homogeneous() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const mpq_class& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const mpq_class& c) { return a *= c; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly&, const MPoly&) = default;

    /// Image under the substitution x_i -> x_{w(i)}; w is a one-line word of
    /// length n.
    MPoly permute_variables(const std::vector<int>& w) const;

    /// "x1^2*x2 - 3/2*x3", terms in decreasing lex order of exponents.
    std::string to_string() const;

private:
    int nvars_;
    std::map<Composition, mpq_class> terms_;
};

std::string monomial_to_string(const Composition& exponent);

/// Sum over w in the Young subgroup S_mu (consecutive blocks) of
/// sign(w) w.p.
MPoly antisymmetrize(const Composition& mu, const MPoly& p);

/// Element of Q[x_1..x_k] (x) Q[x_1..x_m] as a sum of coefficient times
/// pure tensors of monomials.
struct TensorPoly {
    int first_vars = 0;
    int second_vars = 0;
    std::map<std::pair<Composition, Composition>, mpq_class> terms;

    void add_term(const Composition& first, const Composition& second, const mpq_class& c);
    bool is_zero() const { return terms.empty(); }
    /// Second factors grouped by the monomial in the first factor.
    std::map<Composition, MPoly> by_first() const;
    /// First factors grouped by the monomial in the second factor.
    std::map<Composition, MPoly> by_second() const;
    /// "(-x2 - x3) ⊗ x1^2*x2^3*x4", one summand per second-factor monomial.
    std::string to_string() const;

    friend bool operator==(const TensorPoly&, const TensorPoly&) = default;
};

}  // namespace hlmaj

#pragma once

#include <map>
#include <vector>

#include "hlmaj/combinatorics.hpp"
#include "hlmaj/linalg.hpp"
#include "hlmaj/mpoly.hpp"

namespace hlmaj {

/// Q[x_1..x_n] / I for an ideal generated by homogeneous polynomials,
/// computed degree by degree until the quotient vanishes.
///
/// Degree D of the quotient is presented as the span W of the monomials
/// x_i b (b standard in degree D-1) modulo the relations forced by
/// commutativity and by the degree-D generators. Standard monomials of
/// each degree are chosen greedily in increasing descent order, so they
/// are exactly the monomials that are not leading terms (for <=_des) of
/// any ideal element. The ideal must not contain 1 unless it is the unit
/// ideal, and the quotient must be finite dimensional.
class GradedQuotient {
public:
    /// Throws std::invalid_argument for inhomogeneous generators.
    GradedQuotient(int nvars, const std::vector<MPoly>& generators, int max_degree = 64);

    int nvars() const { return nvars_; }
    /// Dimension of each degree, starting at 0, up to the last nonzero one.
    const std::vector<int>& dimensions() const { return dims_; }
    int dimension() const;
    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }

    /// Standard monomials of degree d in increasing descent order.
    const std::vector<Composition>& standard_monomials(int d) const;

    /// Coordinates of x^e in the standard monomials of its degree.
    SparseVec normal_form(const Composition& e) const;
    /// Coordinates of a homogeneous polynomial of degree d.
    SparseVec normal_form(const MPoly& p, int d) const;
    /// Normal form as a polynomial in the standard monomials (any p).
    MPoly reduce(const MPoly& p) const;
    bool contains(const MPoly& p) const { return reduce(p).is_zero(); }

private:
    void build_degree(int d, const std::vector<MPoly>& gens);

    int nvars_;
    std::vector<int> dims_;
    std::vector<std::vector<Composition>> standard_;
    // Only monomials with nonzero normal form are stored.
    std::vector<std::map<Composition, SparseVec>> nf_;
};

/// Row-reduced spanning set of the degree-d slice of the ideal, built from
/// every generator times every monomial of complementary degree. Columns
/// are the degree-d monomials in the given order.
struct IdealSlice {
    std::vector<Composition> columns;
    std::vector<MPoly> rows;
    std::vector<Composition> pivots;
};

IdealSlice graded_component_reduce(int nvars, const std::vector<MPoly>& generators, int d,
                                   bool descent_order = false);

/// Degree-d monomials in x_1..x_n, lexicographic.
std::vector<Composition> monomials_of_degree(int nvars, int d);

}  // namespace hlmaj

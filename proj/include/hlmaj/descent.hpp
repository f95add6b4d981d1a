#pragma once

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hlmaj/combinatorics.hpp"

namespace hlmaj {

/// Thrown by majt_inverse when the input is not majt(sigma) for any sigma.
class NotADescentComposition : public std::domain_error {
public:
    explicit NotADescentComposition(const Composition& a);
};

/// A composition known to be majt(witness).
struct DescentComposition {
    Composition entries;
    Permutation witness;

    int degree() const;
};

/// Garsia-Stanton basis element g_tau = x^majt(tau).
struct DescentBasisElement {
    Composition exponent;
    Permutation witness;
    int degree = 0;
};

DescentBasisElement make_basis_element(const Permutation& tau);

/// Value pairs (sigma_i, sigma_j) with i < j and sigma_i > sigma_j, sorted.
std::vector<std::pair<int, int>> inversion_set(const Permutation& sigma);

/// Positions i in 1..n-1 with sigma_i > sigma_{i+1}.
std::vector<int> descent_set(const Permutation& sigma);

int inv(const Permutation& sigma);
int maj(const Permutation& sigma);

/// Entry j counts inversion pairs whose second (smaller) value is j.
Composition invt(const Permutation& sigma);

/// Major index table: with r runs, value i in run k gets r - k.
Composition majt(const Permutation& sigma);

/// The unique sigma with majt(sigma) = a, if any.
std::optional<Permutation> try_majt_inverse(const Composition& a);
/// Throws NotADescentComposition when a is not in D_n.
Permutation majt_inverse(const Composition& a);

bool is_descent_composition(const Composition& a);

/// Descent order <=_des: compare descending sorts lexicographically, then
/// break ties lexicographically. Requires equal lengths.
std::strong_ordering descent_compare(const Composition& a, const Composition& b);

struct DescentLess {
    bool operator()(const Composition& a, const Composition& b) const { return descent_compare(a, b) < 0; }
};

/// Subsequence of a at the 1-based positions in s (s sorted), order kept.
Composition restrict(const Composition& a, const std::vector<int>& s);

/// D_n in lexicographic order.
std::vector<Composition> enumerate_D_n(int n);

/// D_lambda for a partition or weak composition of block sizes,
/// deduplicated and in lexicographic order.
std::vector<Composition> enumerate_D_lambda(const Composition& lambda);
std::vector<Composition> enumerate_D_lambda(const Partition& lambda);

/// One ordered set partition witnessing a in D_lambda, if any.
std::optional<OrderedSetPartition> is_in_D_lambda(const Composition& a, const Composition& lambda);
std::optional<OrderedSetPartition> is_in_D_lambda(const Composition& a, const Partition& lambda);

/// J^maj_lambda = majt^{-1}(D_lambda), lexicographic order.
std::vector<Permutation> enumerate_J_maj(const Partition& lambda);

/// Exponent of g_sigma = prod_{i in Des} x_{sigma_1} ... x_{sigma_i},
/// computed from the product formula.
Composition descent_monomial(const Permutation& sigma);
/// Exponent of the Artin monomial; equal to invt(sigma).
Composition artin_monomial(const Permutation& sigma);

}  // namespace hlmaj

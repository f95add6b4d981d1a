#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hlmaj {

/// A finite sequence of non-negative integers. Used both for compositions
/// (block sizes) and for exponent vectors of monomials x^a.
using Composition = std::vector<int>;

/// Weakly decreasing sequence of positive integers, stored without trailing
/// zeros.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly
    /// decreasing. Trailing zeros are stripped before validation.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    /// Parts padded with zeros to the requested length.
    std::vector<int> padded(std::size_t len) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// One-line notation of a bijection of {1..n}.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument if word is not a rearrangement of 1..n.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    const std::vector<int>& word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }
    /// 1-based position access, matching the usual sigma_i notation.
    int at(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    int operator[](std::size_t i) const { return word_[i]; }

    Permutation inverse() const;
    /// 1-based position of value v.
    std::vector<int> positions() const;

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.word_ <=> b.word_; }

private:
    std::vector<int> word_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// (A_1 | ... | A_l), blocks sorted internally. Empty blocks are allowed so
/// that weak compositions have a type.
struct OrderedSetPartition {
    std::vector<std::vector<int>> blocks;

    Composition type() const;
    int ground_size() const;
    /// True when the blocks are disjoint, cover {1..n} and are sorted.
    bool is_valid() const;
    std::string to_string() const;

    friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
    friend auto operator<=>(const OrderedSetPartition&, const OrderedSetPartition&) = default;
};

Partition conjugate(const Partition& lambda);

/// n(lambda) = sum_i binom(lambda'_i, 2).
long n_stat(const Partition& lambda);

mpz_class factorial(int n);

/// n! / (lambda'_1! ... lambda'_h!), the multinomial in the parts of the
/// conjugate.
mpz_class multinomial(const Partition& lambda);

/// n! / (mu_1! ... mu_l!) for a weak composition mu.
mpz_class composition_multinomial(const Composition& mu);

int composition_size(const Composition& mu);

/// Sorted descending with zeros removed.
Partition sort_to_partition(const Composition& mu);

Composition reversed(const Composition& mu);

/// Partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

/// Dominance order: mu >= nu iff every partial sum of mu is at least the
/// corresponding partial sum of nu. Both must have the same size.
bool dominates(const Partition& mu, const Partition& nu);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Elements of the consecutive blocks of mu appear in increasing order.
bool is_shuffle(const Permutation& sigma, const Composition& mu);
/// Elements of the consecutive blocks of mu appear in decreasing order.
bool is_reverse_shuffle(const Permutation& sigma, const Composition& mu);

/// shuff(mu), lexicographic order.
std::vector<Permutation> enumerate_shuffles(const Composition& mu);
/// shuff'(mu), lexicographic order.
std::vector<Permutation> enumerate_reverse_shuffles(const Composition& mu);

/// Visits every ordered set partition of the given type, in lexicographic
/// order of the block-label word (label of 1, label of 2, ...).
void for_each_osp(const Composition& type, const std::function<void(const OrderedSetPartition&)>& visit);
std::vector<OrderedSetPartition> enumerate_osp(const Composition& type);

/// All k-subsets of {1..n} as sorted vectors, lexicographic.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

/// Weak compositions of total into exactly parts entries, lexicographic
/// descending on the first entry.
std::vector<Composition> weak_compositions(int total, int parts);

std::string composition_to_string(const Composition& a, const char* sep = ",");

/// Parses "3,1" or "3 1"; throws std::invalid_argument on malformed input.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace hlmaj

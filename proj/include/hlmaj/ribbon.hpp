#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlmaj/combinatorics.hpp"
#include "hlmaj/parking.hpp"

namespace hlmaj {

struct RibbonCell {
    int col = 0;
    int row = 0;
    int entry = 0;

    friend bool operator==(const RibbonCell&, const RibbonCell&) = default;
    friend auto operator<=>(const RibbonCell&, const RibbonCell&) = default;
};

/// An l-tuple (T_1, ..., T_l) of ribbon-shaped tableaux with entries
/// increasing North and East and lowest boxes on row 0.
///
/// Each component is stored as its cells in path order: the bottom-right
/// cell first, then each step goes one column West (entry decreases) or one
/// row North (entry increases). Components occupy disjoint column ranges,
/// T_1 leftmost. This is the orientation of the tableau pictures; the
/// parking-function picture is its mirror image.
class RibbonTuple {
public:
    RibbonTuple() = default;

    /// Builds the canonical layout from the entries of each component in
    /// path order; the shape follows from the comparisons of consecutive
    /// entries. One empty column separates neighbouring components.
    static RibbonTuple from_paths(const std::vector<std::vector<int>>& paths);

    /// Validates an explicit layout. Throws std::invalid_argument when a
    /// component is not a path of West/North steps starting on row 0 with
    /// the required entry comparisons, when column ranges overlap or are out
    /// of order, or when the entries are not exactly 1..n.
    static RibbonTuple from_cells(std::vector<std::vector<RibbonCell>> components);

    const std::vector<std::vector<RibbonCell>>& components() const { return components_; }
    std::size_t length() const { return components_.size(); }
    int size() const;
    /// Component sizes |T_i|.
    Composition shape() const;
    std::vector<std::vector<int>> paths() const;
    /// Entry sets of the components, each sorted.
    OrderedSetPartition entry_sets() const;
    std::vector<RibbonCell> cells() const;

    /// Same tuple with `gaps[i]` empty columns between T_{i+1} and T_{i+2}
    /// and the whole picture shifted right by `origin`.
    RibbonTuple relaid(const std::vector<int>& gaps, int origin = 0) const;

    friend bool operator==(const RibbonTuple& a, const RibbonTuple& b) { return a.paths() == b.paths(); }
    friend auto operator<=>(const RibbonTuple& a, const RibbonTuple& b) { return a.paths() <=> b.paths(); }

private:
    std::vector<std::vector<RibbonCell>> components_;
};

/// Mirror and shear into PF_alpha with alpha = shape reversed: the blocks
/// are T_l, ..., T_1, each listed in path order with level = row.
ParkingFunction ribbon_to_parking(const RibbonTuple& t);

/// Inverse of ribbon_to_parking for the given component sizes (T_1 first);
/// nullopt if p does not come from a ribbon tuple of that shape.
std::optional<RibbonTuple> parking_to_ribbon(const ParkingFunction& p, const Composition& shape);

/// Dinv pairs of the tuple. Each pair is reported as (right entry, left
/// entry), the same order the parking function image uses.
std::vector<std::pair<int, int>> dinv_ribbon_pairs(const RibbonTuple& t);
int dinv_ribbon(const RibbonTuple& t);
int doff_ribbon(const RibbonTuple& t);
int area_ribbon(const RibbonTuple& t);

/// Rows top to bottom; within a row in mirrored (parking) orientation right
/// to left, which is left to right in the stored orientation.
Permutation reading_word(const RibbonTuple& t);

/// a_i = height of the box holding i.
Composition psi(const RibbonTuple& t);

/// Membership in R^0: every dinv pair joins two different components, each
/// box of T_j above the bottom row is in exactly one pair with each earlier
/// T_i, and the bottom row carries no pair.
bool is_minimal(const RibbonTuple& t);

/// All of R_lambda (n! tuples) for component sizes lambda.
std::vector<RibbonTuple> enumerate_R(const Composition& lambda);
/// R^0_lambda by the structural definition, sorted.
std::vector<RibbonTuple> enumerate_R0(const Partition& lambda);

struct Algorithm1Result {
    OrderedSetPartition partition;
    /// Blocks in the order their elements were selected.
    std::vector<std::vector<int>> selection_order;
};

/// Greedy block reconstruction on the extended sequence a_{kn+i} = a_i + k.
/// nullopt when a selection step finds no candidate.
std::optional<Algorithm1Result> algorithm1(const Composition& a, const Composition& lambda);

/// The tableau form of the same greedy walk.
std::optional<Algorithm1Result> algorithm1_prime(const RibbonTuple& t, const Composition& lambda);

/// The unique minimal tuple with psi = a, or nullopt if a is not in D_lambda
/// or the reconstruction does not validate.
std::optional<RibbonTuple> reconstruct_ribbon(const Composition& a, const Partition& lambda);

struct PatternViolation {
    int pattern = 0;
    std::vector<int> entries;
};

/// Checks the five pattern rules satisfied by minimal tuples (stored
/// orientation): bottom row increasing left to right; no c < b < a for a
/// over c in T_i beside b in T_j; a b in T_i beside c in T_j needs a < c;
/// no three-in-a-row of T_i beside a d in T_j with a box above d; and
/// a over b, b c in T_i beside d over e in T_j needs a < c.
std::vector<PatternViolation> check_patterns(const RibbonTuple& t);

struct MinimalRibbonReport {
    Partition lambda;
    long min_statistic = 0;
    std::size_t minimal_count = 0;
    bool min_is_n_lambda = false;
    bool argmin_is_R0 = false;
    bool psi_bijective = false;
    bool reconstruction_ok = false;
    bool algorithms_agree = false;
    bool patterns_ok = false;

    bool ok() const {
        return min_is_n_lambda && argmin_is_R0 && psi_bijective && reconstruction_ok && algorithms_agree && patterns_ok;
    }
};

/// Exhaustive check over R_lambda: min(dinv + doff) = n(lambda) with
/// argmin R^0_lambda, psi a bijection onto D_lambda inverted by
/// reconstruct_ribbon, both greedy algorithms agreeing, and no pattern
/// violations.
MinimalRibbonReport verify_minimal_ribbons(const Partition& lambda);

std::string render(const RibbonTuple& t);
std::string to_string(const RibbonTuple& t);

}  // namespace hlmaj

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hlmaj/combinatorics.hpp"

namespace hlmaj {

/// A labeled Dyck path: area sequence plus one label per row. Labels are
/// stored as a plain word so that invalid inputs can be represented and
/// rejected by is_valid_parking_function.
struct ParkingFunction {
    Composition area_seq;
    std::vector<int> labels;

    int size() const { return static_cast<int>(area_seq.size()); }

    friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;
    friend auto operator<=>(const ParkingFunction&, const ParkingFunction&) = default;
};

/// Checks a_1 = 0, a_{i+1} <= a_i + 1, labels a permutation, and that every
/// rise a_i + 1 = a_{i+1} has increasing labels.
bool is_valid_parking_function(const ParkingFunction& p);

/// Checks the touch constraint: a = 0 at the first row of each alpha block.
bool in_touch_family(const ParkingFunction& p, const Composition& alpha);

int area(const ParkingFunction& p);

/// Dinv pairs as label pairs (sigma_i, sigma_j), i < j, with either
/// sigma_i < sigma_j and a_i = a_j, or sigma_i > sigma_j and a_i = a_j + 1.
std::vector<std::pair<int, int>> dinv_pairs(const ParkingFunction& p);
int dinv(const ParkingFunction& p);

/// doff_alpha = sum_k (l - k) r_k with r_k the zero-level rows of block k.
/// Throws std::invalid_argument if p is not in PF_alpha.
int doff(const ParkingFunction& p, const Composition& alpha);

/// Labels read by decreasing level, and right to left within a level
/// (decreasing row index).
Permutation reading_word(const ParkingFunction& p);

std::vector<Composition> dyck_area_sequences(int n);

std::vector<ParkingFunction> enumerate_PF(int n);
std::vector<ParkingFunction> enumerate_PF_alpha(const Composition& alpha);

bool is_dinv_zero(const ParkingFunction& p);
/// Structural test: area sequence weakly increasing, and labels decreasing
/// along each level.
bool is_dinv_zero_structural(const ParkingFunction& p);

/// The bijection S_n -> PF^0_n carrying maj to area; the reading word of
/// the image is sigma.
ParkingFunction perm_to_pf0(const Permutation& sigma);
/// Inverse of perm_to_pf0. Throws std::invalid_argument if dinv(p) != 0.
Permutation pf0_to_perm(const ParkingFunction& p);

/// Composition a with a_v = level of the row labeled v.
Composition level_composition(const ParkingFunction& p);

/// Elements of PF_alpha with dinv + doff_alpha = n(lambda), where alpha is
/// lambda reversed. Throws std::invalid_argument if alpha is not weakly
/// increasing with positive parts.
std::vector<ParkingFunction> enumerate_PF0_alpha(const Composition& alpha);

/// ASCII grid, top row first, with labels placed at their column.
std::string render(const ParkingFunction& p);

std::string to_string(const ParkingFunction& p);

}  // namespace hlmaj

#include "hlmaj/parking.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace hlmaj {

namespace {

bool is_permutation_word(const std::vector<int>& w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (int v : w) {
        if (v < 1 || v > static_cast<int>(w.size()) || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

bool is_touch_composition(const Composition& alpha) {
    return std::all_of(alpha.begin(), alpha.end(), [](int a) { return a >= 1; });
}

}  // namespace

bool is_valid_parking_function(const ParkingFunction& p) {
    const auto& a = p.area_seq;
    if (a.size() != p.labels.size() || !is_permutation_word(p.labels)) return false;
    if (a.empty()) return true;
    if (a[0] != 0) return false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        if (a[i + 1] < 0 || a[i + 1] > a[i] + 1) return false;
        if (a[i + 1] == a[i] + 1 && p.labels[i] > p.labels[i + 1]) return false;
    }
    return true;
}

bool in_touch_family(const ParkingFunction& p, const Composition& alpha) {
    if (!is_touch_composition(alpha) || composition_size(alpha) != p.size()) return false;
    std::size_t row = 0;
    for (int part : alpha) {
        if (p.area_seq[row] != 0) return false;
        row += static_cast<std::size_t>(part);
    }
    return true;
}

int area(const ParkingFunction& p) { return composition_size(p.area_seq); }

std::vector<std::pair<int, int>> dinv_pairs(const ParkingFunction& p) {
    std::vector<std::pair<int, int>> out;
    const auto& a = p.area_seq;
    const auto& s = p.labels;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if ((s[i] < s[j] && a[i] == a[j]) || (s[i] > s[j] && a[i] == a[j] + 1)) out.emplace_back(s[i], s[j]);
    std::sort(out.begin(), out.end());
    return out;
}

int dinv(const ParkingFunction& p) { return static_cast<int>(dinv_pairs(p).size()); }

int doff(const ParkingFunction& p, const Composition& alpha) {
    if (!in_touch_family(p, alpha)) throw std::invalid_argument("parking function violates the touch constraint");
    const int l = static_cast<int>(alpha.size());
    int total = 0;
    std::size_t row = 0;
    for (int k = 1; k <= l; ++k) {
        int zeros = 0;
        for (int t = 0; t < alpha[static_cast<std::size_t>(k - 1)]; ++t, ++row)
            if (p.area_seq[row] == 0) ++zeros;
        total += (l - k) * zeros;
    }
    return total;
}

Permutation reading_word(const ParkingFunction& p) {
    std::vector<std::size_t> rows(p.area_seq.size());
    std::iota(rows.begin(), rows.end(), 0);
    std::sort(rows.begin(), rows.end(), [&](std::size_t x, std::size_t y) {
        if (p.area_seq[x] != p.area_seq[y]) return p.area_seq[x] > p.area_seq[y];
        return x > y;
    });
    std::vector<int> w;
    w.reserve(rows.size());
    for (auto r : rows) w.push_back(p.labels[r]);
    return Permutation(std::move(w));
}

std::vector<Composition> dyck_area_sequences(int n) {
    std::vector<Composition> out;
    if (n <= 0) return out;
    Composition a(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back(a);
            return;
        }
        for (int v = 0; v <= a[static_cast<std::size_t>(i - 1)] + 1; ++v) {
            a[static_cast<std::size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(1);
    return out;
}

namespace {

// Labelings of a fixed area sequence, in lexicographic order of the word.
void for_each_labeling(const Composition& a, const std::function<void(const ParkingFunction&)>& visit) {
    const int n = static_cast<int>(a.size());
    ParkingFunction p{a, std::vector<int>(static_cast<std::size_t>(n), 0)};
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            visit(p);
            return;
        }
        const auto ui = static_cast<std::size_t>(i);
        const int lo = (i > 0 && a[ui] == a[ui - 1] + 1) ? p.labels[ui - 1] + 1 : 1;
        for (int v = lo; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            p.labels[ui] = v;
            rec(i + 1);
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(0);
}

}  // namespace

std::vector<ParkingFunction> enumerate_PF(int n) {
    std::vector<ParkingFunction> out;
    for (const auto& a : dyck_area_sequences(n))
        for_each_labeling(a, [&](const ParkingFunction& p) { out.push_back(p); });
    return out;
}

std::vector<ParkingFunction> enumerate_PF_alpha(const Composition& alpha) {
    if (!is_touch_composition(alpha)) throw std::invalid_argument("touch composition needs positive parts");
    std::vector<ParkingFunction> out;
    const int n = composition_size(alpha);
    for (const auto& a : dyck_area_sequences(n)) {
        std::size_t row = 0;
        bool touches = true;
        for (int part : alpha) {
            touches = touches && a[row] == 0;
            row += static_cast<std::size_t>(part);
        }
        if (!touches) continue;
        for_each_labeling(a, [&](const ParkingFunction& p) { out.push_back(p); });
    }
    return out;
}

bool is_dinv_zero(const ParkingFunction& p) { return dinv(p) == 0; }

bool is_dinv_zero_structural(const ParkingFunction& p) {
    const auto& a = p.area_seq;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i + 1] < a[i]) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j] && p.labels[i] < p.labels[j]) return false;
    return true;
}

ParkingFunction perm_to_pf0(const Permutation& sigma) {
    // Rows are sigma read backwards; the level rises by one exactly when the
    // next letter read is a descent top.
    const int n = sigma.size();
    ParkingFunction p;
    p.area_seq.reserve(static_cast<std::size_t>(n));
    p.labels.reserve(static_cast<std::size_t>(n));
    int level = 0;
    for (int k = n; k >= 1; --k) {
        if (k < n && sigma.at(k) > sigma.at(k + 1)) ++level;
        p.area_seq.push_back(level);
        p.labels.push_back(sigma.at(k));
    }
    return p;
}

Permutation pf0_to_perm(const ParkingFunction& p) {
    if (!is_valid_parking_function(p) || dinv(p) != 0)
        throw std::invalid_argument("parking function is not in PF^0");
    return reading_word(p);
}

Composition level_composition(const ParkingFunction& p) {
    Composition a(p.area_seq.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) a[static_cast<std::size_t>(p.labels[i] - 1)] = p.area_seq[i];
    return a;
}

std::vector<ParkingFunction> enumerate_PF0_alpha(const Composition& alpha) {
    if (!is_touch_composition(alpha) || !std::is_sorted(alpha.begin(), alpha.end()))
        throw std::invalid_argument("alpha must be a partition written in increasing order");
    const long target = n_stat(Partition(reversed(alpha)));
    std::vector<ParkingFunction> out;
    for (const auto& p : enumerate_PF_alpha(alpha))
        if (dinv(p) + doff(p, alpha) == target) out.push_back(p);
    return out;
}

std::string render(const ParkingFunction& p) {
    // Row i (1-based, bottom row first) starts in column i - 1 - a_i.
    const int n = p.size();
    std::ostringstream os;
    for (int i = n; i >= 1; --i) {
        const auto ui = static_cast<std::size_t>(i - 1);
        const int col = i - 1 - p.area_seq[ui];
        std::string line;
        for (int c = 0; c < n; ++c) {
            if (c == col) {
                std::string lab = std::to_string(p.labels[ui]);
                if (lab.size() < 2) lab = " " + lab;
                line += lab;
            } else if (c == i - 1) {
                line += " \\";
            } else {
                line += " .";
            }
        }
        os << line << '\n';
    }
    return os.str();
}

std::string to_string(const ParkingFunction& p) {
    return "((" + composition_to_string(p.area_seq) + "),(" + composition_to_string(p.labels) + "))";
}

}  // namespace hlmaj

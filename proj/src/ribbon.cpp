#include "hlmaj/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hlmaj/descent.hpp"

namespace hlmaj {

namespace {

struct Located {
    RibbonCell cell;
    std::size_t component;
};

std::vector<Located> located_cells(const RibbonTuple& t) {
    std::vector<Located> out;
    for (std::size_t c = 0; c < t.components().size(); ++c)
        for (const auto& cell : t.components()[c]) out.push_back({cell, c});
    return out;
}

struct PairRef {
    Located left;
    Located right;
};

// x strictly left of y: same row with x > y, or y one row up with x < y.
std::vector<PairRef> dinv_refs(const RibbonTuple& t) {
    auto cells = located_cells(t);
    std::vector<PairRef> out;
    for (const auto& x : cells)
        for (const auto& y : cells) {
            if (y.cell.col <= x.cell.col) continue;
            const bool same_row = x.cell.row == y.cell.row && x.cell.entry > y.cell.entry;
            const bool step_up = y.cell.row == x.cell.row + 1 && x.cell.entry < y.cell.entry;
            if (same_row || step_up) out.push_back({x, y});
        }
    return out;
}

}  // namespace

RibbonTuple RibbonTuple::from_paths(const std::vector<std::vector<int>>& paths) {
    std::vector<std::vector<RibbonCell>> comps;
    int start = 0;
    for (const auto& path : paths) {
        if (path.empty()) throw std::invalid_argument("ribbon components must be non-empty");
        int west_steps = 0;
        for (std::size_t k = 1; k < path.size(); ++k)
            if (path[k] < path[k - 1]) ++west_steps;
        std::vector<RibbonCell> cells;
        int col = start + west_steps;
        int row = 0;
        for (std::size_t k = 0; k < path.size(); ++k) {
            if (k > 0) {
                if (path[k] < path[k - 1])
                    --col;
                else
                    ++row;
            }
            cells.push_back({col, row, path[k]});
        }
        comps.push_back(std::move(cells));
        start += west_steps + 2;
    }
    return from_cells(std::move(comps));
}

RibbonTuple RibbonTuple::from_cells(std::vector<std::vector<RibbonCell>> components) {
    int n = 0;
    for (const auto& c : components) n += static_cast<int>(c.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    int prev_max_col = std::numeric_limits<int>::min();
    for (const auto& comp : components) {
        if (comp.empty()) throw std::invalid_argument("ribbon components must be non-empty");
        if (comp.front().row != 0) throw std::invalid_argument("ribbon must start on the bottom row");
        int min_col = comp.front().col, max_col = comp.front().col;
        for (std::size_t k = 0; k < comp.size(); ++k) {
            const auto& c = comp[k];
            if (c.entry < 1 || c.entry > n || seen[static_cast<std::size_t>(c.entry)])
                throw std::invalid_argument("ribbon entries must be exactly 1..n");
            seen[static_cast<std::size_t>(c.entry)] = true;
            min_col = std::min(min_col, c.col);
            max_col = std::max(max_col, c.col);
            if (k == 0) continue;
            const auto& p = comp[k - 1];
            const bool west = c.col == p.col - 1 && c.row == p.row && c.entry < p.entry;
            const bool north = c.col == p.col && c.row == p.row + 1 && c.entry > p.entry;
            if (!west && !north) throw std::invalid_argument("ribbon path or filling is invalid");
        }
        if (min_col <= prev_max_col) throw std::invalid_argument("ribbon components overlap or are out of order");
        prev_max_col = max_col;
    }
    RibbonTuple t;
    t.components_ = std::move(components);
    return t;
}

int RibbonTuple::size() const {
    int n = 0;
    for (const auto& c : components_) n += static_cast<int>(c.size());
    return n;
}

Composition RibbonTuple::shape() const {
    Composition s;
    for (const auto& c : components_) s.push_back(static_cast<int>(c.size()));
    return s;
}

std::vector<std::vector<int>> RibbonTuple::paths() const {
    std::vector<std::vector<int>> out;
    for (const auto& comp : components_) {
        std::vector<int> p;
        for (const auto& c : comp) p.push_back(c.entry);
        out.push_back(std::move(p));
    }
    return out;
}

OrderedSetPartition RibbonTuple::entry_sets() const {
    OrderedSetPartition osp;
    for (auto p : paths()) {
        std::sort(p.begin(), p.end());
        osp.blocks.push_back(std::move(p));
    }
    return osp;
}

std::vector<RibbonCell> RibbonTuple::cells() const {
    std::vector<RibbonCell> out;
    for (const auto& comp : components_) out.insert(out.end(), comp.begin(), comp.end());
    return out;
}

RibbonTuple RibbonTuple::relaid(const std::vector<int>& gaps, int origin) const {
    std::vector<std::vector<RibbonCell>> comps;
    int start = origin;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto& comp = components_[i];
        int min_col = comp.front().col, max_col = comp.front().col;
        for (const auto& c : comp) {
            min_col = std::min(min_col, c.col);
            max_col = std::max(max_col, c.col);
        }
        std::vector<RibbonCell> moved;
        for (auto c : comp) {
            c.col += start - min_col;
            moved.push_back(c);
        }
        comps.push_back(std::move(moved));
        const int gap = i < gaps.size() ? gaps[i] : 1;
        start += (max_col - min_col + 1) + gap;
    }
    return from_cells(std::move(comps));
}

ParkingFunction ribbon_to_parking(const RibbonTuple& t) {
    ParkingFunction p;
    const auto& comps = t.components();
    for (auto it = comps.rbegin(); it != comps.rend(); ++it)
        for (const auto& c : *it) {
            p.area_seq.push_back(c.row);
            p.labels.push_back(c.entry);
        }
    return p;
}

std::optional<RibbonTuple> parking_to_ribbon(const ParkingFunction& p, const Composition& shape) {
    if (composition_size(shape) != p.size() || !is_valid_parking_function(p)) return std::nullopt;
    std::vector<std::vector<int>> paths(shape.size());
    std::size_t row = 0;
    for (std::size_t b = shape.size(); b-- > 0;) {
        for (int k = 0; k < shape[b]; ++k, ++row) {
            const int level = p.area_seq[row];
            if (k == 0 && level != 0) return std::nullopt;
            if (k > 0) {
                const int prev = p.area_seq[row - 1];
                const bool west = level == prev && p.labels[row] < p.labels[row - 1];
                const bool north = level == prev + 1 && p.labels[row] > p.labels[row - 1];
                if (!west && !north) return std::nullopt;
            }
            paths[b].push_back(p.labels[row]);
        }
    }
    return RibbonTuple::from_paths(paths);
}

std::vector<std::pair<int, int>> dinv_ribbon_pairs(const RibbonTuple& t) {
    std::vector<std::pair<int, int>> out;
    for (const auto& r : dinv_refs(t)) out.emplace_back(r.right.cell.entry, r.left.cell.entry);
    std::sort(out.begin(), out.end());
    return out;
}

int dinv_ribbon(const RibbonTuple& t) { return static_cast<int>(dinv_refs(t).size()); }

int doff_ribbon(const RibbonTuple& t) {
    int total = 0;
    for (std::size_t i = 0; i < t.components().size(); ++i)
        for (const auto& c : t.components()[i])
            if (c.row == 0) total += static_cast<int>(i);
    return total;
}

int area_ribbon(const RibbonTuple& t) {
    int total = 0;
    for (const auto& c : t.cells()) total += c.row;
    return total;
}

Permutation reading_word(const RibbonTuple& t) {
    auto cells = t.cells();
    std::sort(cells.begin(), cells.end(), [](const RibbonCell& a, const RibbonCell& b) {
        if (a.row != b.row) return a.row > b.row;
        return a.col < b.col;
    });
    std::vector<int> w;
    for (const auto& c : cells) w.push_back(c.entry);
    return Permutation(std::move(w));
}

Composition psi(const RibbonTuple& t) {
    Composition a(static_cast<std::size_t>(t.size()), 0);
    for (const auto& c : t.cells()) a[static_cast<std::size_t>(c.entry - 1)] = c.row;
    return a;
}

bool is_minimal(const RibbonTuple& t) {
    const std::size_t l = t.length();
    std::map<int, std::vector<int>> per_right;
    for (const auto& r : dinv_refs(t)) {
        if (r.left.component == r.right.component) return false;
        if (r.right.cell.row == 0) return false;
        auto& counts = per_right[r.right.cell.entry];
        counts.resize(l, 0);
        ++counts[r.left.component];
    }
    for (std::size_t j = 0; j < l; ++j)
        for (const auto& y : t.components()[j]) {
            if (y.row == 0) continue;
            auto it = per_right.find(y.entry);
            for (std::size_t i = 0; i < j; ++i) {
                const int c = it == per_right.end() ? 0 : it->second[i];
                if (c != 1) return false;
            }
        }
    return true;
}

std::vector<RibbonTuple> enumerate_R(const Composition& lambda) {
    std::vector<RibbonTuple> out;
    for_each_osp(lambda, [&](const OrderedSetPartition& osp) {
        std::vector<std::vector<int>> paths = osp.blocks;
        std::function<void(std::size_t)> rec = [&](std::size_t b) {
            if (b == paths.size()) {
                out.push_back(RibbonTuple::from_paths(paths));
                return;
            }
            std::sort(paths[b].begin(), paths[b].end());
            do {
                rec(b + 1);
            } while (std::next_permutation(paths[b].begin(), paths[b].end()));
        };
        rec(0);
    });
    return out;
}

std::vector<RibbonTuple> enumerate_R0(const Partition& lambda) {
    std::vector<RibbonTuple> out;
    for (auto& t : enumerate_R(lambda.parts()))
        if (is_minimal(t)) out.push_back(std::move(t));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Algorithm1Result finish(std::vector<std::vector<int>> order) {
    Algorithm1Result r;
    r.selection_order = order;
    for (auto& b : order) std::sort(b.begin(), b.end());
    r.partition.blocks = std::move(order);
    return r;
}

}  // namespace

std::optional<Algorithm1Result> algorithm1(const Composition& a, const Composition& lambda) {
    const int n = static_cast<int>(a.size());
    if (composition_size(lambda) != n) return std::nullopt;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::vector<int>> order;
    for (int part : lambda) {
        std::vector<int> block;
        long last = 0;  // extended index of the previous pick, 1-based
        for (int m = 0; m < part; ++m) {
            long found = -1;
            int pick = 0;
            // Extended entry k*n + j carries a_j + k; scan in index order.
            for (int k = 0; k <= m && found < 0; ++k)
                for (int j = 1; j <= n; ++j) {
                    const long idx = static_cast<long>(k) * n + j;
                    if (idx <= last || used[static_cast<std::size_t>(j)]) continue;
                    if (a[static_cast<std::size_t>(j - 1)] + k == m) {
                        found = idx;
                        pick = j;
                        break;
                    }
                }
            if (found < 0) return std::nullopt;
            used[static_cast<std::size_t>(pick)] = true;
            block.push_back(pick);
            last = found;
        }
        order.push_back(std::move(block));
    }
    return finish(std::move(order));
}

std::optional<Algorithm1Result> algorithm1_prime(const RibbonTuple& t, const Composition& lambda) {
    if (composition_size(lambda) != t.size()) return std::nullopt;
    auto cells = t.cells();
    std::vector<bool> taken(cells.size(), false);
    std::vector<std::vector<int>> order;
    auto pick_min = [&](const std::function<bool(const RibbonCell&)>& ok) -> long {
        long best = -1;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (!taken[i] && ok(cells[i]) && (best < 0 || cells[i].entry < cells[static_cast<std::size_t>(best)].entry))
                best = static_cast<long>(i);
        return best;
    };
    for (int part : lambda) {
        std::vector<int> block;
        if (part == 0) {
            order.push_back(block);
            continue;
        }
        long x = pick_min([](const RibbonCell& c) { return c.row == 0; });
        if (x < 0) return std::nullopt;
        taken[static_cast<std::size_t>(x)] = true;
        block.push_back(cells[static_cast<std::size_t>(x)].entry);
        for (int m = 1; m < part; ++m) {
            const RibbonCell cur = cells[static_cast<std::size_t>(x)];
            long next = pick_min([&](const RibbonCell& c) { return c.row == cur.row + 1 && c.entry > cur.entry; });
            if (next < 0) {
                int best_row = -1;
                for (std::size_t i = 0; i < cells.size(); ++i)
                    if (!taken[i] && cells[i].row <= cur.row) best_row = std::max(best_row, cells[i].row);
                if (best_row >= 0) next = pick_min([&](const RibbonCell& c) { return c.row == best_row; });
            }
            if (next < 0) return std::nullopt;
            x = next;
            taken[static_cast<std::size_t>(x)] = true;
            block.push_back(cells[static_cast<std::size_t>(x)].entry);
        }
        order.push_back(std::move(block));
    }
    return finish(std::move(order));
}

std::optional<RibbonTuple> reconstruct_ribbon(const Composition& a, const Partition& lambda) {
    if (static_cast<int>(a.size()) != lambda.size()) return std::nullopt;
    auto blocks = algorithm1(a, lambda.parts());
    if (!blocks) return std::nullopt;
    // The blocks double as a membership witness for D_lambda, which avoids
    // searching all ordered set partitions.
    for (const auto& block : blocks->partition.blocks) {
        auto sorted = block;
        std::sort(sorted.begin(), sorted.end());
        if (!is_descent_composition(restrict(a, sorted))) return std::nullopt;
    }
    // Within a ribbon the path climbs row by row, each row read right to
    // left, i.e. by increasing height and then decreasing entry.
    std::vector<std::vector<int>> paths;
    for (auto block : blocks->partition.blocks) {
        std::sort(block.begin(), block.end(), [&](int u, int v) {
            const int hu = a[static_cast<std::size_t>(u - 1)], hv = a[static_cast<std::size_t>(v - 1)];
            if (hu != hv) return hu < hv;
            return u > v;
        });
        paths.push_back(std::move(block));
    }
    RibbonTuple t;
    try {
        t = RibbonTuple::from_paths(paths);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    if (psi(t) != a || !is_minimal(t)) return std::nullopt;
    return t;
}

std::vector<PatternViolation> check_patterns(const RibbonTuple& t) {
    std::vector<PatternViolation> out;
    auto cells = located_cells(t);
    std::map<std::pair<int, int>, Located> at;
    for (const auto& c : cells) at.emplace(std::make_pair(c.cell.col, c.cell.row), c);
    auto find = [&](int col, int row) -> const Located* {
        auto it = at.find({col, row});
        return it == at.end() ? nullptr : &it->second;
    };

    for (const auto& x : cells)
        for (const auto& y : cells)
            if (x.cell.row == 0 && y.cell.row == 0 && x.cell.col < y.cell.col && x.cell.entry > y.cell.entry)
                out.push_back({1, {x.cell.entry, y.cell.entry}});

    for (const auto& lo : cells) {
        const int col = lo.cell.col, row = lo.cell.row;
        const Located* above = find(col, row + 1);
        const Located* right = find(col + 1, row);
        const Located* right2 = find(col + 2, row);
        auto same = [&](const Located* c) { return c && c->component == lo.component; };
        for (const auto& other : cells) {
            if (other.component <= lo.component) continue;
            const int oc = other.cell.col, orow = other.cell.row;
            // 2: a above c in T_i, b in T_j on a's row.
            if (same(above) && orow == row + 1) {
                const int a = above->cell.entry, b = other.cell.entry, c = lo.cell.entry;
                if (c < b && b < a) out.push_back({2, {a, b, c}});
            }
            if (orow != row) continue;
            const Located* over_other = find(oc, orow + 1);
            const bool other_has_above = over_other && over_other->component == other.component;
            // 3: a b in T_i, c in T_j on the same row.
            if (same(right) && lo.cell.entry > other.cell.entry)
                out.push_back({3, {lo.cell.entry, right->cell.entry, other.cell.entry}});
            // 4: a b c in T_i, d in T_j with e above d.
            if (same(right) && same(right2) && other_has_above)
                out.push_back({4, {lo.cell.entry, right->cell.entry, right2->cell.entry, other.cell.entry,
                                   over_other->cell.entry}});
            // 5: a over b, b c in T_i, d over e in T_j.
            if (same(above) && same(right) && other_has_above && above->cell.entry > right->cell.entry)
                out.push_back({5, {above->cell.entry, lo.cell.entry, right->cell.entry, over_other->cell.entry,
                                   other.cell.entry}});
        }
    }
    return out;
}

MinimalRibbonReport verify_minimal_ribbons(const Partition& lambda) {
    MinimalRibbonReport r;
    r.lambda = lambda;
    const auto R0 = enumerate_R0(lambda);
    r.minimal_count = R0.size();

    long best = std::numeric_limits<long>::max();
    std::vector<RibbonTuple> argmin;
    for (auto& t : enumerate_R(lambda.parts())) {
        const long v = dinv_ribbon(t) + doff_ribbon(t);
        if (v < best) {
            best = v;
            argmin.clear();
        }
        if (v == best) argmin.push_back(std::move(t));
    }
    std::sort(argmin.begin(), argmin.end());
    r.min_statistic = best;
    r.min_is_n_lambda = best == n_stat(lambda);
    r.argmin_is_R0 = argmin == R0;

    std::set<Composition> image;
    r.reconstruction_ok = r.algorithms_agree = r.patterns_ok = true;
    for (const auto& t : R0) {
        const auto a = psi(t);
        image.insert(a);
        const auto back = reconstruct_ribbon(a, lambda);
        if (!back || !(*back == t)) r.reconstruction_ok = false;
        const auto one = algorithm1(a, lambda.parts());
        const auto prime = algorithm1_prime(t, lambda.parts());
        if (!one || !prime || one->selection_order != prime->selection_order || one->partition != t.entry_sets())
            r.algorithms_agree = false;
        if (!check_patterns(t).empty()) r.patterns_ok = false;
    }
    const auto D = enumerate_D_lambda(lambda);
    r.psi_bijective = image.size() == R0.size() && std::equal(image.begin(), image.end(), D.begin(), D.end());
    return r;
}

std::string render(const RibbonTuple& t) {
    auto cells = t.cells();
    if (cells.empty()) return "";
    int min_col = cells[0].col, max_col = cells[0].col, max_row = 0;
    for (const auto& c : cells) {
        min_col = std::min(min_col, c.col);
        max_col = std::max(max_col, c.col);
        max_row = std::max(max_row, c.row);
    }
    std::map<std::pair<int, int>, int> at;
    for (const auto& c : cells) at[{c.col, c.row}] = c.entry;
    std::ostringstream os;
    for (int row = max_row; row >= 0; --row) {
        std::string line;
        for (int col = min_col; col <= max_col; ++col) {
            auto it = at.find({col, row});
            if (it == at.end()) {
                line += "   ";
            } else {
                std::string s = std::to_string(it->second);
                line += std::string(3 - std::min<std::size_t>(3, s.size()), ' ') + s;
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

std::string to_string(const RibbonTuple& t) {
    std::string s = "[";
    const auto paths = t.paths();
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (i) s += "|";
        s += composition_to_string(paths[i]);
    }
    return s + "]";
}

}  // namespace hlmaj

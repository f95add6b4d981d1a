// Brute-force reference implementations used only by the tests. They are
// written straight from the definitions and share no code with the library
// beyond the basic containers.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "hlmaj/combinatorics.hpp"
#include "hlmaj/symfunc.hpp"

namespace oracle {

using hlmaj::Composition;
using hlmaj::Partition;
using hlmaj::SymExpansion;
using hlmaj::TPoly;

inline std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline int inv(const std::vector<int>& w) {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
    return c;
}

inline int maj(const std::vector<int>& w) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) c += static_cast<int>(i) + 1;
    return c;
}

/// b_v = (number of runs) - (index of the run holding v).
inline Composition majt(const std::vector<int>& w) {
    std::vector<int> run(w.size());
    int r = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && w[i - 1] > w[i]) ++r;
        run[i] = r;
    }
    Composition b(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) b[static_cast<std::size_t>(w[i] - 1)] = r - run[i];
    return b;
}

/// Partitions of n in decreasing lexicographic order.
inline std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Semistandard fillings of `shape` with content `content`, each reported
/// as its rows.
inline void for_each_ssyt(const std::vector<int>& shape, const std::vector<int>& content,
                          const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::vector<int>> t(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) t[r].assign(static_cast<std::size_t>(shape[r]), 0);
    std::vector<int> left = content;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (std::size_t c = 0; c < static_cast<std::size_t>(shape[r]); ++c) cells.emplace_back(r, c);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            visit(t);
            return;
        }
        const auto [r, c] = cells[k];
        for (int v = 1; v <= static_cast<int>(content.size()); ++v) {
            if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
            if (c > 0 && t[r][c - 1] > v) continue;
            if (r > 0 && t[r - 1][c] >= v) continue;
            t[r][c] = v;
            --left[static_cast<std::size_t>(v - 1)];
            rec(k + 1);
            ++left[static_cast<std::size_t>(v - 1)];
        }
        t[r][c] = 0;
    };
    rec(0);
}

inline long kostka(const std::vector<int>& shape, const std::vector<int>& content) {
    long c = 0;
    for_each_ssyt(shape, content, [&](const auto&) { ++c; });
    return c;
}

/// Charge of a word with partition content, via the standard subword
/// decomposition (cyclic right-to-left scan).
inline int charge(std::vector<int> w) {
    int total = 0;
    while (!w.empty()) {
        const int m = *std::max_element(w.begin(), w.end());
        std::vector<std::size_t> picked;
        std::size_t pos = w.size();
        int index = 0;
        for (int letter = 1; letter <= m; ++letter) {
            bool found = false;
            for (std::size_t step = 1; step <= w.size() && !found; ++step) {
                const std::size_t at = (pos + w.size() - step) % w.size();
                if (w[at] != letter || std::find(picked.begin(), picked.end(), at) != picked.end()) continue;
                if (letter > 1 && at > pos) ++index;
                total += index;
                picked.push_back(at);
                pos = at;
                found = true;
            }
            if (!found) break;
        }
        std::vector<int> rest;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (std::find(picked.begin(), picked.end(), i) == picked.end()) rest.push_back(w[i]);
        w = rest;
    }
    return total;
}

/// Reading word: rows from bottom to top (English notation), left to right.
inline std::vector<int> reading_word(const std::vector<std::vector<int>>& rows) {
    std::vector<int> w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

inline long n_stat(const std::vector<int>& mu) {
    long s = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) s += static_cast<long>(i) * mu[i];
    return s;
}

inline std::vector<int> conjugate(const std::vector<int>& mu) {
    std::vector<int> c;
    for (int j = 1; !mu.empty() && j <= mu[0]; ++j) {
        int k = 0;
        for (int p : mu) k += p >= j;
        c.push_back(k);
    }
    return c;
}

/// H~_mu in the monomial basis: sum over lambda of
/// t^{n(mu)} K_{lambda,mu}(1/t) s_lambda, with K the charge generating
/// function, then s_lambda = sum_nu K_{lambda,nu} m_nu. With omega, s_lambda
/// is replaced by s_{lambda'}.
inline SymExpansion modified_hl(const std::vector<int>& mu, bool twisted) {
    const int n = std::accumulate(mu.begin(), mu.end(), 0);
    const long nm = n_stat(mu);
    SymExpansion out;
    out.n = n;
    for (const auto& lambda : partitions(n)) {
        TPoly schur_coeff;
        for_each_ssyt(lambda, mu, [&](const auto& rows) {
            schur_coeff.add(static_cast<int>(nm - charge(reading_word(rows))), 1);
        });
        if (schur_coeff.is_zero()) continue;
        const auto shape = twisted ? conjugate(lambda) : lambda;
        for (const auto& nu : partitions(n)) {
            const long k = kostka(shape, nu);
            if (k == 0) continue;
            TPoly c;
            for (int d = 0; d <= schur_coeff.degree(); ++d)
                if (schur_coeff.at(d) != 0) c.add(d, schur_coeff.at(d) * k);
            out.add(Partition(nu), c);
        }
    }
    return out;
}

}  // namespace oracle

#include "hlmaj/descent.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace hlmaj {

NotADescentComposition::NotADescentComposition(const Composition& a)
    : std::domain_error("(" + composition_to_string(a) + ") is not a descent composition") {}

int DescentComposition::degree() const { return composition_size(entries); }

DescentBasisElement make_basis_element(const Permutation& tau) {
    DescentBasisElement e;
    e.exponent = majt(tau);
    e.witness = tau;
    e.degree = maj(tau);
    return e;
}

std::vector<std::pair<int, int>> inversion_set(const Permutation& sigma) {
    std::vector<std::pair<int, int>> out;
    const auto& w = sigma.word();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) out.emplace_back(w[i], w[j]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> descent_set(const Permutation& sigma) {
    std::vector<int> out;
    const auto& w = sigma.word();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

int inv(const Permutation& sigma) { return static_cast<int>(inversion_set(sigma).size()); }

int maj(const Permutation& sigma) {
    auto d = descent_set(sigma);
    return std::accumulate(d.begin(), d.end(), 0);
}

Composition invt(const Permutation& sigma) {
    Composition a(static_cast<std::size_t>(sigma.size()), 0);
    for (auto [big, small] : inversion_set(sigma)) {
        (void)big;
        ++a[static_cast<std::size_t>(small - 1)];
    }
    return a;
}

Composition majt(const Permutation& sigma) {
    const auto& w = sigma.word();
    const std::size_t n = w.size();
    Composition b(n, 0);
    if (n == 0) return b;
    std::vector<int> run_of(n, 0);
    int run = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && w[i] < w[i - 1]) ++run;
        run_of[i] = run;
    }
    for (std::size_t i = 0; i < n; ++i) b[static_cast<std::size_t>(w[i] - 1)] = run - run_of[i];
    return b;
}

std::optional<Permutation> try_majt_inverse(const Composition& a) {
    const std::size_t n = a.size();
    if (n == 0) return Permutation();
    for (int v : a)
        if (v < 0) return std::nullopt;
    const int r = *std::max_element(a.begin(), a.end()) + 1;
    // Run k holds the values i with a_i = r - k, increasing.
    std::vector<int> word;
    word.reserve(n);
    for (int k = 1; k <= r; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] == r - k) word.push_back(static_cast<int>(i) + 1);
    Permutation sigma(std::move(word));
    if (majt(sigma) != a) return std::nullopt;
    return sigma;
}

Permutation majt_inverse(const Composition& a) {
    auto s = try_majt_inverse(a);
    if (!s) throw NotADescentComposition(a);
    return *s;
}

bool is_descent_composition(const Composition& a) { return try_majt_inverse(a).has_value(); }

std::strong_ordering descent_compare(const Composition& a, const Composition& b) {
    Composition sa(a), sb(b);
    std::sort(sa.begin(), sa.end(), std::greater<>());
    std::sort(sb.begin(), sb.end(), std::greater<>());
    if (auto c = sa <=> sb; c != 0) return c;
    return a <=> b;
}

Composition restrict(const Composition& a, const std::vector<int>& s) {
    Composition out;
    out.reserve(s.size());
    for (int j : s) out.push_back(a[static_cast<std::size_t>(j - 1)]);
    return out;
}

std::vector<Composition> enumerate_D_n(int n) {
    // D_n is reused heavily by D_lambda; cache per n.
    static std::mutex mu;
    static std::map<int, std::vector<Composition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Composition> out;
    for (const auto& s : all_permutations(n)) out.push_back(majt(s));
    std::sort(out.begin(), out.end());
    cache.emplace(n, out);
    return out;
}

std::vector<Composition> enumerate_D_lambda(const Composition& lambda) {
    const int n = composition_size(lambda);
    std::vector<std::vector<Composition>> pieces;
    for (int part : lambda) pieces.push_back(enumerate_D_n(part));
    std::set<Composition> found;
    Composition a(static_cast<std::size_t>(n), 0);
    for_each_osp(lambda, [&](const OrderedSetPartition& osp) {
        std::function<void(std::size_t)> fill = [&](std::size_t blk) {
            if (blk == osp.blocks.size()) {
                found.insert(a);
                return;
            }
            const auto& block = osp.blocks[blk];
            if (block.empty()) {
                fill(blk + 1);
                return;
            }
            for (const auto& piece : pieces[blk]) {
                for (std::size_t t = 0; t < block.size(); ++t) a[static_cast<std::size_t>(block[t] - 1)] = piece[t];
                fill(blk + 1);
            }
        };
        fill(0);
    });
    return {found.begin(), found.end()};
}

std::vector<Composition> enumerate_D_lambda(const Partition& lambda) { return enumerate_D_lambda(lambda.parts()); }

std::optional<OrderedSetPartition> is_in_D_lambda(const Composition& a, const Composition& lambda) {
    if (static_cast<int>(a.size()) != composition_size(lambda)) return std::nullopt;
    std::optional<OrderedSetPartition> witness;
    // TODO: prune with a backtracking search over A_1 first if larger n is ever needed.
    for_each_osp(lambda, [&](const OrderedSetPartition& osp) {
        if (witness) return;
        for (const auto& block : osp.blocks)
            if (!block.empty() && !is_descent_composition(restrict(a, block))) return;
        witness = osp;
    });
    return witness;
}

std::optional<OrderedSetPartition> is_in_D_lambda(const Composition& a, const Partition& lambda) {
    return is_in_D_lambda(a, lambda.parts());
}

std::vector<Permutation> enumerate_J_maj(const Partition& lambda) {
    std::vector<Permutation> out;
    for (const auto& a : enumerate_D_lambda(lambda)) out.push_back(majt_inverse(a));
    std::sort(out.begin(), out.end());
    return out;
}

Composition descent_monomial(const Permutation& sigma) {
    const auto& w = sigma.word();
    Composition e(w.size(), 0);
    for (int i : descent_set(sigma))
        for (int k = 0; k < i; ++k) ++e[static_cast<std::size_t>(w[static_cast<std::size_t>(k)] - 1)];
    return e;
}

Composition artin_monomial(const Permutation& sigma) { return invt(sigma); }

}  // namespace hlmaj

#include "hlmaj/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hlmaj {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(std::size_t len) const {
    std::vector<int> out(parts_);
    if (out.size() < len) out.resize(len, 0);
    return out;
}

std::string Partition::to_string() const { return "(" + composition_to_string(parts_) + ")"; }

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

std::vector<int> Permutation::positions() const {
    std::vector<int> pos(word_.size() + 1, 0);
    for (std::size_t i = 0; i < word_.size(); ++i) pos[static_cast<std::size_t>(word_[i])] = static_cast<int>(i) + 1;
    return pos;
}

Permutation Permutation::inverse() const {
    auto pos = positions();
    return Permutation(std::vector<int>(pos.begin() + 1, pos.end()));
}

std::string Permutation::to_string() const { return "(" + composition_to_string(word_) + ")"; }

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

Composition OrderedSetPartition::type() const {
    Composition t;
    t.reserve(blocks.size());
    for (const auto& b : blocks) t.push_back(static_cast<int>(b.size()));
    return t;
}

int OrderedSetPartition::ground_size() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
}

bool OrderedSetPartition::is_valid() const {
    const int n = ground_size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& b : blocks) {
        if (!std::is_sorted(b.begin(), b.end())) return false;
        for (int v : b) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
    return true;
}

std::string OrderedSetPartition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += "|";
        s += "{" + composition_to_string(blocks[i]) + "}";
    }
    return s + ")";
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return Partition();
    std::vector<int> c(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda)
        for (int j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

long n_stat(const Partition& lambda) {
    long total = 0;
    for (int c : conjugate(lambda)) total += static_cast<long>(c) * (c - 1) / 2;
    return total;
}

mpz_class factorial(int n) {
    mpz_class r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

mpz_class composition_multinomial(const Composition& mu) {
    mpz_class r = factorial(composition_size(mu));
    for (int m : mu) r /= factorial(m);
    return r;
}

mpz_class multinomial(const Partition& lambda) { return composition_multinomial(conjugate(lambda).parts()); }

int composition_size(const Composition& mu) { return std::accumulate(mu.begin(), mu.end(), 0); }

Partition sort_to_partition(const Composition& mu) {
    std::vector<int> p;
    for (int m : mu)
        if (m > 0) p.push_back(m);
    std::sort(p.begin(), p.end(), std::greater<>());
    return Partition(std::move(p));
}

Composition reversed(const Composition& mu) { return Composition(mu.rbegin(), mu.rend()); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

// Label word for an ordered set partition / shuffle of the given type:
// label i repeated type[i] times, sorted.
std::vector<int> sorted_labels(const Composition& type) {
    std::vector<int> labels;
    for (std::size_t i = 0; i < type.size(); ++i)
        labels.insert(labels.end(), static_cast<std::size_t>(type[i]), static_cast<int>(i));
    return labels;
}

bool blocks_monotone(const Permutation& sigma, const Composition& mu, bool increasing) {
    auto pos = sigma.positions();
    int start = 1;
    for (int m : mu) {
        for (int v = start; v + 1 < start + m; ++v) {
            const bool up = pos[static_cast<std::size_t>(v)] < pos[static_cast<std::size_t>(v + 1)];
            if (up != increasing) return false;
        }
        start += m;
    }
    return true;
}

std::vector<Permutation> shuffles_impl(const Composition& mu, bool increasing) {
    const int n = composition_size(mu);
    std::vector<int> labels = sorted_labels(mu);
    std::vector<int> block_start(mu.size(), 1);
    for (std::size_t i = 1; i < mu.size(); ++i) block_start[i] = block_start[i - 1] + mu[i - 1];
    std::vector<Permutation> out;
    do {
        std::vector<int> next(mu.size());
        for (std::size_t i = 0; i < mu.size(); ++i) next[i] = increasing ? block_start[i] : block_start[i] + mu[i] - 1;
        std::vector<int> word(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) {
            const auto b = static_cast<std::size_t>(labels[static_cast<std::size_t>(p)]);
            word[static_cast<std::size_t>(p)] = increasing ? next[b]++ : next[b]--;
        }
        out.emplace_back(std::move(word));
    } while (std::next_permutation(labels.begin(), labels.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

bool dominates(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size()) return false;
    const std::size_t len = std::max(mu.length(), nu.length());
    auto a = mu.padded(len);
    auto b = nu.padded(len);
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) return false;
    }
    return true;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

bool is_shuffle(const Permutation& sigma, const Composition& mu) { return blocks_monotone(sigma, mu, true); }

bool is_reverse_shuffle(const Permutation& sigma, const Composition& mu) { return blocks_monotone(sigma, mu, false); }

std::vector<Permutation> enumerate_shuffles(const Composition& mu) { return shuffles_impl(mu, true); }

std::vector<Permutation> enumerate_reverse_shuffles(const Composition& mu) { return shuffles_impl(mu, false); }

void for_each_osp(const Composition& type, const std::function<void(const OrderedSetPartition&)>& visit) {
    std::vector<int> labels = sorted_labels(type);
    OrderedSetPartition osp;
    do {
        osp.blocks.assign(type.size(), {});
        for (std::size_t j = 0; j < labels.size(); ++j)
            osp.blocks[static_cast<std::size_t>(labels[j])].push_back(static_cast<int>(j) + 1);
        visit(osp);
    } while (std::next_permutation(labels.begin(), labels.end()));
}

std::vector<OrderedSetPartition> enumerate_osp(const Composition& type) {
    std::vector<OrderedSetPartition> out;
    for_each_osp(type, [&](const OrderedSetPartition& o) { out.push_back(o); });
    return out;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<Composition> weak_compositions(int total, int parts) {
    std::vector<Composition> out;
    if (parts == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    Composition cur(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int idx, int rem) {
        if (idx == parts - 1) {
            cur[static_cast<std::size_t>(idx)] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            cur[static_cast<std::size_t>(idx)] = v;
            rec(idx + 1, rem - v);
        }
    };
    rec(0, total);
    return out;
}

std::string composition_to_string(const Composition& a, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << sep;
        os << a[i];
    }
    return os.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed integer '" + token + "'");
        }
        if (used != token.size()) throw std::invalid_argument("malformed integer '" + token + "'");
        out.push_back(v);
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '(' || ch == ')' || ch == '[' || ch == ']') {
            flush();
        } else {
            token.push_back(ch);
        }
    }
    flush();
    return out;
}

}  // namespace hlmaj

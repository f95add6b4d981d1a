#include "hlmaj/linalg.hpp"

namespace hlmaj {

SparseVec sparse_from_dense(const std::vector<mpq_class>& dense) {
    SparseVec v;
    for (std::size_t j = 0; j < dense.size(); ++j)
        if (dense[j] != 0) v.emplace_back(static_cast<int>(j), dense[j]);
    return v;
}

Echelon::Echelon(std::size_t width, std::size_t pivot_limit)
    : width_(width), limit_(pivot_limit), row_of_pivot_(pivot_limit, -1) {}

std::vector<mpq_class> Echelon::to_dense(const SparseVec& v) const {
    std::vector<mpq_class> d(width_);
    for (const auto& [j, c] : v) d[static_cast<std::size_t>(j)] = c;
    return d;
}

void Echelon::reduce(std::vector<mpq_class>& dense) const {
    for (std::size_t c = 0; c < limit_; ++c) {
        if (dense[c] == 0 || row_of_pivot_[c] < 0) continue;
        const mpq_class alpha = dense[c];
        for (const auto& [j, v] : rows_[static_cast<std::size_t>(row_of_pivot_[c])])
            dense[static_cast<std::size_t>(j)] -= alpha * v;
    }
}

int Echelon::insert(std::vector<mpq_class> dense) {
    reduce(dense);
    std::size_t lead = 0;
    while (lead < limit_ && dense[lead] == 0) ++lead;
    if (lead == limit_) return -1;
    const mpq_class inv = 1 / dense[lead];
    for (auto& x : dense)
        if (x != 0) x *= inv;
    row_of_pivot_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(sparse_from_dense(dense));
    pivot_cols_.push_back(static_cast<int>(lead));
    return static_cast<int>(lead);
}

int Echelon::insert(const SparseVec& v) { return insert(to_dense(v)); }

bool Echelon::contains(const SparseVec& v) const {
    auto d = to_dense(v);
    reduce(d);
    for (std::size_t c = 0; c < limit_; ++c)
        if (d[c] != 0) return false;
    return true;
}

std::size_t rank_of(const std::vector<SparseVec>& vectors, std::size_t width) {
    Echelon e(width);
    for (const auto& v : vectors) e.insert(v);
    return e.rank();
}

}  // namespace hlmaj

#include "hlmaj/quotient.hpp"

#include <algorithm>
#include <stdexcept>

#include "hlmaj/descent.hpp"

namespace hlmaj {

namespace {

void axpy(std::map<int, mpq_class>& acc, const mpq_class& a, const SparseVec& v) {
    for (const auto& [j, c] : v) {
        auto& slot = acc[j];
        slot += a * c;
        if (slot == 0) acc.erase(j);
    }
}

SparseVec to_sparse(const std::map<int, mpq_class>& m) { return {m.begin(), m.end()}; }

}  // namespace

std::vector<Composition> monomials_of_degree(int nvars, int d) {
    if (nvars == 0) return d == 0 ? std::vector<Composition>{Composition{}} : std::vector<Composition>{};
    auto v = weak_compositions(d, nvars);
    std::sort(v.begin(), v.end());
    return v;
}

GradedQuotient::GradedQuotient(int nvars, const std::vector<MPoly>& generators, int max_degree) : nvars_(nvars) {
    std::map<int, std::vector<MPoly>> by_degree;
    for (const auto& g : generators) {
        if (g.nvars() != nvars) throw std::invalid_argument("generator has the wrong number of variables");
        if (!g.is_homogeneous()) throw std::invalid_argument("generators must be homogeneous");
        if (!g.is_zero()) by_degree[g.degree()].push_back(g);
    }
    if (by_degree.count(0)) return;  // unit ideal

    const Composition zero(static_cast<std::size_t>(nvars), 0);
    dims_.push_back(1);
    standard_.push_back({zero});
    nf_.push_back({{zero, SparseVec{{0, mpq_class(1)}}}});
    for (int d = 1; d <= max_degree; ++d) {
        auto it = by_degree.find(d);
        build_degree(d, it == by_degree.end() ? std::vector<MPoly>{} : it->second);
        if (dims_.back() == 0) {
            dims_.pop_back();
            standard_.pop_back();
            nf_.pop_back();
            return;
        }
    }
    throw std::runtime_error("quotient does not terminate within the degree cap");
}

void GradedQuotient::build_degree(int d, const std::vector<MPoly>& gens) {
    const auto& prev_std = standard_[static_cast<std::size_t>(d - 1)];
    const auto& prev_nf = nf_[static_cast<std::size_t>(d - 1)];
    const auto n = static_cast<std::size_t>(nvars_);

    // Spanning monomials x_i b.
    std::map<Composition, int> wcol;
    for (const auto& b : prev_std)
        for (std::size_t i = 0; i < n; ++i) {
            Composition m = b;
            ++m[i];
            wcol.emplace(m, 0);
        }
    int width = 0;
    for (auto& [m, c] : wcol) c = width++;

    // Monomials whose class can be nonzero: a divisor has nonzero normal form.
    std::map<Composition, int> candidates;
    for (const auto& [b, v] : prev_nf)
        for (std::size_t i = 0; i < n; ++i) {
            Composition m = b;
            ++m[i];
            candidates.emplace(m, 0);
        }

    auto lift = [&](const Composition& m, std::size_t i, SparseVec& out) -> bool {
        Composition div = m;
        --div[i];
        auto it = prev_nf.find(div);
        out.clear();
        if (it == prev_nf.end()) return false;
        std::map<int, mpq_class> acc;
        for (const auto& [k, c] : it->second) {
            Composition w = prev_std[static_cast<std::size_t>(k)];
            ++w[i];
            acc[wcol.at(w)] += c;
        }
        std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
        out = to_sparse(acc);
        return true;
    };

    Echelon relations(static_cast<std::size_t>(width));
    std::map<Composition, SparseVec> image;
    SparseVec v;
    for (const auto& [m, unused] : candidates) {
        (void)unused;
        std::vector<SparseVec> lifts;
        bool through_zero = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] == 0) continue;
            if (lift(m, i, v) && !v.empty())
                lifts.push_back(v);
            else
                through_zero = true;
        }
        if (through_zero) {
            for (const auto& l : lifts) relations.insert(l);
            continue;
        }
        for (std::size_t k = 1; k < lifts.size(); ++k) {
            std::map<int, mpq_class> diff(lifts[k].begin(), lifts[k].end());
            axpy(diff, -1, lifts[0]);
            if (!diff.empty()) relations.insert(to_sparse(diff));
        }
        image.emplace(m, lifts[0]);
    }
    for (const auto& g : gens) {
        std::map<int, mpq_class> acc;
        for (const auto& [m, c] : g.terms()) {
            auto it = image.find(m);
            if (it != image.end()) axpy(acc, c, it->second);
        }
        if (!acc.empty()) relations.insert(to_sparse(acc));
    }

    // Greedy choice of standard monomials. Columns past `width` record the
    // combination of standard monomials each echelon row represents.
    std::vector<Composition> order;
    for (const auto& [m, vec] : image) order.push_back(m);
    std::sort(order.begin(), order.end(), DescentLess{});

    const std::size_t total = static_cast<std::size_t>(width) * 2;
    Echelon classes(total, static_cast<std::size_t>(width));
    std::vector<Composition> standard;
    std::map<Composition, SparseVec> nf;
    for (const auto& m : order) {
        std::vector<mpq_class> dense(total);
        for (const auto& [j, c] : image.at(m)) dense[static_cast<std::size_t>(j)] = c;
        relations.reduce(dense);
        bool zero = true;
        for (int j = 0; j < width && zero; ++j) zero = dense[static_cast<std::size_t>(j)] == 0;
        if (zero) continue;
        auto probe = dense;
        classes.reduce(probe);
        bool dependent = true;
        for (int j = 0; j < width && dependent; ++j) dependent = probe[static_cast<std::size_t>(j)] == 0;
        if (dependent) {
            SparseVec coords;
            for (std::size_t j = static_cast<std::size_t>(width); j < total; ++j)
                if (probe[j] != 0) coords.emplace_back(static_cast<int>(j) - width, -probe[j]);
            nf.emplace(m, std::move(coords));
            continue;
        }
        const int idx = static_cast<int>(standard.size());
        dense[static_cast<std::size_t>(width + idx)] = 1;
        classes.insert(std::move(dense));
        standard.push_back(m);
        nf.emplace(m, SparseVec{{idx, mpq_class(1)}});
    }
    dims_.push_back(static_cast<int>(standard.size()));
    standard_.push_back(std::move(standard));
    nf_.push_back(std::move(nf));
}

int GradedQuotient::dimension() const {
    int s = 0;
    for (int x : dims_) s += x;
    return s;
}

const std::vector<Composition>& GradedQuotient::standard_monomials(int d) const {
    static const std::vector<Composition> empty;
    if (d < 0 || d >= static_cast<int>(standard_.size())) return empty;
    return standard_[static_cast<std::size_t>(d)];
}

SparseVec GradedQuotient::normal_form(const Composition& e) const {
    const int d = composition_size(e);
    if (d >= static_cast<int>(nf_.size())) return {};
    const auto& table = nf_[static_cast<std::size_t>(d)];
    auto it = table.find(e);
    return it == table.end() ? SparseVec{} : it->second;
}

SparseVec GradedQuotient::normal_form(const MPoly& p, int d) const {
    std::map<int, mpq_class> acc;
    for (const auto& [e, c] : p.terms()) {
        if (composition_size(e) != d) throw std::invalid_argument("polynomial is not homogeneous of the given degree");
        axpy(acc, c, normal_form(e));
    }
    return to_sparse(acc);
}

MPoly GradedQuotient::reduce(const MPoly& p) const {
    MPoly out(nvars_);
    for (const auto& [e, c] : p.terms()) {
        const int d = composition_size(e);
        for (const auto& [k, v] : normal_form(e)) out.add_term(standard_[static_cast<std::size_t>(d)][static_cast<std::size_t>(k)], c * v);
    }
    return out;
}

IdealSlice graded_component_reduce(int nvars, const std::vector<MPoly>& generators, int d, bool descent_order) {
    IdealSlice slice;
    slice.columns = monomials_of_degree(nvars, d);
    if (descent_order) {
        // Largest first, so pivots are leading terms.
        std::sort(slice.columns.begin(), slice.columns.end(),
                  [](const Composition& a, const Composition& b) { return descent_compare(a, b) > 0; });
    } else {
        std::reverse(slice.columns.begin(), slice.columns.end());
    }
    std::map<Composition, int> col;
    for (std::size_t j = 0; j < slice.columns.size(); ++j) col[slice.columns[j]] = static_cast<int>(j);

    Echelon e(slice.columns.size());
    for (const auto& g : generators) {
        const int gd = g.degree();
        if (g.is_zero() || gd > d) continue;
        for (const auto& m : monomials_of_degree(nvars, d - gd)) {
            std::vector<mpq_class> dense(slice.columns.size());
            for (const auto& [ge, c] : g.terms()) {
                Composition x = ge;
                for (std::size_t i = 0; i < x.size(); ++i) x[i] += m[i];
                dense[static_cast<std::size_t>(col.at(x))] += c;
            }
            e.insert(std::move(dense));
        }
    }
    for (std::size_t r = 0; r < e.rank(); ++r) {
        MPoly row(nvars);
        for (const auto& [j, c] : e.rows()[r]) row.add_term(slice.columns[static_cast<std::size_t>(j)], c);
        slice.rows.push_back(std::move(row));
        slice.pivots.push_back(slice.columns[static_cast<std::size_t>(e.pivots()[r])]);
    }
    return slice;
}

}  // namespace hlmaj

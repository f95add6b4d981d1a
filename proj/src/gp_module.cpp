#include "hlmaj/gp_module.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "hlmaj/descent.hpp"
#include "hlmaj/linalg.hpp"

namespace hlmaj {

ResourceBoundExceeded::ResourceBoundExceeded(int n, int bound)
    : std::runtime_error("n = " + std::to_string(n) + " exceeds the configured bound " + std::to_string(bound)),
      n_(n),
      bound_(bound) {}

namespace {

void check_bound(int n, int bound) {
    if (n > bound) throw ResourceBoundExceeded(n, bound);
}

Partition ones(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

}  // namespace

MPoly elementary_symmetric(int d, const std::vector<int>& S, int n) {
    MPoly out(n);
    if (d < 0 || d > static_cast<int>(S.size())) return out;
    for (const auto& pick : subsets_of_size(static_cast<int>(S.size()), d)) {
        Composition e(static_cast<std::size_t>(n), 0);
        for (int k : pick) e[static_cast<std::size_t>(S[static_cast<std::size_t>(k - 1)] - 1)] = 1;
        out.add_term(e, 1);
    }
    return out;
}

int p_stat(const Partition& lambda, int n, int m) {
    const auto padded = conjugate(lambda).padded(static_cast<std::size_t>(n));
    int s = 0;
    for (int i = n - m; i < n; ++i) s += padded[static_cast<std::size_t>(i)];
    return s;
}

TanisakiIdeal tanisaki_generators(const Partition& lambda, int n) {
    if (lambda.size() != n) throw std::invalid_argument("lambda must be a partition of n");
    TanisakiIdeal I;
    I.n = n;
    I.lambda = lambda;
    for (int m = 1; m <= n; ++m) {
        const int threshold = m - p_stat(lambda, n, m);
        for (const auto& S : subsets_of_size(n, m))
            for (int d = std::max(1, threshold + 1); d <= m; ++d) {
                I.generators.push_back(elementary_symmetric(d, S, n));
                I.labels.emplace_back(S, d);
            }
    }
    return I;
}

std::shared_ptr<const GradedQuotient> gp_quotient(const Partition& lambda) {
    static std::mutex mu;
    static std::map<Partition, std::shared_ptr<const GradedQuotient>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(lambda);
        if (it != cache.end()) return it->second;
    }
    const auto I = tanisaki_generators(lambda, lambda.size());
    auto q = std::make_shared<const GradedQuotient>(I.n, I.generators);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(lambda, std::move(q)).first->second;
}

TPoly hilbert_series(const Partition& lambda, int bound) {
    check_bound(lambda.size(), bound);
    TPoly h;
    const auto& dims = gp_quotient(lambda)->dimensions();
    for (std::size_t d = 0; d < dims.size(); ++d) h.add(static_cast<int>(d), dims[d]);
    return h;
}

namespace {

std::map<int, std::vector<Composition>> by_degree(const std::vector<Composition>& v) {
    std::map<int, std::vector<Composition>> out;
    for (const auto& a : v) out[composition_size(a)].push_back(a);
    return out;
}

}  // namespace

GradedBasisReport verify_descent_basis(const Partition& lambda, int bound) {
    check_bound(lambda.size(), bound);
    GradedBasisReport r;
    r.lambda = lambda;
    const auto q = gp_quotient(conjugate(lambda));
    r.dimensions = q->dimensions();
    for (std::size_t d = 0; d < r.dimensions.size(); ++d) r.hilbert.add(static_cast<int>(d), r.dimensions[d]);

    const auto graded = by_degree(enumerate_D_lambda(lambda));
    r.independent = r.spanning = r.leading_terms = true;
    const int top = std::max(q->top_degree(), graded.empty() ? 0 : graded.rbegin()->first);
    for (int d = 0; d <= top; ++d) {
        auto it = graded.find(d);
        const std::vector<Composition> basis = it == graded.end() ? std::vector<Composition>{} : it->second;
        const int dim = d <= q->top_degree() ? r.dimensions[static_cast<std::size_t>(d)] : 0;
        std::vector<SparseVec> images;
        for (const auto& a : basis) images.push_back(q->normal_form(a));
        const auto rank = rank_of(images, static_cast<std::size_t>(std::max(dim, 1)));
        if (rank != basis.size()) {
            r.independent = false;
            r.diagnostics.push_back("degree " + std::to_string(d) + ": rank " + std::to_string(rank) + " of " +
                                    std::to_string(basis.size()) + " descent monomials");
        }
        if (static_cast<int>(basis.size()) != dim) {
            r.spanning = false;
            r.diagnostics.push_back("degree " + std::to_string(d) + ": " + std::to_string(basis.size()) +
                                    " descent monomials, quotient dimension " + std::to_string(dim));
        }
        auto standard = q->standard_monomials(d);
        auto sorted_basis = basis;
        std::sort(standard.begin(), standard.end());
        std::sort(sorted_basis.begin(), sorted_basis.end());
        if (standard != sorted_basis) {
            r.leading_terms = false;
            r.diagnostics.push_back("degree " + std::to_string(d) + ": non-leading monomials differ from D_lambda");
        }
    }
    return r;
}

bool verify_leading_terms(const Partition& lambda, int bound) { return verify_descent_basis(lambda, bound).leading_terms; }

ParabolicReport verify_parabolic_basis(const Partition& lambda, const Composition& mu, int bound) {
    check_bound(lambda.size(), bound);
    if (composition_size(mu) != lambda.size()) throw std::invalid_argument("mu must be a composition of n");
    const int n = lambda.size();
    ParabolicReport r;
    r.lambda = lambda;
    r.mu = mu;
    const auto q = gp_quotient(conjugate(lambda));

    std::map<int, std::vector<SparseVec>> images;
    for (const auto& tau : enumerate_J_maj(lambda)) {
        if (!is_reverse_shuffle(tau, mu)) continue;
        MPoly g = antisymmetrize(mu, MPoly::monomial(majt(tau)));
        const int d = maj(tau);
        images[d].push_back(q->normal_form(g, d));
        r.indices.push_back(tau);
        r.elements.push_back(std::move(g));
        r.count_poly.add(d, 1);
    }
    r.independent = true;
    for (const auto& [d, vecs] : images) {
        const auto width = static_cast<std::size_t>(std::max(1, q->dimensions()[static_cast<std::size_t>(d)]));
        if (rank_of(vecs, width) != vecs.size()) {
            r.independent = false;
            r.diagnostics.push_back("degree " + std::to_string(d) + ": antisymmetrized elements are dependent");
        }
    }
    for (int d = 0; d <= q->top_degree(); ++d) {
        std::vector<SparseVec> vecs;
        for (const auto& s : q->standard_monomials(d)) vecs.push_back(q->normal_form(antisymmetrize(mu, MPoly::monomial(s)), d));
        const auto width = static_cast<std::size_t>(std::max(1, q->dimensions()[static_cast<std::size_t>(d)]));
        r.module_dims.add(d, static_cast<long>(rank_of(vecs, width)));
    }
    r.expected = hl_via_ribbons(lambda, true).coefficient(sort_to_partition(mu));

    // Every other term of N_mu g_tau permutes exponents inside a block, so
    // it has the same sorted type and only the lex tiebreak separates it.
    r.leading_ok = true;
    for (const auto& tau : enumerate_reverse_shuffles(mu)) {
        const auto a = majt(tau);
        const auto g = antisymmetrize(mu, MPoly::monomial(a));
        Composition low;
        for (const auto& [e, c] : g.terms())
            if (low.empty() || descent_compare(e, low) < 0) low = e;
        if (low != a || g.coefficient(a) != 1) {
            r.leading_ok = false;
            r.diagnostics.push_back("N_mu g_" + tau.to_string() + " has a term below majt in the descent order");
        }
    }
    if (r.count_poly != r.module_dims)
        r.diagnostics.push_back("count " + r.count_poly.to_string() + " vs module dimensions " + r.module_dims.to_string());
    if (r.count_poly != r.expected)
        r.diagnostics.push_back("count " + r.count_poly.to_string() + " vs ribbon coefficient " + r.expected.to_string());
    (void)n;
    return r;
}

namespace {

std::vector<int> complement_of(const std::vector<int>& S, int n) {
    std::vector<int> T;
    for (int i = 1; i <= n; ++i)
        if (!std::binary_search(S.begin(), S.end(), i)) T.push_back(i);
    return T;
}

}  // namespace

TensorPoly phi_map(const std::vector<int>& S_in, const MPoly& p) {
    const int n = p.nvars();
    std::vector<int> S = S_in;
    std::sort(S.begin(), S.end());
    if (std::adjacent_find(S.begin(), S.end()) != S.end() || (!S.empty() && (S.front() < 1 || S.back() > n)))
        throw std::invalid_argument("S must be a subset of {1..n}");
    const auto T = complement_of(S, n);
    const int k = static_cast<int>(S.size());
    const auto q = gp_quotient(ones(k));
    TensorPoly out;
    out.first_vars = k;
    out.second_vars = n - k;
    for (const auto& [e, c] : p.terms()) {
        Composition first = restrict(e, S);
        Composition second = restrict(e, T);
        const int d = composition_size(first);
        for (const auto& [idx, v] : q->normal_form(first))
            out.add_term(q->standard_monomials(d)[static_cast<std::size_t>(idx)], second, c * v);
    }
    return out;
}

bool verify_phi_injective(const Partition& lambda, int bound) {
    check_bound(lambda.size(), bound);
    const auto osps = enumerate_osp(lambda.parts());
    std::vector<std::shared_ptr<const GradedQuotient>> factors;
    for (int part : lambda) factors.push_back(gp_quotient(ones(part)));

    for (const auto& [d, basis] : by_degree(enumerate_D_lambda(lambda))) {
        // Coordinates: (osp index, standard index per factor) -> column.
        std::map<std::vector<int>, int> column;
        std::vector<std::map<int, mpq_class>> rows;
        for (const auto& a : basis) {
            std::map<int, mpq_class> row;
            for (std::size_t o = 0; o < osps.size(); ++o) {
                std::vector<std::pair<std::vector<int>, mpq_class>> partial{{{static_cast<int>(o)}, mpq_class(1)}};
                for (std::size_t b = 0; b < osps[o].blocks.size() && !partial.empty(); ++b) {
                    const auto nf = factors[b]->normal_form(restrict(a, osps[o].blocks[b]));
                    std::vector<std::pair<std::vector<int>, mpq_class>> next;
                    for (const auto& [key, c] : partial)
                        for (const auto& [idx, v] : nf) {
                            auto k2 = key;
                            k2.push_back(composition_size(restrict(a, osps[o].blocks[b])));
                            k2.push_back(idx);
                            next.emplace_back(std::move(k2), c * v);
                        }
                    partial = std::move(next);
                }
                for (const auto& [key, c] : partial) {
                    const int col = column.emplace(key, static_cast<int>(column.size())).first->second;
                    row[col] += c;
                }
            }
            std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
            rows.push_back(std::move(row));
        }
        std::vector<SparseVec> vecs;
        for (const auto& row : rows) vecs.emplace_back(row.begin(), row.end());
        if (rank_of(vecs, std::max<std::size_t>(1, column.size())) != basis.size()) return false;
    }
    return true;
}

SpotCheckResult tanimap_spot_check(const Partition& lambda, int samples, std::uint64_t seed, int bound) {
    check_bound(lambda.size(), bound);
    SpotCheckResult res;
    const int n = lambda.size();
    const int k = lambda[0];
    const Partition mu(std::vector<int>(lambda.begin() + 1, lambda.end()));
    const auto I = tanisaki_generators(conjugate(lambda), n);
    const auto target = gp_quotient(conjugate(mu));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> expo(0, 2);
    for (const auto& S : subsets_of_size(n, k))
        for (std::size_t g = 0; g < I.generators.size(); ++g)
            for (int s = 0; s < samples; ++s) {
                Composition e(static_cast<std::size_t>(n));
                for (auto& x : e) x = expo(rng);
                const auto image = phi_map(S, I.generators[g] * MPoly::monomial(e));
                ++res.trials;
                for (const auto& [first, second] : image.by_first())
                    if (!target->contains(second)) {
                        ++res.failures;
                        res.diagnostics.push_back("S=" + composition_to_string(S) + " generator " +
                                                  I.generators[g].to_string() + " monomial " + monomial_to_string(e));
                        break;
                    }
            }
    return res;
}

}  // namespace hlmaj

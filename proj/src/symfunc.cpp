#include "hlmaj/symfunc.hpp"

#include <sstream>

#include "hlmaj/descent.hpp"
#include "hlmaj/ribbon.hpp"

namespace hlmaj {

TPoly TPoly::monomial(int degree, const mpz_class& coeff) {
    TPoly p;
    p.add(degree, coeff);
    return p;
}

void TPoly::add(int degree, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = coeffs_.emplace(degree, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

mpz_class TPoly::at(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

mpz_class TPoly::at_one() const {
    mpz_class s = 0;
    for (const auto& [d, c] : coeffs_) s += c;
    return s;
}

int TPoly::degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

bool TPoly::is_nonnegative() const {
    for (const auto& [d, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    for (const auto& [d, c] : o.coeffs_) add(d, c);
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly r;
    for (const auto& [da, ca] : a.coeffs_)
        for (const auto& [db, cb] : b.coeffs_) r.add(da + db, ca * cb);
    return r;
}

std::string TPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        if (d == 0) {
            s += mag.get_str();
            continue;
        }
        if (mag != 1) s += mag.get_str();
        s += "t";
        if (d > 1) s += "^" + std::to_string(d);
    }
    return s;
}

TPoly q_factorial(int n) {
    TPoly r = TPoly::monomial(0);
    for (int k = 1; k <= n; ++k) {
        TPoly qk;
        for (int j = 0; j < k; ++j) qk.add(j, 1);
        r = r * qk;
    }
    return r;
}

TPoly SymExpansion::coefficient(const Partition& mu) const {
    auto it = terms.find(mu);
    return it == terms.end() ? TPoly() : it->second;
}

void SymExpansion::add(const Partition& mu, const TPoly& c) {
    TPoly& slot = terms[mu];
    slot += c;
    if (slot.is_zero()) terms.erase(mu);
}

std::string term_to_string(const Partition& mu, const TPoly& c) {
    return "m[" + composition_to_string(mu.parts()) + "]: " + c.to_string();
}

std::string SymExpansion::to_string() const {
    std::ostringstream os;
    for (const auto& [mu, c] : terms) os << term_to_string(mu, c) << '\n';
    return os.str();
}

namespace {

SymExpansion descent_sum(const Partition& lambda, bool reverse) {
    SymExpansion out;
    out.n = lambda.size();
    const auto perms = enumerate_J_maj(conjugate(lambda));
    for (const auto& mu : partitions_of(lambda.size())) {
        TPoly c;
        for (const auto& s : perms)
            if (reverse ? is_reverse_shuffle(s, mu.parts()) : is_shuffle(s, mu.parts())) c.add(maj(s), 1);
        if (!c.is_zero()) out.terms.emplace(mu, std::move(c));
    }
    return out;
}

}  // namespace

SymExpansion hl_via_descents(const Partition& lambda) { return descent_sum(lambda, false); }

SymExpansion hl_omega_via_descents(const Partition& lambda) { return descent_sum(lambda, true); }

SymExpansion hl_via_ribbons(const Partition& lambda, bool twisted) {
    SymExpansion out;
    out.n = lambda.size();
    std::vector<std::pair<Permutation, int>> words;
    for (const auto& t : enumerate_R0(lambda)) words.emplace_back(reading_word(t), area_ribbon(t));
    for (const auto& mu : partitions_of(lambda.size())) {
        TPoly c;
        for (const auto& [w, a] : words)
            if (twisted ? is_reverse_shuffle(w, mu.parts()) : is_shuffle(w, mu.parts())) c.add(a, 1);
        if (!c.is_zero()) out.terms.emplace(mu, std::move(c));
    }
    return out;
}

bool leading_coefficient_check(const Partition& lambda) {
    const auto h = hl_omega_via_descents(lambda);
    return h.coefficient(conjugate(lambda)) == TPoly::monomial(static_cast<int>(n_stat(lambda)));
}

bool dominance_support_check(const Partition& lambda) {
    const auto h = hl_omega_via_descents(lambda);
    const Partition top = conjugate(lambda);
    for (const auto& [mu, c] : h.terms)
        if (!dominates(top, mu)) return false;
    return true;
}

std::map<Partition, TPoly, std::greater<Partition>> expansion_diff(const SymExpansion& lhs, const SymExpansion& rhs) {
    std::map<Partition, TPoly, std::greater<Partition>> out;
    for (const auto& [mu, c] : lhs.terms) out[mu] += c;
    for (const auto& [mu, c] : rhs.terms) out[mu] += c * TPoly::monomial(0, -1);
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

}  // namespace hlmaj

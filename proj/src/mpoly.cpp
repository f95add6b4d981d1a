#include "hlmaj/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hlmaj {

MPoly MPoly::constant(int nvars, const mpq_class& c) {
    MPoly p(nvars);
    p.add_term(Composition(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MPoly MPoly::monomial(const Composition& exponent, const mpq_class& c) {
    MPoly p(static_cast<int>(exponent.size()));
    p.add_term(exponent, c);
    return p;
}

MPoly MPoly::variable(int nvars, int i) {
    Composition e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(i - 1)) = 1;
    return monomial(e);
}

mpq_class MPoly::coefficient(const Composition& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void MPoly::add_term(const Composition& exponent, const mpq_class& c) {
    if (static_cast<int>(exponent.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(exponent, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int MPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, composition_size(e));
    return d;
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = composition_size(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& kv) { return composition_size(kv.first) == d; });
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
    MPoly r(a.nvars_);
    Composition e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::permute_variables(const std::vector<int>& w) const {
    if (static_cast<int>(w.size()) != nvars_) throw std::invalid_argument("permutation length mismatch");
    MPoly r(nvars_);
    Composition e(static_cast<std::size_t>(nvars_));
    for (const auto& [ex, c] : terms_) {
        for (std::size_t i = 0; i < ex.size(); ++i) e[static_cast<std::size_t>(w[i] - 1)] = ex[i];
        r.add_term(e, c);
    }
    return r;
}

std::string monomial_to_string(const Composition& exponent) {
    std::string s;
    for (std::size_t i = 0; i < exponent.size(); ++i) {
        if (exponent[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (exponent[i] > 1) s += "^" + std::to_string(exponent[i]);
    }
    return s.empty() ? "1" : s;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const mpq_class mag = abs(c);
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        const std::string mono = monomial_to_string(e);
        if (mono == "1")
            s += mag.get_str();
        else if (mag == 1)
            s += mono;
        else
            s += mag.get_str() + "*" + mono;
    }
    return s;
}

MPoly antisymmetrize(const Composition& mu, const MPoly& p) {
    const int n = p.nvars();
    if (composition_size(mu) != n) throw std::invalid_argument("mu must be a composition of the variable count");
    MPoly out(n);
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::size_t> starts;
    std::size_t pos = 0;
    for (int part : mu) {
        starts.push_back(pos);
        pos += static_cast<std::size_t>(part);
    }
    std::function<void(std::size_t, int)> rec = [&](std::size_t b, int sign) {
        if (b == mu.size()) {
            out += p.permute_variables(w) * mpq_class(sign);
            return;
        }
        auto first = w.begin() + static_cast<std::ptrdiff_t>(starts[b]);
        auto last = first + mu[b];
        std::vector<int> block(first, last);
        std::sort(block.begin(), block.end());
        do {
            std::copy(block.begin(), block.end(), first);
            int inversions = 0;
            for (std::size_t i = 0; i < block.size(); ++i)
                for (std::size_t j = i + 1; j < block.size(); ++j)
                    if (block[i] > block[j]) ++inversions;
            rec(b + 1, inversions % 2 ? -sign : sign);
        } while (std::next_permutation(block.begin(), block.end()));
        std::sort(first, last);
    };
    rec(0, 1);
    return out;
}

void TensorPoly::add_term(const Composition& first, const Composition& second, const mpq_class& c) {
    if (c == 0) return;
    auto key = std::make_pair(first, second);
    auto [it, fresh] = terms.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

std::map<Composition, MPoly> TensorPoly::by_first() const {
    std::map<Composition, MPoly> out;
    for (const auto& [key, c] : terms) {
        auto it = out.try_emplace(key.first, MPoly(second_vars)).first;
        it->second.add_term(key.second, c);
    }
    return out;
}

std::map<Composition, MPoly> TensorPoly::by_second() const {
    std::map<Composition, MPoly> out;
    for (const auto& [key, c] : terms) {
        auto it = out.try_emplace(key.second, MPoly(first_vars)).first;
        it->second.add_term(key.first, c);
    }
    return out;
}

std::string TensorPoly::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    const auto groups = by_second();
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        if (!s.empty()) s += " + ";
        const std::string left = it->second.to_string();
        s += it->second.term_count() > 1 ? "(" + left + ")" : left;
        s += " ⊗ " + monomial_to_string(it->first);
    }
    return s;
}

}  // namespace hlmaj

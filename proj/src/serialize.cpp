#include "hlmaj/serialize.hpp"

namespace hlmaj {

json mpz_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

mpz_class mpz_from_json(const json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(j.get<long>());
}

json tpoly_to_json(const TPoly& p) {
    json j = json::object();
    for (const auto& [d, c] : p.coeffs()) j[std::to_string(d)] = mpz_to_json(c);
    return j;
}

TPoly tpoly_from_json(const json& j) {
    TPoly p;
    for (const auto& [k, v] : j.items()) p.add(std::stoi(k), mpz_from_json(v));
    return p;
}

json term_to_json(const Partition& mu, const TPoly& c) { return {{"mu", mu.parts()}, {"coeffs", tpoly_to_json(c)}}; }

json expansion_to_json(const SymExpansion& e) {
    json arr = json::array();
    for (const auto& [mu, c] : e.terms) arr.push_back(term_to_json(mu, c));
    return arr;
}

SymExpansion expansion_from_json(const json& j) {
    SymExpansion e;
    for (const auto& term : j) {
        Partition mu(term.at("mu").get<std::vector<int>>());
        e.n = mu.size();
        e.add(mu, tpoly_from_json(term.at("coeffs")));
    }
    return e;
}

json parking_to_json(const ParkingFunction& p) { return {{"area_seq", p.area_seq}, {"labels", p.labels}}; }

ParkingFunction parking_from_json(const json& j) {
    return {j.at("area_seq").get<Composition>(), j.at("labels").get<std::vector<int>>()};
}

json ribbon_to_json(const RibbonTuple& t) {
    json comps = json::array();
    for (const auto& comp : t.components()) {
        json cells = json::array();
        std::vector<int> entries;
        for (const auto& c : comp) {
            cells.push_back({c.col, c.row});
            entries.push_back(c.entry);
        }
        comps.push_back({{"cells", cells}, {"entries", entries}});
    }
    return {{"components", comps}};
}

RibbonTuple ribbon_from_json(const json& j) {
    std::vector<std::vector<RibbonCell>> comps;
    for (const auto& comp : j.at("components")) {
        const auto& cells = comp.at("cells");
        const auto& entries = comp.at("entries");
        if (cells.size() != entries.size()) throw std::invalid_argument("cells and entries differ in length");
        std::vector<RibbonCell> out;
        for (std::size_t i = 0; i < cells.size(); ++i)
            out.push_back({cells[i].at(0).get<int>(), cells[i].at(1).get<int>(), entries[i].get<int>()});
        comps.push_back(std::move(out));
    }
    return RibbonTuple::from_cells(std::move(comps));
}

json basis_report_to_json(const GradedBasisReport& r) {
    return {{"lambda", r.lambda.parts()},
            {"hilbert", tpoly_to_json(r.hilbert)},
            {"basis_ok", r.ok()},
            {"leading_terms_ok", r.leading_terms},
            {"grading_convention", kGradingConvention},
            {"diagnostics", r.diagnostics}};
}

json parabolic_report_to_json(const ParabolicReport& r) {
    json elements = json::array();
    for (const auto& e : r.elements) elements.push_back(e.to_string());
    return {{"mu", r.mu},
            {"count_poly", tpoly_to_json(r.count_poly)},
            {"ok", r.ok()},
            {"elements", elements},
            {"diagnostics", r.diagnostics}};
}

}  // namespace hlmaj

#pragma once

#include <json.hpp>

#include "hlmaj/combinatorics.hpp"
#include "hlmaj/gp_module.hpp"
#include "hlmaj/parking.hpp"
#include "hlmaj/ribbon.hpp"
#include "hlmaj/symfunc.hpp"

namespace hlmaj {

using json = nlohmann::json;

/// Machine integers when they fit, decimal strings otherwise.
json mpz_to_json(const mpz_class& z);
mpz_class mpz_from_json(const json& j);

/// {"2": 1, "3": 2}
json tpoly_to_json(const TPoly& p);
TPoly tpoly_from_json(const json& j);

/// {"mu": [2,2,1], "coeffs": {...}}
json term_to_json(const Partition& mu, const TPoly& c);
/// One object per nonzero term, largest mu first.
json expansion_to_json(const SymExpansion& e);
SymExpansion expansion_from_json(const json& j);

/// {"area_seq": [...], "labels": [...]}
json parking_to_json(const ParkingFunction& p);
ParkingFunction parking_from_json(const json& j);

/// {"components": [{"cells": [[col,row],...], "entries": [...]}, ...]}
json ribbon_to_json(const RibbonTuple& t);
RibbonTuple ribbon_from_json(const json& j);

json basis_report_to_json(const GradedBasisReport& r);
json parabolic_report_to_json(const ParabolicReport& r);

}  // namespace hlmaj

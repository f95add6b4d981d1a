#include "hlmaj/cli.hpp"

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hlmaj/combinatorics.hpp"
#include "hlmaj/descent.hpp"
#include "hlmaj/gp_module.hpp"
#include "hlmaj/parking.hpp"
#include "hlmaj/ribbon.hpp"
#include "hlmaj/serialize.hpp"
#include "hlmaj/symfunc.hpp"

namespace hlmaj {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Partition parse_partition(const std::string& text) {
    try {
        return Partition(parse_int_list(text));
    } catch (const std::invalid_argument& e) {
        throw UsageError("bad partition '" + text + "': " + e.what());
    }
}

int resolve_bound(const std::optional<int>& flag, int fallback) {
    if (flag) return *flag;
    if (const char* env = std::getenv("HLMAJ_N_BOUND")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("HLMAJ_N_BOUND is not an integer: ") + env);
        }
    }
    return fallback;
}

void require_bound(int n, int bound) {
    if (n > bound) throw ResourceBoundExceeded(n, bound);
}

std::string pairs_to_string(const std::vector<std::pair<int, int>>& pairs) {
    std::string s = "{";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) s += ", ";
        s += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
    }
    return s + "}";
}

int cmd_stats(const std::string& text, bool as_json, std::ostream& out) {
    Permutation sigma;
    try {
        sigma = Permutation(parse_int_list(text));
    } catch (const std::invalid_argument& e) {
        throw UsageError("bad permutation '" + text + "': " + e.what());
    }
    if (as_json) {
        json j = {{"sigma", sigma.word()},      {"inv", inv(sigma)},     {"maj", maj(sigma)},
                  {"Des", descent_set(sigma)},  {"Inv", json::array()},  {"invt", invt(sigma)},
                  {"majt", majt(sigma)}};
        for (const auto& [a, b] : inversion_set(sigma)) j["Inv"].push_back({a, b});
        out << j.dump() << '\n';
    } else {
        out << "sigma: " << sigma << '\n'
            << "inv: " << inv(sigma) << '\n'
            << "maj: " << maj(sigma) << '\n'
            << "Des: {" << composition_to_string(descent_set(sigma)) << "}\n"
            << "Inv: " << pairs_to_string(inversion_set(sigma)) << '\n'
            << "invt: (" << composition_to_string(invt(sigma)) << ")\n"
            << "majt: (" << composition_to_string(majt(sigma)) << ")\n";
    }
    return kExitOk;
}

int cmd_enumerate(const std::string& kind, const Partition& lambda, int bound, bool as_json, std::ostream& out) {
    require_bound(lambda.size(), bound);
    long count = 0;
    if (kind == "D") {
        for (const auto& a : enumerate_D_lambda(lambda)) {
            ++count;
            if (as_json)
                out << json{{"a", a}, {"degree", composition_size(a)}}.dump() << '\n';
            else
                out << "(" << composition_to_string(a) << ")\n";
        }
    } else if (kind == "Jmaj") {
        for (const auto& s : enumerate_J_maj(lambda)) {
            ++count;
            if (as_json)
                out << json{{"sigma", s.word()}, {"maj", maj(s)}}.dump() << '\n';
            else
                out << s << "  maj " << maj(s) << '\n';
        }
    } else if (kind == "R0") {
        for (const auto& t : enumerate_R0(lambda)) {
            ++count;
            if (as_json) {
                json j = ribbon_to_json(t);
                j["psi"] = psi(t);
                j["area"] = area_ribbon(t);
                out << j.dump() << '\n';
            } else {
                out << to_string(t) << "  psi (" << composition_to_string(psi(t)) << ")\n" << render(t) << '\n';
            }
        }
    } else if (kind == "PF0") {
        for (const auto& p : enumerate_PF0_alpha(reversed(lambda.parts()))) {
            ++count;
            if (as_json)
                out << parking_to_json(p).dump() << '\n';
            else
                out << to_string(p) << '\n';
        }
    } else {
        throw UsageError("unknown enumeration kind '" + kind + "'");
    }
    const mpz_class target = multinomial(lambda);
    if (as_json)
        out << json{{"count", count}, {"target", mpz_to_json(target)}}.dump() << '\n';
    else
        out << "count: " << count << " (target " << target.get_str() << ")\n";
    return target == count ? kExitOk : kExitVerification;
}

void print_expansion(const SymExpansion& e, const std::string& route, bool tagged, bool as_json, std::ostream& out) {
    for (const auto& [mu, c] : e.terms) {
        if (as_json) {
            json j = term_to_json(mu, c);
            if (tagged) j["route"] = route;
            out << j.dump() << '\n';
        } else {
            out << (tagged ? route + " " : "") << term_to_string(mu, c) << '\n';
        }
    }
}

int cmd_hl(const Partition& lambda, const std::string& route, bool twisted, int bound, bool as_json,
           std::ostream& out) {
    require_bound(lambda.size(), bound);
    auto descents = [&] { return twisted ? hl_omega_via_descents(lambda) : hl_via_descents(lambda); };
    auto ribbons = [&] { return hl_via_ribbons(conjugate(lambda), twisted); };
    if (route == "descents") {
        print_expansion(descents(), route, false, as_json, out);
        return kExitOk;
    }
    if (route == "ribbons") {
        print_expansion(ribbons(), route, false, as_json, out);
        return kExitOk;
    }
    const auto a = descents();
    const auto b = ribbons();
    print_expansion(a, "descents", true, as_json, out);
    print_expansion(b, "ribbons", true, as_json, out);
    const auto diff = expansion_diff(a, b);
    if (as_json) {
        json d = json::array();
        for (const auto& [mu, c] : diff) d.push_back(term_to_json(mu, c));
        out << json{{"diff", d}}.dump() << '\n';
    } else {
        out << "diff: " << (diff.empty() ? "none" : "") << '\n';
        for (const auto& [mu, c] : diff) out << "  " << term_to_string(mu, c) << '\n';
    }
    return diff.empty() ? kExitOk : kExitDisagreement;
}

int cmd_verify(const Partition& lambda, const std::vector<std::string>& checks, const std::vector<std::string>& mus,
               int bound, bool as_json, std::ostream& out) {
    require_bound(lambda.size(), bound);
    auto wants = [&](const char* c) { return std::find(checks.begin(), checks.end(), c) != checks.end(); };
    json report = {{"lambda", lambda.parts()}, {"grading_convention", kGradingConvention}};
    bool all_ok = true;
    std::vector<std::string> lines;

    if (wants("basis") || wants("leading")) {
        const auto r = verify_descent_basis(lambda, bound);
        report["hilbert"] = tpoly_to_json(r.hilbert);
        lines.push_back("hilbert: " + r.hilbert.to_string());
        if (wants("basis")) {
            report["basis_ok"] = r.ok();
            all_ok = all_ok && r.ok();
            lines.push_back(std::string("basis: ") + (r.ok() ? "pass" : "FAIL"));
        }
        if (wants("leading")) {
            report["leading_terms_ok"] = r.leading_terms;
            all_ok = all_ok && r.leading_terms;
            lines.push_back(std::string("leading terms: ") + (r.leading_terms ? "pass" : "FAIL"));
        }
        for (const auto& d : r.diagnostics) lines.push_back("  " + d);
    }
    if (wants("parabolic")) {
        std::vector<Composition> targets;
        if (mus.empty())
            for (const auto& mu : partitions_of(lambda.size())) targets.push_back(mu.parts());
        for (const auto& m : mus) {
            try {
                targets.push_back(parse_int_list(m));
            } catch (const std::invalid_argument& e) {
                throw UsageError("bad composition '" + m + "': " + e.what());
            }
            if (composition_size(targets.back()) != lambda.size()) throw UsageError("mu must have the same size as lambda");
        }
        report["parabolic"] = json::array();
        for (const auto& mu : targets) {
            const auto r = verify_parabolic_basis(lambda, mu, bound);
            report["parabolic"].push_back(parabolic_report_to_json(r));
            all_ok = all_ok && r.ok();
            lines.push_back("parabolic mu=(" + composition_to_string(mu) + "): " + std::to_string(r.elements.size()) +
                            " elements, graded count " + r.count_poly.to_string() + ": " + (r.ok() ? "pass" : "FAIL"));
            for (const auto& d : r.diagnostics) lines.push_back("  " + d);
        }
    }
    if (wants("phi")) {
        const bool ok = verify_phi_injective(lambda, bound);
        report["phi_ok"] = ok;
        all_ok = all_ok && ok;
        lines.push_back(std::string("phi injective: ") + (ok ? "pass" : "FAIL"));
    }
    if (wants("minimal-ribbons")) {
        const auto r = verify_minimal_ribbons(lambda);
        report["minimal_ribbons_ok"] = r.ok();
        report["minimal_ribbons_count"] = r.minimal_count;
        all_ok = all_ok && r.ok();
        lines.push_back("minimal ribbons: " + std::to_string(r.minimal_count) + " tuples, min dinv+doff " +
                        std::to_string(r.min_statistic) + ": " + (r.ok() ? "pass" : "FAIL"));
    }
    report["ok"] = all_ok;
    if (as_json) {
        out << report.dump() << '\n';
    } else {
        out << "lambda: " << lambda << '\n';
        for (const auto& l : lines) out << l << '\n';
        out << (all_ok ? "all checks passed" : "verification failed") << '\n';
    }
    return all_ok ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Descent bases of Garsia-Procesi modules and Hall-Littlewood expansions", "hlmaj"};
    app.require_subcommand(1);

    std::string format = "json";
    std::optional<int> n_bound;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--n-bound", n_bound, "Largest n accepted");
    };

    std::string sigma_text;
    auto* stats = app.add_subcommand("stats", "Permutation statistics inv, maj, Des, Inv, invt, majt");
    stats->add_option("sigma", sigma_text, "One-line permutation, e.g. 3,5,1,2,4")->required();
    add_common(stats);

    std::string kind, lambda_text;
    auto* enumerate = app.add_subcommand("enumerate", "Stream D, Jmaj, R0 or PF0 for a partition");
    enumerate->add_option("kind", kind, "D | Jmaj | R0 | PF0")->required()->check(CLI::IsMember({"D", "Jmaj", "R0", "PF0"}));
    enumerate->add_option("lambda", lambda_text, "Partition, e.g. 3,1")->required();
    add_common(enumerate);

    std::string route = "descents";
    bool twisted = false;
    auto* hl = app.add_subcommand("hl", "Monomial expansion of the modified Hall-Littlewood polynomial");
    hl->add_option("lambda", lambda_text, "Partition")->required();
    hl->add_option("--route", route, "descents | ribbons | both")->check(CLI::IsMember({"descents", "ribbons", "both"}));
    hl->add_flag("--twisted", twisted, "Apply omega");
    add_common(hl);

    std::vector<std::string> checks{"basis", "leading", "parabolic", "phi", "minimal-ribbons"};
    std::vector<std::string> mus;
    auto* verify = app.add_subcommand("verify", "Check the descent basis of R_{lambda'} and related statements");
    verify->add_option("lambda", lambda_text, "Partition indexing the basis")->required();
    verify->add_option("--checks", checks, "Subset of basis,leading,parabolic,phi,minimal-ribbons")
        ->delimiter(',')
        ->check(CLI::IsMember({"basis", "leading", "parabolic", "phi", "minimal-ribbons"}));
    verify->add_option("--mu", mus, "Compositions for the parabolic check (default: all partitions)");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitParse;
    }

    const bool as_json = format == "json";
    try {
        if (*stats) return cmd_stats(sigma_text, as_json, out);
        const Partition lambda = parse_partition(lambda_text);
        if (*enumerate) return cmd_enumerate(kind, lambda, resolve_bound(n_bound, 7), as_json, out);
        if (*hl) return cmd_hl(lambda, route, twisted, resolve_bound(n_bound, 7), as_json, out);
        if (*verify) return cmd_verify(lambda, checks, mus, resolve_bound(n_bound, kDefaultAlgebraBound), as_json, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ResourceBoundExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitBound;
    }
    return kExitParse;
}

}  // namespace hlmaj

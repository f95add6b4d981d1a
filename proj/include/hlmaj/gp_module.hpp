#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hlmaj/combinatorics.hpp"
#include "hlmaj/mpoly.hpp"
#include "hlmaj/quotient.hpp"
#include "hlmaj/symfunc.hpp"

namespace hlmaj {

/// Raised when a computation is requested above the configured size bound.
class ResourceBoundExceeded : public std::runtime_error {
public:
    ResourceBoundExceeded(int n, int bound);
    int n() const { return n_; }
    int bound() const { return bound_; }

private:
    int n_;
    int bound_;
};

inline constexpr int kDefaultAlgebraBound = 6;

/// e_d of the variables indexed by S (1-based) in Q[x_1..x_n]; e_0 = 1.
MPoly elementary_symmetric(int d, const std::vector<int>& S, int n);

/// p^n_m(lambda): sum of the last m entries of lambda' padded to length n.
int p_stat(const Partition& lambda, int n, int m);

struct TanisakiIdeal {
    int n = 0;
    Partition lambda;
    std::vector<MPoly> generators;
    /// (S, d) for each generator, in the same order.
    std::vector<std::pair<std::vector<int>, int>> labels;
};

/// I_lambda = < e_d(S) : d > |S| - p^n_{|S|}(lambda) >, skipping d > |S|.
TanisakiIdeal tanisaki_generators(const Partition& lambda, int n);

/// Q[x]/I_lambda, built once per partition and shared.
std::shared_ptr<const GradedQuotient> gp_quotient(const Partition& lambda);

/// Hilbert series of R_lambda = Q[x]/I_lambda.
TPoly hilbert_series(const Partition& lambda, int bound = kDefaultAlgebraBound);

struct GradedBasisReport {
    Partition lambda;
    /// Per-degree dimensions of R_{lambda'}.
    std::vector<int> dimensions;
    TPoly hilbert;
    bool independent = false;
    bool spanning = false;
    bool leading_terms = false;
    std::vector<std::string> diagnostics;

    bool ok() const { return independent && spanning; }
};

/// Grading convention relating hilbert_series to the m_{1^n} coefficient
/// of H~: recorded in every report.
inline constexpr const char* kGradingConvention = "direct";

/// The monomials x^a, a in D_lambda, form a basis of R_{lambda'} degree by
/// degree. Also fills leading_terms.
GradedBasisReport verify_descent_basis(const Partition& lambda, int bound = kDefaultAlgebraBound);

/// In every degree the monomials that are not leading terms (descent order)
/// of I_{lambda'} are exactly those of D_lambda.
bool verify_leading_terms(const Partition& lambda, int bound = kDefaultAlgebraBound);

struct ParabolicReport {
    Partition lambda;
    Composition mu;
    std::vector<Permutation> indices;
    std::vector<MPoly> elements;
    TPoly count_poly;
    /// Graded dimension of N_mu R_{lambda'}.
    TPoly module_dims;
    /// m_mu coefficient of omega H~_{lambda'} from minimal ribbons.
    TPoly expected;
    bool independent = false;
    /// For every reverse shuffle tau, majt(tau) is the unique smallest term
    /// of N_mu g_tau in the descent order, with coefficient 1.
    bool leading_ok = false;
    std::vector<std::string> diagnostics;

    bool ok() const { return independent && leading_ok && count_poly == module_dims && count_poly == expected; }
};

/// {N_mu g_tau : tau in J^maj_lambda and shuff'(mu)} is a basis of
/// N_mu R_{lambda'}.
ParabolicReport verify_parabolic_basis(const Partition& lambda, const Composition& mu,
                                       int bound = kDefaultAlgebraBound);

/// x_{i_j} -> x_j on S = {i_1 < ... < i_k} and likewise on the complement,
/// then reduction of the first factor modulo the coinvariant ideal I_k.
TensorPoly phi_map(const std::vector<int>& S, const MPoly& p);

/// Images of the descent basis of R_{lambda'} under the sum over ordered
/// set partitions of type lambda of the factorwise maps are independent.
bool verify_phi_injective(const Partition& lambda, int bound = 4);

struct SpotCheckResult {
    long trials = 0;
    long failures = 0;
    std::vector<std::string> diagnostics;
};

/// For every |S| = lambda_1 and generator g of I_{lambda'}, multiplies g by
/// `samples` random monomials and checks that each first-factor coefficient
/// of phi_S lies in I_{mu'}, mu = lambda without its first row.
SpotCheckResult tanimap_spot_check(const Partition& lambda, int samples, std::uint64_t seed,
                                   int bound = kDefaultAlgebraBound);

}  // namespace hlmaj

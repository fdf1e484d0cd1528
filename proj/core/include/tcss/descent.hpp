#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcss/local_field.hpp"
#include "tcss/specseq.hpp"

namespace tcss {

/* Row -1 basis parameter: n = (pe(j-1) + b p^l)/(p-1), leading term
 * z0^{n-1} sigma^j dz. Invariants: p does not divide b, b == -e(j-1) mod p-1,
 * and l is recovered from n as v_p(n(p-1) - pe(j-1)). */
struct BLPair {
    int64_t b = 0;
    int64_t l = 0;
    int j = 0;
    int64_t n = 0;
};

struct RowBases {
    int j = 0;
    std::optional<int64_t> row0_n;   // z^{pej/(p-1)} when j >= 0 and (p-1) | ej
    std::vector<BLPair> row1;        // window classes
    std::optional<int64_t> extra_n;  // z0^{pe(j-1)/(p-1)-1} when j > 1 and (p-1) | e(j-1)
    std::vector<int64_t> row1_exponent_params() const;
};

RowBases e2_tp_bases(const LocalField& K, int j, int64_t n_cap);
RowBases e2_tcminus_bases(const LocalField& K, int j, int64_t n_cap);

// the stated enumeration for the kernel of the canonical map; cardinality e*j
std::vector<BLPair> ker_can_basis(const LocalField& K, int j);

// leading-term Frobenius on either row; row 0 requires n >= ej
SSClass frobenius_leading(const LocalField& K, const SSClass& cls);

/* Kernel and cokernel of can - phi on row -1 at one sigma-weight, computed by
 * the three-region analysis: zero for j <= 0, the b > 0 window classes above
 * the critical line (corrected by a series that preserves leading terms), and
 * the Hilbert-90 line at n = pe(j-1)/(p-1) exactly when d | j-1. */
struct CanPhiRow {
    int j = 0;
    std::vector<BLPair> kernel_alphas; // each carries f F_p-dimensions
    bool gamma_line = false;
    int64_t gamma_n = 0;
    FqElement gamma_coeff; // lambda with lambda^{p-1} = mu_bar^{p(j-1)}
    bool coker_line = false;
    int ker_dim_fp(int f) const { return int(kernel_alphas.size()) * f + (gamma_line ? 1 : 0); }
    int coker_dim_fp() const { return coker_line ? 1 : 0; }
};

CanPhiRow can_phi_analysis(const LocalField& K, int j, int64_t n_cap);

// row 0 at sigma-weight j: kernel/cokernel of lambda -> lambda - mu_bar^{-pj} lambda^p
struct CanPhiRow0 {
    int j = 0;
    bool class_exists = false; // (p-1) | ej and j >= 0
    bool ker_line = false;     // iff d | j; same for the cokernel
    FqElement ker_coeff;       // lambda with lambda^{p-1} = mu_bar^{pj}
};

CanPhiRow0 can_phi_row0(const LocalField& K, int j);

struct TCColumn {
    int index = 0; // 0, -1, -2
    int rank_over_beta = 0;
    std::vector<std::string> generators;
    std::vector<int> generator_degrees; // total degree of each generator
};

struct TCReport {
    int64_t p = 0;
    int e = 0, f = 0, d = 0;
    FqElement beta_coeff; // (p-1)-th root of mu_bar^{pd}
    std::vector<TCColumn> columns;
    bool columns_even_ok = true;   // columns 0 and -2 concentrated in even degrees
    bool strata_consistent = true; // per-weight dims match the beta-periodic module shape

    struct DegreeGroup {
        int degree = 0;
        std::vector<int64_t> orders;
        std::vector<std::string> generators;
    };
    std::vector<DegreeGroup> homotopy;

    std::string to_json() const;
    std::string to_table() const;
};

TCReport tc_e2_inventory(const LocalField& K, int degree_cap = 0);
TCReport tc_homotopy_groups(const LocalField& K, int deg_min, int deg_max);

struct CrosscheckResult {
    bool ok = true;
    std::vector<std::string> mismatches;
};

CrosscheckResult crosscheck_with_specseq(const LocalField& K, int j_min, int j_max, int64_t n_cap);

} // namespace tcss

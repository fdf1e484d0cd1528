#pragma once

#include <array>
#include <string>
#include <vector>

#include "tcss/local_field.hpp"

namespace tcss {

/* Cotensor monomial z^zc * u0^m * t_1^{[j_1]} ... t_n^{[j_n]} with coefficient
 * in k; the cosimplicial degree n is js.size(). For the mod-p THH flavor the
 * z-exponent is truncated by z^e = 0 and the internal half-degree is
 * m + sum j; for the graded flavors u is absent and the grade is zc + e*sum j. */
struct CbMono {
    int zc = 0;
    int m = 0;
    std::vector<int> js;
    friend bool operator<(const CbMono& a, const CbMono& b) {
        if (a.zc != b.zc) return a.zc < b.zc;
        if (a.m != b.m) return a.m < b.m;
        return a.js < b.js;
    }
    friend bool operator==(const CbMono& a, const CbMono& b) {
        return a.zc == b.zc && a.m == b.m && a.js == b.js;
    }
};

enum class CobarFlavor {
    thh_mod_p,  // (k[z]/(z^e)[u],  k[z]/(z^e)[u0]<t>),  u1 = u0 - e*mu*z^{e-1} t
    gr_refined, // (k[z], k[z0] <t>), z1 = z0 - t for e = 1 and z1 = z0 for e > 1
};

using CbVector = std::vector<std::pair<CbMono, FqElement>>;

/**
 * Cobar complex of the Hopf algebroid in low cosimplicial degrees, assembled
 * as matrices over k one internal degree at a time. Cohomology by dense row
 * reduction; sizes stay small at desk scale.
 */
class CobarComplex {
public:
    CobarComplex(const FieldCtx& k, CobarFlavor flavor, int e, const FqElement& mu_bar);
    static CobarComplex for_field(const LocalField& K, CobarFlavor flavor);

    const FieldCtx& k() const { return k_; }
    int e() const { return e_; }
    CobarFlavor flavor() const { return flavor_; }

    // grading value of a monomial: internal half-degree (thh) or grade (gr)
    int grade(const CbMono& mono) const;
    std::vector<CbMono> basis(int cobar_deg, int grade_value) const;
    CbVector face(const CbMono& mono, int i) const;          // coface i
    CbVector differential(const CbMono& mono) const;          // alternating sum of cofaces
    // dim H^0..H^2 at one grading value
    std::array<int, 3> cohomology_dims(int grade_value) const;
    bool is_cocycle(int cobar_deg, const CbVector& v) const;

    // Hopf structure maps on the degree-1 algebra, for the axiom checks
    CbVector coproduct(const CbMono& mono) const;   // Gamma -> Gamma (x) Gamma as C^2-monomials
    FqElement counit_coeff(const CbMono& mono) const; // epsilon, coefficient on the C^0 image
    CbMono counit_image(const CbMono& mono) const;

private:
    FieldCtx k_;
    CobarFlavor flavor_;
    int e_;
    FqElement mu_bar_;
    FqElement minus_q() const; // -e*mu_bar (leading coefficient of -E' mod p), scalar part

    int rank_of_differential(int cobar_deg, int grade_value) const;
};

struct HopfAxiomReport {
    bool counit_left = true;
    bool counit_right = true;
    bool coassoc = true;
    bool unit_counit = true;
    bool ok() const { return counit_left && counit_right && coassoc && unit_counit; }
};

HopfAxiomReport hopf_axioms_check(const CobarComplex& cx, int degree_cap);

/* Mod-p THH page: linear-algebra dims vs closed-form counts per internal
 * degree, plus cocycle membership of the closed-form representatives. */
struct ThhE2Row {
    int n = 0; // internal degree 2n
    std::array<int, 3> dims{};     // H^0, H^1, H^2 over k
    int closed_row0 = 0;
    int closed_row1 = 0;
    bool reps_are_cocycles = true;
    std::vector<std::string> witnesses0; // generator monomials, column 0
    std::vector<std::string> witnesses1; // leading monomials, column -1
};

struct ThhE2Result {
    std::vector<ThhE2Row> rows;
    bool match() const;
    std::string to_json() const;
};

ThhE2Result thh_cobar_e2(const LocalField& K, int degree_cap);
std::string mono_str(const CbMono& m);

// closed-form generators (row 0 monomials and row 1 cocycles) at internal degree 2n
std::vector<CbMono> closed_form_row0(const LocalField& K, int n);
std::vector<CbVector> closed_form_row1(const LocalField& K, int n);

/* Integral Ext over W(k)[z]/(E): H^1 at internal degree 2n is the cyclic
 * module O_K/(n E'(pi)); reported as the p-power orders of its invariant
 * factors. */
struct IntegralExtRow {
    int n = 0;
    std::vector<int> factor_exponents; // orders p^{v}, v >= 1 only
    bool mod_p_consistent = true;      // matrix mod p equals the mod-p differential
};

std::vector<IntegralExtRow> integral_ext(const LocalField& K, int n_min, int n_max);

/* Associated-graded page: cohomology of the graded Hopf algebroid per grade,
 * cross-checked against the closed form. */
struct GrE2Result {
    std::vector<std::array<int, 3>> dims; // per grade 0..cap
    std::vector<std::array<int, 2>> closed;
    bool match() const;
};

GrE2Result gr_cobar_e2(int64_t p, int e, int f, int grade_cap);

/* Hochschild homology of k[z]/(z^e) over k[z] via the normalized complex of
 * the Koszul resolution; per-degree k-dimensions and A-ranks. */
struct HHBarResult {
    std::vector<int> k_dims;  // degrees 0..2*cap
    std::vector<int> a_ranks; // k_dim / e when exact, -1 otherwise
};

HHBarResult hh_bar_appendix(int64_t p, int f, int e, int degree_cap);

} // namespace tcss

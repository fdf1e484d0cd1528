#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tcss/witt.hpp"

namespace tcss {

/* Raw input data for a local field: everything needed to rebuild the Witt
 * context at any precision. Coefficients are integer polynomials in the Witt
 * generator; c_0 is implicitly p and c_e is `mu`. */
struct FieldSpec {
    int64_t p = 0;
    int f = 1;
    int e = 1;
    int precision = 4;
    std::vector<int64_t> modulus;                    // optional; empty = canonical choice
    std::vector<std::vector<int64_t>> eisenstein_mid; // c_1..c_{e-1}
    std::vector<int64_t> mu;                          // c_e
};

/**
 * A p-adic local field K described by an Eisenstein polynomial
 * E(z) = sum c_i z^i over W(k), normalized with c_0 = p. Derived invariants:
 *   mu_bar       leading coefficient mod p
 *   d            least d >= 1 with (p-1) | e*d and norm(mu_bar)^d = 1
 *   deltaE_modp  (E^phi(z^p) - E(z)^p)/p reduced mod p, as a polynomial over k
 *   mutilde_bar  -mu_bar^p * deltaE_modp(0)^{-1}
 *   eprime_bar   E'(z) mod p = e*mu_bar*z^{e-1} in k[z]/(z^e)
 */
class LocalField {
public:
    explicit LocalField(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    const WittCtx& witt() const { return *witt_; }
    const FieldCtx& k() const { return witt_->field(); }
    int64_t p() const { return spec_.p; }
    int e() const { return spec_.e; }
    int f() const { return spec_.f; }
    int precision() const { return spec_.precision; }

    // c_0..c_e at the parse precision
    const std::vector<WittElement>& coeffs() const { return coeffs_; }
    // same coefficients lifted into a caller-supplied context (higher precision)
    std::vector<WittElement> coeffs_in(const WittCtx& w) const;

    const WittElement& mu() const { return coeffs_.back(); }
    const FqElement& mu_bar() const { return mu_bar_; }
    int d() const { return d_; }
    const std::vector<FqElement>& deltaE_modp() const { return deltaE_modp_; } // degree <= pe
    const FqElement& mutilde_bar() const { return mutilde_bar_; }
    const std::vector<FqElement>& eprime_bar() const { return eprime_bar_; } // in k[z]/(z^e)

    std::string describe() const;

    static LocalField parse_json(const std::string& text);
    // convenience: E(z) = mu*z^e + p with canonical residue field
    static LocalField make_simple(int64_t p, int e, int f, int64_t mu = 1, int precision = 4);
    // E(z) = ((1+z)^p - 1)/z, the cyclotomic Eisenstein polynomial
    static LocalField make_cyclotomic(int64_t p, int precision = 4);

private:
    FieldSpec spec_;
    std::shared_ptr<WittCtx> witt_;
    std::vector<WittElement> coeffs_;
    FqElement mu_bar_;
    int d_ = 1;
    std::vector<FqElement> deltaE_modp_;
    FqElement mutilde_bar_;
    std::vector<FqElement> eprime_bar_;
};

int compute_d(const LocalField& K);

// deltaE as a polynomial over W(k) in a given context (exact division by p)
std::vector<WittElement> delta_E_poly(const LocalField& K, const WittCtx& w);

} // namespace tcss

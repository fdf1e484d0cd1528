#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcss/local_field.hpp"
#include "tcss/rational.hpp"

namespace tcss {

/* Basis monomial z0^a * gamma_i(E) * gamma_j(s) of the divided power envelope
 * of (E(z0), z0 - z1) in W(k)[z0, z1], where s = z0 - z1. Exponents of z0 are
 * kept below e via mu*z0^e = gamma_1(E) - sum_{m<e} c_m z0^m. The refined
 * weight of a monomial is a/e + i + j. */
struct PDKey {
    int a = 0;
    int i = 0;
    int j = 0;
    friend bool operator<(const PDKey& x, const PDKey& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.i != y.i) return x.i < y.i;
        return x.j < y.j;
    }
    friend bool operator==(const PDKey& x, const PDKey& y) {
        return x.a == y.a && x.i == y.i && x.j == y.j;
    }
};

class PDContext;

struct PDElement {
    const PDContext* ctx = nullptr;
    std::map<PDKey, std::vector<int64_t>> terms; // coefficient vectors over W(k)/p^prec
    int prec = 0;
};

/**
 * Truncated model of the divided power envelope with its delta-ring structure.
 * Monomials with gamma-degree i + j > wcap are discarded; this span is an
 * ideal, so all ring operations are computed in the quotient. Coefficients
 * live in W(k)/p^N with per-element precision tracking: division by p of an
 * element that is 0 mod p costs one digit.
 */
class PDContext {
public:
    PDContext(const LocalField& K, int wcap, int precision);

    const LocalField& field() const { return K_; }
    const WittCtx& witt() const { return *witt_; }
    int64_t p() const { return K_.p(); }
    int e() const { return K_.e(); }
    int wcap() const { return wcap_; }
    int precision() const { return N_; }

    PDElement zero(int prec = -1) const;
    PDElement one(int prec = -1) const;
    PDElement monomial(int a, int i, int j, int prec = -1) const; // coefficient 1, z0-reduced
    PDElement from_scalar(const WittElement& c) const;
    PDElement z0(int prec = -1) const { return monomial(1, 0, 0, prec); }
    PDElement z0_pow(int n, int prec = -1) const;
    PDElement s(int prec = -1) const { return monomial(0, 0, 1, prec); }
    PDElement E(int prec = -1) const { return monomial(0, 1, 0, prec); } // E(z0) = gamma_1(E)

    bool is_zero(const PDElement& x) const;
    bool equal(const PDElement& x, const PDElement& y) const;
    PDElement add(const PDElement& x, const PDElement& y) const;
    PDElement sub(const PDElement& x, const PDElement& y) const;
    PDElement neg(const PDElement& x) const;
    PDElement mul(const PDElement& x, const PDElement& y) const;
    PDElement pow(const PDElement& x, int64_t n) const;
    PDElement scalar_mul(const WittElement& c, const PDElement& x) const;
    PDElement int_mul(int64_t c, const PDElement& x) const;

    bool divisible_by_p(const PDElement& x) const;
    PDElement div_exact_p(const PDElement& x) const;
    PDElement invert_unit(const PDElement& x) const; // constant term a unit, rest topologically nilpotent

    // ring Frobenius: z0 -> z0^p, gamma_j(s) -> W^j gamma_j(s),
    // gamma_i(E) -> (p^i/i!) uE^i, Witt coefficients through the Witt Frobenius
    PDElement frobenius(const PDElement& x) const;
    PDElement delta(const PDElement& x) const; // (frobenius(x) - x^p)/p

    // min over monomials of a/e + i + j; with mod_p only coefficients != 0 mod p count
    Rational refined_val(const PDElement& x, bool mod_p) const;
    std::optional<WittElement> coeff_of(const PDElement& x, const PDKey& k) const;

    // distinguished elements
    const PDElement& uE() const { return uE_; }          // deltaE(z0) + (p-1)! gamma_p(E)
    const PDElement& uE_inv() const { return uE_inv_; }
    const PDElement& xi0() const { return xi0_; }        // -delta(s)/s, exact integer construction
    const PDElement& phi_E() const { return phiE_; }     // p * uE
    PDElement h() const;                                  // phi(s)/p * uE^{-1}
    PDElement mutilde() const;                            // -mu^p * deltaE(z0)^{-1}
    PDElement deltaE_elt() const;                         // deltaE(z0)

    std::string str(const PDElement& x) const;

private:
    const LocalField& K_;
    std::shared_ptr<WittCtx> witt_;
    int wcap_;
    int N_;
    std::vector<WittElement> coeffs_;  // c_0..c_e at precision N
    WittElement mu_inv_;
    std::vector<int64_t> pascal_;      // binomials mod p^N, row-major (n <= 2*wcap+2)
    int64_t binom_modN(int n, int k) const;
    int64_t p_pow_over_factorial(int i) const; // p^i / i! mod p^N (exact p-adic integer)

    PDElement uE_, uE_inv_, phiE_, xi0_, phi_s_over_p_, W_;
    mutable std::vector<PDElement> uE_raw_pows_;
    mutable std::vector<PDElement> uE_scaled_pows_; // (p^i/i!) uE^i
    mutable std::vector<PDElement> W_pows_;
    mutable std::vector<PDElement> phi_z0_pows_;
    mutable std::map<PDKey, PDElement> phi_cache_;  // frobenius image of each basis monomial
    const PDElement& uE_scaled(int i) const;
    const PDElement& W_pow(int j) const;
    const PDElement& phi_z0_pow(int a) const;
    const PDElement& phi_monomial(const PDKey& k) const;

    void add_term(PDElement& acc, int a, int i, int j, const WittElement& c) const;
    void build_distinguished();
};

struct CongruenceCheck {
    std::string name;
    bool applicable = true;
    bool pass = false;
    Rational required;        // meaningful for valuation checks
    Rational measured;
    bool is_valuation = true; // false: exact identity / boolean check
    std::string note;
};

struct CongruenceReport {
    std::vector<CongruenceCheck> checks;
    bool all_pass() const;
    std::string to_json() const;
};

// f^(0) = s, f^(k+1) = (-(f^(k))^p + delta^k(h) E(z0)^{p^{k+1}})/p,
// together with the iterated deltas of h
struct FSequence {
    std::vector<PDElement> f;
    std::vector<PDElement> delta_h;
};

FSequence pd_f_seq(const PDContext& ctx, int kmax);

// run every structural congruence and identity up to kmax; wcap/precision
// of -1 pick the defaults p^{kmax+1} and kmax+3
CongruenceReport verify_section3(const LocalField& K, int kmax, int wcap = -1, int precision = -1);

} // namespace tcss

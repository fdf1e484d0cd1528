#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tcss/fq.hpp"

namespace tcss {

/* Element of W(k)/p^N: coefficient vector of length f over Z/p^prec in the
 * generator x of (Z/p^N)[x]/(m), together with its tracked p-adic precision.
 * Dividing an element == 0 mod p by p loses one digit of precision; all
 * binary operations propagate the minimum of the inputs' precisions. */
struct WittElement {
    std::vector<int64_t> coeffs;
    int prec = 0;
};

/**
 * W(k)/p^N modeled as (Z/p^N)[x]/(m) for m the canonical integer lift of the
 * residue field's modulus. The ring Frobenius is evaluation at the unique root
 * r of m with r == x^p mod p, obtained by Newton iteration from x^p.
 */
class WittCtx {
public:
    WittCtx(FieldCtx field, int N);

    const FieldCtx& field() const { return field_; }
    int64_t p() const { return field_.p(); }
    int f() const { return field_.f(); }
    int N() const { return N_; }
    int64_t pN() const { return pN_; }
    int64_t p_pow(int k) const; // p^k clamped to [0, N]

    WittElement zero(int prec = -1) const;
    WittElement one(int prec = -1) const;
    WittElement from_int(int64_t v, int prec = -1) const;
    WittElement from_ints(const std::vector<int64_t>& coeffs, int prec = -1) const;
    WittElement lift(const FqElement& a) const; // coordinatewise lift to full precision

    bool is_zero(const WittElement& a) const;
    bool equal(const WittElement& a, const WittElement& b) const; // at min precision
    WittElement add(const WittElement& a, const WittElement& b) const;
    WittElement sub(const WittElement& a, const WittElement& b) const;
    WittElement neg(const WittElement& a) const;
    WittElement mul(const WittElement& a, const WittElement& b) const;
    WittElement scalar_mul(int64_t c, const WittElement& a) const;
    WittElement pow(const WittElement& a, int64_t n) const;
    WittElement inv(const WittElement& a) const; // requires unit (nonzero mod p)

    bool divisible_by_p(const WittElement& a) const;
    WittElement div_exact_p(const WittElement& a) const; // drops precision by 1

    FqElement reduce_mod_p(const WittElement& a) const;
    WittElement frobenius(const WittElement& a) const;
    const WittElement& frobenius_root() const { return frob_root_; }

    // p-adic valuation of a (minimum over coordinates), up to prec; prec if 0
    int valuation(const WittElement& a) const;

    std::string str(const WittElement& a) const;

private:
    FieldCtx field_;
    int N_;
    int64_t pN_;
    std::vector<int64_t> lifted_modulus_; // length f+1, integer coefficients of m
    std::vector<std::vector<int64_t>> xpow_; // x^f..x^{2f-2} reduced mod (m, p^N)
    WittElement frob_root_;

    WittElement reduce_prec(WittElement a, int prec) const;
    WittElement eval_poly(const WittElement& arg, const std::vector<int64_t>& poly, int prec) const;
};

} // namespace tcss

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tcss/error.hpp"

namespace tcss {

using FqElement = std::vector<int64_t>; // length f, entries in [0, p)

/**
 * The finite field F_{p^f} presented as F_p[x]/(modulus).
 *
 * Elements are coefficient vectors of length f (index i = coefficient of x^i).
 * If no modulus is supplied the canonical one is used: enumerate coefficient
 * tuples (c_0,...,c_{f-1}) as base-p digits of v = 0,1,2,... and take the first
 * v for which x^f + c_{f-1}x^{f-1} + ... + c_0 is irreducible.
 */
class FieldCtx {
public:
    FieldCtx(int64_t p, int f, std::optional<std::vector<int64_t>> modulus = std::nullopt);

    int64_t p() const { return p_; }
    int f() const { return f_; }
    int64_t order() const { return q_; } // p^f
    const std::vector<int64_t>& modulus() const { return modulus_; } // length f+1, monic

    FqElement zero() const { return FqElement(f_, 0); }
    FqElement one() const;
    FqElement from_int(int64_t v) const;          // image of an integer (prime subfield)
    FqElement gen() const;                        // class of x
    FqElement from_index(int64_t idx) const;      // idx in [0, p^f), base-p digits
    int64_t to_index(const FqElement& a) const;

    bool is_zero(const FqElement& a) const;
    FqElement add(const FqElement& a, const FqElement& b) const;
    FqElement sub(const FqElement& a, const FqElement& b) const;
    FqElement neg(const FqElement& a) const;
    FqElement mul(const FqElement& a, const FqElement& b) const;
    FqElement scalar_mul(int64_t c, const FqElement& a) const;
    FqElement pow(const FqElement& a, int64_t n) const; // n may be negative for units
    FqElement inv(const FqElement& a) const;
    FqElement frobenius(const FqElement& a) const;      // a^p
    FqElement frobenius_iter(const FqElement& a, int k) const;
    FqElement norm(const FqElement& a) const;           // product of Galois conjugates

    std::string str(const FqElement& a) const;

    static bool is_prime(int64_t p);
    // Irreducibility over F_p by trial division against all monic polynomials
    // of degree <= deg/2. poly is a full coefficient vector, leading term last.
    static bool poly_irreducible(int64_t p, const std::vector<int64_t>& poly);

private:
    int64_t p_;
    int f_;
    int64_t q_;
    std::vector<int64_t> modulus_;            // c_0..c_f with c_f = 1
    std::vector<std::vector<int64_t>> xpow_;  // x^f .. x^{2f-2} reduced mod modulus
};

// b*frobenius(x) - x = c solved as an F_p-linear system on F_{p^f}.
// When norm(b) != 1 the map is bijective and `solution` is the unique solution.
// Otherwise kernel and cokernel are one-dimensional over F_p: `kernel` holds a
// generator and `solution` is present only when the system is solvable.
struct SolveResult {
    bool unique = false;
    bool solvable = false;
    std::optional<FqElement> solution;
    std::vector<FqElement> kernel;
};

SolveResult h90_solve(const FieldCtx& k, const FqElement& b, const FqElement& c);

} // namespace tcss

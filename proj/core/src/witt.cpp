#include "tcss/witt.hpp"

#include <algorithm>

namespace tcss {

namespace {

int64_t mod_pos(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int64_t pow_ll(int64_t b, int e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

WittCtx::WittCtx(FieldCtx field, int N) : field_(std::move(field)), N_(N) {
    if (N < 1) fail(errc::precision_too_low, "Witt precision must be >= 1");
    pN_ = 1;
    for (int i = 0; i < N; ++i) {
        pN_ *= field_.p();
        if (pN_ > (int64_t(1) << 31)) fail(errc::precision_too_low, "p^N too large for exact arithmetic");
    }
    const int f = field_.f();
    lifted_modulus_.assign(field_.modulus().begin(), field_.modulus().end());

    // reduction table for x^f..x^{2f-2} mod (m, p^N)
    xpow_.resize(std::max(0, f - 1));
    std::vector<int64_t> cur(f, 0);
    for (int i = 0; i < f; ++i) cur[i] = mod_pos(-lifted_modulus_[i], pN_);
    for (int k = 0; k < f - 1; ++k) {
        xpow_[k] = cur;
        std::vector<int64_t> next(f, 0);
        int64_t top = cur[f - 1];
        for (int i = f - 1; i > 0; --i) next[i] = cur[i - 1];
        for (int i = 0; i < f; ++i)
            next[i] = mod_pos(next[i] + top * mod_pos(-lifted_modulus_[i], pN_), pN_);
        cur = next;
    }

    // Newton-lift the root r == x^p of m, doubling precision each step
    WittElement r = zero(N_);
    {
        // x^p reduced mod (m, p): lift of frobenius(x)
        FqElement xbar = field_.gen();
        r = lift(field_.frobenius(xbar));
    }
    // m'(r) is a unit; iterate r <- r - m(r)/m'(r)
    std::vector<int64_t> deriv(f, 0);
    for (int i = 1; i <= f; ++i) deriv[i - 1] = mod_pos(int64_t(i) * lifted_modulus_[i], pN_);
    for (int it = 0; it < N_ + 2; ++it) {
        WittElement val = eval_poly(r, lifted_modulus_, N_);
        if (is_zero(val)) break;
        WittElement dval = eval_poly(r, deriv, N_);
        r = sub(r, mul(val, inv(dval)));
    }
    if (!is_zero(eval_poly(r, lifted_modulus_, N_)))
        fail(errc::consistency_violation, "Frobenius root lift did not converge");
    frob_root_ = r;
}

int64_t WittCtx::p_pow(int k) const {
    if (k >= N_) return pN_;
    return pow_ll(field_.p(), k);
}

WittElement WittCtx::reduce_prec(WittElement a, int prec) const {
    if (prec < 0 || prec > N_) prec = N_;
    int64_t m = pow_ll(field_.p(), prec);
    for (auto& c : a.coeffs) c = prec == 0 ? 0 : mod_pos(c, m);
    a.prec = prec;
    return a;
}

WittElement WittCtx::zero(int prec) const {
    WittElement a;
    a.coeffs.assign(field_.f(), 0);
    a.prec = prec < 0 ? N_ : prec;
    return a;
}

WittElement WittCtx::one(int prec) const {
    WittElement a = zero(prec);
    a.coeffs[0] = 1;
    return reduce_prec(a, a.prec);
}

WittElement WittCtx::from_int(int64_t v, int prec) const {
    WittElement a = zero(prec);
    a.coeffs[0] = v;
    return reduce_prec(a, a.prec);
}

WittElement WittCtx::from_ints(const std::vector<int64_t>& coeffs, int prec) const {
    if (int(coeffs.size()) > field_.f())
        fail(errc::parse_error, "Witt coefficient vector longer than f");
    WittElement a = zero(prec);
    for (size_t i = 0; i < coeffs.size(); ++i) a.coeffs[i] = coeffs[i];
    return reduce_prec(a, a.prec);
}

WittElement WittCtx::lift(const FqElement& a) const {
    WittElement w = zero(N_);
    for (int i = 0; i < field_.f(); ++i) w.coeffs[i] = a[i];
    return w;
}

bool WittCtx::is_zero(const WittElement& a) const {
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](int64_t c) { return c == 0; });
}

bool WittCtx::equal(const WittElement& a, const WittElement& b) const {
    int prec = std::min(a.prec, b.prec);
    int64_t m = pow_ll(field_.p(), prec);
    if (prec == 0) return true;
    for (int i = 0; i < field_.f(); ++i)
        if (mod_pos(a.coeffs[i], m) != mod_pos(b.coeffs[i], m)) return false;
    return true;
}

WittElement WittCtx::add(const WittElement& a, const WittElement& b) const {
    WittElement c = zero(std::min(a.prec, b.prec));
    for (int i = 0; i < field_.f(); ++i) c.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return reduce_prec(c, c.prec);
}

WittElement WittCtx::sub(const WittElement& a, const WittElement& b) const {
    WittElement c = zero(std::min(a.prec, b.prec));
    for (int i = 0; i < field_.f(); ++i) c.coeffs[i] = a.coeffs[i] - b.coeffs[i];
    return reduce_prec(c, c.prec);
}

WittElement WittCtx::neg(const WittElement& a) const {
    WittElement c = zero(a.prec);
    for (int i = 0; i < field_.f(); ++i) c.coeffs[i] = -a.coeffs[i];
    return reduce_prec(c, c.prec);
}

WittElement WittCtx::scalar_mul(int64_t s, const WittElement& a) const {
    WittElement c = zero(a.prec);
    s = mod_pos(s, pN_);
    for (int i = 0; i < field_.f(); ++i) c.coeffs[i] = mod_pos(a.coeffs[i] * s, pN_);
    return reduce_prec(c, c.prec);
}

WittElement WittCtx::mul(const WittElement& a, const WittElement& b) const {
    const int f = field_.f();
    std::vector<int64_t> prod(2 * f - 1, 0);
    for (int i = 0; i < f; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j < f; ++j) prod[i + j] = mod_pos(prod[i + j] + a.coeffs[i] * b.coeffs[j], pN_);
    }
    WittElement c = zero(std::min(a.prec, b.prec));
    for (int i = 0; i < f; ++i) c.coeffs[i] = prod[i];
    for (int k = f; k < 2 * f - 1; ++k) {
        int64_t co = prod[k];
        if (co == 0) continue;
        const auto& red = xpow_[k - f];
        for (int i = 0; i < f; ++i) c.coeffs[i] = mod_pos(c.coeffs[i] + co * red[i], pN_);
    }
    return reduce_prec(c, c.prec);
}

WittElement WittCtx::pow(const WittElement& a, int64_t n) const {
    WittElement r = one(a.prec), base = a;
    while (n > 0) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

WittElement WittCtx::inv(const WittElement& a) const {
    FqElement abar = reduce_mod_p(a);
    if (field_.is_zero(abar)) fail(errc::zero_coefficient, "inverse of a non-unit in W(k)/p^N");
    // Newton: x <- x(2 - a x), doubling correct digits
    WittElement x = lift(field_.inv(abar));
    x.prec = a.prec;
    x = reduce_prec(x, a.prec);
    WittElement two = from_int(2, a.prec);
    for (int it = 0; it < N_ + 2; ++it) {
        WittElement e = sub(two, mul(a, x));
        x = mul(x, e);
        if (equal(mul(a, x), one(a.prec))) break;
    }
    if (!equal(mul(a, x), one(a.prec))) fail(errc::consistency_violation, "Witt inverse failed");
    return x;
}

bool WittCtx::divisible_by_p(const WittElement& a) const {
    const int64_t p = field_.p();
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [&](int64_t c) { return c % p == 0; });
}

WittElement WittCtx::div_exact_p(const WittElement& a) const {
    if (a.prec < 1) fail(errc::precision_too_low, "no precision left for division by p");
    if (!divisible_by_p(a)) fail(errc::not_divisible, "element not divisible by p");
    WittElement c = zero(a.prec - 1);
    for (int i = 0; i < field_.f(); ++i) c.coeffs[i] = a.coeffs[i] / field_.p();
    return reduce_prec(c, c.prec);
}

FqElement WittCtx::reduce_mod_p(const WittElement& a) const {
    FqElement r(field_.f());
    for (int i = 0; i < field_.f(); ++i) r[i] = mod_pos(a.coeffs[i], field_.p());
    return r;
}

WittElement WittCtx::eval_poly(const WittElement& arg, const std::vector<int64_t>& poly, int prec) const {
    WittElement acc = zero(prec);
    for (int i = int(poly.size()) - 1; i >= 0; --i) {
        acc = mul(acc, arg);
        acc = add(acc, from_int(poly[i], prec));
    }
    return acc;
}

WittElement WittCtx::frobenius(const WittElement& a) const {
    // evaluate the defining polynomial of a at the Frobenius root
    WittElement acc = zero(a.prec);
    for (int i = field_.f() - 1; i >= 0; --i) {
        acc = mul(acc, frob_root_);
        acc = add(acc, from_int(a.coeffs[i], a.prec));
    }
    return acc;
}

int WittCtx::valuation(const WittElement& a) const {
    int v = a.prec;
    for (int i = 0; i < field_.f(); ++i) {
        if (a.coeffs[i] == 0) continue;
        int w = 0;
        int64_t c = a.coeffs[i];
        while (c % field_.p() == 0) {
            c /= field_.p();
            ++w;
        }
        v = std::min(v, w);
    }
    return v;
}

std::string WittCtx::str(const WittElement& a) const {
    std::string s = "[";
    for (int i = 0; i < field_.f(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.coeffs[i]);
    }
    s += "]@" + std::to_string(a.prec);
    return s;
}

} // namespace tcss

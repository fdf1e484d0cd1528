#include "tcss/pd.hpp"

#include <sstream>

namespace tcss {

namespace {

int64_t pow_ll(int64_t b, int e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

PDContext::PDContext(const LocalField& K, int wcap, int precision) : K_(K), wcap_(wcap), N_(precision) {
    if (wcap_ < int(K.p())) fail(errc::wcap_too_small, "weight cap below p");
    if (N_ < 2) fail(errc::precision_too_low, "divided power model needs precision >= 2");
    witt_ = std::make_shared<WittCtx>(K.k(), N_);
    coeffs_ = K.coeffs_in(*witt_);
    mu_inv_ = witt_->inv(coeffs_.back());

    // Pascal triangle mod p^N
    int rows = 2 * wcap_ + 3;
    pascal_.assign(size_t(rows) * rows, 0);
    for (int n = 0; n < rows; ++n) {
        pascal_[size_t(n) * rows] = 1;
        for (int k = 1; k <= n; ++k) {
            int64_t up_left = pascal_[size_t(n - 1) * rows + k - 1];
            int64_t up = k <= n - 1 ? pascal_[size_t(n - 1) * rows + k] : 0;
            pascal_[size_t(n) * rows + k] = (up_left + up) % witt_->pN();
        }
    }
    build_distinguished();
}

int64_t PDContext::binom_modN(int n, int k) const {
    int rows = 2 * wcap_ + 3;
    if (k < 0 || k > n || n >= rows) fail(errc::domain_violation, "binomial out of table range");
    return pascal_[size_t(n) * rows + k];
}

int64_t PDContext::p_pow_over_factorial(int i) const {
    // p^i / i! is a p-adic integer: valuation i - v_p(i!), unit part inverted mod p^N
    const int64_t p = K_.p();
    int v_fact = 0;
    int64_t unit = 1;
    for (int m = 1; m <= i; ++m) {
        int64_t t = m;
        while (t % p == 0) {
            t /= p;
            ++v_fact;
        }
        unit = (unit * (t % witt_->pN())) % witt_->pN();
    }
    int v = i - v_fact;
    if (v >= N_) return 0;
    // invert unit mod p^N via Newton on integers
    int64_t inv = 1;
    {
        int64_t x = unit % p, y = 1;
        // inverse mod p by Fermat
        for (int64_t ee = p - 2; ee > 0; ee >>= 1) {
            if (ee & 1) y = (y * x) % p;
            x = (x * x) % p;
        }
        inv = y;
        for (int it = 0; it < N_; ++it) inv = (inv * (2 - unit * inv % witt_->pN() + witt_->pN())) % witt_->pN();
        inv = ((inv % witt_->pN()) + witt_->pN()) % witt_->pN();
    }
    return (pow_ll(p, v) % witt_->pN()) * inv % witt_->pN();
}

PDElement PDContext::zero(int prec) const {
    PDElement x;
    x.ctx = this;
    x.prec = prec < 0 ? N_ : prec;
    return x;
}

void PDContext::add_term(PDElement& acc, int a, int i, int j, const WittElement& c) const {
    if (i + j > wcap_) return;
    if (witt_->is_zero(c)) return;
    if (a < e()) {
        PDKey key{a, i, j};
        auto it = acc.terms.find(key);
        WittElement cur = it == acc.terms.end() ? witt_->zero(acc.prec) : WittElement{it->second, acc.prec};
        WittElement c2 = c;
        c2.prec = acc.prec;
        WittElement sum = witt_->add(cur, c2);
        if (witt_->is_zero(sum))
            acc.terms.erase(key);
        else
            acc.terms[key] = sum.coeffs;
        return;
    }
    // mu z0^e = gamma_1(E) - sum_{m<e} c_m z0^m, and gamma_1 gamma_i = (i+1) gamma_{i+1}
    WittElement base = witt_->mul(c, mu_inv_);
    add_term(acc, a - e(), i + 1, j, witt_->scalar_mul(i + 1, base));
    for (int m = 0; m < e(); ++m)
        add_term(acc, a - e() + m, i, j, witt_->neg(witt_->mul(base, coeffs_[m])));
}

PDElement PDContext::monomial(int a, int i, int j, int prec) const {
    PDElement x = zero(prec);
    add_term(x, a, i, j, witt_->one(x.prec));
    return x;
}

PDElement PDContext::one(int prec) const { return monomial(0, 0, 0, prec); }

PDElement PDContext::from_scalar(const WittElement& c) const {
    PDElement x = zero(c.prec);
    add_term(x, 0, 0, 0, c);
    return x;
}

PDElement PDContext::z0_pow(int n, int prec) const {
    PDElement x = zero(prec);
    add_term(x, n, 0, 0, witt_->one(x.prec));
    return x;
}

bool PDContext::is_zero(const PDElement& x) const { return x.terms.empty(); }

bool PDContext::equal(const PDElement& x, const PDElement& y) const { return is_zero(sub(x, y)); }

PDElement PDContext::add(const PDElement& x, const PDElement& y) const {
    if (x.ctx != y.ctx) fail(errc::context_mismatch, "mixing divided power contexts");
    PDElement r = zero(std::min(x.prec, y.prec));
    for (const auto& [k, c] : x.terms) add_term(r, k.a, k.i, k.j, WittElement{c, x.prec});
    for (const auto& [k, c] : y.terms) add_term(r, k.a, k.i, k.j, WittElement{c, y.prec});
    return r;
}

PDElement PDContext::neg(const PDElement& x) const {
    PDElement r = zero(x.prec);
    for (const auto& [k, c] : x.terms) add_term(r, k.a, k.i, k.j, witt_->neg(WittElement{c, x.prec}));
    return r;
}

PDElement PDContext::sub(const PDElement& x, const PDElement& y) const { return add(x, neg(y)); }

PDElement PDContext::mul(const PDElement& x, const PDElement& y) const {
    if (x.ctx != y.ctx) fail(errc::context_mismatch, "mixing divided power contexts");
    PDElement r = zero(std::min(x.prec, y.prec));
    for (const auto& [kx, cx] : x.terms) {
        WittElement wx{cx, r.prec};
        for (const auto& [ky, cy] : y.terms) {
            int i = kx.i + ky.i, j = kx.j + ky.j;
            if (i + j > wcap_) continue;
            int64_t bi = binom_modN(i, kx.i);
            int64_t bj = binom_modN(j, kx.j);
            WittElement c = witt_->mul(wx, WittElement{cy, r.prec});
            c = witt_->scalar_mul(bi, c);
            c = witt_->scalar_mul(bj, c);
            add_term(r, kx.a + ky.a, i, j, c);
        }
    }
    return r;
}

PDElement PDContext::pow(const PDElement& x, int64_t n) const {
    PDElement r = one(x.prec);
    PDElement base = x;
    while (n > 0) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

PDElement PDContext::scalar_mul(const WittElement& c, const PDElement& x) const {
    PDElement r = zero(std::min(c.prec, x.prec));
    for (const auto& [k, cx] : x.terms) add_term(r, k.a, k.i, k.j, witt_->mul(c, WittElement{cx, x.prec}));
    return r;
}

PDElement PDContext::int_mul(int64_t c, const PDElement& x) const {
    return scalar_mul(witt_->from_int(c, x.prec), x);
}

bool PDContext::divisible_by_p(const PDElement& x) const {
    for (const auto& [k, c] : x.terms)
        if (!witt_->divisible_by_p(WittElement{c, x.prec})) return false;
    return true;
}

PDElement PDContext::div_exact_p(const PDElement& x) const {
    if (x.prec < 1) fail(errc::precision_too_low, "no precision left for division by p");
    if (!divisible_by_p(x)) fail(errc::not_divisible, "divided power element not divisible by p");
    PDElement r = zero(x.prec - 1);
    for (const auto& [k, c] : x.terms)
        add_term(r, k.a, k.i, k.j, witt_->div_exact_p(WittElement{c, x.prec}));
    return r;
}

PDElement PDContext::invert_unit(const PDElement& x) const {
    auto c0 = coeff_of(x, PDKey{0, 0, 0});
    if (!c0 || witt_->valuation(*c0) > 0)
        fail(errc::zero_coefficient, "constant term is not a unit");
    WittElement c0inv = witt_->inv(*c0);
    // x = c0 (1 - n) with n topologically nilpotent in the truncation
    PDElement n = sub(one(x.prec), scalar_mul(c0inv, x));
    PDElement sum = one(x.prec);
    PDElement term = n;
    int limit = e() * (wcap_ + N_ + 2) + 4;
    int it = 0;
    while (!is_zero(term)) {
        sum = add(sum, term);
        term = mul(term, n);
        if (++it > limit) fail(errc::consistency_violation, "unit inversion did not terminate");
    }
    return scalar_mul(c0inv, sum);
}

const PDElement& PDContext::uE_scaled(int i) const {
    if (uE_raw_pows_.empty()) {
        uE_raw_pows_.push_back(one());
        uE_scaled_pows_.push_back(one());
    }
    while (int(uE_raw_pows_.size()) <= i) {
        uE_raw_pows_.push_back(mul(uE_raw_pows_.back(), uE_));
        int k = int(uE_raw_pows_.size()) - 1;
        uE_scaled_pows_.push_back(int_mul(p_pow_over_factorial(k), uE_raw_pows_.back()));
    }
    return uE_scaled_pows_[i];
}

const PDElement& PDContext::W_pow(int j) const {
    if (W_pows_.empty()) W_pows_.push_back(one());
    while (int(W_pows_.size()) <= j) W_pows_.push_back(mul(W_pows_.back(), W_));
    return W_pows_[j];
}

const PDElement& PDContext::phi_z0_pow(int a) const {
    if (phi_z0_pows_.empty()) phi_z0_pows_.push_back(one());
    while (int(phi_z0_pows_.size()) <= a)
        phi_z0_pows_.push_back(z0_pow(int(K_.p()) * int(phi_z0_pows_.size())));
    return phi_z0_pows_[a];
}

const PDElement& PDContext::phi_monomial(const PDKey& k) const {
    auto it = phi_cache_.find(k);
    if (it != phi_cache_.end()) return it->second;
    PDElement img = mul(phi_z0_pow(k.a), uE_scaled(k.i));
    if (k.j > 0) img = mul(img, mul(W_pow(k.j), monomial(0, 0, k.j)));
    return phi_cache_.emplace(k, std::move(img)).first->second;
}

PDElement PDContext::frobenius(const PDElement& x) const {
    PDElement r = zero(x.prec);
    for (const auto& [k, c] : x.terms) {
        WittElement fc = witt_->frobenius(WittElement{c, x.prec});
        const PDElement& img = phi_monomial(k);
        for (const auto& [ki, ci] : img.terms)
            add_term(r, ki.a, ki.i, ki.j, witt_->mul(fc, WittElement{ci, r.prec}));
    }
    return r;
}

PDElement PDContext::delta(const PDElement& x) const {
    if (x.prec < 2) fail(errc::precision_too_low, "delta needs precision >= 2");
    return div_exact_p(sub(frobenius(x), pow(x, K_.p())));
}

Rational PDContext::refined_val(const PDElement& x, bool mod_p) const {
    Rational best = Rational::infinity();
    for (const auto& [k, c] : x.terms) {
        bool counts = false;
        for (int64_t co : c) {
            if (mod_p ? (co % K_.p() != 0) : (co != 0)) {
                counts = true;
                break;
            }
        }
        if (!counts) continue;
        Rational w(k.a + int64_t(e()) * (k.i + k.j), e());
        if (w < best) best = w;
    }
    return best;
}

std::optional<WittElement> PDContext::coeff_of(const PDElement& x, const PDKey& k) const {
    auto it = x.terms.find(k);
    if (it == x.terms.end()) return std::nullopt;
    return WittElement{it->second, x.prec};
}

void PDContext::build_distinguished() {
    const int64_t p = K_.p();

    // deltaE(z0) as an element, from the exact polynomial over W(k)
    auto dE = delta_E_poly(K_, *witt_);
    PDElement dE_elt = zero();
    for (size_t m = 0; m < dE.size(); ++m) add_term(dE_elt, int(m), 0, 0, dE[m]);

    // uE = deltaE(z0) + (p-1)! gamma_p(E): phi(E(z0)) = p * uE
    int64_t fact = 1;
    for (int t = 2; t < p; ++t) fact *= t;
    uE_ = dE_elt;
    add_term(uE_, 0, int(p), 0, witt_->from_int(fact));

    phiE_ = int_mul(p, uE_);

    // W with s*W = z0^p - z1^p: sum_{b=1}^{p} binom(p,b)(-1)^{b+1} z0^{p-b} s^{b-1}
    W_ = zero();
    for (int b = 1; b <= int(p); ++b) {
        int64_t c = 1; // binom(p,b) * (b-1)!
        for (int t = 0; t < b; ++t) c = c * (p - t) / (t + 1);
        for (int t = 2; t < b; ++t) c *= t;
        if (b % 2 == 0) c = -c;
        add_term(W_, int(p) - b, 0, b - 1, witt_->from_int(c));
    }

    // phi(s)/p: binomials divided by p are exact integers for b < p,
    // the b = p term contributes (p-1)! gamma_p(s)
    phi_s_over_p_ = zero();
    for (int b = 1; b < int(p); ++b) {
        int64_t c = 1; // (binom(p,b)/p) * b!
        for (int t = 1; t < b; ++t) c = c * (p - t) / (t + 1);
        for (int t = 2; t <= b; ++t) c *= t;
        if (b % 2 == 0) c = -c;
        add_term(phi_s_over_p_, int(p) - b, 0, b, witt_->from_int(c));
    }
    add_term(phi_s_over_p_, 0, 0, int(p), witt_->from_int(p % 2 == 0 ? -fact : fact));

    // xi0 = -delta(s)/s with exact integer coefficients:
    // sum_{b=1}^{p-1} (binom(p,b)/p)(-1)^b (b-1)! z0^{p-b} gamma_{b-1}(s), plus gamma_1(s) at p = 2
    xi0_ = zero();
    for (int b = 1; b < int(p); ++b) {
        int64_t c = 1;
        for (int t = 1; t < b; ++t) c = c * (p - t) / (t + 1);
        for (int t = 2; t < b; ++t) c *= t;
        if (b % 2 == 1) c = -c;
        add_term(xi0_, int(p) - b, 0, b - 1, witt_->from_int(c));
    }
    if (p == 2) add_term(xi0_, 0, 0, 1, witt_->one());

    uE_inv_ = invert_unit(uE_);
}

PDElement PDContext::h() const {
    PDElement out = mul(phi_s_over_p_, uE_inv_);
    // defining identity h * phi(E(z0)) = phi(z0 - z1), exact at the truncation
    if (!equal(mul(out, phiE_), frobenius(s())))
        fail(errc::consistency_violation, "h does not satisfy its defining identity");
    return out;
}

PDElement PDContext::deltaE_elt() const {
    auto dE = delta_E_poly(K_, *witt_);
    PDElement out = zero();
    for (size_t m = 0; m < dE.size(); ++m) add_term(out, int(m), 0, 0, dE[m]);
    return out;
}

PDElement PDContext::mutilde() const {
    PDElement inv = invert_unit(deltaE_elt());
    return neg(scalar_mul(witt_->pow(coeffs_.back(), K_.p()), inv));
}

std::string PDContext::str(const PDElement& x) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x.terms) {
        if (!first) os << " + ";
        first = false;
        os << witt_->str(WittElement{c, x.prec});
        if (k.a) os << "*z0^" << k.a;
        if (k.i) os << "*gE[" << k.i << "]";
        if (k.j) os << "*gs[" << k.j << "]";
    }
    if (first) os << "0";
    os << " (prec " << x.prec << ")";
    return os.str();
}

FSequence pd_f_seq(const PDContext& ctx, int kmax) {
    const int64_t p = ctx.p();
    if (ctx.precision() < kmax + 2) fail(errc::precision_too_low, "f-sequence needs precision >= kmax+2");
    if (ctx.wcap() < pow_ll(p, kmax)) fail(errc::wcap_too_small, "weight cap below p^kmax");

    FSequence seq;
    seq.f.push_back(ctx.s());
    seq.delta_h.push_back(ctx.h());
    for (int k = 0; k < kmax; ++k) {
        PDElement Epow = ctx.pow(ctx.E(), pow_ll(p, k + 1));
        PDElement num = ctx.add(ctx.neg(ctx.pow(seq.f[k], p)), ctx.mul(seq.delta_h[k], Epow));
        seq.f.push_back(ctx.div_exact_p(num));
        seq.delta_h.push_back(ctx.delta(seq.delta_h[k]));
    }
    return seq;
}

bool CongruenceReport::all_pass() const {
    for (const auto& c : checks)
        if (c.applicable && !c.pass) return false;
    return true;
}

std::string CongruenceReport::to_json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& c : checks) {
        if (!first) os << ",";
        first = false;
        os << "{\"lemma\":\"" << c.name << "\",\"applicable\":" << (c.applicable ? "true" : "false")
           << ",\"required_valuation\":\"" << c.required.str() << "\",\"measured_valuation\":\""
           << c.measured.str() << "\",\"pass\":" << (c.pass ? "true" : "false");
        if (!c.note.empty()) os << ",\"note\":\"" << c.note << "\"";
        os << "}";
    }
    os << "]";
    return os.str();
}

CongruenceReport verify_section3(const LocalField& K, int kmax, int wcap, int precision) {
    const int64_t p = K.p();
    const int e = K.e();
    if (wcap < 0) wcap = int(pow_ll(p, kmax + 1));
    if (precision < 0) precision = kmax + 3;

    PDContext ctx(K, wcap, precision);
    CongruenceReport rep;

    auto val_check = [&](std::string name, const PDElement& x, Rational required, bool mod_p,
                         std::string note = "") {
        CongruenceCheck c;
        c.name = std::move(name);
        c.required = required;
        c.measured = ctx.refined_val(x, mod_p);
        c.pass = c.measured >= required;
        c.note = std::move(note);
        rep.checks.push_back(std::move(c));
    };
    auto bool_check = [&](std::string name, bool ok, std::string note = "") {
        CongruenceCheck c;
        c.name = std::move(name);
        c.is_valuation = false;
        c.pass = ok;
        c.note = std::move(note);
        rep.checks.push_back(std::move(c));
    };
    auto skip = [&](std::string name, std::string note) {
        CongruenceCheck c;
        c.name = std::move(name);
        c.applicable = false;
        c.pass = true;
        c.note = std::move(note);
        rep.checks.push_back(std::move(c));
    };

    PDElement s = ctx.s();
    PDElement h = ctx.h();
    bool_check("h_defining_identity", ctx.equal(ctx.mul(h, ctx.phi_E()), ctx.frobenius(s)));

    FSequence seq;
    bool seq_ok = true;
    try {
        seq = pd_f_seq(ctx, kmax);
    } catch (const error& ex) {
        seq_ok = false;
        bool_check("f_sequence_integral", false, ex.what());
    }
    if (seq_ok) {
        bool_check("f_sequence_integral", true);
        for (int k = 0; k <= kmax; ++k) {
            int64_t pk = pow_ll(p, k);
            CongruenceCheck c;
            c.name = "f_valuation_" + std::to_string(k);
            c.required = Rational(pk);
            c.measured = ctx.refined_val(seq.f[k], false);
            c.pass = c.measured == c.required;
            rep.checks.push_back(c);

            auto co = ctx.coeff_of(seq.f[k], PDKey{0, 0, int(pk)});
            bool unit = co && ctx.witt().valuation(*co) == 0;
            bool_check("f_unit_coeff_" + std::to_string(k), unit);

            PDElement lhs = ctx.mul(seq.delta_h[k], ctx.pow(ctx.phi_E(), pk));
            PDElement rhs = ctx.frobenius(seq.f[k]);
            bool_check("frobenius_transfer_" + std::to_string(k), ctx.equal(lhs, rhs));
        }
    }

    // xi0 == -z0^{p-1} mod (p, N^{(p-2)/e + 1})
    val_check("xi0_leading", ctx.add(ctx.xi0(), ctx.z0_pow(int(p) - 1)), Rational(p - 2 + e, e), true);

    // h == z0^{p-1} s mod (p, N^{r0}) for e > 1
    if (e > 1) {
        Rational r0 = Rational(p);
        Rational alt1(2 * p - 1 + e, e);
        Rational alt2(p - 2 + 2 * e, e);
        if (alt1 < r0) r0 = alt1;
        if (alt2 < r0) r0 = alt2;
        val_check("h_leading", ctx.sub(h, ctx.mul(ctx.z0_pow(int(p) - 1), s)), r0, true);
    } else {
        skip("h_leading", "needs e > 1");
    }

    // phi(s) == -mutilde z0^{pe+p-1} s mod (p, N^{2p})
    PDElement mt = ctx.mutilde();
    {
        PDElement ref = ctx.mul(ctx.mul(mt, ctx.z0_pow(int(p) * e + int(p) - 1)), s);
        val_check("frob_f0_leading", ctx.add(ctx.frobenius(s), ref), Rational(2 * p), true);
    }

    // iterated versions
    if (p > 2 && e > 1) {
        PDElement phis = s;
        PDElement coeff = ctx.one();
        PDElement neg_mt = ctx.neg(mt);
        PDElement twist = neg_mt;
        for (int l = 1; l <= kmax; ++l) {
            phis = ctx.frobenius(phis);
            coeff = ctx.mul(coeff, twist);
            twist = ctx.frobenius(twist);
            int64_t geo = (pow_ll(p, l) - 1) / (p - 1);
            int expo = int((int64_t(p) * e + p - 1) * geo);
            PDElement ref = ctx.mul(ctx.mul(coeff, ctx.z0_pow(expo)), s);
            Rational required(pow_ll(p, l) * (int64_t(e) * (p - 1) + e + (p - 1)), int64_t(e) * (p - 1));
            val_check("frob_iterate_leading_" + std::to_string(l), ctx.sub(phis, ref), required, true);
        }
    } else {
        skip("frob_iterate_leading", "needs p odd and e > 1");
    }

    if (p == 2 && e > 3) {
        PDElement phis = s;
        for (int l = 1; l <= kmax; ++l) {
            phis = ctx.frobenius(phis);
            int64_t c = pow_ll(2, l) - 1;
            PDElement coeff = ctx.pow(mt, c);
            int expo = int(c * (2 * e + 1));
            PDElement ref = ctx.mul(ctx.mul(coeff, ctx.z0_pow(expo)), s);
            Rational required(pow_ll(2, l) * (2 * int64_t(e) + 1) - 2, e);
            val_check("frob_iterate_leading2_" + std::to_string(l), ctx.sub(phis, ref), required, true);
        }
    } else {
        skip("frob_iterate_leading2", "needs p = 2 and e > 3");
    }

    return rep;
}

} // namespace tcss

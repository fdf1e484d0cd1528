#include "tcss/fq.hpp"

#include <algorithm>

namespace tcss {

namespace {

int64_t mod_pos(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// polynomial arithmetic over F_p, coefficient vectors with leading term last
std::vector<int64_t> poly_trim(std::vector<int64_t> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int64_t> poly_rem(int64_t p, std::vector<int64_t> a, const std::vector<int64_t>& m) {
    a = poly_trim(std::move(a));
    auto mm = poly_trim(m);
    if (mm.empty()) fail(errc::domain_violation, "division by zero polynomial");
    int64_t lead_inv = 1;
    // make divisor monic
    {
        int64_t lead = mm.back();
        int64_t t = 1, base = mod_pos(lead, p);
        for (int64_t e = p - 2; e > 0; e >>= 1) { // Fermat inverse
            if (e & 1) t = mod_pos(t * base, p);
            base = mod_pos(base * base, p);
        }
        lead_inv = t;
    }
    while (a.size() >= mm.size()) {
        int64_t c = mod_pos(a.back() * lead_inv, p);
        size_t shift = a.size() - mm.size();
        for (size_t i = 0; i < mm.size(); ++i)
            a[shift + i] = mod_pos(a[shift + i] - c * mm[i], p);
        a = poly_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

} // namespace

bool FieldCtx::is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool FieldCtx::poly_irreducible(int64_t p, const std::vector<int64_t>& poly) {
    auto f = poly_trim(poly);
    int deg = int(f.size()) - 1;
    if (deg <= 0) return false;
    if (deg == 1) return true;
    // trial division by every monic polynomial of degree 1..deg/2
    for (int d = 1; 2 * d <= deg; ++d) {
        int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int64_t v = 0; v < count; ++v) {
            std::vector<int64_t> g(d + 1, 0);
            int64_t t = v;
            for (int i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[d] = 1;
            if (poly_rem(p, f, g).empty()) return false;
        }
    }
    return true;
}

FieldCtx::FieldCtx(int64_t p, int f, std::optional<std::vector<int64_t>> modulus) : p_(p), f_(f) {
    if (!is_prime(p)) fail(errc::non_prime, "p = " + std::to_string(p) + " is not prime");
    if (f < 1) fail(errc::domain_violation, "extension degree must be >= 1");
    q_ = 1;
    for (int i = 0; i < f; ++i) q_ *= p;

    if (modulus) {
        auto m = *modulus;
        for (auto& c : m) c = mod_pos(c, p);
        if (int(m.size()) != f + 1 || m[f] != 1)
            fail(errc::reducible_modulus, "modulus must be monic of degree f");
        if (!poly_irreducible(p, m)) fail(errc::reducible_modulus, "modulus is reducible over F_p");
        modulus_ = m;
    } else {
        for (int64_t v = 0;; ++v) {
            std::vector<int64_t> m(f + 1, 0);
            int64_t t = v;
            for (int i = 0; i < f; ++i) {
                m[i] = t % p;
                t /= p;
            }
            m[f] = 1;
            if (poly_irreducible(p, m)) {
                modulus_ = m;
                break;
            }
            if (v >= q_) fail(errc::reducible_modulus, "no irreducible modulus found");
        }
    }

    // reduction table for x^f .. x^{2f-2}
    xpow_.resize(std::max(0, f_ - 1));
    std::vector<int64_t> cur(f_, 0); // x^f reduced = -c_0 - c_1 x - ...
    for (int i = 0; i < f_; ++i) cur[i] = mod_pos(-modulus_[i], p_);
    for (int k = 0; k < f_ - 1; ++k) {
        xpow_[k] = cur;
        // multiply by x
        std::vector<int64_t> next(f_, 0);
        int64_t top = cur[f_ - 1];
        for (int i = f_ - 1; i > 0; --i) next[i] = cur[i - 1];
        next[0] = 0;
        for (int i = 0; i < f_; ++i) next[i] = mod_pos(next[i] + top * mod_pos(-modulus_[i], p_), p_);
        cur = next;
    }
}

FqElement FieldCtx::one() const {
    FqElement a(f_, 0);
    a[0] = 1;
    return a;
}

FqElement FieldCtx::from_int(int64_t v) const {
    FqElement a(f_, 0);
    a[0] = mod_pos(v, p_);
    return a;
}

FqElement FieldCtx::gen() const {
    FqElement a(f_, 0);
    if (f_ == 1)
        a[0] = mod_pos(-modulus_[0], p_); // x = root of the degree-1 modulus
    else
        a[1] = 1;
    return a;
}

FqElement FieldCtx::from_index(int64_t idx) const {
    FqElement a(f_, 0);
    for (int i = 0; i < f_; ++i) {
        a[i] = idx % p_;
        idx /= p_;
    }
    return a;
}

int64_t FieldCtx::to_index(const FqElement& a) const {
    int64_t idx = 0;
    for (int i = f_ - 1; i >= 0; --i) idx = idx * p_ + a[i];
    return idx;
}

bool FieldCtx::is_zero(const FqElement& a) const {
    return std::all_of(a.begin(), a.end(), [](int64_t c) { return c == 0; });
}

FqElement FieldCtx::add(const FqElement& a, const FqElement& b) const {
    FqElement c(f_);
    for (int i = 0; i < f_; ++i) c[i] = mod_pos(a[i] + b[i], p_);
    return c;
}

FqElement FieldCtx::sub(const FqElement& a, const FqElement& b) const {
    FqElement c(f_);
    for (int i = 0; i < f_; ++i) c[i] = mod_pos(a[i] - b[i], p_);
    return c;
}

FqElement FieldCtx::neg(const FqElement& a) const {
    FqElement c(f_);
    for (int i = 0; i < f_; ++i) c[i] = mod_pos(-a[i], p_);
    return c;
}

FqElement FieldCtx::scalar_mul(int64_t s, const FqElement& a) const {
    FqElement c(f_);
    s = mod_pos(s, p_);
    for (int i = 0; i < f_; ++i) c[i] = mod_pos(a[i] * s, p_);
    return c;
}

FqElement FieldCtx::mul(const FqElement& a, const FqElement& b) const {
    std::vector<int64_t> prod(2 * f_ - 1, 0);
    for (int i = 0; i < f_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < f_; ++j) prod[i + j] = mod_pos(prod[i + j] + a[i] * b[j], p_);
    }
    FqElement c(f_, 0);
    for (int i = 0; i < f_; ++i) c[i] = prod[i];
    for (int k = f_; k < 2 * f_ - 1; ++k) {
        int64_t co = prod[k];
        if (co == 0) continue;
        const auto& red = xpow_[k - f_];
        for (int i = 0; i < f_; ++i) c[i] = mod_pos(c[i] + co * red[i], p_);
    }
    return c;
}

FqElement FieldCtx::pow(const FqElement& a, int64_t n) const {
    if (n < 0) return pow(inv(a), -n);
    FqElement r = one(), base = a;
    while (n > 0) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

FqElement FieldCtx::inv(const FqElement& a) const {
    if (is_zero(a)) fail(errc::zero_coefficient, "inverse of zero in F_q");
    return pow(a, q_ - 2);
}

FqElement FieldCtx::frobenius(const FqElement& a) const { return pow(a, p_); }

FqElement FieldCtx::frobenius_iter(const FqElement& a, int k) const {
    FqElement r = a;
    for (int i = 0; i < k; ++i) r = frobenius(r);
    return r;
}

FqElement FieldCtx::norm(const FqElement& a) const {
    FqElement r = one(), c = a;
    for (int i = 0; i < f_; ++i) {
        r = mul(r, c);
        c = frobenius(c);
    }
    return r;
}

std::string FieldCtx::str(const FqElement& a) const {
    std::string s;
    bool first = true;
    for (int i = f_ - 1; i >= 0; --i) {
        if (a[i] == 0) continue;
        if (!first) s += "+";
        first = false;
        if (i == 0 || a[i] != 1) s += std::to_string(a[i]);
        if (i >= 1) {
            if (a[i] != 1) s += "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return first ? "0" : s;
}

SolveResult h90_solve(const FieldCtx& k, const FqElement& b, const FqElement& c) {
    if (k.is_zero(b)) fail(errc::zero_coefficient, "h90_solve requires b != 0");
    const int f = k.f();
    const int64_t p = k.p();

    // matrix of x -> b*frobenius(x) - x on the basis 1, x, ..., x^{f-1}
    std::vector<std::vector<int64_t>> M(f, std::vector<int64_t>(f + 1, 0));
    for (int j = 0; j < f; ++j) {
        FqElement basis = k.zero();
        basis[j] = 1;
        FqElement img = k.sub(k.mul(b, k.frobenius(basis)), basis);
        for (int i = 0; i < f; ++i) M[i][j] = img[i];
    }
    for (int i = 0; i < f; ++i) M[i][f] = c[i];

    // Gaussian elimination over F_p on the augmented matrix
    std::vector<int> pivot_col(f, -1);
    int rank = 0;
    for (int col = 0; col < f && rank < f; ++col) {
        int sel = -1;
        for (int r = rank; r < f; ++r)
            if (M[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(M[sel], M[rank]);
        int64_t inv = 1, base = M[rank][col];
        for (int64_t e = p - 2; e > 0; e >>= 1) {
            if (e & 1) inv = mod_pos(inv * base, p);
            base = mod_pos(base * base, p);
        }
        for (int j = col; j <= f; ++j) M[rank][j] = mod_pos(M[rank][j] * inv, p);
        for (int r = 0; r < f; ++r) {
            if (r == rank || M[r][col] == 0) continue;
            int64_t t = M[r][col];
            for (int j = col; j <= f; ++j) M[r][j] = mod_pos(M[r][j] - t * M[rank][j], p);
        }
        pivot_col[rank] = col;
        ++rank;
    }

    SolveResult res;
    res.unique = (rank == f);
    bool consistent = true;
    for (int r = rank; r < f; ++r)
        if (M[r][f] != 0) consistent = false;
    res.solvable = consistent;

    if (consistent) {
        FqElement sol = k.zero();
        for (int r = 0; r < rank; ++r) sol[pivot_col[r]] = M[r][f];
        res.solution = sol;
    }
    if (rank < f) {
        // free columns give kernel generators
        std::vector<bool> is_pivot(f, false);
        for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
        for (int col = 0; col < f; ++col) {
            if (is_pivot[col]) continue;
            FqElement v = k.zero();
            v[col] = 1;
            for (int r = 0; r < rank; ++r) v[pivot_col[r]] = mod_pos(-M[r][col], p);
            res.kernel.push_back(v);
        }
    }
    return res;
}

} // namespace tcss

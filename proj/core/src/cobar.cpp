#include "tcss/cobar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace tcss {

namespace {

// rank of a matrix over k by Gaussian elimination
int fq_rank(const FieldCtx& k, std::vector<std::vector<FqElement>> M) {
    if (M.empty()) return 0;
    size_t rows = M.size(), cols = M[0].size();
    int rank = 0;
    for (size_t col = 0; col < cols && size_t(rank) < rows; ++col) {
        size_t sel = rows;
        for (size_t r = rank; r < rows; ++r)
            if (!k.is_zero(M[r][col])) {
                sel = r;
                break;
            }
        if (sel == rows) continue;
        std::swap(M[sel], M[size_t(rank)]);
        FqElement inv = k.inv(M[size_t(rank)][col]);
        for (size_t j = col; j < cols; ++j) M[size_t(rank)][j] = k.mul(M[size_t(rank)][j], inv);
        for (size_t r = 0; r < rows; ++r) {
            if (r == size_t(rank) || k.is_zero(M[r][col])) continue;
            FqElement t = M[r][col];
            for (size_t j = col; j < cols; ++j)
                M[r][j] = k.sub(M[r][j], k.mul(t, M[size_t(rank)][j]));
        }
        ++rank;
    }
    return rank;
}

void accumulate(const FieldCtx& k, std::map<CbMono, FqElement>& acc, const CbMono& m, const FqElement& c) {
    if (k.is_zero(c)) return;
    auto it = acc.find(m);
    if (it == acc.end()) {
        acc.emplace(m, c);
        return;
    }
    it->second = k.add(it->second, c);
    if (k.is_zero(it->second)) acc.erase(it);
}

int64_t factorial_mod(int n, int64_t p) {
    int64_t r = 1;
    for (int t = 2; t <= n; ++t) r = r * (t % p) % p;
    return r;
}

int64_t binom_mod(int n, int r, int64_t p) {
    // Lucas would do; sizes are tiny so build the row directly
    std::vector<int64_t> row(size_t(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j) row[size_t(j)] = (row[size_t(j)] + row[size_t(j) - 1]) % p;
    return row[size_t(r)];
}

} // namespace

CobarComplex::CobarComplex(const FieldCtx& k, CobarFlavor flavor, int e, const FqElement& mu_bar)
    : k_(k), flavor_(flavor), e_(e), mu_bar_(mu_bar) {}

CobarComplex CobarComplex::for_field(const LocalField& K, CobarFlavor flavor) {
    return CobarComplex(K.k(), flavor, K.e(), K.mu_bar());
}

FqElement CobarComplex::minus_q() const {
    // -(e mod p) * mu_bar, the scalar part of -E'(z) mod p
    return k_.neg(k_.scalar_mul(int64_t(e_) % k_.p(), mu_bar_));
}

int CobarComplex::grade(const CbMono& mono) const {
    int js = 0;
    for (int j : mono.js) js += j;
    if (flavor_ == CobarFlavor::thh_mod_p) return mono.m + js;
    return mono.zc + e_ * js;
}

std::vector<CbMono> CobarComplex::basis(int cobar_deg, int grade_value) const {
    std::vector<CbMono> out;
    // enumerate (m or t-total, parts) then the z-exponent
    std::vector<int> parts(size_t(cobar_deg), 0);
    auto emit = [&](int m_or_unused, int zc) {
        CbMono mo;
        mo.zc = zc;
        mo.m = flavor_ == CobarFlavor::thh_mod_p ? m_or_unused : 0;
        mo.js = parts;
        out.push_back(mo);
    };
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == cobar_deg) {
            if (flavor_ == CobarFlavor::thh_mod_p) {
                for (int zc = 0; zc < e_; ++zc) emit(remaining, zc);
            } else {
                // remaining must be zero: zc fixed by the grade
                if (remaining == 0) {
                    int js = 0;
                    for (int j : parts) js += j;
                    int zc = grade_value - e_ * js;
                    if (zc >= 0) emit(0, zc);
                }
            }
            return;
        }
        for (int j = 0; j <= remaining; ++j) {
            parts[size_t(slot)] = j;
            rec(slot + 1, remaining - j);
        }
        parts[size_t(slot)] = 0;
    };
    if (flavor_ == CobarFlavor::thh_mod_p) {
        rec(0, grade_value); // remaining at the end = m
    } else {
        for (int t = 0; e_ * t <= grade_value; ++t) rec(0, t);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CbVector CobarComplex::face(const CbMono& mono, int i) const {
    const int n = int(mono.js.size());
    CbVector out;
    auto shift_insert = [&](int r) {
        CbMono m2 = mono;
        m2.js.insert(m2.js.begin(), r);
        return m2;
    };
    if (i == 0) {
        if (flavor_ == CobarFlavor::thh_mod_p) {
            // u0 -> u0 + (-q) t1 with q = e*mu*z^{e-1}
            FqElement q = minus_q();
            FqElement qr = k_.one();
            for (int r = 0; r <= mono.m; ++r) {
                int zc2 = mono.zc + r * (e_ - 1);
                if (e_ > 1 && zc2 >= e_) break;
                int64_t c = binom_mod(mono.m, r, k_.p()) * factorial_mod(r, k_.p()) % k_.p();
                FqElement coef = k_.scalar_mul(c, qr);
                CbMono m2 = shift_insert(r);
                m2.zc = zc2;
                m2.m = mono.m - r;
                out.emplace_back(m2, coef);
                qr = k_.mul(qr, q);
            }
        } else if (e_ == 1) {
            // z0 -> z0 - t1
            for (int r = 0; r <= mono.zc; ++r) {
                int64_t c = binom_mod(mono.zc, r, k_.p()) * factorial_mod(r, k_.p()) % k_.p();
                FqElement coef = k_.from_int(r % 2 ? -c : c);
                CbMono m2 = shift_insert(r);
                m2.zc = mono.zc - r;
                out.emplace_back(m2, coef);
            }
        } else {
            out.emplace_back(shift_insert(0), k_.one());
        }
    } else if (i <= n) {
        int j = mono.js[size_t(i) - 1];
        for (int j1 = 0; j1 <= j; ++j1) {
            CbMono m2 = mono;
            m2.js[size_t(i) - 1] = j1;
            m2.js.insert(m2.js.begin() + i, j - j1);
            out.emplace_back(m2, k_.one());
        }
    } else { // i == n+1
        CbMono m2 = mono;
        m2.js.push_back(0);
        out.emplace_back(m2, k_.one());
    }
    return out;
}

CbVector CobarComplex::differential(const CbMono& mono) const {
    const int n = int(mono.js.size());
    std::map<CbMono, FqElement> acc;
    for (int i = 0; i <= n + 1; ++i) {
        for (auto& [m2, c] : face(mono, i))
            accumulate(k_, acc, m2, i % 2 ? k_.neg(c) : c);
    }
    return CbVector(acc.begin(), acc.end());
}

int CobarComplex::rank_of_differential(int cobar_deg, int grade_value) const {
    auto dom = basis(cobar_deg, grade_value);
    auto cod = basis(cobar_deg + 1, grade_value);
    if (dom.empty() || cod.empty()) return 0;
    std::map<CbMono, size_t> index;
    for (size_t r = 0; r < cod.size(); ++r) index[cod[r]] = r;
    std::vector<std::vector<FqElement>> M(cod.size(), std::vector<FqElement>(dom.size(), k_.zero()));
    for (size_t c = 0; c < dom.size(); ++c)
        for (auto& [m2, coef] : differential(dom[c])) {
            auto it = index.find(m2);
            if (it == index.end()) fail(errc::consistency_violation, "differential left the graded piece");
            M[it->second][c] = k_.add(M[it->second][c], coef);
        }
    return fq_rank(k_, std::move(M));
}

std::array<int, 3> CobarComplex::cohomology_dims(int grade_value) const {
    int c0 = int(basis(0, grade_value).size());
    int c1 = int(basis(1, grade_value).size());
    int c2 = int(basis(2, grade_value).size());
    int r0 = rank_of_differential(0, grade_value);
    int r1 = rank_of_differential(1, grade_value);
    int r2 = rank_of_differential(2, grade_value);
    return {c0 - r0, c1 - r1 - r0, c2 - r2 - r1};
}

bool CobarComplex::is_cocycle(int, const CbVector& v) const {
    std::map<CbMono, FqElement> acc;
    for (auto& [m, c] : v)
        for (auto& [m2, c2] : differential(m)) accumulate(k_, acc, m2, k_.mul(c, c2));
    return acc.empty();
}

CbVector CobarComplex::coproduct(const CbMono& mono) const { return face(mono, 1); }

FqElement CobarComplex::counit_coeff(const CbMono& mono) const {
    for (int j : mono.js)
        if (j != 0) return k_.zero();
    return k_.one();
}

CbMono CobarComplex::counit_image(const CbMono& mono) const {
    CbMono m2 = mono;
    m2.js.clear();
    return m2;
}

HopfAxiomReport hopf_axioms_check(const CobarComplex& cx, int degree_cap) {
    const FieldCtx& k = cx.k();
    HopfAxiomReport rep;

    for (const auto& g : [&] {
             std::vector<CbMono> all;
             for (int d = 0; d <= degree_cap; ++d)
                 for (auto& m : cx.basis(1, d)) all.push_back(m);
             return all;
         }()) {
        // (eps (x) id) Delta = id and (id (x) eps) Delta = id
        std::map<CbMono, FqElement> left, right;
        for (auto& [m2, c] : cx.coproduct(g)) {
            // m2 has two t-slots
            if (m2.js[0] == 0) {
                CbMono red = m2;
                red.js.erase(red.js.begin());
                accumulate(k, left, red, c);
            }
            if (m2.js[1] == 0) {
                CbMono red = m2;
                red.js.pop_back();
                accumulate(k, right, red, c);
            }
        }
        auto is_identity = [&](std::map<CbMono, FqElement>& acc) {
            accumulate(k, acc, g, k.neg(k.one()));
            return acc.empty();
        };
        if (!is_identity(left)) rep.counit_left = false;
        if (!is_identity(right)) rep.counit_right = false;

        // coassociativity: split slot 1 vs slot 2 of the coproduct
        std::map<CbMono, FqElement> a, b;
        for (auto& [m2, c] : cx.coproduct(g)) {
            for (auto& [m3, c3] : cx.face(m2, 1)) accumulate(k, a, m3, k.mul(c, c3));
            for (auto& [m3, c3] : cx.face(m2, 2)) accumulate(k, b, m3, k.mul(c, c3));
        }
        for (auto& [m3, c3] : b) accumulate(k, a, m3, k.neg(c3));
        if (!a.empty()) rep.coassoc = false;
    }

    // eps after either unit is the identity on the base
    for (int d = 0; d <= degree_cap; ++d)
        for (auto& mono : cx.basis(0, d))
            for (int i = 0; i <= 1; ++i) {
                std::map<CbMono, FqElement> acc;
                for (auto& [m2, c] : cx.face(mono, i)) {
                    FqElement e = cx.counit_coeff(m2);
                    if (!k.is_zero(e)) accumulate(k, acc, cx.counit_image(m2), k.mul(c, e));
                }
                accumulate(k, acc, mono, k.neg(k.one()));
                if (!acc.empty()) rep.unit_counit = false;
            }
    return rep;
}

std::vector<CbMono> closed_form_row0(const LocalField& K, int n) {
    std::vector<CbMono> out;
    const int e = K.e();
    const int64_t p = K.p();
    bool extra = (int64_t(e) * n) % p == 0;
    for (int l = 0; l < e; ++l) {
        bool in = e > 1 ? (l >= 1 || extra) : extra;
        if (!in) continue;
        CbMono m;
        m.zc = l;
        m.m = n;
        out.push_back(m);
    }
    return out;
}

std::vector<CbVector> closed_form_row1(const LocalField& K, int n) {
    std::vector<CbVector> out;
    if (n < 1) return out;
    const FieldCtx& k = K.k();
    const int e = K.e();
    const int64_t p = K.p();
    if (e > 1) {
        bool extra = (int64_t(e) * n) % p == 0;
        for (int l = 0; l < e; ++l) {
            bool in = l <= e - 2 || extra;
            if (!in) continue;
            CbVector v;
            CbMono m;
            m.zc = l;
            m.m = n - 1;
            m.js = {1};
            v.emplace_back(m, k.one());
            if (n >= 2 && l == 0) {
                CbMono m2;
                m2.zc = e - 1;
                m2.m = n - 2;
                m2.js = {2};
                FqElement c = k.scalar_mul(-(int64_t(n - 1) % p) * (int64_t(e) % p) % p, K.mu_bar());
                if (!k.is_zero(c)) v.emplace_back(m2, c);
            }
            out.push_back(std::move(v));
        }
    } else {
        if (n % p != 0) return out;
        CbVector v;
        FqElement c = k.one();
        for (int j = 1; j <= n; ++j) {
            CbMono m;
            m.zc = 0;
            m.m = n - j;
            m.js = {j};
            if (!k.is_zero(c)) v.emplace_back(m, c);
            c = k.mul(c, k.scalar_mul(int64_t(n - j) % p, k.neg(K.mu_bar())));
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool ThhE2Result::match() const {
    for (const auto& r : rows) {
        if (r.dims[0] != r.closed_row0 || r.dims[1] != r.closed_row1 || r.dims[2] != 0) return false;
        if (!r.reps_are_cocycles) return false;
    }
    return true;
}

std::string ThhE2Result::to_json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    auto record = [&](int degree, int column, int dim, const std::vector<std::string>& wit) {
        if (!first) os << ",";
        first = false;
        os << "{\"degree\":" << degree << ",\"column\":" << column << ",\"dim\":" << dim
           << ",\"witnesses\":[";
        for (size_t w = 0; w < wit.size(); ++w) {
            if (w) os << ",";
            os << "\"" << wit[w] << "\"";
        }
        os << "]}";
    };
    for (const auto& r : rows) {
        record(2 * r.n, 0, r.dims[0], r.witnesses0);
        record(2 * r.n, -1, r.dims[1], r.witnesses1);
        record(2 * r.n, -2, r.dims[2], {});
    }
    os << "]";
    return os.str();
}

std::string mono_str(const CbMono& m) {
    std::ostringstream os;
    bool any = false;
    if (m.zc) {
        os << "z^" << m.zc;
        any = true;
    }
    if (m.m) {
        if (any) os << "*";
        os << "u^" << m.m;
        any = true;
    }
    for (size_t i = 0; i < m.js.size(); ++i) {
        if (m.js[i] == 0) continue;
        if (any) os << "*";
        os << "t" << i + 1 << "[" << m.js[i] << "]";
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

ThhE2Result thh_cobar_e2(const LocalField& K, int degree_cap) {
    auto cx = CobarComplex::for_field(K, CobarFlavor::thh_mod_p);
    ThhE2Result res;
    for (int n = 0; n <= degree_cap; ++n) {
        ThhE2Row row;
        row.n = n;
        row.dims = cx.cohomology_dims(n);
        row.closed_row0 = int(closed_form_row0(K, n).size());
        row.closed_row1 = int(closed_form_row1(K, n).size());
        for (auto& m : closed_form_row0(K, n)) {
            if (!cx.is_cocycle(0, {{m, K.k().one()}})) row.reps_are_cocycles = false;
            row.witnesses0.push_back(mono_str(m));
        }
        for (auto& v : closed_form_row1(K, n)) {
            if (!cx.is_cocycle(1, v)) row.reps_are_cocycles = false;
            row.witnesses1.push_back(v.empty() ? "0" : mono_str(v.front().first));
        }
        res.rows.push_back(row);
    }
    return res;
}

namespace {

/* O_K = W(k)[z]/(E) at the field's parse precision, as vectors of Witt
 * elements with z-degree < e. */
struct OkRing {
    const WittCtx& w;
    int e;
    std::vector<WittElement> c; // c_0..c_e
    WittElement mu_inv;

    using Elt = std::vector<WittElement>;

    Elt zero() const { return Elt(size_t(e), w.zero()); }
    Elt z_pow(int n) const {
        Elt r = zero();
        if (n < e) {
            r[size_t(n)] = w.one();
            return r;
        }
        Elt acc = zero();
        acc[0] = w.one();
        for (int t = 0; t < n; ++t) acc = mul_z(acc);
        return acc;
    }
    Elt mul_z(const Elt& a) const {
        Elt r = zero();
        WittElement top = a[size_t(e) - 1];
        for (int i = e - 1; i > 0; --i) r[size_t(i)] = a[size_t(i) - 1];
        // mu z^e = -sum c_m z^m
        WittElement base = w.mul(top, mu_inv);
        for (int m = 0; m < e; ++m)
            r[size_t(m)] = w.sub(r[size_t(m)], w.mul(base, c[size_t(m)]));
        return r;
    }
    Elt mul(const Elt& a, const Elt& b) const {
        Elt r = zero();
        Elt shifted = b;
        for (int i = 0; i < e; ++i) {
            for (int m = 0; m < e; ++m)
                r[size_t(m)] = w.add(r[size_t(m)], w.mul(a[size_t(i)], shifted[size_t(m)]));
            if (i + 1 < e) shifted = mul_z(shifted);
        }
        return r;
    }
    Elt scalar(const WittElement& s) const {
        Elt r = zero();
        r[0] = s;
        return r;
    }
    Elt eprime() const {
        Elt r = zero();
        for (int i = 1; i <= e; ++i) {
            Elt t = z_pow(i - 1);
            for (int m = 0; m < e; ++m)
                r[size_t(m)] = w.add(r[size_t(m)], w.scalar_mul(i, w.mul(c[size_t(i)], t[size_t(m)])));
        }
        return r;
    }
};

// diagonal p-valuations of the Smith normal form over Z/p^N (N = valuation of 0)
std::vector<int> snf_valuations(std::vector<std::vector<int64_t>> M, int64_t p, int N, int64_t pN) {
    auto val = [&](int64_t x) {
        x = ((x % pN) + pN) % pN;
        if (x == 0) return N;
        int v = 0;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v;
    };
    size_t n = M.size();
    std::vector<int> out;
    size_t start = 0;
    while (start < n) {
        // locate minimal-valuation entry in the trailing submatrix
        int best = N + 1;
        size_t br = start, bc = start;
        for (size_t r = start; r < n; ++r)
            for (size_t col = start; col < n; ++col)
                if (val(M[r][col]) < best) {
                    best = val(M[r][col]);
                    br = r;
                    bc = col;
                }
        if (best > N) best = N;
        if (best == N) {
            for (size_t r = start; r < n; ++r) out.push_back(N);
            break;
        }
        std::swap(M[start], M[br]);
        for (size_t r = start; r < n; ++r) std::swap(M[r][start], M[r][bc]);
        // normalize pivot to p^best
        int64_t unit = ((M[start][start] % pN) + pN) % pN;
        for (int t = 0; t < best; ++t) unit /= p;
        int64_t uinv = 1;
        {
            int64_t x = unit % p, y = 1;
            for (int64_t e2 = p - 2; e2 > 0; e2 >>= 1) {
                if (e2 & 1) y = y * x % p;
                x = x * x % p;
            }
            uinv = y;
            for (int it = 0; it < N + 1; ++it)
                uinv = ((uinv * (2 - unit * uinv % pN)) % pN + pN) % pN;
        }
        for (size_t col = start; col < n; ++col) M[start][col] = M[start][col] % pN * uinv % pN;
        int64_t piv = 1;
        for (int t = 0; t < best; ++t) piv *= p;
        // clear column then row
        for (size_t r = start + 1; r < n; ++r) {
            int64_t x = ((M[r][start] % pN) + pN) % pN;
            if (x == 0) continue;
            int64_t q = x / piv;
            for (size_t col = start; col < n; ++col)
                M[r][col] = ((M[r][col] - q * M[start][col]) % pN + pN) % pN;
        }
        for (size_t col = start + 1; col < n; ++col) {
            int64_t x = ((M[start][col] % pN) + pN) % pN;
            if (x == 0) continue;
            int64_t q = x / piv;
            for (size_t r = start; r < n; ++r)
                M[r][col] = ((M[r][col] - q * M[r][start]) % pN + pN) % pN;
        }
        out.push_back(best);
        ++start;
    }
    return out;
}

} // namespace

std::vector<IntegralExtRow> integral_ext(const LocalField& K, int n_min, int n_max) {
    const WittCtx& w = K.witt();
    const FieldCtx& k = K.k();
    const int e = K.e();
    const int f = K.f();
    const int64_t p = K.p();
    OkRing R{w, e, K.coeffs(), w.inv(K.coeffs().back())};
    OkRing::Elt ep = R.eprime();

    std::vector<IntegralExtRow> out;
    for (int n = n_min; n <= n_max; ++n) {
        // multiplication by n*E'(pi) on O_K as a Z/p^N-matrix on basis z^a x^b
        OkRing::Elt xi = ep;
        for (auto& cc : xi) cc = w.scalar_mul(n, cc);
        size_t dim = size_t(e) * f;
        std::vector<std::vector<int64_t>> M(dim, std::vector<int64_t>(dim, 0));
        for (int a = 0; a < e; ++a)
            for (int b = 0; b < f; ++b) {
                OkRing::Elt basis = R.zero();
                WittElement xb = w.zero();
                xb.coeffs[size_t(b)] = 1;
                basis[size_t(a)] = xb;
                OkRing::Elt img = R.mul(xi, basis);
                size_t col = size_t(a) * f + b;
                for (int a2 = 0; a2 < e; ++a2)
                    for (int b2 = 0; b2 < f; ++b2)
                        M[size_t(a2) * f + b2][col] = img[size_t(a2)].coeffs[size_t(b2)];
            }

        // mod-p reduction must agree with multiplication by n*e*mu*z^{e-1} on
        // k[z]/(z^e): reduce the integral image of each basis vector and compare
        bool consistent = true;
        {
            for (int a = 0; a < e && consistent; ++a)
                for (int b = 0; b < f && consistent; ++b) {
                    OkRing::Elt basis = R.zero();
                    WittElement xb = w.zero();
                    xb.coeffs[size_t(b)] = 1;
                    basis[size_t(a)] = xb;
                    OkRing::Elt img = R.mul(xi, basis);
                    // expected: n e mu z^{e-1+a} x^b mod p (zero unless a = 0)
                    for (int a2 = 0; a2 < e; ++a2) {
                        FqElement got = w.reduce_mod_p(img[size_t(a2)]);
                        FqElement want = k.zero();
                        if (a == 0 && a2 == e - 1) {
                            FqElement xe = k.zero();
                            xe[size_t(b)] = 1;
                            want = k.mul(k.scalar_mul(int64_t(n) % p * (int64_t(e) % p) % p, K.mu_bar()), xe);
                        }
                        if (!k.is_zero(k.sub(got, want))) consistent = false;
                    }
                }
        }

        auto vals = snf_valuations(M, p, K.precision(), w.pN());
        IntegralExtRow row;
        row.n = n;
        row.mod_p_consistent = consistent;
        for (int v : vals) {
            if (v >= K.precision())
                fail(errc::precision_too_low, "invariant factor exceeds working precision");
            if (v > 0) row.factor_exponents.push_back(v);
        }
        std::sort(row.factor_exponents.begin(), row.factor_exponents.end(), std::greater<int>());
        out.push_back(std::move(row));
    }
    return out;
}

bool GrE2Result::match() const {
    for (size_t g = 0; g < dims.size(); ++g) {
        if (dims[g][0] != closed[g][0] || dims[g][1] != closed[g][1] || dims[g][2] != 0) return false;
    }
    return true;
}

GrE2Result gr_cobar_e2(int64_t p, int e, int f, int grade_cap) {
    FieldCtx k(p, f);
    CobarComplex cx(k, CobarFlavor::gr_refined, e, k.one());
    GrE2Result res;
    for (int g = 0; g <= grade_cap; ++g) {
        res.dims.push_back(cx.cohomology_dims(g));
        std::array<int, 2> closed{};
        if (e > 1) {
            closed[0] = 1;
            closed[1] = g >= e ? 1 : 0;
        } else {
            closed[0] = g % p == 0 ? 1 : 0;
            closed[1] = (g >= 1 && g % p == 0) ? 1 : 0;
        }
        res.closed.push_back(closed);
    }
    return res;
}

HHBarResult hh_bar_appendix(int64_t p, int f, int e, int degree_cap) {
    FieldCtx k(p, f);
    (void)k;
    // a = z^e; R = k[z]; D = R[x]/(x^2), dx = a.
    // Normalized complex basis in homological degree m: one element,
    // 1 (x) x^{(x) m/2} for m even and x (x) x^{(x) (m-1)/2} for m odd.
    // The boundary is evaluated mechanically below.
    struct Term {
        int eps;
        int n;
    };

    // b-part: merge adjacent slots, x*x = 0 in D; the only surviving merge is
    // slot0 * slot1 when slot0 = 1, plus the cyclic face with its Koszul sign.
    auto boundary = [&](const Term& t) -> std::vector<std::pair<Term, int>> {
        std::vector<std::pair<Term, int>> out;
        if (t.eps == 0 && t.n >= 1) {
            out.push_back({{1, t.n - 1}, +1});                   // face 0
            int koszul = ((t.eps + t.n - 1) % 2) ? -1 : 1;       // move last x across
            int sign = (t.n % 2 ? -1 : 1) * koszul;
            out.push_back({{1, t.n - 1}, sign});                 // cyclic face
        }
        return out;
    };
    // internal part from dx = a: only the slot-0 x survives normalization
    auto internal = [&](const Term& t) -> std::vector<std::pair<Term, int>> {
        if (t.eps == 1) return {{{0, t.n}, +1}};
        return {};
    };

    HHBarResult res;
    for (int m = 0; m <= 2 * degree_cap; ++m) {
        Term cur{m % 2, m / 2};
        Term above{(m + 1) % 2, (m + 1) / 2};
        // total differential of the basis element в degree m (coefficient in R: 1 or a)
        auto total = [&](const Term& t) {
            // combine b (coefficient 1) and internal (coefficient a)
            int bsum = 0;
            for (auto& [t2, s] : boundary(t)) bsum += s;
            bool has_internal = !internal(t).empty();
            // returns (coefficient polynomial degree marker): bsum must vanish
            return std::pair<int, bool>(bsum, has_internal);
        };
        auto [bsum_cur, int_cur] = total(cur);
        auto [bsum_above, int_above] = total(above);
        if (bsum_cur != 0 || bsum_above != 0)
            fail(errc::consistency_violation, "bar boundary does not cancel");
        // d_m is multiplication by a when the internal part is present, else 0
        bool d_out_nonzero = int_cur;       // C_m -> C_{m-1}
        bool d_in_nonzero = int_above;      // C_{m+1} -> C_m
        int dim;
        if (d_out_nonzero) {
            dim = 0; // kernel of multiplication by a nonzero polynomial in k[z]
        } else {
            dim = d_in_nonzero ? e : -1; // R/(a): k-dimension = deg a
        }
        if (dim < 0) fail(errc::consistency_violation, "unexpected free homology");
        res.k_dims.push_back(dim);
        res.a_ranks.push_back(dim % e == 0 ? dim / e : -1);
    }
    return res;
}

} // namespace tcss

#include "tcss/specseq.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tcss {

namespace {

int64_t vp(int64_t x, int64_t p) {
    int64_t v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

int64_t pow_ll(int64_t b, int64_t e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

int64_t mod_pos(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

std::optional<Differential> differential_of(const LocalField& K, int64_t n, int j) {
    const int64_t p = K.p();
    const int64_t e = K.e();
    if (n < 0) fail(errc::domain_violation, "negative z-exponent");
    int64_t M = n * (p - 1) - p * e * j;
    if (M == 0) return std::nullopt; // permanent cycle
    int64_t l = vp(M, p);
    int64_t pl = pow_ll(p, l);
    int64_t geo = (pow_ll(p, l + 1) - 1) / (p - 1); // 1 + p + ... + p^l

    Differential d;
    d.j = j;
    d.source_n = n;
    d.page = Rational(geo * e - 1, e); // (p^{l+1}-1)/(p-1) - 1/e
    d.target_n = p * e * (pl - 1) / (p - 1) + n;

    // n' = (M / (p-1)) / p^l mod p, via the inverse of the unit part
    int64_t unit = mod_pos((M / pl) % p, p);
    int64_t pm1_inv = 1;
    {
        int64_t x = mod_pos(p - 1, p), y = 1;
        for (int64_t ee = p - 2; ee > 0; ee >>= 1) {
            if (ee & 1) y = y * x % p;
            x = x * x % p;
        }
        pm1_inv = y;
    }
    int64_t nprime = unit * pm1_inv % p;

    const FieldCtx& k = K.k();
    FqElement mt_pow = k.pow(K.mutilde_bar(), (pl - 1) / (p - 1));
    d.coeff = k.scalar_mul(nprime, mt_pow);
    if (k.is_zero(d.coeff)) fail(errc::consistency_violation, "vanishing differential coefficient");
    return d;
}

PageState seed_page(const LocalField& K, int j, int64_t n_cap, PageVariant variant) {
    if (n_cap <= 0) fail(errc::domain_violation, "n_cap must be positive");
    const int64_t p = K.p();
    const int64_t e = K.e();
    PageState st;
    st.variant = variant;
    st.j = j;
    st.n_cap = n_cap;
    st.page = e > 1 ? Rational(e - 1, e) : Rational(1);

    auto filt0 = [&](int64_t n) { return Rational(n, e); };
    auto filt1 = [&](int64_t n) { return Rational(n - 1 + e, e); };

    for (int64_t n = 0; n <= n_cap; ++n) {
        if (e == 1 && n % p != 0) continue;
        if (variant == PageVariant::tc_minus && n < e * j) continue;
        SSClass c;
        c.column = 0;
        c.j = j;
        c.n = n;
        c.coeff = K.k().one();
        c.filtration = filt0(n);
        st.live0.push_back(c);
    }
    for (int64_t n = 1; n <= n_cap; ++n) {
        if (e == 1 && n % p != 0) continue;
        if (variant == PageVariant::tc_minus && n - 1 < e * (int64_t(j) - 1)) continue;
        SSClass c;
        c.column = 1;
        c.j = j;
        c.n = n;
        c.coeff = K.k().one();
        c.filtration = filt1(n);
        st.live1.push_back(c);
    }
    return st;
}

PageState run_to_infinity(const LocalField& K, PageState st) {
    const int64_t p = K.p();
    const int64_t e = K.e();

    std::vector<Differential> pending;
    for (const auto& c : st.live0) {
        auto d = differential_of(K, c.n, st.j);
        if (!d) continue;
        d->target_in_cap = d->target_n <= st.n_cap;
        // consistency: the target determines the same l as the source
        int64_t l_src = vp(c.n * (p - 1) - p * e * st.j, p);
        int64_t l_tgt = vp(d->target_n * (p - 1) - p * e * (int64_t(st.j) - 1), p);
        if (l_src != l_tgt)
            fail(errc::consistency_violation, "pairing altitude mismatch");
        // filtration bookkeeping: target - source = page
        Rational src_f(c.n, e);
        Rational tgt_f(d->target_n - 1 + e, e);
        if (tgt_f - src_f != d->page) fail(errc::consistency_violation, "page bookkeeping failed");
        pending.push_back(*d);
    }
    std::stable_sort(pending.begin(), pending.end(),
                     [](const Differential& a, const Differential& b) { return a.page < b.page; });

    std::map<int64_t, size_t> col1_index;
    std::vector<bool> dead1(st.live1.size(), false);
    for (size_t i = 0; i < st.live1.size(); ++i) col1_index[st.live1[i].n] = i;
    std::vector<bool> dead0(st.live0.size(), false);
    std::map<int64_t, size_t> col0_index;
    for (size_t i = 0; i < st.live0.size(); ++i) col0_index[st.live0[i].n] = i;

    std::map<int64_t, int64_t> hit_by; // target_n -> source_n, must stay injective
    for (auto& d : pending) {
        size_t src = col0_index.at(d.source_n);
        if (dead0[src]) fail(errc::consistency_violation, "source died twice");
        if (hit_by.count(d.target_n))
            fail(errc::consistency_violation, "two sources share one target");
        hit_by[d.target_n] = d.source_n;
        // in the truncated variant every in-range target stays in range, so the
        // differential always fires; targets beyond the cap are not stored
        dead0[src] = true;
        auto it = col1_index.find(d.target_n);
        if (it != col1_index.end()) {
            if (dead1[it->second]) fail(errc::consistency_violation, "target died twice");
            dead1[it->second] = true;
        } else if (d.target_in_cap) {
            fail(errc::consistency_violation, "in-cap target missing from the page");
        }
        st.ledger.push_back(d);
    }

    PageState out;
    out.variant = st.variant;
    out.j = st.j;
    out.n_cap = st.n_cap;
    out.page = Rational::infinity();
    out.ledger = std::move(st.ledger);
    for (size_t i = 0; i < st.live0.size(); ++i)
        if (!dead0[i]) out.live0.push_back(st.live0[i]);
    for (size_t i = 0; i < st.live1.size(); ++i)
        if (!dead1[i]) out.live1.push_back(st.live1[i]);
    return out;
}

std::vector<SSClass> einf_extract(const PageState& state, int column) {
    if (!state.page.is_infinite()) fail(errc::domain_violation, "page not run to the limit");
    std::vector<SSClass> out = column == 0 ? state.live0 : state.live1;
    std::sort(out.begin(), out.end(),
              [](const SSClass& a, const SSClass& b) { return a.filtration < b.filtration; });
    return out;
}

std::string page_to_json(const PageState& st) {
    std::ostringstream os;
    auto coeff_str = [&](const FqElement& c) {
        std::string s = "[";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + "]";
    };
    os << "{\"page\":\"" << st.page.str() << "\",\"j\":" << st.j << ",\"variant\":\""
       << (st.variant == PageVariant::tp ? "TP" : "TCminus") << "\",\"classes\":[";
    bool first = true;
    for (int col = 0; col <= 1; ++col)
        for (const auto& c : (col == 0 ? st.live0 : st.live1)) {
            if (!first) os << ",";
            first = false;
            os << "{\"column\":" << c.column << ",\"j\":" << c.j << ",\"n\":" << c.n << ",\"coeff\":"
               << coeff_str(c.coeff) << ",\"filtration\":\"" << c.filtration.str() << "\"}";
        }
    os << "],\"ledger\":[";
    first = true;
    for (const auto& d : st.ledger) {
        if (!first) os << ",";
        first = false;
        os << "{\"page\":\"" << d.page.str() << "\",\"source_n\":" << d.source_n << ",\"target_n\":"
           << d.target_n << ",\"coeff\":" << coeff_str(d.coeff) << ",\"target_in_cap\":"
           << (d.target_in_cap ? "true" : "false") << "}";
    }
    os << "]}";
    return os.str();
}

} // namespace tcss

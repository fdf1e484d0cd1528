#include "tcss/descent.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tcss {

namespace {

int64_t pow_ll(int64_t b, int64_t e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

bool congruent_b(const LocalField& K, int64_t b, int j) {
    int64_t m = K.p() - 1;
    if (m == 1) return true;
    return ((b + int64_t(K.e()) * (j - 1)) % m + m) % m == 0;
}

// search for a (p-1)-th root of `target` in k^x, smallest index first
std::optional<FqElement> root_pm1(const FieldCtx& k, const FqElement& target) {
    for (int64_t idx = 1; idx < k.order(); ++idx) {
        FqElement lam = k.from_index(idx);
        if (k.is_zero(k.sub(k.pow(lam, k.p() - 1), target))) return lam;
    }
    return std::nullopt;
}

} // namespace

std::vector<int64_t> RowBases::row1_exponent_params() const {
    std::vector<int64_t> out;
    for (const auto& c : row1) out.push_back(c.n);
    if (extra_n) out.push_back(*extra_n);
    std::sort(out.begin(), out.end());
    return out;
}

static RowBases row_bases(const LocalField& K, int j, int64_t n_cap, bool tc_minus_in) {
    bool tc_minus = tc_minus_in;
    const int64_t p = K.p();
    const int64_t e = K.e();
    RowBases out;
    out.j = j;

    if (j >= 0 && (e * j) % (p - 1) == 0) {
        int64_t n0 = p * e * j / (p - 1);
        if (n0 <= n_cap) out.row0_n = n0;
    }

    // window scan: l >= 1 for the full page, l >= 0 for the truncated page.
    // At e = 1 the l = 0 classes have p-indivisible exponents and do not exist;
    // for j <= 0 the truncation is inert and the truncated page equals the full
    // one, so the full-page windows apply.
    if (j <= 0) tc_minus = false;
    int64_t l_min = tc_minus && e > 1 ? 0 : 1;
    int64_t bound = (p - 1) * n_cap + p * e * (std::abs(int64_t(j)) + 2);
    for (int64_t l = l_min; pow_ll(p, l) <= bound * p; ++l) {
        int64_t pl = pow_ll(p, l);
        int64_t win = tc_minus ? pl : pl / p; // p^l or p^{l-1}
        // -e(j-1)/win < b < pe - ej/win; for j < 0 the upper bound exceeds pe
        int64_t slack = e * (std::abs(int64_t(j)) + 1) + 1;
        for (int64_t b = -slack; b <= p * e + slack; ++b) {
            if (b % p == 0) continue;
            if (!congruent_b(K, b, j)) continue;
            if (!(b * win > -e * (int64_t(j) - 1))) continue;
            if (!(b * win < p * e * win - e * j)) continue;
            int64_t num = p * e * (int64_t(j) - 1) + b * pl;
            if (num % (p - 1) != 0) fail(errc::consistency_violation, "window congruence broken");
            int64_t n = num / (p - 1);
            if (n < 1 || n > n_cap) continue;
            if (e == 1 && n % p != 0) fail(errc::consistency_violation, "e=1 class with p-indivisible exponent");
            out.row1.push_back(BLPair{b, l, j, n});
        }
    }
    if (j > 1 && (e * (int64_t(j) - 1)) % (p - 1) == 0) {
        int64_t n = p * e * (int64_t(j) - 1) / (p - 1);
        if (n >= 1 && n <= n_cap) out.extra_n = n;
    }
    std::sort(out.row1.begin(), out.row1.end(),
              [](const BLPair& a, const BLPair& b) { return a.n < b.n; });
    return out;
}

RowBases e2_tp_bases(const LocalField& K, int j, int64_t n_cap) { return row_bases(K, j, n_cap, false); }

RowBases e2_tcminus_bases(const LocalField& K, int j, int64_t n_cap) {
    return row_bases(K, j, n_cap, true);
}

std::vector<BLPair> ker_can_basis(const LocalField& K, int j) {
    if (j < 1) fail(errc::domain_violation, "kernel enumeration needs j >= 1");
    const int64_t p = K.p();
    const int64_t e = K.e();
    std::vector<BLPair> out;
    for (int64_t b = p * e * (1 - int64_t(j)); b < p * e; ++b) {
        if (b % p == 0) continue;
        if (!congruent_b(K, b, j)) continue;
        // unique l >= 0 with p^{l-1} <= ej/(pe-b) < p^l
        int64_t den = p * e - b; // > 0
        std::optional<int64_t> l_found;
        for (int64_t l = 0; l <= 62; ++l) {
            bool left = pow_ll(p, l) * den <= p * e * int64_t(j); // p^{l-1} den <= ej
            bool right = e * int64_t(j) < pow_ll(p, l) * den;
            if (left && right) {
                l_found = l;
                break;
            }
        }
        if (!l_found) continue;
        int64_t num = p * e * (int64_t(j) - 1) + b * pow_ll(p, *l_found);
        if (num % (p - 1) != 0) fail(errc::consistency_violation, "kernel congruence broken");
        out.push_back(BLPair{b, *l_found, j, num / (p - 1)});
    }
    if (int64_t(out.size()) != e * int64_t(j))
        fail(errc::consistency_violation, "kernel enumeration cardinality != e*j");
    std::sort(out.begin(), out.end(), [](const BLPair& a, const BLPair& b) { return a.b < b.b; });
    return out;
}

SSClass frobenius_leading(const LocalField& K, const SSClass& cls) {
    const FieldCtx& k = K.k();
    const int64_t p = K.p();
    const int64_t e = K.e();
    SSClass out = cls;
    out.coeff = k.frobenius(cls.coeff);
    if (cls.column == 0) {
        if (cls.n < e * cls.j) fail(errc::domain_violation, "Frobenius needs n >= ej on row 0");
        out.n = p * (cls.n - e * cls.j);
        out.coeff = k.mul(out.coeff, k.pow(K.mu_bar(), -p * int64_t(cls.j)));
        out.filtration = Rational(out.n, e);
    } else {
        out.n = p * (cls.n - e * (int64_t(cls.j) - 1));
        out.coeff = k.mul(out.coeff, k.pow(K.mu_bar(), -p * (int64_t(cls.j) - 1)));
        out.filtration = Rational(out.n - 1 + e, e);
    }
    return out;
}

CanPhiRow can_phi_analysis(const LocalField& K, int j, int64_t n_cap) {
    (void)n_cap;
    CanPhiRow out;
    out.j = j;
    if (j <= 0) return out;
    const int64_t p = K.p();
    const int64_t e = K.e();
    const FieldCtx& k = K.k();

    // b > 0 part of the kernel of can: one b per window [pm, pm+p-1], m = 0..e-1;
    // above the critical line the geometric correction by can^{-1} phi turns each
    // into a kernel class of can - phi with the same leading term
    auto all_ker = ker_can_basis(K, j);
    for (const auto& c : all_ker)
        if (c.b > 0) out.kernel_alphas.push_back(c);
    if (int64_t(out.kernel_alphas.size()) != e)
        fail(errc::consistency_violation, "expected e window classes with b > 0");

    // critical line at n = pe(j-1)/(p-1): Hilbert 90 for lambda^{p-1} = mu_bar^{p(j-1)}
    if (j > 1 && (e * (int64_t(j) - 1)) % (p - 1) == 0) {
        FqElement target = k.pow(K.mu_bar(), p * (int64_t(j) - 1));
        auto lam = root_pm1(k, target);
        bool divisible = (int64_t(j) - 1) % K.d() == 0;
        if (lam.has_value() != divisible)
            fail(errc::consistency_violation, "critical-line solvability disagrees with the period");
        if (lam) {
            out.gamma_line = out.coker_line = true;
            out.gamma_n = p * e * (int64_t(j) - 1) / (p - 1);
            out.gamma_coeff = *lam;
        }
    }
    return out;
}

CanPhiRow0 can_phi_row0(const LocalField& K, int j) {
    CanPhiRow0 out;
    out.j = j;
    const int64_t p = K.p();
    const int64_t e = K.e();
    const FieldCtx& k = K.k();
    out.class_exists = j >= 0 && (e * int64_t(j)) % (p - 1) == 0;
    if (!out.class_exists) return out;
    FqElement target = k.pow(K.mu_bar(), p * int64_t(j));
    auto lam = root_pm1(k, target);
    bool divisible = j % K.d() == 0;
    if (lam.has_value() != divisible)
        fail(errc::consistency_violation, "row-0 solvability disagrees with the period");
    out.ker_line = lam.has_value();
    if (lam) out.ker_coeff = *lam;
    return out;
}

TCReport tc_e2_inventory(const LocalField& K, int degree_cap) {
    const int64_t p = K.p();
    const int e = K.e();
    const int f = K.f();
    const int d = K.d();
    const FieldCtx& k = K.k();

    TCReport rep;
    rep.p = p;
    rep.e = e;
    rep.f = f;
    rep.d = d;

    auto beta = root_pm1(k, k.pow(K.mu_bar(), p * int64_t(d)));
    if (!beta) fail(errc::consistency_violation, "no coefficient for the periodicity class");
    rep.beta_coeff = *beta;

    // per-stratum dimensions must assemble into the beta-periodic module shape
    int jmax = std::max(degree_cap, 2 * d + 2);
    for (int j = -2; j <= jmax; ++j) {
        auto r0 = can_phi_row0(K, j);
        int col0 = r0.class_exists && r0.ker_line ? 1 : 0;
        int col0_expect = (j >= 0 && j % d == 0) ? 1 : 0;
        int row0_coker = col0;

        int col1_ker = 0, col1_coker = 0;
        if (j >= 1) {
            auto r1 = can_phi_analysis(K, j, 0);
            col1_ker = r1.ker_dim_fp(f);
            col1_coker = r1.coker_dim_fp();
        }
        int col1_expect = (j >= 1 ? e * f : 0) + ((j > 1 && (j - 1) % d == 0) ? 1 : 0) + col0_expect;
        int col2_expect = (j > 1 && (j - 1) % d == 0) ? 1 : 0;
        if (col0 != col0_expect || col1_ker + row0_coker != col1_expect || col1_coker != col2_expect)
            rep.strata_consistent = false;
    }

    TCColumn c0;
    c0.index = 0;
    c0.rank_over_beta = 1;
    c0.generators = {"1"};
    c0.generator_degrees = {0};

    TCColumn c1;
    c1.index = -1;
    c1.rank_over_beta = 2 + e * d * f;
    c1.generators = {"lambda", "gamma"};
    c1.generator_degrees = {-1, 2 * d + 1};
    for (int j = 1; j <= d; ++j) {
        auto r1 = can_phi_analysis(K, j, 0);
        // index i by increasing b, l by the residue field basis
        for (size_t ai = 0; ai < r1.kernel_alphas.size(); ++ai)
            for (int l = 1; l <= f; ++l) {
                std::ostringstream nm;
                nm << "alpha[j=" << j << ",i=" << ai + 1 << ",l=" << l << "]";
                c1.generators.push_back(nm.str());
                c1.generator_degrees.push_back(2 * j - 1);
            }
    }

    TCColumn c2;
    c2.index = -2;
    c2.rank_over_beta = 1;
    c2.generators = {"lambda*gamma"};
    c2.generator_degrees = {2 * d};

    for (int deg : c0.generator_degrees)
        if (deg % 2 != 0) rep.columns_even_ok = false;
    for (int deg : c2.generator_degrees)
        if (deg % 2 != 0) rep.columns_even_ok = false;

    rep.columns = {c0, c1, c2};
    return rep;
}

TCReport tc_homotopy_groups(const LocalField& K, int deg_min, int deg_max) {
    TCReport rep = tc_e2_inventory(K);
    const int d = rep.d;
    const int64_t p = rep.p;

    struct Gen {
        std::string name;
        int degree;
        bool is_beta_power;   // beta^m, m >= 1
        bool is_lambda_gamma; // lambda*gamma*beta^m
        int m;
    };
    std::vector<Gen> gens;
    for (int m = 0;; ++m) {
        int base = 2 * d * m;
        if (base > deg_max + 4 * d + 4) break;
        auto push = [&](std::string nm, int deg, bool isb, bool islg) {
            if (deg < deg_min || deg > deg_max) return;
            std::string full = nm;
            if (m == 1) full = nm.empty() ? "beta" : nm + "*beta";
            else if (m > 1) full = (nm.empty() ? "beta^" : nm + "*beta^") + std::to_string(m);
            else if (nm.empty()) full = "1";
            gens.push_back({full, deg, isb, islg, m});
        };
        push("", base, m >= 1, false);
        push("lambda", base - 1, false, false);
        push("gamma", base + 2 * d + 1, false, false);
        push("lambda*gamma", base + 2 * d, false, true);
        for (int j = 1; j <= d; ++j)
            for (int i = 1; i <= rep.e; ++i)
                for (int l = 1; l <= rep.f; ++l) {
                    std::ostringstream nm;
                    nm << "alpha[j=" << j << ",i=" << i << ",l=" << l << "]";
                    push(nm.str(), base + 2 * j - 1, false, false);
                }
    }

    bool merge_z4 = p == 2 && (rep.e * rep.f) % 2 == 1;
    for (int deg = deg_min; deg <= deg_max; ++deg) {
        TCReport::DegreeGroup g;
        g.degree = deg;
        std::vector<const Gen*> here;
        for (const auto& gen : gens)
            if (gen.degree == deg) here.push_back(&gen);
        if (merge_z4 && deg % 4 == 2 && deg >= 2) {
            // beta^m with m odd absorbs lambda*gamma*beta^{m-1} into a Z/4
            const Gen* bpow = nullptr;
            const Gen* lg = nullptr;
            for (auto* x : here) {
                if (x->is_beta_power && x->m % 2 == 1) bpow = x;
                if (x->is_lambda_gamma && x->m % 2 == 0) lg = x;
            }
            if (bpow && lg) {
                g.orders.push_back(4);
                g.generators.push_back(bpow->name + " (extension with " + lg->name + ")");
                for (auto* x : here)
                    if (x != bpow && x != lg) {
                        g.orders.push_back(p);
                        g.generators.push_back(x->name);
                    }
                rep.homotopy.push_back(std::move(g));
                continue;
            }
        }
        for (auto* x : here) {
            g.orders.push_back(p);
            g.generators.push_back(x->name);
        }
        rep.homotopy.push_back(std::move(g));
    }
    return rep;
}

std::string TCReport::to_json() const {
    std::ostringstream os;
    os << "{\"schema\":\"tcss/1\",\"field\":{\"p\":" << p << ",\"e\":" << e << ",\"f\":" << f
       << ",\"d\":" << d << "},\"e2\":{\"columns\":[";
    for (size_t i = 0; i < columns.size(); ++i) {
        if (i) os << ",";
        os << "{\"index\":" << columns[i].index << ",\"rank_over_beta\":" << columns[i].rank_over_beta
           << ",\"generators\":[";
        for (size_t g = 0; g < columns[i].generators.size(); ++g) {
            if (g) os << ",";
            os << "\"" << columns[i].generators[g] << "\"";
        }
        os << "]}";
    }
    os << "],\"even_columns\":" << (columns_even_ok ? "true" : "false")
       << ",\"strata_consistent\":" << (strata_consistent ? "true" : "false") << "},\"homotopy\":[";
    for (size_t i = 0; i < homotopy.size(); ++i) {
        if (i) os << ",";
        os << "{\"degree\":" << homotopy[i].degree << ",\"orders\":[";
        for (size_t g = 0; g < homotopy[i].orders.size(); ++g) {
            if (g) os << ",";
            os << homotopy[i].orders[g];
        }
        os << "],\"generators\":[";
        for (size_t g = 0; g < homotopy[i].generators.size(); ++g) {
            if (g) os << ",";
            os << "\"" << homotopy[i].generators[g] << "\"";
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

std::string TCReport::to_table() const {
    std::ostringstream os;
    os << "field p=" << p << " e=" << e << " f=" << f << " d=" << d << "\n";
    os << "columns (rank over the periodicity polynomial algebra):\n";
    for (const auto& c : columns) {
        os << "  " << c.index << ": rank " << c.rank_over_beta << " {";
        for (size_t g = 0; g < c.generators.size(); ++g) {
            if (g) os << ", ";
            os << c.generators[g];
        }
        os << "}\n";
    }
    if (!homotopy.empty()) {
        os << "homotopy groups:\n";
        for (const auto& h : homotopy) {
            os << "  deg " << h.degree << ": [";
            for (size_t g = 0; g < h.orders.size(); ++g) {
                if (g) os << ",";
                os << h.orders[g];
            }
            os << "]";
            if (!h.generators.empty()) {
                os << "  (";
                for (size_t g = 0; g < h.generators.size(); ++g) {
                    if (g) os << ", ";
                    os << h.generators[g];
                }
                os << ")";
            }
            os << "\n";
        }
    }
    return os.str();
}

CrosscheckResult crosscheck_with_specseq(const LocalField& K, int j_min, int j_max, int64_t n_cap) {
    CrosscheckResult res;
    for (int j = j_min; j <= j_max; ++j) {
        for (auto variant : {PageVariant::tp, PageVariant::tc_minus}) {
            PageState st = run_to_infinity(K, seed_page(K, j, n_cap, variant));
            std::set<int64_t> engine0, engine1;
            for (const auto& c : st.live0) engine0.insert(c.n);
            for (const auto& c : st.live1) engine1.insert(c.n);

            RowBases rb = variant == PageVariant::tp ? e2_tp_bases(K, j, n_cap)
                                                     : e2_tcminus_bases(K, j, n_cap);
            std::set<int64_t> closed0, closed1;
            if (rb.row0_n) closed0.insert(*rb.row0_n);
            for (int64_t n : rb.row1_exponent_params()) closed1.insert(n);

            auto describe = [&](const std::set<int64_t>& s) {
                std::string out = "{";
                for (auto v : s) out += std::to_string(v) + ",";
                return out + "}";
            };
            const char* vn = variant == PageVariant::tp ? "TP" : "TCminus";
            if (engine0 != closed0) {
                res.ok = false;
                res.mismatches.push_back(std::string(vn) + " j=" + std::to_string(j) + " row0 engine=" +
                                         describe(engine0) + " closed=" + describe(closed0));
            }
            if (engine1 != closed1) {
                res.ok = false;
                res.mismatches.push_back(std::string(vn) + " j=" + std::to_string(j) + " row1 engine=" +
                                         describe(engine1) + " closed=" + describe(closed1));
            }
        }
    }
    return res;
}

} // namespace tcss

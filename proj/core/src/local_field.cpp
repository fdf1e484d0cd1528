#include "tcss/local_field.hpp"

#include <sstream>

#include "json.hpp"

namespace tcss {

namespace {

// polynomial ops over a Witt context, coefficient vectors with degree = index
std::vector<WittElement> wpoly_mul(const WittCtx& w, const std::vector<WittElement>& a,
                                   const std::vector<WittElement>& b) {
    std::vector<WittElement> c(a.size() + b.size() - 1, w.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = w.add(c[i + j], w.mul(a[i], b[j]));
    return c;
}

std::vector<WittElement> wpoly_pow(const WittCtx& w, std::vector<WittElement> base, int64_t n) {
    std::vector<WittElement> r{w.one()};
    while (n > 0) {
        if (n & 1) r = wpoly_mul(w, r, base);
        base = wpoly_mul(w, base, base);
        n >>= 1;
    }
    return r;
}

} // namespace

LocalField::LocalField(FieldSpec spec) : spec_(std::move(spec)) {
    if (spec_.e < 1) fail(errc::parse_error, "ramification index must be >= 1");
    if (spec_.precision < 2) fail(errc::precision_too_low, "precision must be >= 2");
    if (int(spec_.eisenstein_mid.size()) != spec_.e - 1)
        fail(errc::parse_error, "expected e-1 middle coefficients");

    FieldCtx field = spec_.modulus.empty()
                         ? FieldCtx(spec_.p, spec_.f)
                         : FieldCtx(spec_.p, spec_.f, spec_.modulus);
    witt_ = std::make_shared<WittCtx>(std::move(field), spec_.precision);
    coeffs_ = coeffs_in(*witt_);

    const auto& K = k();
    for (int i = 1; i < spec_.e; ++i)
        if (!witt_->divisible_by_p(coeffs_[i]))
            fail(errc::not_eisenstein, "middle coefficient c_" + std::to_string(i) + " not divisible by p");
    if (!witt_->equal(coeffs_[0], witt_->from_int(spec_.p)))
        fail(errc::bad_constant, "constant coefficient must be exactly p");
    mu_bar_ = witt_->reduce_mod_p(mu());
    if (K.is_zero(mu_bar_)) fail(errc::non_unit_leading, "leading coefficient must be a unit");

    d_ = compute_d(*this);

    auto dE = delta_E_poly(*this, *witt_);
    deltaE_modp_.clear();
    for (const auto& c : dE) deltaE_modp_.push_back(witt_->reduce_mod_p(c));
    while (deltaE_modp_.size() > 1 && K.is_zero(deltaE_modp_.back())) deltaE_modp_.pop_back();

    mutilde_bar_ = K.neg(K.mul(K.pow(mu_bar_, spec_.p), K.inv(deltaE_modp_[0])));

    eprime_bar_.assign(spec_.e, K.zero());
    eprime_bar_[spec_.e - 1] = K.scalar_mul(spec_.e % spec_.p, mu_bar_);
}

std::vector<WittElement> LocalField::coeffs_in(const WittCtx& w) const {
    std::vector<WittElement> out;
    out.push_back(w.from_int(spec_.p));
    for (const auto& ci : spec_.eisenstein_mid) out.push_back(w.from_ints(ci));
    out.push_back(w.from_ints(spec_.mu));
    return out;
}

int compute_d(const LocalField& K) {
    const auto& k = K.k();
    FqElement nb = k.norm(K.mu_bar());
    int64_t p = K.p();
    int e = K.e();
    for (int d = 1; d <= int((p - 1) * (k.order() - 1)); ++d) {
        if ((int64_t(e) * d) % (p - 1) != 0) continue;
        if (k.is_zero(k.sub(k.pow(nb, d), k.one()))) return d;
    }
    fail(errc::consistency_violation, "no period d found");
}

std::vector<WittElement> delta_E_poly(const LocalField& K, const WittCtx& w) {
    const int e = K.e();
    const int64_t p = K.p();
    auto coeffs = K.coeffs_in(w);

    // E^phi(z^p): coefficient frobenius, exponents scaled by p
    std::vector<WittElement> ephi(size_t(e) * p + 1, w.zero());
    for (int i = 0; i <= e; ++i) ephi[size_t(i) * p] = w.frobenius(coeffs[i]);

    auto epow = wpoly_pow(w, coeffs, p);
    if (epow.size() < ephi.size()) epow.resize(ephi.size(), w.zero());

    std::vector<WittElement> num(ephi.size(), w.zero());
    for (size_t i = 0; i < num.size(); ++i) num[i] = w.sub(ephi[i], epow[i]);

    std::vector<WittElement> out;
    out.reserve(num.size());
    for (auto& c : num) {
        if (!w.divisible_by_p(c)) fail(errc::not_divisible, "delta(E) numerator not divisible by p");
        out.push_back(w.div_exact_p(c));
    }
    return out;
}

std::string LocalField::describe() const {
    std::ostringstream os;
    const auto& K = k();
    os << "p=" << p() << " e=" << e() << " f=" << f() << " N=" << precision() << "\n";
    os << "mu_bar = " << K.str(mu_bar_) << "\n";
    os << "d = " << d_ << "\n";
    os << "mutilde_bar = " << K.str(mutilde_bar_) << "\n";
    os << "deltaE mod p =";
    for (size_t i = 0; i < deltaE_modp_.size(); ++i)
        if (!K.is_zero(deltaE_modp_[i])) os << " (" << K.str(deltaE_modp_[i]) << ")z^" << i;
    os << "\n";
    return os.str();
}

LocalField LocalField::parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& ex) {
        fail(errc::parse_error, std::string("bad field spec: ") + ex.what());
    }
    FieldSpec s;
    try {
        s.p = j.at("p").get<int64_t>();
        s.f = j.value("f", 1);
        s.e = j.at("e").get<int>();
        s.precision = j.value("precision", 4);
        if (j.contains("modulus")) s.modulus = j["modulus"].get<std::vector<int64_t>>();
        if (j.contains("eisenstein_mid"))
            s.eisenstein_mid = j["eisenstein_mid"].get<std::vector<std::vector<int64_t>>>();
        s.mu = j.value("mu", std::vector<int64_t>{1});
    } catch (const std::exception& ex) {
        fail(errc::parse_error, std::string("bad field spec: ") + ex.what());
    }
    if (int(s.eisenstein_mid.size()) != s.e - 1 && s.eisenstein_mid.empty())
        s.eisenstein_mid.assign(s.e - 1, std::vector<int64_t>{0});
    return LocalField(std::move(s));
}

LocalField LocalField::make_simple(int64_t p, int e, int f, int64_t mu, int precision) {
    FieldSpec s;
    s.p = p;
    s.f = f;
    s.e = e;
    s.precision = precision;
    s.eisenstein_mid.assign(e - 1, std::vector<int64_t>{0});
    s.mu = {mu};
    return LocalField(std::move(s));
}

LocalField LocalField::make_cyclotomic(int64_t p, int precision) {
    // ((1+z)^p - 1)/z = sum_{i=0}^{p-1} binom(p, i+1) z^i
    FieldSpec s;
    s.p = p;
    s.f = 1;
    s.e = int(p) - 1;
    s.precision = precision;
    for (int i = 1; i <= int(p) - 2; ++i) {
        // binom(p, i+1)
        int64_t b = 1;
        for (int t = 0; t < i + 1; ++t) b = b * (p - t) / (t + 1);
        s.eisenstein_mid.push_back({b});
    }
    s.mu = {1};
    return LocalField(std::move(s));
}

} // namespace tcss

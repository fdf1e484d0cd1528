#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcss/local_field.hpp"
#include "tcss/rational.hpp"

namespace tcss {

enum class PageVariant { tp, tc_minus };

/* A first-page class: column 0 holds z^n sigma^j with filtration n/e, column 1
 * holds z0^{n-1} sigma^j dz with filtration (n-1)/e + 1. Coefficients live in
 * k; classes are tracked by leading term only. */
struct SSClass {
    int column = 0; // 0 or 1
    int j = 0;      // sigma-weight
    int64_t n = 0;  // z-exponent (column 1 stores the class with exponent n-1)
    FqElement coeff;
    Rational filtration;
};

struct Differential {
    int j = 0;
    int64_t source_n = 0;
    int64_t target_n = 0; // exponent parameter of the column-1 class (z0^{target_n - 1})
    Rational page;
    FqElement coeff;
    bool target_in_cap = true;
};

/* none when the class is a permanent cycle (n(p-1) = pej); otherwise the page,
 * target exponent parameter and leading coefficient of its differential. */
std::optional<Differential> differential_of(const LocalField& K, int64_t n, int j);

struct PageState {
    PageVariant variant = PageVariant::tp;
    int j = 0;
    int64_t n_cap = 0;
    Rational page;                   // current page; infinite once run
    std::vector<SSClass> live0;      // column 0, ordered by n
    std::vector<SSClass> live1;      // column 1
    std::vector<Differential> ledger;
};

PageState seed_page(const LocalField& K, int j, int64_t n_cap, PageVariant variant);
PageState run_to_infinity(const LocalField& K, PageState state);
std::vector<SSClass> einf_extract(const PageState& state, int column);

std::string page_to_json(const PageState& state);

} // namespace tcss

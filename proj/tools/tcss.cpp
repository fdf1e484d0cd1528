// Command line front end: parse a field description, run the requested
// computation, emit JSON or a table. Exit codes: 0 ok, 2 invalid field spec,
// 3 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "tcss/cobar.hpp"
#include "tcss/descent.hpp"
#include "tcss/pd.hpp"
#include "tcss/specseq.hpp"

using namespace tcss;

namespace {

LocalField load_field(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        std::exit(2);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return LocalField::parse_json(ss.str());
    } catch (const error& ex) {
        std::cerr << "invalid field spec: " << ex.what() << "\n";
        std::exit(2);
    }
}

struct GridEntry {
    int64_t p;
    int e, f;
    int64_t mu;
};

const std::vector<GridEntry> kGrid = {
    {2, 1, 1, 1}, {2, 3, 1, 1}, {2, 5, 1, 1}, {3, 1, 1, 1},
    {3, 2, 1, 1}, {3, 2, 2, 1}, {5, 4, 1, 1}, {5, 4, 1, 2},
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mod-p topological cyclic homology of p-adic local fields"};
    app.require_subcommand(1);
    app.fallthrough(); // allow the shared flags after a subcommand name

    std::string input, format = "table";
    int j_min = -3, j_max = 6;
    int64_t n_cap = 200;
    int degree_cap = 12;
    int kmax = 1;
    int precision = -1;
    int wcap = -1;

    app.add_option("--input", input, "field spec file (JSON)");
    app.add_option("--format", format, "output format: json|table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--j-min", j_min, "lowest sigma-weight");
    app.add_option("--j-max", j_max, "highest sigma-weight");
    app.add_option("--n-cap", n_cap, "z-exponent cap for page runs");
    app.add_option("--degree-cap", degree_cap, "internal degree cap (half degrees)");
    app.add_option("--kmax", kmax, "depth of the delta-recursion checks");
    app.add_option("--precision", precision, "p-adic working precision override");
    app.add_option("--wcap", wcap, "divided power weight cap override");

    auto* cmd_field = app.add_subcommand("field", "parse a field spec and print its invariants");
    auto* cmd_thh = app.add_subcommand("thh-e2", "mod-p THH page: closed form vs cobar cohomology");
    auto* cmd_ss = app.add_subcommand("ss", "spectral sequence pages and pairing ledger");
    auto* cmd_tce2 = app.add_subcommand("tc-e2", "structure of the mod-p TC page");
    auto* cmd_tc = app.add_subcommand("tc", "mod-p homotopy groups of TC over a degree window");
    auto* cmd_verify = app.add_subcommand("verify", "run every verification suite on the default grid");
    auto* cmd_hh = app.add_subcommand("hh-appendix", "Hochschild homology check for truncated polynomial rings");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_field->parsed()) {
            LocalField K = load_field(input);
            if (format == "json") {
                const auto& k = K.k();
                std::ostringstream os;
                os << "{\"schema\":\"tcss/1\",\"p\":" << K.p() << ",\"e\":" << K.e() << ",\"f\":" << K.f()
                   << ",\"d\":" << K.d() << ",\"mu_bar\":\"" << k.str(K.mu_bar()) << "\",\"mutilde_bar\":\""
                   << k.str(K.mutilde_bar()) << "\"}";
                std::cout << os.str() << "\n";
            } else {
                std::cout << K.describe();
            }
            return 0;
        }

        if (cmd_thh->parsed()) {
            LocalField K = load_field(input);
            auto res = thh_cobar_e2(K, degree_cap);
            if (format == "json") {
                std::cout << res.to_json() << "\n";
            } else {
                std::cout << "degree  H0  H1  H2  closed(H0,H1)\n";
                for (auto& r : res.rows)
                    std::cout << 2 * r.n << "\t" << r.dims[0] << "\t" << r.dims[1] << "\t" << r.dims[2]
                              << "\t(" << r.closed_row0 << "," << r.closed_row1 << ")\n";
                std::cout << (res.match() ? "closed form and cobar cohomology agree\n"
                                          : "MISMATCH between closed form and cobar cohomology\n");
            }
            return res.match() ? 0 : 3;
        }

        if (cmd_ss->parsed()) {
            LocalField K = load_field(input);
            bool first = true;
            std::cout << "[";
            for (int j = j_min; j <= j_max; ++j)
                for (auto variant : {PageVariant::tp, PageVariant::tc_minus}) {
                    PageState st = run_to_infinity(K, seed_page(K, j, n_cap, variant));
                    if (!first) std::cout << ",";
                    first = false;
                    std::cout << page_to_json(st);
                }
            std::cout << "]\n";
            return 0;
        }

        if (cmd_tce2->parsed()) {
            LocalField K = load_field(input);
            auto rep = tc_e2_inventory(K, degree_cap);
            std::cout << (format == "json" ? rep.to_json() + "\n" : rep.to_table());
            return rep.strata_consistent && rep.columns_even_ok ? 0 : 3;
        }

        if (cmd_tc->parsed()) {
            LocalField K = load_field(input);
            auto rep = tc_homotopy_groups(K, j_min < 0 ? j_min : -1, std::max(j_max, 2 * K.d() + 4));
            std::cout << (format == "json" ? rep.to_json() + "\n" : rep.to_table());
            return 0;
        }

        if (cmd_hh->parsed()) {
            LocalField K = load_field(input);
            auto res = hh_bar_appendix(K.p(), K.f(), K.e(), std::min(degree_cap, 8));
            std::cout << "degree  k-dim  A-rank\n";
            for (size_t m = 0; m < res.k_dims.size(); ++m)
                std::cout << m << "\t" << res.k_dims[m] << "\t" << res.a_ranks[m] << "\n";
            return 0;
        }

        if (cmd_verify->parsed()) {
            bool all_ok = true;
            for (const auto& g : kGrid) {
                LocalField K = LocalField::make_simple(g.p, g.e, g.f, g.mu, 6);
                std::ostringstream tag;
                tag << "(p=" << g.p << ",e=" << g.e << ",f=" << g.f << ",mu=" << g.mu << ")";

                auto rep = verify_section3(K, kmax, wcap, precision);
                bool ok1 = rep.all_pass();
                auto thh = thh_cobar_e2(K, degree_cap);
                bool ok2 = thh.match();
                auto hopf = hopf_axioms_check(CobarComplex::for_field(K, CobarFlavor::thh_mod_p),
                                              degree_cap);
                bool ok3 = hopf.ok();
                auto gr = gr_cobar_e2(g.p, g.e, g.f, degree_cap);
                bool ok4 = gr.match();
                auto cc = crosscheck_with_specseq(K, j_min, j_max, n_cap);
                bool ok5 = cc.ok;
                auto tce2 = tc_e2_inventory(K);
                bool ok6 = tce2.strata_consistent && tce2.columns_even_ok;

                bool ok = ok1 && ok2 && ok3 && ok4 && ok5 && ok6;
                all_ok &= ok;
                std::cout << tag.str() << " congruences=" << (ok1 ? "pass" : "FAIL")
                          << " thh=" << (ok2 ? "pass" : "FAIL") << " hopf=" << (ok3 ? "pass" : "FAIL")
                          << " graded=" << (ok4 ? "pass" : "FAIL") << " pages=" << (ok5 ? "pass" : "FAIL")
                          << " tc=" << (ok6 ? "pass" : "FAIL") << "\n";
                if (!ok1) std::cout << "  " << rep.to_json() << "\n";
                for (auto& m : cc.mismatches) std::cout << "  " << m << "\n";
            }
            std::cout << (all_ok ? "verification passed\n" : "verification FAILED\n");
            return all_ok ? 0 : 3;
        }
    } catch (const error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return ex.code() == errc::parse_error || ex.code() == errc::not_eisenstein ||
                       ex.code() == errc::bad_constant || ex.code() == errc::non_unit_leading ||
                       ex.code() == errc::non_prime || ex.code() == errc::reducible_modulus ||
                       ex.code() == errc::precision_too_low
                   ? 2
                   : 3;
    }
    return 0;
}

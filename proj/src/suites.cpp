#include "symnorm/suites.hpp"

#include "symnorm/tseries.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace symnorm {

namespace {

std::string param_str(std::initializer_list<std::pair<const char*, long>> kv) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) out << " ";
        out << k << "=" << v;
        first = false;
    }
    return out.str();
}

PolySeries series_partial(const PolySeries& s, int i) {
    PolySeries r = s;
    for (int k = 0; k <= s.order(); ++k) r.set_coeff(k, s.coeff(k).partial(i));
    return r;
}

} // namespace

std::vector<CheckResult> run_route_suite(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;

    // Degenerations: F_{k,1} = G_{k,0} = G_{k,1} = H_{k,1} = e_k.
    for (int n = 1; n <= cfg.g_nmax; ++n) {
        for (int k = 1; k <= cfg.g_kmax; ++k) {
            const MPoly ek = elementary(k, n);
            const bool pass = compute_F(k, 1, n) == ek &&
                              compute_G(k, 0, n, Route::GeneratingFunction) == ek &&
                              compute_G(k, 1, n, Route::CycleIndex) == ek &&
                              compute_H(k, 1, n, Route::BruteForce) == ek;
            out.push_back({"routes", "degeneration " + param_str({{"k", k}, {"n", n}}), pass,
                           pass ? "" : "mismatch with e_k"});
        }
    }

    for (int r = 0; r <= cfg.g_rmax; ++r)
        for (int k = 1; k <= cfg.g_kmax; ++k)
            for (int n = 1; n <= cfg.g_nmax; ++n) {
                const MPoly gf = compute_G(k, r, n, Route::GeneratingFunction);
                const MPoly ci = compute_G(k, r, n, Route::CycleIndex);
                const MPoly bf = compute_G(k, r, n, Route::BruteForce);
                const bool pass = gf == ci && ci == bf;
                out.push_back({"routes", "G " + param_str({{"k", k}, {"r", r}, {"n", n}}), pass,
                               pass ? "" : "route disagreement"});
            }

    for (int r = 1; r <= cfg.h_rmax; ++r)
        for (int k = 1; k <= cfg.h_kmax; ++k)
            for (int n = 1; n <= cfg.h_nmax; ++n) {
                const MPoly gf = compute_H(k, r, n, Route::GeneratingFunction);
                const MPoly ci = compute_H(k, r, n, Route::CycleIndex);
                bool pass = gf == ci;
                std::string detail = pass ? "" : "gf vs ci disagreement";
                if (pass && k * r <= cfg.h_bruteforce_cap) {
                    pass = ci == compute_H(k, r, n, Route::BruteForce);
                    if (!pass) detail = "brute-force disagreement";
                }
                out.push_back({"routes", "H " + param_str({{"k", k}, {"r", r}, {"n", n}}), pass,
                               detail});
            }

    // Lemma 5's three Z_k forms on random rational alpha.
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 9);
    for (int k = 1; k <= cfg.zk_kmax; ++k) {
        std::vector<Rat> alpha;
        for (int m = 0; m < k; ++m) alpha.emplace_back(num(rng), den(rng));
        const Rat a = zk_partition(alpha, k);
        const Rat b = zk_permutation_sum(alpha, k);
        const Rat c = zk_determinant(alpha, k);
        const bool pass = a == b && b == c;
        out.push_back({"routes", "Zk forms " + param_str({{"k", k}}), pass,
                       pass ? "" : a.str() + " / " + b.str() + " / " + c.str()});
    }
    return out;
}

RatMatrix random_rat_matrix(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    RatMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rat(num(rng), den(rng));
    return m;
}

Rat gauss_det(RatMatrix m) {
    const int n = m.dim();
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!m.at(row, col).is_zero()) { pivot = row; break; }
        if (pivot < 0) return Rat();
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        for (int row = col + 1; row < n; ++row) {
            if (m.at(row, col).is_zero()) continue;
            const Rat f = m.at(row, col) / m.at(col, col);
            for (int j = col; j < n; ++j) m.at(row, j) -= f * m.at(col, j);
        }
    }
    return det;
}

RatMatrix gauss_inverse(const RatMatrix& m) {
    const int n = m.dim();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!a.at(row, col).is_zero()) { pivot = row; break; }
        if (pivot < 0) throw std::domain_error("gauss_inverse: singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const Rat d = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || a.at(row, col).is_zero()) continue;
            const Rat f = a.at(row, col);
            for (int j = 0; j < n; ++j) {
                a.at(row, j) -= f * a.at(col, j);
                inv.at(row, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<CheckResult> run_matrix_suite(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(cfg.seed);

    for (int trial = 0; trial < cfg.matrix_trials; ++trial) {
        const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(cfg.matrix_nmax));
        const RatMatrix a = random_rat_matrix(n, rng);

        // r = 1 degenerations pin the sign conventions.
        {
            const Rat d = gauss_det(a);
            const bool pass = modified_det_G(a, 1) == d && modified_det_H(a, n, 1) == d;
            out.push_back({"matrix", "det degeneration " + param_str({{"trial", trial}, {"n", n}}),
                           pass, pass ? "" : "delta_1 or D_1 != det"});
        }

        bool pass = true;
        std::string detail;
        for (int r = 1; r <= 3 && pass; ++r)
            for (int k = 1; k <= 4 && pass; ++k) {
                const Rat via_traces = family_from_traces(Family::G, k, r, a);
                const Rat via_entries = family_from_entries(Family::G, k, r, a);
                if (via_traces != via_entries) {
                    pass = false;
                    detail = "G k=" + std::to_string(k) + " r=" + std::to_string(r) + ": " +
                             via_traces.str() + " vs " + via_entries.str();
                }
            }
        if (pass && n <= 3) {
            const Rat via_traces = family_from_traces(Family::H, 2, 2, a);
            const Rat via_entries = family_from_entries(Family::H, 2, 2, a);
            if (via_traces != via_entries) {
                pass = false;
                detail = "H k=2 r=2: " + via_traces.str() + " vs " + via_entries.str();
            }
        }
        out.push_back({"matrix", "entries vs traces " + param_str({{"trial", trial}, {"n", n}}),
                       pass, detail});
    }

    // Class-function reduction: full Gamma sum equals the multiset sum.
    {
        const RatMatrix a = random_rat_matrix(3, rng);
        bool pass = true;
        for (int r = 1; r <= 3 && pass; ++r)
            for (int k = 1; k <= 4 && pass; ++k)
                pass = family_from_entries_full(Family::G, k, r, a) ==
                       family_from_entries(Family::G, k, r, a);
        if (pass)
            pass = family_from_entries_full(Family::H, 2, 2, a) ==
                   family_from_entries(Family::H, 2, 2, a);
        out.push_back({"matrix", "class-function reduction", pass, ""});
    }

    // Similarity invariance of the trace route.
    {
        const RatMatrix a = random_rat_matrix(3, rng);
        RatMatrix p = random_rat_matrix(3, rng);
        while (gauss_det(p).is_zero()) p = random_rat_matrix(3, rng);
        const RatMatrix conj = p * a * gauss_inverse(p);
        bool pass = true;
        for (int k = 1; k <= 4 && pass; ++k)
            pass = family_from_traces(Family::G, k, 2, a) ==
                   family_from_traces(Family::G, k, 2, conj);
        pass = pass && family_from_traces(Family::H, 2, 2, a) ==
                           family_from_traces(Family::H, 2, 2, conj);
        out.push_back({"matrix", "similarity invariance", pass, ""});
    }

    // Triangular matrices: value equals the family at the diagonal.
    {
        RatMatrix a = random_rat_matrix(3, rng);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < i; ++j) a.at(i, j) = Rat();
        std::vector<Rat> diag;
        for (int i = 0; i < 3; ++i) diag.push_back(a.at(i, i));
        bool pass = true;
        for (int k = 1; k <= 4 && pass; ++k)
            for (int r = 1; r <= 3 && pass; ++r)
                pass = family_from_entries(Family::G, k, r, a) == G_value(k, r, diag);
        pass = pass && family_from_entries(Family::H, 2, 2, a) == H_value(2, 2, diag);
        out.push_back({"matrix", "triangular eigenvalues", pass, ""});
    }
    return out;
}

std::vector<CheckResult> run_mellin_suite(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    struct Case { Kernel kern; int r; double p; };
    const Case closed_cases[] = {
        {Kernel::Psi, 0, 0.5},  {Kernel::Psi, 1, 1.25}, {Kernel::Psi, 1, 1.5},
        {Kernel::Psi, 2, 2.5},  {Kernel::Psi, 2, 2.75}, {Kernel::Psi, 3, 3.25},
        {Kernel::Phi, 1, 1.5},  {Kernel::Phi, 2, 2.5},  {Kernel::Phi, 2, 3.0},
        {Kernel::Phi, 3, 4.5},
    };
    for (const Case& c : closed_cases) {
        const Quadrature q = mellin_constant(c.kern, c.r, c.p);
        const double want = mellin_constant_closed_form(c.kern, c.r, c.p);
        const double rel = std::abs(q.value - want) / std::abs(want);
        const bool pass = q.converged && rel < cfg.mellin_rel_tol && q.value > 0;
        std::ostringstream name;
        name << "C_p closed form " << (c.kern == Kernel::Psi ? "psi" : "phi") << " r=" << c.r
             << " p=" << c.p;
        out.push_back({"mellin", name.str(), pass, "rel_err=" + float17(rel)});
    }

    const double as[] = {0.5, 1.0, 2.0, 10.0};
    const Case rep_cases[] = {
        {Kernel::Psi, 1, 1.5}, {Kernel::Psi, 2, 2.5}, {Kernel::Phi, 2, 3.0}};
    for (const Case& c : rep_cases)
        for (double a : as) {
            const double rel = power_representation_rel_error(c.kern, c.r, a, c.p);
            const bool pass = rel < cfg.mellin_rel_tol;
            std::ostringstream name;
            name << "a^p representation " << (c.kern == Kernel::Psi ? "psi" : "phi")
                 << " r=" << c.r << " p=" << c.p << " a=" << a;
            out.push_back({"mellin", name.str(), pass, "rel_err=" + float17(rel)});
        }

    // Positivity of C_p on a grid inside each window.
    {
        bool pass = true;
        for (int r = 0; r <= 3 && pass; ++r)
            for (double f = 0.125; f < 1.0 && pass; f += 0.125)
                pass = mellin_constant(Kernel::Psi, r, r + f, 1e-6).value > 0;
        for (int r = 2; r <= 3 && pass; ++r)
            for (double f = 0.125; f < 1.0 && pass; f += 0.125)
                pass = mellin_constant(Kernel::Phi, r, r + f * r, 1e-6).value > 0;
        out.push_back({"mellin", "C_p positivity grid", pass, ""});
    }
    return out;
}

std::vector<CheckResult> run_positivity_suite(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;

    for (int r = 0; r <= cfg.g_rmax; ++r)
        for (int k = 1; k <= cfg.g_kmax; ++k)
            for (int n = 1; n <= cfg.g_nmax; ++n) {
                const auto rep = compute_G(k, r, n, Route::CycleIndex).coefficientwise_nonneg();
                out.push_back({"positivity", "G coeffs " + param_str({{"k", k}, {"r", r}, {"n", n}}),
                               rep.nonneg, rep.nonneg ? "" : "negative coefficient " +
                                                                rep.witness_coeff.str()});
            }
    for (int r = 1; r <= cfg.h_rmax; ++r)
        for (int k = 1; k <= cfg.h_kmax; ++k)
            for (int n = 1; n <= cfg.h_nmax; ++n) {
                const auto rep = compute_H(k, r, n, Route::CycleIndex).coefficientwise_nonneg();
                out.push_back({"positivity", "H coeffs " + param_str({{"k", k}, {"r", r}, {"n", n}}),
                               rep.nonneg, rep.nonneg ? "" : "negative coefficient " +
                                                                rep.witness_coeff.str()});
            }

    // gamma and delta: defining identity plus coefficientwise nonnegativity.
    const int K = cfg.gamma_order;
    for (int r = 1; r <= cfg.gamma_rmax; ++r)
        for (int n = 2; n <= cfg.gamma_nmax; ++n) {
            const int i = 1, j = 2;
            const MPoly xi_minus_xj =
                MPoly::variable(n, i, "x") - MPoly::variable(n, j, "x");

            const PolySeries g = g_series(r, n, K);
            const PolySeries lhs_g =
                (series_partial(g, i) - series_partial(g, j)).scaled(Rat(r % 2 == 0 ? 1 : -1));
            const PolySeries gamma = gamma_series(r, n, i, j, K);
            bool pass = true;
            bool nonneg = true;
            for (int k = 0; k <= K; ++k) {
                if (lhs_g.coeff(k) != xi_minus_xj * gamma.coeff(k)) pass = false;
                if (!gamma.coeff(k).coefficientwise_nonneg().nonneg) nonneg = false;
            }
            out.push_back({"positivity", "gamma identity " + param_str({{"r", r}, {"n", n}}),
                           pass, ""});
            out.push_back({"positivity", "gamma nonneg " + param_str({{"r", r}, {"n", n}}),
                           nonneg, ""});

            const PolySeries h = h_series(r, n, K);
            const PolySeries lhs_h = series_partial(h, i) - series_partial(h, j);
            const PolySeries delta = delta_series(r, n, i, j, K);
            pass = true;
            nonneg = true;
            for (int k = 0; k <= K; ++k) {
                if (lhs_h.coeff(k) != (-xi_minus_xj) * delta.coeff(k)) pass = false;
                if (!delta.coeff(k).coefficientwise_nonneg().nonneg) nonneg = false;
            }
            out.push_back({"positivity", "delta identity " + param_str({{"r", r}, {"n", n}}),
                           pass, ""});
            out.push_back({"positivity", "delta nonneg " + param_str({{"r", r}, {"n", n}}),
                           nonneg, ""});
        }
    return out;
}

std::vector<CheckResult> run_homomorphism_suite(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    for (int k = 1; k <= cfg.g_kmax; ++k) {
        // e_k in the p-basis is Z_k(p_1..p_k).
        std::function<MPoly(int)> pv = [k](int m) { return p_var(m, k); };
        std::vector<MPoly> ps;
        for (int m = 1; m <= k; ++m) ps.push_back(pv(m));
        const MPoly ek_p = zk_determinant(ps, k);

        for (int r = 0; r <= cfg.g_rmax; ++r) {
            AlphaSeq seq{Family::G, r};
            const MPoly phi_ek = ek_p.substitute(seq.values(k, k));
            const bool pass = phi_ek == compute_G_pbasis(k, r, Route::CycleIndex);
            out.push_back({"homomorphism", "phi(e_k)=G " + param_str({{"k", k}, {"r", r}}),
                           pass, ""});
        }
        for (int r = 1; r <= cfg.g_rmax; ++r) {
            AlphaSeq seq{Family::H, r};
            const MPoly psi_ek = ek_p.substitute(seq.values(k, k * r));
            const bool pass = psi_ek == compute_H_pbasis(k, r, Route::CycleIndex);
            out.push_back({"homomorphism", "psi(e_k)=H " + param_str({{"k", k}, {"r", r}}),
                           pass, ""});
        }
    }
    return out;
}

std::vector<CheckResult> run_schur_ostrowski_suite(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    for (Family fam : {Family::G, Family::H})
        for (int r = 1; r <= 3; ++r)
            for (int k = 1; k <= 4; ++k)
                for (int n = 2; n <= 4; ++n) {
                    const auto rep =
                        schur_ostrowski_check(fam, k, r, n, cfg.schur_ostrowski_samples,
                                              cfg.seed + static_cast<std::uint64_t>(
                                                  ((k * 5 + r) * 5 + n) * 2 +
                                                  (fam == Family::H ? 1 : 0)));
                    const bool pass = rep.violations == 0;
                    out.push_back({"schur-ostrowski",
                                   std::string(family_name(fam)) + " " +
                                       param_str({{"k", k}, {"r", r}, {"n", n}}),
                                   pass, pass ? "" : rep.first_violation});
                }
    return out;
}

std::vector<CheckResult> run_verify_suites(const VerifyConfig& cfg,
                                           const std::vector<std::string>& selection) {
    auto selected = [&](const char* name) {
        return selection.empty() ||
               std::find(selection.begin(), selection.end(), name) != selection.end();
    };
    std::vector<CheckResult> all;
    auto append = [&all](std::vector<CheckResult> v) {
        for (auto& c : v) all.push_back(std::move(c));
    };
    if (selected("routes")) append(run_route_suite(cfg));
    if (selected("matrix")) append(run_matrix_suite(cfg));
    if (selected("mellin")) append(run_mellin_suite(cfg));
    if (selected("positivity")) append(run_positivity_suite(cfg));
    if (selected("homomorphism")) append(run_homomorphism_suite(cfg));
    if (selected("schur-ostrowski")) append(run_schur_ostrowski_suite(cfg));
    return all;
}

std::vector<SchurExploreRow> explore_schur(Family fam, int k_max, int r_max, int degree_cap) {
    std::vector<SchurExploreRow> rows;
    const int r_lo = fam == Family::H ? 1 : 0;
    for (int k = 1; k <= k_max; ++k)
        for (int r = r_lo; r <= r_max; ++r) {
            const MPoly f = fam == Family::H ? compute_H_pbasis(k, r, Route::CycleIndex)
                                             : compute_G_pbasis(k, r, Route::CycleIndex);
            for (const SchurTerm& t : schur_expand(f, degree_cap))
                rows.push_back(SchurExploreRow{fam, k, r, t.lambda, t.coeff});
        }
    return rows;
}

// --- report rendering ---

std::string float17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

using json = nlohmann::ordered_json;

static json config_json(const VerifyConfig& cfg) {
    return json{{"seed", cfg.seed},
                {"g_kmax", cfg.g_kmax},
                {"g_rmax", cfg.g_rmax},
                {"g_nmax", cfg.g_nmax},
                {"h_kmax", cfg.h_kmax},
                {"h_rmax", cfg.h_rmax},
                {"h_nmax", cfg.h_nmax},
                {"h_bruteforce_cap", cfg.h_bruteforce_cap},
                {"zk_kmax", cfg.zk_kmax},
                {"matrix_trials", cfg.matrix_trials},
                {"matrix_nmax", cfg.matrix_nmax},
                {"gamma_rmax", cfg.gamma_rmax},
                {"gamma_nmax", cfg.gamma_nmax},
                {"gamma_order", cfg.gamma_order},
                {"schur_ostrowski_samples", cfg.schur_ostrowski_samples},
                {"mellin_rel_tol", float17(cfg.mellin_rel_tol)}};
}

std::string verify_report_json(const VerifyConfig& cfg, const std::vector<CheckResult>& results) {
    json checks = json::array();
    int passed = 0;
    for (const CheckResult& c : results) {
        checks.push_back(json{{"suite", c.suite}, {"name", c.name}, {"pass", c.pass},
                              {"detail", c.detail}});
        if (c.pass) ++passed;
    }
    json doc{{"schema", "1"},
             {"command", "verify"},
             {"config", config_json(cfg)},
             {"checks", checks},
             {"summary", json{{"total", results.size()},
                              {"passed", passed},
                              {"failed", results.size() - static_cast<std::size_t>(passed)}}}};
    return doc.dump(2) + "\n";
}

std::string verify_report_csv(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    out << "suite,name,pass,detail\n";
    for (const CheckResult& c : results)
        out << c.suite << "," << '"' << c.name << '"' << "," << (c.pass ? "1" : "0") << ","
            << '"' << c.detail << '"' << "\n";
    return out.str();
}

std::string fuzz_report_json(const std::vector<FuzzReport>& reports, std::uint64_t seed,
                             const TheoremOptions& opt) {
    json arr = json::array();
    for (const FuzzReport& r : reports) {
        arr.push_back(json{{"family", theorem_family_name(r.family)},
                           {"r", r.r},
                           {"n", r.n},
                           {"pairs", r.pairs},
                           {"hypothesis_satisfied", r.hypothesis_satisfied},
                           {"counterexamples", r.counterexamples},
                           {"min_margin", float17(r.min_margin)},
                           {"max_margin", float17(r.max_margin)},
                           {"k_max_used", r.k_max_used},
                           {"first_failure", r.first_failure}});
    }
    json doc{{"schema", "1"},
             {"command", "fuzz"},
             {"seed", seed},
             {"grid_step", float17(opt.grid_step)},
             {"rel_tol", float17(opt.rel_tol)},
             {"k_max", opt.k_max},
             {"reports", arr}};
    return doc.dump(2) + "\n";
}

std::string fuzz_report_csv(const std::vector<FuzzReport>& reports) {
    std::ostringstream out;
    out << "family,r,n,pairs,hypothesis_satisfied,counterexamples,min_margin,max_margin,k_max_used\n";
    for (const FuzzReport& r : reports)
        out << theorem_family_name(r.family) << "," << r.r << "," << r.n << "," << r.pairs << ","
            << r.hypothesis_satisfied << "," << r.counterexamples << "," << float17(r.min_margin)
            << "," << float17(r.max_margin) << "," << r.k_max_used << "\n";
    return out.str();
}

std::string explore_report_json(const std::vector<SchurExploreRow>& rows) {
    json arr = json::array();
    bool any_negative = false;
    for (const SchurExploreRow& r : rows) {
        const int sgn = r.coeff.sign();
        if (sgn < 0) any_negative = true;
        arr.push_back(json{{"family", family_name(r.family)},
                           {"k", r.k},
                           {"r", r.r},
                           {"lambda", r.lambda.str()},
                           {"coeff", r.coeff.str()},
                           {"sign", sgn}});
    }
    json doc{{"schema", "1"},
             {"command", "explore-schur"},
             {"note", "evidence, not proof"},
             {"any_negative_coefficient", any_negative},
             {"rows", arr}};
    return doc.dump(2) + "\n";
}

std::string explore_report_csv(const std::vector<SchurExploreRow>& rows) {
    std::ostringstream out;
    out << "family,k,r,lambda,coeff,sign\n";
    for (const SchurExploreRow& r : rows)
        out << family_name(r.family) << "," << r.k << "," << r.r << "," << '"' << r.lambda.str()
            << '"' << "," << r.coeff.str() << "," << r.coeff.sign() << "\n";
    return out.str();
}

} // namespace symnorm

// Command-line front door: exact Hurwitz numbers, intersection numbers,
// series output and the verification suites.  Every surfaced number is an
// exact rational string; --json output is byte-identical across runs.
//
// Exit codes: 0 success / verified, 1 usage error, 2 verification failure.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hkdv/intersect.hpp"
#include "hkdv/io.hpp"
#include "hkdv/kp_kdv.hpp"
#include "hkdv/sato.hpp"

using namespace hkdv;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

std::vector<long> parse_long_list(const std::string& s, const char* what) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw CLI::ValidationError(what, "malformed integer list");
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError(what, "empty list");
    return out;
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

struct VerifyLine {
    bool pass;
    std::string text;
};

int finish_verify(const std::string& name, const std::vector<VerifyLine>& lines, bool as_json) {
    bool all = true;
    for (const auto& l : lines) all = all && l.pass;
    if (as_json) {
        json checks = json::array();
        for (const auto& l : lines) checks.push_back({{"pass", l.pass}, {"what", l.text}});
        json out{{"command", "verify"}, {"check", name}, {"pass", all}, {"subchecks", checks}};
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& l : lines)
            std::printf("%s %s\n", l.pass ? "PASS" : "FAIL", l.text.c_str());
    }
    return all ? kExitOk : kExitVerifyFailed;
}

std::string entry_str(const LaurentEntry& e) {
    return t_mono_str(e.t) + " * beta^(" + std::to_string(e.thirds) + "/3) = " + rat_str(e.value);
}

// Derived substitution parameters for a reporting window (degree <= D_deg,
// index sum <= S): the engine must cover p-weight S + D_deg and the Taylor
// order must determine every beta^0 slice.
SubstitutionPlan plan_for_window(long max_deg, long max_wt, long extra_thirds = 0) {
    long taylor = (5 * max_wt + 4 * max_deg + extra_thirds + 2) / 3 + 1;
    return SubstitutionPlan{max_wt, taylor, LaurentCaps{max_deg, max_wt, max_wt}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hkdv: exact Hurwitz numbers, psi-class intersection numbers, and the\n"
        "KP/KdV verification pipeline (all arithmetic is exact rational)"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output (stable schema, sorted keys)");

    long ceiling_weight = 12;
    long ceiling_degree = 8;
    app.add_option("--ceiling-weight", ceiling_weight, "desk-scale ceiling for weight bounds")
        ->capture_default_str();
    app.add_option("--ceiling-degree", ceiling_degree, "desk-scale ceiling for t-degree bounds")
        ->capture_default_str();

    // --- hurwitz -------------------------------------------------------------
    auto* cmd_hurwitz = app.add_subcommand("hurwitz", "h_{g;b_1,...,b_n}, exact");
    long genus = 0;
    std::string profile_str;
    bool use_oracle = false;
    cmd_hurwitz->add_option("--genus", genus, "genus g >= 0")->required();
    cmd_hurwitz->add_option("--profile", profile_str, "ramification profile b1,b2,...")->required();
    cmd_hurwitz->add_flag("--oracle", use_oracle,
                          "use the brute-force factorization oracle (B <= 6, m <= 8)");

    // --- intersect -------------------------------------------------------------
    auto* cmd_intersect = app.add_subcommand("intersect", "<tau_{d_1}...tau_{d_n}>, exact");
    std::string ds_str;
    cmd_intersect->add_option("--ds", ds_str, "indices d1,d2,...")->required();

    // --- f-series ---------------------------------------------------------------
    auto* cmd_fseries = app.add_subcommand("f-series", "F truncated to a degree/weight window");
    long f_deg = 4, f_wt = 4;
    cmd_fseries->add_option("--max-degree", f_deg, "max number of t factors")->capture_default_str();
    cmd_fseries->add_option("--max-weight", f_wt, "max sum of t indices")->capture_default_str();

    // --- h-series ---------------------------------------------------------------
    auto* cmd_hseries = app.add_subcommand("h-series", "H with exact exponential-sum coefficients");
    long h_weight = 4;
    cmd_hseries->add_option("--weight", h_weight, "p-weight bound W")->capture_default_str();

    // --- verify -----------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string check;
    cmd_verify
        ->add_option("check", check, "which identity to verify")
        ->required()
        ->check(CLI::IsMember({"kp", "cutjoin", "eigen", "theorem2", "prekdv", "kdv", "lk",
                               "sato", "kp-random"}));
    long v_weight = -1, v_deg = -1, v_wt = -1, v_cutoff = -1, v_seeds = 50, v_order = 8;
    cmd_verify->add_option("--weight", v_weight, "p-weight bound");
    cmd_verify->add_option("--max-degree", v_deg, "t-degree window");
    cmd_verify->add_option("--max-weight", v_wt, "t-index-sum window");
    cmd_verify->add_option("--cutoff", v_cutoff, "wedge-basis cutoff N");
    long v_seed_base = 1;
    cmd_verify->add_option("--seeds", v_seeds, "number of random-basis seeds")->capture_default_str();
    cmd_verify->add_option("--seed", v_seed_base, "first random-basis seed")->capture_default_str();
    cmd_verify->add_option("--max-d", v_order, "largest d for the lk identity")->capture_default_str();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_hurwitz) {
            HurwitzIndex idx(genus, parse_long_list(profile_str, "--profile"));
            if (idx.B() > ceiling_weight) {
                std::cerr << "profile weight " << idx.B() << " exceeds --ceiling-weight "
                          << ceiling_weight << "\n";
                return kExitUsage;
            }
            Rat v = use_oracle ? hurwitz_oracle(idx) : hurwitz_number(h_series(idx.B()), idx);
            json out{{"command", "hurwitz"},
                     {"params",
                      {{"genus", genus}, {"profile", profile_str}, {"oracle", use_oracle}}},
                     {"value", rat_str(v)}};
            emit(out, as_json, rat_str(v));
            return kExitOk;
        }

        if (*cmd_intersect) {
            TauIndex idx(parse_long_list(ds_str, "--ds"));
            if (idx.required_weight() > ceiling_weight) {
                std::cerr << "required Hurwitz weight " << idx.required_weight()
                          << " exceeds --ceiling-weight " << ceiling_weight << "\n";
                return kExitUsage;
            }
            HurwitzCache cache;
            Rat v = tau_intersection(idx, cache);
            json out{{"command", "intersect"},
                     {"params", {{"ds", ds_str}, {"genus", idx.genus()}}},
                     {"value", rat_str(v)}};
            emit(out, as_json,
                 rat_str(v) + "    (genus " + std::to_string(idx.genus()) + ")");
            return kExitOk;
        }

        if (*cmd_fseries) {
            if (f_deg > ceiling_degree || f_wt + f_deg > ceiling_weight) {
                std::cerr << "window exceeds desk-scale ceilings (see --ceiling-*)\n";
                return kExitUsage;
            }
            HurwitzCache cache;
            FSeries F = f_series(f_deg, f_wt, cache);
            json out{{"command", "f-series"},
                     {"params", {{"max_degree", f_deg}, {"max_weight", f_wt}}},
                     {"series", tpoly_json(F.poly)}};
            std::string text;
            for (const auto& [m, c] : F.poly.terms())
                text += t_mono_str(m) + " : " + rat_str(c) + "\n";
            if (!text.empty()) text.pop_back();
            emit(out, as_json, text);
            return kExitOk;
        }

        if (*cmd_hseries) {
            if (h_weight > ceiling_weight) {
                std::cerr << "weight exceeds --ceiling-weight\n";
                return kExitUsage;
            }
            ESeries h = h_series(h_weight);
            json rows = json::array();
            std::string text;
            for (const auto& [m, c] : h.terms()) {
                rows.push_back({{"monomial", p_mono_str(m)}, {"coeff", exppoly_json(c)}});
                text += p_mono_str(m) + " : " + c.str() + "\n";
            }
            if (!text.empty()) text.pop_back();
            json out{{"command", "h-series"}, {"params", {{"weight", h_weight}}}, {"series", rows}};
            emit(out, as_json, text);
            return kExitOk;
        }

        if (*cmd_verify) {
            std::vector<VerifyLine> lines;

            if (check == "kp") {
                long W = v_weight > 0 ? v_weight : 8;
                ESeries r = kp_residual(W);
                std::string what = "KP residual on H at W=" + std::to_string(W) +
                                   ": all monomials of weight <= " + std::to_string(r.bound());
                if (r.is_zero())
                    lines.push_back({true, what + " are exactly zero"});
                else
                    lines.push_back({false, what + "; first nonzero at " +
                                                p_mono_str(r.terms().begin()->first) + " = " +
                                                r.terms().begin()->second.str()});
            } else if (check == "cutjoin") {
                long W = v_weight > 0 ? v_weight : 8;
                ESeries tau = tau_hurwitz(W);
                ESeries dtau(tau.bound());
                for (const auto& [m, c] : tau.terms()) dtau.add_term(m, c.d_beta());
                ESeries diff = dtau - cut_and_join(tau);
                lines.push_back({diff.is_zero(),
                                 "d/dbeta e^H - A e^H = 0 exactly at W=" + std::to_string(W)});
            } else if (check == "eigen") {
                long W = v_weight > 0 ? v_weight : 8;
                bool ok = true;
                std::string bad;
                for (const auto& lambda : partitions_up_to(W)) {
                    RSeries s = schur_polynomial(lambda, W);
                    if (!(cut_and_join(s) == s.scaled(Rat(f_lambda(lambda))))) {
                        ok = false;
                        if (bad.empty()) bad = lambda.str();
                    }
                }
                lines.push_back({ok, "A s_lambda = f(lambda) s_lambda for all |lambda| <= " +
                                         std::to_string(W) +
                                         (ok ? "" : "; fails at (" + bad + ")")});
            } else if (check == "theorem2") {
                long D = v_deg > 0 ? v_deg : 3;
                long S = v_wt >= 0 ? v_wt : 3;
                if (S + D > ceiling_weight) {
                    std::cerr << "window needs Hurwitz weight " << S + D
                              << " beyond --ceiling-weight\n";
                    return kExitUsage;
                }
                SubstitutionPlan plan = plan_for_window(D, S);
                TrackedLaurent G = g_stable(h_stable(S + D), plan);
                NegativePart neg = negative_beta_part(G);
                lines.push_back(
                    {neg.entries.empty(),
                     "no negative beta powers over " + std::to_string(neg.slots) +
                         " determined negative slots (t-degree <= " + std::to_string(D) +
                         ", index sum <= " + std::to_string(S) + ")" +
                         (neg.entries.empty() ? "" : "; first: " + entry_str(neg.entries[0]))});
                BetaZeroSlice slice = beta_zero_part(G);
                HurwitzCache cache;
                FSeries F = f_series(D, S, cache);
                bool match = true;
                std::string bad;
                long compared = 0;
                for (const auto& t : slice.covered) {
                    if (t.degree() == 0) continue;
                    ++compared;
                    if (slice.poly.coeff(t) != F.poly.coeff(t)) {
                        match = false;
                        if (bad.empty()) bad = t_mono_str(t);
                    }
                }
                lines.push_back({match, "beta^0 slice equals F on " + std::to_string(compared) +
                                            " determined monomials" +
                                            (match ? "" : "; first mismatch at " + bad)});
            } else if (check == "prekdv") {
                long D = v_deg > 0 ? v_deg : 5;
                long S = v_wt >= 0 ? v_wt : 4;
                if (S + D > ceiling_weight) {
                    std::cerr << "window needs Hurwitz weight " << S + D
                              << " beyond --ceiling-weight\n";
                    return kExitUsage;
                }
                SubstitutionPlan plan = plan_for_window(D, S, 2);
                TrackedLaurent G = g_stable(h_stable(S + D), plan);
                LaurentScan scan = first_nonzero(pre_kdv_residual(G));
                lines.push_back({!scan.offender.has_value(),
                                 "preKdV residual zero on " + std::to_string(scan.slots) +
                                     " determined slots" +
                                     (scan.offender ? "; first nonzero " + entry_str(*scan.offender)
                                                    : "")});
            } else if (check == "kdv") {
                long D = v_deg > 0 ? v_deg : 5;
                long S = v_wt >= 0 ? v_wt : 4;
                if (S + D > ceiling_weight) {
                    std::cerr << "window needs Hurwitz weight up to " << S + D
                              << " beyond --ceiling-weight\n";
                    return kExitUsage;
                }
                HurwitzCache cache;
                FSeries F = f_series(D, S, cache);
                KdvReport rep = kdv_residual(F.poly, D, S);
                std::string what = "KdV residual zero on " +
                                   std::to_string(rep.determined.size()) +
                                   " fully-determined monomials (F degree <= " +
                                   std::to_string(D) + ", weight <= " + std::to_string(S) + ")";
                if (rep.residual.is_zero())
                    lines.push_back({true, what});
                else
                    lines.push_back({false, what + "; first nonzero at " +
                                                t_mono_str(rep.residual.terms().begin()->first) +
                                                " = " +
                                                rat_str(rep.residual.terms().begin()->second)});
            } else if (check == "lk") {
                bool ok = true;
                std::string bad;
                for (long d = 0; d <= v_order; ++d) {
                    auto r = lk_residual(d, d + 2);
                    for (long i = 0; i <= d; ++i)
                        if (r[static_cast<size_t>(i)] != Rat(0)) {
                            ok = false;
                            if (bad.empty()) bad = "d=" + std::to_string(d);
                        }
                }
                lines.push_back({ok, "sum_b c_b^d/(1-b psi) = psi^d + O(psi^{d+1}) for d <= " +
                                         std::to_string(v_order) + (ok ? "" : "; fails at " + bad)});
            } else if (check == "sato") {
                long W = v_weight > 0 ? v_weight : 5;
                long N = v_cutoff > 0 ? v_cutoff : W + 2;
                auto make = [&](long cutoff) { return phi_basis(cutoff, 1 - W); };
                bool ok = false;
                std::string msg;
                try {
                    ESeries tau = tau_stabilized<ExpPoly>(make, N, W);
                    ok = tau == tau_hurwitz(W);
                    msg = "phi-basis tau equals e^H at weight <= " + std::to_string(W) +
                          " (stabilized at N=" + std::to_string(N) + ")";
                } catch (const std::exception& e) {
                    msg = std::string("stabilization failed: ") + e.what();
                }
                lines.push_back({ok, msg});
            } else if (check == "kp-random") {
                long W = v_weight > 0 ? v_weight : 5;
                long N = v_cutoff > 0 ? v_cutoff : W + 2;
                int passed = 0;
                std::string bad;
                for (long seed = v_seed_base; seed < v_seed_base + v_seeds; ++seed) {
                    auto rep = random_basis_kp_check(static_cast<std::uint64_t>(seed), N, W);
                    if (rep.pass)
                        ++passed;
                    else if (bad.empty())
                        bad = "seed " + std::to_string(seed) +
                              (rep.offender ? " at " + p_mono_str(*rep.offender) : "");
                }
                lines.push_back(
                    {passed == v_seeds,
                     std::to_string(passed) + "/" + std::to_string(v_seeds) +
                         " random bases give zero KP residual (weight <= " + std::to_string(W) +
                         ", residual determined to weight " + std::to_string(W - 4) + ")" +
                         (bad.empty() ? "" : "; first failure: " + bad)});
            } else {
                std::cerr << "unknown verify check '" << check
                          << "'; expected kp|cutjoin|eigen|theorem2|prekdv|kdv|lk|sato|kp-random\n";
                return kExitUsage;
            }
            return finish_verify(check, lines, as_json);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "wha/catalog.hpp"
#include "wha/classify.hpp"
#include "wha/findim.hpp"
#include "wha/isomap.hpp"
#include "wha/repro.hpp"

namespace {

std::string iso_timestamp()
{
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        f << text;
    }
}

int finish(const std::vector<wha::CheckResult>& results, const std::string& command,
           const std::string& config, unsigned long long seed, const std::string& format,
           const std::string& out_path, bool timings)
{
    if (format == "json")
        emit(wha::render_json(results, command, config, seed, timings, iso_timestamp()),
             out_path);
    else
        emit(wha::render_text(results), out_path);
    return wha::all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"wha - symbolic workbench for weak Hopf algebra presentations"};
    app.require_subcommand(1);
    std::string format = "text", out_path;
    bool timings = false;
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write the report to a file");
    app.add_flag("--timings", timings, "include elapsed_ms fields in JSON output");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "orbit classification of the mixtures");
    int cls_n = 3;
    bool list_orbits = false, census = false;
    classify_cmd->add_option("--n", cls_n, "rank parameter n >= 2")->required();
    classify_cmd->add_flag("--list-orbits", list_orbits, "list every orbit");
    classify_cmd->add_flag("--census", census, "include the degenerate-case census");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "axiom suite for one algebra");
    std::string algebra = "wsl:2:3", checks = "all";
    unsigned long long seed = 20240101ULL;
    int samples = 10;
    bool dump_presentation = false;
    verify_cmd->add_option("--algebra", algebra, "wsl:<n>:<d>, uqsl:<n>, sweedler:H|H1|H2")
        ->required();
    verify_cmd->add_option("--checks", checks, "all, bialgebra, or weak-antipode")
        ->check(CLI::IsMember({"all", "bialgebra", "weak-antipode"}));
    verify_cmd->add_option("--seed", seed, "seed for sampled monomials");
    verify_cmd->add_option("--samples", samples, "number of degree-2 sample monomials");
    verify_cmd->add_flag("--dump-presentation", dump_presentation,
                         "print the defining relations before the report");

    // sweedler
    auto* sweedler_cmd = app.add_subcommand("sweedler", "finite-dimensional checks");
    std::string build = "H1", sverify = "rmatrix,embedding,split", alpha = "symbolic";
    sweedler_cmd->add_option("--build", build, "H, H1 or H2")
        ->check(CLI::IsMember({"H", "H1", "H2"}));
    sweedler_cmd->add_option("--verify", sverify, "comma list of rmatrix,embedding,split");
    sweedler_cmd->add_option("--alpha", alpha, "symbolic or a rational value p/q");

    // isocheck
    auto* iso_cmd = app.add_subcommand("isocheck", "isomorphism checks");
    std::string map_kind = "omega";
    int iso_n = 2;
    long iso_d = 1;
    bool weak_hopf = false, noncoassoc = false;
    iso_cmd->add_option("--map", map_kind, "rho, omega, sec5-psi or slice")
        ->check(CLI::IsMember({"rho", "omega", "sec5-psi", "slice"}));
    iso_cmd->add_option("--n", iso_n, "rank parameter");
    iso_cmd->add_option("--d", iso_d, "mixture index");
    iso_cmd->add_flag("--weak-hopf", weak_hopf, "also run the weak Hopf isomorphism conditions");
    iso_cmd->add_flag("--witness-noncoassoc", noncoassoc,
                      "search for a coassociativity defect of the induced coproduct");

    // repro
    auto* repro_cmd = app.add_subcommand("repro", "run the full reproduction suite");
    unsigned long long repro_seed = 20240101ULL;
    repro_cmd->add_option("--seed", repro_seed, "seed for sampled checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*classify_cmd) {
            auto rep = wha::classify::enumerate_orbits(cls_n);
            long closed = wha::classify::z_closed(cls_n);
            if (format == "json") {
                nlohmann::ordered_json doc;
                doc["schema"] = 1;
                doc["command"] = "classify";
                doc["n"] = cls_n;
                doc["count"] = rep.count;
                doc["closed_form"] = closed;
                doc["methods_agree"] = rep.count == closed;
                if (list_orbits)
                    doc["orbits"] = rep.orbits;
                if (census) {
                    doc["census"] = {{"case1_w_fixed", rep.census.case1},
                                     {"case2_r_fixed", rep.census.case2},
                                     {"case3_r_equals_w", rep.census.case3},
                                     {"triple_intersection", rep.census.triple},
                                     {"union", rep.census.union_count},
                                     {"complement", rep.census.complement}};
                }
                doc["timestamp"] = iso_timestamp();
                emit(doc.dump(2) + "\n", out_path);
            } else {
                std::ostringstream t;
                t << "n = " << cls_n << ": " << rep.count
                  << " non-isomorphic structures (closed form " << closed << ")\n";
                if (list_orbits) {
                    for (const auto& orb : rep.orbits) {
                        t << "  {";
                        for (size_t i = 0; i < orb.size(); ++i)
                            t << (i ? "," : "") << orb[i];
                        t << "}\n";
                    }
                }
                if (census) {
                    t << "  census: w-fixed " << rep.census.case1 << ", r-fixed "
                      << rep.census.case2 << ", r=w " << rep.census.case3 << ", triple "
                      << rep.census.triple << ", full orbits " << rep.census.complement << "\n";
                }
                emit(t.str(), out_path);
            }
            return rep.count == closed ? 0 : 1;
        }

        if (*verify_cmd) {
            auto p = wha::get_presentation(algebra);
            if (dump_presentation)
                std::cout << p->relations_text();
            wha::AxiomCheckOptions opts;
            opts.seed = seed;
            opts.samples = samples;
            opts.bialgebra = checks != "weak-antipode";
            opts.antipode = checks != "bialgebra";
            auto results = wha::verify_axioms(*p, opts);
            return finish(results, "verify", algebra + " checks=" + checks, seed, format,
                          out_path, timings);
        }

        if (*sweedler_cmd) {
            std::vector<wha::CheckResult> results;
            bool do_rmatrix = sverify.find("rmatrix") != std::string::npos;
            bool do_embed = sverify.find("embedding") != std::string::npos;
            bool do_split = sverify.find("split") != std::string::npos;
            if (do_split) {
                auto subs = wha::verify_sweedler_suite();
                results.insert(results.end(), subs.begin(), subs.end());
            }
            if (do_rmatrix) {
                wha::Scalar a = alpha == "symbolic"
                                    ? wha::Scalar::variable('a')
                                    : wha::Scalar(wha::parse_rational(alpha));
                auto subs = wha::verify_rmatrix(a);
                results.insert(results.end(), subs.begin(), subs.end());
            }
            if (do_embed) {
                auto subs = wha::verify_embedded_sweedler();
                results.insert(results.end(), subs.begin(), subs.end());
            }
            return finish(results, "sweedler", build + " verify=" + sverify + " alpha=" + alpha,
                          0, format, out_path, timings);
        }

        if (*iso_cmd) {
            std::vector<wha::CheckResult> results;
            if (map_kind == "rho" || map_kind == "omega") {
                wha::GenMap m = map_kind == "rho" ? wha::rho_lift(iso_n, iso_d)
                                                  : wha::omega_lift(iso_n, iso_d);
                long dt = map_kind == "rho" ? wha::classify::r_map(iso_n, iso_d)
                                            : wha::classify::w_map(iso_n, iso_d);
                wha::GenMap inv = map_kind == "rho" ? wha::rho_lift(iso_n, dt)
                                                    : wha::omega_lift(iso_n, dt);
                auto h = wha::check_algebra_hom(m);
                results.insert(results.end(), h.begin(), h.end());
                auto r = wha::check_inverse_pair(m, inv);
                results.insert(results.end(), r.begin(), r.end());
                if (weak_hopf) {
                    auto wk = wha::check_weak_hopf_iso(m);
                    results.insert(results.end(), wk.begin(), wk.end());
                }
            } else if (map_kind == "sec5-psi") {
                wha::GenMap psi = wha::decomposition_psi();
                wha::GenMap inv = wha::decomposition_psi_inverse();
                auto h = wha::check_algebra_hom(psi);
                results.insert(results.end(), h.begin(), h.end());
                auto h2 = wha::check_algebra_hom(inv);
                results.insert(results.end(), h2.begin(), h2.end());
                auto r = wha::check_inverse_pair(psi, inv);
                results.insert(results.end(), r.begin(), r.end());
                if (noncoassoc)
                    results.push_back(wha::witness_noncoassoc(psi, inv, true));
            } else { // slice
                auto classical = wha::get_presentation("uqsl:" + std::to_string(iso_n));
                auto weak = wha::get_presentation("wsl:" + std::to_string(iso_n) + ":" +
                                                  std::to_string(iso_d));
                results = wha::check_slice_iso(*classical, *weak);
            }
            std::string cfg = map_kind + " n=" + std::to_string(iso_n) +
                              " d=" + std::to_string(iso_d);
            return finish(results, "isocheck", cfg, 0, format, out_path, timings);
        }

        if (*repro_cmd) {
            wha::ReproOptions opts;
            opts.seed = repro_seed;
            auto results = wha::run_repro(opts);
            return finish(results, "repro", "full suite", repro_seed, format, out_path, timings);
        }
    } catch (const wha::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

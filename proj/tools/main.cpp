// Command-line front door: table emission, verification suites, and
// property-test campaigns with deterministic seeds.
//
// Exit codes: 0 all checks passed, 1 verification failure (JSON failure dump
// to stderr or --out), 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sumcat/json_io.hpp"
#include "sumcat/lattice_voa.hpp"
#include "sumcat/monoidal.hpp"

using namespace sumcat;

namespace {

struct Session {
    std::vector<CheckReport> reports;
    std::string out_path;

    void add(CheckReport r) { reports.push_back(std::move(r)); }

    int finish() {
        std::ostringstream os;
        bool ok = true;
        for (const auto& r : reports) {
            ok = ok && r.passed();
            os << (r.passed() ? "PASS" : "FAIL") << " " << r.check << " [" << r.mode << "] tuples="
               << r.tuples_checked << " failures=" << r.failures.size() << "\n";
            for (const auto& note : r.notes) os << "  note: " << note << "\n";
        }
        os << (ok ? "all checks passed" : "verification FAILED") << "\n";
        std::cout << os.str();
        if (!ok) {
            nlohmann::json dump = nlohmann::json::array();
            for (const auto& r : reports)
                if (!r.passed()) dump.push_back(r.to_json());
            std::string payload = dump.dump(2) + "\n";
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                f << payload;
            } else {
                std::cerr << payload;
            }
        }
        return ok ? 0 : 1;
    }
};

std::string default_out_dir() {
    const char* env = std::getenv("SUMCAT_OUT_DIR");
    return env ? env : ".";
}

int run_tables(int64_t N, const std::string& format, std::string out) {
    Rep0Tables t = rep0_tables(N);
    if (format == "csv") {
        std::string dir = out.empty() ? default_out_dir() : out;
        for (const auto& [name, text] : tables_to_csv(t)) {
            std::string path = dir + "/" + name;
            std::ofstream f(path);
            if (!f) {
                std::cerr << "cannot write " << path << "\n";
                return 2;
            }
            f << text;
            std::cout << "wrote " << path << "\n";
        }
        return 0;
    }
    std::string payload = format == "md" ? tables_to_markdown(t) : tables_to_json(t);
    if (out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "cannot write " << out << "\n";
            return 2;
        }
        f << payload;
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

void run_base_axioms(Session& s, const PointedData& data, const Scope& scope, const std::string& axiom) {
    std::vector<std::pair<std::string, BaseAxiom>> all = {{"pentagon", BaseAxiom::Pentagon},
                                                          {"hexagon", BaseAxiom::Hexagon},
                                                          {"balancing", BaseAxiom::Balancing},
                                                          {"triangle", BaseAxiom::Triangle}};
    for (const auto& [name, ax] : all)
        if (axiom == "all" || axiom == name) s.add(check_base_coherence(data, ax, scope));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of direct-sum completions of pointed braided categories "
                 "and the even-lattice extension pipeline"};
    app.require_subcommand(1);

    // tables
    auto* tables = app.add_subcommand("tables", "emit the local-module structure tables");
    int64_t t_N = 1;
    std::string t_format = "json", t_out;
    tables->add_option("--N", t_N, "lattice parameter, N >= 1")->check(CLI::PositiveNumber);
    tables->add_option("--format", t_format)->check(CLI::IsMember({"json", "csv", "md"}));
    tables->add_option("--out", t_out, "output file (json/md) or directory (csv)");

    // verify-base
    auto* vbase = app.add_subcommand("verify-base", "coherence axioms of the pointed base instances");
    int64_t vb_N = 1, vb_d = 1, vb_n = 0, vb_window = 5;
    std::string vb_axiom = "all", vb_base = "all";
    vbase->add_option("--N", vb_N)->check(CLI::PositiveNumber);
    vbase->add_option("--d", vb_d)->check(CLI::PositiveNumber);
    vbase->add_option("--n", vb_n, "cyclic order (adds the cyclic instance)");
    vbase->add_option("--axiom", vb_axiom)
        ->check(CLI::IsMember({"all", "pentagon", "hexagon", "balancing", "triangle"}));
    vbase->add_option("--base", vb_base)->check(CLI::IsMember({"all", "heisenberg", "lattice-ref", "cyclic"}));
    vbase->add_option("--window", vb_window)->check(CLI::PositiveNumber);

    // verify-completion
    auto* vcomp = app.add_subcommand("verify-completion", "randomized law suite for the completion");
    int64_t vc_n = 0, vc_N = 1, vc_d = 1;
    int vc_trials = 100, vc_max_size = 6;
    uint64_t vc_seed = 42;
    std::string vc_base = "cyclic";
    vcomp->add_option("--base", vc_base)->check(CLI::IsMember({"cyclic", "heisenberg"}));
    vcomp->add_option("--n", vc_n, "cyclic order (0 = run n in {2,3,4,5})");
    vcomp->add_option("--N", vc_N)->check(CLI::PositiveNumber);
    vcomp->add_option("--d", vc_d)->check(CLI::PositiveNumber);
    vcomp->add_option("--trials", vc_trials, "trials per law per base")->check(CLI::PositiveNumber);
    vcomp->add_option("--max-size", vc_max_size)->check(CLI::PositiveNumber);
    vcomp->add_option("--seed", vc_seed);

    // verify-algebra
    auto* valg = app.add_subcommand("verify-algebra", "algebra-object axioms of the lattice extension");
    int64_t va_N = 1, va_d = 1, va_window = 5;
    std::string va_mode = "both";
    valg->add_option("--N", va_N)->check(CLI::PositiveNumber);
    valg->add_option("--d", va_d)->check(CLI::PositiveNumber);
    valg->add_option("--mode", va_mode)->check(CLI::IsMember({"symbolic", "window", "both"}));
    valg->add_option("--window", va_window)->check(CLI::PositiveNumber);

    // rep0
    auto* rep0 = app.add_subcommand("rep0", "enumerate induced modules and their locality");
    int64_t r_N = 1, r_d = 1, r_max = -1;
    rep0->add_option("--N", r_N)->check(CLI::PositiveNumber);
    rep0->add_option("--d", r_d)->check(CLI::PositiveNumber);
    rep0->add_option("--max-label", r_max, "largest label to test (default 4Nd)");

    // verify-rep0
    auto* vrep = app.add_subcommand("verify-rep0", "full extension-pipeline verification");
    int64_t vr_N = 1, vr_window = 3;
    vrep->add_option("--N", vr_N)->check(CLI::PositiveNumber);
    vrep->add_option("--window", vr_window)->check(CLI::PositiveNumber);

    // compare
    auto* cmp = app.add_subcommand("compare", "pipeline tables vs the reference category");
    int64_t c_N = 1;
    cmp->add_option("--N", c_N)->check(CLI::PositiveNumber);

    std::string out_path;
    app.add_option("--out", out_path, "failure dump destination (default stderr)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Session s;
        s.out_path = out_path;

        if (tables->parsed()) return run_tables(t_N, t_format, t_out);

        if (vbase->parsed()) {
            if (vb_base == "all" || vb_base == "heisenberg")
                run_base_axioms(s, *heisenberg_data(vb_N, vb_d), Scope::box(vb_window), vb_axiom);
            if (vb_base == "all" || vb_base == "lattice-ref")
                run_base_axioms(s, *lattice_reference_data(vb_N), Scope::full_group(), vb_axiom);
            if (vb_base == "cyclic" || vb_n > 0)
                run_base_axioms(s, *cyclic_data(vb_n > 0 ? vb_n : 2 * vb_N), Scope::full_group(), vb_axiom);
            return s.finish();
        }

        if (vcomp->parsed()) {
            std::vector<BasePtr> bases;
            if (vc_base == "heisenberg") {
                bases.push_back(heisenberg_data(vc_N, vc_d));
            } else if (vc_n > 0) {
                bases.push_back(cyclic_data(vc_n));
            } else {
                for (int64_t n : {2, 3, 4, 5}) bases.push_back(cyclic_data(n));
            }
            for (const auto& b : bases)
                for (auto law : all_completion_laws())
                    s.add(check_completion_coherence(law, b, vc_trials, vc_max_size, vc_seed));
            return s.finish();
        }

        if (valg->parsed()) {
            AlgebraObject alg = lattice_algebra(va_N, va_d);
            if (va_mode != "window") s.add(check_algebra_axioms(alg, CheckMode::Symbolic));
            if (va_mode != "symbolic") s.add(check_algebra_axioms(alg, CheckMode::Window, va_window));
            s.add(check_mu_cocycle_condition(va_N, va_d, va_window));
            return s.finish();
        }

        if (rep0->parsed()) {
            AlgebraObject alg = lattice_algebra(r_N, r_d);
            int64_t max_label = r_max >= 0 ? r_max : 4 * r_N * r_d;
            std::ostringstream os;
            os << "induced modules over the extension at N=" << r_N << ", grain d=" << r_d << "\n";
            os << "representative simples: labels d*a, a in {0.." << 2 * r_N - 1 << "}\n";
            for (int64_t m = 0; m <= max_label; ++m) {
                bool loc = is_local(alg, induce(alg, m), CheckMode::Symbolic);
                os << "label=" << m << " weight=" << m << "/(" << r_d << "*sqrt(" << 2 * r_N << "))"
                   << " local=" << (loc ? "true" : "false") << "\n";
            }
            std::cout << os.str();
            s.add(locality_report(alg, max_label, CheckMode::Symbolic));
            return s.finish();
        }

        if (vrep->parsed()) {
            AlgebraObject alg = lattice_algebra(vr_N, 1);
            s.add(check_algebra_axioms(alg, CheckMode::Symbolic));
            s.add(check_algebra_axioms(alg, CheckMode::Window, vr_window));
            s.add(check_mu_cocycle_condition(vr_N, 1, vr_window));
            for (const auto& m : rep0_simples(vr_N)) s.add(check_rep_axioms(alg, m, CheckMode::Symbolic));
            s.add(locality_report(alg, 2 * vr_N, CheckMode::Symbolic));
            for (int64_t x = 0; x < 2 * vr_N; ++x)
                for (int64_t y = 0; y < 2 * vr_N; ++y)
                    s.add(check_quotient_identification(vr_N, 1, x, y, vr_window));
            {
                CheckReport chain;
                chain.check = "associator-chain";
                chain.mode = "window[-" + std::to_string(vr_window) + "," + std::to_string(vr_window) +
                             "]^3, all triples";
                for (int64_t a = 0; a < 2 * vr_N; ++a)
                    for (int64_t b = 0; b < 2 * vr_N; ++b)
                        for (int64_t c = 0; c < 2 * vr_N; ++c) {
                            ++chain.tuples_checked;
                            Phase got = associator_via_chain(vr_N, a, b, c, vr_window);
                            QQ want = q_mod2(q_make(a * cocycle_k(vr_N, b, c), 2 * vr_N));
                            if (got.exponent() != want)
                                chain.fail({{"labels", {a, b, c}},
                                            {"chain", got.str()},
                                            {"closed_form", q_str(want)}});
                        }
                s.add(std::move(chain));
            }
            s.add(compare_with_reference(vr_N));
            s.add(verify_output_coherence(vr_N));
            return s.finish();
        }

        if (cmp->parsed()) {
            s.add(compare_with_reference(c_N));
            return s.finish();
        }
    } catch (const CatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

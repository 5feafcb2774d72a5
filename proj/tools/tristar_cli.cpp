#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "tristar/io.hpp"
#include "tristar/verify.hpp"

using nlohmann::json;
namespace ts = tristar;

namespace {

struct GlobalOpts {
    ts::Couplings c;
    double tol_algebra = ts::kAlgebraTol;
    double tol_eigen = ts::kEigenTol;
    double tol_group = ts::kGroupTol;
    std::string format = "json";
    std::string out_path;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.out_path);
        f << text;
    }
}

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << '\n';
    return 1;
}

std::optional<ts::Permutation> perm_from_token(const std::string& tok) {
    if (tok == "pair") return ts::pair_swap();
    if (tok == "s1s2") return ts::plaquette_swap(1, 2);
    if (tok == "s1s3") return ts::plaquette_swap(1, 3);
    if (tok == "s2s3") return ts::plaquette_swap(2, 3);
    return std::nullopt;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::string unit_scalar_str(ts::cplx s) {
    if (std::abs(s - ts::cplx(1, 0)) < 1e-9) return "1";
    if (std::abs(s + ts::cplx(1, 0)) < 1e-9) return "-1";
    if (std::abs(s - ts::cplx(0, 1)) < 1e-9) return "i";
    if (std::abs(s + ts::cplx(0, 1)) < 1e-9) return "-i";
    return "?";
}

int cmd_spectrum(const GlobalOpts& g) {
    const ts::HermitianSpectrum sp = ts::hermitian_eig(ts::build_hamiltonian(g.c));
    const std::vector<ts::LevelEntry> analytic = ts::analytic_levels(g.c);
    std::vector<double> expanded;
    for (const auto& le : analytic)
        expanded.insert(expanded.end(), std::size_t(le.multiplicity), le.energy);
    double worst = 0;
    for (std::size_t i = 0; i < expanded.size(); ++i)
        worst = std::max(worst, std::abs(expanded[i] - sp.eigenvalues[i]));
    const bool ok = worst < g.tol_eigen;

    // Energies are reported in units of jx whenever jx != 0.
    const bool scaled = g.c.jx != 0;
    std::vector<ts::LevelEntry> rows = analytic;
    if (scaled) {
        for (auto& r : rows) r.energy /= g.c.jx;
        std::stable_sort(rows.begin(), rows.end(),
                         [](const ts::LevelEntry& a, const ts::LevelEntry& b) {
                             return a.energy < b.energy;
                         });
    }
    if (g.format == "csv") {
        emit(g, ts::spectrum_csv(rows));
    } else {
        json levels = json::array();
        for (const auto& r : rows)
            levels.push_back(
                json{{"energy", r.energy}, {"label", r.label}, {"multiplicity", r.multiplicity}});
        json out{{"agreement", worst},
                 {"levels", std::move(levels)},
                 {"pass", ok},
                 {"units", scaled ? "jx" : "absolute"}};
        emit(g, ts::fixed_dump(out));
    }
    return ok ? 0 : 2;
}

int cmd_verify(const GlobalOpts& g, std::optional<double> tol, const std::string& catalog_path) {
    std::vector<ts::State> overrides;
    if (!catalog_path.empty()) {
        std::ifstream f(catalog_path);
        if (!f) return usage_error("cannot open catalog file " + catalog_path);
        json j;
        try {
            j = json::parse(f);
        } catch (const json::exception& e) {
            throw ts::Error("BadFormat", std::string("catalog file: ") + e.what());
        }
        overrides = ts::states_from_json(j);
    }
    const ts::VerifyReport rep = ts::verify_all(g.c, tol, overrides);
    json checks = json::array();
    for (const auto& ch : rep.checks)
        checks.push_back(
            json{{"gate", ch.gate}, {"name", ch.name}, {"pass", ch.pass}, {"value", ch.value}});
    json skipped = json::array();
    for (const auto& s : rep.skipped) skipped.push_back(s);
    json out{{"checks", std::move(checks)}, {"pass", rep.pass}, {"skipped", std::move(skipped)}};
    emit(g, ts::fixed_dump(out));
    return rep.pass ? 0 : 2;
}

int cmd_stats(const GlobalOpts& g, const std::string& basis_csv, const std::string& perm_tok) {
    const auto perm = perm_from_token(perm_tok);
    if (!perm) return usage_error("unknown permutation '" + perm_tok + "' (pair, s1s2, s1s3, s2s3)");
    const std::vector<std::string> labels = split_csv(basis_csv);
    if (labels.empty()) return usage_error("empty basis");
    std::vector<ts::State> basis;
    for (const auto& l : labels) basis.push_back(ts::paper_state(l));
    const ts::StatsResult sr = ts::subspace_statistics(basis, *perm);
    json jl = json::array();
    for (const auto& l : labels) jl.push_back(l);
    json out{{"basis", std::move(jl)},   {"class", sr.classification}, {"closed", sr.closed},
             {"eta", ts::matrix_json(sr.eta)}, {"perm", perm->name},   {"residual", sr.residual}};
    emit(g, ts::fixed_dump(out));
    return 0;
}

int cmd_phase(const GlobalOpts& g, const std::string& state_label, const std::string& perm_tok) {
    const auto perm = perm_from_token(perm_tok);
    if (!perm) return usage_error("unknown permutation '" + perm_tok + "' (pair, s1s2, s1s3, s2s3)");
    const ts::State s = ts::paper_state(state_label);
    json arr = json::array();
    for (const auto& [k, r] : ts::phase_map(s, *perm)) {
        std::string bits;
        for (int b = 3; b >= 0; --b) bits += char('0' + ((k >> b) & 1));
        arr.push_back(json{{"bits", bits}, {"config", k}, {"im", r.imag()}, {"re", r.real()}});
    }
    json out{{"perm", perm->name}, {"ratios", std::move(arr)}, {"state", state_label}};
    emit(g, ts::fixed_dump(out));
    return 0;
}

int cmd_jw(const GlobalOpts& g) {
    const double cd = ts::clifford_defect(ts::majorana_set());
    const double hd = (ts::fermionized_hamiltonian(g.c) - ts::build_hamiltonian(g.c)).fro();
    const ts::BondReport br = ts::bond_identities(g.c);
    const bool bond_ok =
        std::max({br.comm_B14_B23, br.sq_B14, br.sq_B23, br.dist_B14B23_S2S3, br.comm_B14B23_H}) <
        ts::kAlgebraTol;
    const ts::PlaquetteReport pr = ts::fermionic_plaquettes();
    json scalars = json::array();
    for (const auto& s : pr.scalars) scalars.push_back(unit_scalar_str(s));
    const ts::HermitianSpectrum sp = ts::hermitian_eig(ts::build_hamiltonian(g.c));
    json table = json::array();
    for (const ts::GaugeSector& s : ts::all_sectors()) {
        bool inspec = true;
        json energies = json::array();
        for (double e : ts::sector_energies(s, g.c)) {
            double best = 1e300;
            for (double lam : sp.eigenvalues) best = std::min(best, std::abs(e - lam));
            inspec = inspec && best < ts::kEigenTol;
            energies.push_back(e);
        }
        table.push_back(json{{"energies", std::move(energies)},
                             {"in_spectrum", inspec},
                             {"sector", json::array({s.s1, s.s2, s.s3})}});
    }
    json out{{"bond_ok", bond_ok},
             {"clifford_ok", cd < ts::kAlgebraTol},
             {"h_distance", hd},
             {"plaquette_scalars", std::move(scalars)},
             {"sector_table", std::move(table)}};
    emit(g, ts::fixed_dump(out));
    return 0;
}

int cmd_entropy(const GlobalOpts& g, const std::string& state_label, const std::string& keep_csv) {
    std::vector<int> keep;
    for (const auto& tok : split_csv(keep_csv)) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            keep.push_back(v);
        } catch (const std::exception&) {
            return usage_error("keep must be a comma list of site numbers, got '" + tok + "'");
        }
    }
    const ts::State s = ts::paper_state(state_label);
    const ts::DensityMatrix dm = ts::partial_trace(s.amp, keep);
    const ts::HermitianSpectrum sp = ts::hermitian_eig(dm.rho);
    const double nats = ts::von_neumann_entropy(dm, ts::LogBase::e);
    const double bits = ts::von_neumann_entropy(dm, ts::LogBase::two);
    json eigs = json::array();
    for (double lam : sp.eigenvalues) eigs.push_back(lam);
    json jkeep = json::array();
    for (int k : dm.keep) jkeep.push_back(k);
    json out{{"eigenvalues", std::move(eigs)},
             {"entropy_bits", bits},
             {"entropy_nats", nats},
             {"keep", std::move(jkeep)},
             {"paper_convention_magnitude", std::sqrt(2.0) * nats},
             {"state", state_label}};
    emit(g, ts::fixed_dump(out));
    return 0;
}

int cmd_sweep(const GlobalOpts& g, const std::string& param, double from, double to, int steps) {
    if (steps < 1) return usage_error("steps must be >= 1");
    double ts::Couplings::* field = nullptr;
    if (param == "jx") field = &ts::Couplings::jx;
    else if (param == "jy") field = &ts::Couplings::jy;
    else if (param == "jz") field = &ts::Couplings::jz;
    else if (param == "jp") field = &ts::Couplings::jp;
    else return usage_error("unknown sweep parameter '" + param + "' (jx, jy, jz, jp)");

    std::string out = "param";
    for (int i = 1; i <= 16; ++i) out += ",e" + std::to_string(i);
    out += '\n';
    for (int k = 0; k < steps; ++k) {
        const double v = steps == 1 ? from : from + (to - from) * double(k) / double(steps - 1);
        ts::Couplings c = g.c;
        c.*field = v;
        const ts::HermitianSpectrum sp = ts::hermitian_eig(ts::build_hamiltonian(c));
        out += ts::fmt_double(v);
        for (double e : sp.eigenvalues) {
            out += ',';
            out += ts::fmt_double(e);
        }
        out += '\n';
    }
    emit(g, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    std::string config_path;
    CLI::App app{"exact diagonalization and operator algebra for the four-spin triangular star"};
    app.fallthrough();
    auto* jx = app.add_option("--jx", g.c.jx, "x-bond coupling");
    auto* jy = app.add_option("--jy", g.c.jy, "y-bond coupling");
    auto* jz = app.add_option("--jz", g.c.jz, "z-bond coupling");
    auto* jp = app.add_option("--jp", g.c.jp, "plaquette coupling");
    auto* fmt = app.add_option("--format", g.format, "json|csv")
                    ->check(CLI::IsMember({"json", "csv"}));
    auto* outp = app.add_option("--out", g.out_path, "write output here instead of stdout");
    app.add_option("--config", config_path, "JSON run config; explicit flags win");

    auto* sc_spectrum = app.add_subcommand("spectrum", "grouped levels with analytic labels");

    auto* sc_verify = app.add_subcommand("verify", "full invariant sweep");
    double vtol = 0;
    std::string catalog_path;
    auto* vt = sc_verify->add_option("--tol", vtol, "override every verification gate");
    sc_verify->add_option("--catalog", catalog_path,
                          "JSON array of states replacing catalog entries by label");

    auto* sc_stats = app.add_subcommand("stats", "statistical matrix on a catalog basis");
    std::string basis_csv, stats_perm;
    sc_stats->add_option("--basis", basis_csv, "comma list of catalog labels")->required();
    sc_stats->add_option("--perm", stats_perm, "pair|s1s2|s1s3|s2s3")->required();

    auto* sc_phase = app.add_subcommand("phase", "per-configuration exchange phases");
    std::string phase_state, phase_perm;
    sc_phase->add_option("--state", phase_state, "catalog label")->required();
    sc_phase->add_option("--perm", phase_perm, "pair|s1s2|s1s3|s2s3")->required();

    auto* sc_jw = app.add_subcommand("jw", "fermionization report");

    auto* sc_entropy = app.add_subcommand("entropy", "marginal spectrum and entropies");
    std::string entropy_state, keep_csv;
    sc_entropy->add_option("--state", entropy_state, "catalog label")->required();
    sc_entropy->add_option("--keep", keep_csv, "comma list of retained sites")->required();

    auto* sc_sweep = app.add_subcommand("sweep", "CSV of the 16 energies along one coupling");
    std::string sweep_param;
    double sweep_from = 0, sweep_to = 0;
    int sweep_steps = 0;
    sc_sweep->add_option("--param", sweep_param, "jx|jy|jz|jp")->required();
    sc_sweep->add_option("--from", sweep_from)->required();
    sc_sweep->add_option("--to", sweep_to)->required();
    sc_sweep->add_option("--steps", sweep_steps)->required();

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) return usage_error("cannot open config file " + config_path);
        json j;
        try {
            j = json::parse(f);
            if (j.contains("couplings")) {
                const auto& jc = j.at("couplings");
                if (!jx->count() && jc.contains("jx")) g.c.jx = jc.at("jx").get<double>();
                if (!jy->count() && jc.contains("jy")) g.c.jy = jc.at("jy").get<double>();
                if (!jz->count() && jc.contains("jz")) g.c.jz = jc.at("jz").get<double>();
                if (!jp->count() && jc.contains("jp")) g.c.jp = jc.at("jp").get<double>();
            }
            if (j.contains("tolerances")) {
                const auto& jt = j.at("tolerances");
                if (jt.contains("algebra")) g.tol_algebra = jt.at("algebra").get<double>();
                if (jt.contains("eigen")) g.tol_eigen = jt.at("eigen").get<double>();
                if (jt.contains("group")) g.tol_group = jt.at("group").get<double>();
            }
            if (!fmt->count() && j.contains("output_format"))
                g.format = j.at("output_format").get<std::string>();
            if (!outp->count() && j.contains("output_path"))
                g.out_path = j.at("output_path").get<std::string>();
        } catch (const json::exception& e) {
            return usage_error(std::string("bad config file: ") + e.what());
        }
        if (g.format != "json" && g.format != "csv")
            return usage_error("output_format must be json or csv");
        if (g.tol_algebra <= 0 || g.tol_eigen <= 0 || g.tol_group <= 0)
            return usage_error("tolerances must be positive");
    }

    try {
        if (sc_spectrum->parsed()) return cmd_spectrum(g);
        if (sc_verify->parsed()) {
            std::optional<double> tol;
            if (vt->count()) tol = vtol;
            return cmd_verify(g, tol, catalog_path);
        }
        if (sc_stats->parsed()) return cmd_stats(g, basis_csv, stats_perm);
        if (sc_phase->parsed()) return cmd_phase(g, phase_state, phase_perm);
        if (sc_jw->parsed()) return cmd_jw(g);
        if (sc_entropy->parsed()) return cmd_entropy(g, entropy_state, keep_csv);
        if (sc_sweep->parsed()) return cmd_sweep(g, sweep_param, sweep_from, sweep_to, sweep_steps);
    } catch (const ts::Error& e) {
        json out{{"error", e.name}, {"message", std::string(e.what())}};
        emit(g, ts::fixed_dump(out));
        return e.name == "UnknownName" ? 1 : 2;
    } catch (const std::exception& e) {
        json out{{"error", "Internal"}, {"message", std::string(e.what())}};
        emit(g, ts::fixed_dump(out));
        return 2;
    }
    return usage_error("no subcommand given");
}

#include "tristar/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace tristar {

namespace {

Mat span_projector(const std::vector<Vec>& span) {
    std::vector<Vec> q;
    for (Vec v : span) {
        for (const Vec& u : q) v = axpy(-dot(u, v), u, v);
        const double n = norm(v);
        if (n > 1e-8) {
            for (auto& a : v) a /= n;
            q.push_back(std::move(v));
        }
    }
    Mat p = Mat::zero(16, 16);
    for (const Vec& u : q)
        for (std::size_t i = 0; i < 16; ++i)
            for (std::size_t j = 0; j < 16; ++j) p(i, j) += u[i] * std::conj(u[j]);
    return p;
}

const std::vector<std::pair<std::string, double>>& eigen_flip_signs() {
    static const std::vector<std::pair<std::string, double>> t = {
        {"g1", -1}, {"g2", -1}, {"g3", -1}, {"g4", -1},
        {"o1", 1},  {"o2", 1},  {"o3", 1},  {"o4", 1},
        {"e9", 1},  {"e10", 1},
        {"e11", -1}, {"e12", -1}, {"e13", -1}, {"e14", -1},
        {"e15", 1}, {"e16", 1},
        {"S+A", -1}, {"S-A", -1}, {"S+B", -1}, {"S-B", -1}};
    return t;
}

}  // namespace

VerifyReport verify_all(const Couplings& c, std::optional<double> tol,
                        const std::vector<State>& overrides) {
    VerifyReport rep;
    auto add = [&](const std::string& name, double value, double dflt, bool strict = true) {
        CheckResult r{name, false, value, tol ? *tol : dflt};
        r.pass = strict ? value < r.gate : value <= r.gate;
        rep.checks.push_back(std::move(r));
    };

    std::map<std::string, State> omap;
    for (const State& s : overrides) omap[s.label] = s;
    auto get_state = [&](const std::string& label) {
        auto it = omap.find(label);
        return it == omap.end() ? paper_state(label) : it->second;
    };

    const Mat H = build_hamiltonian(c);
    const HermitianSpectrum sp = hermitian_eig(H);

    add("conservation", verify_conserved(c).worst, 1e-12);

    const bool ratio_point = c.jx != 0 && std::abs(c.jy - 2 * c.jx) < 1e-12 &&
                             std::abs(c.jz - 2 * c.jx) < 1e-12 &&
                             std::abs(c.jp - 2 * c.jx) < 1e-12;
    if (ratio_point) {
        for (const auto& [label, sign] : eigen_flip_signs()) {
            (void)sign;
            const State s = get_state(label);
            const double e = *catalog_energy_coeff(label) * c.jx;
            add("catalog_residual:" + label, norm(axpy(-e, s.amp, mul(H, s.amp))), 1e-10);
        }
        const std::vector<std::pair<int, std::vector<std::string>>> spaces = {
            {-6, {"g1", "g2", "g3", "g4"}},
            {-4, {"e9", "e10"}},
            {0, {"o1", "o2", "o3", "o4"}},
            {2, {"e11", "e12", "e13", "e14"}},
            {12, {"e15", "e16"}}};
        for (const auto& [coeff, labels] : spaces) {
            const double e = coeff * c.jx;
            std::vector<Vec> span;
            for (const auto& l : labels) span.push_back(get_state(l).amp);
            std::vector<Vec> numeric;
            for (std::size_t k = 0; k < sp.eigenvalues.size(); ++k)
                if (std::abs(sp.eigenvalues[k] - e) < kGroupTol) {
                    Vec v(16);
                    for (std::size_t i = 0; i < 16; ++i) v[i] = sp.eigenvectors(i, k);
                    numeric.push_back(std::move(v));
                }
            add("projector:" + std::to_string(coeff),
                (span_projector(span) - span_projector(numeric)).fro(), 1e-8);
        }
    } else {
        rep.skipped = {"catalog_residual:*", "projector:*"};
    }

    {
        double worst = 0;
        for (const auto& [label, sign] : eigen_flip_signs()) {
            const State s = get_state(label);
            worst = std::max(worst, norm(axpy(-sign, s.amp, flip_all(s).amp)));
        }
        add("z2_flip", worst, 1e-10);
    }

    add("majorana_clifford", clifford_defect(majorana_set()), 1e-12);
    add("fermionized_equality", (fermionized_hamiltonian(c) - H).fro(), 1e-12);
    add("complex_fermion_car", car_defect(complex_fermions(c)), 1e-12);
    add("complex_fermion_equality", (complex_fermion_hamiltonian(c) - H).fro(), 1e-12);

    // Gate on what the bond operators actually satisfy: involutions, mutual
    // commutation, and a conserved product equal to the x string. The wider
    // documented claim set lives in the claims test suite.
    const BondReport br = bond_identities(c);
    add("bond_identities",
        std::max({br.comm_B14_B23, br.sq_B14, br.sq_B23, br.dist_B14B23_S2S3, br.comm_B14B23_H}),
        1e-12);

    const PlaquetteReport pr = fermionic_plaquettes();
    add("plaquette_scalars", *std::max_element(pr.scaled_dist.begin(), pr.scaled_dist.end()),
        1e-12);

    {
        double worst = 0;
        for (const GaugeSector& s : all_sectors())
            for (double e : sector_energies(s, c)) {
                double best = 1e300;
                for (double lam : sp.eigenvalues) best = std::min(best, std::abs(e - lam));
                worst = std::max(worst, best);
            }
        add("sector_membership", worst, 1e-9);
    }

    const Mat loop = braid_loop({plaquette_swap(3, 2), plaquette_swap(2, 1),
                                 plaquette_swap(1, 3), plaquette_swap(1, 2)});
    add("braid_closure", loop.max_abs_diff(Mat::identity(16)), 0.0, false);

    const ConcurrenceReport cr = concurrence_operator_check();
    add("concurrence_strings", std::max({cr.dist_yyyy, cr.dist_zzzz, cr.dist_xxxx}), 1e-12);
    // Regression against the computed ground action (+1,-1,+1,-1); the
    // documented table disagrees and is pinned in the claims suite instead.
    const std::array<double, 4> diag{1.0, -1.0, 1.0, -1.0};
    double dd = cr.tau_ground_offdiag;
    for (int i = 0; i < 4; ++i) dd = std::max(dd, std::abs(cr.tau_ground_diag[i] - diag[i]));
    add("concurrence_ground_diag", dd, 1e-10);

    const ChiReport ch = chi_decomposition_check();
    add("chi_decomposition",
        std::max({ch.sym_dist, ch.antisym_dist, ch.eigen_sym, ch.eigen_antisym, ch.resolution}),
        1e-10);

    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckResult& r) { return r.pass; });
    return rep;
}

}  // namespace tristar

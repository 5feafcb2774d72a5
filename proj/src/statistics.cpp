#include "tristar/statistics.hpp"

#include <algorithm>
#include <cmath>

namespace tristar {

Permutation pair_swap() { return {{3, 4, 1, 2}, "pair"}; }

Permutation transposition(int i, int j) {
    if (i < 1 || i > 4 || j < 1 || j > 4 || i == j)
        throw Error("BadIndex", "transposition needs two distinct sites in 1..4");
    Permutation p;
    p.src = {1, 2, 3, 4};
    std::swap(p.src[i - 1], p.src[j - 1]);
    p.name = "t" + std::to_string(std::min(i, j)) + std::to_string(std::max(i, j));
    return p;
}

Permutation plaquette_swap(int i, int j) {
    const int a = std::min(i, j), b = std::max(i, j);
    Permutation p;
    if (a == 1 && b == 2) p = transposition(1, 4);
    else if (a == 1 && b == 3) p = transposition(3, 4);
    else if (a == 2 && b == 3) p = transposition(1, 3);
    else throw Error("BadIndex", "plaquette swap is defined for pairs of S1, S2, S3");
    p.name = "s" + std::to_string(i) + "s" + std::to_string(j);
    return p;
}

Mat permutation_matrix(const Permutation& p) {
    Mat m(16, 16);
    for (int k = 0; k < 16; ++k) {
        int target = 0;
        for (int site = 1; site <= 4; ++site) {
            const int bit = (k >> (4 - p.src[site - 1])) & 1;
            target |= bit << (4 - site);
        }
        m(target, k) = 1.0;
    }
    return m;
}

StatsResult subspace_statistics(const std::vector<State>& basis, const Permutation& p) {
    const std::size_t d = basis.size();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const cplx gram = dot(basis[i].amp, basis[j].amp);
            const cplx want = (i == j) ? cplx(1) : cplx(0);
            if (std::abs(gram - want) >= 1e-10)
                throw Error("NotOrthonormal",
                            "Gram(" + basis[i].label + "," + basis[j].label + ") = " +
                                std::to_string(gram.real()) + (gram.imag() < 0 ? "-" : "+") +
                                std::to_string(std::abs(gram.imag())) + "i");
        }

    const Mat pm = permutation_matrix(p);
    StatsResult res;
    res.eta = Mat(d, d);
    res.closed = true;
    for (std::size_t i = 0; i < d; ++i) {
        Vec img = mul(pm, basis[i].amp);
        for (std::size_t j = 0; j < d; ++j) {
            res.eta(i, j) = dot(basis[j].amp, img);
            img = axpy(-res.eta(i, j), basis[j].amp, img);
        }
        res.residual = std::max(res.residual, norm(img));
    }
    if (res.residual >= 1e-10) {
        res.closed = false;
        res.classification = "none";
    } else {
        res.classification = classify(res.eta);
    }
    return res;
}

std::string classify(const Mat& eta) {
    const auto n = eta.rows();
    if (n != eta.cols() || (eta.dagger() * eta - Mat::identity(n)).fro() >= 1e-10)
        throw Error("NotUnitary", "statistical matrix is not unitary within 1e-10");
    const Mat id = Mat::identity(n);
    if ((eta - id).fro() < 1e-10) return "boson";
    if ((eta + id).fro() < 1e-10) return "fermion";
    return "exotic";
}

std::map<int, cplx> phase_map(const State& s, const Permutation& p) {
    constexpr double eps = 1e-10;
    const Vec img = mul(permutation_matrix(p), s.amp);
    // support first, so a state whose configurations move reports the move
    // rather than a meaningless zero ratio
    for (int k = 0; k < 16; ++k) {
        if (std::abs(s.amp[k]) <= eps && std::abs(img[k]) > eps)
            throw Error("SupportMismatch", "permuted state is supported on configuration " +
                                               std::to_string(k) + " but the input is not");
    }
    std::map<int, cplx> ratios;
    for (int k = 0; k < 16; ++k) {
        if (std::abs(s.amp[k]) <= eps) continue;
        const cplx r = img[k] / s.amp[k];
        if (std::abs(std::abs(r) - 1.0) > eps)
            throw Error("NonUnimodularRatio",
                        "|ratio| = " + std::to_string(std::abs(r)) + " at configuration " +
                            std::to_string(k));
        ratios[k] = r;
    }
    return ratios;
}

Mat braid_loop(const std::vector<Permutation>& seq) {
    Mat m = Mat::identity(16);
    for (const auto& p : seq) m = m * permutation_matrix(p);
    return m;
}

ChiReport chi_decomposition_check() {
    const State chi = paper_state("chi00");
    const Mat pm = permutation_matrix(pair_swap());
    const Mat id = Mat::identity(16);
    const Mat pi_plus = (id + pm) * cplx(0.5);
    const Mat pi_minus = (id - pm) * cplx(0.5);

    // chi1: the symmetric (double-arrow + one-negative-circle) piece;
    // chi2: (|up up down down> - |down down up up>)/(2 sqrt 2).
    const double a = 1.0 / (2.0 * std::sqrt(2.0));
    Vec chi1(16), chi2(16);
    chi1[0] = a; chi1[5] = a; chi1[6] = a; chi1[9] = a; chi1[10] = -a; chi1[15] = a;
    chi2[3] = a; chi2[12] = -a;

    ChiReport rep;
    const Vec sym = mul(pi_plus, chi.amp), anti = mul(pi_minus, chi.amp);
    rep.sym_dist = norm(axpy(-1.0, chi1, sym));
    rep.antisym_dist = norm(axpy(-1.0, chi2, anti));
    rep.eigen_sym = norm(axpy(-1.0, chi1, mul(pm, chi1)));
    rep.eigen_antisym = norm(axpy(1.0, chi2, mul(pm, chi2)));
    rep.resolution = (pi_plus + pi_minus - id).fro();
    rep.pass = rep.sym_dist < 1e-10 && rep.antisym_dist < 1e-10 && rep.eigen_sym < 1e-10 &&
               rep.eigen_antisym < 1e-10 && rep.resolution < 1e-12;
    return rep;
}

}  // namespace tristar

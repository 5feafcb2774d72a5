#include "tristar/fermionization.hpp"

#include <algorithm>
#include <cmath>

namespace tristar {

namespace {

Mat pstr(std::vector<PauliFactor> fs, cplx coeff = 1.0) {
    PauliString ps;
    ps.coefficient = coeff;
    ps.factors = std::move(fs);
    return compile(ps);
}

constexpr cplx kI{0.0, 1.0};

}  // namespace

MajoranaSet majorana_set(const std::array<int, 4>& ordering) {
    if (ordering != std::array<int, 4>{1, 4, 2, 3})
        throw Error("UnsupportedOrdering", "only the site ordering [1,4,2,3] is implemented");
    MajoranaSet ms;
    ms.psi[0] = pstr({{1, 'y'}});
    ms.b[0] = pstr({{1, 'x'}}, -1.0);
    ms.psi[3] = pstr({{4, 'x'}, {1, 'z'}});
    ms.b[3] = pstr({{4, 'y'}, {1, 'z'}}, -1.0);
    ms.psi[1] = pstr({{2, 'y'}, {1, 'z'}, {4, 'z'}});
    ms.b[1] = pstr({{2, 'x'}, {1, 'z'}, {4, 'z'}}, -1.0);
    ms.psi[2] = pstr({{3, 'x'}, {1, 'z'}, {4, 'z'}, {2, 'z'}});
    ms.b[2] = pstr({{3, 'y'}, {1, 'z'}, {4, 'z'}, {2, 'z'}}, -1.0);
    return ms;
}

double clifford_defect(const MajoranaSet& ms) {
    std::array<const Mat*, 8> g{&ms.psi[0], &ms.psi[1], &ms.psi[2], &ms.psi[3],
                                &ms.b[0], &ms.b[1], &ms.b[2], &ms.b[3]};
    const Mat two_id = Mat::identity(16) * cplx(2.0);
    double worst = 0.0;
    for (int i = 0; i < 8; ++i)
        for (int j = i; j < 8; ++j) {
            Mat ac = anticommutator(*g[i], *g[j]);
            if (i == j) ac = ac - two_id;
            worst = std::max(worst, ac.fro());
        }
    return worst;
}

BondOperators bond_operators() {
    MajoranaSet ms = majorana_set();
    return {(ms.psi[0] * ms.psi[3]) * kI, (ms.psi[1] * ms.psi[2]) * kI};
}

Mat fermionized_hamiltonian(const Couplings& c) {
    MajoranaSet ms = majorana_set();
    BondOperators bo = bond_operators();
    const Mat S1 = plaquette(1), S2 = plaquette(2), S3 = plaquette(3);
    const Mat S12 = S1 * S2, S23 = S2 * S3, S31 = S3 * S1;
    const Mat &b1 = ms.b[0], &b2 = ms.b[1], &b3 = ms.b[2], &b4 = ms.b[3];

    // The Majorana order in the 1-3 bond term is load-bearing: b3 b1 gives
    // +X1X3, b1 b3 gives -X1X3.
    Mat h = (b2 * b4) * (kI * c.jx);
    h += (S12 * (b3 * b1)) * (kI * c.jx);
    h += ((S2 * bo.B23) * (b3 * b4)) * (-kI * c.jy);
    h += ((S3 * bo.B14) * (b1 * b2)) * (-kI * c.jy);
    h += (bo.B14 * (b1 * b4)) * (kI * c.jz);
    h += (bo.B23 * (b2 * b3)) * (kI * c.jz);
    h += (S12 + S23 + S31) * cplx(c.jp);
    return h;
}

BondReport bond_identities(const Couplings& c) {
    BondOperators bo = bond_operators();
    const Mat H = build_hamiltonian(c);
    const Mat I = Mat::identity(16);
    const Mat P = bo.B14 * bo.B23;
    BondReport r;
    r.comm_B14_H = commutator(bo.B14, H).fro();
    r.comm_B23_H = commutator(bo.B23, H).fro();
    r.comm_B14_B23 = commutator(bo.B14, bo.B23).fro();
    r.dist_S1S3_plus_B14B23 = ((plaquette(1) * plaquette(3)) + P).fro();
    r.dist_S2S4_plus_B14B23 = ((plaquette(2) * plaquette(4)) + P).fro();
    r.claims_hold = r.comm_B14_H < kAlgebraTol && r.comm_B23_H < kAlgebraTol &&
                    r.comm_B14_B23 < kAlgebraTol &&
                    r.dist_S1S3_plus_B14B23 < kAlgebraTol &&
                    r.dist_S2S4_plus_B14B23 < kAlgebraTol;
    r.dist_B14B23_S2S3 = (P - plaquette(2) * plaquette(3)).fro();
    r.comm_B14B23_H = commutator(P, H).fro();
    r.sq_B14 = (bo.B14 * bo.B14 - I).fro();
    r.sq_B23 = (bo.B23 * bo.B23 - I).fro();
    return r;
}

PlaquetteReport fermionic_plaquettes() {
    MajoranaSet ms = majorana_set();
    const std::array<Mat, 4> F{
        ms.b[0] * ms.psi[0] * ms.psi[1] * ms.b[2],
        ms.psi[3] * ms.b[3] * ms.b[1] * ms.psi[2],
        ms.psi[0] * ms.psi[1] * ms.b[1] * ms.b[3],
        ms.b[0] * ms.psi[2] * ms.b[2] * ms.psi[3],
    };
    const std::array<cplx, 4> units{cplx{1, 0}, cplx{-1, 0}, cplx{0, 1}, cplx{0, -1}};

    auto match_unit = [&](const Mat& lhs, const Mat& rhs) {
        double best = 1e300;
        cplx scalar = 0.0;
        for (cplx s : units) {
            double d = (lhs - rhs * s).fro();
            if (d < best) {
                best = d;
                scalar = s;
            }
        }
        return std::pair<cplx, double>{scalar, best};
    };

    PlaquetteReport r;
    for (int k = 0; k < 4; ++k) {
        auto [s, d] = match_unit(F[k], plaquette(k + 1));
        if (d >= kAlgebraTol)
            throw Error("NoScalarMatch", "fermionic plaquette " + std::to_string(k + 1) +
                                             " is not a unit multiple of its spin form");
        r.scalars[k] = s;
        r.scaled_dist[k] = d;
    }
    auto [spin_sign, spin_dist] = match_unit(plaquette(1) * plaquette(2) * plaquette(3), plaquette(4));
    r.product_consistent =
        spin_dist < kAlgebraTol &&
        std::abs(r.scalars[0] * r.scalars[1] * r.scalars[2] - spin_sign * r.scalars[3]) < kAlgebraTol;
    r.pass = *std::max_element(r.scaled_dist.begin(), r.scaled_dist.end()) < kAlgebraTol;
    return r;
}

ComplexFermionSet complex_fermions(const Couplings& c) {
    MajoranaSet ms = majorana_set();
    BondOperators bo = bond_operators();
    const cplx half{0.5, 0.0};
    ComplexFermionSet f;
    f.ca_d = (ms.b[0] - ms.b[2] * kI) * half;
    f.ca = (ms.b[0] + ms.b[2] * kI) * half;
    f.cb_d = (ms.b[1] + ms.b[3] * kI) * half;
    f.cb = (ms.b[1] - ms.b[3] * kI) * half;
    const Mat s2b = plaquette(2) * bo.B23;
    const Mat s3b = plaquette(3) * bo.B14;
    f.Delta = (bo.B14 - bo.B23) * cplx(c.jz) + (s2b - s3b) * (kI * c.jy);
    f.t = (bo.B14 + bo.B23) * cplx(c.jz) - (s2b + s3b) * (kI * c.jy);
    f.DeltaP = (bo.B14 - bo.B23) * cplx(c.jz) - (s2b - s3b) * (kI * c.jy);
    f.tP = (bo.B14 + bo.B23) * cplx(c.jz) + (s2b + s3b) * (kI * c.jy);
    return f;
}

double car_defect(const ComplexFermionSet& f) {
    const Mat I = Mat::identity(16);
    double worst = 0.0;
    auto take = [&](const Mat& m) { worst = std::max(worst, m.fro()); };
    take(anticommutator(f.ca, f.ca_d) - I);
    take(anticommutator(f.cb, f.cb_d) - I);
    take(f.ca * f.ca);
    take(f.ca_d * f.ca_d);
    take(f.cb * f.cb);
    take(f.cb_d * f.cb_d);
    take(anticommutator(f.ca, f.cb));
    take(anticommutator(f.ca, f.cb_d));
    take(anticommutator(f.ca_d, f.cb));
    take(anticommutator(f.ca_d, f.cb_d));
    return worst;
}

Mat complex_fermion_hamiltonian(const Couplings& c) {
    ComplexFermionSet f = complex_fermions(c);
    const Mat I = Mat::identity(16);
    const Mat S12 = plaquette(1) * plaquette(2);
    const Mat S23 = plaquette(2) * plaquette(3);
    const Mat S31 = plaquette(3) * plaquette(1);

    // Number-operator form: the gauge-operator coefficients multiply from the
    // left so their ordering against the fermion bilinears is explicit.
    Mat h = (S12 * (I - (f.ca_d * f.ca) * cplx(2.0))) * cplx(c.jx);
    h += (I - (f.cb_d * f.cb) * cplx(2.0)) * cplx(c.jx);
    h += (f.tP * (f.ca * f.cb)) * cplx(-1.0);
    h += f.t * (f.ca_d * f.cb_d);
    h += (f.DeltaP * (f.ca_d * f.cb)) * cplx(-1.0);
    h += f.Delta * (f.ca * f.cb_d);
    h += (S12 + S23 + S31) * cplx(c.jp);
    return h;
}

double printed_assembly_distance(const Couplings& c) {
    ComplexFermionSet f = complex_fermions(c);
    const Mat I = Mat::identity(16);
    const Mat S12 = plaquette(1) * plaquette(2);
    const Mat S23 = plaquette(2) * plaquette(3);
    const Mat S31 = plaquette(3) * plaquette(1);
    Mat h = (S12 * (f.ca_d * f.ca)) * cplx(2.0 * c.jx);
    h += (f.cb_d * f.cb) * cplx(2.0 * c.jx);
    h += f.Delta * (f.ca * f.cb);
    h += (f.Delta.dagger() * (f.ca_d * f.cb_d)) * cplx(-1.0);
    h += (f.t.dagger() * (f.ca * f.cb_d)) * cplx(-1.0);
    h += f.t * (f.ca_d * f.cb);
    h += I * cplx(-2.0 * c.jx);
    h += (S12 + S23 + S31) * cplx(c.jp);
    return (h - build_hamiltonian(c)).fro();
}

std::array<double, 2> sector_energies(const GaugeSector& s, const Couplings& c) {
    const double p12 = s.s1 * s.s2, p23 = s.s2 * s.s3, p31 = s.s3 * s.s1;
    const double base = c.jp * (p12 + p23 + p31);
    const double root = std::sqrt(2.0 * c.jx * c.jx * (1.0 + p23) +
                                  2.0 * c.jy * c.jy * (1.0 + p31) +
                                  2.0 * c.jz * c.jz * (1.0 + p12));
    return {base - root, base + root};
}

std::vector<GaugeSector> all_sectors() {
    std::vector<GaugeSector> out;
    for (int s1 : {+1, -1})
        for (int s2 : {+1, -1})
            for (int s3 : {+1, -1}) {
                GaugeSector g;
                g.s1 = s1;
                g.s2 = s2;
                g.s3 = s3;
                g.fully_frustrated = (s1 == s2 && s2 == s3);
                out.push_back(g);
            }
    return out;
}

}  // namespace tristar

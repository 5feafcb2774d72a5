#pragma once

#include <optional>
#include <utility>

#include "tristar/oplin.hpp"

namespace tristar {

// Couplings of the four-spin triangular-star Hamiltonian
//   H = Jx(X1X3 + X2X4) + Jy(Y1Y2 + Y3Y4) + Jz(Z2Z3 + Z1Z4)
//       + Jp(S1 S2 + S2 S3 + S3 S1)
// with the plaquette operators S1..S4 defined in plaquette().
// Defaults are the paper-point ratios jy = jz = jp = 2 jx with jx = 1.
struct Couplings {
    double jx = 1.0;
    double jy = 2.0;
    double jz = 2.0;
    double jp = 2.0;
};

Mat build_hamiltonian(const Couplings& c);

// S1 = z1 x2 y3, S2 = z4 y2 x3, S3 = x1 z2 y4, S4 = y1 z3 x4 = S1 S2 S3.
Mat plaquette(int k);

struct LevelEntry {
    double energy;
    int multiplicity;
    std::string label;   // E_p^+/-, E_x^+/-, ...; coincident levels merge with "/"
};

// Closed-form levels: E_p^± = 3 Jp ± 2 sqrt(Jx²+Jy²+Jz²), E_mu^± = -Jp ± 2 J_mu,
// each twice, merged when coincident (within 1e-9).
std::vector<LevelEntry> analytic_levels(const Couplings& c);

struct ConservationReport {
    std::vector<std::pair<std::string, double>> norms;   // [S_k,H] and [S_i,S_j]
    double worst = 0;
    bool pass = false;
};

ConservationReport verify_conserved(const Couplings& c);

// ---------------------------------------------------------------------------
// Named-state catalog

struct State {
    Vec amp;             // 16 amplitudes, oplin basis ordering
    std::string label;
};

// g1..g4 (E=-6Jx), o1..o4 (E=0), e9..e16 (-4Jx, +2Jx, +12Jx), the plaquette
// eigenstates S+A,S-A,S+B,S-B (E=-6Jx), and the reference states GHZ, W, chi00
// (not eigenstates, no documented energy).
const std::vector<std::string>& catalog_names();
State paper_state(const std::string& name);

// Documented eigenenergy in units of jx at the default-ratio point
// (jy = jz = jp = 2 jx); nullopt for the non-eigenstate reference states.
std::optional<double> catalog_energy_coeff(const std::string& name);

// (rayleigh energy <psi|H|psi>, residual ||(H-E)psi||)
std::pair<double, double> eigen_residual(const State& s, const Couplings& c);

struct GaugeSector {
    int s1 = 1, s2 = 1, s3 = 1;
    bool fully_frustrated = true;   // s1 = s2 = s3; otherwise minimally frustrated
};

// Joint plaquette eigenvalues of a sector eigenstate;
// throws NotSectorEigenstate if any residual reaches 1e-8.
GaugeSector sector_of(const State& s);

State flip_all(const State& s);   // sigma^x on all four sites

// 4x4 matrix M with op*g_i = sum_j M(i,j) g_j on the ground catalog basis;
// throws SubspaceLeak if the residual off the ground space reaches 1e-10.
Mat ground_action(const Mat& op);
Mat plaquette_ground_action();    // ground_action(plaquette(1))

}  // namespace tristar

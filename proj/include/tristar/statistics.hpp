#pragma once

#include <map>

#include "tristar/model.hpp"

namespace tristar {

// Site relabeling: the new bit at site i is taken from site src[i-1].
struct Permutation {
    std::array<int, 4> src{1, 2, 3, 4};
    std::string name;
};

Permutation pair_swap();                    // [12;34]: |abcd> -> |cdab>
Permutation transposition(int i, int j);
// Swap of the two sites NOT shared by plaquettes i and j:
// (S1,S2) -> (1,4), (S1,S3) -> (3,4), (S2,S3) -> (1,3).
Permutation plaquette_swap(int i, int j);

Mat permutation_matrix(const Permutation& p);

// Statistical matrix of a permutation restricted to a degenerate subspace:
// P v_i = sum_j eta(i,j) v_j. When the permuted basis leaves the span the
// result is informative rather than fatal: closed = false, residual carries
// the worst leak norm, and eta holds the in-span projection coefficients.
struct StatsResult {
    Mat eta;
    std::string classification;   // boson | fermion | exotic | none (when not closed)
    bool closed = false;
    double residual = 0;          // worst ||P v_i - sum_j eta(i,j) v_j||
};

StatsResult subspace_statistics(const std::vector<State>& basis, const Permutation& p);

std::string classify(const Mat& eta);   // throws NotUnitary

// Per-configuration amplitude ratios (P psi)_k / psi_k over the support of
// psi (|psi_k| > 1e-10); throws SupportMismatch / NonUnimodularRatio.
std::map<int, cplx> phase_map(const State& s, const Permutation& p);

// Ordered product of permutation matrices, rightmost applied first.
Mat braid_loop(const std::vector<Permutation>& seq);

struct ChiReport {
    double sym_dist = 0;        // || Pi+ chi - chi1 ||
    double antisym_dist = 0;    // || Pi- chi - chi2 ||
    double eigen_sym = 0;       // || P chi1 - chi1 ||
    double eigen_antisym = 0;   // || P chi2 + chi2 ||
    double resolution = 0;      // || Pi+ + Pi- - I ||_F
    bool pass = false;
};

// Splits the catalog chi00 into pair-swap symmetric/antisymmetric parts and
// checks them against the documented two-piece decomposition.
ChiReport chi_decomposition_check();

}  // namespace tristar

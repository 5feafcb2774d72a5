#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tristar {

using cplx = std::complex<double>;

// Every recoverable failure carries a short machine-readable name
// (DuplicateSite, NotHermitian, NotClosed, ...) plus a human message.
struct Error : std::runtime_error {
    std::string name;
    Error(std::string n, const std::string& msg)
        : std::runtime_error(n + ": " + msg), name(std::move(n)) {}
};

// Dense row-major complex matrix. Everything in this code is at most 16x16,
// so no sparsity, no views, no cleverness.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t r, std::size_t c) { return Mat(r, c); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator*(cplx s) const;
    Mat& operator+=(const Mat& o);

    Mat dagger() const;
    cplx trace() const;
    double fro() const;                  // Frobenius norm
    double hermitian_defect() const;     // ||M - M^dagger||_F
    double max_abs_diff(const Mat& o) const;

    const std::vector<cplx>& data() const { return a_; }

  private:
    std::size_t rows_, cols_;
    std::vector<cplx> a_;
};

inline Mat operator*(cplx s, const Mat& m) { return m * s; }

Mat kron(const Mat& a, const Mat& b);

// State vectors are plain complex arrays; 16 entries for the 4-spin model.
using Vec = std::vector<cplx>;

Vec mul(const Mat& m, const Vec& v);
cplx dot(const Vec& a, const Vec& b);    // conjugate-linear in the first argument
double norm(const Vec& v);
Vec axpy(cplx a, const Vec& x, const Vec& y);   // a*x + y

// ---------------------------------------------------------------------------
// Pauli strings

struct PauliFactor {
    int site;    // 1-based
    char axis;   // 'x' | 'y' | 'z'
};

struct PauliString {
    cplx coefficient{1.0, 0.0};
    std::vector<PauliFactor> factors;
    int n_sites{4};
};

// Basis convention: index k in 0..2^n-1 is the bit string b1 b2 ... bn with
// site 1 the most significant bit; bit 0 = spin up, bit 1 = spin down.
// |up down up up> on 4 sites -> index 4.
Mat compile(const PauliString& ps);

Mat commutator(const Mat& a, const Mat& b);
Mat anticommutator(const Mat& a, const Mat& b);

// ---------------------------------------------------------------------------
// Eigensolver

struct HermitianSpectrum {
    std::vector<double> eigenvalues;   // ascending
    Mat eigenvectors;                  // orthonormal columns, same order
};

// Cyclic Jacobi for complex Hermitian matrices, fixed sweep order, converging
// when the off-diagonal Frobenius norm drops below 1e-13 * ||M||_F.
// Deterministic for a fixed input.
HermitianSpectrum hermitian_eig(const Mat& m);

struct Level {
    double energy;
    int multiplicity;
};

// Clusters an ascending eigenvalue list; group energy is the group mean.
std::vector<Level> group_levels(const std::vector<double>& ascending, double tol);

// Default tolerances: algebraic identities on integer-entry operators,
// eigenpair residuals, and level grouping.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kEigenTol = 1e-9;
inline constexpr double kGroupTol = 1e-6;

}  // namespace tristar

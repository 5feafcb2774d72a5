#include "tristar/oplin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tristar {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("DimensionMismatch", "matrix addition");
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("DimensionMismatch", "matrix subtraction");
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw Error("DimensionMismatch", "matrix product");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx aik = a_[i * cols_ + k];
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.a_[i * o.cols_ + j] += aik * o.a_[k * o.cols_ + j];
        }
    return r;
}

Mat Mat::operator*(cplx s) const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("DimensionMismatch", "matrix addition");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Mat Mat::dagger() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

cplx Mat::trace() const {
    cplx t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double Mat::fro() const {
    double s = 0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double Mat::hermitian_defect() const {
    if (rows_ != cols_) return 1e30;
    double s = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            s += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
    return std::sqrt(s);
}

double Mat::max_abs_diff(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return 1e30;
    double m = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

Vec mul(const Mat& m, const Vec& v) {
    if (m.cols() != v.size()) throw Error("DimensionMismatch", "matrix-vector product");
    Vec r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        cplx s{};
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

cplx dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("DimensionMismatch", "inner product");
    cplx s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double norm(const Vec& v) {
    double s = 0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

Vec axpy(cplx a, const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw Error("DimensionMismatch", "axpy");
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + y[i];
    return r;
}

// ---------------------------------------------------------------------------

Mat compile(const PauliString& ps) {
    const int n = ps.n_sites;
    const std::size_t dim = std::size_t{1} << n;
    std::array<char, 64> axis_of{};
    for (const auto& f : ps.factors) {
        if (f.site < 1 || f.site > n)
            throw Error("BadIndex", "Pauli factor site out of range");
        if (axis_of[f.site] != 0)
            throw Error("DuplicateSite", "site " + std::to_string(f.site) + " appears twice");
        if (f.axis != 'x' && f.axis != 'y' && f.axis != 'z')
            throw Error("BadIndex", "unknown Pauli axis");
        axis_of[f.site] = f.axis;
    }
    Mat m(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        std::size_t target = k;
        cplx amp = ps.coefficient;
        for (int site = 1; site <= n; ++site) {
            const char ax = axis_of[site];
            if (ax == 0) continue;
            const int bit = static_cast<int>((k >> (n - site)) & 1u);
            const std::size_t mask = std::size_t{1} << (n - site);
            switch (ax) {
                case 'x':
                    target ^= mask;
                    break;
                case 'y':
                    target ^= mask;
                    amp *= (bit == 0) ? cplx(0, 1) : cplx(0, -1);
                    break;
                case 'z':
                    amp *= (bit == 0) ? 1.0 : -1.0;
                    break;
            }
        }
        m(target, k) += amp;
    }
    return m;
}

Mat commutator(const Mat& a, const Mat& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw Error("DimensionMismatch", "commutator");
    return a * b - b * a;
}

Mat anticommutator(const Mat& a, const Mat& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw Error("DimensionMismatch", "anticommutator");
    return a * b + b * a;
}

// ---------------------------------------------------------------------------
// Cyclic complex Jacobi. The pivot (p,q) is annihilated by the unitary
//   J(p,p)=c, J(p,q)=s, J(q,p)=-s*exp(-i a), J(q,q)=c*exp(-i a)
// with a = arg A(p,q) and (c,s) the classic real rotation for the
// phase-stripped 2x2 block.

namespace {

double offdiag_fro(const Mat& a) {
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

HermitianSpectrum hermitian_eig(const Mat& m) {
    if (m.rows() != m.cols()) throw Error("NotHermitian", "matrix is not square");
    if (m.hermitian_defect() >= 1e-12)
        throw Error("NotHermitian", "hermitian defect exceeds 1e-12");

    const std::size_t n = m.rows();
    Mat a = m;
    Mat v = Mat::identity(n);
    const double thresh = 1e-13 * m.fro();

    for (int sweep = 0; sweep < 100 && offdiag_fro(a) > thresh; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                const cplx phase = apq / mag;   // exp(i a)
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // rows p,q of A  (A <- J^dagger A)
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - s * phase * aqj;
                    a(q, j) = s * apj + c * phase * aqj;
                }
                // columns p,q of A  (A <- A J)
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * std::conj(phase) * aiq;
                    a(i, q) = s * aip + c * std::conj(phase) * aiq;
                }
                // accumulate V <- V J
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * std::conj(phase) * viq;
                    v(i, q) = s * vip + c * std::conj(phase) * viq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    HermitianSpectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Mat(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::vector<Level> group_levels(const std::vector<double>& ascending, double tol) {
    std::vector<Level> out;
    std::size_t i = 0;
    while (i < ascending.size()) {
        std::size_t j = i + 1;
        double sum = ascending[i];
        while (j < ascending.size() && ascending[j] - ascending[j - 1] <= tol) {
            sum += ascending[j];
            ++j;
        }
        out.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
        i = j;
    }
    return out;
}

}  // namespace tristar

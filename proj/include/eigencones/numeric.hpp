#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "eigencones/errors.hpp"

namespace eigencones {

using Complex = std::complex<double>;

/// Dense row-major complex matrix, sized for spectra up to a few dozen.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    ComplexMatrix operator*(const ComplexMatrix& other) const {
        if (cols_ != other.rows_) throw DimensionMismatchError("matrix product shape mismatch");
        ComplexMatrix out(rows_, other.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                Complex a = (*this)(i, k);
                if (a == Complex(0)) continue;
                for (int j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
            }
        return out;
    }

    ComplexMatrix operator+(const ComplexMatrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw DimensionMismatchError("matrix sum shape mismatch");
        ComplexMatrix out = *this;
        for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
        return out;
    }

    ComplexMatrix scaled(Complex s) const {
        ComplexMatrix out = *this;
        for (auto& v : out.data_) v *= s;
        return out;
    }

    ComplexMatrix block(int row0, int col0, int nrows, int ncols) const {
        ComplexMatrix out(nrows, ncols);
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
        return out;
    }

    double max_abs() const {
        double m = 0;
        for (const auto& v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    double hermitian_residual() const {
        double m = 0;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }

    static ComplexMatrix identity(int n) {
        ComplexMatrix out(n, n);
        for (int i = 0; i < n; ++i) out(i, i) = 1;
        return out;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Complex> data_;
};

/// Deterministic random stream: a fixed 64-bit generator plus a Box-Muller
/// transform, so identical seeds give identical samples on any platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    /// Derives an independent per-trial stream from a base seed.
    static Rng for_trial(uint64_t seed, uint64_t trial) {
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    uint64_t next() { return gen_(); }

    double uniform() {  // in (0, 1)
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    }

    uint64_t below(uint64_t n) { return gen_() % n; }

    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = uniform(), v = uniform();
        double r = std::sqrt(-2.0 * std::log(u));
        spare_ = r * std::sin(2.0 * M_PI * v);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * v);
    }

    Complex cgauss() { return Complex(gauss(), gauss()); }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0;
};

inline ComplexMatrix random_gaussian(int rows, int cols, Rng& rng) {
    ComplexMatrix out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out(i, j) = rng.cgauss();
    return out;
}

inline ComplexMatrix random_hermitian(int n, Rng& rng) {
    ComplexMatrix g = random_gaussian(n, n, rng);
    ComplexMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = (g(i, j) + std::conj(g(j, i))) / 2.0;
    return out;
}

inline ComplexMatrix random_real_symmetric(int n, Rng& rng) {
    ComplexMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double v = rng.gauss();
            out(i, j) = v;
            out(j, i) = v;
        }
    return out;
}

/// Haar-distributed unitary: Gaussian matrix, Gram-Schmidt, then a phase
/// fix making the R factor's diagonal positive.
inline ComplexMatrix random_unitary(int n, Rng& rng) {
    if (n < 1) throw BadRangeError("random_unitary needs n >= 1");
    ComplexMatrix a = random_gaussian(n, n, rng);
    // Modified Gram-Schmidt on columns.
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            Complex dot(0);
            for (int i = 0; i < n; ++i) dot += std::conj(a(i, k)) * a(i, j);
            for (int i = 0; i < n; ++i) a(i, j) -= dot * a(i, k);
        }
        double norm = 0;
        for (int i = 0; i < n; ++i) norm += std::norm(a(i, j));
        norm = std::sqrt(norm);
        // The leading entry's phase is divided out so the implicit R factor
        // has positive diagonal (this is what makes the distribution Haar).
        Complex lead(0);
        for (int i = 0; i < n; ++i)
            if (std::abs(a(i, j)) > 1e-300) { lead = a(i, j) / std::abs(a(i, j)); break; }
        if (lead == Complex(0)) lead = 1;
        for (int i = 0; i < n; ++i) a(i, j) /= norm * lead;
    }
    return a;
}

struct EigenDecomposition {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // columns, matching the value order
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Accurate to a few
/// ulps at the sizes used here (n <= 64).
inline EigenDecomposition eigen_hermitian(const ComplexMatrix& m,
                                          double hermitian_tol = 1e-12) {
    if (m.rows() != m.cols()) throw NotHermitianError("matrix is not square");
    const int n = m.rows();
    const double scale = std::max(m.max_abs(), 1.0);
    if (m.hermitian_residual() > hermitian_tol * scale)
        throw NotHermitianError("matrix is not Hermitian within tolerance");

    ComplexMatrix a = m;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) a(i, j) = std::conj(a(j, i));
    ComplexMatrix v = ComplexMatrix::identity(n);

    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off = std::max(off, std::abs(a(i, j)));
        if (off <= 1e-15 * scale) break;
        if (sweep == max_sweeps - 1)
            throw NotConvergedError("Jacobi eigensolver did not converge");
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                Complex apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double app = a(p, p).real(), aqq = a(q, q).real();
                // U = diag(phase, 1) * rotation: the phase makes the pivot
                // block real, the rotation zeroes it.
                const Complex phase = apq / std::abs(apq);
                const double g = std::abs(apq);
                const double theta = 0.5 * std::atan2(2 * g, aqq - app);
                const double c = std::cos(theta), s = std::sin(theta);
                const Complex upp = c * phase, upq = s * phase;
                for (int i = 0; i < n; ++i) {  // A <- A U
                    Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = aip * upp - aiq * s;
                    a(i, q) = aip * upq + aiq * c;
                }
                for (int j = 0; j < n; ++j) {  // A <- U* A
                    Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = std::conj(upp) * apj - s * aqj;
                    a(q, j) = std::conj(upq) * apj + c * aqj;
                }
                for (int i = 0; i < n; ++i) {  // V <- V U
                    Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = vip * upp - viq * s;
                    v(i, q) = vip * upq + viq * c;
                }
            }
        }
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });
    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

inline std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m) {
    return eigen_hermitian(m).values;
}

/// Descending singular values via the Hermitian eigenproblem on the
/// smaller Gram matrix.
inline std::vector<double> singular_values(const ComplexMatrix& a) {
    if (a.rows() < 1 || a.cols() < 1) throw BadRangeError("singular_values needs a nonempty matrix");
    ComplexMatrix gram = a.rows() <= a.cols() ? a * a.adjoint() : a.adjoint() * a;
    std::vector<double> ev = eigenvalues_hermitian(gram);
    std::vector<double> out(ev.size());
    for (size_t i = 0; i < ev.size(); ++i) out[i] = std::sqrt(std::max(ev[i], 0.0));
    return out;
}

/// Backward error ||M - U diag(e) U*||_max of a computed decomposition.
inline double eigen_backward_error(const ComplexMatrix& m, const EigenDecomposition& d) {
    const int n = m.rows();
    ComplexMatrix rec(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex sum(0);
            for (int k = 0; k < n; ++k)
                sum += d.vectors(i, k) * d.values[k] * std::conj(d.vectors(j, k));
            rec(i, j) = sum - m(i, j);
        }
    return rec.max_abs();
}

}  // namespace eigencones

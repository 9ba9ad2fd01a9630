// linalg.hpp — small dense helpers shared by the numeric modules:
// a tiny matrix type over any field element, modified Gram-Schmidt,
// closed-form real cubics, polynomial evaluation, and (double only)
// companion-matrix real roots via Eigen.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "trivec/types.hpp"

namespace trivec {

// ---------------------------------------------------------------------------
// Mat<T>: row-major dense matrix, T is a field element (cx<R> or R)
// ---------------------------------------------------------------------------

template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    [[nodiscard]] int rows() const { return r_; }
    [[nodiscard]] int cols() const { return c_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Mat& operator+=(const Mat& o) {
        for (size_t n = 0; n < a_.size(); ++n) a_[n] += o.a_[n];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        for (size_t n = 0; n < a_.size(); ++n) a_[n] -= o.a_[n];
        return *this;
    }
    template <class S>
    Mat& operator*=(const S& s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    [[nodiscard]] T trace() const {
        T t{};
        for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
        return t;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<T> a_;
};

template <class T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> m(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            for (int j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
        }
    return m;
}

template <class T>
Mat<T> operator+(Mat<T> a, const Mat<T>& b) { return a += b; }
template <class T>
Mat<T> operator-(Mat<T> a, const Mat<T>& b) { return a -= b; }

template <class R>
Mat<cx<R>> adjoint(const Mat<cx<R>>& a) {
    Mat<cx<R>> m(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(j, i) = conj(a(i, j));
    return m;
}

template <class R>
R frobenius_norm(const Mat<cx<R>>& a) {
    using std::sqrt;
    R s(0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += norm2(a(i, j));
    return R(sqrt(s));
}

// tr((A)^p) for Hermitian A by repeated squaring-free plain powers (tiny n).
template <class R>
R trace_power_hermitian(const Mat<cx<R>>& a, int p) {
    Mat<cx<R>> acc = a;
    for (int q = 1; q < p; ++q) acc = acc * a;
    return acc.trace().re;
}

// ---------------------------------------------------------------------------
// Modified Gram-Schmidt on matrix columns (in place); returns the R-diagonal.
// ---------------------------------------------------------------------------

template <class R>
std::vector<R> mgs_orthonormalize(Mat<cx<R>>& m) {
    using std::sqrt;
    std::vector<R> diag;
    diag.reserve(static_cast<size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) {
        for (int k = 0; k < j; ++k) {
            cx<R> proj{};
            for (int i = 0; i < m.rows(); ++i) proj += conj(m(i, k)) * m(i, j);
            for (int i = 0; i < m.rows(); ++i) m(i, j) -= proj * m(i, k);
        }
        R n2(0);
        for (int i = 0; i < m.rows(); ++i) n2 += norm2(m(i, j));
        R n = R(sqrt(n2));
        diag.push_back(n);
        if (n > R(0))
            for (int i = 0; i < m.rows(); ++i) m(i, j) /= n;
    }
    return diag;
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

// Horner evaluation, coefficients low-to-high.
template <class R>
R poly_eval(const std::vector<R>& c, const R& t) {
    R v(0);
    for (size_t n = c.size(); n-- > 0;) v = v * t + c[n];
    return v;
}

template <class R>
std::vector<R> poly_derivative(const std::vector<R>& c) {
    std::vector<R> d;
    if (c.size() <= 1) return d;
    d.reserve(c.size() - 1);
    for (size_t n = 1; n < c.size(); ++n) d.push_back(c[n] * R(static_cast<double>(n)));
    return d;
}

// Real roots of x^3 + p2 x^2 + p1 x + p0 whose roots are known to be all real
// (trigonometric form; the discriminant is clamped when round-off pushes it
// slightly negative). Returns roots sorted decreasingly.
template <class R>
std::array<R, 3> cubic_roots_all_real(const R& p2, const R& p1, const R& p0) {
    using std::acos;
    using std::cos;
    using std::sqrt;
    const R third = R(1) / R(3);
    R shift = p2 * third;
    // depressed cubic t^3 + p t + q, x = t - shift
    R p = p1 - p2 * p2 * third;
    R q = p2 * p2 * p2 * (R(2) / R(27)) - p2 * p1 * third + p0;
    std::array<R, 3> roots{};
    R mp = -p * third;  // = (p<0) ? |p|/3
    if (mp <= R(0)) {
        // triple/near-triple root (p >= 0 requires p ~ 0 when all roots real)
        roots[0] = roots[1] = roots[2] = -shift;
        return roots;
    }
    R s = R(sqrt(mp));
    R arg = q / (R(-2) * s * s * s);
    if (arg > R(1)) arg = R(1);
    if (arg < R(-1)) arg = R(-1);
    R phi = R(acos(arg));
    const R pi = R(acos(R(-1)));
    for (int k = 0; k < 3; ++k) {
        R t = R(2) * s * R(cos((phi + R(2 * k) * pi) * third));
        roots[static_cast<size_t>(k)] = t - shift;
    }
    std::sort(roots.begin(), roots.end(), [](const R& u, const R& v) { return u > v; });
    return roots;
}

// ---------------------------------------------------------------------------
// Degree-n real roots (double path): balanced companion matrix + one Newton
// step. Coefficients low-to-high, leading coefficient nonzero after trimming.
// ---------------------------------------------------------------------------

struct RealRoot {
    double value;
    double imag_residual;  // |Im| of the eigenvalue it came from
};

inline std::vector<RealRoot> real_roots(std::vector<double> c, double imag_tol) {
    // trim trailing (leading-coefficient) zeros
    double cmax = 0;
    for (double v : c) cmax = std::max(cmax, std::abs(v));
    if (cmax == 0) return {};
    while (!c.empty() && std::abs(c.back()) < 1e-14 * cmax) c.pop_back();
    if (c.size() <= 1) return {};

    for (auto& v : c) v /= cmax;
    const size_t deg = c.size() - 1;

    // power-of-two scaling t = s*tau balancing |c_0| against |c_deg|
    double s = 1.0;
    if (c.front() != 0.0) {
        double target = std::pow(std::abs(c.front() / c.back()), 1.0 / static_cast<double>(deg));
        s = std::exp2(std::round(std::log2(std::max(target, 1e-4))));
        s = std::clamp(s, 0x1p-8, 0x1p8);
    }
    std::vector<double> cs = c;
    double pw = 1.0;
    for (size_t n = 0; n <= deg; ++n, pw *= s) cs[n] = c[n] * pw;

    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<int>(deg), static_cast<int>(deg));
    for (size_t n = 0; n + 1 < deg; ++n) comp(static_cast<int>(n) + 1, static_cast<int>(n)) = 1.0;
    for (size_t n = 0; n < deg; ++n)
        comp(static_cast<int>(n), static_cast<int>(deg) - 1) = -cs[n] / cs[deg];

    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
    std::vector<RealRoot> out;
    auto dc = poly_derivative(c);
    for (int n = 0; n < es.eigenvalues().size(); ++n) {
        std::complex<double> ev = es.eigenvalues()(n);
        double t = ev.real() * s;
        double im = std::abs(ev.imag()) * s;
        if (im > imag_tol) continue;
        // one derivative-based refinement step on the unscaled polynomial
        double fp = poly_eval(dc, t);
        if (fp != 0.0) {
            double step = poly_eval(c, t) / fp;
            if (std::isfinite(step) && std::abs(step) < 0.1) t -= step;
        }
        out.push_back(RealRoot{t, im});
    }
    std::sort(out.begin(), out.end(),
              [](const RealRoot& u, const RealRoot& v) { return u.value > v.value; });
    return out;
}

// Newton polish in an arbitrary scalar (used to lift double roots to
// extended precision; the target root must be simple).
template <class R>
R polish_root(const std::vector<R>& c, R t, int iters) {
    auto dc = poly_derivative(c);
    for (int n = 0; n < iters; ++n) {
        R fp = poly_eval(dc, t);
        if (fp == R(0)) break;
        t -= poly_eval(c, t) / fp;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Determinant over any field (partial-pivot LU); used for Sylvester resultants.
// ---------------------------------------------------------------------------

template <class R>
cx<R> determinant(Mat<cx<R>> m) {
    using std::swap;
    int n = m.rows();
    cx<R> det(R(1), R(0));
    for (int col = 0; col < n; ++col) {
        int piv = col;
        R best = abs(m(col, col));
        for (int r = col + 1; r < n; ++r) {
            R v = abs(m(r, col));
            if (v > best) { best = v; piv = r; }
        }
        if (best == R(0)) return cx<R>();
        if (piv != col) {
            for (int j = 0; j < n; ++j) swap(m(piv, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        cx<R> inv = cx<R>(R(1), R(0)) / m(col, col);
        for (int r = col + 1; r < n; ++r) {
            cx<R> f = m(r, col) * inv;
            for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

template <class R>
R determinant_real(const Mat<R>& m0) {
    using std::abs;
    using std::swap;
    Mat<R> m = m0;
    int n = m.rows();
    R det(1);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        R best = abs(m(col, col));
        for (int r = col + 1; r < n; ++r) {
            R v = abs(m(r, col));
            if (v > best) { best = v; piv = r; }
        }
        if (best == R(0)) return R(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) swap(m(piv, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        R inv = R(1) / m(col, col);
        for (int r = col + 1; r < n; ++r) {
            R f = m(r, col) * inv;
            for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

// ---------------------------------------------------------------------------
// Hermitian eigenvalues (double path) via Eigen, ascending order.
// ---------------------------------------------------------------------------

inline std::vector<double> hermitian_eigenvalues(const Mat<cxd>& m) {
    int n = m.rows();
    Eigen::MatrixXcd em(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) em(i, j) = std::complex<double>(m(i, j).re, m(i, j).im);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(em, Eigen::EigenvaluesOnly);
    std::vector<double> ev(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<size_t>(i)] = es.eigenvalues()(i);
    return ev;
}

}  // namespace trivec

// types.hpp — scalar model and error taxonomy.
//
// Every numeric routine in this library is templated on a real scalar R.
// Two models are supported out of the box:
//   * double                                  (binary64, the default)
//   * boost::multiprecision::cpp_bin_float_50 (50 decimal digits, "extended")
// Complex arithmetic uses the minimal cx<R> type below so that both models
// share one code path.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace trivec {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

// Domain error with a stable name ("NotSOV", "ZeroState", ...). The CLI
// forwards the name verbatim in its error payload and maps it to exit code 1.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    [[nodiscard]] const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(const char* name, const std::string& what) {
    throw domain_error(name, what);
}

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

using mp50 = boost::multiprecision::cpp_bin_float_50;

template <class R>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool is_double = true;
    static constexpr int digits10 = 15;
    static double epsilon() { return std::numeric_limits<double>::epsilon(); }
    static double from_double(double v) { return v; }
    static double to_double(double v) { return v; }
};

template <>
struct scalar_traits<mp50> {
    static constexpr bool is_double = false;
    static constexpr int digits10 = 50;
    static mp50 epsilon() { return std::numeric_limits<mp50>::epsilon(); }
    static mp50 from_double(double v) { return mp50(v); }
    static double to_double(const mp50& v) { return v.convert_to<double>(); }
};

// ---------------------------------------------------------------------------
// Minimal complex type (one code path for double and multiprecision reals)
// ---------------------------------------------------------------------------

template <class R>
struct cx {
    R re{}, im{};

    cx() = default;
    cx(R r) : re(std::move(r)) {}  // NOLINT: implicit real->complex is intended
    cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}

    cx& operator+=(const cx& o) { re += o.re; im += o.im; return *this; }
    cx& operator-=(const cx& o) { re -= o.re; im -= o.im; return *this; }
    cx& operator*=(const cx& o) {
        R r = re * o.re - im * o.im;
        im  = re * o.im + im * o.re;
        re  = std::move(r);
        return *this;
    }
    cx& operator*=(const R& s) { re *= s; im *= s; return *this; }
    cx& operator/=(const R& s) { re /= s; im /= s; return *this; }
};

template <class R> cx<R> operator+(cx<R> a, const cx<R>& b) { return a += b; }
template <class R> cx<R> operator-(cx<R> a, const cx<R>& b) { return a -= b; }
template <class R> cx<R> operator-(const cx<R>& a) { return cx<R>(-a.re, -a.im); }
template <class R> cx<R> operator*(cx<R> a, const cx<R>& b) { return a *= b; }
template <class R> cx<R> operator*(cx<R> a, const R& s) { return a *= s; }
template <class R> cx<R> operator*(const R& s, cx<R> a) { return a *= s; }
template <class R> cx<R> operator/(cx<R> a, const R& s) { return a /= s; }

template <class R>
cx<R> operator/(const cx<R>& a, const cx<R>& b) {
    R n = b.re * b.re + b.im * b.im;
    return cx<R>((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
}

template <class R> cx<R> conj(const cx<R>& a) { return cx<R>(a.re, -a.im); }
template <class R> R norm2(const cx<R>& a) { return a.re * a.re + a.im * a.im; }

template <class R>
R abs(const cx<R>& a) {
    using std::sqrt;
    return R(sqrt(norm2(a)));
}

// Unit phase u with u*a real nonnegative; returns 1 for a == 0.
template <class R>
cx<R> phase_to_real(const cx<R>& a) {
    using std::sqrt;
    R m = abs(a);
    if (m == R(0)) return cx<R>(R(1), R(0));
    return cx<R>(a.re / m, -a.im / m);
}

using cxd = cx<double>;

}  // namespace trivec

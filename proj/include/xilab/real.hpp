#pragma once

// Extended-precision scalar substrate: the Real/Complex types, precision
// control, and the error type shared by every module.

#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <ios>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace xilab {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecision = 60;
inline constexpr unsigned kMinPrecision = 15;

enum class ErrorKind {
    NonPositiveConstantTerm,
    NonzeroInnerConstant,
    IncompatibleOrder,
    NonConvergence,
    NonPositiveLeadingCoefficient,
    NonPositiveG,
    DegenerateBasis,
    NoConvergence,
    TailNotNegligible,
    InsufficientZerosFound,
    UnknownReference,
    DegenerateFit,
    ComplexAnchor,
    MissingPipeline,
    SingularJacobian,
    InvalidArgument,
};

inline std::string_view to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::NonPositiveConstantTerm: return "NonPositiveConstantTerm";
    case ErrorKind::NonzeroInnerConstant: return "NonzeroInnerConstant";
    case ErrorKind::IncompatibleOrder: return "IncompatibleOrder";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NonPositiveLeadingCoefficient: return "NonPositiveLeadingCoefficient";
    case ErrorKind::NonPositiveG: return "NonPositiveG";
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::TailNotNegligible: return "TailNotNegligible";
    case ErrorKind::InsufficientZerosFound: return "InsufficientZerosFound";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::DegenerateFit: return "DegenerateFit";
    case ErrorKind::ComplexAnchor: return "ComplexAnchor";
    case ErrorKind::MissingPipeline: return "MissingPipeline";
    case ErrorKind::SingularJacobian: return "SingularJacobian";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// True for failures of a numerical method (as opposed to bad input).
inline bool is_numerical(ErrorKind k) {
    switch (k) {
    case ErrorKind::NonConvergence:
    case ErrorKind::NoConvergence:
    case ErrorKind::TailNotNegligible:
    case ErrorKind::InsufficientZerosFound:
    case ErrorKind::DegenerateBasis:
    case ErrorKind::SingularJacobian:
        return true;
    default:
        return false;
    }
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline unsigned working_precision() { return Real::default_precision(); }

inline void set_working_precision(unsigned digits10) {
    if (digits10 < kMinPrecision)
        throw Error(ErrorKind::InvalidArgument,
                    "precision must be at least " + std::to_string(kMinPrecision) + " digits");
    Real::default_precision(digits10);
}

/// Sets the default working precision for the lifetime of the scope.
/// The mpfr default precision is process-wide, so scopes must not be
/// opened concurrently with different values.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits10) : saved_(working_precision()) {
        set_working_precision(digits10);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }

    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

inline Real pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

inline Real ln2() {
    Real r;
    mpfr_const_log2(r.backend().data(), MPFR_RNDN);
    return r;
}

inline Real pow10(int e) { return pow(Real(10), e); }

/// 10^{-digits}, the customary "small relative to working precision" scale.
inline Real tiny(int digits) { return pow10(-digits); }

inline Real parse_real(const std::string& s) {
    try {
        return Real(s);
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "not a number: '" + s + "'");
    }
}

/// Full-precision decimal string in scientific notation.
inline std::string to_decimal(const Real& x, unsigned digits = 0) {
    if (digits == 0) digits = x.precision();
    return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

/// Short human form (default six significant digits).
inline std::string to_short(const Real& x, unsigned digits = 6) {
    return x.str(static_cast<std::streamsize>(digits));
}

/// Complex number over Real. Only the operations the pipeline needs.
struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(int r) : re(r), im(0) {}

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator*=(const Real& s) { re *= s; im *= s; return *this; }
    Complex& operator/=(const Complex& o) {
        // Smith's algorithm keeps intermediate magnitudes bounded.
        if (abs(o.re) >= abs(o.im)) {
            Real r = o.im / o.re;
            Real d = o.re + o.im * r;
            Real nr = (re + im * r) / d;
            im = (im - re * r) / d;
            re = std::move(nr);
        } else {
            Real r = o.re / o.im;
            Real d = o.re * r + o.im;
            Real nr = (re * r + im) / d;
            im = (im * r - re) / d;
            re = std::move(nr);
        }
        return *this;
    }
    Complex& operator/=(const Real& s) { re /= s; im /= s; return *this; }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator*(Complex a, const Real& s) { return a *= s; }
    friend Complex operator*(const Real& s, Complex a) { return a *= s; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator/(Complex a, const Real& s) { return a /= s; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
};

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Complex polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }
inline Complex exp(const Complex& z) { return polar(exp(z.re), z.im); }

}  // namespace xilab

#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <complex>
#include <string>
#include <string_view>

namespace bwexp {

/// Binary precision of a computation context. All extended-precision values
/// created while a PrecisionScope is active carry at least this many bits.
struct Precision {
    unsigned bits = 256;

    static constexpr unsigned kMinBits = 64;

    /// Throws std::invalid_argument when bits < kMinBits.
    void validate() const;

    /// Relative tolerance 2^(-bits/2) used for equality and zero tests.
    double half_tolerance() const;
    /// 2^(-bits/4), the residual threshold for constructions with cancellation.
    double quarter_tolerance() const;
};

/// Sets the thread-local MPFR default precision for its lifetime.
class PrecisionScope {
public:
    explicit PrecisionScope(Precision prec);
    ~PrecisionScope();

    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    mpfr_prec_t saved_;
};

/// Bits of the currently active context.
unsigned current_bits();

/// Extended-precision real scalar. Each value owns its precision; binary
/// operations round to the larger precision of their operands.
class Real {
public:
    Real();
    Real(double v);
    template <std::integral I>
    Real(I v) : Real()
    {
        if constexpr (std::is_signed_v<I>)
            mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN);
        else
            mpfr_set_ui(v_, static_cast<unsigned long>(v), MPFR_RNDN);
    }
    explicit Real(std::string_view decimal);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    /// Scientific notation with `digits` significant digits (0: all digits the
    /// precision supports).
    std::string to_string(int digits = 0) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    friend Real operator-(const Real& a);
    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

private:
    struct WithBits {};
    Real(WithBits, mpfr_prec_t bits);
    static Real result_for(const Real& a, const Real& b);

    mpfr_t v_;

    friend Real abs(const Real&);
    friend Real sqrt(const Real&);
    friend Real exp(const Real&);
    friend Real log(const Real&);
    friend Real sin(const Real&);
    friend Real cos(const Real&);
    friend Real atan2(const Real&, const Real&);
    friend Real hypot(const Real&, const Real&);
    friend Real pow(const Real&, long);
    friend Real pow(const Real&, const Real&);
    friend Real floor(const Real&);
    friend Real ldexp(const Real&, long);
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, long e);
Real pow(const Real& x, const Real& e);
Real floor(const Real& x);
Real ldexp(const Real& x, long e);

Real pi();
Real euler_e();
/// m! at the current precision.
Real factorial(unsigned long m);

/// Complex scalar over Real.
struct Complex {
    Real re;
    Real im;

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(double r) : re(r), im(0) {}
    Complex(double r, double i) : re(r), im(i) {}
    template <std::integral I>
    Complex(I r) : re(r), im(0) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
};

Complex operator-(const Complex& a);
Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Real& s, const Complex& a);
Complex operator/(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Real& s);

Complex conj(const Complex& z);
/// |z|^2
Real norm(const Complex& z);
Real abs(const Complex& z);
Complex exp(const Complex& z);
Complex pow(const Complex& z, unsigned e);
Complex polar(const Real& r, const Real& theta);

}  // namespace bwexp

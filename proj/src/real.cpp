#include "bwexp/real.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bwexp {

void Precision::validate() const
{
    if (bits < kMinBits)
        throw std::invalid_argument("precision must be at least " + std::to_string(kMinBits) + " bits");
}

double Precision::half_tolerance() const { return std::ldexp(1.0, -static_cast<int>(bits / 2)); }

double Precision::quarter_tolerance() const { return std::ldexp(1.0, -static_cast<int>(bits / 4)); }

PrecisionScope::PrecisionScope(Precision prec) : saved_(mpfr_get_default_prec())
{
    prec.validate();
    mpfr_set_default_prec(static_cast<mpfr_prec_t>(prec.bits));
}

PrecisionScope::~PrecisionScope() { mpfr_set_default_prec(saved_); }

unsigned current_bits() { return static_cast<unsigned>(mpfr_get_default_prec()); }

Real::Real() { mpfr_init_set_ui(v_, 0, MPFR_RNDN); }

Real::Real(double v) { mpfr_init_set_d(v_, v, MPFR_RNDN); }

Real::Real(std::string_view decimal)
{
    mpfr_init(v_);
    std::string s(decimal);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("not a decimal number: " + s);
    }
}

Real::Real(WithBits, mpfr_prec_t bits) { mpfr_init2(v_, bits); }

Real::Real(const Real& other)
{
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept
{
    // Leaves `other` as a valid minimal-precision zero.
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_set_ui(v_, 0, MPFR_RNDN);
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other)
{
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::to_string(int digits) const
{
    if (mpfr_nan_p(v_))
        return "nan";
    if (mpfr_inf_p(v_))
        return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (digits <= 0)
        digits = static_cast<int>(std::floor(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
    const int len = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
    std::vector<char> buf(static_cast<std::size_t>(len) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return std::string(buf.data(), static_cast<std::size_t>(len));
}

Real Real::result_for(const Real& a, const Real& b)
{
    return Real(WithBits{}, std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
}

Real& Real::operator+=(const Real& o)
{
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_))
        mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o)
{
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_))
        mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o)
{
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_))
        mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o)
{
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_))
        mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real operator-(const Real& a)
{
    Real r(Real::WithBits{}, mpfr_get_prec(a.v_));
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, const Real& b)
{
    Real r = Real::result_for(a, b);
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b)
{
    Real r = Real::result_for(a, b);
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b)
{
    Real r = Real::result_for(a, b);
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b)
{
    Real r = Real::result_for(a, b);
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b)
{
    if (mpfr_unordered_p(a.v_, b.v_))
        return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    if (c < 0)
        return std::partial_ordering::less;
    if (c > 0)
        return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

namespace {

template <class Fn>
Real unary(const Real& x, Fn fn)
{
    Real r(x);
    fn(r.get(), x.get(), MPFR_RNDN);
    return r;
}

}  // namespace

Real abs(const Real& x)
{
    return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_abs(r, a, m); });
}

Real sqrt(const Real& x)
{
    return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_sqrt(r, a, m); });
}

Real exp(const Real& x)
{
    return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_exp(r, a, m); });
}

Real log(const Real& x)
{
    return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_log(r, a, m); });
}

Real sin(const Real& x)
{
    return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_sin(r, a, m); });
}

Real cos(const Real& x)
{
    return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_cos(r, a, m); });
}


Real floor(const Real& x)
{
    Real r(x);
    mpfr_floor(r.v_, x.v_);
    return r;
}

Real atan2(const Real& y, const Real& x)
{
    Real r = Real::result_for(y, x);
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

Real hypot(const Real& x, const Real& y)
{
    Real r = Real::result_for(x, y);
    mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

Real pow(const Real& x, long e)
{
    Real r(x);
    mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN);
    return r;
}

Real pow(const Real& x, const Real& e)
{
    Real r = Real::result_for(x, e);
    mpfr_pow(r.v_, x.v_, e.v_, MPFR_RNDN);
    return r;
}

Real ldexp(const Real& x, long e)
{
    Real r(x);
    mpfr_mul_2si(r.v_, x.v_, e, MPFR_RNDN);
    return r;
}

Real pi()
{
    Real r;
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

Real euler_e() { return exp(Real(1)); }

Real factorial(unsigned long m)
{
    Real r;
    mpfr_fac_ui(r.get(), m, MPFR_RNDN);
    return r;
}

Complex& Complex::operator+=(const Complex& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o)
{
    *this = *this * o;
    return *this;
}

Complex& Complex::operator/=(const Complex& o)
{
    *this = *this / o;
    return *this;
}

Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }

Complex operator/(const Complex& a, const Complex& b)
{
    const Real d = norm(b);
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real abs(const Complex& z) { return hypot(z.re, z.im); }

Complex exp(const Complex& z)
{
    const Real m = exp(z.re);
    Real s(z.im), c(z.im);
    mpfr_sin_cos(s.get(), c.get(), z.im.get(), MPFR_RNDN);
    return {m * c, m * s};
}

Complex pow(const Complex& z, unsigned e)
{
    Complex result(1);
    Complex base = z;
    while (e != 0) {
        if (e & 1u)
            result = result * base;
        e >>= 1u;
        if (e != 0)
            base = base * base;
    }
    return result;
}

Complex polar(const Real& r, const Real& theta)
{
    Real s(theta), c(theta);
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    return {r * c, r * s};
}

}  // namespace bwexp

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace superlie {

/// Coefficient field of an algebra. Gaussian means ℚ(i), with ζ = i.
enum class Field { rational, gaussian };

std::string to_string(Field f);
Field parse_field(std::string_view s);

/// Exact element a + b·i of ℚ(i); rational values keep b = 0.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : re_(v) {}
    Scalar(long v) : re_(v) {}
    Scalar(long num, long den);
    explicit Scalar(mpq_class re, mpq_class im = 0);

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
    /// ζ^k with ζ = i.
    static Scalar zeta_power(long k);
    static Scalar parse(std::string_view text);

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_rational() const { return sgn(im_) == 0; }
    bool is_integer() const { return is_rational() && re_.get_den() == 1; }
    bool in_field(Field f) const { return f == Field::gaussian || is_rational(); }
    /// Integer value; throws if not an integer that fits in a long.
    long to_long() const;

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar inverse() const;
    Scalar pow(long e) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    /// this += a * b without a temporary Scalar.
    void add_mul(const Scalar& a, const Scalar& b);
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // Lexicographic on (re, im); only meant for ordered containers.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        int c = cmp(a.re_, b.re_);
        return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
    }

    /// Canonical text: "p/q", "p/q+r/s*i", "r/s*i".
    std::string str() const;

private:
    mpq_class re_;
    mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace superlie

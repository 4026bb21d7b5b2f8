#include "superlie/scalar.hpp"

#include "superlie/error.hpp"

#include <cctype>
#include <climits>
#include <ostream>

namespace superlie {

std::string to_string(Field f) { return f == Field::rational ? "Q" : "Qi"; }

Field parse_field(std::string_view s) {
    if (s == "Q") return Field::rational;
    if (s == "Qi") return Field::gaussian;
    throw ParseError("unknown field '" + std::string(s) + "' (expected Q or Qi)");
}

Scalar::Scalar(long num, long den) : re_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::zeta_power(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return Scalar(1);
        case 1: return i();
        case 2: return Scalar(-1);
        default: return -i();
    }
}

long Scalar::to_long() const {
    if (!is_integer() || !re_.get_num().fits_slong_p())
        throw std::domain_error("scalar " + str() + " is not a machine integer");
    return re_.get_num().get_si();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational()) return Scalar(mpq_class(1 / re_));
    mpq_class n = re_ * re_ + im_ * im_;
    return Scalar(mpq_class(re_ / n), mpq_class(-im_ / n));
}

Scalar Scalar::pow(long e) const {
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    Scalar out(1);
    while (n) {
        if (n & 1) out *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    if (sgn(o.im_)) im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_)) im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
    if (sgn(a.im_) == 0 && sgn(b.im_) == 0) {
        thread_local mpq_class tmp;
        mpq_mul(tmp.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
        re_ += tmp;
        return;
    }
    *this += a * b;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string Scalar::str() const {
    if (is_rational()) return re_.get_str();
    std::string im;
    if (abs(im_) != 1) im = mpq_class(abs(im_)).get_str() + "*";
    im += "i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + im;
    return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + im;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

// Accepts [sign] digits [/ digits] with a nonzero denominator.
mpq_class parse_rational(std::string_view t, std::string_view whole) {
    auto bad = [&] { return ParseError("malformed scalar '" + std::string(whole) + "'"); };
    std::size_t pos = 0;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) ++pos;
    std::size_t digits = 0, slash = std::string_view::npos;
    for (std::size_t k = pos; k < t.size(); ++k) {
        if (std::isdigit(static_cast<unsigned char>(t[k]))) {
            ++digits;
        } else if (t[k] == '/' && slash == std::string_view::npos && k > pos) {
            slash = k;
        } else {
            throw bad();
        }
    }
    if (digits == 0 || (slash != std::string_view::npos && slash + 1 == t.size())) throw bad();
    std::string s(t[0] == '+' ? t.substr(1) : t);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw bad();
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    q.canonicalize();
    return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw ParseError("empty scalar");
    if (t.back() != 'i') return Scalar(parse_rational(t, text));

    std::string_view body(t);
    body.remove_suffix(1);
    if (!body.empty() && body.back() == '*') body.remove_suffix(1);
    // Split at the last sign that is not leading.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    std::string_view re_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
    mpq_class im;
    if (im_part.empty() || im_part == "+") {
        im = 1;
    } else if (im_part == "-") {
        im = -1;
    } else {
        im = parse_rational(im_part, text);
    }
    mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part, text);
    return Scalar(re, im);
}

}  // namespace superlie

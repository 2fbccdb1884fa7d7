#include "hklat/rational.hpp"

#include <ostream>

namespace hklat {

Rat::Rat(long num, long den) {
    if (den == 0) throw BadInput("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw BadInput("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inverse(const Rat& a) {
    if (a.is_zero()) throw BadInput("Rat: inverse of zero");
    return Rat(1) / a;
}

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw ParseError("Rat: empty string");
    std::string t = s[0] == '+' ? s.substr(1) : s;
    if (t.empty()) throw ParseError("Rat: empty string");
    // Accept "p" and "p/q" with optional leading sign.
    for (size_t k = 0; k < t.size(); ++k) {
        char c = t[k];
        bool ok = (c >= '0' && c <= '9') || c == '/' || ((c == '-' || c == '+') && (k == 0 || t[k - 1] == '/'));
        if (!ok) throw ParseError("Rat: bad character in '" + s + "'");
    }
    mpq_class v;
    if (v.set_str(t, 10) != 0) throw ParseError("Rat: cannot parse '" + s + "'");
    if (v.get_den() == 0) throw ParseError("Rat: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rat(v);
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat Rat::binomial(long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(mpq_class(b));
}

Rat Rat::factorial(long n) {
    if (n < 0) throw BadInput("factorial of negative");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(mpq_class(f));
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    Rat r = re_ * o.re_ - im_ * o.im_;
    Rat i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    Rat n = o.norm();
    if (n.is_zero()) throw BadInput("GaussRat: division by zero");
    GaussRat c = o.conj();
    *this *= c;
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string GaussRat::str() const {
    if (im_.is_zero()) return re_.str();
    std::string s;
    if (!re_.is_zero()) s = re_.str();
    if (im_ == Rat(1)) {
        s += s.empty() ? "i" : "+i";
    } else if (im_ == Rat(-1)) {
        s += "-i";
    } else {
        std::string t = im_.str() + "i";
        if (!s.empty() && im_.sign() > 0) s += "+";
        s += t;
    }
    return s;
}

GaussRat GaussRat::parse(const std::string& s) {
    if (s.empty()) throw ParseError("GaussRat: empty string");
    // Split at the last top-level '+'/'-' that is not a leading sign or part of "/-".
    if (s.back() == 'i') {
        std::string body = s.substr(0, s.size() - 1);
        size_t split = std::string::npos;
        for (size_t k = body.size(); k-- > 1;) {
            if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/' && body[k - 1] != '+' && body[k - 1] != '-') {
                split = k;
                break;
            }
        }
        std::string re_part, im_part;
        if (split == std::string::npos) {
            im_part = body;
        } else {
            re_part = body.substr(0, split);
            im_part = body.substr(split);
        }
        if (im_part.empty() || im_part == "+") im_part = "1";
        if (im_part == "-") im_part = "-1";
        Rat re = re_part.empty() ? Rat(0) : Rat::parse(re_part);
        return GaussRat(re, Rat::parse(im_part));
    }
    return GaussRat(Rat::parse(s));
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }

}  // namespace hklat

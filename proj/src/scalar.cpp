#include "qweb/scalar.hpp"

#include <cctype>
#include <limits>

namespace qweb {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 uabs(i128 x) { return x < 0 ? u128(-x) : u128(x); }

mpz_class mpz_from_i128(i128 v) {
    bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool fits64(i128 v) {
    return v >= i128(std::numeric_limits<std::int64_t>::min()) + 1 &&
           v <= i128(std::numeric_limits<std::int64_t>::max());
}

} // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw DivisionByZero();
    *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) {
    mpq_class r(q);
    r.canonicalize();
    if (r.get_num().fits_slong_p() && r.get_den().fits_slong_p()) {
        num_ = r.get_num().get_si();
        den_ = r.get_den().get_si();
    } else {
        num_ = reinterpret_cast<std::int64_t>(new mpq_class(std::move(r)));
        den_ = 0;
    }
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.is_big()) num_ = reinterpret_cast<std::int64_t>(new mpq_class(o.big()));
}

Rational& Rational::operator=(const Rational& o) {
    if (this == &o) return *this;
    release();
    num_ = o.num_;
    den_ = o.den_;
    if (o.is_big()) num_ = reinterpret_cast<std::int64_t>(new mpq_class(o.big()));
    return *this;
}

Rational& Rational::operator=(Rational&& o) noexcept {
    if (this == &o) return *this;
    release();
    num_ = o.num_;
    den_ = o.den_;
    o.num_ = 0;
    o.den_ = 1;
    return *this;
}

void Rational::release() {
    if (is_big()) delete reinterpret_cast<mpq_class*>(num_);
    num_ = 0;
    den_ = 1;
}

Rational Rational::from_i128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    if (d != 1) {
        u128 g = gcd128(uabs(n), u128(d));
        if (g > 1) {
            n /= i128(g);
            d /= i128(g);
        }
    }
    Rational r;
    if (fits64(n) && fits64(d)) {
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    r.num_ = reinterpret_cast<std::int64_t>(new mpq_class(std::move(q)));
    r.den_ = 0;
    return r;
}

int Rational::sign() const {
    if (is_big()) return sgn(big());
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Rational::to_mpq() const {
    if (is_big()) return big();
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
    if (is_big()) return big().get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view s) {
    std::string t(s);
    mpq_class q;
    if (t.empty() || q.set_str(t, 10) != 0) throw ParseError("bad rational '" + t + "'", 0);
    if (q.get_den() == 0) throw DivisionByZero();
    return Rational(q);
}

Rational Rational::operator-() const {
    if (is_big()) return Rational(mpq_class(-big()));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_big() || b.is_big()) return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    if (a.den_ == 1 && b.den_ == 1) {
        long long s;
        if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != std::numeric_limits<std::int64_t>::min())
            return Rational(s);
    }
    if (a.den_ == b.den_) return Rational::from_i128(i128(a.num_) + b.num_, a.den_);
    return Rational::from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    if (a.is_big() || b.is_big()) return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    if (a.den_ == 1 && b.den_ == 1) {
        long long p;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != std::numeric_limits<std::int64_t>::min())
            return Rational(p);
    }
    return Rational::from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_big() || b.is_big()) return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
    return Rational::from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.is_big() && !b.is_big()) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.is_big() != b.is_big()) return false; // canonical: big only when it does not fit
    return a.big() == b.big();
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.is_big() && !b.is_big()) return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

// ---- Scalar ----

Scalar operator+(const Scalar& x, const Scalar& y) {
    return Scalar(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    return Scalar(x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d);
}

Scalar& Scalar::operator+=(const Scalar& y) {
    if (!y.a.is_zero()) a += y.a;
    if (!y.b.is_zero()) b += y.b;
    if (!y.c.is_zero()) c += y.c;
    if (!y.d.is_zero()) d += y.d;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& y) {
    if (!y.a.is_zero()) a -= y.a;
    if (!y.b.is_zero()) b -= y.b;
    if (!y.c.is_zero()) c -= y.c;
    if (!y.d.is_zero()) d -= y.d;
    return *this;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.is_rational()) {
        if (x.a.is_one()) return y;
        return Scalar(x.a * y.a, x.a * y.b, x.a * y.c, x.a * y.d);
    }
    if (y.is_rational()) return Scalar(x.a * y.a, x.b * y.a, x.c * y.a, x.d * y.a);
    const Rational two(2);
    // 1, i, r2, i*r2 with i^2 = -1 and r2^2 = 2
    Rational a = x.a * y.a - x.b * y.b + two * (x.c * y.c - x.d * y.d);
    Rational b = x.a * y.b + x.b * y.a + two * (x.c * y.d + x.d * y.c);
    Rational c = x.a * y.c + x.c * y.a - x.b * y.d - x.d * y.b;
    Rational d = x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b;
    return Scalar(std::move(a), std::move(b), std::move(c), std::move(d));
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return Scalar(Rational(1) / a);
    // clear r2 first, then i
    Scalar s = conj_r2();
    Scalar n1 = *this * s; // lies in Q(i)
    Scalar t = n1.conj_i();
    Scalar n2 = n1 * t; // rational
    Rational inv_n = Rational(1) / n2.a;
    return s * t * Scalar(inv_n);
}

std::string Scalar::str() const {
    std::string out;
    auto add = [&](const Rational& r, const char* unit) {
        if (r.is_zero()) return;
        if (!out.empty()) out += " + ";
        out += r.str();
        if (unit) {
            out += "*";
            out += unit;
        }
    };
    add(a, nullptr);
    add(b, "i");
    add(c, "r2");
    add(d, "i*r2");
    return out.empty() ? "0" : out;
}

Scalar Scalar::parse(std::string_view s) {
    std::size_t p = 0;
    auto skip = [&] {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    };
    auto rat = [&]() -> Rational {
        skip();
        std::size_t st = p;
        if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
        std::size_t digits = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == digits) throw ParseError("expected integer", p);
        if (p < s.size() && s[p] == '/') {
            ++p;
            std::size_t dd = p;
            while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
            if (p == dd) throw ParseError("expected denominator", p);
        }
        std::string tok(s.substr(st, p - st));
        if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
        try {
            return Rational::parse(tok);
        } catch (const DivisionByZero&) {
            throw ParseError("zero denominator", st);
        }
    };
    auto word = [&](std::string_view w) {
        skip();
        if (s.substr(p, w.size()) == w) {
            p += w.size();
            return true;
        }
        return false;
    };
    Scalar out;
    for (;;) {
        Rational r = rat();
        skip();
        if (p < s.size() && s[p] == '*') {
            ++p;
            if (word("i")) {
                skip();
                if (p < s.size() && s[p] == '*') {
                    ++p;
                    if (!word("r2")) throw ParseError("expected r2", p);
                    out.d += r;
                } else {
                    out.b += r;
                }
            } else if (word("r2")) {
                out.c += r;
            } else {
                throw ParseError("expected unit i, r2 or i*r2", p);
            }
        } else {
            out.a += r;
        }
        skip();
        if (p == s.size()) break;
        if (s[p] != '+') throw ParseError("expected '+'", p);
        ++p;
    }
    return out;
}

Scalar scalar_add(const Scalar& x, const Scalar& y) { return x + y; }
Scalar scalar_mul(const Scalar& x, const Scalar& y) { return x * y; }
Scalar scalar_inv(const Scalar& x) { return x.inv(); }
std::string scalar_format(const Scalar& x) { return x.str(); }
Scalar scalar_parse(std::string_view text) { return Scalar::parse(text); }

} // namespace qweb

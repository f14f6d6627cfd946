#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qweb {

// Reduced fraction. Small values live inline in two int64s; anything that
// overflows is promoted to a heap mpq (den_ == 0 marks that state).
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& o);
    Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_) { o.num_ = 0; o.den_ = 1; }
    Rational& operator=(const Rational& o);
    Rational& operator=(Rational&& o) noexcept;
    ~Rational() { release(); }

    bool is_zero() const { return den_ != 0 && num_ == 0; }
    bool is_big() const { return den_ == 0; }
    bool is_one() const { return den_ == 1 && num_ == 1; }
    int sign() const;

    mpq_class to_mpq() const;
    std::string str() const;
    static Rational parse(std::string_view s);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

private:
    const mpq_class& big() const { return *reinterpret_cast<const mpq_class*>(num_); }
    void release();
    static Rational from_i128(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// a + b*i + c*r2 + d*i*r2 with r2 = sqrt(2).
class Scalar {
public:
    Rational a, b, c, d;

    Scalar() = default;
    Scalar(long long n) : a(n) {}
    Scalar(Rational r) : a(std::move(r)) {}
    Scalar(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Scalar i() { return Scalar(0, 1, 0, 0); }
    static Scalar sqrt2() { return Scalar(0, 0, 1, 0); }

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    bool is_rational() const { return b.is_zero() && c.is_zero() && d.is_zero(); }

    Scalar inv() const;
    Scalar conj_i() const { return Scalar(a, -b, c, -d); }
    Scalar conj_r2() const { return Scalar(a, b, -c, -d); }

    std::string str() const;
    static Scalar parse(std::string_view s);

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }
    Scalar operator-() const { return Scalar(-a, -b, -c, -d); }
    Scalar& operator+=(const Scalar& y);
    Scalar& operator-=(const Scalar& y);
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
};

Scalar scalar_add(const Scalar& x, const Scalar& y);
Scalar scalar_mul(const Scalar& x, const Scalar& y);
Scalar scalar_inv(const Scalar& x);
std::string scalar_format(const Scalar& x);
Scalar scalar_parse(std::string_view text);

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

} // namespace qweb

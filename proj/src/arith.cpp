#include "kummer/arith.hpp"

#include <cmath>
#include <numeric>

namespace kummer {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::invalid_modulus: return "invalid-modulus";
        case errc::no_unique_solution: return "no-unique-solution";
        case errc::invalid_prime: return "invalid-prime";
        case errc::overflow: return "overflow";
        case errc::bad_degree: return "bad-degree";
        case errc::bad_characteristic: return "bad-characteristic";
        case errc::bad_multiplicity: return "bad-multiplicity";
        case errc::duplicate_label: return "duplicate-label";
        case errc::dth_power: return "dth-power";
        case errc::bad_index: return "bad-index";
        case errc::unsupported_place: return "unsupported-place";
        case errc::parse_error: return "parse-error";
        case errc::bad_argument: return "bad-argument";
        case errc::io_error: return "io-error";
    }
    return "unknown";
}

namespace {

[[noreturn]] void overflow_error(const char* op) {
    throw Error(errc::overflow, std::string("integer overflow in ") + op);
}

}  // namespace

long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out)) overflow_error("addition");
    return out;
}

long long checked_sub(long long a, long long b) {
    long long out;
    if (__builtin_sub_overflow(a, b, &out)) overflow_error("subtraction");
    return out;
}

long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out)) overflow_error("multiplication");
    return out;
}

long long checked_neg(long long a) {
    return checked_sub(0, a);
}

long long euclid_mod(long long a, long long m) {
    if (m < 1) throw Error(errc::invalid_modulus, "modulus must be a positive integer");
    long long r = a % m;
    return r < 0 ? r + m : r;
}

long long floor_div(long long a, long long b) {
    if (b < 1) throw Error(errc::bad_argument, "floor_div requires a positive divisor");
    long long q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw Error(errc::bad_argument, "rational with zero denominator");
    if (den_ < 0) {
        num_ = checked_neg(num_);
        den_ = checked_neg(den_);
    }
    long long g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    return Rational(checked_neg(num_), den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(errc::bad_argument, "rational division by zero");
    return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

bool operator<(const Rational& a, const Rational& b) {
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
}

Rational Rational::abs() const {
    return num_ < 0 ? -*this : *this;
}

long long Rational::floor() const {
    return floor_div(num_, den_);
}

long long Rational::ceil() const {
    return checked_neg(floor_div(checked_neg(num_), den_));
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction::Fraction(long long num, long long den) : num_(num), den_(den) {
    if (den_ < 1) throw Error(errc::bad_argument, "fraction denominator must be positive");
    if (num_ < 0 || num_ >= den_)
        throw Error(errc::bad_argument, "fraction numerator must lie in [0, den)");
    long long g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Fraction::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction frac_part(long long a, long long m) {
    if (m < 1) throw Error(errc::invalid_modulus, "frac_part: modulus must be a positive integer");
    return Fraction(euclid_mod(a, m), m);
}

namespace {

// Extended Euclid: returns gcd(a, b) and x with a*x == gcd (mod b).
long long mod_inverse(long long a, long long m, bool& ok) {
    long long old_r = euclid_mod(a, m), r = m;
    long long old_x = 1, x = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_x - q * x;
        old_x = x;
        x = tmp;
    }
    ok = (old_r == 1);
    return ok ? euclid_mod(old_x, m) : 0;
}

}  // namespace

long long solve_t(long long s, long long eta, long long m) {
    if (m < 1) throw Error(errc::invalid_modulus, "solve_t: modulus must be a positive integer");
    if (m == 1) return 0;
    bool ok = false;
    long long inv = mod_inverse(eta, m, ok);
    if (!ok)
        throw Error(errc::no_unique_solution,
                    "solve_t: eta is not invertible mod m, no unique solution");
    // t = -s * eta^{-1} mod m
    return euclid_mod(checked_mul(euclid_mod(checked_neg(euclid_mod(s, m)), m), inv), m);
}

bool p_adic_leq(long long mu, long long lam, long long p) {
    if (p < 2) throw Error(errc::invalid_prime, "p_adic_leq: p must be a prime >= 2");
    if (mu < 0 || lam < 0)
        throw Error(errc::bad_argument, "p_adic_leq: arguments must be non-negative");
    while (mu > 0 || lam > 0) {
        if (mu % p > lam % p) return false;
        mu /= p;
        lam /= p;
    }
    return true;
}

}  // namespace kummer

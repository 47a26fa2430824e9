#pragma once

#include <cstdint>
#include <string>

#include "kummer/error.hpp"

namespace kummer {

// All quantities in the library are i64. Magnitudes stay far below 2^63 at
// desk scale, but every product and sum that could conceivably grow goes
// through the checked helpers: wraparound must surface as errc::overflow,
// never as a silently wrong answer.

long long checked_add(long long a, long long b);
long long checked_sub(long long a, long long b);
long long checked_mul(long long a, long long b);
long long checked_neg(long long a);

/// Euclidean remainder: the unique representative of a mod m in [0, m).
/// Requires m >= 1; throws errc::invalid_modulus otherwise.
long long euclid_mod(long long a, long long m);

/// Floor division a/b rounded toward -infinity. Requires b >= 1.
long long floor_div(long long a, long long b);

bool is_prime(long long n);

// Exact signed rational, always reduced, denominator always positive.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const;
    long long floor() const;
    long long ceil() const;
    double to_double() const;
    std::string str() const;  // "num/den", or "num" when den == 1

  private:
    long long num_;
    long long den_;
};

// Reduced fractional part {a/m}: numerator in [0, den), gcd(num, den) = 1.
class Fraction {
  public:
    Fraction(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }
    Rational as_rational() const { return Rational(num_, den_); }
    std::string str() const;

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

  private:
    long long num_;
    long long den_;
};

/// {a/m} as a reduced fraction, using the Euclidean residue of a, so
/// frac_part(-4, 4) == 0/1 and frac_part(-1, 4) == 3/4.
Fraction frac_part(long long a, long long m);

/// The unique t in {0,...,m-1} with s + eta*t == 0 (mod m).
/// Requires gcd(eta, m) = 1; throws errc::no_unique_solution otherwise.
long long solve_t(long long s, long long eta, long long m);

/// True iff every base-p digit of mu is <= the corresponding digit of lam.
bool p_adic_leq(long long mu, long long lam, long long p);

}  // namespace kummer

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace epiprob {

// Thrown for malformed inputs: bad rational strings, bad JSON, bad model files.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an operation's precondition fails on an otherwise well-formed
// model (zero-mass conditioning set, non-measurable event, missing point, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arbitrary-precision rational. All probability arithmetic in this library is
// exact; nothing is ever rounded except the display helper decimal_string().
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw input_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "p/q", "p", "-p/q". Rejects anything else, in particular
    // decimal notation: probabilities must be given exactly.
    static Rat parse(const std::string& s);

    // Canonical form is always "p/q" in lowest terms, q > 0 (so "1/2", "0/1", "3/1").
    std::string str() const;

    // Fixed-point decimal rendering, round half away from zero. Display only.
    std::string decimal_string(int digits = 6) const;

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw domain_error("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  private:
    mpq_class v_;
};

}  // namespace epiprob

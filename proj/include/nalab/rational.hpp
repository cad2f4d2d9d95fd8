#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "nalab/errors.hpp"

namespace nalab {

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; equality is exact. Backed by GMP.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {} // NOLINT: implicit by design, scalars appear everywhere
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw error("rational with zero denominator");
        v_.canonicalize();
    }

    /// Accepts "p", "-p" and "p/q". No decimals.
    static Rat parse(const std::string& text) {
        if (text.empty()) throw parse_error("empty rational literal");
        for (char ch : text) {
            const bool ok = (ch >= '0' && ch <= '9') || ch == '-' || ch == '+' || ch == '/';
            if (!ok) throw parse_error("bad rational literal '" + text + "'");
        }
        try {
            mpq_class q(text);
            if (q.get_den() == 0) throw parse_error("zero denominator in '" + text + "'");
            q.canonicalize();
            Rat r;
            r.v_ = q;
            return r;
        } catch (const std::invalid_argument&) {
            throw parse_error("bad rational literal '" + text + "'");
        }
    }

    std::string str() const {
        return v_.get_str();
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(-v_); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  private:
    explicit Rat(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rat half() { return Rat(1, 2); }

} // namespace nalab

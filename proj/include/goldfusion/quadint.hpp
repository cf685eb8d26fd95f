#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace goldfusion {

/// Exact element x + y*phi of Z[phi], phi = (1+sqrt(5))/2.
///
/// Multiplication uses the minimal polynomial phi^2 = phi + 1, so the
/// product of (x1,y1) and (x2,y2) is (x1*x2 + y1*y2, x1*y2 + x2*y1 + y1*y2).
/// All arithmetic is overflow-checked; overflow throws instead of wrapping.
class QuadInt {
public:
    constexpr QuadInt() = default;
    constexpr QuadInt(std::int64_t x, std::int64_t y) : x_(x), y_(y) {}

    static constexpr QuadInt zero() { return {0, 0}; }
    static constexpr QuadInt one() { return {1, 0}; }
    static constexpr QuadInt phi() { return {0, 1}; }

    std::int64_t x() const { return x_; }
    std::int64_t y() const { return y_; }

    friend QuadInt operator+(QuadInt a, QuadInt b)
    {
        return {checked_add(a.x_, b.x_), checked_add(a.y_, b.y_)};
    }

    friend QuadInt operator-(QuadInt a, QuadInt b)
    {
        return {checked_sub(a.x_, b.x_), checked_sub(a.y_, b.y_)};
    }

    QuadInt operator-() const { return {checked_sub(0, x_), checked_sub(0, y_)}; }

    friend QuadInt operator*(QuadInt a, QuadInt b)
    {
        // (x1 + y1 phi)(x2 + y2 phi) = x1 x2 + y1 y2 + (x1 y2 + x2 y1 + y1 y2) phi
        std::int64_t x = checked_add(checked_mul(a.x_, b.x_), checked_mul(a.y_, b.y_));
        std::int64_t y = checked_add(checked_add(checked_mul(a.x_, b.y_), checked_mul(a.y_, b.x_)),
                                     checked_mul(a.y_, b.y_));
        return {x, y};
    }

    QuadInt& operator+=(QuadInt b) { return *this = *this + b; }
    QuadInt& operator-=(QuadInt b) { return *this = *this - b; }
    QuadInt& operator*=(QuadInt b) { return *this = *this * b; }

    friend bool operator==(QuadInt a, QuadInt b) { return a.x_ == b.x_ && a.y_ == b.y_; }
    friend bool operator!=(QuadInt a, QuadInt b) { return !(a == b); }

    /// Galois conjugate: phi -> 1 - phi, i.e. (x, y) -> (x + y, -y).
    /// An involutive ring automorphism (sqrt(5) -> -sqrt(5)).
    QuadInt galois_conjugate() const
    {
        return {checked_add(x_, y_), checked_sub(0, y_)};
    }

    /// Real value under phi -> (1+sqrt(5))/2.
    double embed() const
    {
        constexpr double kPhi = 1.6180339887498948482;
        return static_cast<double>(x_) + static_cast<double>(y_) * kPhi;
    }

    /// Exact sign of x + y*phi, decided symbolically.
    ///
    /// For mixed-sign coefficients the comparison x vs |y|*phi is settled by
    /// squaring against the minimal polynomial: for t > 0, t > phi iff
    /// t^2 > t + 1, which turns into an integer comparison of x^2 against
    /// x*|y| + y^2 (exact in 128-bit intermediates).
    int sign() const
    {
        if (x_ == 0 && y_ == 0) return 0;
        if (x_ >= 0 && y_ >= 0) return 1;
        if (x_ <= 0 && y_ <= 0) return -1;
        using W = __int128;
        W x = x_, y = y_;
        if (x > 0) {
            // y < 0: positive iff x > |y| phi iff x^2 > x|y| + y^2
            W ay = -y;
            W lhs = x * x;
            W rhs = x * ay + ay * ay;
            return lhs > rhs ? 1 : (lhs < rhs ? -1 : 1);  // equality impossible (phi irrational)
        }
        // x < 0, y > 0: positive iff y phi > |x| iff |x|^2 < |x| y + y^2
        W ax = -x;
        W lhs = ax * ax;
        W rhs = ax * y + y * y;
        return lhs < rhs ? 1 : -1;
    }

    friend bool operator<(QuadInt a, QuadInt b) { return (a - b).sign() < 0; }
    friend bool operator>(QuadInt a, QuadInt b) { return (a - b).sign() > 0; }
    friend bool operator<=(QuadInt a, QuadInt b) { return (a - b).sign() <= 0; }
    friend bool operator>=(QuadInt a, QuadInt b) { return (a - b).sign() >= 0; }

    std::string str() const
    {
        std::string s = std::to_string(x_);
        if (y_ != 0) {
            s += (y_ >= 0 ? "+" : "-");
            s += std::to_string(y_ >= 0 ? y_ : -y_);
            s += "*phi";
        }
        return s;
    }

private:
    static std::int64_t checked_add(std::int64_t a, std::int64_t b)
    {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("QuadInt addition overflow");
        return r;
    }
    static std::int64_t checked_sub(std::int64_t a, std::int64_t b)
    {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("QuadInt subtraction overflow");
        return r;
    }
    static std::int64_t checked_mul(std::int64_t a, std::int64_t b)
    {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("QuadInt multiplication overflow");
        return r;
    }

    std::int64_t x_ = 0;
    std::int64_t y_ = 0;
};

}  // namespace goldfusion

#pragma once

#include "qgi/rational.hpp"

namespace qgi {

// Quaternion over exact rationals: w + x*i + y*j + z*k with
// i^2 = j^2 = k^2 = ijk = -1. Multiplication is noncommutative.
struct Quaternion {
    Rational w, x, y, z;

    Quaternion() = default;
    Quaternion(Rational w_) : w(std::move(w_)) {}
    Quaternion(int w_) : w(w_) {}
    Quaternion(Rational w_, Rational x_, Rational y_, Rational z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    static Quaternion unit_i() { return {0, 1, 0, 0}; }
    static Quaternion unit_j() { return {0, 0, 1, 0}; }
    static Quaternion unit_k() { return {0, 0, 0, 1}; }

    bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
    bool is_real() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

    Quaternion operator-() const { return {-w, -x, -y, -z}; }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }

    // Hamilton product.
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }

    Quaternion& operator+=(const Quaternion& b) {
        w += b.w; x += b.x; y += b.y; z += b.z;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& b) {
        w -= b.w; x -= b.x; y -= b.y; z -= b.z;
        return *this;
    }
    Quaternion& operator*=(const Quaternion& b) { return *this = *this * b; }
};

inline Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

// |q|^2 = q * conj(q), a nonnegative rational.
inline Rational norm2(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline Quaternion operator*(const Rational& s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
}

inline Quaternion operator/(const Quaternion& q, const Rational& s) {
    if (s.is_zero()) throw zero_divisor("quaternion division by zero scalar");
    return {q.w / s, q.x / s, q.y / s, q.z / s};
}

// Two-sided inverse conj(q)/|q|^2.
inline Quaternion inverse(const Quaternion& q) {
    if (q.is_zero()) throw zero_divisor("inverse of zero quaternion");
    return conj(q) / norm2(q);
}

} // namespace qgi

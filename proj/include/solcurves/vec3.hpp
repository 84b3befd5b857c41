#pragma once

#include <cmath>

namespace solcurves {

// Triple of components with respect to the orthonormal frame (E1, E2, E3).
// The frame is orthonormal, so the Euclidean dot/cross/norm formulas on
// components are exact, pointwise in s. T may be double or Jet.
template <class T>
struct Vec3 {
    T v1{};
    T v2{};
    T v3{};
};

template <class T>
Vec3<T> operator+(const Vec3<T>& u, const Vec3<T>& w) {
    return {u.v1 + w.v1, u.v2 + w.v2, u.v3 + w.v3};
}

template <class T>
Vec3<T> operator-(const Vec3<T>& u, const Vec3<T>& w) {
    return {u.v1 - w.v1, u.v2 - w.v2, u.v3 - w.v3};
}

template <class T>
Vec3<T> operator-(const Vec3<T>& u) {
    return {-u.v1, -u.v2, -u.v3};
}

template <class T, class S>
Vec3<T> operator*(const S& a, const Vec3<T>& u) {
    return {a * u.v1, a * u.v2, a * u.v3};
}

template <class T, class S>
Vec3<T> operator*(const Vec3<T>& u, const S& a) {
    return a * u;
}

template <class T>
T dot(const Vec3<T>& u, const Vec3<T>& w) {
    return u.v1 * w.v1 + u.v2 * w.v2 + u.v3 * w.v3;
}

template <class T>
Vec3<T> cross(const Vec3<T>& u, const Vec3<T>& w) {
    return {u.v2 * w.v3 - u.v3 * w.v2,
            u.v3 * w.v1 - u.v1 * w.v3,
            u.v1 * w.v2 - u.v2 * w.v1};
}

template <class T>
T norm_sq(const Vec3<T>& u) {
    return dot(u, u);
}

inline double norm(const Vec3<double>& u) {
    return std::sqrt(norm_sq(u));
}

// Components with respect to the orthonormal frame (E1, E2, E3).
using FrameVector = Vec3<double>;

}  // namespace solcurves

#pragma once
// Small fixed-capacity vector with runtime dimension, usable with double or a
// multiprecision scalar (math calls go through ADL).

#include <array>
#include <cmath>
#include <initializer_list>
#include <stdexcept>

namespace lorentz {

inline constexpr int max_dim = 4;

inline constexpr double pi = 3.14159265358979323846;

template <class Real>
struct Vec {
    std::array<Real, max_dim> c{};
    int dim = 0;

    Vec() = default;
    explicit Vec(int d) : dim(d) {
        if (d < 1 || d > max_dim) throw std::invalid_argument("Vec: dimension out of range");
    }
    Vec(std::initializer_list<Real> xs) : dim(static_cast<int>(xs.size())) {
        if (dim < 1 || dim > max_dim) throw std::invalid_argument("Vec: dimension out of range");
        int i = 0;
        for (const Real& x : xs) c[i++] = x;
    }

    Real& operator[](int i) { return c[i]; }
    const Real& operator[](int i) const { return c[i]; }

    Vec operator+(const Vec& o) const {
        Vec r(dim);
        for (int i = 0; i < dim; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    Vec operator-(const Vec& o) const {
        Vec r(dim);
        for (int i = 0; i < dim; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    Vec operator*(const Real& s) const {
        Vec r(dim);
        for (int i = 0; i < dim; ++i) r.c[i] = c[i] * s;
        return r;
    }
    Vec operator-() const {
        Vec r(dim);
        for (int i = 0; i < dim; ++i) r.c[i] = -c[i];
        return r;
    }
};

template <class Real>
Vec<Real> operator*(const Real& s, const Vec<Real>& v) {
    return v * s;
}

template <class Real>
Real dot(const Vec<Real>& a, const Vec<Real>& b) {
    Real s(0);
    for (int i = 0; i < a.dim; ++i) s += a.c[i] * b.c[i];
    return s;
}

template <class Real>
Real norm2(const Vec<Real>& v) {
    return dot(v, v);
}

template <class Real>
Real norm(const Vec<Real>& v) {
    using std::sqrt;
    return sqrt(norm2(v));
}

// Reduce every component to the fundamental cell [-1/2, 1/2).
template <class Real>
Vec<Real> wrap_cell(const Vec<Real>& v) {
    using std::floor;
    Vec<Real> r(v.dim);
    for (int i = 0; i < v.dim; ++i) r.c[i] = v.c[i] - floor(v.c[i] + Real(0.5));
    return r;
}

// Same, accumulating the integer translation that was removed
// (unwrapped value == wrapped value + shift).
template <class Real>
Vec<Real> wrap_cell_shift(const Vec<Real>& v, std::array<long long, max_dim>& shift) {
    using std::floor;
    Vec<Real> r(v.dim);
    for (int i = 0; i < v.dim; ++i) {
        const long long k = static_cast<long long>(floor(v.c[i] + Real(0.5)));
        r.c[i] = v.c[i] - Real(k);
        shift[i] += k;
    }
    return r;
}

// Distance between two points of the unit torus.
template <class Real>
Real torus_distance(const Vec<Real>& a, const Vec<Real>& b) {
    return norm(wrap_cell(a - b));
}

// Distance from x to the nearest point of Z^D.
template <class Real>
Real lattice_distance(const Vec<Real>& x) {
    return norm(wrap_cell(x));
}

template <class RealTo, class RealFrom>
Vec<RealTo> vec_cast(const Vec<RealFrom>& v) {
    Vec<RealTo> r(v.dim);
    for (int i = 0; i < v.dim; ++i) r.c[i] = static_cast<RealTo>(v.c[i]);
    return r;
}

using Vecd = Vec<double>;

}  // namespace lorentz

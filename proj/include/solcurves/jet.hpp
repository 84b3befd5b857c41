#pragma once

#include <vector>

#include "solcurves/errors.hpp"

namespace solcurves {

// Truncated Taylor series of a smooth real function about a fixed base
// parameter: coefficient k is the k-th Taylor coefficient, so the k-th
// derivative of the represented function equals k! * coeff(k).
//
// All arithmetic is exact truncated-series arithmetic (no numerical
// differencing anywhere). Binary operations truncate to the smaller of
// the two operand orders; operations with scalars preserve the order.
class Jet {
public:
    // Order-0 zero jet.
    Jet() : c_{0.0} {}

    // The constant function c, carried to the given order.
    static Jet constant(double c, int order);

    // The identity function s -> s expanded at s0: [s0, 1, 0, ...].
    // Needs order >= 1 to carry the unit derivative slot.
    static Jet variable(double s0, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<double>& coeffs() const { return c_; }

    // Taylor coefficient k; throws OrderExceeded outside [0, order].
    double operator[](int k) const;

    // Value of the represented function at the base point.
    double value() const { return c_[0]; }

    // k-th derivative at the base point: k! * coeff(k).
    double derivative(int k) const;

    // d/ds of the represented function; the order drops by one.
    // Throws OrderExhausted on an order-0 jet.
    Jet differentiate() const;

    Jet operator-() const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    // Throws DivisionByZeroJet when b's constant term is exactly zero.
    friend Jet operator/(const Jet& a, const Jet& b);

    friend Jet operator+(const Jet& a, double c);
    friend Jet operator+(double c, const Jet& a);
    friend Jet operator-(const Jet& a, double c);
    friend Jet operator-(double c, const Jet& a);
    friend Jet operator*(const Jet& a, double c);
    friend Jet operator*(double c, const Jet& a);
    friend Jet operator/(const Jet& a, double c);
    friend Jet operator/(double c, const Jet& a);

    // Composition with elementary functions via the standard truncated-series
    // recurrences. log/sqrt require a strictly positive constant term.
    friend Jet exp(const Jet& a);
    friend Jet log(const Jet& a);
    friend Jet sqrt(const Jet& a);
    friend Jet sin(const Jet& a);
    friend Jet cos(const Jet& a);

private:
    explicit Jet(std::vector<double> c) : c_(std::move(c)) {}

    std::vector<double> c_;  // invariant: size = order + 1 >= 1
};

}  // namespace solcurves

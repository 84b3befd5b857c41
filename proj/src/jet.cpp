#include "solcurves/jet.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

namespace solcurves {

namespace {

std::size_t min_size(const Jet& a, const Jet& b) {
    return static_cast<std::size_t>(std::min(a.order(), b.order())) + 1;
}

}  // namespace

Jet Jet::constant(double c, int order) {
    if (order < 0) {
        throw InvalidParams("jet order must be non-negative, got " + std::to_string(order));
    }
    std::vector<double> v(static_cast<std::size_t>(order) + 1, 0.0);
    v[0] = c;
    return Jet(std::move(v));
}

Jet Jet::variable(double s0, int order) {
    if (order < 1) {
        throw InvalidParams("variable jet needs order >= 1 to carry its derivative, got " +
                            std::to_string(order));
    }
    std::vector<double> v(static_cast<std::size_t>(order) + 1, 0.0);
    v[0] = s0;
    v[1] = 1.0;
    return Jet(std::move(v));
}

double Jet::operator[](int k) const {
    if (k < 0 || k > order()) {
        throw OrderExceeded("coefficient " + std::to_string(k) + " of an order-" +
                            std::to_string(order()) + " jet");
    }
    return c_[static_cast<std::size_t>(k)];
}

double Jet::derivative(int k) const {
    if (k < 0 || k > order()) {
        throw OrderExceeded("derivative " + std::to_string(k) + " of an order-" +
                            std::to_string(order()) + " jet");
    }
    double factorial = 1.0;
    for (int j = 2; j <= k; ++j) {
        factorial *= j;
    }
    return factorial * c_[static_cast<std::size_t>(k)];
}

Jet Jet::differentiate() const {
    if (order() == 0) {
        throw OrderExhausted("cannot differentiate an order-0 jet");
    }
    std::vector<double> v(c_.size() - 1);
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = static_cast<double>(k + 1) * c_[k + 1];
    }
    return Jet(std::move(v));
}

Jet Jet::operator-() const {
    std::vector<double> v(c_.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = -c_[k];
    }
    return Jet(std::move(v));
}

Jet operator+(const Jet& a, const Jet& b) {
    std::vector<double> v(min_size(a, b));
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = a.c_[k] + b.c_[k];
    }
    return Jet(std::move(v));
}

Jet operator-(const Jet& a, const Jet& b) {
    std::vector<double> v(min_size(a, b));
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = a.c_[k] - b.c_[k];
    }
    return Jet(std::move(v));
}

Jet operator*(const Jet& a, const Jet& b) {
    std::vector<double> v(min_size(a, b), 0.0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= k; ++j) {
            acc += a.c_[j] * b.c_[k - j];
        }
        v[k] = acc;
    }
    return Jet(std::move(v));
}

Jet operator/(const Jet& a, const Jet& b) {
    if (b.c_[0] == 0.0) {
        throw DivisionByZeroJet("jet division by a jet with zero constant term");
    }
    std::vector<double> v(min_size(a, b));
    for (std::size_t k = 0; k < v.size(); ++k) {
        double acc = a.c_[k];
        for (std::size_t j = 0; j < k; ++j) {
            acc -= v[j] * b.c_[k - j];
        }
        v[k] = acc / b.c_[0];
    }
    return Jet(std::move(v));
}

Jet operator+(const Jet& a, double c) {
    std::vector<double> v = a.c_;
    v[0] += c;
    return Jet(std::move(v));
}

Jet operator+(double c, const Jet& a) { return a + c; }

Jet operator-(const Jet& a, double c) { return a + (-c); }

Jet operator-(double c, const Jet& a) {
    Jet r = -a;
    r.c_[0] += c;
    return r;
}

Jet operator*(const Jet& a, double c) {
    std::vector<double> v(a.c_.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = a.c_[k] * c;
    }
    return Jet(std::move(v));
}

Jet operator*(double c, const Jet& a) { return a * c; }

Jet operator/(const Jet& a, double c) { return a * (1.0 / c); }

Jet operator/(double c, const Jet& a) { return Jet::constant(c, a.order()) / a; }

Jet exp(const Jet& a) {
    std::vector<double> v(a.c_.size());
    v[0] = std::exp(a.c_[0]);
    for (std::size_t k = 1; k < v.size(); ++k) {
        double acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += static_cast<double>(j) * a.c_[j] * v[k - j];
        }
        v[k] = acc / static_cast<double>(k);
    }
    return Jet(std::move(v));
}

Jet log(const Jet& a) {
    if (!(a.c_[0] > 0.0)) {
        throw DomainError("log of a jet with non-positive constant term");
    }
    std::vector<double> v(a.c_.size());
    v[0] = std::log(a.c_[0]);
    for (std::size_t k = 1; k < v.size(); ++k) {
        double acc = static_cast<double>(k) * a.c_[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc -= static_cast<double>(j) * v[j] * a.c_[k - j];
        }
        v[k] = acc / (static_cast<double>(k) * a.c_[0]);
    }
    return Jet(std::move(v));
}

Jet sqrt(const Jet& a) {
    if (!(a.c_[0] > 0.0)) {
        throw DomainError("sqrt of a jet with non-positive constant term");
    }
    std::vector<double> v(a.c_.size());
    v[0] = std::sqrt(a.c_[0]);
    for (std::size_t k = 1; k < v.size(); ++k) {
        double acc = a.c_[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc -= v[j] * v[k - j];
        }
        v[k] = acc / (2.0 * v[0]);
    }
    return Jet(std::move(v));
}

namespace {

// sin and cos propagate jointly through s' = a'·c, c' = -a'·s.
void sin_cos(const Jet& a, std::vector<double>& s, std::vector<double>& c) {
    const std::vector<double>& ac = a.coeffs();
    s.assign(ac.size(), 0.0);
    c.assign(ac.size(), 0.0);
    s[0] = std::sin(ac[0]);
    c[0] = std::cos(ac[0]);
    for (std::size_t k = 1; k < ac.size(); ++k) {
        double sa = 0.0;
        double ca = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            sa += static_cast<double>(j) * ac[j] * c[k - j];
            ca -= static_cast<double>(j) * ac[j] * s[k - j];
        }
        s[k] = sa / static_cast<double>(k);
        c[k] = ca / static_cast<double>(k);
    }
}

}  // namespace

Jet sin(const Jet& a) {
    std::vector<double> s, c;
    sin_cos(a, s, c);
    return Jet(std::move(s));
}

Jet cos(const Jet& a) {
    std::vector<double> s, c;
    sin_cos(a, s, c);
    return Jet(std::move(c));
}

}  // namespace solcurves

#pragma once

#include <map>
#include <sstream>
#include <utility>

#include "fatou/geometry.hpp"

// Small dense-enough bivariate polynomials over C, used for the meromorphic
// 1-form pipeline (symbolic closedness checks need exact derivatives and
// products).

namespace fatou {

class Poly2 {
public:
    Poly2() = default;
    Poly2(std::initializer_list<std::pair<std::pair<int, int>, Complex>> terms) {
        for (const auto& [deg, c] : terms) add(deg.first, deg.second, c);
    }

    static Poly2 constant(Complex c) { return Poly2{{{0, 0}, c}}; }
    static Poly2 x(Complex c = 1.0) { return Poly2{{{1, 0}, c}}; }
    static Poly2 y(Complex c = 1.0) { return Poly2{{{0, 1}, c}}; }

    void add(int dx, int dy, Complex c) {
        if (std::abs(c) == 0.0) return;
        auto key = std::make_pair(dx, dy);
        auto it = terms_.find(key);
        if (it == terms_.end()) terms_[key] = c;
        else {
            it->second += c;
            if (std::abs(it->second) == 0.0) terms_.erase(it);
        }
    }

    Complex eval(Complex x, Complex y) const {
        Complex s = 0.0;
        for (const auto& [deg, c] : terms_)
            s += c * std::pow(x, deg.first) * std::pow(y, deg.second);
        return s;
    }

    Poly2 dx() const {
        Poly2 r;
        for (const auto& [deg, c] : terms_)
            if (deg.first > 0) r.add(deg.first - 1, deg.second, c * double(deg.first));
        return r;
    }

    Poly2 dy() const {
        Poly2 r;
        for (const auto& [deg, c] : terms_)
            if (deg.second > 0) r.add(deg.first, deg.second - 1, c * double(deg.second));
        return r;
    }

    Poly2 operator*(const Poly2& o) const {
        Poly2 r;
        for (const auto& [d1, c1] : terms_)
            for (const auto& [d2, c2] : o.terms_)
                r.add(d1.first + d2.first, d1.second + d2.second, c1 * c2);
        return r;
    }

    Poly2 operator-(const Poly2& o) const {
        Poly2 r = *this;
        for (const auto& [deg, c] : o.terms_) r.add(deg.first, deg.second, -c);
        return r;
    }

    bool is_zero(double tol = 0.0) const {
        for (const auto& [deg, c] : terms_)
            if (std::abs(c) > tol) return false;
        return true;
    }

    bool is_constant() const {
        for (const auto& [deg, c] : terms_)
            if (deg.first != 0 || deg.second != 0) return false;
        return true;
    }

    double max_coeff() const {
        double m = 0.0;
        for (const auto& [deg, c] : terms_) m = std::max(m, std::abs(c));
        return m;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [deg, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
            if (deg.first) os << "*x^" << deg.first;
            if (deg.second) os << "*y^" << deg.second;
        }
        return os.str();
    }

    const std::map<std::pair<int, int>, Complex>& terms() const { return terms_; }

private:
    std::map<std::pair<int, int>, Complex> terms_;
};

}  // namespace fatou

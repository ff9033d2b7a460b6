#include "green/intpoly.hpp"

#include <stdexcept>

namespace green {

void IntPoly::trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

IntPoly IntPoly::monomial(const BigInt& c, int k) {
    if (c == 0) return IntPoly();
    std::vector<BigInt> v(k + 1, BigInt(0));
    v[k] = c;
    return IntPoly(std::move(v));
}

const BigInt& IntPoly::leading() const {
    static const BigInt zero = 0;
    return coeff_.empty() ? zero : coeff_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (coeff_.size() < o.coeff_.size()) coeff_.resize(o.coeff_.size(), BigInt(0));
    for (size_t i = 0; i < o.coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (coeff_.size() < o.coeff_.size()) coeff_.resize(o.coeff_.size(), BigInt(0));
    for (size_t i = 0; i < o.coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> r(a.coeff_.size() + b.coeff_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.coeff_.size(); ++i) {
        if (a.coeff_[i] == 0) continue;
        for (size_t j = 0; j < b.coeff_.size(); ++j)
            r[i + j] += a.coeff_[i] * b.coeff_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("IntPoly::shifted: negative shift");
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> r(coeff_.size() + k, BigInt(0));
    for (size_t i = 0; i < coeff_.size(); ++i) r[i + k] = coeff_[i];
    return IntPoly(std::move(r));
}

BigRational IntPoly::eval(const BigRational& value) const {
    BigRational r = 0;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it)
        r = r * value + BigRational(*it);
    return r;
}

BigInt IntPoly::eval_int(const BigInt& value) const {
    BigInt r = 0;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it)
        r = r * value + *it;
    return r;
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : coeff_) g = big_gcd(g, c);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    return divide_content(content());
}

IntPoly IntPoly::divide_content(const BigInt& d) const {
    if (d == 0) throw std::invalid_argument("IntPoly::divide_content: zero divisor");
    IntPoly r = *this;
    for (auto& c : r.coeff_) {
        if (c % d != 0) throw std::logic_error("IntPoly::divide_content: not exact");
        c /= d;
    }
    return r;
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("IntPoly::divide_exact: zero divisor");
    if (is_zero()) return IntPoly();
    if (degree() < d.degree())
        throw std::logic_error("IntPoly::divide_exact: degree of divisor too large");
    std::vector<BigInt> rem = coeff_;
    std::vector<BigInt> quot(degree() - d.degree() + 1, BigInt(0));
    for (int k = degree() - d.degree(); k >= 0; --k) {
        BigInt top = rem[k + d.degree()];
        if (top == 0) continue;
        if (top % d.leading() != 0)
            throw std::logic_error("IntPoly::divide_exact: non-exact division");
        BigInt c = top / d.leading();
        quot[k] = c;
        for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= c * d.coeff_[i];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::logic_error("IntPoly::divide_exact: nonzero remainder");
    return IntPoly(std::move(quot));
}

IntPoly IntPoly::pseudo_rem(IntPoly a, const IntPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("IntPoly::pseudo_rem: zero divisor");
    int delta = a.degree() - d.degree();
    if (delta < 0) return a;
    const BigInt& lc = d.leading();
    for (int k = delta; k >= 0 && !a.is_zero(); ) {
        int da = a.degree();
        if (da < d.degree()) break;
        BigInt top = a.coeff_.back();
        // a := lc * a - top * q^(da - deg d) * d
        for (auto& c : a.coeff_) c *= lc;
        for (int i = 0; i <= d.degree(); ++i)
            a.coeff_[da - d.degree() + i] -= top * lc * d.coeff_[i] / lc * 1; // keep exact
        // The loop above subtracts top*d shifted; after scaling by lc the
        // leading term cancels exactly.
        a.trim();
        k = a.degree() - d.degree();
    }
    return a;
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    auto positive_primitive = [](IntPoly p) {
        if (p.is_zero()) return p;
        p = p.primitive_part();
        if (p.leading() < 0) p = -p;
        return p;
    };
    IntPoly x = positive_primitive(a);
    IntPoly y = positive_primitive(b);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_rem(x, y);
        x = y;
        y = positive_primitive(r);
    }
    return positive_primitive(x);
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeff_[k];
        if (c == 0) continue;
        BigInt a = big_abs(c);
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        bool show_coeff = (a != 1) || (k == 0);
        if (show_coeff) s += a.str();
        if (k > 0) {
            if (show_coeff) s += "*";
            s += "q";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

} // namespace green

#pragma once

#include <string>
#include <vector>

#include "green/bigint.hpp"

namespace green {

/// Univariate polynomial in the indeterminate q with exact integer
/// coefficients, stored low-to-high degree with no trailing zeros (the
/// zero polynomial has an empty coefficient vector).
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long long c) { if (c != 0) coeff_.push_back(BigInt(c)); }
    IntPoly(const BigInt& c) { if (c != 0) coeff_.push_back(c); }
    explicit IntPoly(std::vector<BigInt> coeff) : coeff_(std::move(coeff)) { trim(); }

    /// The monomial c * q^k.
    static IntPoly monomial(const BigInt& c, int k);
    /// The indeterminate q itself.
    static IntPoly q() { return monomial(1, 1); }

    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const { return coeff_.size() == 1 && coeff_[0] == 1; }
    int degree() const { return static_cast<int>(coeff_.size()) - 1; } // -1 for zero
    const std::vector<BigInt>& coeffs() const { return coeff_; }
    const BigInt& leading() const;
    BigInt coeff(int k) const { return k >= 0 && k <= degree() ? coeff_[k] : BigInt(0); }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    bool operator==(const IntPoly&) const = default;

    /// Multiply by q^k (k >= 0).
    IntPoly shifted(int k) const;

    /// Substitute q -> value, exactly.
    BigRational eval(const BigRational& value) const;
    BigInt eval_int(const BigInt& value) const;

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    BigInt content() const;
    /// this / content(), with leading coefficient sign preserved.
    IntPoly primitive_part() const;
    /// Divide every coefficient by d; throws if not exact.
    IntPoly divide_content(const BigInt& d) const;

    /// Exact polynomial division; throws logic_error if the remainder is
    /// nonzero or the division leaves the integer coefficient ring.
    IntPoly divide_exact(const IntPoly& d) const;

    /// Pseudo-remainder: lc(d)^(deg a - deg d + 1) * a mod d, computed in
    /// integer arithmetic.  Requires d nonzero.
    static IntPoly pseudo_rem(IntPoly a, const IntPoly& d);

    /// Primitive gcd with positive leading coefficient (primitive
    /// polynomial remainder sequence); gcd(0,0) = 0.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    /// Human-readable form like "q^2 - q + 1".
    std::string str() const;

private:
    void trim();
    std::vector<BigInt> coeff_;
};

} // namespace green

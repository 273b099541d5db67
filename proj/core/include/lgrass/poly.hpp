#ifndef LGRASS_POLY_HPP
#define LGRASS_POLY_HPP

#include <vector>

#include "lgrass/field.hpp"

namespace lgrass {

/// Dense univariate polynomial in s over k, constant term first.
/// Normalized: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient vector.
class Poly {
public:
    explicit Poly(const FieldDesc& fd) : fd_(fd) {}
    Poly(const FieldDesc& fd, std::vector<Fk> coeffs);
    static Poly constant(const Fk& c);
    static Poly one(const FieldDesc& fd) { return constant(Fk(fd, 1)); }
    static Poly s(const FieldDesc& fd);

    const FieldDesc& field() const { return fd_; }
    const std::vector<Fk>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    /// Order of vanishing at s = 0; degree()+1 sentinel is never returned,
    /// callers must handle the zero polynomial separately.
    int ord() const;

    Fk coeff(int i) const;
    Fk leading() const;
    Fk eval0() const { return coeff(0); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Fk& c) const;
    /// Multiply by s^k (k >= 0).
    Poly shifted(int k) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    /// Monic gcd (1 for coprime inputs, 0 only if both are 0).
    static Poly gcd(const Poly& a, const Poly& b);

private:
    void normalize();

    FieldDesc fd_;
    std::vector<Fk> c_;
};

}  // namespace lgrass

#endif

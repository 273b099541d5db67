#ifndef LGRASS_SCALAR_HPP
#define LGRASS_SCALAR_HPP

#include <optional>

#include "lgrass/poly.hpp"

namespace lgrass {

/// Element of K = k(s), kept in canonical reduced form:
/// gcd(num, den) = 1, den monic over a prime field, den a primitive integer
/// polynomial with positive leading coefficient over the rationals.
/// Zero is num = 0, den = 1.
class Scalar {
public:
    explicit Scalar(const FieldDesc& fd) : num_(fd), den_(Poly::one(fd)) {}
    Scalar(const FieldDesc& fd, long n) : num_(Poly::constant(Fk(fd, n))), den_(Poly::one(fd)) {}
    explicit Scalar(const Fk& c) : num_(Poly::constant(c)), den_(Poly::one(c.field())) {}
    Scalar(Poly num, Poly den);
    explicit Scalar(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}

    static Scalar s(const FieldDesc& fd) { return Scalar(Poly::s(fd)); }
    /// s^k for k >= 0.
    static Scalar s_pow(const FieldDesc& fd, int k) { return Scalar(Poly::one(fd).shifted(k)); }

    const FieldDesc& field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    /// Constant element of k (denominator 1, numerator degree <= 0)?
    bool is_constant() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// ord_s(num) - ord_s(den); nullopt encodes +infinity (the zero element).
    std::optional<long> valuation() const;
    /// Evaluation at s = 0. Throws NegativeValuation on a pole at s = 0.
    Fk specialize0() const;

    std::string to_string() const;

private:
    void canonicalize();

    Poly num_, den_;
};

}  // namespace lgrass

#endif

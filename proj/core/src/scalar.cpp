#include "lgrass/scalar.hpp"

namespace lgrass {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.field() != den_.field()) throw DimensionMismatch("numerator/denominator field mismatch");
    if (den_.is_zero()) throw DivisionByZero();
    canonicalize();
}

void Scalar::canonicalize() {
    const FieldDesc& fd = num_.field();
    if (num_.is_zero()) {
        den_ = Poly::one(fd);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    if (fd.kind == FieldKind::prime_field) {
        Fk l = den_.leading();
        if (!l.is_one()) {
            Fk li = l.inv();
            num_ = num_.scaled(li);
            den_ = den_.scaled(li);
        }
    } else {
        // Scale so the denominator is a primitive integer polynomial with
        // positive leading coefficient.
        mpz_class lcm_den(1), gcd_num(0);
        for (const Fk& c : den_.coeffs()) {
            if (c.is_zero()) continue;
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den().get_mpz_t());
        }
        for (const Fk& c : den_.coeffs()) {
            if (c.is_zero()) continue;
            mpq_class scaled = c.rational() * mpq_class(lcm_den);
            mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_num().get_mpz_t());
        }
        mpq_class factor(lcm_den, gcd_num);
        factor.canonicalize();
        if (den_.leading().rational() < 0) factor = -factor;
        Fk f(Fk(fd, factor));
        num_ = num_.scaled(f);
        den_ = den_.scaled(f);
    }
}

bool Scalar::is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.coeff(0) == den_.coeff(0); }

bool Scalar::is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

Scalar Scalar::operator+(const Scalar& o) const { return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }

Scalar Scalar::operator-(const Scalar& o) const { return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }

Scalar Scalar::operator*(const Scalar& o) const { return Scalar(num_ * o.num_, den_ * o.den_); }

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero();
    return Scalar(den_, num_);
}

std::optional<long> Scalar::valuation() const {
    if (is_zero()) return std::nullopt;
    return static_cast<long>(num_.ord()) - static_cast<long>(den_.ord());
}

Fk Scalar::specialize0() const {
    Fk d0 = den_.eval0();
    if (d0.is_zero()) throw NegativeValuation("cannot specialize at s=0: valuation " +
                                             std::to_string(valuation().value()));
    return num_.eval0() / d0;
}

std::string Scalar::to_string() const {
    auto poly_str = [](const Poly& p) {
        if (p.is_zero()) return std::string("0");
        std::string out;
        for (int i = p.degree(); i >= 0; --i) {
            Fk c = p.coeff(i);
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            if (i == 0)
                out += c.to_string();
            else if (c.is_one())
                out += i == 1 ? "s" : "s^" + std::to_string(i);
            else
                out += c.to_string() + (i == 1 ? "*s" : "*s^" + std::to_string(i));
        }
        return out;
    };
    if (den_.degree() == 0 && den_.coeff(0).is_one()) return poly_str(num_);
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

}  // namespace lgrass

#include "lgrass/poly.hpp"

namespace lgrass {

Poly::Poly(const FieldDesc& fd, std::vector<Fk> coeffs) : fd_(fd), c_(std::move(coeffs)) {
    for (const Fk& c : c_)
        if (c.field() != fd_) throw DimensionMismatch("coefficient field mismatch");
    normalize();
}

Poly Poly::constant(const Fk& c) {
    Poly p(c.field());
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

Poly Poly::s(const FieldDesc& fd) {
    Poly p(fd);
    p.c_ = {Fk(fd, 0), Fk(fd, 1)};
    return p;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Poly::ord() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    throw Error("ord() of zero polynomial");
}

Fk Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Fk(fd_, 0);
    return c_[static_cast<std::size_t>(i)];
}

Fk Poly::leading() const {
    if (c_.empty()) return Fk(fd_, 0);
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Fk> r(std::max(c_.size(), o.c_.size()), Fk(fd_, 0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return Poly(fd_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Fk> r(c_);
    for (Fk& c : r) c = -c;
    Poly p(fd_);
    p.c_ = std::move(r);
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(fd_);
    std::vector<Fk> r(c_.size() + o.c_.size() - 1, Fk(fd_, 0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    Poly p(fd_);
    p.c_ = std::move(r);
    p.normalize();
    return p;
}

Poly Poly::scaled(const Fk& c) const {
    std::vector<Fk> r(c_);
    for (Fk& x : r) x = x * c;
    return Poly(fd_, std::move(r));
}

Poly Poly::shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<Fk> r(static_cast<std::size_t>(k), Fk(fd_, 0));
    r.insert(r.end(), c_.begin(), c_.end());
    Poly p(fd_);
    p.c_ = std::move(r);
    return p;
}

bool Poly::operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero();
    Poly q(fd_), r(*this);
    std::vector<Fk> qc(static_cast<std::size_t>(std::max(0, degree() - d.degree() + 1)), Fk(fd_, 0));
    Fk dl = d.leading().inv();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Fk c = r.leading() * dl;
        qc[static_cast<std::size_t>(k)] = c;
        r = r - d.scaled(c).shifted(k);
    }
    q = Poly(fd_, std::move(qc));
    return {q, r};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x(a), y(b);
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.scaled(x.leading().inv());  // monic
}

}  // namespace lgrass

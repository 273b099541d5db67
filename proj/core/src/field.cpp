#include "lgrass/field.hpp"

#include <sstream>

namespace lgrass {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    for (std::uint64_t i = 11; i * i <= n; i += 6) {
        if (n % i == 0 || n % (i + 2) == 0) return false;
    }
    return true;
}

FieldDesc FieldDesc::prime(std::uint64_t p) {
    if (p == 2) throw InvalidConfig("characteristic 2 is not supported");
    if (!is_prime_u64(p)) throw InvalidConfig("modulus " + std::to_string(p) + " is not prime");
    if (p >= (1ull << 31)) throw InvalidConfig("modulus too large (must fit in 31 bits)");
    return FieldDesc{FieldKind::prime_field, p};
}

std::string FieldDesc::to_string() const {
    return kind == FieldKind::rationals ? "q" : "fp:" + std::to_string(p);
}

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

Fk::Fk(const FieldDesc& fd, const mpq_class& q) : fd_(fd) {
    if (fd.kind == FieldKind::rationals) {
        mpq_class c(q);
        c.canonicalize();
        v_ = c;
    } else {
        // reduce a/b mod p
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class pz(static_cast<unsigned long>(fd.p));
        mpz_class nr = num % pz, dr = den % pz;
        if (nr < 0) nr += pz;
        if (dr < 0) dr += pz;
        std::uint64_t n = nr.get_ui(), d = dr.get_ui();
        if (d == 0) throw DivisionByZero();
        v_ = n * mod_pow(d, fd.p - 2, fd.p) % fd.p;
    }
}

void Fk::set_int(long n) {
    if (fd_.kind == FieldKind::rationals) {
        v_ = mpq_class(n);
    } else {
        long r = n % static_cast<long>(fd_.p);
        if (r < 0) r += static_cast<long>(fd_.p);
        v_ = static_cast<std::uint64_t>(r);
    }
}

void Fk::check_same(const Fk& o) const {
    if (fd_ != o.fd_) throw DimensionMismatch("field mismatch: " + fd_.to_string() + " vs " + o.fd_.to_string());
}

bool Fk::is_zero() const {
    if (fd_.kind == FieldKind::rationals) return std::get<mpq_class>(v_) == 0;
    return std::get<std::uint64_t>(v_) == 0;
}

bool Fk::is_one() const {
    if (fd_.kind == FieldKind::rationals) return std::get<mpq_class>(v_) == 1;
    return std::get<std::uint64_t>(v_) == 1;
}

Fk Fk::operator+(const Fk& o) const {
    check_same(o);
    Fk r(fd_);
    if (fd_.kind == FieldKind::rationals)
        r.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
    else
        r.v_ = (std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(o.v_)) % fd_.p;
    return r;
}

Fk Fk::operator-(const Fk& o) const {
    check_same(o);
    Fk r(fd_);
    if (fd_.kind == FieldKind::rationals)
        r.v_ = mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_));
    else
        r.v_ = (std::get<std::uint64_t>(v_) + fd_.p - std::get<std::uint64_t>(o.v_)) % fd_.p;
    return r;
}

Fk Fk::operator*(const Fk& o) const {
    check_same(o);
    Fk r(fd_);
    if (fd_.kind == FieldKind::rationals)
        r.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
    else
        r.v_ = std::get<std::uint64_t>(v_) * std::get<std::uint64_t>(o.v_) % fd_.p;
    return r;
}

Fk Fk::operator/(const Fk& o) const { return *this * o.inv(); }

Fk Fk::operator-() const {
    Fk r(fd_);
    if (fd_.kind == FieldKind::rationals) {
        r.v_ = mpq_class(-std::get<mpq_class>(v_));
    } else {
        std::uint64_t a = std::get<std::uint64_t>(v_);
        r.v_ = a == 0 ? 0 : fd_.p - a;
    }
    return r;
}

Fk Fk::inv() const {
    if (is_zero()) throw DivisionByZero();
    Fk r(fd_);
    if (fd_.kind == FieldKind::rationals)
        r.v_ = mpq_class(1 / std::get<mpq_class>(v_));
    else
        r.v_ = mod_pow(std::get<std::uint64_t>(v_), fd_.p - 2, fd_.p);
    return r;
}

bool Fk::operator==(const Fk& o) const {
    check_same(o);
    if (fd_.kind == FieldKind::rationals) return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    return std::get<std::uint64_t>(v_) == std::get<std::uint64_t>(o.v_);
}

std::uint64_t Fk::residue() const {
    if (fd_.kind != FieldKind::prime_field) throw Error("residue() requires a prime field element");
    return std::get<std::uint64_t>(v_);
}

const mpq_class& Fk::rational() const {
    if (fd_.kind != FieldKind::rationals) throw Error("rational() requires a rational element");
    return std::get<mpq_class>(v_);
}

std::string Fk::to_string() const {
    if (fd_.kind == FieldKind::rationals) return std::get<mpq_class>(v_).get_str();
    return std::to_string(std::get<std::uint64_t>(v_));
}

Fk Fk::parse(const FieldDesc& fd, const std::string& s) {
    if (s.empty()) throw ParseError("empty coefficient string");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad coefficient string '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    return Fk(fd, q);
}

}  // namespace lgrass

#ifndef LGRASS_FIELD_HPP
#define LGRASS_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "lgrass/errors.hpp"

namespace lgrass {

enum class FieldKind { rationals, prime_field };

/// Descriptor of the coefficient field k: the rationals, or F_p for an odd
/// prime p. Characteristic 2 is rejected at construction.
struct FieldDesc {
    FieldKind kind = FieldKind::rationals;
    std::uint64_t p = 0;  // modulus, meaningful iff prime_field

    static FieldDesc rationals() { return FieldDesc{FieldKind::rationals, 0}; }
    static FieldDesc prime(std::uint64_t p);

    bool operator==(const FieldDesc& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldDesc& o) const { return !(*this == o); }

    std::string to_string() const;
};

bool is_prime_u64(std::uint64_t n);

/// Element of the base field k. Immutable value type.
class Fk {
public:
    Fk() : fd_(FieldDesc::rationals()), v_(mpq_class(0)) {}
    explicit Fk(const FieldDesc& fd) : fd_(fd) { set_int(0); }
    Fk(const FieldDesc& fd, long n) : fd_(fd) { set_int(n); }
    Fk(const FieldDesc& fd, const mpq_class& q);

    const FieldDesc& field() const { return fd_; }

    bool is_zero() const;
    bool is_one() const;

    Fk operator+(const Fk& o) const;
    Fk operator-(const Fk& o) const;
    Fk operator*(const Fk& o) const;
    Fk operator/(const Fk& o) const;
    Fk operator-() const;
    Fk inv() const;

    bool operator==(const Fk& o) const;
    bool operator!=(const Fk& o) const { return !(*this == o); }

    /// Residue in [0, p); prime-field elements only.
    std::uint64_t residue() const;
    /// Rational value; rationals only.
    const mpq_class& rational() const;

    std::string to_string() const;
    static Fk parse(const FieldDesc& fd, const std::string& s);

private:
    void set_int(long n);
    void check_same(const Fk& o) const;

    FieldDesc fd_;
    std::variant<std::uint64_t, mpq_class> v_;
};

}  // namespace lgrass

#endif

#ifndef LGRASS_RNG_HPP
#define LGRASS_RNG_HPP

#include <cstdint>

#include "lgrass/field.hpp"

namespace lgrass {

/// Deterministic splitmix64 stream. Trials derive disjoint streams from
/// (seed, index) so serial and parallel campaign runs agree.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng derived(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
        r.next();  // decorrelate nearby seeds
        return r;
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // n is tiny here; modulo bias is negligible and determinism is what matters
        return next() % n;
    }

    /// Random field element; rationals draw small integers in [-9, 9].
    Fk element(const FieldDesc& fd) {
        if (fd.kind == FieldKind::prime_field) return Fk(fd, static_cast<long>(below(fd.p)));
        return Fk(fd, static_cast<long>(below(19)) - 9);
    }

    /// Random nonzero field element.
    Fk nonzero(const FieldDesc& fd) {
        for (;;) {
            Fk x = element(fd);
            if (!x.is_zero()) return x;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace lgrass

#endif

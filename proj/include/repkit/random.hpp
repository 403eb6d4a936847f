#pragma once

#include <cstdint>
#include <random>

#include "repkit/field.hpp"

namespace repkit {

/// Seeded generator used by every randomized routine. Draws are reduced by
/// plain modulo so that sequences do not depend on the standard library's
/// distribution implementations.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform-ish draw in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    /// Uniform element of a finite field; an integer in [-range, range] over Q.
    Scalar scalar(const Field& f, long long range = 4) {
        if (f.is_finite()) return Scalar::from_code(f, below(f.order()));
        return Scalar::from_int(f, static_cast<long long>(below(2 * range + 1)) - range);
    }
    Scalar nonzero_scalar(const Field& f, long long range = 4) {
        for (;;) {
            Scalar s = scalar(f, range);
            if (!s.is_zero()) return s;
        }
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace repkit

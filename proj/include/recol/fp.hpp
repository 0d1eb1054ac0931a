#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace recol {

/// A prime field GF(p). All matrix and module arithmetic in this library is
/// exact arithmetic over such a field; there is no floating point anywhere.
struct FieldSpec {
    std::uint32_t p = 2;

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    static FieldSpec of(std::uint32_t p) {
        if (!is_prime(p))
            throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
        return FieldSpec{p};
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b % p) % p; }
    std::uint32_t neg(std::uint32_t a) const { return (p - a % p) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p);
    }

    // a^(p-2); residues form a cyclic group of order p-1
    std::uint32_t inv(std::uint32_t a) const {
        a %= p;
        if (a == 0) throw std::domain_error("division by zero in GF(p)");
        std::uint64_t base = a, acc = 1, e = p - 2;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(acc);
    }

    std::uint32_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
    }

    bool operator==(const FieldSpec&) const = default;
};

}  // namespace recol

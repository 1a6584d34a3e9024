#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qred {

// Scalars are GMP rationals. Over a prime field the value is kept as an
// integer residue in [0, p) with denominator 1.
using Scalar = mpq_class;

class Field {
public:
    static Field rational() { return Field(0); }
    // Throws std::invalid_argument unless p is a prime below 2^31.
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }

    Scalar from_int(long v) const;
    Scalar from_fraction(const mpz_class &num, const mpz_class &den) const;
    Scalar canonical(const Scalar &x) const;

    Scalar add(const Scalar &a, const Scalar &b) const;
    Scalar sub(const Scalar &a, const Scalar &b) const;
    Scalar mul(const Scalar &a, const Scalar &b) const;
    Scalar div(const Scalar &a, const Scalar &b) const;
    Scalar neg(const Scalar &a) const;
    Scalar inv(const Scalar &a) const;

    // y += a * x, in place.
    void axpy(Scalar &y, const Scalar &a, const Scalar &x) const;
    // y *= a, in place.
    void scale(Scalar &y, const Scalar &a) const;

    static bool is_zero(const Scalar &x) { return sgn(x) == 0; }

    std::string name() const;
    std::string format(const Scalar &x) const;

    bool operator==(const Field &other) const = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    void reduce(mpz_class &z) const;

    std::uint32_t p_ = 0;
};

} // namespace qred

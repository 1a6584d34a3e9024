#include "qred/field.hpp"

#include <stdexcept>

namespace qred {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                    " is not a prime below 2^31");
    return Field(static_cast<std::uint32_t>(p));
}

void Field::reduce(mpz_class &z) const {
    mpz_fdiv_r_ui(z.get_mpz_t(), z.get_mpz_t(), p_);
}

Scalar Field::from_int(long v) const {
    Scalar s(v);
    if (p_ != 0)
        reduce(s.get_num());
    return s;
}

Scalar Field::from_fraction(const mpz_class &num, const mpz_class &den) const {
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    if (p_ == 0) {
        Scalar s(num, den);
        s.canonicalize();
        return s;
    }
    mpz_class n = num, d = den;
    reduce(n);
    reduce(d);
    if (d == 0)
        throw std::invalid_argument("denominator vanishes modulo " + std::to_string(p_));
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), mpz_class(p_).get_mpz_t());
    n *= dinv;
    reduce(n);
    return Scalar(n);
}

Scalar Field::canonical(const Scalar &x) const {
    if (p_ == 0)
        return x;
    return from_fraction(x.get_num(), x.get_den());
}

Scalar Field::add(const Scalar &a, const Scalar &b) const {
    if (p_ == 0)
        return a + b;
    mpz_class z = a.get_num() + b.get_num();
    if (z >= p_)
        z -= p_;
    return Scalar(z);
}

Scalar Field::sub(const Scalar &a, const Scalar &b) const {
    if (p_ == 0)
        return a - b;
    mpz_class z = a.get_num() - b.get_num();
    if (z < 0)
        z += p_;
    return Scalar(z);
}

Scalar Field::mul(const Scalar &a, const Scalar &b) const {
    if (p_ == 0)
        return a * b;
    mpz_class z = a.get_num() * b.get_num();
    reduce(z);
    return Scalar(z);
}

Scalar Field::inv(const Scalar &a) const {
    if (is_zero(a))
        throw std::domain_error("inverse of zero");
    if (p_ == 0)
        return 1 / a;
    mpz_class z;
    mpz_invert(z.get_mpz_t(), a.get_num().get_mpz_t(), mpz_class(p_).get_mpz_t());
    return Scalar(z);
}

Scalar Field::div(const Scalar &a, const Scalar &b) const { return mul(a, inv(b)); }

Scalar Field::neg(const Scalar &a) const {
    if (p_ == 0)
        return -a;
    if (is_zero(a))
        return a;
    return Scalar(mpz_class(p_) - a.get_num());
}

void Field::axpy(Scalar &y, const Scalar &a, const Scalar &x) const {
    if (p_ == 0) {
        y += a * x;
        return;
    }
    mpz_addmul(y.get_num_mpz_t(), a.get_num_mpz_t(), x.get_num_mpz_t());
    reduce(y.get_num());
}

void Field::scale(Scalar &y, const Scalar &a) const {
    if (p_ == 0) {
        y *= a;
        return;
    }
    y.get_num() *= a.get_num();
    reduce(y.get_num());
}

std::string Field::name() const {
    return p_ == 0 ? std::string("rational") : "gf " + std::to_string(p_);
}

std::string Field::format(const Scalar &x) const { return x.get_str(); }

} // namespace qred

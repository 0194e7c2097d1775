#include "exanlab/field.hpp"

#include <limits>

namespace exanlab {

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime and 0 < a < p
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

Field Field::prime_field(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 32))
        throw InputError("prime field modulus must be < 2^32, got " + std::to_string(p));
    if (!is_prime_u64(p))
        throw InputError("prime field modulus is not prime: " + std::to_string(p));
    return Field(p);
}

std::uint64_t Field::modulus() const {
    if (p_ == 0) throw InputError("modulus() called on the rational field");
    return p_;
}

std::string Field::str() const {
    return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::from_int(const Field& f, long v) {
    Scalar s(f);
    if (f.is_rational()) {
        s.rat_ = v;
    } else {
        const std::uint64_t p = f.modulus();
        long r = v % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::rational(mpq_class v) {
    Scalar s(Field::rationals());
    v.canonicalize();
    s.rat_ = std::move(v);
    return s;
}

Scalar Scalar::residue(const Field& f, std::uint64_t v) {
    if (!f.is_prime_field()) throw InputError("residue() needs a prime field");
    Scalar s(f);
    s.res_ = v % f.modulus();
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    if (text.empty()) throw InputError("empty scalar string");
    if (f.is_rational()) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw InputError("unparsable rational scalar: '" + text + "'");
        if (q.get_den() == 0) throw InputError("zero denominator in scalar: '" + text + "'");
        q.canonicalize();
        return rational(q);
    }
    mpz_class z;
    if (z.set_str(text, 10) != 0)
        throw InputError("unparsable residue scalar: '" + text + "'");
    mpz_class p(static_cast<unsigned long>(f.modulus()));
    mpz_class r = z % p;
    if (r < 0) r += p;
    return residue(f, r.get_ui());
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw InputError("scalar field mismatch: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = rat_ + o.rat_;
    } else {
        const std::uint64_t p = field_.modulus();
        s.res_ = (res_ + o.res_) % p;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = rat_ - o.rat_;
    } else {
        const std::uint64_t p = field_.modulus();
        s.res_ = (res_ + p - o.res_) % p;
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = rat_ * o.rat_;
    } else {
        // p < 2^32, so the product fits in 64 bits
        s.res_ = (res_ * o.res_) % field_.modulus();
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = -rat_;
    } else {
        const std::uint64_t p = field_.modulus();
        s.res_ = (p - res_) % p;
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw MathDomainError("division by zero in " + field_.str());
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = 1 / rat_;
    } else {
        s.res_ = mod_inverse(res_, field_.modulus());
    }
    return s;
}

std::string Scalar::str() const {
    if (field_.is_rational()) return rat_.get_str();
    return std::to_string(res_);
}

} // namespace exanlab

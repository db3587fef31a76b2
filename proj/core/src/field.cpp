#include "nilcommute/field.hpp"

#include <algorithm>
#include <utility>

namespace nilcommute {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p >= (1ull << 31))
        throw PrimeTooLarge("prime field characteristic must be < 2^31, got " + std::to_string(p));
    if (!is_prime_u64(p))
        throw NotPrime(std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
    return kind_ == FieldKind::Rationals ? "Q" : "F_" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldSpec& f) {
    if (f.kind() == FieldKind::Rationals) return Scalar(f, mpq_class(0));
    return Scalar(f, std::uint32_t(0));
}

Scalar Scalar::one(const FieldSpec& f) {
    if (f.kind() == FieldKind::Rationals) return Scalar(f, mpq_class(1));
    return Scalar(f, std::uint32_t(1 % f.p()));
}

Scalar Scalar::of_int(const FieldSpec& f, long value) {
    if (f.kind() == FieldKind::Rationals) return Scalar(f, mpq_class(value));
    long p = static_cast<long>(f.p());
    long r = value % p;
    if (r < 0) r += p;
    return Scalar(f, static_cast<std::uint32_t>(r));
}

Scalar Scalar::fraction(const FieldSpec& f, long num, long den) {
    if (den == 0) throw DivisionByZero("fraction with zero denominator");
    return of_int(f, num) / of_int(f, den);
}

Scalar Scalar::from_mpq(mpq_class q) {
    q.canonicalize();
    return Scalar(FieldSpec::rationals(), std::move(q));
}

Scalar Scalar::from_residue(const FieldSpec& f, std::uint64_t r) {
    if (f.kind() != FieldKind::PrimeField)
        throw FieldMismatch("from_residue needs a prime field");
    return Scalar(f, static_cast<std::uint32_t>(r % f.p()));
}

bool Scalar::is_zero() const {
    if (field_.kind() == FieldKind::Rationals) return sgn(rat()) == 0;
    return residue() == 0;
}

bool Scalar::is_one() const { return *this == one(field_); }

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatch("operands live in " + field_.to_string() + " and " + o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.kind() == FieldKind::Rationals)
        return Scalar(field_, mpq_class(rat() + o.rat()));
    std::uint64_t s = std::uint64_t(residue()) + o.residue();
    if (s >= field_.p()) s -= field_.p();
    return Scalar(field_, static_cast<std::uint32_t>(s));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    if (field_.kind() == FieldKind::Rationals)
        return Scalar(field_, mpq_class(rat() - o.rat()));
    std::uint64_t s = std::uint64_t(residue()) + field_.p() - o.residue();
    if (s >= field_.p()) s -= field_.p();
    return Scalar(field_, static_cast<std::uint32_t>(s));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.kind() == FieldKind::Rationals)
        return Scalar(field_, mpq_class(rat() * o.rat()));
    std::uint64_t prod = std::uint64_t(residue()) * o.residue() % field_.p();
    return Scalar(field_, static_cast<std::uint32_t>(prod));
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    if (field_.kind() == FieldKind::Rationals)
        return Scalar(field_, mpq_class(-rat()));
    std::uint32_t r = residue();
    return Scalar(field_, r == 0 ? 0 : field_.p() - r);
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    if (field_.kind() == FieldKind::Rationals) return rat() == o.rat();
    return residue() == o.residue();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + field_.to_string());
    if (field_.kind() == FieldKind::Rationals)
        return Scalar(field_, mpq_class(1 / rat()));
    return Scalar(field_, static_cast<std::uint32_t>(mod_inverse(residue(), field_.p())));
}

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar acc = one(field_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string Scalar::to_string() const {
    if (field_.kind() == FieldKind::PrimeField) return std::to_string(residue());
    const mpq_class& q = rat();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    if (text.empty()) throw SchemaError("", "empty scalar literal");
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_int(num) || !is_int(den))
        throw SchemaError("", "malformed scalar literal '" + text + "'");
    // mpz_set_str rejects an explicit plus sign
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw SchemaError("", "zero denominator in '" + text + "'");
    if (f.kind() == FieldKind::Rationals) {
        mpq_class q(n, d);
        q.canonicalize();
        return Scalar(f, std::move(q));
    }
    mpz_class p(static_cast<unsigned long>(f.p()));
    mpz_class nr = n % p, dr = d % p;
    if (nr < 0) nr += p;
    if (dr < 0) dr += p;
    Scalar sn = from_residue(f, nr.get_ui());
    Scalar sd = from_residue(f, dr.get_ui());
    if (sd.is_zero()) throw SchemaError("", "denominator vanishes mod " + std::to_string(f.p()));
    return sn / sd;
}

bool Scalar::less(const Scalar& a, const Scalar& b) {
    if (a.field_.kind() == FieldKind::Rationals) return a.rat() < b.rat();
    return a.residue() < b.residue();
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw DivisionByZero("no inverse of 0 mod " + std::to_string(p));
    // extended Euclid on (a, p); p prime so gcd is 1
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

std::vector<Scalar> find_omega(const FieldSpec& f) {
    std::uint32_t ch = f.characteristic();
    if (ch == 2 || ch == 3)
        throw UnsupportedCharacteristic("omega equation degenerates in characteristic " + std::to_string(ch));
    std::vector<Scalar> roots;
    roots.push_back(Scalar::zero(f));
    if (f.kind() == FieldKind::Rationals) {
        // 27 w^3 = 8 has the single rational solution 2/3
        roots.push_back(Scalar::fraction(f, 2, 3));
        return roots;
    }
    std::uint64_t p = f.p();
    // nonzero roots are (2/3)*u with u^3 = 1
    Scalar base = Scalar::fraction(f, 2, 3);
    std::vector<Scalar> cbrt_one{Scalar::one(f)};
    if (p % 3 == 1) {
        std::uint64_t w = 1;
        for (std::uint64_t g = 2; g < p; ++g) {
            w = mod_pow(g, (p - 1) / 3, p);
            if (w != 1) break;
        }
        cbrt_one.push_back(Scalar::from_residue(f, w));
        cbrt_one.push_back(Scalar::from_residue(f, w * w % p));
    }
    for (const Scalar& u : cbrt_one) roots.push_back(base * u);
    std::sort(roots.begin(), roots.end(), Scalar::less);
    return roots;
}

}  // namespace nilcommute

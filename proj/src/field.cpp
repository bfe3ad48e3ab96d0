#include "mbr/field.hpp"

#include <array>
#include <stdexcept>

namespace mbr {

namespace {

constexpr std::uint32_t kGf256Poly = 0x11D;

struct Gf256Tables {
    std::array<std::uint8_t, 512> exp{};
    std::array<std::uint8_t, 256> log{};

    Gf256Tables() {
        std::uint32_t x = 1;
        for (int i = 0; i < 255; ++i) {
            exp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x);
            log[x] = static_cast<std::uint8_t>(i);
            x <<= 1;
            if (x & 0x100) x ^= kGf256Poly;
        }
        // duplicate so mul can index exp[log a + log b] without a mod
        for (int i = 255; i < 512; ++i)
            exp[static_cast<std::size_t>(i)] = exp[static_cast<std::size_t>(i - 255)];
    }
};

const Gf256Tables& tables() {
    static const Gf256Tables t;
    return t;
}

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (p > 65521) throw std::invalid_argument("prime field too large (p > 65521)");
    if (!is_prime(p)) throw std::invalid_argument("field size is not prime: " + std::to_string(p));
    return Field(FieldKind::Prime, p);
}

Field Field::gf256() { return Field(FieldKind::Gf256, 256); }

Field Field::parse(const std::string& text) {
    if (text == "gf256") return gf256();
    if (text.rfind("p:", 0) == 0) return prime(static_cast<std::uint32_t>(std::stoul(text.substr(2))));
    throw std::invalid_argument("unrecognized field descriptor: " + text + " (expected gf256 or p:<prime>)");
}

std::string Field::name() const {
    return kind_ == FieldKind::Gf256 ? "gf256" : "p:" + std::to_string(q_);
}

void Field::check(symbol_t a) const {
    if (a >= q_) throw std::invalid_argument("field element out of range");
}

symbol_t Field::add(symbol_t a, symbol_t b) const {
    check(a); check(b);
    if (kind_ == FieldKind::Gf256) return a ^ b;
    return static_cast<symbol_t>((static_cast<std::uint32_t>(a) + b) % q_);
}

symbol_t Field::sub(symbol_t a, symbol_t b) const {
    check(a); check(b);
    if (kind_ == FieldKind::Gf256) return a ^ b;
    return static_cast<symbol_t>((static_cast<std::uint32_t>(a) + q_ - b) % q_);
}

symbol_t Field::neg(symbol_t a) const { return sub(0, a); }

symbol_t Field::mul(symbol_t a, symbol_t b) const {
    check(a); check(b);
    if (kind_ == FieldKind::Gf256) {
        if (a == 0 || b == 0) return 0;
        const auto& t = tables();
        return t.exp[static_cast<std::size_t>(t.log[a]) + t.log[b]];
    }
    return static_cast<symbol_t>((static_cast<std::uint64_t>(a) * b) % q_);
}

symbol_t Field::inv(symbol_t a) const {
    check(a);
    if (a == 0) throw std::domain_error("inverse of zero field element");
    if (kind_ == FieldKind::Gf256) {
        const auto& t = tables();
        return t.exp[255 - t.log[a]];
    }
    // extended Euclid on (a, p)
    std::int64_t t0 = 0, t1 = 1, r0 = q_, r1 = a;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t tmp = t0 - q * t1;
        t0 = t1; t1 = tmp;
        tmp = r0 - q * r1;
        r0 = r1; r1 = tmp;
    }
    if (t0 < 0) t0 += q_;
    return static_cast<symbol_t>(t0);
}

symbol_t Field::div(symbol_t a, symbol_t b) const { return mul(a, inv(b)); }

symbol_t Field::pow(symbol_t a, std::uint64_t e) const {
    check(a);
    symbol_t result = 1;
    symbol_t base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

}  // namespace mbr

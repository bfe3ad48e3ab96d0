#ifndef MBR_FIELD_HPP
#define MBR_FIELD_HPP

#include <cstdint>
#include <string>

namespace mbr {

/// Integer representative of a field element, always < q.
using symbol_t = std::uint16_t;

enum class FieldKind : std::uint8_t {
    Prime = 0,   // GF(p), p prime, p <= 65521
    Gf256 = 1,   // GF(2^8), reduction polynomial x^8+x^4+x^3+x^2+1 (0x11D)
};

/// Exact arithmetic over a finite field. Small value type; copies are cheap.
/// GF(2^8) multiplication uses process-wide log/antilog tables built once.
class Field {
public:
    static Field prime(std::uint32_t p);
    static Field gf256();
    static Field parse(const std::string& text);  // "gf256" or "p:<prime>"

    FieldKind kind() const { return kind_; }
    std::uint32_t size() const { return q_; }
    std::string name() const;

    symbol_t add(symbol_t a, symbol_t b) const;
    symbol_t sub(symbol_t a, symbol_t b) const;
    symbol_t neg(symbol_t a) const;
    symbol_t mul(symbol_t a, symbol_t b) const;
    symbol_t inv(symbol_t a) const;      // throws on a == 0
    symbol_t div(symbol_t a, symbol_t b) const;
    symbol_t pow(symbol_t a, std::uint64_t e) const;

    bool operator==(const Field& other) const = default;

private:
    Field(FieldKind kind, std::uint32_t q) : kind_(kind), q_(q) {}
    void check(symbol_t a) const;

    FieldKind kind_;
    std::uint32_t q_;
};

}  // namespace mbr

#endif

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace netforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of F_{p^r} in the polynomial basis, stored fully reduced as a
/// base-p packed code in [0, q). Immutable value type; equality is structural.
class FieldElement {
  public:
    FieldElement() : field_(nullptr), code_(0) {}
    FieldElement(const Field* field, uint64_t code) : field_(field), code_(code) {}

    const Field& field() const;
    uint64_t code() const { return code_; }
    std::vector<uint32_t> coeffs() const;

    bool is_zero() const { return code_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(uint64_t e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    // Enumeration order: ascending code.
    bool operator<(const FieldElement& o) const;

    std::string to_string() const;

  private:
    const Field* field_;
    uint64_t code_;
};

/// Descriptor of the finite field F_{p^r} = F_p[X]/(modulus). Immutable and
/// shared; all element arithmetic goes through it. The modulus is monic,
/// irreducible of degree r, given low-to-high. When not supplied, the
/// lexicographically smallest irreducible is chosen so serialized data is
/// reproducible across runs.
class Field : public std::enable_shared_from_this<Field> {
  public:
    static constexpr uint64_t kMaxOrder = uint64_t(1) << 20;

    static FieldPtr make(uint64_t p, uint32_t r,
                         std::optional<std::vector<uint32_t>> modulus = std::nullopt);

    uint64_t characteristic() const { return p_; }
    uint32_t degree() const { return r_; }
    uint64_t order() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    /// Image of an integer under Z -> F_p -> F_q (negatives map via p - |n| mod p).
    FieldElement from_int(int64_t n) const;
    FieldElement from_coeffs(const std::vector<uint32_t>& coeffs) const;
    FieldElement element(uint64_t code) const;

    /// All q elements in ascending code order.
    std::vector<FieldElement> elements() const;

    bool same_field(const Field& o) const;

    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t inv(uint64_t a) const;
    uint64_t pow(uint64_t a, uint64_t e) const;

    std::string describe() const;

  private:
    Field(uint64_t p, uint32_t r, std::vector<uint32_t> modulus);

    void decode(uint64_t code, uint32_t* digits) const;
    uint64_t encode(const uint32_t* digits) const;

    uint64_t p_;
    uint32_t r_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;
};

/// True iff a = x^2 for some x. For odd p this is the exponent test
/// a^((q-1)/2) = 1 (0 counts as a square); in characteristic 2 the Frobenius
/// is onto, so every element is a square.
bool is_square(const FieldElement& a);

/// Smallest (in enumeration order) xi with xi != 1 and xi^3 = 1, if any.
/// Exists iff q = 1 (mod 3).
std::optional<FieldElement> primitive_cube_root(const Field& field);

bool is_prime(uint64_t n);

} // namespace netforge

template <> struct std::hash<netforge::FieldElement> {
    size_t operator()(const netforge::FieldElement& e) const noexcept {
        return std::hash<uint64_t>()(e.code());
    }
};

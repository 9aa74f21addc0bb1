#include "netforge/field.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace netforge {

namespace {

constexpr uint32_t kMaxDegree = 20; // p^r <= 2^20 forces r <= 20
constexpr uint64_t kTableOrderCap = 512;

using Digits = std::array<uint64_t, 2 * kMaxDegree>;

uint64_t mod_pow(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t acc = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) acc = acc * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return acc;
}

uint64_t mod_inv_prime(uint64_t a, uint64_t p) { return mod_pow(a % p, p - 2, p); }

// Dense polynomials over F_p, low-to-high, for modulus validation only.
using Poly = std::vector<uint64_t>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    size_t r = f.size() - 1; // f monic of degree r
    for (size_t d = c.size(); d-- > r;) {
        uint64_t lead = c[d];
        c[d] = 0;
        if (lead)
            for (size_t j = 0; j < r; ++j) c[d - r + j] = (c[d - r + j] + (p - f[j]) % p * lead) % p;
    }
    if (c.size() > r) c.resize(r);
    poly_trim(c);
    return c;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint64_t p) {
    Poly acc = {1};
    while (e) {
        if (e & 1) acc = poly_mulmod(acc, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

Poly poly_sub(Poly a, const Poly& b, uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    poly_trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // a mod b
        uint64_t lead_inv = mod_inv_prime(b.back(), p);
        while (a.size() >= b.size() && !a.empty()) {
            uint64_t c = a.back() * lead_inv % p;
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (p - b[i] % p) * c) % p;
            poly_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

// Frobenius-based test: monic f of degree r is irreducible over F_p iff
// x^(p^r) = x mod f and gcd(x^(p^(r/l)) - x, f) = 1 for all primes l | r.
bool poly_irreducible(const Poly& f, uint64_t p) {
    size_t r = f.size() - 1;
    if (r == 1) return true;
    Poly x = {0, 1};
    Poly t = x;
    std::vector<Poly> frob_chain; // t_k = x^(p^k) mod f, k = 1..r
    for (size_t k = 1; k <= r; ++k) {
        t = poly_powmod(t, p, f, p);
        frob_chain.push_back(t);
    }
    if (poly_sub(frob_chain[r - 1], x, p) != Poly{}) return false;
    for (uint64_t l = 2; l <= r; ++l) {
        if (r % l) continue;
        bool lp = true;
        for (uint64_t d = 2; d * d <= l; ++d)
            if (l % d == 0) { lp = false; break; }
        if (!lp) continue;
        Poly diff = poly_sub(frob_chain[r / l - 1], x, p);
        Poly g = poly_gcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(uint64_t p, uint32_t r, std::vector<uint32_t> modulus)
    : p_(p), r_(r), modulus_(std::move(modulus)) {
    q_ = 1;
    for (uint32_t i = 0; i < r_; ++i) q_ *= p_;
}

FieldPtr Field::make(uint64_t p, uint32_t r, std::optional<std::vector<uint32_t>> modulus) {
    if (!is_prime(p)) throw Error("field characteristic must be prime, got " + std::to_string(p));
    if (r < 1) throw Error("extension degree must be >= 1");
    if (r > kMaxDegree) throw Error("extension degree too large");
    uint64_t q = 1;
    for (uint32_t i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxOrder) throw Error("field order exceeds cap 2^20");
    }

    std::vector<uint32_t> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != size_t(r) + 1 || mod.back() != 1)
            throw Error("modulus must be monic of degree r");
        Poly f(mod.begin(), mod.end());
        for (auto& c : f)
            if (c >= p) throw Error("modulus coefficient out of range");
        if (!poly_irreducible(f, p)) throw Error("modulus is reducible over F_p");
    } else {
        // Lexicographically smallest coefficient vector (c0, c1, ..., c_{r-1}).
        uint64_t span = 1;
        for (uint32_t i = 0; i < r; ++i) span *= p;
        bool found = false;
        for (uint64_t m = 0; m < span && !found; ++m) {
            Poly f(r + 1, 0);
            uint64_t t = m;
            for (uint32_t i = r; i-- > 0;) { // c0 is the most significant lex digit
                f[i] = t % p;
                t /= p;
            }
            f[r] = 1;
            if (poly_irreducible(f, p)) {
                mod.assign(f.begin(), f.end());
                found = true;
            }
        }
        if (!found) throw Error("no irreducible modulus found"); // cannot happen
    }
    return FieldPtr(new Field(p, r, std::move(mod)));
}

void Field::decode(uint64_t code, uint32_t* digits) const {
    for (uint32_t i = 0; i < r_; ++i) {
        digits[i] = uint32_t(code % p_);
        code /= p_;
    }
}

uint64_t Field::encode(const uint32_t* digits) const {
    uint64_t code = 0;
    for (uint32_t i = r_; i-- > 0;) code = code * p_ + digits[i];
    return code;
}

uint64_t Field::add(uint64_t a, uint64_t b) const {
    uint32_t da[kMaxDegree], db[kMaxDegree];
    decode(a, da);
    decode(b, db);
    for (uint32_t i = 0; i < r_; ++i) da[i] = uint32_t((da[i] + db[i]) % p_);
    return encode(da);
}

uint64_t Field::sub(uint64_t a, uint64_t b) const {
    uint32_t da[kMaxDegree], db[kMaxDegree];
    decode(a, da);
    decode(b, db);
    for (uint32_t i = 0; i < r_; ++i) da[i] = uint32_t((da[i] + p_ - db[i]) % p_);
    return encode(da);
}

uint64_t Field::neg(uint64_t a) const { return sub(0, a); }

uint64_t Field::mul(uint64_t a, uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t da[kMaxDegree], db[kMaxDegree];
    decode(a, da);
    decode(b, db);
    uint64_t conv[2 * kMaxDegree] = {0};
    for (uint32_t i = 0; i < r_; ++i) {
        if (!da[i]) continue;
        for (uint32_t j = 0; j < r_; ++j) conv[i + j] += uint64_t(da[i]) * db[j];
    }
    // reduce mod the monic modulus
    for (uint32_t d = 2 * r_ - 2; d >= r_ && d < 2 * kMaxDegree; --d) {
        uint64_t lead = conv[d] % p_;
        conv[d] = 0;
        if (lead) {
            for (uint32_t j = 0; j < r_; ++j)
                conv[d - r_ + j] += lead * ((p_ - modulus_[j]) % p_);
        }
        if (d == r_) break;
    }
    uint32_t out[kMaxDegree];
    for (uint32_t i = 0; i < r_; ++i) out[i] = uint32_t(conv[i] % p_);
    return encode(out);
}

uint64_t Field::pow(uint64_t a, uint64_t e) const {
    uint64_t acc = 1;
    while (e) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

uint64_t Field::inv(uint64_t a) const {
    if (a == 0) throw Error("division by zero in " + describe());
    return pow(a, q_ - 2);
}

FieldElement Field::from_int(int64_t n) const {
    int64_t m = n % int64_t(p_);
    if (m < 0) m += int64_t(p_);
    return {this, uint64_t(m)};
}

FieldElement Field::from_coeffs(const std::vector<uint32_t>& coeffs) const {
    if (coeffs.size() > r_) throw Error("coefficient vector longer than extension degree");
    uint32_t digits[kMaxDegree] = {0};
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= p_) throw Error("coefficient residue out of range");
        digits[i] = coeffs[i];
    }
    return {this, encode(digits)};
}

FieldElement Field::element(uint64_t code) const {
    if (code >= q_) throw Error("element code out of range");
    return {this, code};
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (uint64_t c = 0; c < q_; ++c) out.emplace_back(this, c);
    return out;
}

bool Field::same_field(const Field& o) const {
    return this == &o || (p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_);
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << q_;
    if (r_ > 1) os << " (p=" << p_ << ", r=" << r_ << ")";
    return os.str();
}

const Field& FieldElement::field() const {
    if (!field_) throw Error("use of default-constructed field element");
    return *field_;
}

std::vector<uint32_t> FieldElement::coeffs() const {
    const Field& f = field();
    std::vector<uint32_t> out(f.degree());
    uint64_t c = code_;
    for (auto& d : out) {
        d = uint32_t(c % f.characteristic());
        c /= f.characteristic();
    }
    return out;
}

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
    const Field& f = a.field();
    if (!f.same_field(b.field())) throw Error("elements from different fields");
    return f;
}
} // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    const Field& f = common_field(*this, o);
    return {&f, f.add(code_, o.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    const Field& f = common_field(*this, o);
    return {&f, f.sub(code_, o.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    const Field& f = common_field(*this, o);
    return {&f, f.mul(code_, o.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    const Field& f = common_field(*this, o);
    return {&f, f.mul(code_, f.inv(o.code_))};
}

FieldElement FieldElement::operator-() const {
    const Field& f = field();
    return {&f, f.neg(code_)};
}

FieldElement FieldElement::inv() const {
    const Field& f = field();
    return {&f, f.inv(code_)};
}

FieldElement FieldElement::pow(uint64_t e) const {
    const Field& f = field();
    return {&f, f.pow(code_, e)};
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (field_ == nullptr || o.field_ == nullptr) return field_ == o.field_ && code_ == o.code_;
    return field_->same_field(*o.field_) && code_ == o.code_;
}

bool FieldElement::operator<(const FieldElement& o) const { return code_ < o.code_; }

std::string FieldElement::to_string() const {
    const Field& f = field();
    if (f.degree() == 1) return std::to_string(code_);
    std::ostringstream os;
    os << "[";
    auto cs = coeffs();
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) os << ",";
        os << cs[i];
    }
    os << "]";
    return os.str();
}

bool is_square(const FieldElement& a) {
    const Field& f = a.field();
    if (f.characteristic() == 2) return true;
    if (a.is_zero()) return true;
    return a.pow((f.order() - 1) / 2) == f.one();
}

std::optional<FieldElement> primitive_cube_root(const Field& field) {
    if (field.order() % 3 != 1) return std::nullopt;
    for (uint64_t c = 0; c < field.order(); ++c) {
        FieldElement x = field.element(c);
        if (x != field.one() && x.pow(3) == field.one()) return x;
    }
    return std::nullopt;
}

} // namespace netforge

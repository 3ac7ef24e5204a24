#include "gf.hpp"

#include <algorithm>
#include <map>

namespace flagcodes {

namespace {

constexpr unsigned kMaxFieldSize = 256;

// Polynomials over F_p as coefficient vectors, constant term first.
using Poly = std::vector<unsigned>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return trim(out);
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    a = trim(std::move(a));
    const size_t deg_m = m.size() - 1;
    while (a.size() > deg_m) {
        unsigned lead = a.back();
        size_t shift = a.size() - 1 - deg_m;
        for (size_t i = 0; i < m.size(); ++i) {
            unsigned sub = (lead * m[i]) % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        a = trim(std::move(a));
    }
    return a;
}

bool poly_divides(const Poly& divisor, const Poly& value, unsigned p) {
    return poly_mod(value, divisor, p).empty();
}

uint16_t encode(const Poly& a, unsigned p) {
    unsigned code = 0;
    for (size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return static_cast<uint16_t>(code);
}

Poly decode(uint16_t code, unsigned p, unsigned e) {
    Poly a(e, 0);
    unsigned v = code;
    for (unsigned i = 0; i < e; ++i) {
        a[i] = v % p;
        v /= p;
    }
    return trim(std::move(a));
}

// Exhaustive trial division by every monic polynomial of degree 1..e/2.
// Adequate for the small degrees shipped in the modulus table.
bool is_irreducible(const Poly& m, unsigned p) {
    const size_t e = m.size() - 1;
    for (size_t d = 1; 2 * d <= e; ++d) {
        unsigned count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (unsigned low = 0; low < count; ++low) {
            Poly divisor = decode(static_cast<uint16_t>(low), p, static_cast<unsigned>(d));
            divisor.resize(d + 1, 0);
            divisor[d] = 1;
            if (poly_divides(divisor, m, p)) return false;
        }
    }
    return true;
}

// Fixed moduli for the supported extension fields, constant term first.
const std::map<std::pair<unsigned, unsigned>, Poly>& modulus_table() {
    static const std::map<std::pair<unsigned, unsigned>, Poly> table = {
        {{2, 2}, {1, 1, 1}},       // x^2 + x + 1
        {{2, 3}, {1, 1, 0, 1}},    // x^3 + x + 1
        {{2, 4}, {1, 1, 0, 0, 1}}, // x^4 + x + 1
        {{3, 2}, {1, 0, 1}},       // x^2 + 1
        {{3, 3}, {1, 2, 0, 1}},    // x^3 + 2x + 1
        {{5, 2}, {1, 1, 1}},       // x^2 + x + 1
    };
    return table;
}

} // namespace

bool is_prime(unsigned value) {
    if (value < 2) return false;
    for (unsigned d = 2; d * d <= value; ++d)
        if (value % d == 0) return false;
    return true;
}

std::pair<unsigned, unsigned> factor_prime_power(unsigned q) {
    if (q < 2) fail(ErrorCode::ParseError, "field order must be at least 2");
    unsigned p = q;
    for (unsigned d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned e = 0;
    unsigned v = q;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    if (v != 1)
        fail(ErrorCode::ParseError, "field order " + std::to_string(q) + " is not a prime power");
    return {p, e};
}

FieldRef FieldCtx::create(unsigned p, unsigned e) {
    if (!is_prime(p))
        fail(ErrorCode::CompositeCharacteristic,
             "characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) fail(ErrorCode::UnsupportedFieldSize, "extension degree must be at least 1");

    uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxFieldSize)
            fail(ErrorCode::UnsupportedFieldSize,
                 "field order exceeds the supported bound " + std::to_string(kMaxFieldSize));
    }

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->e_ = e;
    ctx->q_ = static_cast<unsigned>(q);
    if (e > 1) {
        auto it = modulus_table().find({p, e});
        if (it == modulus_table().end())
            fail(ErrorCode::UnsupportedFieldSize,
                 "no built-in modulus for GF(" + std::to_string(q) + ")");
        ctx->modulus_ = it->second;
        if (!is_irreducible(ctx->modulus_, p))
            fail(ErrorCode::Internal, "built-in modulus is reducible");
    }
    ctx->build_tables();
    return ctx;
}

void FieldCtx::build_tables() {
    const unsigned q = q_;
    add_.assign(size_t(q) * q, 0);
    mul_.assign(size_t(q) * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);

    if (e_ == 1) {
        for (unsigned a = 0; a < q; ++a) {
            neg_[a] = static_cast<uint16_t>((q - a) % q);
            for (unsigned b = 0; b < q; ++b) {
                add_[idx(a, b)] = static_cast<uint16_t>((a + b) % q);
                mul_[idx(a, b)] = static_cast<uint16_t>((a * b) % q);
            }
        }
    } else {
        for (unsigned a = 0; a < q; ++a) {
            Poly pa = decode(static_cast<uint16_t>(a), p_, e_);
            Poly na(pa.size());
            for (size_t i = 0; i < pa.size(); ++i) na[i] = (p_ - pa[i]) % p_;
            neg_[a] = encode(trim(na), p_);
            for (unsigned b = 0; b < q; ++b) {
                Poly pb = decode(static_cast<uint16_t>(b), p_, e_);
                Poly sum(std::max(pa.size(), pb.size()), 0);
                for (size_t i = 0; i < sum.size(); ++i) {
                    unsigned x = i < pa.size() ? pa[i] : 0;
                    unsigned y = i < pb.size() ? pb[i] : 0;
                    sum[i] = (x + y) % p_;
                }
                add_[idx(a, b)] = encode(trim(std::move(sum)), p_);
                mul_[idx(a, b)] = encode(poly_mod(poly_mul(pa, pb, p_), modulus_, p_), p_);
            }
        }
    }

    for (unsigned a = 1; a < q; ++a) {
        for (unsigned b = 1; b < q; ++b) {
            if (mul_[idx(a, b)] == 1) {
                inv_[a] = static_cast<uint16_t>(b);
                break;
            }
        }
        if (inv_[a] == 0) fail(ErrorCode::Internal, "nonzero element without inverse");
    }

    frob_.assign(e_, std::vector<uint16_t>(q));
    for (unsigned a = 0; a < q; ++a) frob_[0][a] = static_cast<uint16_t>(a);
    for (unsigned j = 1; j < e_; ++j)
        for (unsigned a = 0; a < q; ++a)
            frob_[j][a] = pow(frob_[j - 1][a], p_);
}

uint16_t FieldCtx::pow(uint16_t a, uint64_t exponent) const {
    uint16_t result = 1;
    uint16_t base = a;
    while (exponent) {
        if (exponent & 1) result = mul(result, base);
        base = mul(base, base);
        exponent >>= 1;
    }
    return result;
}

} // namespace flagcodes

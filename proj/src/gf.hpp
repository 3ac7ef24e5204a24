#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "error.hpp"

namespace flagcodes {

class FieldCtx;
using FieldRef = std::shared_ptr<const FieldCtx>;

/// Field automorphism x -> x^(p^power). Aut(F_q) is cyclic of order e,
/// generated by the Frobenius map, so every automorphism has this form.
struct FieldAutomorphism {
    unsigned power = 0;

    bool is_identity() const { return power == 0; }
    friend bool operator==(const FieldAutomorphism&, const FieldAutomorphism&) = default;
};

/// Exact arithmetic in F_q, q = p^e, with elements encoded as integers in
/// [0, q): the base-p digits of the code are the polynomial coefficients,
/// constant term least significant. For e = 1 this is arithmetic mod p.
///
/// Contexts are immutable after construction; all operation tables are
/// precomputed, so arithmetic is pure table lookup.
class FieldCtx {
public:
    /// Builds the field with the fixed built-in irreducible modulus for
    /// (p, e). Supported: any prime p with p^e <= 256 when e = 1, and the
    /// extension fields q in {4, 8, 9, 16, 25, 27}.
    static FieldRef create(unsigned p, unsigned e);

    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned q() const { return q_; }

    /// Modulus coefficients over F_p, constant term first, length e + 1.
    /// Empty for prime fields.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    uint16_t add(uint16_t a, uint16_t b) const { return add_[idx(a, b)]; }
    uint16_t sub(uint16_t a, uint16_t b) const { return add_[idx(a, neg_[b])]; }
    uint16_t mul(uint16_t a, uint16_t b) const { return mul_[idx(a, b)]; }
    uint16_t neg(uint16_t a) const { return neg_[a]; }

    uint16_t inv(uint16_t a) const {
        if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero field element");
        return inv_[a];
    }

    uint16_t pow(uint16_t a, uint64_t exponent) const;

    /// Applies x -> x^(p^power); power is reduced mod e.
    uint16_t frobenius(unsigned power, uint16_t a) const { return frob_[power % e_][a]; }
    uint16_t frobenius(const FieldAutomorphism& phi, uint16_t a) const {
        return frobenius(phi.power, a);
    }

    FieldAutomorphism compose(FieldAutomorphism first, FieldAutomorphism second) const {
        return {(first.power + second.power) % e_};
    }
    FieldAutomorphism automorphism_inverse(FieldAutomorphism phi) const {
        return {(e_ - phi.power % e_) % e_};
    }

    /// Same mathematical field: equal (p, e, modulus). Distinct contexts for
    /// the same parameters are interchangeable.
    bool same_field(const FieldCtx& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

private:
    FieldCtx() = default;
    void build_tables();

    size_t idx(uint16_t a, uint16_t b) const { return size_t(a) * q_ + b; }

    unsigned p_ = 0;
    unsigned e_ = 0;
    unsigned q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<uint16_t> add_;
    std::vector<uint16_t> mul_;
    std::vector<uint16_t> neg_;
    std::vector<uint16_t> inv_;
    std::vector<std::vector<uint16_t>> frob_;
};

/// Scalar value type pairing an element code with its field.
class FieldElement {
public:
    FieldElement(FieldRef ctx, uint16_t code) : ctx_(std::move(ctx)), code_(code) {}

    uint16_t code() const { return code_; }
    const FieldRef& ctx() const { return ctx_; }
    bool is_zero() const { return code_ == 0; }

    FieldElement operator+(const FieldElement& rhs) const {
        return {ctx_, require_same(rhs)->add(code_, rhs.code_)};
    }
    FieldElement operator-(const FieldElement& rhs) const {
        return {ctx_, require_same(rhs)->sub(code_, rhs.code_)};
    }
    FieldElement operator*(const FieldElement& rhs) const {
        return {ctx_, require_same(rhs)->mul(code_, rhs.code_)};
    }
    FieldElement operator-() const { return {ctx_, ctx_->neg(code_)}; }
    FieldElement inverse() const { return {ctx_, ctx_->inv(code_)}; }

    FieldElement frobenius(const FieldAutomorphism& phi) const {
        return {ctx_, ctx_->frobenius(phi, code_)};
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.code_ == b.code_ && a.ctx_->same_field(*b.ctx_);
    }
    /// Integer-code order; deterministic, no algebraic meaning.
    friend bool operator<(const FieldElement& a, const FieldElement& b) {
        return a.code_ < b.code_;
    }

private:
    const FieldCtx* require_same(const FieldElement& rhs) const {
        if (!ctx_->same_field(*rhs.ctx_))
            fail(ErrorCode::MixedFields, "field elements from different fields");
        return ctx_.get();
    }

    FieldRef ctx_;
    uint16_t code_;
};

bool is_prime(unsigned value);

/// Factors q as p^e with p prime; ParseError if q is not a prime power.
std::pair<unsigned, unsigned> factor_prime_power(unsigned q);

} // namespace flagcodes

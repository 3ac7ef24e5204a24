#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "linalg.hpp"

namespace flagcodes {

/// The space F_q^n whose subspaces are being coded.
struct AmbientSpace {
    FieldRef ctx;
    size_t n;

    AmbientSpace(FieldRef field, size_t dimension);

    unsigned q() const { return ctx->q(); }

    bool same_as(const AmbientSpace& other) const {
        return n == other.n && ctx->same_field(*other.ctx);
    }
};

void require_same_ambient(const AmbientSpace& a, const AmbientSpace& b);

class GroupElement;

/// A k-dimensional subspace of F_q^n held in canonical form: the basis is
/// the unique RREF matrix with k nonzero rows whose row space is the
/// subspace. Equality and ordering are basis equality and basis order, so
/// subspaces behave as plain values in sets.
class Subspace {
public:
    /// Canonicalizes the row space of an arbitrary generating matrix; the
    /// rows need not be independent. An empty matrix gives the zero subspace.
    static Subspace from_rows(const AmbientSpace& ambient, const Matrix& rows);

    /// The zero subspace {0}, dimension 0.
    static Subspace zero(const AmbientSpace& ambient);

    /// The full space F_q^n.
    static Subspace full(const AmbientSpace& ambient);

    const AmbientSpace& ambient() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool is_zero() const { return dim() == 0; }

    /// Membership of a coordinate row vector, by reduction against the
    /// RREF basis.
    bool contains_vector(const std::vector<uint16_t>& v) const;

    /// this ⊆ other.
    bool contained_in(const Subspace& other) const;
    /// other ⊆ this.
    bool contains(const Subspace& other) const { return other.contained_in(*this); }

    Subspace sum(const Subspace& other) const;

    /// Intersection basis via the Zassenhaus stacking procedure.
    Subspace intersection(const Subspace& other) const;

    /// Image under a linear or semilinear group element: rowsp(φ(U·A)),
    /// returned in canonical form.
    Subspace acted(const GroupElement& g) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.basis_ == b.basis_;
    }
    /// Canonical order: dimension, then basis lexicographic.
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
        if (auto c = a.dim() <=> b.dim(); c != 0) return c;
        return a.basis_ <=> b.basis_;
    }

private:
    Subspace(AmbientSpace ambient, Matrix basis)
        : ambient_(std::move(ambient)), basis_(std::move(basis)) {}

    AmbientSpace ambient_;
    Matrix basis_;
};

/// d_S(U, V) = dim(U + V) − dim(U ∩ V); always even, 0 iff U = V.
unsigned subspace_distance(const Subspace& u, const Subspace& v);

/// rowsp(φ(U·A)) in canonical form. Does not validate invertibility of A;
/// used by the group scans, which draw A from an enumerated GL list.
Subspace subspace_image(const Subspace& u, const Matrix& a, const FieldAutomorphism& phi);

/// An element of ΓL_n(F_q) = GL_n(F_q) ⋊ Aut(F_q): an invertible matrix A
/// together with a field automorphism φ. Elements with φ = id are the
/// linear ones. Composition follows the semidirect-product rule
/// (A, φ)(B, φ') = (A·φ⁻¹(B), φφ') with φ⁻¹ applied entry-wise.
class GroupElement {
public:
    static GroupElement linear(Matrix a);
    static GroupElement semilinear(Matrix a, FieldAutomorphism phi);
    static GroupElement identity(const AmbientSpace& ambient);

    const Matrix& matrix() const { return a_; }
    const FieldAutomorphism& frobenius() const { return phi_; }
    bool is_linear() const { return phi_.is_identity(); }
    size_t n() const { return a_.rows(); }

    GroupElement compose(const GroupElement& then) const;
    GroupElement inverse() const;

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.phi_ == b.phi_ && a.a_ == b.a_;
    }
    /// Canonical order: automorphism power ascending, then matrix order.
    friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
        if (auto c = a.phi_.power <=> b.phi_.power; c != 0) return c;
        return a.a_ <=> b.a_;
    }

private:
    GroupElement(Matrix a, FieldAutomorphism phi);

    Matrix a_;
    FieldAutomorphism phi_;
};

/// act(U, λI_n) = U for every nonzero scalar λ; exposed as a checkable
/// assertion rather than assumed.
bool scalar_fix_check(const FieldElement& lambda, const Subspace& u);

/// Number of k-dimensional subspaces of F_q^n (Gaussian binomial),
/// saturating at uint64 max on overflow.
uint64_t gaussian_binomial(size_t n, size_t k, unsigned q);

/// All of G_q(k, n) in lexicographic RREF order. TooLarge when the count
/// exceeds max_count.
std::vector<Subspace> enumerate_grassmannian(const AmbientSpace& ambient, size_t k,
                                             uint64_t max_count = uint64_t(1) << 20);

/// All invertible n×n matrices over the ambient field, in lexicographic
/// entry order (row-major). Results are cached per (p, e, n); TooLarge when
/// q^(n²) exceeds max_candidates.
const std::vector<Matrix>& enumerate_gl(const AmbientSpace& ambient,
                                        uint64_t max_candidates = uint64_t(1) << 26);

/// Order of GL_n(F_q), saturating on overflow.
uint64_t gl_order(size_t n, unsigned q);

} // namespace flagcodes

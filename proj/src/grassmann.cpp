#include "grassmann.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace flagcodes {

AmbientSpace::AmbientSpace(FieldRef field, size_t dimension)
    : ctx(std::move(field)), n(dimension) {
    if (n < 1) fail(ErrorCode::DimensionMismatch, "ambient dimension must be at least 1");
}

void require_same_ambient(const AmbientSpace& a, const AmbientSpace& b) {
    if (!a.same_as(b)) fail(ErrorCode::AmbientMismatch, "operands live in different ambient spaces");
}

Subspace Subspace::from_rows(const AmbientSpace& ambient, const Matrix& rows) {
    if (rows.cols() != ambient.n)
        fail(ErrorCode::ShapeMismatch, "generating rows must have n columns");
    if (!rows.ctx()->same_field(*ambient.ctx))
        fail(ErrorCode::MixedFields, "generating rows over a different field");
    RrefResult red = rows.rref();
    Matrix basis(ambient.ctx, red.rank, ambient.n);
    for (size_t i = 0; i < red.rank; ++i)
        for (size_t c = 0; c < ambient.n; ++c) basis.set(i, c, red.reduced.at(i, c));
    return Subspace(ambient, std::move(basis));
}

Subspace Subspace::zero(const AmbientSpace& ambient) {
    return Subspace(ambient, Matrix(ambient.ctx, 0, ambient.n));
}

Subspace Subspace::full(const AmbientSpace& ambient) {
    return Subspace(ambient, Matrix::identity(ambient.ctx, ambient.n));
}

bool Subspace::contains_vector(const std::vector<uint16_t>& v) const {
    if (v.size() != ambient_.n) fail(ErrorCode::ShapeMismatch, "vector length differs from n");
    const FieldCtx& f = *ambient_.ctx;
    std::vector<uint16_t> r = v;
    // The basis is RREF, so one elimination pass per basis row suffices.
    for (size_t i = 0; i < basis_.rows(); ++i) {
        size_t pivot = 0;
        while (pivot < ambient_.n && basis_.at(i, pivot) == 0) ++pivot;
        if (pivot == ambient_.n) continue;
        uint16_t factor = r[pivot];
        if (factor == 0) continue;
        for (size_t c = pivot; c < ambient_.n; ++c)
            r[c] = f.sub(r[c], f.mul(factor, basis_.at(i, c)));
    }
    return std::all_of(r.begin(), r.end(), [](uint16_t x) { return x == 0; });
}

bool Subspace::contained_in(const Subspace& other) const {
    require_same_ambient(ambient_, other.ambient_);
    if (dim() > other.dim()) return false;
    for (size_t i = 0; i < basis_.rows(); ++i)
        if (!other.contains_vector(basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    require_same_ambient(ambient_, other.ambient_);
    return from_rows(ambient_, basis_.stacked(other.basis_));
}

Subspace Subspace::intersection(const Subspace& other) const {
    require_same_ambient(ambient_, other.ambient_);
    const size_t n = ambient_.n;
    const size_t ku = dim();
    const size_t kv = other.dim();
    // Zassenhaus: reduce [U | U; V | 0]. Rows whose left half vanishes carry
    // intersection vectors in the right half.
    Matrix big(ambient_.ctx, ku + kv, 2 * n);
    for (size_t i = 0; i < ku; ++i)
        for (size_t c = 0; c < n; ++c) {
            big.set(i, c, basis_.at(i, c));
            big.set(i, n + c, basis_.at(i, c));
        }
    for (size_t i = 0; i < kv; ++i)
        for (size_t c = 0; c < n; ++c) big.set(ku + i, c, other.basis_.at(i, c));
    RrefResult red = big.rref();
    std::vector<std::vector<uint16_t>> rows;
    for (size_t i = 0; i < red.rank; ++i) {
        bool left_zero = true;
        for (size_t c = 0; c < n && left_zero; ++c)
            if (red.reduced.at(i, c) != 0) left_zero = false;
        if (!left_zero) continue;
        std::vector<uint16_t> right(n);
        for (size_t c = 0; c < n; ++c) right[c] = red.reduced.at(i, n + c);
        rows.push_back(std::move(right));
    }
    return from_rows(ambient_, Matrix::from_rows(ambient_.ctx, rows, n));
}

Subspace Subspace::acted(const GroupElement& g) const {
    if (g.n() != ambient_.n)
        fail(ErrorCode::AmbientMismatch, "group element degree differs from ambient dimension");
    return subspace_image(*this, g.matrix(), g.frobenius());
}

Subspace subspace_image(const Subspace& u, const Matrix& a, const FieldAutomorphism& phi) {
    Matrix image = u.basis() * a;
    if (!phi.is_identity()) image = image.applied(phi);
    return Subspace::from_rows(u.ambient(), image);
}

unsigned subspace_distance(const Subspace& u, const Subspace& v) {
    require_same_ambient(u.ambient(), v.ambient());
    size_t dim_sum = u.basis().stacked(v.basis()).rank();
    // dim(U∩V) = dim U + dim V − dim(U+V)
    return static_cast<unsigned>(2 * dim_sum - u.dim() - v.dim());
}

GroupElement::GroupElement(Matrix a, FieldAutomorphism phi) : a_(std::move(a)), phi_(phi) {
    if (a_.rows() != a_.cols()) fail(ErrorCode::ShapeMismatch, "group element matrix must be square");
    if (!a_.is_invertible()) fail(ErrorCode::Singular, "group element matrix must be invertible");
    phi_.power %= a_.ctx()->e();
}

GroupElement GroupElement::linear(Matrix a) { return GroupElement(std::move(a), {0}); }

GroupElement GroupElement::semilinear(Matrix a, FieldAutomorphism phi) {
    return GroupElement(std::move(a), phi);
}

GroupElement GroupElement::identity(const AmbientSpace& ambient) {
    return linear(Matrix::identity(ambient.ctx, ambient.n));
}

GroupElement GroupElement::compose(const GroupElement& then) const {
    const FieldCtx& f = *a_.ctx();
    FieldAutomorphism phi_inv = f.automorphism_inverse(phi_);
    Matrix product = a_ * then.a_.applied(phi_inv);
    return GroupElement(std::move(product), f.compose(phi_, then.phi_));
}

GroupElement GroupElement::inverse() const {
    const FieldCtx& f = *a_.ctx();
    return GroupElement(a_.inverse().applied(phi_), f.automorphism_inverse(phi_));
}

bool scalar_fix_check(const FieldElement& lambda, const Subspace& u) {
    if (lambda.is_zero()) fail(ErrorCode::Singular, "scalar must be nonzero");
    const AmbientSpace& ambient = u.ambient();
    GroupElement g =
        GroupElement::linear(Matrix::scalar(ambient.ctx, ambient.n, lambda.code()));
    return u.acted(g) == u;
}

namespace {

uint64_t saturating_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

uint64_t saturating_add(uint64_t a, uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

uint64_t saturating_pow(uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    for (uint64_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
    return r;
}

} // namespace

uint64_t gaussian_binomial(size_t n, size_t k, unsigned q) {
    if (k > n) return 0;
    // Pascal recurrence [n,k]_q = [n-1,k-1]_q + q^k [n-1,k]_q, exact in
    // integers at every step.
    std::vector<uint64_t> row(n + 1, 0);
    row[0] = 1;
    for (size_t m = 1; m <= n; ++m) {
        for (size_t j = std::min(m, k); j >= 1; --j) {
            uint64_t qj = saturating_pow(q, j);
            row[j] = saturating_add(row[j - 1], saturating_mul(qj, row[j]));
        }
    }
    return row[k];
}

std::vector<Subspace> enumerate_grassmannian(const AmbientSpace& ambient, size_t k,
                                             uint64_t max_count) {
    const size_t n = ambient.n;
    if (k > n) fail(ErrorCode::DimensionMismatch, "subspace dimension exceeds ambient dimension");
    uint64_t count = gaussian_binomial(n, k, ambient.q());
    if (count > max_count)
        fail(ErrorCode::TooLarge, "Grassmannian size " + std::to_string(count) +
                                      " exceeds the enumeration cap " + std::to_string(max_count));

    std::vector<Subspace> out;
    out.reserve(count);
    if (k == 0) {
        out.push_back(Subspace::zero(ambient));
        return out;
    }

    const unsigned q = ambient.q();
    std::vector<size_t> pivots(k);
    for (size_t i = 0; i < k; ++i) pivots[i] = i;

    // Iterate pivot-column k-subsets; for each, fill the free (non-pivot,
    // right-of-pivot) positions with all value tuples.
    while (true) {
        std::vector<std::pair<size_t, size_t>> free_pos;
        std::vector<bool> is_pivot(n, false);
        for (size_t p : pivots) is_pivot[p] = true;
        for (size_t i = 0; i < k; ++i)
            for (size_t c = pivots[i] + 1; c < n; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(i, c);

        Matrix pattern(ambient.ctx, k, n);
        for (size_t i = 0; i < k; ++i) pattern.set(i, pivots[i], 1);

        std::vector<uint16_t> values(free_pos.size(), 0);
        while (true) {
            Matrix m = pattern;
            for (size_t t = 0; t < free_pos.size(); ++t)
                m.set(free_pos[t].first, free_pos[t].second, values[t]);
            out.push_back(Subspace::from_rows(ambient, m));
            size_t t = 0;
            while (t < values.size() && values[t] + 1u == q) values[t++] = 0;
            if (t == values.size()) break;
            ++values[t];
        }

        // next k-subset of pivots
        size_t i = k;
        while (i > 0 && pivots[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++pivots[i - 1];
        for (size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }

    std::sort(out.begin(), out.end());
    if (out.size() != count)
        fail(ErrorCode::Internal, "Grassmannian enumeration count mismatch");
    return out;
}

uint64_t gl_order(size_t n, unsigned q) {
    uint64_t qn = saturating_pow(q, n);
    uint64_t order = 1;
    for (size_t i = 0; i < n; ++i)
        order = saturating_mul(order, qn - saturating_pow(q, i));
    return order;
}

namespace {

// Row codes treat column 0 as the most significant base-q digit, so
// ascending codes match row-major lexicographic entry order.
std::vector<uint16_t> decode_row(uint64_t code, size_t n, unsigned q) {
    std::vector<uint16_t> row(n);
    for (size_t c = n; c-- > 0;) {
        row[c] = static_cast<uint16_t>(code % q);
        code /= q;
    }
    return row;
}

struct GlBuilder {
    const AmbientSpace& ambient;
    size_t n;
    unsigned q;
    uint64_t qn;
    std::vector<bool> in_span;            // indexed by row code
    std::vector<std::vector<uint16_t>> span_vectors;
    std::vector<std::vector<uint16_t>> rows;
    std::vector<Matrix>& out;

    uint64_t encode_row(const std::vector<uint16_t>& row) const {
        uint64_t code = 0;
        for (size_t c = 0; c < n; ++c) code = code * q + row[c];
        return code;
    }

    void build(size_t depth) {
        if (depth == n) {
            Matrix m(ambient.ctx, n, n);
            for (size_t i = 0; i < n; ++i)
                for (size_t c = 0; c < n; ++c) m.set(i, c, rows[i][c]);
            out.push_back(std::move(m));
            return;
        }
        const FieldCtx& f = *ambient.ctx;
        for (uint64_t code = 1; code < qn; ++code) {
            if (in_span[code]) continue;
            std::vector<uint16_t> row = decode_row(code, n, q);
            // extend span: existing + c*row for c in F_q*
            size_t old_size = span_vectors.size();
            std::vector<uint64_t> added;
            for (uint16_t c = 1; c < q; ++c) {
                for (size_t s = 0; s < old_size; ++s) {
                    std::vector<uint16_t> v(n);
                    for (size_t t = 0; t < n; ++t)
                        v[t] = f.add(span_vectors[s][t], f.mul(c, row[t]));
                    uint64_t vcode = encode_row(v);
                    in_span[vcode] = true;
                    added.push_back(vcode);
                    span_vectors.push_back(std::move(v));
                }
            }
            rows.push_back(row);
            build(depth + 1);
            rows.pop_back();
            span_vectors.resize(old_size);
            for (uint64_t vcode : added) in_span[vcode] = false;
        }
    }
};

struct GlCacheKey {
    unsigned p, e;
    size_t n;
    auto operator<=>(const GlCacheKey&) const = default;
};

} // namespace

const std::vector<Matrix>& enumerate_gl(const AmbientSpace& ambient, uint64_t max_candidates) {
    uint64_t candidates = saturating_pow(ambient.q(), ambient.n * ambient.n);
    if (candidates > max_candidates)
        fail(ErrorCode::TooLarge,
             "group scan over " + std::to_string(candidates) +
                 " candidate matrices exceeds the budget " + std::to_string(max_candidates));

    static std::mutex cache_mutex;
    static std::map<GlCacheKey, std::vector<Matrix>> cache;
    GlCacheKey key{ambient.ctx->p(), ambient.ctx->e(), ambient.n};

    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<Matrix> matrices;
    matrices.reserve(gl_order(ambient.n, ambient.q()));
    GlBuilder builder{ambient,
                      ambient.n,
                      ambient.q(),
                      saturating_pow(ambient.q(), ambient.n),
                      std::vector<bool>(saturating_pow(ambient.q(), ambient.n), false),
                      {},
                      {},
                      matrices};
    builder.in_span[0] = true;
    builder.span_vectors.push_back(std::vector<uint16_t>(ambient.n, 0));
    builder.build(0);
    if (matrices.size() != gl_order(ambient.n, ambient.q()))
        fail(ErrorCode::Internal, "GL enumeration count mismatch");
    return cache.emplace(key, std::move(matrices)).first->second;
}

} // namespace flagcodes

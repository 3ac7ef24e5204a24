#include "fixtures.hpp"

#include <functional>
#include <map>

namespace flagcodes {

namespace {

// Fixture bases are written as vectors over the prime subfield, so one
// definition instantiates at any supported q.
struct Builder {
    AmbientSpace ambient;

    std::vector<uint16_t> vec(std::initializer_list<unsigned> coords) const {
        std::vector<uint16_t> v(ambient.n, 0);
        size_t i = 0;
        for (unsigned c : coords) v[i++] = static_cast<uint16_t>(c);
        return v;
    }

    Subspace span(std::initializer_list<std::initializer_list<unsigned>> rows) const {
        std::vector<std::vector<uint16_t>> parsed;
        for (const auto& r : rows) parsed.push_back(vec(r));
        return Subspace::from_rows(ambient, Matrix::from_rows(ambient.ctx, parsed, ambient.n));
    }

    ConstantDimensionCode cdc(std::vector<Subspace> words) const {
        return ConstantDimensionCode(ambient, std::move(words));
    }

    Flag flag(const TypeVector& typevec, std::vector<Subspace> spaces) const {
        return Flag(typevec, std::move(spaces));
    }
};

AmbientSpace ambient_for(unsigned q, size_t n) {
    auto [p, e] = factor_prime_power(q);
    return AmbientSpace(FieldCtx::create(p, e), n);
}

using FixtureFn = std::function<Document(unsigned q)>;

struct FixtureEntry {
    unsigned default_q;
    FixtureFn build;
};

const std::map<std::string, FixtureEntry>& registry() {
    static const std::map<std::string, FixtureEntry> fixtures = {
        // Product with an empty flag intersection: no flag can be formed.
        {"sec3_empty_product",
         {2, [](unsigned q) {
              Builder b{ambient_for(q, 3)};
              auto c1 = b.cdc({b.span({{1, 0, 0}}), b.span({{1, 0, 1}})});
              auto c2 = b.cdc({b.span({{1, 1, 0}, {0, 0, 1}}), b.span({{0, 1, 0}, {0, 0, 1}})});
              return make_document(CodeProduct(b.ambient, {c1, c2}));
          }}},
        // Nonempty intersection that still fails to generate: <e1> has no
        // word above it.
        {"sec3_not_generating",
         {2, [](unsigned q) {
              Builder b{ambient_for(q, 3)};
              auto c1 = b.cdc({b.span({{1, 0, 0}}), b.span({{0, 1, 0}})});
              auto c2 = b.cdc({b.span({{0, 1, 0}, {1, 0, 1}}), b.span({{0, 1, 0}, {0, 0, 1}})});
              return make_document(CodeProduct(b.ambient, {c1, c2}));
          }}},
        // The generating set whose SIC closure is the three-flag code.
        {"sec3_example_genset",
         {2, [](unsigned q) {
              Builder b{ambient_for(q, 3)};
              auto c1 = b.cdc({b.span({{1, 0, 0}}), b.span({{0, 1, 0}})});
              auto c2 = b.cdc({b.span({{1, 0, 0}, {0, 1, 0}}), b.span({{0, 1, 0}, {0, 0, 1}})});
              return make_document(CodeProduct(b.ambient, {c1, c2}));
          }}},
        // {F, F', F''}: SIC but not determined.
        {"sec3_C",
         {2, [](unsigned q) {
              Builder b{ambient_for(q, 3)};
              TypeVector tv(b.ambient, {1, 2});
              auto e1 = b.span({{1, 0, 0}});
              auto e2 = b.span({{0, 1, 0}});
              auto e12 = b.span({{1, 0, 0}, {0, 1, 0}});
              auto e23 = b.span({{0, 1, 0}, {0, 0, 1}});
              return make_document(FlagCode(tv, {b.flag(tv, {e1, e12}), b.flag(tv, {e2, e23}),
                                                 b.flag(tv, {e2, e12})}));
          }}},
        // {F, F'}: generated by the same product, not SIC.
        {"sec3_Cprime",
         {2, [](unsigned q) {
              Builder b{ambient_for(q, 3)};
              TypeVector tv(b.ambient, {1, 2});
              auto e1 = b.span({{1, 0, 0}});
              auto e2 = b.span({{0, 1, 0}});
              auto e12 = b.span({{1, 0, 0}, {0, 1, 0}});
              auto e23 = b.span({{0, 1, 0}, {0, 0, 1}});
              return make_document(FlagCode(tv, {b.flag(tv, {e1, e12}), b.flag(tv, {e2, e23})}));
          }}},
        // C'' on F_q^5: determined by its projected codes, neither
        // increasing nor decreasing.
        {"sec3_Cdoubleprime",
         {2, [](unsigned q) {
              Builder b{ambient_for(q, 5)};
              TypeVector tv(b.ambient, {1, 2});
              auto e1 = b.span({{1, 0, 0, 0, 0}});
              auto e2 = b.span({{0, 1, 0, 0, 0}});
              auto e3 = b.span({{0, 0, 1, 0, 0}});
              auto e12 = b.span({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}});
              auto e34 = b.span({{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}});
              auto e35 = b.span({{0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}});
              return make_document(FlagCode(tv, {b.flag(tv, {e1, e12}), b.flag(tv, {e2, e12}),
                                                 b.flag(tv, {e3, e34}), b.flag(tv, {e3, e35})}));
          }}},
        // The three-flag code whose projected codes are shared with the
        // two-flag sec4_Cprime.
        {"sec4_C",
         {2, [](unsigned q) {
              Builder b{ambient_for(q, 3)};
              TypeVector tv(b.ambient, {1, 2});
              auto e1 = b.span({{1, 0, 0}});
              auto e2 = b.span({{0, 1, 0}});
              auto e12 = b.span({{1, 0, 0}, {0, 1, 0}});
              auto e23 = b.span({{0, 1, 0}, {0, 0, 1}});
              return make_document(FlagCode(tv, {b.flag(tv, {e1, e12}), b.flag(tv, {e2, e23}),
                                                 b.flag(tv, {e2, e12})}));
          }}},
        {"sec4_Cprime",
         {2, [](unsigned q) {
              Builder b{ambient_for(q, 3)};
              TypeVector tv(b.ambient, {1, 2});
              auto e1 = b.span({{1, 0, 0}});
              auto e2 = b.span({{0, 1, 0}});
              auto e12 = b.span({{1, 0, 0}, {0, 1, 0}});
              auto e13 = b.span({{1, 0, 0}, {0, 0, 1}});
              return make_document(FlagCode(tv, {b.flag(tv, {e2, e12}), b.flag(tv, {e1, e13})}));
          }}},
        // Strict inclusion Aut(C) ⊂ ∩ Aut(C_i): the swap matrix stabilizes
        // both projected codes but not the code.
        {"sec4_three_flag",
         {2, [](unsigned q) {
              Builder b{ambient_for(q, 3)};
              TypeVector tv(b.ambient, {1, 2});
              auto e1 = b.span({{1, 0, 0}});
              auto e2 = b.span({{0, 1, 0}});
              auto e3 = b.span({{0, 0, 1}});
              auto e12 = b.span({{1, 0, 0}, {0, 1, 0}});
              auto e23 = b.span({{0, 1, 0}, {0, 0, 1}});
              auto e13 = b.span({{1, 0, 0}, {0, 0, 1}});
              return make_document(FlagCode(tv, {b.flag(tv, {e1, e12}), b.flag(tv, {e2, e23}),
                                                 b.flag(tv, {e3, e13})}));
          }}},
        // Not SIC, yet Aut(C) still equals the intersection.
        {"sec4_two_flag",
         {2, [](unsigned q) {
              Builder b{ambient_for(q, 3)};
              TypeVector tv(b.ambient, {1, 2});
              auto e1 = b.span({{1, 0, 0}});
              auto e2 = b.span({{0, 1, 0}});
              auto e12 = b.span({{1, 0, 0}, {0, 1, 0}});
              auto e23 = b.span({{0, 1, 0}, {0, 0, 1}});
              return make_document(FlagCode(tv, {b.flag(tv, {e1, e12}), b.flag(tv, {e2, e23})}));
          }}},
        // Increasing but not decreasing, type (1,2,3) on F_q^4.
        {"sec5_type123",
         {2, [](unsigned q) {
              Builder b{ambient_for(q, 4)};
              TypeVector tv(b.ambient, {1, 2, 3});
              auto e1 = b.span({{1, 0, 0, 0}});
              auto e3 = b.span({{0, 0, 1, 0}});
              auto e12 = b.span({{1, 0, 0, 0}, {0, 1, 0, 0}});
              auto e34 = b.span({{0, 0, 1, 0}, {0, 0, 0, 1}});
              auto e123 = b.span({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
              auto e124 = b.span({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
              auto e134 = b.span({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
              return make_document(FlagCode(tv, {b.flag(tv, {e1, e12, e123}),
                                                 b.flag(tv, {e1, e12, e124}),
                                                 b.flag(tv, {e3, e34, e134})}));
          }}},
        // Optimum distance, disjoint, neither increasing nor decreasing.
        {"sec5_type24_odfc",
         {2, [](unsigned q) {
              Builder b{ambient_for(q, 6)};
              TypeVector tv(b.ambient, {2, 4});
              auto e12 = b.span({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}});
              auto e34 = b.span({{0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}});
              auto e1234 = b.span({{1, 0, 0, 0, 0, 0},
                                   {0, 1, 0, 0, 0, 0},
                                   {0, 0, 1, 0, 0, 0},
                                   {0, 0, 0, 1, 0, 0}});
              auto e3456 = b.span({{0, 0, 1, 0, 0, 0},
                                   {0, 0, 0, 1, 0, 0},
                                   {0, 0, 0, 0, 1, 0},
                                   {0, 0, 0, 0, 0, 1}});
              return make_document(
                  FlagCode(tv, {b.flag(tv, {e12, e1234}), b.flag(tv, {e34, e3456})}));
          }}},
        // The same projected codes with a third flag: same projections,
        // different cardinality.
        {"sec5_type24_three",
         {2, [](unsigned q) {
              Builder b{ambient_for(q, 6)};
              TypeVector tv(b.ambient, {2, 4});
              auto e12 = b.span({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}});
              auto e34 = b.span({{0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}});
              auto e1234 = b.span({{1, 0, 0, 0, 0, 0},
                                   {0, 1, 0, 0, 0, 0},
                                   {0, 0, 1, 0, 0, 0},
                                   {0, 0, 0, 1, 0, 0}});
              auto e3456 = b.span({{0, 0, 1, 0, 0, 0},
                                   {0, 0, 0, 1, 0, 0},
                                   {0, 0, 0, 0, 1, 0},
                                   {0, 0, 0, 0, 0, 1}});
              return make_document(FlagCode(tv, {b.flag(tv, {e12, e1234}),
                                                 b.flag(tv, {e34, e3456}),
                                                 b.flag(tv, {e34, e1234})}));
          }}},
        // Type (4,7) on F_q^10: t_b < 2t_a makes it increasing; the
        // decreasing condition 2t_b < n + t_a just fails.
        {"sec5_n10_type47",
         {2, [](unsigned q) {
              Builder b{ambient_for(q, 10)};
              TypeVector tv(b.ambient, {4, 7});
              auto span_of = [&](std::initializer_list<unsigned> axes) {
                  std::vector<std::vector<uint16_t>> rows;
                  for (unsigned axis : axes) {
                      std::vector<uint16_t> v(10, 0);
                      v[axis - 1] = 1;
                      rows.push_back(std::move(v));
                  }
                  return Subspace::from_rows(b.ambient,
                                             Matrix::from_rows(b.ambient.ctx, rows, 10));
              };
              auto f1_1 = span_of({1, 2, 3, 4});
              auto f1_2 = span_of({1, 2, 3, 4, 5, 6, 7});
              auto f2_2 = span_of({1, 2, 3, 4, 8, 9, 10});
              auto f3_1 = span_of({5, 6, 7, 8});
              auto f3_2 = span_of({1, 5, 6, 7, 8, 9, 10});
              return make_document(FlagCode(tv, {b.flag(tv, {f1_1, f1_2}),
                                                 b.flag(tv, {f1_1, f2_2}),
                                                 b.flag(tv, {f3_1, f3_2})}));
          }}},
        // Type (1,3) on F_q^4: optimum distance, but neither t-condition
        // holds and the displayed permutation fixes both projected codes
        // without fixing the code.
        {"sec5_type13_n4",
         {2, [](unsigned q) {
              Builder b{ambient_for(q, 4)};
              TypeVector tv(b.ambient, {1, 3});
              auto e1 = b.span({{1, 0, 0, 0}});
              auto e2 = b.span({{0, 1, 0, 0}});
              auto e123 = b.span({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
              auto e124 = b.span({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
              return make_document(FlagCode(tv, {b.flag(tv, {e1, e123}), b.flag(tv, {e2, e124})}));
          }}},
        // Prime-subfield flags over an extension field: the pure Frobenius
        // twist is a semilinear symmetry, so SAut strictly contains Aut.
        {"semilinear_f4",
         {4, [](unsigned q) {
              Builder b{ambient_for(q, 3)};
              TypeVector tv(b.ambient, {1, 2});
              auto e1 = b.span({{1, 0, 0}});
              auto e2 = b.span({{0, 1, 0}});
              auto e12 = b.span({{1, 0, 0}, {0, 1, 0}});
              auto e23 = b.span({{0, 1, 0}, {0, 0, 1}});
              return make_document(FlagCode(tv, {b.flag(tv, {e1, e12}), b.flag(tv, {e2, e23})}));
          }}},
    };
    return fixtures;
}

} // namespace

Document fixture(const std::string& name, unsigned q) {
    auto it = registry().find(name);
    if (it == registry().end())
        fail(ErrorCode::UnknownFixture, "unknown fixture \"" + name + "\"");
    unsigned chosen = q == 0 ? it->second.default_q : q;
    return it->second.build(chosen);
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    names.reserve(registry().size());
    for (const auto& [name, entry] : registry()) names.push_back(name);
    return names;
}

} // namespace flagcodes

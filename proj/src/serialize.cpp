#include "serialize.hpp"

namespace flagcodes {

namespace {

constexpr const char* kFormatVersion = "flagcode/1";

[[noreturn]] void parse_fail(const std::string& message) {
    fail(ErrorCode::ParseError, message);
}

const Json& require_member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        parse_fail(std::string("missing required key \"") + key + "\"");
    return j.at(key);
}

uint64_t require_uint(const Json& j, const char* what) {
    if (!j.is_number_unsigned())
        parse_fail(std::string(what) + " must be a nonnegative integer");
    return j.get<uint64_t>();
}

} // namespace

const char* Document::kind() const {
    if (std::holds_alternative<ConstantDimensionCode>(payload)) return "cdc";
    if (std::holds_alternative<FlagCode>(payload)) return "flagcode";
    return "codeproduct";
}

Json subspace_to_json(const Subspace& s) {
    Json basis = Json::array();
    for (size_t r = 0; r < s.dim(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < s.ambient().n; ++c) row.push_back(s.basis().at(r, c));
        basis.push_back(std::move(row));
    }
    return Json{{"k", s.dim()}, {"basis", std::move(basis)}};
}

Subspace subspace_from_json(const AmbientSpace& ambient, const Json& j) {
    uint64_t k = require_uint(require_member(j, "k"), "subspace dimension k");
    const Json& basis = require_member(j, "basis");
    if (!basis.is_array() || basis.size() != k)
        parse_fail("subspace basis must be an array of k rows");
    std::vector<std::vector<uint16_t>> rows;
    rows.reserve(basis.size());
    for (const Json& row : basis) {
        if (!row.is_array() || row.size() != ambient.n)
            parse_fail("basis rows must have n entries");
        std::vector<uint16_t> entries;
        entries.reserve(ambient.n);
        for (const Json& v : row) {
            uint64_t code = require_uint(v, "element code");
            if (code >= ambient.q()) parse_fail("element code out of range for the field");
            entries.push_back(static_cast<uint16_t>(code));
        }
        rows.push_back(std::move(entries));
    }
    Subspace s = Subspace::from_rows(ambient, Matrix::from_rows(ambient.ctx, rows, ambient.n));
    if (s.dim() != k) parse_fail("basis rows are dependent: rank differs from k");
    return s;
}

Json flag_to_json(const Flag& f) {
    Json out = Json::array();
    for (const Subspace& s : f.spaces()) out.push_back(subspace_to_json(s));
    return out;
}

Json group_element_to_json(const GroupElement& g) {
    Json matrix = Json::array();
    for (size_t r = 0; r < g.n(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < g.n(); ++c) row.push_back(g.matrix().at(r, c));
        matrix.push_back(std::move(row));
    }
    return Json{{"matrix", std::move(matrix)}, {"frobenius_power", g.frobenius().power}};
}

namespace {

Json cdc_payload(const ConstantDimensionCode& code) {
    Json words = Json::array();
    for (const Subspace& w : code.words()) words.push_back(subspace_to_json(w));
    return Json{{"k", code.k()}, {"words", std::move(words)}};
}

ConstantDimensionCode cdc_from_payload(const AmbientSpace& ambient, const Json& j) {
    uint64_t k = require_uint(require_member(j, "k"), "code dimension k");
    const Json& words = require_member(j, "words");
    if (!words.is_array() || words.empty())
        parse_fail("a constant dimension code needs a nonempty \"words\" array");
    std::vector<Subspace> subspaces;
    subspaces.reserve(words.size());
    for (const Json& w : words) {
        Subspace s = subspace_from_json(ambient, w);
        if (s.dim() != k) parse_fail("codeword dimension differs from the declared k");
        subspaces.push_back(std::move(s));
    }
    return ConstantDimensionCode(ambient, std::move(subspaces));
}

Json flagcode_payload(const FlagCode& code) {
    Json type = Json::array();
    for (size_t t : code.typevec().dims()) type.push_back(t);
    Json flags = Json::array();
    for (const Flag& f : code.flags()) flags.push_back(flag_to_json(f));
    return Json{{"type", std::move(type)}, {"flags", std::move(flags)}};
}

FlagCode flagcode_from_payload(const AmbientSpace& ambient, const Json& j) {
    const Json& type = require_member(j, "type");
    if (!type.is_array() || type.empty()) parse_fail("flag code needs a nonempty \"type\" array");
    std::vector<size_t> dims;
    for (const Json& t : type) dims.push_back(require_uint(t, "type dimension"));
    TypeVector typevec(ambient, std::move(dims));

    const Json& flags = require_member(j, "flags");
    if (!flags.is_array() || flags.empty())
        parse_fail("a flag code needs a nonempty \"flags\" array");
    std::vector<Flag> parsed;
    parsed.reserve(flags.size());
    for (const Json& f : flags) {
        if (!f.is_array() || f.size() != typevec.length())
            parse_fail("each flag must list one subspace per type dimension");
        std::vector<Subspace> spaces;
        spaces.reserve(f.size());
        for (const Json& s : f) spaces.push_back(subspace_from_json(ambient, s));
        parsed.emplace_back(typevec, std::move(spaces));
    }
    return FlagCode(typevec, std::move(parsed));
}

Json codeproduct_payload(const CodeProduct& product) {
    Json components = Json::array();
    for (const ConstantDimensionCode& c : product.components())
        components.push_back(cdc_payload(c));
    return Json{{"components", std::move(components)}};
}

CodeProduct codeproduct_from_payload(const AmbientSpace& ambient, const Json& j) {
    const Json& components = require_member(j, "components");
    if (!components.is_array() || components.empty())
        parse_fail("a code product needs a nonempty \"components\" array");
    std::vector<ConstantDimensionCode> parsed;
    parsed.reserve(components.size());
    for (const Json& c : components) parsed.push_back(cdc_from_payload(ambient, c));
    return CodeProduct(ambient, std::move(parsed));
}

} // namespace

Document document_from_json(const Json& j) {
    const Json& version = require_member(j, "format_version");
    if (!version.is_string() || version.get<std::string>() != kFormatVersion)
        parse_fail(std::string("unsupported format_version; expected \"") + kFormatVersion + "\"");

    const Json& field = require_member(j, "field");
    unsigned p = static_cast<unsigned>(require_uint(require_member(field, "p"), "field.p"));
    unsigned e = static_cast<unsigned>(require_uint(require_member(field, "e"), "field.e"));
    uint64_t q = require_uint(require_member(j, "q"), "q");
    uint64_t n = require_uint(require_member(j, "n"), "n");
    if (n < 1) parse_fail("n must be at least 1");

    FieldRef ctx;
    try {
        ctx = FieldCtx::create(p, e);
    } catch (const Error& err) {
        if (err.code() == ErrorCode::Internal) throw;
        parse_fail(std::string("invalid field: ") + err.what());
    }
    if (ctx->q() != q) parse_fail("q does not equal p^e");
    AmbientSpace ambient(ctx, static_cast<size_t>(n));

    const Json& kind = require_member(j, "kind");
    if (!kind.is_string()) parse_fail("kind must be a string");
    std::string kind_name = kind.get<std::string>();
    try {
        if (kind_name == "cdc") return {ambient, cdc_from_payload(ambient, j)};
        if (kind_name == "flagcode") return {ambient, flagcode_from_payload(ambient, j)};
        if (kind_name == "codeproduct") return {ambient, codeproduct_from_payload(ambient, j)};
    } catch (const Error& err) {
        if (err.code() == ErrorCode::ParseError || err.code() == ErrorCode::Internal) throw;
        // Domain validation failures on malformed input surface as parse errors.
        parse_fail(err.what());
    }
    parse_fail("kind must be one of \"cdc\", \"flagcode\", \"codeproduct\"");
}

Document parse_document(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) parse_fail("input is not valid JSON");
    return document_from_json(j);
}

Json document_to_json(const Document& doc) {
    Json out;
    out["format_version"] = kFormatVersion;
    out["field"] = Json{{"p", doc.ambient.ctx->p()}, {"e", doc.ambient.ctx->e()}};
    out["q"] = doc.ambient.q();
    out["n"] = doc.ambient.n;
    out["kind"] = doc.kind();
    Json payload = std::visit(
        [](const auto& value) -> Json {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, ConstantDimensionCode>) return cdc_payload(value);
            if constexpr (std::is_same_v<T, FlagCode>) return flagcode_payload(value);
            if constexpr (std::is_same_v<T, CodeProduct>) return codeproduct_payload(value);
        },
        doc.payload);
    for (auto& [key, value] : payload.items()) out[key] = std::move(value);
    return out;
}

std::string emit_json(const Json& j) { return j.dump(2) + "\n"; }

std::string emit_document(const Document& doc) { return emit_json(document_to_json(doc)); }

Document make_document(ConstantDimensionCode code) {
    AmbientSpace ambient = code.ambient();
    return {std::move(ambient), std::move(code)};
}

Document make_document(FlagCode code) {
    AmbientSpace ambient = code.ambient();
    return {std::move(ambient), std::move(code)};
}

Document make_document(CodeProduct product) {
    AmbientSpace ambient = product.ambient();
    return {std::move(ambient), std::move(product)};
}

namespace {

Json uniqueness_witness_to_json(const UniquenessWitness& w) {
    return Json{{"level", w.level},
                {"subspace", subspace_to_json(w.subject)},
                {"neighbors",
                 Json::array({subspace_to_json(w.first_neighbor),
                              subspace_to_json(w.second_neighbor)})}};
}

Json comparison_to_json(const NumericComparison& c) {
    return Json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}};
}

} // namespace

Json classification_to_json(const Classification& c) {
    Json out;
    out["increasing"] = c.increasing;
    out["decreasing"] = c.decreasing;
    out["disjoint"] = c.disjoint;
    out["sic"] = c.sic;
    out["determined"] = c.determined;
    out["odfc"] = c.odfc;
    out["size"] = c.size;
    out["projected_sizes"] = c.projected_sizes;
    out["min_distance"] = c.min_distance;
    out["distance_bound"] = c.distance_bound;

    Json extremes;
    extremes["t_a"] = c.conditions.extremes.t_a ? Json(*c.conditions.extremes.t_a) : Json(nullptr);
    extremes["t_b"] = c.conditions.extremes.t_b ? Json(*c.conditions.extremes.t_b) : Json(nullptr);
    out["type_extremes"] = std::move(extremes);

    Json conditions;
    conditions["all_projected_max_distance"] = c.conditions.all_projected_max_distance;
    conditions["t_b_lt_2t_a"] =
        c.conditions.tb_lt_2ta ? comparison_to_json(*c.conditions.tb_lt_2ta) : Json(nullptr);
    conditions["two_t_b_lt_n_plus_t_a"] = c.conditions.two_tb_lt_n_plus_ta
                                              ? comparison_to_json(*c.conditions.two_tb_lt_n_plus_ta)
                                              : Json(nullptr);
    Json rules = Json::array();
    for (const ConditionRule& rule : c.conditions.rules)
        rules.push_back(Json{{"name", rule.name},
                             {"hypotheses_hold", rule.hypotheses_hold},
                             {"predicts_increasing", rule.predicts_increasing},
                             {"predicts_decreasing", rule.predicts_decreasing}});
    conditions["rules"] = std::move(rules);
    conditions["predicted_increasing"] = c.conditions.predicted_increasing;
    conditions["predicted_decreasing"] = c.conditions.predicted_decreasing;
    out["conditions"] = std::move(conditions);

    Json witnesses = Json::object();
    if (c.increasing_witness)
        witnesses["increasing"] = uniqueness_witness_to_json(*c.increasing_witness);
    if (c.decreasing_witness)
        witnesses["decreasing"] = uniqueness_witness_to_json(*c.decreasing_witness);
    if (c.disjoint_witness_level) witnesses["disjoint_level"] = *c.disjoint_witness_level;
    if (c.sic_witness) witnesses["sic_missing_flag"] = flag_to_json(*c.sic_witness);
    if (c.determined_witness)
        witnesses["removable_flag"] = flag_to_json(*c.determined_witness);
    out["witnesses"] = std::move(witnesses);
    return out;
}

} // namespace flagcodes

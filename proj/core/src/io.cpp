#include "nilcommute/io.hpp"

namespace nilcommute {

namespace {

const nlohmann::json& need(const nlohmann::json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + "." + key, "missing");
    return *it;
}

std::uint64_t need_count(const nlohmann::json& j, const char* key, const std::string& path) {
    const auto& v = need(j, key, path);
    if (!v.is_number_unsigned()) throw SchemaError(path + "." + key, "expected a nonnegative integer");
    return v.get<std::uint64_t>();
}

std::string need_string(const nlohmann::json& j, const char* key, const std::string& path) {
    const auto& v = need(j, key, path);
    if (!v.is_string()) throw SchemaError(path + "." + key, "expected a string");
    return v.get<std::string>();
}

Scalar parse_entry(const FieldSpec& f, const nlohmann::json& v, const std::string& path) {
    if (!v.is_string()) throw SchemaError(path, "expected a string entry");
    try {
        return Scalar::parse(f, v.get<std::string>());
    } catch (const SchemaError& e) {
        throw SchemaError(path, e.what());
    }
}

Matrix rows_to_matrix(const FieldSpec& f, const nlohmann::json& rows, const std::string& path) {
    if (!rows.is_array() || rows.empty()) throw SchemaError(path, "expected a nonempty array");
    const std::size_t r = rows.size();
    if (!rows[0].is_array() || rows[0].empty())
        throw SchemaError(path + "[0]", "expected a nonempty row");
    const std::size_t c = rows[0].size();
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        const auto& row = rows[i];
        const std::string rp = path + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != c) throw SchemaError(rp, "ragged row");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = parse_entry(f, row[j], rp + "[" + std::to_string(j) + "]");
    }
    return m;
}

nlohmann::json matrix_rows(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

nlohmann::json json_of_field(const FieldSpec& f) {
    if (f.kind() == FieldKind::Rationals) return {{"kind", "q"}};
    return {{"kind", "fp"}, {"p", f.p()}};
}

FieldSpec field_of_json(const nlohmann::json& j, const std::string& path) {
    const std::string kind = need_string(j, "kind", path);
    if (kind == "q") return FieldSpec::rationals();
    if (kind == "fp") {
        std::uint64_t p = need_count(j, "p", path);
        try {
            return FieldSpec::prime_field(p);
        } catch (const Error& e) {
            throw SchemaError(path + ".p", e.what());
        }
    }
    throw SchemaError(path + ".kind", "expected \"q\" or \"fp\"");
}

nlohmann::json json_of_matrix(const Matrix& m) {
    return {{"field", json_of_field(m.field())}, {"rows", matrix_rows(m)}};
}

Matrix matrix_of_json(const nlohmann::json& j, const std::string& path) {
    FieldSpec f = field_of_json(need(j, "field", path), path + ".field");
    return rows_to_matrix(f, need(j, "rows", path), path + ".rows");
}

nlohmann::json json_of_tuple(const NilTuple& t) {
    nlohmann::json mats = nlohmann::json::array();
    for (const Matrix& m : t.mats()) mats.push_back(matrix_rows(m));
    return {{"field", json_of_field(t.field())}, {"n", t.n()}, {"mats", std::move(mats)}};
}

NilTuple tuple_of_json(const nlohmann::json& j, const std::string& path) {
    FieldSpec f = field_of_json(need(j, "field", path), path + ".field");
    const std::uint64_t n = need_count(j, "n", path);
    const auto& mats = need(j, "mats", path);
    if (!mats.is_array() || mats.empty())
        throw SchemaError(path + ".mats", "expected a nonempty array");
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        const std::string mp = path + ".mats[" + std::to_string(i) + "]";
        Matrix m = rows_to_matrix(f, mats[i], mp);
        if (m.rows() != n || m.cols() != n) throw SchemaError(mp, "expected an n x n matrix");
        ms.push_back(std::move(m));
    }
    // semantic validation failures (NotCommuting, NotNilpotent, ...) keep
    // their own type; SchemaError is reserved for malformed JSON
    return NilTuple(std::move(ms));
}

nlohmann::json json_of_certificate(const Certificate& c) {
    nlohmann::json evidence = nlohmann::json::array();
    for (const auto& [label, value] : c.evidence)
        evidence.push_back({{"label", label}, {"value", value}});
    return {{"name", c.name},
            {"verdict", verdict_name(c.verdict)},
            {"field", json_of_field(c.field)},
            {"seed", c.seed},
            {"trials", c.trials},
            {"evidence", std::move(evidence)},
            {"version", kVersion}};
}

Certificate certificate_of_json(const nlohmann::json& j, const std::string& path) {
    Certificate c;
    c.name = need_string(j, "name", path);
    const std::string v = need_string(j, "verdict", path);
    if (v == "pass")
        c.verdict = Verdict::Pass;
    else if (v == "fail")
        c.verdict = Verdict::Fail;
    else if (v == "inconclusive")
        c.verdict = Verdict::Inconclusive;
    else
        throw SchemaError(path + ".verdict", "expected pass, fail or inconclusive");
    c.field = field_of_json(need(j, "field", path), path + ".field");
    c.seed = need_count(j, "seed", path);
    c.trials = need_count(j, "trials", path);
    const auto& evidence = need(j, "evidence", path);
    if (!evidence.is_array()) throw SchemaError(path + ".evidence", "expected an array");
    for (std::size_t i = 0; i < evidence.size(); ++i) {
        const std::string ep = path + ".evidence[" + std::to_string(i) + "]";
        c.add(need_string(evidence[i], "label", ep), need(evidence[i], "value", ep));
    }
    if (need_string(j, "version", path) != kVersion)
        throw SchemaError(path + ".version", "unsupported version");
    return c;
}

std::string certificate_to_string(const Certificate& c) {
    return json_of_certificate(c).dump(2) + "\n";
}

}  // namespace nilcommute

#include "lgrass/json_io.hpp"

#include <fstream>

namespace lgrass {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing member \"") + key + "\"");
    return j.at(key);
}

int int_member(const Json& j, const char* key) {
    const Json& v = member(j, key);
    if (!v.is_number_integer()) bad(std::string("member \"") + key + "\" must be an integer");
    return v.get<int>();
}

int int_from_string(const Json& v, const char* key) {
    if (!v.is_string()) bad(std::string("member \"") + key + "\" must be a decimal string");
    try {
        return std::stoi(v.get<std::string>());
    } catch (const std::exception&) {
        bad(std::string("member \"") + key + "\" is not a decimal integer");
    }
}

Json poly_to_json(const Poly& p) {
    Json coeffs = Json::array();
    if (p.is_zero()) {
        coeffs.push_back("0");
    } else {
        for (const Fk& c : p.coeffs()) coeffs.push_back(c.to_string());
    }
    return coeffs;
}

Poly poly_from_json(const FieldDesc& fd, const Json& j) {
    if (!j.is_array()) bad("polynomial must be a coefficient array");
    std::vector<Fk> coeffs;
    for (const Json& c : j) {
        if (!c.is_string()) bad("polynomial coefficients must be decimal strings");
        coeffs.push_back(Fk::parse(fd, c.get<std::string>()));
    }
    return Poly(fd, std::move(coeffs));
}

}  // namespace

Json to_json(const FieldDesc& fd) {
    Json j;
    j["kind"] = fd.kind == FieldKind::rationals ? "rationals" : "prime_field";
    if (fd.kind == FieldKind::prime_field) j["p"] = fd.p;
    return j;
}

FieldDesc field_from_json(const Json& j) {
    const Json& kind = member(j, "kind");
    if (!kind.is_string()) bad("field kind must be a string");
    std::string k = kind.get<std::string>();
    if (k == "rationals") return FieldDesc::rationals();
    if (k == "prime_field") {
        const Json& p = member(j, "p");
        if (!p.is_number_unsigned() && !p.is_number_integer()) bad("field modulus must be an integer");
        return FieldDesc::prime(p.get<std::uint64_t>());
    }
    bad("unknown field kind \"" + k + "\"");
}

Json to_json(const Scalar& a) {
    Json j;
    j["num"] = poly_to_json(a.num());
    j["den"] = poly_to_json(a.den());
    return j;
}

Scalar scalar_from_json(const FieldDesc& fd, const Json& j) {
    Poly num = poly_from_json(fd, member(j, "num"));
    Poly den = poly_from_json(fd, member(j, "den"));
    if (den.is_zero()) bad("scalar denominator is zero");
    return Scalar(std::move(num), std::move(den));
}

Json to_json(const Matrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(to_json(m.at(i, k)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

Matrix matrix_from_json(const FieldDesc& fd, const Json& j) {
    int rows = int_member(j, "rows"), cols = int_member(j, "cols");
    if (rows < 0 || cols < 0) bad("negative matrix dimensions");
    const Json& entries = member(j, "entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows) bad("matrix entry rows mismatch");
    Matrix m(fd, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = entries.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols) bad("matrix entry cols mismatch");
        for (int k = 0; k < cols; ++k) m.set(i, k, scalar_from_json(fd, row.at(static_cast<std::size_t>(k))));
    }
    return m;
}

Json to_json(const LinkedChain& c) {
    Json j;
    j["field"] = to_json(c.field);
    j["mode"] = c.mode == ChainMode::family ? "family" : "fiber";
    j["n"] = c.n;
    j["d"] = c.d;
    Json f = Json::array(), fdual = Json::array();
    for (const Matrix& m : c.f) f.push_back(to_json(m));
    for (const Matrix& m : c.fdual) fdual.push_back(to_json(m));
    j["f"] = std::move(f);
    j["fdual"] = std::move(fdual);
    return j;
}

LinkedChain chain_from_json(const Json& j) {
    FieldDesc fd = field_from_json(member(j, "field"));
    const Json& mode = member(j, "mode");
    if (!mode.is_string()) bad("chain mode must be a string");
    std::string ms = mode.get<std::string>();
    if (ms != "family" && ms != "fiber") bad("unknown chain mode \"" + ms + "\"");
    LinkedChain c{fd, ms == "family" ? ChainMode::family : ChainMode::fiber, int_member(j, "n"), int_member(j, "d"), {}, {}};
    for (const Json& m : member(j, "f")) c.f.push_back(matrix_from_json(fd, m));
    for (const Json& m : member(j, "fdual")) c.fdual.push_back(matrix_from_json(fd, m));
    c.check_shape();
    return c;
}

Json to_json(const LinkedForm& f) {
    Json j;
    j["two_m"] = f.two_m;
    Json grid = Json::array();
    for (int i = 1; i <= f.n; ++i) {
        Json row = Json::array();
        for (int k = 1; k <= f.n; ++k) row.push_back(to_json(f.b(i, k)));
        grid.push_back(std::move(row));
    }
    j["gram"] = std::move(grid);
    return j;
}

LinkedForm form_from_json(const FieldDesc& fd, const Json& j) {
    const Json& grid = member(j, "gram");
    if (!grid.is_array() || grid.empty()) bad("form grid must be a nonempty array");
    int n = static_cast<int>(grid.size());
    LinkedForm f{fd, int_member(j, "two_m"), n, 0, {}};
    for (int i = 0; i < n; ++i) {
        const Json& row = grid.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n) bad("form grid must be square");
        for (int k = 0; k < n; ++k) f.gram.push_back(matrix_from_json(fd, row.at(static_cast<std::size_t>(k))));
    }
    f.d = f.gram.front().rows();
    f.check_shape();
    return f;
}

Json to_json(const LinkedSubspace& f) {
    Json j;
    j["r"] = f.r;
    Json bases = Json::array();
    for (const Matrix& m : f.bases) bases.push_back(to_json(m));
    j["F"] = std::move(bases);
    return j;
}

LinkedSubspace subspace_from_json(const FieldDesc& fd, const Json& j) {
    const Json& bases = member(j, "F");
    if (!bases.is_array() || bases.empty()) bad("subspace needs at least one level");
    LinkedSubspace f{fd, static_cast<int>(bases.size()), 0, int_member(j, "r"), {}};
    for (const Json& m : bases) f.bases.push_back(matrix_from_json(fd, m));
    f.d = f.bases.front().rows();
    f.check_shape();
    return f;
}

Json to_json(const TangentReport& r) {
    Json j;
    j["lg_tangent_dim"] = std::to_string(r.lg_tangent_dim);
    j["form_target_dim"] = std::to_string(r.form_target_dim);
    j["tangent_map_rank"] = std::to_string(r.tangent_map_rank);
    j["lag_tangent_dim"] = std::to_string(r.lag_tangent_dim);
    j["expected_codim"] = std::to_string(r.expected_codim);
    j["verdict"] = r.verdict ? "pass" : "fail";
    return j;
}

TangentReport report_from_json(const Json& j) {
    TangentReport r;
    r.lg_tangent_dim = int_from_string(member(j, "lg_tangent_dim"), "lg_tangent_dim");
    r.form_target_dim = int_from_string(member(j, "form_target_dim"), "form_target_dim");
    r.tangent_map_rank = int_from_string(member(j, "tangent_map_rank"), "tangent_map_rank");
    r.lag_tangent_dim = int_from_string(member(j, "lag_tangent_dim"), "lag_tangent_dim");
    r.expected_codim = int_from_string(member(j, "expected_codim"), "expected_codim");
    const Json& v = member(j, "verdict");
    if (!v.is_string() || (v.get<std::string>() != "pass" && v.get<std::string>() != "fail"))
        bad("verdict must be \"pass\" or \"fail\"");
    r.verdict = v.get<std::string>() == "pass";
    return r;
}

Json envelope(const FieldDesc& fd) {
    Json j;
    j["schema"] = kSchema;
    j["field"] = to_json(fd);
    return j;
}

FieldDesc check_envelope(const Json& j) {
    const Json& schema = member(j, "schema");
    if (!schema.is_string() || schema.get<std::string>() != kSchema)
        bad(std::string("expected schema \"") + kSchema + "\"");
    return field_from_json(member(j, "field"));
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        bad("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) bad("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

}  // namespace lgrass

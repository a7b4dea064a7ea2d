#include "fredpair/json_io.hpp"

#include "fredpair/errors.hpp"

#include <fstream>
#include <sstream>

namespace fredpair {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object())
        throw parse_error(std::string("expected an object with \"") + key +
                          "\"");
    auto it = j.find(key);
    if (it == j.end())
        throw parse_error(std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t size_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw parse_error(std::string("field \"") + key +
                          "\" must be a nonnegative integer");
    return v.get<std::size_t>();
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string())
        throw parse_error(std::string("field \"") + key +
                          "\" must be a string");
    return v.get<std::string>();
}

} // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Json to_json(const Subspace& s) {
    return Json{{"ambient", s.ambient()}, {"basis", to_json(s.basis())}};
}

Json to_json(const OperatorPair& pr) {
    return Json{{"x_dim", pr.x_dim},
                {"y_dim", pr.y_dim},
                {"S", to_json(pr.s)},
                {"T", to_json(pr.t)}};
}

Json to_json(const DefectProfile& d) {
    return Json{
        {"a", d.a}, {"b", d.b}, {"c", d.c}, {"d", d.d}, {"index", d.index}};
}

Json to_json(const Classification& c) {
    return Json{{"p", c.p},
                {"q", c.q},
                {"number", c.number},
                {"case", to_string(c.kind)}};
}

Json to_json(const IndexFormulas& f) {
    return Json{{"via_defects", f.via_defects},
                {"via_n_blocks", f.via_n_blocks},
                {"via_m_blocks", f.via_m_blocks}};
}

Json to_json(const FullDecomposition& d) {
    auto blocks = [](const std::vector<NamedBlock>& v) {
        Json out = Json::array();
        for (const auto& b : v)
            out.push_back(Json{{"name", b.name},
                               {"dim", b.space.dim()},
                               {"space", to_json(b.space)}});
        return out;
    };
    Json actions = Json::array();
    for (const auto& a : d.actions)
        actions.push_back(Json{
            {"op", a.op}, {"from", a.from}, {"to", a.to}, {"dim", a.dim}});
    return Json{{"level", d.level},
                {"x_blocks", blocks(d.x_blocks)},
                {"y_blocks", blocks(d.y_blocks)},
                {"actions", actions}};
}

Json to_json(const CanonicalReport& r) {
    Json dims = Json::object();
    for (const auto& [name, dim] : r.block_dims) dims[name] = dim;
    return Json{{"classification", to_json(r.cls)},
                {"block_dims", dims},
                {"checks", r.checks}};
}

Json to_json(const ChainComplex& c) {
    Json bounds = Json::array();
    for (const auto& b : c.boundaries) bounds.push_back(to_json(b));
    return Json{
        {"dims", c.dims}, {"boundaries", bounds}, {"complex", c.is_complex}};
}

Json to_json(const ChainReport& r) {
    return Json{{"kernel_defect", r.kernel_defect},
                {"range_defect", r.range_defect},
                {"homology_dims", r.homology_dims},
                {"index", r.index}};
}

Json to_json(const SynthSpec& s) {
    Json blocks = Json::object();
    for (const auto& [name, dim] : s.blocks) blocks[name] = dim;
    return Json{{"case", to_string(s.kind)},
                {"number", s.number},
                {"blocks", blocks}};
}

Json to_json(const QuotientPair& q) {
    Json out = to_json(as_pair(q));
    out["x_projection"] = to_json(q.x_projection);
    out["y_projection"] = to_json(q.y_projection);
    return out;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer())
        return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    throw parse_error("matrix entries must be strings like \"p/q\" or "
                      "integers");
}

Matrix matrix_from_json(const Json& j) {
    std::size_t rows = size_field(j, "rows");
    std::size_t cols = size_field(j, "cols");
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != rows)
        throw parse_error("\"entries\" must be an array of " +
                          std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw parse_error("entries row " + std::to_string(i) +
                              " must hold " + std::to_string(cols) +
                              " values");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = rational_from_json(row[k]);
    }
    return m;
}

Subspace subspace_from_json(const Json& j) {
    std::size_t ambient = size_field(j, "ambient");
    Matrix basis = matrix_from_json(field(j, "basis"));
    if (basis.rows() != ambient)
        throw dimension_error("basis has " + std::to_string(basis.rows()) +
                              " rows in ambient dimension " +
                              std::to_string(ambient));
    return Subspace::span(basis);
}

OperatorPair pair_from_json(const Json& j) {
    std::size_t x = size_field(j, "x_dim");
    std::size_t y = size_field(j, "y_dim");
    Matrix s = matrix_from_json(field(j, "S"));
    Matrix t = matrix_from_json(field(j, "T"));
    return OperatorPair(x, y, std::move(s), std::move(t));
}

ChainComplex chain_from_json(const Json& j) {
    ChainComplex c;
    const Json& dims = field(j, "dims");
    if (!dims.is_array())
        throw parse_error("field \"dims\" must be an array");
    for (const Json& d : dims) {
        if (!d.is_number_integer() || d.get<long long>() < 0)
            throw parse_error("\"dims\" entries must be nonnegative "
                              "integers");
        c.dims.push_back(d.get<std::size_t>());
    }
    const Json& bounds = field(j, "boundaries");
    if (!bounds.is_array())
        throw parse_error("field \"boundaries\" must be an array");
    for (const Json& b : bounds) c.boundaries.push_back(matrix_from_json(b));
    const Json& flag = field(j, "complex");
    if (!flag.is_boolean())
        throw parse_error("field \"complex\" must be a boolean");
    c.is_complex = flag.get<bool>();
    validate(c);
    return c;
}

SynthSpec synth_spec_from_json(const Json& j) {
    SynthSpec s;
    s.kind = pair_case_from_string(string_field(j, "case"));
    s.number = size_field(j, "number");
    const Json& blocks = field(j, "blocks");
    if (!blocks.is_object())
        throw parse_error("field \"blocks\" must be an object");
    for (auto it = blocks.begin(); it != blocks.end(); ++it) {
        if (!it.value().is_number_integer() ||
            it.value().get<long long>() < 0)
            throw parse_error("block \"" + it.key() +
                              "\" must be a nonnegative integer");
        s.blocks[it.key()] = it.value().get<std::size_t>();
    }
    return s;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw parse_error(e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace fredpair

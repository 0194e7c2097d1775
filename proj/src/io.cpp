#include "exanlab/io.hpp"

namespace exanlab {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::size_t parse_count(const json& j, const char* what) {
    if (!j.is_number_unsigned())
        throw InputError(std::string("expected a non-negative count for ") + what);
    return j.get<std::size_t>();
}

Scalar parse_scalar(const Field& f, const json& j) {
    if (!j.is_string())
        throw InputError("scalars must be strings, got: " + j.dump());
    return Scalar::parse(f, j.get<std::string>());
}

} // namespace

json field_to_json(const Field& f) {
    if (f.is_rational()) return json("Q");
    return json{{"Fp", f.modulus()}};
}

Field parse_field(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return Field::rationals();
        throw InputError("unknown field '" + j.get<std::string>() + "' (expected \"Q\" or {\"Fp\": p})");
    }
    if (j.is_object() && j.contains("Fp")) {
        const json& p = j.at("Fp");
        if (!p.is_number_unsigned()) throw InputError("Fp modulus must be a non-negative integer");
        return Field::prime_field(p.get<std::uint64_t>());
    }
    throw InputError("unparsable field descriptor: " + j.dump());
}

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[i].str());
    return out;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
    return out;
}

Vector parse_vector(const Field& f, const json& j, std::size_t expected) {
    if (!j.is_array() || j.size() != expected)
        throw InputError("expected a vector of length " + std::to_string(expected));
    Vector v(f, expected);
    for (std::size_t i = 0; i < expected; ++i) v[i] = parse_scalar(f, j.at(i));
    return v;
}

Matrix parse_matrix(const Field& f, const json& j) {
    if (!j.is_array()) throw InputError("expected a matrix (array of rows)");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!j.at(0).is_array()) throw InputError("matrix rows must be arrays");
        cols = j.at(0).size();
    }
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j.at(r);
        if (!row.is_array() || row.size() != cols)
            throw InputError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = parse_scalar(f, row.at(c));
    }
    return m;
}

json algebra_to_json(const Algebra& a) {
    json mul = json::array();
    for (std::size_t i = 0; i < a.dim; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.dim; ++j) row.push_back(vector_to_json(a.basis_product(i, j)));
        mul.push_back(std::move(row));
    }
    json out{{"dim", a.dim}, {"unit", vector_to_json(a.unit)}, {"mul", std::move(mul)}};
    if (!a.basis_names.empty()) out["basis_names"] = a.basis_names;
    return out;
}

Algebra parse_algebra(const Field& f, const json& j) {
    Algebra a;
    a.field = f;
    a.dim = parse_count(require(j, "dim"), "algebra dim");
    a.unit = parse_vector(f, require(j, "unit"), a.dim);
    const json& mul = require(j, "mul");
    if (!mul.is_array() || mul.size() != a.dim)
        throw InputError("algebra mul tensor must have dim rows");
    for (std::size_t i = 0; i < a.dim; ++i) {
        const json& row = mul.at(i);
        if (!row.is_array() || row.size() != a.dim)
            throw InputError("algebra mul tensor must be dim x dim");
        for (std::size_t k = 0; k < a.dim; ++k)
            a.mul.push_back(parse_vector(f, row.at(k), a.dim));
    }
    if (j.contains("basis_names")) {
        const json& names = j.at("basis_names");
        if (!names.is_array() || names.size() != a.dim)
            throw InputError("basis_names must list one name per basis element");
        for (const auto& name : names) a.basis_names.push_back(name.get<std::string>());
    }
    return a;
}

json bimodule_to_json(const Bimodule& b) {
    json left = json::array(), right = json::array();
    for (const Matrix& m : b.left) left.push_back(matrix_to_json(m));
    for (const Matrix& m : b.right) right.push_back(matrix_to_json(m));
    return json{{"dim", b.dim}, {"left", std::move(left)}, {"right", std::move(right)}};
}

Bimodule parse_bimodule(const Field& f, const json& j) {
    Bimodule b;
    b.dim = parse_count(require(j, "dim"), "bimodule dim");
    const json& left = require(j, "left");
    const json& right = require(j, "right");
    if (!left.is_array() || !right.is_array() || left.size() != right.size())
        throw InputError("bimodule needs matching 'left' and 'right' action lists");
    for (const auto& m : left) {
        Matrix act = parse_matrix(f, m);
        if (act.rows() != b.dim || act.cols() != b.dim)
            throw InputError("bimodule action matrices must be dim x dim");
        b.left.push_back(std::move(act));
    }
    for (const auto& m : right) {
        Matrix act = parse_matrix(f, m);
        if (act.rows() != b.dim || act.cols() != b.dim)
            throw InputError("bimodule action matrices must be dim x dim");
        b.right.push_back(std::move(act));
    }
    return b;
}

json module_to_json(const LeftModule& m) {
    json action = json::array();
    for (const Matrix& act : m.action) action.push_back(matrix_to_json(act));
    return json{{"dim", m.dim}, {"action", std::move(action)}};
}

LeftModule parse_module(const Field& f, const json& j) {
    LeftModule m;
    m.dim = parse_count(require(j, "dim"), "module dim");
    const json& action = require(j, "action");
    if (!action.is_array()) throw InputError("module 'action' must be a matrix list");
    for (const auto& a : action) {
        Matrix act = parse_matrix(f, a);
        if (act.rows() != m.dim || act.cols() != m.dim)
            throw InputError("module action matrices must be dim x dim");
        m.action.push_back(std::move(act));
    }
    return m;
}

json cochain_to_json(const Cochain& c) {
    return json{{"degree", c.degree}, {"matrix", matrix_to_json(c.mat)}};
}

Cochain parse_cochain(const Field& f, const json& j) {
    Cochain c;
    const json& deg = require(j, "degree");
    if (!deg.is_number_unsigned() || deg.get<int>() > 3)
        throw InputError("cochain degree must be in 0..3");
    c.degree = deg.get<int>();
    c.mat = parse_matrix(f, require(j, "matrix"));
    return c;
}

json extension_to_json(const ExtensionAlgebra& e) {
    json out{{"algebra", algebra_to_json(e.algebra)},
             {"ideal_dim", e.ideal_dim},
             {"injection", matrix_to_json(e.injection)},
             {"projection", matrix_to_json(e.projection)}};
    if (e.cocycle) out["cocycle"] = cochain_to_json(*e.cocycle);
    return out;
}

ExtensionAlgebra parse_extension(const Field& f, const json& j) {
    ExtensionAlgebra e;
    e.algebra = parse_algebra(f, require(j, "algebra"));
    e.ideal_dim = parse_count(require(j, "ideal_dim"), "ideal_dim");
    e.injection = parse_matrix(f, require(j, "injection"));
    e.projection = parse_matrix(f, require(j, "projection"));
    if (e.ideal_dim > e.algebra.dim)
        throw InputError("ideal_dim exceeds the extension dimension");
    if (e.injection.rows() != e.algebra.dim || e.injection.cols() != e.ideal_dim)
        throw InputError("injection matrix has wrong shape");
    if (e.projection.rows() != e.algebra.dim - e.ideal_dim ||
        e.projection.cols() != e.algebra.dim)
        throw InputError("projection matrix has wrong shape");
    if (j.contains("cocycle")) e.cocycle = parse_cochain(f, j.at("cocycle"));
    return e;
}

InputDocument parse_document(const json& j) {
    if (!j.is_object()) throw InputError("input document must be a JSON object");
    InputDocument doc;
    doc.field = parse_field(require(j, "field"));
    if (j.contains("algebra")) doc.algebra = parse_algebra(doc.field, j.at("algebra"));
    if (j.contains("bimodule")) doc.bimodule = parse_bimodule(doc.field, j.at("bimodule"));
    if (j.contains("module")) doc.module = parse_module(doc.field, j.at("module"));
    if (j.contains("extension")) doc.extension = parse_extension(doc.field, j.at("extension"));
    if (j.contains("cochain")) doc.cochains.push_back(parse_cochain(doc.field, j.at("cochain")));
    return doc;
}

InputDocument merge_documents(const std::vector<InputDocument>& docs) {
    if (docs.empty()) throw InputError("no input files");
    InputDocument merged;
    merged.field = docs.front().field;
    for (const InputDocument& d : docs) {
        if (!(d.field == merged.field))
            throw InputError("input files declare different fields: " + merged.field.str() +
                             " vs " + d.field.str());
        auto take = [&](auto& dst, const auto& src, const char* what) {
            if (!src) return;
            if (dst) throw InputError(std::string("duplicate section '") + what + "'");
            dst = src;
        };
        take(merged.algebra, d.algebra, "algebra");
        take(merged.bimodule, d.bimodule, "bimodule");
        take(merged.module, d.module, "module");
        take(merged.extension, d.extension, "extension");
        for (const Cochain& c : d.cochains) merged.cochains.push_back(c);
    }

    // cross-section dimension consistency
    if (merged.algebra) {
        const std::size_t n = merged.algebra->dim;
        if (merged.bimodule && merged.bimodule->left.size() != n)
            throw InputError("bimodule action list length does not match algebra dim");
        if (merged.module && merged.module->action.size() != n)
            throw InputError("module action list length does not match algebra dim");
        for (const Cochain& c : merged.cochains) {
            std::size_t cols = 1;
            for (int i = 0; i < c.degree; ++i) cols *= n;
            if (c.mat.cols() != cols)
                throw InputError("cochain column count does not match algebra dim^degree");
            if (merged.bimodule && c.mat.rows() != merged.bimodule->dim)
                throw InputError("cochain row count does not match bimodule dim");
        }
    }
    return merged;
}

} // namespace exanlab

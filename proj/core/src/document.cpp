#include "mrbla/document.hpp"

#include "mrbla/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace mrbla {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw MalformedInputError("at " + (path.empty() ? "$" : path) + ": " + what);
}

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

void check_keys(const Json& obj, const std::string& path, bool strict,
                std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
    if (!obj.is_object()) fail(path, "expected an object");
    for (const char* key : required) {
        if (!obj.contains(key)) fail(path, std::string("missing field \"") + key + "\"");
    }
    if (!strict) return;
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* k : required) known = known || key == k;
        for (const char* k : optional) known = known || key == k;
        if (!known) fail(path, "unknown field \"" + key + "\"");
    }
}

int parse_count(const Json& j, const std::string& path, int min_value) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) fail(path, "expected an integer");
    const long long v = j.get<long long>();
    if (v < min_value || v > 1'000'000) fail(path, "integer out of range");
    return static_cast<int>(v);
}

Rational parse_scalar(const Json& j, const std::string& path, bool strict) {
    if (!j.is_string()) fail(path, "scalars must be strings like \"-3\" or \"1/2\"");
    try {
        return rational_from_string(j.get<std::string>(), strict);
    } catch (const MalformedInputError& e) {
        fail(path, e.what());
    }
}

std::vector<Rational> parse_flat(const Json& j, std::size_t size, const std::string& path, bool strict) {
    if (!j.is_array() || j.size() != size) {
        fail(path, "expected an array of " + std::to_string(size) + " scalars");
    }
    std::vector<Rational> out(size);
    for (std::size_t i = 0; i < size; ++i) {
        out[i] = parse_scalar(j[i], path + "[" + std::to_string(i) + "]", strict);
    }
    return out;
}

Matrix parse_matrix(const Json& j, int rows, int cols, const std::string& path, bool strict) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows) {
        fail(path, "expected a matrix with " + std::to_string(rows) + " rows");
    }
    Matrix out(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const Json& row = j[r];
        const std::string rpath = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            fail(rpath, "expected a row of " + std::to_string(cols) + " scalars");
        }
        for (int c = 0; c < cols; ++c) {
            out(r, c) = parse_scalar(row[c], rpath + "[" + std::to_string(c) + "]", strict);
        }
    }
    return out;
}

LeibnizAlgebra parse_algebra(const Json& j, const std::string& path, bool strict) {
    check_keys(j, path, strict, {"dim", "c"}, {"basis_names"});
    const int d = parse_count(j["dim"], path + ".dim", 1);
    LeibnizAlgebra alg(d);
    const Json& c = j["c"];
    if (!c.is_array() || static_cast<int>(c.size()) != d) {
        fail(path + ".c", "expected " + std::to_string(d) + " slices");
    }
    for (int i = 0; i < d; ++i) {
        const Json& ci = c[i];
        const std::string ipath = path + ".c[" + std::to_string(i) + "]";
        if (!ci.is_array() || static_cast<int>(ci.size()) != d) {
            fail(ipath, "expected " + std::to_string(d) + " rows");
        }
        for (int jj = 0; jj < d; ++jj) {
            const Vec row =
                parse_flat(ci[jj], static_cast<std::size_t>(d), ipath + "[" + std::to_string(jj) + "]", strict);
            for (int k = 0; k < d; ++k) alg.structure(i, jj, k) = row[k];
        }
    }
    if (j.contains("basis_names")) {
        const Json& names = j["basis_names"];
        if (!names.is_array() || static_cast<int>(names.size()) != d) {
            fail(path + ".basis_names", "expected " + std::to_string(d) + " names");
        }
        for (const auto& n : names) {
            if (!n.is_string()) fail(path + ".basis_names", "names must be strings");
            alg.basis_names.push_back(n.get<std::string>());
        }
    }
    return alg;
}

MRBStructure parse_structure(const Json& j, const std::string& path, bool strict) {
    check_keys(j, path, strict, {"algebra", "t", "weight"});
    MRBStructure s;
    s.algebra = parse_algebra(j["algebra"], path + ".algebra", strict);
    s.T = parse_matrix(j["t"], s.algebra.dim, s.algebra.dim, path + ".t", strict);
    s.weight = parse_scalar(j["weight"], path + ".weight", strict);
    return s;
}

Representation parse_actions(const Json& j, int d, int m, const std::string& path, bool strict) {
    Representation rep;
    rep.dim_module = m;
    const Json& left = j["left"];
    const Json& right = j["right"];
    if (!left.is_array() || static_cast<int>(left.size()) != d) {
        fail(path + ".left", "expected one matrix per algebra basis vector");
    }
    if (!right.is_array() || static_cast<int>(right.size()) != d) {
        fail(path + ".right", "expected one matrix per algebra basis vector");
    }
    for (int i = 0; i < d; ++i) {
        rep.left.push_back(parse_matrix(left[i], m, m, path + ".left[" + std::to_string(i) + "]", strict));
        rep.right.push_back(parse_matrix(right[i], m, m, path + ".right[" + std::to_string(i) + "]", strict));
    }
    return rep;
}

Cochain parse_cochain_body(const Json& j, int degree, int m, int d, const std::string& path, bool strict) {
    Cochain out(degree, m, d);
    out.coeffs = parse_flat(j, out.coeffs.size(), path, strict);
    return out;
}

Json scalar_json(const Rational& x) { return to_string(x); }

Json flat_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(scalar_json(x));
    return out;
}

Json matrix_json(const Matrix& m) {
    Json out = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Json algebra_json(const LeibnizAlgebra& alg) {
    Json out;
    out["dim"] = alg.dim;
    Json c = Json::array();
    for (int i = 0; i < alg.dim; ++i) {
        Json ci = Json::array();
        for (int j = 0; j < alg.dim; ++j) {
            Json row = Json::array();
            for (int k = 0; k < alg.dim; ++k) row.push_back(scalar_json(alg.structure(i, j, k)));
            ci.push_back(std::move(row));
        }
        c.push_back(std::move(ci));
    }
    out["c"] = std::move(c);
    if (!alg.basis_names.empty()) out["basis_names"] = alg.basis_names;
    return out;
}

Json structure_json(const MRBStructure& s) {
    Json out;
    out["algebra"] = algebra_json(s.algebra);
    out["t"] = matrix_json(s.T);
    out["weight"] = scalar_json(s.weight);
    return out;
}

Json actions_json(const Representation& rep) {
    Json left = Json::array();
    Json right = Json::array();
    for (const auto& m : rep.left) left.push_back(matrix_json(m));
    for (const auto& m : rep.right) right.push_back(matrix_json(m));
    Json out;
    out["left"] = std::move(left);
    out["right"] = std::move(right);
    return out;
}

} // namespace

const char* to_string(DocumentKind kind) {
    switch (kind) {
    case DocumentKind::algebra: return "algebra";
    case DocumentKind::mrb_structure: return "mrb_structure";
    case DocumentKind::representation: return "representation";
    case DocumentKind::mrb_representation: return "mrb_representation";
    case DocumentKind::cochain: return "cochain";
    case DocumentKind::deformation: return "deformation";
    case DocumentKind::isomorphism: return "isomorphism";
    case DocumentKind::extension: return "extension";
    case DocumentKind::report: return "report";
    }
    return "?";
}

std::optional<DocumentKind> kind_from_string(const std::string& name) {
    for (DocumentKind k :
         {DocumentKind::algebra, DocumentKind::mrb_structure, DocumentKind::representation,
          DocumentKind::mrb_representation, DocumentKind::cochain, DocumentKind::deformation,
          DocumentKind::isomorphism, DocumentKind::extension, DocumentKind::report}) {
        if (name == to_string(k)) return k;
    }
    return std::nullopt;
}

Document parse_document(const std::string& text, ParseOptions opts) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw MalformedInputError("syntax error at line " + std::to_string(line) + ", column " +
                                  std::to_string(col) + ": " + e.what());
    }
    check_keys(root, "$", opts.strict, {"format_version", "kind", "payload"});
    if (!root["format_version"].is_string() ||
        root["format_version"].get<std::string>() != document_format_version) {
        fail("$.format_version", std::string("expected \"") + document_format_version + "\"");
    }
    if (!root["kind"].is_string()) fail("$.kind", "expected a string");
    const auto kind = kind_from_string(root["kind"].get<std::string>());
    if (!kind) fail("$.kind", "unknown document kind \"" + root["kind"].get<std::string>() + "\"");

    const Json& p = root["payload"];
    const std::string path = "$.payload";
    const bool strict = opts.strict;
    Document doc;
    doc.kind = *kind;

    switch (*kind) {
    case DocumentKind::algebra: {
        doc.payload = parse_algebra(p, path, strict);
        break;
    }
    case DocumentKind::mrb_structure: {
        doc.payload = parse_structure(p, path, strict);
        break;
    }
    case DocumentKind::representation: {
        check_keys(p, path, strict, {"algebra", "dim_module", "left", "right"});
        RepresentationDoc rd;
        rd.algebra = parse_algebra(p["algebra"], path + ".algebra", strict);
        const int m = parse_count(p["dim_module"], path + ".dim_module", 1);
        rd.rep = parse_actions(p, rd.algebra.dim, m, path, strict);
        doc.payload = std::move(rd);
        break;
    }
    case DocumentKind::mrb_representation: {
        check_keys(p, path, strict, {"structure", "dim_module", "left", "right", "t_v"});
        MRBRepresentationDoc rd;
        rd.structure = parse_structure(p["structure"], path + ".structure", strict);
        const int m = parse_count(p["dim_module"], path + ".dim_module", 1);
        rd.rep.rep = parse_actions(p, rd.structure.algebra.dim, m, path, strict);
        rd.rep.T_V = parse_matrix(p["t_v"], m, m, path + ".t_v", strict);
        doc.payload = std::move(rd);
        break;
    }
    case DocumentKind::cochain: {
        check_keys(p, path, strict, {"dim_algebra", "dim_module", "degree", "f"}, {"g"});
        const int d = parse_count(p["dim_algebra"], path + ".dim_algebra", 1);
        const int m = parse_count(p["dim_module"], path + ".dim_module", 1);
        const int degree = parse_count(p["degree"], path + ".degree", 0);
        CochainDoc cd;
        cd.f = parse_cochain_body(p["f"], degree, m, d, path + ".f", strict);
        if (p.contains("g")) {
            if (degree == 0) fail(path + ".g", "degree-0 documents hold f only");
            cd.g = parse_cochain_body(p["g"], degree - 1, m, d, path + ".g", strict);
        }
        doc.payload = std::move(cd);
        break;
    }
    case DocumentKind::deformation: {
        check_keys(p, path, strict, {"structure", "order", "mu", "t"});
        DeformationDoc dd;
        dd.defm.base = parse_structure(p["structure"], path + ".structure", strict);
        dd.defm.order = parse_count(p["order"], path + ".order", 0);
        const int d = dd.defm.base.algebra.dim;
        const Json& mu = p["mu"];
        const Json& t = p["t"];
        if (!mu.is_array() || static_cast<int>(mu.size()) != dd.defm.order + 1) {
            fail(path + ".mu", "expected order+1 bracket terms");
        }
        if (!t.is_array() || static_cast<int>(t.size()) != dd.defm.order + 1) {
            fail(path + ".t", "expected order+1 operator terms");
        }
        for (int i = 0; i <= dd.defm.order; ++i) {
            dd.defm.mu.push_back(
                parse_cochain_body(mu[i], 2, d, d, path + ".mu[" + std::to_string(i) + "]", strict));
            dd.defm.T.push_back(parse_matrix(t[i], d, d, path + ".t[" + std::to_string(i) + "]", strict));
        }
        if (!(dd.defm.mu[0] == bracket_cochain(dd.defm.base.algebra))) {
            fail(path + ".mu[0]", "order-0 bracket must equal the base bracket");
        }
        if (!(dd.defm.T[0] == dd.defm.base.T)) {
            fail(path + ".t[0]", "order-0 operator must equal the base operator");
        }
        doc.payload = std::move(dd);
        break;
    }
    case DocumentKind::isomorphism: {
        check_keys(p, path, strict, {"dim", "order", "psi"});
        IsomorphismDoc id;
        id.dim = parse_count(p["dim"], path + ".dim", 1);
        id.iso.order = parse_count(p["order"], path + ".order", 0);
        const Json& psi = p["psi"];
        if (!psi.is_array() || static_cast<int>(psi.size()) != id.iso.order + 1) {
            fail(path + ".psi", "expected order+1 terms");
        }
        for (int i = 0; i <= id.iso.order; ++i) {
            id.iso.psi.push_back(
                parse_matrix(psi[i], id.dim, id.dim, path + ".psi[" + std::to_string(i) + "]", strict));
        }
        if (!(id.iso.psi[0] == Matrix::identity(id.dim))) {
            fail(path + ".psi[0]", "an isomorphism series must start at the identity");
        }
        doc.payload = std::move(id);
        break;
    }
    case DocumentKind::extension: {
        check_keys(p, path, strict, {"base", "fiber", "psi", "chi"});
        ExtensionDoc ed;
        ed.base = parse_structure(p["base"], path + ".base", strict);
        const Json& fib = p["fiber"];
        check_keys(fib, path + ".fiber", strict, {"dim_module", "left", "right", "t_v"});
        const int m = parse_count(fib["dim_module"], path + ".fiber.dim_module", 1);
        ed.fiber.rep = parse_actions(fib, ed.base.algebra.dim, m, path + ".fiber", strict);
        ed.fiber.T_V = parse_matrix(fib["t_v"], m, m, path + ".fiber.t_v", strict);
        ed.psi = parse_cochain_body(p["psi"], 2, m, ed.base.algebra.dim, path + ".psi", strict);
        ed.chi = parse_cochain_body(p["chi"], 1, m, ed.base.algebra.dim, path + ".chi", strict);
        doc.payload = std::move(ed);
        break;
    }
    case DocumentKind::report: {
        if (!p.is_object()) fail(path, "expected an object");
        doc.payload = ReportDoc{p.dump(2)};
        break;
    }
    }
    return doc;
}

std::string serialize(const Document& doc) {
    Json root;
    root["format_version"] = document_format_version;
    root["kind"] = to_string(doc.kind);

    Json payload;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, LeibnizAlgebra>) {
                payload = algebra_json(v);
            } else if constexpr (std::is_same_v<T, MRBStructure>) {
                payload = structure_json(v);
            } else if constexpr (std::is_same_v<T, RepresentationDoc>) {
                payload["algebra"] = algebra_json(v.algebra);
                payload["dim_module"] = v.rep.dim_module;
                Json actions = actions_json(v.rep);
                payload["left"] = std::move(actions["left"]);
                payload["right"] = std::move(actions["right"]);
            } else if constexpr (std::is_same_v<T, MRBRepresentationDoc>) {
                payload["structure"] = structure_json(v.structure);
                payload["dim_module"] = v.rep.rep.dim_module;
                Json actions = actions_json(v.rep.rep);
                payload["left"] = std::move(actions["left"]);
                payload["right"] = std::move(actions["right"]);
                payload["t_v"] = matrix_json(v.rep.T_V);
            } else if constexpr (std::is_same_v<T, CochainDoc>) {
                payload["dim_algebra"] = v.f.dim_algebra;
                payload["dim_module"] = v.f.dim_module;
                payload["degree"] = v.f.degree;
                payload["f"] = flat_json(v.f.coeffs);
                if (v.g) payload["g"] = flat_json(v.g->coeffs);
            } else if constexpr (std::is_same_v<T, DeformationDoc>) {
                payload["structure"] = structure_json(v.defm.base);
                payload["order"] = v.defm.order;
                Json mu = Json::array();
                for (const auto& c : v.defm.mu) mu.push_back(flat_json(c.coeffs));
                payload["mu"] = std::move(mu);
                Json t = Json::array();
                for (const auto& op : v.defm.T) t.push_back(matrix_json(op));
                payload["t"] = std::move(t);
            } else if constexpr (std::is_same_v<T, IsomorphismDoc>) {
                payload["dim"] = v.dim;
                payload["order"] = v.iso.order;
                Json psi = Json::array();
                for (const auto& op : v.iso.psi) psi.push_back(matrix_json(op));
                payload["psi"] = std::move(psi);
            } else if constexpr (std::is_same_v<T, ExtensionDoc>) {
                payload["base"] = structure_json(v.base);
                Json fib;
                fib["dim_module"] = v.fiber.rep.dim_module;
                Json actions = actions_json(v.fiber.rep);
                fib["left"] = std::move(actions["left"]);
                fib["right"] = std::move(actions["right"]);
                fib["t_v"] = matrix_json(v.fiber.T_V);
                payload["fiber"] = std::move(fib);
                payload["psi"] = flat_json(v.psi.coeffs);
                payload["chi"] = flat_json(v.chi.coeffs);
            } else if constexpr (std::is_same_v<T, ReportDoc>) {
                payload = Json::parse(v.body);
            }
        },
        doc.payload);
    root["payload"] = std::move(payload);
    return root.dump(2) + "\n";
}

Document load_document(const std::string& path, ParseOptions opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), opts);
}

void store_document(const std::string& path, const Document& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MalformedInputError("cannot write " + path);
    out << serialize(doc);
}

} // namespace mrbla

#include "semicell/json_io.hpp"

namespace semicell {

json field_to_json(const FieldPtr& f) {
    switch (f->tag()) {
        case FieldTag::Rationals: return json{{"kind", "rationals"}};
        case FieldTag::Prime: return json{{"kind", "prime"}, {"p", f->characteristic_p()}};
        case FieldTag::RatFunc:
            return json{{"kind", "rational-functions"},
                        {"base", field_to_json(f->base())},
                        {"var", f->variable()}};
    }
    throw error("unknown field tag");
}

FieldPtr field_from_json(const json& j) {
    if (j.is_string()) {
        // shorthand: "Q", "F7", "Q(q)"
        std::string s = j.get<std::string>();
        if (s == "Q") return Field::rationals();
        if (s.size() > 1 && s[0] == 'F') return Field::prime(std::stoul(s.substr(1)));
        auto open = s.find('(');
        if (open != std::string::npos && s.back() == ')') {
            FieldPtr base = field_from_json(json(s.substr(0, open)));
            return Field::rational_functions(base, s.substr(open + 1, s.size() - open - 2));
        }
        throw error("cannot parse field '" + s + "'");
    }
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rationals") return Field::rationals();
    if (kind == "prime") return Field::prime(j.at("p").get<unsigned long>());
    if (kind == "rational-functions")
        return Field::rational_functions(field_from_json(j.at("base")),
                                         j.at("var").get<std::string>());
    throw error("unknown field kind '" + kind + "'");
}

json scalar_to_json(const Scalar& s) {
    switch (s.field()->tag()) {
        case FieldTag::Rationals:
        case FieldTag::Prime:
            return json(s.to_string());
        case FieldTag::RatFunc: {
            json num = json::array(), den = json::array();
            for (const Scalar& c : s.num().coeffs()) num.push_back(c.to_string());
            for (const Scalar& c : s.den().coeffs()) den.push_back(c.to_string());
            return json{{"num", num}, {"den", den}};
        }
    }
    throw error("unknown field tag");
}

Scalar scalar_from_json(const json& j, const FieldPtr& f) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
    if (j.is_number_integer()) return Scalar::from_int(j.get<long>(), f);
    if (f->tag() != FieldTag::RatFunc)
        throw error("structured scalar encoding needs a rational function field");
    auto read_poly = [&](const json& arr) {
        std::vector<Scalar> cs;
        for (const auto& c : arr) {
            if (c.is_string())
                cs.push_back(Scalar::parse(c.get<std::string>(), f->base()));
            else
                cs.push_back(Scalar::from_int(c.get<long>(), f->base()));
        }
        return Poly(f->base(), std::move(cs));
    };
    return Scalar::rat_func(read_poly(j.at("num")), read_poly(j.at("den")), f);
}

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j2 = 0; j2 < m.cols(); ++j2) row.push_back(scalar_to_json(m.at(i, j2)));
        entries.push_back(std::move(row));
    }
    return json{{"field", field_to_json(m.field())},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", entries}};
}

Matrix matrix_from_json(const json& j) {
    FieldPtr f = field_from_json(j.at("field"));
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != rows) throw error("matrix row count mismatch");
    Matrix m(f, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw error("matrix column count mismatch");
        for (size_t c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(entries[i][c], f);
    }
    return m;
}

Instance instance_from_json(const json& j, bool override_gates) {
    std::string algebra = j.at("algebra").get<std::string>();
    if (algebra == "toy") {
        FieldPtr f = j.contains("field") ? field_from_json(j.at("field")) : Field::rationals();
        std::vector<Scalar> contents;
        for (const auto& c : j.at("contents")) contents.push_back(scalar_from_json(c, f));
        return build_toy(contents);
    }
    if (algebra == "matrix") {
        FieldPtr f = j.contains("field") ? field_from_json(j.at("field")) : Field::rationals();
        return build_matrix_algebra(j.at("n").get<int>(), f);
    }
    if (algebra == "hecke") {
        FieldPtr f = field_from_json(j.at("field"));
        Scalar q = f->tag() == FieldTag::RatFunc && !j.contains("q")
                       ? Scalar::variable(f)
                       : scalar_from_json(j.at("q"), f);
        return build_hecke(j.at("n").get<int>(), f, q, override_gates);
    }
    throw error("unknown algebra '" + algebra + "'");
}

TriangularFamily family_from_json(const json& j) {
    FieldPtr f = field_from_json(j.at("field"));
    size_t d = j.at("d").get<size_t>();
    std::vector<Matrix> mats;
    for (const auto& grid : j.at("matrices")) {
        Matrix m(f, d, d);
        if (grid.size() != d) throw error("family matrix has wrong row count");
        for (size_t r = 0; r < d; ++r) {
            if (grid[r].size() != d) throw error("family matrix has wrong column count");
            for (size_t c = 0; c < d; ++c) m.at(r, c) = scalar_from_json(grid[r][c], f);
        }
        mats.push_back(std::move(m));
    }
    return make_family(std::move(mats));
}

}  // namespace semicell

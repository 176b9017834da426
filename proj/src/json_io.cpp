#include "symfock/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace symfock {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw JsonFormatError("field '" + field + "': " + what);
}

const Json& member(const Json& j, const char* key, const std::string& field) {
    if (!j.is_object()) fail(field, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(field.empty() ? key : field + "." + key, "missing");
    return *it;
}

std::string sub(const std::string& field, const std::string& key) { return field.empty() ? key : field + "." + key; }
std::string idx(const std::string& field, size_t i) { return field + "[" + std::to_string(i) + "]"; }

int int_from_json(const Json& j, const std::string& field) {
    if (!j.is_number_integer()) fail(field, "expected an integer");
    return j.get<int>();
}

Basis basis_from_json(const Json& j, const std::string& field) {
    if (!j.is_string()) fail(field, "expected \"p\", \"m\" or \"s\"");
    try {
        return parse_basis(j.get<std::string>());
    } catch (const std::exception& e) {
        fail(field, e.what());
    }
}

}  // namespace

Json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
    if (!j.is_string()) fail(field, "expected a scalar string");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        fail(field, e.what());
    }
}

Json matrix_to_json(const Matrix<Scalar>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(i, c)));
        rows.push_back(row);
    }
    return rows;
}

Matrix<Scalar> matrix_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) fail(field, "expected an array of rows");
    const int r = static_cast<int>(j.size());
    int c = -1;
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array()) fail(idx(field, i), "expected a row array");
        if (c >= 0 && static_cast<int>(j[i].size()) != c) fail(idx(field, i), "ragged row");
        c = static_cast<int>(j[i].size());
    }
    Matrix<Scalar> m(r, std::max(c, 0));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < c; ++k) m(i, k) = scalar_from_json(j[i][k], idx(idx(field, i), k));
    return m;
}

Json vector_to_json(const std::vector<Scalar>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(scalar_to_json(x));
    return a;
}

std::vector<Scalar> vector_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) fail(field, "expected an array");
    std::vector<Scalar> v;
    for (size_t i = 0; i < j.size(); ++i) v.push_back(scalar_from_json(j[i], idx(field, i)));
    return v;
}

Partition partition_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) fail(field, "expected an integer array");
    Partition p;
    for (size_t i = 0; i < j.size(); ++i) p.push_back(int_from_json(j[i], idx(field, i)));
    if (!is_partition(p)) fail(field, "not a partition (positive, weakly decreasing)");
    return p;
}

Json maya_to_json(const MayaIndex& k) { return Json{{"head", k.head}}; }

MayaIndex maya_from_json(const Json& j, const std::string& field) {
    const Json& h = j.is_object() ? member(j, "head", field) : j;
    const std::string f = j.is_object() ? sub(field, "head") : field;
    if (!h.is_array()) fail(f, "expected an integer array");
    std::vector<int> head;
    for (size_t i = 0; i < h.size(); ++i) head.push_back(int_from_json(h[i], idx(f, i)));
    try {
        return normalize_maya(head);
    } catch (const std::exception& e) {
        fail(f, e.what());
    }
}

Json symfun_to_json(const SymFun& f) {
    Json terms = Json::array();
    for (const auto& [lam, c] : f.terms()) terms.push_back({{"partition", lam}, {"coeff", scalar_to_json(c)}});
    return {{"basis", std::string(1, basis_char(f.basis()))}, {"degree", f.degree()}, {"terms", terms}};
}

SymFun symfun_from_json(const Json& j) {
    const Basis b = basis_from_json(member(j, "basis", ""), "basis");
    const int D = int_from_json(member(j, "degree", ""), "degree");
    if (D < 0) fail("degree", "must be >= 0");
    SymFun f(b, D);
    const Json& terms = member(j, "terms", "");
    if (!terms.is_array()) fail("terms", "expected an array");
    for (size_t i = 0; i < terms.size(); ++i) {
        const std::string t = idx("terms", i);
        Partition lam = partition_from_json(member(terms[i], "partition", t), sub(t, "partition"));
        if (weight(lam) > D) fail(sub(t, "partition"), "weight exceeds the degree");
        f.add_term(lam, scalar_from_json(member(terms[i], "coeff", t), sub(t, "coeff")));
    }
    return f;
}

Json kernel_to_json(const BisymKernel& K) {
    Json terms = Json::array();
    for (const auto& [mn, c] : K.terms())
        terms.push_back({{"x", mn.first}, {"y", mn.second}, {"coeff", scalar_to_json(c)}});
    return {{"basis_x", "p"}, {"basis_y", "p"}, {"dx", K.dx()}, {"dy", K.dy()}, {"terms", terms}};
}

BisymKernel kernel_from_json(const Json& j) {
    const int dx = int_from_json(member(j, "dx", ""), "dx"), dy = int_from_json(member(j, "dy", ""), "dy");
    if (dx < 0 || dy < 0) fail("dx", "bidegree must be >= 0");
    const Basis bx = j.contains("basis_x") ? basis_from_json(j["basis_x"], "basis_x") : Basis::p;
    const Basis by = j.contains("basis_y") ? basis_from_json(j["basis_y"], "basis_y") : Basis::p;
    std::map<PartitionPair, Scalar> terms;
    const Json& list = member(j, "terms", "");
    if (!list.is_array()) fail("terms", "expected an array");
    for (size_t i = 0; i < list.size(); ++i) {
        const std::string t = idx("terms", i);
        Partition x = partition_from_json(member(list[i], "x", t), sub(t, "x"));
        Partition y = partition_from_json(member(list[i], "y", t), sub(t, "y"));
        if (weight(x) > dx || weight(y) > dy) fail(t, "partition exceeds the bidegree");
        terms[{x, y}] += scalar_from_json(member(list[i], "coeff", t), sub(t, "coeff"));
    }
    return BisymKernel::from_expansion(bx, by, dx, dy, terms);
}

Json gauss_to_json(const GaussParams& S) {
    return {{"A", matrix_to_json(S.A)},          {"B", matrix_to_json(S.B)},
            {"C", matrix_to_json(S.C)},          {"alpha", vector_to_json(S.alpha)},
            {"beta", vector_to_json(S.beta)},    {"normDetSquare", scalar_to_json(S.detSquare)},
            {"normExpArg", scalar_to_json(S.expArg)}};
}

GaussParams gauss_from_json(const Json& j) {
    GaussParams S;
    S.A = matrix_from_json(member(j, "A", ""), "A");
    const int W = S.A.rows();
    S.B = j.contains("B") ? matrix_from_json(j["B"], "B") : Matrix<Scalar>(W, W);
    S.C = j.contains("C") ? matrix_from_json(j["C"], "C") : Matrix<Scalar>(W, W);
    S.alpha = j.contains("alpha") ? vector_from_json(j["alpha"], "alpha") : std::vector<Scalar>(W);
    S.beta = j.contains("beta") ? vector_from_json(j["beta"], "beta") : std::vector<Scalar>(W);
    S.detSquare = j.contains("normDetSquare") ? scalar_from_json(j["normDetSquare"], "normDetSquare") : Scalar(1);
    S.expArg = j.contains("normExpArg") ? scalar_from_json(j["normExpArg"], "normExpArg") : Scalar(0);
    try {
        validate_gauss(S);
    } catch (const std::exception& e) {
        throw JsonFormatError(std::string("Gauss parameters: ") + e.what());
    }
    return S;
}

Json relation_to_json(const LinearRelation& P) {
    return {{"dim_v", P.dim_v()}, {"dim_w", P.dim_w()}, {"span", matrix_to_json(P.basis())}};
}

LinearRelation relation_from_json(const Json& j) {
    const int v = int_from_json(member(j, "dim_v", ""), "dim_v"), w = int_from_json(member(j, "dim_w", ""), "dim_w");
    Matrix<Scalar> span = matrix_from_json(member(j, "span", ""), "span");
    if (span.rows() == 0) span = Matrix<Scalar>(0, v + w);
    if (span.cols() != v + w) fail("span", "vectors must have dim_v + dim_w entries");
    return LinearRelation(v, w, span);
}

Json wedge_to_json(const WedgeVector& v) {
    Json terms = Json::array();
    for (const auto& [k, c] : v.terms()) terms.push_back({{"maya", k.head}, {"coeff", scalar_to_json(c)}});
    return {{"cutoff", v.cutoff()}, {"terms", terms}};
}

WedgeVector wedge_from_json(const Json& j, int default_cutoff) {
    const Json* list = &j;
    int E = default_cutoff;
    if (j.is_object()) {
        E = int_from_json(member(j, "cutoff", ""), "cutoff");
        list = &member(j, "terms", "");
    }
    if (!list->is_array()) fail("terms", "expected an array");
    std::vector<std::pair<MayaIndex, Scalar>> items;
    int max_e = 0;
    for (size_t i = 0; i < list->size(); ++i) {
        const std::string t = idx("terms", i);
        MayaIndex k = maya_from_json(member((*list)[i], "maya", t), sub(t, "maya"));
        max_e = std::max(max_e, k.energy());
        items.emplace_back(k, scalar_from_json(member((*list)[i], "coeff", t), sub(t, "coeff")));
    }
    if (E < 0) E = max_e;
    WedgeVector v(E);
    for (const auto& [k, c] : items) v.add_term(k, c);
    return v;
}

Json gl_to_json(const GLElement& H) { return {{"offset", H.offset}, {"matrix", matrix_to_json(H.h)}}; }

GLElement gl_from_json(const Json& j) {
    GLElement H{int_from_json(member(j, "offset", ""), "offset"), matrix_from_json(member(j, "matrix", ""), "matrix")};
    if (H.h.rows() != H.h.cols()) fail("matrix", "must be square");
    try {
        H.validate();
    } catch (const std::exception& e) {
        fail("matrix", e.what());
    }
    return H;
}

Json decomposable_to_json(const DecomposableParams& p) {
    Json entries = Json::array();
    for (const auto& [ml, c] : p.entries)
        entries.push_back({{"row", ml.first}, {"col", ml.second}, {"value", scalar_to_json(c)}});
    Json out{{"entries", entries}};
    if (p.has_band()) out["band"] = vector_to_json(p.band);
    return out;
}

DecomposableParams decomposable_from_json(const Json& j) {
    if (!j.is_object()) fail("", "expected an object");
    const Matrix<Scalar> A = j.contains("A") ? matrix_from_json(j["A"], "A") : Matrix<Scalar>(0, 0);
    const Matrix<Scalar> B = j.contains("B") ? matrix_from_json(j["B"], "B") : Matrix<Scalar>(0, 0);
    DecomposableParams p = DecomposableParams::from_blocks(A, B);
    if (j.contains("entries")) {
        const Json& list = j["entries"];
        if (!list.is_array()) fail("entries", "expected an array");
        for (size_t i = 0; i < list.size(); ++i) {
            const std::string t = idx("entries", i);
            const int m = int_from_json(member(list[i], "row", t), sub(t, "row"));
            const int l = int_from_json(member(list[i], "col", t), sub(t, "col"));
            if (m < 1) fail(sub(t, "row"), "rows start at 1");
            Scalar c = scalar_from_json(member(list[i], "value", t), sub(t, "value"));
            if (!c.is_zero()) p.entries[{m, l}] = c;
        }
    }
    if (j.contains("band")) p.band = vector_from_json(j["band"], "band");
    try {
        p.validate();
    } catch (const std::exception& e) {
        throw JsonFormatError(std::string("decomposable parameters: ") + e.what());
    }
    return p;
}

Json read_json_file(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw JsonFormatError("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw JsonFormatError("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace symfock

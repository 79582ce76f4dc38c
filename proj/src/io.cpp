#include "rbx/io.hpp"

#include "rbx/errors.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace rbx {

namespace {

namespace fs = std::filesystem;

// A position in a document: source name plus JSON pointer.
class Loc {
public:
    Loc(const Input& in, std::string pointer = "") : in_(&in), pointer_(std::move(pointer)) {}

    Loc operator[](const std::string& key) const { return Loc(*in_, pointer_ + "/" + key); }
    Loc operator[](std::size_t index) const { return Loc(*in_, pointer_ + "/" + std::to_string(index)); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(in_->source + ": " + (pointer_.empty() ? std::string("/") : pointer_) + ": " + msg);
    }

    const Input& input() const { return *in_; }

private:
    const Input* in_;
    std::string pointer_;
};

const Json& member(const Json& j, const Loc& at, const std::string& key) {
    if (!j.is_object()) {
        at.fail("expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        at.fail("missing key \"" + key + "\"");
    }
    return *it;
}

std::size_t count_from(const Json& j, const Loc& at) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        at.fail("expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

Scalar scalar_from(const Json& j, const Field& f, const Loc& at) {
    try {
        if (j.is_string()) {
            return Scalar::parse(f, j.get<std::string>());
        }
        if (j.is_number_integer()) {
            return Scalar::parse(f, std::to_string(j.get<long long>()));
        }
    } catch (const ParseError& e) {
        at.fail(e.what());
    }
    at.fail("expected a scalar string");
}

Vector vector_from(const Json& j, const Field& f, std::size_t n, const Loc& at) {
    if (!j.is_array() || j.size() != n) {
        at.fail("expected an array of " + std::to_string(n) + " scalars");
    }
    Vector v;
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        v.push_back(scalar_from(j[k], f, at[k]));
    }
    return v;
}

Matrix matrix_from(const Json& j, const Field& f, std::size_t rows, std::size_t cols, const Loc& at) {
    if (!j.is_array() || j.size() != rows) {
        at.fail("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix (" +
                std::to_string(rows) + " rows)");
    }
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Vector row = vector_from(j[r], f, cols, at[r]);
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = row[c];
        }
    }
    return m;
}

Field field_from(const Json& j, const Loc& at) {
    const std::string kind = [&] {
        const Json& k = member(j, at, "kind");
        if (!k.is_string()) {
            at["kind"].fail("expected a string");
        }
        return k.get<std::string>();
    }();
    if (kind == "rationals") {
        if (j.contains("modulus")) {
            at["modulus"].fail("the rationals carry no modulus");
        }
        return Field::rationals();
    }
    if (kind == "prime") {
        const Json& m = member(j, at, "modulus");
        if (!m.is_number_integer() || m.get<long long>() < 2 || !is_prime_number(m.get<std::uint64_t>())) {
            at["modulus"].fail("modulus " + m.dump() + " is not a prime");
        }
        try {
            return Field::prime(m.get<std::uint64_t>());
        } catch (const InvalidArgument& e) {
            at["modulus"].fail(e.what());
        }
    }
    at["kind"].fail("unknown field kind \"" + kind + "\"");
}

LieAlgebra bracket_from(const Json& j, const Field& f, std::size_t n, const Loc& at) {
    if (!j.is_array()) {
        at.fail("expected an array of [i, j, [coefficients]] entries");
    }
    std::map<std::pair<std::size_t, std::size_t>, Vector> seen;
    LieAlgebra l(f, n);
    for (std::size_t k = 0; k < j.size(); ++k) {
        const Loc e = at[k];
        const Json& entry = j[k];
        if (!entry.is_array() || entry.size() != 3) {
            e.fail("expected [i, j, [coefficients]]");
        }
        const std::size_t a = count_from(entry[0], e[0]);
        const std::size_t b = count_from(entry[1], e[1]);
        if (a >= n || b >= n) {
            e.fail("index (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range for dimension " +
                   std::to_string(n));
        }
        Vector v = vector_from(entry[2], f, n, e[2]);
        if (a == b) {
            if (!is_zero(v)) {
                e.fail("antisymmetry: [e" + std::to_string(a) + ", e" + std::to_string(a) + "] must vanish");
            }
            continue;
        }
        const auto key = std::make_pair(std::min(a, b), std::max(a, b));
        const Vector oriented = a < b ? v : Scalar(f, -1L) * v;
        auto it = seen.find(key);
        if (it != seen.end()) {
            if (it->second != oriented) {
                e.fail("antisymmetry: entries for (" + std::to_string(key.first) + ", " +
                       std::to_string(key.second) + ") disagree");
            }
            continue;
        }
        seen.emplace(key, oriented);
        for (std::size_t c = 0; c < n; ++c) {
            l.set(key.first, key.second, c, oriented[c]);
            l.set(key.second, key.first, c, -oriented[c]);
        }
    }
    return l;
}

// An embedded object, or a string naming a file relative to the document.
Input resolve(const Json& j, const Loc& at, Input& holder) {
    if (j.is_string()) {
        fs::path base = fs::path(at.input().source).parent_path();
        fs::path target = base / j.get<std::string>();
        if (!fs::exists(target)) {
            at.fail("referenced file \"" + target.string() + "\" does not exist");
        }
        holder = Input::from_file(target.string());
        return holder;
    }
    return Input{j, at.input().source};
}

RBLieAlgebra algebra_from(const Json& j, const Loc& at) {
    if (j.is_string()) {
        Input holder;
        return algebra_from_json(resolve(j, at, holder));
    }
    const Field f = field_from(member(j, at, "field"), at["field"]);
    const std::size_t n = count_from(member(j, at, "dim"), at["dim"]);
    LieAlgebra l = j.contains("bracket") ? bracket_from(j["bracket"], f, n, at["bracket"]) : LieAlgebra(f, n);
    Matrix op = j.contains("op") ? matrix_from(j["op"], f, n, n, at["op"]) : Matrix(f, n, n);
    return RBLieAlgebra{std::move(l), std::move(op)};
}

std::vector<std::size_t> tuple_from_key(const std::string& key, std::size_t degree, std::size_t gdim, const Loc& at) {
    std::vector<std::size_t> t;
    if (!key.empty()) {
        std::stringstream ss(key);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
                at.fail("malformed index tuple \"" + key + "\"");
            }
            t.push_back(std::stoul(part));
        }
    }
    if (t.size() != degree) {
        at.fail("tuple \"" + key + "\" does not have " + std::to_string(degree) + " indices");
    }
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (t[k] >= gdim) {
            at.fail("index " + std::to_string(t[k]) + " out of range for dimension " + std::to_string(gdim));
        }
        if (k > 0 && t[k - 1] >= t[k]) {
            at.fail("tuple \"" + key + "\" is not strictly increasing");
        }
    }
    return t;
}

Cochain cochain_from(const Json& j, const Field& f, std::size_t gdim, std::size_t hdim, const Loc& at) {
    const std::size_t degree = count_from(member(j, at, "degree"), at["degree"]);
    Cochain c(f, gdim, hdim, degree);
    if (!j.contains("values")) {
        return c;
    }
    const Json& values = j["values"];
    if (!values.is_object()) {
        at["values"].fail("expected an object keyed by index tuples");
    }
    for (auto it = values.begin(); it != values.end(); ++it) {
        const Loc v = at["values"][it.key()];
        const Tuple t = tuple_from_key(it.key(), degree, gdim, v);
        c.set_value(c.index_of(t), vector_from(it.value(), f, hdim, v));
    }
    return c;
}

void require_field(const Field& have, const Field& want, const Loc& at) {
    if (!(have == want)) {
        at.fail("field " + have.describe() + " does not match " + want.describe());
    }
}

std::vector<Matrix> matrices_from(const Json& j, const Field& f, std::size_t count, std::size_t m, const Loc& at) {
    if (!j.is_array() || j.size() != count) {
        at.fail("expected " + std::to_string(count) + " matrices");
    }
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(matrix_from(j[k], f, m, m, at[k]));
    }
    return out;
}

Json bracket_to_json(const LieAlgebra& l) {
    Json table = Json::array();
    for (std::size_t i = 0; i < l.dim(); ++i) {
        for (std::size_t j = i + 1; j < l.dim(); ++j) {
            Vector v = l.bracket_basis(i, j);
            if (!is_zero(v)) {
                table.push_back(Json::array({i, j, to_json(v)}));
            }
        }
    }
    return table;
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

Input Input::from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path + ": cannot open file");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str(), path);
}

Input Input::from_text(const std::string& text, const std::string& source) {
    try {
        return Input{Json::parse(text), source};
    } catch (const Json::parse_error& e) {
        // byte is one past the offending character.
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string what = e.what();
        auto pos = what.find("syntax error");
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                         (pos == std::string::npos ? what : what.substr(pos)));
    }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string document_kind(const Json& j) {
    if (!j.is_object()) {
        return "unknown";
    }
    if (j.contains("e") && j.contains("i") && j.contains("p")) {
        return "extension";
    }
    if (j.contains("chi") && j.contains("psi")) {
        return "cocycle";
    }
    if (j.contains("action") && j.contains("base")) {
        return "representation";
    }
    if (j.contains("field") && j.contains("dim")) {
        return "algebra";
    }
    return "unknown";
}

Field field_from_json(const Input& in) { return field_from(in.doc, Loc(in)); }

RBLieAlgebra algebra_from_json(const Input& in) { return algebra_from(in.doc, Loc(in)); }

Representation representation_from_json(const Input& in) {
    const Loc at(in);
    const Json& j = in.doc;
    RBLieAlgebra base = algebra_from(member(j, at, "base"), at["base"]);
    const Field& f = base.field();
    const std::size_t m = count_from(member(j, at, "hdim"), at["hdim"]);
    Representation r;
    r.base = base;
    r.hdim = m;
    r.action = matrices_from(member(j, at, "action"), f, base.dim(), m, at["action"]);
    r.s_op = matrix_from(member(j, at, "S"), f, m, m, at["S"]);
    if (j.contains("hbracket") && !j["hbracket"].is_null()) {
        r.h_bracket = bracket_from(j["hbracket"], f, m, at["hbracket"]);
    }
    return r;
}

NonAbelianCocycle cocycle_from_json(const Input& in) {
    const Loc at(in);
    const Json& j = in.doc;
    NonAbelianCocycle c;
    c.g = algebra_from(member(j, at, "g"), at["g"]);
    c.h = algebra_from(member(j, at, "h"), at["h"]);
    const Field& f = c.g.field();
    require_field(c.h.field(), f, at["h"]);
    const std::size_t n = c.g.dim();
    const std::size_t m = c.h.dim();
    c.chi = j.contains("chi") ? cochain_from(j["chi"], f, n, m, at["chi"]) : Cochain(f, n, m, 2);
    if (c.chi.degree() != 2) {
        at["chi"]["degree"].fail("chi must have degree 2");
    }
    c.psi = j.contains("psi") ? matrices_from(j["psi"], f, n, m, at["psi"])
                              : std::vector<Matrix>(n, Matrix(f, m, m));
    c.phi = j.contains("phi") ? matrix_from(j["phi"], f, m, n, at["phi"]) : Matrix(f, m, n);
    return c;
}

Extension extension_from_json(const Input& in) {
    const Loc at(in);
    const Json& j = in.doc;
    Extension x;
    x.e = algebra_from(member(j, at, "e"), at["e"]);
    x.g = algebra_from(member(j, at, "g"), at["g"]);
    x.h = algebra_from(member(j, at, "h"), at["h"]);
    const Field& f = x.e.field();
    require_field(x.g.field(), f, at["g"]);
    require_field(x.h.field(), f, at["h"]);
    x.i = matrix_from(member(j, at, "i"), f, x.e.dim(), x.h.dim(), at["i"]);
    x.p = matrix_from(member(j, at, "p"), f, x.g.dim(), x.e.dim(), at["p"]);
    return x;
}

Matrix matrix_from_json(const Input& in, const Field& f, std::size_t rows, std::size_t cols) {
    return matrix_from(in.doc, f, rows, cols, Loc(in));
}

Cochain cochain_from_json(const Input& in, const Field& f, std::size_t gdim, std::size_t hdim) {
    return cochain_from(in.doc, f, gdim, hdim, Loc(in));
}

AutomorphismPair pair_from_json(const Input& in, const Extension& x, bool need_beta, bool need_alpha) {
    const Loc at(in);
    const Json& j = in.doc;
    const Field& f = x.field();
    AutomorphismPair p = identity_pair(x.g, x.h);
    if (need_beta || j.contains("beta")) {
        p.beta = matrix_from(member(j, at, "beta"), f, x.h.dim(), x.h.dim(), at["beta"]);
    }
    if (need_alpha || j.contains("alpha")) {
        p.alpha = matrix_from(member(j, at, "alpha"), f, x.g.dim(), x.g.dim(), at["alpha"]);
    }
    return p;
}

Matrix section_from_json(const Input& in, const Extension& x) {
    const Loc at(in);
    return matrix_from(member(in.doc, at, "s"), x.field(), x.e.dim(), x.g.dim(), at["s"]);
}

Matrix witness_from_json(const Input& in, const Extension& x) {
    const Loc at(in);
    return matrix_from(member(in.doc, at, "lambda"), x.field(), x.h.dim(), x.g.dim(), at["lambda"]);
}

Json to_json(const Field& f) {
    if (f.is_rational()) {
        return Json{{"kind", "rationals"}};
    }
    return Json{{"kind", "prime"}, {"modulus", f.modulus()}};
}

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const Vector& v) {
    Json a = Json::array();
    for (const auto& s : v) {
        a.push_back(s.to_string());
    }
    return a;
}

Json to_json(const Matrix& m) {
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        a.push_back(to_json(m.row(r)));
    }
    return a;
}

Json to_json(const RBLieAlgebra& a) {
    return Json{{"field", to_json(a.field())}, {"dim", a.dim()}, {"bracket", bracket_to_json(a.lie)}, {"op", to_json(a.op)}};
}

Json to_json(const Representation& r) {
    Json action = Json::array();
    for (const auto& m : r.action) {
        action.push_back(to_json(m));
    }
    Json j{{"base", to_json(r.base)}, {"hdim", r.hdim}, {"action", action}, {"S", to_json(r.s_op)}};
    if (r.h_bracket && !r.h_bracket->is_abelian()) {
        j["hbracket"] = bracket_to_json(*r.h_bracket);
    }
    return j;
}

Json to_json(const Cochain& c) {
    Json values = Json::object();
    for (std::size_t k = 0; k < c.tuples().size(); ++k) {
        if (is_zero(c.value(k))) {
            continue;
        }
        std::string key;
        for (std::size_t i : c.tuples()[k]) {
            key += (key.empty() ? "" : ",") + std::to_string(i);
        }
        values[key] = to_json(c.value(k));
    }
    return Json{{"degree", c.degree()}, {"values", values}};
}

Json to_json(const NonAbelianCocycle& c) {
    Json psi = Json::array();
    for (const auto& m : c.psi) {
        psi.push_back(to_json(m));
    }
    return Json{{"g", to_json(c.g)}, {"h", to_json(c.h)}, {"chi", to_json(c.chi)}, {"psi", psi}, {"phi", to_json(c.phi)}};
}

Json to_json(const Extension& x) {
    return Json{{"e", to_json(x.e)}, {"i", to_json(x.i)}, {"p", to_json(x.p)}, {"g", to_json(x.g)}, {"h", to_json(x.h)}};
}

Json to_json(const AutomorphismPair& p) { return Json{{"beta", to_json(p.beta)}, {"alpha", to_json(p.alpha)}}; }

} // namespace rbx

#include "support/generators.hpp"

#include "rbx/errors.hpp"
#include "rbx/io.hpp"

#include <doctest.h>

#include <fstream>
#include <functional>
#include <sstream>

using namespace rbx;
using testing::Rng;

namespace {

std::string fixture(const std::string& name) { return std::string(RBX_FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string parse_error(const std::string& text, const std::function<void(const Input&)>& load) {
    try {
        load(Input::from_text(text, "t.json"));
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

const std::string kQ = R"({"kind": "rationals"})";

} // namespace

TEST_CASE("document kinds") {
    CHECK(document_kind(Input::from_file(fixture("n2.json")).doc) == "algebra");
    CHECK(document_kind(Input::from_file(fixture("trivial11.json")).doc) == "representation");
    CHECK(document_kind(Input::from_file(fixture("ephi3_cocycle.json")).doc) == "cocycle");
    CHECK(document_kind(Input::from_file(fixture("ephi3.json")).doc) == "extension");
    CHECK(document_kind(Json::parse(R"({"beta": 1})")) == "unknown");
}

TEST_CASE("non-canonical rationals are normalized on load") {
    RBLieAlgebra a = algebra_from_json(Input::from_file(fixture("n2_noncanonical.json")));
    const Field q = Field::rationals();
    CHECK(a.lie.c(0, 1, 1) == Scalar(q, mpq_class(1, 2)));
    CHECK(a.op(1, 0) == Scalar(q, mpq_class(-3, 2)));
    const std::string out = dump_json(to_json(a));
    CHECK(out.find("\"1/2\"") != std::string::npos);
    CHECK(out.find("\"-3/2\"") != std::string::npos);
    CHECK(out.find("2/4") == std::string::npos);
}

TEST_CASE("load then save is byte-identical after one normalization pass") {
    for (const char* name : {"ephi3.json", "nab_f3.json", "split_psi_f3.json", "split_f2.json", "nab_f3_alt.json"}) {
        const std::string text = read_file(fixture(name));
        CHECK(dump_json(to_json(extension_from_json(Input::from_text(text, name)))) == text);
    }
    for (const char* name : {"nab_f3_alt_cocycle.json"}) {
        const std::string text = read_file(fixture(name));
        CHECK(dump_json(to_json(cocycle_from_json(Input::from_text(text, name)))) == text);
    }
    for (const char* name : {"n2.json", "n2_noncanonical.json"}) {
        const std::string once = dump_json(to_json(algebra_from_json(Input::from_file(fixture(name)))));
        CHECK(dump_json(to_json(algebra_from_json(Input::from_text(once)))) == once);
    }
    const std::string rep = dump_json(to_json(representation_from_json(Input::from_file(fixture("adjoint_n2.json")))));
    CHECK(dump_json(to_json(representation_from_json(Input::from_text(rep)))) == rep);
}

TEST_CASE("random values survive a JSON round trip") {
    Rng rng(71);
    for (const Field& f : {Field::rationals(), Field::prime(5), Field::prime(2)}) {
        for (int k = 0; k < 20; ++k) {
            NonAbelianCocycle c = testing::random_cocycle(rng, f, 3, 3);
            const std::string ct = dump_json(to_json(c));
            CHECK(cocycle_from_json(Input::from_text(ct)) == c);
            Extension x = testing::random_extension(rng, f, 2, 2);
            const std::string xt = dump_json(to_json(x));
            CHECK(extension_from_json(Input::from_text(xt)) == x);
            CHECK(dump_json(to_json(extension_from_json(Input::from_text(xt)))) == xt);
            Representation r = testing::random_module(rng, f, 3, 3);
            CHECK(representation_from_json(Input::from_text(dump_json(to_json(r)))) == r);
        }
    }
}

TEST_CASE("syntax errors carry line and column") {
    const std::string text = "{\n  \"dim\": 1,\n  \"op\": [[\"0\"]\n  \"x\"\n}";
    try {
        Input::from_text(text, "f.json");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("f.json:4:", 0) == 0);
    }
    CHECK_THROWS_AS(Input::from_file(fixture("no_such_file.json")), ParseError);
}

TEST_CASE("semantic errors name the source and the JSON path") {
    auto algebra = [](const Input& in) { algebra_from_json(in); };
    CHECK(parse_error(R"({"field": {"kind": "prime", "modulus": 4}, "dim": 1, "bracket": [], "op": [["0"]]})",
                      algebra) == "t.json: /field/modulus: modulus 4 is not a prime");
    CHECK(parse_error(R"({"field": {"kind": "reals"}, "dim": 1, "bracket": [], "op": [["0"]]})", algebra) ==
          "t.json: /field/kind: unknown field kind \"reals\"");
    CHECK(parse_error(R"({"field": )" + kQ + R"(, "dim": 2, "bracket": [[0, 1, ["1", "0"]], [1, 0, ["1", "0"]]],
                          "op": [["0", "0"], ["0", "0"]]})",
                      algebra) == "t.json: /bracket/1: antisymmetry: entries for (0, 1) disagree");
    CHECK(parse_error(R"({"field": )" + kQ + R"(, "dim": 2, "bracket": [[1, 1, ["1", "0"]]],
                          "op": [["0", "0"], ["0", "0"]]})",
                      algebra) == "t.json: /bracket/0: antisymmetry: [e1, e1] must vanish");
    CHECK(parse_error(R"({"field": )" + kQ + R"(, "dim": 2, "bracket": [[0, 2, ["1", "0"]]],
                          "op": [["0", "0"], ["0", "0"]]})",
                      algebra)
              .find("/bracket/0: index (0, 2) out of range") != std::string::npos);
    CHECK(parse_error(R"({"field": )" + kQ + R"(, "dim": 1, "bracket": [], "op": [["0", "1"]]})", algebra)
              == "t.json: /op/0: expected an array of 1 scalars");
    CHECK(parse_error(R"({"field": )" + kQ + R"(, "dim": 1, "bracket": [], "op": [["6/-4"]]})", algebra)
              .find("t.json: /op/0/0: ") == 0);
    CHECK(parse_error(R"({"field": )" + kQ + R"(, "op": [["0"]]})", algebra) == "t.json: /: missing key \"dim\"");

    // Absent bracket and op mean zero.
    RBLieAlgebra z = algebra_from_json(Input::from_text(R"({"field": )" + kQ + R"(, "dim": 2})"));
    CHECK(z.lie.is_abelian());
    CHECK(z.op.is_zero());

    // A consistent (j, i) entry is the negated (i, j) entry.
    RBLieAlgebra a = algebra_from_json(Input::from_text(
        R"({"field": )" + kQ + R"(, "dim": 2, "bracket": [[1, 0, ["0", "-1"]]], "op": [["0", "0"], ["0", "0"]]})"));
    CHECK(a.lie == testing::n2_algebra(Field::rationals()));
}

TEST_CASE("cochain keys and cross-file consistency") {
    const Input good = Input::from_file(fixture("nab_f3_cocycle.json"));
    Json j = good.doc;
    j["chi"]["values"] = Json::object({{"0,0", Json::array({"1", "0"})}});
    CHECK(parse_error(j.dump(), [](const Input& in) { cocycle_from_json(in); }).find("/chi/values") !=
          std::string::npos);

    j = good.doc;
    j["h"]["field"]["modulus"] = 5;
    CHECK(parse_error(j.dump(), [](const Input& in) { cocycle_from_json(in); }).find("does not match") !=
          std::string::npos);

    // String references resolve next to the referring file.
    Representation r = representation_from_json(Input::from_file(fixture("adjoint_n2.json")));
    CHECK(r.base == algebra_from_json(Input::from_file(fixture("n2.json"))));
    CHECK(parse_error(R"({"base": "missing.json", "hdim": 1, "action": [], "S": [["0"]]})",
                      [](const Input& in) { representation_from_json(in); })
              .find("does not exist") != std::string::npos);
}

TEST_CASE("pairs, sections and witnesses") {
    const Extension x = extension_from_json(Input::from_file(fixture("ephi3.json")));
    const Field f3 = x.field();
    AutomorphismPair p = pair_from_json(Input::from_file(fixture("beta2.json")), x, true, false);
    CHECK(p.beta == Matrix::scalar(f3, 1, 2));
    CHECK(p.alpha == Matrix::identity(f3, 1));
    CHECK_THROWS_AS(pair_from_json(Input::from_file(fixture("beta2.json")), x), ParseError);
    CHECK(section_from_json(Input::from_file(fixture("ephi3_section.json")), x) ==
          Matrix::from_rows(f3, {{1}, {1}}));
    CHECK(witness_from_json(Input::from_file(fixture("lambda1.json")), x) == Matrix::identity(f3, 1));
    CHECK_THROWS_AS(section_from_json(Input::from_text(R"({"s": [["1"]]})"), x), ParseError);
}

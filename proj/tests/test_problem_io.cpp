#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hopfact/errors.hpp"
#include "hopfact/problem_io.hpp"

using namespace hopfact;

namespace {

std::string fixture(const std::string& name) { return std::string(HOPFACT_FIXTURE_DIR) + "/" + name; }

Json read_json(const std::string& path) {
    std::ifstream in(path);
    return Json::parse(in);
}

Json minimal() { return Json::parse(R"({"field": {"kind": "rational"}, "quiver": {"vertices": ["1"], "arrows": []},
                                        "group": {"generators": [], "h": []}, "chi": {}})"); }

template <class E>
std::string pointer_of(const Json& j) {
    try {
        problem_from_json(j);
    } catch (const E& e) {
        return e.pointer();
    }
    return "<no error>";
}

}  // namespace

TEST(ProblemIo, MinimalFileLoads) {
    auto p = load_problem(fixture("minimal.json"));
    EXPECT_EQ(p.quiver->vertex_count(), 1u);
    EXPECT_EQ(p.descriptor.group.size(), 0u);
    EXPECT_TRUE(p.descriptor.h_word.empty());
    EXPECT_FALSE(p.action);
    EXPECT_TRUE(validate_descriptor(p.descriptor).valid());
}

TEST(ProblemIo, DanglingArrowVertex) {
    auto j = minimal();
    j["quiver"]["arrows"] = Json::parse(R"([{"name": "a", "source": "1", "target": "1"},
                                            {"name": "b", "source": "1", "target": "7"}])");
    EXPECT_EQ(pointer_of<ResolutionError>(j), "/quiver/arrows/1/target");
}

TEST(ProblemIo, SchemaErrors) {
    auto j = minimal();
    j["extra"] = 1;
    EXPECT_EQ(pointer_of<SchemaError>(j), "/extra");

    j = minimal();
    j.erase("quiver");
    EXPECT_EQ(pointer_of<SchemaError>(j), "/");

    j = minimal();
    j["field"] = {{"kind", "cyclotomic"}};
    EXPECT_EQ(pointer_of<SchemaError>(j), "/field");

    j = minimal();
    j["group"]["generators"] = {"g"};
    j["chi"] = {{"g", "1/0"}};
    EXPECT_EQ(pointer_of<SchemaError>(j), "/chi/g");

    j["chi"] = {{"g", "2.5"}};
    EXPECT_EQ(pointer_of<SchemaError>(j), "/chi/g");

    j["chi"] = Json::object();
    EXPECT_EQ(pointer_of<SchemaError>(j), "/chi");

    j["chi"] = {{"g", {"1", "1"}}};  // coefficient lists need a cyclotomic field
    EXPECT_EQ(pointer_of<SchemaError>(j), "/chi/g");
}

TEST(ProblemIo, ResolutionErrors) {
    auto j = minimal();
    j["group"] = Json::parse(R"({"generators": ["g"], "relators": [["g", "k"]], "h": ["g"]})");
    j["chi"] = {{"g", 1}};
    EXPECT_EQ(pointer_of<ResolutionError>(j), "/group/relators/0/1");

    j["group"]["relators"] = Json::array();
    j["chi"]["k"] = 1;
    EXPECT_EQ(pointer_of<ResolutionError>(j), "/chi/k");

    j["chi"].erase("k");
    j["action"] = Json::parse(R"({"vertex_perms": {"g": {"1": "2"}}})");
    EXPECT_EQ(pointer_of<ResolutionError>(j), "/action/vertex_perms/g/1");
}

TEST(ProblemIo, SigmaTargetAmbiguity) {
    auto j = read_json(fixture("uqb_kronecker.json"));
    j["quiver"]["arrows"].push_back({{"name", "e_1"}, {"source", "1"}, {"target", "1"}});
    j["action"]["arrow_mats"]["g"]["e_1"] = {{"e_1", "1"}};
    j["action"]["sigma"] = {{"e_1", {{"e_1", "1"}}}};
    EXPECT_EQ(pointer_of<ResolutionError>(j), "/action/sigma/e_1/e_1");
}

TEST(ProblemIo, SpecializationMustMatchGroup) {
    auto j = read_json(fixture("uqb_kronecker.json"));
    j["group"] = Json::parse(R"({"generators": ["g"], "h": ["g"]})");
    j["chi"] = {{"g", {{"num", {"0", "1"}}, {"den", {"1"}}}}};  // q instead of 1/q
    EXPECT_EQ(pointer_of<SchemaError>(j), "/specialization");
    j["chi"] = {{"g", {{"num", {"1"}}, {"den", {"0", "1"}}}}};
    EXPECT_NO_THROW(problem_from_json(j));
}

TEST(ProblemIo, RoundTripIsCanonical) {
    for (auto name : {"minimal.json", "uqb_kronecker.json", "uqb_cycle.json", "btilde_two.json"}) {
        SCOPED_TRACE(name);
        auto p = load_problem(fixture(name));
        auto once = problem_to_json(p);
        auto twice = problem_to_json(problem_from_json(once));
        EXPECT_EQ(canonical_dump(once), canonical_dump(twice));
    }
}

TEST(ProblemIo, RoundTripPreservesAction) {
    auto p = load_problem(fixture("uqb_cycle.json"));
    auto back = problem_from_json(problem_to_json(p));
    auto a = to_action_data(p), b = to_action_data(back);
    for (std::size_t i = 0; i < a.quiver().vertex_count(); ++i) EXPECT_EQ(a.x_vertex(i), b.x_vertex(i));
    EXPECT_TRUE(verify(b).ok());
}

TEST(ProblemIo, Literals) {
    auto Q = Field::rationals();
    EXPECT_EQ(literal_from_json(Q, "-6/4", "/x"), Q.from_rational(Rational(-3, 2)));
    EXPECT_EQ(literal_to_json(Q.from_rational(Rational(-3, 2))), Json("-3/2"));
    auto C = Field::cyclotomic(4, "i");
    auto i = literal_from_json(C, Json::array({"0", "1"}), "/x");
    EXPECT_EQ(i * i, C.from_int(-1));
    EXPECT_EQ(literal_to_json(i * i), Json("-1"));
    auto R = Field::rational_functions("q");
    auto f = literal_from_json(R, Json::parse(R"({"num": ["-1", "0", "1"], "den": ["-1", "1"]})"), "/x");
    EXPECT_EQ(literal_to_json(f), Json::parse(R"({"num": ["1", "1"], "den": ["1"]})"));
    EXPECT_THROW(literal_from_json(R, Json::parse(R"({"num": ["1"], "den": ["0"]})"), "/x"), SchemaError);
}

TEST(ProblemIo, ToActionDataNeedsGamma) {
    auto j = read_json(fixture("uqb_kronecker.json"));
    j["action"].erase("gamma");
    auto p = problem_from_json(j);
    EXPECT_THROW(to_action_data(p), SchemaError);
}

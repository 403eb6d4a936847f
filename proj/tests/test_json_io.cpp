#include "repkit/json_io.hpp"
#include "support.hpp"

using namespace rt;

namespace {

std::string data(const std::string& rel) { return std::string(REPKIT_DATA_DIR) + "/" + rel; }

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::IoError;
}

}  // namespace

TEST_SUITE("json_io") {
    TEST_CASE("fields and scalars") {
        for (const Field* f : {&Q(), &F101(), &F4()}) CHECK(&field_from_json(field_to_json(*f)) == f);
        CHECK(scalar_to_json(Scalar::parse(Q(), "-3/4")) == Json("-3/4"));
        CHECK(scalar_to_json(S(Q(), 5)) == Json("5"));
        CHECK(scalar_from_json(F5(), Json(7)) == S(F5(), 2));
        CHECK(scalar_from_json(F4(), Json("[0,1]")) == Scalar::from_code(F4(), 2));
        CHECK(scalar_from_json(F4(), Json::array({1, 1})) == Scalar::from_code(F4(), 3));
        CHECK(code_of([] { (void)field_from_json(Json{{"type", "R"}}); }) == ErrorCode::ParseError);
        CHECK(code_of([] { (void)scalar_from_json(Q(), Json(1.5)); }) == ErrorCode::ParseError);
    }

    TEST_CASE("matrices") {
        Rng rng(1);
        for (const Field* f : {&Q(), &F101(), &F9()}) {
            const Mat m = random_mat(*f, 3, 2, rng);
            CHECK(mat_from_json(*f, mat_to_json(m)) == m);
        }
        CHECK(mat_from_json(Q(), Json::array(), 0, 3).cols() == 3);
        CHECK(code_of([] { (void)mat_from_json(Q(), Json::parse("[[1,2],[3]]")); }) == ErrorCode::ShapeMismatch);
        CHECK(code_of([] { (void)mat_from_json(Q(), Json::parse("[[1,2]]"), 2, 2); }) == ErrorCode::ShapeMismatch);
    }

    TEST_CASE("algebras and modules round trip") {
        const std::vector<AlgebraPtr> algs{commuting_algebra(Q()), truncated_free(F5()), dual_numbers(F101()),
                                           kronecker_algebra(F4(), 3), product_kk(Q())};
        Rng rng(2);
        for (const auto& a : algs) {
            const AlgebraPtr back = algebra_from_json(Json::parse(dump(algebra_to_json(*a))));
            CHECK(*back == *a);
            const ModuleRep x = free_module_random(a, 2, rng);
            const ModuleRep y = module_from_json(Json::parse(dump(module_to_json(x))));
            CHECK(y.action() == x.action());
            CHECK(*y.algebra() == *a);
            CHECK(dump(module_to_json(y)) == dump(module_to_json(x)));
        }
    }

    TEST_CASE("quiver documents convert on load") {
        const AlgebraPtr a = algebra_from_json(read_json_file(data("kronecker.json")));
        CHECK(a->structure() == kronecker_algebra(F101(), 2)->structure());
        const AlgebraPtr over_q = algebra_from_json(read_json_file(data("kronecker.json")), &Q());
        CHECK(&over_q->field() == &Q());
    }

    TEST_CASE("families, sequences and presentations round trip") {
        const BimoduleFamily fam = kronecker_family(F101());
        CHECK(family_from_json(Json::parse(dump(family_to_json(fam)))) == fam);
        const BimoduleFamily bundled = family_from_json(read_json_file(data("kronecker_family.json")));
        CHECK(bundled.numerator() == fam.numerator());
        CHECK(validate_family(bundled).valid());

        const AlgebraPtr dn = dual_numbers(F101());
        const SesData s = split_sequence(dual_S(dn), dual_P(dn));
        const SesData back = ses_from_json(Json::parse(dump(ses_to_json(s))));
        CHECK(back.f == s.f);
        CHECK(back.g == s.g);
        CHECK(back.m.action() == s.m.action());

        const PresentationMorphism pm = minimal_presentation(dual_S(dn));
        const PresentationMorphism pb = presentation_from_json(Json::parse(dump(presentation_to_json(pm))));
        CHECK(pb.phi == pm.phi);
        CHECK(pb.in_p2 == pm.in_p2);
    }

    TEST_CASE("bundled documents pass validation") {
        for (const char* m : {"modules/dual_nilpotent.json", "modules/dual_simple.json", "modules/diag.json",
                              "modules/free_jordan3.json", "modules/kronecker_p0.json", "modules/kronecker_regular_3.json",
                              "modules/commuting_pair.json"})
            CHECK_MESSAGE(validate_module(module_from_json(read_json_file(data(m)))).valid(), m);
        CHECK_FALSE(validate_module(module_from_json(read_json_file(data("modules/commuting_bad.json")))).valid());
        CHECK_NOTHROW(check_exact(ses_from_json(read_json_file(data("dual_ses.json")))));
        CHECK(presentation_from_json(read_json_file(data("dual_presentation.json"))).in_p2);
    }

    TEST_CASE("reports") {
        const AlgebraPtr comm = commuting_algebra(Q());
        const ModuleRep bad(comm, 2, {M(Q(), {{0, 1}, {0, 0}}), M(Q(), {{0, 0}, {1, 0}})});
        const Json v = validation_to_json(validate_module(bad));
        CHECK(v["valid"] == false);
        CHECK(v["violations"][0]["residual"] == Json::parse(R"([["1","0"],["0","-1"]])"));

        const Json e = error_to_json(Error(ErrorCode::NotExact, "g f is not zero", {{"condition", "gf"}}));
        CHECK(e["error"]["code"] == "NotExact");
        CHECK(e["error"]["context"]["condition"] == "gf");

        const AlgebraPtr kx = free_algebra(F101(), 1);
        const Json d = decomposition_to_json(decompose(ModuleRep(kx, 3, {M(F101(), {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})})), 9);
        CHECK(d["num_summands"] == 3);
        CHECK(d["iso_classes"] == Json::parse("[0,0,1]"));
        CHECK(d["seed"] == 9);

        const Json s = scheme_to_json(module_scheme_equations(truncated_free(Q()), 1));
        CHECK(s["equations"][0]["terms"][0]["m"] == Json::parse("[[0,2]]"));
        CHECK(dump(Json::object()) == "{}\n");
    }

    TEST_CASE("file errors") {
        CHECK(code_of([] { (void)read_json_file("/nonexistent/file.json"); }) == ErrorCode::IoError);
        CHECK(code_of([] { (void)algebra_from_json(Json::parse(R"({"form":"free"})")); }) == ErrorCode::ParseError);
        CHECK(code_of([] { (void)algebra_from_json(Json::parse(R"({"form":"weird"})")); }) == ErrorCode::ParseError);
        CHECK(code_of([] { (void)module_from_json(Json::parse(R"({"dim":1,"action":[]})")); }) == ErrorCode::ParseError);
    }
}

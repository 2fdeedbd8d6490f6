#include <catch2/catch_amalgamated.hpp>

#include "weylkit/catalog.hpp"
#include "weylkit/dot.hpp"
#include "weylkit/json_io.hpp"

using namespace weylkit;

namespace {

CartanScheme chain_124_2() { return three_object_rank2(1, 2, 4, 2); }

std::string kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.kind;
    }
    return "";
}

}  // namespace

TEST_CASE("matrix product and determinant") {
    Mat a = detail::mat2(1, 2, 3, 4);
    Mat b = detail::mat2(0, 1, 1, 0);
    Mat ab = a * b;
    REQUIRE(ab == detail::mat2(2, 1, 4, 3));
    REQUIRE(det(a) == -2);
    REQUIRE(det(Mat::identity(5)) == 1);
    Mat big = detail::mat_rows({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
    REQUIRE(det(big) == 2);  // B3 Cartan determinant
    Vec v{1, 2};
    REQUIRE((a * v) == Vec{5, 11});
}

TEST_CASE("finite order detection on integer matrices") {
    REQUIRE(has_finite_order(Mat::identity(3)));
    Mat rot = detail::mat2(0, -1, 1, 0);  // order 4
    REQUIRE(has_finite_order(rot));
    Mat shear = detail::mat2(1, 1, 0, 1);  // infinite
    REQUIRE(!has_finite_order(shear));
    Mat affine = detail::mat2(3, -2, 2, -1);  // trace 2, not identity
    REQUIRE(!has_finite_order(affine));
    Mat hyper = detail::mat2(2, 3, 1, 2);  // trace 4
    REQUIRE(!has_finite_order(hyper));
    // candidate orders in GL_2(Z) are exactly 1,2,3,4,6
    REQUIRE(finite_order_candidates(2) == std::vector<int>{1, 2, 3, 4, 6});
}

TEST_CASE("scheme validation rejects broken data") {
    CartanScheme s = chain_124_2();
    SECTION("diagonal") {
        s.cartan[0].at(0, 0) = 1;
        REQUIRE(kind_of([&] { validate_scheme(s); }) == "DiagonalNotTwo");
    }
    SECTION("positive off-diagonal") {
        s.cartan[0].at(0, 1) = 1;
        REQUIRE(kind_of([&] { validate_scheme(s); }) == "PositiveOffDiagonal");
    }
    SECTION("paired zeros") {
        s.cartan[0].at(0, 1) = 0;
        REQUIRE(kind_of([&] { validate_scheme(s); }) == "AsymmetricZero");
    }
    SECTION("involution") {
        s.refl[0] = {1, 2, 0};
        REQUIRE(kind_of([&] { validate_scheme(s); }) == "ReflectionNotInvolutive");
    }
    SECTION("row ties") {
        s.cartan[0].at(0, 1) = -3;  // row 1 must agree with the rho_1-image object
        REQUIRE(kind_of([&] { validate_scheme(s); }) == "C2Violation");
    }
    SECTION("valid as-is") { REQUIRE_NOTHROW(validate_scheme(s)); }
}

TEST_CASE("connectivity, standardness, decomposition") {
    CartanScheme s = chain_124_2();
    REQUIRE(is_connected(s));
    REQUIRE(!is_standard(s));
    REQUIRE(decompose_scheme(s).size() == 1);

    CartanScheme a1a1 = standard_scheme(detail::mat2(2, 0, 0, 2), {"x"}, {{0}, {0}});
    REQUIRE(is_standard(a1a1));
    REQUIRE(decompose_scheme(a1a1) == std::vector<std::vector<int>>{{0}, {1}});

    Mat aff = detail::mat_rows({{2, -2, 0, 0}, {-2, 2, 0, 0}, {0, 0, 2, -2}, {0, 0, -2, 2}});
    CartanScheme r4 = standard_scheme(aff, {"x"}, {{0}, {0}, {0}, {0}});
    REQUIRE(decompose_scheme(r4) == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    REQUIRE(decompose_cartan_matrix(aff).size() == 2);
}

TEST_CASE("restriction reindexes and revalidates") {
    CartanScheme b3 = standard_scheme(detail::mat_rows({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}),
                                      {"x", "y", "z"}, {{1, 0, 2}, {0, 2, 1}, {0, 1, 2}});
    CartanScheme sub = restrict_scheme(b3, {1, 2});
    REQUIRE(sub.rank == 2);
    REQUIRE(sub.nobj() == 3);
    REQUIRE(sub.cartan[0] == detail::mat2(2, -1, -2, 2));
    REQUIRE(sub.refl[0] == std::vector<int>{0, 2, 1});  // old rho_2
    REQUIRE(sub.refl[1] == std::vector<int>{0, 1, 2});  // old rho_3
    REQUIRE(kind_of([&] { restrict_scheme(b3, {}); }) == "EmptySubset");
    REQUIRE(kind_of([&] { restrict_scheme(b3, {5}); }) == "BadIndex");
}

TEST_CASE("object change diagram and signature") {
    CartanScheme s = chain_124_2();
    ObjectChangeDiagram d = object_change_diagram(s);
    REQUIRE(d.vertices == std::vector<std::string>{"x", "y", "z"});
    REQUIRE(d.edges == std::vector<std::array<int, 3>>{{0, 1, 0}, {1, 2, 1}});
    REQUIRE(diagram_signature(s) == "x-y:1;y-z:2");

    CartanScheme a3 = standard_scheme(detail::mat_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}),
                                      {"x", "y", "z"}, {{1, 0, 2}, {0, 2, 1}, {1, 0, 2}});
    REQUIRE(diagram_signature(a3) == "x-y:1;x-y:3;y-z:2");
}

TEST_CASE("dot output is byte exact") {
    CartanScheme s = chain_124_2();
    REQUIRE(emit_dot(object_change_diagram(s)) ==
            "graph {\n"
            "  \"x\";\n"
            "  \"y\";\n"
            "  \"z\";\n"
            "  \"x\" -- \"y\" [label=\"1\"];\n"
            "  \"y\" -- \"z\" [label=\"2\"];\n"
            "}\n");
    CartanScheme a2 = standard_scheme(detail::mat2(2, -1, -1, 2), {"x"}, {{0}, {0}});
    REQUIRE(emit_dot(object_change_diagram(a2)) == "graph {\n  \"x\";\n}\n");
}

TEST_CASE("equivalence witnesses and canonical forms") {
    CartanScheme s = chain_124_2();
    // flipping the chain (objects x<->z, indices 1<->2) reverses the quadruple
    CartanScheme mirror = three_object_rank2(2, 4, 2, 1);
    auto w = schemes_equivalent(s, mirror);
    REQUIRE(w.has_value());
    // the witness actually transports s onto mirror
    CartanScheme moved = transform_scheme(s, w->phi0, w->phi1);
    REQUIRE(serialize_scheme(moved) == serialize_scheme(mirror));

    REQUIRE(!schemes_equivalent(s, three_object_rank2(1, 3, 6, 2)).has_value());

    // same Cartan data, opposite swap index: not equivalent
    CartanScheme b2_first = standard_scheme(detail::mat2(2, -1, -2, 2), {"x", "y"},
                                            {{1, 0}, {0, 1}});
    CartanScheme b2_second = standard_scheme(detail::mat2(2, -2, -1, 2), {"x", "y"},
                                             {{1, 0}, {0, 1}});
    REQUIRE(!schemes_equivalent(b2_first, b2_second).has_value());

    // self equivalence starts from the identity witness
    auto self = schemes_equivalent(s, s);
    REQUIRE(self.has_value());
    REQUIRE(self->phi0 == std::vector<int>{0, 1});
    REQUIRE(self->phi1 == std::vector<int>{0, 1, 2});

    // canonical form is invariant under relabeling and idempotent
    auto canon = canonical_form(s);
    CartanScheme relabeled = transform_scheme(s, {1, 0}, {2, 0, 1});
    REQUIRE(canonical_form(relabeled).first == canon.first);
    REQUIRE(canonical_form(canon.second).first == canon.first);
    REQUIRE(serialize_scheme(canon.second) == canon.first);
}

TEST_CASE("json round trip") {
    CartanScheme s = chain_124_2();
    std::string text = scheme_to_json(s);
    CartanScheme back = scheme_from_json(text);
    REQUIRE(back.rank == s.rank);
    REQUIRE(back.objects == s.objects);
    REQUIRE(back.refl == s.refl);
    REQUIRE(back.cartan == s.cartan);
    REQUIRE(scheme_to_json(back) == text);
    REQUIRE(text.back() == '\n');
}

TEST_CASE("json rejects malformed input") {
    std::string good = scheme_to_json(chain_124_2());
    REQUIRE(kind_of([&] { scheme_from_json("{"); }) == "JsonParse");
    REQUIRE(kind_of([&] { scheme_from_json("[1,2]"); }) == "JsonShape");
    REQUIRE(kind_of([&] { scheme_from_json("{\"rank\":2}"); }) == "MissingKey");

    nlohmann::json j = nlohmann::json::parse(good);
    j["extra"] = 1;
    REQUIRE(kind_of([&] { scheme_from_json(j.dump()); }) == "UnknownKey");

    j = nlohmann::json::parse(good);
    j["objects"] = {"x", "x", "z"};
    REQUIRE(kind_of([&] { scheme_from_json(j.dump()); }) == "DuplicateObject");

    j = nlohmann::json::parse(good);
    j["reflections"]["1"]["x"] = "w";
    REQUIRE(kind_of([&] { scheme_from_json(j.dump()); }) == "UnknownObject");

    j = nlohmann::json::parse(good);
    j["cartan"]["x"][0][0] = 3;
    REQUIRE(kind_of([&] { scheme_from_json(j.dump()); }) == "DiagonalNotTwo");
}

TEST_CASE("coset construction") {
    // trivial subgroup: regular action of Sym(3), six objects
    CartanScheme reg = coset_scheme(2, {});
    REQUIRE(reg.nobj() == 6);
    REQUIRE(is_standard(reg));
    REQUIRE(is_connected(reg));

    CartanScheme half = coset_scheme(3, {{1, 0, 3, 2}});
    REQUIRE(half.nobj() == 12);
    REQUIRE(is_connected(half));
    REQUIRE(kind_of([&] { coset_scheme(3, {{0, 1}}); }) == "InvalidPermutation");
    REQUIRE(kind_of([&] { coset_scheme(3, {{0, 0, 1, 2}}); }) == "InvalidPermutation");
}

TEST_CASE("trace polynomial spot values") {
    TraceReport r = trace_polynomials(1, 1, 1, 1);
    REQUIRE(r.t11 == 1);
    REQUIRE(r.t12 == 0);
    REQUIRE(r.t21 == 0);
    REQUIRE(r.t22 == 1);

    r = trace_polynomials(1, 2, 4, 2);
    REQUIRE(r.t11 == -1);
    REQUIRE(r.t12 == 0);
    REQUIRE(r.t21 == 0);
    REQUIRE(r.t22 == -1);

    r = trace_polynomials(1, 3, 6, 2);
    REQUIRE(r.t11 == -3);
    REQUIRE(r.t12 == 1);
    REQUIRE(r.t21 == -10);
    REQUIRE(r.t22 == 3);
    REQUIRE(r.trace == 0);
}

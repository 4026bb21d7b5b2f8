#include "doctest.h"

#include "superlie/document.hpp"
#include "superlie/error.hpp"
#include "superlie/pipeline.hpp"

#include <cstdio>
#include <fstream>

using namespace superlie;
using nlohmann::json;

TEST_SUITE("document") {
    TEST_CASE("algebra round trip") {
        for (const auto& name : builtin_algebra_names()) {
            CAPTURE(name);
            LieSuperalgebra L = builtin_algebra(name);
            json doc = algebra_to_json(L);
            CHECK(doc["format"] == algebra_format);
            LieSuperalgebra back = algebra_from_json(doc);
            CHECK(algebra_to_json(back) == doc);
            CHECK(back.dim() == L.dim());
            CHECK(back.structure_table() == L.structure_table());
            // Text round trip as well.
            CHECK(algebra_to_json(algebra_from_json(json::parse(doc.dump()))) == doc);
        }
    }

    TEST_CASE("module round trip") {
        for (const char* name : {"V0", "V4", "V2plusV0", "sum:2,2,0", "scrambled:4,2:7"}) {
            CAPTURE(name);
            Osp12Module M = builtin_module(name);
            json doc = module_to_json(M);
            Osp12Module back = module_from_json(doc);
            CHECK(back.parity == M.parity);
            CHECK(back.e == M.e);
            CHECK(back.f == M.f);
            CHECK(back.h == M.h);
        }
        CHECK(builtin_module("V2plusV0").dim() == 4);
    }

    TEST_CASE("malformed documents") {
        json good = algebra_to_json(builtin_algebra("sl12"));
        CHECK_THROWS_AS(algebra_from_json(json::array()), ParseError);
        json a = good;
        a["format"] = "other/1";
        CHECK_THROWS_AS(algebra_from_json(a), ParseError);
        json b = good;
        b["brackets"][0][0] = 99;
        CHECK_THROWS_AS(algebra_from_json(b), ParseError);
        json c = good;
        c["brackets"][0][3] = "1/0";
        CHECK_THROWS_AS(algebra_from_json(c), ParseError);
        json d = good;
        d["basis"][0]["parity"] = 2;
        CHECK_THROWS_AS(algebra_from_json(d), ParseError);
        json e = good;
        e["field"] = "R";
        CHECK_THROWS_AS(algebra_from_json(e), ParseError);

        json m = module_to_json(builtin_module("V2"));
        m["h"][0][0] = 7;
        CHECK_THROWS_AS(module_from_json(m), ParseError);

        CHECK_THROWS_AS(builtin_algebra("nope"), ParseError);
        CHECK_THROWS_AS(builtin_module("V3"), ParseError);
        CHECK_THROWS_AS(builtin_module("scrambled:2"), ParseError);
        CHECK_THROWS_AS(load_algebra("/nonexistent/file.json"), ParseError);
    }

    TEST_CASE("loading from files") {
        const std::string path = "superlie_document_test.json";
        {
            std::ofstream out(path);
            out << algebra_to_json(builtin_algebra("osp12")).dump(2);
        }
        CHECK(algebra_to_json(load_algebra(path)) == algebra_to_json(builtin_algebra("osp12")));
        {
            std::ofstream out(path);
            out << "{ not json";
        }
        CHECK_THROWS_AS(load_algebra(path), ParseError);
        std::remove(path.c_str());
        CHECK(algebra_to_json(load_algebra("builtin:gl11")) == algebra_to_json(builtin_algebra("gl11")));
    }
}

TEST_SUITE("pipeline") {
    TEST_CASE("fixtures pass every stage") {
        for (const char* name : {"osp12", "sl12", "sl21", "sl13", "sl31", "gl11", "abelian1"}) {
            CAPTURE(name);
            LieSuperalgebra L = builtin_algebra(name);
            PipelineResult p = verify_pipeline(L);
            CHECK(p.report.passed());
            CHECK(p.datum.has_value());
            CHECK(cross_check(L).passed());
        }
    }

    TEST_CASE("failures are reported by stage") {
        PipelineResult bad = verify_pipeline(builtin_algebra("osp12-corrupted"));
        CHECK_FALSE(bad.report.passed());
        CHECK(bad.report.find("superalgebra.jacobi")->status == Status::fail);
        CHECK_FALSE(bad.report.find("superalgebra.jacobi")->witness.is_null());

        PipelineResult h = verify_pipeline(builtin_algebra("heisenberg"));
        CHECK(h.report.find("form.precondition")->status == Status::fail);
        CHECK_FALSE(h.datum.has_value());
    }

    TEST_CASE("reports are deterministic") {
        LieSuperalgebra L = builtin_algebra("sl12");
        CHECK(verify_pipeline(L).report.to_json() == verify_pipeline(L).report.to_json());
    }
}

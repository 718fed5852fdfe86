#include <doctest.h>

#include "su11kc/generators.hpp"
#include "su11kc/serialize.hpp"

#include <json.hpp>

#include <string>

using namespace su11kc;

TEST_CASE("nine significant digit formatting") {
    CHECK(format_sig9(0.8660254037844386) == "0.866025404");
    CHECK(format_sig9(1.0) == "1");
    CHECK(format_sig9(-0.5) == "-0.5");
    CHECK(format_sig9(123456789012.0) == "1.23456789e+11");
    CHECK(round_sig9(0.8660254037844386) == 0.866025404);
}

TEST_CASE("spectrum csv shape") {
    const std::vector<SpectrumRow> rows{{0, 1, 0.8660254037844386,
                                         0.5773502691896258, 0.8660254037844386}};
    const std::string csv = spectrum_csv(rows);
    CHECK(csv == "n,N,s,xi,E_over_m\n"
                 "0,1,0.866025404,0.577350269,0.866025404\n");
}

TEST_CASE("report json schema") {
    VerificationReport report = verify_algebra();
    report.add("fake_failing_check", {{"m", 3.0}}, 0.5, 1e-10);
    const std::string text = report_json(report, {{"gamma", 0.5}, {"k", -1.0}});
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc.at("version").is_string());
    CHECK(doc.at("parameters").at("k").get<long long>() == -1);
    CHECK(doc.at("parameters").at("gamma").get<double>() == 0.5);
    CHECK(doc.at("passed").get<bool>() == false);
    REQUIRE(doc.at("entries").is_array());
    REQUIRE(doc.at("entries").size() == report.entries.size());
    for (const auto& entry : doc.at("entries")) {
        CHECK(entry.contains("check_name"));
        CHECK(entry.contains("parameters"));
        CHECK(entry.at("measured_error").is_number());
        CHECK(entry.at("tolerance").is_number());
        CHECK(entry.at("passed").is_boolean());
    }
    const auto& last = doc.at("entries").back();
    CHECK(last.at("check_name") == "fake_failing_check");
    CHECK(last.at("passed") == false);
}

TEST_CASE("diagram csv rows and svg structure") {
    const DiagramData data = level_diagram(0.5, 2, 3);
    const std::string csv = diagram_csv(data);
    CHECK(csv.rfind("k,N,n,E_over_m,dashed\n", 0) == 0);
    CHECK(csv.find("-1,1,0,0.866025404,1") != std::string::npos);

    const std::string svg = diagram_svg(data);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    size_t level_count = 0;
    for (size_t pos = svg.find("class=\"level\""); pos != std::string::npos;
         pos = svg.find("class=\"level\"", pos + 1))
        ++level_count;
    CHECK(level_count == data.levels.size());
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    CHECK(svg.find(">Sigma+<") != std::string::npos);
    CHECK(svg.find(">A-<") != std::string::npos);
}

TEST_CASE("serialization is deterministic") {
    const DiagramData data = level_diagram(0.5, 3, 5);
    CHECK(diagram_svg(data) == diagram_svg(level_diagram(0.5, 3, 5)));
    VerificationReport r1 = verify_algebra();
    VerificationReport r2 = verify_algebra();
    CHECK(report_json(r1, {{"gamma", 0.5}}) == report_json(r2, {{"gamma", 0.5}}));
}

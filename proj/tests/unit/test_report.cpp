#include <sstream>

#include "gleason/report.hpp"
#include "test_util.hpp"

using namespace gleason;
using namespace gleason::test;

TEST(Reproduce, AllCellsMatch) {
    const auto r = reproduce(catalog());
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.cells.size(), 13u);
}

TEST(Reproduce, DetectsPerturbedCatalog) {
    auto cat = catalog();
    const auto& mz = cat.at("M_z");
    cat.at("M_z") = make_measurement({mz[1], mz[0]});
    const auto r = reproduce(cat);
    EXPECT_FALSE(r.ok());
    bool flagged = false;
    for (const auto& c : r.cells) flagged |= (c.name == "M_z[1]" && !c.ok);
    EXPECT_TRUE(flagged);
}

TEST(Reproduce, CsvMatchesJson) {
    const auto r = reproduce(catalog());
    const std::string csv = to_csv(r);
    EXPECT_EQ(csv.rfind("name,computed,expected,ok\n", 0), 0u);
    EXPECT_EQ(csv.find('\r'), std::string::npos);
    const Json j = to_json(r);
    EXPECT_EQ(j.at("cells").size(), r.cells.size());
    EXPECT_NE(csv.find("mixture_xz[1],0.250000000000,0.250000000000,true"), std::string::npos);
}

TEST(Rigidity, ReportsExpectedDimensions) {
    EXPECT_EQ(rigidity(MeasurementSet::ThreePSMPrime, 7, {200, 200, 200}).affine_dim, 3);
    EXPECT_EQ(rigidity(MeasurementSet::PVM, 7, {10}).affine_dim, 10);
    const auto two = rigidity(MeasurementSet::TwoPOM, 7, {50});
    EXPECT_EQ(two.affine_dim, 50);
    EXPECT_TRUE(two.violations.empty());
}

TEST(Rigidity, Errors) {
    expect_error(ErrorCode::RankDeficient, [] { rigidity(MeasurementSet::PVM, 7, {1}); });
    expect_error(ErrorCode::ShapeMismatch, [] { rigidity(MeasurementSet::PSM, 7, {1}); });
    expect_error(ErrorCode::ShapeMismatch, [] { rigidity(MeasurementSet::ThreePSMPrime, 7, {1}); });
}

TEST(Rigidity, JsonDeterministic) {
    const auto a = to_json(rigidity(MeasurementSet::ThreePSMPrime, 7, {50, 50, 50})).dump();
    const auto b = to_json(rigidity(MeasurementSet::ThreePSMPrime, 7, {50, 50, 50})).dump();
    EXPECT_EQ(a, b);
    const Json j = Json::parse(a);
    for (const char* key : {"n_effects", "n_rows", "affine_dim", "fit", "violations"}) EXPECT_TRUE(j.contains(key));
}

TEST(CrossSection, CircleAndExtremalPoints) {
    const std::string csv = cross_section_csv('y', 64);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "kind,a,b,d");
    int projectors = 0;
    bool zero = false, identity = false;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string kind, a, u, v;
        std::getline(row, kind, ',');
        std::getline(row, a, ',');
        std::getline(row, u, ',');
        std::getline(row, v, ',');
        const double av = std::stod(a), uv = std::stod(u), vv = std::stod(v);
        if (kind == "projector") {
            ++projectors;
            EXPECT_DOUBLE_EQ(av, 0.5);
            EXPECT_NEAR(uv * uv + vv * vv, 0.25, 1e-11);
        } else if (kind == "zero") {
            zero = av == 0 && uv == 0 && vv == 0;
        } else if (kind == "identity") {
            identity = av == 1 && uv == 0 && vv == 0;
        } else {
            EXPECT_EQ(kind, "surface");
            const double r = std::hypot(uv, vv);
            EXPECT_NEAR(r, std::min(av, 1 - av), 1e-11);
        }
    }
    EXPECT_EQ(projectors, 64);
    EXPECT_TRUE(zero);
    EXPECT_TRUE(identity);
}

TEST(CrossSection, Resolution8AndHeaders) {
    const std::string csv = cross_section_csv('x', 8);
    EXPECT_EQ(csv.rfind("kind,a,c,d\n", 0), 0u);
    EXPECT_EQ(cross_section_csv('z', 8).rfind("kind,a,b,c\n", 0), 0u);
    std::size_t circle = 0;
    for (std::size_t pos = 0; (pos = csv.find("\nprojector,", pos)) != std::string::npos; ++pos) ++circle;
    EXPECT_EQ(circle, 8u);
    expect_error(ErrorCode::IndexOutOfRange, [] { cross_section_csv('y', 4); });
    expect_error(ErrorCode::IndexOutOfRange, [] { cross_section_csv('w', 8); });
}

TEST(FormatNumber, NormalisesNegativeZero) {
    EXPECT_EQ(format_number(-0.0), "0.000000000000");
    EXPECT_EQ(format_number(-1e-17), "0.000000000000");
    EXPECT_EQ(format_number(0.25), "0.250000000000");
}

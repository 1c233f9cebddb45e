#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <regex>
#include <set>
#include <sstream>

#include "hobs/svg.hpp"
#include "test_support.hpp"

namespace hobs {
namespace {

using testing::Rng;

TEST(ParseAngle, Literals) {
    EXPECT_DOUBLE_EQ(io::parse_angle("0"), 0.0);
    EXPECT_DOUBLE_EQ(io::parse_angle("0.25"), 0.25);
    EXPECT_DOUBLE_EQ(io::parse_angle("-1e-3"), -1e-3);
    EXPECT_DOUBLE_EQ(io::parse_angle("pi"), pi);
    EXPECT_DOUBLE_EQ(io::parse_angle("pi/2"), pi / 2);
    EXPECT_DOUBLE_EQ(io::parse_angle("-pi/2"), -pi / 2);
    EXPECT_DOUBLE_EQ(io::parse_angle("3pi/4"), 3 * pi / 4);
    EXPECT_DOUBLE_EQ(io::parse_angle("3*pi/4"), 3 * pi / 4);
    EXPECT_DOUBLE_EQ(io::parse_angle("0.5pi"), 0.5 * pi);
    EXPECT_DOUBLE_EQ(io::parse_angle("3.2π"), 3.2 * pi);
    EXPECT_DOUBLE_EQ(io::parse_angle(" 2 pi / 3 "), 2 * pi / 3);
}

TEST(ParseAngle, Rejects) {
    for (const char* bad : {"", "abc", "pi/0", "pipi", "1/2/3", "--1", "pi*2", "1,5"})
        EXPECT_THROW(io::parse_angle(bad), DomainError) << bad;
}

TEST(FormatDouble, RoundTripsExactly) {
    Rng rng;
    for (int i = 0; i < 2000; ++i) {
        const double v = rng.uniform(-10, 10) * std::pow(10.0, rng.integer(-20, 20));
        const double back = io::parse_double(io::format_double(v));
        EXPECT_EQ(std::memcmp(&v, &back, sizeof v), 0) << io::format_double(v);
    }
    EXPECT_EQ(io::format_double(-0.0), "0");
}

TEST(StateSpec, JsonRoundTripAndKeyOrder) {
    Rng rng;
    const HigherOrderState st = rng.state(SphereKind::P);
    const io::Json j = io::state_to_json(st);
    EXPECT_EQ(io::state_from_json(io::Json::parse(j.dump())), st);
    std::vector<std::string> keys;
    for (const auto& item : j.items()) keys.push_back(item.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"sphere", "theta_lambda", "phi_lambda", "l", "m", "theta", "phi"}));
}

TEST(StateSpec, RejectsBadInput) {
    EXPECT_THROW(io::state_from_json(io::Json::parse(R"({"sphere":"B"})")), DomainError);
    EXPECT_THROW(io::state_from_json(io::Json::parse(
                     R"({"sphere":"Q","theta_lambda":0,"phi_lambda":0,"l":0,"m":0,"theta":0,"phi":0})")),
                 DomainError);
    EXPECT_THROW(io::state_from_json(io::Json::parse(
                     R"({"sphere":"B","theta_lambda":0,"phi_lambda":0,"l":0,"m":0,"theta":4,"phi":0})")),
                 DomainError);
}

TEST(FieldDocument, JsonAndCsvReserializeByteIdentically) {
    Rng rng;
    for (int i = 0; i < 20; ++i) {
        const auto doc = io::FieldDocument::from_field(sample_field(rng.state(), AzimuthGrid(64)));

        const std::string json = io::to_json_text(doc);
        const io::FieldDocument from_json = io::field_from_text(json);
        EXPECT_EQ(io::to_json_text(from_json), json);
        ASSERT_TRUE(from_json.state.has_value());
        EXPECT_EQ(*from_json.state, *doc.state);

        const std::string csv = io::to_csv_text(doc);
        EXPECT_EQ(io::to_csv_text(io::field_from_text(csv)), csv);
        for (std::size_t k = 0; k < doc.rows.size(); ++k) {
            EXPECT_EQ(from_json.rows[k].s, doc.rows[k].s);
            EXPECT_EQ(from_json.rows[k].phi, doc.rows[k].phi);
        }
    }
}

TEST(FieldDocument, CsvLayout) {
    const HigherOrderState st = make_state({{{pi / 2, 0}, SphereKind::B}, {-1, 1}}, {0, 0});
    const std::string csv = io::to_csv_text(io::FieldDocument::from_field(sample_field(st, AzimuthGrid(16))));
    EXPECT_EQ(csv.rfind("phi,s1,s2,s3\n", 0), 0u);
    EXPECT_EQ(csv.find('\r'), std::string::npos);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 17);
}

TEST(FieldDocument, RejectsMalformed) {
    EXPECT_THROW(io::field_from_text(""), DomainError);
    EXPECT_THROW(io::field_from_text("phi,x,y,z\n0,0,0,1\n"), DomainError);
    EXPECT_THROW(io::field_from_text("phi,s1,s2,s3\n0,0,0\n"), DomainError);
    EXPECT_THROW(io::field_from_text("phi,s1,s2,s3\n0,0,0,0.5\n"), DomainError);
    EXPECT_THROW(io::field_from_text("phi,s1,s2,s3\n1,0,0,1\n0,0,0,1\n"), DomainError);
    EXPECT_THROW(io::field_from_text("{\"samples\":2,\"rows\":[[0,0,0,1]]}"), DomainError);
    EXPECT_THROW(io::field_from_text("{not json"), DomainError);
}

TEST(Files, AtomicWriteAndIoErrors) {
    const auto dir = std::filesystem::temp_directory_path() / "hobs_serialization_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "out.txt";
    io::write_file_atomic(path, "first");
    io::write_file_atomic(path, "second");
    EXPECT_EQ(io::read_file(path), "second");
    EXPECT_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
    EXPECT_THROW(io::write_file_atomic(dir / "missing" / "x.txt", "x"), IoError);
    EXPECT_THROW(io::read_file(dir / "missing.txt"), IoError);
    std::filesystem::remove_all(dir);
}

std::size_t count_glyphs(const std::string& svg) {
    std::size_t count = 0;
    for (std::size_t pos = svg.find("class=\"glyph\""); pos != std::string::npos;
         pos = svg.find("class=\"glyph\"", pos + 1))
        ++count;
    return count;
}

TEST(Render, GlyphCountAndDeterminism) {
    Rng rng;
    const auto doc = io::FieldDocument::from_field(sample_field(rng.state(), AzimuthGrid(64)));
    for (auto style : {svg::Style::arrows, svg::Style::ellipses}) {
        const std::string a = svg::render(doc, style);
        EXPECT_EQ(count_glyphs(a), 64u);
        EXPECT_EQ(a, svg::render(io::field_from_text(io::to_json_text(doc)), style));
        EXPECT_EQ(a.rfind("<?xml", 0), 0u);
        EXPECT_NE(a.find("version=\"1.1\""), std::string::npos);
    }
}

TEST(Render, PointRingGlyphsAreIdenticalUpToPosition) {
    const HigherOrderFrame f{{{pi / 2, 0}, SphereKind::B}, {-1, 1}};
    const auto doc = io::FieldDocument::from_field(sample_field(from_coefficients(f, Complex(1), Complex(0)), AzimuthGrid(32)));
    for (auto style : {svg::Style::arrows, svg::Style::ellipses}) {
        const std::string out = svg::render(doc, style);
        // Strip coordinates; what remains (shape commands, colour, stroke) must not vary.
        const std::regex numbers(R"(-?\d+\.\d+)");
        std::set<std::string> shapes;
        std::istringstream lines(out);
        std::string line;
        while (std::getline(lines, line))
            if (line.find("class=\"glyph\"") != std::string::npos) shapes.insert(std::regex_replace(line, numbers, "#"));
        EXPECT_EQ(shapes.size(), 1u);
    }
}

TEST(Render, EllipseColoursFollowHandedness) {
    io::FieldDocument doc;
    doc.rows = {{0.0, {0, 0, 1}}, {1.0, {0, 0, -1}}, {2.0, {1, 0, 0}}};
    const std::string out = svg::render(doc, svg::Style::ellipses);
    EXPECT_NE(out.find("#d62728"), std::string::npos);
    EXPECT_NE(out.find("#1f77b4"), std::string::npos);
    EXPECT_NE(out.find("#000000"), std::string::npos);
}

}  // namespace
}  // namespace hobs

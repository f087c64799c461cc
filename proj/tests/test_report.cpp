#include <regex>

#include "ballotwire/error.hpp"
#include "ballotwire/report.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace ballotwire;

namespace {

std::vector<Date> window(int n) {
    std::vector<Date> d;
    for (int i = 0; i < n; ++i)
        d.push_back(Date{std::chrono::year{2020} / 10 / 31} + std::chrono::days{i});
    return d;
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1))
        ++n;
    return n;
}

std::vector<std::string> polyline_points(const std::string& svg) {
    std::vector<std::string> out;
    const std::regex re("<polyline[^>]*points=\"([^\"]*)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
        out.push_back((*it)[1]);
    return out;
}

const PlotSeries kPred{"predicted (ridge)", {52.154, 51.94, 52.508, 52.01}};
const PlotSeries kPoll{"aggregate polling", {51.736, 51.735, 52.512, 52.441}};

}  // namespace

TEST_CASE("four-day chart has exactly two polylines with four points") {
    const auto dates = window(4);
    const std::string svg = render_svg("Biden", dates, kPred, kPoll);
    CHECK(count(svg, "<polyline") == 2);
    const auto pts = polyline_points(svg);
    REQUIRE(pts.size() == 2);
    for (const auto& p : pts)
        CHECK(count(p, ",") == 4);
    CHECK(svg.find(">date<") != std::string::npos);
    CHECK(svg.find(">share (%)<") != std::string::npos);
    CHECK(svg.find("predicted (ridge)") != std::string::npos);
    CHECK(svg.find("aggregate polling") != std::string::npos);
    CHECK(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\""));
}

TEST_CASE("identical series draw identical point lists") {
    const auto dates = window(4);
    const std::string svg = render_svg("Same", dates, PlotSeries{"a", kPoll.values}, PlotSeries{"b", kPoll.values});
    const auto pts = polyline_points(svg);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == pts[1]);
}

TEST_CASE("coordinate transform pins the extremes to the padded frame") {
    const auto dates = window(2);
    const std::string svg = render_svg("t", dates, PlotSeries{"p", {0.0, 10.0}}, PlotSeries{"q", {0.0, 10.0}});
    // range [0, 10] padded by 1 on each side: 0 maps to 340 - 270 * 1/12, 10 to 70 + 270 * 1/12
    CHECK(polyline_points(svg)[0] == "70.00,317.50 610.00,92.50");
    const std::string flat = render_svg("t", dates, PlotSeries{"p", {5.0, 5.0}}, PlotSeries{"q", {5.0, 5.0}});
    CHECK(polyline_points(flat)[0] == "70.00,205.00 610.00,205.00");
}

TEST_CASE("chart output is deterministic and matches the golden file") {
    const auto dates = window(4);
    const std::string svg = render_svg("Biden: predicted vote share vs aggregate polling", dates, kPred, kPoll,
                                       "config_hash: 0123456789abcdef");
    CHECK(svg == render_svg("Biden: predicted vote share vs aggregate polling", dates, kPred, kPoll,
                            "config_hash: 0123456789abcdef"));
    CHECK(svg == testsupport::slurp(testsupport::test_data_dir() / "golden_plot.svg"));
}

TEST_CASE("chart preconditions and escaping") {
    const auto one = window(1);
    CHECK_THROWS_AS(render_svg("t", one, PlotSeries{"p", {1.0}}, PlotSeries{"q", {1.0}}), Error);
    const auto two = window(2);
    CHECK_THROWS_AS(render_svg("t", two, PlotSeries{"p", {1.0}}, PlotSeries{"q", {1.0, 2.0}}), Error);
    const std::string svg = render_svg("A & B <x>", two, PlotSeries{"p", {1, 2}}, PlotSeries{"q", {1, 2}});
    CHECK(svg.find("A &amp; B &lt;x&gt;") != std::string::npos);
    try {
        plot("t", two, PlotSeries{"p", {1, 2}}, PlotSeries{"q", {1, 2}}, "/nonexistent-dir/x/plot.svg");
        FAIL("expected IoError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IoError);
    }
}

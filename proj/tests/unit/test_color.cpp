#include <phycv/color.hpp>
#include <phycv/error.hpp>

#include "support/test_images.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace phycv;
using Catch::Approx;

TEST_CASE("HSV reference colors", "[color]") {
    const Hsv red = rgb_to_hsv(Rgb{1.0, 0.0, 0.0});
    CHECK(red.h == 0.0);
    CHECK(red.s == 1.0);
    CHECK(red.v == 1.0);

    const Hsv gray = rgb_to_hsv(Rgb{0.5, 0.5, 0.5});
    CHECK(gray.h == 0.0);
    CHECK(gray.s == 0.0);
    CHECK(gray.v == 0.5);

    CHECK(rgb_to_hsv(Rgb{0.0, 1.0, 0.0}).h == Approx(1.0 / 3.0));
    CHECK(rgb_to_hsv(Rgb{0.0, 0.0, 1.0}).h == Approx(2.0 / 3.0));
    CHECK(rgb_to_hsv(Rgb{1.0, 0.0, 1.0}).h == Approx(5.0 / 6.0));

    const Hsv black = rgb_to_hsv(Rgb{0.0, 0.0, 0.0});
    CHECK(black.s == 0.0);
    CHECK(black.v == 0.0);

    const Rgb back = hsv_to_rgb(Hsv{2.0 / 3.0, 1.0, 1.0});
    CHECK(back.b == Approx(1.0));
    CHECK(back.r == Approx(0.0).margin(1e-15));
}

TEST_CASE("HSV round trip on random pixels", "[color][property]") {
    testing::SplitMix rng(1000);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Rgb in{rng.uniform(), rng.uniform(), rng.uniform()};
        const Hsv hsv = rgb_to_hsv(in);
        REQUIRE(hsv.h >= 0.0);
        REQUIRE(hsv.h < 1.0);
        REQUIRE(hsv.s >= 0.0);
        REQUIRE(hsv.s <= 1.0);
        const Rgb out = hsv_to_rgb(hsv);
        worst = std::max({worst, std::abs(out.r - in.r), std::abs(out.g - in.g), std::abs(out.b - in.b)});
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("HSV image conversion", "[color]") {
    testing::SplitMix rng(7);
    const Image rgb = testing::random_rgb(9, 7, rng);
    const HsvImage hsv = rgb_to_hsv(rgb);
    CHECK(hsv.rows() == 9);
    CHECK(hsv.cols() == 7);
    const Image back = hsv_to_rgb(hsv);
    for (std::size_t i = 0; i < rgb.values().size(); ++i) {
        CHECK(std::abs(back.values()[i] - rgb.values()[i]) < 1e-12);
    }
    CHECK_THROWS_AS(rgb_to_hsv(Image(4, 4, 1)), ShapeError);
}

TEST_CASE("luma", "[color]") {
    Image img(2, 2, 3);
    img.at(0, 0, 0) = 1.0;
    img.at(0, 1, 1) = 1.0;
    img.at(1, 0, 2) = 1.0;
    img.at(1, 1, 0) = img.at(1, 1, 1) = img.at(1, 1, 2) = 0.5;
    const auto y = to_luma(img);
    CHECK(y(0, 0) == Approx(0.299));
    CHECK(y(0, 1) == Approx(0.587));
    CHECK(y(1, 0) == Approx(0.114));
    CHECK(y(1, 1) == Approx(0.5));
    const Image gray(3, 3, 1, 0.25);
    CHECK(to_luma(gray) == RealGrid(3, 3, 0.25));
}

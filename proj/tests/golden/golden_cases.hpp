#pragma once

#include <phycv/cli/runner.hpp>

#include <string>
#include <vector>

namespace phycv::golden {

struct GoldenCase {
    std::string input;
    std::string output;
    cli::RunConfig config;
};

inline std::vector<GoldenCase> golden_cases() {
    std::vector<GoldenCase> cases;

    GoldenCase pst{"retina.png", "retina_pst.png", {}};
    pst.config.algorithm = cli::Algorithm::pst;
    pst.config.pst.digital_output = true;
    pst.config.pst.post.thresh_max = 0.3;
    cases.push_back(pst);

    GoldenCase page{"radial.png", "radial_page.png", {}};
    page.config.algorithm = cli::Algorithm::page;
    page.config.page.post.thresh_min = -0.25;
    page.config.page.post.thresh_max = 0.25;
    cases.push_back(page);

    GoldenCase vevid{"dark_room.png", "dark_room_vevid.png", {}};
    vevid.config.algorithm = cli::Algorithm::vevid;
    cases.push_back(vevid);

    GoldenCase lite{"dark_room.png", "dark_room_vevid_lite.png", {}};
    lite.config.algorithm = cli::Algorithm::vevid;
    lite.config.vevid.lite = true;
    cases.push_back(lite);

    return cases;
}

} // namespace phycv::golden

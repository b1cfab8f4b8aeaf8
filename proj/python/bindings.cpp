#include <phycv/color.hpp>
#include <phycv/error.hpp>
#include <phycv/image.hpp>
#include <phycv/page.hpp>
#include <phycv/pst.hpp>
#include <phycv/spectral.hpp>
#include <phycv/vevid.hpp>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <complex>
#include <string>

namespace py = pybind11;
using namespace phycv;

namespace {

using InArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

RealGrid to_grid(const InArray& a) {
    if (a.ndim() != 2) {
        throw ShapeError("expected a 2D array, got " + std::to_string(a.ndim()) + "D");
    }
    RealGrid g(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
    std::copy_n(a.data(), g.size(), g.data());
    return g;
}

Image to_image(const InArray& a) {
    if (a.ndim() == 2) {
        return Image::from_plane(to_grid(a));
    }
    if (a.ndim() != 3 || (a.shape(2) != 1 && a.shape(2) != 3)) {
        throw ShapeError("expected an (H, W) or (H, W, 3) array");
    }
    Image img(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)),
              static_cast<std::size_t>(a.shape(2)));
    std::copy_n(a.data(), img.values().size(), img.values().data());
    return img;
}

template <class T>
py::array_t<T> from_grid(const Grid<T>& g) {
    py::array_t<T> out({g.rows(), g.cols()});
    std::copy_n(g.data(), g.size(), out.mutable_data());
    return out;
}

py::array_t<double> from_image(const Image& img) {
    if (img.channels() == 1) {
        py::array_t<double> out({img.rows(), img.cols()});
        std::copy_n(img.values().data(), img.values().size(), out.mutable_data());
        return out;
    }
    py::array_t<double> out({img.rows(), img.cols(), img.channels()});
    std::copy_n(img.values().data(), img.values().size(), out.mutable_data());
    return out;
}

py::object from_pst_output(const PstOutput& out) {
    if (const auto* analog = std::get_if<RealGrid>(&out)) {
        return from_grid(*analog);
    }
    return from_grid(std::get<EdgeMap>(out));
}

py::tuple from_stack(const DirectionalEdgeStack& stack) {
    py::array_t<double> layers({stack.layers.size(), stack.rows(), stack.cols()});
    double* dst = layers.mutable_data();
    for (const RealGrid& layer : stack.layers) {
        dst = std::copy_n(layer.data(), layer.size(), dst);
    }
    py::array_t<double> thetas(static_cast<py::ssize_t>(stack.thetas.size()));
    std::copy(stack.thetas.begin(), stack.thetas.end(), thetas.mutable_data());
    return py::make_tuple(layers, thetas);
}

DirectionalEdgeStack to_stack(const InArray& layers, const InArray& thetas) {
    if (layers.ndim() != 3 || thetas.ndim() != 1 || layers.shape(0) != thetas.shape(0)) {
        throw ShapeError("expected layers (D, H, W) and thetas (D,)");
    }
    DirectionalEdgeStack stack;
    const auto rows = static_cast<std::size_t>(layers.shape(1));
    const auto cols = static_cast<std::size_t>(layers.shape(2));
    const double* src = layers.data();
    for (py::ssize_t d = 0; d < layers.shape(0); ++d) {
        RealGrid layer(rows, cols);
        std::copy_n(src, layer.size(), layer.data());
        src += layer.size();
        stack.layers.push_back(std::move(layer));
        stack.thetas.push_back(thetas.data()[d]);
    }
    return stack;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "PST, PAGE and VEViD on numpy arrays";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidParameter>(m, "InvalidParameter", base.ptr());
    py::register_exception<InvalidDimension>(m, "InvalidDimension", base.ptr());
    py::register_exception<ShapeError>(m, "ShapeError", base.ptr());

    py::class_<LowpassSpec>(m, "LowpassSpec")
        .def(py::init<>())
        .def(py::init([](double sigma, bool enabled) { return LowpassSpec{sigma, enabled}; }), py::arg("sigma"),
             py::arg("enabled") = true)
        .def_readwrite("sigma", &LowpassSpec::sigma)
        .def_readwrite("enabled", &LowpassSpec::enabled);

    py::class_<PostprocessParams>(m, "PostprocessParams")
        .def(py::init<>())
        .def_readwrite("thresh_min", &PostprocessParams::thresh_min)
        .def_readwrite("thresh_max", &PostprocessParams::thresh_max)
        .def_readwrite("min_component", &PostprocessParams::min_component)
        .def_readwrite("thin", &PostprocessParams::thin);

    py::class_<PstParams>(m, "PstParams")
        .def(py::init<>())
        .def_readwrite("strength", &PstParams::strength)
        .def_readwrite("warp", &PstParams::warp)
        .def_readwrite("lowpass", &PstParams::lowpass)
        .def_readwrite("post", &PstParams::post)
        .def_readwrite("digital_output", &PstParams::digital_output)
        .def("validate", &PstParams::validate);

    py::class_<PageParams>(m, "PageParams")
        .def(py::init<>())
        .def_readwrite("mu1", &PageParams::mu1)
        .def_readwrite("sigma1", &PageParams::sigma1)
        .def_readwrite("s1", &PageParams::s1)
        .def_readwrite("mu2", &PageParams::mu2)
        .def_readwrite("sigma2", &PageParams::sigma2)
        .def_readwrite("s2", &PageParams::s2)
        .def_readwrite("directions", &PageParams::directions)
        .def_readwrite("lowpass", &PageParams::lowpass)
        .def_readwrite("post", &PageParams::post)
        .def("validate", &PageParams::validate);

    py::enum_<VevidChannel>(m, "VevidChannel")
        .value("value", VevidChannel::value)
        .value("saturation", VevidChannel::saturation);

    py::class_<VevidParams>(m, "VevidParams")
        .def(py::init<>())
        .def_readwrite("strength", &VevidParams::strength)
        .def_readwrite("variance", &VevidParams::variance)
        .def_readwrite("bias", &VevidParams::bias)
        .def_readwrite("gain", &VevidParams::gain)
        .def_readwrite("channel", &VevidParams::channel)
        .def_readwrite("lite", &VevidParams::lite)
        .def("validate", &VevidParams::validate);

    m.def(
        "frequency_grid",
        [](std::size_t rows, std::size_t cols) {
            const auto g = build_frequency_grid(rows, cols);
            py::dict out;
            out["km"] = from_grid(g.km);
            out["kn"] = from_grid(g.kn);
            out["rho"] = from_grid(g.rho);
            out["rho_max"] = g.rho_max;
            return out;
        },
        py::arg("rows"), py::arg("cols"), "Frequency coordinates in DFT bin order (cycles/sample).");

    m.def(
        "apply_stretch_2d",
        [](const InArray& image, const InArray& phi, const InArray& amplitude) {
            return from_grid(apply_stretch_2d(to_grid(image), PhaseKernel{to_grid(phi)}, to_grid(amplitude)));
        },
        py::arg("image"), py::arg("phi"), py::arg("amplitude"),
        "IFFT(FFT(image) * exp(-i phi) * amplitude) as a complex array.");

    m.def("pst_phase_profile", &pst_phase_profile, py::arg("r"), py::arg("r_max"), py::arg("strength"),
          py::arg("warp"));
    m.def(
        "pst_kernel",
        [](std::size_t rows, std::size_t cols, const PstParams& params) {
            return from_grid(pst_kernel(build_frequency_grid(rows, cols), params).phi);
        },
        py::arg("rows"), py::arg("cols"), py::arg("params") = PstParams{});
    m.def(
        "page_kernel",
        [](std::size_t rows, std::size_t cols, double theta, const PageParams& params) {
            return from_grid(page_kernel(build_frequency_grid(rows, cols), theta, params).phi);
        },
        py::arg("rows"), py::arg("cols"), py::arg("theta"), py::arg("params") = PageParams{});
    m.def(
        "vevid_kernel",
        [](std::size_t rows, std::size_t cols, double strength, double variance) {
            return from_grid(vevid_kernel(build_frequency_grid(rows, cols), strength, variance).phi);
        },
        py::arg("rows"), py::arg("cols"), py::arg("strength"), py::arg("variance"));
    m.def("vevid_lite_transfer", &vevid_lite_transfer, py::arg("v"), py::arg("gain"), py::arg("bias"));

    m.def(
        "pst", [](const InArray& image, const PstParams& params) { return from_pst_output(pst_run(to_image(image), params)); },
        py::arg("image"), py::arg("params") = PstParams{},
        "Normalized phase map in [-1, 1], or a uint8 edge map when params.digital_output is set.");
    m.def(
        "page", [](const InArray& image, const PageParams& params) { return from_stack(page_run(to_image(image), params)); },
        py::arg("image"), py::arg("params") = PageParams{}, "Returns (layers[D, H, W], thetas[D]).");
    m.def(
        "page_visualize",
        [](const InArray& layers, const InArray& thetas, const PageParams& params) {
            return from_image(page_visualize(to_stack(layers, thetas), params));
        },
        py::arg("layers"), py::arg("thetas"), py::arg("params") = PageParams{}, "Hue-coded RGB edge image.");
    m.def(
        "vevid", [](const InArray& image, const VevidParams& params) { return from_image(vevid_run(to_image(image), params)); },
        py::arg("image"), py::arg("params") = VevidParams{});

    m.def(
        "rgb_to_hsv",
        [](const InArray& rgb) {
            const auto hsv = phycv::rgb_to_hsv(to_image(rgb));
            return from_image(Image::from_planes(hsv.h, hsv.s, hsv.v));
        },
        py::arg("rgb"));
    m.def(
        "hsv_to_rgb",
        [](const InArray& hsv) {
            const Image img = to_image(hsv);
            if (img.channels() != 3) {
                throw ShapeError("expected an (H, W, 3) array");
            }
            return from_image(phycv::hsv_to_rgb(HsvImage{img.plane(0), img.plane(1), img.plane(2)}));
        },
        py::arg("hsv"));

    py::class_<PstDetector>(m, "PstDetector", "PST with a per-shape kernel cache.")
        .def(py::init<PstParams>(), py::arg("params") = PstParams{})
        .def("run", [](const PstDetector& d, const InArray& image) { return from_pst_output(d.run(to_image(image))); });
    py::class_<PageDetector>(m, "PageDetector", "PAGE with a per-shape kernel-bank cache.")
        .def(py::init<PageParams>(), py::arg("params") = PageParams{})
        .def("run", [](const PageDetector& d, const InArray& image) { return from_stack(d.run(to_image(image))); });
    py::class_<VevidEnhancer>(m, "VevidEnhancer", "VEViD with a per-shape kernel cache.")
        .def(py::init<VevidParams>(), py::arg("params") = VevidParams{})
        .def("run", [](const VevidEnhancer& e, const InArray& image) { return from_image(e.run(to_image(image))); });
}

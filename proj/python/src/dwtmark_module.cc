// Copyright 2026 The dwtmark Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dwtmark/attacks.h"
#include "dwtmark/colorspace.h"
#include "dwtmark/error.h"
#include "dwtmark/image_io.h"
#include "dwtmark/metrics.h"
#include "dwtmark/synth.h"
#include "dwtmark/watermark.h"
#include "dwtmark/wavelet.h"

namespace py = pybind11;

namespace dwtmark {
namespace {

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using ByteArray = py::array_t<uint8_t, py::array::c_style | py::array::forcecast>;

Grid GridFromArray(const DoubleArray& a) {
  if (a.ndim() != 2) {
    throw Error(ErrorCategory::kArity, "expected a 2-D array");
  }
  Grid g(static_cast<int>(a.shape(1)), static_cast<int>(a.shape(0)));
  std::copy(a.data(), a.data() + a.size(), g.values().begin());
  return g;
}

DoubleArray GridToArray(const Grid& g) {
  DoubleArray a({g.height(), g.width()});
  std::copy(g.values().begin(), g.values().end(), a.mutable_data());
  return a;
}

// (H, W) or (H, W, C) in [0, 1] <-> planar image.
PlanarImage ImageFromArray(const DoubleArray& a) {
  if (a.ndim() == 2) return PlanarImage({GridFromArray(a)});
  if (a.ndim() != 3) {
    throw Error(ErrorCategory::kArity, "expected an (H, W) or (H, W, C) array");
  }
  const int h = static_cast<int>(a.shape(0));
  const int w = static_cast<int>(a.shape(1));
  const int channels = static_cast<int>(a.shape(2));
  PlanarImage img(w, h, channels);
  const double* p = a.data();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < channels; ++c) img.plane(c).at(x, y) = *p++;
    }
  }
  return img;
}

DoubleArray ImageToArray(const PlanarImage& img) {
  DoubleArray a({img.height(), img.width(), img.channels()});
  double* p = a.mutable_data();
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      for (int c = 0; c < img.channels(); ++c) *p++ = img.at(x, y, c);
    }
  }
  return a;
}

BitMatrix BitsFromArray(const ByteArray& a) {
  if (a.ndim() != 2) {
    throw Error(ErrorCategory::kArity, "watermark must be a 2-D array");
  }
  std::vector<uint8_t> bits(a.data(), a.data() + a.size());
  for (auto& b : bits) b = b != 0;
  return BitMatrix(static_cast<int>(a.shape(0)), static_cast<int>(a.shape(1)),
                   std::move(bits));
}

ByteArray BitsToArray(const BitMatrix& m) {
  ByteArray a({m.rows(), m.cols()});
  std::copy(m.bits().begin(), m.bits().end(), a.mutable_data());
  return a;
}

std::vector<std::tuple<DoubleArray, DoubleArray, DoubleArray>> DetailsToList(
    const SubbandPyramid& p) {
  std::vector<std::tuple<DoubleArray, DoubleArray, DoubleArray>> out;
  for (const DetailBands& d : p.details) {
    out.emplace_back(GridToArray(d.lh), GridToArray(d.hl), GridToArray(d.hh));
  }
  return out;
}

}  // namespace
}  // namespace dwtmark

PYBIND11_MODULE(dwtmark, m) {
  using namespace dwtmark;
  m.doc() = "Blind DWT watermarking of RGB images in JPEG-YCbCr luma.";

  // Raised as dwtmark.Error(detail, category).
  static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(e.what(), CategoryName(e.category()));
      PyErr_SetObject(error_type.ptr(), args.ptr());
    }
  });

  m.attr("DEFAULT_DELTA") = kDefaultDelta;
  m.attr("EMBED_LEVELS") = kEmbedLevels;

  // Image files.
  m.def("read_image",
        [](const std::string& path) { return ImageToArray(ReadImage(path)); },
        py::arg("path"));
  m.def("write_image",
        [](const DoubleArray& image, const std::string& path, int maxval) {
          WriteImage(ImageFromArray(image), path, maxval);
        },
        py::arg("image"), py::arg("path"), py::arg("maxval") = 255);
  m.def("quantize",
        [](const DoubleArray& image, int maxval) {
          return ImageToArray(Quantize(ImageFromArray(image), maxval));
        },
        py::arg("image"), py::arg("maxval") = 255);
  m.def("read_watermark",
        [](const std::string& path) { return BitsToArray(ReadWatermark(path)); },
        py::arg("path"));
  m.def("write_watermark",
        [](const ByteArray& bits, const std::string& path) {
          WriteWatermark(BitsFromArray(bits), path);
        },
        py::arg("bits"), py::arg("path"));
  m.def("synth",
        [](const std::string& kind, int size, uint64_t seed) {
          return ImageToArray(MakeSyntheticHost(ParseSynthKind(kind), size, seed));
        },
        py::arg("kind") = "gradient", py::arg("size") = 512, py::arg("seed") = 0);

  // Colour.
  m.def("rgb_to_ycbcr",
        [](const DoubleArray& rgb) {
          const YCbCrImage ycc = RgbToJpegYCbCr(ImageFromArray(rgb));
          return ImageToArray(PlanarImage({ycc.y, ycc.cb, ycc.cr}));
        },
        py::arg("rgb"), "(H, W, 3) RGB -> (H, W, 3) stacked Y, Cb, Cr.");
  m.def("ycbcr_to_rgb",
        [](const DoubleArray& ycc) {
          const PlanarImage planes = ImageFromArray(ycc);
          if (planes.channels() != 3) {
            throw Error(ErrorCategory::kArity, "expected (H, W, 3) Y, Cb, Cr");
          }
          return ImageToArray(JpegYCbCrToRgb(
              {planes.plane(0), planes.plane(1), planes.plane(2)}));
        },
        py::arg("ycc"), "Inverse of rgb_to_ycbcr, clamped to [0, 1].");

  // Wavelet.
  py::class_<SubbandPyramid>(m, "Pyramid")
      .def_readonly("levels", &SubbandPyramid::levels)
      .def_property_readonly(
          "shape",
          [](const SubbandPyramid& p) {
            return std::make_pair(p.base_height, p.base_width);
          })
      .def_property(
          "ll", [](const SubbandPyramid& p) { return GridToArray(p.ll); },
          [](SubbandPyramid& p, const DoubleArray& a) {
            Grid g = GridFromArray(a);
            if (!g.SameShape(p.ll)) {
              throw Error(ErrorCategory::kStructure, "LL shape mismatch");
            }
            p.ll = std::move(g);
          })
      .def_property_readonly("details", &DetailsToList,
                             "[(lh, hl, hh)] from the finest level down.")
      .def("subband_count", &SubbandPyramid::SubbandCount);
  m.def("dwt2_forward",
        [](const DoubleArray& grid, int levels) {
          return Dwt2Forward(GridFromArray(grid), levels);
        },
        py::arg("grid"), py::arg("levels") = kEmbedLevels);
  m.def("dwt2_inverse",
        [](const SubbandPyramid& p) { return GridToArray(Dwt2Inverse(p)); },
        py::arg("pyramid"));
  m.def("threshold_details", &ThresholdDetails, py::arg("pyramid"),
        py::arg("t"));

  // Watermarking.
  py::class_<WatermarkKey>(m, "Key")
      .def_readonly("rows", &WatermarkKey::rows)
      .def_readonly("cols", &WatermarkKey::cols)
      .def_readonly("levels", &WatermarkKey::levels)
      .def_readonly("subband", &WatermarkKey::subband)
      .def_readonly("delta", &WatermarkKey::delta)
      .def_readonly("offset", &WatermarkKey::offset)
      .def_readonly("seed", &WatermarkKey::seed)
      .def_property_readonly(
          "r",
          [](const WatermarkKey& k) {
            return BitsToArray(BitMatrix(1, static_cast<int>(k.r.size()), k.r))
                .reshape({static_cast<py::ssize_t>(k.r.size())});
          })
      .def("serialize", &SerializeKey)
      .def_static("parse", &ParseKey, py::arg("text"))
      .def("save", [](const WatermarkKey& k, const std::string& path) {
        SaveKey(k, path);
      }, py::arg("path"))
      .def_static("load", &LoadKey, py::arg("path"))
      .def(py::self == py::self)
      .def("__repr__", [](const WatermarkKey& k) {
        return "<dwtmark.Key " + std::to_string(k.rows) + "x" +
               std::to_string(k.cols) + " seed=" + std::to_string(k.seed) + ">";
      });

  m.def("generate_r",
        [](size_t n, uint64_t seed) {
          const BitSequence r = GenerateR(n, seed);
          return BitsToArray(BitMatrix(1, static_cast<int>(n), r))
              .reshape({static_cast<py::ssize_t>(n)});
        },
        py::arg("n"), py::arg("seed"));
  m.def("capacity", &EmbeddingCapacity, py::arg("width"), py::arg("height"),
        py::arg("levels") = kEmbedLevels);
  m.def("embed",
        [](const DoubleArray& host, const ByteArray& mark, uint64_t seed,
           double delta, int offset) {
          EmbedResult r =
              Embed(ImageFromArray(host), BitsFromArray(mark), seed, delta, offset);
          return py::make_tuple(ImageToArray(r.image), std::move(r.key));
        },
        py::arg("host"), py::arg("mark"), py::arg("seed"),
        py::arg("delta") = kDefaultDelta, py::arg("offset") = 0,
        "Returns (watermarked image, key).");
  m.def("extract",
        [](const DoubleArray& image, const WatermarkKey& key) {
          return BitsToArray(Extract(ImageFromArray(image), key));
        },
        py::arg("image"), py::arg("key"));

  // Attacks.
  m.def("wavelet_compress",
        [](const DoubleArray& image, double t255, int levels) {
          return ImageToArray(WaveletCompress(ImageFromArray(image), t255, levels));
        },
        py::arg("image"), py::arg("t255"), py::arg("levels") = 0);
  m.def("crop",
        [](const DoubleArray& image, std::tuple<int, int, int, int> rect,
           double fill) {
          const auto [x, y, w, h] = rect;
          return ImageToArray(Crop(ImageFromArray(image), {x, y, w, h}, fill));
        },
        py::arg("image"), py::arg("rect"), py::arg("fill") = 0.0,
        "rect is (x, y, w, h).");

  // Metrics.
  m.def("psnr",
        [](const DoubleArray& a, const DoubleArray& b) {
          return Psnr(ImageFromArray(a), ImageFromArray(b));
        },
        py::arg("a"), py::arg("b"));
  m.def("pearson",
        [](const DoubleArray& a, const DoubleArray& b) {
          return Pearson(ImageFromArray(a), ImageFromArray(b));
        },
        py::arg("a"), py::arg("b"));
  m.def("nc",
        [](const ByteArray& w, const ByteArray& w2) {
          return NormalizedCorrelation(BitsFromArray(w), BitsFromArray(w2));
        },
        py::arg("w"), py::arg("w2"));
  m.def("ber",
        [](const ByteArray& w, const ByteArray& w2) {
          return BitErrorRate(BitsFromArray(w), BitsFromArray(w2));
        },
        py::arg("w"), py::arg("w2"), "Bit error rate in percent.");
}

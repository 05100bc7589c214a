// Copyright 2026 The ODIC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "odic/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstring>
#include <fstream>
#include <iterator>
#include <memory>

#include "odic/quality_metrics.hpp"

namespace odic {

std::vector<std::uint8_t> ReadFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in),
          std::istreambuf_iterator<char>()};
}

void WriteFileBytes(const std::string& path,
                    std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path);
}

namespace {

bool EndsWith(std::string s, const std::string& suffix) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// --- PNM -------------------------------------------------------------------

class PnmHeaderReader {
 public:
  explicit PnmHeaderReader(std::span<const std::uint8_t> b) : b_(b) {}

  unsigned long Next() {
    SkipSpaceAndComments();
    if (pos_ >= b_.size()) throw Truncated();
    if (!std::isdigit(b_[pos_]))
      throw DecodeError(ErrorCode::kCorruptHeader, "bad PNM header field");
    unsigned long v = 0;
    while (pos_ < b_.size() && std::isdigit(b_[pos_])) {
      v = v * 10 + (b_[pos_] - '0');
      if (v > (1ul << 30))
        throw DecodeError(ErrorCode::kCorruptHeader, "PNM field too large");
      ++pos_;
    }
    return v;
  }
  // Exactly one whitespace byte separates the header from the raster.
  size_t RasterStart() {
    if (pos_ >= b_.size()) throw Truncated();
    return pos_ + 1;
  }

  static DecodeError Truncated() {
    return DecodeError(ErrorCode::kTruncated, "truncated PNM file");
  }

 private:
  void SkipSpaceAndComments() {
    while (pos_ < b_.size()) {
      if (b_[pos_] == '#') {
        while (pos_ < b_.size() && b_[pos_] != '\n') ++pos_;
      } else if (std::isspace(b_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }
  std::span<const std::uint8_t> b_;
  size_t pos_ = 2;
};

ErpImage DecodePnm(std::span<const std::uint8_t> b) {
  const int channels = b[1] == '5' ? 1 : 3;
  PnmHeaderReader hdr(b);
  const unsigned long w = hdr.Next();
  const unsigned long h = hdr.Next();
  const unsigned long maxval = hdr.Next();
  if (w == 0 || h == 0) throw IoError("zero image dimensions");
  if (maxval == 0 || maxval > 65535)
    throw DecodeError(ErrorCode::kCorruptHeader, "PNM maxval out of range");
  const size_t start = hdr.RasterStart();
  const size_t bps = maxval > 255 ? 2 : 1;
  const size_t need = w * h * static_cast<size_t>(channels) * bps;
  if (b.size() < start || b.size() - start < need)
    throw PnmHeaderReader::Truncated();
  ErpImage img(static_cast<Index>(w), static_cast<Index>(h), channels,
               static_cast<double>(maxval));
  const std::uint8_t* p = b.data() + start;
  for (Index y = 0; y < img.height(); ++y) {
    for (Index x = 0; x < img.width(); ++x) {
      for (int c = 0; c < channels; ++c) {
        unsigned v = *p++;
        if (bps == 2) v = (v << 8) | *p++;
        img[c](y, x) = std::min<double>(v, static_cast<double>(maxval));
      }
    }
  }
  return img;
}

// --- PNG -------------------------------------------------------------------

struct PngSource {
  std::span<const std::uint8_t> data;
  size_t pos = 0;
};

void PngReadFn(png_structp png, png_bytep out, png_size_t n) {
  auto* src = static_cast<PngSource*>(png_get_io_ptr(png));
  if (src->pos + n > src->data.size()) png_error(png, "truncated PNG data");
  std::memcpy(out, src->data.data() + src->pos, n);
  src->pos += n;
}

void PngSilentWarning(png_structp, png_const_charp) {}

// Records the message for the exception instead of printing it.
void PngRecordError(png_structp png, png_const_charp msg) {
  *static_cast<std::string*>(png_get_error_ptr(png)) = msg;
  png_longjmp(png, 1);
}

struct PngRaster {
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int bit_depth = 0;
  int channels = 0;
  std::vector<std::uint8_t> pixels;
  std::vector<png_bytep> rows;
  std::string error;
};

ErpImage DecodePng(std::span<const std::uint8_t> bytes) {
  // Everything touched after setjmp lives on the heap behind `r`.
  const auto r = std::make_unique<PngRaster>();
  PngSource src{bytes, 0};
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &r->error,
                                           PngRecordError, PngSilentWarning);
  if (!png) throw IoError("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw DecodeError(ErrorCode::kTruncated,
                      "corrupt or truncated PNG: " + r->error);
  }
  png_set_read_fn(png, &src, PngReadFn);
  png_read_info(png, info);
  const int color = png_get_color_type(png, info);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && png_get_bit_depth(png, info) < 8)
    png_set_expand_gray_1_2_4_to_8(png);
  if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  png_read_update_info(png, info);
  r->width = png_get_image_width(png, info);
  r->height = png_get_image_height(png, info);
  r->bit_depth = png_get_bit_depth(png, info);
  r->channels = png_get_channels(png, info);
  const size_t stride = png_get_rowbytes(png, info);
  r->pixels.resize(stride * r->height);
  r->rows.resize(r->height);
  for (png_uint_32 y = 0; y < r->height; ++y)
    r->rows[y] = r->pixels.data() + y * stride;
  png_read_image(png, r->rows.data());
  png_destroy_read_struct(&png, &info, nullptr);

  if (r->width == 0 || r->height == 0) throw IoError("zero image dimensions");
  if (r->channels != 1 && r->channels != 3)
    throw IoError("unsupported PNG channel layout",
                  ErrorCode::kUnsupportedFormat);
  const double maxval = r->bit_depth == 16 ? 65535.0 : 255.0;
  ErpImage img(r->width, r->height, r->channels, maxval);
  for (Index y = 0; y < img.height(); ++y) {
    const std::uint8_t* p = r->rows[static_cast<size_t>(y)];
    for (Index x = 0; x < img.width(); ++x) {
      for (int c = 0; c < r->channels; ++c) {
        unsigned v = *p++;
        if (r->bit_depth == 16) v = (v << 8) | *p++;
        img[c](y, x) = v;
      }
    }
  }
  return img;
}

void PngWriteFn(png_structp png, png_bytep data, png_size_t n) {
  auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + n);
}

void PngFlushFn(png_structp) {}

int BitsFor(const ErpImage& img) { return img.max_value > 255.0 ? 16 : 8; }

// Interleaved big-endian samples, rounded and clipped.
std::vector<std::uint8_t> PackSamples(const ErpImage& img) {
  const int bytes = BitsFor(img) / 8;
  const ErpImage q = Quantized(img);
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<size_t>(img.width() * img.height() *
                                  img.channels() * bytes));
  for (Index y = 0; y < img.height(); ++y) {
    for (Index x = 0; x < img.width(); ++x) {
      for (int c = 0; c < img.channels(); ++c) {
        const auto v = static_cast<unsigned>(q[c](y, x));
        if (bytes == 2) out.push_back(static_cast<std::uint8_t>(v >> 8));
        out.push_back(static_cast<std::uint8_t>(v & 0xff));
      }
    }
  }
  return out;
}

void CheckWritable(const ErpImage& img) {
  if (img.empty() || (img.channels() != 1 && img.channels() != 3))
    throw ArgumentError("can only write non-empty 1- or 3-channel images");
  if (img.max_value < 1.0 || img.max_value > 65535.0)
    throw ArgumentError("max_value must lie in [1, 65535]");
}

}  // namespace

ErpImage Quantized(const ErpImage& img) {
  ErpImage out = img;
  for (auto& p : out.planes)
    p = p.round().max(0.0).min(std::round(img.max_value));
  return out;
}

ErpImage RescaledTo(const ErpImage& img, double max_value) {
  ErpImage out = img;
  const double k = max_value / img.max_value;
  for (auto& p : out.planes) p *= k;
  out.max_value = max_value;
  return out;
}

ErpImage DecodeImage(std::span<const std::uint8_t> bytes) {
  static constexpr std::uint8_t kPngSig[8] = {0x89, 'P', 'N', 'G',
                                              '\r', '\n', 0x1a, '\n'};
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSig, 8) == 0)
    return DecodePng(bytes);
  if (bytes.size() >= 2 && bytes[0] == 'P' &&
      (bytes[1] == '5' || bytes[1] == '6'))
    return DecodePnm(bytes);
  if (bytes.empty()) throw DecodeError(ErrorCode::kTruncated, "empty file");
  throw IoError("unsupported image format", ErrorCode::kUnsupportedFormat);
}

ErpImage LoadImage(const std::string& path) {
  const std::vector<std::uint8_t> bytes = ReadFileBytes(path);
  return DecodeImage(bytes);
}

std::vector<std::uint8_t> EncodePnm(const ErpImage& img) {
  CheckWritable(img);
  const std::string header =
      std::string(img.channels() == 1 ? "P5" : "P6") + "\n" +
      std::to_string(img.width()) + " " + std::to_string(img.height()) +
      "\n" + std::to_string(static_cast<long>(std::round(img.max_value))) +
      "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const std::vector<std::uint8_t> body = PackSamples(img);
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

std::vector<std::uint8_t> EncodePng(const ErpImage& img) {
  CheckWritable(img);
  const int depth = BitsFor(img);
  // PNG stores full-range samples, so odd ranges are stretched.
  const ErpImage full =
      RescaledTo(img, depth == 16 ? 65535.0 : 255.0);
  const auto out = std::make_unique<std::vector<std::uint8_t>>();
  const auto packed =
      std::make_unique<std::vector<std::uint8_t>>(PackSamples(full));
  const auto rows = std::make_unique<std::vector<png_bytep>>();
  const size_t stride = static_cast<size_t>(img.width() * img.channels()) *
                        static_cast<size_t>(depth / 8);
  for (Index y = 0; y < img.height(); ++y)
    rows->push_back(packed->data() + static_cast<size_t>(y) * stride);

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                            nullptr, PngSilentWarning);
  if (!png) throw IoError("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("PNG encoding failed");
  }
  png_set_write_fn(png, out.get(), PngWriteFn, PngFlushFn);
  png_set_IHDR(png, info, static_cast<png_uint_32>(img.width()),
               static_cast<png_uint_32>(img.height()), depth,
               img.channels() == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows->data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return std::move(*out);
}

void SaveImage(const std::string& path, const ErpImage& img) {
  WriteFileBytes(path, EndsWith(path, ".png") ? EncodePng(img)
                                              : EncodePnm(img));
}

SaliencyMap LoadSaliency(const std::string& path) {
  const ErpImage img = LoadImage(path);
  const Plane v = img.channels() == 3 ? Luma(img) : img[0];
  return SaliencyMap(v / img.max_value);
}

void SaveSaliency(const std::string& path, const SaliencyMap& map) {
  if (!map.valid()) throw ArgumentError("saliency map must be >= 0 and finite");
  const double scale = std::max(1.0, map.values.maxCoeff());
  ErpImage img(map.width(), map.height(), 1, 65535.0);
  img[0] = map.values / scale * 65535.0;
  SaveImage(path, img);
}

FixationMap LoadFixations(const std::string& path) {
  const ErpImage img = LoadImage(path);
  FixationMap fix(img.width(), img.height());
  for (int c = 0; c < img.channels(); ++c)
    fix.cells = (img[c] != 0.0).select(std::uint8_t{1}, fix.cells);
  return fix;
}

void SaveFixations(const std::string& path, const FixationMap& fix) {
  ErpImage img(fix.width(), fix.height(), 1, 255.0);
  img[0] = fix.cells.cast<double>() * 255.0;
  SaveImage(path, img);
}

void WriteFloatRaster(const std::string& path, std::span<const Plane> planes) {
  if (planes.empty()) throw ArgumentError("no planes to write");
  const Index h = planes[0].rows(), w = planes[0].cols();
  std::vector<std::uint8_t> out = {'F', '3', '2', 'R'};
  auto put32 = [&out](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  };
  put32(static_cast<std::uint32_t>(w));
  put32(static_cast<std::uint32_t>(h));
  put32(static_cast<std::uint32_t>(planes.size()));
  for (const Plane& p : planes) {
    if (p.rows() != h || p.cols() != w)
      throw ArgumentError("float raster planes differ in size");
    for (Index y = 0; y < h; ++y)
      for (Index x = 0; x < w; ++x)
        put32(std::bit_cast<std::uint32_t>(static_cast<float>(p(y, x))));
  }
  WriteFileBytes(path, out);
}

std::vector<Plane> ReadFloatRaster(const std::string& path) {
  const std::vector<std::uint8_t> b = ReadFileBytes(path);
  auto get32 = [&b](size_t at) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[at + static_cast<size_t>(i)]) << (8 * i);
    return v;
  };
  if (b.size() < 16) throw DecodeError(ErrorCode::kTruncated, "float raster truncated");
  if (std::memcmp(b.data(), "F32R", 4) != 0)
    throw DecodeError(ErrorCode::kBadMagic, "not a float raster");
  const size_t w = get32(4), h = get32(8), n = get32(12);
  if (b.size() != 16 + 4 * w * h * n)
    throw DecodeError(ErrorCode::kTruncated, "float raster size mismatch");
  std::vector<Plane> planes(n, Plane(static_cast<Index>(h), static_cast<Index>(w)));
  size_t at = 16;
  for (Plane& p : planes)
    for (Index y = 0; y < p.rows(); ++y)
      for (Index x = 0; x < p.cols(); ++x, at += 4)
        p(y, x) = std::bit_cast<float>(get32(at));
  return planes;
}

}  // namespace odic

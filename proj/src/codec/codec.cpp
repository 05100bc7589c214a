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

#include "odic/codec/codec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "odic/codec/block_dct.hpp"

namespace odic::codec {

void CodecConfig::Validate() const {
  if (block_size < 1 || block_size > 64)
    throw ArgumentError("block_size must lie in [1, 64]");
  if (!(preserved_fraction >= 0.0 && preserved_fraction <= 1.0))
    throw ArgumentError("preserved_fraction must lie in [0, 1]");
  if (lambda_ladder.empty() || lambda_ladder.size() > 256)
    throw ArgumentError("lambda ladder needs 1..256 entries");
  for (size_t i = 0; i < lambda_ladder.size(); ++i) {
    if (!(lambda_ladder[i] > 0.0) || !std::isfinite(lambda_ladder[i]))
      throw ArgumentError("lambda values must be positive");
    if (i > 0 && !(lambda_ladder[i] > lambda_ladder[i - 1]))
      throw ArgumentError("lambda ladder must be strictly increasing");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw ArgumentError("alpha must be positive");
  if (!(base_step_constant > 0.0) || !std::isfinite(base_step_constant))
    throw ArgumentError("base_step_constant must be positive");
}

Index CodecConfig::PreservedChannels(Index channels) const {
  return static_cast<Index>(
      std::lround(preserved_fraction * static_cast<double>(channels)));
}

double CodecConfig::Lambda(int lambda_index) const {
  if (lambda_index < 0 ||
      static_cast<size_t>(lambda_index) >= lambda_ladder.size())
    throw ArgumentError("lambda index outside the ladder");
  return lambda_ladder[static_cast<size_t>(lambda_index)];
}

double CodecConfig::StepSize(int lambda_index) const {
  return base_step_constant / std::sqrt(Lambda(lambda_index));
}

namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double ToDouble(const std::string& key, const std::string& v) {
  size_t pos = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size())
    throw ArgumentError("config: bad number for " + key + ": " + v);
  return d;
}

}  // namespace

CodecConfig ParseCodecConfig(const std::string& text, CodecConfig cfg) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ArgumentError("config: expected key = value: " + line);
    const std::string key = Trim(line.substr(0, eq));
    std::string value = Trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    if (key == "block_size") {
      cfg.block_size = static_cast<int>(ToDouble(key, value));
    } else if (key == "preserved_fraction") {
      cfg.preserved_fraction = ToDouble(key, value);
    } else if (key == "alpha") {
      cfg.alpha = ToDouble(key, value);
    } else if (key == "base_step" || key == "base_step_constant") {
      cfg.base_step_constant = ToDouble(key, value);
    } else if (key == "saliency_mode") {
      if (value == "on" || value == "true") {
        cfg.saliency_mode = true;
      } else if (value == "off" || value == "false") {
        cfg.saliency_mode = false;
      } else {
        throw ArgumentError("config: saliency_mode must be on or off");
      }
    } else if (key == "lambda_ladder") {
      if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        throw ArgumentError("config: lambda_ladder must be [a, b, ...]");
      cfg.lambda_ladder.clear();
      std::istringstream items(value.substr(1, value.size() - 2));
      std::string item;
      while (std::getline(items, item, ','))
        cfg.lambda_ladder.push_back(ToDouble(key, Trim(item)));
    } else {
      throw ArgumentError("config: unknown key " + key);
    }
  }
  cfg.Validate();
  return cfg;
}

CodecConfig LoadCodecConfig(const std::string& path, CodecConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseCodecConfig(ss.str(), std::move(base));
}

LatentTensor Analysis(const ErpImage& img, const CodecConfig& cfg) {
  return BlockDctAnalysis(img, cfg.block_size);
}

ErpImage Synthesis(const LatentTensor& y, const CodecConfig& cfg, Index width,
                   Index height, int planes, double max_value) {
  ErpImage out = BlockDctSynthesis(y, cfg.block_size, planes, width, height,
                                   max_value);
  for (auto& p : out.planes) p = p.max(0.0).min(max_value);
  return out;
}

QuantizedLatent Quantize(const LatentTensor& y, double step) {
  if (!(step > 0.0)) throw ArgumentError("quantizer step must be positive");
  QuantizedLatent q{SymbolGrid(y.channels(), y.h * y.w), y.h, y.w};
  constexpr double kLimit = 1 << 30;
  q.q = (y.coeffs / step).round().max(-kLimit).min(kLimit).cast<std::int32_t>();
  return q;
}

LatentTensor Dequantize(const QuantizedLatent& q, double step) {
  LatentTensor y(q.channels(), q.h, q.w);
  y.coeffs = q.q.cast<double>() * step;
  return y;
}

namespace {

double ResidualCeiling(double alpha) { return (1.0 + alpha) / alpha; }

}  // namespace

LevelGrid QuantizeResidual(const MaskResidual& r) {
  const double span = ResidualCeiling(r.alpha) - 1.0;
  const Plane t = ((r.values - 1.0) / span * (kResidualLevels - 1))
                      .round()
                      .max(0.0)
                      .min(kResidualLevels - 1);
  return t.cast<std::uint8_t>();
}

MaskResidual DequantizeResidual(const LevelGrid& levels, double alpha) {
  const double span = ResidualCeiling(alpha) - 1.0;
  return MaskResidual{
      1.0 + levels.cast<double>() / (kResidualLevels - 1) * span, alpha};
}

EncoderState RunEncoderFrontEnd(const ErpImage& img,
                                const SaliencyMap* saliency, int lambda_index,
                                const CodecConfig& cfg) {
  cfg.Validate();
  if (!img.valid()) throw ArgumentError("invalid input image");
  if (img.max_value != 255.0)
    throw ArgumentError("the reference codec takes 8-bit images");
  if (img.width() > std::numeric_limits<std::uint32_t>::max() ||
      img.height() > std::numeric_limits<std::uint32_t>::max())
    throw ArgumentError("image too large for the container");
  EncoderState st;
  st.step = cfg.StepSize(lambda_index);
  st.latent = Analysis(img, cfg);
  st.preserved_channels = cfg.PreservedChannels(st.latent.channels());
  LatentTensor to_quantize = st.latent;
  if (cfg.saliency_mode) {
    if (!saliency) throw ArgumentError("saliency mode needs a saliency map");
    if (saliency->width() != img.width() || saliency->height() != img.height())
      throw ArgumentError("saliency map does not match image size");
    // The container stores alpha as f32; use that value on both sides.
    const double alpha = static_cast<float>(cfg.alpha);
    const MaskResidual exact =
        SaliencyToResidual(*saliency, cfg.block_size, alpha);
    st.residual_levels = QuantizeResidual(exact);
    st.residual = DequantizeResidual(*st.residual_levels, alpha);
    to_quantize =
        ApplyLatentMask(st.latent, *st.residual, st.preserved_channels);
  }
  st.quantized = Quantize(to_quantize, st.step);
  return st;
}

Bitstream Encode(const ErpImage& img, const SaliencyMap* saliency,
                 int lambda_index, const CodecConfig& cfg) {
  const EncoderState st = RunEncoderFrontEnd(img, saliency, lambda_index, cfg);
  Bitstream bs;
  bs.header.flags = cfg.saliency_mode ? kFlagSaliency : 0;
  bs.header.width = static_cast<std::uint32_t>(img.width());
  bs.header.height = static_cast<std::uint32_t>(img.height());
  bs.header.channels = static_cast<std::uint8_t>(img.channels());
  bs.header.lambda_index = static_cast<std::uint8_t>(lambda_index);
  bs.header.alpha = static_cast<float>(cfg.alpha);
  if (st.residual_levels) bs.mask = EncodeMaskLevels(*st.residual_levels);
  bs.payload = EncodeLatentSymbols(st.quantized, img.channels());
  return bs;
}

ErpImage Decode(const Bitstream& bs, const CodecConfig& cfg) {
  cfg.Validate();
  const BitstreamHeader& hd = bs.header;
  if (hd.lambda_index >= cfg.lambda_ladder.size())
    throw DecodeError(ErrorCode::kCorruptHeader,
                      "lambda index outside the configured ladder");
  if (hd.channels != 1 && hd.channels != 3)
    throw DecodeError(ErrorCode::kCorruptHeader, "channels must be 1 or 3");
  const Index n = cfg.block_size;
  const Index width = hd.width;
  const Index height = hd.height;
  const Index h = (height + n - 1) / n;
  const Index w = (width + n - 1) / n;
  const Index channels = hd.channels * n * n;
  const double step = cfg.StepSize(hd.lambda_index);

  const QuantizedLatent q =
      DecodeLatentSymbols(bs.payload, channels, h, w, hd.channels);
  LatentTensor y = Dequantize(q, step);
  if (hd.saliency_mode()) {
    const LevelGrid levels = DecodeMaskLevels(bs.mask, h, w);
    const MaskResidual r = DequantizeResidual(levels, hd.alpha);
    y = RemoveLatentMask(y, r, cfg.PreservedChannels(channels));
  }
  ErpImage out = Synthesis(y, cfg, width, height, hd.channels, 255.0);
  for (auto& p : out.planes) p = p.round();
  return out;
}

}  // namespace odic::codec

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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "odic/codec/bitstream.hpp"
#include "odic/codec/block_dct.hpp"
#include "odic/codec/codec.hpp"
#include "odic/codec/latent_coder.hpp"
#include "odic/codec/range_coder.hpp"
#include "odic/codec/rd_sweep.hpp"
#include "odic/image_io.hpp"
#include "odic/quality_metrics.hpp"
#include "odic/report.hpp"
#include "synthetic.hpp"

namespace odic::codec {
namespace {

const std::string kData = ODIC_TEST_DATA_DIR;

ErpImage RandomImage(Index w, Index h, int ch, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, 255);
  ErpImage img(w, h, ch);
  for (auto& p : img.planes)
    for (Index i = 0; i < p.size(); ++i) p.data()[i] = d(rng);
  return img;
}

ErpImage Scene(int i) { return LoadImage(kData + "/scene" + std::to_string(i) + ".png"); }
SaliencyMap SceneSaliency(int i) {
  return LoadSaliency(kData + "/scene" + std::to_string(i) + "_sal.png");
}

// --- transform ---------------------------------------------------------------

TEST(Dct, MatrixIsOrthonormal) {
  for (int n : {1, 4, 8, 16}) {
    const Eigen::MatrixXd d = DctMatrix(n);
    EXPECT_LT((d * d.transpose() - Eigen::MatrixXd::Identity(n, n)).norm(), 1e-13);
  }
}

TEST(Dct, ZigzagIsPermutationStartingLowFrequency) {
  const std::vector<int>& z = ZigzagOrder(16);
  ASSERT_EQ(z.size(), 256u);
  std::vector<int> sorted = z;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 256; ++i) EXPECT_EQ(sorted[i], i);
  EXPECT_EQ(z[0], 0);
  EXPECT_EQ(z[1], 1);
  EXPECT_EQ(z[2], 16);
  EXPECT_EQ(z[255], 255);
  // Diagonal index is non-decreasing along the scan.
  for (int i = 1; i < 256; ++i)
    EXPECT_LE(z[i - 1] / 16 + z[i - 1] % 16, z[i] / 16 + z[i] % 16);
}

TEST(Analysis, ConstantImageOnlyDc) {
  const CodecConfig cfg;
  const ErpImage img(64, 32, 3, 255.0, 100.0);
  const LatentTensor y = Analysis(img, cfg);
  EXPECT_EQ(y.channels(), 768);
  EXPECT_EQ(y.h, 2);
  EXPECT_EQ(y.w, 4);
  for (Index c = 0; c < y.channels(); ++c) {
    const double expect = c < 3 ? 16.0 * 100.0 : 0.0;
    EXPECT_LT((y.coeffs.row(c) - expect).abs().maxCoeff(), 1e-9) << c;
  }
}

TEST(Analysis, PerfectReconstructionAndParseval) {
  const CodecConfig cfg;
  const ErpImage img = RandomImage(64, 32, 3, 1);
  const LatentTensor y = Analysis(img, cfg);
  const ErpImage back = Synthesis(y, cfg, 64, 32, 3);
  for (int c = 0; c < 3; ++c) {
    EXPECT_LT((back[c] - img[c]).abs().maxCoeff(), 1e-9);
    double coeff_energy = 0;
    for (int z = 0; z < 256; ++z)
      coeff_energy += y.coeffs.row(LatentChannel(c, z, 3)).square().sum();
    const double pixel_energy = img[c].square().sum();
    EXPECT_NEAR(coeff_energy, pixel_energy, 1e-9 * pixel_energy);
  }
}

TEST(Analysis, UnalignedSizesPadAndCrop) {
  const CodecConfig cfg;
  const ErpImage img = RandomImage(50, 21, 1, 2);
  const LatentTensor y = Analysis(img, cfg);
  EXPECT_EQ(y.h, 2);
  EXPECT_EQ(y.w, 4);
  const ErpImage back = Synthesis(y, cfg, 50, 21, 1);
  EXPECT_LT((back[0] - img[0]).abs().maxCoeff(), 1e-9);
  EXPECT_THROW(Analysis(ErpImage(), cfg), ArgumentError);
  EXPECT_THROW(Synthesis(y, cfg, 50, 40, 1), ArgumentError);
}

TEST(Synthesis, ClipsToRange) {
  const CodecConfig cfg;
  LatentTensor y(256, 1, 1);
  y.coeffs(0, 0) = 16.0 * 400.0;  // DC far above 255
  const ErpImage out = Synthesis(y, cfg, 16, 16, 1);
  EXPECT_EQ(out[0].maxCoeff(), 255.0);
}

// --- entropy layer ---------------------------------------------------------

TEST(RangeCoder, RoundTripsAdaptiveAndDirectBits) {
  std::mt19937_64 rng(3);
  std::vector<int> bits(200000);
  std::vector<std::uint32_t> raw(2000);
  for (auto& b : bits) b = (rng() % 10) < 2;  // skewed
  for (auto& r : raw) r = static_cast<std::uint32_t>(rng() & 0x1FFF);
  RangeEncoder enc;
  BitModel m[4];
  for (size_t i = 0; i < bits.size(); ++i) {
    enc.EncodeBit(m[i % 4], bits[i]);
    if (i % 100 == 0) enc.EncodeDirect(raw[i / 100], 13);
  }
  const std::vector<std::uint8_t> bytes = enc.Finish();
  // Within 3% of the source entropy (0.722 bits per flag plus raw bits).
  EXPECT_LT(bytes.size() * 8.0, 1.03 * (0.722 * bits.size() + 13.0 * raw.size()));
  RangeDecoder dec(bytes);
  BitModel d[4];
  for (size_t i = 0; i < bits.size(); ++i) {
    ASSERT_EQ(dec.DecodeBit(d[i % 4]), bits[i]) << i;
    if (i % 100 == 0) {
      ASSERT_EQ(dec.DecodeDirect(13), raw[i / 100]);
    }
  }
  EXPECT_FALSE(dec.overrun());
}

TEST(LatentCoder, LosslessOnMillionRandomSymbols) {
  // 1,048,576 symbols from a heavy-tailed mix, including escape-sized ones.
  std::mt19937_64 rng(4);
  std::geometric_distribution<int> geo(0.35);
  QuantizedLatent y{SymbolGrid(256, 64 * 64), 64, 64};
  for (Index i = 0; i < y.q.size(); ++i) {
    int v = geo(rng);
    if (rng() % 97 == 0) v += static_cast<int>(rng() % 100000);
    if (rng() % 13 == 0) v = 0;
    y.q.data()[i] = (rng() & 1) ? -v : v;
  }
  y.q.row(7).setZero();  // an empty channel
  const std::vector<std::uint8_t> bytes = EncodeLatentSymbols(y, 3);
  const QuantizedLatent back = DecodeLatentSymbols(bytes, 256, 64, 64, 3);
  EXPECT_TRUE((back.q == y.q).all());
}

TEST(LatentCoder, ExtremeValuesRoundTrip) {
  QuantizedLatent y{SymbolGrid::Zero(4, 6), 2, 3};
  y.q(0, 0) = 2'000'000'000;
  y.q(0, 1) = -2'000'000'000;
  y.q(1, 4) = std::numeric_limits<std::int32_t>::max();
  y.q(2, 5) = std::numeric_limits<std::int32_t>::min() + 1;
  const QuantizedLatent back =
      DecodeLatentSymbols(EncodeLatentSymbols(y, 2), 4, 2, 3, 2);
  EXPECT_TRUE((back.q == y.q).all());
  y.q(3, 0) = std::numeric_limits<std::int32_t>::min();
  EXPECT_THROW(EncodeLatentSymbols(y, 2), ArgumentError);
}

TEST(LatentCoder, TruncationDetected) {
  std::mt19937_64 rng(5);
  QuantizedLatent y{SymbolGrid(48, 8 * 8), 8, 8};
  for (Index i = 0; i < y.q.size(); ++i) y.q.data()[i] = static_cast<int>(rng() % 9) - 4;
  const std::vector<std::uint8_t> bytes = EncodeLatentSymbols(y, 3);
  for (size_t cut : {size_t{0}, size_t{1}, bytes.size() / 2, bytes.size() - 1}) {
    const std::vector<std::uint8_t> part(bytes.begin(), bytes.begin() + cut);
    try {
      DecodeLatentSymbols(part, 48, 8, 8, 3);
      ADD_FAILURE() << "cut " << cut;
    } catch (const DecodeError& e) {
      EXPECT_EQ(e.code(), ErrorCode::kTruncated);
    }
  }
}

TEST(MaskLevels, RoundTrip) {
  std::mt19937_64 rng(6);
  LevelGrid g(13, 29);
  for (Index i = 0; i < g.size(); ++i) g.data()[i] = static_cast<std::uint8_t>(rng() % 16);
  EXPECT_TRUE((DecodeMaskLevels(EncodeMaskLevels(g), 13, 29) == g).all());
  g(0, 0) = 16;
  EXPECT_THROW(EncodeMaskLevels(g), ArgumentError);
}

// --- container ---------------------------------------------------------------

Bitstream SampleBitstream() {
  Bitstream bs;
  bs.header.flags = kFlagSaliency;
  bs.header.width = 640;
  bs.header.height = 320;
  bs.header.channels = 3;
  bs.header.lambda_index = 5;
  bs.header.alpha = 0.75f;
  bs.mask = {1, 2, 3};
  bs.payload = {9, 8, 7, 6, 5};
  return bs;
}

TEST(Bitstream, LayoutIsLittleEndian) {
  const std::vector<std::uint8_t> b = SampleBitstream().Serialize();
  ASSERT_EQ(b.size(), 24u + 3 + 4 + 5);
  EXPECT_EQ(std::string(b.begin(), b.begin() + 4), "ODIC");
  EXPECT_EQ(b[4], 1);
  EXPECT_EQ(b[5], 1);
  EXPECT_EQ(b[6], 0x80);  // 640 = 0x280
  EXPECT_EQ(b[7], 0x02);
  EXPECT_EQ(b[10], 0x40);  // 320 = 0x140
  EXPECT_EQ(b[11], 0x01);
  EXPECT_EQ(b[14], 3);
  EXPECT_EQ(b[15], 5);
  EXPECT_EQ(b[16], 0x00);  // 0.75f = 0x3F400000
  EXPECT_EQ(b[18], 0x40);
  EXPECT_EQ(b[19], 0x3F);
  EXPECT_EQ(b[20], 3);
  EXPECT_EQ(b[24], 1);  // mask bytes
  EXPECT_EQ(b[26], 3);
  EXPECT_EQ(b[27], 5);  // payload_len
  EXPECT_EQ(b[31], 9);  // payload
}

TEST(Bitstream, HeaderRoundTrips) {
  const Bitstream bs = SampleBitstream();
  const Bitstream back = Bitstream::Parse(bs.Serialize());
  EXPECT_EQ(back.header, bs.header);
  EXPECT_EQ(back.mask, bs.mask);
  EXPECT_EQ(back.payload, bs.payload);
  EXPECT_EQ(back.size_bytes(), bs.Serialize().size());
  EXPECT_EQ(bs.bpp(), 8.0 * 36 / (640.0 * 320.0));
}

ErrorCode ParseError(const std::vector<std::uint8_t>& bytes) {
  try {
    Bitstream::Parse(bytes);
  } catch (const DecodeError& e) {
    return e.code();
  }
  ADD_FAILURE() << "parse unexpectedly succeeded";
  return ErrorCode::kArgument;
}

TEST(Bitstream, DistinctErrors) {
  const std::vector<std::uint8_t> good = SampleBitstream().Serialize();
  auto with = [&](size_t at, std::uint8_t v) {
    std::vector<std::uint8_t> b = good;
    b[at] = v;
    return b;
  };
  EXPECT_EQ(ParseError(with(0, 'X')), ErrorCode::kBadMagic);
  EXPECT_EQ(ParseError(with(4, 2)), ErrorCode::kUnsupportedVersion);
  EXPECT_EQ(ParseError(with(5, 0x82)), ErrorCode::kCorruptHeader);
  EXPECT_EQ(ParseError(with(14, 2)), ErrorCode::kCorruptHeader);
  EXPECT_EQ(ParseError(with(19, 0xBF)), ErrorCode::kCorruptHeader);  // alpha < 0
  std::vector<std::uint8_t> zero_w = good;
  std::fill(zero_w.begin() + 6, zero_w.begin() + 10, 0);
  EXPECT_EQ(ParseError(zero_w), ErrorCode::kCorruptHeader);
  std::vector<std::uint8_t> trailing = good;
  trailing.push_back(0);
  EXPECT_EQ(ParseError(trailing), ErrorCode::kCorruptHeader);
  for (size_t cut : {size_t{2}, size_t{10}, size_t{23}, size_t{26}, good.size() - 1}) {
    const std::vector<std::uint8_t> part(good.begin(), good.begin() + cut);
    EXPECT_EQ(ParseError(part), ErrorCode::kTruncated) << cut;
  }
}

// --- codec -------------------------------------------------------------------

TEST(CodecConfig, DefaultsAndValidation) {
  CodecConfig cfg;
  EXPECT_EQ(cfg.lambda_ladder.size(), 8u);
  EXPECT_EQ(cfg.lambda_ladder.front(), 0.0018);
  EXPECT_EQ(cfg.lambda_ladder.back(), 0.18);
  EXPECT_EQ(cfg.PreservedChannels(768), 192);
  EXPECT_EQ(cfg.PreservedChannels(192), 48);
  EXPECT_DOUBLE_EQ(cfg.StepSize(7), kDefaultBaseStep / std::sqrt(0.18));
  EXPECT_THROW(cfg.StepSize(8), ArgumentError);
  cfg.lambda_ladder = {0.1, 0.05};
  EXPECT_THROW(cfg.Validate(), ArgumentError);
  cfg = CodecConfig{};
  cfg.preserved_fraction = 1.5;
  EXPECT_THROW(cfg.Validate(), ArgumentError);
}

TEST(CodecConfig, ParsesKeyValueText) {
  const CodecConfig cfg = ParseCodecConfig(
      "# comment\n[codec]\nblock_size = 8\npreserved_fraction = 0.5\n"
      "lambda_ladder = [0.01, 0.1, 1]\nalpha = 2\nsaliency_mode = off\n"
      "base_step = 10\n");
  EXPECT_EQ(cfg.block_size, 8);
  EXPECT_EQ(cfg.preserved_fraction, 0.5);
  EXPECT_EQ(cfg.lambda_ladder, (std::vector<double>{0.01, 0.1, 1}));
  EXPECT_EQ(cfg.alpha, 2.0);
  EXPECT_FALSE(cfg.saliency_mode);
  EXPECT_EQ(cfg.base_step_constant, 10.0);
  EXPECT_THROW(ParseCodecConfig("speed = 3\n"), ArgumentError);
  EXPECT_THROW(ParseCodecConfig("alpha = x\n"), ArgumentError);
  EXPECT_THROW(ParseCodecConfig("alpha = -1\n"), ArgumentError);
}

TEST(Residual, QuantizationSpansRange) {
  MaskResidual r{Plane(1, 3), 1.0};
  r.values << 1.0, 1.5, 2.0;
  const LevelGrid l = QuantizeResidual(r);
  EXPECT_EQ(l(0, 0), 0);
  EXPECT_EQ(l(0, 2), 15);
  const MaskResidual back = DequantizeResidual(l, 1.0);
  EXPECT_EQ(back.values(0, 0), 1.0);
  EXPECT_EQ(back.values(0, 2), 2.0);
  EXPECT_LE(std::abs(back.values(0, 1) - 1.5), 0.5 / 15 + 1e-15);
}

TEST(Encode, ConstantImageIsNearlyFree) {
  const ErpImage img(512, 256, 3, 255.0, 131.0);
  CodecConfig off;
  off.saliency_mode = false;
  const SaliencyMap sal = EquatorPriorSaliency(512, 256, 0.4);
  for (int li = 0; li < 8; ++li) {
    for (bool mode : {false, true}) {
      CodecConfig cfg = off;
      cfg.saliency_mode = mode;
      const Bitstream bs = Encode(img, &sal, li, cfg);
      // Measured at most 0.0063 bpp when frozen.
      EXPECT_LT(bs.bpp(), 0.05) << li;
      const ErpImage rec = Decode(bs, cfg);
      const double max_err = (rec[0] - img[0]).abs().maxCoeff();
      EXPECT_LE(max_err, cfg.StepSize(li) / 2) << li;
    }
  }
}

TEST(Encode, SaliencyModeNeedsMatchingMap) {
  const ErpImage img = RandomImage(64, 32, 3, 7);
  CodecConfig cfg;
  EXPECT_THROW(Encode(img, nullptr, 0, cfg), ArgumentError);
  const SaliencyMap wrong(32, 32, 1.0);
  EXPECT_THROW(Encode(img, &wrong, 0, cfg), ArgumentError);
  cfg.saliency_mode = false;
  EXPECT_NO_THROW(Encode(img, nullptr, 0, cfg));
  EXPECT_THROW(Encode(img, nullptr, 8, cfg), ArgumentError);
  EXPECT_THROW(Encode(img, nullptr, -1, cfg), ArgumentError);
  ErpImage wide = img;
  wide.max_value = 65535;
  EXPECT_THROW(Encode(wide, nullptr, 0, cfg), ArgumentError);
}

TEST(Encode, OffModeIsTheUnmaskedPipeline) {
  const ErpImage img = Scene(0);
  CodecConfig cfg;
  cfg.saliency_mode = false;
  const Bitstream bs = Encode(img, nullptr, 4, cfg);
  const QuantizedLatent q = Quantize(Analysis(img, cfg), cfg.StepSize(4));
  EXPECT_EQ(bs.payload, EncodeLatentSymbols(q, 3));
  EXPECT_TRUE(bs.mask.empty());
  EXPECT_FALSE(bs.header.saliency_mode());
}

TEST(Encode, PreservedChannelsIdenticalAcrossModes) {
  const ErpImage img = Scene(1);
  const SaliencyMap sal = SceneSaliency(1);
  CodecConfig on, off;
  off.saliency_mode = false;
  const EncoderState a = RunEncoderFrontEnd(img, &sal, 3, on);
  const EncoderState b = RunEncoderFrontEnd(img, &sal, 3, off);
  ASSERT_EQ(a.preserved_channels, 192);
  EXPECT_TRUE((a.quantized.q.topRows(192) == b.quantized.q.topRows(192)).all());
  EXPECT_FALSE((a.quantized.q.bottomRows(576) == b.quantized.q.bottomRows(576)).all());
}

TEST(Encode, HigherLambdaCostsMoreAndDistortsLess) {
  const ErpImage img = Scene(2);
  const SaliencyMap sal = SceneSaliency(2);
  const CodecConfig cfg;
  const RdPoint lo = EvaluateRdPoint(img, &sal, 0, cfg);
  const RdPoint hi = EvaluateRdPoint(img, &sal, 7, cfg);
  EXPECT_GT(hi.bpp, lo.bpp);
  EXPECT_LT(hi.loss.sal_mse, lo.loss.sal_mse);
}

TEST(Decode, DeterministicAndConsistent) {
  const ErpImage img = Scene(0);
  const SaliencyMap sal = SceneSaliency(0);
  const CodecConfig cfg;
  const std::vector<std::uint8_t> bytes = Encode(img, &sal, 5, cfg).Serialize();
  EXPECT_EQ(bytes, Encode(img, &sal, 5, cfg).Serialize());
  const ErpImage a = Decode(Bitstream::Parse(bytes), cfg);
  const ErpImage b = Decode(Bitstream::Parse(bytes), cfg);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.valid());
  EXPECT_TRUE(((a[0] - a[0].round()) == 0).all());
  EXPECT_GT(WsPsnr(img, a).value, 25.0);
}

TEST(Decode, RejectsLadderMismatchAndTruncatedPayload) {
  const ErpImage img = RandomImage(64, 32, 3, 8);
  CodecConfig cfg;
  cfg.saliency_mode = false;
  Bitstream bs = Encode(img, nullptr, 6, cfg);
  CodecConfig short_ladder = cfg;
  short_ladder.lambda_ladder = {0.01, 0.1};
  try {
    Decode(bs, short_ladder);
    ADD_FAILURE();
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCorruptHeader);
  }
  bs.payload.resize(bs.payload.size() / 2);
  try {
    Decode(bs, cfg);
    ADD_FAILURE();
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTruncated);
  }
}

TEST(RdSweep, EightMonotonePointsAndCsv) {
  const ErpImage img = Scene(0);
  const SaliencyMap sal = SceneSaliency(0);
  const std::vector<RdPoint> pts = RdSweep(img, &sal, CodecConfig{});
  ASSERT_EQ(pts.size(), 8u);
  for (size_t i = 1; i < pts.size(); ++i) {
    EXPECT_GT(pts[i].bpp, pts[i - 1].bpp);
    EXPECT_GE(pts[i].ws_psnr, pts[i - 1].ws_psnr - 0.05);
    EXPECT_GE(pts[i].sal_psnr, pts[i - 1].sal_psnr - 0.05);
    EXPECT_GE(pts[i].ws_ssim, pts[i - 1].ws_ssim);
  }
  for (const RdPoint& p : pts) EXPECT_TRUE(p.loss.consistent());
  const std::string csv = FormatRdCsv({{"scene0", pts}});
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "image,lambda_index,lambda,bpp,ws_psnr,sal_psnr,ws_ssim");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
  EXPECT_EQ(ToRdCurve(pts, MetricId::kSalPsnr).size(), 8u);
}

TEST(RdSweep, IndependentOfThreadCount) {
  const ErpImage img = Scene(1);
  const SaliencyMap sal = SceneSaliency(1);
  ::setenv("ODIC_THREADS", "1", 1);
  const std::vector<RdPoint> a = RdSweep(img, &sal, CodecConfig{});
  ::setenv("ODIC_THREADS", "4", 1);
  const std::vector<RdPoint> b = RdSweep(img, &sal, CodecConfig{});
  ::unsetenv("ODIC_THREADS");
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].bpp, b[i].bpp);
    EXPECT_EQ(a[i].ws_psnr, b[i].ws_psnr);
    EXPECT_EQ(a[i].sal_psnr, b[i].sal_psnr);
  }
}

// --- frozen goldens ------------------------------------------------------------

TEST(Golden, EncoderReproducesCheckedInBitstreams) {
  CodecConfig on, off;
  off.saliency_mode = false;
  EXPECT_EQ(Encode(Scene(0), nullptr, 6, off).Serialize(),
            ReadFileBytes(kData + "/golden_scene0_off_l6.odic"));
  const SaliencyMap sal = SceneSaliency(0);
  EXPECT_EQ(Encode(Scene(0), &sal, 3, on).Serialize(),
            ReadFileBytes(kData + "/golden_scene0_on_l3.odic"));
}

TEST(Golden, DecoderReproducesCheckedInReconstructions) {
  const CodecConfig cfg;
  for (const char* name : {"golden_scene0_off_l6", "golden_scene0_on_l3"}) {
    const std::string base = kData + "/" + name;
    const ErpImage rec =
        Decode(Bitstream::Parse(ReadFileBytes(base + ".odic")), cfg);
    EXPECT_EQ(rec, LoadImage(base + ".png")) << name;
  }
}

TEST(Golden, RdPointValues) {
  // Frozen from the first run of this build at 512x256.
  const SaliencyMap sal = SceneSaliency(0);
  const RdPoint p = EvaluateRdPoint(Scene(0), &sal, 7, CodecConfig{});
  EXPECT_EQ(p.bpp, 0.806396484375);
  EXPECT_NEAR(p.ws_psnr, 33.82847376627226, 1e-9);
  EXPECT_NEAR(p.sal_psnr, 31.822883421814574, 1e-9);
  EXPECT_NEAR(p.ws_ssim, 0.9297795468651427, 1e-9);
}

}  // namespace
}  // namespace odic::codec

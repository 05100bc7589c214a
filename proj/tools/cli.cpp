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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "odic/augment.hpp"
#include "odic/bjontegaard.hpp"
#include "odic/codec/codec.hpp"
#include "odic/codec/rd_sweep.hpp"
#include "odic/image_io.hpp"
#include "odic/losses.hpp"
#include "odic/manifest.hpp"
#include "odic/parallel.hpp"
#include "odic/quality_metrics.hpp"
#include "odic/report.hpp"
#include "odic/saliency_mask.hpp"
#include "odic/saliency_metrics.hpp"
#include "odic/sphere_geom.hpp"
#include "odic/version.hpp"

namespace odic::cli {
namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

// Thrown for flag combinations that parse but make no sense together.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CodecFlags {
  std::string config;
  std::string saliency_mode;
  std::optional<double> base_step;

  void Add(CLI::App* app) {
    app->add_option("--config", config, "codec config file (key = value)");
    app->add_option("--saliency-mode", saliency_mode, "on|off override")
        ->check(CLI::IsMember({"on", "off"}));
    app->add_option("--base-step", base_step, "quantizer base step override");
  }

  codec::CodecConfig Build() const {
    codec::CodecConfig cfg;
    if (!config.empty()) cfg = codec::LoadCodecConfig(config);
    if (!saliency_mode.empty()) cfg.saliency_mode = saliency_mode == "on";
    if (base_step) cfg.base_step_constant = *base_step;
    cfg.Validate();
    return cfg;
  }
};

// The codec is 8-bit; other depths are rescaled on the way in.
ErpImage LoadCodecInput(const std::string& path) {
  ErpImage img = LoadImage(path);
  if (img.max_value != 255.0) img = Quantized(RescaledTo(img, 255.0));
  return img;
}

void WriteJson(const ordered_json& j, const std::string& path,
               std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    out << text;
  } else {
    WriteTextFile(path, text);
  }
}

std::string Stem(const std::string& path) {
  return fs::path(path).stem().string();
}

// --- project ---------------------------------------------------------------

struct ProjectCmd {
  std::string in, out, to;
  Index face_size = 0;
  Index width = 0;

  void Add(CLI::App& app) {
    auto* c = app.add_subcommand("project", "ERP <-> cubemap strip (6N x N)");
    c->add_option("--in", in, "input image")->required();
    c->add_option("--out", out, "output image")->required();
    c->add_option("--to", to, "target projection")
        ->required()
        ->check(CLI::IsMember({"cubemap", "erp"}));
    c->add_option("--face-size", face_size, "cube face size (default H/2)");
    c->add_option("--width", width, "ERP width for --to erp (default 4N)");
    c->callback([this] { Run(); });
  }

  void Run() const {
    const ErpImage img = LoadImage(in);
    if (to == "cubemap") {
      const Index n = face_size > 0 ? face_size : std::max<Index>(2, img.height() / 2);
      SaveImage(out, Quantized(CubemapToStrip(ErpToCubemap(img, n))));
    } else {
      const CubeFaceSet faces = StripToCubemap(img);
      const Index w = width > 0 ? width : 4 * faces.face_size();
      SaveImage(out, Quantized(CubemapToErp(faces, w, w / 2)));
    }
  }
};

// --- mask ------------------------------------------------------------------

struct MaskCmd {
  std::string saliency, out, mask_out, image, latent_out;
  double alpha = 1.0;
  Index factor = kDefaultDownsample;
  Index split = kDefaultPreservedChannels;
  std::ostream* stdout_ = nullptr;

  void Add(CLI::App& app, std::ostream& o) {
    stdout_ = &o;
    auto* c = app.add_subcommand(
        "mask", "saliency map -> pooled mask -> residual multipliers");
    c->add_option("--saliency", saliency, "saliency map (PNG/PGM)")->required();
    c->add_option("--out", out, "residual as F32R raster")->required();
    c->add_option("--alpha", alpha, "residual alpha (default 1)");
    c->add_option("--factor", factor, "downsample factor (default 16)");
    c->add_option("--split", split, "preserved latent channels (default 48)");
    c->add_option("--mask-out", mask_out, "pooled mask as 16-bit image");
    auto* img = c->add_option("--image", image,
                              "image whose block-DCT latent gets masked");
    c->add_option("--latent-out", latent_out, "masked latent as F32R raster")
        ->needs(img);
    c->callback([this] { Run(); });
  }

  void Run() const {
    const SaliencyMap raw = LoadSaliency(saliency);
    const DownsampledMask m =
        DownsampleMask(RescaleAndSigmoid(raw), factor);
    const MaskResidual r = ComputeMaskResidual(m, alpha);
    WriteFloatRaster(out, std::span<const Plane>(&r.values, 1));
    if (!mask_out.empty()) SaveSaliency(mask_out, SaliencyMap(m.values));
    ordered_json j;
    j["h"] = r.h();
    j["w"] = r.w();
    j["alpha"] = alpha;
    j["residual_min"] = r.values.minCoeff();
    j["residual_max"] = r.values.maxCoeff();
    if (!image.empty()) {
      codec::CodecConfig cfg;
      cfg.block_size = static_cast<int>(factor);
      const LatentTensor y = codec::Analysis(LoadCodecInput(image), cfg);
      if (y.h != r.h() || y.w != r.w())
        throw ArgumentError("image and saliency map sizes differ");
      const LatentTensor masked = ApplyLatentMask(y, r, split);
      if (!latent_out.empty()) {
        std::vector<Plane> planes;
        for (Index c = 0; c < masked.channels(); ++c)
          planes.emplace_back(masked.channel(c));
        WriteFloatRaster(latent_out, planes);
      }
      j["latent_channels"] = y.channels();
      j["split"] = split;
    }
    WriteJson(Stamped(j), "-", *stdout_);
  }
};

// --- encode / decode -------------------------------------------------------

struct EncodeCmd {
  std::string in, out, saliency;
  int lambda_index = 0;
  CodecFlags codec;
  std::optional<double> equator_prior;
  std::ostream* stdout_ = nullptr;

  void Add(CLI::App& app, std::ostream& o) {
    stdout_ = &o;
    auto* c = app.add_subcommand("encode", "compress an ERP image");
    c->add_option("--in", in, "input image")->required();
    c->add_option("--out", out, "output bitstream")->required();
    c->add_option("--lambda-index", lambda_index, "ladder index")->required();
    auto* sal = c->add_option("--saliency", saliency, "saliency map");
    c->add_option("--equator-prior", equator_prior,
                  "use a synthetic equator prior with this sigma (radians)")
        ->excludes(sal);
    codec.Add(c);
    c->callback([this] { Run(); });
  }

  void Run() const {
    const codec::CodecConfig cfg = codec.Build();
    const ErpImage img = LoadCodecInput(in);
    std::optional<SaliencyMap> sal;
    if (!saliency.empty()) sal = LoadSaliency(saliency);
    if (equator_prior)
      sal = EquatorPriorSaliency(img.width(), img.height(), *equator_prior);
    const codec::Bitstream bs =
        codec::Encode(img, sal ? &*sal : nullptr, lambda_index, cfg);
    const std::vector<std::uint8_t> bytes = bs.Serialize();
    WriteFileBytes(out, bytes);
    ordered_json j;
    j["bytes"] = bytes.size();
    j["bpp"] = BitsPerPixel(bytes.size(), img.width(), img.height());
    j["lambda_index"] = lambda_index;
    j["lambda"] = cfg.Lambda(lambda_index);
    j["saliency_mode"] = cfg.saliency_mode;
    WriteJson(Stamped(j), "-", *stdout_);
  }
};

struct DecodeCmd {
  std::string in, out;
  CodecFlags codec;

  void Add(CLI::App& app) {
    auto* c = app.add_subcommand("decode", "decompress a bitstream");
    c->add_option("--in", in, "input bitstream")->required();
    c->add_option("--out", out, "output image")->required();
    codec.Add(c);
    c->callback([this] { Run(); });
  }

  void Run() const {
    const codec::CodecConfig cfg = codec.Build();
    const std::vector<std::uint8_t> bytes = ReadFileBytes(in);
    SaveImage(out, codec::Decode(codec::Bitstream::Parse(bytes), cfg));
  }
};

// --- quality ---------------------------------------------------------------

struct QualityCmd {
  std::string ref, dist, saliency, json, loss_report, bitstream, weighting;
  std::optional<double> bpp, lambda;
  std::optional<int> lambda_index;
  CodecFlags codec;
  std::ostream* stdout_ = nullptr;

  void Add(CLI::App& app, std::ostream& o) {
    stdout_ = &o;
    auto* c = app.add_subcommand("quality", "WS-PSNR, SAL-PSNR, WS-SSIM");
    c->add_option("--ref", ref, "reference image")->required();
    c->add_option("--dist", dist, "distorted image")->required();
    c->add_option("--saliency", saliency, "saliency map for SAL-PSNR");
    c->add_option("--json", json, "metrics JSON (default stdout)");
    c->add_option("--sal-weighting", weighting,
                  "multiplicative (default) or additive")
        ->check(CLI::IsMember({"multiplicative", "additive"}));
    c->add_option("--loss-report", loss_report, "write LossReport JSON");
    auto* bs = c->add_option("--bitstream", bitstream, "bitstream for bpp");
    c->add_option("--bpp", bpp, "bits per pixel")->excludes(bs);
    auto* li = c->add_option("--lambda-index", lambda_index, "ladder index");
    c->add_option("--lambda", lambda, "lambda value")->excludes(li);
    codec.Add(c);
    c->callback([this] { Run(); });
  }

  void Run() const {
    if (!loss_report.empty() && !bitstream.size() && !bpp)
      throw UsageError("--loss-report needs --bitstream or --bpp");
    if (!loss_report.empty() && !lambda && !lambda_index && bitstream.empty())
      throw UsageError("--loss-report needs --lambda, --lambda-index or --bitstream");
    const ErpImage a = LoadImage(ref);
    ErpImage b = LoadImage(dist);
    if (b.max_value != a.max_value) b = RescaledTo(b, a.max_value);
    std::optional<SaliencyMap> sal;
    if (!saliency.empty()) sal = LoadSaliency(saliency);
    const SalWeighting mode = weighting == "additive"
                                  ? SalWeighting::kAdditive
                                  : SalWeighting::kMultiplicative;
    ordered_json j;
    j["ws_psnr"] = ToJson(WsPsnr(a, b));
    if (sal) j["sal_psnr"] = ToJson(SalPsnr(a, b, *sal, mode));
    j["ws_ssim"] = ToJson(WsSsim(a, b));
    WriteJson(Stamped(j), json, *stdout_);

    if (loss_report.empty()) return;
    const codec::CodecConfig cfg = codec.Build();
    double rate = bpp.value_or(0.0);
    std::optional<int> index = lambda_index;
    if (!bitstream.empty()) {
      const std::vector<std::uint8_t> bytes = ReadFileBytes(bitstream);
      const codec::Bitstream parsed = codec::Bitstream::Parse(bytes);
      rate = BitsPerPixel(bytes.size(), parsed.header.width,
                          parsed.header.height);
      if (!index && !lambda) index = parsed.header.lambda_index;
    }
    const double lam = lambda ? *lambda : cfg.Lambda(*index);
    const SaliencyMap weights =
        sal ? SigmoidWeights(*sal) : SaliencyMap(a.width(), a.height(), 1.0);
    const LossReport r = MakeLossReport(SalMse(a, b, weights), rate, lam);
    WriteJson(Stamped(ToJson(r)), loss_report, *stdout_);
  }
};

// --- saliency-metrics -------------------------------------------------------

struct SaliencyMetricsCmd {
  std::string pred, gt, fix, json, direction = "gt-pred";
  double epsilon = kKldEpsilon;
  std::ostream* stdout_ = nullptr;

  void Add(CLI::App& app, std::ostream& o) {
    stdout_ = &o;
    auto* c = app.add_subcommand("saliency-metrics", "CC, KLD, NSS, AUC-Judd");
    c->add_option("--pred", pred, "predicted saliency map")->required();
    c->add_option("--gt", gt, "ground-truth saliency map")->required();
    c->add_option("--fix", fix, "binary fixation map (nonzero = fixation)");
    c->add_option("--json", json, "output JSON (default stdout)");
    c->add_option("--kld-direction", direction, "gt-pred (default) or pred-gt")
        ->check(CLI::IsMember({"gt-pred", "pred-gt"}));
    c->add_option("--epsilon", epsilon, "KLD epsilon (default 1e-7)");
    c->callback([this] { Run(); });
  }

  void Run() const {
    const SaliencyMap p = LoadSaliency(pred);
    const SaliencyMap g = LoadSaliency(gt);
    ordered_json j;
    j["cc"] = Cc(p, g);
    j["kld"] = direction == "gt-pred" ? Kld(g, p, epsilon) : Kld(p, g, epsilon);
    j["kld_direction"] = direction;
    j["kld_epsilon"] = epsilon;
    if (!fix.empty()) {
      const FixationMap f = LoadFixations(fix);
      j["nss"] = Nss(p, f);
      j["auc_judd"] = AucJudd(p, f);
    }
    WriteJson(Stamped(j), json, *stdout_);
  }
};

// --- rd-sweep ---------------------------------------------------------------

struct RdSweepCmd {
  std::vector<std::string> inputs, saliency;
  std::string csv, plot, metric = "sal_psnr";
  std::optional<double> equator_prior;
  CodecFlags codec;
  std::ostream* stdout_ = nullptr;

  void Add(CLI::App& app, std::ostream& o) {
    stdout_ = &o;
    auto* c = app.add_subcommand("rd-sweep", "encode at every ladder point");
    c->add_option("--in", inputs, "input images")->required();
    auto* sal = c->add_option("--saliency", saliency,
                              "saliency maps, one per input, same order");
    c->add_option("--equator-prior", equator_prior,
                  "synthetic equator prior sigma (radians) for every input")
        ->excludes(sal);
    c->add_option("--csv", csv, "output CSV (default stdout)");
    c->add_option("--plot", plot, "SVG of the RD curves");
    c->add_option("--metric", metric, "metric for --plot")
        ->check(CLI::IsMember({"ws_psnr", "sal_psnr", "ws_ssim"}));
    codec.Add(c);
    c->callback([this] { Run(); });
  }

  void Run() const {
    if (!saliency.empty() && saliency.size() != inputs.size())
      throw UsageError("--saliency must be given once per --in");
    const codec::CodecConfig cfg = codec.Build();
    std::vector<std::pair<std::string, std::vector<codec::RdPoint>>> runs(
        inputs.size());
    for (size_t i = 0; i < inputs.size(); ++i) {
      const ErpImage img = LoadCodecInput(inputs[i]);
      std::optional<SaliencyMap> sal;
      if (!saliency.empty()) sal = LoadSaliency(saliency[i]);
      if (equator_prior)
        sal = EquatorPriorSaliency(img.width(), img.height(), *equator_prior);
      runs[i] = {Stem(inputs[i]),
                 codec::RdSweep(img, sal ? &*sal : nullptr, cfg)};
    }
    const std::string text = FormatRdCsv(runs);
    if (csv.empty()) {
      *stdout_ << text;
    } else {
      WriteTextFile(csv, text);
    }
    if (!plot.empty()) {
      const MetricId id = metric == "ws_psnr"   ? MetricId::kWsPsnr
                          : metric == "ws_ssim" ? MetricId::kWsSsim
                                                : MetricId::kSalPsnr;
      std::vector<PlotSeries> series;
      for (const auto& [name, pts] : runs)
        series.push_back({name, codec::ToRdCurve(pts, id).points()});
      EmitRdPlot(series, metric, plot);
    }
  }
};

// --- bdrate ----------------------------------------------------------------

struct BdRateCmd {
  std::string anchor, test, metric = "ws_psnr", image, json, plot;
  int degree = 3;
  std::ostream* stdout_ = nullptr;

  void Add(CLI::App& app, std::ostream& o) {
    stdout_ = &o;
    auto* c = app.add_subcommand("bdrate", "Bjontegaard BD-PSNR / BD-rate");
    c->add_option("--anchor", anchor, "anchor RD csv")->required();
    c->add_option("--test", test, "test RD csv")->required();
    c->add_option("--metric", metric, "quality column")
        ->check(CLI::IsMember({"ws_psnr", "sal_psnr"}));
    c->add_option("--image", image, "select rows of one image");
    c->add_option("--degree", degree, "polynomial degree (default 3)");
    c->add_option("--json", json, "output JSON (default stdout)");
    c->add_option("--plot", plot, "SVG of both curves");
    c->callback([this] { Run(); });
  }

  void Run() const {
    std::optional<std::string> sel;
    if (!image.empty()) sel = image;
    const RdCurve a = LoadRdCsv(anchor, metric, sel);
    const RdCurve t = LoadRdCsv(test, metric, sel);
    const BdResult r = Bjontegaard(a, t, BdOptions{degree});
    ordered_json j = ToJson(r);
    j["metric"] = metric;
    j["anchor"] = anchor;
    j["test"] = test;
    WriteJson(Stamped(j), json, *stdout_);
    if (!plot.empty())
      EmitRdPlot({{"anchor", a.points()}, {"test", t.points()}}, metric, plot);
  }
};

// --- augment ----------------------------------------------------------------

struct AugmentCmd {
  std::string manifest, out, resize = "2048x1024";
  std::uint64_t seed = 0;
  bool no_crop = false;

  void Add(CLI::App& app) {
    auto* c = app.add_subcommand(
        "augment", "flip, mirror and crop every manifest record");
    c->add_option("--manifest", manifest, "corpus manifest")->required();
    c->add_option("--out", out, "output directory")->required();
    c->add_option("--seed", seed, "base seed")->required();
    c->add_option("--resize", resize,
                  "WxH applied before cropping, or 'none' (default 2048x1024)");
    c->add_flag("--no-crop", no_crop, "skip random crops");
    c->callback([this] { Run(); });
  }

  std::optional<CropSize> ResizeTarget() const {
    if (resize == "none") return std::nullopt;
    const auto x = resize.find('x');
    try {
      if (x == std::string::npos) throw std::invalid_argument(resize);
      return CropSize{std::stol(resize.substr(0, x)),
                      std::stol(resize.substr(x + 1))};
    } catch (const std::exception&) {
      throw UsageError("--resize must be WxH or none");
    }
  }

  void Run() const {
    const std::optional<CropSize> target = ResizeTarget();
    const CorpusManifest m = LoadManifest(manifest);
    fs::create_directories(out);
    std::vector<std::vector<ManifestRecord>> produced(m.records.size());
    ParallelFor(m.records.size(), [&](size_t i) {
      const ManifestRecord& rec = m.records[i];
      ErpImage img = LoadImage(rec.image);
      SaliencyMap sal = LoadSaliency(rec.saliency);
      if (target) {
        img = Resize(img, target->width, target->height);
        sal = Resize(sal, target->width, target->height);
      }
      const std::string base =
          (fs::path(out) / (std::to_string(i) + "_" + Stem(rec.image))).string();
      auto emit = [&](const std::string& tag, const ErpImage& a,
                      const SaliencyMap& s) {
        ManifestRecord r{base + "_" + tag + ".png",
                         base + "_" + tag + "_sal.png", std::nullopt,
                         rec.split};
        SaveImage(r.image, Quantized(a));
        SaveSaliency(r.saliency, s);
        produced[i].push_back(std::move(r));
      };
      emit("orig", img, sal);
      emit("hflip", HFlip(img), HFlip(sal));
      emit("vmirror", VMirror(img), VMirror(sal));
      if (!no_crop) {
        // Alternate crop shapes so both orientations appear in the corpus.
        const std::uint64_t s = DeriveSeed(seed, i);
        const CropSize shape = (s & 1) ? kCropPortrait : kCropLandscape;
        const CropResult c = RandomCrop(img, sal, shape, s);
        emit("crop", c.image, c.saliency);
      }
    });
    CorpusManifest result;
    for (auto& recs : produced)
      for (auto& r : recs) result.records.push_back(std::move(r));
    WriteTextFile((fs::path(out) / "manifest.txt").string(),
                  FormatManifest(result));
  }
};

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"saliency-aware 360-degree image compression lab", "odic"};
  app.set_version_flag("--version", kVersionString);
  app.require_subcommand(1);

  ProjectCmd project;
  MaskCmd mask;
  EncodeCmd encode;
  DecodeCmd decode;
  QualityCmd quality;
  SaliencyMetricsCmd sal_metrics;
  RdSweepCmd rd_sweep;
  BdRateCmd bdrate;
  AugmentCmd augment;
  project.Add(app);
  mask.Add(app, out);
  encode.Add(app, out);
  decode.Add(app);
  quality.Add(app, out);
  sal_metrics.Add(app, out);
  rd_sweep.Add(app, out);
  bdrate.Add(app, out);
  augment.Add(app);

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(),
                                args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersionString << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace odic::cli

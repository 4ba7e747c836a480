#include "cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "neutro/axioms.hpp"
#include "neutro/error.hpp"
#include "neutro/imgio.hpp"
#include "neutro/segmenter.hpp"
#include "neutro/sweep.hpp"

namespace neutro::cli {

namespace {

std::string fixed(double value, int digits = 11) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, digits);
  return std::string(buf.data(), ptr);
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::EmptyImage:
    case Errc::InvalidImage:
    case Errc::ConstantImage:
    case Errc::NoCandidates:
    case Errc::BadMagic:
    case Errc::MalformedHeader:
    case Errc::TruncatedData:
    case Errc::MaxvalOutOfRange:
    case Errc::SampleOutOfRange:
    case Errc::MalformedCurve:
    case Errc::Io:
      return kInputError;
    default:
      return kInvariantViolation;
  }
}

// Runs `body`, turning library errors into diagnostics and exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariantViolation;
  }
}

struct Pipeline {
  GrayImage image;
  EntropyCurve curve;
};

Pipeline sweep_input(const RunConfig& config) {
  Pipeline p;
  p.image = read_pgm_file(config.input);
  p.curve = entropy_curve(build_histogram(p.image, config.q));
  return p;
}

ThresholdSet thresholds_of(const RunConfig& config, const EntropyCurve& curve) {
  ThresholdOptions options;
  options.max_thresholds = config.max_thresholds;
  options.min_relative_prominence = config.min_prominence;
  return find_thresholds(curve, options);
}

void report_thresholds(const ThresholdSet& set, int depth, std::ostream& out, std::ostream& err) {
  for (const double t : set.thresholds)
    out << "threshold " << fixed(t) << ' ' << std::lround(t * double(depth - 1)) << '\n';
  out << "fallback_used " << (set.fallback_used ? "true" : "false") << '\n';
  if (set.fallback_used)
    err << "warning: entropy curve has no interior local minimum; reporting its global minimum\n";
}

}  // namespace

int cmd_curve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Pipeline p = sweep_input(config);
    const std::string csv = write_curve(p.curve);
    const std::string& dest = config.curve_out.empty() ? config.out : config.curve_out;
    if (dest.empty()) {
      out << csv;
      err << "candidates " << p.curve.size() << '\n';
    } else {
      write_file(dest, csv);
      out << "candidates " << p.curve.size() << '\n';
    }
    return int(kOk);
  });
}

int cmd_threshold(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Pipeline p = sweep_input(config);
    if (!config.curve_out.empty()) write_file(config.curve_out, write_curve(p.curve));
    report_thresholds(thresholds_of(config, p.curve), p.image.depth(), out, err);
    return int(kOk);
  });
}

int cmd_segment(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.out.empty()) {
    err << "error: segment requires --out <path>\n";
    return kUsage;
  }
  return guarded(err, [&] {
    const Pipeline p = sweep_input(config);
    if (!config.curve_out.empty()) write_file(config.curve_out, write_curve(p.curve));
    const ThresholdSet set = thresholds_of(config, p.curve);
    const Segmentation seg = segment(p.image, set.thresholds);
    const GrayImage rendered = render(seg, p.image);
    write_file(config.out, write_pgm(rendered));

    report_thresholds(set, p.image.depth(), out, err);
    for (Eigen::Index r = 0; r < seg.region_count(); ++r) {
      out << "region " << r << " mean " << fixed(seg.region_values[r]) << " level "
          << std::lround(seg.region_values[r] * double(p.image.depth() - 1)) << " pixels "
          << seg.region_counts[r] << '\n';
    }
    return int(kOk);
  });
}

int cmd_axioms(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.samples < 1000)
      err << "note: " << config.samples << " samples per check; reduced confidence\n";
    bool all = true;
    for (const AxiomCheck& c : run_axioms(config.seed, config.samples)) {
      all = all && c.passed;
      out << (c.passed ? "PASS " : "FAIL ") << c.name << "  [" << c.description << "]  samples "
          << c.samples << "  worst " << c.worst_error << '\n';
    }
    return int(all ? kOk : kInvariantViolation);
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Gray-level image thresholding by neutrosophic Shannon entropy minimization",
               "neutrothresh"};
  app.require_subcommand(1);

  const auto add_sweep_options = [&](CLI::App* sub) {
    sub->add_option("input", config.input, "Input PGM (P2 or P5, maxval <= 255)")->required();
    sub->add_option("--q", config.q, "Threshold quantization step")
        ->check(CLI::Range(2, 1 << 16));
    sub->add_option("--curve-out", config.curve_out, "Write the entropy curve CSV here");
    sub->add_option("--out", config.out, "Output path");
  };
  const auto add_threshold_options = [&](CLI::App* sub) {
    sub->add_option("--max-thresholds", config.max_thresholds, "Upper bound on reported thresholds")
        ->check(CLI::PositiveNumber);
    sub->add_option("--min-prominence", config.min_prominence,
                    "Minimum depth of a reported minimum, as a fraction of the curve range")
        ->check(CLI::Range(0.0, 1.0));
  };

  CLI::App* curve = app.add_subcommand("curve", "Write the entropy curve of an image as CSV");
  add_sweep_options(curve);

  CLI::App* threshold = app.add_subcommand("threshold", "Report thresholds at entropy minima");
  add_sweep_options(threshold);
  add_threshold_options(threshold);

  CLI::App* seg = app.add_subcommand("segment", "Segment an image and write the rendered PGM");
  add_sweep_options(seg);
  add_threshold_options(seg);

  CLI::App* axioms = app.add_subcommand("axioms", "Run the sampled entropy axiom checks");
  axioms->add_option("--seed", config.seed, "Random seed");
  axioms->add_option("--samples", config.samples, "Samples per check")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? int(kOk) : int(kUsage);
  }

  if (curve->parsed()) return cmd_curve(config, out, err);
  if (threshold->parsed()) return cmd_threshold(config, out, err);
  if (seg->parsed()) return cmd_segment(config, out, err);
  return cmd_axioms(config, out, err);
}

}  // namespace neutro::cli

#pragma once

// Scenario files: a YAML document naming a base (catalog entry, custom
// lattice or elliptic curve data), a list of tasks and output options.
// Exact numbers are written as integers or "p/q" strings; decimals are
// rejected.

#include "fmcalc/charges.hpp"
#include "fmcalc/spectral.hpp"
#include "fmcalc/stability.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fmcalc {

enum class OutputFormat { Json, Csv, Text };
enum class CheckLevel { Fast, Full };

OutputFormat parse_output_format(const std::string& s);
CheckLevel parse_check_level(const std::string& s);
std::string to_string(OutputFormat f);
std::string to_string(CheckLevel c);

/// ch data for transform/stability tasks; CY3 or surface depending on the model.
using ChernInput = std::variant<ChernData3, ChernData2>;

struct TransformTask {
  std::vector<ChernInput> classes;
  Direction direction = Direction::Forward;
};

struct SpectralTask {
  SpectralInput input;
};

struct ScanTask {
  ScanRanges ranges;
  ScanTargets targets;
};

struct ChargesTask {
  std::optional<PrepotentialData> prepotential;
  std::vector<ChargeVector> charges;
  std::vector<KahlerPoint> points;
  bool tduality = false;
};

struct MonodromyTask {
  std::optional<PrepotentialData> prepotential;
  ChargeVector seed;
  std::vector<MonodromyGenerator> generators;
  int max_steps = 1;
};

struct TransformedLineInput {
  Rational n, c, s, a, b;
};

struct SpectralSurfaceInput {
  Rational n, ell, r;
};

struct StabilityTask {
  std::vector<ChernInput> classes;
  Class polarization;
  std::optional<Class> support;
  std::optional<TransformedLineInput> transformed;
  std::optional<SpectralSurfaceInput> spectral;
};

struct FactorizationTask {
  std::vector<ChernData3> classes;
};

using TaskSpec = std::variant<TransformTask, SpectralTask, ScanTask, ChargesTask, MonodromyTask, StabilityTask, FactorizationTask>;

struct Task {
  std::string type;
  int line = 0;
  TaskSpec spec;
};

struct Scenario {
  std::string name;
  /// Echo of the base definition for reports.
  std::string base_label;
  FibrationModel model;
  OutputFormat format = OutputFormat::Json;
  std::optional<CheckLevel> check_level;
  std::vector<Task> tasks;
};

/// Throws Error with kind SyntaxError, UnknownKey, DimensionMismatch,
/// BadFraction, UnknownCatalogEntry, ... and a "line L, key 'k'" location.
Scenario parse_scenario(const std::string& text);

/// Task types accepted in scenario files.
const std::vector<std::string>& task_types();

}  // namespace fmcalc

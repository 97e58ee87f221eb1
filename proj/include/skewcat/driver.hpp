#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skewcat/comonad_lift.hpp"
#include "skewcat/corpus.hpp"
#include "skewcat/dsl.hpp"
#include "skewcat/reflection.hpp"

namespace skewcat {

/// Declarations of a document, built and validated.
struct Environment {
  enum class Kind { category, map, fibred, functor, adjunction, skew, warping, comonad };

  struct MapEntry {
    IndexMap map;
    std::string codomain;
  };
  struct FibredEntry {
    FibredSet set;
    std::string category;
  };
  struct AdjunctionEntry {
    Adjunction<FinCategory, FinCategory> adjunction;
    std::string source;
  };
  struct SkewEntry {
    FinSkew structure;
    std::string category;
  };
  struct WarpingEntry {
    SkewWarping<FinCategory, FinCategory> warping;
    std::string skew;
    std::string kind;  // identity | evaluation
  };
  struct ComonadEntry {
    ActegoryComonad<FinCategory, FinCategory> comonad;
    std::string skew;
  };

  std::map<std::string, Kind> kinds;
  std::map<std::string, FinCatPtr> categories;
  std::map<std::string, MapEntry> maps;
  std::map<std::string, FibredEntry> fibred;
  std::map<std::string, FinFunctor> functors;
  std::map<std::string, AdjunctionEntry> adjunctions;
  std::map<std::string, SkewEntry> skews;
  std::map<std::string, WarpingEntry> warpings;
  std::map<std::string, ComonadEntry> comonads;
};

/// Builds every declaration and checks every directive's arguments.
/// Throws InputError (resolution, totality or structure) with the position
/// of the offending statement.
Environment resolve(const SpecDocument& doc);

struct RunConfig {
  std::uint64_t seed = 0;
  SamplingConfig sampling;
};

struct RunResult {
  Json report;
  std::vector<double> seconds;  // per directive; kept out of the report
  bool passed = true;
};

/// Executes the directives in order. A directive whose preconditions fail is
/// recorded as failed and the run continues. Each directive draws from its
/// own generator seeded by `cfg.seed`, so reports depend only on
/// (document, seed, sampling).
RunResult run(const SpecDocument& doc, const Environment& env, const RunConfig& cfg);

/// Category declaration reproducing the tables of `c`.
Statement category_statement(const std::string& name, const FinCategory& c);

/// Names of the built-in demos.
std::vector<std::string> demo_names();
/// Built-in documents; throws std::invalid_argument for an unknown name.
SpecDocument demo_document(const std::string& name);

constexpr int kReportVersion = 1;

}  // namespace skewcat

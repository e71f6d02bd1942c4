#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <mpfr.h>

#include "torsion/divpoly/divpoly.hpp"
#include "torsion/report.hpp"

namespace torsion::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kOperational = 3 };

struct Config {
  mpfr_prec_t precision_bits = 384;
  std::optional<std::filesystem::path> cache_dir;  // empty: caching disabled
  bool json = false;
};

// Caching through default_cache_dir() unless disabled or overridden.
Config make_config(mpfr_prec_t prec, const std::string& cache, bool no_cache, bool json);

DivPolyTable make_table(const Config& cfg, const std::string& model);

struct VerifyAllOptions {
  unsigned nmax = 20;           // short model
  unsigned generic_nmax = 10;   // generic model
  bool certificates = true;
};

// Every module's reproduction checks, merged in a fixed order. Contains no
// timings or cache statistics.
Report verify_all(const Config& cfg, const VerifyAllOptions& opt);

// Prints a report as text or JSON; returns kOk or kMismatch.
int emit(std::ostream& out, const Report& r, const Config& cfg);

}  // namespace torsion::cli

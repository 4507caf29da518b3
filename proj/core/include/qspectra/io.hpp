#pragma once

#include <string>
#include <utility>

#include "qspectra/toric.hpp"

namespace qspectra {

/// Parsed problem file: the coefficient group, the parameter matrix, and
/// the optional toric block. Everything is validated on construction.
struct ProblemFile {
  std::shared_ptr<const CoefficientGroup> group;
  BicharMatrix q;
  std::optional<GradingData> grading;
  std::optional<GBicharacter> toric_c;

  bool has_toric() const { return grading.has_value(); }
};

ProblemFile parse_problem(const std::string& text);
std::string serialize_problem(const ProblemFile& pf);

/// Second bicharacter for `refine`, read against an existing problem's
/// group and grading: {"c_matrix": [[...], ...]}.
GBicharacter parse_second_cocycle(const std::string& text, const ProblemFile& pf);

/// Point file {"coords": [...]}: entries are 0 (the zero coordinate) or
/// name->exponent maps. Names resolve against the declared group when
/// possible; otherwise against its square-root extension, where a free
/// base generator g contributes doubled exponents of sqrt_g.
Point parse_point(const std::string& text, const ProblemFile& pf);
std::string serialize_point(const Point& p);

/// Canonical result documents: deterministic key order, canonical scalar
/// display (sqrt_g^(2h+r) printed as g^h sqrt_g^r), two-space indent,
/// trailing newline. Byte-identical for identical inputs.
namespace resultdoc {

/// Echo of the invocation, rendered into the document envelope.
using Echo = std::vector<std::pair<std::string, std::string>>;

std::string validate(const Echo& echo, const ProblemFile& pf);
std::string strata(const Echo& echo, const std::vector<StratumSummary>& summaries,
                   const std::string& var_prefix);
std::string radical_basis(const Echo& echo, const std::vector<std::size_t>& stratum,
                          const std::vector<std::vector<Int>>& basis,
                          const std::string& var_prefix);
std::string cocycle(const Echo& echo, const Cocycle& c);
std::string center(const Echo& echo, const std::vector<std::size_t>& stratum,
                   const std::vector<std::vector<Int>>& basis,
                   const std::string& var_prefix);
std::string map_point(const Echo& echo, const IdealPresentation& I,
                      const std::string& var_prefix, bool torus_mode);
std::string fibre(const Echo& echo, bool same);
std::string orbit(const Echo& echo, const std::vector<Point>& points);
std::string refine(const Echo& echo, const RefineResult& r,
                   const std::string& var_prefix);
std::string grading_report(const Echo& echo, const GradingReport& rep);
std::string error_document(const std::string& kind, const std::string& message);

/// Parse and canonically re-serialize; the identity on canonical
/// documents. Throws validation_error on malformed input.
std::string reserialize(const std::string& text);

}  // namespace resultdoc

}  // namespace qspectra

#ifndef SPECTRA_IO_HPP
#define SPECTRA_IO_HPP

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "spectra/arrow_engine.hpp"
#include "spectra/finite_spectral.hpp"
#include "spectra/measures.hpp"
#include "spectra/representation.hpp"

namespace spectra::io {

using nlohmann::json;

// Rationals travel as strings "p/q" ("p" for integers). JSON integers are
// accepted on input; JSON floats are rejected as inexact.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const FiniteRationalSet& s);
FiniteRationalSet set_from_json(const json& j);
std::vector<Rational> rationals_from_json(const json& j);
// Elements may be symbolic ("a", "a-1") for the arrow engine.
std::vector<LinearForm> linear_forms_from_json(const json& j);

json to_json(const SpectralDecision& d);

// {"points": [...], "weights": [...]}; weights may be numbers or "p/q".
json to_json(const AtomicMeasure& mu);
AtomicMeasure atomic_measure_from_json(const json& j);

// {"scale": R, "digits": [...]}
json to_json(const IFSMeasure& mu);
IFSMeasure ifs_measure_from_json(const json& j);

// Complex entries are [re, im] pairs rounded to 16 significant digits;
// eigenvectors are stored row by row.
json to_json(const FiniteRep& rep);
FiniteRep finite_rep_from_json(const json& j);

json to_json(const WanderingReport& r);
json to_json(const FrameReport& r);
json to_json(const PermutationAction& p);
json to_json(const Session& s);

std::string gram_tsv(const Eigen::MatrixXcd& g);

// Reads and parses a JSON file. Throws InvalidInput("unreadable_file") or
// InvalidInput("bad_json").
json read_json_file(const std::filesystem::path& path);

double round_significant(double x, int digits);

}  // namespace spectra::io

#endif  // SPECTRA_IO_HPP

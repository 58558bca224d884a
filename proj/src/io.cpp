#include "spectra/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "spectra/errors.hpp"

namespace spectra::io {

namespace {

InvalidInput schema_error(const std::string& what) { return InvalidInput("bad_schema", what); }

json complex_to_json(Complex z) {
  return json::array({round_significant(z.real(), 16), round_significant(z.imag(), 16)});
}

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw schema_error("complex numbers are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw schema_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json mask_to_json(const Session& s, IndexMask m) {
  json out = json::array();
  for (const auto& e : s.elements_of(m)) out.push_back(e.str());
  return out;
}

}  // namespace

double round_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
  return std::strtod(buf, nullptr);
}

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(BigInt(j.get<std::uint64_t>()))
                                  : Rational(j.get<std::int64_t>());
  }
  if (j.is_number_float()) {
    throw InvalidInput("inexact_number", "floating-point value " + j.dump() + " where an exact \"p/q\" is required");
  }
  throw schema_error("expected a rational \"p/q\", got " + j.dump());
}

json to_json(const FiniteRationalSet& s) {
  json out = json::array();
  for (const auto& r : s) out.push_back(to_json(r));
  return out;
}

std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw schema_error("expected a JSON array of \"p/q\" strings");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

FiniteRationalSet set_from_json(const json& j) { return FiniteRationalSet(rationals_from_json(j)); }

std::vector<LinearForm> linear_forms_from_json(const json& j) {
  if (!j.is_array()) throw schema_error("expected a JSON array of elements");
  std::vector<LinearForm> out;
  for (const auto& e : j) {
    if (e.is_string()) {
      out.push_back(parse_linear_form(e.get<std::string>()));
    } else {
      out.emplace_back(rational_from_json(e));
    }
  }
  return out;
}

json to_json(const SpectralDecision& d) {
  json out;
  out["verdict"] = to_string(d.verdict);
  if (d.certificate) out["certificate"] = to_json(*d.certificate);
  if (d.reason) out["reason"] = to_string(*d.reason);
  return out;
}

json to_json(const AtomicMeasure& mu) {
  json pts = json::array(), ws = json::array();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    pts.push_back(to_json(mu.points()[i]));
    ws.push_back(round_significant(mu.weights()[i], 16));
  }
  return {{"points", pts}, {"weights", ws}};
}

AtomicMeasure atomic_measure_from_json(const json& j) {
  auto points = rationals_from_json(field(j, "points"));
  const json& wj = field(j, "weights");
  if (!wj.is_array()) throw schema_error("\"weights\" must be an array");
  std::vector<double> weights;
  for (const auto& w : wj) {
    if (w.is_number()) {
      weights.push_back(w.get<double>());
    } else {
      weights.push_back(rational_from_json(w).to_double());
    }
  }
  return AtomicMeasure(std::move(points), std::move(weights));
}

json to_json(const IFSMeasure& mu) {
  json digits = json::array();
  for (const auto& d : mu.digits) digits.push_back(to_json(d));
  return {{"scale", mu.scale}, {"digits", digits}};
}

IFSMeasure ifs_measure_from_json(const json& j) {
  const json& s = field(j, "scale");
  if (!s.is_number_integer()) throw schema_error("\"scale\" must be an integer");
  return IFSMeasure(s.get<std::int64_t>(), rationals_from_json(field(j, "digits")));
}

json to_json(const FiniteRep& rep) {
  json eig = json::array(), vecs = json::array(), v0 = json::array();
  const auto& v = rep.eigenvectors();
  for (const auto& g : rep.eigenvalues()) eig.push_back(to_json(g));
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < v.cols(); ++k) row.push_back(complex_to_json(v(i, k)));
    vecs.push_back(std::move(row));
  }
  for (Eigen::Index i = 0; i < rep.v0().size(); ++i) v0.push_back(complex_to_json(rep.v0()(i)));
  return {{"dim", rep.dim()}, {"eigenvalues", eig}, {"eigenvectors", vecs}, {"v0", v0}};
}

FiniteRep finite_rep_from_json(const json& j) {
  auto eig = rationals_from_json(field(j, "eigenvalues"));
  const auto n = Eigen::Index(eig.size());
  const json& rows = field(j, "eigenvectors");
  const json& v0j = field(j, "v0");
  if (!rows.is_array() || Eigen::Index(rows.size()) != n || !v0j.is_array() ||
      Eigen::Index(v0j.size()) != n) {
    throw schema_error("eigenvectors must be dim x dim and v0 must have dim entries");
  }
  Eigen::MatrixXcd v(n, n);
  Eigen::VectorXcd v0(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!rows[i].is_array() || Eigen::Index(rows[i].size()) != n) throw schema_error("ragged eigenvector matrix");
    for (Eigen::Index k = 0; k < n; ++k) v(i, k) = complex_from_json(rows[i][k]);
    v0(i) = complex_from_json(v0j[i]);
  }
  return FiniteRep(std::move(eig), std::move(v), std::move(v0));
}

json to_json(const WanderingReport& r) {
  return {{"is_orthonormal_family", r.is_orthonormal_family},
          {"max_offdiagonal", r.max_offdiagonal},
          {"min_norm", r.min_norm},
          {"max_norm", r.max_norm},
          {"spans_space", r.spans_space}};
}

json to_json(const FrameReport& r) { return {{"lower", r.lower}, {"upper", r.upper}}; }

json to_json(const PermutationAction& p) { return {{"move", p.move.str()}, {"sigma", p.sigma}}; }

json to_json(const Session& s) {
  json ground = json::array(), moves = json::array(), facts = json::array();
  for (const auto& g : s.ground_set()) ground.push_back(g.str());
  std::vector<LinearForm> sorted = s.moves();
  std::sort(sorted.begin(), sorted.end());
  for (const auto& m : sorted) moves.push_back(m.str());
  for (const auto& f : s.facts()) {
    facts.push_back({{"source", mask_to_json(s, f.source)},
                     {"move", f.move.str()},
                     {"target", mask_to_json(s, f.target)}});
  }
  return {{"ground_set", ground},     {"moves", moves},
          {"round_budget", s.round_budget()}, {"rounds_used", s.rounds_used()},
          {"fixpoint", s.reached_fixpoint()}, {"facts", facts}};
}

std::string gram_tsv(const Eigen::MatrixXcd& g) {
  std::ostringstream os;
  os.precision(17);
  os << "i\tj\tre\tim\n";
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      os << i << '\t' << j << '\t' << g(i, j).real() << '\t' << g(i, j).imag() << '\n';
  return os.str();
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("unreadable_file", "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("bad_json", path.string() + ": " + e.what());
  }
}

}  // namespace spectra::io

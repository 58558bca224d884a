#include "spectra/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "spectra/arrow_engine.hpp"
#include "spectra/errors.hpp"
#include "spectra/finite_spectral.hpp"
#include "spectra/io.hpp"
#include "spectra/measures.hpp"
#include "spectra/representation.hpp"

namespace spectra::cli {

namespace {

using io::json;

// Largest JP level whose full Gram matrix the CLI will build.
constexpr int kMaxGramLevel = 10;

CommandResult ok(json payload, std::string tsv = {}) {
  payload["status"] = to_string(Status::ok);
  return {Status::ok, std::move(payload), 0, std::move(tsv), {}};
}

CommandResult failure(Status status, const std::string& reason, const std::string& message,
                      int exit_code) {
  json payload = {{"status", to_string(status)}, {"reason", reason}, {"message", message}};
  return {status, std::move(payload), exit_code, {}, {}};
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) {
      throw InvalidInput("bad_expression", "empty entry in list \"" + text + "\"");
    }
    out.push_back(item);
  }
  if (out.empty()) throw InvalidInput("bad_expression", "empty list");
  return out;
}

std::vector<LinearForm> parse_moves(const std::string& text) {
  std::vector<LinearForm> out;
  for (const auto& s : split_list(text)) out.push_back(parse_linear_form(s));
  return out;
}

BigInt to_big(std::int64_t v) { return BigInt(v); }

// Per-subcommand option storage.
struct Options {
  std::int64_t n = 0;
  std::string a;
  std::string irrational;
  std::string set_a, set_b, set;
  std::int64_t qmax = 0;
  std::string span;
  std::string moves;
  std::string extract;
  int budget = 2;
  std::string measure, spectrum, lambda;
  std::int64_t p = 0, q = 0;
  int level = 0;
  std::string check;
  double eps = 1e-12;
  int samples = 37;
  bool floating = false;
  bool tsv = false;
};

CommandResult decide_line_set_cmd(const Options& o) {
  if (o.a.empty() == o.irrational.empty()) {
    throw InvalidInput("usage_error", "exactly one of --a and --irrational is required");
  }
  ElementInput a = o.a.empty() ? ElementInput(IrrationalTag{o.irrational}) : ElementInput(parse_rational(o.a));
  json payload = io::to_json(decide_line_set(o.n, a));
  payload["n"] = o.n;
  payload["a"] = o.a.empty() ? o.irrational : std::get<Rational>(a).str();
  return ok(std::move(payload));
}

CommandResult check_pair_cmd(const Options& o) {
  auto a = io::set_from_json(io::read_json_file(o.set_a));
  auto b = io::set_from_json(io::read_json_file(o.set_b));
  auto cert = certify_spectral_pair(a, b);
  return ok({{"set_a", io::to_json(a)},
             {"set_b", io::to_json(b)},
             {"spectral_pair", cert.spectral},
             {"exact", cert.exact},
             {"max_order", cert.max_order.str()}});
}

CommandResult find_spectrum_cmd(const Options& o) {
  auto a = io::set_from_json(io::read_json_file(o.set));
  Rational span = parse_rational(o.span);
  auto found = search_spectrum(a, o.qmax, span);
  if (!found) {
    CommandResult r = failure(Status::not_found, "not_found_within_bounds",
                              "no spectrum with denominators <= " + std::to_string(o.qmax) +
                                  " in [0, " + span.str() + ")",
                              0);
    r.payload["set"] = io::to_json(a);
    return r;
  }
  return ok({{"set", io::to_json(a)},
             {"spectrum", io::to_json(*found)},
             {"spectral_pair", is_spectral_pair(a, *found)},
             {"qmax", o.qmax},
             {"span", span.str()}});
}

CommandResult arrow_close_cmd(const Options& o) {
  auto ground = io::linear_forms_from_json(io::read_json_file(o.set));
  auto moves = o.moves.empty() ? pairwise_differences(ground) : parse_moves(o.moves);
  Session session = close(new_session(ground, moves, o.budget));

  std::vector<LinearForm> wanted = o.extract.empty() ? session.generators() : parse_moves(o.extract);
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  json perms = json::array();
  std::vector<PermutationAction> nontrivial;
  for (const auto& m : wanted) {
    if (!session.move_index(m)) continue;
    if (auto p = extract_permutation(session, m)) {
      perms.push_back(io::to_json(*p));
      if (!p->is_identity() && !p->move.is_zero()) nontrivial.push_back(*p);
    }
  }
  json obstructions = json::array();
  for (std::size_t i = 0; i < nontrivial.size(); ++i) {
    for (std::size_t j = i + 1; j < nontrivial.size(); ++j) {
      obstructions.push_back({{"moves", {nontrivial[i].move.str(), nontrivial[j].move.str()}},
                              {"result", to_string(rationality_obstruction(nontrivial[i], nontrivial[j]))}});
    }
  }
  json payload = io::to_json(session);
  payload["permutations"] = std::move(perms);
  payload["obstructions"] = std::move(obstructions);
  return ok(std::move(payload));
}

CommandResult rep_roundtrip_cmd(const Options& o) {
  auto mu = io::atomic_measure_from_json(io::read_json_file(o.measure));
  FiniteRep rep = multiplication_representation(mu);
  AtomicMeasure back = measure_from_representation(rep);

  bool support_matches = back.points() == mu.points();
  double weight_error = 0.0;
  if (support_matches) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
      weight_error = std::max(weight_error, std::abs(back.weights()[i] - mu.weights()[i]));
    }
  }
  json payload = {{"representation", io::to_json(rep)},
                  {"measure", io::to_json(back)},
                  {"support_matches", support_matches},
                  {"max_weight_error", support_matches ? json(weight_error) : json(nullptr)}};

  if (!o.spectrum.empty()) {
    auto lambda = io::set_from_json(io::read_json_file(o.spectrum));
    double corr_error = 0.0;
    for (const auto& x : lambda) {
      for (const auto& y : lambda) {
        Rational xi = y - x;
        corr_error = std::max(corr_error, std::abs(correlation(rep, xi) - atomic_transform(mu, xi)));
      }
    }
    payload["spectrum"] = io::to_json(lambda);
    payload["wandering"] = io::to_json(is_wandering(rep, lambda, 1e-10));
    payload["spectral_pair"] = lambda.size() == mu.size() && is_spectral_pair(mu.support(), lambda);
    payload["max_correlation_error"] = corr_error;
  }
  return ok(std::move(payload));
}

CommandResult perm_rep_cmd(const Options& o) {
  PermutationRep pr = permutation_representation(o.n, to_big(o.p), to_big(o.q));
  AtomicMeasure mu = measure_from_representation(pr.rep);
  FiniteRationalSet a = line_set(o.n, Rational(to_big(o.p), to_big(o.q)));
  return ok({{"n", o.n},
             {"p", pr.p.str()},
             {"q", pr.q.str()},
             {"k", pr.k.str()},
             {"l", pr.l.str()},
             {"generator_shift", pr.generator_shift},
             {"u_one", pr.permutation_at(pr.q)},
             {"u_one_shift", pr.shift_at(pr.q)},
             {"u_a", pr.permutation_at(pr.p)},
             {"u_a_shift", pr.shift_at(pr.p)},
             {"representation", io::to_json(pr.rep)},
             {"measure", io::to_json(mu)},
             {"set", io::to_json(a)},
             {"wandering", io::to_json(is_wandering(pr.rep, a, 1e-10))},
             {"spectral_pair", is_spectral_pair(a, mu.support())}});
}

CommandResult cantor_cmd(const Options& o) {
  const IFSMeasure mu = IFSMeasure::cantor4();
  const auto lambda_int = jp_spectrum(o.level);
  const auto lambda = to_rationals(lambda_int);
  const ZeroDetection mode = o.floating ? ZeroDetection::floating : ZeroDetection::symbolic;

  if (o.check == "orthogonality") {
    if (o.level > kMaxGramLevel) {
      throw InvalidInput("bad_level", "orthogonality check supports levels up to " +
                                          std::to_string(kMaxGramLevel));
    }
    Eigen::MatrixXcd g = gram_matrix(mu, lambda, o.eps, mode);
    double max_off = 0.0, max_diag = 0.0;
    std::int64_t zeros = 0, off = 0;
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      for (Eigen::Index j = 0; j < g.cols(); ++j) {
        if (i == j) {
          max_diag = std::max(max_diag, std::abs(g(i, j) - Complex(1.0)));
          continue;
        }
        ++off;
        if (g(i, j) == Complex(0.0)) ++zeros;
        max_off = std::max(max_off, std::abs(g(i, j)));
      }
    }
    json payload = {{"check", o.check},
                    {"level", o.level},
                    {"lambda", lambda_int},
                    {"eps", o.eps},
                    {"mode", o.floating ? "floating" : "symbolic"},
                    {"max_offdiag", max_off},
                    {"max_diag_error", max_diag},
                    {"offdiag_entries", off},
                    {"exact_zero_entries", zeros}};
    return ok(std::move(payload), o.tsv ? io::gram_tsv(g) : std::string());
  }

  if (o.samples < 1) throw InvalidInput("bad_samples", "--samples must be positive");
  json samples = json::array();
  std::ostringstream tsv;
  tsv.precision(17);
  tsv << "t\tq\n";
  double min_q = 0.0, max_q = 0.0;
  for (int k = 0; k < o.samples; ++k) {
    Rational t(BigInt(k), BigInt(o.samples));
    double q = completeness_defect(mu, lambda, t, o.eps);
    if (k == 0 || q < min_q) min_q = q;
    if (k == 0 || q > max_q) max_q = q;
    samples.push_back({{"t", t.str()}, {"q", q}});
    tsv << t.str() << '\t' << q << '\n';
  }
  json payload = {{"check", o.check},   {"level", o.level},  {"lambda_size", lambda_int.size()},
                  {"eps", o.eps},       {"samples", samples}, {"min_q", min_q},
                  {"max_q", max_q}};
  return ok(std::move(payload), o.tsv ? tsv.str() : std::string());
}

CommandResult frame_bounds_cmd(const Options& o) {
  auto mu = io::atomic_measure_from_json(io::read_json_file(o.measure));
  auto lambda = io::rationals_from_json(io::read_json_file(o.lambda));
  json payload = io::to_json(frame_bounds(mu, lambda));
  payload["lambda_size"] = lambda.size();
  payload["measure_size"] = mu.size();
  return ok(std::move(payload));
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::invalid_input: return "invalid_input";
    case Status::inconsistent: return "inconsistent";
    case Status::not_found: return "not_found";
  }
  return "unknown";
}

std::string CommandResult::render() const {
  if (payload.is_null()) return usage;
  if (!tsv.empty()) return tsv;
  return payload.dump(2) + "\n";
}

CommandResult run(const std::vector<std::string>& argv) {
  Options o;
  CLI::App app{"Spectra and frame spectra of finite and self-similar measures", "spectra"};
  app.require_subcommand(1);

  std::map<CLI::App*, std::function<CommandResult(const Options&)>> handlers;

  auto* dls = app.add_subcommand("decide-line-set", "Decide spectrality of {0, 1, ..., n-2, a}");
  dls->add_option("--n", o.n, "Size of the set")->required();
  auto* a_opt = dls->add_option("--a", o.a, "Last element as p/q");
  dls->add_option("--irrational", o.irrational, "Label for an irrational last element")->excludes(a_opt);
  handlers[dls] = decide_line_set_cmd;

  auto* cp = app.add_subcommand("check-pair", "Certify (A, B) as a spectral pair");
  cp->add_option("--set-a", o.set_a, "JSON file with A")->required();
  cp->add_option("--set-b", o.set_b, "JSON file with B")->required();
  handlers[cp] = check_pair_cmd;

  auto* fs = app.add_subcommand("find-spectrum", "Bounded search for a spectrum containing 0");
  fs->add_option("--set", o.set, "JSON file with A")->required();
  fs->add_option("--qmax", o.qmax, "Largest denominator")->required();
  fs->add_option("--span", o.span, "Search window [0, span) as p/q")->required();
  handlers[fs] = find_spectrum_cmd;

  auto* ac = app.add_subcommand("arrow-close", "Close a subspace-mapping deduction session");
  ac->add_option("--set", o.set, "JSON file with the ground set (symbols allowed)")->required();
  ac->add_option("--moves", o.moves, "Comma-separated moves (default: pairwise differences)");
  ac->add_option("--budget", o.budget, "Rounds of move admission")->capture_default_str();
  ac->add_option("--extract", o.extract, "Comma-separated moves to extract permutations at");
  handlers[ac] = arrow_close_cmd;

  auto* rr = app.add_subcommand("rep-roundtrip", "Measure -> representation -> measure");
  rr->add_option("--measure", o.measure, "JSON file with an atomic measure")->required();
  rr->add_option("--spectrum", o.spectrum, "JSON file with a candidate spectrum");
  handlers[rr] = rep_roundtrip_cmd;

  auto* pr = app.add_subcommand("perm-rep", "Cyclic permutation representation for n | p + q");
  pr->add_option("--n", o.n)->required();
  pr->add_option("--p", o.p)->required();
  pr->add_option("--q", o.q)->required();
  handlers[pr] = perm_rep_cmd;

  auto* ca = app.add_subcommand("cantor", "Checks on the quarter Cantor measure");
  ca->add_option("--level", o.level, "Digits in the spectrum approximation")->required();
  ca->add_option("--check", o.check)->required()->check(CLI::IsMember({"orthogonality", "completeness"}));
  ca->add_option("--eps", o.eps, "Truncation error budget")->capture_default_str();
  ca->add_option("--samples", o.samples, "Completeness sample points k/samples")->capture_default_str();
  ca->add_flag("--floating", o.floating, "Plain floating products, no exact zero detection");
  ca->add_flag("--tsv", o.tsv, "Tabular output");
  handlers[ca] = cantor_cmd;

  auto* fb = app.add_subcommand("frame-bounds", "Frame bounds of exponentials on an atomic measure");
  fb->add_option("--measure", o.measure, "JSON file with an atomic measure")->required();
  fb->add_option("--lambda", o.lambda, "JSON file with the frequencies")->required();
  handlers[fb] = frame_bounds_cmd;

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    if (code == 0) return {Status::ok, json(), 0, {}, out.str()};
    CommandResult r = failure(Status::invalid_input, "usage_error", e.what(), 2);
    r.usage = err.str();
    return r;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    return handlers.at(chosen)(o);
  } catch (const InvalidInput& e) {
    const int code = e.reason() == "usage_error" ? 2 : 1;
    return failure(Status::invalid_input, e.reason(), e.what(), code);
  } catch (const Inconsistent& e) {
    CommandResult r = failure(Status::inconsistent, "contradiction", e.what(), 1);
    r.payload["trace"] = e.trace();
    return r;
  }
}

}  // namespace spectra::cli

// mpack: multiple-packing construction, verification and bound tooling.
//
// Subcommands:
//   bounds     evaluate a bound family over a noise-to-signal grid (CSV)
//   construct  random coding with expurgation; emits a code file + report
//   verify     check a code file against packing parameters (exit 0/1/2)
//   tail       bad-list tail probability, exact chi-square or Monte Carlo
//   identity   double-counting and radius-form identities on a code
//
// Reports are flat JSON documents on standard output; all randomness is
// seeded, so reruns are byte-identical.

#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mpack/bounds.hpp"
#include "mpack/covering.hpp"
#include "mpack/ensembles.hpp"
#include "mpack/expurgation.hpp"
#include "mpack/geometry.hpp"
#include "mpack/io.hpp"
#include "mpack/montecarlo.hpp"

namespace {

using json = nlohmann::ordered_json;

// null for non-finite values (JSON has no inf), the value otherwise
json num_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

std::vector<double> parse_grid(const std::string& s) {
  double lo = 0.0, hi = 0.0, step = 0.0;
  if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3)
    throw std::invalid_argument("--grid expects lo:hi:step");
  if (!(step > 0.0) || hi < lo) throw std::invalid_argument("--grid: need step > 0 and hi >= lo");
  std::vector<double> grid;
  for (std::size_t k = 0;; ++k) {
    double x = lo + static_cast<double>(k) * step;
    if (x > hi + step * 1e-9) break;
    if (std::fabs(x - hi) < step * 1e-9) x = hi;  // snap the endpoint
    grid.push_back(x);
    if (grid.size() > 2'000'000) throw std::invalid_argument("--grid: too many points");
  }
  return grid;
}

// ---- bounds -----------------------------------------------------------------

int cmd_bounds(int L, bool unbounded, const std::string& grid_spec, bool bits,
               const std::string& out_path) {
  const std::vector<double> grid = parse_grid(grid_spec);
  const auto names = mpack::family_bounds(!unbounded);
  std::vector<mpack::BoundCurve> curves;
  curves.reserve(names.size());
  for (auto name : names) curves.push_back(mpack::eval_curve(name, L, grid));

  // ordering invariants, checked before anything is written: every lower
  // bound stays below its upper bound, and the spherical bound below its
  // improved version
  auto curve_of = [&](mpack::BoundName n) -> const mpack::BoundCurve& {
    for (const auto& c : curves)
      if (c.name == n) return c;
    throw std::logic_error("curve missing");
  };
  const auto& ub = curve_of(unbounded ? mpack::BoundName::ub_eb_unbdd : mpack::BoundName::ub_eb);
  for (const auto& c : curves) {
    const bool lower = to_string(c.name).rfind("lb_", 0) == 0;
    if (!lower) continue;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double a = c.values[i], b = ub.values[i];
      if (std::isfinite(a) && std::isfinite(b) && a > b + 1e-12)
        throw std::runtime_error("ordering violation: " + to_string(c.name) + " > " +
                                 to_string(ub.name) + " at x=" + std::to_string(grid[i]));
    }
  }
  if (!unbounded) {
    const auto& sph = curve_of(mpack::BoundName::lb_spherical);
    const auto& imp = curve_of(mpack::BoundName::lb_spherical_improved);
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (std::isfinite(sph.values[i]) && std::isfinite(imp.values[i]) &&
          sph.values[i] > imp.values[i] + 1e-12)
        throw std::runtime_error("ordering violation: lb_spherical > lb_spherical_improved");
  }

  const std::string csv = mpack::curves_to_csv(curves, bits);
  if (out_path.empty()) {
    std::cout << csv;
    return 0;
  }
  mpack::write_text(out_path, csv);

  // crossovers between lower bounds, located by sign change + linear
  // interpolation; informational (no authoritative values exist for them)
  json crossings = json::array();
  for (std::size_t a = 0; a < curves.size(); ++a)
    for (std::size_t b = a + 1; b < curves.size(); ++b) {
      const bool la = to_string(curves[a].name).rfind("lb_", 0) == 0;
      const bool lb = to_string(curves[b].name).rfind("lb_", 0) == 0;
      if (!la || !lb) continue;
      for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double d0 = curves[a].values[i] - curves[b].values[i];
        const double d1 = curves[a].values[i + 1] - curves[b].values[i + 1];
        if (!std::isfinite(d0) || !std::isfinite(d1)) continue;
        if ((d0 > 0.0 && d1 < 0.0) || (d0 < 0.0 && d1 > 0.0)) {
          const double t = d0 / (d0 - d1);
          crossings.push_back({{"between", to_string(curves[a].name) + "/" +
                                               to_string(curves[b].name)},
                               {"x", grid[i] + t * (grid[i + 1] - grid[i])}});
        }
      }
    }

  json rep;
  rep["family"] = unbounded ? "unbounded" : "bounded";
  rep["L"] = L;
  rep["rows"] = grid.size();
  rep["units"] = bits ? "bits" : "nats";
  rep["out"] = out_path;
  rep["crossovers"] = crossings;
  std::cout << rep.dump(2) << '\n';
  return 0;
}

// ---- construct ---------------------------------------------------------------

mpack::EnsembleSpec make_spec(const std::string& ensemble, int n, double P,
                              std::optional<double> delta, std::uint64_t seed) {
  mpack::EnsembleSpec spec;
  spec.kind = mpack::ensemble_from_string(ensemble);
  spec.n = n;
  spec.power = P;
  spec.shell_delta = delta;
  spec.seed = seed;
  return spec;
}

int cmd_construct(const std::string& ensemble, int n, int L, double P, double N,
                  const std::string& notion, double rate, std::optional<double> delta,
                  std::uint64_t seed, std::size_t mcap, const std::string& out_path) {
  const auto spec = make_spec(ensemble, n, P, delta, seed);

  mpack::PackingParams params;
  params.n = n;
  params.L = L;
  params.N = N;
  params.notion = mpack::notion_from_string(notion);
  // bounded ensembles induce a hard power constraint on the packing; the
  // Gaussian ensemble is unbounded, so no norm filter applies
  if (spec.kind != mpack::EnsembleKind::gaussian) params.P = P;

  auto [code, rep] = mpack::construct(spec, params, rate, mcap);

  json doc;
  doc["ensemble"] = ensemble;
  doc["n"] = n;
  doc["L"] = L;
  doc["P"] = P;
  doc["N"] = N;
  doc["notion"] = to_string(params.notion);
  doc["rate_requested"] = rate;
  doc["seed"] = seed;
  doc["initial_size"] = rep.initial_size;
  doc["power_violations"] = rep.power_violations;
  doc["bad_lists_found"] = rep.bad_lists_found;
  doc["points_removed"] = rep.points_removed;
  doc["final_size"] = rep.final_size;
  doc["verified"] = rep.verified;
  doc["rate_nats"] = num_or_null(rep.rate_nats);
  if (out_path.empty()) {
    doc["code"] = mpack::serialize_code(code);
  } else {
    mpack::save_code(out_path, code);
    doc["out"] = out_path;
  }
  std::cout << doc.dump(2) << '\n';
  return rep.verified ? 0 : 1;
}

// ---- verify -------------------------------------------------------------------

int cmd_verify(const std::string& path, int L, double N, std::optional<double> P,
               const std::string& notion) {
  const mpack::Code code = mpack::load_code(path);
  mpack::PackingParams params;
  params.n = code.n;
  params.L = L;
  params.N = N;
  params.P = P;
  params.notion = mpack::notion_from_string(notion);

  const auto res = mpack::verify_packing(code, params);
  json doc;
  doc["file"] = path;
  doc["n"] = code.n;
  doc["M"] = code.size();
  doc["L"] = L;
  doc["N"] = N;
  doc["notion"] = to_string(params.notion);
  doc["nN"] = static_cast<double>(code.n) * N;
  doc["ok"] = res.ok && res.norm_violations.empty();
  doc["norm_violations"] = res.norm_violations;
  if (res.witness) {
    doc["witness"] = {{"indices", res.witness->indices},
                      {"radius_sq", res.witness->radius_sq}};
  }
  std::cout << doc.dump(2) << '\n';
  return (res.ok && res.norm_violations.empty()) ? 0 : 1;
}

// ---- tail --------------------------------------------------------------------

int cmd_tail(const std::string& ensemble, int n, int L, double P, double N,
             std::optional<double> delta, bool exact, std::uint64_t samples,
             std::uint64_t seed, int workers) {
  json doc;
  doc["ensemble"] = ensemble;
  doc["n"] = n;
  doc["L"] = L;
  doc["P"] = P;
  doc["N"] = N;
  doc["nN"] = static_cast<double>(n) * N;
  if (exact) {
    if (mpack::ensemble_from_string(ensemble) != mpack::EnsembleKind::gaussian)
      throw std::invalid_argument("--exact is only available for the gaussian ensemble");
    const double p = mpack::gaussian_tail_exact(n, L, P, N);
    doc["exact"] = true;
    doc["p"] = p;
    doc["neg_log_rate"] = num_or_null(p > 0.0 ? -std::log(p) / n : INFINITY);
  } else {
    const auto spec = make_spec(ensemble, n, P, delta, seed);
    const auto est = mpack::mc_tail(spec, L, static_cast<double>(n) * N, samples, seed, workers);
    doc["exact"] = false;
    doc["samples"] = est.samples;
    doc["seed"] = seed;
    doc["p"] = est.p_hat;
    doc["std_err"] = est.std_err;
    doc["neg_log_rate"] = num_or_null(est.neg_log_rate);
  }
  std::cout << doc.dump(2) << '\n';
  return 0;
}

// ---- identity -----------------------------------------------------------------

int cmd_identity(const std::string& in_path, const std::string& ensemble, int n, double P,
                 std::size_t M, int L, std::uint64_t seed) {
  mpack::Code code = in_path.empty()
                         ? mpack::sample(make_spec(ensemble, n, P, std::nullopt, seed), M)
                         : mpack::load_code(in_path);

  const auto [lhs, rhs] = mpack::cap_code_identity(code, L);
  const bool id_ok = std::fabs(lhs - rhs) <= 1e-9 * (1.0 + std::fabs(rhs));

  // the four average-radius forms and the radius chain on the whole code
  const auto& pts = code.points;
  const double f_def = mpack::avg_sq_radius(pts, mpack::AvgForm::definition);
  const double f_nmc = mpack::avg_sq_radius(pts, mpack::AvgForm::norm_minus_centroid);
  const double f_pmc = mpack::avg_sq_radius(pts, mpack::AvgForm::power_minus_correlation);
  const double f_pw = mpack::avg_sq_radius(pts, mpack::AvgForm::pairwise);
  const double spread = std::max({std::fabs(f_def - f_nmc), std::fabs(f_def - f_pmc),
                                  std::fabs(f_def - f_pw)});
  const double cheb = mpack::cheb_sq_radius(pts).radius_sq;
  const double mx = mpack::max_sq_radius(pts);
  const double slack = 1e-9 * (1.0 + mx);
  const bool chain_ok = f_def <= cheb + slack && cheb <= mx + slack;

  json doc;
  doc["source"] = in_path.empty() ? "sampled" : in_path;
  doc["n"] = code.n;
  doc["M"] = code.size();
  doc["L"] = L;
  doc["subset_average"] = {{"lhs", lhs}, {"rhs", rhs}, {"ok", id_ok}};
  doc["avg_forms"] = {{"definition", f_def},
                      {"norm_minus_centroid", f_nmc},
                      {"power_minus_correlation", f_pmc},
                      {"pairwise", f_pw},
                      {"max_spread", spread}};
  doc["radius_chain"] = {{"avg", f_def}, {"cheb", cheb}, {"max", mx}, {"ok", chain_ok}};
  std::cout << doc.dump(2) << '\n';
  return (id_ok && chain_ok) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiple packings: bounds, constructions, verification"};
  app.require_subcommand(1);

  // bounds
  auto* b = app.add_subcommand("bounds", "evaluate a bound family over a grid (CSV)");
  int b_L = 2;
  std::string b_family = "bounded", b_grid, b_units = "nats", b_out;
  b->add_option("--L", b_L, "list size parameter L (packings are (L-1)-list decodable)");
  b->add_option("--family", b_family, "bounded | unbounded")
      ->check(CLI::IsMember({"bounded", "unbounded"}));
  b->add_option("--grid", b_grid, "abscissa grid lo:hi:step (N/P bounded, N unbounded)")
      ->required();
  b->add_option("--units", b_units, "nats | bits")->check(CLI::IsMember({"nats", "bits"}));
  b->add_option("--out", b_out, "CSV output path (default: standard output)");

  // construct
  auto* c = app.add_subcommand("construct", "random coding with expurgation");
  std::string c_ens = "sphere", c_notion = "avg", c_out;
  int c_n = 0, c_L = 2;
  double c_P = 1.0, c_N = 0.0, c_rate = 0.0;
  std::optional<double> c_delta;
  std::uint64_t c_seed = 0;
  std::size_t c_mcap = std::size_t{1} << 14;
  c->add_option("--ensemble", c_ens, "gaussian | sphere | ball | trunc-gaussian");
  c->add_option("--n", c_n, "dimension")->required();
  c->add_option("--L", c_L, "list size parameter");
  c->add_option("--P", c_P, "power per dimension");
  c->add_option("--N", c_N, "noise power per dimension")->required();
  c->add_option("--rate", c_rate, "target rate in nats per dimension");
  c->add_option("--notion", c_notion, "cheb | avg");
  c->add_option("--delta", c_delta, "shell width for trunc-gaussian");
  c->add_option("--seed", c_seed, "RNG seed");
  c->add_option("--mcap", c_mcap, "hard cap on the sampled code size");
  c->add_option("--out", c_out, "code file path (default: code inlined in the report)");

  // verify
  auto* v = app.add_subcommand("verify", "verify a code file as a multiple packing");
  std::string v_file, v_notion = "avg";
  int v_L = 2;
  double v_N = 0.0;
  std::optional<double> v_P;
  v->add_option("file", v_file, "code file (MPK1)")->required();
  v->add_option("--L", v_L, "list size parameter");
  v->add_option("--N", v_N, "noise power per dimension")->required();
  v->add_option("--P", v_P, "power per dimension (enables the norm check)");
  v->add_option("--notion", v_notion, "cheb | avg");

  // tail
  auto* t = app.add_subcommand("tail", "bad-list tail probability");
  std::string t_ens = "gaussian";
  int t_n = 0, t_L = 2, t_workers = 1;
  double t_P = 1.0, t_N = 0.0;
  std::optional<double> t_delta;
  bool t_exact = false;
  std::uint64_t t_samples = 100000, t_seed = 0;
  t->add_option("--ensemble", t_ens, "gaussian | sphere | ball | trunc-gaussian");
  t->add_option("--n", t_n, "dimension")->required();
  t->add_option("--L", t_L, "list size parameter");
  t->add_option("--P", t_P, "power per dimension");
  t->add_option("--N", t_N, "noise power per dimension")->required();
  t->add_option("--delta", t_delta, "shell width for trunc-gaussian");
  t->add_flag("--exact", t_exact, "exact chi-square value (gaussian only)");
  t->add_option("--samples", t_samples, "Monte Carlo sample count");
  t->add_option("--seed", t_seed, "RNG seed");
  t->add_option("--workers", t_workers, "worker threads (result is worker-independent)");

  // identity
  auto* i = app.add_subcommand("identity", "double-counting identity on a spherical code");
  std::string i_in, i_ens = "sphere";
  int i_n = 8, i_L = 2;
  double i_P = 1.0;
  std::size_t i_M = 16;
  std::uint64_t i_seed = 0;
  i->add_option("--in", i_in, "code file; omit to sample a spherical code");
  i->add_option("--ensemble", i_ens, "generator when --in is omitted (sphere)");
  i->add_option("--n", i_n, "dimension for the generator");
  i->add_option("--P", i_P, "power for the generator");
  i->add_option("--M", i_M, "code size for the generator");
  i->add_option("--L", i_L, "list size parameter");
  i->add_option("--seed", i_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // bad flags are input errors under the 0/1/2 contract
  }

  try {
    if (b->parsed()) return cmd_bounds(b_L, b_family == "unbounded", b_grid, b_units == "bits", b_out);
    if (c->parsed())
      return cmd_construct(c_ens, c_n, c_L, c_P, c_N, c_notion, c_rate, c_delta, c_seed,
                           c_mcap, c_out);
    if (v->parsed()) return cmd_verify(v_file, v_L, v_N, v_P, v_notion);
    if (t->parsed())
      return cmd_tail(t_ens, t_n, t_L, t_P, t_N, t_delta, t_exact, t_samples, t_seed, t_workers);
    if (i->parsed()) return cmd_identity(i_in, i_ens, i_n, i_P, i_M, i_L, i_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

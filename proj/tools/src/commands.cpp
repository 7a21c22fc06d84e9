#include "cquant_cli/commands.hpp"

#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "cquant/lp.hpp"
#include "cquant/oracle.hpp"
#include "cquant/quantile.hpp"
#include "cquant/univariate.hpp"
#include "cquant_cli/document.hpp"
#include "cquant_cli/io.hpp"

namespace cquant::cli {

namespace {

struct Options {
  std::string file;
  std::string p;
  std::string cone;
  std::string out;
  std::string plot;
  std::string point;
  bool check = false;
  bool nudge = false;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
};

struct ResolvedLevel {
  QuantileLevel level;
  std::optional<Rational> requested;
};

ResolvedLevel resolve_level(const Options& opt, std::size_t n) {
  Rational p;
  try {
    p = Rational::parse(opt.p);
  } catch (const std::exception& e) {
    throw InputError(std::string("--p: ") + e.what());
  }
  QuantileLevel level(p, n);
  if (level.valid()) return {level, std::nullopt};
  if (!opt.nudge) {
    throw Error(ErrorCode::IntegralNp,
                "N*p = " + (p * Rational(static_cast<unsigned long>(n))).str() +
                    " is an integer, but the quantile is the unique phi-minimizer only when "
                    "N*p is not an integer (pass --nudge to shift p)");
  }
  // Shifting down by less than 1/N keeps ceil(Np), hence the lower quantile.
  const Rational shifted =
      p - Rational(mpz_class(1), mpz_class(2 * n) * p.denominator());
  return {QuantileLevel(shifted, n), p};
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

int cmd_uniquantile(const Options& opt, std::ostream& out, std::ostream& err) {
  const DataCloud data = read_points_file(opt.file);
  if (data.dim() != 1) throw InputError("uniquantile expects one column, got " + std::to_string(data.dim()));
  const ResolvedLevel lv = resolve_level(opt, data.size());
  const Vector sample = project_data(data, Vector{Rational(1)});
  const Rational q = quantile_direct(sample, lv.level);
  const PhiMinimum m = minimize_phi(sample, lv.level);
  bool verified = false;
  if (opt.check) {
    const LpOutcome dual = simplex_solve(build_lp_dual(data, lv.level, Vector{Rational(1)}));
    const LpOutcome primal = simplex_solve(build_lp(data, lv.level, Vector{Rational(1)}));
    if (dual.status != LpStatus::Optimal || dual.primal[0] != q || dual.value != m.value ||
        primal.status != LpStatus::Optimal || primal.value != m.value) {
      err << "LP check failed: simplex t=" << (dual.primal.empty() ? Rational(0) : dual.primal[0])
          << " value=" << dual.value << ", expected q=" << q << " phi_min=" << m.value << '\n';
      return kVerificationFailure;
    }
    verified = true;
  }
  out << "q=" << q << (verified ? " (LP verified)" : "") << '\n';
  out << "phi_min=" << m.value << '\n';
  if (lv.requested) out << "p=" << lv.level.p() << " (nudged from " << *lv.requested << ")\n";
  return kOk;
}

int write_region(const QuantileRegion& region, const DocumentInput& input, const Options& opt,
                 std::ostream& out, std::ostream& err) {
  emit(region_document(region, input).dump(2) + "\n", opt.out, out);
  if (!opt.plot.empty()) {
    if (input.d != 2 || region.empty() || !region.region.is_bounded()) {
      err << "--plot: only nonempty bounded planar regions are plotted; skipped\n";
    } else {
      emit(plot_cycle(region.region), opt.plot, out);
    }
  }
  return kOk;
}

int cmd_region(const Options& opt, std::ostream& out, std::ostream& err) {
  const DataCloud data = read_points_file(opt.file);
  const ConeFile cf = read_cone_file(opt.cone);
  const Cone cone = validate_cone(cf.generators);
  const ResolvedLevel lv = resolve_level(opt, data.size());
  const QuantileRegion region = quantile_region(data, lv.level, cone, cf.interior);
  const DualConeBasis basis = make_dual_basis(cone, cf.interior);
  DocumentInput input{data.size(), data.dim(), lv.level.p(), lv.requested, cone.generators(),
                      basis.interior_external()};
  return write_region(region, input, opt, out, err);
}

int cmd_tukey(const Options& opt, std::ostream& out, std::ostream& err) {
  const DataCloud data = read_points_file(opt.file);
  const ResolvedLevel lv = resolve_level(opt, data.size());
  const QuantileRegion region = tukey_region(data, lv.level);
  DocumentInput input{data.size(), data.dim(), lv.level.p(), lv.requested, std::nullopt,
                      std::nullopt};
  return write_region(region, input, opt, out, err);
}

int cmd_depth(const Options& opt, std::ostream& out, std::ostream&) {
  const DataCloud data = read_points_file(opt.file);
  const Vector z = parse_vector(opt.point);
  if (z.size() != data.dim()) {
    throw InputError("point has dimension " + std::to_string(z.size()) + ", data has " +
                     std::to_string(data.dim()));
  }
  out << tukey_depth(data, z) << '\n';
  return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const DataCloud data = read_points_file(opt.file);
  OrderingCone cone = ZeroCone{};
  if (!opt.cone.empty()) cone = validate_cone(read_cone_file(opt.cone).generators);
  const ResolvedLevel lv = resolve_level(opt, data.size());
  RegionOptions ro;
  ro.benson.audit = true;
  const QuantileRegion region = region_for(data, lv.level, cone, ro);

  if (data.dim() == 2) {
    const QuantileRegion oracle = oracle_region_2d(data, lv.level, cone);
    if (!poly_equal(region.region, oracle.region)) {
      err << "2-D exact oracle: regions differ\n";
      for (const auto& v : region.region.vrep().vertices) {
        if (!oracle.region.contains(v)) err << "  solver vertex " << to_string(v) << " is outside the oracle region\n";
      }
      for (const auto& v : oracle.region.vrep().vertices) {
        if (!region.region.contains(v)) err << "  oracle vertex " << to_string(v) << " is outside the solver region\n";
      }
      return kVerificationFailure;
    }
    out << "2-D exact oracle: regions equal\n";
  }

  const auto& vertices = region.region.vrep().vertices;
  if (vertices.empty()) {
    out << "membership sampling: region empty, nothing to sample\n";
    return kOk;
  }
  for (const auto& v : vertices) {
    const MembershipVerdict verdict = membership_sample(data, lv.level, cone, v, opt.trials, opt.seed);
    if (!verdict.not_refuted) {
      err << "membership sampling: vertex " << to_string(v) << " refuted by direction "
          << to_string(*verdict.counterexample) << '\n';
      return kVerificationFailure;
    }
  }
  out << "membership sampling: " << vertices.size() << " vertices not refuted (" << opt.trials
      << " directions each, seed " << opt.seed << ")\n";
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::IntegralNp:
    case ErrorCode::NotFullDimensional:
    case ErrorCode::ContainsLine:
    case ErrorCode::NotInterior:
    case ErrorCode::DegenerateBasis:
    case ErrorCode::EmptyBasis:
      return kHypothesisViolation;
    default:
      return kInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multivariate lower cone quantiles and Tukey depth regions", "cquant"};
  app.require_subcommand(1);
  Options opt;

  auto* uni = app.add_subcommand("uniquantile", "Univariate lower quantile and check-loss minimum");
  uni->add_option("file", opt.file, "one-column data file")->required();
  uni->add_option("--p", opt.p, "level in (0,1), e.g. 3/10")->required();
  uni->add_flag("--check", opt.check, "cross-check against the exact simplex");
  uni->add_flag("--nudge", opt.nudge, "shift p when N*p is an integer");

  auto* region = app.add_subcommand("region", "Lower cone quantile region");
  region->add_option("file", opt.file, "data file, one point per line")->required();
  region->add_option("--p", opt.p, "level in (0,1)")->required();
  region->add_option("--cone", opt.cone, "cone generator file")->required();
  region->add_option("--out", opt.out, "write the JSON document here");
  region->add_option("--plot", opt.plot, "write planar vertex cycle (decimals) here");
  region->add_flag("--nudge", opt.nudge, "shift p when N*p is an integer");

  auto* tukey = app.add_subcommand("tukey", "Tukey depth region");
  tukey->add_option("file", opt.file, "data file, one point per line")->required();
  tukey->add_option("--p", opt.p, "level in (0,1)")->required();
  tukey->add_option("--out", opt.out, "write the JSON document here");
  tukey->add_option("--plot", opt.plot, "write planar vertex cycle (decimals) here");
  tukey->add_flag("--nudge", opt.nudge, "shift p when N*p is an integer");

  auto* depth = app.add_subcommand("depth", "Tukey depth of a point");
  depth->add_option("file", opt.file, "data file, one point per line")->required();
  depth->add_option("point", opt.point, "point, e.g. 1/2,1/2")->required();

  auto* verify = app.add_subcommand("verify", "Check a region against the brute-force oracles");
  verify->add_option("file", opt.file, "data file, one point per line")->required();
  verify->add_option("--p", opt.p, "level in (0,1)")->required();
  verify->add_option("--cone", opt.cone, "cone generator file (default: Tukey)");
  verify->add_option("--seed", opt.seed, "sampling seed");
  verify->add_option("--trials", opt.trials, "directions sampled per vertex")->check(CLI::PositiveNumber);
  verify->add_flag("--nudge", opt.nudge, "shift p when N*p is an integer");

  std::vector<std::string> argv_store{"cquant"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*uni) return cmd_uniquantile(opt, out, err);
    if (*region) return cmd_region(opt, out, err);
    if (*tukey) return cmd_tukey(opt, out, err);
    if (*depth) return cmd_depth(opt, out, err);
    if (*verify) return cmd_verify(opt, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace cquant::cli

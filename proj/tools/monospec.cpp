#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monospec/dominance.hpp"
#include "monospec/io.hpp"
#include "monospec/plot.hpp"
#include "monospec/realise.hpp"
#include "monospec/reduction.hpp"
#include "monospec/regions.hpp"
#include "monospec/sampler.hpp"
#include "monospec/spectra.hpp"

namespace {

using namespace monospec;

constexpr int kDomainExit = 1;
constexpr int kUsageExit = 2;

struct Options {
  double tol = kDefaultTol;
  bool pretty = false;
  bool json = false;
  std::string file = "-";
  double lambda = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;
  std::string region;
  std::string point;
  std::size_t n = 3;
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string out = "-";
  std::string format = "csv";
  std::string figure;
};

std::string num(double v, const Options& o) { return io::format_number(v, o.pretty); }

std::string complex_text(Complex z, const Options& o) {
  if (z.imag() == 0.0) return num(z.real(), o);
  return num(z.real(), o) + (z.imag() < 0 ? "-" : "+") + num(std::abs(z.imag()), o) + "i";
}

int cmd_check(const Options& o) {
  const StochasticMatrix s = io::read_stochastic(o.file, o.tol);
  const auto v = first_dominance_violation(s);
  if (!v) {
    std::cout << "monotone\n";
    return 0;
  }
  std::cout << "not monotone: row " << v->k + 1 << " does not dominate row " << v->k << " at column "
            << v->r << ", deficit " << num(v->deficit, o) << '\n';
  return kDomainExit;
}

int cmd_dominance(const Options& o) {
  const MonotoneMatrix m = validate_monotone(io::read_stochastic(o.file, o.tol));
  if (m.n() == 1) {
    std::cout << "0\n";
    return 0;
  }
  const Matrix d = dominance_of(m).entries();
  if (o.json) {
    io::write_matrix_json(std::cout, d);
    std::cout << '\n';
  } else {
    io::write_matrix(std::cout, d, o.pretty);
  }
  return 0;
}

int cmd_lift(const Options& o) {
  const DominanceMatrix d = DominanceMatrix::from_matrix(io::read_matrix(o.file), o.tol);
  if (d.m() != 2) throw Error(ErrorKind::Dimension, "lift needs a 2x2 dominance matrix");
  const LiftCheck check = check_liftable(d.entries(), o.tol);
  if (!check.feasible()) {
    std::cout << "infeasible: violated " << check.violated << ", slack " << num(check.slack, o) << '\n';
    return kDomainExit;
  }
  const MonotoneMatrix m = lift(d.entries(), *check.witness, o.tol);
  std::cout << "# witness m11=" << num(check.witness->m11, o) << " m33=" << num(check.witness->m33, o)
            << '\n';
  io::write_matrix(std::cout, m.entries(), o.pretty);
  return 0;
}

int cmd_spectrum(const Options& o) {
  const StochasticMatrix s = io::read_stochastic(o.file, o.tol);
  const Spectrum sp = spectrum_of_stochastic(s);
  if (o.json) {
    io::write_spectrum_json(std::cout, sp);
    std::cout << '\n';
    return 0;
  }
  for (std::size_t i = 0; i < sp.values.size();) {
    std::size_t j = i + 1;
    while (j < sp.values.size() && sp.values[j] == sp.values[i]) ++j;
    std::cout << complex_text(sp.values[i], o);
    if (j - i > 1) std::cout << " (×" << j - i << ")";
    std::cout << '\n';
    i = j;
  }
  return 0;
}

void print_realisation(const MonotoneMatrix& m, const std::string& comment, const Options& o) {
  if (o.json) {
    io::write_matrix_json(std::cout, m.entries());
    std::cout << '\n';
    return;
  }
  std::cout << "# " << comment << '\n';
  io::write_matrix(std::cout, m.entries(), o.pretty);
}

int cmd_realise_eig(const Options& o) {
  const FamilyId id = realising_family(o.lambda, o.tol);
  print_realisation(family_matrix(id, o.tol),
                    std::string(family_name(id.family)) + " alpha=" + num(id.alpha, o), o);
  return 0;
}

int cmd_realise_pair(const Options& o) {
  const MonotoneMatrix m = realise_pair({o.l2, o.l3}, o.tol);
  print_realisation(m, "pair " + num(o.l2, o) + "," + num(o.l3, o), o);
  return 0;
}

std::optional<std::pair<double, double>> parse_point(const std::string& text) {
  std::string s = text;
  for (char& c : s) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(s);
  double x = 0.0, y = 0.0;
  if (!(in >> x)) return std::nullopt;
  if (!(in >> y)) y = 0.0;
  std::string rest;
  if (in >> rest) return std::nullopt;
  return std::pair{x, y};
}

int cmd_region(const Options& o) {
  const auto region = parse_region(o.region);
  const auto point = parse_point(o.point);
  if (!region || !point) {
    std::cerr << "error: bad region name or point\n";
    return kUsageExit;
  }
  const auto [x, y] = *point;
  RegionVerdict v;
  switch (*region) {
    case Region::Xi1:
    case Region::Xi2:
    case Region::Xi3: {
      const int n = *region == Region::Xi1 ? 1 : *region == Region::Xi2 ? 2 : 3;
      v = xi_n_member(x, n, o.tol);
      if (std::abs(y) > o.tol) v = {false, -std::abs(y), "imaginary part 0"};
      break;
    }
    case Region::Xi3Pair: v = xi3_pair_member({x, y}, o.tol); break;
    case Region::S3RealPair: v = stochastic3_real_pair_member({x, y}, o.tol); break;
    case Region::Theta2: v = theta_member({x, y}, 2, o.tol); break;
    case Region::Theta3: v = theta_member({x, y}, 3, o.tol); break;
  }
  if (v.member) {
    std::cout << "member, margin " << num(v.margin, o) << '\n';
    return 0;
  }
  std::cout << "not member, violated " << v.violated << ", margin " << num(v.margin, o) << '\n';
  return kDomainExit;
}

int cmd_reduce(const Options& o) {
  const MonotoneMatrix m = validate_monotone(io::read_stochastic(o.file, o.tol));
  io::write_reduction_json(std::cout, reduce(m));
  return 0;
}

void emit_dataset(std::ostream& os, const Dataset& ds, const std::string& format) {
  if (format == "jsonl") {
    write_jsonl(os, ds);
  } else {
    write_csv(os, ds);
  }
}

int cmd_sample(const Options& o) {
  const Dataset ds = sample_dataset({o.n, o.count, o.seed, o.workers});
  if (o.out == "-") {
    emit_dataset(std::cout, ds, o.format);
    return 0;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::Parse, "cannot write '" + o.out + "'");
  emit_dataset(f, ds, o.format);
  return 0;
}

int cmd_figure(const Options& o) {
  const Dataset ds = run_experiment(o.figure, {3, o.count, o.seed, o.workers});
  const std::filesystem::path dir(o.out == "-" ? "." : o.out);
  std::filesystem::create_directories(dir);
  const auto csv = dir / (o.figure + ".csv");
  const auto svg = dir / (o.figure + ".svg");
  std::ofstream fc(csv, std::ios::binary), fs(svg, std::ios::binary);
  if (!fc || !fs) throw Error(ErrorKind::Parse, "cannot write into '" + dir.string() + "'");
  write_csv(fc, ds);
  write_svg(fs, ds);
  std::cout << csv.string() << '\n' << svg.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Spectra and dominance tools for monotone stochastic matrices", "monospec"};
  app.require_subcommand(1);
  auto* tol = app.add_option("--tol", o.tol, "comparison tolerance, default from MONOSPEC_TOL")
                   ->check(CLI::PositiveNumber);
  app.add_flag("--pretty", o.pretty, "round numbers to 6 significant digits");

  auto file_command = [&](const char* name, const char* desc) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("file", o.file, "matrix file, '-' for stdin");
    return sub;
  };
  auto* check = file_command("check", "monotone verdict and first violation");
  auto* dom = file_command("dominance", "print D(M)");
  dom->add_flag("--json", o.json);
  auto* lift_cmd = file_command("lift", "lift a 2x2 dominance matrix to a 3x3 monotone matrix");
  auto* spec = file_command("spectrum", "eigenvalues of a stochastic matrix");
  spec->add_flag("--json", o.json);
  auto* red = file_command("reduce", "reduction result as JSON");

  auto* reig = app.add_subcommand("realise-eig", "monotone 3x3 matrix with a prescribed eigenvalue");
  reig->add_option("--lambda", o.lambda)->required();
  reig->add_flag("--json", o.json);
  auto* rpair = app.add_subcommand("realise-pair", "monotone 3x3 matrix with spectrum {1, l2, l3}");
  rpair->add_option("--l2", o.l2)->required();
  rpair->add_option("--l3", o.l3)->required();
  rpair->add_flag("--json", o.json);

  auto* region = app.add_subcommand("region", "region membership verdict");
  region->add_option("--name", o.region)
      ->required()
      ->check(CLI::IsMember({"xi1", "xi2", "xi3", "xi3pair", "theta2", "theta3", "s3realpair"}));
  region->add_option("--point", o.point, "x or x,y")->required();

  auto* sample = app.add_subcommand("sample", "seeded monotone samples as CSV or JSON lines");
  sample->add_option("--n", o.n)->check(CLI::Range(std::size_t{1}, kMaxDim));
  sample->add_option("--count", o.count);
  sample->add_option("--seed", o.seed);
  sample->add_option("--workers", o.workers)->check(CLI::Range(1u, 256u));
  sample->add_option("--out", o.out, "output file, '-' for stdout");
  sample->add_option("--format", o.format)->check(CLI::IsMember({"csv", "jsonl"}));

  auto* figure = app.add_subcommand("figure", "figure data as CSV plus SVG");
  std::vector<std::string> names(std::begin(kExperiments), std::end(kExperiments));
  figure->add_option("--name", o.figure)->required()->check(CLI::IsMember(names));
  figure->add_option("--out", o.out, "output directory")->required();
  figure->add_option("--count", o.count);
  figure->add_option("--seed", o.seed);
  figure->add_option("--workers", o.workers)->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageExit;
  }
  if (const char* env = std::getenv("MONOSPEC_TOL"); env != nullptr && *env != '\0' && tol->count() == 0) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
      std::cerr << "MONOSPEC_TOL: expected a positive number, got '" << env << "'\n";
      return kUsageExit;
    }
    o.tol = v;
  }

  try {
    if (*check) return cmd_check(o);
    if (*dom) return cmd_dominance(o);
    if (*lift_cmd) return cmd_lift(o);
    if (*spec) return cmd_spectrum(o);
    if (*red) return cmd_reduce(o);
    if (*reig) return cmd_realise_eig(o);
    if (*rpair) return cmd_realise_pair(o);
    if (*region) return cmd_region(o);
    if (*sample) return cmd_sample(o);
    if (*figure) return cmd_figure(o);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kDomainExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainExit;
  }
  return kUsageExit;
}

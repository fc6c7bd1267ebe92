// premetric: classify, invert and probe medium specification files.
//
// Exit codes: 0 success, 2 parse error, 3 precondition error,
// 4 no inverse / no wave, 1 internal error.

#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "premetric/corpus.hpp"
#include "premetric/io.hpp"
#include "premetric/report.hpp"
#include "premetric/surface.hpp"

using namespace premetric;

namespace {

constexpr int kParseError = 2;
constexpr int kPrecondition = 3;
constexpr int kNoResult = 4;

struct Options {
  std::string spec;
  std::string out;
  bool json = false;
  bool float_mode = false;
  bool timing = false;
  std::string nu;
  std::string omega = "1/1";
  int resolution = 16;
  std::string family;
  std::uint64_t seed = 1;
};

void emit(const report::Json& j, const Options& o) {
  if (!o.out.empty()) io::write_file(o.out, j.dump(2) + "\n");
  std::cout << (o.json ? j.dump(2) + "\n" : report::render_text(j, o.float_mode));
}

MultiForm parse_nu(const std::string& text) {
  std::vector<Scalar> c;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    c.push_back(parse_scalar(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (c.size() != 4) throw ScalarParseError("--nu needs four comma-separated components");
  return MultiForm(1, std::move(c));
}

template <class F>
report::Json timed(const Options& o, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  report::Json j = f();
  if (o.timing)
    j["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return j;
}

int run(const std::string& command, const Options& o) {
  if (command == "dump-conventions") {
    const std::string text = report::conventions_text();
    if (!o.out.empty()) io::write_file(o.out, text);
    std::cout << text;
    return 0;
  }
  if (command == "generate") {
    corpus::Rng rng(o.seed);
    const std::string text = io::serialize_spec(corpus::random_recipe(corpus::family_from_string(o.family), rng));
    if (!o.out.empty())
      io::write_file(o.out, text);
    else
      std::cout << text;
    return 0;
  }

  const MediumRecipe r = io::parse_spec(io::read_file(o.spec));
  if (command == "classify") {
    emit(timed(o, [&] { return report::classify(r); }), o);
    return 0;
  }
  if (command == "invert") {
    bool none = false;
    emit(timed(o, [&] { return report::invert(r, none); }), o);
    return none ? kNoResult : 0;
  }
  if (command == "wave") {
    const MultiForm nu = parse_nu(o.nu);
    bool none = false;
    emit(timed(o, [&] { return report::wave(r, nu, none); }), o);
    return none ? kNoResult : 0;
  }
  if (command == "surface") {
    const Scalar omega = parse_scalar(o.omega);
    const QuarticForm q = extract_quartic(to_modified(build(r)));
    const auto rays = surface::sample_surface(q, omega, o.resolution);
    const std::string text =
        o.json ? report::surface(r, rays, omega, o.resolution).dump(2) + "\n" : surface::to_csv(rays, omega, o.resolution);
    if (!o.out.empty()) io::write_file(o.out, text);
    std::cout << text;
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of premetric medium bidyadics"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool exact) {
    sub->add_option("spec", o.spec, "Medium specification file (JSON)")->required();
    sub->add_option("--out", o.out, "Also write the result to this path");
    sub->add_flag("--json", o.json, exact ? "Print the JSON report instead of text" : "Print JSON instead of CSV");
    if (exact) sub->add_flag("--float", o.float_mode, "Show decimal approximations next to rationals");
  };

  auto* classify = app.add_subcommand("classify", "Classify a medium and extract its quartic");
  common(classify, true);
  classify->add_flag("--timing", o.timing, "Add wall-clock timing to the report");

  auto* invert = app.add_subcommand("invert", "Invert a medium exactly");
  common(invert, true);
  invert->add_flag("--timing", o.timing, "Add wall-clock timing to the report");

  auto* wave = app.add_subcommand("wave", "Solve the plane-wave conditions for one wave one-form");
  common(wave, true);
  wave->add_option("--nu", o.nu, "Wave one-form as four rationals, e.g. 1/1,0/1,0/1,2/1")->required();
  wave->add_flag("--timing", o.timing, "Add wall-clock timing to the report");

  auto* surface = app.add_subcommand("surface", "Sample the Fresnel surface along rays (floating point)");
  common(surface, false);
  surface->add_option("--omega", o.omega, "Frequency component of the wave one-form")->capture_default_str();
  surface->add_option("--resolution", o.resolution, "Grid points per axis (at least 8)")
      ->capture_default_str()
      ->check(CLI::Range(8, 4096));

  auto* dump = app.add_subcommand("dump-conventions", "Print basis and sign conventions");
  dump->add_option("--out", o.out, "Also write the tables to this path");

  auto* generate = app.add_subcommand("generate", "Write a seeded random specification");
  generate->add_option("family", o.family, "Medium family, e.g. skewon-axion")->required();
  generate->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  generate->add_option("--out", o.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const io::SpecError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ScalarParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const NoInverse& e) {
    std::cerr << e.what() << "\n";
    return kNoResult;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return kPrecondition;
  } catch (const SpaceMismatch& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DegreeError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

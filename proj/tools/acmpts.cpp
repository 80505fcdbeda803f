// acmpts: command-line front end for the ACM toolkit.
// Exit codes: 0 success, 1 harness assertion failure, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "acmpts/constructions.hpp"
#include "acmpts/enumerate.hpp"
#include "acmpts/error.hpp"
#include "acmpts/hilbert.hpp"
#include "acmpts/io.hpp"
#include "acmpts/levels.hpp"
#include "acmpts/reisner.hpp"
#include "acmpts/star.hpp"

namespace {

using namespace acmpts;

constexpr int kOk = 0;
constexpr int kAssertion = 1;
constexpr int kInput = 2;

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + std::to_string(v[k]);
  return out;
}

std::string witness_text(const Witness& w) {
  return std::string(w.kind == WitnessKind::type_i ? "type-i" : "type-ii") +
         " P=" + to_string(w.p) + " Q=" + to_string(w.q);
}

int cmd_check(const std::string& path, std::optional<int> star_level) {
  const ConfigurationFile file = load_configuration(path);
  const PointSet X = file.configuration();
  std::cout << "points: " << X.size() << " (grid " << join(X.dims(), "x") << ")\n";
  if (X.n() >= 2) {
    const int lo = star_level ? *star_level : 2;
    const int hi = star_level ? *star_level : X.n();
    if (lo < 2 || hi > X.n()) {
      throw Error(ErrorCode::BadLevel, "star level must lie in 2.." + std::to_string(X.n()));
    }
    for (int s = lo; s <= hi; ++s) {
      const StarVerdict v = check_star(X, s);
      std::cout << "star_" << s << ": ";
      if (v.satisfied) {
        std::cout << "satisfied\n";
      } else {
        std::cout << "VIOLATED (" << witness_text(v.witnesses.front()) << ")\n";
      }
    }
  }
  std::cout << "ACM: " << (is_acm(X) ? "true" : "false") << '\n';
  if (X.n() < 2) return kOk;

  std::vector<int> with_inclusion;
  for (int i = 1; i <= X.n(); ++i) {
    std::vector<int> sizes;
    for (const auto& level : level_sets(X, i).levels) {
      sizes.push_back(static_cast<int>(level.points.size()));
    }
    const bool incl = inclusion_property(X, i);
    if (incl) with_inclusion.push_back(i);
    std::cout << "direction " << i << ": level sizes " << join(sizes) << "; inclusion "
              << (incl ? "yes" : "no") << '\n';
  }
  std::cout << "inclusion: ";
  if (with_inclusion.empty()) {
    std::cout << "none of ";
    for (int i = 1; i <= X.n(); ++i) std::cout << (i > 1 ? "," : "") << "π" << i;
  } else {
    for (std::size_t k = 0; k < with_inclusion.size(); ++k) {
      std::cout << (k ? "," : "") << "π" << with_inclusion[k];
    }
  }
  std::cout << '\n';
  return kOk;
}

// Slices are indexed by the leading n-2 coordinates; each is a grid with
// rows t_{n-1} and columns t_n. Slices that vanish are printed on one line.
void print_table(const GradedTable& table, const std::string& name) {
  const MultiDegree& box = table.box();
  const std::size_t n = box.size();
  const std::size_t rows = n >= 2 ? static_cast<std::size_t>(box[n - 2] + 1) : 1;
  const std::size_t cols = static_cast<std::size_t>(box[n - 1] + 1);
  const std::size_t block = rows * cols;
  for (std::size_t start = 0; start < table.size(); start += block) {
    const MultiDegree t = table.degree_at(start);
    std::string label = name + "(";
    for (std::size_t k = 0; k + 2 < n; ++k) label += std::to_string(t[k]) + ",";
    label += n >= 2 ? "j,k)" : "k)";
    bool zero = true;
    for (std::size_t c = 0; c < block; ++c) zero = zero && table[start + c] == 0;
    if (zero && n > 2) {
      std::cout << label << ": all zero\n";
      continue;
    }
    std::cout << label << ":\n";
    for (std::size_t r = 0; r < rows; ++r) {
      std::cout << "  ";
      for (std::size_t c = 0; c < cols; ++c) {
        std::cout << (c ? " " : "") << table[start + r * cols + c];
      }
      std::cout << '\n';
    }
  }
}

int cmd_hilbert(const std::string& path, const std::string& box_text, bool delta) {
  const PointSet X = load_configuration(path).configuration();
  const MultiDegree box = parse_int_list(box_text);
  if (static_cast<int>(box.size()) != X.n()) {
    throw Error(ErrorCode::BadDegree, "box needs " + std::to_string(X.n()) + " entries");
  }
  const HilbertTable h = hilbert_table(X, box);
  if (delta) {
    print_table(delta_of(h), "ΔH");
  } else {
    print_table(h, "h");
  }
  return kOk;
}

int cmd_oracle(const std::string& path) {
  const PointSet X = load_configuration(path).configuration();
  const SimplicialComplex complex = sr_complex(X);
  const ReisnerReport report = reisner_check(complex);
  std::cout << "complex: " << complex.vertices().size() << " vertices, "
            << complex.facets().size() << " facets, dimension " << complex.dimension()
            << (report.pure ? ", pure" : ", not pure") << '\n';
  std::cout << "CM: " << (report.cohen_macaulay ? "true" : "false");
  if (report.failure) {
    std::cout << "; link=" << face_to_string(complex, report.failure->face) << ", H̃_"
              << report.failure->degree << " rank " << report.failure->rank;
  }
  std::cout << "\nlinks checked: " << report.links_checked << '\n';
  return kOk;
}

void write_output(const ConfigurationFile& file, const std::string& out) {
  const std::string text = serialize_configuration(file);
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream stream(out);
  if (!stream) throw Error(ErrorCode::ParseError, "cannot write " + out);
  stream << text;
  std::cout << "wrote " << out << '\n';
}

int cmd_construct(const std::string& path, const std::string& out) {
  const ConstructConfig config = load_construct_config(path);
  if (const auto* lia = std::get_if<LiaisonConfig>(&config)) {
    const LiaisonResult z = liaison_addition(lia->input);
    std::size_t summand_points = 0;
    for (const auto& v : lia->input.summands) summand_points += v.size();
    std::cout << "liaison addition: " << lia->input.summands.size() << " summands ("
              << summand_points << " points) + " << z.points.size() - summand_points
              << " box points = " << z.points.size() << " points\n";
    const MultiDegree box = lia->box ? *lia->box : default_additivity_box(lia->input);
    const bool ok = verify_hf_additivity(lia->input, z.points, box);
    std::cout << "hf additivity: " << (ok ? "verified" : "FAILED") << " on box (" << join(box)
              << ")\n";
    std::cout << "ACM: " << (is_acm(z.configuration) ? "true" : "false") << '\n';
    ConfigurationFile file{static_cast<int>(lia->input.forms.size()), z.points, z.labels};
    write_output(file, out);
    return ok ? kOk : kAssertion;
  }

  const auto& layer = std::get<LayerConfig>(config);
  const PointSet X = layer.base.configuration();
  const PointSet Z = add_layer(X, layer.direction, layer.side);
  const MultiDegree box = layer.box ? *layer.box : Z.dims();
  const bool ok = verify_layer_hf(X, layer.direction, box, layer.side);
  std::cout << "layer in direction " << layer.direction << ": " << X.size() << " points + "
            << Z.size() - X.size() << " layer points = " << Z.size() << " points\n";
  std::cout << "hf relation: " << (ok ? "verified" : "FAILED") << " on box (" << join(box) << ")\n";
  std::cout << "ACM: " << (is_acm(X) ? "true" : "false") << " -> "
            << (is_acm(Z) ? "true" : "false") << '\n';
  write_output(to_file(Z), out);
  return ok ? kOk : kAssertion;
}

int cmd_path(const std::string& path, const std::string& from, const std::string& to,
             std::optional<int> star_level) {
  const PointSet X = load_configuration(path).configuration();
  const GridPoint p(parse_int_list(from));
  const GridPoint q(parse_int_list(to));
  const auto chain = find_path(X, p, q, star_level ? *star_level : X.n());
  for (std::size_t k = 0; k < chain.size(); ++k) {
    std::cout << (k ? " -> " : "") << to_string(chain[k]);
  }
  std::cout << "\nsteps: " << chain.size() - 1 << " = d(P,Q)\n";
  return satisfies_path_contract(X, p, q, chain) ? kOk : kAssertion;
}

int cmd_enumerate(const std::string& grid, std::optional<std::size_t> samples,
                  std::optional<std::uint64_t> seed, const std::string& out) {
  EnumerationOptions options;
  options.dims = parse_int_list(grid);
  if (samples) {
    if (!seed) throw Error(ErrorCode::ParseError, "--random requires --seed");
    options.samples = samples;
    options.seed = *seed;
  }
  std::ofstream csv;
  auto open_csv = [&] {
    csv.open(out);
    if (!csv) throw Error(ErrorCode::ParseError, "cannot write " + out);
    write_csv_header(options.dims.size(), csv);
  };
  const EnumerationSummary s = enumerate_stream(options, [&](const EnumerationRecord& rec) {
    if (!csv.is_open()) open_csv();
    write_csv_row(rec, csv);
  });
  if (!csv.is_open()) open_csv();
  std::cout << "records: " << s.records << "\nACM: " << s.acm << "\nagreement: " << s.agreements
            << "/" << s.records << "\nclosure failures: " << s.closure_failures
            << "\npath failures: " << s.path_failures << "\neuler failures: " << s.euler_failures
            << "\nwrote " << out << '\n';
  return s.passed() ? kOk : kAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetically Cohen-Macaulay point sets in (P^1)^n"};
  app.require_subcommand(1);

  std::string file, box, out, from, to, grid;
  std::optional<int> star_level;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  bool delta = false;

  auto* check = app.add_subcommand("check", "star property, ACM verdict and level sets");
  check->add_option("FILE", file, "configuration file")->required();
  check->add_option("--star-level", star_level, "test only this star level");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function table");
  hilbert->add_option("FILE", file, "configuration file")->required();
  hilbert->add_option("--box", box, "T1,...,Tn")->required();
  hilbert->add_flag("--delta", delta, "print the first difference instead");

  auto* oracle = app.add_subcommand("oracle", "Reisner criterion on the Stanley-Reisner complex");
  oracle->add_option("FILE", file, "configuration file")->required();

  auto* construct = app.add_subcommand("construct", "liaison addition or layer construction");
  construct->add_option("CONFIG", file, "construction config")->required();
  construct->add_option("--out", out, "output configuration file");

  auto* path = app.add_subcommand("path", "chain of points joining two points of X");
  path->add_option("FILE", file, "configuration file")->required();
  path->add_option("--from", from, "u1,...,un")->required();
  path->add_option("--to", to, "v1,...,vn")->required();
  path->add_option("--star-level", star_level, "star level assumed (default n)");

  auto* enumerate = app.add_subcommand("enumerate", "cross-validate all subsets of a grid");
  enumerate->add_option("--grid", grid, "r1,...,rn")->required();
  enumerate->add_option("--random", samples, "number of random subsets");
  enumerate->add_option("--seed", seed, "random seed");
  enumerate->add_option("--out", out, "CSV output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*check) return cmd_check(file, star_level);
    if (*hilbert) return cmd_hilbert(file, box, delta);
    if (*oracle) return cmd_oracle(file);
    if (*construct) return cmd_construct(file, out);
    if (*path) return cmd_path(file, from, to, star_level);
    if (*enumerate) return cmd_enumerate(grid, samples, seed, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InternalInvariantViolation ? kAssertion : kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}

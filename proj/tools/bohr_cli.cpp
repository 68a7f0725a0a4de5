// bohr: command-line front end for the generalized Bohr radius library.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bohr/core_radius.hpp"
#include "bohr/families.hpp"
#include "bohr/harness.hpp"
#include "bohr/known_values.hpp"
#include "bohr/multidim.hpp"
#include "bohr/oracle.hpp"
#include "bohr/report.hpp"

namespace {

using namespace bohr;

constexpr int kExitInvalid = 2;
constexpr int kExitVerifyFailed = 1;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

std::vector<double> numbers(const std::string& s, std::size_t min_count, std::size_t max_count,
                            const std::string& what) {
  std::vector<double> v;
  for (const auto& part : split(s, ',')) v.push_back(to_double(part));
  if (v.size() < min_count || v.size() > max_count) {
    throw UsageError(what + ": wrong number of values in '" + s + "'");
  }
  return v;
}

// "re,im;re,im[@re,im]"
std::pair<std::vector<Complex>, Complex> zeros_and_phase(const std::string& body,
                                                         Complex default_phase) {
  const auto at = body.find('@');
  const std::string zs = body.substr(0, at);
  std::vector<Complex> zeros;
  if (!zs.empty()) {
    for (const auto& z : split(zs, ';')) {
      const auto v = numbers(z, 1, 2, "zero");
      zeros.emplace_back(v[0], v.size() > 1 ? v[1] : 0.0);
    }
  }
  Complex phase = default_phase;
  if (at != std::string::npos) {
    const auto v = numbers(body.substr(at + 1), 1, 2, "phase");
    phase = {v[0], v.size() > 1 ? v[1] : 0.0};
  }
  return {zeros, phase};
}

FunctionFamily parse_family(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "mobius") return Mobius{numbers(body, 1, 1, kind)[0]};
  if (kind == "zmobius") return ZMobius{numbers(body, 1, 1, kind)[0]};
  if (kind == "halfplane") return HalfPlane{};
  if (kind == "constant") {
    const auto v = numbers(body, 1, 2, kind);
    return Constant{{v[0], v.size() > 1 ? v[1] : 0.0}};
  }
  if (kind == "blaschke") {
    auto [zeros, phase] = zeros_and_phase(body, 1.0);
    return Blaschke{zeros, phase};
  }
  if (kind == "herglotz") {
    auto [zeros, phase] = zeros_and_phase(body, 1.0);
    return Herglotz{zeros, phase};
  }
  if (kind == "chi") {
    const auto v = numbers(body, 3, 3, kind);
    const auto e = hilbert_extremal(BohrParams(v[0], v[1]), static_cast<int>(v[2]));
    return HilbertChi{e.b3, e.r3, e.scale_c, e.n};
  }
  throw UsageError("unknown family '" + kind + "'");
}

Functional parse_functional(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "rpq") {
    const auto v = numbers(body, 2, 2, kind);
    return Rpq{BohrParams(v[0], v[1])};
  }
  if (kind == "rp") return Rp{numbers(body, 1, 1, kind)[0]};
  if (kind == "hp") return Hp{numbers(body, 1, 1, kind)[0]};
  throw UsageError("unknown functional '" + kind + "'");
}

// lo:hi
std::pair<double, double> parse_range(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw UsageError("range must be lo:hi, got '" + s + "'");
  return {to_double(parts[0]), to_double(parts[1])};
}

std::vector<double> grid(std::pair<double, double> range, double step) {
  if (!(step > 0.0)) throw UsageError("--step must be positive");
  if (range.second < range.first) throw UsageError("empty range");
  const int count = static_cast<int>(std::floor((range.second - range.first) / step + 1e-9)) + 1;
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = range.first + i * step;
  return v;
}

void print_kv(const std::string& key, const std::string& value) {
  std::cout << key << std::string(key.size() < 10 ? 10 - key.size() : 1, ' ') << value << '\n';
}

std::string argmin_text(const Argmin& a) {
  switch (a.kind) {
    case Argmin::Kind::Point: return format_number(a.a);
    case Argmin::Kind::Boundary: return "boundary (a -> 1-)";
    case Argmin::Kind::None: break;
  }
  return "-";
}

void print_record(const OutputRecord& rec, bool json) {
  if (json) {
    std::cout << to_json(rec).dump() << '\n';
    return;
  }
  if (rec.kind == RadiusResult::Kind::Exact) {
    print_kv("kind", "exact");
    print_kv("value", format_number(*rec.value));
  } else {
    print_kv("kind", "interval");
    print_kv("interval", "[" + format_number(*rec.lo) + ", " + format_number(*rec.hi) + "]");
  }
  print_kv("case", rec.case_tag);
  print_kv("argmin_a", argmin_text(rec.argmin));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Bohr radii R_{p,q}: closed forms, bounds and series oracle"};
  app.require_subcommand(1);

  double p = 0.0, q = 0.0;
  int n = 1;
  bool json = false;

  auto* scalar = app.add_subcommand("scalar", "R_{p,q}(C): exact value or certified interval");
  scalar->add_option("--p", p, "exponent p >= 1")->required();
  scalar->add_option("--q", q, "exponent q >= 1")->required();
  scalar->add_flag("--json", json, "emit a JSON record");

  auto* hilbert = app.add_subcommand("hilbert", "R^n_{p,q}(H) for Hilbert-valued functions, q >= 2");
  hilbert->add_option("--p", p)->required();
  hilbert->add_option("--q", q)->required();
  hilbert->add_option("--n", n, "number of variables")->required()->check(CLI::PositiveNumber);
  hilbert->add_flag("--json", json);

  std::optional<double> h1_lower;
  auto* posreal = app.add_subcommand("positive-real", "H^n_p for functions with positive real part");
  posreal->add_option("--p", p)->required();
  posreal->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  posreal->add_option("--h1-lower", h1_lower, "lower bound for H^n_1 (default 1/3 when n = 1)");
  posreal->add_flag("--json", json);

  std::optional<double> ip, r1_lower;
  auto* pbohr = app.add_subcommand("pbohr", "lower bounds for the p-Bohr radius r^n_p");
  pbohr->add_option("--p", p)->required();
  pbohr->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  pbohr->add_option("--ip", ip, "p-uniform PL-convexity constant I_p(X), p >= 2");
  pbohr->add_option("--r1-lower", r1_lower,
                    "lower bound for the classical radius r^n_1 (default 1/3 when n = 1)");
  pbohr->add_flag("--json", json);

  std::string family_spec, functional_spec;
  int terms = 0;
  double tol = OracleOptions{}.tail_tol;
  std::optional<double> at_r;
  auto* oracle = app.add_subcommand("oracle", "series oracle: radius or quantity for one function");
  oracle
      ->add_option("--family", family_spec,
                   "mobius:a | zmobius:a | halfplane | constant:re[,im] | "
                   "blaschke:re,im;...[@re,im] | herglotz:re,im;...[@re,im] | chi:p,q,n")
      ->required();
  oracle->add_option("--functional", functional_spec, "rpq:p,q | rp:p | hp:p")->required();
  oracle->add_option("--terms", terms, "fixed truncation K (default: automatic)");
  oracle->add_option("--tol", tol, "tail tolerance for automatic truncation");
  oracle->add_option("--r", at_r, "evaluate the functional at this radius instead");
  oracle->add_flag("--json", json);

  std::string suite_name;
  std::uint64_t seed = 1;
  int samples = 500;
  auto* verify = app.add_subcommand("verify", "run a property suite; exit 1 on any failure");
  verify->add_option("suite", suite_name)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", seed);
  verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
  verify->add_flag("--json", json);

  std::string p_range, q_range, out_path;
  double step = 0.25;
  auto* sweep = app.add_subcommand("sweep", "CSV of R_{p,q}(C) over a (p,q) grid");
  sweep->add_option("--p-range", p_range, "lo:hi")->required();
  sweep->add_option("--q-range", q_range, "lo:hi")->required();
  sweep->add_option("--step", step);
  sweep->add_option("--out", out_path, "output file (default stdout)");

  std::string table_name;
  auto* table = app.add_subcommand("table", "print a reference table");
  table->add_option("name", table_name)->required()->check(CLI::IsMember({"known"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*scalar) {
      const BohrParams params(p, q);
      print_record(make_record(params, radius_scalar(params)), json);
    } else if (*hilbert) {
      const BohrParams params(p, q);
      const auto h = hilbert_radius(params, n);
      OutputRecord rec;
      rec.p = p;
      rec.q = q;
      rec.n = n;
      rec.value = h.value;
      rec.case_tag = "hilbert";
      rec.argmin = Argmin::point(h.argmin_a);
      print_record(rec, json);
      if (!json) {
        const auto e = hilbert_extremal(params, n);
        print_kv("chi", "b3=" + format_number(e.b3) + " r3=" + format_number(e.r3) +
                            " c=" + format_number(e.scale_c));
      }
    } else if (*posreal) {
      OutputRecord rec;
      rec.p = p;
      rec.n = n;
      if (p >= 2.0) {
        rec.value = hpn_exact(p);
        rec.case_tag = "hpn_exact";
      } else if (p > 1.0) {
        if (!h1_lower && n != 1) throw UsageError("--h1-lower is required when n > 1");
        rec.kind = RadiusResult::Kind::Interval;
        rec.lo = hpn_lower_combine(p, h1_lower.value_or(1.0 / 3.0), hpn_exact(2.0));
        rec.hi = 1.0;
        rec.case_tag = "hpn_lower_combine";
      } else {
        throw UsageError("no bound is available for p <= 1");
      }
      print_record(rec, json);
    } else if (*pbohr) {
      OutputRecord rec;
      rec.p = p;
      rec.n = n;
      rec.kind = RadiusResult::Kind::Interval;
      rec.hi = 1.0;
      if (ip) {
        rec.lo = pbohr_vector_lower(PLConvexityConstant(p, *ip));
        rec.case_tag = "pbohr_vector_lower";
      } else if (p > 1.0 && p < 2.0) {
        if (!r1_lower && n != 1) throw UsageError("--r1-lower is required when n > 1");
        rec.lo = pbohr_scalar_lower(p, r1_lower.value_or(1.0 / 3.0));
        rec.case_tag = "pbohr_scalar_lower";
      } else {
        throw UsageError("give --ip for a vector-valued bound, or use 1 < p < 2");
      }
      print_record(rec, json);
    } else if (*oracle) {
      const auto family = parse_family(family_spec);
      const auto functional = parse_functional(functional_spec);
      OracleOptions opts;
      opts.terms = terms;
      opts.tail_tol = tol;
      if (at_r) {
        const auto qv = evaluate(family, functional, *at_r, opts);
        if (json) {
          std::cout << nlohmann::json{{"family", describe(family)},
                                      {"r", *at_r},
                                      {"value", qv.value},
                                      {"tail_error", qv.tail_error}}
                           .dump()
                    << '\n';
        } else {
          print_kv("family", describe(family));
          print_kv("value", format_number(qv.value));
          print_kv("tail", format_number(qv.tail_error));
        }
      } else {
        const double r = radius_of(family, functional, opts);
        if (json) {
          std::cout << nlohmann::json{{"family", describe(family)}, {"radius", r}}.dump() << '\n';
        } else {
          print_kv("family", describe(family));
          print_kv("radius", format_number(r));
        }
      }
    } else if (*verify) {
      const auto report = run_suite(suite_name, seed, samples);
      if (json) {
        std::cout << to_json(report).dump(2) << '\n';
      } else {
        std::cout << report.suite_name << ": " << report.cases_run << " checks, "
                  << report.failures.size() << " failures, " << format_number(report.wall_time)
                  << " s\n";
        for (const auto& f : report.failures) {
          std::cout << "  FAIL " << f.id << "  expected " << format_number(f.expected) << "  got "
                    << format_number(f.got) << "  tol " << format_number(f.tol) << '\n';
        }
      }
      return report.passed() ? 0 : kExitVerifyFailed;
    } else if (*sweep) {
      const auto ps = grid(parse_range(p_range), step);
      const auto qs = grid(parse_range(q_range), step);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw UsageError("cannot open " + out_path);
      }
      std::ostream& out = out_path.empty() ? std::cout : file;
      out << kSweepCsvHeader << '\n';
      for (double pp : ps) {
        for (double qq : qs) {
          const BohrParams params(pp, qq);
          out << csv_row(make_record(params, radius_scalar(params))) << '\n';
        }
      }
    } else if (*table) {
      std::cout << "quantity        expected          computed          source\n";
      for (const auto& row : known_values()) {
        std::string label = row.label;
        label.resize(std::max<std::size_t>(label.size(), 15), ' ');
        std::string e = format_number(row.expected), c = format_number(row.computed);
        e.resize(std::max<std::size_t>(e.size(), 17), ' ');
        c.resize(std::max<std::size_t>(c.size(), 17), ' ');
        std::cout << label << ' ' << e << ' ' << c << ' ' << row.source << '\n';
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}

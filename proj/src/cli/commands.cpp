#include "preproj/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

#include "preproj/e6.hpp"
#include "preproj/expr.hpp"
#include "preproj/report.hpp"

namespace preproj::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Options {
  bool json = false;
  bool quiet = false;
};

// Command-level usage problem detected after CLI11 parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AlgebraFingerprint fingerprint(const std::string& name, const QuotientAlgebra& a) {
  return {name, a.dimension(), a.nilpotency_degree()};
}

AlgebraFingerprint pe6_fingerprint() { return fingerprint("P(E6)", *e6::pe6()); }
AlgebraFingerprint re6_fingerprint() { return fingerprint("R(E6)", *e6::re6()); }

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string quiet_text(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    if (!c.passed) os << "[FAIL] " << c.name << "\n       residual: " << c.residual.value_or("") << '\n';
  }
  os << report.pass_count() << "/" << report.checks.size() << " checks passed\n";
  return os.str();
}

RunResult emit(const VerificationReport& report, const std::string& command, const AlgebraFingerprint& algebra,
               Clock::time_point start, const Options& opt) {
  RunResult r;
  r.exit_code = report.passed() ? kExitPass : kExitCheckFailure;
  if (opt.json) {
    r.out = to_json(report, command, algebra, elapsed_ms(start)).dump(2) + "\n";
  } else {
    r.out = opt.quiet ? quiet_text(report) : to_text(report);
  }
  return r;
}

std::shared_ptr<const QuotientAlgebra> algebra_named(const std::string& name) {
  return name == "pe6" ? e6::pe6() : e6::re6();
}

AlgebraFingerprint fingerprint_named(const std::string& name) {
  return name == "pe6" ? pe6_fingerprint() : re6_fingerprint();
}

// --- verify ----------------------------------------------------------------

RunResult verify(const std::string& target, const std::string& mode, const Options& opt) {
  const auto start = Clock::now();
  const e6::InverseMode inverse_mode = mode == "printed" ? e6::InverseMode::AsPrinted : e6::InverseMode::Corrected;
  std::string command = "verify " + target;
  if (target == "lemma") return emit(e6::verify_lemma(), command, re6_fingerprint(), start, opt);
  if (target == "theorem") return emit(e6::verify_theorem(), command, pe6_fingerprint(), start, opt);
  if (target == "identities") return emit(e6::verify_paper_identities(), command, pe6_fingerprint(), start, opt);
  if (target == "corner-iso") return emit(e6::corner_iso_check(), command, pe6_fingerprint(), start, opt);
  if (target == "inverse") {
    command += " --mode " + mode;
    return emit(e6::verify_inverse(inverse_mode), command, pe6_fingerprint(), start, opt);
  }
  VerificationReport all;
  all.title = "all verifications";
  all.append(e6::verify_lemma());
  all.append(e6::verify_theorem());
  all.append(e6::verify_paper_identities());
  all.append(e6::corner_iso_check());
  all.append(e6::verify_inverse(inverse_mode));
  return emit(all, command + " --mode " + mode, pe6_fingerprint(), start, opt);
}

// --- reduce ----------------------------------------------------------------

FreeElement element_in(const std::string& text, const std::string& algebra) {
  const ExprPtr e = parse(text);
  const QuiverKind kind = infer_quiver(*e);
  if (kind == QuiverKind::E6 && algebra == "re6") throw UsageError("expression uses E6 arrows but --algebra is re6");
  if (kind == QuiverKind::L2 && algebra == "pe6") throw UsageError("expression uses x, y but --algebra is pe6");
  return to_element(*e, algebra_named(algebra)->quiver_ptr());
}

RunResult reduce(const std::string& algebra, const std::string& text, const Options& opt) {
  const auto start = Clock::now();
  const QuotientElement nf = algebra_named(algebra)->normal_form(element_in(text, algebra));
  RunResult r;
  if (opt.json) {
    auto doc = to_json(VerificationReport{}, "reduce --algebra " + algebra, fingerprint_named(algebra),
                       elapsed_ms(start));
    doc["input"] = text;
    doc["result"] = nf.to_string();
    r.out = doc.dump(2) + "\n";
  } else {
    r.out = nf.to_string() + "\n";
  }
  return r;
}

// --- admissible --------------------------------------------------------------

std::array<Rational, 9> parse_theta(const std::string& spec) {
  std::array<Rational, 9> values{};
  std::array<bool, 9> seen{};
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--theta entry '" + item + "' is not of the form tK=value");
    std::string key = item.substr(0, eq);
    if (!key.empty() && key[0] == 't') key.erase(0, 1);
    if (key.size() != 1 || key[0] < '1' || key[0] > '9') throw UsageError("--theta key '" + item.substr(0, eq) + "' is not t1..t9");
    const std::size_t k = static_cast<std::size_t>(key[0] - '1');
    if (seen[k]) throw UsageError("--theta sets t" + key + " twice");
    seen[k] = true;
    try {
      values[k] = Rational::parse(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--theta value '" + item.substr(eq + 1) + "' is not a rational number");
    }
  }
  return values;
}

// "xyx" -> "x y x"
std::string spaced(std::string_view letters) {
  std::string out;
  for (char ch : letters) {
    if (!out.empty()) out += ' ';
    out += ch;
  }
  return out;
}

// Reads theta off the normal form of f in R(E6): the nine basis words of
// degree at least two are exactly the words weighted by theta1..theta9.
e6::DeformationParameters theta_from_expression(const std::string& text) {
  const FreeElement f = element_in(text, "re6");
  const auto& r = e6::re6();
  const QuotientElement nf = r->normal_form(f);
  for (const auto& [index, c] : nf.coordinates()) {
    if (r->basis_path(index).arrows.size() < 2) throw UsageError("f must lie in rad^2 R(E6), found " + nf.to_string());
  }
  e6::DeformationParameters p;
  bool numeric = true;
  for (std::size_t k = 0; k < 9; ++k) {
    const FreeElement w = e6::re6_word(spaced(e6::kDeformationWords[k]));
    const auto index = r->basis_index(w.terms().begin()->first);
    p.theta[k] = index ? nf.coordinate(*index) : Polynomial();
    numeric = numeric && p.theta[k].is_constant();
  }
  p.mode = numeric ? e6::ParameterMode::Numeric : e6::ParameterMode::SymbolicFree;
  return p;
}

RunResult admissible(const std::string& theta_spec, const std::string& f_text, const Options& opt) {
  const auto start = Clock::now();
  if (theta_spec.empty() == f_text.empty()) throw UsageError("admissible takes exactly one of --theta or an f expression");
  const e6::DeformationParameters p =
      theta_spec.empty() ? theta_from_expression(f_text) : e6::DeformationParameters::numeric(parse_theta(theta_spec));

  const Polynomial c1 = p.first_condition();
  const Polynomial c2 = p.second_condition();
  const QuotientElement cube = e6::admissibility_residual(p);

  VerificationReport report;
  report.title = "admissibility of f = " + p.element().to_string();
  auto vanishes = [](const std::string& value, bool zero) -> std::optional<std::string> {
    if (zero) return std::nullopt;
    return value;
  };
  report.run("c1 = t1 + t2 - 2*t3 vanishes", [&] { return vanishes(c1.to_string(), c1.is_zero()); });
  report.run("c2 = 3*t4 - 2*t5 + t6 + t1^2 - t1*t2 + t2^2 - t3^2 vanishes",
             [&] { return vanishes(c2.to_string(), c2.is_zero()); });
  report.run("(x+y+f)^3 = 0 in R(E6)", [&] { return vanishes(cube.to_string(), cube.is_zero()); });

  const bool conditions = c1.is_zero() && c2.is_zero();
  const bool verdict = cube.is_zero();
  if (conditions != verdict) {
    report.notes.push_back({"criterion", "the two conditions and the direct cube disagree"});
  }
  const std::string verdict_text = verdict ? "admissible" : "not admissible";

  RunResult r;
  r.exit_code = verdict ? kExitPass : kExitCheckFailure;
  if (opt.json) {
    auto doc = to_json(report, "admissible", re6_fingerprint(), elapsed_ms(start));
    doc["c1"] = c1.to_string();
    doc["c2"] = c2.to_string();
    doc["cube"] = cube.to_string();
    doc["verdict"] = verdict_text;
    r.out = doc.dump(2) + "\n";
  } else {
    std::ostringstream os;
    if (!opt.quiet) os << to_text(report);
    os << "c1 = " << c1.to_string() << "\nc2 = " << c2.to_string() << "\n(x+y+f)^3 = " << cube.to_string()
       << "\nverdict: " << verdict_text << '\n';
    r.out = os.str();
  }
  return r;
}

// --- basis -------------------------------------------------------------------

RunResult basis(const std::string& algebra_name, std::optional<int> corner, const std::string& csv,
                const Options& opt) {
  const auto start = Clock::now();
  const auto& a = algebra_named(algebra_name);
  const Quiver& q = a->quiver();
  if (corner && !q.has_vertex(*corner)) throw UsageError("vertex " + std::to_string(*corner) + " is not in the quiver");

  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < a->dimension(); ++i) {
    const Path& p = a->basis_path(i);
    if (!corner || (p.source == *corner && p.target == *corner)) indices.push_back(i);
  }
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < indices.size(); ++i) local.emplace(indices[i], i);

  if (!csv.empty()) {
    std::ofstream file(csv);
    if (!file) throw UsageError("cannot write " + csv);
    file << "i,j,k,coefficient\n";
    for (std::size_t i = 0; i < indices.size(); ++i) {
      for (std::size_t j = 0; j < indices.size(); ++j) {
        for (const auto& [k, c] : a->product(indices[i], indices[j])) {
          file << i << ',' << j << ',' << local.at(k) << ',' << c.to_string() << '\n';
        }
      }
    }
  }

  RunResult r;
  if (opt.json) {
    auto doc = to_json(VerificationReport{}, "basis --algebra " + algebra_name, fingerprint_named(algebra_name),
                       elapsed_ms(start));
    if (corner) doc["corner"] = *corner;
    doc["basis"] = nlohmann::ordered_json::array();
    for (std::size_t i : indices) {
      const Path& p = a->basis_path(i);
      doc["basis"].push_back({{"index", local.at(i)},
                              {"degree", p.arrows.size()},
                              {"source", p.source},
                              {"target", p.target},
                              {"path", q.path_to_string(p)}});
    }
    r.out = doc.dump(2) + "\n";
    return r;
  }
  std::ostringstream os;
  os << "quiver:\n" << q.adjacency_listing();
  os << "dimension: " << a->dimension() << "\nnilpotency degree: " << a->nilpotency_degree() << '\n';
  if (corner) os << "corner e" << *corner << ": dimension " << indices.size() << '\n';
  for (std::size_t i : indices) {
    const Path& p = a->basis_path(i);
    os << "deg=" << p.arrows.size() << ' ' << p.source << "->" << p.target << ' ' << q.path_to_string(p) << '\n';
  }
  r.out = os.str();
  return r;
}

// --- sample ------------------------------------------------------------------

RunResult sample(std::uint64_t seed, std::size_t trials, std::uint32_t prime, const Options& opt) {
  const auto start = Clock::now();
  e6::SampleField field;
  try {
    field = e6::sample_field_from_prime(prime);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string command = "sample --seed " + std::to_string(seed) + " --trials " + std::to_string(trials) +
                              " --field " + std::to_string(prime);
  return emit(e6::sample_check(seed, trials, field), command, pe6_fingerprint(), start, opt);
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact verification of the deformed preprojective algebras of type E6", "preproj"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "print a JSON report");
  app.add_flag("--quiet", opt.quiet, "print only failures and the summary");

  std::string target;
  std::string mode = "corrected";
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("target", target, "lemma | theorem | identities | corner-iso | inverse | all")
      ->required()
      ->check(CLI::IsMember({"lemma", "theorem", "identities", "corner-iso", "inverse", "all"}));
  verify_cmd->add_option("--mode", mode, "inverse formulas: printed or corrected")
      ->check(CLI::IsMember({"printed", "corrected"}));

  std::string algebra;
  std::string text;
  auto* reduce_cmd = app.add_subcommand("reduce", "normal form of an expression");
  reduce_cmd->add_option("--algebra", algebra)->required()->check(CLI::IsMember({"pe6", "re6"}));
  reduce_cmd->add_option("expr", text, "expression, e.g. \"y*y*x\"")->required();

  std::string theta_spec;
  std::string f_text;
  auto* admissible_cmd = app.add_subcommand("admissible", "decide whether f is admissible");
  admissible_cmd->add_option("--theta", theta_spec, "t1=v,...,t9=v (missing entries are 0)");
  admissible_cmd->add_option("f", f_text, "f as an expression in x and y");

  std::string basis_algebra;
  std::optional<int> corner;
  std::string csv;
  auto* basis_cmd = app.add_subcommand("basis", "list the basis paths");
  basis_cmd->add_option("--algebra", basis_algebra)->required()->check(CLI::IsMember({"pe6", "re6"}));
  basis_cmd->add_option("--corner", corner, "restrict to the loops at one vertex");
  basis_cmd->add_option("--csv", csv, "write structure constants i,j,k,coefficient to a file");

  std::uint64_t seed = 1;
  std::size_t trials = 20;
  std::uint32_t prime = 0;
  auto* sample_cmd = app.add_subcommand("sample", "numeric cross-check at random admissible points");
  sample_cmd->add_option("--seed", seed);
  sample_cmd->add_option("--trials", trials);
  sample_cmd->add_option("--field", prime, "0 for the rationals, or 2, 3, 5, 7, 11");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    return {code == 0 ? kExitPass : kExitUsage, out.str(), err.str()};
  }

  try {
    if (verify_cmd->parsed()) return verify(target, mode, opt);
    if (reduce_cmd->parsed()) return reduce(algebra, text, opt);
    if (admissible_cmd->parsed()) return admissible(theta_spec, f_text, opt);
    if (basis_cmd->parsed()) return basis(basis_algebra, corner, csv, opt);
    if (sample_cmd->parsed()) return sample(seed, trials, prime, opt);
  } catch (const ParseError& e) {
    return {kExitUsage, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const UsageError& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::domain_error& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }
  return {kExitUsage, "", "error: no command\n"};
}

}  // namespace preproj::cli

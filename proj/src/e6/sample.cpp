#include <random>
#include <stdexcept>

#include "preproj/e6.hpp"
#include "preproj/numeric.hpp"

namespace preproj::e6 {

namespace {

// Symbolic residuals, computed once: the admissibility residual with all nine
// parameters free and the seven theorem residuals over the constrained ring.
struct SymbolicResiduals {
  QuotientElement lemma;
  std::vector<QuotientElement> theorem;
};

const SymbolicResiduals& symbolic() {
  static const SymbolicResiduals cached{admissibility_residual(DeformationParameters::symbolic_free()),
                                        theorem_residuals(DeformationParameters::symbolic_constrained())};
  return cached;
}

template <class Field>
const NumericAlgebra<Field>& numeric_pe6() {
  static const NumericAlgebra<Field> instance(pe6());
  return instance;
}

template <class Field>
const NumericAlgebra<Field>& numeric_re6() {
  static const NumericAlgebra<Field> instance(re6());
  return instance;
}

template <class Field>
std::optional<std::string> compare(const std::string& label, const DenseElement<Field>& numeric,
                                   const QuotientElement& symbolic_residual, const Assignment<Field>& point) {
  const std::vector<Field>& coords = numeric.coordinates();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Field expected = evaluate(symbolic_residual.coordinate(i), point);
    if (!(coords[i] == expected)) {
      return label + ": coordinate " + std::to_string(i) + " is " + to_string(coords[i]) + " numerically, " +
             to_string(expected) + " symbolically";
    }
    if (!is_zero(coords[i])) return label + ": coordinate " + std::to_string(i) + " = " + to_string(coords[i]);
  }
  return std::nullopt;
}

template <class Field>
Theta<Field> in_field(const std::array<Rational, 9>& values) {
  Theta<Field> out;
  for (std::size_t k = 0; k < 9; ++k) out[k] = field_cast<Field>(values[k]);
  return out;
}

template <class Field>
void require_constraints(const Theta<Field>& th) {
  const Field c1 = th[0] + th[1] - Field(2) * th[2];
  const Field d31 = th[2] - th[0];
  const Field c2 = th[5] - (Field(2) * th[4] - Field(3) * th[3] - Field(3) * d31 * d31);
  if (!is_zero(c1)) throw std::invalid_argument("theta violates t1 + t2 - 2*t3 = 0");
  if (!is_zero(c2)) throw std::invalid_argument("theta violates t6 = 2*t5 - 3*t4 - 3*(t3 - t1)^2");
}

// Runs the numeric pipeline at one point: structure-constant arithmetic only.
template <class Field>
std::optional<std::string> check_point(const Theta<Field>& th) {
  const NumericAlgebra<Field>& p = numeric_pe6<Field>();
  const NumericAlgebra<Field>& r = numeric_re6<Field>();
  const SymbolicResiduals& sym = symbolic();

  Assignment<Field> point;
  for (int k = 1; k <= 9; ++k) point.emplace(Indeterminate(k), th[static_cast<std::size_t>(k - 1)]);

  const DenseElement<Field> x = DenseElement<Field>::arrow(r, "x");
  const DenseElement<Field> y = DenseElement<Field>::arrow(r, "y");
  const DenseElement<Field> s = x + y + deformation<DenseElement<Field>, Field>(th, x, y);
  if (auto bad = compare("(x+y+f)^3", s * s * s, sym.lemma, point)) return bad;

  const Resolver<DenseElement<Field>> arrow = [&p](std::string_view n) { return DenseElement<Field>::arrow(p, n); };
  const PrimedGenerators<DenseElement<Field>> g = primed_generators<DenseElement<Field>, Field>(th, arrow);
  const std::vector<DenseElement<Field>> images =
      deformed_relations<DenseElement<Field>, Field>(th, primed_resolver(g, arrow));
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (auto bad = compare("R" + std::to_string(i + 1), images[i], sym.theorem[i], point)) return bad;
  }
  return std::nullopt;
}

std::string describe(const std::array<Rational, 9>& values) {
  std::string out;
  for (std::size_t k = 0; k < 9; ++k) out += (k ? "," : "") + std::string("t") + std::to_string(k + 1) + "=" + values[k].to_string();
  return out;
}

template <class Field>
void run_point(VerificationReport& report, const std::string& name, const std::array<Rational, 9>& values) {
  const Theta<Field> th = in_field<Field>(values);
  require_constraints(th);
  report.run(name, [&] { return check_point(th); });
}

void run_in(SampleField field, VerificationReport& report, const std::string& name,
            const std::array<Rational, 9>& values) {
  switch (field) {
    case SampleField::Rationals: return run_point<Rational>(report, name, values);
    case SampleField::Prime2: return run_point<Zp<2>>(report, name, values);
    case SampleField::Prime3: return run_point<Zp<3>>(report, name, values);
    case SampleField::Prime5: return run_point<Zp<5>>(report, name, values);
    case SampleField::Prime7: return run_point<Zp<7>>(report, name, values);
    case SampleField::Prime11: return run_point<Zp<11>>(report, name, values);
  }
}

std::uint32_t modulus(SampleField field) {
  switch (field) {
    case SampleField::Rationals: return 0;
    case SampleField::Prime2: return 2;
    case SampleField::Prime3: return 3;
    case SampleField::Prime5: return 5;
    case SampleField::Prime7: return 7;
    case SampleField::Prime11: return 11;
  }
  return 0;
}

// Constrained point: the seven free parameters are drawn, t2 and t6 follow.
std::array<Rational, 9> random_point(std::mt19937_64& rng, SampleField field) {
  const std::uint32_t p = modulus(field);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::array<Rational, 9> v;
  for (std::size_t k : {0, 2, 3, 4, 6, 7, 8}) {
    if (p == 0) {
      v[k] = Rational(num(rng), den(rng));
    } else {
      v[k] = Rational(std::uniform_int_distribution<long>(0, p - 1)(rng));
    }
  }
  const Rational d31 = v[2] - v[0];
  v[1] = Rational(2) * v[2] - v[0];
  v[5] = Rational(2) * v[4] - Rational(3) * v[3] - Rational(3) * d31 * d31;
  if (p != 0) {
    // Integers here, so print the residues.
    for (std::size_t k : {1, 5}) {
      mpz_class r = v[k].numerator() % p;
      if (r < 0) r += p;
      v[k] = Rational(r.get_si());
    }
  }
  return v;
}

}  // namespace

SampleField sample_field_from_prime(std::optional<std::uint32_t> prime) {
  if (!prime || *prime == 0) return SampleField::Rationals;
  switch (*prime) {
    case 2: return SampleField::Prime2;
    case 3: return SampleField::Prime3;
    case 5: return SampleField::Prime5;
    case 7: return SampleField::Prime7;
    case 11: return SampleField::Prime11;
    default: throw std::invalid_argument("unsupported field: " + std::to_string(*prime) + " (use 0, 2, 3, 5, 7 or 11)");
  }
}

std::string to_string(SampleField field) {
  const std::uint32_t p = modulus(field);
  return p == 0 ? "Q" : "GF(" + std::to_string(p) + ")";
}

VerificationReport sample_check(std::uint64_t seed, std::size_t trials, SampleField field) {
  VerificationReport report;
  report.title = "numeric cross-check over " + to_string(field);
  std::mt19937_64 rng(seed);
  std::vector<std::array<Rational, 9>> points;
  for (std::size_t i = 0; i < trials; ++i) points.push_back(random_point(rng, field));
  for (std::size_t i = 0; i < points.size(); ++i) {
    run_in(field, report, "trial " + std::to_string(i + 1) + " [" + describe(points[i]) + "]", points[i]);
  }
  return report;
}

VerificationReport sample_check(const std::array<Rational, 9>& theta, SampleField field) {
  VerificationReport report;
  report.title = "numeric cross-check over " + to_string(field);
  run_in(field, report, "point [" + describe(theta) + "]", theta);
  return report;
}

}  // namespace preproj::e6

#include "cml/measure.hpp"

#include <algorithm>
#include <cmath>

#include "cml/errors.hpp"

namespace cml {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_radians(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

}  // namespace

Position position_from_radians(double theta) { return wrap_radians(theta); }

double position_radians(const Position& p) {
  if (const auto* a = std::get_if<TurnAngle>(&p)) return a->radians();
  return std::get<double>(p);
}

double position_fraction(const Position& p) {
  if (const auto* a = std::get_if<TurnAngle>(&p)) return a->fraction_double();
  return std::get<double>(p) / kTwoPi;
}

bool position_equal(const Position& a, const Position& b) {
  if (a.index() != b.index()) return false;
  if (const auto* ta = std::get_if<TurnAngle>(&a)) return *ta == std::get<TurnAngle>(b);
  return std::get<double>(a) == std::get<double>(b);
}

bool position_less(const Position& a, const Position& b) {
  if (a.index() == 0 && b.index() == 0) return std::get<TurnAngle>(a) < std::get<TurnAngle>(b);
  double ka = position_fraction(a), kb = position_fraction(b);
  if (ka != kb) return ka < kb;
  return a.index() < b.index();  // exact before float at equal key
}

Position position_add(const Position& a, const Position& b) {
  if (a.index() == 0 && b.index() == 0) {
    return angle_add(std::get<TurnAngle>(a), std::get<TurnAngle>(b));
  }
  return wrap_radians(position_radians(a) + position_radians(b));
}

Position position_negate(const Position& a) {
  if (const auto* ta = std::get_if<TurnAngle>(&a)) return angle_negate(*ta);
  double t = std::get<double>(a);
  return t == 0.0 ? 0.0 : wrap_radians(kTwoPi - t);
}

long long max_atoms() {
  if (const char* env = std::getenv("CML_MAX_ATOMS")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 100000;
}

DiscreteMeasure DiscreteMeasure::from_atoms(std::vector<Atom> atoms) {
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& x, const Atom& y) { return position_less(x.position, y.position); });
  DiscreteMeasure m;
  for (auto& a : atoms) {
    if (!m.atoms_.empty() && position_equal(m.atoms_.back().position, a.position)) {
      m.atoms_.back().mass = cv_add(m.atoms_.back().mass, a.mass);
    } else {
      m.atoms_.push_back(std::move(a));
    }
  }
  m.atoms_.erase(std::remove_if(m.atoms_.begin(), m.atoms_.end(),
                                [](const Atom& a) { return exact_zero(a.mass); }),
                 m.atoms_.end());
  return m;
}

DiscreteMeasure DiscreteMeasure::delta(const Position& at, const ComplexValue& mass) {
  return from_atoms({Atom{at, mass}});
}

bool DiscreteMeasure::exact() const {
  for (const auto& a : atoms_) {
    if (a.position.index() != 0 || !is_exact(a.mass)) return false;
  }
  return true;
}

DiscreteMeasure DiscreteMeasure::scaled(const ComplexValue& c) const {
  std::vector<Atom> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) out.push_back({a.position, cv_mul(a.mass, c)});
  return from_atoms(std::move(out));
}

DiscreteMeasure operator+(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  std::vector<DiscreteMeasure::Atom> all = a.atoms_;
  all.insert(all.end(), b.atoms_.begin(), b.atoms_.end());
  return DiscreteMeasure::from_atoms(std::move(all));
}

TrigPolynomial TrigPolynomial::from_coefficients(std::map<long long, ComplexValue> coeffs) {
  TrigPolynomial p;
  for (auto& [n, c] : coeffs) {
    if (!exact_zero(c)) p.coeffs_.emplace(n, std::move(c));
  }
  return p;
}

ComplexValue TrigPolynomial::coefficient(long long n) const {
  auto it = coeffs_.find(n);
  if (it == coeffs_.end()) return cv_int(0);
  return it->second;
}

std::vector<long long> TrigPolynomial::support() const {
  std::vector<long long> s;
  s.reserve(coeffs_.size());
  for (const auto& [n, c] : coeffs_) s.push_back(n);
  return s;
}

bool TrigPolynomial::exact() const {
  for (const auto& [n, c] : coeffs_) {
    if (!is_exact(c)) return false;
  }
  return true;
}

ApproxComplex TrigPolynomial::evaluate(double t) const {
  ApproxComplex acc;
  for (const auto& [n, c] : coeffs_) {
    acc = acc + cv_approx(c) * unit_phase(static_cast<double>(n) * t);
  }
  return acc;
}

ComplexValue fourier_coefficient(const DiscreteMeasure& m, long long n) {
  ComplexValue acc = cv_int(0);
  for (const auto& atom : m.atoms()) {
    ComplexValue term;
    if (const auto* angle = std::get_if<TurnAngle>(&atom.position)) {
      if (const auto* cy = std::get_if<Cyclotomic>(&atom.mass);
          cy != nullptr && angle->q <= Cyclotomic::kMaxOrder) {
        // Exact path for cyclotomic masses on a rational grid.
        int q = angle->q.convert_to<int>();
        long long pp = angle->p.convert_to<long long>();
        term = cv_mul(atom.mass, ComplexValue(Cyclotomic::root(q, -(n % q) * pp)));
      } else if (auto quarter = quarter_turn_unit(*angle, BigInt(n))) {
        term = cv_mul(atom.mass, ComplexValue(*quarter));
      } else {
        term = cv_mul(atom.mass, ComplexValue(root_of_unity(*angle, n)));
      }
    } else {
      double theta = std::get<double>(atom.position);
      term = cv_mul(atom.mass, ComplexValue(unit_phase(-static_cast<double>(n) * theta)));
    }
    acc = cv_add(acc, term);
  }
  return acc;
}

ComplexValue fourier_coefficient(const TrigPolynomial& p, long long n) { return p.coefficient(n); }

DiscreteMeasure convolve(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  long long pairs = static_cast<long long>(a.atom_count()) * static_cast<long long>(b.atom_count());
  if (pairs > max_atoms()) throw resource_limit_error("convolution exceeds the atom cap");
  std::vector<DiscreteMeasure::Atom> out;
  out.reserve(static_cast<std::size_t>(pairs));
  for (const auto& x : a.atoms()) {
    for (const auto& y : b.atoms()) {
      out.push_back({position_add(x.position, y.position), cv_mul(x.mass, y.mass)});
    }
  }
  return DiscreteMeasure::from_atoms(std::move(out));
}

TrigPolynomial convolve(const TrigPolynomial& a, const TrigPolynomial& b) {
  std::map<long long, ComplexValue> out;
  for (const auto& [n, ca] : a.coefficients()) {
    auto it = b.coefficients().find(n);
    if (it == b.coefficients().end()) continue;
    out.emplace(n, cv_mul(ca, it->second));
  }
  return TrigPolynomial::from_coefficients(std::move(out));
}

TrigPolynomial convolve(const DiscreteMeasure& a, const TrigPolynomial& b) {
  // The absolutely continuous part absorbs: transform multiplies pointwise
  // over the polynomial's support.
  std::map<long long, ComplexValue> out;
  for (const auto& [n, cb] : b.coefficients()) {
    out.emplace(n, cv_mul(fourier_coefficient(a, n), cb));
  }
  return TrigPolynomial::from_coefficients(std::move(out));
}

TrigPolynomial convolve(const TrigPolynomial& a, const DiscreteMeasure& b) { return convolve(b, a); }

DiscreteMeasure involution(const DiscreteMeasure& m) {
  std::vector<DiscreteMeasure::Atom> out;
  out.reserve(m.atom_count());
  for (const auto& a : m.atoms()) {
    out.push_back({position_negate(a.position), cv_conj(a.mass)});
  }
  return DiscreteMeasure::from_atoms(std::move(out));
}

TrigPolynomial involution(const TrigPolynomial& p) {
  std::map<long long, ComplexValue> out;
  for (const auto& [n, c] : p.coefficients()) out.emplace(n, cv_conj(c));
  return TrigPolynomial::from_coefficients(std::move(out));
}

bool exact_equal(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  if (!a.exact() || !b.exact()) {
    throw not_decidable_error("measure equality requested on approximate data");
  }
  if (a.atom_count() != b.atom_count()) return false;
  for (std::size_t i = 0; i < a.atom_count(); ++i) {
    if (!position_equal(a.atoms()[i].position, b.atoms()[i].position)) return false;
    if (!cv_exact_equal(a.atoms()[i].mass, b.atoms()[i].mass)) return false;
  }
  return true;
}

std::pair<Rational, Rational> rational_sqrt_enclosure(const Rational& v) {
  if (v < Rational(0)) throw invalid_input_error("sqrt of a negative rational");
  if (v.is_zero()) return {Rational(0), Rational(0)};
  // sqrt(a/b) = sqrt(a*b)/b; scale by 10^12 and take the integer sqrt.
  static const BigInt kScale = boost::multiprecision::pow(BigInt(10), 12);
  BigInt a = v.numerator(), b = v.denominator();
  BigInt scaled = a * b * kScale * kScale;
  BigInt t = boost::multiprecision::sqrt(scaled);
  if (t * t == scaled) {
    Rational exact(t, b * kScale);
    return {exact, exact};
  }
  return {Rational(t, b * kScale), Rational(t + 1, b * kScale)};
}

TotalVariation total_variation(const DiscreteMeasure& m) {
  Rational lo = 0, hi = 0;
  for (const auto& a : m.atoms()) {
    if (auto nsq = cv_norm_sq_rational(a.mass)) {
      auto [l, h] = rational_sqrt_enclosure(*nsq);
      lo += l;
      hi += h;
    } else {
      ApproxComplex z = cv_approx(a.mass);
      lo += Rational::from_double(z.modulus_lower());
      hi += Rational::from_double(z.modulus_upper());
    }
  }
  return {lo, hi};
}

}  // namespace cml

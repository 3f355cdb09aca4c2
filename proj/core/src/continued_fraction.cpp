#include "cml/continued_fraction.hpp"

#include <cmath>

#include "cml/errors.hpp"
#include "cml/rational.hpp"

namespace cml {

std::vector<Convergent> convergents(double x, int count) {
  if (!std::isfinite(x) || x <= 0.0) throw invalid_input_error("convergents: x must be finite and positive");
  if (count < 1) throw invalid_input_error("convergents: count must be positive");

  constexpr long long kTermCap = (1LL << 61);

  // Exact Euclidean expansion of the dyadic rational the double represents;
  // every emitted pair is a true convergent of x, so |x - p/q| < 1/q^2 holds
  // by the standard theory.
  Rational r = Rational::from_double(x);
  BigInt num = r.numerator(), den = r.denominator();

  std::vector<Convergent> out;
  BigInt hp2 = 0, hp = 1, kp2 = 1, kp = 0;  // h_{-2}, h_{-1}, k_{-2}, k_{-1}
  for (int i = 0; i < count && den != 0; ++i) {
    BigInt a = num / den;
    BigInt rem = num - a * den;
    BigInt h = a * hp + hp2;
    BigInt k = a * kp + kp2;
    if (h > kTermCap || k > kTermCap) break;
    hp2 = hp;
    hp = h;
    kp2 = kp;
    kp = k;
    out.push_back({h.convert_to<long long>(), k.convert_to<long long>()});
    num = den;
    den = rem;
  }
  return out;
}

}  // namespace cml

#include "cml/idempotent.hpp"

#include "cml/errors.hpp"

namespace cml {

DiscreteMeasure idempotent_from_residues(int q, const std::set<int>& residues) {
  if (q < 1) throw invalid_input_error("modulus must be positive");
  if (q > Cyclotomic::kMaxOrder) throw resource_limit_error("modulus beyond the cyclotomic cap");
  for (int r : residues) {
    if (r < 0 || r >= q) throw invalid_input_error("residue outside Z/q");
  }
  std::vector<DiscreteMeasure::Atom> atoms;
  Rational inv_q(1, q);
  for (int j = 0; j < q; ++j) {
    Cyclotomic mass = Cyclotomic::from_complex_rational(ComplexRational(0), q);
    for (int r : residues) {
      mass = mass + Cyclotomic::root(q, static_cast<long long>(j) * r);
    }
    ComplexValue scaled = cv_mul(ComplexValue(mass), cv_rational(inv_q));
    atoms.push_back({reduce_angle(j, q), scaled});
  }
  return DiscreteMeasure::from_atoms(std::move(atoms));
}

bool is_idempotent(const DiscreteMeasure& m) {
  if (!m.exact()) throw not_decidable_error("idempotency is only decidable for exact measures");
  return exact_equal(convolve(m, m), m);
}

std::vector<DiscreteMeasure> enumerate_idempotents(int q) {
  if (q < 1) throw invalid_input_error("modulus must be positive");
  if (q > 16) throw resource_limit_error("idempotent enumeration guarded at q <= 16");
  std::vector<DiscreteMeasure> out;
  for (unsigned long mask = 0; mask < (1UL << q); ++mask) {
    std::set<int> residues;
    for (int r = 0; r < q; ++r) {
      if (mask & (1UL << r)) residues.insert(r);
    }
    DiscreteMeasure m = idempotent_from_residues(q, residues);
    bool duplicate = false;
    for (const auto& seen : out) {
      if (exact_equal(seen, m)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace cml

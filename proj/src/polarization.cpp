#include "dcover/polarization.hpp"

#include "dcover/cohomology.hpp"
#include "dcover/errors.hpp"

#include <tuple>

namespace dcover {

Polarization::Polarization(DivisorClass hyperplane)
    : h_(std::move(hyperplane)),
      k_(canonical_class(h_.base())),
      branch_(Integer(2) * h_ - Integer(2) * k_),
      trace_zero_(k_ - h_) {
  if (!is_very_ample(h_)) {
    if (h_.base().is_plane())
      throw DomainError("invalid polarization: O(d) on P2 is very ample only for d >= 1, got " +
                        h_.label());
    throw DomainError("invalid polarization: " + h_.label() + " on " + h_.base().name() +
                      " is not very ample (need a >= 1 and b - ae >= 1)");
  }
  n_ = cohomology(h_).h0 - 1;
  if (n_ < 2) throw DomainError("invalid polarization: ambient dimension below 2");
}

Polarization Polarization::plane(const Integer& d) {
  return Polarization(DivisorClass::plane(d));
}

Polarization Polarization::hirzebruch(const Integer& e, const Integer& a, const Integer& b) {
  return Polarization(DivisorClass::hirzebruch(e, a, b));
}

std::string Polarization::label() const { return base().name() + ", H=" + h_.label(); }

std::vector<std::string> Polarization::caveats() const {
  std::vector<std::string> out;
  if (base().is_plane() && h_.degree() <= 2)
    out.push_back("P2 with d = " + h_.degree().str() +
                  " <= 2: accepted as very ample, but outside the range where the cover family is "
                  "usually considered");
  return out;
}

bool polarization_less(const Polarization& x, const Polarization& y) {
  const auto key = [](const Polarization& p) {
    return std::make_tuple(p.base().is_plane() ? 0 : 1, p.base().e(), p.hyperplane().alpha(),
                           p.hyperplane().beta());
  };
  return key(x) < key(y);
}

}  // namespace dcover

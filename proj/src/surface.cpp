#include "dcover/surface.hpp"

#include "dcover/errors.hpp"

namespace dcover {

namespace {

void require_same_base(const DivisorClass& x, const DivisorClass& y) {
  if (!(x.base() == y.base())) throw DomainError("base mismatch");
}

}  // namespace

SurfaceBase SurfaceBase::hirzebruch(const Integer& e) {
  if (e < 0) throw DomainError("Hirzebruch surface F_e needs e >= 0, got e = " + e.str());
  return SurfaceBase(Kind::Hirzebruch, e);
}

std::string SurfaceBase::name() const {
  return is_plane() ? std::string("P2") : "F" + e_.str();
}

DivisorClass DivisorClass::plane(const Integer& d) {
  return DivisorClass(SurfaceBase::projective_plane(), d, 0);
}

DivisorClass DivisorClass::hirzebruch(const Integer& e, const Integer& alpha,
                                      const Integer& beta) {
  return DivisorClass(SurfaceBase::hirzebruch(e), alpha, beta);
}

DivisorClass DivisorClass::trivial(const SurfaceBase& base) {
  return DivisorClass(base, 0, 0);
}

DivisorClass DivisorClass::on(const SurfaceBase& base, const Integer& alpha,
                              const Integer& beta) {
  if (base.is_plane() && beta != 0)
    throw DomainError("a class on P2 has a single coefficient");
  return DivisorClass(base, alpha, beta);
}

std::string DivisorClass::label() const {
  if (base_.is_plane()) return "O(" + alpha_.str() + ")";
  std::string out = alpha_.str() + "C0";
  if (beta_ >= 0) out += "+";
  out += beta_.str() + "f";
  return out;
}

DivisorClass DivisorClass::operator-() const {
  return DivisorClass(base_, -alpha_, -beta_);
}

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  require_same_base(x, y);
  return DivisorClass(x.base_, x.alpha_ + y.alpha_, x.beta_ + y.beta_);
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
  require_same_base(x, y);
  return DivisorClass(x.base_, x.alpha_ - y.alpha_, x.beta_ - y.beta_);
}

DivisorClass operator*(const Integer& k, const DivisorClass& x) {
  return DivisorClass(x.base_, k * x.alpha_, k * x.beta_);
}

DivisorClass canonical_class(const SurfaceBase& base) {
  if (base.is_plane()) return DivisorClass::plane(-3);
  return DivisorClass::on(base, -2, -(base.e() + 2));
}

DivisorClass minimal_section(const SurfaceBase& base) {
  if (!base.is_hirzebruch()) throw DomainError("C0 is only defined on F_e");
  return DivisorClass::on(base, 1, 0);
}

DivisorClass fibre(const SurfaceBase& base) {
  if (!base.is_hirzebruch()) throw DomainError("f is only defined on F_e");
  return DivisorClass::on(base, 0, 1);
}

Integer intersect(const DivisorClass& d1, const DivisorClass& d2) {
  require_same_base(d1, d2);
  if (d1.base().is_plane()) return d1.degree() * d2.degree();
  const Integer& e = d1.base().e();
  return d1.alpha() * d2.beta() + d2.alpha() * d1.beta() - e * d1.alpha() * d2.alpha();
}

// On P^2 and F_e nef and base point free coincide.
bool is_nef(const DivisorClass& d) {
  if (d.base().is_plane()) return d.degree() >= 0;
  return d.alpha() >= 0 && d.beta() - d.alpha() * d.base().e() >= 0;
}

bool is_base_point_free(const DivisorClass& d) { return is_nef(d); }

bool is_very_ample(const DivisorClass& d) {
  if (d.base().is_plane()) return d.degree() >= 1;
  return d.alpha() >= 1 && d.beta() - d.alpha() * d.base().e() >= 1;
}

bool has_smooth_member(const DivisorClass& d) {
  if (is_base_point_free(d)) return true;
  if (d.base().is_plane() || d.alpha() < 1) return false;
  const DivisorClass moving = d - minimal_section(d.base());
  if (!is_nef(moving)) return false;
  return intersect(moving, minimal_section(d.base())) == 0;
}

}  // namespace dcover

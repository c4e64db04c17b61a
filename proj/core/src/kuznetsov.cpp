#include "tiltwall/kuznetsov.hpp"

#include "tiltwall/error.hpp"

namespace tiltwall {

namespace {

std::int64_t as_int(const Rational& r, const char* what) {
  if (!r.is_integer() || !r.value().get_num().fits_slong_p()) {
    throw Error("DomainError", std::string(what) + " is not a machine integer: " + r.str());
  }
  return r.value().get_num().get_si();
}

}  // namespace

ChernCharacter basis_character(int index) {
  if (index == 0) return {Rational(1), Rational(0), Rational(-1, 3), Rational(0)};
  return {Rational(2), Rational(-1), Rational(-1, 6), Rational(1, 6)};
}

ChernCharacter to_chern(const KuClass& k) {
  return Rational(k.a) * basis_character(0) + Rational(k.b) * basis_character(1);
}

KuClass from_chern(const ChernCharacter& v) {
  const Rational b = -v.ch1;
  const Rational a = v.ch0 - Rational(2) * b;
  if (!a.is_integer() || !b.is_integer()) {
    throw Error("NotInLattice", format(v) + " has non-integral coordinates");
  }
  KuClass k{as_int(a, "a"), as_int(b, "b")};
  if (to_chern(k) != v) throw Error("NotInLattice", format(v) + " fails the ch2/ch3 consistency equations");
  return k;
}

bool ku_numeric_membership(const ChernCharacter& v) {
  const ChernCharacter o{Rational(1), Rational(0), Rational(0), Rational(0)};
  const ChernCharacter oh{Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)};
  return chi2(o, v).is_zero() && chi2(oh, v).is_zero();
}

IntMatrix2 pairing_matrix() {
  IntMatrix2 m{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m[i][j] = as_int(chi2(basis_character(i), basis_character(j)), "pairing");
  }
  return m;
}

IntMatrix2 derived_serre_matrix() {
  // chi(x,y) = x^T P y and chi(y, Mx) = x^T M^T P^T y, so M = P^{-1} P^T.
  const IntMatrix2 p = pairing_matrix();
  const Rational det = Rational(p[0][0] * p[1][1] - p[0][1] * p[1][0]);
  if (det.is_zero()) throw Error("SerreMismatch", "pairing matrix is singular");
  const Rational inv[2][2] = {{Rational(p[1][1]) / det, Rational(-p[0][1]) / det},
                              {Rational(-p[1][0]) / det, Rational(p[0][0]) / det}};
  IntMatrix2 m{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Rational s;
      for (int k = 0; k < 2; ++k) s += inv[i][k] * Rational(p[j][k]);
      if (!s.is_integer()) throw Error("SerreMismatch", "derived Serre matrix is not integral");
      m[i][j] = as_int(s, "Serre entry");
    }
  }
  return m;
}

KuClass apply(const IntMatrix2& m, const KuClass& k) {
  return {m[0][0] * k.a + m[0][1] * k.b, m[1][0] * k.a + m[1][1] * k.b};
}

IntMatrix2 multiply(const IntMatrix2& x, const IntMatrix2& y) {
  IntMatrix2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  }
  return out;
}

KuClass serre_apply(const KuClass& k, bool shift) {
  KuClass out = apply(kSerreMatrix, k);
  if (shift) out = {-out.a, -out.b};
  return out;
}

std::array<KuClass, 3> serre_orbit(const KuClass& k) {
  const KuClass s = serre_apply(k, false);
  return {k, s, serre_apply(s, true)};
}

std::int64_t expected_dim(const ChernCharacter& v) {
  return as_int(Rational(1) - chi2(v, v), "expected dimension");
}

std::string ku_label(const KuClass& k) {
  return std::to_string(k.a) + "[I]" + (k.b < 0 ? "" : "+") + std::to_string(k.b) + "[S(I)]";
}

KuClass parse_ku_class(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("expected 'a,b', got '" + std::string(text) + "'");
  }
  const Rational a = Rational::parse(text.substr(0, comma));
  const Rational b = Rational::parse(text.substr(comma + 1));
  if (!a.is_integer() || !b.is_integer() || !a.value().get_num().fits_slong_p() ||
      !b.value().get_num().fits_slong_p()) {
    throw ParseError("Ku class coordinates must be integers: '" + std::string(text) + "'");
  }
  return {a.value().get_num().get_si(), b.value().get_num().get_si()};
}

}  // namespace tiltwall

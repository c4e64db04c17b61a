#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "tiltwall/lattice.hpp"

namespace tiltwall {

/// The class a[I] + b[S(I)] in the numerical Grothendieck group of the
/// Kuznetsov component, I the ideal sheaf of a line.
struct KuClass {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const KuClass&, const KuClass&) = default;
};

using IntMatrix2 = std::array<std::array<std::int64_t, 2>, 2>;

/// ch(I) = (1,0,-1/3,0), ch(S(I)) = (2,-1,-1/6,1/6).
ChernCharacter basis_character(int index);

ChernCharacter to_chern(const KuClass& k);
/// Inverse of to_chern; throws Error("NotInLattice") off the sublattice.
KuClass from_chern(const ChernCharacter& v);

/// chi(O, v) = 0 and chi(O(H), v) = 0.
bool ku_numeric_membership(const ChernCharacter& v);

/// Entries chi(b_i, b_j) over the basis, computed through chi2.
IntMatrix2 pairing_matrix();

/// The unique M with chi(x, y) = chi(y, Mx), solved from pairing_matrix().
/// Throws Error("SerreMismatch") if the solution is not integral.
IntMatrix2 derived_serre_matrix();

/// The numerical Serre action used by serre_apply.
inline constexpr IntMatrix2 kSerreMatrix{{{0, -1}, {1, 1}}};

KuClass apply(const IntMatrix2& m, const KuClass& k);
IntMatrix2 multiply(const IntMatrix2& x, const IntMatrix2& y);

/// S(k), or S[1](k) = -S(k) when shift is set.
KuClass serre_apply(const KuClass& k, bool shift);

/// [k, S(k), S[1](S(k))]; one more S returns to k.
std::array<KuClass, 3> serre_orbit(const KuClass& k);

/// 1 - chi(v, v); DomainError if that is not an integer.
std::int64_t expected_dim(const ChernCharacter& v);

/// "a[I]+b[S(I)]".
std::string ku_label(const KuClass& k);
/// Literal "a,b".
KuClass parse_ku_class(std::string_view text);

}  // namespace tiltwall

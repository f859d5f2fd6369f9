#pragma once

// Knot families with Seifert matrices and inversion data, and the text file
// format used to exchange them.
//
//   schema=1
//   name=nine46
//   params=
//   seifert=0,2;1,0
//   involution=swap_halves
//   notes=...
//
// `involution` is either a constructor name (identity_conj, negate_conj,
// swap_halves) or rows separated by `;` of polynomial entries separated
// by `,`.

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "eqknot/witt.hpp"

namespace eqknot {

struct KnotSpec {
  std::string name;
  std::vector<std::pair<std::string, Rational>> params;
  IntMatrix seifert;
  std::variant<std::string, LambdaMatrix> involution;
  std::string notes;

  friend bool operator==(const KnotSpec&, const KnotSpec&) = default;
};

using ParamMap = std::map<std::string, Rational>;

std::vector<std::string> builtin_names();

/// Throws DomainError for unknown names or invalid parameters.
KnotSpec builtin(std::string_view name, const ParamMap& params = {});

/// `name`, `name:k=v,k=v`, or `swap_double:<ref>`.
KnotSpec builtin_ref(std::string_view ref);

/// J plus its reverse: Seifert matrix A + A^T (block sum), halves swapped.
KnotSpec swap_double(const KnotSpec& j);

/// Resolves constructor names to a matrix of the right size.
LambdaMatrix involution_matrix(const KnotSpec& spec);

/// Builds the triple without running the axiom checks. Throws
/// ValidationError("seifert", ...) for a non-Seifert matrix and
/// ValidationError("involution_shape", ...) for a mis-sized involution.
EquivariantTriple assemble_unchecked(const KnotSpec& spec);

/// assemble_unchecked followed by require_valid.
EquivariantTriple assemble(const KnotSpec& spec);

/// Equivariant connected sum: block Seifert matrix, block involution.
KnotSpec sum_specs(std::span<const KnotSpec> specs);

KnotSpec parse_spec(std::string_view text);
std::string format_spec(const KnotSpec& spec);
KnotSpec load(const std::filesystem::path& path);
void save(const KnotSpec& spec, const std::filesystem::path& path);

/// Twist knot K_a in its cyclic presentation Lambda/(Delta) with generator
/// b2, pairing value Bl(b2, b2) and tau(q) = q(t^-1).
EquivariantTriple twist_ka_cyclic(long a);

/// det(t*A - A^T) for the twist knot Seifert matrix, normalized.
LaurentPoly twist_ka_polynomial(long a);

}  // namespace eqknot

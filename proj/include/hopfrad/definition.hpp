#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "hopfrad/module_algebra.hpp"

namespace hopfrad {

/// Parsed JSON definition of an H-module algebra.
///
///   {
///     "schema_version": 1,
///     "name": "e2",
///     "field": {"kind": "rationals"} | {"kind": "prime", "p": 5},
///     "expected_level": "weak" | "module" | "unital",
///     "algebra": {"dim": 2, "mult": [[i, j, k, v], ...], "unit": [v, ...]},
///     "hopf": {"dim": 2, "mult": [...], "unit": [...],
///              "comult": [[i, j, k, v], ...],  // Δ(e_i) ∋ v e_j ⊗ e_k
///              "counit": [v, ...],
///              "antipode": [[v, ...], ...]},   // antipode[i] = S(e_i)
///     "action": [[h, r, k, v], ...],            // e_h · e_r ∋ v e_k
///     "expected": {"r_Hb": [[row], ...], ...}   // optional recorded radicals
///   }
///
/// Omitted triples are zero. Scalars are integers or strings "a" / "a/b".
struct DefinitionFile {
  std::string name;
  CheckLevel expected_level = CheckLevel::unital;
  HModuleAlgebra module;
  std::map<std::string, Subspace> expected;
};

/// Throws ParseError naming the source and the offending field.
DefinitionFile parse_definition(const std::string& text, const std::string& source = "<input>");
DefinitionFile load_definition(const std::filesystem::path& path);

/// Sorted keys, sparse triples, one trailing newline. Rationals are written
/// as strings, residues as integers.
std::string serialize_definition(const DefinitionFile& def);

/// RREF rows scaled to integers (denominators cleared). Entries are decimal
/// strings so that large numerators survive.
std::vector<std::vector<std::string>> integer_rows(const Subspace& s);

}  // namespace hopfrad

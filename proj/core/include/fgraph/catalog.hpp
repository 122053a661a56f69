#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgraph/group_table.hpp"
#include "fgraph/presentation.hpp"

namespace fgraph {

enum class Family {
  kCyclic,              // (n)
  kElementaryAbelian,   // (p, k)
  kAbelianOfType,       // (d1, ..., dk)
  kDihedral,            // (2n)
  kGeneralizedQuaternion,  // (2^n), n >= 3
  kSemiDihedral,        // (2^n), n >= 4
  kModular,             // (2^n), n >= 4
  kMetacyclic,          // (p, m, q, n, lambda): <x,y : x^(p^m), y^(q^n), x^y = x^lambda>
  kK14Family,           // (n): <x,y : x^(2^n), y^3, y^x = y^-1, (x^2)^y = x^2>
  kG1,
  kG2,
  kG3,
  kG4,
  kSymmetric,           // (n)
  kAlternating,         // (n)
  kFrobenius,           // (p, q[, k]): GF(p^k)+ extended by the order-q multipliers
};

struct CatalogSpec {
  Family family;
  std::vector<long long> params;
};

const char* family_name(Family family);
// Expected order for valid parameters; throws Error(kInvalidParameter).
std::size_t catalog_order(const CatalogSpec& spec);
// Canonical short name, e.g. "C12", "Meta(5,1,2,1,4)", "SD16".
std::string catalog_name(const CatalogSpec& spec);

// Throws Error(kInvalidParameter) or Error(kCapExceeded).
GroupTable catalog_group(const CatalogSpec& spec, const Limits& limits = {});

// Defining presentation when the family has one.
std::optional<Presentation> catalog_presentation(const CatalogSpec& spec);

// Multiplicative order of a mod m, 0 when gcd(a, m) != 1.
std::size_t multiplicative_order(long long a, long long m);

}  // namespace fgraph

#include "fgraph/catalog.hpp"

#include <numeric>
#include <sstream>

#include "fgraph/constructions.hpp"
#include "fgraph/error.hpp"
#include "fgraph/permutation.hpp"
#include "fgraph/structure.hpp"

namespace fgraph {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::kInvalidParameter, what);
}

void expect_params(const CatalogSpec& spec, std::size_t lo, std::size_t hi) {
  if (spec.params.size() < lo || spec.params.size() > hi) {
    invalid(std::string(family_name(spec.family)) + ": wrong number of parameters");
  }
}

long long ipow(long long base, long long exp) {
  long long out = 1;
  for (long long i = 0; i < exp; ++i) {
    out *= base;
    if (out > (1LL << 40)) invalid("parameter overflow");
  }
  return out;
}

// Returns k with value = 2^k, or -1.
int log2_exact(long long value) {
  if (value < 1 || (value & (value - 1)) != 0) return -1;
  int k = 0;
  while ((1LL << k) < value) ++k;
  return k;
}

long long two_power_param(const CatalogSpec& spec, int min_exp) {
  expect_params(spec, 1, 1);
  int k = log2_exact(spec.params[0]);
  if (k < min_exp) {
    invalid(std::string(family_name(spec.family)) + ": order must be 2^n with n >= " +
            std::to_string(min_exp));
  }
  return spec.params[0];
}

Presentation make_pres(std::vector<std::string> names, const std::string& body) {
  std::ostringstream text;
  text << "Pres[";
  for (std::size_t i = 0; i < names.size(); ++i) text << (i ? "," : "") << names[i];
  text << " | " << body << "]";
  return parse_presentation(text.str());
}

struct FiniteField {
  long long p = 2;
  long long k = 1;
  std::vector<long long> modulus;  // monic, degree k, low coefficient first

  long long size() const { return ipow(p, k); }

  std::vector<long long> digits(long long x) const {
    std::vector<long long> out(k);
    for (long long i = 0; i < k; ++i) {
      out[i] = x % p;
      x /= p;
    }
    return out;
  }
  long long encode(const std::vector<long long>& d) const {
    long long x = 0;
    for (long long i = k - 1; i >= 0; --i) x = x * p + d[i];
    return x;
  }
  long long add(long long a, long long b) const {
    auto da = digits(a), db = digits(b);
    for (long long i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % p;
    return encode(da);
  }
  long long mul(long long a, long long b) const {
    auto da = digits(a), db = digits(b);
    std::vector<long long> prod(2 * k, 0);
    for (long long i = 0; i < k; ++i) {
      for (long long j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    for (long long deg = 2 * k - 1; deg >= k; --deg) {
      long long c = prod[deg];
      if (c == 0) continue;
      for (long long i = 0; i <= k; ++i) {
        prod[deg - k + i] = ((prod[deg - k + i] - c * modulus[i]) % p + p) % p;
      }
    }
    prod.resize(k);
    return encode(prod);
  }
};

bool has_root_free_factorization(long long p, const std::vector<long long>& poly) {
  // Irreducible iff no monic factor of degree 1..deg/2; brute force on the
  // tiny fields used here.
  long long deg = static_cast<long long>(poly.size()) - 1;
  for (long long d = 1; d <= deg / 2; ++d) {
    long long count = ipow(p, d);
    for (long long code = 0; code < count; ++code) {
      std::vector<long long> f(d + 1);
      long long c = code;
      for (long long i = 0; i < d; ++i) {
        f[i] = c % p;
        c /= p;
      }
      f[d] = 1;
      std::vector<long long> r = poly;
      for (long long top = deg; top >= d; --top) {
        long long lead = r[top];
        if (lead == 0) continue;
        for (long long i = 0; i <= d; ++i) {
          r[top - d + i] = ((r[top - d + i] - lead * f[i]) % p + p) % p;
        }
      }
      bool zero = true;
      for (long long i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

FiniteField make_field(long long p, long long k) {
  FiniteField field{p, k, {}};
  if (k == 1) {
    field.modulus = {0, 1};
    return field;
  }
  long long count = ipow(p, k);
  for (long long code = 0; code < count; ++code) {
    std::vector<long long> poly(k + 1);
    long long c = code;
    for (long long i = 0; i < k; ++i) {
      poly[i] = c % p;
      c /= p;
    }
    poly[k] = 1;
    if (poly[0] != 0 && has_root_free_factorization(p, poly)) {
      field.modulus = poly;
      return field;
    }
  }
  invalid("no irreducible polynomial found");
}

GroupTable build_frobenius(long long p, long long q, long long k, const Limits& limits) {
  FiniteField field = make_field(p, k);
  const long long size = field.size();
  long long omega = -1;
  for (long long x = 1; x < size && omega < 0; ++x) {
    long long y = x;
    long long ord = 1;
    while (y != 1) {
      y = field.mul(y, x);
      ++ord;
    }
    if (ord == q) omega = x;
  }
  if (omega < 0) invalid("Frobenius: no multiplier of order q");

  std::vector<Elem> add(size * size);
  std::vector<std::string> labels(size);
  for (long long a = 0; a < size; ++a) {
    auto d = field.digits(a);
    std::ostringstream lab;
    lab << "v";
    for (long long i = 0; i < k; ++i) lab << d[i];
    labels[a] = a == 0 ? "0" : lab.str();
    for (long long b = 0; b < size; ++b) add[a * size + b] = static_cast<Elem>(field.add(a, b));
  }
  GroupTable kernel = GroupTable::from_cayley(
      std::move(add), size, std::move(labels),
      {"catalog", "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")+"}, {}, limits);
  GroupTable complement = cyclic_group(static_cast<std::size_t>(q), limits);
  // multiplier for y^j is omega^j
  std::vector<std::vector<Elem>> action(q, std::vector<Elem>(size));
  long long scale = 1;
  for (long long j = 0; j < q; ++j) {
    for (long long a = 0; a < size; ++a) action[j][a] = static_cast<Elem>(field.mul(scale, a));
    scale = field.mul(scale, omega);
  }
  return semidirect_product(kernel, complement, action, limits);
}

GroupTable from_catalog_presentation(const CatalogSpec& spec, const Limits& limits) {
  Presentation pres = *catalog_presentation(spec);
  std::size_t expected = catalog_order(spec);
  GroupTable g = group_from_presentation(pres, std::max<std::size_t>(10 * expected, 64), limits);
  if (g.order() != expected) {
    throw Error(ErrorKind::kCertificate, catalog_name(spec) + ": presented order " +
                                             std::to_string(g.order()) + " != expected " +
                                             std::to_string(expected));
  }
  return g;
}

}  // namespace

std::size_t multiplicative_order(long long a, long long m) {
  if (m <= 0) return 0;
  a %= m;
  if (a < 0) a += m;
  if (std::gcd(a, m) != 1) return 0;
  if (m == 1) return 1;
  long long x = a;
  std::size_t ord = 1;
  while (x != 1) {
    x = (x * a) % m;
    ++ord;
  }
  return ord;
}

const char* family_name(Family family) {
  switch (family) {
    case Family::kCyclic: return "Cyclic";
    case Family::kElementaryAbelian: return "ElementaryAbelian";
    case Family::kAbelianOfType: return "AbelianOfType";
    case Family::kDihedral: return "Dihedral";
    case Family::kGeneralizedQuaternion: return "GeneralizedQuaternion";
    case Family::kSemiDihedral: return "SemiDihedral";
    case Family::kModular: return "Modular";
    case Family::kMetacyclic: return "Metacyclic";
    case Family::kK14Family: return "K14Family";
    case Family::kG1: return "G1";
    case Family::kG2: return "G2";
    case Family::kG3: return "G3";
    case Family::kG4: return "G4";
    case Family::kSymmetric: return "Sym";
    case Family::kAlternating: return "Alt";
    case Family::kFrobenius: return "Frobenius";
  }
  return "?";
}

std::size_t catalog_order(const CatalogSpec& spec) {
  const auto& a = spec.params;
  switch (spec.family) {
    case Family::kCyclic:
      expect_params(spec, 1, 1);
      if (a[0] < 1) invalid("Cyclic: order must be positive");
      return static_cast<std::size_t>(a[0]);
    case Family::kElementaryAbelian:
      expect_params(spec, 2, 2);
      if (!is_prime(static_cast<std::size_t>(std::max(0LL, a[0])))) invalid("ElementaryAbelian: p must be prime");
      if (a[1] < 1) invalid("ElementaryAbelian: rank must be positive");
      return static_cast<std::size_t>(ipow(a[0], a[1]));
    case Family::kAbelianOfType: {
      expect_params(spec, 1, 64);
      long long n = 1;
      for (long long d : a) {
        if (d < 1) invalid("AbelianOfType: invariants must be positive");
        n *= d;
        if (n > (1LL << 40)) invalid("parameter overflow");
      }
      return static_cast<std::size_t>(n);
    }
    case Family::kDihedral:
      expect_params(spec, 1, 1);
      if (a[0] < 2 || a[0] % 2 != 0) invalid("Dihedral: order must be even and >= 2");
      return static_cast<std::size_t>(a[0]);
    case Family::kGeneralizedQuaternion:
      return static_cast<std::size_t>(two_power_param(spec, 3));
    case Family::kSemiDihedral:
    case Family::kModular:
      return static_cast<std::size_t>(two_power_param(spec, 4));
    case Family::kMetacyclic: {
      expect_params(spec, 5, 5);
      long long p = a[0], m = a[1], q = a[2], n = a[3], lam = a[4];
      if (!is_prime(static_cast<std::size_t>(std::max(0LL, p))) ||
          !is_prime(static_cast<std::size_t>(std::max(0LL, q))) || p == q) {
        invalid("Metacyclic: p and q must be distinct primes");
      }
      if (m < 1 || n < 1) invalid("Metacyclic: exponents must be positive");
      long long pm = ipow(p, m);
      if (multiplicative_order(lam, pm) != static_cast<std::size_t>(q)) {
        invalid("Metacyclic: lambda=" + std::to_string(lam) + " must have multiplicative order " +
                std::to_string(q) + " modulo " + std::to_string(pm));
      }
      return static_cast<std::size_t>(pm * ipow(q, n));
    }
    case Family::kK14Family:
      expect_params(spec, 1, 1);
      if (a[0] < 0 || a[0] > 20) invalid("K14Family: n out of range");
      return static_cast<std::size_t>(3 * ipow(2, a[0]));
    case Family::kG1:
    case Family::kG2:
    case Family::kG3:
    case Family::kG4:
      expect_params(spec, 0, 0);
      return 16;
    case Family::kSymmetric:
    case Family::kAlternating: {
      expect_params(spec, 1, 1);
      if (a[0] < 1 || a[0] > 8) invalid("Sym/Alt: degree must be in 1..8");
      std::size_t f = 1;
      for (long long i = 2; i <= a[0]; ++i) f *= static_cast<std::size_t>(i);
      if (spec.family == Family::kAlternating && a[0] >= 2) f /= 2;
      return f;
    }
    case Family::kFrobenius: {
      expect_params(spec, 2, 3);
      long long p = a[0], q = a[1], k = a.size() == 3 ? a[2] : 1;
      if (!is_prime(static_cast<std::size_t>(std::max(0LL, p)))) invalid("Frobenius: p must be prime");
      if (k < 1) invalid("Frobenius: k must be positive");
      long long size = ipow(p, k);
      if (q < 2 || (size - 1) % q != 0) {
        invalid("Frobenius: q must divide p^k - 1 and exceed 1");
      }
      return static_cast<std::size_t>(size * q);
    }
  }
  invalid("unknown family");
}

std::string catalog_name(const CatalogSpec& spec) {
  const auto& a = spec.params;
  auto join = [&](const char* head) {
    std::ostringstream out;
    out << head << '(';
    for (std::size_t i = 0; i < a.size(); ++i) out << (i ? "," : "") << a[i];
    out << ')';
    return out.str();
  };
  switch (spec.family) {
    case Family::kCyclic: return "C" + std::to_string(a.at(0));
    case Family::kElementaryAbelian: return join("E");
    case Family::kAbelianOfType: {
      std::ostringstream out;
      for (std::size_t i = 0; i < a.size(); ++i) out << (i ? "x" : "") << 'C' << a[i];
      return out.str();
    }
    case Family::kDihedral: return "D" + std::to_string(a.at(0));
    case Family::kGeneralizedQuaternion: return "Q" + std::to_string(a.at(0));
    case Family::kSemiDihedral: return "SD" + std::to_string(a.at(0));
    case Family::kModular: return "M" + std::to_string(a.at(0));
    case Family::kMetacyclic: return join("Meta");
    case Family::kK14Family: return join("K14");
    case Family::kG1: return "G1";
    case Family::kG2: return "G2";
    case Family::kG3: return "G3";
    case Family::kG4: return "G4";
    case Family::kSymmetric: return "S" + std::to_string(a.at(0));
    case Family::kAlternating: return "A" + std::to_string(a.at(0));
    case Family::kFrobenius: return join("Frob");
  }
  return "?";
}

std::optional<Presentation> catalog_presentation(const CatalogSpec& spec) {
  const auto& a = spec.params;
  catalog_order(spec);  // validates
  auto s = [](long long v) { return std::to_string(v); };
  switch (spec.family) {
    case Family::kCyclic:
      return make_pres({"a"}, "a^" + s(a[0]));
    case Family::kDihedral: {
      long long n = a[0] / 2;
      return make_pres({"a", "b"}, "a^" + s(n) + ", b^2, (a*b)^2");
    }
    case Family::kGeneralizedQuaternion: {
      long long half = a[0] / 2;
      return make_pres({"a", "b"}, "a^" + s(half) + ", b^2 = a^" + s(half / 2) + ", a^b = a^-1");
    }
    case Family::kSemiDihedral: {
      long long half = a[0] / 2;
      return make_pres({"u", "v"}, "u^" + s(half) + ", v^2, u^v = u^" + s(half / 2 - 1));
    }
    case Family::kModular: {
      long long half = a[0] / 2;
      return make_pres({"u", "v"}, "u^" + s(half) + ", v^2, u^v = u^" + s(half / 2 + 1));
    }
    case Family::kMetacyclic: {
      long long pm = ipow(a[0], a[1]), qn = ipow(a[2], a[3]);
      return make_pres({"x", "y"}, "x^" + s(pm) + ", y^" + s(qn) + ", x^y = x^" + s(a[4]));
    }
    case Family::kK14Family:
      return make_pres({"x", "y"},
                       "x^" + s(ipow(2, a[0])) + ", y^3, y^x = y^-1, (x^2)^y = x^2");
    case Family::kG1:
      return make_pres({"u", "v"}, "u^4, v^2, [v,u,u], [v,u]^2");
    case Family::kG2:
      return make_pres({"u", "v"}, "u^4, v^4, u^v*u");
    case Family::kG3:
      return make_pres({"u", "v"}, "u^8, v^2, u^v*u^3");
    case Family::kG4:
      return make_pres({"u", "v"}, "u^8, u^v*u, u^4 = v^2");
    default:
      return std::nullopt;
  }
}

GroupTable catalog_group(const CatalogSpec& spec, const Limits& limits) {
  std::size_t order = catalog_order(spec);
  if (order > limits.table_cap) {
    throw Error(ErrorKind::kCapExceeded, catalog_name(spec) + " has order " +
                                             std::to_string(order) + " above the table cap");
  }
  const auto& a = spec.params;
  GroupTable g;
  switch (spec.family) {
    case Family::kCyclic:
      g = cyclic_group(order, limits);
      break;
    case Family::kElementaryAbelian:
    case Family::kAbelianOfType: {
      std::vector<long long> invariants =
          spec.family == Family::kAbelianOfType ? a : std::vector<long long>(a[1], a[0]);
      g = cyclic_group(static_cast<std::size_t>(invariants[0]), limits);
      for (std::size_t i = 1; i < invariants.size(); ++i) {
        g = direct_product(g, cyclic_group(static_cast<std::size_t>(invariants[i]), limits), limits);
      }
      break;
    }
    case Family::kDihedral: {
      std::size_t n = order / 2;
      GroupTable rot = cyclic_group(n, limits);
      GroupTable flip = cyclic_group(2, limits);
      std::vector<std::vector<Elem>> action(2, std::vector<Elem>(n));
      for (std::size_t x = 0; x < n; ++x) {
        action[0][x] = static_cast<Elem>(x);
        action[1][x] = static_cast<Elem>((n - x) % n);
      }
      g = semidirect_product(rot, flip, action, limits);
      break;
    }
    case Family::kMetacyclic: {
      std::size_t pm = static_cast<std::size_t>(ipow(a[0], a[1]));
      std::size_t qn = order / pm;
      // y^-1 x y = x^lambda, so conjugation x -> y x y^-1 multiplies by lambda^-1.
      long long lam = ((a[4] % static_cast<long long>(pm)) + static_cast<long long>(pm)) %
                      static_cast<long long>(pm);
      long long lam_inv = 1;
      for (std::size_t i = 1; i < multiplicative_order(lam, static_cast<long long>(pm)); ++i) {
        lam_inv = (lam_inv * lam) % static_cast<long long>(pm);
      }
      GroupTable kernel = cyclic_group(pm, limits);
      GroupTable top = cyclic_group(qn, limits);
      std::vector<std::vector<Elem>> action(qn, std::vector<Elem>(pm));
      long long scale = 1;
      for (std::size_t j = 0; j < qn; ++j) {
        for (std::size_t x = 0; x < pm; ++x) {
          action[j][x] = static_cast<Elem>((static_cast<long long>(x) * scale) %
                                           static_cast<long long>(pm));
        }
        scale = (scale * lam_inv) % static_cast<long long>(pm);
      }
      g = semidirect_product(kernel, top, action, limits);
      break;
    }
    case Family::kSymmetric:
    case Family::kAlternating: {
      std::size_t n = static_cast<std::size_t>(a[0]);
      PermutationGenerators gens{n, {}};
      if (spec.family == Family::kSymmetric) {
        if (n >= 2) {
          gens.generators.push_back(permutation_from_cycles({{1, 2}}, n));
          std::vector<int> full(n);
          std::iota(full.begin(), full.end(), 1);
          if (n >= 3) gens.generators.push_back(permutation_from_cycles({full}, n));
        }
      } else {
        for (std::size_t k = 3; k <= n; ++k) {
          gens.generators.push_back(
              permutation_from_cycles({{1, 2, static_cast<int>(k)}}, n));
        }
      }
      g = group_from_permutations(gens, limits);
      break;
    }
    case Family::kFrobenius:
      g = build_frobenius(a[0], a[1], a.size() == 3 ? a[2] : 1, limits);
      break;
    default:
      g = from_catalog_presentation(spec, limits);
      break;
  }
  if (g.order() != order) {
    throw Error(ErrorKind::kCertificate, catalog_name(spec) + ": constructed order " +
                                             std::to_string(g.order()) + " != " +
                                             std::to_string(order));
  }
  return g.with_origin({"catalog", catalog_name(spec)});
}

}  // namespace fgraph

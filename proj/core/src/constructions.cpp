#include "fgraph/constructions.hpp"

#include "fgraph/error.hpp"

namespace fgraph {

namespace {

void check_order(std::size_t order, const Limits& limits) {
  if (order > limits.table_cap) {
    throw Error(ErrorKind::kCapExceeded,
                "result order " + std::to_string(order) + " exceeds table cap " +
                    std::to_string(limits.table_cap));
  }
}

}  // namespace

GroupTable cyclic_group(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(ErrorKind::kInvalidParameter, "cyclic group of order 0");
  check_order(n, limits);
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = static_cast<Elem>((i + j) % n);
  }
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return GroupTable::from_cayley(std::move(mul), n, std::move(labels),
                                 {"catalog", "C" + std::to_string(n)},
                                 std::move(gens), limits);
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b,
                          const Limits& limits) {
  std::size_t na = a.order(), nb = b.order(), n = na * nb;
  check_order(n, limits);
  std::vector<Elem> mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    Elem xa = static_cast<Elem>(x / nb), xb = static_cast<Elem>(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      Elem ya = static_cast<Elem>(y / nb), yb = static_cast<Elem>(y % nb);
      mul[x * n + y] = static_cast<Elem>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = "(" + a.label(static_cast<Elem>(x / nb)) + "," +
                b.label(static_cast<Elem>(x % nb)) + ")";
  }
  std::vector<Elem> gens;
  for (Elem g : a.generators()) gens.push_back(static_cast<Elem>(g * nb));
  for (Elem g : b.generators()) gens.push_back(g);
  return GroupTable::from_cayley(
      std::move(mul), n, std::move(labels),
      {"product", "(" + a.origin().description + ") x (" +
                      b.origin().description + ")"},
      std::move(gens), limits);
}

std::vector<std::vector<Elem>> extend_action(
    const GroupTable& acting, const std::vector<Elem>& acting_generators,
    const std::vector<std::vector<Elem>>& generator_images) {
  std::size_t n_size = generator_images.empty() ? 0 : generator_images.front().size();
  std::vector<std::vector<Elem>> action(acting.order());
  std::vector<Elem> identity(n_size);
  for (std::size_t i = 0; i < n_size; ++i) identity[i] = static_cast<Elem>(i);
  action[GroupTable::kIdentity] = identity;
  std::vector<char> done(acting.order(), 0);
  done[GroupTable::kIdentity] = 1;
  std::vector<Elem> queue{GroupTable::kIdentity};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Elem h = queue[q];
    for (std::size_t k = 0; k < acting_generators.size(); ++k) {
      Elem hg = acting.mul(h, acting_generators[k]);
      if (done[hg]) continue;
      // phi(h g) = phi(h) o phi(g)
      std::vector<Elem> image(n_size);
      for (std::size_t x = 0; x < n_size; ++x) {
        image[x] = action[h][generator_images[k][x]];
      }
      action[hg] = std::move(image);
      done[hg] = 1;
      queue.push_back(hg);
    }
  }
  for (std::size_t h = 0; h < acting.order(); ++h) {
    if (!done[h]) action[h] = identity;
  }
  return action;
}

GroupTable semidirect_product(const GroupTable& normal, const GroupTable& acting,
                              const std::vector<std::vector<Elem>>& action,
                              const Limits& limits) {
  std::size_t nn = normal.order(), nh = acting.order(), n = nn * nh;
  check_order(n, limits);
  if (action.size() != nh) {
    throw Error(ErrorKind::kValidation, "action-not-automorphism: wrong action size");
  }
  for (std::size_t h = 0; h < nh; ++h) {
    const auto& phi = action[h];
    if (phi.size() != nn || phi[GroupTable::kIdentity] != GroupTable::kIdentity) {
      throw Error(ErrorKind::kValidation,
                  "action-not-automorphism: image of element " + std::to_string(h));
    }
    std::vector<char> seen(nn, 0);
    for (Elem v : phi) {
      if (v >= nn || seen[v]) {
        throw Error(ErrorKind::kValidation,
                    "action-not-automorphism: image of element " +
                        std::to_string(h) + " is not a bijection");
      }
      seen[v] = 1;
    }
    for (std::size_t x = 0; x < nn; ++x) {
      for (std::size_t y = 0; y < nn; ++y) {
        if (phi[normal.mul(static_cast<Elem>(x), static_cast<Elem>(y))] !=
            normal.mul(phi[x], phi[y])) {
          throw Error(ErrorKind::kValidation,
                      "action-not-automorphism: image of element " +
                          std::to_string(h) + " does not preserve products");
        }
      }
    }
  }
  auto check_pair = [&](Elem h1, Elem h2) {
    const auto& composite = action[acting.mul(h1, h2)];
    for (std::size_t x = 0; x < nn; ++x) {
      if (composite[x] != action[h1][action[h2][x]]) {
        throw Error(ErrorKind::kValidation,
                    "action-not-homomorphism at (" + std::to_string(h1) + "," +
                        std::to_string(h2) + ")");
      }
    }
  };
  if (nh <= 64) {
    for (Elem h1 = 0; h1 < nh; ++h1) {
      for (Elem h2 = 0; h2 < nh; ++h2) check_pair(h1, h2);
    }
  } else {
    for (Elem h1 = 0; h1 < nh; ++h1) {
      for (Elem g : acting.generators()) check_pair(h1, g);
    }
  }
  std::vector<Elem> mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    Elem n1 = static_cast<Elem>(x / nh), h1 = static_cast<Elem>(x % nh);
    for (std::size_t y = 0; y < n; ++y) {
      Elem n2 = static_cast<Elem>(y / nh), h2 = static_cast<Elem>(y % nh);
      mul[x * n + y] = static_cast<Elem>(normal.mul(n1, action[h1][n2]) * nh +
                                         acting.mul(h1, h2));
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = "(" + normal.label(static_cast<Elem>(x / nh)) + "," +
                acting.label(static_cast<Elem>(x % nh)) + ")";
  }
  std::vector<Elem> gens;
  for (Elem g : normal.generators()) gens.push_back(static_cast<Elem>(g * nh));
  for (Elem g : acting.generators()) gens.push_back(g);
  return GroupTable::from_cayley(
      std::move(mul), n, std::move(labels),
      {"product", "(" + normal.origin().description + ") : (" +
                      acting.origin().description + ")"},
      std::move(gens), limits);
}

QuotientGroup quotient_group(const GroupTable& group, const Subgroup& normal,
                             const Limits& limits) {
  const std::size_t n = group.order();
  std::vector<Elem> members = normal.elements();
  for (Elem g : group.generators()) {
    for (Elem x : members) {
      if (!normal.contains(group.conjugate(x, g))) {
        throw Error(ErrorKind::kNotNormal, "not-normal: subgroup of order " +
                                               std::to_string(normal.order()) +
                                               " is not normal");
      }
    }
  }
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> projection(n, kUnset);
  std::vector<Elem> reps;
  for (std::size_t g = 0; g < n; ++g) {
    if (projection[g] != kUnset) continue;
    Elem coset = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(g));
    for (Elem x : members) projection[group.mul(static_cast<Elem>(g), x)] = coset;
  }
  std::size_t q = reps.size();
  std::vector<Elem> mul(q * q);
  std::vector<std::string> labels(q);
  for (std::size_t i = 0; i < q; ++i) {
    labels[i] = i == 0 ? "1" : group.label(reps[i]) + "N";
    for (std::size_t j = 0; j < q; ++j) {
      mul[i * q + j] = projection[group.mul(reps[i], reps[j])];
    }
  }
  std::vector<Elem> gens;
  for (Elem g : group.generators()) {
    if (projection[g] != 0) gens.push_back(projection[g]);
  }
  GroupTable table = GroupTable::from_cayley(
      std::move(mul), q, std::move(labels),
      {"quotient", "(" + group.origin().description + ") / N" +
                       std::to_string(normal.order())},
      std::move(gens), limits);
  return {std::move(table), std::move(projection)};
}

}  // namespace fgraph

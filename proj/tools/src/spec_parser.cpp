#include "fgraph/cli/spec_parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "fgraph/constructions.hpp"
#include "fgraph/error.hpp"

namespace fgraph::cli {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    std::vector<GroupSpec> factors;
    factors.push_back(factor());
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == 'x') {
      ++pos_;
      factors.push_back(factor());
      skip_space();
    }
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    if (factors.size() == 1) return std::move(factors.front());
    GroupSpec product;
    product.kind = GroupSpec::Kind::kProduct;
    product.factors = std::move(factors);
    return product;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    std::ostringstream out;
    out << "parse error at position " << pos + 1 << ": " << message;
    throw Error(ErrorKind::kMalformedInput, out.str());
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long long integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 12) fail_at(start, "integer too large");
    return std::stoll(digits);
  }

  std::vector<long long> argument_list() {
    expect('(');
    std::vector<long long> args{integer()};
    while (peek(',')) {
      ++pos_;
      args.push_back(integer());
    }
    expect(')');
    return args;
  }

  // Text between a '[' at the cursor and its matching ']', brackets nested.
  std::string_view bracketed() {
    expect('[');
    std::size_t start = pos_;
    int depth = 1;
    while (pos_ < text_.size()) {
      char c = text_[pos_++];
      if (c == '[') ++depth;
      if (c == ']' && --depth == 0) return text_.substr(start, pos_ - 1 - start);
    }
    fail_at(start - 1, "unterminated '['");
  }

  GroupSpec catalog(Family family, std::vector<long long> params, std::size_t at) {
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::kCatalog;
    spec.catalog = {family, std::move(params)};
    try {
      catalog_order(spec.catalog);
    } catch (const Error& e) {
      throw Error(e.kind(), "invalid parameters at position " + std::to_string(at + 1) + ": " +
                                e.what());
    }
    return spec;
  }

  GroupSpec permutations(std::size_t at) {
    std::string_view body = bracketed();
    std::vector<std::vector<std::vector<int>>> gens;
    std::size_t degree = 1;
    std::size_t begin = 0;
    while (true) {
      std::size_t end = body.find(';', begin);
      std::string_view piece = body.substr(begin, end == std::string_view::npos ? end : end - begin);
      std::vector<std::vector<int>> cycles;
      try {
        cycles = parse_cycles(piece);
      } catch (const Error& e) {
        fail_at(at, e.what());
      }
      for (const auto& cycle : cycles) {
        for (int p : cycle) degree = std::max<std::size_t>(degree, static_cast<std::size_t>(p));
      }
      gens.push_back(std::move(cycles));
      if (end == std::string_view::npos) break;
      begin = end + 1;
    }
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::kPermutations;
    spec.permutations.degree = degree;
    for (const auto& cycles : gens) {
      try {
        spec.permutations.generators.push_back(permutation_from_cycles(cycles, degree));
      } catch (const Error& e) {
        fail_at(at, e.what());
      }
    }
    return spec;
  }

  GroupSpec presentation(std::size_t at) {
    std::string_view body = bracketed();
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::kPresentation;
    try {
      spec.presentation = parse_presentation("Pres[" + std::string(body) + "]");
    } catch (const Error& e) {
      fail_at(at, e.what());
    }
    return spec;
  }

  GroupSpec factor() {
    skip_space();
    std::size_t at = pos_;
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != 'x') {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) fail("expected a group name");

    if (name == "Perm") return permutations(at);
    if (name == "Pres") return presentation(at);
    if (name == "E") return catalog(Family::kElementaryAbelian, argument_list(), at);
    if (name == "Meta") return catalog(Family::kMetacyclic, argument_list(), at);
    if (name == "Frob") return catalog(Family::kFrobenius, argument_list(), at);

    static const std::set<std::string> kIndexed = {"C", "D", "Q", "SD", "M", "S", "A", "G", "K"};
    if (!kIndexed.count(name)) fail_at(at, "unknown family '" + name + "'");
    long long n = integer();
    if (name == "K" && n == 14 && peek('(')) {
      return catalog(Family::kK14Family, argument_list(), at);
    }
    if (name == "C") return catalog(Family::kCyclic, {n}, at);
    if (name == "D") return catalog(Family::kDihedral, {n}, at);
    if (name == "Q") return catalog(Family::kGeneralizedQuaternion, {n}, at);
    if (name == "SD") return catalog(Family::kSemiDihedral, {n}, at);
    if (name == "M") return catalog(Family::kModular, {n}, at);
    if (name == "S") return catalog(Family::kSymmetric, {n}, at);
    if (name == "A") return catalog(Family::kAlternating, {n}, at);
    if (name == "G") {
      static constexpr Family kNamed[] = {Family::kG1, Family::kG2, Family::kG3, Family::kG4};
      if (n < 1 || n > 4) fail_at(at, "unknown family G" + std::to_string(n));
      return catalog(kNamed[n - 1], {}, at);
    }
    fail_at(at, "unknown family '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return Parser(text).parse(); }

std::string format_group_spec(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::kCatalog:
      return catalog_name(spec.catalog);
    case GroupSpec::Kind::kPermutations: {
      std::string out = "Perm[";
      for (std::size_t i = 0; i < spec.permutations.generators.size(); ++i) {
        if (i) out += "; ";
        out += cycle_string(spec.permutations.generators[i]);
      }
      return out + "]";
    }
    case GroupSpec::Kind::kPresentation:
      return format_presentation(spec.presentation);
    case GroupSpec::Kind::kProduct: {
      std::string out;
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        if (i) out += "x";
        out += format_group_spec(spec.factors[i]);
      }
      return out;
    }
  }
  return {};
}

GroupTable build_group(const GroupSpec& spec, const Limits& limits) {
  switch (spec.kind) {
    case GroupSpec::Kind::kCatalog:
      return catalog_group(spec.catalog, limits);
    case GroupSpec::Kind::kPermutations:
      return group_from_permutations(spec.permutations, limits);
    case GroupSpec::Kind::kPresentation:
      return group_from_presentation(spec.presentation, kDefaultMaxCosets, limits);
    case GroupSpec::Kind::kProduct: {
      bool all_cyclic = std::all_of(spec.factors.begin(), spec.factors.end(), [](const GroupSpec& f) {
        return f.kind == GroupSpec::Kind::kCatalog && f.catalog.family == Family::kCyclic;
      });
      if (all_cyclic) {
        CatalogSpec abelian{Family::kAbelianOfType, {}};
        for (const GroupSpec& f : spec.factors) abelian.params.push_back(f.catalog.params.at(0));
        return catalog_group(abelian, limits);
      }
      GroupTable result = build_group(spec.factors.front(), limits);
      for (std::size_t i = 1; i < spec.factors.size(); ++i) {
        result = direct_product(result, build_group(spec.factors[i], limits), limits);
      }
      return result.with_origin({"product", format_group_spec(spec)});
    }
  }
  throw Error(ErrorKind::kPrecondition, "unknown group spec kind");
}

}  // namespace fgraph::cli

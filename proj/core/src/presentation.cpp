#include "fgraph/presentation.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "fgraph/error.hpp"

namespace fgraph {

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

Word power_word(const Word& w, long long k) {
  Word base = k < 0 ? inverse_word(w) : w;
  if (k < 0) k = -k;
  Word out;
  for (long long i = 0; i < k; ++i) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(std::move(out));
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(std::move(out));
}

Word commutator_word(const Word& a, const Word& b) {
  return concat(concat(inverse_word(a), inverse_word(b)), concat(a, b));
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

namespace {

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  Presentation parse() {
    skip_space();
    expect_literal("Pres");
    expect('[');
    // generator list
    while (true) {
      skip_space();
      std::string name = identifier();
      if (name.empty()) fail("expected generator name");
      if (index_.count(name)) fail("duplicate generator '" + name + "'");
      index_[name] = static_cast<int>(names_.size()) + 1;
      names_.push_back(name);
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    skip_space();
    Presentation pres;
    if (peek() == '|') {
      ++pos_;
      skip_space();
      if (peek() != ']') {
        while (true) {
          Word lhs = product();
          skip_space();
          if (peek() == '=') {
            // chains like u^8 = v^2 = 1 give one relator per '='
            while (peek() == '=') {
              ++pos_;
              Word rhs = product();
              pres.relators.push_back(concat(lhs, inverse_word(rhs)));
              lhs = rhs;
              skip_space();
            }
          } else {
            pres.relators.push_back(lhs);
          }
          skip_space();
          if (peek() == ',') {
            ++pos_;
            continue;
          }
          break;
        }
      }
    }
    skip_space();
    expect(']');
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    pres.generator_count = names_.size();
    pres.generator_names = names_;
    std::erase_if(pres.relators, [](const Word& w) { return w.empty(); });
    return pres;
  }

 private:
  Word product() {
    Word w = power();
    while (true) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        w = concat(w, power());
      } else {
        return w;
      }
    }
  }

  Word power() {
    Word base = atom();
    skip_space();
    while (peek() == '^') {
      ++pos_;
      skip_space();
      if (std::isalpha(static_cast<unsigned char>(peek()))) {
        // conjugation x^y = y^-1 x y
        Word by = atom();
        base = concat(concat(inverse_word(by), base), by);
      } else {
        base = power_word(base, integer());
      }
      skip_space();
    }
    return base;
  }

  Word atom() {
    skip_space();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = product();
      skip_space();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word w = product();
      skip_space();
      bool any = false;
      while (peek() == ',') {
        ++pos_;
        w = commutator_word(w, product());
        any = true;
        skip_space();
      }
      if (!any) fail("commutator needs at least two entries");
      expect(']');
      return w;
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    std::string name = identifier();
    if (name.empty()) fail("expected generator, '(' or '['");
    auto it = index_.find(name);
    if (it == index_.end()) fail("unknown generator '" + name + "'");
    return {it->second};
  }

  long long integer() {
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000) fail("exponent too large");
      ++pos_;
    }
    return negative ? -value : value;
  }

  std::string identifier() {
    std::string out;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) return out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      out.push_back(text_[pos_++]);
    }
    return out;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_literal(std::string_view lit) {
    if (text_.substr(pos_, lit.size()) != lit) fail("expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kMalformedInput,
                "presentation parse error at position " + std::to_string(pos_) +
                    ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

std::string default_name(std::size_t i) {
  static const char* kNames = "abcdefghijklmnopqrstuvwxyz";
  if (i < 26) return std::string(1, kNames[i]);
  return "g" + std::to_string(i + 1);
}

std::vector<std::string> names_for(const Presentation& pres) {
  std::vector<std::string> names = pres.generator_names;
  for (std::size_t i = names.size(); i < pres.generator_count; ++i) {
    names.push_back(default_name(i));
  }
  return names;
}

int column_of(int letter) {
  return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
}

// HLT enumerator following the standard scan-and-fill / coincidence scheme
// with a union-find over coset numbers.
class Enumerator {
 public:
  Enumerator(std::size_t generator_count, std::size_t max_cosets)
      : cols_(2 * generator_count), max_cosets_(max_cosets) {
    new_coset();
  }

  bool capped() const { return capped_; }

  void scan_and_fill(int alpha, const Word& w) {
    if (w.empty()) return;
    int f = alpha, b = alpha;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, column_of(w[i])) >= 0) {
        f = at(f, column_of(w[i]));
        ++i;
      }
      if (i > j) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      while (j >= i && at(b, column_of(-w[j])) >= 0) {
        b = at(b, column_of(-w[j]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, column_of(w[i]), b);
        set(b, column_of(-w[i]), f);
        return;
      }
      if (!define(f, column_of(w[i]))) return;
    }
  }

  bool define(int alpha, int col) {
    if (static_cast<std::size_t>(parent_.size()) >= max_cosets_) {
      capped_ = true;
      return false;
    }
    int beta = new_coset();
    set(alpha, col, beta);
    set(beta, col ^ 1, alpha);
    return true;
  }

  bool live(int alpha) const { return parent_[alpha] == alpha; }
  int at(int alpha, int col) const { return table_[alpha * cols_ + col]; }
  std::size_t defined() const { return parent_.size(); }
  int cols() const { return static_cast<int>(cols_); }

 private:
  int new_coset() {
    int id = static_cast<int>(parent_.size());
    parent_.push_back(id);
    table_.resize(table_.size() + cols_, -1);
    return id;
  }

  void set(int alpha, int col, int value) { table_[alpha * cols_ + col] = value; }

  int rep(int k) {
    int root = k;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[k] != root) {
      int next = parent_[k];
      parent_[k] = root;
      k = next;
    }
    return root;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    int a = rep(k), b = rep(l);
    if (a == b) return;
    int lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(int alpha, int beta) {
    std::vector<int> queue;
    merge(alpha, beta, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int gamma = queue[q];
      for (std::size_t col = 0; col < cols_; ++col) {
        int delta = at(gamma, static_cast<int>(col));
        if (delta < 0) continue;
        int inv = static_cast<int>(col) ^ 1;
        if (at(delta, inv) == gamma) set(delta, inv, -1);
        int mu = rep(gamma), nu = rep(delta);
        if (at(mu, static_cast<int>(col)) >= 0) {
          merge(nu, at(mu, static_cast<int>(col)), queue);
        } else if (at(nu, inv) >= 0) {
          merge(mu, at(nu, inv), queue);
        } else {
          set(mu, static_cast<int>(col), nu);
          set(nu, inv, mu);
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t max_cosets_;
  bool capped_ = false;
  std::vector<int> table_;
  std::vector<int> parent_;
};

void check_letters(const Presentation& pres, const Word& w) {
  for (int letter : w) {
    if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > pres.generator_count) {
      throw Error(ErrorKind::kMalformedInput,
                  "word letter " + std::to_string(letter) + " out of range");
    }
  }
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  return PresentationParser(text).parse();
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long run = static_cast<long long>(j - i);
    if (!first) out << '*';
    first = false;
    int letter = w[i];
    std::size_t g = static_cast<std::size_t>(std::abs(letter)) - 1;
    out << (g < names.size() ? names[g] : default_name(g));
    long long exp = letter > 0 ? run : -run;
    if (exp != 1) out << '^' << exp;
    i = j;
  }
  return out.str();
}

std::string format_presentation(const Presentation& pres) {
  std::vector<std::string> names = names_for(pres);
  std::ostringstream out;
  out << "Pres[";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out << ',';
    out << names[i];
  }
  out << " | ";
  for (std::size_t r = 0; r < pres.relators.size(); ++r) {
    if (r) out << ", ";
    out << format_word(pres.relators[r], names);
  }
  out << ']';
  return out.str();
}

CosetTable coset_enumerate(const Presentation& pres,
                           const std::vector<Word>& subgroup_generators,
                           std::size_t max_cosets) {
  if (max_cosets < 1) {
    throw Error(ErrorKind::kInvalidParameter, "max_cosets must be at least 1");
  }
  for (const Word& w : pres.relators) check_letters(pres, w);
  for (const Word& w : subgroup_generators) check_letters(pres, w);

  Enumerator e(pres.generator_count, max_cosets);
  for (const Word& h : subgroup_generators) {
    e.scan_and_fill(0, free_reduce(h));
    if (e.capped()) break;
  }
  for (int alpha = 0; !e.capped() && static_cast<std::size_t>(alpha) < e.defined(); ++alpha) {
    for (const Word& w : pres.relators) {
      if (!e.live(alpha) || e.capped()) break;
      e.scan_and_fill(alpha, w);
    }
    if (!e.live(alpha) || e.capped()) continue;
    for (int col = 0; col < e.cols(); ++col) {
      if (e.at(alpha, col) < 0 && !e.define(alpha, col)) break;
    }
  }

  CosetTable result;
  result.generator_count = pres.generator_count;
  result.defined_count = e.defined();
  if (e.capped()) {
    result.status = EnumerationStatus::kCapped;
    std::size_t live = 0;
    for (std::size_t a = 0; a < e.defined(); ++a) live += e.live(static_cast<int>(a));
    result.live_count = live;
    return result;
  }

  // Renumber live cosets in breadth-first order from coset 0.
  std::vector<int> renumber(e.defined(), -1);
  std::vector<int> order{0};
  renumber[0] = 0;
  for (std::size_t q = 0; q < order.size(); ++q) {
    for (int col = 0; col < e.cols(); ++col) {
      int target = e.at(order[q], col);
      if (target >= 0 && renumber[target] < 0) {
        renumber[target] = static_cast<int>(order.size());
        order.push_back(target);
      }
    }
  }
  result.rows.assign(order.size(), std::vector<int>(e.cols(), -1));
  for (std::size_t c = 0; c < order.size(); ++c) {
    for (int col = 0; col < e.cols(); ++col) {
      int target = e.at(order[c], col);
      if (target < 0 || !e.live(target)) {
        throw Error(ErrorKind::kCertificate, "coset table incomplete after enumeration");
      }
      result.rows[c][col] = renumber[target];
    }
  }
  result.live_count = order.size();
  result.status = EnumerationStatus::kComplete;
  return result;
}

GroupTable group_from_presentation(const Presentation& pres, std::size_t max_cosets,
                                   const Limits& limits) {
  CosetTable ct = coset_enumerate(pres, {}, max_cosets);
  if (ct.status != EnumerationStatus::kComplete) {
    throw Error(ErrorKind::kCapExceeded,
                "capped: coset enumeration of " + format_presentation(pres) +
                    " exceeded " + std::to_string(max_cosets) + " cosets");
  }
  const std::size_t n = ct.live_count;
  if (n > limits.table_cap) {
    throw Error(ErrorKind::kCapExceeded, "presented group of order " + std::to_string(n) +
                                             " exceeds table cap");
  }
  const int cols = static_cast<int>(2 * pres.generator_count);
  // BFS tree: element d = parent[d] * letter(via[d]).
  std::vector<int> parent(n, -1), via(n, -1);
  std::vector<int> queue{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int col = 0; col < cols; ++col) {
      int t = ct.rows[queue[q]][col];
      if (!seen[t]) {
        seen[t] = 1;
        parent[t] = queue[q];
        via[t] = col;
        queue.push_back(t);
      }
    }
  }
  std::vector<Elem> mul(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    mul[c * n] = static_cast<Elem>(c);
    for (int d : queue) {
      if (d == 0) continue;
      mul[c * n + d] = static_cast<Elem>(ct.rows[mul[c * n + parent[d]]][via[d]]);
    }
  }
  std::vector<std::string> names = names_for(pres);
  std::vector<std::string> labels(n);
  std::vector<Word> words(n);
  for (int d : queue) {
    if (d == 0) continue;
    int col = via[d];
    int letter = (col % 2 == 0) ? col / 2 + 1 : -(col / 2 + 1);
    words[d] = words[parent[d]];
    words[d].push_back(letter);
  }
  for (std::size_t c = 0; c < n; ++c) labels[c] = format_word(words[c], names);
  std::vector<Elem> gens;
  for (std::size_t g = 0; g < pres.generator_count; ++g) {
    gens.push_back(static_cast<Elem>(ct.rows[0][2 * g]));
  }
  Limits relaxed = limits;
  return GroupTable::from_cayley(std::move(mul), n, std::move(labels),
                                 {"presentation", format_presentation(pres)},
                                 std::move(gens), relaxed);
}

Elem evaluate_word(const GroupTable& group, const Word& w,
                   const std::vector<Elem>& images) {
  Elem x = GroupTable::kIdentity;
  for (int letter : w) {
    Elem g = images[static_cast<std::size_t>(std::abs(letter)) - 1];
    x = group.mul(x, letter > 0 ? g : group.inv(g));
  }
  return x;
}

PresentationMatch satisfies_presentation(const GroupTable& group,
                                         const Presentation& pres,
                                         std::size_t max_cosets) {
  PresentationMatch match;
  CosetTable ct = coset_enumerate(pres, {}, max_cosets);
  if (ct.status != EnumerationStatus::kComplete) {
    throw Error(ErrorKind::kCapExceeded,
                "capped: could not establish the order of " + format_presentation(pres));
  }
  match.presented_order = ct.live_count;
  if (ct.live_count != group.order()) return match;

  // Exact generator orders in the presented group; an isomorphism must
  // preserve them.
  const std::size_t k = pres.generator_count;
  std::vector<std::size_t> target_order(k, 1);
  for (std::size_t g = 0; g < k; ++g) {
    int c = ct.rows[0][2 * g];
    std::size_t ord = 1;
    while (c != 0) {
      c = ct.rows[c][2 * g];
      ++ord;
    }
    target_order[g] = ord;
  }
  std::vector<std::vector<Elem>> candidates(k);
  for (Elem x = 0; x < group.order(); ++x) {
    std::size_t ord = group.element_order(x);
    for (std::size_t g = 0; g < k; ++g) {
      if (ord == target_order[g]) candidates[g].push_back(x);
    }
  }
  // relators become checkable once their highest generator is assigned
  std::vector<std::vector<const Word*>> checks(k);
  for (const Word& w : pres.relators) {
    std::size_t top = 0;
    for (int letter : w) top = std::max(top, static_cast<std::size_t>(std::abs(letter)));
    if (top > 0) checks[top - 1].push_back(&w);
  }
  std::vector<Elem> images(k, GroupTable::kIdentity);
  auto search = [&](auto&& self, std::size_t g) -> bool {
    if (g == k) {
      return generated_set(group, images).count() == group.order();
    }
    for (Elem x : candidates[g]) {
      images[g] = x;
      bool ok = true;
      for (const Word* w : checks[g]) {
        if (evaluate_word(group, *w, images) != GroupTable::kIdentity) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, g + 1)) return true;
    }
    images[g] = GroupTable::kIdentity;
    return false;
  };
  if (k == 0) {
    match.satisfied = group.order() == 1;
    return match;
  }
  if (search(search, 0)) {
    match.satisfied = true;
    match.witness = images;
  }
  return match;
}

}  // namespace fgraph

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgraph/group_table.hpp"

namespace fgraph {

// Letters are signed, 1-based generator indices: +i is generator i, -i its
// inverse.
using Word = std::vector<int>;

struct Presentation {
  std::size_t generator_count = 0;
  std::vector<Word> relators;
  std::vector<std::string> generator_names;  // optional display names
};

Word inverse_word(const Word& w);
Word power_word(const Word& w, long long k);
Word concat(const Word& a, const Word& b);
// [a, b] = a^-1 b^-1 a b
Word commutator_word(const Word& a, const Word& b);
Word free_reduce(Word w);

// Parses "Pres[a,b | a^4, b^2, b*a*b^-1*a]". Relations of the form
// "lhs = rhs" become lhs*rhs^-1; "[x,y]" and "[x,y,z]" are left-normed
// commutators; parentheses group factors for powers.
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& pres);
std::string format_word(const Word& w, const std::vector<std::string>& names);

enum class EnumerationStatus { kComplete, kCapped };

struct CosetTable {
  std::size_t generator_count = 0;
  // rows[c][2*i] = c * g_i, rows[c][2*i+1] = c * g_i^-1 (0-based generators),
  // -1 when undefined. Compacted to live cosets once complete.
  std::vector<std::vector<int>> rows;
  std::size_t live_count = 0;
  std::size_t defined_count = 0;  // total cosets ever defined
  EnumerationStatus status = EnumerationStatus::kCapped;
};

inline constexpr std::size_t kDefaultMaxCosets = 100000;

// HLT coset enumeration of the subgroup generated by `subgroup_generators`.
// A capped result is returned, not thrown.
CosetTable coset_enumerate(const Presentation& pres,
                           const std::vector<Word>& subgroup_generators,
                           std::size_t max_cosets = kDefaultMaxCosets);

// Regular representation on the cosets of the trivial subgroup. The table's
// generators() are the images of the presentation generators, in order.
// Throws Error(kCapExceeded) if the enumeration does not complete.
GroupTable group_from_presentation(const Presentation& pres,
                                   std::size_t max_cosets = kDefaultMaxCosets,
                                   const Limits& limits = {});

// Image of a word under an assignment of generators.
Elem evaluate_word(const GroupTable& group, const Word& w,
                   const std::vector<Elem>& images);

struct PresentationMatch {
  bool satisfied = false;
  std::size_t presented_order = 0;
  std::vector<Elem> witness;  // generator images when satisfied
};

// True iff the presented group has order |G| and some generating tuple of G
// satisfies every relator. Throws Error(kCapExceeded) when the presented
// order cannot be established.
PresentationMatch satisfies_presentation(const GroupTable& group,
                                         const Presentation& pres,
                                         std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace fgraph

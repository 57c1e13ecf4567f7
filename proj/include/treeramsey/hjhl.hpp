#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treeramsey/embedding.hpp"
#include "treeramsey/framework.hpp"

namespace treeramsey {

/// A letter of B = A^arity (a number below k^arity, first coordinate most
/// significant) or a parameter 1..m. Letters sort before parameters.
struct Symbol {
  enum Kind : std::uint8_t { Letter, Param };
  Kind kind = Letter;
  std::uint32_t value = 0;

  static Symbol letter(std::uint32_t v) { return {Letter, v}; }
  static Symbol param(std::uint32_t j) { return {Param, j}; }
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

struct ParameterWord {
  unsigned k = 2;      ///< |A|
  unsigned arity = 1;  ///< letters range over A^arity
  unsigned m = 0;
  std::vector<Symbol> letters;

  unsigned n() const { return static_cast<unsigned>(letters.size()); }
  unsigned alphabet_size() const;
  friend auto operator<=>(const ParameterWord&, const ParameterWord&) = default;
};

class InvalidWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws InvalidWord unless every parameter occurs and parameters first occur in order 1, 2, ..., m.
void validate(const ParameterWord& w);
bool is_valid(const ParameterWord& w);

json word_to_json(const ParameterWord& w);
ParameterWord word_from_json(const json& j);
std::string word_label(const ParameterWord& w);

/// A word over an alphabet of size s: position i holds a letter below s.
using Word = std::vector<std::uint32_t>;

/// Every word of length `len` over `s` letters, in lexicographic order.
std::vector<Word> all_words(unsigned s, unsigned len);

/// All valid words of length n with m parameters over an alphabet of size s, in canonical order.
std::vector<ParameterWord> valid_words(unsigned k, unsigned arity, unsigned n, unsigned m);

/// g_w(x) = x' o w on leaves, for x in B^m.
Word apply_word(const ParameterWord& w, const Word& x);

/// The map B^{<=m} -> B^{<=n} on the regular trees T^{|B|,m+1} -> T^{|B|,n+1}:
/// leaves by g_w, an inner node at length l to the length i1 prefix of the images of its leaves.
TreeMap induced_embedding(const ParameterWord& w);

struct MeetLevel {
  unsigned i1 = 0;
  Word v1;
};
/// Meets of images of leaf pairs meeting at v0 (length i0): i1 = max{i : w([i]) meets [m] only in [i0]}.
MeetLevel meet_level(const ParameterWord& w, unsigned i0, const Word& v0);

/// w_i = pi_i o w over A, for a word over A^arity.
std::vector<ParameterWord> split_word(const ParameterWord& w);

/// Leaf maps B^m -> B^n, each given as the image of every x in all_words order.
using LeafMap = std::vector<Word>;

LeafMap leaf_map_of(const ParameterWord& w);
/// ht(f_i(x) ^ f_i(y)) is the same for every member and every leaf pair.
bool is_strong_sequence(const std::vector<LeafMap>& seq, unsigned s, unsigned m);

enum class HJVariant { A, B };
enum class HJEngine { Backtrack, Exhaustive };

struct HJProblem {
  ColoringProblem problem;
  std::vector<Word> points;                ///< sorted by length, then lexicographically
  std::vector<ParameterWord> line_words;   ///< one per line
};

/// Points B^n (variant A) or every word of length <= n (variant B); one line per valid word.
HJProblem hj_problem(unsigned k, unsigned arity, unsigned m, unsigned d, unsigned n, HJVariant variant);

struct HJResult {
  Status status = Status::Undecided;
  unsigned n = 0;
  std::vector<json> refutations;  ///< one coloring certificate per refuted n, increasing
  unsigned largest_refuted = 0;
  bool any_refuted = false;
  json to_json() const;
};

struct HJOptions {
  HJEngine engine = HJEngine::Backtrack;
  ScaleLimits limits;
  AdversaryOptions adversary;
  unsigned max_n = 8;
};

/// Least n >= m such that every d-coloring has a monochromatic line.
HJResult hj_search(unsigned k, unsigned arity, unsigned m, unsigned d, HJVariant variant, const HJOptions& opts = {});

/// The first valid word (canonical order) whose line is monochromatic under `coloring` of hj.points.
std::optional<ParameterWord> hj_witness(const HJProblem& hj, const Coloring& coloring);

enum class HLVariant { HL1, HL2 };

struct HLProblem {
  ColoringProblem problem;
  std::vector<std::vector<NodeId>> points;  ///< t-tuples of nodes of T^{k,n}
  std::vector<std::vector<std::vector<NodeId>>> sequences;  ///< per line, the images of g_1..g_t
  std::map<std::vector<NodeId>, std::uint32_t> index;
};

/// T^m = T^{k,m} (height m). HL1 colors t-tuples of leaves of T^n, lines are products of
/// leaf images of strong sequences of strong leaf preserving T^m -> T^n. HL2 colors t-tuples
/// of equal-height nodes, lines run over equal-height tuples of T^m under strong sequences of strong embeddings.
HLProblem hl_problem(unsigned k, unsigned t, unsigned m, unsigned d, unsigned n, HLVariant variant);

Verdict hl_check(unsigned k, unsigned t, unsigned m, unsigned d, unsigned n, HLVariant variant,
                 const CheckOptions& opts = {});

/// The strong sequence g_{w_1}, ..., g_{w_t} of T^{k,m'+1} -> T^{k,n'+1} for a word over A^t.
std::vector<TreeMap> translate_hj_to_hl(const ParameterWord& w, unsigned t);

/// The HJ coloring of (A^t)^{n'} read through the projections from a coloring of t-tuples of leaves.
Coloring pull_back_coloring(const HJProblem& hj, const HLProblem& hl, unsigned k, unsigned t, const Coloring& c);

/// True when the product of leaf images of seq is monochromatic under c (HL1 points of hl).
bool hl_monochromatic(const HLProblem& hl, const std::vector<TreeMap>& seq, const Coloring& c);

}  // namespace treeramsey

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spancalc/perm.hpp"

namespace spancalc {

// One diagram strand generator: a raising (creation) or lowering
// (annihilation) operator of a given color.
struct Letter {
  bool raise = true;
  int color = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A composite in display order: index 0 is the leftmost factor, which acts
// LAST (composition is read right to left).
using Word = std::vector<Letter>;

inline Letter raise_letter(int color = 0) { return {true, color}; }
inline Letter lower_letter(int color = 0) { return {false, color}; }

// Reverse the word and flip every letter (adjoint of the composite).
Word dagger_word(const Word& w);

// "+c" for raising, "-c" for lowering, space separated; "e" for the empty
// word.
std::string word_str(const Word& w);

// Net color counts added by the word (target profile - source profile).
std::vector<int> word_degree(const Word& w, int colors);

// Relative totals t_0..t_k along the word, t_k = 0 at the source.
std::vector<int> word_offsets(const Word& w);
int max_positive_offset(const Word& w);

// Profiles q_0..q_k along the word for the given source profile, or nullopt
// if some intermediate count would go negative.
std::optional<std::vector<std::vector<int>>> profiles_along(
    const Word& w, const std::vector<int>& source_profile);

// Classification tables of a flat word span.  The apex object over a source
// class is a junction tuple (f_1..f_{k-1}), f_j in Aut(q_j); the letter
// automorphism groups Aut(x_0) x ... x Aut(x_{k-1}) act and the orbits are
// the apex components.  Tables record, for every tuple, its component and a
// connecting group element (one permutation per letter) with
// tuple = connect . rep.
struct FlatSpanData {
  struct ClassData {
    bool active = false;
    std::vector<std::vector<int>> q;  // profiles q_0..q_k
    std::vector<std::vector<int>> x;  // letter apex profiles x_0..x_{k-1}
    std::map<std::vector<int>, int> comp_of;
    std::map<std::vector<int>, std::vector<Perm>> connect;
  };
  struct CompData {
    int source_class = -1;
    std::vector<int> rep;  // junction tuple as element indices
  };

  Word word;
  int max_card = 0;
  int colors = 1;
  std::vector<ClassData> classes;  // indexed by source component
  std::vector<CompData> comps;     // indexed by apex component
};

// Carrier layout for colored profiles: points of color 0 first, then color 1,
// and so on.
int block_offset(const std::vector<int>& profile, int color);

// Embed Aut(q) into Aut(q + e_c): the new point of color c goes at the end of
// its color block and is fixed; later blocks shift by one.
Perm color_extend(const Perm& p, const std::vector<int>& q, int color);

// Leg embeddings of a single-letter span with apex profile x: a raising
// letter adds a point on the left boundary, a lowering letter on the right.
Perm letter_left_embed(const Letter& l, const std::vector<int>& x,
                       const Perm& a);
Perm letter_right_embed(const Letter& l, const std::vector<int>& x,
                        const Perm& a);

}  // namespace spancalc

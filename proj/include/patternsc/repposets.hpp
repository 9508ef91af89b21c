#pragma once

// F_p-labeled posets, highest cover sets, and the bijection between
// supercharacter indices and P-representative labeled posets.

#include <cstdint>
#include <optional>
#include <vector>

#include "patternsc/classify.hpp"
#include "patternsc/poset.hpp"
#include "patternsc/uptri.hpp"

namespace patternsc {

// A poset with a nonzero label on each cover (stored as a dual matrix over [[n]]).
struct LabeledPoset {
  Poset poset;
  FqUpperMatrix labels;

  friend bool operator==(const LabeledPoset&, const LabeledPoset&) = default;
};

// Throws std::invalid_argument unless labels are nonzero exactly on the covers.
LabeledPoset make_labeled_poset(const Poset& poset, const FqUpperMatrix& labels);

// No two covers share a first coordinate or a second coordinate.
bool is_independent(const PositionSet& cover_subset);

// Sorted-descending cover lengths.
std::vector<int> length_vector(const PositionSet& cover_subset);

// Greedy highest cover set. Among longest remaining covers the one ranked
// first by tie_order is taken (row-major order when tie_order is empty).
PositionSet highest_cover_set(const Poset& poset, const std::vector<Position>& tie_order = {});

// Exhaustive maximizer of the length vector over independent cover subsets.
PositionSet highest_cover_set_bruteforce(const Poset& poset);

bool decomposes_into_chains(const Poset& poset);
// Every connected component of the comparability graph is totally ordered.
bool decomposes_into_chains_direct(const Poset& poset);

bool is_p_representative(const Poset& ambient, const Poset& q);

LabeledPoset index_to_poset(const SupercharacterIndex& idx);
// Throws std::invalid_argument if q is not representative for `ambient`.
SupercharacterIndex poset_to_index(const Poset& ambient, const LabeledPoset& q);

std::vector<LabeledPoset> enumerate_representative(const Poset& ambient, int p, int jobs = 1);
// Direct search over subposets of `ambient` and their labelings. Works for any
// poset, normal or not.
std::vector<LabeledPoset> enumerate_representative_search(const Poset& ambient, int p);
std::uint64_t count_representative_search(const Poset& ambient, int p);

bool degree_one_test(const Poset& ambient, const LabeledPoset& q);

// Irreducibility read off the highest cover set.
bool is_irreducible_poset(const Poset& ambient, const LabeledPoset& q);

}  // namespace patternsc

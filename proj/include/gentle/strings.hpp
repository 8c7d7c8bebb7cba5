#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentle/bound_quiver.hpp"

namespace gentle {

struct SignedLetter {
  int arrow = -1;
  bool inv = false;
  bool operator==(const SignedLetter&) const = default;
};

inline SignedLetter flip(SignedLetter l) { return {l.arrow, !l.inv}; }

enum class StringErrorKind {
  UnknownArrow,
  UnknownVertex,
  BadLiteral,
  NotComposable,
  ReducedPairViolation,
  RelationViolation,
};

struct StringError : std::runtime_error {
  StringErrorKind kind;
  int position;  // index of the offending letter in traversal order, -1 if n/a
  StringError(StringErrorKind k, int pos, const std::string& msg)
      : std::runtime_error(msg), kind(k), position(pos) {}
};

struct InfiniteTypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Letters are stored in traversal order: letters[0] is traversed first and is
// the rightmost letter of the word read as composition. A lazy walk has no
// letters and sits at `base`.
struct StringWalk {
  std::vector<SignedLetter> letters;
  int base = -1;
  int length() const { return static_cast<int>(letters.size()); }
  bool lazy() const { return letters.empty(); }
  bool operator==(const StringWalk&) const = default;
};

struct Interval {
  int lo = 0;
  int hi = 0;  // letters [lo, hi); lo == hi denotes the lazy slice at that slot
  int length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

int source_of(const BoundQuiver& q, SignedLetter l);
int target_of(const BoundQuiver& q, SignedLetter l);

// Composability, reduced-pair (A1) and relation (A2) conditions for `cur`
// traversed immediately after `prev`.
bool pair_ok(const BoundQuiver& q, SignedLetter prev, SignedLetter cur);

StringWalk make_lazy(const BoundQuiver& q, int vertex);
// Validates and returns the canonical representative.
StringWalk make_string(const BoundQuiver& q, const std::vector<SignedLetter>& letters);
// Validates without canonicalizing; throws StringError on failure.
void check_word(const BoundQuiver& q, const std::vector<SignedLetter>& letters);
bool word_ok(const BoundQuiver& q, const std::vector<SignedLetter>& letters);

// Literals list letters leftmost-first, i.e. in the reverse of traversal
// order; "^-" marks formal inverses and "e(v)" is the lazy walk at v.
StringWalk parse_string_literal(const BoundQuiver& q, const std::string& text);
std::string to_literal(const BoundQuiver& q, const StringWalk& w);

StringWalk inverse_walk(const StringWalk& w, const BoundQuiver& q);
StringWalk canonical(const BoundQuiver& q, const StringWalk& w);
// Literal of the canonical representative; equal keys mean isomorphic modules.
std::string walk_key(const BoundQuiver& q, const StringWalk& w);

int start_vertex(const BoundQuiver& q, const StringWalk& w);
int end_vertex(const BoundQuiver& q, const StringWalk& w);
int slot_vertex(const BoundQuiver& q, const StringWalk& w, int slot);

std::vector<int> dimension_vector(const BoundQuiver& q, const StringWalk& w);

std::vector<SignedLetter> slice(const StringWalk& w, Interval iv);
StringWalk substring(const BoundQuiver& q, const StringWalk& w, Interval iv);

bool can_append(const BoundQuiver& q, const StringWalk& w, SignedLetter l);
bool can_prepend(const BoundQuiver& q, const StringWalk& w, SignedLetter l);
std::vector<SignedLetter> valid_appends(const BoundQuiver& q, const StringWalk& w);
std::vector<SignedLetter> valid_prepends(const BoundQuiver& q, const StringWalk& w);

// All strings of length <= max_len in canonical form, sorted by length then
// literal. max_len == 0 means no bound and requires a band-free algebra.
std::vector<StringWalk> enumerate_strings(const BoundQuiver& q, int max_len);

// Bands that do not revisit a signed letter, in canonical cyclic form (the
// rotation/orientation with the least letter sequence). Nonempty exactly when
// the algebra has infinite representation type.
struct Band {
  StringWalk walk;
};
std::vector<Band> detect_bands(const BoundQuiver& q);

}  // namespace gentle
